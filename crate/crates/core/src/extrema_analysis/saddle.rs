use serde::{Deserialize, Serialize};

use crate::critical_line::{derivatives_of, strip_partials, DifferentiationScheme, StripFunction, Xi};
use crate::error::{Result, XiError};
use crate::special_functions::{ComplexPoint, EvalConfig};

/// Hessian stencil step in both λ and t.
pub const HESSIAN_STEP: f64 = 1e-3;

/// Step sizes h and h/2, combined by one Richardson step.
pub const HESSIAN_LEVELS: usize = 2;

/// Largest |Ξ′| / max(|Ξ|, |Ξ″|) accepted at a claimed extremum.
pub const EXTREMUM_TOLERANCE: f64 = 1e-6;

/// Second partials of u = Re f(σ + it) at (½, t*), divided by
/// `exp(reference_log_scale)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SaddleReport {
    pub t_star: f64,
    pub reference_log_scale: f64,
    /// u_tt·u_σσ − u_σt²
    pub discriminant: f64,
    pub mixed_partial: f64,
    pub sigma_curvature: f64,
    pub t_curvature: f64,
    /// Ξ″(t*) from the line-only Richardson scheme, same scale.
    pub line_second_deriv: f64,
    /// a(t*) on the same scale.
    pub a: f64,
}

impl SaddleReport {
    /// |u_σσ + u_tt| / max(|u_σσ|, |u_tt|)
    pub fn laplace_residual(&self) -> f64 {
        (self.sigma_curvature + self.t_curvature).abs() / self.sigma_curvature.abs().max(self.t_curvature.abs())
    }
}

pub fn saddle_test_of<F: StripFunction + ?Sized>(
    f: &F,
    t_star: f64,
    scheme: &DifferentiationScheme,
) -> Result<SaddleReport> {
    let line = derivatives_of(f, t_star, scheme)?;
    let relative_slope = line.scaled_d1.abs() / line.scaled_value.abs().max(line.scaled_d2.abs());
    if !(relative_slope <= EXTREMUM_TOLERANCE) {
        return Err(XiError::NotAnExtremum {
            t: t_star,
            relative_slope,
        });
    }
    let p = strip_partials(f, ComplexPoint::on_critical_line(t_star), HESSIAN_STEP, HESSIAN_LEVELS)?;
    let (u_ss, u_tt, u_st) = (p.d_lambda_lambda.re, p.d_t_t.re, p.d_lambda_t.re);
    Ok(SaddleReport {
        t_star,
        reference_log_scale: p.reference_log_scale,
        discriminant: u_tt * u_ss - u_st * u_st,
        mixed_partial: u_st,
        sigma_curvature: u_ss,
        t_curvature: u_tt,
        line_second_deriv: line.scaled_d2,
        a: -line.scaled_d2 / 2.0,
    })
}

/// Hessian of Re ξ at ½ + it*.
pub fn saddle_test(t_star: f64, scheme: &DifferentiationScheme, cfg: &EvalConfig) -> Result<SaddleReport> {
    saddle_test_of(&Xi::new(*cfg), t_star, scheme)
}
