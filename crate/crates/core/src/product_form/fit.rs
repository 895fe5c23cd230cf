use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::deleted::{deleted_product_at, LimitPolicy};
use crate::error::{Result, XiError};
use crate::special_functions::{xi_envelope_log, ComplexPoint, EvalConfig, LogScaledComplex};
use crate::zero_catalog::ZeroCatalog;

/// λ grid for the quadratic fit: `points` values evenly spaced on [−half_width, half_width].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FitGrid {
    pub half_width: f64,
    pub points: usize,
}

impl Default for FitGrid {
    fn default() -> Self {
        Self {
            half_width: 0.4,
            points: 41,
        }
    }
}

impl FitGrid {
    pub fn lambdas(&self) -> Vec<f64> {
        let n = self.points.max(2);
        (0..n)
            .map(|i| -self.half_width + 2.0 * self.half_width * i as f64 / (n - 1) as f64)
            .collect()
    }
}

/// ξ_(j)(½ + λ + it) ≈ α_j (λ² − t² + γ_j + 2itλ) near t = t_j.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadraticFit {
    pub j: usize,
    pub t_j: f64,
    pub alpha: f64,
    pub gamma: f64,
    /// max |ξ_(j) − model| / max |ξ_(j)| over the fit grid.
    pub residual: f64,
    /// Ξ*_j(t_j) = ξ_(j)(½ + it_j).
    pub xi_star_at_zero: f64,
    /// log-magnitude the fit was carried out at; α and Ξ* divided by its
    /// exponential are of order one.
    pub reference_log_scale: f64,
}

impl QuadraticFit {
    /// Fit with externally supplied constants (no residual information).
    pub fn from_constants(j: usize, t_j: f64, alpha: f64, gamma: f64) -> Self {
        Self {
            j,
            t_j,
            alpha,
            gamma,
            residual: f64::NAN,
            xi_star_at_zero: alpha * (gamma - t_j * t_j),
            reference_log_scale: alpha.abs().ln(),
        }
    }

    /// α (λ² − t² + γ + 2itλ)
    pub fn model(&self, s: ComplexPoint) -> Complex64 {
        let (l, t) = (s.lambda(), s.t);
        self.alpha * Complex64::new(l * l - t * t + self.gamma, 2.0 * t * l)
    }

    /// The model in log-scaled form, exact for |α| far below the f64 range.
    pub fn model_scaled(&self, s: ComplexPoint) -> LogScaledComplex {
        let unit = self.alpha / self.reference_log_scale.exp();
        let (l, t) = (s.lambda(), s.t);
        LogScaledComplex::rescaled(
            unit * Complex64::new(l * l - t * t + self.gamma, 2.0 * t * l),
            self.reference_log_scale,
        )
    }
}

/// Fit α_j from the slope of Im ξ_(j) against 2t_jλ and γ_j from ξ_(j) at λ = 0.
pub fn fit_alpha_gamma(j: usize, catalog: &ZeroCatalog, cfg: &EvalConfig) -> Result<QuadraticFit> {
    fit_alpha_gamma_on(j, catalog, &FitGrid::default(), cfg)
}

pub fn fit_alpha_gamma_on(j: usize, catalog: &ZeroCatalog, grid: &FitGrid, cfg: &EvalConfig) -> Result<QuadraticFit> {
    let t_j = catalog.t(j)?;
    let reference = xi_envelope_log(ComplexPoint::on_critical_line(t_j))?;
    let lambdas = grid.lambdas();
    let values = lambdas
        .par_iter()
        .map(|&l| {
            let s = ComplexPoint::from_lambda(l, t_j);
            Ok(deleted_product_at(t_j, j, s, LimitPolicy::Auto, cfg)?.descaled(reference))
        })
        .collect::<Result<Vec<Complex64>>>()?;

    let (mut sxy, mut sxx) = (0.0, 0.0);
    let mut max_x: f64 = 0.0;
    for (&l, y) in lambdas.iter().zip(&values) {
        let x = 2.0 * t_j * l;
        sxy += x * y.im;
        sxx += x * x;
        max_x = max_x.max(x.abs());
    }
    let max_y = values.iter().fold(0.0_f64, |m, y| m.max(y.norm()));
    let slope = sxy / sxx;
    let threshold = 1e3 * f64::EPSILON * max_y / max_x;
    if !(slope.abs() >= threshold) {
        return Err(XiError::FitDegenerate { j, slope, threshold });
    }

    let center =
        deleted_product_at(t_j, j, ComplexPoint::on_critical_line(t_j), LimitPolicy::Auto, cfg)?.descaled(reference);
    let gamma = t_j * t_j + center.re / slope;

    let misfit = lambdas
        .iter()
        .zip(&values)
        .map(|(&l, y)| (y - slope * Complex64::new(l * l - t_j * t_j + gamma, 2.0 * t_j * l)).norm())
        .fold(0.0, f64::max);

    let scale = reference.exp();
    Ok(QuadraticFit {
        j,
        t_j,
        alpha: slope * scale,
        gamma,
        residual: misfit / max_y,
        xi_star_at_zero: center.re * scale,
        reference_log_scale: reference,
    })
}
