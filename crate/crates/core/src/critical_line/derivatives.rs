use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{restrict_to_line, StripFunction, Xi};
use crate::error::{Result, XiError};
use crate::special_functions::{EvalConfig, LogScaledComplex};

/// Largest disagreement between the last two Richardson levels, relative to
/// the local derivative scale.
pub const RICHARDSON_TOLERANCE: f64 = 1e-6;

/// Disagreements below this multiple of the propagated rounding error are
/// accepted: the tableau cannot resolve them at double precision.
const NOISE_MARGIN: f64 = 8.0;

/// Central differences with Richardson extrapolation over halved steps.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DifferentiationScheme {
    pub base_step: f64,
    pub richardson_levels: usize,
}

impl Default for DifferentiationScheme {
    fn default() -> Self {
        Self {
            base_step: 1e-3,
            richardson_levels: 3,
        }
    }
}

impl DifferentiationScheme {
    pub fn validate(&self) -> Result<()> {
        if !(self.base_step > 0.0 && self.base_step.is_finite()) {
            return Err(XiError::InvalidConfig(format!(
                "base_step must be positive, got {}",
                self.base_step
            )));
        }
        if !(1..=6).contains(&self.richardson_levels) {
            return Err(XiError::InvalidConfig(format!(
                "richardson_levels must lie in [1, 6], got {}",
                self.richardson_levels
            )));
        }
        Ok(())
    }

    /// Coarsest step used at height t.
    pub fn step_at(&self, t: f64) -> f64 {
        self.base_step * (t.abs() / 100.0).max(1.0)
    }
}

/// Ξ and its first two derivatives at one point.
///
/// `d1`, `d2` are absolute; `scaled_d1`, `scaled_d2` are the same derivatives
/// divided by `exp(reference_log_scale)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct XiSample {
    pub t: f64,
    pub xi_value: LogScaledComplex,
    pub d1: f64,
    pub d2: f64,
    pub a: f64,
    pub b: f64,
    pub reference_log_scale: f64,
    pub scaled_value: f64,
    pub scaled_d1: f64,
    pub scaled_d2: f64,
    pub step: f64,
    /// Last Richardson correction of each derivative, relative to its scale.
    pub d1_error: f64,
    pub d2_error: f64,
    /// Rounding floor of each derivative on the same relative scale.
    pub d1_noise: f64,
    pub d2_noise: f64,
}

fn scaled_value<F: StripFunction + ?Sized>(f: &F, t: f64, reference: f64) -> Result<f64> {
    Ok(restrict_to_line(f, t)?.descaled(reference).re)
}

/// Plain (unextrapolated) central differences of f(½+it)/exp(reference) with step h.
pub fn central_differences<F: StripFunction + ?Sized>(f: &F, t: f64, h: f64, reference: f64) -> Result<(f64, f64)> {
    let plus = scaled_value(f, t + h, reference)?;
    let minus = scaled_value(f, t - h, reference)?;
    let center = scaled_value(f, t, reference)?;
    Ok(((plus - minus) / (2.0 * h), (plus - 2.0 * center + minus) / (h * h)))
}

/// Best extrapolated value and its distance to the previous diagonal entry.
fn richardson(column: &[f64]) -> (f64, f64) {
    let mut row = column.to_vec();
    let mut diagonal = vec![row[0]];
    for m in 1..column.len() {
        let factor = 4f64.powi(m as i32) - 1.0;
        row = (1..row.len())
            .map(|i| row[i] + (row[i] - row[i - 1]) / factor)
            .collect();
        diagonal.push(row[0]);
    }
    let best = *diagonal.last().unwrap();
    let change = match diagonal.len() {
        1 => 0.0,
        n => (best - diagonal[n - 2]).abs(),
    };
    (best, change)
}

/// Ξ-style derivatives of any strip function at ½ + it.
pub fn derivatives_of<F: StripFunction + ?Sized>(f: &F, t: f64, scheme: &DifferentiationScheme) -> Result<XiSample> {
    scheme.validate()?;
    let reference = f.reference_log_scale(t)?;
    let h0 = scheme.step_at(t);
    let center = restrict_to_line(f, t)?;
    let g0 = center.descaled(reference).re;

    let mut first = Vec::with_capacity(scheme.richardson_levels);
    let mut second = Vec::with_capacity(scheme.richardson_levels);
    let mut largest = g0.abs();
    for i in 0..scheme.richardson_levels {
        let h = h0 / 2f64.powi(i as i32);
        let plus = scaled_value(f, t + h, reference)?;
        let minus = scaled_value(f, t - h, reference)?;
        largest = largest.max(plus.abs()).max(minus.abs());
        first.push((plus - minus) / (2.0 * h));
        second.push((plus - 2.0 * g0 + minus) / (h * h));
    }
    let (d1, e1) = richardson(&first);
    let (d2, e2) = richardson(&second);
    let d1_error = e1 / d1.abs().max(largest);
    let d2_error = e2 / d2.abs().max(largest);

    // the finest stencil amplifies evaluation noise by 1/h and 4/h²
    let noise = f.relative_noise(t)?;
    let h_min = h0 / 2f64.powi(scheme.richardson_levels as i32 - 1);
    let d1_noise = NOISE_MARGIN * noise / h_min * largest / d1.abs().max(largest);
    let d2_noise = NOISE_MARGIN * 4.0 * noise / (h_min * h_min) * largest / d2.abs().max(largest);
    for (error, floor) in [(d1_error, d1_noise), (d2_error, d2_noise)] {
        if !(error <= RICHARDSON_TOLERANCE.max(floor)) {
            return Err(XiError::Accuracy {
                context: "derivatives: Richardson levels disagree",
                achieved: error,
                target: RICHARDSON_TOLERANCE.max(floor),
            });
        }
    }

    let unscale = |x: f64| LogScaledComplex::rescaled(x.into(), reference).to_complex().re;
    let (abs_d1, abs_d2) = (unscale(d1), unscale(d2));
    Ok(XiSample {
        t,
        xi_value: center,
        d1: abs_d1,
        d2: abs_d2,
        a: -abs_d2 / 2.0,
        b: -abs_d1,
        reference_log_scale: reference,
        scaled_value: g0,
        scaled_d1: d1,
        scaled_d2: d2,
        step: h0,
        d1_error,
        d2_error,
        d1_noise,
        d2_noise,
    })
}

/// Ξ(t), Ξ′(t), Ξ″(t), a(t) and b(t).
pub fn derivatives(t: f64, scheme: &DifferentiationScheme, cfg: &EvalConfig) -> Result<XiSample> {
    derivatives_of(&Xi::new(*cfg), t, scheme)
}

/// [`derivatives_of`] over a grid, evaluated in parallel; output order follows `ts`.
pub fn derivatives_on_grid<F: StripFunction + ?Sized>(
    f: &F,
    ts: &[f64],
    scheme: &DifferentiationScheme,
) -> Result<Vec<XiSample>> {
    ts.par_iter().map(|&t| derivatives_of(f, t, scheme)).collect()
}
