use std::f64::consts::PI;

use num_complex::Complex64;

use super::gamma::ln_gamma_complex;
use super::zeta::{laurent_residue_form, zeta_detailed, LAURENT_RADIUS};
use super::{ComplexPoint, EvalConfig, LogScaledComplex};
use crate::error::Result;

/// ξ(s) with the magnitude scale it was assembled from.
#[derive(Clone, Copy, Debug)]
pub struct XiEvaluation {
    pub value: LogScaledComplex,
    /// ln |(s − 1) π^{−s/2} Γ(s/2 + 1)|: the size ξ would have if |ζ(s)| were 1.
    /// Smooth and zero-free, so it serves as a local reference magnitude.
    pub envelope_log: f64,
    /// Estimated absolute error divided by max(|ξ(s)|, exp(envelope_log)).
    pub error_estimate: f64,
}

fn log_prefactor(z: Complex64) -> Result<(Complex64, f64)> {
    let (ln_gamma, err) = ln_gamma_complex(z / 2.0 + 1.0)?;
    Ok((-(z / 2.0) * PI.ln() + ln_gamma, err))
}

/// ξ(s) = (s − 1) π^{−s/2} Γ(s/2 + 1) ζ(s), which equals s(s−1)/2 · π^{−s/2} Γ(s/2) ζ(s)
/// and is regular at s = 0. Points left of the origin are mapped with ξ(s) = ξ(1 − s).
pub fn xi_detailed(s: ComplexPoint, cfg: &EvalConfig) -> Result<XiEvaluation> {
    cfg.validate()?;
    if s.sigma < 0.0 {
        return xi_detailed(s.reflect(), cfg);
    }
    let z = s.to_complex();
    let (log_pref, gamma_err) = log_prefactor(z)?;

    if (z - 1.0).norm() < LAURENT_RADIUS {
        let value = LogScaledComplex::exp(log_pref) * laurent_residue_form(z);
        return Ok(XiEvaluation {
            value,
            envelope_log: log_pref.re,
            error_estimate: (z - 1.0).norm().powi(2) + gamma_err,
        });
    }

    let zeta = zeta_detailed(s, cfg)?;
    let log_factor = log_pref + (z - 1.0).ln();
    let value = LogScaledComplex::exp(log_factor) * zeta.value;
    let rounding = 4.0 * f64::EPSILON * log_factor.norm();
    Ok(XiEvaluation {
        value,
        envelope_log: log_factor.re,
        error_estimate: zeta.error_estimate + gamma_err + rounding,
    })
}

/// The completed ξ function.
pub fn xi(s: ComplexPoint, cfg: &EvalConfig) -> Result<LogScaledComplex> {
    let eval = xi_detailed(s, cfg)?;
    cfg.check("xi", eval.error_estimate)?;
    Ok(eval.value)
}

/// ln |(s − 1) π^{−s/2} Γ(s/2 + 1)|, the zero-free magnitude scale of ξ near s.
pub fn xi_envelope_log(s: ComplexPoint) -> Result<f64> {
    let s = if s.sigma < 0.0 { s.reflect() } else { s };
    let z = s.to_complex();
    let (log_pref, _) = log_prefactor(z)?;
    let near_one = (z - 1.0).norm();
    if near_one < LAURENT_RADIUS {
        return Ok(log_pref.re);
    }
    Ok(log_pref.re + near_one.ln())
}
