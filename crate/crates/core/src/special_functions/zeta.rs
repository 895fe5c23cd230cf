use std::f64::consts::PI;

use num_complex::Complex64;

use super::bernoulli::scaled_bernoulli;
use super::gamma::{ln_gamma_complex, ln_sin_pi};
use super::{ComplexPoint, EvalConfig, LogScaledComplex};
use crate::error::{Result, XiError};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const STIELTJES_1: f64 = -0.072_815_845_483_676_72;
/// Radius around s = 1 inside which the Laurent expansion replaces summation.
pub(crate) const LAURENT_RADIUS: f64 = 1e-6;

/// ζ(s) with its diagnostics.
#[derive(Clone, Copy, Debug)]
pub struct ZetaEvaluation {
    pub value: LogScaledComplex,
    /// Estimated absolute error divided by max(|ζ(s)|, 1).
    pub error_estimate: f64,
    /// Number of directly summed terms (0 for the Laurent branch).
    pub cutoff: usize,
}

/// (s − 1) ζ(s) = 1 + γ₀ w − γ₁ w² + O(w³), w = s − 1.
pub(crate) fn laurent_residue_form(s: Complex64) -> Complex64 {
    let w = s - 1.0;
    1.0 + EULER_GAMMA * w - STIELTJES_1 * w * w
}

/// Upper bound of the Euler–Maclaurin remainder after `terms` corrections.
fn remainder_bound(s: Complex64, cutoff: usize, terms: usize) -> f64 {
    let ln_n = (cutoff as f64).ln();
    let mut log_bound = scaled_bernoulli(terms + 1).abs().ln();
    for i in 0..=(2 * terms) {
        log_bound += (s + i as f64).norm().ln();
    }
    let tail_exp = s.re + (2 * terms + 1) as f64;
    log_bound -= tail_exp * ln_n;
    log_bound += ((s + (2 * terms + 1) as f64).norm() / tail_exp).ln();
    log_bound.exp()
}

fn euler_maclaurin(s: Complex64, cfg: &EvalConfig) -> Result<(Complex64, f64, usize)> {
    let terms = cfg.euler_maclaurin_terms;
    let goal = 0.1 * cfg.target_relative_error;
    let mut cutoff = (10 + (s.norm() / (2.0 * PI)).ceil() as usize).min(cfg.euler_maclaurin_cutoff);
    let mut bound = remainder_bound(s, cutoff, terms);
    while bound > goal {
        if cutoff >= cfg.euler_maclaurin_cutoff {
            return Err(XiError::Accuracy {
                context: "zeta: Euler-Maclaurin budget",
                achieved: bound,
                target: cfg.target_relative_error,
            });
        }
        cutoff = ((cutoff as f64 * 1.25).ceil() as usize).min(cfg.euler_maclaurin_cutoff);
        bound = remainder_bound(s, cutoff, terms);
    }

    let mut sum = Complex64::new(0.0, 0.0);
    let mut rounding_sq = 0.0;
    for n in 1..cutoff {
        let ln_n = (n as f64).ln();
        let term = (-s * ln_n).exp();
        sum += term;
        // each term carries a phase error of order |t| ln n ulp
        let e = term.norm() * (1.0 + s.im.abs() * ln_n);
        rounding_sq += e * e;
    }

    let n = cutoff as f64;
    let n_pow = (-s * n.ln()).exp();
    let mut value = sum + n * n_pow / (s - 1.0) + 0.5 * n_pow;

    let mut rising = s;
    let mut n_power = n_pow / n;
    let n_sq_inv = 1.0 / (n * n);
    for k in 1..=terms {
        value += rising * n_power * scaled_bernoulli(k);
        let a = (2 * k - 1) as f64;
        rising *= (s + a) * (s + a + 1.0);
        n_power *= n_sq_inv;
    }

    let scale = value.norm().max(1.0);
    let error = (bound + f64::EPSILON * rounding_sq.sqrt()) / scale;
    Ok((value, error, cutoff))
}

/// ζ(s) with diagnostics; Euler–Maclaurin for σ ≥ 0, reflection for σ < 0.
pub fn zeta_detailed(s: ComplexPoint, cfg: &EvalConfig) -> Result<ZetaEvaluation> {
    cfg.validate()?;
    let z = s.to_complex();
    if z == Complex64::new(1.0, 0.0) {
        return Err(XiError::Pole { sigma: s.sigma, t: s.t });
    }
    if (z - 1.0).norm() < LAURENT_RADIUS {
        let value = laurent_residue_form(z) / (z - 1.0);
        return Ok(ZetaEvaluation {
            value: LogScaledComplex::from_complex(value),
            error_estimate: (z - 1.0).norm().powi(2),
            cutoff: 0,
        });
    }
    if s.sigma >= 0.0 {
        let (value, error_estimate, cutoff) = euler_maclaurin(z, cfg)?;
        return Ok(ZetaEvaluation {
            value: LogScaledComplex::from_complex(value),
            error_estimate,
            cutoff,
        });
    }

    // ζ(s) = 2^s π^{s−1} sin(πs/2) Γ(1−s) ζ(1−s)
    let mirror = zeta_detailed(s.reflect(), cfg)?;
    let (ln_gamma, gamma_err) = ln_gamma_complex(1.0 - z)?;
    let log_factor = z * 2f64.ln() + (z - 1.0) * PI.ln() + ln_sin_pi(z / 2.0) + ln_gamma;
    let value = LogScaledComplex::exp(log_factor) * mirror.value;
    let rounding = 4.0 * f64::EPSILON * log_factor.norm();
    Ok(ZetaEvaluation {
        value,
        error_estimate: mirror.error_estimate + gamma_err + rounding,
        cutoff: mirror.cutoff,
    })
}

/// Analytically continued ζ(s).
pub fn zeta(s: ComplexPoint, cfg: &EvalConfig) -> Result<LogScaledComplex> {
    let eval = zeta_detailed(s, cfg)?;
    cfg.check("zeta", eval.error_estimate)?;
    Ok(eval.value)
}
