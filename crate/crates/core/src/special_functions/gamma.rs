use std::f64::consts::PI;

use num_complex::Complex64;

use super::bernoulli::stirling_coefficient;
use super::{ComplexPoint, EvalConfig, LogScaledComplex};
use crate::error::{Result, XiError};

/// Real part the argument is shifted to before the Stirling series is applied.
const STIRLING_MIN_RE: f64 = 12.0;
const STIRLING_MAX_TERMS: usize = 15;
/// Below this real part the reflection formula is used instead of shifting.
const REFLECTION_BELOW: f64 = -20.0;

fn is_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// log sin(πz), modulo 2πi, without overflow for large |Im z|.
pub(crate) fn ln_sin_pi(z: Complex64) -> Complex64 {
    if z.im.abs() < 10.0 {
        return (z * PI).sin().ln();
    }
    if z.im < 0.0 {
        return ln_sin_pi(z.conj()).conj();
    }
    // sin(πz) = e^{−iπz} (e^{2iπz} − 1) / (2i), with |e^{2iπz}| = e^{−2π Im z} tiny
    let i = Complex64::i();
    let small = (2.0 * PI * i * z).exp();
    -i * PI * z + ((small - 1.0) / (2.0 * i)).ln()
}

/// log Γ(z) modulo 2πi together with an absolute error estimate.
///
/// Shifts Re z up to [`STIRLING_MIN_RE`] with the recurrence and sums the
/// Stirling series there; far left of the origin the reflection formula is
/// used.
pub fn ln_gamma_complex(z: Complex64) -> Result<(Complex64, f64)> {
    if is_pole(z) {
        return Err(XiError::Pole { sigma: z.re, t: z.im });
    }
    if z.re < REFLECTION_BELOW {
        let (reflected, err) = ln_gamma_complex(1.0 - z)?;
        let value = Complex64::new(PI.ln(), 0.0) - ln_sin_pi(z) - reflected;
        return Ok((value, err + f64::EPSILON * value.norm()));
    }

    let mut shift_log = Complex64::new(0.0, 0.0);
    let mut w = z;
    while w.re < STIRLING_MIN_RE {
        shift_log += w.ln();
        w += 1.0;
    }

    let ln_w = w.ln();
    let mut value = (w - 0.5) * ln_w - w + 0.5 * (2.0 * PI).ln();
    let w_sq_inv = (w * w).inv();
    let mut power = w.inv();
    let mut last_term = f64::INFINITY;
    for k in 1..=STIRLING_MAX_TERMS {
        let term = power * stirling_coefficient(k);
        value += term;
        last_term = term.norm();
        if last_term < 1e-3 * f64::EPSILON * value.norm() {
            break;
        }
        power *= w_sq_inv;
    }
    let value = value - shift_log;
    let rounding = 4.0 * f64::EPSILON * (value.norm() + shift_log.norm());
    Ok((value, last_term + rounding))
}

/// Γ(s) in log-scaled form (principal branch of the phase).
pub fn ln_gamma(s: ComplexPoint, cfg: &EvalConfig) -> Result<LogScaledComplex> {
    cfg.validate()?;
    let (value, err) = ln_gamma_complex(s.to_complex())?;
    cfg.check("ln_gamma", err)?;
    Ok(LogScaledComplex::exp(value))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    #[test]
    fn gamma_of_one_is_one() {
        let g = ln_gamma(ComplexPoint::new(1.0, 0.0), &cfg()).unwrap();
        assert!(g.log_magnitude().abs() < 1e-14);
        assert_eq!(g.phase(), 0.0);
    }

    #[test]
    fn gamma_of_half_is_sqrt_pi() {
        let g = ln_gamma(ComplexPoint::new(0.5, 0.0), &cfg()).unwrap();
        assert!((g.log_magnitude() - 0.572_364_942_924_700_1).abs() < 1e-13);
    }

    #[test]
    fn small_integers_give_factorials() {
        for (n, fact) in [(2.0, 1.0), (3.0, 2.0), (5.0, 24.0), (11.0, 3_628_800.0)] {
            let g = ln_gamma(ComplexPoint::new(n, 0.0), &cfg()).unwrap();
            assert!((g.to_complex().re - fact).abs() <= 1e-13 * fact, "Γ({n})");
        }
    }

    #[test]
    fn poles_are_rejected() {
        for s in [0.0, -1.0, -7.0] {
            assert!(matches!(
                ln_gamma(ComplexPoint::new(s, 0.0), &cfg()),
                Err(XiError::Pole { .. })
            ));
        }
        assert!(ln_gamma(ComplexPoint::new(-1.0, 1e-9), &cfg()).is_ok());
    }

    #[test]
    fn recurrence_holds_off_axis() {
        let z = Complex64::new(0.3, 41.7);
        let (a, _) = ln_gamma_complex(z).unwrap();
        let (b, _) = ln_gamma_complex(z + 1.0).unwrap();
        let lhs = LogScaledComplex::exp(b);
        let rhs = LogScaledComplex::exp(a) * z;
        let ratio = (lhs / rhs).to_complex();
        assert!((ratio - 1.0).norm() < 1e-13);
    }

    #[test]
    fn reflection_branch_agrees_with_shift_branch() {
        // Γ(z)Γ(1 − z) = π / sin(πz)
        let z = Complex64::new(-25.3, 4.0);
        let (lg, _) = ln_gamma_complex(z).unwrap();
        let (lg1, _) = ln_gamma_complex(1.0 - z).unwrap();
        let lhs = LogScaledComplex::exp(lg + lg1);
        let rhs = LogScaledComplex::exp(Complex64::new(PI.ln(), 0.0) - ln_sin_pi(z));
        assert!(((lhs / rhs).to_complex() - 1.0).norm() < 1e-12);
    }

    #[test]
    fn ln_sin_pi_matches_direct_in_overlap() {
        for z in [Complex64::new(0.3, 12.0), Complex64::new(-1.7, -15.0)] {
            let direct = (z * PI).sin();
            let viaformula = LogScaledComplex::exp(ln_sin_pi(z)).to_complex();
            assert!((direct - viaformula).norm() <= 1e-13 * direct.norm());
        }
    }
}
