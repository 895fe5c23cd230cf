//! Ξ(t) = ξ(½ + it), its derivatives and strip cross-sections.
//!
//! Everything here is generic over [`StripFunction`], so the same
//! differentiation and restriction code serves ξ itself and the modified
//! functions built in [`crate::hypothetical`].

mod cross_section;
mod derivatives;
mod partials;

pub use cross_section::{cross_section, cross_section_of, lambda_grid, CrossSection, CrossSectionRow};
pub use derivatives::{
    central_differences, derivatives, derivatives_of, derivatives_on_grid, DifferentiationScheme, XiSample,
};
pub use partials::{strip_partials, StripPartials};

use crate::error::{Result, XiError};
use crate::special_functions::{xi, xi_detailed, xi_envelope_log, ComplexPoint, EvalConfig, LogScaledComplex};

/// Largest tolerated |Im f(½+it)| relative to max(|f|, reference scale).
pub const REALNESS_TOLERANCE: f64 = 1e-10;

/// A function on the critical strip that is real on the critical line.
pub trait StripFunction: Sync {
    fn eval(&self, s: ComplexPoint) -> Result<LogScaledComplex>;

    /// Smooth, zero-free log-magnitude of the function near ½ + it.
    fn reference_log_scale(&self, t: f64) -> Result<f64>;

    /// Rounding error of f(½+it) relative to `exp(reference_log_scale(t))`.
    fn relative_noise(&self, _t: f64) -> Result<f64> {
        Ok(64.0 * f64::EPSILON)
    }
}

/// The completed ξ function as a [`StripFunction`].
#[derive(Clone, Copy, Debug, Default)]
pub struct Xi {
    pub cfg: EvalConfig,
}

impl Xi {
    pub fn new(cfg: EvalConfig) -> Self {
        Self { cfg }
    }
}

impl StripFunction for Xi {
    fn eval(&self, s: ComplexPoint) -> Result<LogScaledComplex> {
        xi(s, &self.cfg)
    }

    fn reference_log_scale(&self, t: f64) -> Result<f64> {
        xi_envelope_log(ComplexPoint::on_critical_line(t))
    }

    fn relative_noise(&self, t: f64) -> Result<f64> {
        Ok(xi_detailed(ComplexPoint::on_critical_line(t), &self.cfg)?.error_estimate)
    }
}

/// f(½ + it) with the realness check applied and the imaginary part dropped.
/// The sign is carried by the phase: 0 for positive, π for negative.
pub fn restrict_to_line<F: StripFunction + ?Sized>(f: &F, t: f64) -> Result<LogScaledComplex> {
    let value = f.eval(ComplexPoint::on_critical_line(t))?;
    let scale = value.log_magnitude().max(f.reference_log_scale(t)?);
    let ratio = (value.imag_part().log_magnitude() - scale).exp();
    if ratio > REALNESS_TOLERANCE || ratio.is_nan() {
        return Err(XiError::RealnessViolation { t, ratio });
    }
    Ok(value.real_part())
}

/// Ξ(t) = ξ(½ + it).
pub fn big_xi(t: f64, cfg: &EvalConfig) -> Result<LogScaledComplex> {
    restrict_to_line(&Xi::new(*cfg), t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn value_at_origin() {
        let v = big_xi(0.0, &EvalConfig::default()).unwrap();
        assert_eq!(v.phase(), 0.0);
        assert!((v.to_complex().re - 0.497_120_778_188_314_1).abs() < 1e-12);
    }

    #[test]
    fn negative_lobe_between_thirty_first_and_thirty_second_zero() {
        let cfg = EvalConfig::default();
        for i in 1..20 {
            let t = 103.7255 + (105.4466 - 103.7255) * i as f64 / 20.0;
            assert_eq!(big_xi(t, &cfg).unwrap().phase(), PI, "t = {t}");
        }
    }

    struct Skewed;

    impl StripFunction for Skewed {
        fn eval(&self, _s: ComplexPoint) -> Result<LogScaledComplex> {
            Ok(LogScaledComplex::from_complex(num_complex::Complex64::new(1.0, 1e-6)))
        }
        fn reference_log_scale(&self, _t: f64) -> Result<f64> {
            Ok(0.0)
        }
    }

    #[test]
    fn imaginary_residue_is_rejected() {
        assert!(matches!(
            restrict_to_line(&Skewed, 3.0),
            Err(XiError::RealnessViolation { .. })
        ));
    }
}
