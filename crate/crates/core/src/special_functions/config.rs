use serde::{Deserialize, Serialize};

use crate::error::{Result, XiError};

/// Accuracy budget shared by all evaluators.
///
/// `euler_maclaurin_terms` is the number of Bernoulli correction terms in the
/// ζ evaluation and `euler_maclaurin_cutoff` the largest admissible number of
/// directly summed terms. The cutoff actually used grows with |s| up to this
/// budget.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvalConfig {
    pub target_relative_error: f64,
    pub euler_maclaurin_terms: usize,
    pub euler_maclaurin_cutoff: usize,
}

/// Largest supported number of Bernoulli correction terms.
pub(crate) const MAX_BERNOULLI_TERMS: usize = 40;

/// Error estimates bound rounding pessimistically; an evaluation only fails
/// once its estimate exceeds the target by this factor.
pub const ESTIMATE_SLACK: f64 = 100.0;

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            target_relative_error: 1e-12,
            euler_maclaurin_terms: 20,
            euler_maclaurin_cutoff: 4000,
        }
    }
}

impl EvalConfig {
    pub fn with_target(target_relative_error: f64) -> Result<Self> {
        let cfg = Self {
            target_relative_error,
            ..Self::default()
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Fails with an accuracy error when `achieved` is out of budget.
    pub fn check(&self, context: &'static str, achieved: f64) -> Result<()> {
        if achieved.is_nan() || achieved > ESTIMATE_SLACK * self.target_relative_error {
            return Err(XiError::Accuracy {
                context,
                achieved,
                target: self.target_relative_error,
            });
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.target_relative_error > 0.0 && self.target_relative_error <= 1e-6) {
            return Err(XiError::InvalidConfig(format!(
                "target_relative_error must lie in (0, 1e-6], got {}",
                self.target_relative_error
            )));
        }
        if self.euler_maclaurin_terms == 0 || self.euler_maclaurin_terms > MAX_BERNOULLI_TERMS {
            return Err(XiError::InvalidConfig(format!(
                "euler_maclaurin_terms must lie in [1, {MAX_BERNOULLI_TERMS}], got {}",
                self.euler_maclaurin_terms
            )));
        }
        if self.euler_maclaurin_cutoff == 0 {
            return Err(XiError::InvalidConfig("euler_maclaurin_cutoff must be positive".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_is_valid() {
        EvalConfig::default().validate().unwrap();
    }

    #[test]
    fn rejects_out_of_range_values() {
        assert!(EvalConfig::with_target(0.0).is_err());
        assert!(EvalConfig::with_target(1e-3).is_err());
        assert!(EvalConfig::with_target(1e-6).is_ok());
        let cfg = EvalConfig {
            euler_maclaurin_terms: 0,
            ..EvalConfig::default()
        };
        assert!(cfg.validate().is_err());
        let cfg = EvalConfig {
            euler_maclaurin_cutoff: 0,
            ..EvalConfig::default()
        };
        assert!(cfg.validate().is_err());
    }
}
