use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::factor::g_at;
use crate::error::{Result, XiError};
use crate::special_functions::{xi, xi_envelope_log, ComplexPoint, EvalConfig, LogScaledComplex};
use crate::zero_catalog::ZeroCatalog;

/// Inside this distance from ρ_j (or ρ̄_j) division by g_j is replaced by a contour mean.
pub const LIMIT_RADIUS: f64 = 1e-2;
const CONTOUR_RADIUS: f64 = 0.1;
const CONTOUR_POINTS: usize = 16;
/// Smallest |g_j(s)| accepted under [`LimitPolicy::Forbid`].
pub const MIN_FACTOR: f64 = 1e-12;

/// What to do when s is close to a zero of the deleted factor.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum LimitPolicy {
    /// Use Cauchy's integral formula around the zero.
    #[default]
    Auto,
    /// Always divide; refuse when |g_j(s)| < [`MIN_FACTOR`].
    Forbid,
}

fn divided(ts: &[f64], s: ComplexPoint, cfg: &EvalConfig) -> Result<LogScaledComplex> {
    Ok(ts.iter().fold(xi(s, cfg)?, |acc, &t| acc / g_at(t, s)))
}

/// ξ_(j)(s) = ξ(s) / g_j(s).
///
/// Near ρ_j the quotient is evaluated as the mean of ξ/g_j over a circle of
/// radius 0.1 weighted by the Cauchy kernel, which is exact for an analytic
/// function up to the trapezoidal aliasing error.
pub fn deleted_product(
    j: usize,
    s: ComplexPoint,
    catalog: &ZeroCatalog,
    policy: LimitPolicy,
    cfg: &EvalConfig,
) -> Result<LogScaledComplex> {
    deleted_product_at(catalog.t(j)?, j, s, policy, cfg)
}

pub(crate) fn deleted_product_at(
    t_j: f64,
    j: usize,
    s: ComplexPoint,
    policy: LimitPolicy,
    cfg: &EvalConfig,
) -> Result<LogScaledComplex> {
    match policy {
        LimitPolicy::Forbid => {
            if g_at(t_j, s).norm() < MIN_FACTOR {
                let distance = (s.to_complex() - Complex64::new(0.5, t_j.copysign(s.t))).norm();
                return Err(XiError::NearPoleOfFactor { j, distance });
            }
            divided(&[t_j], s, cfg)
        }
        LimitPolicy::Auto => deleted_many(&[t_j], s, cfg),
    }
}

/// ξ(s) with the factors of every ordinate in `ts` removed. Within
/// `LIMIT_RADIUS` of a removed zero the removable singularity is bridged by
/// Cauchy's formula on a circle of radius 0.1 around that zero.
pub(crate) fn deleted_many(ts: &[f64], s: ComplexPoint, cfg: &EvalConfig) -> Result<LogScaledComplex> {
    let z = s.to_complex();
    let near = ts
        .iter()
        .flat_map(|&t| [Complex64::new(0.5, t), Complex64::new(0.5, -t)])
        .min_by(|a, b| (z - a).norm().total_cmp(&(z - b).norm()));
    let Some(near) = near else {
        return xi(s, cfg);
    };
    if (z - near).norm() >= LIMIT_RADIUS {
        return divided(ts, s, cfg);
    }
    let reference = xi_envelope_log(ComplexPoint::from_complex(near))?;
    let mut sum = Complex64::new(0.0, 0.0);
    for m in 0..CONTOUR_POINTS {
        let theta = 2.0 * PI * (m as f64 + 0.5) / CONTOUR_POINTS as f64;
        let w = near + Complex64::from_polar(CONTOUR_RADIUS, theta);
        let f = divided(ts, ComplexPoint::from_complex(w), cfg)?.descaled(reference);
        sum += f * (w - near) / (w - z);
    }
    Ok(LogScaledComplex::rescaled(sum / CONTOUR_POINTS as f64, reference))
}

#[cfg(test)]
mod tests {
    use super::*;

    const T1: f64 = 14.134_725_141_734_695;

    #[test]
    fn limit_branch_is_continuous_with_division() {
        let cfg = EvalConfig::default();
        let s_in = ComplexPoint::on_critical_line(T1 + 0.009);
        let s_out = ComplexPoint::on_critical_line(T1 + 0.011);
        let a = deleted_product_at(T1, 1, s_in, LimitPolicy::Auto, &cfg).unwrap();
        let b = deleted_product_at(T1, 1, s_in, LimitPolicy::Forbid, &cfg).unwrap();
        assert!(((a / b).to_complex() - 1.0).norm() < 1e-11);
        let c = deleted_product_at(T1, 1, s_out, LimitPolicy::Auto, &cfg).unwrap();
        let d = deleted_product_at(T1, 1, s_out, LimitPolicy::Forbid, &cfg).unwrap();
        assert_eq!(c, d);
    }

    #[test]
    fn forbid_refuses_the_zero() {
        let r = deleted_product_at(
            T1,
            1,
            ComplexPoint::on_critical_line(T1),
            LimitPolicy::Forbid,
            &EvalConfig::default(),
        );
        assert!(matches!(r, Err(XiError::NearPoleOfFactor { j: 1, .. })));
    }
}
