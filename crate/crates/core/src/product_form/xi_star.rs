use super::deleted::{deleted_product_at, LimitPolicy, LIMIT_RADIUS};
use crate::critical_line::big_xi;
use crate::error::Result;
use crate::special_functions::{ComplexPoint, EvalConfig};
use crate::zero_catalog::ZeroCatalog;

/// Ξ*_j(t) = (t_j² + ¼)/(t_j² − t²) · Ξ(t).
pub fn xi_star_ratio(j: usize, t: f64, catalog: &ZeroCatalog, cfg: &EvalConfig) -> Result<f64> {
    let t_j = catalog.t(j)?;
    let factor = (t_j * t_j + 0.25) / ((t_j - t) * (t_j + t));
    Ok(big_xi(t, cfg)?.scale(factor).to_complex().re)
}

/// Ξ*_j(t) as the real part of the deleted product on the critical line.
pub fn xi_star_by_deletion(j: usize, t: f64, catalog: &ZeroCatalog, cfg: &EvalConfig) -> Result<f64> {
    let t_j = catalog.t(j)?;
    let s = ComplexPoint::on_critical_line(t);
    Ok(deleted_product_at(t_j, j, s, LimitPolicy::Auto, cfg)?.to_complex().re)
}

/// Ξ*_j(t): the ratio form away from t_j, the deleted product near it.
pub fn xi_star(j: usize, t: f64, catalog: &ZeroCatalog, cfg: &EvalConfig) -> Result<f64> {
    let t_j = catalog.t(j)?;
    if (t - t_j).abs() < LIMIT_RADIUS {
        xi_star_by_deletion(j, t, catalog, cfg)
    } else {
        xi_star_ratio(j, t, catalog, cfg)
    }
}

/// b(t_j) = 2t_j/(t_j² + ¼) · Ξ*_j(t_j).
pub fn b_at_zero(j: usize, catalog: &ZeroCatalog, cfg: &EvalConfig) -> Result<f64> {
    let t_j = catalog.t(j)?;
    Ok(2.0 * t_j / (t_j * t_j + 0.25) * xi_star(j, t_j, catalog, cfg)?)
}
