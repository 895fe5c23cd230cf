//! Partial sums of the logarithmic derivatives of the product form of Ξ.

use crate::error::{Result, XiError};
use crate::zero_catalog::ZeroCatalog;

fn first(n_max: usize, catalog: &ZeroCatalog) -> Result<&[crate::zero_catalog::ZeroOrdinate]> {
    catalog.ordinates().get(..n_max).ok_or(XiError::UnknownIndex(n_max))
}

/// Σ_{n ≤ N} 2t/(t² − t_n²), the truncated Ξ′/Ξ.
pub fn log_derivative_partial(t: f64, n_max: usize, catalog: &ZeroCatalog) -> Result<f64> {
    Ok(first(n_max, catalog)?
        .iter()
        .map(|z| 2.0 * t / ((t - z.t) * (t + z.t)))
        .sum())
}

/// −2 Σ_{n ≤ N} (t² + t_n²)/(t² − t_n²)², the truncated (ln Ξ)″.
///
/// Every term is negative, so the sum is negative for any t. At an
/// extremum it equals Ξ″/Ξ.
pub fn second_log_derivative_partial(t: f64, n_max: usize, catalog: &ZeroCatalog) -> Result<f64> {
    Ok(-2.0
        * first(n_max, catalog)?
            .iter()
            .map(|z| {
                let d = (t - z.t) * (t + z.t);
                (t * t + z.t * z.t) / (d * d)
            })
            .sum::<f64>())
}
