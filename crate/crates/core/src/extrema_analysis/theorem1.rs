use serde::{Deserialize, Serialize};

use super::{ExtremumKind, ExtremumRecord};
use crate::error::Result;
use crate::product_form::second_log_derivative_partial;
use crate::zero_catalog::ZeroCatalog;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Theorem1Summary {
    pub records: Vec<ExtremumRecord>,
    pub n_terms: usize,
    /// Maxima with Ξ ≤ 0, minima with Ξ ≥ 0 and degenerate extrema.
    pub violations: usize,
    /// Records with Ξ″/Ξ ≥ 0.
    pub nonnegative_lhs: usize,
    /// Largest |lhs − rhs|/|lhs| over the records.
    pub max_eq17_mismatch: f64,
}

/// Apply the sign rule to each record and attach the truncated sum
/// −2 Σ_{n ≤ N} (t*² + t_n²)/(t*² − t_n²)².
pub fn check_theorem1(records: &[ExtremumRecord], catalog: &ZeroCatalog, n_terms: usize) -> Result<Theorem1Summary> {
    let mut checked = Vec::with_capacity(records.len());
    let mut max_eq17_mismatch: f64 = 0.0;
    for r in records {
        let rhs = second_log_derivative_partial(r.t_star, n_terms, catalog)?;
        let theorem1_ok = match r.kind {
            ExtremumKind::Max => r.value > 0.0,
            ExtremumKind::Min => r.value < 0.0,
            ExtremumKind::Degenerate => false,
        };
        max_eq17_mismatch = max_eq17_mismatch.max((r.eq17_lhs - rhs).abs() / r.eq17_lhs.abs());
        checked.push(ExtremumRecord {
            theorem1_ok,
            eq17_rhs_partial: Some(rhs),
            ..*r
        });
    }
    Ok(Theorem1Summary {
        violations: checked.iter().filter(|r| !r.theorem1_ok).count(),
        nonnegative_lhs: checked.iter().filter(|r| !(r.eq17_lhs < 0.0)).count(),
        records: checked,
        n_terms,
        max_eq17_mismatch,
    })
}
