//! Ordinates t_n of the zeros ½ + it_n of ξ on the critical line.
//!
//! A catalog covering the first 200 zeros ships with the crate
//! ([`ZeroCatalog::reference`]); larger catalogs are built by scanning.

mod scan;

use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

pub use scan::{refine, refine_all, scan, Bracket, DEFAULT_SCAN_STEP, MAX_SCAN_STEP, REFINE_TOLERANCE};

use crate::error::{Result, XiError};
use crate::special_functions::EvalConfig;

pub const CATALOG_VERSION: u32 = 1;
/// Scans start here; Ξ has no zero below t = 14.
pub const SCAN_START: f64 = 1e-3;

/// One zero ordinate, 1-based index.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroOrdinate {
    #[serde(rename = "n")]
    pub index: usize,
    pub t: f64,
    #[serde(rename = "hw")]
    pub half_width: f64,
}

/// Ordered zero ordinates. Every sign change of Ξ on
/// [`SCAN_START`, `scan_upper_bound`] is one of the entries.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroCatalog {
    ordinates: Vec<ZeroOrdinate>,
    scan_upper_bound: f64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CatalogFile {
    version: u32,
    scan_upper_bound: f64,
    zeros: Vec<ZeroOrdinate>,
}

static REFERENCE: OnceLock<ZeroCatalog> = OnceLock::new();

impl ZeroCatalog {
    pub fn empty() -> Self {
        Self {
            ordinates: Vec::new(),
            scan_upper_bound: 0.0,
        }
    }

    /// Validate and wrap ordinates that cover [`SCAN_START`, `scan_upper_bound`].
    pub fn new(ordinates: Vec<ZeroOrdinate>, scan_upper_bound: f64) -> Result<Self> {
        if !(scan_upper_bound >= 0.0 && scan_upper_bound.is_finite()) {
            return Err(XiError::Schema(format!(
                "scan_upper_bound must be finite and non-negative, got {scan_upper_bound}"
            )));
        }
        for (i, z) in ordinates.iter().enumerate() {
            if z.index != i + 1 {
                return Err(XiError::Schema(format!(
                    "entry {} carries index {}; indices must run 1, 2, 3, ...",
                    i + 1,
                    z.index
                )));
            }
            if !(z.t > 0.0 && z.t.is_finite() && z.half_width >= 0.0) {
                return Err(XiError::Schema(format!("entry {} has invalid t or hw", z.index)));
            }
            if i > 0 && z.t <= ordinates[i - 1].t {
                return Err(XiError::Monotonicity { index: z.index });
            }
        }
        if let Some(last) = ordinates.last() {
            if last.t > scan_upper_bound {
                return Err(XiError::Schema(format!(
                    "t_{} = {} lies above scan_upper_bound {}",
                    last.index, last.t, scan_upper_bound
                )));
            }
        }
        Ok(Self {
            ordinates,
            scan_upper_bound,
        })
    }

    /// Scan [`SCAN_START`, `upper`] and refine every bracket.
    pub fn build(upper: f64, step: f64, cfg: &EvalConfig) -> Result<Self> {
        Self::empty().extend_to(upper, step, cfg)
    }

    /// Scan (`scan_upper_bound`, `upper`] and append what is found.
    pub fn extend_to(&self, upper: f64, step: f64, cfg: &EvalConfig) -> Result<Self> {
        let start = self.scan_upper_bound.max(SCAN_START);
        if upper <= start {
            return Ok(self.clone());
        }
        let mut brackets = scan((start, upper), step, cfg)?;
        // a zero sitting exactly on the old bound is already catalogued
        brackets.retain(|b| b.hi > start);
        let found = refine_all(&brackets, self.len() + 1, cfg)?;
        let mut ordinates = self.ordinates.clone();
        ordinates.extend(found);
        Self::new(ordinates, upper)
    }

    /// The shipped catalog of the first 200 zeros.
    pub fn reference() -> &'static Self {
        REFERENCE.get_or_init(|| {
            Self::from_json(include_str!("../../data/reference_zeros.json"))
                .expect("shipped reference catalog is valid")
        })
    }

    pub fn ordinates(&self) -> &[ZeroOrdinate] {
        &self.ordinates
    }

    pub fn scan_upper_bound(&self) -> f64 {
        self.scan_upper_bound
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    pub fn get(&self, n: usize) -> Result<&ZeroOrdinate> {
        n.checked_sub(1)
            .and_then(|i| self.ordinates.get(i))
            .ok_or(XiError::UnknownIndex(n))
    }

    /// t_n.
    pub fn t(&self, n: usize) -> Result<f64> {
        Ok(self.get(n)?.t)
    }

    /// Number of catalogued zeros with t_n < t.
    pub fn count_below(&self, t: f64) -> usize {
        self.ordinates.partition_point(|z| z.t < t)
    }

    /// Zeros with lo < t_n < hi.
    pub fn zeros_in(&self, lo: f64, hi: f64) -> &[ZeroOrdinate] {
        let start = self.ordinates.partition_point(|z| z.t <= lo);
        let end = self.ordinates.partition_point(|z| z.t < hi).max(start);
        &self.ordinates[start..end]
    }

    /// Distance from t to the nearest catalogued ordinate.
    pub fn distance_to_nearest(&self, t: f64) -> f64 {
        let i = self.count_below(t);
        let below = i.checked_sub(1).map(|k| t - self.ordinates[k].t);
        let above = self.ordinates.get(i).map(|z| z.t - t);
        below.into_iter().chain(above).fold(f64::INFINITY, f64::min)
    }

    /// Rescan the covered range with `step` and confirm every sign change
    /// is bracketed around a catalogued ordinate and vice versa.
    pub fn verify_rescan(&self, step: f64, cfg: &EvalConfig) -> Result<()> {
        if self.scan_upper_bound <= SCAN_START {
            return Ok(());
        }
        let brackets = scan((SCAN_START, self.scan_upper_bound), step, cfg)?;
        if brackets.len() != self.len() {
            return Err(XiError::Schema(format!(
                "rescan found {} sign changes but the catalog lists {} zeros",
                brackets.len(),
                self.len()
            )));
        }
        for (b, z) in brackets.iter().zip(&self.ordinates) {
            if !(b.lo - z.half_width <= z.t && z.t <= b.hi + z.half_width) {
                return Err(XiError::Schema(format!(
                    "t_{} = {} lies outside the rescan bracket [{}, {}]",
                    z.index, z.t, b.lo, b.hi
                )));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        let file = CatalogFile {
            version: CATALOG_VERSION,
            scan_upper_bound: self.scan_upper_bound,
            zeros: self.ordinates.clone(),
        };
        Ok(serde_json::to_string_pretty(&file)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: CatalogFile = serde_json::from_str(text).map_err(|e| XiError::Schema(e.to_string()))?;
        if file.version != CATALOG_VERSION {
            return Err(XiError::Schema(format!(
                "unsupported catalog version {} (expected {CATALOG_VERSION})",
                file.version
            )));
        }
        Self::new(file.zeros, file.scan_upper_bound)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json()? + "\n")?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(index: usize, t: f64) -> ZeroOrdinate {
        ZeroOrdinate {
            index,
            t,
            half_width: 1e-10,
        }
    }

    #[test]
    fn empty_catalog_round_trips() {
        let empty = ZeroCatalog::empty();
        let back = ZeroCatalog::from_json(&empty.to_json().unwrap()).unwrap();
        assert_eq!(back, empty);
        assert_eq!(back.scan_upper_bound(), 0.0);
    }

    #[test]
    fn swapped_entries_are_rejected() {
        let r = ZeroCatalog::new(vec![entry(1, 21.0), entry(2, 14.0)], 30.0);
        assert!(matches!(r, Err(XiError::Monotonicity { index: 2 })));
    }

    #[test]
    fn gaps_in_indices_are_rejected() {
        let r = ZeroCatalog::new(vec![entry(1, 14.0), entry(3, 21.0)], 30.0);
        assert!(matches!(r, Err(XiError::Schema(_))));
    }

    #[test]
    fn wrong_version_is_rejected() {
        let text = r#"{"version": 2, "scan_upper_bound": 0.0, "zeros": []}"#;
        assert!(matches!(ZeroCatalog::from_json(text), Err(XiError::Schema(_))));
        let text = r#"{"version": 1, "zeros": []}"#;
        assert!(matches!(ZeroCatalog::from_json(text), Err(XiError::Schema(_))));
    }

    #[test]
    fn lookups() {
        let c = ZeroCatalog::new(vec![entry(1, 14.0), entry(2, 21.0), entry(3, 25.0)], 26.0).unwrap();
        assert_eq!(c.t(2).unwrap(), 21.0);
        assert!(matches!(c.get(0), Err(XiError::UnknownIndex(0))));
        assert!(matches!(c.get(4), Err(XiError::UnknownIndex(4))));
        assert_eq!(c.count_below(21.0), 1);
        assert_eq!(c.count_below(21.5), 2);
        assert_eq!(c.zeros_in(14.0, 25.0).len(), 1);
        assert_eq!(c.distance_to_nearest(22.0), 1.0);
    }
}
