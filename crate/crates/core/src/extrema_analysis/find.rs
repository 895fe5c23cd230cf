use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::critical_line::{derivatives_of, DifferentiationScheme, StripFunction, Xi, XiSample};
use crate::error::{Result, XiError};
use crate::roots::brent;
use crate::special_functions::EvalConfig;
use crate::zero_catalog::{ZeroCatalog, REFINE_TOLERANCE};

/// Spacing of the Ξ′ sign scan.
pub const EXTREMA_GRID_STEP: f64 = 0.05;

/// Ξ″ below this fraction of max(|Ξ|, |Ξ′|) counts as an inflection.
const DEGENERATE_CURVATURE: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtremumKind {
    Max,
    Min,
    /// Ξ′ and Ξ″ vanish together to working precision.
    Degenerate,
}

/// One root of Ξ′.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtremumRecord {
    pub t_star: f64,
    /// Ξ(t*)
    pub value: f64,
    /// Ξ″(t*)
    pub second_deriv: f64,
    pub kind: ExtremumKind,
    pub theorem1_ok: bool,
    /// Ξ″(t*)/Ξ(t*)
    pub eq17_lhs: f64,
    /// Filled in by [`super::check_theorem1`].
    pub eq17_rhs_partial: Option<f64>,
    pub half_width: f64,
    /// |Ξ′(t*)| / max(|Ξ(t*)|, |Ξ″(t*)|)
    pub relative_slope: f64,
}

/// Departures from one extremum per gap between adjacent zeros.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Anomaly {
    Inflection { t: f64 },
    MissingExtremum { n: usize, lo: f64, hi: f64 },
    ExtraExtrema { n: usize, count: usize },
    NotAlternating { t_prev: f64, t: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtremaScan {
    pub range: (f64, f64),
    pub records: Vec<ExtremumRecord>,
    pub anomalies: Vec<Anomaly>,
}

fn sample<F: StripFunction + ?Sized>(f: &F, t: f64, scheme: &DifferentiationScheme) -> Result<XiSample> {
    derivatives_of(f, t, scheme)
}

fn record_from(s: &XiSample, half_width: f64) -> ExtremumRecord {
    let curvature_scale = s.scaled_value.abs().max(s.scaled_d1.abs());
    let kind = if s.scaled_d2.abs() <= DEGENERATE_CURVATURE * curvature_scale {
        ExtremumKind::Degenerate
    } else if s.scaled_d2 < 0.0 {
        ExtremumKind::Max
    } else {
        ExtremumKind::Min
    };
    let value = s.xi_value.to_complex().re;
    let theorem1_ok = match kind {
        ExtremumKind::Max => s.scaled_value > 0.0,
        ExtremumKind::Min => s.scaled_value < 0.0,
        ExtremumKind::Degenerate => false,
    };
    ExtremumRecord {
        t_star: s.t,
        value,
        second_deriv: s.d2,
        kind,
        theorem1_ok,
        eq17_lhs: s.scaled_d2 / s.scaled_value,
        eq17_rhs_partial: None,
        half_width,
        relative_slope: s.scaled_d1.abs() / s.scaled_value.abs().max(s.scaled_d2.abs()),
    }
}

/// Every root of f′ on `range` for a strip function real on the line,
/// sorted by t*. Anomalies tied to zeros need a catalog; see [`find_extrema`].
pub fn find_extrema_of<F: StripFunction + ?Sized>(
    f: &F,
    range: (f64, f64),
    scheme: &DifferentiationScheme,
) -> Result<ExtremaScan> {
    let (lo, hi) = range;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(XiError::InvalidConfig(format!("invalid extrema range ({lo}, {hi})")));
    }
    let n = ((hi - lo) / EXTREMA_GRID_STEP).ceil() as usize;
    let grid: Vec<f64> = (0..=n)
        .map(|i| if i == n { hi } else { lo + EXTREMA_GRID_STEP * i as f64 })
        .collect();
    let slopes = grid
        .par_iter()
        .map(|&t| Ok(sample(f, t, scheme)?.scaled_d1))
        .collect::<Result<Vec<f64>>>()?;

    let brackets: Vec<(f64, f64)> = (1..grid.len())
        .filter(|&i| slopes[i] == 0.0 || slopes[i - 1].signum() != slopes[i].signum() && slopes[i - 1] != 0.0)
        .map(|i| {
            if slopes[i] == 0.0 {
                (grid[i], grid[i])
            } else {
                (grid[i - 1], grid[i])
            }
        })
        .chain((slopes[0] == 0.0).then_some((grid[0], grid[0])))
        .collect();

    let mut records = brackets
        .par_iter()
        .map(|&(a, b)| {
            let root = if a == b {
                crate::roots::Root {
                    x: a,
                    half_width: 0.0,
                    iterations: 0,
                }
            } else {
                brent(|t| Ok(sample(f, t, scheme)?.scaled_d1), a, b, REFINE_TOLERANCE)?
            };
            Ok(record_from(&sample(f, root.x, scheme)?, root.half_width))
        })
        .collect::<Result<Vec<ExtremumRecord>>>()?;
    records.sort_by(|a, b| a.t_star.total_cmp(&b.t_star));

    let mut anomalies: Vec<Anomaly> = records
        .iter()
        .filter(|r| r.kind == ExtremumKind::Degenerate)
        .map(|r| Anomaly::Inflection { t: r.t_star })
        .collect();
    for w in records.windows(2) {
        if w[0].kind == w[1].kind && w[0].kind != ExtremumKind::Degenerate {
            anomalies.push(Anomaly::NotAlternating {
                t_prev: w[0].t_star,
                t: w[1].t_star,
            });
        }
    }
    Ok(ExtremaScan {
        range,
        records,
        anomalies,
    })
}

/// Extrema of Ξ on `range`, with one extremum expected strictly between each
/// pair of adjacent catalog zeros inside the range.
pub fn find_extrema(
    range: (f64, f64),
    catalog: &ZeroCatalog,
    scheme: &DifferentiationScheme,
    cfg: &EvalConfig,
) -> Result<ExtremaScan> {
    if range.1 > catalog.scan_upper_bound() {
        return Err(XiError::InvalidConfig(format!(
            "extrema range ends at {} beyond the catalog scan bound {}",
            range.1,
            catalog.scan_upper_bound()
        )));
    }
    let mut scan = find_extrema_of(&Xi::new(*cfg), range, scheme)?;
    let zeros = catalog.zeros_in(range.0, range.1);
    for pair in zeros.windows(2) {
        let (lo, hi) = (pair[0].t, pair[1].t);
        let count = scan.records.iter().filter(|r| lo < r.t_star && r.t_star < hi).count();
        match count {
            0 => scan.anomalies.push(Anomaly::MissingExtremum {
                n: pair[0].index,
                lo,
                hi,
            }),
            1 => {}
            _ => scan.anomalies.push(Anomaly::ExtraExtrema {
                n: pair[0].index,
                count,
            }),
        }
    }
    Ok(scan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special_functions::{ComplexPoint, LogScaledComplex};
    use num_complex::Complex64;

    // cos(s − ½) restricted to the line is cosh(t): one minimum at 0
    struct Cosh;

    impl StripFunction for Cosh {
        fn eval(&self, s: ComplexPoint) -> Result<LogScaledComplex> {
            Ok((s.to_complex() - Complex64::new(0.5, 0.0)).cos().into())
        }
        fn reference_log_scale(&self, _t: f64) -> Result<f64> {
            Ok(0.0)
        }
    }

    #[test]
    fn cosh_has_one_positive_minimum() {
        let scan = find_extrema_of(&Cosh, (-1.03, 2.0), &DifferentiationScheme::default()).unwrap();
        assert_eq!(scan.records.len(), 1);
        let r = scan.records[0];
        assert!(r.t_star.abs() < 1e-9);
        assert_eq!(r.kind, ExtremumKind::Min);
        assert!(!r.theorem1_ok);
        assert!((r.eq17_lhs - 1.0).abs() < 1e-8);
    }

    #[test]
    fn empty_range_is_rejected() {
        assert!(find_extrema_of(&Cosh, (1.0, 1.0), &DifferentiationScheme::default()).is_err());
    }
}
