use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ZeroOrdinate;
use crate::critical_line::big_xi;
use crate::error::{Result, XiError};
use crate::roots::brent;
use crate::special_functions::{xi_envelope_log, ComplexPoint, EvalConfig};

pub const DEFAULT_SCAN_STEP: f64 = 0.05;
pub const MAX_SCAN_STEP: f64 = 0.2;
pub const REFINE_TOLERANCE: f64 = 1e-9;

/// An interval on which Ξ changes sign exactly once.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

impl Bracket {
    pub fn contains(&self, t: f64) -> bool {
        self.lo <= t && t <= self.hi
    }
}

fn sign_of_big_xi(t: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(big_xi(t, cfg)?.real_sign())
}

/// Bracket every sign change of Ξ on `range`.
///
/// Ξ is sampled every `step / 2`; a sign change in both halves of one step
/// means zeros may be closer than the scan can resolve.
pub fn scan(range: (f64, f64), step: f64, cfg: &EvalConfig) -> Result<Vec<Bracket>> {
    let (lo, hi) = range;
    if !(step > 0.0 && step <= MAX_SCAN_STEP) {
        return Err(XiError::InvalidConfig(format!(
            "scan step must lie in (0, {MAX_SCAN_STEP}], got {step}"
        )));
    }
    if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
        return Err(XiError::InvalidConfig(format!("invalid scan range ({lo}, {hi})")));
    }
    if lo == hi {
        return Ok(Vec::new());
    }
    let half = step / 2.0;
    let n = ((hi - lo) / half).ceil() as usize;
    let points: Vec<f64> = (0..=n)
        .map(|i| if i == n { hi } else { lo + half * i as f64 })
        .collect();
    let signs = points
        .par_iter()
        .map(|&t| sign_of_big_xi(t, cfg))
        .collect::<Result<Vec<f64>>>()?;

    let mut brackets: Vec<Bracket> = Vec::new();
    let mut last_change: Option<usize> = None;
    for i in 1..points.len() {
        let (a, b) = (signs[i - 1], signs[i]);
        if a == 0.0 {
            // a sample landed on a zero; the zero-width bracket was pushed already
            continue;
        }
        if b == 0.0 || a != b {
            if let Some(prev) = last_change {
                // two changes inside one step of width 2·half
                if i - prev < 2 {
                    return Err(XiError::StepTooCoarse { t: points[i], step });
                }
            }
            last_change = Some(i);
            let bracket = if b == 0.0 {
                Bracket {
                    lo: points[i],
                    hi: points[i],
                }
            } else {
                Bracket {
                    lo: points[i - 1],
                    hi: points[i],
                }
            };
            brackets.push(bracket);
        }
    }
    if signs[0] == 0.0 {
        brackets.insert(
            0,
            Bracket {
                lo: points[0],
                hi: points[0],
            },
        );
    }
    Ok(brackets)
}

/// Refine a bracket to a zero ordinate with `half_width ≤ 1e−9`.
///
/// Ξ is divided by its envelope at the bracket midpoint, a fixed factor,
/// so the refined function stays continuous and of order one.
pub fn refine(bracket: Bracket, index: usize, cfg: &EvalConfig) -> Result<ZeroOrdinate> {
    let mid = 0.5 * (bracket.lo + bracket.hi);
    let reference = xi_envelope_log(ComplexPoint::on_critical_line(mid))?;
    let root = brent(
        |t| Ok(big_xi(t, cfg)?.descaled(reference).re),
        bracket.lo,
        bracket.hi,
        REFINE_TOLERANCE,
    )?;
    Ok(ZeroOrdinate {
        index,
        t: root.x,
        half_width: root.half_width,
    })
}

/// Refine brackets in parallel, numbering them from `first_index`.
pub fn refine_all(brackets: &[Bracket], first_index: usize, cfg: &EvalConfig) -> Result<Vec<ZeroOrdinate>> {
    brackets
        .par_iter()
        .enumerate()
        .map(|(i, b)| refine(*b, first_index + i, cfg))
        .collect()
}
