use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::factor::g_at;
use crate::error::Result;
use crate::special_functions::ComplexPoint;
use crate::zero_catalog::ZeroCatalog;

/// Above this ratio t_n/t_j a factor counts as far above t_j.
pub const FAR_ABOVE_RATIO: f64 = 2.0;
/// Below this ratio a factor counts as far below t_j.
pub const FAR_BELOW_RATIO: f64 = 0.5;

/// Where t_n sits relative to t_j.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    /// t_n ≫ t_j: the factor is close to a real constant below one.
    FarAbove,
    /// t_n ~ t_j.
    Comparable,
    /// t_n ≪ t_j: the factor is close to the real constant −(t_j² − t_n²)/(t_n² + ¼).
    FarBelow,
}

impl Regime {
    pub fn classify(t_n: f64, t_j: f64) -> Self {
        let r = t_n / t_j;
        if r > FAR_ABOVE_RATIO {
            Regime::FarAbove
        } else if r < FAR_BELOW_RATIO {
            Regime::FarBelow
        } else {
            Regime::Comparable
        }
    }

    /// 1, 2 or 3 in the order far above, comparable, far below.
    pub fn number(&self) -> u8 {
        match self {
            Regime::FarAbove => 1,
            Regime::Comparable => 2,
            Regime::FarBelow => 3,
        }
    }
}

/// g_n at the strip edges λ = ±½ of the line t = t_j.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegimeRow {
    pub n: usize,
    pub t_n: f64,
    pub regime: Regime,
    pub at_plus_half: Complex64,
    pub at_minus_half: Complex64,
}

impl RegimeRow {
    pub fn re(&self) -> f64 {
        self.at_plus_half.re
    }

    /// Largest |Im g_n| over λ = ±½.
    pub fn im_extent(&self) -> f64 {
        self.at_plus_half.im.abs().max(self.at_minus_half.im.abs())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegimeReport {
    pub j: usize,
    pub t_j: f64,
    pub rows: Vec<RegimeRow>,
}

impl RegimeReport {
    pub fn row(&self, n: usize) -> Option<&RegimeRow> {
        self.rows.iter().find(|r| r.n == n)
    }
}

pub fn regime_report(j: usize, catalog: &ZeroCatalog) -> Result<RegimeReport> {
    let t_j = catalog.t(j)?;
    let rows = catalog
        .ordinates()
        .iter()
        .filter(|z| z.index != j)
        .map(|z| RegimeRow {
            n: z.index,
            t_n: z.t,
            regime: Regime::classify(z.t, t_j),
            at_plus_half: g_at(z.t, ComplexPoint::from_lambda(0.5, t_j)),
            at_minus_half: g_at(z.t, ComplexPoint::from_lambda(-0.5, t_j)),
        })
        .collect();
    Ok(RegimeReport { j, t_j, rows })
}

/// Which of two competing readings of the n = 1 contribution the true value supports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FirstFactorReading {
    /// Real part close to −50.
    MinusFifty,
    /// Real part close to −5.0.
    MinusFive,
    Neither,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FirstFactorReport {
    pub j: usize,
    pub value: Complex64,
    pub reading: FirstFactorReading,
}

/// g_1 at λ = ½, t = t_j, compared against the two readings within 10%.
pub fn first_factor_reading(j: usize, catalog: &ZeroCatalog) -> Result<FirstFactorReport> {
    let t_j = catalog.t(j)?;
    let value = g_at(catalog.t(1)?, ComplexPoint::from_lambda(0.5, t_j));
    let near = |target: f64| (value.re - target).abs() <= 0.1 * target.abs();
    let reading = if near(-50.0) {
        FirstFactorReading::MinusFifty
    } else if near(-5.0) {
        FirstFactorReading::MinusFive
    } else {
        FirstFactorReading::Neither
    };
    Ok(FirstFactorReport { j, value, reading })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thresholds() {
        assert_eq!(Regime::classify(250.0, 100.0), Regime::FarAbove);
        assert_eq!(Regime::classify(200.0, 100.0), Regime::Comparable);
        assert_eq!(Regime::classify(50.0, 100.0), Regime::Comparable);
        assert_eq!(Regime::classify(40.0, 100.0), Regime::FarBelow);
        assert_eq!(Regime::FarBelow.number(), 3);
    }
}
