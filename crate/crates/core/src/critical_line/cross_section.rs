use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{StripFunction, Xi};
use crate::error::{Result, XiError};
use crate::special_functions::{ComplexPoint, EvalConfig};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossSectionRow {
    pub lambda: f64,
    pub re: f64,
    pub im: f64,
}

/// f(½ + λ + it) along a λ grid, divided by `exp(reference_log_scale)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossSection {
    pub t: f64,
    pub reference_log_scale: f64,
    pub rows: Vec<CrossSectionRow>,
}

impl CrossSection {
    pub fn lambdas(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.lambda).collect()
    }

    pub fn max_abs_re(&self) -> f64 {
        self.rows.iter().fold(0.0, |m, r| m.max(r.re.abs()))
    }

    pub fn max_abs_im(&self) -> f64 {
        self.rows.iter().fold(0.0, |m, r| m.max(r.im.abs()))
    }
}

/// `n` evenly spaced λ values on [lo, hi].
pub fn lambda_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![0.5 * (lo + hi)],
        _ => (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect(),
    }
}

pub fn cross_section_of<F: StripFunction + ?Sized>(f: &F, t: f64, lambda_grid: &[f64]) -> Result<CrossSection> {
    if let Some(bad) = lambda_grid.iter().find(|l| !(l.abs() <= 0.5)) {
        return Err(XiError::InvalidConfig(format!(
            "cross-section lambda {bad} lies outside [-0.5, 0.5]"
        )));
    }
    let reference = f.reference_log_scale(t)?;
    let rows = lambda_grid
        .par_iter()
        .map(|&lambda| {
            let z = f.eval(ComplexPoint::from_lambda(lambda, t))?.descaled(reference);
            Ok(CrossSectionRow {
                lambda,
                re: z.re,
                im: z.im,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CrossSection {
        t,
        reference_log_scale: reference,
        rows,
    })
}

/// Re and Im of ξ(½ + λ + it) across the strip.
pub fn cross_section(t: f64, lambda_grid: &[f64], cfg: &EvalConfig) -> Result<CrossSection> {
    cross_section_of(&Xi::new(*cfg), t, lambda_grid)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_endpoints() {
        let g = lambda_grid(-0.5, 0.5, 11);
        assert_eq!(g.len(), 11);
        assert_eq!(g[0], -0.5);
        assert_eq!(g[10], 0.5);
        assert!((g[5]).abs() < 1e-16);
    }

    #[test]
    fn outside_strip_is_rejected() {
        let r = cross_section(20.0, &[0.0, 0.6], &EvalConfig::default());
        assert!(matches!(r, Err(XiError::InvalidConfig(_))));
    }
}
