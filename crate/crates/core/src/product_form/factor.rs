use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, XiError};
use crate::special_functions::{ComplexPoint, LogScaledComplex};
use crate::zero_catalog::ZeroCatalog;

/// The conjugate-pair factor (1 − s/ρ_n)(1 − s/ρ̄_n) with ρ_n = ½ + it_n.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactorG {
    pub n: usize,
    pub t_n: f64,
}

impl FactorG {
    pub fn from_catalog(n: usize, catalog: &ZeroCatalog) -> Result<Self> {
        Ok(Self { n, t_n: catalog.t(n)? })
    }

    /// (λ² + t_n² − t² + 2itλ) / (t_n² + ¼)
    pub fn eval(&self, s: ComplexPoint) -> Complex64 {
        g_at(self.t_n, s)
    }

    pub fn zero(&self) -> ComplexPoint {
        ComplexPoint::on_critical_line(self.t_n)
    }
}

pub(crate) fn g_at(t_n: f64, s: ComplexPoint) -> Complex64 {
    let (l, t) = (s.lambda(), s.t);
    // t_n² − t² factored to keep the zero exact at t = t_n
    let re = l * l + (t_n - t) * (t_n + t);
    Complex64::new(re, 2.0 * t * l) / (t_n * t_n + 0.25)
}

/// g_n(s) for the n-th catalogued zero.
pub fn g_factor(n: usize, s: ComplexPoint, catalog: &ZeroCatalog) -> Result<Complex64> {
    Ok(FactorG::from_catalog(n, catalog)?.eval(s))
}

/// ½ ∏_{n ≤ N} g_n(s), accumulated without underflow.
pub fn truncated_xi(s: ComplexPoint, n_max: usize, catalog: &ZeroCatalog) -> Result<LogScaledComplex> {
    if n_max > catalog.len() {
        return Err(XiError::UnknownIndex(n_max));
    }
    Ok(catalog.ordinates()[..n_max]
        .iter()
        .fold(LogScaledComplex::from_real(0.5), |acc, z| acc * g_at(z.t, s)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_vanishes_at_its_zeros_and_is_one_at_origin() {
        let g = FactorG {
            n: 7,
            t_n: 40.918_719_012_147_5,
        };
        assert_eq!(g.eval(g.zero()), Complex64::new(0.0, 0.0));
        assert_eq!(g.eval(g.zero().conj()), Complex64::new(0.0, 0.0));
        let one = g.eval(ComplexPoint::new(0.0, 0.0));
        assert!((one - 1.0).norm() < 1e-15);
    }

    #[test]
    fn rational_form_matches_product_of_linear_factors() {
        let t_n = 21.022;
        let rho = Complex64::new(0.5, t_n);
        let s = ComplexPoint::new(0.3, 17.0);
        let z = s.to_complex();
        let direct = (1.0 - z / rho) * (1.0 - z / rho.conj());
        assert!((g_at(t_n, s) - direct).norm() < 1e-14);
    }
}
