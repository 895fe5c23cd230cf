use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::critical_line::{restrict_to_line, StripFunction};
use crate::error::{Result, XiError};
use crate::product_form::{deleted_many, fit_alpha_gamma, g_at, QuadraticFit};
use crate::special_functions::{xi_detailed, xi_envelope_log, ComplexPoint, EvalConfig, LogScaledComplex};
use crate::zero_catalog::ZeroCatalog;

/// Planted zeros ½ ± λ_k ± it_k.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HypotheticalZeroPair {
    pub k: usize,
    pub t_k: f64,
    pub lambda_k: f64,
}

impl HypotheticalZeroPair {
    pub fn new(k: usize, t_k: f64, lambda_k: f64) -> Result<Self> {
        if !(lambda_k > 0.0 && lambda_k < 0.5) {
            return Err(XiError::InvalidConfig(format!(
                "lambda_k must lie strictly between 0 and 1/2, got {lambda_k}"
            )));
        }
        if !(t_k > 0.0 && t_k.is_finite()) {
            return Err(XiError::InvalidConfig(format!("t_k must be positive, got {t_k}")));
        }
        Ok(Self { k, t_k, lambda_k })
    }

    pub fn from_catalog(k: usize, lambda_k: f64, catalog: &ZeroCatalog) -> Result<Self> {
        Self::new(k, catalog.t(k)?, lambda_k)
    }

    /// ρ_k, ρ′_k, ρ̄_k, ρ̄′_k
    pub fn zeros(&self) -> [Complex64; 4] {
        let (l, t) = (self.lambda_k, self.t_k);
        [
            Complex64::new(0.5 + l, t),
            Complex64::new(0.5 - l, t),
            Complex64::new(0.5 + l, -t),
            Complex64::new(0.5 - l, -t),
        ]
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorMode {
    /// ∏ (1 − s/ρ) over the four planted zeros.
    #[default]
    Exact,
    /// The same product with |ρ_k|²|ρ′_k|² replaced by t_k⁴.
    Approx,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeletedSource {
    /// ξ(s)/g_k(s).
    #[default]
    True,
    /// α_k(λ² − t² + γ_k + 2itλ).
    Surrogate,
}

/// ξ_H(s) = f_k(s) ξ_(k)(s).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HypotheticalModel {
    pub pair: HypotheticalZeroPair,
    pub fit: QuadraticFit,
    pub mode: FactorMode,
    pub source: DeletedSource,
    /// t_{k+1} when that factor is removed as well.
    pub next_deleted: Option<f64>,
    pub cfg: EvalConfig,
}

impl HypotheticalModel {
    pub fn new(pair: HypotheticalZeroPair, fit: QuadraticFit, cfg: EvalConfig) -> Self {
        Self {
            pair,
            fit,
            mode: FactorMode::default(),
            source: DeletedSource::default(),
            next_deleted: None,
            cfg,
        }
    }

    /// Model with α_k, γ_k fitted to the true deleted product.
    pub fn fitted(k: usize, lambda_k: f64, catalog: &ZeroCatalog, cfg: &EvalConfig) -> Result<Self> {
        let pair = HypotheticalZeroPair::from_catalog(k, lambda_k, catalog)?;
        Ok(Self::new(pair, fit_alpha_gamma(k, catalog, cfg)?, *cfg))
    }

    /// Model with externally supplied α_k, γ_k.
    pub fn with_constants(pair: HypotheticalZeroPair, alpha: f64, gamma: f64, cfg: &EvalConfig) -> Self {
        Self::new(pair, QuadraticFit::from_constants(pair.k, pair.t_k, alpha, gamma), *cfg)
    }

    pub fn with_mode(self, mode: FactorMode) -> Self {
        Self { mode, ..self }
    }

    pub fn with_source(self, source: DeletedSource) -> Self {
        Self { source, ..self }
    }

    pub fn deleting_next(self, catalog: &ZeroCatalog) -> Result<Self> {
        Ok(Self {
            next_deleted: Some(catalog.t(self.pair.k + 1)?),
            ..self
        })
    }

    pub fn f_factor(&self, s: ComplexPoint) -> Complex64 {
        f_factor(self, s)
    }

    fn deleted_ordinates(&self) -> Vec<f64> {
        std::iter::once(self.pair.t_k).chain(self.next_deleted).collect()
    }

    /// ξ_(k)(s) from the configured source.
    pub fn deleted(&self, s: ComplexPoint) -> Result<LogScaledComplex> {
        match self.source {
            DeletedSource::True => deleted_many(&self.deleted_ordinates(), s, &self.cfg),
            DeletedSource::Surrogate => {
                let base = self.fit.model_scaled(s);
                Ok(match self.next_deleted {
                    Some(t) => base / g_at(t, s),
                    None => base,
                })
            }
        }
    }
}

/// f_k(s) in the model's factor mode.
pub fn f_factor(model: &HypotheticalModel, s: ComplexPoint) -> Complex64 {
    let pair = &model.pair;
    match model.mode {
        FactorMode::Exact => {
            let z = s.to_complex();
            pair.zeros().iter().map(|rho| (rho - z) / rho).product()
        }
        FactorMode::Approx => {
            let (l, t) = (s.lambda(), s.t);
            let (lk, tk) = (pair.lambda_k, pair.t_k);
            let base = l * l - lk * lk;
            let minus = Complex64::new(base - (t - tk) * (t - tk), 2.0 * (t - tk) * l);
            let plus = Complex64::new(base - (t + tk) * (t + tk), 2.0 * (t + tk) * l);
            minus * plus / tk.powi(4)
        }
    }
}

pub fn xi_h(model: &HypotheticalModel, s: ComplexPoint) -> Result<LogScaledComplex> {
    Ok(model.deleted(s)? * f_factor(model, s))
}

/// Ξ_H(t) = ξ_H(½ + it).
pub fn big_xi_h(model: &HypotheticalModel, t: f64) -> Result<f64> {
    Ok(restrict_to_line(model, t)?.to_complex().re)
}

/// −α_k (t² − γ_k) t_k⁻⁴ [(t − t_k)² + λ_k²][(t + t_k)² + λ_k²]
pub fn approx_big_xi_h(model: &HypotheticalModel, t: f64) -> f64 {
    let (lk, tk) = (model.pair.lambda_k, model.pair.t_k);
    let QuadraticFit { alpha, gamma, .. } = model.fit;
    let p = (t - tk) * (t - tk) + lk * lk;
    let q = (t + tk) * (t + tk) + lk * lk;
    -alpha * (t * t - gamma) / tk.powi(4) * p * q
}

impl StripFunction for HypotheticalModel {
    fn eval(&self, s: ComplexPoint) -> Result<LogScaledComplex> {
        xi_h(self, s)
    }

    fn reference_log_scale(&self, t: f64) -> Result<f64> {
        match self.source {
            DeletedSource::True => xi_envelope_log(ComplexPoint::on_critical_line(t)),
            DeletedSource::Surrogate => Ok(self.fit.reference_log_scale),
        }
    }

    fn relative_noise(&self, t: f64) -> Result<f64> {
        let s = ComplexPoint::on_critical_line(t);
        let f = f_factor(self, s).norm();
        match self.source {
            DeletedSource::True => {
                // the contour keeps every divisor at least as large as on its circle
                let divisor: f64 = self
                    .deleted_ordinates()
                    .iter()
                    .map(|&tn| g_at(tn, s).norm().max(0.2 * tn / (tn * tn + 0.25)))
                    .product();
                Ok(xi_detailed(s, &self.cfg)?.error_estimate * f / divisor)
            }
            DeletedSource::Surrogate => {
                let v = self.deleted(s)?.descaled(self.fit.reference_log_scale).norm();
                Ok(64.0 * f64::EPSILON * (f * v).max(f64::MIN_POSITIVE))
            }
        }
    }
}
