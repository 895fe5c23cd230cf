use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use xi_lab_core::critical_line::DifferentiationScheme;
use xi_lab_core::zero_catalog::DEFAULT_SCAN_STEP;
use xi_lab_core::{EvalConfig, XiError};

pub const CATALOG_ENV: &str = "XI_LAB_CATALOG";

/// Settings read from `--config`. Every field is optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub catalog: Option<PathBuf>,
    pub out: Option<PathBuf>,
    pub precision: Option<f64>,
    pub euler_maclaurin_terms: Option<usize>,
    pub euler_maclaurin_cutoff: Option<usize>,
    pub base_step: Option<f64>,
    pub richardson_levels: Option<usize>,
    pub scan_step: Option<f64>,
    pub product_terms: Option<usize>,
    pub lambda_points: Option<usize>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, XiError> {
        let text = std::fs::read_to_string(path)?;
        toml::from_str(&text).map_err(|e| XiError::InvalidConfig(format!("{}: {e}", path.display())))
    }
}

/// The effective configuration of one run.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub catalog: Option<PathBuf>,
    pub out: Option<PathBuf>,
    pub eval: EvalConfig,
    pub scheme: DifferentiationScheme,
    pub scan_step: f64,
    pub product_terms: usize,
    pub lambda_points: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            catalog: None,
            out: None,
            eval: EvalConfig::default(),
            scheme: DifferentiationScheme::default(),
            scan_step: DEFAULT_SCAN_STEP,
            product_terms: 200,
            lambda_points: 101,
        }
    }
}

/// Values given on the command line.
#[derive(Debug, Default)]
pub struct FlagConfig {
    pub catalog: Option<PathBuf>,
    pub out: Option<PathBuf>,
    pub precision: Option<f64>,
    pub config: Option<PathBuf>,
}

impl RunConfig {
    /// flags > config file > environment > defaults
    pub fn resolve(flags: FlagConfig, env_catalog: Option<PathBuf>) -> Result<Self, XiError> {
        let file = match &flags.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        let mut cfg = Self {
            catalog: flags.catalog.or(file.catalog).or(env_catalog),
            out: flags.out.or(file.out),
            ..Self::default()
        };
        if let Some(p) = flags.precision.or(file.precision) {
            cfg.eval.target_relative_error = p;
        }
        if let Some(n) = file.euler_maclaurin_terms {
            cfg.eval.euler_maclaurin_terms = n;
        }
        if let Some(n) = file.euler_maclaurin_cutoff {
            cfg.eval.euler_maclaurin_cutoff = n;
        }
        if let Some(h) = file.base_step {
            cfg.scheme.base_step = h;
        }
        if let Some(n) = file.richardson_levels {
            cfg.scheme.richardson_levels = n;
        }
        if let Some(s) = file.scan_step {
            cfg.scan_step = s;
        }
        if let Some(n) = file.product_terms {
            cfg.product_terms = n;
        }
        if let Some(n) = file.lambda_points {
            cfg.lambda_points = n;
        }
        cfg.eval.validate()?;
        cfg.scheme.validate()?;
        if cfg.lambda_points < 2 {
            return Err(XiError::InvalidConfig("lambda_points must be at least 2".into()));
        }
        Ok(cfg)
    }
}
