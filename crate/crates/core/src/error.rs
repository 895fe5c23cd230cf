use thiserror::Error;

/// Errors raised by the xi-lab numerical routines.
#[derive(Debug, Error)]
pub enum XiError {
    #[error("pole at s = {sigma} + {t}i")]
    Pole { sigma: f64, t: f64 },

    #[error("{context}: achieved error {achieved:e} exceeds target {target:e}")]
    Accuracy {
        context: &'static str,
        achieved: f64,
        target: f64,
    },

    #[error("Xi({t}) carries an imaginary residue of {ratio:e} relative to its scale")]
    RealnessViolation { t: f64, ratio: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("scan step {step} is too coarse near t = {t}: two sign changes inside one step")]
    StepTooCoarse { t: f64, step: f64 },

    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("catalog schema error: {0}")]
    Schema(String),

    #[error("catalog ordinates are not strictly increasing at n = {index}")]
    Monotonicity { index: usize },

    #[error("zero index {0} is not in the catalog")]
    UnknownIndex(usize),

    #[error("s lies {distance:e} from the zero of factor {j}")]
    NearPoleOfFactor { j: usize, distance: f64 },

    #[error("quadratic fit for j = {j} is degenerate (slope {slope:e} below {threshold:e})")]
    FitDegenerate { j: usize, slope: f64, threshold: f64 },

    #[error("t = {t} is not an extremum (relative slope {relative_slope:e})")]
    NotAnExtremum { t: f64, relative_slope: f64 },

    #[error("extremum quartic has a negative discriminant ({0:e})")]
    ComplexRoot(f64),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = XiError> = std::result::Result<T, E>;
