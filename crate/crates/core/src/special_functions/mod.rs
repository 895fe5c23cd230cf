//! Log Γ, analytically continued ζ and the completed ξ function.
//!
//! Every value that can leave the range of an `f64` is returned as a
//! [`LogScaledComplex`]. Plain complex numbers are only used for quantities
//! of order one (ζ itself, individual product factors).

mod bernoulli;
mod complex_point;
mod config;
mod gamma;
mod log_scaled;
mod xi;
mod zeta;

pub use complex_point::ComplexPoint;
pub use config::{EvalConfig, ESTIMATE_SLACK};
pub use gamma::{ln_gamma, ln_gamma_complex};
pub use log_scaled::LogScaledComplex;
pub use xi::{xi, xi_detailed, xi_envelope_log, XiEvaluation};
pub use zeta::{zeta, zeta_detailed, ZetaEvaluation};
