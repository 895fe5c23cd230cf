//! The product form of ξ over its zeros.
//!
//! ξ(s) = ½ ∏ g_n(s) with g_n the conjugate-pair factors. Deleting one
//! factor gives ξ_(j) = ξ/g_j, which near t_j behaves like
//! α_j(λ² − t² + γ_j + 2itλ).

mod deleted;
mod factor;
mod fit;
mod regime;
mod sums;
mod xi_star;

pub(crate) use deleted::deleted_many;
pub use deleted::{deleted_product, LimitPolicy, LIMIT_RADIUS, MIN_FACTOR};
pub(crate) use factor::g_at;
pub use factor::{g_factor, truncated_xi, FactorG};
pub use fit::{fit_alpha_gamma, fit_alpha_gamma_on, FitGrid, QuadraticFit};
pub use regime::{
    first_factor_reading, regime_report, FirstFactorReading, FirstFactorReport, Regime, RegimeReport, RegimeRow,
    FAR_ABOVE_RATIO, FAR_BELOW_RATIO,
};
pub use sums::{log_derivative_partial, second_log_derivative_partial};
pub use xi_star::{b_at_zero, xi_star, xi_star_by_deletion, xi_star_ratio};
