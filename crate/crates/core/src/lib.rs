//! Numerical laboratory for Riemann's ξ(s) and Ξ(t) = ξ(½ + it).
//!
//! The crate is organised bottom-up:
//!
//! * [`special_functions`] evaluates log Γ, ζ and ξ with underflow-safe scaling.
//! * [`critical_line`] restricts ξ to the critical line and differentiates it.
//! * [`zero_catalog`] locates and persists the zero ordinates t_n.
//! * [`product_form`] builds the conjugate-pair factors, deleted products and
//!   the local quadratic model of a deleted product.
//! * [`extrema_analysis`] finds the extrema of Ξ, checks their sign rule and
//!   runs the Hessian discriminant test of Re ξ.
//! * [`hypothetical`] plants an off-line zero quadruple and measures how the
//!   extrema of the resulting function behave.

// `!(x <= tol)` also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod critical_line;
pub mod error;
pub mod extrema_analysis;
pub mod hypothetical;
pub mod product_form;
pub mod roots;
pub mod special_functions;
pub mod zero_catalog;

pub use error::{Result, XiError};
pub use special_functions::{ComplexPoint, EvalConfig, LogScaledComplex};
