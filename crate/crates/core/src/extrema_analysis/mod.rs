//! Local extrema of Ξ(t), the sign rule they obey and the saddle structure
//! of Re ξ around them.

mod find;
mod saddle;
mod theorem1;

pub use find::{find_extrema, find_extrema_of, Anomaly, ExtremaScan, ExtremumKind, ExtremumRecord, EXTREMA_GRID_STEP};
pub use saddle::{saddle_test, saddle_test_of, SaddleReport, EXTREMUM_TOLERANCE, HESSIAN_LEVELS, HESSIAN_STEP};
pub use theorem1::{check_theorem1, Theorem1Summary};
