//! A hypothetical ξ_H with an off-line zero quadruple ½ ± λ_k ± it_k planted
//! in place of the k-th conjugate pair, and the quantities that describe its
//! behaviour near t_k.

mod analysis;
mod model;

pub use analysis::{
    closed_form_ratios, derivative_ratios, footnote_report, im_cross_section, lemma3_check, shifted_extremum,
    DerivativeRatios, FootnoteReport, FormulaCheck, ImCrossSection, Lemma3Report, ShiftedExtremum, Verdict,
};
pub use model::{
    approx_big_xi_h, big_xi_h, f_factor, xi_h, DeletedSource, FactorMode, HypotheticalModel, HypotheticalZeroPair,
};
