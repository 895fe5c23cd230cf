use serde::{Deserialize, Serialize};

use super::model::{big_xi_h, xi_h, HypotheticalModel};
use crate::critical_line::{derivatives_of, DifferentiationScheme, StripFunction};
use crate::error::{Result, XiError};
use crate::extrema_analysis::{find_extrema_of, ExtremumRecord};
use crate::roots::brent;
use crate::special_functions::ComplexPoint;
use crate::zero_catalog::ZeroCatalog;

/// Half-width of the window around t_k searched for the nearby extremum.
const EXTREMUM_WINDOW: f64 = 0.5;

/// Ξ̂′_H/Ξ̂_H and Ξ̂″_H/Ξ̂_H at t_k.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DerivativeRatios {
    pub r1: f64,
    pub r2: f64,
    /// r2 = r1² + 2/λ_k² + remainder
    pub r1_squared: f64,
    pub two_over_lambda_squared: f64,
    pub remainder: f64,
    /// The same ratios from differentiating the model itself.
    pub r1_numeric: f64,
    pub r2_numeric: f64,
}

/// Closed-form ratios of the quartic-times-quadratic model at t_k.
pub fn closed_form_ratios(t_k: f64, lambda_k: f64, gamma: f64) -> (f64, f64) {
    let (t2, l2) = (t_k * t_k, lambda_k * lambda_k);
    let w = 4.0 * t2 + l2;
    let d = t2 - gamma;
    let r1 = 4.0 * t_k / w + 2.0 * t_k / d;
    let r2 = r1 * r1 + 2.0 / l2 + 2.0 / w - 16.0 * t2 / (w * w) + 2.0 / d - 4.0 * t2 / (d * d);
    (r1, r2)
}

pub fn derivative_ratios(model: &HypotheticalModel, scheme: &DifferentiationScheme) -> Result<DerivativeRatios> {
    let (t_k, lambda_k) = (model.pair.t_k, model.pair.lambda_k);
    let (r1, r2) = closed_form_ratios(t_k, lambda_k, model.fit.gamma);
    let d = derivatives_of(model, t_k, scheme)?;
    let two_over_lambda_squared = 2.0 / (lambda_k * lambda_k);
    Ok(DerivativeRatios {
        r1,
        r2,
        r1_squared: r1 * r1,
        two_over_lambda_squared,
        remainder: r2 - r1 * r1 - two_over_lambda_squared,
        r1_numeric: d.scaled_d1 / d.scaled_value,
        r2_numeric: d.scaled_d2 / d.scaled_value,
    })
}

/// The extremum of Ξ_H next to t_k, from the leading-order shift, the exact
/// roots of the quartic in t and a numerical search.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShiftedExtremum {
    pub t_k: f64,
    /// 3λ_k²/(2t_k)
    pub delta_leading: f64,
    pub t_star_leading: f64,
    /// t⁴ − 2(γ_k + 7λ_k²)t_k² + (λ_k² + γ_k)²
    pub discriminant: f64,
    /// Roots t* with t*² = (2t_k² + γ_k − 2λ_k² ± √discriminant)/3.
    pub t_star_plus: Option<f64>,
    pub t_star_minus: Option<f64>,
    /// The quartic root closest to t_k.
    pub t_star_quartic: f64,
    /// The "+" root with (λ_k² − γ_k)² in the discriminant, as sometimes printed.
    pub t_star_printed: Option<f64>,
    pub numeric: ExtremumRecord,
    /// t_k − t* for the numerically located extremum.
    pub delta_numeric: f64,
}

fn positive_sqrt(u: f64) -> Option<f64> {
    (u > 0.0).then(|| u.sqrt())
}

pub fn shifted_extremum(model: &HypotheticalModel, scheme: &DifferentiationScheme) -> Result<ShiftedExtremum> {
    let (t_k, l) = (model.pair.t_k, model.pair.lambda_k);
    let gamma = model.fit.gamma;
    let (t2, l2) = (t_k * t_k, l * l);
    let discriminant = t2 * t2 - 2.0 * (gamma + 7.0 * l2) * t2 + (l2 + gamma).powi(2);
    if discriminant < 0.0 {
        return Err(XiError::ComplexRoot(discriminant));
    }
    let base = 2.0 * t2 + gamma - 2.0 * l2;
    let t_star_plus = positive_sqrt((base + discriminant.sqrt()) / 3.0);
    let t_star_minus = positive_sqrt((base - discriminant.sqrt()) / 3.0);
    let t_star_quartic = [t_star_plus, t_star_minus]
        .into_iter()
        .flatten()
        .min_by(|a, b| (a - t_k).abs().total_cmp(&(b - t_k).abs()))
        .ok_or(XiError::ComplexRoot(discriminant))?;
    let printed_disc = t2 * t2 - 2.0 * (gamma + 7.0 * l2) * t2 + (l2 - gamma).powi(2);
    let t_star_printed = (printed_disc >= 0.0)
        .then(|| positive_sqrt((base + printed_disc.sqrt()) / 3.0))
        .flatten();

    let scan = find_extrema_of(model, (t_k - EXTREMUM_WINDOW, t_k + EXTREMUM_WINDOW), scheme)?;
    let numeric = scan
        .records
        .into_iter()
        .min_by(|a, b| (a.t_star - t_k).abs().total_cmp(&(b.t_star - t_k).abs()))
        .ok_or(XiError::NoSignChange {
            lo: t_k - EXTREMUM_WINDOW,
            hi: t_k + EXTREMUM_WINDOW,
        })?;

    let delta_leading = 3.0 * l2 / (2.0 * t_k);
    Ok(ShiftedExtremum {
        t_k,
        delta_leading,
        t_star_leading: t_k - delta_leading,
        discriminant,
        t_star_plus,
        t_star_minus,
        t_star_quartic,
        t_star_printed,
        delta_numeric: t_k - numeric.t_star,
        numeric,
    })
}

/// A closed-form value set against the quantity it claims to give.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FormulaCheck {
    pub label: String,
    pub closed_form: f64,
    pub reference: f64,
    pub relative_error: f64,
}

impl FormulaCheck {
    fn new(label: &str, closed_form: f64, reference: f64) -> Self {
        Self {
            label: label.to_string(),
            closed_form,
            reference,
            relative_error: ((closed_form - reference) / reference).abs(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Positive,
    Negative,
}

impl Verdict {
    fn of(x: f64) -> Self {
        if x > 0.0 {
            Self::Positive
        } else {
            Self::Negative
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Lemma3Report {
    pub t_k: f64,
    /// Ξ_H(t_k), Ξ′_H(t_k), Ξ″_H(t_k) from the model.
    pub value: f64,
    pub first_deriv: f64,
    pub second_deriv: f64,
    pub ratio_numeric: f64,
    pub ratio_closed: f64,
    pub verdict: Verdict,
    pub closed_verdict: Verdict,
    /// Closed forms for Ξ̂_H(t_k), b(t_k), Ξ̂′_H(t_k) and a(t_k), each against the model.
    pub checks: Vec<FormulaCheck>,
}

pub fn lemma3_check(model: &HypotheticalModel, scheme: &DifferentiationScheme) -> Result<Lemma3Report> {
    let (t, l) = (model.pair.t_k, model.pair.lambda_k);
    let (alpha, gamma) = (model.fit.alpha, model.fit.gamma);
    let (t2, l2) = (t * t, l * l);
    let d = derivatives_of(model, t, scheme)?;
    let (value, d1, d2) = (d.xi_value.to_complex().re, d.d1, d.d2);
    let (r1, r2) = closed_form_ratios(t, l, gamma);
    let b = -d1;
    let a = -d2 / 2.0;
    let value_closed = -alpha / t2.powi(2) * l2 * (4.0 * t2 + l2) * (t2 - gamma);

    let checks = vec![
        FormulaCheck::new("value_at_tk", value_closed, value),
        FormulaCheck::new("value_at_tk_leading", -4.0 * alpha * l2 / t2 * (t2 - gamma), value),
        FormulaCheck::new("slope_ratio_times_value", r1 * value_closed, d1),
        FormulaCheck::new(
            "slope_36_coefficient",
            -36.0 * alpha * l2 / (t2 * t) * (3.0 * t2 - gamma),
            d1,
        ),
        FormulaCheck::new(
            "b_at_tk",
            2.0 * alpha * l2 / (t2 * t) * (6.0 * t2 - 2.0 * gamma + l2),
            b,
        ),
        FormulaCheck::new(
            "b_at_tk_leading",
            4.0 * alpha * l2 / (t2 * t) * (3.0 * t2 - 2.0 * gamma),
            b,
        ),
        FormulaCheck::new("tangent_slope", -12.0 * alpha * l2 / t, d1),
        FormulaCheck::new(
            "a_at_tk",
            alpha / t2.powi(2) * (4.0 * t2 * t2 - 2.0 * (2.0 * gamma - 7.0 * l2) * t2 - (2.0 * gamma - l2) * l2),
            a,
        ),
        FormulaCheck::new(
            "a_at_tk_leading",
            4.0 * alpha * (1.0 - (2.0 * gamma - 7.0 * l2) / (2.0 * t2)),
            a,
        ),
        FormulaCheck::new("second_ratio", r2, d2 / value),
    ];
    let ratio_numeric = d.scaled_d2 / d.scaled_value;
    Ok(Lemma3Report {
        t_k: t,
        value,
        first_deriv: d1,
        second_deriv: d2,
        ratio_numeric,
        ratio_closed: r2,
        verdict: Verdict::of(ratio_numeric),
        closed_verdict: Verdict::of(r2),
        checks,
    })
}

/// Zero set and critical points of λ ↦ Im ξ_H(½ + λ + it_k), and a
/// least-squares fit of c·λ(λ² − λ_k²) to it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ImCrossSection {
    pub t: f64,
    pub zeros: Vec<f64>,
    pub critical_points: Vec<f64>,
    pub cubic_coefficient: f64,
    /// max |Im − c·λ(λ² − λ_k²)| / max |Im| on the grid.
    pub cubic_residual: f64,
    /// 4α_k t_k(γ_k − 5t_k²)/t_k⁴
    pub printed_coefficient: f64,
    /// 2α_k t_k(2γ_k − 6t_k² − λ_k²)/t_k⁴, the λ³ coefficient of the surrogate product.
    pub derived_coefficient: f64,
}

const CROSS_SECTION_EDGE: f64 = 0.49;
const CROSS_SECTION_POINTS: usize = 197;
const LAMBDA_STEP: f64 = 1e-5;

fn roots_on_grid<F>(f: F, grid: &[f64]) -> Result<Vec<f64>>
where
    F: Fn(f64) -> Result<f64>,
{
    let values = grid.iter().map(|&x| f(x)).collect::<Result<Vec<f64>>>()?;
    let mut roots = Vec::new();
    for i in 0..grid.len() {
        if values[i] == 0.0 {
            roots.push(grid[i]);
        } else if i > 0 && values[i - 1] != 0.0 && values[i - 1].signum() != values[i].signum() {
            roots.push(brent(&f, grid[i - 1], grid[i], 1e-12)?.x);
        }
    }
    Ok(roots)
}

pub fn im_cross_section(model: &HypotheticalModel) -> Result<ImCrossSection> {
    let t = model.pair.t_k;
    let reference = model.reference_log_scale(t)?;
    let im = |l: f64| -> Result<f64> { Ok(xi_h(model, ComplexPoint::from_lambda(l, t))?.descaled(reference).im) };
    let slope = |l: f64| -> Result<f64> { Ok((im(l + LAMBDA_STEP)? - im(l - LAMBDA_STEP)?) / (2.0 * LAMBDA_STEP)) };
    // offset by a quarter step so grid points do not land on the exact zeros
    let step = 2.0 * CROSS_SECTION_EDGE / (CROSS_SECTION_POINTS - 1) as f64;
    let grid: Vec<f64> = (0..CROSS_SECTION_POINTS)
        .map(|i| -CROSS_SECTION_EDGE + step * (i as f64 + 0.25))
        .filter(|l| l.abs() < 0.5)
        .collect();

    let (lk, tk) = (model.pair.lambda_k, model.pair.t_k);
    let (alpha, gamma) = (model.fit.alpha, model.fit.gamma);
    let ys = grid.iter().map(|&l| im(l)).collect::<Result<Vec<f64>>>()?;
    let basis: Vec<f64> = grid.iter().map(|&l| l * (l * l - lk * lk)).collect();
    let c = basis.iter().zip(&ys).map(|(x, y)| x * y).sum::<f64>() / basis.iter().map(|x| x * x).sum::<f64>();
    let misfit = basis
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - c * x).abs())
        .fold(0.0, f64::max);
    let largest = ys.iter().fold(0.0f64, |m, y| m.max(y.abs()));
    let cubic_coefficient = c.signum() * (c.abs().ln() + reference).exp();
    Ok(ImCrossSection {
        t,
        zeros: roots_on_grid(im, &grid)?,
        critical_points: roots_on_grid(slope, &grid)?,
        cubic_coefficient,
        cubic_residual: misfit / largest,
        printed_coefficient: 4.0 * alpha * tk * (gamma - 5.0 * tk * tk) / tk.powi(4),
        derived_coefficient: 2.0 * alpha * tk * (2.0 * gamma - 6.0 * tk * tk - lk * lk) / tk.powi(4),
    })
}

/// Ξ_H(t_k) with and without the (k+1)-st factor also removed.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FootnoteReport {
    pub t: f64,
    pub without_next: f64,
    pub with_next: f64,
    /// with_next / without_next
    pub ratio: f64,
    pub polarity_changed: bool,
    /// t_k/2, the magnitude change one might expect.
    pub suggested_factor: f64,
}

pub fn footnote_report(model: &HypotheticalModel, catalog: &ZeroCatalog) -> Result<FootnoteReport> {
    let base = HypotheticalModel {
        next_deleted: None,
        ..*model
    };
    let next = base.deleting_next(catalog)?;
    let t = model.pair.t_k;
    let without_next = big_xi_h(&base, t)?;
    let with_next = big_xi_h(&next, t)?;
    let ratio = with_next / without_next;
    Ok(FootnoteReport {
        t,
        without_next,
        with_next,
        ratio,
        polarity_changed: ratio < 0.0,
        suggested_factor: t / 2.0,
    })
}
