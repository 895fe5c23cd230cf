use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;
use xi_lab_core::critical_line::lambda_grid;
use xi_lab_core::extrema_analysis::{
    check_theorem1, find_extrema, find_extrema_of, saddle_test, saddle_test_of, ExtremumKind, ExtremumRecord,
};
use xi_lab_core::hypothetical::{
    approx_big_xi_h, big_xi_h, derivative_ratios, f_factor, footnote_report, im_cross_section, lemma3_check,
    shifted_extremum, xi_h, DerivativeRatios, FootnoteReport, HypotheticalModel, HypotheticalZeroPair, ImCrossSection,
    Lemma3Report, ShiftedExtremum,
};
use xi_lab_core::product_form::{deleted_product, g_factor, LimitPolicy};
use xi_lab_core::special_functions::xi;
use xi_lab_core::zero_catalog::ZeroCatalog;
use xi_lab_core::{ComplexPoint, Result, XiError};

use super::output::{sci, short_hash, CsvWriter, Header};
use super::{Command, ModelArgs, Outcome, RunConfig};

pub(super) fn dispatch(command: Command, cfg: &RunConfig) -> Result<Outcome> {
    match command {
        Command::Eval { sigma, t } => eval(sigma, t, cfg),
        Command::Zeros {
            range,
            catalog_out,
            fresh,
        } => zeros(pair_of(&range)?, catalog_out.as_deref(), fresh, cfg),
        Command::Extrema { range, model } => extrema(pair_of(&range)?, &model, cfg),
        Command::Crosssection { t, j } => crosssection(t, j, cfg),
        Command::Hypothetical { model } => hypothetical(&model, cfg),
    }
}

fn pair_of(range: &[f64]) -> Result<(f64, f64)> {
    match range {
        &[lo, hi] if lo.is_finite() && hi.is_finite() && lo <= hi => Ok((lo, hi)),
        _ => Err(XiError::InvalidConfig(format!("invalid range {range:?}"))),
    }
}

fn load_catalog(cfg: &RunConfig) -> Result<ZeroCatalog> {
    match &cfg.catalog {
        Some(path) => ZeroCatalog::load(path),
        None => Ok(ZeroCatalog::reference().clone()),
    }
}

fn covering(catalog: ZeroCatalog, hi: f64, cfg: &RunConfig) -> Result<ZeroCatalog> {
    if hi > catalog.scan_upper_bound() {
        catalog.extend_to(hi, cfg.scan_step, &cfg.eval)
    } else {
        Ok(catalog)
    }
}

fn header(cfg: &RunConfig, catalog: &ZeroCatalog) -> Result<Header> {
    Ok(Header {
        config_json: serde_json::to_string(cfg)?,
        catalog_hash: short_hash(catalog.to_json()?.as_bytes()),
    })
}

fn eval(sigma: f64, t: f64, cfg: &RunConfig) -> Result<Outcome> {
    let catalog = load_catalog(cfg)?;
    let v = xi(ComplexPoint::new(sigma, t), &cfg.eval)?;
    let z = v.to_complex();
    let mut w = CsvWriter::create(
        cfg.out.as_deref(),
        &header(cfg, &catalog)?,
        &["sigma", "t", "re", "im", "log10_magnitude", "phase"],
    )?;
    w.row(&[
        sci(sigma),
        sci(t),
        sci(z.re),
        sci(z.im),
        sci(v.log10_magnitude()),
        sci(v.phase()),
    ])?;
    w.finish()?;
    Ok(Outcome::Done)
}

fn zeros(range: (f64, f64), catalog_out: Option<&Path>, fresh: bool, cfg: &RunConfig) -> Result<Outcome> {
    let (lo, hi) = range;
    let base = match (&cfg.catalog, fresh) {
        (_, true) => ZeroCatalog::empty(),
        (Some(path), false) if !path.exists() => ZeroCatalog::empty(),
        _ => load_catalog(cfg)?,
    };
    let catalog = covering(base, hi, cfg)?;
    let target = catalog_out.or(cfg.catalog.as_deref());
    if let Some(path) = target {
        catalog.save(path)?;
    }
    let mut w = CsvWriter::create(cfg.out.as_deref(), &header(cfg, &catalog)?, &["n", "t_n", "half_width"])?;
    for z in catalog.zeros_in(lo, hi) {
        w.row(&[z.index.to_string(), sci(z.t), sci(z.half_width)])?;
    }
    w.finish()?;
    Ok(Outcome::Done)
}

fn model_from(args: &ModelArgs, catalog: &ZeroCatalog, cfg: &RunConfig) -> Result<HypotheticalModel> {
    let (Some(k), Some(lambda_k)) = (args.k, args.lambda_k) else {
        return Err(XiError::InvalidConfig(
            "--k and --lambda-k are required together".into(),
        ));
    };
    let pair = HypotheticalZeroPair::from_catalog(k, lambda_k, catalog)?;
    let model = match (args.alpha, args.gamma) {
        (Some(alpha), Some(gamma)) => HypotheticalModel::with_constants(pair, alpha, gamma, &cfg.eval),
        _ => HypotheticalModel::fitted(k, lambda_k, catalog, &cfg.eval)?,
    };
    let model = model.with_mode(args.factor.into()).with_source(args.source.into());
    if args.delete_next {
        model.deleting_next(catalog)
    } else {
        Ok(model)
    }
}

fn kind_label(kind: ExtremumKind) -> &'static str {
    match kind {
        ExtremumKind::Max => "max",
        ExtremumKind::Min => "min",
        ExtremumKind::Degenerate => "degenerate",
    }
}

fn extrema(range: (f64, f64), args: &ModelArgs, cfg: &RunConfig) -> Result<Outcome> {
    let (lo, hi) = range;
    let hypothetical = args.k.is_some() || args.lambda_k.is_some();
    let catalog = covering(load_catalog(cfg)?, hi, cfg)?;

    let (records, discriminants): (Vec<ExtremumRecord>, Vec<f64>) = if lo == hi {
        (Vec::new(), Vec::new())
    } else if hypothetical {
        let model = model_from(args, &catalog, cfg)?;
        let scan = find_extrema_of(&model, range, &cfg.scheme)?;
        for a in &scan.anomalies {
            eprintln!("anomaly: {a:?}");
        }
        let d = scan
            .records
            .par_iter()
            .map(|r| Ok(saddle_test_of(&model, r.t_star, &cfg.scheme)?.discriminant))
            .collect::<Result<Vec<f64>>>()?;
        (scan.records, d)
    } else {
        let scan = find_extrema(range, &catalog, &cfg.scheme, &cfg.eval)?;
        for a in &scan.anomalies {
            eprintln!("anomaly: {a:?}");
        }
        let summary = check_theorem1(&scan.records, &catalog, cfg.product_terms.min(catalog.len()))?;
        let d = summary
            .records
            .par_iter()
            .map(|r| Ok(saddle_test(r.t_star, &cfg.scheme, &cfg.eval)?.discriminant))
            .collect::<Result<Vec<f64>>>()?;
        (summary.records, d)
    };

    let mut w = CsvWriter::create(
        cfg.out.as_deref(),
        &header(cfg, &catalog)?,
        &[
            "t_star",
            "value",
            "second_deriv",
            "kind",
            "theorem1_ok",
            "eq17_lhs",
            "eq17_rhs",
            "discriminant",
        ],
    )?;
    for (r, d) in records.iter().zip(&discriminants) {
        w.row(&[
            sci(r.t_star),
            sci(r.value),
            sci(r.second_deriv),
            kind_label(r.kind).to_string(),
            r.theorem1_ok.to_string(),
            sci(r.eq17_lhs),
            sci(r.eq17_rhs_partial.unwrap_or(f64::NAN)),
            sci(*d),
        ])?;
    }
    w.finish()?;
    let violations = records.iter().filter(|r| !r.theorem1_ok).count();
    eprintln!(
        "extrema: {} found on [{lo}, {hi}], {violations} violation(s)",
        records.len()
    );
    Ok(if violations > 0 {
        Outcome::Violation(violations)
    } else {
        Outcome::Done
    })
}

fn crosssection(t: f64, j: Option<usize>, cfg: &RunConfig) -> Result<Outcome> {
    let catalog = covering(load_catalog(cfg)?, t + 1.0, cfg)?;
    let j = match j {
        Some(j) => j,
        None => catalog
            .ordinates()
            .iter()
            .min_by(|a, b| (a.t - t).abs().total_cmp(&(b.t - t).abs()))
            .map(|z| z.index)
            .ok_or(XiError::UnknownIndex(0))?,
    };
    let grid = lambda_grid(-0.5, 0.5, cfg.lambda_points);
    let rows = grid
        .par_iter()
        .map(|&l| {
            let s = ComplexPoint::from_lambda(l, t);
            let full = xi(s, &cfg.eval)?.to_complex();
            let deleted = deleted_product(j, s, &catalog, LimitPolicy::Auto, &cfg.eval)?.to_complex();
            let factor = g_factor(j, s, &catalog)?;
            Ok([l, full.re, full.im, deleted.re, deleted.im, factor.re, factor.im])
        })
        .collect::<Result<Vec<[f64; 7]>>>()?;
    let mut w = CsvWriter::create(
        cfg.out.as_deref(),
        &header(cfg, &catalog)?,
        &[
            "lambda",
            "re",
            "im",
            "re_deleted",
            "im_deleted",
            "re_factor",
            "im_factor",
        ],
    )?;
    for row in rows {
        w.row(&row.map(sci))?;
    }
    w.finish()?;
    Ok(Outcome::Done)
}

#[derive(Serialize)]
struct HypotheticalReport {
    header: String,
    config: serde_json::Value,
    model: HypotheticalModel,
    xi_h_at_tk: f64,
    approx_xi_h_at_tk: f64,
    ratios: DerivativeRatios,
    shifted_extremum: ShiftedExtremum,
    lemma3: Lemma3Report,
    im_cross_section: ImCrossSection,
    footnote: Option<FootnoteReport>,
}

const LINE_HALF_WIDTH: f64 = 2.5;
const LINE_POINTS: usize = 501;
const ZOOM_POINTS: usize = 201;

fn line_rows(model: &HypotheticalModel, lo: f64, hi: f64, n: usize) -> Result<Vec<[f64; 5]>> {
    (0..n)
        .into_par_iter()
        .map(|i| {
            let t = lo + (hi - lo) * i as f64 / (n - 1) as f64;
            let s = ComplexPoint::on_critical_line(t);
            Ok([
                t,
                model.deleted(s)?.to_complex().re,
                f_factor(model, s).re,
                big_xi_h(model, t)?,
                approx_big_xi_h(model, t),
            ])
        })
        .collect()
}

fn hypothetical(args: &ModelArgs, cfg: &RunConfig) -> Result<Outcome> {
    let catalog = load_catalog(cfg)?;
    let model = model_from(args, &catalog, cfg)?;
    let t_k = model.pair.t_k;
    let head = header(cfg, &catalog)?;
    let footnote = match catalog.t(model.pair.k + 1) {
        Ok(_) => Some(footnote_report(&model, &catalog)?),
        Err(_) => None,
    };
    let report = HypotheticalReport {
        header: head.line(),
        config: serde_json::to_value(cfg)?,
        model,
        xi_h_at_tk: big_xi_h(&model, t_k)?,
        approx_xi_h_at_tk: approx_big_xi_h(&model, t_k),
        ratios: derivative_ratios(&model, &cfg.scheme)?,
        shifted_extremum: shifted_extremum(&model, &cfg.scheme)?,
        lemma3: lemma3_check(&model, &cfg.scheme)?,
        im_cross_section: im_cross_section(&model)?,
        footnote,
    };
    let json = serde_json::to_string_pretty(&report)?;

    let Some(dir) = cfg.out.as_deref() else {
        writeln!(std::io::stdout().lock(), "{json}")?;
        return Ok(Outcome::Done);
    };
    std::fs::create_dir_all(dir)?;
    std::fs::write(dir.join("report.json"), json + "\n")?;

    let grid = lambda_grid(-0.5, 0.5, cfg.lambda_points);
    let rows = grid
        .par_iter()
        .map(|&l| {
            let s = ComplexPoint::from_lambda(l, t_k);
            let f = f_factor(&model, s);
            let q = model.fit.model(s);
            let h = xi_h(&model, s)?.to_complex();
            Ok([l, f.re, f.im, q.re, q.im, h.re, h.im])
        })
        .collect::<Result<Vec<[f64; 7]>>>()?;
    let mut w = CsvWriter::create(
        Some(&dir.join("cross_section.csv")),
        &head,
        &[
            "lambda",
            "re_factor",
            "im_factor",
            "re_surrogate",
            "im_surrogate",
            "re_xi_h",
            "im_xi_h",
        ],
    )?;
    for row in rows {
        w.row(&row.map(sci))?;
    }
    w.finish()?;

    let columns = ["t", "deleted", "factor", "xi_h", "approx_xi_h"];
    let windows = [
        ("line.csv", t_k - LINE_HALF_WIDTH, t_k + LINE_HALF_WIDTH, LINE_POINTS),
        ("zoom.csv", t_k.floor(), t_k.floor() + 1.0, ZOOM_POINTS),
    ];
    for (name, lo, hi, n) in windows {
        let mut w = CsvWriter::create(Some(&dir.join(name)), &head, &columns)?;
        for row in line_rows(&model, lo, hi, n)? {
            w.row(&row.map(sci))?;
        }
        w.finish()?;
    }
    Ok(Outcome::Done)
}
