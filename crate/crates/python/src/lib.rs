//! Python bindings. Results with many fields come back as plain dicts.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyComplex;
use serde::Serialize;
use xi_lab_core::critical_line::{big_xi as big_xi_core, DifferentiationScheme};
use xi_lab_core::extrema_analysis::{check_theorem1, find_extrema, find_extrema_of, saddle_test};
use xi_lab_core::hypothetical::{self as hyp, DeletedSource, FactorMode};
use xi_lab_core::product_form::{self as pf, LimitPolicy};
use xi_lab_core::special_functions::xi as xi_core;
use xi_lab_core::zero_catalog::{ZeroCatalog, DEFAULT_SCAN_STEP};
use xi_lab_core::{ComplexPoint, EvalConfig, XiError};

fn to_py(e: XiError) -> PyErr {
    match e {
        XiError::InvalidConfig(_) => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn eval_config(precision: Option<f64>) -> PyResult<EvalConfig> {
    match precision {
        Some(p) => EvalConfig::with_target(p).map_err(to_py),
        None => Ok(EvalConfig::default()),
    }
}

fn to_dict<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn catalog_or_reference(catalog: Option<&PyZeroCatalog>) -> &ZeroCatalog {
    match catalog {
        Some(c) => &c.inner,
        None => ZeroCatalog::reference(),
    }
}

#[pyclass(name = "ZeroCatalog", frozen)]
struct PyZeroCatalog {
    inner: ZeroCatalog,
}

#[pymethods]
impl PyZeroCatalog {
    /// The embedded catalog of the first 200 zeros.
    #[staticmethod]
    fn reference() -> Self {
        Self {
            inner: ZeroCatalog::reference().clone(),
        }
    }

    #[staticmethod]
    #[pyo3(signature = (upper, step = DEFAULT_SCAN_STEP, precision = None))]
    fn build(upper: f64, step: f64, precision: Option<f64>) -> PyResult<Self> {
        let inner = ZeroCatalog::build(upper, step, &eval_config(precision)?).map_err(to_py)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        Ok(Self {
            inner: ZeroCatalog::load(path).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: ZeroCatalog::from_json(text).map_err(to_py)?,
        })
    }

    #[pyo3(signature = (upper, step = DEFAULT_SCAN_STEP, precision = None))]
    fn extend_to(&self, upper: f64, step: f64, precision: Option<f64>) -> PyResult<Self> {
        let inner = self
            .inner
            .extend_to(upper, step, &eval_config(precision)?)
            .map_err(to_py)?;
        Ok(Self { inner })
    }

    fn save(&self, path: &str) -> PyResult<()> {
        self.inner.save(path).map_err(to_py)
    }

    fn to_json(&self) -> PyResult<String> {
        self.inner.to_json().map_err(to_py)
    }

    fn t(&self, n: usize) -> PyResult<f64> {
        self.inner.t(n).map_err(to_py)
    }

    fn ordinates(&self) -> Vec<f64> {
        self.inner.ordinates().iter().map(|z| z.t).collect()
    }

    /// (index, ordinate) pairs in the open interval.
    fn zeros_in(&self, lo: f64, hi: f64) -> Vec<(usize, f64)> {
        self.inner.zeros_in(lo, hi).iter().map(|z| (z.index, z.t)).collect()
    }

    #[getter]
    fn scan_upper_bound(&self) -> f64 {
        self.inner.scan_upper_bound()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "ZeroCatalog(len={}, scan_upper_bound={})",
            self.inner.len(),
            self.inner.scan_upper_bound()
        )
    }
}

#[pyclass(name = "HypotheticalModel", frozen)]
struct PyHypotheticalModel {
    inner: hyp::HypotheticalModel,
}

#[pymethods]
impl PyHypotheticalModel {
    #[new]
    #[pyo3(signature = (k, lambda_k, alpha = None, gamma = None, source = "true", mode = "exact", delete_next = false, catalog = None))]
    #[allow(clippy::too_many_arguments)]
    fn new(
        k: usize,
        lambda_k: f64,
        alpha: Option<f64>,
        gamma: Option<f64>,
        source: &str,
        mode: &str,
        delete_next: bool,
        catalog: Option<PyRef<'_, PyZeroCatalog>>,
    ) -> PyResult<Self> {
        let catalog = catalog_or_reference(catalog.as_deref());
        let cfg = EvalConfig::default();
        let model = match (alpha, gamma) {
            (Some(a), Some(g)) => {
                let pair = hyp::HypotheticalZeroPair::from_catalog(k, lambda_k, catalog).map_err(to_py)?;
                hyp::HypotheticalModel::with_constants(pair, a, g, &cfg)
            }
            (None, None) => hyp::HypotheticalModel::fitted(k, lambda_k, catalog, &cfg).map_err(to_py)?,
            _ => return Err(PyValueError::new_err("alpha and gamma go together")),
        };
        let source = match source {
            "true" => DeletedSource::True,
            "surrogate" => DeletedSource::Surrogate,
            other => return Err(PyValueError::new_err(format!("unknown source {other:?}"))),
        };
        let mode = match mode {
            "exact" => FactorMode::Exact,
            "approx" => FactorMode::Approx,
            other => return Err(PyValueError::new_err(format!("unknown mode {other:?}"))),
        };
        let mut inner = model.with_source(source).with_mode(mode);
        if delete_next {
            inner = inner.deleting_next(catalog).map_err(to_py)?;
        }
        Ok(Self { inner })
    }

    #[getter]
    fn t_k(&self) -> f64 {
        self.inner.pair.t_k
    }

    #[getter]
    fn lambda_k(&self) -> f64 {
        self.inner.pair.lambda_k
    }

    #[getter]
    fn alpha(&self) -> f64 {
        self.inner.fit.alpha
    }

    #[getter]
    fn gamma(&self) -> f64 {
        self.inner.fit.gamma
    }

    fn xi_h<'py>(&self, py: Python<'py>, sigma: f64, t: f64) -> PyResult<Bound<'py, PyComplex>> {
        let z = hyp::xi_h(&self.inner, ComplexPoint::new(sigma, t))
            .map_err(to_py)?
            .to_complex();
        Ok(PyComplex::from_doubles(py, z.re, z.im))
    }

    fn f_factor<'py>(&self, py: Python<'py>, sigma: f64, t: f64) -> Bound<'py, PyComplex> {
        let z = hyp::f_factor(&self.inner, ComplexPoint::new(sigma, t));
        PyComplex::from_doubles(py, z.re, z.im)
    }

    fn big_xi_h(&self, t: f64) -> PyResult<f64> {
        hyp::big_xi_h(&self.inner, t).map_err(to_py)
    }

    fn approx_big_xi_h(&self, t: f64) -> f64 {
        hyp::approx_big_xi_h(&self.inner, t)
    }

    fn ratios<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let r = hyp::derivative_ratios(&self.inner, &DifferentiationScheme::default()).map_err(to_py)?;
        to_dict(py, &r)
    }

    fn shifted_extremum<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let e = hyp::shifted_extremum(&self.inner, &DifferentiationScheme::default()).map_err(to_py)?;
        to_dict(py, &e)
    }

    fn lemma3<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let r = hyp::lemma3_check(&self.inner, &DifferentiationScheme::default()).map_err(to_py)?;
        to_dict(py, &r)
    }

    fn im_cross_section<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_dict(py, &hyp::im_cross_section(&self.inner).map_err(to_py)?)
    }

    #[pyo3(signature = (catalog = None))]
    fn footnote<'py>(&self, py: Python<'py>, catalog: Option<PyRef<'_, PyZeroCatalog>>) -> PyResult<Bound<'py, PyAny>> {
        let catalog = catalog_or_reference(catalog.as_deref());
        to_dict(py, &hyp::footnote_report(&self.inner, catalog).map_err(to_py)?)
    }

    fn extrema<'py>(&self, py: Python<'py>, lo: f64, hi: f64) -> PyResult<Bound<'py, PyAny>> {
        let scan = find_extrema_of(&self.inner, (lo, hi), &DifferentiationScheme::default()).map_err(to_py)?;
        to_dict(py, &scan)
    }

    fn to_dict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_dict(py, &self.inner)
    }
}

/// ξ(σ + it) as a Python complex. Underflows to 0 for large |t|; see `xi_log`.
#[pyfunction]
#[pyo3(signature = (sigma, t, precision = None))]
fn xi<'py>(py: Python<'py>, sigma: f64, t: f64, precision: Option<f64>) -> PyResult<Bound<'py, PyComplex>> {
    let z = xi_core(ComplexPoint::new(sigma, t), &eval_config(precision)?)
        .map_err(to_py)?
        .to_complex();
    Ok(PyComplex::from_doubles(py, z.re, z.im))
}

/// (ln|ξ|, arg ξ).
#[pyfunction]
#[pyo3(signature = (sigma, t, precision = None))]
fn xi_log(sigma: f64, t: f64, precision: Option<f64>) -> PyResult<(f64, f64)> {
    let v = xi_core(ComplexPoint::new(sigma, t), &eval_config(precision)?).map_err(to_py)?;
    Ok((v.log_magnitude(), v.phase()))
}

#[pyfunction]
#[pyo3(signature = (t, precision = None))]
fn big_xi(t: f64, precision: Option<f64>) -> PyResult<f64> {
    Ok(big_xi_core(t, &eval_config(precision)?).map_err(to_py)?.to_complex().re)
}

#[pyfunction]
#[pyo3(signature = (j, sigma, t, catalog = None))]
fn g_factor<'py>(
    py: Python<'py>,
    j: usize,
    sigma: f64,
    t: f64,
    catalog: Option<PyRef<'_, PyZeroCatalog>>,
) -> PyResult<Bound<'py, PyComplex>> {
    let z = pf::g_factor(j, ComplexPoint::new(sigma, t), catalog_or_reference(catalog.as_deref())).map_err(to_py)?;
    Ok(PyComplex::from_doubles(py, z.re, z.im))
}

#[pyfunction]
#[pyo3(signature = (j, sigma, t, catalog = None))]
fn deleted_product<'py>(
    py: Python<'py>,
    j: usize,
    sigma: f64,
    t: f64,
    catalog: Option<PyRef<'_, PyZeroCatalog>>,
) -> PyResult<Bound<'py, PyComplex>> {
    let catalog = catalog_or_reference(catalog.as_deref());
    let s = ComplexPoint::new(sigma, t);
    let z = pf::deleted_product(j, s, catalog, LimitPolicy::Auto, &EvalConfig::default())
        .map_err(to_py)?
        .to_complex();
    Ok(PyComplex::from_doubles(py, z.re, z.im))
}

#[pyfunction]
#[pyo3(signature = (j, catalog = None))]
fn fit_alpha_gamma<'py>(
    py: Python<'py>,
    j: usize,
    catalog: Option<PyRef<'_, PyZeroCatalog>>,
) -> PyResult<Bound<'py, PyAny>> {
    let fit =
        pf::fit_alpha_gamma(j, catalog_or_reference(catalog.as_deref()), &EvalConfig::default()).map_err(to_py)?;
    to_dict(py, &fit)
}

#[pyfunction]
#[pyo3(signature = (j, catalog = None))]
fn regime_report<'py>(
    py: Python<'py>,
    j: usize,
    catalog: Option<PyRef<'_, PyZeroCatalog>>,
) -> PyResult<Bound<'py, PyAny>> {
    to_dict(
        py,
        &pf::regime_report(j, catalog_or_reference(catalog.as_deref())).map_err(to_py)?,
    )
}

/// Extrema of Ξ on (lo, hi) with the sign-rule check against an `n_terms` partial sum.
#[pyfunction]
#[pyo3(signature = (lo, hi, n_terms = 200, catalog = None))]
fn extrema<'py>(
    py: Python<'py>,
    lo: f64,
    hi: f64,
    n_terms: usize,
    catalog: Option<PyRef<'_, PyZeroCatalog>>,
) -> PyResult<Bound<'py, PyAny>> {
    let catalog = catalog_or_reference(catalog.as_deref());
    let scan = find_extrema(
        (lo, hi),
        catalog,
        &DifferentiationScheme::default(),
        &EvalConfig::default(),
    )
    .map_err(to_py)?;
    let summary = check_theorem1(&scan.records, catalog, n_terms.min(catalog.len())).map_err(to_py)?;
    let out = to_dict(py, &summary)?;
    out.set_item("anomalies", to_dict(py, &scan.anomalies)?)?;
    Ok(out)
}

#[pyfunction(name = "saddle_test")]
fn saddle<'py>(py: Python<'py>, t: f64) -> PyResult<Bound<'py, PyAny>> {
    let r = saddle_test(t, &DifferentiationScheme::default(), &EvalConfig::default()).map_err(to_py)?;
    to_dict(py, &r)
}

#[pymodule]
fn xi_lab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyZeroCatalog>()?;
    m.add_class::<PyHypotheticalModel>()?;
    m.add_function(wrap_pyfunction!(xi, m)?)?;
    m.add_function(wrap_pyfunction!(xi_log, m)?)?;
    m.add_function(wrap_pyfunction!(big_xi, m)?)?;
    m.add_function(wrap_pyfunction!(g_factor, m)?)?;
    m.add_function(wrap_pyfunction!(deleted_product, m)?)?;
    m.add_function(wrap_pyfunction!(fit_alpha_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(regime_report, m)?)?;
    m.add_function(wrap_pyfunction!(extrema, m)?)?;
    m.add_function(wrap_pyfunction!(saddle, m)?)?;
    Ok(())
}
