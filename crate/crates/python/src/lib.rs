//! Python bindings. Rationals cross the boundary as exact `"p/q"` strings.

use std::collections::BTreeMap;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use kstab::degeneration::{degree_profile, structural_checks, TestConfiguration};
use kstab::exact::{interpolate_poly, limit_at_infinity, parse_rational, render, Rational, RationalFunction, UniPoly};
use kstab::groebner::IdealHandle;
use kstab::polyring::{parse_polynomial, MonomialOrder, WeightAssignment};
use kstab::report::{self, ConfigDocument, ReportError};

fn report_err(e: ReportError) -> PyErr {
    match e {
        ReportError::Computation(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rational(s: &str) -> PyResult<Rational> {
    parse_rational(s).ok_or_else(|| PyValueError::new_err(format!("not a rational: '{s}'")))
}

fn unipoly(coeffs: &[String]) -> PyResult<UniPoly> {
    Ok(UniPoly::new(coeffs.iter().map(|c| rational(c)).collect::<PyResult<_>>()?))
}

fn order_from(name: &str) -> PyResult<MonomialOrder> {
    match name {
        "grevlex" => Ok(MonomialOrder::Grevlex),
        "lex" => Ok(MonomialOrder::Lex),
        _ => Err(PyValueError::new_err(format!("unknown order '{name}' (expected 'grevlex' or 'lex')"))),
    }
}

/// A validated test configuration with its central fiber.
#[pyclass(name = "Configuration", module = "kstab_py", frozen)]
struct PyConfiguration {
    doc: ConfigDocument,
    inner: TestConfiguration,
}

#[pymethods]
impl PyConfiguration {
    #[new]
    #[pyo3(signature = (coordinates, ideal, w, weights, dimension=None))]
    fn new(
        coordinates: Vec<String>,
        ideal: Vec<String>,
        w: Vec<String>,
        weights: BTreeMap<String, i64>,
        dimension: Option<usize>,
    ) -> PyResult<Self> {
        let doc = ConfigDocument { coordinates, ideal, w, weights, dimension, caps: None };
        doc.validate().map_err(report_err)?;
        let inner = doc.build().map_err(report_err)?;
        Ok(Self { doc, inner })
    }

    /// Parses a JSON configuration document.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let doc = report::parse_config(text).map_err(report_err)?;
        let inner = doc.build().map_err(report_err)?;
        Ok(Self { doc, inner })
    }

    /// One of the built-in examples.
    #[staticmethod]
    fn example(name: &str) -> PyResult<Self> {
        let doc = report::fixture(name).map_err(report_err)?;
        let inner = doc.build().map_err(report_err)?;
        Ok(Self { doc, inner })
    }

    #[getter]
    fn coordinates(&self) -> Vec<String> {
        self.inner.names().to_vec()
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    /// Reduced grevlex basis of the central fiber.
    #[getter]
    fn central_fiber(&self) -> PyResult<Vec<String>> {
        let gb = self.inner.central_fiber().groebner(&MonomialOrder::Grevlex).map_err(value_err)?;
        Ok(gb.generators.iter().map(|g| g.to_string_with(self.inner.names())).collect())
    }

    /// Reduced grevlex basis of the image ideal `J`.
    #[getter]
    fn image_ideal(&self) -> PyResult<Vec<String>> {
        let gb = self.inner.image_ideal().groebner(&MonomialOrder::Grevlex).map_err(value_err)?;
        Ok(gb.generators.iter().map(|g| g.to_string_with(self.inner.names())).collect())
    }

    /// Weight data of degree `l`.
    fn profile<'py>(&self, py: Python<'py>, l: usize) -> PyResult<Bound<'py, PyDict>> {
        let p = degree_profile(&self.inner, l);
        let d = PyDict::new(py);
        d.set_item("l", p.l)?;
        d.set_item("N", p.big_n)?;
        d.set_item("n", p.small_n)?;
        d.set_item("B", p.b_sum)?;
        d.set_item("gamma", render(&p.gamma))?;
        d.set_item("norm", render(&p.norm))?;
        d.set_item("weights", p.weights)?;
        Ok(d)
    }

    /// Structural check statuses with degrees and powers bounded by `cap`.
    #[pyo3(signature = (cap=12))]
    fn checks<'py>(&self, py: Python<'py>, cap: usize) -> PyResult<Bound<'py, PyDict>> {
        let r = structural_checks(&self.inner, cap).map_err(|e| report_err(e.into()))?;
        let d = PyDict::new(py);
        d.set_item("reduced_fiber", r.reduced_fiber.status.to_string())?;
        d.set_item("growth", r.growth.status.to_string())?;
        d.set_item("growth_difference", r.growth.difference.map(|p| p.to_string()))?;
        d.set_item("flatness", r.flatness.status.to_string())?;
        Ok(d)
    }

    /// Full report as a dict with keys `rows`, `checks`, `invariants`.
    #[pyo3(signature = (lmax=None, kmax=None))]
    fn analyze<'py>(&self, py: Python<'py>, lmax: Option<usize>, kmax: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
        let text = self.report_json(lmax, kmax)?;
        py.import("json")?.call_method1("loads", (text,))
    }

    #[pyo3(signature = (lmax=None, kmax=None))]
    fn report_json(&self, lmax: Option<usize>, kmax: Option<usize>) -> PyResult<String> {
        let a = report::analyze(&self.doc, lmax, kmax).map_err(report_err)?;
        Ok(report::render_json(&a))
    }

    #[pyo3(signature = (lmax=None, kmax=None))]
    fn report_csv(&self, lmax: Option<usize>, kmax: Option<usize>) -> PyResult<String> {
        let a = report::analyze(&self.doc, lmax, kmax).map_err(report_err)?;
        Ok(report::render_csv(&a))
    }

    fn __repr__(&self) -> String {
        format!("Configuration(coordinates={:?}, dimension={})", self.inner.names(), self.inner.dimension())
    }
}

/// Reduced Groebner basis of the ideal generated by `generators`.
#[pyfunction]
#[pyo3(signature = (coordinates, generators, order="grevlex"))]
fn groebner_basis(coordinates: Vec<String>, generators: Vec<String>, order: &str) -> PyResult<Vec<String>> {
    let order = order_from(order)?;
    let refs: Vec<&str> = generators.iter().map(String::as_str).collect();
    let ideal = IdealHandle::parse(&coordinates, &refs).map_err(value_err)?;
    let gb = ideal.groebner(&order).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok(gb.generators.iter().map(|g| g.to_string_with(&coordinates)).collect())
}

/// Initial ideal for the weight vector `u` (0 on W, positive elsewhere).
#[pyfunction]
fn initial_ideal(coordinates: Vec<String>, generators: Vec<String>, u: Vec<u64>) -> PyResult<Vec<String>> {
    let refs: Vec<&str> = generators.iter().map(String::as_str).collect();
    let ideal = IdealHandle::parse(&coordinates, &refs).map_err(value_err)?;
    let weights = WeightAssignment::from_weights(u).map_err(value_err)?;
    let init = kstab::groebner::initial_ideal(&ideal, &weights).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    let gb = init.groebner(&MonomialOrder::Grevlex).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok(gb.generators.iter().map(|g| g.to_string_with(&coordinates)).collect())
}

/// Canonical form of one polynomial.
#[pyfunction]
fn normalize_polynomial(coordinates: Vec<String>, text: &str) -> PyResult<String> {
    Ok(parse_polynomial(text, &coordinates).map_err(value_err)?.to_string_with(&coordinates))
}

/// Limit at infinity of `num/den`, coefficients listed from the constant
/// term up. Returns `"p/q"`, `"+infinity"` or `"-infinity"`.
#[pyfunction]
fn limit(num: Vec<String>, den: Vec<String>) -> PyResult<String> {
    let f = RationalFunction::new(unipoly(&num)?, unipoly(&den)?).map_err(value_err)?;
    Ok(limit_at_infinity(&f).to_string())
}

/// Coefficients (constant term first) of the polynomial of degree at most
/// `degree_bound` through `points`; extra points are verified.
#[pyfunction]
fn interpolate(points: Vec<(String, String)>, degree_bound: usize) -> PyResult<Vec<String>> {
    let pts = points.iter().map(|(x, y)| Ok((rational(x)?, rational(y)?))).collect::<PyResult<Vec<_>>>()?;
    let p = interpolate_poly(&pts, degree_bound).map_err(value_err)?;
    Ok(p.coeffs().iter().map(render).collect())
}

#[pymodule]
fn kstab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add("EXAMPLES", report::EXAMPLES.to_vec())?;
    m.add_class::<PyConfiguration>()?;
    m.add_function(wrap_pyfunction!(groebner_basis, m)?)?;
    m.add_function(wrap_pyfunction!(initial_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(normalize_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(limit, m)?)?;
    m.add_function(wrap_pyfunction!(interpolate, m)?)?;
    Ok(())
}
