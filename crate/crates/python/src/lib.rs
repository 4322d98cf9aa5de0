//! Python bindings. Exact values cross the boundary as objects or as JSON text.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde_json::{json, Value};

use eiii_atlas::albert;
use eiii_atlas::eiii::{self, ChartKind, ChartPoint};
use eiii_atlas::fierz::{derive_table, Sector};
use eiii_atlas::liealg::{Algebra, JacobiMode, StructureConstants};
use eiii_atlas::{octonion, rep27, suites, AtlasError, ExtScalar};

fn err(e: AtlasError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse(text: &str) -> PyResult<Value> {
    serde_json::from_str(text).map_err(|e| PyValueError::new_err(format!("invalid JSON: {e}")))
}

/// An exact number (a + b√2) with a, b Gaussian rationals.
#[pyclass(name = "Scalar", module = "eiii_atlas_py", frozen, eq)]
#[derive(Clone, PartialEq)]
struct PyScalar(ExtScalar);

#[pymethods]
impl PyScalar {
    /// Parses an integer or "p/q".
    #[new]
    fn new(value: &str) -> PyResult<Self> {
        ExtScalar::from_json(&Value::String(value.into())).map(PyScalar).map_err(err)
    }

    #[staticmethod]
    fn i() -> Self {
        PyScalar(ExtScalar::i())
    }

    #[staticmethod]
    fn sqrt2() -> Self {
        PyScalar(ExtScalar::sqrt2())
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        ExtScalar::from_json(&parse(text)?).map(PyScalar).map_err(err)
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn conjugate(&self) -> Self {
        PyScalar(self.0.conjugate())
    }

    fn inverse(&self) -> PyResult<Self> {
        self.0.inverse().map(PyScalar).map_err(err)
    }

    /// Floating-point (re, im), for display.
    fn approx(&self) -> (f64, f64) {
        self.0.to_complex_f64()
    }

    fn __add__(&self, o: &Self) -> Self {
        PyScalar(&self.0 + &o.0)
    }

    fn __sub__(&self, o: &Self) -> Self {
        PyScalar(&self.0 - &o.0)
    }

    fn __mul__(&self, o: &Self) -> Self {
        PyScalar(&self.0 * &o.0)
    }

    fn __truediv__(&self, o: &Self) -> PyResult<Self> {
        self.0.checked_div(&o.0).map(PyScalar).map_err(err)
    }

    fn __neg__(&self) -> Self {
        PyScalar(-&self.0)
    }

    fn __repr__(&self) -> String {
        format!("Scalar({})", self.0)
    }
}

#[pyclass(name = "Octonion", module = "eiii_atlas_py", frozen, eq)]
#[derive(Clone, PartialEq)]
struct PyOctonion(octonion::Octonion);

#[pymethods]
impl PyOctonion {
    #[new]
    fn new(coeffs: Vec<PyScalar>) -> PyResult<Self> {
        let c: Vec<ExtScalar> = coeffs.into_iter().map(|s| s.0).collect();
        octonion::Octonion::from_slice(&c).map(PyOctonion).map_err(err)
    }

    #[staticmethod]
    fn unit(k: usize) -> PyResult<Self> {
        if k >= 8 {
            return Err(PyValueError::new_err("octonion units are e0..e7"));
        }
        Ok(PyOctonion(octonion::Octonion::unit(k)))
    }

    fn star(&self, o: &Self) -> Self {
        PyOctonion(self.0.star(&o.0))
    }

    fn bar(&self) -> Self {
        PyOctonion(self.0.bar())
    }

    fn norm2(&self) -> PyScalar {
        PyScalar(self.0.norm2())
    }

    fn coeffs(&self) -> Vec<PyScalar> {
        self.0 .0.iter().cloned().map(PyScalar).collect()
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    fn __mul__(&self, o: &Self) -> Self {
        self.star(o)
    }

    fn __repr__(&self) -> String {
        let terms: Vec<String> =
            self.0 .0.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| format!("({c})e{k}")).collect();
        format!("Octonion({})", if terms.is_empty() { "0".into() } else { terms.join(" + ") })
    }
}

/// A point of the 27 as ten-vector, chiral spinor and scalar.
#[pyclass(name = "Vector27", module = "eiii_atlas_py", frozen, eq)]
#[derive(Clone, PartialEq)]
struct PyVector27(rep27::Vector27);

#[pymethods]
impl PyVector27 {
    #[staticmethod]
    fn lowest() -> Self {
        PyVector27(rep27::Vector27::lowest())
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        rep27::Vector27::from_json(&parse(text)?).map(PyVector27).map_err(err)
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// All 27 quadratic relations vanish.
    fn on_orbit(&self) -> bool {
        eiii::on_orbit(&self.0)
    }

    fn cubic(&self) -> PyScalar {
        PyScalar(rep27::d_cubic(&self.0, &self.0, &self.0))
    }

    /// det of the Jordan matrix, −d(Ψ,Ψ,Ψ)/6.
    fn jordan_det(&self) -> PyScalar {
        PyScalar(albert::jordan_det(&self.0))
    }

    /// The Jordan matrix as JSON {"diag", "oct"}.
    fn jordan_matrix(&self, complex: bool) -> String {
        let m = if complex { albert::j_map_complex(&self.0) } else { albert::j_map(&self.0) };
        m.to_json().to_string()
    }

    /// The trace-1 idempotent through this orbit point; fails off the orbit or when s + t = 0.
    fn orbit_projection(&self) -> PyResult<String> {
        albert::f4_orbit_project(&self.0).map(|m| m.to_json().to_string()).map_err(err)
    }

    fn pairing(&self, o: &Self) -> PyScalar {
        PyScalar(albert::f4_pairing(&self.0, &o.0))
    }

    fn diamond(&self, o: &Self) -> Self {
        PyVector27(albert::diamond_f4(&self.0, &o.0))
    }

    fn __repr__(&self) -> String {
        format!("Vector27(s={}, on_orbit={})", self.0.s, self.on_orbit())
    }
}

fn jacobi_mode(name: &str, budget: u64) -> PyResult<JacobiMode> {
    match name {
        "exhaustive" => Ok(JacobiMode::Exhaustive),
        "sampled" => Ok(JacobiMode::Sampled(budget)),
        _ => Err(PyValueError::new_err("jacobi must be 'exhaustive' or 'sampled'")),
    }
}

/// Runs a suite; returns (all passed, report JSON).
#[pyfunction]
#[pyo3(signature = (suite, seed=0, trials=20, jacobi="exhaustive", budget=10_000))]
fn verify(py: Python<'_>, suite: &str, seed: u64, trials: u64, jacobi: &str, budget: u64) -> PyResult<(bool, String)> {
    let mode = jacobi_mode(jacobi, budget)?;
    let suite = suite.to_string();
    let r = py.allow_threads(|| suites::run_suite(&suite, seed, trials, mode)).map_err(err)?;
    Ok((r.all_passed(), r.to_json_string()))
}

#[pyfunction]
fn fierz_table(dim: usize, sector: &str) -> PyResult<String> {
    let s = Sector::parse(sector).map_err(err)?;
    derive_table(dim, s).map(|t| t.to_json().to_string()).map_err(err)
}

/// e^a ⋆ e^b as ±(k+1) for ±e^k.
#[pyfunction]
fn octonion_table() -> Vec<Vec<i64>> {
    octonion::structure_table().iter().map(|row| row.iter().map(|&(s, k)| s as i64 * (k as i64 + 1)).collect()).collect()
}

#[pyfunction]
fn structure_constants(algebra: &str) -> PyResult<String> {
    let a = Algebra::parse(algebra).map_err(err)?;
    StructureConstants::get(a).map(|t| t.to_json().to_string()).map_err(err)
}

/// Assembles a chart point from its parameter JSON; X∞ data is first projected onto the
/// admissible types. Returns (point, projected).
#[pyfunction]
fn solve(chart: &str, params: &str) -> PyResult<(PyVector27, bool)> {
    let kind = ChartKind::parse(chart).map_err(err)?;
    let point = ChartPoint::from_json(&json!({"chart": kind.name(), "params": parse(params)?})).map_err(err)?;
    let (point, projected) = match point {
        ChartPoint::XInfty { psi0, f, k, ubar, s } => {
            let fr = eiii::pure_frame(&psi0).map_err(err)?;
            let c = eiii::constrain(&fr, &k, &ubar);
            (ChartPoint::XInfty { psi0, f, k: c.k, ubar: c.ubar, s }, c.projected)
        }
        p => (p, false),
    };
    Ok((PyVector27(point.assemble().map_err(err)?), projected))
}

/// A seeded point on the orbit of the lowest weight; zero steps gives the lowest weight.
#[pyfunction]
fn orbit_sample(seed: u64, steps: usize) -> PyResult<PyVector27> {
    if steps == 0 {
        return Ok(PyVector27::lowest());
    }
    eiii::orbit_sample(seed, steps).map(PyVector27).map_err(err)
}

#[pymodule]
fn eiii_atlas_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyScalar>()?;
    m.add_class::<PyOctonion>()?;
    m.add_class::<PyVector27>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(fierz_table, m)?)?;
    m.add_function(wrap_pyfunction!(octonion_table, m)?)?;
    m.add_function(wrap_pyfunction!(structure_constants, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_sample, m)?)?;
    Ok(())
}
