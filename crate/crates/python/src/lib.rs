//! Python module `unichar`.

use std::collections::HashMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use unichar_core::characters::{CharFamily, CharSpec};
use unichar_core::fock;
use unichar_core::partitions::{gt_chains as core_gt_chains, Partition};
use unichar_core::ring::{LaurentPoly as CorePoly, Scalar, Var};
use unichar_core::series::{newton_failure, Alphabet};
use unichar_core::verify::{run_suite, Grid};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn family(s: &str) -> PyResult<CharFamily> {
    s.parse().map_err(err)
}

fn partition(parts: Vec<i64>) -> PyResult<Partition> {
    Partition::new(&parts).map_err(err)
}

fn fraction(py: Python<'_>, s: &Scalar) -> PyResult<Py<PyAny>> {
    if s.is_integer() {
        let v = s.numer().to_string();
        return Ok(py.import("builtins")?.getattr("int")?.call1((v,))?.unbind());
    }
    Ok(py.import("fractions")?.getattr("Fraction")?.call1((s.to_string(),))?.unbind())
}

/// Exact Laurent polynomial with rational coefficients.
#[pyclass(name = "LaurentPoly", module = "unichar", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct Poly(CorePoly);

#[pymethods]
impl Poly {
    #[new]
    #[pyo3(signature = (text = "0"))]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(Poly).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LaurentPoly('{}')", self.0)
    }

    fn __add__(&self, other: &Poly) -> Poly {
        Poly(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Poly) -> Poly {
        Poly(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Poly) -> Poly {
        Poly(&self.0 * &other.0)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `[(coefficient, {var: exponent})]` in canonical order.
    fn terms(&self, py: Python<'_>) -> PyResult<Vec<(Py<PyAny>, HashMap<String, i32>)>> {
        self.0
            .terms()
            .map(|(m, c)| Ok((fraction(py, c)?, m.iter().map(|(v, e)| (v.to_string(), e)).collect())))
            .collect()
    }

    /// Exact value at a point given as `{var: int | str}`.
    fn evaluate(&self, py: Python<'_>, point: &Bound<'_, PyDict>) -> PyResult<Py<PyAny>> {
        let mut at = HashMap::new();
        for (k, v) in point.iter() {
            let var: Var = k.extract::<String>()?.parse().map_err(err)?;
            let val: Scalar = v.str()?.to_string().parse().map_err(err)?;
            at.insert(var, val);
        }
        fraction(py, &self.0.eval(&at).map_err(err)?)
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }
}

/// Universal character, or the skew one when `inner` is given.
#[pyfunction]
#[pyo3(signature = (family_name, n, m, outer, inner = None))]
fn compute(family_name: &str, n: usize, m: usize, outer: Vec<i64>, inner: Option<Vec<i64>>) -> PyResult<Poly> {
    let inner = inner.map(partition).transpose()?.unwrap_or_else(Partition::empty);
    let spec = CharSpec::skew(family(family_name)?, n, m, partition(outer)?, inner);
    spec.compute().map(Poly).map_err(err)
}

/// `<mu|lam>` on the operator side.
#[pyfunction]
fn pairing(py: Python<'_>, family_name: &str, mu: Vec<i64>, lam: Vec<i64>) -> PyResult<Py<PyAny>> {
    fraction(py, &fock::pairing(family(family_name)?, &partition(mu)?, &partition(lam)?))
}

/// `<beta| Gamma_+(x^±; z) |alpha>` with `n` symmetric and `m` plain variables.
#[pyfunction]
fn matrix_element(family_name: &str, beta: Vec<i64>, alpha: Vec<i64>, n: usize, m: usize) -> PyResult<Poly> {
    let v = fock::matrix_element(family(family_name)?, &partition(beta)?, &partition(alpha)?, &Alphabet::standard(n, m));
    Ok(Poly(v))
}

/// Gelfand-Tsetlin chains of `lam` as `(chain, weight)` pairs.
#[pyfunction]
fn gt_chains(lam: Vec<i64>, n: usize) -> PyResult<Vec<(Vec<Vec<i64>>, String)>> {
    let chains = core_gt_chains(&partition(lam)?, n).map_err(err)?;
    Ok(chains.map(|c| (c.chain.iter().map(Partition::padded_parts).collect(), c.weight_monomial().to_string())).collect())
}

/// True when the Newton-type relation holds up to degree `degree`.
#[pyfunction]
fn newton(n: usize, m: usize, degree: usize) -> bool {
    newton_failure(n, m, degree).is_none()
}

/// Runs a verification suite; returns the reports as JSON text.
#[pyfunction]
#[pyo3(signature = (suite, grid = None))]
fn verify(py: Python<'_>, suite: &str, grid: Option<&str>) -> PyResult<String> {
    let grid: Grid = match grid {
        Some(g) => serde_json::from_str(g).map_err(err)?,
        None => Grid::default(),
    };
    let suite = suite.to_string();
    let reports = py
        .detach(move || run_suite(&suite, &grid))
        .ok_or_else(|| PyValueError::new_err("unknown suite"))?;
    serde_json::to_string(&reports).map_err(err)
}

#[pymodule]
pub fn unichar(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Poly>()?;
    m.add_function(wrap_pyfunction!(compute, m)?)?;
    m.add_function(wrap_pyfunction!(pairing, m)?)?;
    m.add_function(wrap_pyfunction!(matrix_element, m)?)?;
    m.add_function(wrap_pyfunction!(gt_chains, m)?)?;
    m.add_function(wrap_pyfunction!(newton, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
