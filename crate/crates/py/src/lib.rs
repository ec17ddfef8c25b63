//! Python module `hx`: hypergraphs, connectivity, bounds, constructions,
//! maximality checks and spectrum normalization.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use hx_core::constructions::{build_msh, build_two_halves};
use hx_core::maximality::{greedy_maximalize, is_kl_edge_maximal_with, property_a, Method};
use hx_core::normalize::{self, SatelliteSpectrum};
use hx_core::params;
use hx_core::{high_components, kappa_flow, kappa_oracle, Hypergraph};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Hypergraph", module = "hx", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyHypergraph {
    inner: Hypergraph,
}

#[pymethods]
impl PyHypergraph {
    #[new]
    #[pyo3(signature = (n, r, edges=Vec::new()))]
    fn new(n: usize, r: usize, edges: Vec<Vec<usize>>) -> PyResult<Self> {
        Hypergraph::build(n, r, edges).map(|inner| PyHypergraph { inner }).map_err(value_error)
    }

    #[staticmethod]
    fn complete(n: usize, r: usize) -> PyResult<Self> {
        Hypergraph::complete(n, r).map(|inner| PyHypergraph { inner }).map_err(value_error)
    }

    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Hypergraph::from_text(text).map(|inner| PyHypergraph { inner }).map_err(value_error)
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn r(&self) -> usize {
        self.inner.r()
    }

    #[getter]
    fn edges(&self) -> Vec<Vec<usize>> {
        self.inner.edges().iter().map(|e| e.to_vec()).collect()
    }

    fn __len__(&self) -> usize {
        self.inner.edge_count()
    }

    fn __repr__(&self) -> String {
        format!("Hypergraph(n={}, r={}, edges={})", self.inner.n(), self.inner.r(), self.inner.edge_count())
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degree_list()
    }

    fn cut_value(&self, side: Vec<usize>) -> PyResult<usize> {
        self.inner.cut_value(&side).map(|w| w.value).map_err(value_error)
    }

    /// `(kappa, witness side or None)`; `oracle=True` enumerates every cut.
    #[pyo3(signature = (oracle=false))]
    fn kappa(&self, oracle: bool) -> PyResult<(usize, Option<Vec<usize>>)> {
        let res = if oracle { kappa_oracle(&self.inner).map_err(value_error)? } else { kappa_flow(&self.inner) };
        Ok((res.kappa, res.witness.map(|w| w.side)))
    }

    fn high_components(&self, k: usize) -> Vec<Vec<usize>> {
        high_components(&self.inner, k)
    }

    fn property_a(&self, k: usize, l: usize) -> PyResult<bool> {
        property_a(&self.inner, k, l).map(|p| p.holds).map_err(value_error)
    }

    #[pyo3(signature = (k, l, oracle=false))]
    fn is_maximal(&self, k: usize, l: usize, oracle: bool) -> PyResult<bool> {
        let method = if oracle { Method::Oracle } else { Method::Fast };
        is_kl_edge_maximal_with(&self.inner, k, l, method).map(|r| r.maximal).map_err(value_error)
    }

    fn maximalize(&self, k: usize, l: usize, seed: u64) -> PyResult<Self> {
        greedy_maximalize(&self.inner, k, l, seed).map(|inner| PyHypergraph { inner }).map_err(value_error)
    }
}

/// `(t, s)` for `(k, r)`.
#[pyfunction]
fn thresholds(k: u64, r: u64) -> PyResult<(u64, u64)> {
    params::params(k, r).map(|p| (p.t, p.s)).map_err(value_error)
}

#[pyfunction]
fn bounds<'py>(py: Python<'py>, n: u64, k: u64, l: u64, r: u64) -> PyResult<Bound<'py, PyDict>> {
    let rep = params::bounds(n, k, l, r).map_err(value_error)?;
    let d = PyDict::new(py);
    d.set_item("t", rep.query.t)?;
    d.set_item("s", rep.query.s)?;
    d.set_item("lower", rep.lower)?;
    d.set_item("lower_branch", rep.lower_branch.to_string())?;
    d.set_item("upper", rep.upper)?;
    d.set_item("upper_branch", rep.upper_branch.to_string())?;
    Ok(d)
}

#[pyfunction]
fn msh(n: usize, k: usize, l: usize, r: usize) -> PyResult<PyHypergraph> {
    build_msh(n, k, l, r).map(|inner| PyHypergraph { inner }).map_err(value_error)
}

#[pyfunction]
fn two_halves(t: usize, r: usize, p: usize, l: usize) -> PyResult<PyHypergraph> {
    build_two_halves(t, r, p, l).map(|inner| PyHypergraph { inner }).map_err(value_error)
}

type TraceStep = (String, i128, u128);

/// Final satellite sizes and the trace as `(op, delta, edges)` triples.
#[pyfunction]
fn normalize_spectrum(k: usize, r: usize, l: usize, sizes: Vec<usize>) -> PyResult<(Vec<usize>, Vec<TraceStep>)> {
    let sp = SatelliteSpectrum::from_sizes(k, r, l, &sizes).map_err(value_error)?;
    let out = normalize::normalize(&sp).map_err(value_error)?;
    let trace = out.trace.iter().map(|s| (s.op.to_string(), s.delta, s.edges)).collect();
    Ok((out.result.sizes(), trace))
}

#[pymodule]
fn hx(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyHypergraph>()?;
    m.add_function(wrap_pyfunction!(thresholds, m)?)?;
    m.add_function(wrap_pyfunction!(bounds, m)?)?;
    m.add_function(wrap_pyfunction!(msh, m)?)?;
    m.add_function(wrap_pyfunction!(two_halves, m)?)?;
    m.add_function(wrap_pyfunction!(normalize_spectrum, m)?)?;
    Ok(())
}
