//! Python bindings: `import pyfworm`.

use std::time::Duration;

use fworm::constructions as cons;
use fworm::graph::{self, decode_graph6, encode_graph6};
use fworm::worm;
use fworm::{Budget, Coloring, Extremum, NamedGraph};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn err(e: fworm::Error) -> PyErr {
    match e {
        fworm::Error::BudgetExceeded { .. } | fworm::Error::TooLarge { .. } => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Hands a JSON value to Python as plain dicts and lists.
fn to_py(py: Python<'_>, value: &serde_json::Value) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn extremum(e: Extremum) -> PyResult<Option<usize>> {
    match e {
        Extremum::Value(v) => Ok(Some(v)),
        Extremum::NotColorable => Ok(None),
        Extremum::Unknown => Err(PyRuntimeError::new_err("search budget exhausted")),
    }
}

fn budget(time_limit: Option<f64>, node_limit: Option<u64>) -> PyResult<Budget> {
    let time_limit = match time_limit {
        Some(t) if !(t.is_finite() && t > 0.0) => {
            return Err(PyValueError::new_err("time_limit must be positive"))
        }
        t => t.map(Duration::from_secs_f64),
    };
    Ok(Budget {
        node_limit,
        time_limit,
    })
}

/// An undirected simple graph on vertices `0..order`.
#[pyclass(name = "Graph", module = "pyfworm", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: graph::Graph,
}

impl From<graph::Graph> for PyGraph {
    fn from(inner: graph::Graph) -> Self {
        PyGraph { inner }
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        graph::Graph::from_edges(n, edges)
            .map(Self::from)
            .map_err(err)
    }

    /// Catalog graph by name, e.g. `"k4"`, `"c5"`, `"petersen"`.
    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        name.parse::<NamedGraph>()
            .map(|g| g.build().into())
            .map_err(err)
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        graph::complete(n).into()
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        if n < 3 {
            return Err(PyValueError::new_err("a cycle needs at least 3 vertices"));
        }
        Ok(graph::cycle(n).into())
    }

    #[staticmethod]
    fn path(n: usize) -> Self {
        graph::path(n).into()
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        decode_graph6(text.as_bytes()).map(Self::from).map_err(err)
    }

    fn to_graph6(&self) -> String {
        encode_graph6(&self.inner)
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn size(&self) -> usize {
        self.inner.size()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.order() && v < self.inner.order() && self.inner.has_edge(u, v)
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.order() {
            return Err(PyValueError::new_err("vertex out of range"));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn is_triangle_free(&self) -> bool {
        self.inner.is_triangle_free()
    }

    fn clique_number(&self) -> usize {
        self.inner.clique_number()
    }

    /// `{"n", "edges", "labels"?}` as a dict.
    fn to_dict(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let value = serde_json::to_value(graph::GraphJson::from(&self.inner))
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
        to_py(py, &value)
    }

    fn to_dot(&self) -> String {
        graph::to_dot(&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner.clone().without_labels() == other.inner.clone().without_labels()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(order={}, size={})",
            self.inner.order(),
            self.inner.size()
        )
    }
}

#[pyfunction]
fn join(a: &PyGraph, b: &PyGraph) -> PyGraph {
    graph::join(&a.inner, &b.inner).into()
}

#[pyfunction]
fn strong_product(a: &PyGraph, b: &PyGraph) -> PyGraph {
    graph::strong_product(&a.inner, &b.inner).into()
}

/// Sorted vertex sets of all copies of `pattern` in `host`.
#[pyfunction]
fn copies(py: Python<'_>, host: &PyGraph, pattern: &PyGraph) -> PyResult<Vec<Vec<usize>>> {
    let fam = py
        .detach(|| fworm::enumerate_copies(&host.inner, &pattern.inner))
        .map_err(err)?;
    Ok(fam.members().to_vec())
}

/// `("ok", None)`, `("monochromatic_copy", copy)` or `("rainbow_copy", copy)`.
#[pyfunction]
fn verify(
    host: &PyGraph,
    pattern: &PyGraph,
    colors: Vec<usize>,
) -> PyResult<(String, Option<Vec<usize>>)> {
    let fam = fworm::enumerate_copies(&host.inner, &pattern.inner).map_err(err)?;
    Ok(
        match fworm::verify(&host.inner, &fam, &Coloring::new(colors)).map_err(err)? {
            fworm::Verdict::Ok => ("ok".into(), None),
            fworm::Verdict::MonochromaticCopy(c) => ("monochromatic_copy".into(), Some(c)),
            fworm::Verdict::RainbowCopy(c) => ("rainbow_copy".into(), Some(c)),
        },
    )
}

/// Per-k statuses, witnesses, extremes and gaps as a dict.
#[pyfunction]
#[pyo3(signature = (host, pattern, time_limit = None, node_limit = None))]
fn feasible_set(
    py: Python<'_>,
    host: &PyGraph,
    pattern: &PyGraph,
    time_limit: Option<f64>,
    node_limit: Option<u64>,
) -> PyResult<Py<PyAny>> {
    let budget = budget(time_limit, node_limit)?;
    let fs = py
        .detach(|| {
            let fam = fworm::enumerate_copies(&host.inner, &pattern.inner)?;
            worm::feasible_set(&host.inner, &fam, budget)
        })
        .map_err(err)?;
    to_py(py, &fs.to_json())
}

/// Lower WORM chromatic number, or `None` when no WORM coloring exists.
#[pyfunction]
#[pyo3(signature = (host, pattern, time_limit = None, node_limit = None))]
fn w_minus(
    py: Python<'_>,
    host: &PyGraph,
    pattern: &PyGraph,
    time_limit: Option<f64>,
    node_limit: Option<u64>,
) -> PyResult<Option<usize>> {
    let budget = budget(time_limit, node_limit)?;
    let e = py
        .detach(|| {
            let fam = fworm::enumerate_copies(&host.inner, &pattern.inner)?;
            worm::w_minus(&host.inner, &fam, budget)
        })
        .map_err(err)?;
    extremum(e)
}

/// Upper WORM chromatic number, or `None` when no WORM coloring exists.
#[pyfunction]
#[pyo3(signature = (host, pattern, time_limit = None, node_limit = None))]
fn w_plus(
    py: Python<'_>,
    host: &PyGraph,
    pattern: &PyGraph,
    time_limit: Option<f64>,
    node_limit: Option<u64>,
) -> PyResult<Option<usize>> {
    let budget = budget(time_limit, node_limit)?;
    let e = py
        .detach(|| {
            let fam = fworm::enumerate_copies(&host.inner, &pattern.inner)?;
            worm::w_plus(&host.inner, &fam, budget)
        })
        .map_err(err)?;
    extremum(e)
}

#[pyfunction]
fn chromatic_number(py: Python<'_>, g: &PyGraph) -> PyResult<usize> {
    let e = py.detach(|| worm::chromatic_number(&g.inner, Budget::unlimited()));
    Ok(extremum(e)?.unwrap_or(0))
}

/// A proper coloring with exactly `k` colors, or `None`.
#[pyfunction]
fn proper_coloring(py: Python<'_>, g: &PyGraph, k: usize) -> Option<Vec<usize>> {
    match py.detach(|| worm::proper_coloring_exactly(&g.inner, k, Budget::unlimited())) {
        worm::KStatus::Feasible(c) => Some(c.colors().to_vec()),
        _ => None,
    }
}

/// `ceil(s / (n-1))`, or `None` when `K_s` has no WORM coloring.
#[pyfunction]
fn complete_graph_w_minus(s: usize, n: usize) -> PyResult<Option<usize>> {
    Ok(match worm::complete_graph_w_minus(s, n).map_err(err)? {
        worm::CompleteWMinus::Value(v) => Some(v),
        worm::CompleteWMinus::NotColorable => None,
    })
}

#[pyfunction]
fn worm_from_proper(g: &PyGraph, n: usize, proper: Vec<usize>) -> PyResult<Vec<usize>> {
    let c = worm::worm_from_proper(&g.inner, n, &Coloring::new(proper)).map_err(err)?;
    Ok(c.colors().to_vec())
}

/// `(graph, layout)` for the gadget of `pattern`.
#[pyfunction]
fn gadget(py: Python<'_>, pattern: &PyGraph) -> PyResult<(PyGraph, Py<PyAny>)> {
    let l = cons::gadget(&pattern.inner).map_err(err)?;
    Ok((l.graph.clone().into(), to_py(py, &l.to_json())?))
}

#[pyfunction]
fn gadget_witness(pattern: &PyGraph, outer: usize) -> PyResult<Vec<usize>> {
    let l = cons::gadget(&pattern.inner).map_err(err)?;
    if outer + 1 >= l.pattern_order {
        return Err(PyValueError::new_err("outer color must be below n - 1"));
    }
    Ok(l.witness(outer).colors().to_vec())
}

#[pyfunction]
#[pyo3(signature = (g, pattern, n0 = None))]
fn c1(
    py: Python<'_>,
    g: &PyGraph,
    pattern: &PyGraph,
    n0: Option<usize>,
) -> PyResult<(PyGraph, Py<PyAny>)> {
    let l = cons::c1(&g.inner, &pattern.inner, n0).map_err(err)?;
    Ok((l.graph.clone().into(), to_py(py, &l.to_json())?))
}

#[pyfunction]
fn c2(py: Python<'_>, g: &PyGraph, pattern: &PyGraph) -> PyResult<(PyGraph, Py<PyAny>)> {
    let l = cons::c2(&g.inner, &pattern.inner).map_err(err)?;
    Ok((l.graph.clone().into(), to_py(py, &l.to_json())?))
}

#[pyfunction]
fn gap_graph(py: Python<'_>, g: &PyGraph, n: usize) -> PyResult<(PyGraph, Py<PyAny>)> {
    let l = cons::gap_graph(&g.inner, n).map_err(err)?;
    Ok((l.graph.clone().into(), to_py(py, &l.to_json())?))
}

#[pyfunction]
#[pyo3(signature = (g, pattern, proper, n0 = None))]
fn witness_c1(
    g: &PyGraph,
    pattern: &PyGraph,
    proper: Vec<usize>,
    n0: Option<usize>,
) -> PyResult<Vec<usize>> {
    let l = cons::c1(&g.inner, &pattern.inner, n0).map_err(err)?;
    let w = cons::witness_c1(&l, &Coloring::new(proper)).map_err(err)?;
    Ok(w.colors().to_vec())
}

#[pyfunction]
fn witness_gap_low(g: &PyGraph, n: usize) -> PyResult<Vec<usize>> {
    let l = cons::gap_graph(&g.inner, n).map_err(err)?;
    Ok(cons::witness_gap_low(&l).colors().to_vec())
}

#[pyfunction]
fn witness_gap_high(g: &PyGraph, n: usize, proper: Vec<usize>) -> PyResult<Vec<usize>> {
    let l = cons::gap_graph(&g.inner, n).map_err(err)?;
    let w = cons::witness_gap_high(&l, &Coloring::new(proper)).map_err(err)?;
    Ok(w.colors().to_vec())
}

#[pymodule]
fn pyfworm(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(join, m)?)?;
    m.add_function(wrap_pyfunction!(strong_product, m)?)?;
    m.add_function(wrap_pyfunction!(copies, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(feasible_set, m)?)?;
    m.add_function(wrap_pyfunction!(w_minus, m)?)?;
    m.add_function(wrap_pyfunction!(w_plus, m)?)?;
    m.add_function(wrap_pyfunction!(chromatic_number, m)?)?;
    m.add_function(wrap_pyfunction!(proper_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(complete_graph_w_minus, m)?)?;
    m.add_function(wrap_pyfunction!(worm_from_proper, m)?)?;
    m.add_function(wrap_pyfunction!(gadget, m)?)?;
    m.add_function(wrap_pyfunction!(gadget_witness, m)?)?;
    m.add_function(wrap_pyfunction!(c1, m)?)?;
    m.add_function(wrap_pyfunction!(c2, m)?)?;
    m.add_function(wrap_pyfunction!(gap_graph, m)?)?;
    m.add_function(wrap_pyfunction!(witness_c1, m)?)?;
    m.add_function(wrap_pyfunction!(witness_gap_low, m)?)?;
    m.add_function(wrap_pyfunction!(witness_gap_high, m)?)?;
    Ok(())
}
