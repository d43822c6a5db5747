use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use indpath::bench::{self, build_instance};
use indpath::extract::{self, Algorithm};
use indpath::graph::io::{parse_graph, write_graph};
use indpath::graph::verify_path_witness;
use indpath::interval::IntervalRep;
use indpath::oracle::{longest_induced_path_exact, longest_path_exact, SearchBudget};
use indpath::{acceptance, Error, PathWitness};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Undirected simple graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "pyindpath", skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: indpath::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: indpath::Graph::from_edges(n, &edges).map_err(err)?,
        })
    }

    /// Parses the `p <n> <m>` / `e <u> <v>` text format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: parse_graph(text).map_err(err)?,
        })
    }

    /// Intersection graph of closed intervals with distinct endpoints.
    #[staticmethod]
    fn from_intervals(intervals: Vec<(i64, i64)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: IntervalRep::new(&intervals).map_err(err)?.graph(),
        })
    }

    fn to_text(&self) -> String {
        write_graph(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.check(v)?;
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn has_edge(&self, u: usize, v: usize) -> PyResult<bool> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.inner.has_edge(u, v))
    }

    /// Adds the edge; returns False if it was already present.
    fn add_edge(&mut self, u: usize, v: usize) -> PyResult<bool> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(PyValueError::new_err(format!("self-loop at {u}")));
        }
        Ok(self.inner.add_edge(u, v))
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }
}

impl PyGraph {
    fn check(&self, v: usize) -> PyResult<()> {
        if v < self.inner.n() {
            Ok(())
        } else {
            Err(PyValueError::new_err(format!(
                "vertex {v} out of range (n={})",
                self.inner.n()
            )))
        }
    }
}

/// Checks a path against the graph. Returns None when valid, else the reason.
#[pyfunction]
#[pyo3(signature = (graph, vertices, induced = true))]
fn verify_path(graph: &PyGraph, vertices: Vec<usize>, induced: bool) -> Option<String> {
    let w = PathWitness {
        vertices,
        claims_induced: induced,
    };
    verify_path_witness(&graph.inner, &w).err()
}

fn budget(max_nodes: u64, max_millis: u64) -> SearchBudget {
    SearchBudget { max_nodes, max_millis }
}

/// Exact longest induced path: (vertices, optimal).
#[pyfunction]
#[pyo3(signature = (graph, max_nodes = 10_000_000, max_millis = 60_000))]
fn longest_induced_path(py: Python<'_>, graph: &PyGraph, max_nodes: u64, max_millis: u64) -> (Vec<usize>, bool) {
    let g = graph.inner.clone();
    let r = py.detach(move || longest_induced_path_exact(&g, budget(max_nodes, max_millis)));
    (r.witness.vertices, r.optimal)
}

/// Exact longest path: (vertices, optimal).
#[pyfunction]
#[pyo3(signature = (graph, max_nodes = 10_000_000, max_millis = 60_000))]
fn longest_path(py: Python<'_>, graph: &PyGraph, max_nodes: u64, max_millis: u64) -> (Vec<usize>, bool) {
    let g = graph.inner.clone();
    let r = py.detach(move || longest_path_exact(&g, budget(max_nodes, max_millis)));
    (r.witness.vertices, r.optimal)
}

/// Runs an extractor (`ktree`, `tw2`, `tw2-connected`, `outerplanar`,
/// `bracelet`, `interval` or `auto`) on `graph` with the path `path`.
/// Returns a dict with the algorithm that ran, the induced path, the
/// guaranteed size and run details.
#[pyfunction]
#[pyo3(signature = (algorithm, graph, path, intervals = None))]
fn extract_path<'py>(
    py: Python<'py>,
    algorithm: &str,
    graph: &PyGraph,
    path: Vec<usize>,
    intervals: Option<Vec<(i64, i64)>>,
) -> PyResult<Bound<'py, pyo3::types::PyDict>> {
    let algo: Algorithm = algorithm.parse().map_err(err)?;
    let rep = intervals.map(|iv| IntervalRep::new(&iv)).transpose().map_err(err)?;
    let x = extract::run(algo, &graph.inner, &PathWitness::plain(path), rep.as_ref()).map_err(err)?;
    let d = pyo3::types::PyDict::new(py);
    d.set_item("algorithm", x.algorithm.name())?;
    d.set_item("path", x.witness.vertices.clone())?;
    d.set_item("bound", x.bound)?;
    d.set_item("meets_bound", x.meets_bound())?;
    d.set_item("detail", x.detail)?;
    Ok(d)
}

/// Builds a named instance, e.g. `generate("doubling", {"i": 3})`.
/// Returns (graph, hamiltonian path or None, intervals or None).
#[pyfunction]
#[pyo3(signature = (family, params, seed = 0))]
#[allow(clippy::type_complexity)]
fn generate(
    family: &str,
    params: BTreeMap<String, usize>,
    seed: u64,
) -> PyResult<(PyGraph, Option<Vec<usize>>, Option<Vec<(i64, i64)>>)> {
    let inst = build_instance(family, &params, seed).map_err(err)?;
    let intervals = inst
        .rep
        .as_ref()
        .map(|r| (0..r.len()).map(|v| (r.left(v), r.right(v))).collect());
    Ok((PyGraph { inner: inst.graph }, inst.path.map(|p| p.vertices), intervals))
}

/// Runs a JSON benchmark suite and returns the CSV table.
#[pyfunction]
#[pyo3(signature = (suite_json, seed = 0))]
fn bench_suite(py: Python<'_>, suite_json: &str, seed: u64) -> PyResult<String> {
    let suite = bench::parse_suite(suite_json).map_err(err)?;
    let rows = py
        .detach(move || bench::run_suite(&suite, seed, SearchBudget::default()))
        .map_err(err)?;
    bench::to_csv(&rows.into_iter().map(|o| o.row).collect::<Vec<_>>()).map_err(err)
}

/// Runs acceptance criterion `id` (1-11): (passed, report line).
#[pyfunction]
fn run_criterion(py: Python<'_>, id: usize) -> (bool, String) {
    let o = py.detach(move || acceptance::run_criterion(id));
    (o.passed, o.to_string())
}

#[pymodule]
fn pyindpath(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(verify_path, m)?)?;
    m.add_function(wrap_pyfunction!(longest_induced_path, m)?)?;
    m.add_function(wrap_pyfunction!(longest_path, m)?)?;
    m.add_function(wrap_pyfunction!(extract_path, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(bench_suite, m)?)?;
    m.add_function(wrap_pyfunction!(run_criterion, m)?)?;
    Ok(())
}
