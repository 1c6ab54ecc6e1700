//! Python bindings. Vertices are 0-based, labels are plain integer lists
//! indexed by vertex, and library errors surface as `ValueError`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use ddmog::{search, Labeling, Provenance};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn labeling(labels: Vec<i64>) -> PyResult<Labeling> {
    Labeling::new(labels).map_err(err)
}

#[pyclass(name = "OrientedGraph", frozen, eq, from_py_object, module = "pyddmog")]
#[derive(Clone, PartialEq)]
struct PyGraph(ddmog::OrientedGraph);

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (order, edges = Vec::new()))]
    fn new(order: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        ddmog::OrientedGraph::new(order, edges).map(Self).map_err(err)
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().to_vec()
    }

    fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    fn in_neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.check(v)?;
        Ok(self.0.in_neighbors(v).to_vec())
    }

    fn out_neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.check(v)?;
        Ok(self.0.out_neighbors(v).to_vec())
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        self.check(v)?;
        Ok(self.0.degree(v))
    }

    fn reversed(&self) -> Self {
        Self(self.0.reversed())
    }

    fn underlying_edges(&self) -> Vec<(usize, usize)> {
        self.0.underlying_edges()
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn necessary_condition_violations(&self) -> Vec<usize> {
        self.0.necessary_condition_violations()
    }

    fn __repr__(&self) -> String {
        format!("OrientedGraph(order={}, edges={:?})", self.0.order(), self.0.edges())
    }
}

impl PyGraph {
    fn check(&self, v: usize) -> PyResult<()> {
        if v < self.0.order() {
            Ok(())
        } else {
            Err(err(format!("vertex {v} out of range for order {}", self.0.order())))
        }
    }
}

#[pyclass(name = "LabeledGraph", frozen, eq, from_py_object, module = "pyddmog")]
#[derive(Clone, PartialEq)]
struct PyLabeled(ddmog::LabeledGraph);

#[pymethods]
impl PyLabeled {
    #[new]
    fn new(graph: &PyGraph, labels: Vec<i64>) -> PyResult<Self> {
        ddmog::LabeledGraph::new(graph.0.clone(), labeling(labels)?, Provenance::leaf("python", ""))
            .map(Self)
            .map_err(err)
    }

    #[getter]
    fn graph(&self) -> PyGraph {
        PyGraph(self.0.graph.clone())
    }

    #[getter]
    fn labels(&self) -> Vec<i64> {
        self.0.labeling.as_slice().to_vec()
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn provenance(&self) -> String {
        self.0.provenance.to_string()
    }

    fn is_ddm(&self) -> bool {
        self.0.is_ddm()
    }

    fn weights(&self) -> Vec<i64> {
        self.0.weights().0
    }

    fn imbalance(&self) -> i64 {
        self.0.imbalance()
    }

    fn canonical_by_label(&self) -> PyResult<Self> {
        self.0.canonical_by_label().map(Self).map_err(err)
    }

    fn labeled_edges(&self) -> Vec<(i64, i64)> {
        self.0.labeled_edges()
    }

    /// Canonical `ddmog 1` text.
    fn to_text(&self) -> String {
        ddmog::serialize(&ddmog::GraphDocument::from_labeled(&self.0))
    }

    #[pyo3(signature = (weights = false))]
    fn to_dot(&self, weights: bool) -> String {
        ddmog::export_dot(&self.0, weights)
    }

    fn __repr__(&self) -> String {
        format!(
            "LabeledGraph(order={}, labels={:?})",
            self.0.order(),
            self.0.labeling.as_slice()
        )
    }
}

#[pyfunction]
fn weight_vector(g: &PyGraph, labels: Vec<i64>) -> PyResult<Vec<i64>> {
    ddmog::weight_vector(&g.0, &labeling(labels)?).map(|w| w.0).map_err(err)
}

/// `(per-vertex imbalances, graph imbalance)`.
#[pyfunction]
fn imbalance_vector(g: &PyGraph) -> (Vec<i64>, i64) {
    let imb = ddmog::imbalance_vector(&g.0);
    (imb.imbalances, imb.graph_imbalance)
}

#[pyfunction]
fn skew_matrix(g: &PyGraph) -> Vec<Vec<i64>> {
    ddmog::skew_matrix(&g.0).to_rows()
}

#[pyfunction]
fn verify_ddm<'py>(py: Python<'py>, g: &PyGraph, labels: Vec<i64>) -> PyResult<Bound<'py, PyDict>> {
    let v = ddmog::verify_ddm(&g.0, &labeling(labels)?).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("is_ddm", v.is_ddm)?;
    d.set_item("is_standard_bijection", v.is_standard_bijection)?;
    d.set_item("weights", v.weights.0)?;
    Ok(d)
}

#[pyfunction]
fn kernel_feasibility<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyDict>> {
    let k = ddmog::kernel_feasibility(&g.0);
    let d = PyDict::new(py);
    d.set_item("dimension", k.dimension)?;
    d.set_item("free_columns", k.free_columns)?;
    d.set_item("feasible", k.feasible)?;
    Ok(d)
}

#[pyfunction]
fn augment_imbalance_one(g: &PyLabeled) -> PyResult<PyLabeled> {
    ddmog::augment_imbalance_one(&g.0).map(PyLabeled).map_err(err)
}

#[pyfunction]
fn chain(g1: &PyLabeled, g2: &PyLabeled) -> PyResult<PyLabeled> {
    ddmog::chain(&g1.0, &g2.0).map(PyLabeled).map_err(err)
}

#[pyfunction]
fn construct_ddmog(n: usize) -> PyResult<PyLabeled> {
    ddmog::construct_ddmog(n).map(PyLabeled).map_err(err)
}

#[pyfunction]
fn windmill(k: usize) -> PyResult<PyLabeled> {
    ddmog::windmill(k).map(PyLabeled).map_err(err)
}

#[pyfunction]
fn disjoint_union_ddm(g1: &PyLabeled, rest: Vec<PyLabeled>) -> PyResult<PyLabeled> {
    let rest: Vec<_> = rest.into_iter().map(|g| g.0).collect();
    ddmog::disjoint_union_ddm(&g1.0, &rest).map(PyLabeled).map_err(err)
}

#[pyfunction]
fn attach_ornaments(g: &PyLabeled, ell: usize) -> PyResult<PyLabeled> {
    ddmog::attach_ornaments(&g.0, ell).map(PyLabeled).map_err(err)
}

#[pyfunction]
fn weighted_sum(g: &PyLabeled, h: &PyLabeled, s: i64) -> PyResult<PyGraph> {
    ddmog::weighted_sum(&g.0, &h.0, s).map(PyGraph).map_err(err)
}

#[pyfunction]
fn weighted_sum_zero_shift_ddm(g: &PyLabeled, h: &PyLabeled) -> PyResult<PyLabeled> {
    ddmog::weighted_sum_zero_shift_ddm(&g.0, &h.0)
        .map(PyLabeled)
        .map_err(err)
}

#[pyfunction]
fn weighted_sum_shifted_ddm(g: &PyLabeled, h: &PyLabeled) -> PyResult<PyLabeled> {
    ddmog::weighted_sum_shifted_ddm(&g.0, &h.0).map(PyLabeled).map_err(err)
}

#[pyfunction]
fn catalog_names() -> Vec<&'static str> {
    ddmog::catalog::names()
}

/// `(graph, labels or None)` for a bundled entry.
#[pyfunction]
fn catalog_get(name: &str) -> PyResult<(PyGraph, Option<Vec<i64>>)> {
    let e = ddmog::catalog::get(name).map_err(err)?;
    Ok((
        PyGraph(e.graph.clone()),
        e.labeling.as_ref().map(|f| f.as_slice().to_vec()),
    ))
}

#[pyfunction]
fn catalog_labeled(name: &str) -> PyResult<PyLabeled> {
    ddmog::catalog::labeled(name).map(PyLabeled).map_err(err)
}

fn config(mode: &str, prune: bool) -> PyResult<search::SearchConfig> {
    let mode = match mode {
        "first" => search::SearchMode::First,
        "all" => search::SearchMode::All,
        "count" => search::SearchMode::Count,
        other => return Err(err(format!("mode must be first, all or count, got {other:?}"))),
    };
    Ok(if prune {
        search::SearchConfig::with_mode(mode)
    } else {
        search::SearchConfig::unpruned(mode)
    })
}

fn status(s: search::SearchStatus) -> &'static str {
    match s {
        search::SearchStatus::Found => "found",
        search::SearchStatus::ExhaustedNone => "exhausted_none",
        search::SearchStatus::AbortedCap => "aborted_cap",
    }
}

#[pyfunction]
#[pyo3(signature = (g, mode = "first", prune = true))]
fn search_labeling<'py>(py: Python<'py>, g: &PyGraph, mode: &str, prune: bool) -> PyResult<Bound<'py, PyDict>> {
    let out = ddmog::search_labeling(&g.0, &config(mode, prune)?).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("status", status(out.status))?;
    d.set_item(
        "labelings",
        out.labelings.iter().map(|f| f.as_slice().to_vec()).collect::<Vec<_>>(),
    )?;
    d.set_item("count", out.count)?;
    d.set_item("nodes_explored", out.nodes_explored)?;
    d.set_item("leaves_evaluated", out.leaves_evaluated)?;
    Ok(d)
}

#[pyfunction]
#[pyo3(signature = (order, edges, prune = true))]
fn search_orientation<'py>(
    py: Python<'py>,
    order: usize,
    edges: Vec<(usize, usize)>,
    prune: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let out = ddmog::search_orientation(order, &edges, &config("first", prune)?).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("status", status(out.status))?;
    d.set_item("is_ddmo", out.is_ddmo)?;
    let witness = out
        .witness
        .map(|(g, f)| ddmog::LabeledGraph::new(g, f, Provenance::leaf("search", "orientation witness")))
        .transpose()
        .map_err(err)?
        .map(PyLabeled);
    d.set_item("witness", witness)?;
    d.set_item("orientations_examined", out.orientations_examined)?;
    d.set_item("labeling_searches", out.labeling_searches)?;
    Ok(d)
}

/// Parses `ddmog 1` text into `(graph, labels or None, comments)`.
#[pyfunction]
fn parse(text: &str) -> PyResult<(PyGraph, Option<Vec<i64>>, Vec<String>)> {
    let doc = ddmog::parse(text).map_err(err)?;
    let labels = doc.labeling().map_err(err)?.map(Labeling::into_vec);
    Ok((PyGraph(doc.graph), labels, doc.comments))
}

#[pyfunction]
#[pyo3(signature = (graph, labels = None, comments = Vec::new()))]
fn serialize(graph: &PyGraph, labels: Option<Vec<i64>>, comments: Vec<String>) -> PyResult<String> {
    let doc = match labels {
        Some(l) => {
            let lg =
                ddmog::LabeledGraph::new(graph.0.clone(), labeling(l)?, Provenance::leaf("python", "")).map_err(err)?;
            ddmog::GraphDocument::from_labeled(&lg)
        }
        None => ddmog::GraphDocument::new(graph.0.clone()),
    };
    Ok(ddmog::serialize(&doc.with_comments(comments)))
}

#[pymodule]
fn pyddmog(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyLabeled>()?;
    m.add_function(wrap_pyfunction!(weight_vector, m)?)?;
    m.add_function(wrap_pyfunction!(imbalance_vector, m)?)?;
    m.add_function(wrap_pyfunction!(skew_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(verify_ddm, m)?)?;
    m.add_function(wrap_pyfunction!(kernel_feasibility, m)?)?;
    m.add_function(wrap_pyfunction!(augment_imbalance_one, m)?)?;
    m.add_function(wrap_pyfunction!(chain, m)?)?;
    m.add_function(wrap_pyfunction!(construct_ddmog, m)?)?;
    m.add_function(wrap_pyfunction!(windmill, m)?)?;
    m.add_function(wrap_pyfunction!(disjoint_union_ddm, m)?)?;
    m.add_function(wrap_pyfunction!(attach_ornaments, m)?)?;
    m.add_function(wrap_pyfunction!(weighted_sum, m)?)?;
    m.add_function(wrap_pyfunction!(weighted_sum_zero_shift_ddm, m)?)?;
    m.add_function(wrap_pyfunction!(weighted_sum_shifted_ddm, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_get, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_labeled, m)?)?;
    m.add_function(wrap_pyfunction!(search_labeling, m)?)?;
    m.add_function(wrap_pyfunction!(search_orientation, m)?)?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(serialize, m)?)?;
    Ok(())
}
