//! Python bindings. Results come back as plain dicts and lists, mirroring
//! the CLI's JSON.

use std::time::Duration;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

use tc::construct::{all_distinct, compose_exact, cover_composition, CoverTarget};
use tc::graph::{parse_graph6, to_graph6, FamilySpec, Graph};
use tc::harness::{run_bound_suite, sweep_graphs, Evaluator};
use tc::solver::{chromatic_number, SearchBudget, DEFAULT_MAX_NODES, DEFAULT_MAX_SECONDS};
use tc::{satisfies, Condition, ConstraintSet, Mode, Preset, TotalColoring};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py, T: Serialize>(py: Python<'py>, v: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(v).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn graph(g6: &str) -> PyResult<Graph> {
    parse_graph6(g6.trim()).map_err(value_err)
}

fn constraints(preset: Option<&str>, conditions: Option<Vec<String>>, mode: &str) -> PyResult<ConstraintSet> {
    match (preset, conditions) {
        (Some(p), None) => Ok(p.parse::<Preset>().map_err(value_err)?.constraint_set()),
        (None, Some(cs)) => {
            let mode: Mode = mode.parse().map_err(value_err)?;
            let cs = cs
                .iter()
                .map(|c| c.parse::<Condition>())
                .collect::<tc::Result<Vec<_>>>()
                .map_err(value_err)?;
            ConstraintSet::new(mode, cs).map_err(value_err)
        }
        _ => Err(PyValueError::new_err("give exactly one of preset or conditions")),
    }
}

fn budget(max_nodes: u64, max_seconds: f64) -> PyResult<SearchBudget> {
    if !(max_seconds.is_finite() && max_seconds > 0.0) {
        return Err(PyValueError::new_err("max_seconds must be positive"));
    }
    SearchBudget::new(max_nodes, Duration::from_secs_f64(max_seconds)).map_err(value_err)
}

/// graph6 string of a named family such as "cycle:5" or "kb:3,2".
#[pyfunction]
fn family(spec: &str) -> PyResult<String> {
    let g = spec.parse::<FamilySpec>().and_then(|s| s.build()).map_err(value_err)?;
    to_graph6(&g).map_err(value_err)
}

/// Names of the built-in presets.
#[pyfunction]
fn presets() -> Vec<&'static str> {
    Preset::ALL.iter().map(|p| p.name()).collect()
}

/// Edge list of a graph6 string; edge colorings follow this order.
#[pyfunction]
fn edges(graph6: &str) -> PyResult<Vec<(usize, usize)>> {
    Ok(graph(graph6)?.edges().to_vec())
}

/// Connected graphs in range that the distinguishing variants are defined
/// on, one per isomorphism class, as graph6.
#[pyfunction]
fn connected_graphs(n_min: usize, n_max: usize) -> PyResult<Vec<String>> {
    sweep_graphs(n_min, n_max)
        .map_err(value_err)?
        .iter()
        .map(|g| to_graph6(g).map_err(value_err))
        .collect()
}

#[pyfunction]
#[pyo3(signature = (graph6, preset=None, conditions=None, mode="total", max_nodes=DEFAULT_MAX_NODES, max_seconds=DEFAULT_MAX_SECONDS as f64, witness=true))]
#[allow(clippy::too_many_arguments)]
fn solve<'py>(
    py: Python<'py>,
    graph6: &str,
    preset: Option<&str>,
    conditions: Option<Vec<String>>,
    mode: &str,
    max_nodes: u64,
    max_seconds: f64,
    witness: bool,
) -> PyResult<Bound<'py, PyAny>> {
    let g = graph(graph6)?;
    let cs = constraints(preset, conditions, mode)?;
    let b = budget(max_nodes, max_seconds)?;
    let r = py
        .detach(|| chromatic_number(&g, &cs, b))
        .map_err(value_err)?;
    to_py(py, &r.record(&g, &cs, witness).map_err(value_err)?)
}

/// Checks a coloring given as a dict with `k`, `vertex_colors` and
/// `edge_colors`.
#[pyfunction]
#[pyo3(signature = (graph6, coloring, preset=None, conditions=None, mode="total"))]
fn verify<'py>(
    py: Python<'py>,
    graph6: &str,
    coloring: &Bound<'py, PyAny>,
    preset: Option<&str>,
    conditions: Option<Vec<String>>,
    mode: &str,
) -> PyResult<Bound<'py, PyAny>> {
    let g = graph(graph6)?;
    let cs = constraints(preset, conditions, mode)?;
    let text: String = py.import("json")?.call_method1("dumps", (coloring,))?.extract()?;
    let f: TotalColoring = serde_json::from_str(&text).map_err(value_err)?;
    f.check_shape(&g, cs.mode()).map_err(value_err)?;
    to_py(py, &satisfies(&g, &f, &cs))
}

/// Every registered bound evaluated on one graph.
#[pyfunction]
#[pyo3(signature = (graph6, max_nodes=DEFAULT_MAX_NODES, max_seconds=DEFAULT_MAX_SECONDS as f64))]
fn bounds<'py>(py: Python<'py>, graph6: &str, max_nodes: u64, max_seconds: f64) -> PyResult<Bound<'py, PyAny>> {
    let g = graph(graph6)?;
    let ev = Evaluator::new(budget(max_nodes, max_seconds)?);
    let checks = py.detach(|| run_bound_suite(&g, &ev));
    to_py(py, &checks)
}

/// Explicit constructions: "all_distinct", "compose" (with `edge` "chi_s"
/// or "chi_as") and "cover" (with `target` "mu" or "mu_e").
#[pyfunction]
#[pyo3(signature = (method, graph6, edge="chi_s", target="mu"))]
fn construct<'py>(
    py: Python<'py>,
    method: &str,
    graph6: &str,
    edge: &str,
    target: &str,
) -> PyResult<Bound<'py, PyAny>> {
    let g = graph(graph6)?;
    let b = SearchBudget::default();
    let report = match method {
        "all_distinct" => all_distinct(&g),
        "compose" => compose_exact(&g, edge.parse::<Preset>().map_err(value_err)?, b),
        "cover" => {
            let t = match target {
                "mu" => CoverTarget::Mu,
                "mu_e" => CoverTarget::MuE,
                other => return Err(PyValueError::new_err(format!("unknown target {other:?}"))),
            };
            cover_composition(&g, t, b)
        }
        other => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    }
    .map_err(value_err)?;
    to_py(py, &report)
}

#[pymodule]
fn totalcolor(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(presets, m)?)?;
    m.add_function(wrap_pyfunction!(edges, m)?)?;
    m.add_function(wrap_pyfunction!(connected_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(bounds, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    Ok(())
}
