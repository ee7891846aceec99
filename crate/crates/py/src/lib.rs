//! Python extension module exposing the robust disk-graph algorithms.
//!
//! Graphs cross the boundary as `Graph` and `Digraph` handles; every
//! solver returns an `Outcome` whose `kind` tells the caller whether it
//! got an answer or a certified domain rejection. Build the module with
//! `cargo build -p rdg-py --release` and import the resulting
//! `librdg.so` as `rdg` (see `python/smoke_test.py`).

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use rdg_core::geometry::{self, Site, SiteSet};
use rdg_core::oracle;
use rdg_core::tg::{DirectedTriangleOutcome, TgRejection};
use rdg_core::udg::{GirthOutcome, TriangleOutcome, UdgRejection};
use rdg_core::{DirectedGraph, UndirectedGraph};

/// Undirected graph handle. Vertices are `0..n`; edges are unordered
/// pairs with no loops or duplicates.
#[pyclass(frozen)]
struct Graph {
    inner: UndirectedGraph,
}

#[pymethods]
impl Graph {
    #[new]
    fn new(n: usize, edges: Vec<(u32, u32)>) -> PyResult<Self> {
        UndirectedGraph::build(n, &edges)
            .map(|inner| Graph { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn n(&self) -> usize {
        self.inner.n()
    }

    fn m(&self) -> usize {
        self.inner.m()
    }

    fn degree(&self, v: u32) -> PyResult<usize> {
        check_vertex(v, self.inner.n())?;
        Ok(self.inner.degree(v))
    }

    fn neighbors(&self, v: u32) -> PyResult<Vec<u32>> {
        check_vertex(v, self.inner.n())?;
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn has_edge(&self, u: u32, v: u32) -> PyResult<bool> {
        check_vertex(u, self.inner.n())?;
        check_vertex(v, self.inner.n())?;
        Ok(self.inner.adjacency_test(u, v))
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// Directed graph handle. Arcs are ordered pairs; `u -> v` and `v -> u`
/// may coexist.
#[pyclass(frozen)]
struct Digraph {
    inner: DirectedGraph,
}

#[pymethods]
impl Digraph {
    #[new]
    fn new(n: usize, edges: Vec<(u32, u32)>) -> PyResult<Self> {
        DirectedGraph::build(n, &edges)
            .map(|inner| Digraph { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn n(&self) -> usize {
        self.inner.n()
    }

    fn m(&self) -> usize {
        self.inner.m()
    }

    fn out_degree(&self, v: u32) -> PyResult<usize> {
        check_vertex(v, self.inner.n())?;
        Ok(self.inner.out_degree(v))
    }

    fn out_neighbors(&self, v: u32) -> PyResult<Vec<u32>> {
        check_vertex(v, self.inner.n())?;
        Ok(self.inner.out_neighbors(v).to_vec())
    }

    fn __repr__(&self) -> String {
        format!("Digraph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// Solver result. `kind` is one of `triangle`, `triangle_free`, `girth`,
/// `no_cycle`, or `not_in_domain`; rejections carry a `reason` and the
/// witness vertices.
#[pyclass(frozen)]
struct Outcome {
    #[pyo3(get)]
    kind: String,
    #[pyo3(get)]
    vertices: Vec<u32>,
    #[pyo3(get)]
    girth: Option<u32>,
    #[pyo3(get)]
    reason: Option<String>,
}

#[pymethods]
impl Outcome {
    fn __repr__(&self) -> String {
        let mut parts = vec![format!("kind='{}'", self.kind)];
        if let Some(k) = self.girth {
            parts.push(format!("girth={k}"));
        }
        if let Some(reason) = &self.reason {
            parts.push(format!("reason='{reason}'"));
        }
        if !self.vertices.is_empty() {
            parts.push(format!("vertices={:?}", self.vertices));
        }
        format!("Outcome({})", parts.join(", "))
    }
}

impl Outcome {
    fn answer(kind: &str, vertices: Vec<u32>, girth: Option<u32>) -> Self {
        Outcome {
            kind: kind.to_string(),
            vertices,
            girth,
            reason: None,
        }
    }

    fn rejection(reason: &str, vertices: Vec<u32>) -> Self {
        Outcome {
            kind: "not_in_domain".to_string(),
            vertices,
            girth: None,
            reason: Some(reason.to_string()),
        }
    }
}

fn check_vertex(v: u32, n: usize) -> PyResult<()> {
    if (v as usize) < n {
        Ok(())
    } else {
        Err(PyValueError::new_err(format!("vertex {v} out of range (n = {n})")))
    }
}

fn degree_witness(vertex: u32, neighbors: &[u32]) -> Vec<u32> {
    let mut vertices = vec![vertex];
    vertices.extend_from_slice(neighbors);
    vertices
}

/// Builds the unit disk graph of `(x, y)` sites: an edge joins two sites
/// whose centers lie within distance 2.
#[pyfunction]
fn unit_disk_graph(sites: Vec<(f64, f64)>) -> PyResult<Graph> {
    let sites: Vec<Site> = sites
        .into_iter()
        .map(|(x, y)| Site { x, y, r: 1.0 })
        .collect();
    let set = SiteSet::new(sites).map_err(|e| PyValueError::new_err(e.to_string()))?;
    geometry::unit_disk_graph(&set)
        .map(|inner| Graph { inner })
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Builds the transmission graph of `(x, y, r)` sites: an arc runs from
/// `s` to `t` when `t` lies within distance `r_s` of `s`.
#[pyfunction]
fn transmission_graph(sites: Vec<(f64, f64, f64)>) -> PyResult<Digraph> {
    let sites: Vec<Site> = sites
        .into_iter()
        .map(|(x, y, r)| Site { x, y, r })
        .collect();
    let set = SiteSet::new(sites).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(Digraph {
        inner: geometry::transmission_graph(&set),
    })
}

/// Samples `n` unit-radius sites uniformly from a `box_side` square,
/// resampling any site that lands within rounding distance of an edge
/// threshold.
#[pyfunction]
fn random_udg_sites(n: usize, box_side: f64, seed: u64) -> PyResult<Vec<(f64, f64)>> {
    if !box_side.is_finite() || box_side <= 0.0 {
        return Err(PyValueError::new_err("box_side must be positive"));
    }
    let set = geometry::random_sites(n, box_side, (1.0, 1.0), seed);
    Ok(set.sites().iter().map(|s| (s.x, s.y)).collect())
}

/// Samples `n` sites with radii uniform in `[r_min, r_max]`.
#[pyfunction]
fn random_tg_sites(
    n: usize,
    box_side: f64,
    r_min: f64,
    r_max: f64,
    seed: u64,
) -> PyResult<Vec<(f64, f64, f64)>> {
    if !box_side.is_finite() || box_side <= 0.0 {
        return Err(PyValueError::new_err("box_side must be positive"));
    }
    if !(r_min.is_finite() && r_max.is_finite()) || r_min <= 0.0 || r_max < r_min {
        return Err(PyValueError::new_err("need 0 < r_min <= r_max"));
    }
    let set = geometry::random_sites(n, box_side, (r_min, r_max), seed);
    Ok(set.sites().iter().map(|s| (s.x, s.y, s.r)).collect())
}

/// Star with center 0 and `k` leaves.
#[pyfunction]
fn star(k: u32) -> Graph {
    Graph {
        inner: geometry::star(k),
    }
}

/// The Petersen graph.
#[pyfunction]
fn petersen() -> Graph {
    Graph {
        inner: geometry::petersen(),
    }
}

/// One-way directed cycle on `k >= 2` vertices.
#[pyfunction]
fn dicycle(k: u32) -> PyResult<Digraph> {
    if k < 2 {
        return Err(PyValueError::new_err("dicycle needs k >= 2"));
    }
    Ok(Digraph {
        inner: geometry::dicycle(k),
    })
}

/// Star with center 0, `k` leaves, and every edge directed both ways.
#[pyfunction]
fn bistar(k: u32) -> Digraph {
    Digraph {
        inner: geometry::bistar(k),
    }
}

/// Triangle search under the disk-graph promise: a triangle, a
/// triangle-free verdict, or a high-degree independent-set witness that
/// the input is no disk graph.
#[pyfunction]
fn find_triangle(g: &Graph) -> Outcome {
    match rdg_core::udg::find_triangle(&g.inner) {
        TriangleOutcome::Triangle(t) => Outcome::answer("triangle", t.to_vec(), None),
        TriangleOutcome::TriangleFree => Outcome::answer("triangle_free", Vec::new(), None),
        TriangleOutcome::NotInDomain(w) => {
            Outcome::rejection("high_degree_no_triangle", degree_witness(w.vertex, &w.neighbors))
        }
    }
}

/// Girth under the disk-graph promise: a shortest cycle, a forest
/// verdict, or a witness that the input is no disk graph.
#[pyfunction]
fn girth(g: &Graph) -> Outcome {
    match rdg_core::udg::girth(&g.inner) {
        GirthOutcome::Girth { girth, cycle } => Outcome::answer("girth", cycle, Some(girth)),
        GirthOutcome::NoCycle => Outcome::answer("no_cycle", Vec::new(), None),
        GirthOutcome::NotInDomain(UdgRejection::HighDegreeNoTriangle(w)) => {
            Outcome::rejection("high_degree_no_triangle", degree_witness(w.vertex, &w.neighbors))
        }
        GirthOutcome::NotInDomain(UdgRejection::NonPlanarTriangleFree(_)) => {
            Outcome::rejection("non_planar_triangle_free", Vec::new())
        }
    }
}

/// Directed triangle search under the transmission-graph promise.
#[pyfunction]
fn find_directed_triangle(d: &Digraph) -> Outcome {
    match rdg_core::tg::find_directed_triangle(&d.inner) {
        DirectedTriangleOutcome::Triangle { v, u, w } => {
            Outcome::answer("triangle", vec![v, u, w], None)
        }
        DirectedTriangleOutcome::TriangleFree => Outcome::answer("triangle_free", Vec::new(), None),
        DirectedTriangleOutcome::NotInDomain(TgRejection::UniSubgraphCyclic { cycle }) => {
            Outcome::rejection("uni_subgraph_cyclic", cycle)
        }
        DirectedTriangleOutcome::NotInDomain(TgRejection::HighBiDegreeNoTriangle(w)) => {
            Outcome::rejection("high_bi_degree_no_triangle", degree_witness(w.vertex, &w.neighbors))
        }
    }
}

/// Left-right planarity test, usable on any undirected graph.
#[pyfunction]
fn is_planar(g: &Graph) -> bool {
    rdg_core::udg::is_planar(&g.inner)
}

fn oracle_err(e: oracle::OracleError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Brute-force triangle search (reference oracle, small graphs only).
#[pyfunction]
fn brute_triangle(g: &Graph) -> PyResult<Option<(u32, u32, u32)>> {
    oracle::brute_triangle(&g.inner)
        .map(|t| t.map(|[a, b, c]| (a, b, c)))
        .map_err(oracle_err)
}

/// Brute-force girth (reference oracle, small graphs only). Returns
/// `(girth, cycle)` or `None` for forests.
#[pyfunction]
fn brute_girth(g: &Graph) -> PyResult<Option<(u32, Vec<u32>)>> {
    oracle::brute_girth(&g.inner).map_err(oracle_err)
}

/// Brute-force directed triangle search (reference oracle, small graphs
/// only).
#[pyfunction]
fn brute_directed_triangle(d: &Digraph) -> PyResult<Option<(u32, u32, u32)>> {
    oracle::brute_directed_triangle(&d.inner)
        .map(|t| t.map(|[a, b, c]| (a, b, c)))
        .map_err(oracle_err)
}

#[pymodule]
fn rdg(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<Digraph>()?;
    m.add_class::<Outcome>()?;
    m.add_function(wrap_pyfunction!(unit_disk_graph, m)?)?;
    m.add_function(wrap_pyfunction!(transmission_graph, m)?)?;
    m.add_function(wrap_pyfunction!(random_udg_sites, m)?)?;
    m.add_function(wrap_pyfunction!(random_tg_sites, m)?)?;
    m.add_function(wrap_pyfunction!(star, m)?)?;
    m.add_function(wrap_pyfunction!(petersen, m)?)?;
    m.add_function(wrap_pyfunction!(dicycle, m)?)?;
    m.add_function(wrap_pyfunction!(bistar, m)?)?;
    m.add_function(wrap_pyfunction!(find_triangle, m)?)?;
    m.add_function(wrap_pyfunction!(girth, m)?)?;
    m.add_function(wrap_pyfunction!(find_directed_triangle, m)?)?;
    m.add_function(wrap_pyfunction!(is_planar, m)?)?;
    m.add_function(wrap_pyfunction!(brute_triangle, m)?)?;
    m.add_function(wrap_pyfunction!(brute_girth, m)?)?;
    m.add_function(wrap_pyfunction!(brute_directed_triangle, m)?)?;
    Ok(())
}
