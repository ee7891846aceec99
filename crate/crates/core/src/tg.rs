//! Robust directed triangle finding for transmission graphs.
//!
//! Two structural facts about transmission graphs carry the algorithm: a
//! vertex with more than six bidirected neighbors always closes a triangle
//! with two of them, and every directed cycle contains at least one
//! bidirected edge (walking the cycle from the site with the largest radius,
//! the first edge back into its disk is bidirected). So either some vertex
//! has a large bidirected neighborhood and seven of its neighbors settle the
//! question, or all bidirected neighborhoods are small, the one-way part of
//! the graph must be acyclic, and every triangle contains a bidirected edge
//! that a linear intersection pass will find.

use crate::graph::{
    bidirected_table, counting_sort_transpose, BiNeighborTable, DirectedGraph, Vertex,
};

/// A vertex with more than six bidirected neighbors, seven of which are
/// pairwise non-adjacent (no edge in either direction). No transmission
/// graph contains this configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighBiDegreeWitness {
    pub vertex: Vertex,
    /// Seven bidirected neighbors with no edge between any two of them.
    pub neighbors: Vec<Vertex>,
}

/// Why the directed triangle search rejected its input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TgRejection {
    /// A directed cycle using only one-way edges; transmission graphs have
    /// none.
    UniSubgraphCyclic { cycle: Vec<Vertex> },
    HighBiDegreeNoTriangle(HighBiDegreeWitness),
}

/// Result of the robust directed triangle search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DirectedTriangleOutcome {
    /// Vertices `(v, u, w)` with edges `v -> u -> w -> v`.
    Triangle { v: Vertex, u: Vertex, w: Vertex },
    /// No directed triangle exists (unconditional).
    TriangleFree,
    /// The graph is not a transmission graph, with proof.
    NotInDomain(TgRejection),
}

/// Outcome of [`acyclicity_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Acyclicity {
    Acyclic,
    /// A directed cycle, rotated so its smallest vertex comes first.
    Cycle(Vec<Vertex>),
}

/// Work counters for the directed triangle search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TgStats {
    /// Edge probes among the seven chosen neighbors (high-bidegree branch).
    pub pair_checks: u64,
    /// Most times any single adjacency list was walked end to end during
    /// the intersection stage.
    pub max_list_scans: u32,
    pub high_bi_vertex: Option<Vertex>,
}

/// Removes every bidirected edge from `d`, keeping one-way edges only.
pub fn uni_subgraph(d: &DirectedGraph, bi: &BiNeighborTable) -> DirectedGraph {
    let out = (0..d.n() as Vertex)
        .map(|v| {
            d.out_neighbors(v)
                .iter()
                .copied()
                .filter(|&u| !bi.is_bidirected(v, u))
                .collect()
        })
        .collect();
    DirectedGraph::from_out_lists(out)
}

/// Kahn peeling: repeatedly deletes in-degree-zero vertices. If anything
/// survives, a backward walk inside the remnant recovers a directed cycle.
pub fn acyclicity_check(d: &DirectedGraph) -> Acyclicity {
    let n = d.n();
    let mut indeg = vec![0u32; n];
    for v in 0..n as Vertex {
        for &u in d.out_neighbors(v) {
            indeg[u as usize] += 1;
        }
    }
    let mut queue: Vec<Vertex> = (0..n as Vertex)
        .filter(|&v| indeg[v as usize] == 0)
        .collect();
    let mut peeled = 0usize;
    while let Some(v) = queue.pop() {
        peeled += 1;
        for &u in d.out_neighbors(v) {
            indeg[u as usize] -= 1;
            if indeg[u as usize] == 0 {
                queue.push(u);
            }
        }
    }
    if peeled == n {
        return Acyclicity::Acyclic;
    }

    // Every remnant vertex keeps an incoming remnant edge, so walking
    // backward must repeat a vertex; the repeated stretch is a cycle.
    let sorted = counting_sort_transpose(d);
    let start = (0..n as Vertex)
        .find(|&v| indeg[v as usize] > 0)
        .expect("remnant is non-empty");
    let mut pos = vec![usize::MAX; n];
    let mut walk: Vec<Vertex> = Vec::new();
    let mut cur = start;
    loop {
        if pos[cur as usize] != usize::MAX {
            let mut cycle = vec![cur];
            cycle.extend(walk[pos[cur as usize] + 1..].iter().rev());
            return Acyclicity::Cycle(rotate_to_min(cycle));
        }
        pos[cur as usize] = walk.len();
        walk.push(cur);
        cur = *sorted
            .backward(cur)
            .iter()
            .find(|&&p| indeg[p as usize] > 0)
            .expect("remnant vertices keep a remnant in-neighbor");
    }
}

fn rotate_to_min(cycle: Vec<Vertex>) -> Vec<Vertex> {
    let k = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, &v)| v)
        .map(|(i, _)| i)
        .unwrap_or(0);
    let mut rotated = Vec::with_capacity(cycle.len());
    rotated.extend_from_slice(&cycle[k..]);
    rotated.extend_from_slice(&cycle[..k]);
    rotated
}

/// Finds a directed triangle, certifies there is none, or proves the graph
/// is not a transmission graph. Runs in O(n + m) time.
pub fn find_directed_triangle(d: &DirectedGraph) -> DirectedTriangleOutcome {
    find_directed_triangle_with_stats(d).0
}

pub fn find_directed_triangle_with_stats(
    d: &DirectedGraph,
) -> (DirectedTriangleOutcome, TgStats) {
    let n = d.n();
    let mut stats = TgStats::default();
    let sorted = counting_sort_transpose(d);
    let bi = bidirected_table(&sorted);

    if let Some(v) = (0..n as Vertex).find(|&v| bi.count(v) > 6) {
        // More than six mutual neighbors: in a transmission graph two of
        // any seven of them must be joined by an edge, closing a triangle
        // through v.
        stats.high_bi_vertex = Some(v);
        let chosen = &bi.bi(v)[..7];
        for &a in chosen {
            for &b in chosen {
                if a == b {
                    continue;
                }
                stats.pair_checks += 1;
                if sorted.has_edge(a, b) {
                    return (DirectedTriangleOutcome::Triangle { v, u: a, w: b }, stats);
                }
            }
        }
        return (
            DirectedTriangleOutcome::NotInDomain(TgRejection::HighBiDegreeNoTriangle(
                HighBiDegreeWitness {
                    vertex: v,
                    neighbors: chosen.to_vec(),
                },
            )),
            stats,
        );
    }

    // All bidirected neighborhoods are small. One-way edges alone cannot
    // form a cycle in a transmission graph, so a cycle here is a rejection.
    let uni = uni_subgraph(d, &bi);
    if let Acyclicity::Cycle(cycle) = acyclicity_check(&uni) {
        return (
            DirectedTriangleOutcome::NotInDomain(TgRejection::UniSubgraphCyclic { cycle }),
            stats,
        );
    }

    // Any remaining triangle contains a bidirected edge {v, u}; complete it
    // by intersecting who enters v with whom u reaches. Each vertex plays
    // v-side or u-side at most six times, so each list is walked O(1) times.
    let mut scans = vec![1u32; n];
    stats.max_list_scans = if n > 0 { 1 } else { 0 };
    for v in 0..n as Vertex {
        for &u in bi.bi(v) {
            scans[v as usize] += 1;
            scans[u as usize] += 1;
            stats.max_list_scans = stats
                .max_list_scans
                .max(scans[v as usize])
                .max(scans[u as usize]);
            if let Some(w) = first_common(sorted.backward(v), sorted.forward(u)) {
                return (DirectedTriangleOutcome::Triangle { v, u, w }, stats);
            }
        }
    }
    (DirectedTriangleOutcome::TriangleFree, stats)
}

/// Smallest element of the intersection of two ascending lists.
fn first_common(a: &[Vertex], b: &[Vertex]) -> Option<Vertex> {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return Some(a[i]),
        }
    }
    None
}
