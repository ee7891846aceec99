//! Robust triangle finding and girth for unit disk graphs.
//!
//! The promise that an input is a unit disk graph is never assumed, only
//! exploited: a vertex of degree at least 6 in a unit disk graph always has
//! two adjacent neighbors among any six of its neighbors (its neighbors fit
//! in a disk of radius 2 around it, and six sectors of that disk each force
//! adjacency). The algorithms therefore either answer, or exhibit a small
//! certificate that no placement of unit disks could produce this graph.

mod girth;
mod planarity;

pub use planarity::{is_planar, triangle_free_planarity, PlanarityFailure};

pub use girth::bfs_girth as planar_girth;

use crate::graph::{UndirectedGraph, Vertex};

/// A vertex of degree above 5 none of whose listed neighbors are adjacent
/// to each other. No unit disk graph contains this configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighDegreeWitness {
    pub vertex: Vertex,
    /// `min(degree, 7)` neighbors, pairwise non-adjacent.
    pub neighbors: Vec<Vertex>,
}

/// Result of the robust triangle search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TriangleOutcome {
    /// Three pairwise adjacent vertices, ascending.
    Triangle([Vertex; 3]),
    /// The graph contains no triangle (this answer is unconditional).
    TriangleFree,
    /// The graph is not a unit disk graph, with proof.
    NotInDomain(HighDegreeWitness),
}

/// Why the girth pipeline rejected its input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UdgRejection {
    /// From the triangle stage.
    HighDegreeNoTriangle(HighDegreeWitness),
    /// The graph is triangle-free yet not planar; triangle-free unit disk
    /// graphs are always planar.
    NonPlanarTriangleFree(PlanarityFailure),
}

/// Result of the robust girth computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GirthOutcome {
    Girth { girth: u32, cycle: Vec<Vertex> },
    /// The graph is a forest (unconditional).
    NoCycle,
    /// The graph is not a unit disk graph, with proof.
    NotInDomain(UdgRejection),
}

/// Work counters for the triangle search, used to check the constant-per-
/// vertex bound experimentally.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TriangleStats {
    /// Neighbor-pair adjacency probes, in both branches.
    pub pair_checks: u64,
    /// The high-degree vertex that decided the outcome, if one existed.
    pub high_degree_vertex: Option<Vertex>,
}

/// Finds a triangle, certifies triangle-freeness, or proves the graph is
/// not a unit disk graph. Runs in O(n) time regardless of m.
///
/// If some vertex has degree above 5, any seven of its neighbors (or all
/// six, at degree exactly 6) must contain an adjacent pair in a unit disk
/// graph, so only those few pairs are probed. Otherwise every degree is at
/// most 5 and an exhaustive check costs a constant per vertex.
pub fn find_triangle(g: &UndirectedGraph) -> TriangleOutcome {
    find_triangle_with_stats(g).0
}

pub fn find_triangle_with_stats(g: &UndirectedGraph) -> (TriangleOutcome, TriangleStats) {
    let n = g.n();
    let mut stats = TriangleStats::default();

    if let Some(v) = (0..n as Vertex).find(|&v| g.degree(v) > 5) {
        stats.high_degree_vertex = Some(v);
        let k = g.degree(v).min(7);
        let chosen = &g.neighbors(v)[..k];
        for i in 0..k {
            for j in (i + 1)..k {
                stats.pair_checks += 1;
                if g.adjacency_test(chosen[i], chosen[j]) {
                    return (
                        TriangleOutcome::Triangle(sorted_triple(v, chosen[i], chosen[j])),
                        stats,
                    );
                }
            }
        }
        return (
            TriangleOutcome::NotInDomain(HighDegreeWitness {
                vertex: v,
                neighbors: chosen.to_vec(),
            }),
            stats,
        );
    }

    // All degrees at most 5: check each closed neighborhood directly.
    let mut marked = vec![false; n];
    for v in 0..n as Vertex {
        let nbrs = g.neighbors(v);
        for &u in nbrs {
            marked[u as usize] = true;
        }
        for &u in nbrs {
            for &w in g.neighbors(u) {
                if w == v {
                    continue;
                }
                stats.pair_checks += 1;
                if marked[w as usize] {
                    for &x in nbrs {
                        marked[x as usize] = false;
                    }
                    return (TriangleOutcome::Triangle(sorted_triple(v, u, w)), stats);
                }
            }
        }
        for &u in nbrs {
            marked[u as usize] = false;
        }
    }
    (TriangleOutcome::TriangleFree, stats)
}

fn sorted_triple(a: Vertex, b: Vertex, c: Vertex) -> [Vertex; 3] {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

/// Computes the girth of a unit disk graph, or proves the input is not one.
///
/// Pipeline: the robust triangle search settles girth 3; a triangle-free
/// unit disk graph must be planar, so a planarity failure is a domain
/// rejection; and on the remaining planar graph a pruned per-root BFS finds
/// a shortest cycle.
pub fn girth(g: &UndirectedGraph) -> GirthOutcome {
    girth_with_stats(g).0
}

pub fn girth_with_stats(g: &UndirectedGraph) -> (GirthOutcome, TriangleStats) {
    let (triangle, stats) = find_triangle_with_stats(g);
    let outcome = match triangle {
        TriangleOutcome::Triangle(t) => GirthOutcome::Girth {
            girth: 3,
            cycle: t.to_vec(),
        },
        TriangleOutcome::NotInDomain(w) => {
            GirthOutcome::NotInDomain(UdgRejection::HighDegreeNoTriangle(w))
        }
        TriangleOutcome::TriangleFree => match triangle_free_planarity(g) {
            Err(failure) => {
                GirthOutcome::NotInDomain(UdgRejection::NonPlanarTriangleFree(failure))
            }
            Ok(()) => match planar_girth(g) {
                Some((girth, cycle)) => GirthOutcome::Girth { girth, cycle },
                None => GirthOutcome::NoCycle,
            },
        },
    };
    (outcome, stats)
}
