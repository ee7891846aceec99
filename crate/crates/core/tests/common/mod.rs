//! Helpers shared by the integration suites: seeded random graphs and an
//! independent planarity oracle for tiny graphs.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rdg_core::{DirectedGraph, UndirectedGraph, Vertex};

pub fn ug(n: usize, edges: &[(Vertex, Vertex)]) -> UndirectedGraph {
    UndirectedGraph::build(n, edges).unwrap()
}

/// Erdos-Renyi style graph: each pair becomes an edge with probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> UndirectedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as Vertex {
        for v in (u + 1)..n as Vertex {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    ug(n, &edges)
}

/// Random digraph: each ordered pair becomes an edge with probability `p`.
pub fn random_digraph(n: usize, p: f64, seed: u64) -> DirectedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as Vertex {
        for v in 0..n as Vertex {
            if u != v && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    DirectedGraph::build(n, &edges).unwrap()
}

/// Random subgraph of a rows x cols grid; always planar.
pub fn grid_subgraph(rows: u32, cols: u32, keep: f64, seed: u64) -> UndirectedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols && rng.gen_bool(keep) {
                edges.push((v, v + 1));
            }
            if r + 1 < rows && rng.gen_bool(keep) {
                edges.push((v, v + cols));
            }
        }
    }
    ug((rows * cols) as usize, &edges)
}

/// Cycle 0..k-1 plus random pairwise non-crossing chords; always planar
/// (outerplanar, even).
pub fn outerplanar(k: u32, chord_attempts: usize, seed: u64) -> UndirectedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(Vertex, Vertex)> = (0..k).map(|v| (v, (v + 1) % k)).collect();
    let mut chords: Vec<(u32, u32)> = Vec::new();
    for _ in 0..chord_attempts {
        let a = rng.gen_range(0..k);
        let b = rng.gen_range(0..k);
        let (a, b) = (a.min(b), a.max(b));
        if b - a < 2 || (a == 0 && b == k - 1) {
            continue; // already a cycle edge
        }
        let crosses = chords
            .iter()
            .any(|&(c, d)| (c < a && a < d && d < b) || (a < c && c < b && b < d));
        if !crosses && !chords.contains(&(a, b)) {
            chords.push((a, b));
            edges.push((a, b));
        }
    }
    ug(k as usize, &edges)
}

/// Random forest: each vertex after the first gets a random earlier parent,
/// except when a coin flip starts a new component.
pub fn random_forest(n: u32, seed: u64) -> UndirectedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        if rng.gen_bool(0.9) {
            edges.push((rng.gen_range(0..v), v));
        }
    }
    ug(n as usize, &edges)
}

/// Planarity by Kuratowski's theorem, valid for n <= 6: non-planar exactly
/// when some subgraph is K5, K5 with one edge subdivided, or K33. Those are
/// the only K5/K33 subdivisions that fit in six vertices.
pub fn planar_by_kuratowski(g: &UndirectedGraph) -> bool {
    assert!(g.n() <= 6);
    let k5: Vec<(u32, u32)> = (0..5)
        .flat_map(|u| ((u + 1)..5).map(move |v| (u, v)))
        .collect();
    let k33: Vec<(u32, u32)> = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
    let mut k5_subdivided: Vec<(u32, u32)> =
        k5.iter().copied().filter(|&e| e != (0, 1)).collect();
    k5_subdivided.push((0, 5));
    k5_subdivided.push((5, 1));
    !(contains_subgraph(g, 5, &k5)
        || contains_subgraph(g, 6, &k33)
        || contains_subgraph(g, 6, &k5_subdivided))
}

/// Searches for an injective vertex map sending every pattern edge to an
/// edge of `g`.
fn contains_subgraph(g: &UndirectedGraph, pattern_n: usize, pattern: &[(u32, u32)]) -> bool {
    if g.n() < pattern_n {
        return false;
    }
    let mut map = vec![usize::MAX; pattern_n];
    let mut used = vec![false; g.n()];
    assign(g, pattern, &mut map, &mut used, 0)
}

fn assign(
    g: &UndirectedGraph,
    pattern: &[(u32, u32)],
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    next: usize,
) -> bool {
    if next == map.len() {
        return true;
    }
    for cand in 0..g.n() {
        if used[cand] {
            continue;
        }
        // Pattern edges whose endpoints are both placed must already map
        // to edges; checking as we go prunes most of the search.
        let ok = pattern.iter().all(|&(a, b)| {
            let (a, b) = (a as usize, b as usize);
            let other = if a == next { b } else if b == next { a } else { return true };
            other > next || g.adjacency_test(cand as Vertex, map[other] as Vertex)
        });
        if ok {
            map[next] = cand;
            used[cand] = true;
            if assign(g, pattern, map, used, next + 1) {
                used[cand] = false;
                return true;
            }
            used[cand] = false;
        }
    }
    false
}
