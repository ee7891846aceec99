//! Brute-force reference implementations.
//!
//! Everything here favors obviousness over speed and shares no code with the
//! robust algorithms, so the two sides can check each other. Inputs are
//! capped at [`ORACLE_VERTEX_CAP`] vertices; larger graphs are refused
//! rather than silently ground through.

use thiserror::Error;

use crate::graph::{DirectedGraph, UndirectedGraph, Vertex};

/// Largest graph the oracles accept.
pub const ORACLE_VERTEX_CAP: usize = 5000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {0} vertices, above the oracle cap of {ORACLE_VERTEX_CAP}")]
    TooLarge(usize),
}

fn check_cap(n: usize) -> Result<(), OracleError> {
    if n > ORACLE_VERTEX_CAP {
        Err(OracleError::TooLarge(n))
    } else {
        Ok(())
    }
}

/// Finds the lexicographically first triangle `(u, v, w)` with `u < v < w`,
/// or `None` if the graph is triangle-free.
///
/// For every edge `(u, v)` it scans `v`'s neighbors for a common neighbor
/// of `u`, which is exact and O(m n) in the worst case.
pub fn brute_triangle(g: &UndirectedGraph) -> Result<Option<[Vertex; 3]>, OracleError> {
    check_cap(g.n())?;
    let n = g.n();
    let sorted: Vec<Vec<Vertex>> = (0..n as Vertex)
        .map(|v| {
            let mut list = g.neighbors(v).to_vec();
            list.sort_unstable();
            list
        })
        .collect();
    let mut mark = vec![false; n];
    for u in 0..n as Vertex {
        for &x in &sorted[u as usize] {
            mark[x as usize] = true;
        }
        for &v in &sorted[u as usize] {
            if v < u {
                continue;
            }
            for &w in &sorted[v as usize] {
                if w > v && mark[w as usize] {
                    return Ok(Some([u, v, w]));
                }
            }
        }
        for &x in &sorted[u as usize] {
            mark[x as usize] = false;
        }
    }
    Ok(None)
}

/// Computes the exact girth by running a full breadth-first search from
/// every vertex, with no pruning. Returns the length and one shortest cycle,
/// or `None` for forests.
pub fn brute_girth(g: &UndirectedGraph) -> Result<Option<(u32, Vec<Vertex>)>, OracleError> {
    check_cap(g.n())?;
    let n = g.n();
    let mut best: Option<(u32, Vertex)> = None;
    for root in 0..n as Vertex {
        let (dist, parent) = bfs(g, root);
        for u in 0..n as Vertex {
            if dist[u as usize] == u32::MAX {
                continue;
            }
            for &w in g.neighbors(u) {
                if dist[w as usize] == u32::MAX || parent[u as usize] == w || parent[w as usize] == u
                {
                    continue;
                }
                let len = dist[u as usize] + dist[w as usize] + 1;
                if best.is_none_or(|(b, _)| len < b) {
                    best = Some((len, root));
                }
            }
        }
    }
    let Some((girth, root)) = best else {
        return Ok(None);
    };
    // Rerun from the winning root and rebuild the cycle from that tree.
    let (dist, parent) = bfs(g, root);
    let mut cycle_ends = None;
    let mut shortest = u32::MAX;
    for u in 0..n as Vertex {
        if dist[u as usize] == u32::MAX {
            continue;
        }
        for &w in g.neighbors(u) {
            if dist[w as usize] == u32::MAX || parent[u as usize] == w || parent[w as usize] == u {
                continue;
            }
            let len = dist[u as usize] + dist[w as usize] + 1;
            if len < shortest {
                shortest = len;
                cycle_ends = Some((u, w));
            }
        }
    }
    debug_assert_eq!(shortest, girth);
    let (u, w) = cycle_ends.expect("a cycle was found in the first pass");
    let up = climb(&parent, u);
    let wp = climb(&parent, w);
    let mut cycle: Vec<Vertex> = up.into_iter().rev().collect();
    cycle.extend(wp.into_iter().take(dist[w as usize] as usize));
    Ok(Some((girth, cycle)))
}

fn bfs(g: &UndirectedGraph, root: Vertex) -> (Vec<u32>, Vec<Vertex>) {
    let n = g.n();
    let mut dist = vec![u32::MAX; n];
    let mut parent = vec![u32::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    dist[root as usize] = 0;
    queue.push_back(root);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w as usize] == u32::MAX {
                dist[w as usize] = dist[u as usize] + 1;
                parent[w as usize] = u;
                queue.push_back(w);
            }
        }
    }
    (dist, parent)
}

/// Path from `v` up to its BFS root, inclusive.
fn climb(parent: &[Vertex], v: Vertex) -> Vec<Vertex> {
    let mut path = vec![v];
    let mut cur = v;
    while parent[cur as usize] != u32::MAX {
        cur = parent[cur as usize];
        path.push(cur);
    }
    path
}

/// Finds the lexicographically first directed triangle `(v, u, w)` with
/// edges `v -> u -> w -> v`, or `None`. A bidirected pair alone is a
/// 2-cycle, not a triangle, and is never reported.
pub fn brute_directed_triangle(d: &DirectedGraph) -> Result<Option<[Vertex; 3]>, OracleError> {
    check_cap(d.n())?;
    let n = d.n();
    let sorted: Vec<Vec<Vertex>> = (0..n as Vertex)
        .map(|v| {
            let mut list = d.out_neighbors(v).to_vec();
            list.sort_unstable();
            list
        })
        .collect();
    let edge_set: std::collections::HashSet<u64> = d
        .edges()
        .map(|(u, v)| ((u as u64) << 32) | v as u64)
        .collect();
    for v in 0..n as Vertex {
        for &u in &sorted[v as usize] {
            for &w in &sorted[u as usize] {
                if w != v && edge_set.contains(&(((w as u64) << 32) | v as u64)) {
                    return Ok(Some([v, u, w]));
                }
            }
        }
    }
    Ok(None)
}

/// Exact girth by exhaustive simple-cycle enumeration. Exponential; only
/// used to validate [`brute_girth`] on tiny graphs (hard cap of 16 vertices).
pub fn exhaustive_girth(g: &UndirectedGraph) -> Option<u32> {
    assert!(g.n() <= 16, "exhaustive enumeration is for tiny graphs only");
    let n = g.n();
    let mut best: Option<u32> = None;
    let mut on_path = vec![false; n];
    for start in 0..n as Vertex {
        // Cycles whose smallest vertex is `start`.
        on_path[start as usize] = true;
        extend(g, start, start, 1, &mut on_path, &mut best);
        on_path[start as usize] = false;
    }
    best
}

fn extend(
    g: &UndirectedGraph,
    start: Vertex,
    v: Vertex,
    len: u32,
    on_path: &mut Vec<bool>,
    best: &mut Option<u32>,
) {
    if best.is_some_and(|b| len >= b) {
        return;
    }
    for &w in g.neighbors(v) {
        if w == start && len >= 3 {
            *best = Some(best.map_or(len, |b| b.min(len)));
        } else if w > start && !on_path[w as usize] {
            on_path[w as usize] = true;
            extend(g, start, w, len + 1, on_path, best);
            on_path[w as usize] = false;
        }
    }
}
