//! Girth of a sparse graph by bounded breadth-first search.

use std::collections::VecDeque;

use crate::graph::{UndirectedGraph, Vertex};

const UNSET: u32 = u32::MAX;

/// Computes the exact girth and one shortest cycle, or `None` in a forest.
///
/// One BFS per root; while a shortest known cycle has length g, vertices
/// deeper than (g - 1) / 2 are dequeued without scanning their neighbors,
/// so each BFS only explores the depth that could still improve the bound.
/// On planar (or any uniformly sparse) graphs the total work is O(n) per
/// root scanned in full, O(n^2) overall in the worst case, but the pruning
/// keeps the typical cost near the size of the shallow neighborhoods.
pub fn bfs_girth(g: &UndirectedGraph) -> Option<(u32, Vec<Vertex>)> {
    let n = g.n();
    let mut dist = vec![0u32; n];
    let mut parent = vec![UNSET; n];
    let mut visited_by = vec![UNSET; n];
    let mut queue = VecDeque::new();
    let mut best: Option<(u32, Vertex)> = None;

    for root in 0..n as Vertex {
        queue.clear();
        dist[root as usize] = 0;
        parent[root as usize] = UNSET;
        visited_by[root as usize] = root;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            if let Some((bound, _)) = best {
                if du > (bound - 1) / 2 {
                    continue; // too deep to close a cycle shorter than bound
                }
            }
            for &w in g.neighbors(u) {
                if visited_by[w as usize] != root {
                    visited_by[w as usize] = root;
                    dist[w as usize] = du + 1;
                    parent[w as usize] = u;
                    queue.push_back(w);
                } else if parent[u as usize] != w && parent[w as usize] != u {
                    let len = du + dist[w as usize] + 1;
                    if best.is_none_or(|(b, _)| len < b) {
                        best = Some((len, root));
                    }
                }
            }
        }
    }

    let (girth, root) = best?;
    Some((girth, rebuild_cycle(g, root, girth)))
}

/// Reruns an unpruned BFS from the winning root and stitches the cycle out
/// of the two tree paths meeting at the best non-tree edge.
fn rebuild_cycle(g: &UndirectedGraph, root: Vertex, girth: u32) -> Vec<Vertex> {
    let n = g.n();
    let mut dist = vec![UNSET; n];
    let mut parent = vec![UNSET; n];
    let mut queue = VecDeque::new();
    dist[root as usize] = 0;
    queue.push_back(root);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w as usize] == UNSET {
                dist[w as usize] = dist[u as usize] + 1;
                parent[w as usize] = u;
                queue.push_back(w);
            }
        }
    }
    let mut ends = None;
    let mut shortest = UNSET;
    for u in 0..n as Vertex {
        if dist[u as usize] == UNSET {
            continue;
        }
        for &w in g.neighbors(u) {
            if dist[w as usize] == UNSET || parent[u as usize] == w || parent[w as usize] == u {
                continue;
            }
            let len = dist[u as usize] + dist[w as usize] + 1;
            if len < shortest {
                shortest = len;
                ends = Some((u, w));
            }
        }
    }
    debug_assert_eq!(shortest, girth, "full BFS re-finds the recorded optimum");
    let (u, w) = ends.expect("the winning root still closes a cycle");
    let mut cycle = Vec::with_capacity(girth as usize);
    let mut cur = u;
    loop {
        cycle.push(cur);
        if cur == root {
            break;
        }
        cur = parent[cur as usize];
    }
    cycle.reverse();
    let mut tail = Vec::with_capacity(dist[w as usize] as usize);
    let mut cur = w;
    while cur != root {
        tail.push(cur);
        cur = parent[cur as usize];
    }
    cycle.extend(tail);
    debug_assert_eq!(cycle.len(), girth as usize);
    cycle
}
