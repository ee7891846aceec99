//! Adjacency-list graphs and the sorted-adjacency machinery built on top of
//! them: counting-sort transposition and bidirected-neighbor extraction.

use std::collections::HashSet;

use thiserror::Error;

/// Vertex identifier. Vertices of an n-vertex graph are `0..n`.
pub type Vertex = u32;

/// Rejected edge lists.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: Vertex, n: usize },
}

/// Simple undirected graph with per-vertex neighbor lists.
///
/// Neighbor lists preserve the order in which edges were supplied; they are
/// not required to be sorted. Degrees are cached so adjacency tests can pick
/// the shorter list to scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    adjacency: Vec<Vec<Vertex>>,
    m: usize,
}

impl UndirectedGraph {
    /// Builds a graph from an explicit edge list.
    ///
    /// Every edge is validated: endpoints must be distinct, in range, and no
    /// unordered pair may appear twice (in either orientation).
    pub fn build(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in edges {
            check_endpoints(n, u, v)?;
            let key = pair_key(u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        Ok(UndirectedGraph {
            adjacency,
            m: edges.len(),
        })
    }

    /// Wraps prevalidated neighbor lists (each edge present in both lists).
    pub(crate) fn from_adjacency(adjacency: Vec<Vec<Vertex>>) -> Self {
        let entries: usize = adjacency.iter().map(Vec::len).sum();
        debug_assert_eq!(entries % 2, 0);
        UndirectedGraph {
            adjacency,
            m: entries / 2,
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v as usize].len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v as usize]
    }

    /// Tests whether `u` and `v` are adjacent by scanning the shorter of the
    /// two neighbor lists, so the cost is O(min(deg u, deg v)).
    pub fn adjacency_test(&self, u: Vertex, v: Vertex) -> bool {
        if u == v {
            return false;
        }
        let (probe, target) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.adjacency[probe as usize].contains(&target)
    }

    /// Iterates every edge once, as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            let u = u as Vertex;
            list.iter()
                .filter(move |&&v| u < v)
                .map(move |&v| (u, v))
        })
    }
}

/// Simple directed graph (no self-loops, no parallel edges; the two
/// orientations of a pair are distinct edges and may coexist).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    out: Vec<Vec<Vertex>>,
    m: usize,
}

impl DirectedGraph {
    /// Builds a digraph from an edge list of `(source, target)` pairs.
    pub fn build(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut out = vec![Vec::new(); n];
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in edges {
            check_endpoints(n, u, v)?;
            if !seen.insert(pair_key(u, v)) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            out[u as usize].push(v);
        }
        Ok(DirectedGraph {
            out,
            m: edges.len(),
        })
    }

    /// Wraps prevalidated out-neighbor lists.
    pub(crate) fn from_out_lists(out: Vec<Vec<Vertex>>) -> Self {
        let m = out.iter().map(Vec::len).sum();
        DirectedGraph { out, m }
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out[v as usize].len()
    }

    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out[v as usize]
    }

    /// Iterates every directed edge as `(source, target)`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.out.iter().enumerate().flat_map(|(u, list)| {
            let u = u as Vertex;
            list.iter().map(move |&v| (u, v))
        })
    }
}

fn check_endpoints(n: usize, u: Vertex, v: Vertex) -> Result<(), GraphError> {
    for w in [u, v] {
        if (w as usize) >= n {
            return Err(GraphError::VertexOutOfRange { vertex: w, n });
        }
    }
    if u == v {
        return Err(GraphError::SelfLoop(u));
    }
    Ok(())
}

fn pair_key(u: Vertex, v: Vertex) -> u64 {
    ((u as u64) << 32) | v as u64
}

/// Ascending in- and out-neighbor lists of a digraph.
///
/// Produced by [`counting_sort_transpose`] in O(n + m) regardless of the
/// order of the original lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortedAdjacency {
    forward: Vec<Vec<Vertex>>,
    backward: Vec<Vec<Vertex>>,
}

impl SortedAdjacency {
    pub fn n(&self) -> usize {
        self.forward.len()
    }

    /// Out-neighbors of `v` in ascending order.
    pub fn forward(&self, v: Vertex) -> &[Vertex] {
        &self.forward[v as usize]
    }

    /// In-neighbors of `v` in ascending order.
    pub fn backward(&self, v: Vertex) -> &[Vertex] {
        &self.backward[v as usize]
    }

    /// Total entries across both directions; always twice the edge count.
    pub fn stored_entries(&self) -> usize {
        let fwd: usize = self.forward.iter().map(Vec::len).sum();
        let bwd: usize = self.backward.iter().map(Vec::len).sum();
        fwd + bwd
    }

    /// Tests for the directed edge `u -> v` in O(log deg).
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.forward[u as usize].binary_search(&v).is_ok()
    }
}

/// Sorts all adjacency lists of `d` with two bucket-distribution passes.
///
/// Pass one scans sources in ascending order and appends each to its
/// target's bucket, which yields in-neighbor lists that are already sorted.
/// Pass two repeats the trick on those lists to rebuild the out-neighbor
/// lists in sorted order. Both passes are linear in n + m.
pub fn counting_sort_transpose(d: &DirectedGraph) -> SortedAdjacency {
    let n = d.n();
    let backward = distribute(n, (0..n as Vertex).map(|v| (v, d.out_neighbors(v))));
    let forward = distribute(
        n,
        (0..n as Vertex).map(|v| (v, backward[v as usize].as_slice())),
    );
    SortedAdjacency { forward, backward }
}

fn distribute<'a>(
    n: usize,
    lists: impl Iterator<Item = (Vertex, &'a [Vertex])> + Clone,
) -> Vec<Vec<Vertex>> {
    let mut counts = vec![0usize; n];
    for (_, list) in lists.clone() {
        for &t in list {
            counts[t as usize] += 1;
        }
    }
    let mut buckets: Vec<Vec<Vertex>> = counts.iter().map(|&c| Vec::with_capacity(c)).collect();
    for (src, list) in lists {
        for &t in list {
            buckets[t as usize].push(src);
        }
    }
    buckets
}

/// Per-vertex bidirected neighbors: `bi(v) = {u : v -> u and u -> v}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiNeighborTable {
    bi: Vec<Vec<Vertex>>,
}

impl BiNeighborTable {
    pub fn n(&self) -> usize {
        self.bi.len()
    }

    /// Bidirected neighbors of `v` in ascending order.
    pub fn bi(&self, v: Vertex) -> &[Vertex] {
        &self.bi[v as usize]
    }

    pub fn count(&self, v: Vertex) -> usize {
        self.bi[v as usize].len()
    }

    /// Tests whether `{u, v}` is a bidirected pair.
    pub fn is_bidirected(&self, v: Vertex, u: Vertex) -> bool {
        let list = self.bi(v);
        if list.len() <= 8 {
            list.contains(&u)
        } else {
            list.binary_search(&u).is_ok()
        }
    }
}

/// Intersects each vertex's sorted in- and out-lists with a single merge
/// scan, giving all bidirected neighbor sets in O(n + m).
pub fn bidirected_table(s: &SortedAdjacency) -> BiNeighborTable {
    let bi = (0..s.n() as Vertex)
        .map(|v| intersect_sorted(s.forward(v), s.backward(v)))
        .collect();
    BiNeighborTable { bi }
}

fn intersect_sorted(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_and_queries_a_small_graph() {
        let g = UndirectedGraph::build(4, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 3);
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.degree(3), 0);
        assert!(g.adjacency_test(0, 2));
        assert!(g.adjacency_test(2, 0));
        assert!(!g.adjacency_test(1, 3));
        assert!(!g.adjacency_test(2, 2));
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn rejects_bad_edge_lists() {
        assert_eq!(
            UndirectedGraph::build(3, &[(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert_eq!(
            UndirectedGraph::build(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(1, 0))
        );
        assert_eq!(
            UndirectedGraph::build(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            DirectedGraph::build(2, &[(0, 1), (0, 1)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn directed_build_allows_both_orientations() {
        let d = DirectedGraph::build(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(d.m(), 2);
        assert_eq!(d.out_neighbors(0), &[1]);
        assert_eq!(d.out_neighbors(1), &[0]);
    }

    #[test]
    fn transpose_sorts_both_directions() {
        // Edges 0->2, 2->1, 0->1.
        let d = DirectedGraph::build(3, &[(0, 2), (2, 1), (0, 1)]).unwrap();
        let s = counting_sort_transpose(&d);
        assert_eq!(s.backward(0), &[] as &[Vertex]);
        assert_eq!(s.backward(1), &[0, 2]);
        assert_eq!(s.backward(2), &[0]);
        assert_eq!(s.forward(0), &[1, 2]);
        assert_eq!(s.forward(1), &[] as &[Vertex]);
        assert_eq!(s.forward(2), &[1]);
        assert_eq!(s.stored_entries(), 2 * d.m());
        assert!(s.has_edge(0, 2));
        assert!(!s.has_edge(2, 0));
    }

    #[test]
    fn bidirected_table_extracts_two_cycles() {
        let d = DirectedGraph::build(4, &[(0, 1), (1, 0), (1, 2), (2, 1), (2, 3)]).unwrap();
        let bi = bidirected_table(&counting_sort_transpose(&d));
        assert_eq!(bi.bi(0), &[1]);
        assert_eq!(bi.bi(1), &[0, 2]);
        assert_eq!(bi.bi(2), &[1]);
        assert_eq!(bi.bi(3), &[] as &[Vertex]);
        assert!(bi.is_bidirected(1, 2));
        assert!(!bi.is_bidirected(2, 3));
        assert!(!bi.is_bidirected(3, 2));
    }
}
