//! Planar point sites and the geometric graphs they induce.
//!
//! A site is a point with a positive radius. Unit disk graphs connect sites
//! at distance at most 2 (all radii 1); transmission graphs have a directed
//! edge `s -> t` whenever `t` lies within distance `r_s` of `s`. Distances
//! are compared in squared form, so membership tests are exact for inputs
//! that are themselves exact.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{DirectedGraph, UndirectedGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Site {
    pub x: f64,
    pub y: f64,
    pub r: f64,
}

impl Site {
    pub fn dist2(&self, other: &Site) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("site {index} has non-positive or non-finite radius {r}")]
    BadRadius { index: usize, r: f64 },
    #[error("site {index} has non-finite coordinates")]
    BadCoordinates { index: usize },
    #[error("site {index} has radius {r}, but a unit disk graph needs all radii equal to 1")]
    NonUnitRadius { index: usize, r: f64 },
}

/// An indexed collection of sites; site `i` becomes vertex `i` of any graph
/// built from the set.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SiteSet {
    sites: Vec<Site>,
}

impl SiteSet {
    /// Validates finiteness and radius positivity for every site.
    pub fn new(sites: Vec<Site>) -> Result<Self, GeometryError> {
        for (index, s) in sites.iter().enumerate() {
            if !s.x.is_finite() || !s.y.is_finite() {
                return Err(GeometryError::BadCoordinates { index });
            }
            if !s.r.is_finite() || s.r <= 0.0 {
                return Err(GeometryError::BadRadius { index, r: s.r });
            }
        }
        Ok(SiteSet { sites })
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn get(&self, i: usize) -> &Site {
        &self.sites[i]
    }

    pub fn sites(&self) -> &[Site] {
        &self.sites
    }
}

/// Builds the unit disk graph of a set of radius-1 sites: an edge joins
/// `s` and `t` exactly when their distance is at most 2.
///
/// Sites are bucketed on a grid of cell width 2, so each site is compared
/// only against its own and the eight surrounding cells.
pub fn unit_disk_graph(sites: &SiteSet) -> Result<UndirectedGraph, GeometryError> {
    for (index, s) in sites.sites().iter().enumerate() {
        if s.r != 1.0 {
            return Err(GeometryError::NonUnitRadius { index, r: s.r });
        }
    }
    let grid = Grid::new(sites, 2.0);
    let n = sites.len();
    let mut counts = vec![0usize; n];
    grid.for_each_candidate(sites, |i, _j, d2| {
        if d2 <= 4.0 {
            counts[i] += 1;
        }
    });
    let mut adjacency: Vec<Vec<Vertex>> = counts.iter().map(|&c| Vec::with_capacity(c)).collect();
    grid.for_each_candidate(sites, |i, j, d2| {
        if d2 <= 4.0 {
            adjacency[i].push(j as Vertex);
        }
    });
    Ok(UndirectedGraph::from_adjacency(adjacency))
}

/// Builds the transmission graph: the directed edge `s -> t` exists exactly
/// when `t` lies in the disk of radius `r_s` around `s`.
///
/// Sites are bucketed on a grid keyed to the largest radius and every site
/// scans the cell ring covering its own radius, so the cost adapts to each
/// query's reach.
pub fn transmission_graph(sites: &SiteSet) -> DirectedGraph {
    let n = sites.len();
    if n == 0 {
        return DirectedGraph::from_out_lists(Vec::new());
    }
    let max_r = sites
        .sites()
        .iter()
        .map(|s| s.r)
        .fold(f64::NEG_INFINITY, f64::max);
    let grid = Grid::new(sites, max_r);
    let mut out: Vec<Vec<Vertex>> = Vec::with_capacity(n);
    for (i, s) in sites.sites().iter().enumerate() {
        let reach = (s.r / grid.cell) .ceil() as i64;
        let (cx, cy) = grid.cell_of(s);
        let r2 = s.r * s.r;
        let mut list = Vec::new();
        for dx in -reach..=reach {
            for dy in -reach..=reach {
                let Some(bucket) = grid.bucket(cx + dx, cy + dy) else {
                    continue;
                };
                for &j in bucket {
                    if j as usize != i && s.dist2(sites.get(j as usize)) <= r2 {
                        list.push(j);
                    }
                }
            }
        }
        list.sort_unstable();
        out.push(list);
    }
    DirectedGraph::from_out_lists(out)
}

struct Grid {
    cells: HashMap<(i64, i64), Vec<Vertex>>,
    cell: f64,
}

impl Grid {
    fn new(sites: &SiteSet, cell: f64) -> Grid {
        let mut cells: HashMap<(i64, i64), Vec<Vertex>> = HashMap::new();
        for (i, s) in sites.sites().iter().enumerate() {
            let key = ((s.x / cell).floor() as i64, (s.y / cell).floor() as i64);
            cells.entry(key).or_default().push(i as Vertex);
        }
        Grid { cells, cell }
    }

    fn cell_of(&self, s: &Site) -> (i64, i64) {
        (
            (s.x / self.cell).floor() as i64,
            (s.y / self.cell).floor() as i64,
        )
    }

    fn bucket(&self, x: i64, y: i64) -> Option<&Vec<Vertex>> {
        self.cells.get(&(x, y))
    }

    /// Calls `f(i, j, dist2)` for every ordered pair in touching cells.
    fn for_each_candidate(&self, sites: &SiteSet, mut f: impl FnMut(usize, usize, f64)) {
        for (i, s) in sites.sites().iter().enumerate() {
            let (cx, cy) = self.cell_of(s);
            for dx in -1..=1 {
                for dy in -1..=1 {
                    let Some(bucket) = self.bucket(cx + dx, cy + dy) else {
                        continue;
                    };
                    for &j in bucket {
                        if j as usize != i {
                            f(i, j as usize, s.dist2(sites.get(j as usize)));
                        }
                    }
                }
            }
        }
    }
}

/// Samples `n` sites uniformly in a `box_side` x `box_side` square with
/// radii uniform in `radius_range`, deterministically from `seed`.
///
/// Every sampled site is rejected and redrawn if any pairwise distance comes
/// within relative margin 1e-9 of a decision threshold (`r_i + r_j`, `r_i`,
/// or `r_j`), so tiny floating-point perturbations cannot flip an edge.
pub fn random_sites(n: usize, box_side: f64, radius_range: (f64, f64), seed: u64) -> SiteSet {
    assert!(box_side > 0.0, "box side must be positive");
    let (r_lo, r_hi) = radius_range;
    assert!(r_lo > 0.0 && r_hi >= r_lo, "bad radius range");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sites: Vec<Site> = Vec::with_capacity(n);
    for _ in 0..n {
        let mut placed = false;
        for _attempt in 0..10_000 {
            let cand = Site {
                x: rng.gen_range(0.0..box_side),
                y: rng.gen_range(0.0..box_side),
                r: if r_lo == r_hi {
                    r_lo
                } else {
                    rng.gen_range(r_lo..=r_hi)
                },
            };
            if sites.iter().all(|s| clear_of_thresholds(s, &cand)) {
                sites.push(cand);
                placed = true;
                break;
            }
        }
        assert!(placed, "resampling budget exhausted; box too crowded for the margin");
    }
    SiteSet { sites }
}

fn clear_of_thresholds(a: &Site, b: &Site) -> bool {
    let d = a.dist2(b).sqrt();
    [a.r + b.r, a.r, b.r]
        .iter()
        .all(|&t| (d - t).abs() > 1e-9 * t)
}

/// Star with center 0 and leaves `1..=k`.
pub fn star(k: u32) -> UndirectedGraph {
    let edges: Vec<_> = (1..=k).map(|leaf| (0, leaf)).collect();
    UndirectedGraph::build(k as usize + 1, &edges).expect("star edges are valid")
}

/// The Petersen graph: 10 vertices, 15 edges, girth 5, not planar.
pub fn petersen() -> UndirectedGraph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5)); // outer cycle
        edges.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
        edges.push((i, 5 + i)); // spokes
    }
    UndirectedGraph::build(10, &edges).expect("petersen edges are valid")
}

/// Directed cycle `0 -> 1 -> ... -> k-1 -> 0` with no bidirected edges.
pub fn dicycle(k: u32) -> DirectedGraph {
    assert!(k >= 2, "a simple directed cycle needs at least 2 vertices");
    let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    DirectedGraph::build(k as usize, &edges).expect("dicycle edges are valid")
}

/// Bidirected star: center 0 joined to `1..=k` by edges in both directions.
pub fn bistar(k: u32) -> DirectedGraph {
    let mut edges = Vec::with_capacity(2 * k as usize);
    for leaf in 1..=k {
        edges.push((0, leaf));
        edges.push((leaf, 0));
    }
    DirectedGraph::build(k as usize + 1, &edges).expect("bistar edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_sites(points: &[(f64, f64)]) -> SiteSet {
        SiteSet::new(
            points
                .iter()
                .map(|&(x, y)| Site { x, y, r: 1.0 })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn unit_disk_edges_use_the_inclusive_threshold() {
        let sites = unit_sites(&[(0.0, 0.0), (2.0, 0.0), (4.1, 0.0)]);
        let g = unit_disk_graph(&sites).unwrap();
        assert!(g.adjacency_test(0, 1), "distance exactly 2 is an edge");
        assert!(!g.adjacency_test(1, 2), "distance 2.1 is not");
        assert!(!g.adjacency_test(0, 2));
    }

    #[test]
    fn unit_disk_rejects_other_radii() {
        let sites = SiteSet::new(vec![
            Site { x: 0.0, y: 0.0, r: 1.0 },
            Site { x: 1.0, y: 0.0, r: 0.5 },
        ])
        .unwrap();
        assert_eq!(
            unit_disk_graph(&sites),
            Err(GeometryError::NonUnitRadius { index: 1, r: 0.5 })
        );
    }

    #[test]
    fn site_set_rejects_bad_sites() {
        assert!(SiteSet::new(vec![Site { x: 0.0, y: 0.0, r: 0.0 }]).is_err());
        assert!(SiteSet::new(vec![Site { x: f64::NAN, y: 0.0, r: 1.0 }]).is_err());
        assert!(SiteSet::new(vec![Site { x: 0.0, y: 0.0, r: -1.0 }]).is_err());
    }

    #[test]
    fn transmission_edges_are_one_sided() {
        // Site 0 reaches 1, but 1 is too weak to reach back.
        let sites = SiteSet::new(vec![
            Site { x: 0.0, y: 0.0, r: 2.0 },
            Site { x: 1.5, y: 0.0, r: 1.0 },
            Site { x: 2.4, y: 0.0, r: 1.0 },
        ])
        .unwrap();
        let d = transmission_graph(&sites);
        assert_eq!(d.out_neighbors(0), &[1]);
        assert_eq!(d.out_neighbors(1), &[2]);
        assert_eq!(d.out_neighbors(2), &[1]);
    }

    #[test]
    fn random_sites_are_deterministic_and_in_range() {
        let a = random_sites(64, 10.0, (0.5, 2.0), 7);
        let b = random_sites(64, 10.0, (0.5, 2.0), 7);
        assert_eq!(a, b);
        assert_eq!(a.len(), 64);
        for s in a.sites() {
            assert!((0.0..10.0).contains(&s.x) && (0.0..10.0).contains(&s.y));
            assert!((0.5..=2.0).contains(&s.r));
        }
        let c = random_sites(64, 10.0, (0.5, 2.0), 8);
        assert_ne!(a, c, "different seeds give different sets");
    }

    #[test]
    fn grid_construction_matches_naive_all_pairs() {
        let sites = random_sites(300, 8.0, (1.0, 1.0), 42);
        let g = unit_disk_graph(&sites).unwrap();
        for i in 0..300u32 {
            for j in (i + 1)..300u32 {
                let expected = sites.get(i as usize).dist2(sites.get(j as usize)) <= 4.0;
                assert_eq!(g.adjacency_test(i, j), expected, "pair ({i}, {j})");
            }
        }
        let t = transmission_graph(&random_sites(200, 6.0, (0.5, 2.0), 43));
        let sites = random_sites(200, 6.0, (0.5, 2.0), 43);
        for i in 0..200usize {
            let out = t.out_neighbors(i as Vertex);
            for j in 0..200usize {
                if i == j {
                    continue;
                }
                let expected =
                    sites.get(i).dist2(sites.get(j)) <= sites.get(i).r * sites.get(i).r;
                assert_eq!(out.contains(&(j as Vertex)), expected, "pair ({i}, {j})");
            }
        }
    }

    #[test]
    fn adversarial_families_have_expected_shape() {
        let s = star(7);
        assert_eq!((s.n(), s.m(), s.degree(0)), (8, 7, 7));
        let p = petersen();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
        let c = dicycle(3);
        assert_eq!(c.out_neighbors(2), &[0]);
        let b = bistar(7);
        assert_eq!((b.n(), b.m(), b.out_degree(0)), (8, 14, 7));
    }
}
