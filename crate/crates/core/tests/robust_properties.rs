//! The robust algorithms against the brute-force oracles, on geometric
//! inputs (where they must answer) and on arbitrary inputs (where any
//! rejection must carry a valid certificate).

mod common;

use common::{grid_subgraph, outerplanar, random_digraph, random_forest, random_graph};
use rdg_core::geometry::{bistar, dicycle, petersen, random_sites, star, transmission_graph, unit_disk_graph};
use rdg_core::graph::{bidirected_table, counting_sort_transpose};
use rdg_core::oracle::{brute_directed_triangle, brute_girth, brute_triangle};
use rdg_core::tg::{
    acyclicity_check, find_directed_triangle_with_stats, uni_subgraph, Acyclicity,
    DirectedTriangleOutcome,
};
use rdg_core::udg::{
    find_triangle_with_stats, girth_with_stats, planar_girth, GirthOutcome, TriangleOutcome,
};
use rdg_core::witness::{
    check_directed_outcome, check_girth_outcome, check_triangle_outcome,
};

/// Densities from nearly-isolated to far above the planarity threshold.
fn udg_instance(seed: u64, max_n: usize) -> rdg_core::UndirectedGraph {
    let n = 10 + (seed as usize * 37) % (max_n - 10);
    let spread = [4.0, 1.6, 0.9, 0.45][seed as usize % 4];
    let box_side = spread * (n as f64).sqrt();
    unit_disk_graph(&random_sites(n, box_side, (1.0, 1.0), seed)).unwrap()
}

fn tg_instance(seed: u64, max_n: usize) -> rdg_core::DirectedGraph {
    let n = 10 + (seed as usize * 53) % (max_n - 10);
    let spread = [2.4, 1.2, 0.7][seed as usize % 3];
    let box_side = spread * (n as f64).sqrt();
    transmission_graph(&random_sites(n, box_side, (0.5, 2.0), 500_000 + seed))
}

#[test]
fn triangle_matches_oracle_and_never_rejects_unit_disk_graphs() {
    for seed in 0..150 {
        let g = udg_instance(seed, 400);
        let (outcome, stats) = find_triangle_with_stats(&g);
        assert!(check_triangle_outcome(&g, &outcome), "seed {seed}");
        assert!(
            stats.pair_checks <= 21 * g.n() as u64,
            "seed {seed}: {} probes on n = {}",
            stats.pair_checks,
            g.n()
        );
        let expected = brute_triangle(&g).unwrap();
        match outcome {
            TriangleOutcome::Triangle(_) => {
                assert!(expected.is_some(), "seed {seed}: claimed triangle, oracle found none")
            }
            TriangleOutcome::TriangleFree => {
                assert_eq!(expected, None, "seed {seed}: missed {expected:?}")
            }
            TriangleOutcome::NotInDomain(_) => {
                panic!("seed {seed}: rejected a genuine unit disk graph")
            }
        }
    }
}

#[test]
fn girth_matches_oracle_on_unit_disk_graphs() {
    for seed in 0..100 {
        let g = udg_instance(seed, 300);
        let (outcome, _) = girth_with_stats(&g);
        assert!(check_girth_outcome(&g, &outcome), "seed {seed}");
        let expected = brute_girth(&g).unwrap();
        match outcome {
            GirthOutcome::Girth { girth, .. } => {
                assert_eq!(Some(girth), expected.map(|(g, _)| g), "seed {seed}")
            }
            GirthOutcome::NoCycle => assert_eq!(expected, None, "seed {seed}"),
            GirthOutcome::NotInDomain(_) => {
                panic!("seed {seed}: rejected a genuine unit disk graph")
            }
        }
    }
}

#[test]
fn triangle_on_arbitrary_graphs_answers_or_rejects_with_proof() {
    for seed in 0..200 {
        let n = 5 + (seed as usize) % 60;
        let g = random_graph(n, [0.05, 0.2, 0.6][seed as usize % 3], 7_000 + seed);
        let (outcome, _) = find_triangle_with_stats(&g);
        assert!(check_triangle_outcome(&g, &outcome), "seed {seed}");
        if let TriangleOutcome::TriangleFree = outcome {
            assert_eq!(brute_triangle(&g).unwrap(), None, "seed {seed}");
        }
        let (girth_outcome, _) = girth_with_stats(&g);
        assert!(check_girth_outcome(&g, &girth_outcome), "seed {seed}");
        if let GirthOutcome::Girth { girth, .. } = girth_outcome {
            assert_eq!(
                Some(girth),
                brute_girth(&g).unwrap().map(|(g, _)| g),
                "seed {seed}: girth answers must be exact even off-domain"
            );
        }
    }
}

#[test]
fn planar_girth_equals_brute_girth_on_500_random_planar_graphs() {
    for seed in 0..500u64 {
        let g = match seed % 3 {
            0 => grid_subgraph(4 + (seed % 9) as u32, 4 + (seed % 12) as u32, 0.85, seed),
            1 => outerplanar(8 + (seed % 150) as u32, 60, seed),
            _ => random_forest(20 + (seed % 180) as u32, seed),
        };
        assert!(g.n() <= 200);
        let got = planar_girth(&g);
        let expected = brute_girth(&g).unwrap();
        assert_eq!(
            got.as_ref().map(|(len, _)| *len),
            expected.map(|(len, _)| len),
            "seed {seed}"
        );
        if let Some((len, cycle)) = got {
            assert_eq!(cycle.len() as u32, len, "seed {seed}");
            assert!(rdg_core::witness::is_simple_cycle(&g, &cycle), "seed {seed}");
        }
    }
}

#[test]
fn directed_triangle_matches_oracle_and_never_rejects_transmission_graphs() {
    for seed in 0..150 {
        let d = tg_instance(seed, 400);
        let (outcome, stats) = find_directed_triangle_with_stats(&d);
        assert!(check_directed_outcome(&d, &outcome), "seed {seed}");
        assert!(
            stats.max_list_scans <= 13,
            "seed {seed}: a list was scanned {} times",
            stats.max_list_scans
        );
        let expected = brute_directed_triangle(&d).unwrap();
        match outcome {
            DirectedTriangleOutcome::Triangle { .. } => {
                assert!(expected.is_some(), "seed {seed}")
            }
            DirectedTriangleOutcome::TriangleFree => assert_eq!(expected, None, "seed {seed}"),
            DirectedTriangleOutcome::NotInDomain(_) => {
                panic!("seed {seed}: rejected a genuine transmission graph")
            }
        }
    }
}

#[test]
fn one_way_subgraphs_of_transmission_graphs_are_acyclic() {
    for seed in 0..60 {
        let d = tg_instance(seed, 250);
        let bi = bidirected_table(&counting_sort_transpose(&d));
        let uni = uni_subgraph(&d, &bi);
        assert_eq!(acyclicity_check(&uni), Acyclicity::Acyclic, "seed {seed}");
    }
}

#[test]
fn directed_triangle_classification_matches_oracle_on_small_digraphs() {
    // All digraphs on up to 3 vertices, then a broad seeded sample up to 7.
    let pairs3: Vec<(u32, u32)> = (0..3u32)
        .flat_map(|u| (0..3u32).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    for mask in 0u32..(1 << pairs3.len()) {
        let edges: Vec<_> = pairs3
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        let d = rdg_core::DirectedGraph::build(3, &edges).unwrap();
        check_against_oracle(&d, mask as u64);
    }
    for seed in 0..120_000u64 {
        let n = 4 + (seed as usize) % 4;
        let d = random_digraph(n, [0.15, 0.3, 0.5, 0.8][seed as usize % 4], 31_000_000 + seed);
        check_against_oracle(&d, seed);
    }
}

fn check_against_oracle(d: &rdg_core::DirectedGraph, seed: u64) {
    let (outcome, _) = find_directed_triangle_with_stats(d);
    assert!(check_directed_outcome(d, &outcome), "seed {seed}");
    let expected = brute_directed_triangle(d).unwrap();
    match outcome {
        DirectedTriangleOutcome::Triangle { .. } => assert!(
            expected.is_some(),
            "seed {seed}: claimed triangle, oracle found none in {d:?}"
        ),
        DirectedTriangleOutcome::TriangleFree => assert_eq!(
            expected, None,
            "seed {seed}: oracle found a triangle the search missed in {d:?}"
        ),
        // A rejection must be certified, which check_directed_outcome
        // established; arbitrary digraphs are allowed to be rejected.
        DirectedTriangleOutcome::NotInDomain(_) => {}
    }
}

#[test]
fn adversarial_fixtures_are_rejected_with_valid_witnesses() {
    let s = star(7);
    let (outcome, _) = find_triangle_with_stats(&s);
    assert!(matches!(outcome, TriangleOutcome::NotInDomain(_)));
    assert!(check_triangle_outcome(&s, &outcome));

    let p = petersen();
    let (outcome, _) = girth_with_stats(&p);
    assert!(matches!(
        outcome,
        GirthOutcome::NotInDomain(rdg_core::udg::UdgRejection::NonPlanarTriangleFree(_))
    ));
    assert!(check_girth_outcome(&p, &outcome));

    let (outcome, _) = find_directed_triangle_with_stats(&dicycle(3));
    assert!(check_directed_outcome(&dicycle(3), &outcome));

    let (outcome, _) = find_directed_triangle_with_stats(&bistar(7));
    assert!(check_directed_outcome(&bistar(7), &outcome));
}
