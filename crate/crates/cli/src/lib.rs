//! Implementation of the `rdg` subcommands, kept out of `main` so the
//! result records, instance families, and slope fitting are testable
//! directly.

use std::fmt;
use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use rdg_core::geometry::{
    bistar, dicycle, petersen, random_sites, star, transmission_graph, unit_disk_graph, SiteSet,
};
use rdg_core::io::{self, ParsedGraph};
use rdg_core::oracle::{brute_directed_triangle, brute_girth, brute_triangle};
use rdg_core::tg::{find_directed_triangle_with_stats, DirectedTriangleOutcome, TgRejection};
use rdg_core::udg::{
    find_triangle_with_stats, girth_with_stats, GirthOutcome, TriangleOutcome, UdgRejection,
};
use rdg_core::witness;
use rdg_core::{DirectedGraph, UndirectedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Problem {
    Triangle,
    Girth,
    TgTriangle,
}

impl Problem {
    pub fn name(self) -> &'static str {
        match self {
            Problem::Triangle => "triangle",
            Problem::Girth => "girth",
            Problem::TgTriangle => "tg-triangle",
        }
    }
}

/// Anything that stops a subcommand before it can produce a record.
#[derive(Debug)]
pub struct CliError(pub String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for CliError {}

fn err(msg: impl Into<String>) -> CliError {
    CliError(msg.into())
}

/// One solve result, printed as a single JSON line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub command: String,
    pub problem: String,
    pub input: String,
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub girth: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<u32>>,
    pub construction_ns: u64,
    pub query_ns: u64,
    pub counters: CounterSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CounterSet {
    pub pair_checks: u64,
    pub max_list_scans: u32,
}

/// One verify verdict, printed as a single JSON line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyRecord {
    pub command: String,
    pub problem: String,
    pub input: String,
    pub outcome: String,
    pub pass: bool,
    pub detail: String,
}

/// The input kinds a solve can be handed.
enum LoadedInput {
    Undirected(UndirectedGraph),
    Directed(DirectedGraph),
}

/// Reads either file format and builds the graph the problem needs.
/// Returns the graph and the construction time (parsing plus building).
fn load_input(problem: Problem, path: &Path) -> Result<(LoadedInput, u64), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| err(format!("cannot read {}: {e}", path.display())))?;
    let first = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| err(format!("{}: empty input", path.display())))?;
    let fields = first.split_whitespace().count();
    let started = Instant::now();
    let loaded = match fields {
        1 => {
            let sites = io::read_sites(&text)
                .map_err(|e| err(format!("{}: {e}", path.display())))?;
            match problem {
                Problem::Triangle | Problem::Girth => {
                    let g = unit_disk_graph(&sites)
                        .map_err(|e| err(format!("{}: {e}", path.display())))?;
                    LoadedInput::Undirected(g)
                }
                Problem::TgTriangle => LoadedInput::Directed(transmission_graph(&sites)),
            }
        }
        3 => match (io::read_edge_list(&text), problem) {
            (Err(e), _) => return Err(err(format!("{}: {e}", path.display()))),
            (Ok(ParsedGraph::Undirected(g)), Problem::Triangle | Problem::Girth) => {
                LoadedInput::Undirected(g)
            }
            (Ok(ParsedGraph::Directed(d)), Problem::TgTriangle) => LoadedInput::Directed(d),
            (Ok(ParsedGraph::Directed(_)), p) => {
                return Err(err(format!("problem {} needs an undirected graph", p.name())))
            }
            (Ok(ParsedGraph::Undirected(_)), p) => {
                return Err(err(format!("problem {} needs a directed graph", p.name())))
            }
        },
        _ => {
            return Err(err(format!(
                "{}: first line is neither a site count nor an `n m kind` header",
                path.display()
            )))
        }
    };
    Ok((loaded, started.elapsed().as_nanos() as u64))
}

/// Exit code conventions: 0 for an answer, 2 for a certified domain
/// rejection, 1 for errors (the caller maps errors to 1).
pub fn solve(problem: Problem, path: &Path) -> Result<(ResultRecord, i32), CliError> {
    let (input, construction_ns) = load_input(problem, path)?;
    let mut record = ResultRecord {
        command: "solve".into(),
        problem: problem.name().into(),
        input: path.display().to_string(),
        outcome: String::new(),
        girth: None,
        reason: None,
        detail: None,
        witness: None,
        construction_ns,
        query_ns: 0,
        counters: CounterSet::default(),
    };
    let exit = match (problem, input) {
        (Problem::Triangle, LoadedInput::Undirected(g)) => {
            let started = Instant::now();
            let (outcome, stats) = find_triangle_with_stats(&g);
            record.query_ns = started.elapsed().as_nanos() as u64;
            record.counters.pair_checks = stats.pair_checks;
            fill_triangle(&mut record, &outcome)
        }
        (Problem::Girth, LoadedInput::Undirected(g)) => {
            let started = Instant::now();
            let (outcome, stats) = girth_with_stats(&g);
            record.query_ns = started.elapsed().as_nanos() as u64;
            record.counters.pair_checks = stats.pair_checks;
            fill_girth(&mut record, &outcome)
        }
        (Problem::TgTriangle, LoadedInput::Directed(d)) => {
            let started = Instant::now();
            let (outcome, stats) = find_directed_triangle_with_stats(&d);
            record.query_ns = started.elapsed().as_nanos() as u64;
            record.counters.pair_checks = stats.pair_checks;
            record.counters.max_list_scans = stats.max_list_scans;
            fill_directed(&mut record, &outcome)
        }
        _ => unreachable!("load_input matched the graph kind to the problem"),
    };
    Ok((record, exit))
}

fn fill_triangle(record: &mut ResultRecord, outcome: &TriangleOutcome) -> i32 {
    match outcome {
        TriangleOutcome::Triangle(t) => {
            record.outcome = "triangle".into();
            record.witness = Some(t.to_vec());
            0
        }
        TriangleOutcome::TriangleFree => {
            record.outcome = "triangle_free".into();
            0
        }
        TriangleOutcome::NotInDomain(w) => {
            record.outcome = "not_in_domain".into();
            record.reason = Some("high_degree_no_triangle".into());
            let mut list = vec![w.vertex];
            list.extend_from_slice(&w.neighbors);
            record.witness = Some(list);
            2
        }
    }
}

fn fill_girth(record: &mut ResultRecord, outcome: &GirthOutcome) -> i32 {
    match outcome {
        GirthOutcome::Girth { girth, cycle } => {
            record.outcome = "girth".into();
            record.girth = Some(*girth);
            record.witness = Some(cycle.clone());
            0
        }
        GirthOutcome::NoCycle => {
            record.outcome = "no_cycle".into();
            0
        }
        GirthOutcome::NotInDomain(UdgRejection::HighDegreeNoTriangle(w)) => {
            record.outcome = "not_in_domain".into();
            record.reason = Some("high_degree_no_triangle".into());
            let mut list = vec![w.vertex];
            list.extend_from_slice(&w.neighbors);
            record.witness = Some(list);
            2
        }
        GirthOutcome::NotInDomain(UdgRejection::NonPlanarTriangleFree(f)) => {
            record.outcome = "not_in_domain".into();
            record.reason = Some("non_planar_triangle_free".into());
            record.detail = Some(f.to_string());
            record.witness = Some(Vec::new());
            2
        }
    }
}

fn fill_directed(record: &mut ResultRecord, outcome: &DirectedTriangleOutcome) -> i32 {
    match outcome {
        DirectedTriangleOutcome::Triangle { v, u, w } => {
            record.outcome = "triangle".into();
            record.witness = Some(vec![*v, *u, *w]);
            0
        }
        DirectedTriangleOutcome::TriangleFree => {
            record.outcome = "triangle_free".into();
            0
        }
        DirectedTriangleOutcome::NotInDomain(TgRejection::UniSubgraphCyclic { cycle }) => {
            record.outcome = "not_in_domain".into();
            record.reason = Some("uni_subgraph_cyclic".into());
            record.witness = Some(cycle.clone());
            2
        }
        DirectedTriangleOutcome::NotInDomain(TgRejection::HighBiDegreeNoTriangle(w)) => {
            record.outcome = "not_in_domain".into();
            record.reason = Some("high_bi_degree_no_triangle".into());
            let mut list = vec![w.vertex];
            list.extend_from_slice(&w.neighbors);
            record.witness = Some(list);
            2
        }
    }
}

/// Re-solves and cross-examines the outcome: witnesses must validate
/// mechanically, and answers must agree with the brute-force oracle.
/// A domain rejection with a valid witness passes vacuously.
pub fn verify(problem: Problem, path: &Path) -> Result<(VerifyRecord, i32), CliError> {
    let (input, _) = load_input(problem, path)?;
    let oracle_err = |e: rdg_core::oracle::OracleError| err(format!("verify needs the oracle: {e}"));
    let (outcome_name, pass, detail) = match (problem, input) {
        (Problem::Triangle, LoadedInput::Undirected(g)) => {
            let (outcome, _) = find_triangle_with_stats(&g);
            if !witness::check_triangle_outcome(&g, &outcome) {
                (outcome_label_triangle(&outcome), false, "witness failed validation".to_string())
            } else {
                match outcome {
                    TriangleOutcome::NotInDomain(_) => (
                        "not_in_domain",
                        true,
                        "rejection witness validates; vacuously consistent".to_string(),
                    ),
                    TriangleOutcome::Triangle(_) => {
                        let found = brute_triangle(&g).map_err(oracle_err)?.is_some();
                        ("triangle", found, "oracle cross-check on triangle existence".to_string())
                    }
                    TriangleOutcome::TriangleFree => {
                        let none = brute_triangle(&g).map_err(oracle_err)?.is_none();
                        ("triangle_free", none, "oracle cross-check on triangle absence".to_string())
                    }
                }
            }
        }
        (Problem::Girth, LoadedInput::Undirected(g)) => {
            let (outcome, _) = girth_with_stats(&g);
            if !witness::check_girth_outcome(&g, &outcome) {
                (outcome_label_girth(&outcome), false, "witness failed validation".to_string())
            } else {
                match outcome {
                    GirthOutcome::NotInDomain(_) => (
                        "not_in_domain",
                        true,
                        "rejection witness validates; vacuously consistent".to_string(),
                    ),
                    GirthOutcome::Girth { girth, .. } => {
                        let expected = brute_girth(&g).map_err(oracle_err)?.map(|(len, _)| len);
                        (
                            "girth",
                            expected == Some(girth),
                            format!("claimed girth {girth}, oracle says {expected:?}"),
                        )
                    }
                    GirthOutcome::NoCycle => {
                        let expected = brute_girth(&g).map_err(oracle_err)?;
                        ("no_cycle", expected.is_none(), "oracle cross-check on acyclicity".to_string())
                    }
                }
            }
        }
        (Problem::TgTriangle, LoadedInput::Directed(d)) => {
            let (outcome, _) = find_directed_triangle_with_stats(&d);
            if !witness::check_directed_outcome(&d, &outcome) {
                (outcome_label_directed(&outcome), false, "witness failed validation".to_string())
            } else {
                match outcome {
                    DirectedTriangleOutcome::NotInDomain(_) => (
                        "not_in_domain",
                        true,
                        "rejection witness validates; vacuously consistent".to_string(),
                    ),
                    DirectedTriangleOutcome::Triangle { .. } => {
                        let found = brute_directed_triangle(&d).map_err(oracle_err)?.is_some();
                        ("triangle", found, "oracle cross-check on triangle existence".to_string())
                    }
                    DirectedTriangleOutcome::TriangleFree => {
                        let none = brute_directed_triangle(&d).map_err(oracle_err)?.is_none();
                        ("triangle_free", none, "oracle cross-check on triangle absence".to_string())
                    }
                }
            }
        }
        _ => unreachable!("load_input matched the graph kind to the problem"),
    };
    let record = VerifyRecord {
        command: "verify".into(),
        problem: problem.name().into(),
        input: path.display().to_string(),
        outcome: outcome_name.into(),
        pass,
        detail,
    };
    let exit = if pass { 0 } else { 1 };
    Ok((record, exit))
}

fn outcome_label_triangle(o: &TriangleOutcome) -> &'static str {
    match o {
        TriangleOutcome::Triangle(_) => "triangle",
        TriangleOutcome::TriangleFree => "triangle_free",
        TriangleOutcome::NotInDomain(_) => "not_in_domain",
    }
}

fn outcome_label_girth(o: &GirthOutcome) -> &'static str {
    match o {
        GirthOutcome::Girth { .. } => "girth",
        GirthOutcome::NoCycle => "no_cycle",
        GirthOutcome::NotInDomain(_) => "not_in_domain",
    }
}

fn outcome_label_directed(o: &DirectedTriangleOutcome) -> &'static str {
    match o {
        DirectedTriangleOutcome::Triangle { .. } => "triangle",
        DirectedTriangleOutcome::TriangleFree => "triangle_free",
        DirectedTriangleOutcome::NotInDomain(_) => "not_in_domain",
    }
}

/// What `rdg gen` can produce.
#[derive(Debug, Clone)]
pub enum GenKind {
    UdgSites { n: usize, box_side: f64, seed: u64 },
    TgSites { n: usize, box_side: f64, rmin: f64, rmax: f64, seed: u64 },
    Star { k: u32 },
    Petersen,
    Dicycle { k: u32 },
    Bistar { k: u32 },
}

pub fn generate(kind: &GenKind) -> String {
    match kind {
        GenKind::UdgSites { n, box_side, seed } => {
            io::write_sites(&random_sites(*n, *box_side, (1.0, 1.0), *seed))
        }
        GenKind::TgSites { n, box_side, rmin, rmax, seed } => {
            io::write_sites(&random_sites(*n, *box_side, (*rmin, *rmax), *seed))
        }
        GenKind::Star { k } => io::write_undirected(&star(*k)),
        GenKind::Petersen => io::write_undirected(&petersen()),
        GenKind::Dicycle { k } => io::write_directed(&dicycle(*k)),
        GenKind::Bistar { k } => io::write_directed(&bistar(*k)),
    }
}

/// One measured size in a bench sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub outcome: String,
    pub construction_ns: u64,
    pub query_ns: u64,
    pub pair_checks: u64,
    pub max_list_scans: u32,
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    /// Least-squares slope of log(query_ns) against log(n).
    pub slope_vs_n: f64,
    /// Same against log(n + m).
    pub slope_vs_n_plus_m: f64,
}

/// Deterministic instance family for each problem: dense unit square for
/// the triangle scaling law, a moderate unit-disk density for girth, and
/// mixed radii at constant expected degree for transmission graphs.
pub fn bench_sites(problem: Problem, n: usize, seed: u64) -> SiteSet {
    match problem {
        Problem::Triangle => random_sites(n, 1.0, (1.0, 1.0), seed),
        Problem::Girth => random_sites(n, 2.0 * (n as f64).sqrt(), (1.0, 1.0), seed),
        Problem::TgTriangle => random_sites(n, (n as f64).sqrt(), (0.5, 2.0), seed),
    }
}

pub fn bench(problem: Problem, sizes: &[usize], seed: u64, reps: usize) -> BenchReport {
    assert!(reps >= 1, "at least one repetition");
    let mut rows = Vec::with_capacity(sizes.len());
    for (i, &n) in sizes.iter().enumerate() {
        let sites = bench_sites(problem, n, seed.wrapping_add(i as u64));
        let row = match problem {
            Problem::Triangle | Problem::Girth => {
                let started = Instant::now();
                let g = unit_disk_graph(&sites).expect("generator uses unit radii");
                let construction_ns = started.elapsed().as_nanos() as u64;
                let mut times = Vec::with_capacity(reps);
                let mut outcome = String::new();
                let mut counters = CounterSet::default();
                for _ in 0..reps {
                    let started = Instant::now();
                    let (label, pair_checks) = if problem == Problem::Triangle {
                        let (o, stats) = find_triangle_with_stats(&g);
                        (outcome_label_triangle(&o).to_string(), stats.pair_checks)
                    } else {
                        let (o, stats) = girth_with_stats(&g);
                        (outcome_label_girth(&o).to_string(), stats.pair_checks)
                    };
                    times.push(started.elapsed().as_nanos() as u64);
                    outcome = label;
                    counters.pair_checks = pair_checks;
                }
                BenchRow {
                    n: g.n(),
                    m: g.m(),
                    outcome,
                    construction_ns,
                    query_ns: median(&mut times),
                    pair_checks: counters.pair_checks,
                    max_list_scans: 0,
                }
            }
            Problem::TgTriangle => {
                let started = Instant::now();
                let d = transmission_graph(&sites);
                let construction_ns = started.elapsed().as_nanos() as u64;
                let mut times = Vec::with_capacity(reps);
                let mut outcome = String::new();
                let mut stats = Default::default();
                for _ in 0..reps {
                    let started = Instant::now();
                    let (o, s) = find_directed_triangle_with_stats(&d);
                    times.push(started.elapsed().as_nanos() as u64);
                    outcome = outcome_label_directed(&o).to_string();
                    stats = s;
                }
                BenchRow {
                    n: d.n(),
                    m: d.m(),
                    outcome,
                    construction_ns,
                    query_ns: median(&mut times),
                    pair_checks: stats.pair_checks,
                    max_list_scans: stats.max_list_scans,
                }
            }
        };
        rows.push(row);
    }
    let xs_n: Vec<f64> = rows.iter().map(|r| r.n as f64).collect();
    let xs_nm: Vec<f64> = rows.iter().map(|r| (r.n + r.m) as f64).collect();
    let ys: Vec<f64> = rows.iter().map(|r| r.query_ns.max(1) as f64).collect();
    BenchReport {
        slope_vs_n: loglog_slope(&xs_n, &ys),
        slope_vs_n_plus_m: loglog_slope(&xs_nm, &ys),
        rows,
    }
}

pub fn bench_csv(rows: &[BenchRow]) -> String {
    let mut out =
        String::from("n,m,outcome,construction_ns,query_ns,pair_checks,max_list_scans\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.n, r.m, r.outcome, r.construction_ns, r.query_ns, r.pair_checks, r.max_list_scans
        ));
    }
    out
}

fn median(times: &mut [u64]) -> u64 {
    times.sort_unstable();
    times[times.len() / 2]
}

/// Least-squares slope of ln(y) on ln(x).
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    if xs.len() < 2 {
        return 0.0;
    }
    let lx: Vec<f64> = xs.iter().map(|&x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|&y| y.ln()).collect();
    let mean = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;
    let (mx, my) = (mean(&lx), mean(&ly));
    let num: f64 = lx.iter().zip(&ly).map(|(&x, &y)| (x - mx) * (y - my)).sum();
    let den: f64 = lx.iter().map(|&x| (x - mx) * (x - mx)).sum();
    num / den
}
