use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rdg_cli::{bench, bench_csv, generate, solve, verify, GenKind, Problem};

/// Robust triangle, girth, and directed-triangle solver for disk and
/// transmission graphs.
#[derive(Parser)]
#[command(name = "rdg", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a sample instance (sites or edge list) to a file or stdout.
    Gen(GenArgs),
    /// Run a robust algorithm on an input file; prints one JSON record.
    ///
    /// Exits 0 on an answer, 2 on a certified domain rejection, 1 on bad
    /// input.
    Solve(SolveArgs),
    /// Re-solve and cross-check the outcome against witnesses and the
    /// brute-force oracle. Exits 0 when consistent.
    Verify(SolveArgs),
    /// Time a problem over a sweep of sizes; prints CSV and a fitted
    /// scaling exponent on stderr.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProblemArg {
    Triangle,
    Girth,
    TgTriangle,
}

impl From<ProblemArg> for Problem {
    fn from(p: ProblemArg) -> Problem {
        match p {
            ProblemArg::Triangle => Problem::Triangle,
            ProblemArg::Girth => Problem::Girth,
            ProblemArg::TgTriangle => Problem::TgTriangle,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    /// Random unit-radius sites (unit disk graph input).
    UdgSites,
    /// Random sites with mixed radii (transmission graph input).
    TgSites,
    /// Star graph, center 0.
    Star,
    /// The Petersen graph.
    Petersen,
    /// One-way directed cycle.
    Dicycle,
    /// Star with all edges bidirected.
    Bistar,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Number of sites (site kinds).
    #[arg(long, default_value_t = 100)]
    n: usize,
    /// Number of leaves or cycle length (graph kinds).
    #[arg(long, default_value_t = 7)]
    k: u32,
    /// Side of the square the sites are drawn from; defaults to sqrt(n).
    #[arg(long)]
    box_side: Option<f64>,
    /// Smallest radius (tg-sites).
    #[arg(long, default_value_t = 0.5)]
    rmin: f64,
    /// Largest radius (tg-sites).
    #[arg(long, default_value_t = 2.0)]
    rmax: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, value_enum)]
    problem: ProblemArg,
    /// Input file: sites, or an edge list of matching kind.
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    problem: ProblemArg,
    /// Instance sizes, e.g. --sizes 1024,2048,4096.
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Query repetitions per size; the median is reported.
    #[arg(long, default_value_t = 5)]
    reps: usize,
    /// CSV output file; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Gen(args) => {
            let kind = match args.kind {
                KindArg::UdgSites => GenKind::UdgSites {
                    n: args.n,
                    box_side: args.box_side.unwrap_or((args.n as f64).sqrt()),
                    seed: args.seed,
                },
                KindArg::TgSites => GenKind::TgSites {
                    n: args.n,
                    box_side: args.box_side.unwrap_or((args.n as f64).sqrt()),
                    rmin: args.rmin,
                    rmax: args.rmax,
                    seed: args.seed,
                },
                KindArg::Star => GenKind::Star { k: args.k },
                KindArg::Petersen => GenKind::Petersen,
                KindArg::Dicycle => GenKind::Dicycle { k: args.k },
                KindArg::Bistar => GenKind::Bistar { k: args.k },
            };
            emit(args.output.as_deref(), &generate(&kind))?;
            Ok(0)
        }
        Command::Solve(args) => {
            let (record, exit) = solve(args.problem.into(), &args.input)?;
            println!("{}", serde_json::to_string(&record)?);
            Ok(exit as u8)
        }
        Command::Verify(args) => {
            let (record, exit) = verify(args.problem.into(), &args.input)?;
            println!("{}", serde_json::to_string(&record)?);
            Ok(exit as u8)
        }
        Command::Bench(args) => {
            if !args.sizes.windows(2).all(|w| w[0] < w[1]) {
                return Err("sizes must be strictly ascending".into());
            }
            let report = bench(args.problem.into(), &args.sizes, args.seed, args.reps.max(1));
            emit(args.output.as_deref(), &bench_csv(&report.rows))?;
            eprintln!(
                "query scaling: slope {:.3} vs n, {:.3} vs n+m",
                report.slope_vs_n, report.slope_vs_n_plus_m
            );
            Ok(0)
        }
    }
}

fn emit(path: Option<&std::path::Path>, content: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, content),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}
