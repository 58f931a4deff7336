//! Command-line front end: recognize, cover, color, verify, oracle, gen,
//! and bench, all reading DIMACS graphs and writing JSON reports.
//!
//! Exit codes: 0 success (and positive verdicts), 1 class violations and
//! negative verdicts, 2 bad input (unreadable or malformed files, missing
//! arguments, oracle size caps), 3 internal invariant failures. Solver
//! partitions are re-verified in process before they are printed; a
//! verification failure downgrades the run to exit 3 and prints nothing.

use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use crate::detect::{is_class_member, Pattern};
use crate::dimacs::{read_dimacs, read_dimacs_file, write_dimacs};
use crate::error::Error;
use crate::gen::{generate, BaseGraph, GenMethod, GenRecipe};
use crate::graph::{Graph, VertexSet};
use crate::oracle::{brute_chromatic, brute_clique_cover, brute_matching};
use crate::report::{
    coloring_parts, cover_parts, fit_log_log_slope, median, BenchInstance, BenchPoint,
    BenchReport, Report, TraceReport, WitnessReport,
};
use crate::solver::{
    chromatic_coloring, clique_cover, verify_cover, verify_cover_parts, verify_coloring,
    verify_coloring_values,
};

#[derive(Parser, Debug)]
#[command(
    name = "bullhouse",
    version,
    about = "Exact minimum clique covers for bull/house-free graphs and \
             minimum colorings for their complements"
)]
pub struct Cli {
    /// Omit wall-clock timings so identical runs emit identical bytes
    #[arg(long, global = true)]
    pub no_timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// Which of the two complementary graph classes a command refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    /// no induced bull, no induced house (clique cover input)
    Cover,
    /// no induced P5, no induced bull (coloring input)
    Color,
}

impl Side {
    fn class_name(self) -> &'static str {
        match self {
            Side::Cover => "(bull,house)-free",
            Side::Color => "(P5,bull)-free",
        }
    }

    fn patterns(self) -> &'static [Pattern] {
        match self {
            Side::Cover => &[Pattern::Bull, Pattern::House],
            Side::Color => &[Pattern::P5, Pattern::Bull],
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MethodArg {
    Rejection,
    Substitution,
    DuplicationChain,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Test class membership; a violation reports its induced witness
    Recognize {
        /// DIMACS file, or - for stdin
        input: PathBuf,
        /// Class to test against
        #[arg(long, value_enum, default_value_t = Side::Cover)]
        side: Side,
    },
    /// Minimum clique cover of a bull-free, house-free graph
    Cover {
        /// DIMACS file, or - for stdin
        input: PathBuf,
    },
    /// Minimum coloring of a P5-free, bull-free graph
    Color {
        /// DIMACS file, or - for stdin
        input: PathBuf,
    },
    /// Check a candidate cover or coloring against a graph
    #[command(group(ArgGroup::new("candidate").required(true)))]
    Verify {
        /// DIMACS file, or - for stdin
        input: PathBuf,
        /// JSON array of cliques, vertices 1-based
        #[arg(long, group = "candidate")]
        cover: Option<PathBuf>,
        /// JSON array of per-vertex colors, 1-based
        #[arg(long, group = "candidate")]
        coloring: Option<PathBuf>,
    },
    /// Brute-force baselines (small graphs only)
    #[command(group(ArgGroup::new("quantity").required(true)))]
    Oracle {
        /// DIMACS file, or - for stdin
        input: PathBuf,
        /// chromatic number and an optimal coloring
        #[arg(long, group = "quantity")]
        chi: bool,
        /// minimum clique cover
        #[arg(long, group = "quantity")]
        cc: bool,
        /// maximum matching size
        #[arg(long, group = "quantity")]
        matching: bool,
    },
    /// Emit a seeded bull-free, house-free instance as DIMACS
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Vertex count (rejection and substitution)
        #[arg(long)]
        n: Option<usize>,
        /// Edge probability for rejection sampling
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        /// Largest base substituted in, between 2 and 5
        #[arg(long, default_value_t = 5)]
        max_inner: usize,
        /// Starting graph of a duplication chain
        #[arg(long, value_enum)]
        base: Option<BaseGraph>,
        /// Number of duplications in a chain
        #[arg(long)]
        length: Option<usize>,
        /// Write here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Generate, solve, and time a batch of recipes, fitting a growth
    /// exponent to the medians
    Bench {
        /// JSON array of generation recipes
        config: PathBuf,
    },
}

struct Ctx {
    no_timing: bool,
    start: Instant,
}

impl Ctx {
    fn wall_ms(&self) -> Option<f64> {
        if self.no_timing {
            None
        } else {
            Some(self.start.elapsed().as_secs_f64() * 1e3)
        }
    }
}

/// Runs a parsed invocation, writing reports to `out`, and returns the
/// process exit code. Errors print to stderr.
pub fn run<W: Write>(cli: Cli, out: &mut W) -> i32 {
    let ctx = Ctx {
        no_timing: cli.no_timing,
        start: Instant::now(),
    };
    match execute(cli.command, &ctx, out) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn load(input: &Path) -> Result<(Graph, Vec<String>), Error> {
    let inst = if input == Path::new("-") {
        read_dimacs(std::io::stdin().lock())?
    } else {
        read_dimacs_file(input)?
    };
    Ok((inst.graph, inst.warnings))
}

fn emit<W: Write>(out: &mut W, report: &Report) -> Result<(), Error> {
    out.write_all(report.to_json().as_bytes())?;
    Ok(())
}

fn execute<W: Write>(command: Command, ctx: &Ctx, out: &mut W) -> Result<i32, Error> {
    match command {
        Command::Recognize { input, side } => {
            let (g, warnings) = load(&input)?;
            let mut report = base_report("recognize", &input, &g, warnings);
            report.class = Some(side.class_name().to_string());
            let (ok, witness) = is_class_member(&g, side.patterns());
            report.in_class = Some(ok);
            report.witness = witness.as_ref().map(WitnessReport::from_witness);
            report.wall_ms = ctx.wall_ms();
            emit(out, &report)?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::Cover { input } => {
            let (g, warnings) = load(&input)?;
            let mut report = base_report("cover", &input, &g, warnings);
            report.class = Some(Side::Cover.class_name().to_string());
            match clique_cover(&g) {
                Ok((cover, trace)) => {
                    verify_cover(&g, &cover).map_err(|reason| {
                        Error::Internal(format!("computed cover failed verification: {reason}"))
                    })?;
                    report.in_class = Some(true);
                    report.value = Some(cover.size());
                    report.parts = Some(cover_parts(&cover));
                    report.verified = Some(true);
                    report.trace = Some(TraceReport::from_trace(&trace));
                    report.wall_ms = ctx.wall_ms();
                    emit(out, &report)?;
                    Ok(0)
                }
                Err(Error::ClassViolation { witness, .. }) => {
                    report.in_class = Some(false);
                    report.witness = Some(WitnessReport::from_witness(&witness));
                    report.wall_ms = ctx.wall_ms();
                    emit(out, &report)?;
                    Ok(1)
                }
                Err(other) => Err(other),
            }
        }
        Command::Color { input } => {
            let (g, warnings) = load(&input)?;
            let mut report = base_report("color", &input, &g, warnings);
            report.class = Some(Side::Color.class_name().to_string());
            match chromatic_coloring(&g) {
                Ok((coloring, trace)) => {
                    verify_coloring(&g, &coloring).map_err(|reason| {
                        Error::Internal(format!(
                            "computed coloring failed verification: {reason}"
                        ))
                    })?;
                    report.in_class = Some(true);
                    report.value = Some(coloring.num_colors());
                    report.parts = Some(coloring_parts(&coloring));
                    report.colors = Some(coloring.colors().to_vec());
                    report.verified = Some(true);
                    report.trace = Some(TraceReport::from_trace(&trace));
                    report.wall_ms = ctx.wall_ms();
                    emit(out, &report)?;
                    Ok(0)
                }
                Err(Error::ClassViolation { witness, .. }) => {
                    report.in_class = Some(false);
                    report.witness = Some(WitnessReport::from_witness(&witness));
                    report.wall_ms = ctx.wall_ms();
                    emit(out, &report)?;
                    Ok(1)
                }
                Err(other) => Err(other),
            }
        }
        Command::Verify { input, cover, coloring } => {
            let (g, warnings) = load(&input)?;
            let mut report = base_report("verify", &input, &g, warnings);
            let verdict = match (&cover, &coloring) {
                (Some(path), None) => {
                    let raw: Vec<Vec<usize>> =
                        read_json(path, "cover file").map_err(Error::Input)?;
                    check_cover_file(&g, &raw)
                }
                (None, Some(path)) => {
                    let raw: Vec<usize> =
                        read_json(path, "coloring file").map_err(Error::Input)?;
                    verify_coloring_values(&g, &raw)
                        .map(|()| raw.iter().copied().max().unwrap_or(0))
                }
                _ => unreachable!("clap requires exactly one candidate"),
            };
            let code = match verdict {
                Ok(value) => {
                    report.valid = Some(true);
                    report.value = Some(value);
                    0
                }
                Err(reason) => {
                    report.valid = Some(false);
                    report.reason = Some(reason);
                    1
                }
            };
            report.wall_ms = ctx.wall_ms();
            emit(out, &report)?;
            Ok(code)
        }
        Command::Oracle { input, chi, cc, matching } => {
            let (g, warnings) = load(&input)?;
            let mut report = base_report("oracle", &input, &g, warnings);
            if chi {
                let (value, coloring) = brute_chromatic(&g)?;
                report.value = Some(value);
                report.parts = Some(coloring_parts(&coloring));
                report.colors = Some(coloring.colors().to_vec());
            } else if cc {
                let (value, cover) = brute_clique_cover(&g)?;
                report.value = Some(value);
                report.parts = Some(cover_parts(&cover));
            } else if matching {
                report.value = Some(brute_matching(&g)?);
            }
            report.wall_ms = ctx.wall_ms();
            emit(out, &report)?;
            Ok(0)
        }
        Command::Gen { seed, method, n, p, max_inner, base, length, output } => {
            let method = match method {
                MethodArg::Rejection => GenMethod::Rejection {
                    n: require(n, "--n", "rejection")?,
                    edge_prob: p,
                },
                MethodArg::Substitution => GenMethod::Substitution {
                    target_n: require(n, "--n", "substitution")?,
                    max_inner,
                },
                MethodArg::DuplicationChain => GenMethod::DuplicationChain {
                    base: require(base, "--base", "duplication-chain")?,
                    length: require(length, "--length", "duplication-chain")?,
                },
            };
            let g = generate(&GenRecipe { seed, method })?;
            match output {
                Some(path) => write_dimacs(&g, File::create(path)?)?,
                None => write_dimacs(&g, &mut *out)?,
            }
            Ok(0)
        }
        Command::Bench { config } => {
            let recipes: Vec<GenRecipe> =
                read_json(&config, "bench config").map_err(Error::Input)?;
            if recipes.is_empty() {
                return Err(Error::Input("bench config holds no recipes".into()));
            }
            let mut instances = Vec::new();
            let mut times_by_n: std::collections::BTreeMap<usize, Vec<f64>> = Default::default();
            let mut runs_by_n: std::collections::BTreeMap<usize, usize> = Default::default();
            for recipe in &recipes {
                let g = generate(recipe)?;
                let solve_start = Instant::now();
                let (cover, trace) = clique_cover(&g)?;
                let ms = solve_start.elapsed().as_secs_f64() * 1e3;
                verify_cover(&g, &cover).map_err(|reason| {
                    Error::Internal(format!("computed cover failed verification: {reason}"))
                })?;
                *runs_by_n.entry(g.n()).or_default() += 1;
                if !ctx.no_timing {
                    times_by_n.entry(g.n()).or_default().push(ms);
                }
                instances.push(BenchInstance {
                    seed: recipe.seed,
                    n: g.n(),
                    m: g.edge_count(),
                    value: cover.size(),
                    recursion_nodes: trace.node_count(),
                    ms: if ctx.no_timing { None } else { Some(ms) },
                });
            }
            let per_n: Vec<BenchPoint> = runs_by_n
                .iter()
                .map(|(&n, &runs)| BenchPoint {
                    n,
                    runs,
                    median_ms: times_by_n.get(&n).and_then(|ts| median(ts)),
                })
                .collect();
            let points: Vec<(usize, f64)> = per_n
                .iter()
                .filter_map(|p| p.median_ms.map(|t| (p.n, t)))
                .collect();
            let report = BenchReport {
                command: "bench".into(),
                config: config.display().to_string(),
                instances,
                per_n,
                slope: fit_log_log_slope(&points),
                wall_ms: ctx.wall_ms(),
            };
            out.write_all(report.to_json().as_bytes())?;
            Ok(0)
        }
    }
}

fn base_report(command: &str, input: &Path, g: &Graph, warnings: Vec<String>) -> Report {
    let mut report = Report::new(command, &input.display().to_string(), g.n(), g.edge_count());
    report.warnings = warnings;
    report
}

fn require<T>(value: Option<T>, flag: &str, method: &str) -> Result<T, Error> {
    value.ok_or_else(|| Error::Input(format!("{flag} is required for the {method} method")))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path, what: &str) -> Result<T, String> {
    let file = File::open(path).map_err(|e| format!("{what} {}: {e}", path.display()))?;
    serde_json::from_reader(BufReader::new(file))
        .map_err(|e| format!("{what} {}: {e}", path.display()))
}

/// Validates a 1-based cover file against the graph, returning the cover
/// size. Out-of-range labels are a failed verdict, not an input error:
/// the file parsed, it just does not describe a cover of this graph.
fn check_cover_file(g: &Graph, raw: &[Vec<usize>]) -> Result<usize, String> {
    let n = g.n();
    for (i, part) in raw.iter().enumerate() {
        for &v in part {
            if v < 1 || v > n {
                return Err(format!("part {i} names vertex {v}, outside 1..={n}"));
            }
        }
    }
    let parts: Vec<VertexSet> = raw
        .iter()
        .map(|part| VertexSet::from_members(n, part.iter().map(|&v| v - 1)))
        .collect();
    verify_cover_parts(g, &parts).map(|()| parts.len())
}
