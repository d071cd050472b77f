//! Command-line front end.
//!
//! Exit codes: 0 when every certificate and assertion holds, 1 when one
//! fails, 2 for parse, configuration or precondition errors, 3 when an
//! exhaustive budget is exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::extremal::{
    check_dirac_justesen, check_erdos_gallai, density_supremum_lower_bound, ex_minor, probe_partition_conjecture,
    verify_union_bound, Ledger, LedgerError, LedgerOutcome, ProbeConfig,
};
use crate::fractional::{parse_rational, FracError, Rational, SplitParams};
use crate::graph::{parse_graph, write_graph, Graph, GraphError, GraphFamilySpec};
use crate::minor::{circumference, has_minor, max_disjoint_cycles};
use crate::splitter::{failure_trace_json, split_with, SplitError, SplitOptions};

#[derive(Debug, Parser)]
#[command(name = "densesplit", version, about = "Dense-graph splitting and small-graph minor experiments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Worker threads for enumeration and probes (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Split a graph into two parts of densities above s and t.
    Split(SplitArgs),
    /// Test whether a pattern is a minor of a host graph.
    Minor(MinorArgs),
    /// Longest cycle and number of disjoint cycles.
    Circumference(GraphArgs),
    /// Exact ex_m(n, H) with a ledger entry.
    Ex(ExArgs),
    /// Search small graphs for spanning-partition counterexamples.
    Probe(ProbeArgs),
    /// Randomized and constructive desk checks.
    #[command(subcommand)]
    Check(CheckCommand),
}

/// A graph given as a file in the text format or as a family name.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphArgs {
    /// Graph file: a line "n m" followed by m lines "u v".
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Family name such as K7, C5, 2C3, C3+C5, barK(3,8), glue(C4,3).
    #[arg(long)]
    pub family: Option<String>,
}

#[derive(Debug, Args)]
pub struct SplitArgs {
    #[command(flatten)]
    pub input: GraphArgs,
    /// Density for the first part, as "p/q" or an integer.
    #[arg(long)]
    pub s: String,
    /// Density for the second part, as "p/q" or an integer.
    #[arg(long)]
    pub t: String,
    /// Write the step-by-step trace as JSON.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    /// On an internal failure, search all 2-colourings (at most 16 vertices).
    #[arg(long)]
    pub fallback_exhaustive: bool,
    /// Write the partition as JSON.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MinorArgs {
    #[arg(long, required_unless_present = "host_family", conflicts_with = "host_family")]
    pub host: Option<PathBuf>,
    #[arg(long)]
    pub host_family: Option<String>,
    #[arg(long, required_unless_present = "pattern_family", conflicts_with = "pattern_family")]
    pub pattern: Option<PathBuf>,
    #[arg(long)]
    pub pattern_family: Option<String>,
}

#[derive(Debug, Args)]
pub struct ExArgs {
    /// Number of vertices (at most 7).
    #[arg(long)]
    pub n: usize,
    /// Forbidden minor as a family name.
    #[arg(long)]
    pub pattern: String,
    /// JSON-lines ledger; existing entries are re-verified.
    #[arg(long)]
    pub ledger: PathBuf,
    /// Write the extremal witness in the graph text format.
    #[arg(long)]
    pub witness_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ProbeArgs {
    #[arg(long)]
    pub s: String,
    #[arg(long)]
    pub t: String,
    #[arg(long, default_value_t = 8)]
    pub n_max: usize,
    /// Largest n checked over all isomorphism classes; above it graphs are sampled.
    #[arg(long, default_value_t = 8)]
    pub exhaustive_max: usize,
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum CheckCommand {
    /// Random graphs above (k-1)(n-1)/2 edges have a cycle of length >= k.
    ErdosGallai(RandomCheckArgs),
    /// Random graphs above the k = 2 threshold have two disjoint cycles.
    DiracJustesen(RandomCheckArgs),
    /// barK(tau-1, n) has no minor of the pattern and the expected edge count.
    LowerBound(LowerBoundArgs),
    /// ex_m(n, H)/n against the union bound for a union of cycles and cliques.
    UnionBound(UnionBoundArgs),
}

#[derive(Debug, Args)]
pub struct RandomCheckArgs {
    #[arg(long)]
    pub n_max: usize,
    #[arg(long)]
    pub trials: usize,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LowerBoundArgs {
    #[arg(long)]
    pub pattern: String,
    #[arg(long)]
    pub n_max: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct UnionBoundArgs {
    /// Parts of the union, e.g. "C3,C4".
    #[arg(long, value_delimiter = ',')]
    pub parts: Vec<String>,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug)]
pub enum Failure {
    /// A certificate or assertion did not hold.
    Check(String),
    /// Bad input, configuration, or an unmet precondition.
    Usage(String),
    /// An exhaustive search was asked to go past its budget.
    Budget(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Check(m) | Failure::Usage(m) | Failure::Budget(m) => m,
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<FracError> for Failure {
    fn from(e: FracError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<LedgerError> for Failure {
    fn from(e: LedgerError) -> Self {
        match e {
            LedgerError::Mismatch { .. } | LedgerError::InvalidRecord { .. } => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn family(spec: &str) -> Result<Graph, Failure> {
    let spec: GraphFamilySpec = spec.parse().map_err(|e: GraphError| Failure::Usage(e.to_string()))?;
    Ok(spec.build()?)
}

fn load(path: Option<&PathBuf>, spec: Option<&String>) -> Result<Graph, Failure> {
    match (path, spec) {
        (Some(p), _) => read_graph(p),
        (None, Some(s)) => family(s),
        (None, None) => Err(Failure::Usage("no graph given".into())),
    }
}

fn rational(text: &str) -> Result<Rational, Failure> {
    Ok(parse_rational(text)?)
}

fn write_file(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit_json<T: Serialize>(value: &T, output: Option<&PathBuf>) -> Outcome {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    match output {
        Some(path) => write_file(path, &(text + "\n")),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn join(set: &std::collections::BTreeSet<usize>) -> String {
    set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_split(a: &SplitArgs) -> Outcome {
    let g = load(a.input.graph.as_ref(), a.input.family.as_ref())?;
    let p = SplitParams::new(rational(&a.s)?, rational(&a.t)?)?;
    let opts = SplitOptions { fallback_exhaustive: a.fallback_exhaustive };
    match split_with(&g, &p, &opts) {
        Ok(r) => {
            println!("part1: {}", join(&r.part1));
            println!("part2: {}", join(&r.part2));
            let d = r.densities;
            println!("e1={} v1={} e2={} v2={}", d.e1, d.v1, d.e2, d.v2);
            if let Some(branch) = r.trace.branch {
                println!("branch: {}", serde_json::to_value(branch).expect("serializes").as_str().unwrap_or(""));
            }
            if r.exhaustive_fallback {
                println!("note: parts found by exhaustive search after an internal failure");
            }
            if let Some(path) = &a.trace {
                write_file(path, &serde_json::to_string_pretty(&r.trace_json()).expect("serializes"))?;
            }
            if let Some(path) = &a.output {
                let doc = serde_json::json!({ "part1": r.part1, "part2": r.part2, "densities": r.densities, "certificate_ok": r.certificate_ok });
                write_file(path, &serde_json::to_string_pretty(&doc).expect("serializes"))?;
            }
            if r.certificate_ok {
                Ok(())
            } else {
                Err(Failure::Check("the parts do not satisfy the density certificate".into()))
            }
        }
        Err(e) => {
            if let (Some(path), SplitError::InternalProofGap { .. }) = (&a.trace, &e) {
                write_file(path, &serde_json::to_string_pretty(&failure_trace_json(&p, &e)).expect("serializes"))?;
            }
            Err(match e {
                SplitError::InternalProofGap { .. } => Failure::Check(e.to_string()),
                _ => Failure::Usage(e.to_string()),
            })
        }
    }
}

fn cmd_minor(a: &MinorArgs) -> Outcome {
    let g = load(a.host.as_ref(), a.host_family.as_ref())?;
    let h = load(a.pattern.as_ref(), a.pattern_family.as_ref())?;
    match has_minor(&g, &h)? {
        Some(emb) => println!("{}", serde_json::to_string(&emb).expect("serializes")),
        None => println!("none"),
    }
    Ok(())
}

fn cmd_circumference(a: &GraphArgs) -> Outcome {
    let g = load(a.graph.as_ref(), a.family.as_ref())?;
    println!("circumference: {}", circumference(&g)?);
    println!("disjoint_cycles: {}", max_disjoint_cycles(&g)?);
    Ok(())
}

fn cmd_ex(a: &ExArgs) -> Outcome {
    let spec: GraphFamilySpec = a.pattern.parse().map_err(|e: GraphError| Failure::Usage(e.to_string()))?;
    let rec = ex_minor(a.n, &spec)?;
    println!("{}", serde_json::to_string(&rec).expect("serializes"));
    if let Some(path) = &a.witness_out {
        write_file(path, &write_graph(&rec.witness))?;
    }
    match Ledger::new(&a.ledger).record(&rec)? {
        LedgerOutcome::Appended => eprintln!("ledger: appended n={} h={}", rec.n, rec.h_key),
        LedgerOutcome::Verified => eprintln!("ledger: verified n={} h={}", rec.n, rec.h_key),
    }
    Ok(())
}

fn cmd_probe(a: &ProbeArgs) -> Outcome {
    let cfg = ProbeConfig {
        n_max: a.n_max,
        s: rational(&a.s)?,
        t: rational(&a.t)?,
        exhaustive_max: a.exhaustive_max,
        samples: a.samples,
        seed: a.seed,
    };
    let rep = probe_partition_conjecture(&cfg)?;
    emit_json(&rep, a.output.as_ref())?;
    if rep.ok() {
        Ok(())
    } else {
        Err(Failure::Check(format!("{} counterexample(s) found", rep.counterexamples.len())))
    }
}

fn verdict(ok: bool, what: &str) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Failure::Check(format!("{what} check reported violations")))
    }
}

fn cmd_check(c: &CheckCommand) -> Outcome {
    match c {
        CheckCommand::ErdosGallai(a) => {
            let rep = check_erdos_gallai(a.n_max, a.trials, a.seed)?;
            emit_json(&rep, a.output.as_ref())?;
            verdict(rep.ok(), "long-cycle")
        }
        CheckCommand::DiracJustesen(a) => {
            let rep = check_dirac_justesen(a.n_max, a.trials, a.seed)?;
            emit_json(&rep, a.output.as_ref())?;
            verdict(rep.ok(), "disjoint-cycle")
        }
        CheckCommand::LowerBound(a) => {
            let rep = density_supremum_lower_bound(&family(&a.pattern)?, a.n_max)?;
            emit_json(&rep, a.output.as_ref())?;
            verdict(rep.ok(), "lower-bound")
        }
        CheckCommand::UnionBound(a) => {
            let parts = a.parts.iter().map(|p| family(p)).collect::<Result<Vec<_>, _>>()?;
            let rep = verify_union_bound(&parts, a.n)?;
            emit_json(&rep, a.output.as_ref())?;
            verdict(rep.ok(), "union-bound")
        }
    }
}

/// Runs a parsed command line and returns its exit code.
pub fn run(cli: &Cli) -> u8 {
    let dispatch = || match &cli.command {
        Command::Split(a) => cmd_split(a),
        Command::Minor(a) => cmd_minor(a),
        Command::Circumference(a) => cmd_circumference(a),
        Command::Ex(a) => cmd_ex(a),
        Command::Probe(a) => cmd_probe(a),
        Command::Check(c) => cmd_check(c),
    };
    let result = match cli.jobs {
        Some(0) => Err(Failure::Usage("--jobs must be positive".into())),
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(dispatch),
            Err(e) => Err(Failure::Usage(e.to_string())),
        },
        None => dispatch(),
    };
    match result {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {}", f.message());
            f.code()
        }
    }
}

pub fn main() -> ExitCode {
    ExitCode::from(run(&Cli::parse()))
}
