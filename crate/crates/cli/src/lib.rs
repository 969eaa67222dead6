//! Command-line front end: graph generation, dimension queries, profiles and
//! the verification suite.
//!
//! Exit codes: 0 success, 1 no generator exists (or a verification check
//! failed), 2 usage or input error, 3 node budget exhausted.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use ktmd::edge_list::{parse_edge_list, write_edge_list};
use ktmd::gadget::gadget_h;
use ktmd::generators::{generate, GraphKind};
use ktmd::oracle::{run_suite, CheckOptions, Report};
use ktmd::solver::{
    brute_force_dimension, dimension_profile, exact_dimension, greedy_generator, SolveStats,
};
use ktmd::{
    min_distinguishing_number, Diameter, DimensionResult, DistanceMatrix, Graph, SolverConfig,
    Status, Truncation,
};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO_GENERATOR: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "ktmd",
    version,
    about = "(k,t)-metric dimension of graphs under the truncated metric"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a named graph as an edge list.
    Gen {
        #[arg(long)]
        kind: GraphKind,
        /// Order `n`, or `r s` for complete_bipartite.
        #[arg(required = true)]
        sizes: Vec<usize>,
    },
    /// Compute `dim_k^t`.
    Dim {
        #[command(flatten)]
        query: Query,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = SolverKind::Exact)]
        solver: SolverKind,
        #[command(flatten)]
        search: Search,
    },
    /// Compute `𝔡_t`, the largest feasible `k`, with a witness pair.
    Dimensional {
        #[command(flatten)]
        query: Query,
    },
    /// `dim_k^s` for every `s <= t` and every feasible `k`.
    Profile {
        #[command(flatten)]
        query: Query,
        #[command(flatten)]
        search: Search,
    },
    /// Run the built-in verification suite.
    Verify {
        /// Keep only checks whose tag contains this string.
        #[arg(long)]
        tag: Option<String>,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        search: Search,
    },
    /// Write the gadget graph `H_k` as an edge list.
    Gadget {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Debug, Args)]
struct Query {
    #[arg(long)]
    input: PathBuf,
    /// Truncation level; defaults to the diameter (required when disconnected).
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct Search {
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, env = "KTMD_THREADS")]
    threads: Option<usize>,
}

impl Search {
    fn config(&self) -> SolverConfig {
        let mut cfg = SolverConfig::default();
        if let Some(b) = self.budget {
            cfg.node_budget = b;
        }
        if let Some(th) = self.threads {
            cfg.threads = th;
        }
        cfg
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SolverKind {
    Exact,
    Greedy,
    Brute,
}

/// The structured output document shared by every query subcommand.
#[derive(Debug, Serialize)]
struct Document {
    n: usize,
    t: usize,
    k: Option<usize>,
    status: Status,
    dimension: Option<usize>,
    basis: Option<Vec<usize>>,
    stats: SolveStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    deficient_pair: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    profile: Option<Vec<ProfileEntry>>,
}

#[derive(Debug, Serialize)]
struct ProfileEntry {
    t: usize,
    dimensional: usize,
    values: Vec<Option<usize>>,
}

impl Document {
    fn from_result(n: usize, r: &DimensionResult) -> Self {
        Self {
            n,
            t: r.t,
            k: Some(r.k),
            status: r.status,
            dimension: r.value,
            basis: r.basis.as_ref().map(|b| b.iter().collect()),
            stats: r.stats.clone(),
            deficient_pair: r.deficient_pair,
            witness: None,
            profile: None,
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Self {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Gen { kind, sizes } => {
            write_edge_list(&generate(kind, &sizes)?, &mut *out)?;
            Ok(EXIT_OK)
        }
        Command::Gadget { k } => {
            write_edge_list(gadget_h(k)?.graph(), &mut *out)?;
            Ok(EXIT_OK)
        }
        Command::Dim {
            query,
            k,
            solver,
            search,
        } => dim(&query, k, solver, &search, out),
        Command::Dimensional { query } => dimensional(&query, out),
        Command::Profile { query, search } => profile(&query, &search, out),
        Command::Verify { tag, json, search } => verify(tag.as_deref(), json, &search, out),
    }
}

fn load(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(parse_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))?)
}

fn truncation(dm: &DistanceMatrix, requested: Option<usize>) -> Result<Truncation, Failure> {
    let t = match (requested, dm.diameter()) {
        (Some(t), _) => t,
        (None, Diameter::Finite(d)) => d.max(1),
        (None, Diameter::Unreachable) => {
            return Err("the graph is disconnected; pass --t explicitly".into())
        }
    };
    Ok(Truncation::new(t)?)
}

fn dim(
    query: &Query,
    k: usize,
    solver: SolverKind,
    search: &Search,
    out: &mut dyn Write,
) -> Outcome {
    let g = load(&query.input)?;
    let dm = DistanceMatrix::new(&g);
    let t = truncation(&dm, query.t)?;
    let cfg = search.config();
    cfg.validate()?;
    let r = match solver {
        SolverKind::Exact => exact_dimension(&dm, t, k, &cfg)?,
        SolverKind::Greedy => greedy_generator(&dm, t, k)?,
        SolverKind::Brute => brute_force_dimension(&dm, t, k)?,
    };
    emit(&Document::from_result(g.order(), &r), query.json, out)?;
    Ok(match r.status {
        Status::Solved => EXIT_OK,
        Status::NoGenerator => EXIT_NO_GENERATOR,
        Status::UpperBoundOnly if solver == SolverKind::Greedy => EXIT_OK,
        Status::UpperBoundOnly => EXIT_BUDGET,
    })
}

fn dimensional(query: &Query, out: &mut dyn Write) -> Outcome {
    let g = load(&query.input)?;
    let dm = DistanceMatrix::new(&g);
    let t = truncation(&dm, query.t)?;
    let (value, pair) = min_distinguishing_number(&dm, t)?;
    let doc = Document {
        n: g.order(),
        t: t.get(),
        k: None,
        status: Status::Solved,
        dimension: Some(value),
        basis: None,
        stats: SolveStats::default(),
        deficient_pair: None,
        witness: Some(pair),
        profile: None,
    };
    emit(&doc, query.json, out)?;
    Ok(EXIT_OK)
}

fn profile(query: &Query, search: &Search, out: &mut dyn Write) -> Outcome {
    let g = load(&query.input)?;
    let dm = DistanceMatrix::new(&g);
    let t = truncation(&dm, query.t)?;
    let cfg = search.config();
    cfg.validate()?;
    let table = dimension_profile(&dm, t.get(), &cfg)?;
    let exhausted = table
        .rows
        .iter()
        .flat_map(|r| &r.cells)
        .any(|c| c.status == Status::UpperBoundOnly);
    let mut stats = SolveStats::default();
    for cell in table.rows.iter().flat_map(|r| &r.cells) {
        stats.nodes += cell.stats.nodes;
        stats.elapsed += cell.stats.elapsed;
    }
    let entries: Vec<ProfileEntry> = table
        .rows
        .iter()
        .map(|r| ProfileEntry {
            t: r.t,
            dimensional: r.dimensional,
            values: r.cells.iter().map(|c| c.value).collect(),
        })
        .collect();
    let doc = Document {
        n: g.order(),
        t: t.get(),
        k: None,
        status: if exhausted {
            Status::UpperBoundOnly
        } else {
            Status::Solved
        },
        dimension: None,
        basis: None,
        stats,
        deficient_pair: None,
        witness: None,
        profile: Some(entries),
    };
    emit(&doc, query.json, out)?;
    Ok(if exhausted { EXIT_BUDGET } else { EXIT_OK })
}

fn verify(tag: Option<&str>, json: bool, search: &Search, out: &mut dyn Write) -> Outcome {
    let opts = CheckOptions {
        solver: search.config(),
        ..CheckOptions::default()
    };
    opts.solver.validate()?;
    let report = run_suite(tag, &opts)?;
    if json {
        #[derive(Serialize)]
        struct VerifyDocument<'a> {
            summary: ktmd::oracle::ReportSummary,
            checks: &'a Report,
        }
        serde_json::to_writer_pretty(
            &mut *out,
            &VerifyDocument {
                summary: report.summary(),
                checks: &report,
            },
        )?;
        writeln!(out)?;
    } else {
        write!(out, "{report}")?;
        let s = report.summary();
        writeln!(
            out,
            "{} checks: {} passed, {} failed, {} skipped",
            s.total, s.passed, s.failed, s.skipped
        )?;
    }
    Ok(if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_NO_GENERATOR
    })
}

fn emit(doc: &Document, json: bool, out: &mut dyn Write) -> std::io::Result<()> {
    if json {
        serde_json::to_writer_pretty(&mut *out, doc)?;
        return writeln!(out);
    }
    let show = |v: Option<usize>| v.map_or_else(|| "none".to_string(), |v| v.to_string());
    writeln!(out, "n = {}", doc.n)?;
    writeln!(out, "t = {}", doc.t)?;
    if let Some(k) = doc.k {
        writeln!(out, "k = {k}")?;
    }
    writeln!(out, "status = {:?}", doc.status)?;
    if let Some((x, y)) = doc.witness {
        writeln!(out, "dimensional = {}", show(doc.dimension))?;
        writeln!(out, "witness = ({x}, {y})")?;
    } else if doc.profile.is_none() {
        writeln!(out, "dimension = {}", show(doc.dimension))?;
    }
    if let Some(b) = &doc.basis {
        let members: Vec<String> = b.iter().map(usize::to_string).collect();
        writeln!(out, "basis = {{{}}}", members.join(", "))?;
    }
    if let Some((x, y)) = doc.deficient_pair {
        writeln!(out, "deficient pair = ({x}, {y})")?;
    }
    if let Some(rows) = &doc.profile {
        for row in rows {
            let values: Vec<String> = row.values.iter().map(|v| show(*v)).collect();
            writeln!(
                out,
                "t = {}: dimensional = {}, values (k = 1, 2, ...) = {}",
                row.t,
                row.dimensional,
                values.join(" ")
            )?;
        }
    }
    writeln!(out, "nodes = {}", doc.stats.nodes)?;
    writeln!(
        out,
        "elapsed_ms = {:.3}",
        doc.stats.elapsed.as_secs_f64() * 1e3
    )
}
