//! `dom`: compute domination invariants, build graph products and sweep
//! theorem checks from the command line.
//!
//! Exit codes: 0 success, 1 usage, 2 unreadable or malformed input,
//! 3 limits exceeded, 4 counterexamples found.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use movdom::graph::GraphError;
use movdom::harness::TheoremReport;
use movdom::io::{decode_edgelist, decode_graph6, emit_certificate, emit_report, write_edgelist};
use movdom::{
    solve, sweep, write_graph6, CheckConfig, FormatError, Graph, HarnessError, HypothesisMode,
    InstanceFamily, InvariantKind, SolveError, SweepOptions, TheoremId,
};
use thiserror::Error;

#[derive(Parser)]
#[command(
    name = "dom",
    version,
    about = "Movable domination invariants and theorem sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one invariant of a graph.
    Invariant(InvariantArgs),
    /// Build a join or corona of two graphs and print it.
    Build(BuildArgs),
    /// Sweep a theorem over a family of instances.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Args)]
struct InvariantArgs {
    /// gamma, gamma_t, gamma_m2 or gamma_mt2
    #[arg(long)]
    kind: InvariantKind,
    /// Graph given inline as graph6.
    #[arg(long, group = "source")]
    graph6: Option<String>,
    /// Path to an edge-list file.
    #[arg(long, group = "source")]
    edgelist: Option<PathBuf>,
    /// Path to a file in `--format`; standard input when no source is given.
    #[arg(long, group = "source")]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
    /// Print the certificate after the value.
    #[arg(long)]
    certificate: bool,
    /// Let both replacement vertices of a pair coincide.
    #[arg(long)]
    allow_equal_replacements: bool,
    /// Print the certificate as the only output, in JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Product {
    Join,
    Corona,
}

#[derive(Args)]
struct BuildArgs {
    #[arg(value_enum)]
    op: Product,
    /// First operand: graph6 text, or a file path with `--format edgelist`.
    left: String,
    /// Second operand, same form as the first.
    right: String,
    /// Operand and output format.
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
    /// For coronas, also print the vertex layout as `#` comment lines.
    #[arg(long)]
    layout: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Theorem name or alias (monotone/thm3.1, lower-bound/remark3.2,
    /// join/thm3.3, join-k1/thm3.4, corona/thm3.8, projection/lemma3.6).
    theorem: TheoremId,
    /// Smallest operand order; defaults to the theorem's own minimum.
    #[arg(long)]
    min_order: Option<usize>,
    /// Largest operand order for exhaustive or random families.
    #[arg(long)]
    max_order: Option<usize>,
    /// Order of the first operand (pairs of fixed orders).
    #[arg(long, requires = "ph", conflicts_with_all = ["min_order", "max_order", "random"])]
    pg: Option<usize>,
    /// Order of the second operand.
    #[arg(long, requires = "pg")]
    ph: Option<usize>,
    #[arg(long, default_value = "both")]
    mode: HypothesisMode,
    #[arg(long)]
    allow_equal_replacements: bool,
    /// Also check instances with disconnected operands.
    #[arg(long)]
    allow_disconnected: bool,
    /// Sample this many random connected operands instead of enumerating.
    #[arg(long, requires = "max_order")]
    random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Edge probability for random operands.
    #[arg(long, default_value_t = 0.5)]
    prob: f64,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
    /// Print the full report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: io::Error },
    #[error("{0}")]
    Parse(FormatError),
    #[error("{0}")]
    Limit(String),
    #[error("{0}")]
    Other(String),
    #[error("{0} counterexample(s) found")]
    Counterexamples(u64),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Other(_) => 1,
            CliError::Read { .. } | CliError::Parse(_) => 2,
            CliError::Limit(_) => 3,
            CliError::Counterexamples(_) => 4,
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::LongFormUnsupported | FormatError::OrderTooLarge(_) => {
                CliError::Limit(e.to_string())
            }
            _ => CliError::Parse(e),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::OrderTooLarge(_) | GraphError::EnumerationTooLarge { .. } => {
                CliError::Limit(e.to_string())
            }
            GraphError::VertexOutOfRange { .. } | GraphError::Loop(_) => {
                CliError::Other(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::OrderTooLarge { .. } => CliError::Limit(e.to_string()),
            SolveError::EmptyGraph => CliError::Usage(e.to_string()),
        }
    }
}

impl From<HarnessError> for CliError {
    fn from(e: HarnessError) -> Self {
        match e {
            HarnessError::Graph(g) => g.into(),
            HarnessError::Solve(s) => s.into(),
            HarnessError::Format(f) => f.into(),
            HarnessError::FamilyTooLarge { .. } => CliError::Limit(e.to_string()),
            HarnessError::Precondition(_) | HarnessError::Pool(_) => CliError::Other(e.to_string()),
            HarnessError::Arity { .. } => CliError::Usage(e.to_string()),
        }
    }
}

fn read_path(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })
}

fn decode(text: &str, format: Format) -> Result<Graph, CliError> {
    let (g, warnings) = match format {
        Format::Graph6 => decode_graph6(text)?,
        Format::Edgelist => decode_edgelist(text)?,
    };
    for w in warnings {
        log::warn!("{w}");
    }
    Ok(g)
}

fn invariant(args: InvariantArgs) -> Result<(), CliError> {
    let g = if let Some(text) = &args.graph6 {
        decode(text, Format::Graph6)?
    } else if let Some(path) = &args.edgelist {
        decode(&read_path(path)?, Format::Edgelist)?
    } else if let Some(path) = &args.input {
        decode(&read_path(path)?, args.format)?
    } else {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|source| CliError::Read {
                path: "standard input".into(),
                source,
            })?;
        decode(&text, args.format)?
    };
    let result = solve(&g, args.kind, args.allow_equal_replacements)?;
    log::info!(
        "{} subsets examined in {:?}",
        result.stats.subsets_examined,
        result.stats.elapsed
    );
    if args.json {
        println!("{}", emit_certificate(&result.certificate));
        return Ok(());
    }
    match result.value {
        Some(v) => println!("{v}"),
        None => println!("nonexistent"),
    }
    if args.certificate {
        println!("{}", emit_certificate(&result.certificate));
    }
    Ok(())
}

fn build(args: BuildArgs) -> Result<(), CliError> {
    let operand = |s: &str| match args.format {
        Format::Graph6 => decode(s, Format::Graph6),
        Format::Edgelist => decode(&read_path(Path::new(s))?, Format::Edgelist),
    };
    let (g, h) = (operand(&args.left)?, operand(&args.right)?);
    let (product, layout) = match args.op {
        Product::Join => (g.join(&h)?, None),
        Product::Corona => {
            let (p, l) = g.corona(&h)?;
            (p, Some(l))
        }
    };
    if let (true, Some(l)) = (args.layout, layout) {
        println!(
            "# corona layout: {} centers, copies of order {}",
            l.g_order, l.h_order
        );
        for a in l.centers() {
            println!("# center {a}: copy {}", l.copy_set(a));
        }
    }
    match args.format {
        Format::Graph6 => println!("{}", write_graph6(&product)?),
        Format::Edgelist => print!("{}", write_edgelist(&product)),
    }
    Ok(())
}

fn family(args: &VerifyArgs) -> Result<InstanceFamily, CliError> {
    if let (Some(left), Some(right)) = (args.pg, args.ph) {
        return Ok(InstanceFamily::Orders { left, right });
    }
    let max_order = args.max_order.ok_or_else(|| {
        CliError::Usage("give --max-order, --pg and --ph, or --random with --max-order".into())
    })?;
    let min_order = args
        .min_order
        .unwrap_or_else(|| args.theorem.min_operand_order().min(max_order));
    if min_order > max_order {
        return Err(CliError::Usage(format!(
            "--min-order {min_order} exceeds --max-order {max_order}"
        )));
    }
    Ok(match args.random {
        Some(count) => InstanceFamily::Random {
            orders: (min_order..=max_order).collect(),
            count,
            edge_prob: args.prob,
            seed: args.seed,
        },
        None => InstanceFamily::Connected {
            min_order,
            max_order,
        },
    })
}

fn print_summary(r: &TheoremReport) {
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    println!("theorem: {} ({})", r.theorem, r.family);
    println!(
        "mode: {}, equal replacements: {}, connected only: {}",
        r.mode,
        yes_no(r.allow_equal_replacements),
        yes_no(r.require_connected)
    );
    println!(
        "instances: {} total, {} checked, {} skipped",
        r.instances_total, r.instances_checked, r.instances_skipped
    );
    println!("passed: {}", r.passed);
    println!("counterexamples: {}", r.counterexample_count);
    for c in r.counterexamples.iter().take(10) {
        println!("  {}: {}", c.operands.join(" "), c.detail);
    }
    if r.counterexamples.len() > 10 {
        println!(
            "  ... {} more in --json output",
            r.counterexamples.len() - 10
        );
    }
    if let Some(p) = &r.proof_check {
        println!(
            "side check ({}): {} hold, {} fail",
            p.description, p.holds, p.fails
        );
    }
    if !r.discrepancies.is_empty() {
        let broken = r.discrepancies.iter().filter(|d| !d.equality_holds).count();
        println!(
            "hypothesis discrepancies: {} (equality fails on {broken})",
            r.discrepancies.len()
        );
    }
    println!("elapsed: {:.2}s", r.elapsed);
}

fn verify(args: VerifyArgs) -> Result<(), CliError> {
    let family = family(&args)?;
    let options = SweepOptions {
        config: CheckConfig {
            allow_equal_replacements: args.allow_equal_replacements,
            mode: args.mode,
            require_connected: !args.allow_disconnected,
        },
        jobs: args.jobs,
    };
    let report = sweep(args.theorem, &family, &options)?;
    if args.json {
        println!("{}", emit_report(&report));
    } else {
        print_summary(&report);
    }
    match report.counterexample_count {
        0 => Ok(()),
        n => Err(CliError::Counterexamples(n)),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Invariant(a) => invariant(a),
        Command::Build(a) => build(a),
        Command::Verify(a) => verify(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("dom: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
