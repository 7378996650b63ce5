//! Command-line front end: solve, oracle, reduce, generate, bench, and
//! validate subcommands over the temporal-graph file formats.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid input, 3 infeasible
//! request or resource limit.

pub mod bench;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use timed_matching::generator::{self, GenSpec, UnderlyingFamily, WeightGrid};
use timed_matching::solver::{self, SolveError, SolveOptions};
use timed_matching::treedec::{validate_decomposition, TreeDecomposition};
use timed_matching::{
    build_overlap_graph, reduce_independent_set, DecompositionStrategy, GenError, StaticGraphF64,
    TemporalGraphF64,
};
use timed_matching::mwis::MwisError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FORMAT: i32 = 2;
pub const EXIT_LIMITS: i32 = 3;

#[derive(Debug)]
pub struct CliError {
    pub exit_code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError { exit_code: EXIT_USAGE, message: message.into() }
    }

    fn format(message: impl Into<String>) -> Self {
        CliError { exit_code: EXIT_FORMAT, message: message.into() }
    }

    fn limits(message: impl Into<String>) -> Self {
        CliError { exit_code: EXIT_LIMITS, message: message.into() }
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::BudgetExhausted
            | SolveError::TooManyEdges { .. }
            | SolveError::Mwis(MwisError::TooLarge { .. }) => CliError::limits(e.to_string()),
            other => CliError::format(other.to_string()),
        }
    }
}

impl From<GenError> for CliError {
    fn from(e: GenError) -> Self {
        match e {
            GenError::InvalidSpec(_) => CliError::usage(e.to_string()),
            GenError::Infeasible(_) => CliError::limits(e.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "timed-matching",
    version,
    about = "Maximum weighted 0-1 timed matching on temporal graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve an instance with the tree-decomposition pipeline.
    Solve(SolveArgs),
    /// Exhaustive matching oracle for small instances.
    Oracle(OracleArgs),
    /// Reduce an Independent Set instance to a 0-1 timed matching instance.
    Reduce(ReduceArgs),
    /// Generate a seeded random temporal graph.
    Generate(GenerateArgs),
    /// Run a benchmark grid and emit CSV records.
    Bench(BenchArgs),
    /// Validate input files and decompositions.
    Validate(ValidateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    MinFill,
    MinDegree,
    Exact,
}

impl From<StrategyArg> for DecompositionStrategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::MinFill => DecompositionStrategy::MinFill,
            StrategyArg::MinDegree => DecompositionStrategy::MinDegree,
            StrategyArg::Exact => DecompositionStrategy::Exact,
        }
    }
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    /// Temporal graph file.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "min-fill")]
    pub strategy: StrategyArg,
    /// Decompose the underlying graph and lift instead of decomposing the
    /// overlap graph directly.
    #[arg(long)]
    pub lift: bool,
    /// Force all edge weights to 1 (maximum cardinality matching).
    #[arg(long)]
    pub unit_weights: bool,
    /// Node-expansion budget for the exact strategy.
    #[arg(long, default_value_t = 10_000_000)]
    pub exact_budget: u64,
    /// Write the matching here instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Emit the full solve report as JSON instead of the matching text.
    #[arg(long)]
    pub json: bool,
    /// Dump the edge-overlap graph to this path before solving.
    #[arg(long)]
    pub dump_overlap: Option<PathBuf>,
    /// Dump the decomposition used by the solver in PACE-style format.
    #[arg(long)]
    pub dump_decomposition: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    pub input: PathBuf,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct ReduceArgs {
    /// Static graph in edge-list format.
    pub input: PathBuf,
    /// Independent-set size parameter, forwarded as k'.
    pub k: usize,
    /// Write the temporal graph here instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Write the label sidecar here (default: `<output>.labels`).
    #[arg(long)]
    pub labels: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub vertices: usize,
    #[arg(long)]
    pub lifetime: u32,
    #[arg(long, default_value_t = 3)]
    pub max_degree: usize,
    /// tree | star | bounded-degree-random | partial-k-tree:K
    #[arg(long, default_value = "bounded-degree-random")]
    pub family: String,
    #[arg(long, default_value_t = 0.3)]
    pub density: f64,
    #[arg(long, default_value_t = 4)]
    pub max_intervals: usize,
    /// unit | quarter:MAX_QUARTERS
    #[arg(long, default_value = "quarter:16")]
    pub weights: String,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Grid file: one instance spec per line as `key=value` pairs.
    pub grid: PathBuf,
    #[arg(long, default_value_t = 1)]
    pub repetitions: usize,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ValidateTarget {
    Overlap,
    Underlying,
}

#[derive(Args, Debug)]
pub struct ValidateArgs {
    /// Temporal graph file.
    pub input: PathBuf,
    /// PACE-style decomposition to validate against the chosen target graph.
    #[arg(long)]
    pub decomposition: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "overlap")]
    pub target: ValidateTarget,
}

/// Parses argv and runs; returns the process exit code.
pub fn run_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{}", e);
                    return EXIT_OK;
                }
                _ => {}
            }
            eprint!("{}", e);
            return EXIT_USAGE;
        }
    };
    match run(cli.command) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.exit_code
        }
    }
}

pub fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Solve(args) => cmd_solve(&args),
        Command::Oracle(args) => cmd_oracle(&args),
        Command::Reduce(args) => cmd_reduce(&args),
        Command::Generate(args) => cmd_generate(&args),
        Command::Bench(args) => bench::cmd_bench(&args),
        Command::Validate(args) => cmd_validate(&args),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::format(format!("cannot read {}: {}", path.display(), e)))
}

fn write_output(path: Option<&PathBuf>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, content)
            .map_err(|e| CliError::format(format!("cannot write {}: {}", p.display(), e))),
        None => {
            print!("{}", content);
            std::io::stdout()
                .flush()
                .map_err(|e| CliError::format(e.to_string()))
        }
    }
}

fn parse_temporal(path: &Path) -> Result<TemporalGraphF64, CliError> {
    let text = read_file(path)?;
    TemporalGraphF64::parse(&text)
        .map_err(|e| CliError::format(format!("{}: {}", path.display(), e)))
}

pub fn cmd_solve(args: &SolveArgs) -> Result<(), CliError> {
    let mut g = parse_temporal(&args.input)?;
    if args.unit_weights {
        g = g.with_unit_weights();
    }
    let opts = SolveOptions {
        strategy: args.strategy.into(),
        lift: args.lift,
        exact_budget: args.exact_budget,
    };
    if args.dump_overlap.is_some() || args.dump_decomposition.is_some() {
        let og = build_overlap_graph(&g);
        if let Some(path) = &args.dump_overlap {
            fs::write(path, og.to_text())
                .map_err(|e| CliError::format(format!("cannot write {}: {}", path.display(), e)))?;
        }
        if let Some(path) = &args.dump_decomposition {
            let (td, _) = solver::choose_decomposition(&g, &og, &opts)?;
            fs::write(path, td.to_pace(og.n_vertices()))
                .map_err(|e| CliError::format(format!("cannot write {}: {}", path.display(), e)))?;
        }
    }
    let report = solver::solve(&g, &opts)?;
    let content = if args.json {
        let mut s = serde_json::to_string_pretty(&report)
            .map_err(|e| CliError::format(e.to_string()))?;
        s.push('\n');
        s
    } else {
        report.matching.to_text(&g)
    };
    write_output(args.output.as_ref(), &content)
}

pub fn cmd_oracle(args: &OracleArgs) -> Result<(), CliError> {
    let g = parse_temporal(&args.input)?;
    let matching = solver::matching_brute_force(&g)?;
    let content = if args.json {
        let mut s = serde_json::to_string_pretty(&matching)
            .map_err(|e| CliError::format(e.to_string()))?;
        s.push('\n');
        s
    } else {
        matching.to_text(&g)
    };
    write_output(args.output.as_ref(), &content)
}

pub fn cmd_reduce(args: &ReduceArgs) -> Result<(), CliError> {
    let text = read_file(&args.input)?;
    let g = StaticGraphF64::parse_edge_list(&text)
        .map_err(|e| CliError::format(format!("{}: {}", args.input.display(), e)))?;
    let reduced = reduce_independent_set(&g, args.k);

    write_output(args.output.as_ref(), &reduced.temporal.to_text())?;

    let labels_path = args.labels.clone().or_else(|| {
        args.output.as_ref().map(|o| {
            let mut p = o.clone().into_os_string();
            p.push(".labels");
            PathBuf::from(p)
        })
    });
    match labels_path {
        Some(p) => fs::write(&p, reduced.sidecar_text())
            .map_err(|e| CliError::format(format!("cannot write {}: {}", p.display(), e)))?,
        None => eprintln!("note: no --labels or --output path; label sidecar not written"),
    }
    Ok(())
}

pub fn parse_family(s: &str) -> Result<UnderlyingFamily, CliError> {
    match s {
        "tree" => Ok(UnderlyingFamily::Tree),
        "star" => Ok(UnderlyingFamily::Star),
        "bounded-degree-random" => Ok(UnderlyingFamily::BoundedDegreeRandom),
        other => {
            if let Some(k) = other.strip_prefix("partial-k-tree:") {
                let k: usize = k
                    .parse()
                    .map_err(|_| CliError::usage(format!("invalid k in family `{}`", other)))?;
                Ok(UnderlyingFamily::PartialKTree { k })
            } else {
                Err(CliError::usage(format!(
                    "unknown family `{}` (expected tree, star, bounded-degree-random, partial-k-tree:K)",
                    other
                )))
            }
        }
    }
}

pub fn parse_weight_grid(s: &str) -> Result<WeightGrid, CliError> {
    match s {
        "unit" => Ok(WeightGrid::Unit),
        other => {
            if let Some(q) = other.strip_prefix("quarter:") {
                let max_quarters: u32 = q
                    .parse()
                    .map_err(|_| CliError::usage(format!("invalid bound in weights `{}`", other)))?;
                Ok(WeightGrid::QuarterGrid { max_quarters })
            } else {
                Err(CliError::usage(format!(
                    "unknown weight grid `{}` (expected unit or quarter:MAX)",
                    other
                )))
            }
        }
    }
}

pub fn cmd_generate(args: &GenerateArgs) -> Result<(), CliError> {
    let spec = GenSpec {
        seed: args.seed,
        n_vertices: args.vertices,
        lifetime: args.lifetime,
        max_degree: args.max_degree,
        family: parse_family(&args.family)?,
        interval_density: args.density,
        max_intervals_per_edge: args.max_intervals,
        weight_grid: parse_weight_grid(&args.weights)?,
    };
    let g: TemporalGraphF64 = generator::generate(&spec)?;
    write_output(args.output.as_ref(), &g.to_text())
}

pub fn cmd_validate(args: &ValidateArgs) -> Result<(), CliError> {
    let g = parse_temporal(&args.input)?;
    println!(
        "graph ok: {} vertices, {} edges, lifetime {}",
        g.n_vertices(),
        g.n_edges(),
        g.lifetime()
    );

    if let Some(td_path) = &args.decomposition {
        let text = read_file(td_path)?;
        let (td, declared_n) = TreeDecomposition::parse_pace(&text)
            .map_err(|e| CliError::format(format!("{}: {}", td_path.display(), e)))?;
        let (target_n, violations) = match args.target {
            ValidateTarget::Overlap => {
                let og = build_overlap_graph(&g);
                (og.n_vertices(), validate_decomposition(&td, &og.graph))
            }
            ValidateTarget::Underlying => {
                let underlying = g.underlying_graph();
                (underlying.n_vertices(), validate_decomposition(&td, &underlying))
            }
        };
        if declared_n != target_n {
            return Err(CliError::format(format!(
                "decomposition declares {} vertices but the target graph has {}",
                declared_n, target_n
            )));
        }
        if violations.is_empty() {
            println!("decomposition ok: {} bags, width {}", td.n_nodes(), td.width());
        } else {
            for v in &violations {
                eprintln!("violation: {}", v);
            }
            return Err(CliError::format(format!(
                "decomposition invalid: {} violations",
                violations.len()
            )));
        }
    }
    Ok(())
}
