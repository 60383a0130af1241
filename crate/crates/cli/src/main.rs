//! chevgc — exact calculator for the ascending aerial graph complex.
//!
//! Subcommands enumerate symmetrized basis slices, apply the vertex-splitting
//! coboundary, build wheel cocycles, print Betti tables, run the order-driven
//! reduction loop, and execute seeded verification suites cross-checked against
//! the symbolic polyvector-field oracle. All arithmetic is exact rational and
//! all output is byte-deterministic for fixed flags and seed.
//!
//! Exit codes: 0 success, 1 verification failure (first counterexample printed
//! as JSON), 2 usage or input error.

mod suites;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cohomology::{betti_table, enumerate_basis, Mode};
use differential::{coboundary, reduce_to_simple, wheel, wheel_product, ReduceError};
use graph_core::{symmetrize, symmetrize_sum, AerialGraph, GraphSum, TypePolicy};
use serde_json::json;

use suites::{SuiteError, SuiteResult};

/// Exact calculator for the ascending aerial graph complex
#[derive(Parser)]
#[command(name = "chevgc", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the symmetrized basis slice at a fixed vertex count
    Enumerate(EnumerateArgs),
    /// Apply the vertex-splitting coboundary to a graph sum
    Differential(DifferentialArgs),
    /// Gradedly symmetrize a graph or a graph sum over vertex relabelings
    Symmetrize(SymmetrizeArgs),
    /// Emit the symmetrized wheel on k vertices
    Wheel(WheelArgs),
    /// Emit the symmetrized disjoint product of wheels
    WheelProduct(WheelProductArgs),
    /// Run the order-driven reduction loop on a cocycle
    Reduce(ReduceArgs),
    /// Print Betti tables in both isolated-vertex modes
    Cohomology(CohomologyArgs),
    /// Run one named verification suite
    Verify(VerifyArgs),
    /// Cross-check the graph calculus against the tensor oracle
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyArg {
    /// Orders strictly ascend along arrows: vertex types (1,1) and (0,0) only
    Ascending,
    /// The mirrored restriction
    Descending,
    /// No type restriction beyond the out-degree cap
    Unrestricted,
}

#[derive(Args, Clone, Copy)]
struct PolicyFlags {
    /// Vertex-type policy selecting the admissible graphs
    #[arg(long, value_enum, default_value_t = PolicyArg::Ascending)]
    policy: PolicyArg,
    /// Out-degree cap used by the unrestricted policy
    #[arg(long, default_value_t = 2)]
    max_out: usize,
}

impl PolicyFlags {
    fn resolve(self) -> TypePolicy {
        match self.policy {
            PolicyArg::Ascending => TypePolicy::Ascending,
            PolicyArg::Descending => TypePolicy::Descending,
            PolicyArg::Unrestricted => TypePolicy::Unrestricted { max_out: self.max_out },
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum IsolatedArg {
    /// Keep graphs with isolated vertices in the slice
    Include,
    /// Drop graphs containing isolated vertices
    Exclude,
}

impl IsolatedArg {
    fn resolve(self) -> Mode {
        match self {
            IsolatedArg::Include => Mode::IncludeIsolated,
            IsolatedArg::Exclude => Mode::ExcludeIsolated,
        }
    }
}

#[derive(Args)]
struct EnumerateArgs {
    /// Vertex count of the slice (at least 1)
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    policy: PolicyFlags,
    /// Isolated-vertex mode
    #[arg(long, value_enum, default_value_t = IsolatedArg::Include)]
    isolated: IsolatedArg,
    /// Write the JSON array here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DifferentialArgs {
    /// Input graph sum (JSON)
    #[arg(long = "in")]
    input: PathBuf,
    #[command(flatten)]
    policy: PolicyFlags,
    /// Write the coboundary here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SymmetrizeArgs {
    /// Input graph or graph sum (JSON)
    #[arg(long = "in")]
    input: PathBuf,
    /// Write the symmetrization here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct WheelArgs {
    /// Wheel length k (at least 1; even lengths symmetrize to zero)
    #[arg(long)]
    n: usize,
    /// Write the wheel here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct WheelProductArgs {
    /// Comma-separated wheel lengths, e.g. 3,5
    #[arg(long, value_delimiter = ',', required = true)]
    ks: Vec<usize>,
    /// Write the product here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ReduceArgs {
    /// Input graph sum (JSON); must be a cocycle for the chosen policy
    #[arg(long = "in")]
    input: PathBuf,
    #[command(flatten)]
    policy: PolicyFlags,
    /// Write the reduction record here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CohomologyArgs {
    /// Largest vertex count of the table (1..=6)
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    policy: PolicyFlags,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    /// ∂∘∂ = 0 on every basis representative
    DSquared,
    /// Cycle contraction, all-isolated vanishing, and the reduction identity
    Homotopy,
    /// Graded antisymmetry, graded Jacobi, and ascending closure
    Schouten,
    /// Graph coboundary versus the Chevalley differential on the oracle
    Correspondence,
    /// Vanishing threshold of the antisymmetrized matrix trace
    AmitsurLevitzki,
    /// Even wheels vanish; odd wheels are cocycles
    Wheels,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run
    #[arg(value_enum)]
    suite: Suite,
    /// Largest vertex count for graph-side suites
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[command(flatten)]
    policy: PolicyFlags,
    /// Coordinate dimension for tensor-side suites (default: drawn per trial)
    #[arg(long)]
    dim: Option<usize>,
    /// Number of matrices in the trace suite (default: 2*dim + 1)
    #[arg(long)]
    length: Option<usize>,
    /// Randomized trials per law
    #[arg(long, default_value_t = 25)]
    trials: usize,
    /// Master seed for all randomized draws
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Args)]
struct OracleArgs {
    /// Coordinate dimension for the correspondence checks (default: 2 and 3)
    #[arg(long)]
    dim: Option<usize>,
    /// Randomized trials per check
    #[arg(long, default_value_t = 25)]
    trials: usize,
    /// Master seed for all randomized draws
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

/// A command's failure path, keyed to the process exit code.
enum CliError {
    /// Unusable request or input: exit 2.
    Usage(String),
    /// A verified property failed; the counterexample record: exit 1.
    Failed(serde_json::Value),
}

fn usage(msg: impl ToString) -> CliError {
    CliError::Usage(msg.to_string())
}

impl From<SuiteError> for CliError {
    fn from(e: SuiteError) -> Self {
        match e {
            SuiteError::Input(msg) => CliError::Usage(msg),
            SuiteError::Counterexample(v) => CliError::Failed(v),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(record)) => {
            println!("{record}");
            eprintln!("FAIL: a verified property has a counterexample (record on stdout)");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Differential(args) => cmd_differential(args),
        Command::Symmetrize(args) => cmd_symmetrize(args),
        Command::Wheel(args) => cmd_wheel(args),
        Command::WheelProduct(args) => cmd_wheel_product(args),
        Command::Reduce(args) => cmd_reduce(args),
        Command::Cohomology(args) => cmd_cohomology(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Oracle(args) => cmd_oracle(args),
    }
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn parse_sum(text: &str) -> Result<GraphSum, CliError> {
    GraphSum::from_json(text, 1).map_err(usage)
}

/// Writes `text` (newline-terminated) to the file, or to stdout when no path
/// was given.
fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n"))
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<(), CliError> {
    if args.n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let slice = enumerate_basis(args.n, args.policy.resolve(), args.isolated.resolve())
        .map_err(usage)?;
    let body = format!(
        "[{}]",
        slice.reps().iter().map(GraphSum::to_json).collect::<Vec<_>>().join(",")
    );
    // Keep the machine-readable array alone on stdout when no file is given.
    match &args.out {
        Some(_) => {
            emit(args.out.as_ref(), &body)?;
            println!("{} representatives", slice.dim());
        }
        None => {
            println!("{body}");
            eprintln!("{} representatives", slice.dim());
        }
    }
    Ok(())
}

fn cmd_differential(args: DifferentialArgs) -> Result<(), CliError> {
    let sum = parse_sum(&read_input(&args.input)?)?;
    let image = coboundary(&sum, args.policy.resolve());
    emit(args.out.as_ref(), &image.to_json())
}

fn cmd_symmetrize(args: SymmetrizeArgs) -> Result<(), CliError> {
    let text = read_input(&args.input)?;
    let result = match AerialGraph::from_json(&text) {
        Ok(g) => symmetrize(&g),
        Err(_) => symmetrize_sum(&parse_sum(&text)?),
    };
    emit(args.out.as_ref(), &result.to_json())
}

fn cmd_wheel(args: WheelArgs) -> Result<(), CliError> {
    let w = wheel(args.n).map_err(usage)?;
    emit(args.out.as_ref(), &w.to_json())
}

fn cmd_wheel_product(args: WheelProductArgs) -> Result<(), CliError> {
    let w = wheel_product(&args.ks).map_err(usage)?;
    emit(args.out.as_ref(), &w.to_json())
}

fn cmd_reduce(args: ReduceArgs) -> Result<(), CliError> {
    let sum = parse_sum(&read_input(&args.input)?)?;
    match reduce_to_simple(&sum, args.policy.resolve()) {
        Ok(r) => {
            let record = format!(
                r#"{{"reduced":{},"witness":{},"steps":{}}}"#,
                r.reduced.to_json(),
                r.witness.to_json(),
                r.steps
            );
            emit(args.out.as_ref(), &record)
        }
        Err(e @ (ReduceError::NotACocycle(_) | ReduceError::OrderNotDecreasing { .. })) => {
            Err(CliError::Failed(json!({
                "command": "reduce",
                "error": e.to_string(),
            })))
        }
        Err(e) => Err(usage(e)),
    }
}

fn cmd_cohomology(args: CohomologyArgs) -> Result<(), CliError> {
    if args.n == 0 || args.n > 6 {
        return Err(usage("--n must be between 1 and 6"));
    }
    let policy = args.policy.resolve();
    let policy_label = match args.policy.policy {
        PolicyArg::Ascending => "ascending".to_string(),
        PolicyArg::Descending => "descending".to_string(),
        PolicyArg::Unrestricted => format!("unrestricted (max out-degree {})", args.policy.max_out),
    };
    for (label, mode) in
        [("excluded", Mode::ExcludeIsolated), ("included", Mode::IncludeIsolated)]
    {
        let rows = betti_table(args.n, policy, mode).map_err(usage)?;
        println!("policy {policy_label}, isolated vertices {label}");
        println!("{:>3} {:>6} {:>8} {:>9} {:>6}", "n", "dim", "rank_in", "rank_out", "betti");
        for row in rows {
            println!(
                "{:>3} {:>6} {:>8} {:>9} {:>6}",
                row.n, row.dim, row.rank_in, row.rank_out, row.betti
            );
        }
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let result: SuiteResult = match args.suite {
        Suite::DSquared => suites::d_squared(args.n, args.policy.resolve()),
        Suite::Homotopy => suites::homotopy_suite(args.n),
        Suite::Schouten => suites::schouten_suite(args.trials, args.seed, args.dim),
        Suite::Correspondence => suites::correspondence(args.trials, args.seed, args.dim),
        Suite::AmitsurLevitzki => {
            let dim = args.dim.unwrap_or(2);
            if dim == 0 {
                return Err(usage("--dim must be at least 1"));
            }
            let length = args.length.unwrap_or(2 * dim + 1);
            suites::amitsur_levitzki(dim, length, args.trials, args.seed)
        }
        Suite::Wheels => suites::wheels_suite(),
    };
    Ok(result?)
}

fn cmd_oracle(args: OracleArgs) -> Result<(), CliError> {
    Ok(suites::oracle(args.trials, args.seed, args.dim)?)
}
