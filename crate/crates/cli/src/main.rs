//! `prmw`: weight tables, verification reports and witness inspection for
//! Reed-Muller and projective Reed-Muller codes.

mod output;
mod range;
mod table;
mod verify;
mod witness;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use prmw::codes::Family;
use prmw::weights::DEFAULT_BUDGET;

use range::Span;

/// Exit statuses.
pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_CONFIG: u8 = 2;

const MIN_BUDGET: u64 = 1 << 10;

#[derive(Parser, Debug)]
#[command(
    name = "prmw",
    version,
    about = "Exact weights of Reed-Muller and projective Reed-Muller codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form against brute-force weights over a grid of (n, d).
    #[command(long_about = TABLE_HELP)]
    Table(GridArgs),
    /// Run the weight and geometry checks over a grid and report each one.
    #[command(long_about = VERIFY_HELP)]
    Verify(GridArgs),
    /// Weight, support and geometry of a single homogeneous polynomial.
    Witness(WitnessArgs),
}

const TABLE_HELP: &str = "\
Closed-form against brute-force weights over a grid of (n, d).

CSV columns, in order:
  n, d, length, dimension, W1_formula, W2_formula, W2_candidates,
  W1_bruteforce, W2_bruteforce, match, note

W2_candidates is filled when no closed form for W2 is available (q > 2) and
lists the possible values separated by ';'. The brute-force columns and match
are empty when the enumeration exceeds the budget; note gives the reason.";

const VERIFY_HELP: &str = "\
Run the weight and geometry checks over a grid and report each one.

Exit status: 0 when every check passes, 1 when any check fails, 2 when an
instance exceeds the budget or the configuration is invalid.

JSON output is an array with one weight report per instance, each extended
with a \"checks\" array of {name, status, detail, elapsed_ms}.";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Rm,
    Prm,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Rm => Family::Rm,
            FamilyArg::Prm => Family::Prm,
        }
    }
}

#[derive(Args, Debug)]
struct Common {
    /// Field size, a prime in {2, 3, 5, 7, 11, 13}.
    #[arg(long, default_value_t = 2)]
    q: u32,
    /// Worker threads for enumeration (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GridArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value_t = FamilyArg::Prm)]
    family: FamilyArg,
    /// Number of variables: `a` or an inclusive range `a..b`.
    #[arg(long)]
    n: Span,
    /// Degree: `a` or `a..b`; either end may be `n`, e.g. `2..n`.
    #[arg(long)]
    d: Span,
    /// Maximum number of codewords to enumerate per instance.
    #[arg(long, env = "PRMW_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args, Debug)]
struct WitnessArgs {
    #[command(flatten)]
    common: Common,
    /// Projective dimension; the polynomial uses X0..Xn.
    #[arg(long)]
    n: usize,
    /// Homogeneous polynomial, e.g. `X0*X3+X1*X2` or `2*X0^2+X1*X2`.
    #[arg(long)]
    poly: String,
}

/// A run failed before producing a report.
pub struct ConfigError(pub String);

impl<E: std::fmt::Display> From<E> for ConfigError {
    fn from(e: E) -> Self {
        ConfigError(e.to_string())
    }
}

fn run(command: Command) -> Result<u8, ConfigError> {
    match command {
        Command::Table(args) | Command::Verify(args) if args.budget < MIN_BUDGET => {
            Err(ConfigError(format!(
                "budget must be at least {MIN_BUDGET}, got {}",
                args.budget
            )))
        }
        Command::Table(args) => {
            let grid = range::grid(args.n, args.d)?;
            let rows = table::rows(args.family.into(), args.common.q, &grid, args.budget)?;
            let text = table::render(&rows, args.common.format)?;
            output::emit(args.common.out.as_deref(), &text)?;
            Ok(if rows.iter().all(|r| r.matched != Some(false)) {
                EXIT_PASS
            } else {
                EXIT_FAIL
            })
        }
        Command::Verify(args) => {
            let grid = range::grid(args.n, args.d)?;
            let entries = verify::run(args.family.into(), args.common.q, &grid, args.budget)?;
            let text = verify::render(&entries, args.common.format)?;
            output::emit(args.common.out.as_deref(), &text)?;
            Ok(verify::exit_status(&entries))
        }
        Command::Witness(args) => {
            let report = witness::run(args.common.q, args.n, &args.poly)?;
            let text = witness::render(&report, args.common.format)?;
            output::emit(args.common.out.as_deref(), &text)?;
            Ok(EXIT_PASS)
        }
    }
}

fn threads(command: &Command) -> Option<usize> {
    match command {
        Command::Table(a) | Command::Verify(a) => a.common.threads,
        Command::Witness(a) => a.common.threads,
    }
}

#[cfg(feature = "parallel")]
fn with_threads<T: Send>(n: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, ConfigError> {
    match n {
        None => Ok(f()),
        Some(0) => Err(ConfigError("--threads must be positive".into())),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build()?;
            Ok(pool.install(f))
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn with_threads<T: Send>(n: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, ConfigError> {
    if n.is_some_and(|n| n > 1) {
        eprintln!("warning: built without the `parallel` feature, --threads ignored");
    }
    Ok(f())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = with_threads(threads(&cli.command), || run(cli.command)).and_then(|r| r);
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(ConfigError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_CONFIG)
        }
    }
}
