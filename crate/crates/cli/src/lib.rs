//! The `sact` command-line workbench: fixture parsing, cached universes,
//! check suites and the verification battery.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub mod cache;
pub mod commands;
pub mod fixture;
pub mod output;
pub mod theorems;
pub mod workspace;

use output::{Format, Report};

/// Carrier size used when neither `--max-size` nor a fixture fixes one.
pub const DEFAULT_MAX_SIZE: usize = 3;

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments, unknown names, unreadable or invalid fixtures.
    Usage(String),
    /// A size bound stopped the command before any report.
    Bound(sact::Error),
    /// The input violates the command's precondition (for example `reflect`
    /// on an assignment that is not a Hoehnke radical).
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Bound(_) => 3,
            CliError::Failed(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Failed(m) => f.write_str(m),
            CliError::Bound(e) => write!(f, "{e}"),
        }
    }
}

impl From<sact::Error> for CliError {
    fn from(e: sact::Error) -> Self {
        match e {
            sact::Error::BoundExceeded { .. } => CliError::Bound(e),
            sact::Error::NotHoehnke(_) | sact::Error::NotKa(_) | sact::Error::NotATorsionTheory(_) => {
                CliError::Failed(e.to_string())
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Human,
    Records,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Hoehnke,
    Hereditary,
    Ka,
    Pair,
    Torsion,
    Reflection,
    Redundancy,
    Closure,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    Hoehnke,
    Hereditary,
    Ka,
}

#[derive(Debug, Parser)]
#[command(name = "sact", version, about = "Radical and torsion theory workbench for finite monoid acts")]
pub struct Cli {
    /// Directory holding `.sact` fixtures.
    #[arg(long, global = true, default_value = ".")]
    pub workspace: PathBuf,
    /// Largest carrier in the universe.
    #[arg(long, global = true)]
    pub max_size: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "human")]
    pub format: FormatArg,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse fixtures and validate every monoid, act and radical.
    Validate {
        /// Files to check (default: every fixture in the workspace).
        paths: Vec<PathBuf>,
        /// Also check torsion fixtures against this universe (`M` or `M/n`).
        #[arg(long)]
        universe: Option<String>,
    },
    /// Build or load the universe of a monoid and list its acts.
    Universe { monoid: String },
    /// Run one check suite on named targets (default: everything enumerable).
    Check {
        #[arg(value_enum)]
        suite: Suite,
        targets: Vec<String>,
        /// `M` or `M/n`; defaults to the universe of the first radical target.
        #[arg(long)]
        universe: Option<String>,
    },
    /// Run the full verification battery on one universe.
    Theorems {
        #[arg(long)]
        monoid: String,
    },
    /// Reflect a Hoehnke radical onto its Kurosh-Amitsur radical and save it.
    Reflect {
        radical: String,
        #[arg(long)]
        universe: Option<String>,
    },
    /// List the radicals of a universe passing a filter.
    EnumerateRadicals {
        #[arg(long, value_enum, default_value = "hoehnke")]
        filter: FilterArg,
        #[arg(long)]
        universe: String,
    },
    /// Test classes for closure under coproducts (default: every torsion class).
    CoproductCheck {
        classes: Vec<String>,
        #[arg(long)]
        universe: String,
    },
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    if let Some(n) = cli.jobs {
        sact::par::set_threads(n.max(1));
    }
    let format = match cli.format {
        FormatArg::Human => Format::Human,
        FormatArg::Records => Format::Records,
    };
    match commands::dispatch(&cli, err) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.report.render(format).as_bytes());
            outcome.exit_code()
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// A finished report and how it maps to an exit code.
pub struct Outcome {
    pub report: Report,
    /// Invalid fixtures exit with the usage code even though a report exists.
    pub invalid_input: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.invalid_input {
            return 2;
        }
        match self.report.verdict() {
            sact::Verdict::Pass => 0,
            sact::Verdict::Fail => 1,
            sact::Verdict::Partial => 4,
        }
    }
}
