//! The `commlab` experiment driver.
//!
//! Every subcommand is reachable through [`run`], which never exits the
//! process and returns the exit code: 0 when every check passes, 1 when a
//! mathematical check fails, 2 for usage or configuration errors.

mod commands;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use report::{persist, write_atomic, Envelope, Table, Timing};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable overriding the fat commutator evaluation budget.
pub const BUDGET_ENV: &str = "COMMLAB_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "commlab", version, about = "Seeded experiments in commutator calculus")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Brute-force subgroup identities in random finite permutation groups.
    VerifyFinite(VerifyFiniteArgs),
    /// Sample symmetric commutators of the `t_i` and check they are Brunnian.
    Brunnian(BrunnianArgs),
    /// Certificates for the punctured sphere quotients.
    Homotopy(HomotopyArgs),
    /// Print pure braid generators and check their identities.
    BraidTools(BraidToolsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct Output {
    /// Directory receiving `<subcommand>-<seed>-<timestamp>.json` and a `<subcommand>-latest` pointer.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyFiniteArgs {
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
    /// Number of normal subgroups; alternates 2, 3, 2, … by trial when absent.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest bracket weight in the fat enumeration; defaults to `2n`.
    #[arg(long)]
    pub weight_cap: Option<usize>,
    #[arg(long, default_value_t = 2000)]
    pub max_order: usize,
    #[arg(long, default_value_t = 10)]
    pub max_degree: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Args)]
pub struct BrunnianArgs {
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 4)]
    pub conj_depth: usize,
    /// Write the sampled braids as a corpus file.
    #[arg(long)]
    pub export: Option<PathBuf>,
    /// Check a single braid word instead of sampling.
    #[arg(long)]
    pub check: Option<String>,
    /// Strand count for `--check`; inferred from the word when absent.
    #[arg(long, requires = "check")]
    pub strands: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Args)]
pub struct HomotopyArgs {
    /// Which `π_k(S²)` quotient to certify.
    #[arg(long)]
    pub pi: u32,
    /// Fuzzed elements (k = 2, default 1000) or sampled generators (k = 3, default 500).
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 4)]
    pub conj_depth: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Args)]
pub struct BraidToolsArgs {
    /// Check the generator identities for up to `--max-n` strands.
    #[arg(long)]
    pub identities: bool,
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,
    /// `A i j n`, `t i n` or `A0 j n`.
    #[arg(long, num_args = 1.., value_name = "GENERATOR")]
    pub print: Option<Vec<String>>,
    #[command(flatten)]
    pub output: Output,
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_PASS
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    commands::dispatch(&cli.command, out, err)
}
