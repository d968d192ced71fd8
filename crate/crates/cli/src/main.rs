//! `crlab`: command-line front end for the crlab checkers, searches, lifts and
//! experiments. Reports go to standard output as JSON; diagnostics go to
//! standard error.
//!
//! Exit codes: 0 holds, 1 fails, 2 inconclusive at a cap, 3 runtime error,
//! 64 usage error.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_RUNTIME: u8 = 3;
pub const EXIT_USAGE: u8 = 64;

#[derive(Debug, Parser)]
#[command(name = "crlab", version, about = "Largeness and richness checks on finite semigroups")]
pub struct Cli {
    /// key=value settings file (workers, order_cap, search_cap, pws_cap).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Worker threads; defaults to $CRLAB_WORKERS, then the CPU count.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Largest semigroup order accepted when building a spec.
    #[arg(long, global = true)]
    pub order_cap: Option<usize>,
    /// Largest family-times-witness search space a sweep may visit.
    #[arg(long, global = true)]
    pub search_cap: Option<u128>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check one property of one subset.
    Check(CheckArgs),
    /// Find the least (r) or (r, m) at which a subset is k-SCR / k-CR.
    Search(SearchArgs),
    /// Run an abundance experiment: lift derived-family witnesses into C or D.
    Lift(LiftArgs),
    /// Tabulate every property for every subset.
    Survey(SurveyArgs),
    /// Compare the optimized checkers with the naive ones on every subset.
    Oracle(OracleArgs),
    /// Look for 2-partitions of a set where neither cell keeps the property.
    Partition(PartitionArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct Target {
    /// Semigroup spec, e.g. zadd:4, lz1:2, prod(zadd:2,leftzero:2), file:table.txt
    #[arg(long)]
    pub semigroup: String,
    /// Comma-separated labels or mask:HEX.
    #[arg(long, default_value = "")]
    pub set: String,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub target: Target,
    /// syndetic, thick, pws, jset, kcr, kcr-comm, kcr-matrix, kscr or scr.
    #[arg(long)]
    pub property: String,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    #[arg(long, default_value_t = 1)]
    pub m: usize,
    #[arg(long, default_value = "right")]
    pub side: String,
    /// Check a single family (file: "k r" then k lines of labels) instead of all of them.
    #[arg(long)]
    pub family: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
pub enum Minimal {
    R,
    Rm,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub target: Target,
    #[arg(long, value_enum)]
    pub minimal: Minimal,
    /// With --minimal r: kscr (default) or kcr-comm.
    #[arg(long, default_value = "kscr")]
    pub property: String,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    #[arg(long, default_value_t = 2)]
    pub rcap: usize,
    #[arg(long)]
    pub mcap: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
pub enum LiftMode {
    Comm,
    Noncomm,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("constants").required(true).args(["b", "consts", "sweep", "sample_consts"]))]
pub struct LiftArgs {
    #[arg(value_enum)]
    pub mode: LiftMode,
    #[command(flatten)]
    pub target: Target,
    #[arg(long, default_value_t = 2)]
    pub l: usize,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    /// Commutative shift constant.
    #[arg(long)]
    pub b: Option<String>,
    /// Non-commutative constants a12,a13,a21,a23.
    #[arg(long)]
    pub consts: Option<String>,
    /// Try every constant choice.
    #[arg(long)]
    pub sweep: bool,
    /// Try this many constant choices drawn with --seed.
    #[arg(long)]
    pub sample_consts: Option<usize>,
    /// Visit this many sampled families per column count instead of all of them.
    #[arg(long)]
    pub sample_families: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SurveyArgs {
    #[arg(long)]
    pub semigroup: String,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    #[arg(long, default_value_t = 1)]
    pub rcap: usize,
    #[arg(long)]
    pub mcap: Option<usize>,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub semigroup: String,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long, default_value_t = 2)]
    pub r: usize,
    #[arg(long, default_value_t = 2)]
    pub m: usize,
}

#[derive(Debug, Args)]
pub struct PartitionArgs {
    #[arg(long)]
    pub semigroup: String,
    /// scr (closed form), kscr or kcr.
    #[arg(long, default_value = "scr")]
    pub property: String,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    #[arg(long, default_value_t = 1)]
    pub m: usize,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_RUNTIME)
        }
    }
}
