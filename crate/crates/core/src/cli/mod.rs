//! Command-line front end.

mod commands;
mod config;
mod output;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use xi_lab_core::hypothetical::{DeletedSource, FactorMode};
use xi_lab_core::XiError;

pub use config::{FlagConfig, RunConfig, CATALOG_ENV};

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "xi-lab", version, about = "Numerical experiments on Riemann's xi function")]
pub struct Cli {
    /// Zero catalog (JSON); defaults to $XI_LAB_CATALOG, then the bundled catalog
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    /// Output file (or directory for `hypothetical`); stdout when absent
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Target relative error of the special functions
    #[arg(long, global = true)]
    precision: Option<f64>,
    /// TOML file with default settings
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate ξ(σ + it)
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        sigma: f64,
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
    },
    /// Locate zero ordinates and write the catalog
    Zeros {
        #[arg(long, num_args = 2, value_names = ["LO", "HI"])]
        range: Vec<f64>,
        /// Where to write the JSON catalog; defaults to --catalog when given
        #[arg(long)]
        catalog_out: Option<PathBuf>,
        /// Scan from scratch instead of extending the input catalog
        #[arg(long)]
        fresh: bool,
    },
    /// Find extrema of Ξ (or of Ξ_H) and check their signs
    Extrema {
        #[arg(long, num_args = 2, value_names = ["LO", "HI"])]
        range: Vec<f64>,
        #[command(flatten)]
        model: ModelArgs,
    },
    /// Cross-section of ξ, the deleted product and the removed factor at fixed t
    Crosssection {
        #[arg(long)]
        t: f64,
        /// Factor to delete; defaults to the zero nearest to t
        #[arg(long)]
        j: Option<usize>,
    },
    /// Plant an off-line zero quadruple and report the resulting quantities
    Hypothetical {
        #[command(flatten)]
        model: ModelArgs,
    },
}

#[derive(Debug, Args)]
struct ModelArgs {
    /// Index of the replaced zero
    #[arg(long)]
    k: Option<usize>,
    /// Horizontal offset of the planted zeros from the critical line
    #[arg(long)]
    lambda_k: Option<f64>,
    /// Use these α_k, γ_k instead of fitting them
    #[arg(long, requires = "gamma", allow_hyphen_values = true)]
    alpha: Option<f64>,
    #[arg(long, requires = "alpha")]
    gamma: Option<f64>,
    #[arg(long, value_enum, default_value_t = SourceArg::True)]
    source: SourceArg,
    #[arg(long, value_enum, default_value_t = FactorArg::Exact)]
    factor: FactorArg,
    /// Remove the (k+1)-st factor as well
    #[arg(long)]
    delete_next: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SourceArg {
    True,
    Surrogate,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FactorArg {
    Exact,
    Approx,
}

impl From<SourceArg> for DeletedSource {
    fn from(s: SourceArg) -> Self {
        match s {
            SourceArg::True => DeletedSource::True,
            SourceArg::Surrogate => DeletedSource::Surrogate,
        }
    }
}

impl From<FactorArg> for FactorMode {
    fn from(f: FactorArg) -> Self {
        match f {
            FactorArg::Exact => FactorMode::Exact,
            FactorArg::Approx => FactorMode::Approx,
        }
    }
}

/// Outcome of a command that ran to completion.
pub enum Outcome {
    Done,
    Violation(usize),
}

fn exit_code(err: &XiError) -> i32 {
    match err {
        XiError::InvalidConfig(_) => EXIT_USAGE,
        _ => EXIT_NUMERICAL,
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    let flags = FlagConfig {
        catalog: cli.catalog,
        out: cli.out,
        precision: cli.precision,
        config: cli.config,
    };
    let result = RunConfig::resolve(flags, std::env::var_os(CATALOG_ENV).map(PathBuf::from))
        .and_then(|cfg| commands::dispatch(cli.command, &cfg));
    match result {
        Ok(Outcome::Done) => 0,
        Ok(Outcome::Violation(n)) => {
            eprintln!("xi-lab: {n} sign-rule violation(s)");
            EXIT_VIOLATION
        }
        Err(e) => {
            eprintln!("xi-lab: {e}");
            exit_code(&e)
        }
    }
}
