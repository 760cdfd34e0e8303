mod cache;
mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "wreathcov", version, about = "Covering numbers and pairwise generation for A_n^m ⋊ C_2m")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON report to this path instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Wall-clock budget for the exact searches.
    #[arg(long, global = true)]
    pub budget_secs: Option<u64>,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// The covering number from the closed formula, class by class.
    SigmaFormula {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Exact covering number of a small named group.
    SigmaExact {
        /// S5, A6, D4, C7, C2^3, G6,2 ...
        #[arg(long)]
        group: String,
        /// Write the covering, one subgroup per line.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Exact clique number of the generating graph of a small named group.
    OmegaExact {
        #[arg(long)]
        group: String,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Check that the covering family is a minimal covering.
    VerifyCovering {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// Scan every element instead of sampling.
        #[arg(long)]
        exhaustive: bool,
        /// Bits kept by interval rounding.
        #[arg(long, default_value_t = 128)]
        precision: u32,
    },
    /// Closure, disjointness and sizes of the marked classes.
    VerifyPi {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long)]
        exhaustive: bool,
    },
    /// Normalizer intersections with the marked classes: formula against enumeration.
    CountIntersections {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Local lemma certificate at one degree, or a scan up to --n-max.
    LllCheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, default_value_t = 128)]
        precision: u32,
        /// CSV export of the scan table.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Ratio of the clique lower bound to the covering number over a range of degrees.
    RatioScan {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 6)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        /// Threshold as p/q.
        #[arg(long, default_value = "99/100")]
        target: String,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match commands::run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(1)
        }
    }
}
