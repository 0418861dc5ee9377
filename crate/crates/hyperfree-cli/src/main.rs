//! `hyperfree` — evaluate the hyperbolic-family transforms and their
//! measures on grids, run the identity verifier, and demonstrate
//! recovery of characteristic functions from imaginary-axis data.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 numeric-domain or backend error.

mod output;
mod run;

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(name = "hyperfree", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a function on points: digamma, beta, ei, zeta2,
    /// dilog_skew, V:{C,S,T,psiC}, density:{...}, charfn:{...}.
    Eval {
        /// Target name, e.g. `digamma` or `charfn:C`.
        target: String,
        /// Evaluation points.
        points: Vec<f64>,
        /// Additional inclusive grid `start:stop:step`.
        #[arg(long)]
        grid: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the identity-verification registry and write a report.
    Verify {
        /// Run a single named check instead of the full registry.
        #[arg(long)]
        only: Option<String>,
        /// Quadrature-vs-closed-form tolerance.
        #[arg(long, default_value_t = 1e-8)]
        tol_quad: f64,
        /// Inversion-vs-closed-form tolerance.
        #[arg(long, default_value_t = 1e-4)]
        tol_inv: f64,
        /// Pure special-function identity tolerance.
        #[arg(long, default_value_t = 1e-12)]
        tol_specfun: f64,
        /// Override the s/t grid (comma-separated or start:stop:step).
        #[arg(long)]
        grid_s: Option<String>,
        /// Override the w grid.
        #[arg(long)]
        grid_w: Option<String>,
        /// Override the x grid.
        #[arg(long)]
        grid_x: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Recover m̂(s) from imaginary-axis transform values and compare
    /// with the closed form.
    Recover {
        /// Family member key: C, S, T, or psiC.
        member: String,
        /// Points `start:stop:step`, a comma list, or a single value.
        #[arg(long)]
        s: String,
        /// Inversion order (even, 4..=22).
        #[arg(long, default_value_t = 18)]
        order: usize,
        /// Inversion backend.
        #[arg(long, value_enum, default_value = "gaver-stehfest")]
        backend: BackendArg,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum BackendArg {
    GaverStehfest,
    TalbotContourFree,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_thread_pool();
    match run::dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

/// HYPERFREE_THREADS caps the worker count for grid evaluation.
fn init_thread_pool() {
    if let Ok(raw) = std::env::var("HYPERFREE_THREADS") {
        if let Ok(n) = raw.trim().parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}
