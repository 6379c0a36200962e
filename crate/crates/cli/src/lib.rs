//! Command-line front end for the `kroncomb` library: compute single
//! quantities or run verification suites over parameter grids.

pub mod compute;
pub mod report;
pub mod verify;

use clap::{Parser, Subcommand};
use kroncomb::Partition;
use thiserror::Error;

use compute::Guards;
use report::{render, Format, Status};
use verify::{run_check, CheckId, Grid};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("refused: {0}")]
    Guard(String),
    #[error(transparent)]
    Library(#[from] kroncomb::Error),
}

/// Exit status when at least one check fails.
pub const EXIT_FAIL: i32 = 1;
/// Exit status for usage errors, unknown check ids and guard refusals.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "kroncomb",
    version,
    about = "LR and Kronecker coefficients, q-series and unimodality checks"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Worker threads for grid suites; 0 picks the number of cores.
    #[arg(long, env = "KRONCOMB_JOBS", default_value_t = 0, global = true)]
    pub jobs: usize,
    /// Lift the size guards on the LR and character-table routes.
    #[arg(long, global = true)]
    pub unsafe_no_guard: bool,
    /// Record wall-clock time per grid point (otherwise elapsed_ms is 0).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// LR coefficient c^λ_{αβ}.
    Lr {
        lambda: Partition,
        alpha: Partition,
        beta: Partition,
    },
    /// Kronecker coefficient g(λ, μ, ν).
    Kron {
        lambda: Partition,
        mu: Partition,
        nu: Partition,
    },
    /// Coefficients of the q-binomial for an ℓ x m box.
    Qbinom { rows: usize, cols: usize },
    /// Coefficients of Π_{i<=m} (1 + q^{2i-1}).
    Almkvist { m: usize },
    /// Coefficients of the padded product (1 + q² + ... + q^N) Π_{i<=m} (1 + q^{2i-1}).
    Bpoly { m: usize },
    /// Corner statistic p_n(ℓ, m, r) for n = 0..ℓm.
    Pstat { rows: usize, cols: usize, r: usize },
    /// Character χ^λ on the class with cycle type ρ.
    Char { lambda: Partition, rho: Partition },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        check: CheckId,
        #[command(flatten)]
        grid: Grid,
    },
}

/// What to print and the process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    let guards = Guards {
        enabled: !cli.unsafe_no_guard,
    };
    let computed = match cli.command {
        Command::Lr {
            lambda,
            alpha,
            beta,
        } => compute::lr(guards, &lambda, &alpha, &beta)?,
        Command::Kron { lambda, mu, nu } => compute::kron(guards, &lambda, &mu, &nu)?,
        Command::Qbinom { rows, cols } => compute::qbinom(rows, cols),
        Command::Almkvist { m } => compute::almkvist(m)?,
        Command::Bpoly { m } => compute::bpoly(m)?,
        Command::Pstat { rows, cols, r } => compute::pstat(rows, cols, r)?,
        Command::Char { lambda, rho } => compute::character(&lambda, &rho)?,
        Command::Verify { check, grid } => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(cli.jobs)
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let reports = pool.install(|| run_check(check, &grid, cli.timing, guards.enabled))?;
            let failed = reports.iter().any(|r| r.status == Status::Fail);
            return Ok(Output {
                stdout: render(&reports, cli.format),
                code: if failed { EXIT_FAIL } else { 0 },
            });
        }
    };
    Ok(Output {
        stdout: computed.render(cli.format),
        code: 0,
    })
}
