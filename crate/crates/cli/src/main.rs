mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use kneser_dist::distinguish::{DEFAULT_COLORING_CAP, DEFAULT_MAX_TRIALS, DEFAULT_NODE_BUDGET};

/// Exact fixation bounds and verified distinguishing colorings for Kneser
/// graphs.
#[derive(Debug, Parser)]
#[command(name = "kneser-dist", version)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest permutation count n! scanned by exhaustive verification.
    #[arg(long, global = true, value_name = "N", default_value_t = 3_628_800)]
    cap_perms: u128,
    /// Largest coloring count enumerated by the exact oracle.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_COLORING_CAP)]
    cap_colorings: u128,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// f(n), f_{>=i}(n) or the Kneser orbit bound, with per-type tables.
    Bounds {
        #[arg(long)]
        n: usize,
        /// Report every n from `--n` to this value.
        #[arg(long, value_name = "N")]
        n_max: Option<usize>,
        /// Only cycle types whose cycles all have at least this length.
        #[arg(long, value_name = "I", conflicts_with = "kneser_r")]
        min_cycle: Option<usize>,
        /// Bound n!/2^m for the vertices of K(n, r).
        #[arg(long, value_name = "R")]
        kneser_r: Option<usize>,
    },
    /// Constructive coloring of the edges of K_6 or K_7 from 2-lists.
    Construct {
        /// ListAssignment JSON file.
        #[arg(long, value_name = "PATH")]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_TRIALS)]
        max_trials: u64,
    },
    /// Random colorings drawn from the lists until one verifies.
    Sample {
        /// ListAssignment JSON file. Without it, identical lists are built
        /// from `--n`, `--r` and `--k`.
        #[arg(long, value_name = "PATH", conflicts_with_all = ["n", "r", "k"])]
        input: Option<PathBuf>,
        #[arg(long, requires_all = ["r", "k"])]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_TRIALS)]
        max_trials: u64,
    },
    /// Distinguishing number of K(n, r) by exhaustive search.
    Dnumber {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k_max: usize,
        /// Search nodes allowed per palette size.
        #[arg(long, value_name = "N", default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
    },
    /// Expected fixing counts for identical lists against random lists.
    Conjecture {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
}

/// How a command ended when it produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    Negative,
    BudgetExhausted,
}

impl Status {
    fn code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::Negative => 2,
            Status::BudgetExhausted => 3,
        }
    }
}

fn error_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<kneser_dist::Error>() {
        Some(kneser_dist::Error::NotDistinguishable) => 2,
        Some(kneser_dist::Error::CapExceeded { .. }) => 3,
        _ => 1,
    }
}

fn init_threads() -> anyhow::Result<()> {
    if let Ok(raw) = std::env::var("KNESER_DIST_THREADS") {
        let threads: usize =
            raw.parse().map_err(|_| anyhow::anyhow!("KNESER_DIST_THREADS must be a positive integer, got {raw:?}"))?;
        anyhow::ensure!(threads > 0, "KNESER_DIST_THREADS must be positive");
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<Status> {
    init_threads()?;
    let c = &cli.common;
    match cli.command {
        Command::Bounds { n, n_max, min_cycle, kneser_r } => commands::bounds(c, n, n_max, min_cycle, kneser_r),
        Command::Construct { input, max_trials } => commands::construct(c, &input, max_trials),
        Command::Sample { input, n, r, k, max_trials } => commands::sample(c, input.as_deref(), n, r, k, max_trials),
        Command::Dnumber { n, r, k_max, node_budget } => commands::dnumber(c, n, r, k_max, node_budget),
        Command::Conjecture { n, r, k, samples } => commands::conjecture(c, n, r, k, samples),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(status) => ExitCode::from(status.code()),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(error_code(&e))
        }
    }
}

fn is_broken_pipe(err: &anyhow::Error) -> bool {
    err.chain().any(|cause| {
        cause.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
            || cause.downcast_ref::<serde_json::Error>().and_then(|j| j.io_error_kind())
                == Some(std::io::ErrorKind::BrokenPipe)
    })
}
