use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "gcp",
    version,
    about = "Lattice counts in circles and balls, and the primes among them"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lattice count C(r) of one circle (or ball with --dim) and its primality.
    Count {
        #[arg(long)]
        radius: u64,
        #[arg(long)]
        dim: Option<u32>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Lattice count of a d-dimensional ball.
    Ball {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        radius: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// π(n), κ(n), round(n / ln n) and their ratios at checkpoints.
    Tabulate {
        #[arg(long = "max")]
        max: u64,
        #[command(flatten)]
        checkpoints: Checkpoints,
        #[command(flatten)]
        sweep: SweepArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Where π(n) > κ(n) > n / ln n begins, up to --max.
    Crossover {
        #[arg(long = "max")]
        max: u64,
        #[command(flatten)]
        sweep: SweepArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Checks |C(r) − πr²| < 2√2πr + 2π for every r up to --max.
    VerifyBound {
        #[arg(long = "max")]
        max: u64,
        #[command(flatten)]
        sweep: SweepArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Radii r < --max where C(r) and C(r + 1) are both prime.
    Twins {
        #[arg(long = "max")]
        max: u64,
        #[command(flatten)]
        sweep: SweepArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// κ(n) next to Σ 2 / ln C(k) and Σ 2 / (ln π + 2 ln k).
    Estimate {
        #[arg(long = "max")]
        max: u64,
        #[command(flatten)]
        checkpoints: OptionalCheckpoints,
        #[command(flatten)]
        sweep: SweepArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Principal-value logarithmic integral li(x), 10 significant digits.
    Li {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Checkpoints {
    /// Checkpoints S, 2S, … up to --max.
    #[arg(long)]
    pub step: Option<u64>,
    /// Explicit comma-separated checkpoints.
    #[arg(long, value_delimiter = ',')]
    pub at: Option<Vec<u64>>,
}

#[derive(Debug, Args)]
#[group(required = false, multiple = false)]
pub struct OptionalCheckpoints {
    #[arg(long)]
    pub step: Option<u64>,
    #[arg(long, value_delimiter = ',')]
    pub at: Option<Vec<u64>>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Worker threads for the radius sweep.
    #[arg(long, env = "GCP_WORKERS", default_value_t = 1,
          value_parser = clap::value_parser!(u32).range(1..))]
    pub workers: u32,
    /// Skip the confirmation prompt for long sweeps.
    #[arg(long)]
    pub yes: bool,
    /// No progress messages on stderr.
    #[arg(long)]
    pub quiet: bool,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write here instead of stdout. The file appears only once complete.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Tsv,
    Json,
}
