//! `neim` — non-extreme individual minima for multi-objective optimization.
//!
//! Subcommands cover the full pipeline: rotated weight vectors
//! (`weights`), the trade-off ratio bound over an angle sweep (`lbar`),
//! the two-payoff computation (`neim`), box filtering of CSV sample clouds
//! (`filter`), knee-point solves (`knee`), dominance filtering (`pareto`),
//! and a synthetic cloud generator (`generate`).
//!
//! Exit codes: 0 success, 2 usage error, 3 data error, 4 numeric or
//! degeneracy error.

mod cloud;
mod commands;
mod error;
mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "neim",
    version,
    about = "Non-extreme individual minima toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rotated spanning matrices and the simplex-scaled weight vectors.
    Weights(WeightsArgs),
    /// Worst pairwise weight ratio over a grid of rotation angles.
    Lbar(LbarArgs),
    /// Standard and non-extreme payoff matrices with their boxes.
    Neim(NeimArgs),
    /// Keep the cloud points inside a utopia-nadir box.
    Filter(FilterArgs),
    /// Knee-point weights and the corresponding solves.
    Knee(KneeArgs),
    /// Nondominated subset of a cloud.
    Pareto(ParetoArgs),
    /// Synthetic sphere-front sample cloud.
    Generate(GenerateArgs),
}

#[derive(clap::Args)]
pub struct WeightsArgs {
    /// Number of objectives.
    #[arg(long)]
    pub dim: usize,
    /// Common rotation angle in degrees, 0 <= alpha < 90.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Per-objective angles in degrees, comma-separated.
    #[arg(long, value_delimiter = ',', conflicts_with = "alpha")]
    pub alpha_vec: Option<Vec<f64>>,
    /// Report destination (stdout when omitted).
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(clap::Args)]
pub struct LbarArgs {
    /// Number of objectives.
    #[arg(long)]
    pub dim: usize,
    /// Degree grid START:STEP:END, all values strictly inside (0, 90).
    #[arg(long)]
    pub alpha_grid: String,
    /// CSV destination (stdout when omitted).
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(clap::Args)]
pub struct NeimArgs {
    /// Built-in problem family (currently 'ellipsoid').
    #[arg(long)]
    pub problem: Option<String>,
    /// Ellipsoid semi-axis lengths, comma-separated.
    #[arg(long, value_delimiter = ',')]
    pub semi_axes: Option<Vec<f64>>,
    /// CSV sample cloud to use as the discrete backend.
    #[arg(long, conflicts_with = "problem")]
    pub cloud: Option<PathBuf>,
    /// Common rotation angle in degrees.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Per-objective angles in degrees, comma-separated.
    #[arg(long, value_delimiter = ',', conflicts_with = "alpha")]
    pub alpha_vec: Option<Vec<f64>>,
    /// Solve with the raw rotated weights instead of range-normalized ones.
    #[arg(long)]
    pub no_normalize: bool,
    /// Accept zero angles and reproduce the standard individual minima.
    #[arg(long)]
    pub allow_standard: bool,
    /// Substitute unit scale for objectives with degenerate ranges.
    #[arg(long)]
    pub allow_degenerate: bool,
    /// Report destination (stdout when omitted).
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum BoxChoice {
    Standard,
    NonExtreme,
}

#[derive(clap::Args)]
pub struct FilterArgs {
    /// CSV sample cloud to filter.
    #[arg(long)]
    pub cloud: PathBuf,
    /// Report file providing the box.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Which box to take from the report.
    #[arg(long = "box", value_enum, default_value = "non-extreme")]
    pub box_choice: BoxChoice,
    /// Also require points to lie above the box's utopia corner.
    #[arg(long)]
    pub use_utopia: bool,
    /// Explicit nadir corner, comma-separated.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        conflicts_with = "report"
    )]
    pub nadir: Option<Vec<f64>>,
    /// Explicit utopia corner; implies the utopia-side bound.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        requires = "nadir"
    )]
    pub utopia: Option<Vec<f64>>,
    /// Filtered CSV destination (stdout when omitted).
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum PayoffChoice {
    Standard,
    NonExtreme,
    Both,
}

#[derive(clap::Args)]
pub struct KneeArgs {
    /// CSV sample cloud backend.
    #[arg(long)]
    pub cloud: Option<PathBuf>,
    /// Built-in problem family (currently 'ellipsoid').
    #[arg(long, conflicts_with = "cloud")]
    pub problem: Option<String>,
    /// Ellipsoid semi-axis lengths, comma-separated.
    #[arg(long, value_delimiter = ',')]
    pub semi_axes: Option<Vec<f64>>,
    /// Which payoff matrix feeds the knee weight.
    #[arg(long, value_enum, default_value = "standard")]
    pub payoff: PayoffChoice,
    /// Common rotation angle in degrees (required for the non-extreme
    /// payoff).
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Per-objective angles in degrees, comma-separated.
    #[arg(long, value_delimiter = ',', conflicts_with = "alpha")]
    pub alpha_vec: Option<Vec<f64>>,
    /// Reject mixed-sign knee weights instead of solving with them.
    #[arg(long)]
    pub strict: bool,
    /// Clamp negative knee-weight components to zero before solving.
    #[arg(long, conflicts_with = "strict")]
    pub clamp: bool,
    /// Report destination (stdout when omitted).
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(clap::Args)]
pub struct ParetoArgs {
    /// CSV sample cloud to reduce to its nondominated subset.
    #[arg(long)]
    pub cloud: PathBuf,
    /// Filtered CSV destination (stdout when omitted).
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(clap::Args)]
pub struct GenerateArgs {
    /// Number of objectives.
    #[arg(long)]
    pub dim: usize,
    /// Number of samples.
    #[arg(long)]
    pub count: usize,
    /// Generator seed; identical seeds reproduce identical clouds.
    #[arg(long, default_value = "0")]
    pub seed: u64,
    /// CSV destination (stdout when omitted).
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

fn main() {
    env_logger::init();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Weights(args) => commands::cmd_weights(args),
        Command::Lbar(args) => commands::cmd_lbar(args),
        Command::Neim(args) => commands::cmd_neim(args),
        Command::Filter(args) => commands::cmd_filter(args),
        Command::Knee(args) => commands::cmd_knee(args),
        Command::Pareto(args) => commands::cmd_pareto(args),
        Command::Generate(args) => commands::cmd_generate(args),
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
