use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "diskmod",
    version,
    about = "Modulus extrema and Miller-Mocanu checks for analytic functions on the unit disk"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Reproduce the Möbius-of-z^n example family: closed forms vs numeric search.
    Example(ExampleArgs),
    /// Locate the extremum of a series from a file and check the inequality chain there.
    Verify(VerifyArgs),
    /// Seeded randomized falsification sweep over a0·exp(h).
    Sweep(SweepArgs),
    /// Export the modulus profile |f(r e^{iθ})| as CSV.
    Landscape(LandscapeArgs),
}

/// Constant term, either cartesian (`--a0`, `--a0-im`) or polar (`--a0-mod`, `--a0-arg`).
#[derive(Debug, Clone, Args)]
pub struct A0Args {
    /// Real part of a0.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["a0_mod", "a0_arg"])]
    pub a0: Option<f64>,
    /// Imaginary part of a0.
    #[arg(long, allow_hyphen_values = true, requires = "a0")]
    pub a0_im: Option<f64>,
    /// Modulus of a0.
    #[arg(long, requires = "a0_arg")]
    pub a0_mod: Option<f64>,
    /// Argument of a0 in radians.
    #[arg(long, allow_hyphen_values = true, requires = "a0_mod")]
    pub a0_arg: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Min,
    Max,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Angular grid size for the circle search.
    #[arg(long, default_value_t = 4096)]
    pub grid: usize,
    /// Tolerance for the inequality checks.
    #[arg(long, default_value_t = diskmod::DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
}

#[derive(Debug, Clone, Args)]
pub struct ExampleArgs {
    #[command(flatten)]
    pub a0: A0Args,
    #[arg(long)]
    pub n: usize,
    /// Radius of the sub-disk, in (0, 1).
    #[arg(long)]
    pub r: f64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Series literal file.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub r: f64,
    #[arg(long, value_enum, default_value_t = ModeArg::Min)]
    pub mode: ModeArg,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct LandscapeArgs {
    /// Series literal file; otherwise the example family given by the a0 flags and --n.
    #[arg(long, conflicts_with_all = ["a0", "a0_mod"])]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub a0: A0Args,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: f64,
    #[arg(long, default_value_t = 4096)]
    pub grid: usize,
    /// Profile 1/f instead of f.
    #[arg(long)]
    pub reciprocal: bool,
    /// CSV destination; stdout when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
}
