use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use gonal_slope_core::ratcalc::Rat;

use crate::output::Format;
use crate::scenario::parse_rat;

#[derive(Debug, Parser)]
#[command(
    name = "gonal-slope",
    version,
    about = "Exact slope invariants and slope lower bounds for trigonal and fourgonal fibrations"
)]
pub struct Cli {
    /// Output format [default: table, or `format` from a scenario file]
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate K_f^2, chi_f and the slope from Chern data
    Slope(SlopeArgs),
    /// Derive a slope lower bound and compare it with the quoted closed form
    Bound(ScenarioArgs),
    /// Tabulate derived and quoted bounds over a genus range
    Sweep(ScenarioArgs),
    /// Run the full invariant suite (exit 2 on the first failure)
    Verify(VerifyArgs),
    /// Compare blown-up substituted slopes with the unblown bound on a c1^2 grid
    Report(ScenarioArgs),
}

#[derive(Debug, Args)]
pub struct SlopeArgs {
    /// Degree of the cover
    #[arg(long)]
    pub n: u32,
    /// Genus of the general fiber
    #[arg(long)]
    pub g: i64,
    /// c1(E)^2
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    pub c1sq: Rat,
    /// c2(E) (trigonal or general formula)
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    pub c2: Option<Rat>,
    /// c2(E) of the rank-3 bundle (fourgonal)
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    pub c2e: Option<Rat>,
    /// c2(F) of the bundle of conics (fourgonal)
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    pub c2f: Option<Rat>,
    /// R^2; selects the general formula when given
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    pub rsq: Option<Rat>,
    /// Base genus; also evaluates through intersection numbers and checks agreement
    #[arg(long)]
    pub b: Option<u64>,
    /// Blow-ups at total-ramification points (fourgonal)
    #[arg(long, default_value_t = 0)]
    pub s: u64,
    /// Blow-ups at index-three points
    #[arg(long, default_value_t = 0)]
    pub t: u64,
    /// Compute below the minimum genus and tag the output
    #[arg(long)]
    pub allow_out_of_range: bool,
}

#[derive(Debug, Args, Default)]
pub struct ScenarioArgs {
    /// Degree of the cover (3 or 4)
    #[arg(long)]
    pub n: Option<u32>,
    /// Genus of the general fiber
    #[arg(long)]
    pub g: Option<i64>,
    /// Inclusive genus range `a..b` (sweep)
    #[arg(long)]
    pub g_range: Option<String>,
    /// index-only, general-odd, general-even, general (sweep), nonfactorizing, factorizing
    #[arg(long)]
    pub case: Option<String>,
    /// Genus of the intermediate curve for the factorizing case
    #[arg(long)]
    pub gamma: Option<i64>,
    /// Blow-ups at total-ramification points (fourgonal)
    #[arg(long)]
    pub s: Option<u64>,
    /// Blow-ups at index-three points
    #[arg(long)]
    pub t: Option<u64>,
    /// Comma-separated c1^2 values (report)
    #[arg(long, allow_hyphen_values = true)]
    pub c1sq_grid: Option<String>,
    /// Read key = value settings from a file; flags take precedence
    #[arg(long)]
    pub scenario: Option<PathBuf>,
    /// Compute below the minimum genus and tag the output
    #[arg(long)]
    pub allow_out_of_range: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Seed for the randomized checks
    #[arg(long)]
    pub seed: Option<u64>,
}
