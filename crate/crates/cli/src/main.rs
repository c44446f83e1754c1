//! `superpair`: load and check Lie superalgebras, compute multipliers and
//! capability of pairs, enumerate truncated free algebras, evaluate the
//! closed-form oracles and run the full cross-check report.

mod commands;
mod text;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "superpair", version, about = "Multipliers, exterior products and capability of Lie superalgebra pairs")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Print timings and warnings to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Abelian,
    HeisEven,
    HeisOdd,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the grading, skew-symmetry and Jacobi identity of an algebra file.
    /// Exit 0 when all hold, 1 on violations, 2 when the file cannot be read.
    Verify { path: PathBuf },
    /// Print a family member in the algebra file format.
    Construct(ConstructArgs),
    /// Multiplier, exterior product and exterior center of a pair.
    Multiplier(PairArgs),
    /// Capability of a pair, with a basis of its exterior center.
    Capability(PairArgs),
    /// Basis dimensions of a truncated free Lie superalgebra.
    FreeBasis(FreeBasisArgs),
    /// Witt and super-Witt numbers.
    Witt(WittArgs),
    /// Closed-form multiplier and capability predictions.
    Oracle(OracleArgs),
    /// Brute force against every closed form over a parameter grid.
    /// Exits 1 when any uncaveated check fails.
    Report(ReportArgs),
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long, default_value_t = 0)]
    pub m: usize,
    #[arg(long, default_value_t = 0)]
    pub n: usize,
    /// Append an abelian summand `A(a|b)`, given as `a,b`.
    #[arg(long, value_name = "A,B")]
    pub plus_abelian: Option<String>,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    /// Algebra file (JSON).
    #[arg(long)]
    pub algebra: PathBuf,
    /// Comma-separated element expressions spanning the ideal, e.g.
    /// "x1+2*x2, z". Defaults to the whole algebra.
    #[arg(long)]
    pub ideal: Option<String>,
    /// Take the ideal generated by the expressions instead of requiring
    /// their span to be an ideal already.
    #[arg(long)]
    pub closure: bool,
}

#[derive(Debug, Args)]
pub struct FreeBasisArgs {
    #[arg(long, default_value_t = 0)]
    pub even: usize,
    #[arg(long, default_value_t = 0)]
    pub odd: usize,
    #[arg(long)]
    pub max_degree: usize,
    /// Also list the basis monomials as bracket strings.
    #[arg(long)]
    pub monomials: bool,
}

#[derive(Debug, Args)]
pub struct WittArgs {
    #[arg(long, default_value_t = 0)]
    pub even: usize,
    #[arg(long, default_value_t = 0)]
    pub odd: usize,
    /// Multidegree over the even letters then the odd letters, e.g. `2,1`.
    #[arg(long, conflicts_with = "degree", required_unless_present = "degree")]
    pub alpha: Option<String>,
    /// Total degree: per-degree dimensions and every multidegree.
    #[arg(long)]
    pub degree: Option<usize>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// `m,n` for abelian and heis-even, `m` for heis-odd.
    #[arg(long)]
    pub params: String,
    /// Ideal dimension `k,h` (even, odd): evaluate the pair formula.
    #[arg(long, value_name = "K,H")]
    pub pair: Option<String>,
    /// Evaluate the capability criterion instead of the multiplier.
    #[arg(long)]
    pub capable: bool,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Start from the empty grid instead of the default one.
    #[arg(long)]
    pub empty: bool,
    #[arg(long)]
    pub abelian_max: Option<usize>,
    #[arg(long)]
    pub heis_even_max: Option<usize>,
    #[arg(long)]
    pub heis_odd_max: Option<usize>,
    #[arg(long)]
    pub derived_one_max_dim: Option<usize>,
    #[arg(long)]
    pub invariance_max_dim: Option<usize>,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long)]
    pub free_max_letters: Option<usize>,
    #[arg(long)]
    pub free_max_degree: Option<usize>,
    /// Accept bounds beyond the supported envelope.
    #[arg(long)]
    pub allow_large: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = commands::Ctx { format: cli.format, verbose: cli.verbose };
    let result = match cli.command {
        Command::Verify { path } => commands::verify(&ctx, &path),
        Command::Construct(a) => commands::construct(&ctx, &a),
        Command::Multiplier(a) => commands::multiplier(&ctx, &a),
        Command::Capability(a) => commands::capability(&ctx, &a),
        Command::FreeBasis(a) => commands::free_basis(&ctx, &a),
        Command::Witt(a) => commands::witt(&ctx, &a),
        Command::Oracle(a) => commands::oracle(&ctx, &a),
        Command::Report(a) => commands::report(&ctx, &a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
