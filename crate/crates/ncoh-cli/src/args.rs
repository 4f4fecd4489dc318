//! clap schema for the `ncoh` binary.

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "ncoh",
    about = "Exact cohomology and restricted central extensions of truncated \
             nilpotent affine Lie algebras over GF(p)",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verify the Lie and restricted axioms of g(p) with a chosen structure
    Verify(VerifyArgs),
    /// Ordinary cohomology H^1 / H^2, total or one graded degree
    Cohomology(CohomologyArgs),
    /// Restricted cohomology for a structure (mu, lambda)
    Restricted(RestrictedArgs),
    /// Export a differential matrix as CSV or aligned text
    Matrix(MatrixArgs),
    /// Central extensions: summary table or a single cocycle, with optional
    /// axiom verification
    Extensions(ExtensionsArgs),
    /// Run every prime in a list and compare all dimensions against the
    /// closed-form expectations
    Sweep(SweepArgs),
}

#[derive(Args, Debug, Clone)]
pub struct StructureOpts {
    /// Prime p >= 5
    #[arg(long)]
    pub p: u32,
    /// lambda: `zero`, `random`, or a comma list of p integers
    #[arg(long, default_value = "zero")]
    pub lambda: String,
    /// mu: `zero`, `random`, or a comma list of p integers (p = 2 mod 3 only)
    #[arg(long, default_value = "zero")]
    pub mu: String,
    /// Seed for `random` parameters (echoed in the report)
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Args, Debug)]
pub struct CommonOut {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to a file instead of stdout
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub structure: StructureOpts,
    /// Extra random elements/pairs per axiom
    #[arg(long, default_value_t = 5)]
    pub samples: u32,
    #[command(flatten)]
    pub out: CommonOut,
}

#[derive(Args, Debug)]
pub struct CohomologyArgs {
    /// Prime p >= 5
    #[arg(long)]
    pub p: u32,
    /// Cohomology degree (1 or 2)
    #[arg(long, default_value_t = 2)]
    pub degree: u8,
    /// Restrict to one graded degree k (degree 2 only)
    #[arg(long)]
    pub k: Option<usize>,
    /// Compare against the closed-form dimension statements; mismatches set
    /// exit code 1
    #[arg(long)]
    pub expect_theorems: bool,
    #[command(flatten)]
    pub out: CommonOut,
}

#[derive(Args, Debug)]
pub struct RestrictedArgs {
    #[command(flatten)]
    pub structure: StructureOpts,
    /// Compare against the closed-form dimension statements; mismatches set
    /// exit code 1
    #[arg(long)]
    pub expect_theorems: bool,
    #[command(flatten)]
    pub out: CommonOut,
}

#[derive(Args, Debug)]
pub struct MatrixArgs {
    /// Prime p >= 5
    #[arg(long)]
    pub p: u32,
    /// Graded degree k
    #[arg(long)]
    pub k: usize,
    /// Which differential (1 or 2)
    #[arg(long, default_value_t = 2)]
    pub degree: u8,
    /// Row filter: `u1u2` keeps only triples with first index 1 or 2
    #[arg(long)]
    pub rows: Option<String>,
    /// Output format (csv or text)
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to a file instead of stdout
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Args, Debug)]
pub struct ExtensionsArgs {
    #[command(flatten)]
    pub structure: StructureOpts,
    /// Single cocycle to materialize: e14 | e25 | phi_p1 | phi:<k> | bar:<k>
    #[arg(long)]
    pub cocycle: Option<String>,
    /// Run the axiom verification on each materialized extension
    #[arg(long)]
    pub verify: bool,
    /// Extra random samples per verified axiom
    #[arg(long, default_value_t = 3)]
    pub samples: u32,
    /// Brute-force cap for compatible-map evaluation
    #[arg(long, default_value_t = ncoh::DEFAULT_BRUTEFORCE_CAP)]
    pub bruteforce_cap: u32,
    #[command(flatten)]
    pub out: CommonOut,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Primes: inclusive range `5..31` or a comma list `5,7,11`
    #[arg(long)]
    pub primes: String,
    /// lambda per prime: `zero` or `random`
    #[arg(long, default_value = "zero")]
    pub lambda: String,
    /// mu per prime: `zero` or `random` (applied only when p = 2 mod 3)
    #[arg(long, default_value = "zero")]
    pub mu: String,
    /// Seed for `random` parameters
    #[arg(long)]
    pub seed: Option<u64>,
    #[command(flatten)]
    pub out: CommonOut,
}
