//! Command-line surface.
//!
//! Every sequence can be given inline or via a file, but not both; clap arg
//! groups enforce the exactly-one rule per sequence.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use clcs::Algorithm;

/// Longest common subsequence under two constraints: the result must contain
/// a required string as a contiguous substring and must not contain a
/// forbidden string as a subsequence.
#[derive(Debug, Parser)]
#[command(name = "clcs", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve an instance and print the optimum (or report infeasibility).
    Solve(SolveArgs),
    /// Validate a candidate answer against an instance.
    Check(CheckArgs),
    /// Cross-check both dynamic programs against the exhaustive reference
    /// on a stream of seeded random instances.
    Fuzz(FuzzArgs),
    /// Report exact DP cell-update counts (and wall times) over a grid of
    /// required-substring lengths.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct XSource {
    /// First input sequence, inline.
    #[arg(long, value_name = "SEQ")]
    pub x: Option<String>,
    /// Read the first input sequence from a file (plain text or FASTA).
    #[arg(long, value_name = "PATH")]
    pub x_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct YSource {
    /// Second input sequence, inline.
    #[arg(long, value_name = "SEQ")]
    pub y: Option<String>,
    /// Read the second input sequence from a file (plain text or FASTA).
    #[arg(long, value_name = "PATH")]
    pub y_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct IncludeSource {
    /// Substring the answer must contain, inline.
    #[arg(long, value_name = "SEQ")]
    pub include: Option<String>,
    /// Read the required substring from a file (plain text or FASTA).
    #[arg(long, value_name = "PATH")]
    pub include_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct ExcludeSource {
    /// Subsequence the answer must avoid, inline.
    #[arg(long, value_name = "SEQ")]
    pub exclude: Option<String>,
    /// Read the forbidden subsequence from a file (plain text or FASTA).
    #[arg(long, value_name = "PATH")]
    pub exclude_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct CandidateSource {
    /// Candidate answer to validate, inline.
    #[arg(long, value_name = "SEQ")]
    pub candidate: Option<String>,
    /// Read the candidate answer from a file (plain text or FASTA).
    #[arg(long, value_name = "PATH")]
    pub candidate_file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgoChoice {
    /// Suffix DP over all four indices, then a reverse-table sweep.
    Quartic,
    /// Compact-appearance preprocessing plus two three-index DPs.
    Cubic,
    /// Exhaustive subset enumeration (small inputs only).
    Oracle,
}

impl AlgoChoice {
    pub fn to_algorithm(self) -> Algorithm {
        match self {
            AlgoChoice::Quartic => Algorithm::Quartic,
            AlgoChoice::Cubic => Algorithm::Cubic,
            AlgoChoice::Oracle => Algorithm::Oracle,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AlgoChoice::Quartic => "quartic",
            AlgoChoice::Cubic => "cubic",
            AlgoChoice::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub x: XSource,
    #[command(flatten)]
    pub y: YSource,
    #[command(flatten)]
    pub include: IncludeSource,
    #[command(flatten)]
    pub exclude: ExcludeSource,
    /// Algorithm to run.
    #[arg(long = "algo", value_enum, default_value_t = AlgoChoice::Cubic)]
    pub algo: AlgoChoice,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Collect and report DP work counters and wall time.
    #[arg(long)]
    pub stats: bool,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub x: XSource,
    #[command(flatten)]
    pub y: YSource,
    #[command(flatten)]
    pub include: IncludeSource,
    #[command(flatten)]
    pub exclude: ExcludeSource,
    #[command(flatten)]
    pub candidate: CandidateSource,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct FuzzArgs {
    /// Base seed of the instance stream; (seed, index) determines an
    /// instance completely.
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Number of instances to generate and cross-check.
    #[arg(long, default_value_t = 2000)]
    pub iters: u64,
    /// Largest first-input length to draw (capped by the exhaustive
    /// reference's tractability limit).
    #[arg(long, default_value_t = 10)]
    pub max_n: usize,
    /// Largest second-input length to draw.
    #[arg(long, default_value_t = 10)]
    pub max_m: usize,
    /// Largest required-substring length to draw.
    #[arg(long, default_value_t = 3)]
    pub max_s: usize,
    /// Largest forbidden-subsequence length to draw.
    #[arg(long, default_value_t = 3)]
    pub max_t: usize,
    /// Alphabet size: fixed ("4") or cycled per index over a range ("2-4").
    #[arg(long, default_value = "2-4")]
    pub alphabet: String,
    /// Probability of planting the required substring into both inputs.
    #[arg(long, default_value_t = 0.5)]
    pub plant: f64,
    /// Report every mismatch instead of stopping at the first.
    #[arg(long)]
    pub keep_going: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Length of the first input.
    #[arg(long, default_value_t = 150)]
    pub n: usize,
    /// Length of the second input.
    #[arg(long, default_value_t = 150)]
    pub m: usize,
    /// Forbidden-subsequence length.
    #[arg(long, default_value_t = 4)]
    pub t: usize,
    /// Required-substring lengths to sweep, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = vec![4usize, 8, 16])]
    pub s: Vec<usize>,
    /// Seed; each s value gets its own deterministic stream, so reordering
    /// or extending the grid never changes other rows.
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Alphabet size.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u8).range(2..=8))]
    pub alphabet: u8,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}
