//! Machine-readable report shapes.
//!
//! These structs are the CLI's JSON contract; field names are stable and
//! documented in the README. Solve/check reports echo the full instance so
//! a result can be re-run and re-validated from the JSON alone.

use clcs::SolverStats;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct StatsReport {
    pub cell_updates: u64,
    pub suffix_updates: u64,
    pub forward_updates: u64,
    pub reverse_updates: u64,
    pub combine_candidates: u64,
    pub wall_time_us: u128,
}

impl From<&SolverStats> for StatsReport {
    fn from(stats: &SolverStats) -> StatsReport {
        StatsReport {
            cell_updates: stats.cell_updates,
            suffix_updates: stats.suffix_updates,
            forward_updates: stats.forward_updates,
            reverse_updates: stats.reverse_updates,
            combine_candidates: stats.combine_candidates,
            wall_time_us: stats.wall_time.as_micros(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SolveReport {
    pub algorithm: &'static str,
    pub x: String,
    pub y: String,
    pub include: String,
    pub exclude: String,
    pub n: usize,
    pub m: usize,
    pub s: usize,
    pub t: usize,
    pub feasible: bool,
    pub length: Option<usize>,
    pub lcs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<StatsReport>,
}

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub x: String,
    pub y: String,
    pub include: String,
    pub exclude: String,
    pub candidate: String,
    pub length: usize,
    pub is_common_subsequence: bool,
    pub includes_required_substring: bool,
    pub excludes_forbidden_subsequence: bool,
    pub valid: bool,
}

#[derive(Debug, Serialize)]
pub struct BenchReport {
    pub n: usize,
    pub m: usize,
    pub t: usize,
    pub seed: u64,
    pub alphabet: u8,
    pub rows: Vec<BenchRow>,
}

#[derive(Debug, Serialize)]
pub struct BenchRow {
    pub s: usize,
    pub algorithm: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub feasible: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<StatsReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}
