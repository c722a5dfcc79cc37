//! Exact solvers for the constrained longest common subsequence problem
//! STR-IC-SEQ-EC-LCS: given strings `x` and `y` and constraint strings `p`
//! and `q`, find a longest common subsequence of `x` and `y` that contains
//! `p` as a contiguous substring and does not contain `q` as a subsequence.
//!
//! Two dynamic-programming solvers are provided — [`solve_quartic`] runs in
//! `O(n·m·s·t)` time and [`solve_cubic`] in `O(n·m·t)` — plus an exhaustive
//! reference solver and a seeded instance generator in [`oracle`] for
//! differential testing. Both DP solvers reconstruct a witness and report
//! exact cell-update counts.
//!
//! ```
//! use clcs::{solve_cubic, Instance, Sequence, SolverConfig};
//!
//! let instance = Instance::new(
//!     Sequence::from("cabac"),
//!     Sequence::from("abcac"),
//!     Sequence::from("ba"),
//!     Sequence::from("cc"),
//! )
//! .unwrap();
//! let solved = solve_cubic(&instance, &SolverConfig::default()).unwrap();
//! assert_eq!(solved.outcome.length(), Some(4));
//! ```

pub mod capacity;
pub mod exclusion_dp;
pub mod oracle;
pub mod preprocess;
pub mod seq;
pub mod solvers;
pub mod suffix_dp;

pub use capacity::{CapacityError, DEFAULT_MEMORY_BUDGET};
pub use seq::{
    is_subsequence, is_substring, longest_q_prefix, validate, ExtLen, Instance, InstanceError,
    Outcome, Sequence, SolutionIndices, ValidationReport,
};
pub use solvers::{
    solve, solve_cubic, solve_quartic, Algorithm, Solved, SolverConfig, SolverError, SolverStats,
};
