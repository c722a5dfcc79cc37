//! The two DP solvers and their shared configuration.
//!
//! Both maximize over split points where the witness's contiguous copy of
//! `p` ends (quartic) or lives (cubic), combining a constrained prefix table
//! with the reverse exclusion table. They agree on feasibility and length by
//! construction; witnesses may differ but each validates.

use std::mem::size_of;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::capacity::{check_budget, table_bytes, CapacityError, DEFAULT_MEMORY_BUDGET};
use crate::exclusion_dp::{
    build_forward_table, build_reverse_table, traceback_forward, traceback_reverse,
};
use crate::oracle::{brute_force_solve, SizeError};
use crate::preprocess::build_prep;
use crate::seq::{ExtLen, Instance, Outcome, Sequence, SolutionIndices};
use crate::suffix_dp::{build_suffix_table, traceback_suffix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    /// `O(n·m·s·t)` time via the suffix-constrained table.
    Quartic,
    /// `O(n·m·t)` time via compact appearances and the overlap table.
    Cubic,
    /// Exhaustive enumeration; only for instances with at most
    /// [`crate::oracle::ORACLE_MAX_N`] symbols in `x`.
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    pub algorithm: Algorithm,
    /// Byte ceiling for the DP tables of one solve.
    pub memory_budget: usize,
    /// When false, skip the wall-clock measurement; update counts are
    /// byproducts of the build and are always recorded.
    pub collect_stats: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            algorithm: Algorithm::Cubic,
            memory_budget: DEFAULT_MEMORY_BUDGET,
            collect_stats: true,
        }
    }
}

/// Exact work counters for one solve.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolverStats {
    /// Interior cell writes summed over every table built.
    pub cell_updates: u64,
    /// Cell writes of the suffix-constrained table (quartic only).
    pub suffix_updates: u64,
    /// Cell writes of the forward exclusion table (cubic only).
    pub forward_updates: u64,
    /// Cell writes of the reverse exclusion table.
    pub reverse_updates: u64,
    /// Combination candidates examined.
    pub combine_candidates: u64,
    pub wall_time: Duration,
}

#[derive(Debug, Clone)]
pub struct Solved {
    pub outcome: Outcome,
    pub stats: SolverStats,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error(transparent)]
    Capacity(#[from] CapacityError),
    #[error(transparent)]
    OracleSize(#[from] SizeError),
}

fn now_if(collect: bool) -> Option<Instant> {
    collect.then(Instant::now)
}

fn elapsed(start: Option<Instant>) -> Duration {
    start.map(|s| s.elapsed()).unwrap_or_default()
}

/// Solve by building the full suffix-constrained table and maximizing, over
/// every end position `(i, j)` of the copy of `p` and every exclusion split
/// `r`, the constrained prefix length plus the reverse tail length.
pub fn solve_quartic(instance: &Instance, config: &SolverConfig) -> Result<Solved, SolverError> {
    let start = now_if(config.collect_stats);
    let (n, m, s, t) = (instance.n(), instance.m(), instance.s(), instance.t());
    let (x, y, q) = (instance.x(), instance.y(), instance.q());

    // Budget both tables jointly before allocating either.
    let suffix_bytes = table_bytes(&[n + 1, m + 1, s + 1, t + 1], size_of::<ExtLen>());
    let reverse_bytes = table_bytes(&[n + 1, m + 1, t], size_of::<usize>());
    let total = suffix_bytes
        .zip(reverse_bytes)
        .and_then(|(a, b)| a.checked_add(b));
    check_budget(total, config.memory_budget)?;

    let suffix = build_suffix_table(instance, config.memory_budget)?;
    let reverse = build_reverse_table(x, y, q, config.memory_budget)?;

    let mut combine_candidates = 0u64;
    let mut best = ExtLen::NEG_INF;
    let mut arg = None;
    for i in 1..=n {
        for j in 1..=m {
            for r in 1..=t {
                combine_candidates += 1;
                // Witness = constrained prefix ending with p at (i, j) and
                // avoiding q[..r], plus a tail avoiding the rest of q.
                let cand = suffix.get(i, j, s, r) + reverse.get(i + 1, j + 1, r);
                if cand > best {
                    best = cand;
                    arg = Some((i, j, r));
                }
            }
        }
    }

    let outcome = match best.as_finite() {
        None => Outcome::Infeasible,
        Some(length) => {
            let (i, j, r) = arg.expect("finite best has an argmax");
            let head =
                traceback_suffix(&suffix, instance, i, j, s, r).expect("argmax cell is finite");
            let tail = traceback_reverse(&reverse, x, y, q, i + 1, j + 1, r);
            let mut w = head.as_bytes().to_vec();
            w.extend_from_slice(tail.as_bytes());
            debug_assert_eq!(w.len(), length);
            Outcome::feasible(Sequence::from(w), Some(SolutionIndices { i, j, k: s, r }))
        }
    };

    Ok(Solved {
        outcome,
        stats: SolverStats {
            cell_updates: suffix.update_count() + reverse.update_count(),
            suffix_updates: suffix.update_count(),
            forward_updates: 0,
            reverse_updates: reverse.update_count(),
            combine_candidates,
            wall_time: elapsed(start),
        },
    })
}

/// Solve using only three-index tables: maximize, over every compact
/// appearance of `p` anchored at `(i, j)` and every exclusion split `k`, the
/// forward prefix length plus `s` plus the reverse tail length after the
/// appearance.
pub fn solve_cubic(instance: &Instance, config: &SolverConfig) -> Result<Solved, SolverError> {
    let start = now_if(config.collect_stats);
    let (n, m, s, t) = (instance.n(), instance.m(), instance.s(), instance.t());
    let (x, y, p, q) = (instance.x(), instance.y(), instance.p(), instance.q());

    let forward_bytes = table_bytes(&[n + 1, m + 1, t + 1], size_of::<usize>());
    let reverse_bytes = table_bytes(&[n + 1, m + 1, t], size_of::<usize>());
    let total = forward_bytes
        .zip(reverse_bytes)
        .and_then(|(a, b)| a.checked_add(b));
    check_budget(total, config.memory_budget)?;

    let forward = build_forward_table(x, y, q, config.memory_budget)?;
    let reverse = build_reverse_table(x, y, q, config.memory_budget)?;
    let prep = build_prep(instance);

    let mut combine_candidates = 0u64;
    let mut best: Option<(usize, SolutionIndices)> = None;
    for i in 1..=n {
        if prep.lx(i) == 0 {
            continue;
        }
        for j in 1..=m {
            if prep.ly(j) == 0 {
                continue;
            }
            for k in 1..=t {
                combine_candidates += 1;
                // A prefix avoiding q[..k] followed by p verbatim avoids, at
                // worst, q[..r]; a tail avoiding q[r..] completes a witness
                // that avoids q outright.
                let r = k + prep.alpha(k);
                if r > t {
                    // p alone carries the rest of q: no witness through
                    // this split.
                    continue;
                }
                let cand = forward.get(i - 1, j - 1, k)
                    + reverse.get(prep.lx(i) + 1, prep.ly(j) + 1, r)
                    + s;
                if best.is_none_or(|(b, _)| cand > b) {
                    best = Some((cand, SolutionIndices { i, j, k, r }));
                }
            }
        }
    }

    let outcome = match best {
        None => Outcome::Infeasible,
        Some((length, indices)) => {
            let SolutionIndices { i, j, k, r } = indices;
            let head = traceback_forward(&forward, x, y, q, i - 1, j - 1, k);
            let tail = traceback_reverse(&reverse, x, y, q, prep.lx(i) + 1, prep.ly(j) + 1, r);
            let mut w = head.as_bytes().to_vec();
            w.extend_from_slice(p.as_bytes());
            w.extend_from_slice(tail.as_bytes());
            debug_assert_eq!(w.len(), length);
            Outcome::feasible(Sequence::from(w), Some(indices))
        }
    };

    Ok(Solved {
        outcome,
        stats: SolverStats {
            cell_updates: forward.update_count() + reverse.update_count(),
            suffix_updates: 0,
            forward_updates: forward.update_count(),
            reverse_updates: reverse.update_count(),
            combine_candidates,
            wall_time: elapsed(start),
        },
    })
}

/// Dispatch on `config.algorithm`.
pub fn solve(instance: &Instance, config: &SolverConfig) -> Result<Solved, SolverError> {
    match config.algorithm {
        Algorithm::Quartic => solve_quartic(instance, config),
        Algorithm::Cubic => solve_cubic(instance, config),
        Algorithm::Oracle => {
            let start = now_if(config.collect_stats);
            let outcome = brute_force_solve(instance)?;
            Ok(Solved {
                outcome,
                stats: SolverStats {
                    wall_time: elapsed(start),
                    ..SolverStats::default()
                },
            })
        }
    }
}
