//! The suffix-constrained, exclusion-aware LCS table.
//!
//! Cell `(i, j, k, r)` holds the length of a longest common subsequence of
//! `x[1..=i]` and `y[1..=j]` that ends with `p[1..=k]` and does not contain
//! `q[1..=r]` as a subsequence — or the [`ExtLen::NegInf`] sentinel when no
//! such subsequence exists. `k = 0` and `r = 0` switch the respective
//! constraint off.

use std::mem::size_of;

use thiserror::Error;

use crate::capacity::{check_budget, table_bytes, CapacityError};
use crate::seq::{ExtLen, Instance, Sequence};

/// Dense `(n+1) × (m+1) × (s+1) × (t+1)` table in row-major `(i, j, k, r)`
/// order.
#[derive(Debug, Clone)]
pub struct SuffixTable {
    cells: Vec<ExtLen>,
    n: usize,
    m: usize,
    s: usize,
    t: usize,
    update_count: u64,
}

impl SuffixTable {
    pub fn get(&self, i: usize, j: usize, k: usize, r: usize) -> ExtLen {
        self.cells[self.idx(i, j, k, r)]
    }

    fn set(&mut self, i: usize, j: usize, k: usize, r: usize, v: ExtLen) {
        let idx = self.idx(i, j, k, r);
        self.cells[idx] = v;
    }

    fn idx(&self, i: usize, j: usize, k: usize, r: usize) -> usize {
        debug_assert!(i <= self.n && j <= self.m && k <= self.s && r <= self.t);
        ((i * (self.m + 1) + j) * (self.s + 1) + k) * (self.t + 1) + r
    }

    /// `(n, m, s, t)` the table was built for.
    pub fn dims(&self) -> (usize, usize, usize, usize) {
        (self.n, self.m, self.s, self.t)
    }

    /// Number of interior cell writes performed by the build:
    /// exactly `n·m·(s+1)·(t+1)`.
    pub fn update_count(&self) -> u64 {
        self.update_count
    }
}

/// Requested a witness from a sentinel cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("cell ({i}, {j}, {k}, {r}) holds no witness")]
pub struct NoWitnessError {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub r: usize,
}

/// Build the full table bottom-up.
///
/// Boundary: cells with `i = 0` or `j = 0` are `0` in the `k = 0` layers
/// (the empty subsequence satisfies any exclusion constraint) and the
/// sentinel elsewhere (an empty prefix cannot end with a nonempty suffix).
///
/// Interior case order, first match wins:
/// 1. `x_i ≠ y_j`: max of the two one-shorter prefixes.
/// 2. `k ≥ 1` and `x_i = y_j = p_k`: take the match into the suffix. Taking
///    is free when `r = 0` or `x_i ≠ q_r`; it is forbidden when `r = 1` and
///    `x_i = q_1` (it would complete the forbidden string over any prefix);
///    otherwise the taken copy must itself avoid `q[1..=r-1]`, so the cell
///    is the max of taking under the tightened constraint and skipping.
/// 3. `k = 0` and `x_i = y_j`: same three-way split without the suffix
///    bookkeeping.
/// 4. `k ≥ 1` and `x_i = y_j ≠ p_k`: the match cannot end the required
///    suffix, so it is skipped on both sides.
pub fn build_suffix_table(
    instance: &Instance,
    memory_budget: usize,
) -> Result<SuffixTable, CapacityError> {
    let (n, m, s, t) = (instance.n(), instance.m(), instance.s(), instance.t());
    check_budget(
        table_bytes(&[n + 1, m + 1, s + 1, t + 1], size_of::<ExtLen>()),
        memory_budget,
    )?;

    let cells = vec![ExtLen::NegInf; (n + 1) * (m + 1) * (s + 1) * (t + 1)];
    let mut table = SuffixTable {
        cells,
        n,
        m,
        s,
        t,
        update_count: 0,
    };
    for i in 0..=n {
        for r in 0..=t {
            table.set(i, 0, 0, r, ExtLen::ZERO);
        }
    }
    for j in 0..=m {
        for r in 0..=t {
            table.set(0, j, 0, r, ExtLen::ZERO);
        }
    }

    let (x, y, p, q) = (instance.x(), instance.y(), instance.p(), instance.q());
    for i in 1..=n {
        let xi = x.at(i);
        for j in 1..=m {
            let yj = y.at(j);
            for k in 0..=s {
                for r in 0..=t {
                    let value = if xi != yj {
                        table.get(i - 1, j, k, r).max(table.get(i, j - 1, k, r))
                    } else if k >= 1 && xi == p.at(k) {
                        if r == 0 || xi != q.at(r) {
                            table.get(i - 1, j - 1, k - 1, r) + 1
                        } else if r == 1 {
                            table.get(i - 1, j - 1, k, r)
                        } else {
                            (table.get(i - 1, j - 1, k - 1, r - 1) + 1).max(table.get(
                                i - 1,
                                j - 1,
                                k,
                                r,
                            ))
                        }
                    } else if k == 0 {
                        if r == 0 || xi != q.at(r) {
                            table.get(i - 1, j - 1, 0, r) + 1
                        } else if r == 1 {
                            table.get(i - 1, j - 1, 0, r)
                        } else {
                            (table.get(i - 1, j - 1, 0, r - 1) + 1).max(table.get(
                                i - 1,
                                j - 1,
                                0,
                                r,
                            ))
                        }
                    } else {
                        table.get(i - 1, j - 1, k, r)
                    };
                    table.set(i, j, k, r, value);
                    table.update_count += 1;
                }
            }
        }
    }
    Ok(table)
}

/// Reconstruct one witness for cell `(i, j, k, r)`.
///
/// The walk mirrors the build's case order; wherever the build took a max,
/// ties break toward the first-listed alternative, so repeated calls return
/// byte-identical witnesses.
pub fn traceback_suffix(
    table: &SuffixTable,
    instance: &Instance,
    i: usize,
    j: usize,
    k: usize,
    r: usize,
) -> Result<Sequence, NoWitnessError> {
    if !table.get(i, j, k, r).is_finite() {
        return Err(NoWitnessError { i, j, k, r });
    }
    let (x, y, p, q) = (instance.x(), instance.y(), instance.p(), instance.q());
    let (mut i, mut j, mut k, mut r) = (i, j, k, r);
    let mut out = Vec::new();
    while i >= 1 && j >= 1 {
        let xi = x.at(i);
        if xi != y.at(j) {
            if table.get(i - 1, j, k, r) >= table.get(i, j - 1, k, r) {
                i -= 1;
            } else {
                j -= 1;
            }
        } else if k >= 1 && xi == p.at(k) {
            if r == 0 || xi != q.at(r) {
                out.push(xi);
                i -= 1;
                j -= 1;
                k -= 1;
            } else if r == 1 {
                i -= 1;
                j -= 1;
            } else if table.get(i - 1, j - 1, k - 1, r - 1) + 1 >= table.get(i - 1, j - 1, k, r) {
                out.push(xi);
                i -= 1;
                j -= 1;
                k -= 1;
                r -= 1;
            } else {
                i -= 1;
                j -= 1;
            }
        } else if k == 0 {
            if r == 0 || xi != q.at(r) {
                out.push(xi);
                i -= 1;
                j -= 1;
            } else if r == 1 {
                i -= 1;
                j -= 1;
            } else if table.get(i - 1, j - 1, 0, r - 1) + 1 >= table.get(i - 1, j - 1, 0, r) {
                out.push(xi);
                i -= 1;
                j -= 1;
                r -= 1;
            } else {
                i -= 1;
                j -= 1;
            }
        } else {
            i -= 1;
            j -= 1;
        }
    }
    out.reverse();
    Ok(Sequence::from(out))
}
