//! Exclusion-constrained LCS tables over prefixes (forward) and suffixes
//! (reverse), plus their witness reconstructions.
//!
//! Forward cell `(i, j, k)` holds the length of a longest common subsequence
//! of `x[1..=i]` and `y[1..=j]` that does not contain `q[1..=k]` as a
//! subsequence (`k = 0`: plain LCS). Reverse cell `(i, j, k)` is the mirror
//! over the suffixes `x[i..]`, `y[j..]` with the forbidden *suffix*
//! `q[k..]`; `i` and `j` run one past the end.
//!
//! Every cell is a finite length: the empty subsequence vacuously avoids any
//! nonempty forbidden string, so these tables never need a sentinel.

use std::mem::size_of;

use crate::capacity::{check_budget, table_bytes, CapacityError};
use crate::seq::Sequence;

/// Dense `(n+1) × (m+1) × (t+1)` table in row-major `(i, j, k)` order.
#[derive(Debug, Clone)]
pub struct ForwardTable {
    cells: Vec<usize>,
    n: usize,
    m: usize,
    t: usize,
    update_count: u64,
}

impl ForwardTable {
    pub fn get(&self, i: usize, j: usize, k: usize) -> usize {
        self.cells[self.idx(i, j, k)]
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        debug_assert!(i <= self.n && j <= self.m && k <= self.t);
        (i * (self.m + 1) + j) * (self.t + 1) + k
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.n, self.m, self.t)
    }

    /// Number of interior cell writes: exactly `n·m·(t+1)`.
    pub fn update_count(&self) -> u64 {
        self.update_count
    }
}

/// Build the forward table. Boundary rows (`i = 0` or `j = 0`) are all zero.
///
/// Interior case order, first match wins: on a mismatch take the best
/// one-shorter prefix; on a match that cannot extend the forbidden prefix
/// (`k = 0` or `x_i ≠ q_k`) take it; on a match equal to `q_1` with `k = 1`
/// skip it (taking would complete the forbidden string); otherwise max of
/// taking under the tightened constraint `k-1` and skipping.
pub fn build_forward_table(
    x: &Sequence,
    y: &Sequence,
    q: &Sequence,
    memory_budget: usize,
) -> Result<ForwardTable, CapacityError> {
    assert!(!q.is_empty(), "exclusion constraint must be nonempty");
    let (n, m, t) = (x.len(), y.len(), q.len());
    check_budget(
        table_bytes(&[n + 1, m + 1, t + 1], size_of::<usize>()),
        memory_budget,
    )?;

    let mut table = ForwardTable {
        cells: vec![0; (n + 1) * (m + 1) * (t + 1)],
        n,
        m,
        t,
        update_count: 0,
    };
    for i in 1..=n {
        let xi = x.at(i);
        for j in 1..=m {
            let yj = y.at(j);
            for k in 0..=t {
                let value = if xi != yj {
                    table.get(i - 1, j, k).max(table.get(i, j - 1, k))
                } else if k == 0 || xi != q.at(k) {
                    1 + table.get(i - 1, j - 1, k)
                } else if k == 1 {
                    table.get(i - 1, j - 1, k)
                } else {
                    (1 + table.get(i - 1, j - 1, k - 1)).max(table.get(i - 1, j - 1, k))
                };
                let idx = table.idx(i, j, k);
                table.cells[idx] = value;
                table.update_count += 1;
            }
        }
    }
    Ok(table)
}

/// Reconstruct one witness for forward cell `(i, j, k)`, in left-to-right
/// string order. Mirrors the build's case order; ties at a max break toward
/// the first-listed alternative, so the walk is deterministic.
pub fn traceback_forward(
    table: &ForwardTable,
    x: &Sequence,
    y: &Sequence,
    q: &Sequence,
    i: usize,
    j: usize,
    k: usize,
) -> Sequence {
    let (mut i, mut j, mut k) = (i, j, k);
    let mut out = Vec::new();
    while i >= 1 && j >= 1 {
        let xi = x.at(i);
        if xi != y.at(j) {
            if table.get(i - 1, j, k) >= table.get(i, j - 1, k) {
                i -= 1;
            } else {
                j -= 1;
            }
        } else if k == 0 || xi != q.at(k) {
            out.push(xi);
            i -= 1;
            j -= 1;
        } else if k == 1 {
            i -= 1;
            j -= 1;
        } else if 1 + table.get(i - 1, j - 1, k - 1) >= table.get(i - 1, j - 1, k) {
            out.push(xi);
            i -= 1;
            j -= 1;
            k -= 1;
        } else {
            i -= 1;
            j -= 1;
        }
    }
    out.reverse();
    Sequence::from(out)
}

/// Dense table over `1..=n+1 × 1..=m+1 × 1..=t` in row-major `(i, j, k)`
/// order.
#[derive(Debug, Clone)]
pub struct ReverseTable {
    cells: Vec<usize>,
    n: usize,
    m: usize,
    t: usize,
    update_count: u64,
}

impl ReverseTable {
    pub fn get(&self, i: usize, j: usize, k: usize) -> usize {
        self.cells[self.idx(i, j, k)]
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        debug_assert!(
            (1..=self.n + 1).contains(&i)
                && (1..=self.m + 1).contains(&j)
                && (1..=self.t).contains(&k)
        );
        ((i - 1) * (self.m + 1) + (j - 1)) * self.t + (k - 1)
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.n, self.m, self.t)
    }

    /// Number of interior cell writes: exactly `n·m·t`.
    pub fn update_count(&self) -> u64 {
        self.update_count
    }
}

/// Build the reverse table, walking `i` and `j` downward. Boundary rows
/// (`i = n+1` or `j = m+1`) are all zero.
///
/// Interior case order, first match wins: on a mismatch take the best
/// one-shorter suffix; on a match with `x_i ≠ q_k` take it; on a match equal
/// to `q_k` with `k = t` skip it (taking would complete the forbidden
/// suffix); otherwise max of taking under the shifted constraint `k+1` and
/// skipping.
pub fn build_reverse_table(
    x: &Sequence,
    y: &Sequence,
    q: &Sequence,
    memory_budget: usize,
) -> Result<ReverseTable, CapacityError> {
    assert!(!q.is_empty(), "exclusion constraint must be nonempty");
    let (n, m, t) = (x.len(), y.len(), q.len());
    check_budget(
        table_bytes(&[n + 1, m + 1, t], size_of::<usize>()),
        memory_budget,
    )?;

    let mut table = ReverseTable {
        cells: vec![0; (n + 1) * (m + 1) * t],
        n,
        m,
        t,
        update_count: 0,
    };
    for i in (1..=n).rev() {
        let xi = x.at(i);
        for j in (1..=m).rev() {
            let yj = y.at(j);
            for k in 1..=t {
                let value = if xi != yj {
                    table.get(i + 1, j, k).max(table.get(i, j + 1, k))
                } else if xi != q.at(k) {
                    1 + table.get(i + 1, j + 1, k)
                } else if k == t {
                    table.get(i + 1, j + 1, k)
                } else {
                    (1 + table.get(i + 1, j + 1, k + 1)).max(table.get(i + 1, j + 1, k))
                };
                let idx = table.idx(i, j, k);
                table.cells[idx] = value;
                table.update_count += 1;
            }
        }
    }
    Ok(table)
}

/// Reconstruct one witness for reverse cell `(i, j, k)`. The walk moves
/// forward through the suffixes, so symbols are emitted directly in string
/// order. Ties at a max break toward the first-listed alternative.
pub fn traceback_reverse(
    table: &ReverseTable,
    x: &Sequence,
    y: &Sequence,
    q: &Sequence,
    i: usize,
    j: usize,
    k: usize,
) -> Sequence {
    let (n, m, t) = (x.len(), y.len(), q.len());
    let (mut i, mut j, mut k) = (i, j, k);
    let mut out = Vec::new();
    while i <= n && j <= m {
        let xi = x.at(i);
        if xi != y.at(j) {
            if table.get(i + 1, j, k) >= table.get(i, j + 1, k) {
                i += 1;
            } else {
                j += 1;
            }
        } else if xi != q.at(k) {
            out.push(xi);
            i += 1;
            j += 1;
        } else if k == t {
            i += 1;
            j += 1;
        } else if 1 + table.get(i + 1, j + 1, k + 1) >= table.get(i + 1, j + 1, k) {
            out.push(xi);
            i += 1;
            j += 1;
            k += 1;
        } else {
            i += 1;
            j += 1;
        }
    }
    Sequence::from(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::capacity::DEFAULT_MEMORY_BUDGET;
    use crate::oracle::{brute_force_cell, gen_instance, CellQuery, GenParams};
    use crate::seq::{is_subsequence, ExtLen};

    fn seq(s: &str) -> Sequence {
        Sequence::from(s)
    }

    fn forward(x: &str, y: &str, q: &str) -> ForwardTable {
        build_forward_table(&seq(x), &seq(y), &seq(q), DEFAULT_MEMORY_BUDGET).unwrap()
    }

    fn reverse(x: &str, y: &str, q: &str) -> ReverseTable {
        build_reverse_table(&seq(x), &seq(y), &seq(q), DEFAULT_MEMORY_BUDGET).unwrap()
    }

    #[test]
    fn forward_examples() {
        // Q never matches: the k = 1 layer is plain LCS.
        assert_eq!(forward("abc", "abc", "d").get(3, 3, 1), 3);
        // Excluding "aa" over "aa" allows one 'a'.
        assert_eq!(forward("aa", "aa", "aa").get(2, 2, 2), 1);
        // k = 0 is plain LCS regardless of q.
        assert_eq!(forward("aa", "aa", "aa").get(2, 2, 0), 2);
        // Boundaries are zero.
        let table = forward("ab", "ab", "a");
        for j in 0..=2 {
            assert_eq!(table.get(0, j, 1), 0);
        }
    }

    #[test]
    fn reverse_examples() {
        // Suffix "ab"/"ab" excluding whole "a": only 'b' survives.
        assert_eq!(reverse("ab", "ab", "a").get(1, 1, 1), 1);
        // Excluding the suffix "a" of "aa" forbids every 'a'.
        assert_eq!(reverse("aa", "aa", "aa").get(1, 1, 2), 0);
        // Excluding the whole "aa" allows one 'a'.
        assert_eq!(reverse("aa", "aa", "aa").get(1, 1, 1), 1);
        // One-past-the-end boundaries are zero.
        let table = reverse("ab", "ab", "a");
        for j in 1..=3 {
            assert_eq!(table.get(3, j, 1), 0);
        }
    }

    #[test]
    fn update_counts_closed_form() {
        let f = forward("abcab", "abca", "cab");
        assert_eq!(f.update_count(), 5 * 4 * 4);
        let r = reverse("abcab", "abca", "cab");
        assert_eq!(r.update_count(), 5 * 4 * 3);
    }

    #[test]
    fn capacity_errors() {
        assert!(build_forward_table(&seq("abc"), &seq("abc"), &seq("ab"), 16).is_err());
        assert!(build_reverse_table(&seq("abc"), &seq("abc"), &seq("ab"), 16).is_err());
    }

    #[test]
    fn forward_traceback_examples() {
        let x = seq("aa");
        let table = build_forward_table(&x, &x, &seq("aa"), DEFAULT_MEMORY_BUDGET).unwrap();
        assert_eq!(
            traceback_forward(&table, &x, &x, &seq("aa"), 2, 2, 2),
            seq("a")
        );
        assert_eq!(
            traceback_forward(&table, &x, &x, &seq("aa"), 0, 2, 1),
            seq("")
        );

        let abc = seq("abc");
        let table = build_forward_table(&abc, &abc, &seq("b"), DEFAULT_MEMORY_BUDGET).unwrap();
        assert_eq!(
            traceback_forward(&table, &abc, &abc, &seq("b"), 3, 3, 1),
            seq("ac")
        );
    }

    #[test]
    fn reverse_traceback_examples() {
        let abc = seq("abc");
        let q = seq("b");
        let table = build_reverse_table(&abc, &abc, &q, DEFAULT_MEMORY_BUDGET).unwrap();
        assert_eq!(
            traceback_reverse(&table, &abc, &abc, &q, 1, 1, 1),
            seq("ac")
        );
        assert_eq!(traceback_reverse(&table, &abc, &abc, &q, 4, 4, 1), seq(""));

        let ab = seq("ab");
        let qa = seq("a");
        let table = build_reverse_table(&ab, &ab, &qa, DEFAULT_MEMORY_BUDGET).unwrap();
        assert_eq!(traceback_reverse(&table, &ab, &ab, &qa, 1, 1, 1), seq("b"));
    }

    #[test]
    fn every_cell_matches_the_oracle_on_small_instances() {
        let params = GenParams {
            seed: 21,
            n_max: 6,
            m_max: 6,
            ..GenParams::default()
        };
        for index in 0..30 {
            let instance = gen_instance(&params, index);
            let (x, y, q) = (instance.x(), instance.y(), instance.q());
            let fwd = build_forward_table(x, y, q, DEFAULT_MEMORY_BUDGET).unwrap();
            let rev = build_reverse_table(x, y, q, DEFAULT_MEMORY_BUDGET).unwrap();
            for i in 0..=instance.n() {
                for j in 0..=instance.m() {
                    for k in 0..=instance.t() {
                        let expected =
                            brute_force_cell(&instance, CellQuery::Forward { i, j, k }).unwrap();
                        assert_eq!(
                            ExtLen::finite(fwd.get(i, j, k)),
                            expected,
                            "forward ({i}, {j}, {k}) of {instance:?}"
                        );
                    }
                }
            }
            for i in 1..=instance.n() + 1 {
                for j in 1..=instance.m() + 1 {
                    for k in 1..=instance.t() {
                        let expected =
                            brute_force_cell(&instance, CellQuery::Reverse { i, j, k }).unwrap();
                        assert_eq!(
                            ExtLen::finite(rev.get(i, j, k)),
                            expected,
                            "reverse ({i}, {j}, {k}) of {instance:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn tracebacks_reproduce_cell_lengths() {
        let params = GenParams {
            seed: 22,
            n_max: 7,
            m_max: 7,
            ..GenParams::default()
        };
        for index in 0..40 {
            let instance = gen_instance(&params, index);
            let (x, y, q) = (instance.x(), instance.y(), instance.q());
            let (n, m, t) = (instance.n(), instance.m(), instance.t());
            let fwd = build_forward_table(x, y, q, DEFAULT_MEMORY_BUDGET).unwrap();
            for k in 0..=t {
                let w = traceback_forward(&fwd, x, y, q, n, m, k);
                assert_eq!(w.len(), fwd.get(n, m, k));
                assert!(is_subsequence(w.as_bytes(), x.as_bytes()));
                assert!(is_subsequence(w.as_bytes(), y.as_bytes()));
                if k > 0 {
                    assert!(!is_subsequence(q.prefix(k), w.as_bytes()));
                }
            }
            let rev = build_reverse_table(x, y, q, DEFAULT_MEMORY_BUDGET).unwrap();
            for k in 1..=t {
                let w = traceback_reverse(&rev, x, y, q, 1, 1, k);
                assert_eq!(w.len(), rev.get(1, 1, k));
                assert!(is_subsequence(w.as_bytes(), x.as_bytes()));
                assert!(is_subsequence(w.as_bytes(), y.as_bytes()));
                assert!(!is_subsequence(q.suffix_from(k), w.as_bytes()));
            }
        }
    }

    #[test]
    fn reversal_duality_between_tables() {
        // The reverse table over (x, y, q) equals the forward table over the
        // reversed strings with mirrored indices.
        let params = GenParams {
            seed: 23,
            n_max: 8,
            m_max: 8,
            ..GenParams::default()
        };
        for index in 0..30 {
            let instance = gen_instance(&params, index);
            let (x, y, q) = (instance.x(), instance.y(), instance.q());
            let (n, m, t) = (instance.n(), instance.m(), instance.t());
            let rev = build_reverse_table(x, y, q, DEFAULT_MEMORY_BUDGET).unwrap();
            let fwd_mirror = build_forward_table(
                &x.reversed(),
                &y.reversed(),
                &q.reversed(),
                DEFAULT_MEMORY_BUDGET,
            )
            .unwrap();
            for i in 1..=n + 1 {
                for j in 1..=m + 1 {
                    for k in 1..=t {
                        assert_eq!(
                            rev.get(i, j, k),
                            fwd_mirror.get(n + 1 - i, m + 1 - j, t + 1 - k),
                            "({i}, {j}, {k}) of {instance:?}"
                        );
                    }
                }
            }
        }
    }
}
