//! Preprocessing for the cubic solver: compact appearances of `p` and the
//! `q`-into-`p` overlap table.
//!
//! A *compact appearance* of `p` in `s` starting at `i` is the greedy
//! (leftmost) embedding of `p` as a subsequence of `s[i..]` anchored at
//! `s_i = p_1`; `compact_end` returns the position matching the final
//! symbol of `p`. Greedy is optimal: any embedding anchored at `i` ends at
//! or after the greedy one, so a witness using some appearance of `p`
//! anchored at `i` can always be re-embedded compactly.
//!
//! The overlap value `alpha(k)` is the longest prefix of `q[k..]` that
//! embeds in `p` as a subsequence: after a witness prefix has matched
//! `q[1..=k-1]` at worst, inserting `p` verbatim advances the forbidden
//! string by at most `alpha(k)` more symbols.

use crate::seq::Instance;

/// Greedy compact-appearance and overlap tables for one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrepTables {
    lx: Vec<usize>,
    ly: Vec<usize>,
    alpha: Vec<usize>,
}

impl PrepTables {
    /// End position of the compact appearance of `p` in `x` starting at
    /// `i`, or 0 when none exists.
    pub fn lx(&self, i: usize) -> usize {
        self.lx[i - 1]
    }

    /// End position of the compact appearance of `p` in `y` starting at
    /// `j`, or 0 when none exists.
    pub fn ly(&self, j: usize) -> usize {
        self.ly[j - 1]
    }

    /// Longest prefix of `q[k..]` embeddable in `p`, for `k` in `1..=t`.
    pub fn alpha(&self, k: usize) -> usize {
        self.alpha[k - 1]
    }
}

/// End position of the greedy embedding of `p` into `s` anchored at `i`
/// (`s_i` must equal `p_1`), or 0 when `p` does not embed there. For a
/// one-symbol `p` this is `i` itself.
pub fn compact_end(s: &crate::seq::Sequence, i: usize, p: &crate::seq::Sequence) -> usize {
    if s.at(i) != p.at(1) {
        return 0;
    }
    let mut a = i + 1;
    let mut b = 2;
    while a <= s.len() && b <= p.len() {
        if s.at(a) == p.at(b) {
            b += 1;
        }
        a += 1;
    }
    if b > p.len() {
        a - 1
    } else {
        0
    }
}

/// Build all three tables for `instance`.
pub fn build_prep(instance: &Instance) -> PrepTables {
    let (x, y, p, q) = (instance.x(), instance.y(), instance.p(), instance.q());
    let lx = (1..=x.len()).map(|i| compact_end(x, i, p)).collect();
    let ly = (1..=y.len()).map(|j| compact_end(y, j, p)).collect();
    let alpha = (1..=q.len())
        .map(|k| {
            // Greedy longest-prefix embedding of q[k..] into p.
            let mut a = k;
            let mut b = 1;
            let mut r = 0;
            while a <= q.len() && b <= p.len() {
                if q.at(a) == p.at(b) {
                    a += 1;
                    r += 1;
                }
                b += 1;
            }
            r
        })
        .collect();
    PrepTables { lx, ly, alpha }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{gen_instance, GenParams};
    use crate::seq::{is_subsequence, Sequence};

    fn seq(s: &str) -> Sequence {
        Sequence::from(s)
    }

    fn inst(x: &str, y: &str, p: &str, q: &str) -> Instance {
        Instance::new(seq(x), seq(y), seq(p), seq(q)).unwrap()
    }

    #[test]
    fn compact_end_examples() {
        let s = seq("aabab");
        let p = seq("ab");
        assert_eq!(compact_end(&s, 1, &p), 3);
        assert_eq!(compact_end(&s, 2, &p), 3);
        assert_eq!(compact_end(&s, 3, &p), 0); // anchor is 'b', not p_1
        assert_eq!(compact_end(&s, 4, &p), 5);
        assert_eq!(compact_end(&s, 5, &p), 0);
        // Single-symbol pattern: the appearance is the anchor itself.
        assert_eq!(compact_end(&s, 2, &seq("a")), 2);
        // Repeated pattern symbols must consume distinct positions.
        assert_eq!(compact_end(&seq("abb"), 1, &seq("abb")), 3);
        assert_eq!(compact_end(&seq("ab"), 1, &seq("abb")), 0);
    }

    #[test]
    fn alpha_examples() {
        let prep = build_prep(&inst("a", "a", "abc", "bca"));
        assert_eq!((prep.alpha(1), prep.alpha(2), prep.alpha(3)), (2, 1, 1));
        let prep = build_prep(&inst("a", "a", "a", "bb"));
        assert_eq!((prep.alpha(1), prep.alpha(2)), (0, 0));
        let prep = build_prep(&inst("a", "a", "abc", "ac"));
        assert_eq!(prep.alpha(1), 2);
    }

    #[test]
    fn lx_tables_index_per_position() {
        let prep = build_prep(&inst("aabab", "ab", "ab", "c"));
        assert_eq!(
            (1..=5).map(|i| prep.lx(i)).collect::<Vec<_>>(),
            vec![3, 3, 0, 5, 0]
        );
        assert_eq!((1..=2).map(|j| prep.ly(j)).collect::<Vec<_>>(), vec![2, 0]);
    }

    #[test]
    fn compact_appearance_is_minimal_and_valid() {
        let params = GenParams {
            seed: 31,
            n_max: 12,
            m_max: 12,
            s_max: 4,
            ..GenParams::default()
        };
        for index in 0..200 {
            let instance = gen_instance(&params, index);
            let (x, p) = (instance.x(), instance.p());
            let prep = build_prep(&instance);
            for i in 1..=x.len() {
                let end = prep.lx(i);
                if end == 0 {
                    // No appearance anchored here: either the anchor symbol
                    // differs or p does not embed in the suffix.
                    assert!(
                        x.at(i) != p.at(1) || !is_subsequence(p.as_bytes(), x.suffix_from(i)),
                        "index {index}, i = {i}, {instance:?}"
                    );
                    continue;
                }
                assert!(end >= i + p.len() - 1);
                assert_eq!(x.at(i), p.at(1));
                assert_eq!(x.at(end), p.at(p.len()));
                // p embeds in x[i..=end] but not in any shorter range, and
                // the suffix of the embedding is as early as possible.
                assert!(is_subsequence(p.as_bytes(), x.range(i, end)));
                if p.len() > 1 {
                    assert!(!is_subsequence(p.as_bytes(), x.range(i, end - 1)));
                }
            }
        }
    }

    #[test]
    fn alpha_is_greedy_optimal_and_bounded() {
        let params = GenParams {
            seed: 32,
            n_max: 4,
            m_max: 4,
            s_max: 4,
            t_max: 4,
            ..GenParams::default()
        };
        for index in 0..200 {
            let instance = gen_instance(&params, index);
            let (p, q) = (instance.p(), instance.q());
            let t = q.len();
            let prep = build_prep(&instance);
            for k in 1..=t {
                let a = prep.alpha(k);
                assert!(a <= p.len().min(t - k + 1));
                assert!(is_subsequence(q.range(k, k + a - 1), p.as_bytes()));
                if k + a <= t {
                    assert!(!is_subsequence(q.range(k, k + a), p.as_bytes()));
                }
            }
            // k + alpha(k) is non-decreasing in k: dropping the first symbol
            // of an embedded block keeps the rest embedded.
            for k in 1..t {
                assert!(k + prep.alpha(k) <= k + 1 + prep.alpha(k + 1));
            }
        }
    }
}
