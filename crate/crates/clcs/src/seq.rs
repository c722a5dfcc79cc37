//! Sequence and instance types, extended-length cell values, and the
//! subsequence/substring predicates shared by every solver stage.
//!
//! All positional contracts in this crate are 1-based: position `i` of a
//! [`Sequence`] is valid iff `1 <= i <= len()`, and inclusive ranges `i..=j`
//! are empty when `i > j`.

use std::fmt;
use std::ops::Add;
use thiserror::Error;

/// A string over single-byte symbols.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sequence(Vec<u8>);

impl Sequence {
    pub fn new(symbols: impl Into<Vec<u8>>) -> Self {
        Sequence(symbols.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Symbol at 1-based position `i`. Panics when `i` is 0 or past the end.
    pub fn at(&self, i: usize) -> u8 {
        self.0[i - 1]
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The first `i` symbols (positions `1..=i`).
    pub fn prefix(&self, i: usize) -> &[u8] {
        &self.0[..i]
    }

    /// Symbols from 1-based position `i` through the end. `i = len() + 1`
    /// yields the empty slice, matching the suffix conventions of the
    /// reverse DP tables.
    pub fn suffix_from(&self, i: usize) -> &[u8] {
        &self.0[i - 1..]
    }

    /// Inclusive 1-based slice `i..=j`; empty when `i > j`.
    pub fn range(&self, i: usize, j: usize) -> &[u8] {
        if i > j {
            &[]
        } else {
            &self.0[i - 1..j]
        }
    }

    pub fn reversed(&self) -> Sequence {
        let mut v = self.0.clone();
        v.reverse();
        Sequence(v)
    }
}

impl From<&str> for Sequence {
    fn from(s: &str) -> Self {
        Sequence(s.as_bytes().to_vec())
    }
}

impl From<&[u8]> for Sequence {
    fn from(s: &[u8]) -> Self {
        Sequence(s.to_vec())
    }
}

impl From<Vec<u8>> for Sequence {
    fn from(v: Vec<u8>) -> Self {
        Sequence(v)
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", String::from_utf8_lossy(&self.0))
    }
}

impl fmt::Debug for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sequence({:?})", String::from_utf8_lossy(&self.0))
    }
}

/// A DP cell value: a finite subsequence length, or the sentinel for "no
/// witness exists" used by suffix-constrained cells.
///
/// The sentinel absorbs addition (`NEG_INF + x = NEG_INF`) and sorts below
/// every finite value, so `max` is total.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtLen {
    NegInf,
    Finite(usize),
}

impl ExtLen {
    pub const NEG_INF: ExtLen = ExtLen::NegInf;
    pub const ZERO: ExtLen = ExtLen::Finite(0);

    pub fn finite(v: usize) -> ExtLen {
        ExtLen::Finite(v)
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtLen::Finite(_))
    }

    pub fn as_finite(self) -> Option<usize> {
        match self {
            ExtLen::NegInf => None,
            ExtLen::Finite(v) => Some(v),
        }
    }
}

impl Add for ExtLen {
    type Output = ExtLen;

    fn add(self, rhs: ExtLen) -> ExtLen {
        match (self, rhs) {
            (ExtLen::Finite(a), ExtLen::Finite(b)) => ExtLen::Finite(a + b),
            _ => ExtLen::NegInf,
        }
    }
}

impl Add<usize> for ExtLen {
    type Output = ExtLen;

    fn add(self, rhs: usize) -> ExtLen {
        match self {
            ExtLen::NegInf => ExtLen::NegInf,
            ExtLen::Finite(v) => ExtLen::Finite(v + rhs),
        }
    }
}

impl fmt::Display for ExtLen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtLen::NegInf => write!(f, "-inf"),
            ExtLen::Finite(v) => write!(f, "{v}"),
        }
    }
}

impl fmt::Debug for ExtLen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Why an [`Instance`] could not be built.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error(
        "empty substring-inclusion constraint: the problem degenerates to \
         SEQ-EC-LCS, which this crate does not solve"
    )]
    EmptyInclude,
    #[error(
        "empty subsequence-exclusion constraint: the problem degenerates to \
         STR-IC-LCS, which this crate does not solve"
    )]
    EmptyExclude,
}

/// A problem instance: find a longest common subsequence of `x` and `y`
/// that contains `p` as a contiguous substring and does not contain `q` as
/// a (not necessarily contiguous) subsequence.
///
/// `x` and `y` may be empty; both constraint strings must be nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    x: Sequence,
    y: Sequence,
    p: Sequence,
    q: Sequence,
}

impl Instance {
    pub fn new(
        x: Sequence,
        y: Sequence,
        p: Sequence,
        q: Sequence,
    ) -> Result<Instance, InstanceError> {
        if p.is_empty() {
            return Err(InstanceError::EmptyInclude);
        }
        if q.is_empty() {
            return Err(InstanceError::EmptyExclude);
        }
        Ok(Instance { x, y, p, q })
    }

    pub fn x(&self) -> &Sequence {
        &self.x
    }

    pub fn y(&self) -> &Sequence {
        &self.y
    }

    /// The substring-inclusion constraint.
    pub fn p(&self) -> &Sequence {
        &self.p
    }

    /// The subsequence-exclusion constraint.
    pub fn q(&self) -> &Sequence {
        &self.q
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn m(&self) -> usize {
        self.y.len()
    }

    pub fn s(&self) -> usize {
        self.p.len()
    }

    pub fn t(&self) -> usize {
        self.q.len()
    }

    /// The same instance with the roles of `x` and `y` swapped. The optimum
    /// length is invariant under this swap.
    pub fn swapped(&self) -> Instance {
        Instance {
            x: self.y.clone(),
            y: self.x.clone(),
            p: self.p.clone(),
            q: self.q.clone(),
        }
    }
}

/// The argmax indices a solver committed to when assembling its witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolutionIndices {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub r: usize,
}

/// Result of a solve: either no valid common subsequence exists, or a
/// maximum-length witness together with its length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Infeasible,
    Feasible {
        length: usize,
        witness: Sequence,
        /// Present for the DP solvers; the exhaustive solver has no argmax.
        indices: Option<SolutionIndices>,
    },
}

impl Outcome {
    pub fn feasible(witness: Sequence, indices: Option<SolutionIndices>) -> Outcome {
        Outcome::Feasible {
            length: witness.len(),
            witness,
            indices,
        }
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self, Outcome::Feasible { .. })
    }

    pub fn length(&self) -> Option<usize> {
        match self {
            Outcome::Infeasible => None,
            Outcome::Feasible { length, .. } => Some(*length),
        }
    }

    /// The length as an extended value; the sentinel when infeasible.
    pub fn length_ext(&self) -> ExtLen {
        match self.length() {
            None => ExtLen::NegInf,
            Some(v) => ExtLen::Finite(v),
        }
    }

    pub fn witness(&self) -> Option<&Sequence> {
        match self {
            Outcome::Infeasible => None,
            Outcome::Feasible { witness, .. } => Some(witness),
        }
    }
}

/// Per-constraint verdicts for a candidate witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValidationReport {
    pub is_common_subsequence: bool,
    pub includes_p_substring: bool,
    pub excludes_q_subsequence: bool,
    pub length: usize,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.is_common_subsequence && self.includes_p_substring && self.excludes_q_subsequence
    }
}

/// Whether `needle` occurs in `haystack` as a (not necessarily contiguous)
/// subsequence. The empty needle always does.
pub fn is_subsequence(needle: &[u8], haystack: &[u8]) -> bool {
    let mut it = haystack.iter();
    needle.iter().all(|&c| it.any(|&h| h == c))
}

/// Whether `needle` occurs in `haystack` as a contiguous substring. The
/// empty needle always does.
pub fn is_substring(needle: &[u8], haystack: &[u8]) -> bool {
    if needle.is_empty() {
        return true;
    }
    if needle.len() > haystack.len() {
        return false;
    }
    haystack.windows(needle.len()).any(|w| w == needle)
}

/// The largest `r` such that `q[..r]` is a subsequence of `w`, by one greedy
/// left-to-right scan. Greedy matching is optimal here: any embedding of
/// `q[..r]` can be shifted left onto the greedy positions.
pub fn longest_q_prefix(w: &[u8], q: &[u8]) -> usize {
    let mut r = 0;
    for &c in w {
        if r < q.len() && c == q[r] {
            r += 1;
        }
    }
    r
}

/// Check a candidate witness against every constraint of `instance`.
pub fn validate(instance: &Instance, candidate: &Sequence) -> ValidationReport {
    let c = candidate.as_bytes();
    ValidationReport {
        is_common_subsequence: is_subsequence(c, instance.x().as_bytes())
            && is_subsequence(c, instance.y().as_bytes()),
        includes_p_substring: is_substring(instance.p().as_bytes(), c),
        excludes_q_subsequence: !is_subsequence(instance.q().as_bytes(), c),
        length: candidate.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(s: &str) -> Sequence {
        Sequence::from(s)
    }

    #[test]
    fn subsequence_predicate() {
        assert!(is_subsequence(b"", b"abc"));
        assert!(is_subsequence(b"ac", b"abc"));
        assert!(!is_subsequence(b"ca", b"abc"));
        assert!(is_subsequence(b"abc", b"abc"));
        assert!(!is_subsequence(b"a", b""));
    }

    #[test]
    fn substring_predicate() {
        assert!(is_substring(b"", b"abc"));
        assert!(is_substring(b"bc", b"abc"));
        assert!(!is_substring(b"ac", b"abc"));
        assert!(is_substring(b"abc", b"abc"));
        assert!(!is_substring(b"abcd", b"abc"));
    }

    #[test]
    fn longest_q_prefix_examples() {
        assert_eq!(longest_q_prefix(b"abac", b"cc"), 1);
        assert_eq!(longest_q_prefix(b"", b"ab"), 0);
        assert_eq!(longest_q_prefix(b"ba", b"ab"), 1);
        assert_eq!(longest_q_prefix(b"ab", b"ab"), 2);
    }

    #[test]
    fn validate_reports_each_constraint() {
        let inst = Instance::new(seq("abcab"), seq("abcab"), seq("ca"), seq("bb")).unwrap();

        let good = validate(&inst, &seq("abca"));
        assert!(good.is_common_subsequence);
        assert!(good.includes_p_substring);
        assert!(good.excludes_q_subsequence);
        assert!(good.is_valid());
        assert_eq!(good.length, 4);

        // Misses the inclusion constraint.
        let no_p = validate(&inst, &seq("abb"));
        assert!(no_p.is_common_subsequence);
        assert!(!no_p.includes_p_substring);
        assert!(!no_p.excludes_q_subsequence);
        assert!(!no_p.is_valid());

        // Not a common subsequence at all.
        let not_common = validate(&inst, &seq("zz"));
        assert!(!not_common.is_common_subsequence);
        assert!(!not_common.is_valid());
    }

    #[test]
    fn empty_candidate_validates_against_trivial_constraints() {
        let inst = Instance::new(seq("ab"), seq("ab"), seq("a"), seq("b")).unwrap();
        let report = validate(&inst, &seq(""));
        assert!(report.is_common_subsequence);
        assert!(!report.includes_p_substring);
        assert!(report.excludes_q_subsequence);
        assert_eq!(report.length, 0);
    }

    #[test]
    fn instance_rejects_empty_constraints() {
        assert_eq!(
            Instance::new(seq("ab"), seq("ab"), seq(""), seq("b")),
            Err(InstanceError::EmptyInclude)
        );
        assert_eq!(
            Instance::new(seq("ab"), seq("ab"), seq("a"), seq("")),
            Err(InstanceError::EmptyExclude)
        );
        // Empty inputs are fine; only the constraints must be nonempty.
        assert!(Instance::new(seq(""), seq(""), seq("a"), seq("b")).is_ok());
    }

    #[test]
    fn ext_len_arithmetic_and_order() {
        let inf = ExtLen::NEG_INF;
        assert_eq!(inf + 5usize, inf);
        assert_eq!(inf + ExtLen::finite(3), inf);
        assert_eq!(ExtLen::finite(2) + 3usize, ExtLen::finite(5));
        assert_eq!(ExtLen::finite(2) + ExtLen::finite(3), ExtLen::finite(5));

        assert!(inf < ExtLen::ZERO);
        assert!(ExtLen::ZERO < ExtLen::finite(1));
        assert_eq!(inf.max(ExtLen::finite(0)), ExtLen::finite(0));
        assert_eq!(inf.as_finite(), None);
        assert_eq!(ExtLen::finite(7).as_finite(), Some(7));
    }

    #[test]
    fn sequence_positions_are_one_based() {
        let s = seq("abc");
        assert_eq!(s.at(1), b'a');
        assert_eq!(s.at(3), b'c');
        assert_eq!(s.prefix(2), b"ab");
        assert_eq!(s.prefix(0), b"");
        assert_eq!(s.suffix_from(2), b"bc");
        assert_eq!(s.suffix_from(4), b"");
        assert_eq!(s.range(2, 3), b"bc");
        assert_eq!(s.range(3, 2), b"");
        assert_eq!(s.reversed(), seq("cba"));
    }

    fn arb_word() -> impl Strategy<Value = Vec<u8>> {
        proptest::collection::vec(proptest::sample::select(b"abcd".to_vec()), 0..12)
    }

    proptest! {
        #[test]
        fn substring_implies_subsequence(a in arb_word(), b in arb_word()) {
            if is_substring(&a, &b) {
                prop_assert!(is_subsequence(&a, &b));
            }
        }

        #[test]
        fn longest_q_prefix_is_maximal(w in arb_word(), q in arb_word()) {
            let r = longest_q_prefix(&w, &q);
            prop_assert!(r <= q.len());
            prop_assert!(is_subsequence(&q[..r], &w));
            if r < q.len() {
                prop_assert!(!is_subsequence(&q[..r + 1], &w));
            }
        }

        #[test]
        fn subsequence_closed_under_prefix(a in arb_word(), b in arb_word()) {
            if is_subsequence(&a, &b) && !a.is_empty() {
                prop_assert!(is_subsequence(&a[..a.len() - 1], &b));
            }
        }
    }
}
