//! Ground-truth brute-force solvers and a deterministic instance generator
//! for differential testing.
//!
//! Everything here is defined straight from the problem statement with no
//! shared machinery with the DP solvers: answers come from enumerating all
//! `2^n` subsequences of (a slice of) `x`. That blow-up is the point — the
//! oracle is trusted because it is too simple to be wrong — but it caps the
//! instance sizes it can check at [`ORACLE_MAX_N`] symbols.

use std::collections::HashSet;

use thiserror::Error;

use crate::seq::{is_subsequence, is_substring, ExtLen, Instance, Outcome, Sequence};

/// Longest `x` slice the exhaustive enumeration accepts.
pub const ORACLE_MAX_N: usize = 18;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("exhaustive enumeration supports at most {max} symbols, got {len}")]
pub struct SizeError {
    pub len: usize,
    pub max: usize,
}

fn check_len(len: usize) -> Result<(), SizeError> {
    if len > ORACLE_MAX_N {
        Err(SizeError {
            len,
            max: ORACLE_MAX_N,
        })
    } else {
        Ok(())
    }
}

/// Solve an instance by enumerating every subsequence of `x`.
///
/// Returns the maximum-length valid witness; among equals, the
/// lexicographically smallest. The result is deterministic and independent
/// of enumeration order.
pub fn brute_force_solve(instance: &Instance) -> Result<Outcome, SizeError> {
    let x = instance.x().as_bytes();
    let y = instance.y().as_bytes();
    let p = instance.p().as_bytes();
    let q = instance.q().as_bytes();
    check_len(x.len())?;

    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut best: Option<Vec<u8>> = None;
    for mask in 0u32..(1u32 << x.len()) {
        let z = select_mask(x, mask);
        if !seen.insert(z.clone()) {
            continue;
        }
        if !is_subsequence(&z, y) || !is_substring(p, &z) || is_subsequence(q, &z) {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) => z.len() > b.len() || (z.len() == b.len() && z < *b),
        };
        if better {
            best = Some(z);
        }
    }
    Ok(match best {
        None => Outcome::Infeasible,
        Some(w) => Outcome::feasible(Sequence::from(w), None),
    })
}

/// Which DP cell to recompute from the definition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellQuery {
    /// Longest common subsequence of `x[1..=i]`, `y[1..=j]` that ends with
    /// `p[1..=k]` and does not contain `q[1..=r]`; `k = 0` / `r = 0` switch
    /// the respective constraint off.
    Suffix {
        i: usize,
        j: usize,
        k: usize,
        r: usize,
    },
    /// Longest common subsequence of `x[1..=i]`, `y[1..=j]` that does not
    /// contain `q[1..=k]`; `k = 0` switches the constraint off.
    Forward { i: usize, j: usize, k: usize },
    /// Longest common subsequence of `x[i..]`, `y[j..]` that does not
    /// contain `q[k..]`; `i`, `j` may be one past the end.
    Reverse { i: usize, j: usize, k: usize },
}

/// Recompute a single DP cell by exhaustive enumeration.
///
/// Suffix cells may be the sentinel; forward/reverse cells never are, since
/// their exclusion constraints are nonempty or absent and the empty witness
/// always satisfies them.
pub fn brute_force_cell(instance: &Instance, query: CellQuery) -> Result<ExtLen, SizeError> {
    let x = instance.x();
    let y = instance.y();
    let p = instance.p();
    let q = instance.q();
    match query {
        CellQuery::Suffix { i, j, k, r } => best_common_len(x.prefix(i), y.prefix(j), |z| {
            z.ends_with(p.prefix(k)) && (r == 0 || !is_subsequence(q.prefix(r), z))
        }),
        CellQuery::Forward { i, j, k } => best_common_len(x.prefix(i), y.prefix(j), |z| {
            k == 0 || !is_subsequence(q.prefix(k), z)
        }),
        CellQuery::Reverse { i, j, k } => {
            best_common_len(x.suffix_from(i), y.suffix_from(j), |z| {
                !is_subsequence(q.suffix_from(k), z)
            })
        }
    }
}

/// Maximum length over subsequences of `xs` that are also subsequences of
/// `ys` and pass `accept`; the sentinel if none do.
fn best_common_len(
    xs: &[u8],
    ys: &[u8],
    accept: impl Fn(&[u8]) -> bool,
) -> Result<ExtLen, SizeError> {
    check_len(xs.len())?;
    let mut best = ExtLen::NEG_INF;
    for mask in 0u32..(1u32 << xs.len()) {
        let z = select_mask(xs, mask);
        if is_subsequence(&z, ys) && accept(&z) {
            best = best.max(ExtLen::finite(z.len()));
        }
    }
    Ok(best)
}

fn select_mask(xs: &[u8], mask: u32) -> Vec<u8> {
    xs.iter()
        .enumerate()
        .filter(|(idx, _)| mask & (1 << idx) != 0)
        .map(|(_, &c)| c)
        .collect()
}

/// A self-contained 64-bit xorshift* generator.
///
/// Fuzz reproducers are `(seed, index)` pairs, so the generator must stay
/// bit-for-bit stable across releases and platforms; that is why this is
/// spelled out here instead of pulling in an RNG crate whose streams may
/// change. Constants: xorshift triple `(12, 25, 27)` with output multiplier
/// `0x2545F4914F6CDD1D`; streams are seeded through one `splitmix64` step of
/// `seed ^ (stream * 0x9E3779B97F4A7C15)`.
#[derive(Debug, Clone)]
pub struct XorShift64 {
    state: u64,
}

const XORSHIFT_MULTIPLIER: u64 = 0x2545_F491_4F6C_DD1D;
const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(GOLDEN_GAMMA);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl XorShift64 {
    /// Generator for stream `stream` of seed `seed`; `(seed, stream)` fully
    /// determines the output sequence.
    pub fn from_seed_and_stream(seed: u64, stream: u64) -> XorShift64 {
        let mixed = splitmix64(seed ^ stream.wrapping_mul(GOLDEN_GAMMA));
        XorShift64 {
            // xorshift has a single absorbing zero state; dodge it.
            state: if mixed == 0 { GOLDEN_GAMMA } else { mixed },
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut s = self.state;
        s ^= s >> 12;
        s ^= s << 25;
        s ^= s >> 27;
        self.state = s;
        s.wrapping_mul(XORSHIFT_MULTIPLIER)
    }

    /// Uniform draw from `lo..=hi`. Uses a modulo reduction; the bias is
    /// immaterial for the single-digit ranges drawn here.
    pub fn next_range(&mut self, lo: usize, hi: usize) -> usize {
        debug_assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as usize
    }

    /// Uniform draw from `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Knobs for [`gen_instance`]. Lengths are drawn uniformly from `1..=*_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    pub seed: u64,
    /// Upper bound for `x`; capped at [`ORACLE_MAX_N`] so every generated
    /// instance stays checkable by the oracle.
    pub n_max: usize,
    pub m_max: usize,
    pub s_max: usize,
    pub t_max: usize,
    /// Alphabet `{a, b, ...}` of this many letters; valid range `2..=8`.
    pub alphabet_size: u8,
    /// Probability that `p` is planted verbatim into both `x` and `y`.
    pub plant_probability: f64,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            seed: 42,
            n_max: 10,
            m_max: 10,
            s_max: 3,
            t_max: 3,
            alphabet_size: 4,
            plant_probability: 0.5,
        }
    }
}

impl GenParams {
    fn assert_valid(&self) {
        assert!(
            (1..=ORACLE_MAX_N).contains(&self.n_max),
            "n_max must be in 1..={ORACLE_MAX_N}"
        );
        assert!(self.m_max >= 1, "m_max must be at least 1");
        assert!(self.s_max >= 1, "s_max must be at least 1");
        assert!(self.t_max >= 1, "t_max must be at least 1");
        assert!(
            (2..=8).contains(&self.alphabet_size),
            "alphabet_size must be in 2..=8"
        );
        assert!(
            (0.0..=1.0).contains(&self.plant_probability),
            "plant_probability must be in [0, 1]"
        );
    }
}

/// Instance `index` of the stream described by `params`, deterministically.
///
/// Draw order (fixed; part of the reproducibility contract): `n`, `m`, `s`,
/// `t`, the plant coin, `p`, `q`, `x`, `y`, then the two plant positions.
/// When the plant coin fires, `n` and `m` are raised to at least `s` so the
/// contiguous copy of `p` always fits; a planted instance therefore always
/// has a compact appearance of `p` in both `x` and `y`.
///
/// Panics if `params` violates its documented ranges.
pub fn gen_instance(params: &GenParams, index: u64) -> Instance {
    params.assert_valid();
    let mut rng = XorShift64::from_seed_and_stream(params.seed, index);

    let mut n = rng.next_range(1, params.n_max);
    let mut m = rng.next_range(1, params.m_max);
    let s = rng.next_range(1, params.s_max);
    let t = rng.next_range(1, params.t_max);
    let plant = rng.next_f64() < params.plant_probability;
    if plant {
        n = n.max(s);
        m = m.max(s);
    }

    let p = random_word(&mut rng, s, params.alphabet_size);
    let q = random_word(&mut rng, t, params.alphabet_size);
    let mut x = random_word(&mut rng, n, params.alphabet_size);
    let mut y = random_word(&mut rng, m, params.alphabet_size);
    if plant {
        let xp = rng.next_range(0, n - s);
        x[xp..xp + s].copy_from_slice(&p);
        let yp = rng.next_range(0, m - s);
        y[yp..yp + s].copy_from_slice(&p);
    }

    Instance::new(
        Sequence::from(x),
        Sequence::from(y),
        Sequence::from(p),
        Sequence::from(q),
    )
    .expect("generated constraints are nonempty")
}

/// `len` symbols drawn uniformly from the first `alphabet_size` lowercase
/// letters.
pub fn random_word(rng: &mut XorShift64, len: usize, alphabet_size: u8) -> Vec<u8> {
    (0..len)
        .map(|_| b'a' + rng.next_range(0, alphabet_size as usize - 1) as u8)
        .collect()
}
