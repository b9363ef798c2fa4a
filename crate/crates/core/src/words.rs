//! The Fibonacci, Tribonacci (plain and recoded) and Thue–Morse words, with
//! constant-time prefix letter counts.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadratic::floor_n_gamma;

/// Default cap on materialized word length.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "RECTBAL_BUDGET";

/// Upper bound on the number of symbols any generator may materialize.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

impl Budget {
    /// Reads `RECTBAL_BUDGET`, falling back to the default when unset or
    /// unparsable.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().replace('_', "").parse().ok())
            .map(Budget)
            .unwrap_or_default()
    }

    pub fn check(self, requested: u64) -> Result<()> {
        if requested > self.0 {
            Err(Error::BudgetExceeded { requested, cap: self.0 })
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SequenceKind {
    Fibonacci,
    Tribonacci,
    TribonacciRecoded,
    ThueMorse,
}

impl SequenceKind {
    pub const ALL: [SequenceKind; 4] = [
        SequenceKind::Fibonacci,
        SequenceKind::Tribonacci,
        SequenceKind::TribonacciRecoded,
        SequenceKind::ThueMorse,
    ];

    pub fn alphabet(self) -> &'static [u8] {
        match self {
            SequenceKind::Fibonacci | SequenceKind::ThueMorse => &[0, 1],
            SequenceKind::Tribonacci => &[0, 1, 2],
            SequenceKind::TribonacciRecoded => &[0, 2],
        }
    }

    /// Symbol at position `i`, computed without materializing a prefix where
    /// a closed form exists.
    pub fn symbol(self, i: u64) -> u8 {
        match self {
            SequenceKind::Fibonacci => fib_symbol(i),
            SequenceKind::ThueMorse => tm_symbol(i),
            SequenceKind::Tribonacci => trib_symbol(i),
            SequenceKind::TribonacciRecoded => trib2_symbol(i),
        }
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SequenceKind::Fibonacci => "fib",
            SequenceKind::Tribonacci => "trib",
            SequenceKind::TribonacciRecoded => "trib2",
            SequenceKind::ThueMorse => "tm",
        })
    }
}

impl FromStr for SequenceKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "fib" | "fibonacci" => Ok(SequenceKind::Fibonacci),
            "trib" | "tribonacci" => Ok(SequenceKind::Tribonacci),
            "trib2" | "tr2" | "tribonacci-recoded" => Ok(SequenceKind::TribonacciRecoded),
            "tm" | "thue-morse" | "thuemorse" => Ok(SequenceKind::ThueMorse),
            other => Err(Error::InvalidArgument(format!("unknown sequence kind {other:?}"))),
        }
    }
}

/// `f_i = ⌊(i+2)γ⌋ − ⌊(i+1)γ⌋`.
pub fn fib_symbol(i: u64) -> u8 {
    (floor_n_gamma(i + 2) - floor_n_gamma(i + 1)) as u8
}

/// The Sturmian word `a_i = ⌊(i+1)γ⌋ − ⌊iγ⌋`, so `a_0 = 0` and `a_i = f_{i−1}`.
pub fn sturmian_a_symbol(i: u64) -> u8 {
    (floor_n_gamma(i + 1) - floor_n_gamma(i)) as u8
}

/// Parity of the binary digit sum of `i`.
pub fn tm_symbol(i: u64) -> u8 {
    (i.count_ones() & 1) as u8
}

/// Tribonacci symbol read off the Tribonacci representation of `i`: a final
/// `0` (or the empty string) gives 0, a final `01` or lone `1` gives 1, and a
/// final `11` gives 2.
pub fn trib_symbol(i: u64) -> u8 {
    let rep = crate::numeration::trib_encode(i);
    match rep.digits() {
        [] | [.., 0] => 0,
        [.., 1, 1] => 2,
        _ => 1,
    }
}

pub fn trib2_symbol(i: u64) -> u8 {
    recode_trib(trib_symbol(i))
}

fn recode_trib(c: u8) -> u8 {
    if c == 2 {
        2
    } else {
        0
    }
}

fn morphism_image(kind: SequenceKind, c: u8) -> &'static [u8] {
    match (kind, c) {
        (SequenceKind::Fibonacci, 0) => &[0, 1],
        (SequenceKind::Fibonacci, _) => &[0],
        (SequenceKind::Tribonacci, 0) => &[0, 1],
        (SequenceKind::Tribonacci, 1) => &[0, 2],
        (SequenceKind::Tribonacci, _) => &[0],
        (SequenceKind::ThueMorse, 0) => &[0, 1],
        (SequenceKind::ThueMorse, _) => &[1, 0],
        (SequenceKind::TribonacciRecoded, _) => unreachable!("recoded word has no morphism"),
    }
}

/// Prefix of length `len` of the fixed point, generated by the morphism.
pub fn morphic_prefix(kind: SequenceKind, len: usize) -> Vec<u8> {
    let base = match kind {
        SequenceKind::TribonacciRecoded => SequenceKind::Tribonacci,
        k => k,
    };
    let mut w: Vec<u8> = morphism_image(base, 0).to_vec();
    let mut next = 1;
    while w.len() < len {
        let c = w[next];
        w.extend_from_slice(morphism_image(base, c));
        next += 1;
    }
    w.truncate(len);
    if kind == SequenceKind::TribonacciRecoded {
        w.iter_mut().for_each(|c| *c = recode_trib(*c));
    }
    w
}

/// Rank structure for one letter: a bitmap with a running count stored
/// every 64 symbols.
#[derive(Clone, Debug)]
struct LetterRank {
    bits: Vec<u64>,
    before: Vec<u32>,
}

impl LetterRank {
    fn build(word: &[u8], letter: u8) -> Self {
        let blocks = word.len() / 64 + 1;
        let mut bits = vec![0u64; blocks];
        for (pos, &c) in word.iter().enumerate() {
            if c == letter {
                bits[pos / 64] |= 1 << (pos % 64);
            }
        }
        let mut before = Vec::with_capacity(blocks);
        let mut acc = 0u32;
        for b in &bits {
            before.push(acc);
            acc += b.count_ones();
        }
        Self { bits, before }
    }

    #[inline]
    fn rank(&self, k: usize) -> u64 {
        let (block, offset) = (k / 64, k % 64);
        let mask = (1u64 << offset) - 1;
        self.before[block] as u64 + (self.bits[block] & mask).count_ones() as u64
    }
}

/// Prefix letter counts `s_c(k)` for `0 ≤ k ≤ limit`.
#[derive(Clone, Debug)]
pub struct PrefixCounts {
    kind: SequenceKind,
    limit: usize,
    ranks: Vec<(u8, LetterRank)>,
}

impl PrefixCounts {
    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    /// Occurrences of `letter` among the first `k` symbols.
    #[inline]
    pub fn count(&self, letter: u8, k: usize) -> u64 {
        assert!(k <= self.limit, "prefix {k} beyond table limit {}", self.limit);
        self.ranks
            .iter()
            .find(|(c, _)| *c == letter)
            .map_or(0, |(_, r)| r.rank(k))
    }

    /// Occurrences of `letter` in the factor `[start, start + len)`.
    #[inline]
    pub fn factor_count(&self, letter: u8, start: usize, len: usize) -> u64 {
        self.count(letter, start + len) - self.count(letter, start)
    }
}

/// A materialized word prefix with its prefix counts.
#[derive(Clone, Debug)]
pub struct Word {
    kind: SequenceKind,
    symbols: Vec<u8>,
    counts: PrefixCounts,
}

impl Word {
    pub fn generate(kind: SequenceKind, len: usize, budget: Budget) -> Result<Self> {
        budget.check(len as u64)?;
        let symbols = match kind {
            SequenceKind::ThueMorse => (0..len as u64).map(tm_symbol).collect(),
            _ => morphic_prefix(kind, len),
        };
        let ranks = kind
            .alphabet()
            .iter()
            .map(|&c| (c, LetterRank::build(&symbols, c)))
            .collect();
        let counts = PrefixCounts { kind, limit: len, ranks };
        Ok(Self { kind, symbols, counts })
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn counts(&self) -> &PrefixCounts {
        &self.counts
    }
}

/// Prefix counts for the first `limit` symbols of `kind`.
pub fn prefix_counts(kind: SequenceKind, limit: usize, budget: Budget) -> Result<PrefixCounts> {
    Ok(Word::generate(kind, limit, budget)?.counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn fibonacci_prefix() {
        let expect = [0, 1, 0, 0, 1, 0, 1, 0];
        for (i, &c) in expect.iter().enumerate() {
            assert_eq!(fib_symbol(i as u64), c);
        }
        assert_eq!(fib_symbol(1), 1);
        assert_eq!(fib_symbol(12), 1);
    }

    #[test]
    fn fibonacci_generators_agree() {
        let w = morphic_prefix(SequenceKind::Fibonacci, 1_000_000);
        for (i, &c) in w.iter().enumerate() {
            assert_eq!(fib_symbol(i as u64), c, "i = {i}");
        }
    }

    #[test]
    fn sturmian_a_examples() {
        assert_eq!(sturmian_a_symbol(0), 0);
        assert_eq!(sturmian_a_symbol(1), 0);
        assert_eq!(sturmian_a_symbol(3), 0);
        for i in 1..10_000 {
            assert_eq!(sturmian_a_symbol(i), fib_symbol(i - 1));
        }
    }

    #[test]
    fn sturmian_and_fibonacci_share_factors() {
        let a: Vec<u8> = (0..10_000).map(sturmian_a_symbol).collect();
        let f: Vec<u8> = (0..10_000).map(fib_symbol).collect();
        for len in 1..=30 {
            let fa: BTreeSet<&[u8]> = a.windows(len).collect();
            let ff: BTreeSet<&[u8]> = f.windows(len).collect();
            assert_eq!(fa, ff, "length {len}");
            assert_eq!(ff.len(), len + 1, "Sturmian complexity at length {len}");
        }
    }

    #[test]
    fn tribonacci_prefix() {
        let w = morphic_prefix(SequenceKind::Tribonacci, 7);
        assert_eq!(w, vec![0, 1, 0, 2, 0, 1, 0]);
        assert_eq!(trib2_symbol(3), 2);
        assert_eq!(trib2_symbol(1), 0);
        let long = morphic_prefix(SequenceKind::Tribonacci, 100_000);
        for (i, &c) in long.iter().enumerate() {
            assert_eq!(trib_symbol(i as u64), c, "i = {i}");
        }
    }

    #[test]
    fn thue_morse_prefix() {
        let expect = [0, 1, 1, 0, 1, 0, 0, 1];
        for (i, &c) in expect.iter().enumerate() {
            assert_eq!(tm_symbol(i as u64), c);
        }
        let w = morphic_prefix(SequenceKind::ThueMorse, 1 << 16);
        for (i, &c) in w.iter().enumerate() {
            assert_eq!(tm_symbol(i as u64), c);
        }
    }

    #[test]
    fn thue_morse_pairing_identities() {
        for k in 0..500_000u64 {
            assert_eq!(tm_symbol(2 * k) + tm_symbol(2 * k + 1), 1);
        }
        for k in 0..250_000u64 {
            assert_eq!(tm_symbol(4 * k) + tm_symbol(4 * k + 2), 1);
            assert_eq!(tm_symbol(4 * k + 1) + tm_symbol(4 * k + 3), 1);
        }
    }

    #[test]
    fn tribonacci_word_is_two_balanced() {
        let w = Word::generate(SequenceKind::Tribonacci, 100_000, Budget::default()).unwrap();
        let pc = w.counts();
        for len in 1..=500usize {
            for c in 0..3u8 {
                let (mut lo, mut hi) = (u64::MAX, 0);
                for start in 0..=(w.len() - len) {
                    let v = pc.factor_count(c, start, len);
                    lo = lo.min(v);
                    hi = hi.max(v);
                }
                assert!(hi - lo <= 2, "letter {c}, length {len}");
            }
        }
    }

    #[test]
    fn prefix_count_examples() {
        let b = Budget::default();
        let fib = prefix_counts(SequenceKind::Fibonacci, 8, b).unwrap();
        assert_eq!(fib.count(1, 8), 3);
        for kind in SequenceKind::ALL {
            let pc = prefix_counts(kind, 10, b).unwrap();
            for &c in kind.alphabet() {
                assert_eq!(pc.count(c, 0), 0);
            }
        }
        let tr = prefix_counts(SequenceKind::Tribonacci, 7, b).unwrap();
        assert_eq!((tr.count(0, 7), tr.count(1, 7), tr.count(2, 7)), (4, 2, 1));
    }

    #[test]
    fn prefix_counts_match_naive() {
        for kind in SequenceKind::ALL {
            let w = Word::generate(kind, 3000, Budget::default()).unwrap();
            for k in 0..=w.len() {
                let mut total = 0;
                for &c in kind.alphabet() {
                    let naive = w.symbols()[..k].iter().filter(|&&x| x == c).count() as u64;
                    assert_eq!(w.counts().count(c, k), naive);
                    total += naive;
                }
                assert_eq!(total, k as u64);
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let err = prefix_counts(SequenceKind::ThueMorse, 101, Budget(100)).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { requested: 101, cap: 100 });
    }
}
