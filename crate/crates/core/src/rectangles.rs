//! Hankel blocks `A(i, m, n)` with entries `a_{i+k+ℓ}` and their letter counts.
//!
//! [`HankelTable`] answers every count query in O(1) from second-order prefix
//! sums: the number of `c` in `A(i,m,n)` is
//! `Σ_{k<m} s_c(i+k+n) − s_c(i+k)`, and summing `s_c` once more telescopes it.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::quadratic::floor_gamma;
use crate::words::{Budget, PrefixCounts, SequenceKind, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RectangleQuery {
    pub i: u64,
    pub m: u64,
    pub n: u64,
    pub kind: SequenceKind,
}

impl RectangleQuery {
    pub fn new(kind: SequenceKind, i: u64, m: u64, n: u64) -> Self {
        Self { i, m, n, kind }
    }

    /// Length of the word prefix the rectangle reads, i.e. one past the index
    /// of its lower-right entry.
    pub fn span(&self) -> u64 {
        if self.m == 0 || self.n == 0 {
            0
        } else {
            self.i + self.m + self.n - 1
        }
    }

    pub fn transposed(&self) -> Self {
        Self { m: self.n, n: self.m, ..*self }
    }
}

/// `|A(i,m,n)|_c` for every letter of the alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetterCountVector {
    pub counts: Vec<(u8, u64)>,
}

impl LetterCountVector {
    pub fn get(&self, letter: u8) -> u64 {
        self.counts.iter().find(|(c, _)| *c == letter).map_or(0, |(_, v)| *v)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().map(|(_, v)| v).sum()
    }

    /// Numeric sum of the entries.
    pub fn weighted_sum(&self) -> u64 {
        self.counts.iter().map(|(c, v)| *c as u64 * v).sum()
    }
}

/// Second-order prefix sums of a materialized word.
#[derive(Clone, Debug)]
pub struct HankelTable {
    kind: SequenceKind,
    len: usize,
    sums: Vec<(u8, Vec<u64>)>,
}

impl HankelTable {
    pub fn new(word: &Word) -> Self {
        let len = word.len();
        let counts = word.counts();
        let sums = word
            .kind()
            .alphabet()
            .iter()
            .map(|&c| {
                let mut ss = Vec::with_capacity(len + 2);
                let mut acc = 0u64;
                ss.push(0);
                for x in 0..=len {
                    acc += counts.count(c, x);
                    ss.push(acc);
                }
                (c, ss)
            })
            .collect();
        Self { kind: word.kind(), len, sums }
    }

    /// Table able to answer every query whose rectangle ends before `len`.
    pub fn for_kind(kind: SequenceKind, len: usize, budget: Budget) -> Result<Self> {
        Ok(Self::new(&Word::generate(kind, len, budget)?))
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    /// Number of word symbols backing the table.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn letter_count(&self, letter: u8, i: u64, m: u64, n: u64) -> u64 {
        if m == 0 || n == 0 {
            return 0;
        }
        assert!(
            i + m + n - 1 <= self.len as u64,
            "rectangle ({i},{m},{n}) exceeds table length {}",
            self.len
        );
        let Some((_, ss)) = self.sums.iter().find(|(c, _)| *c == letter) else {
            return 0;
        };
        let (i, m, n) = (i as usize, m as usize, n as usize);
        (ss[i + m + n] + ss[i]) - (ss[i + n] + ss[i + m])
    }

    pub fn letter_counts(&self, i: u64, m: u64, n: u64) -> LetterCountVector {
        LetterCountVector {
            counts: self
                .kind
                .alphabet()
                .iter()
                .map(|&c| (c, self.letter_count(c, i, m, n)))
                .collect(),
        }
    }

    /// `T(i,m,n)`, the numeric sum of all entries.
    #[inline]
    pub fn sum(&self, i: u64, m: u64, n: u64) -> u64 {
        self.kind
            .alphabet()
            .iter()
            .filter(|&&c| c != 0)
            .map(|&c| c as u64 * self.letter_count(c, i, m, n))
            .sum()
    }
}

/// Row-by-row count using first-order prefix counts only; O(m).
pub fn letter_count_by_rows(counts: &PrefixCounts, letter: u8, i: u64, m: u64, n: u64) -> u64 {
    (0..m)
        .map(|k| counts.factor_count(letter, (i + k) as usize, n as usize))
        .sum()
}

fn table_for(q: &RectangleQuery, budget: Budget) -> Result<HankelTable> {
    HankelTable::for_kind(q.kind, q.span().max(q.transposed().span()) as usize, budget)
}

/// `T(i,m,n)` for the query's word.
pub fn rect_sum(q: &RectangleQuery, budget: Budget) -> Result<u64> {
    Ok(table_for(q, budget)?.sum(q.i, q.m, q.n))
}

pub fn rect_letter_counts(q: &RectangleQuery, budget: Budget) -> Result<LetterCountVector> {
    Ok(table_for(q, budget)?.letter_counts(q.i, q.m, q.n))
}

/// True iff `A(i,m,n)` and `A(i,n,m)` have the same letter counts.
pub fn rect_transpose_check(q: &RectangleQuery, budget: Budget) -> Result<bool> {
    let table = table_for(q, budget)?;
    Ok(table.letter_counts(q.i, q.m, q.n) == table.letter_counts(q.i, q.n, q.m))
}

/// `Δ(i,m,n) = T(i+1,m,n) − T(i,m,n)` on the Sturmian word `a = 0f`, from the
/// floor form `(⌊(i+m+n)γ⌋ − ⌊(i+n)γ⌋) − (⌊(i+m)γ⌋ − ⌊iγ⌋)`.
pub fn delta(i: u64, m: u64, n: u64) -> i64 {
    let f = |x: u64| floor_gamma(x) as i64;
    (f(i + m + n) - f(i + n)) - (f(i + m) - f(i))
}
