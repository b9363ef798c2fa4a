//! 2-balance of Tribonacci word rectangles.
//!
//! `m = 1` rectangles inherit the 2-balance of the word. For `m = 2` the set
//! of good `n` is irregular-looking and is reproduced by scanning. For
//! `m, n ≥ 3` a corner witness shows that no pair is 2-balanced: two
//! positions whose recoded words agree on a block `w` and then continue with
//! `00200` and `00000` give rectangles whose letter-2 counts differ by 3.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fib_balance::BalanceStatus;
use crate::rectangles::{HankelTable, LetterCountVector};
use crate::words::{trib2_symbol, Budget, SequenceKind, Word};

/// Default number of start positions scanned per pair.
pub const DEFAULT_TWO_BALANCE_HORIZON: u64 = 1_000_000;

/// Default prefix length searched for corner witnesses.
pub const DEFAULT_CORNER_SEARCH_LIMIT: u64 = 1_000_000;

/// Tail that follows the shared block at the heavier start.
pub const CORNER_TAIL_HEAVY: [u8; 5] = [0, 0, 2, 0, 0];

/// Tail that follows the shared block at the lighter start.
pub const CORNER_TAIL_LIGHT: [u8; 5] = [0, 0, 0, 0, 0];

/// Extremes of one letter's count over the scanned start positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetterSpread {
    pub letter: u8,
    pub min: u64,
    pub max: u64,
    pub argmin: u64,
    pub argmax: u64,
}

impl LetterSpread {
    fn new(letter: u8, count: u64) -> Self {
        Self { letter, min: count, max: count, argmin: 0, argmax: 0 }
    }

    fn record(&mut self, i: u64, count: u64) {
        if count < self.min {
            self.min = count;
            self.argmin = i;
        }
        if count > self.max {
            self.max = count;
            self.argmax = i;
        }
    }

    pub fn spread(&self) -> u64 {
        self.max - self.min
    }

    pub fn is_two_balanced(&self) -> bool {
        self.spread() <= 2
    }
}

/// Two start positions whose counts of `letter` differ by more than 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetterWitness {
    pub letter: u8,
    pub i: u64,
    pub j: u64,
    pub count_i: u64,
    pub count_j: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoBalanceReport {
    pub m: u64,
    pub n: u64,
    pub horizon: u64,
    /// Start positions actually examined; below `horizon` after an early exit.
    pub scanned: u64,
    pub letters: Vec<LetterSpread>,
    pub status: BalanceStatus,
    pub witness: Option<LetterWitness>,
}

impl TwoBalanceReport {
    /// False only when a definitive witness was found.
    pub fn is_two_balanced(&self) -> bool {
        self.status != BalanceStatus::Unbalanced
    }
}

/// Tribonacci table reused across many scans.
#[derive(Clone, Debug)]
pub struct TwoBalanceScanner {
    table: HankelTable,
}

impl TwoBalanceScanner {
    /// Supports every scan with `horizon + m + n ≤ len`.
    pub fn new(len: usize, budget: Budget) -> Result<Self> {
        Ok(Self { table: HankelTable::for_kind(SequenceKind::Tribonacci, len, budget)? })
    }

    pub fn table(&self) -> &HankelTable {
        &self.table
    }

    /// Scans `i < horizon`, stopping at the first witness.
    pub fn scan(&self, m: u64, n: u64, horizon: u64) -> Result<TwoBalanceReport> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidArgument("m and n must be at least 1".into()));
        }
        let need = horizon + m + n;
        if need > self.table.len() as u64 {
            return Err(Error::BudgetExceeded { requested: need, cap: self.table.len() as u64 });
        }
        let alphabet = SequenceKind::Tribonacci.alphabet();
        let mut letters: Vec<LetterSpread> =
            alphabet.iter().map(|&c| LetterSpread::new(c, self.table.letter_count(c, 0, m, n))).collect();
        let mut scanned = horizon;
        let mut witness = None;
        'scan: for i in 1..horizon {
            for s in letters.iter_mut() {
                s.record(i, self.table.letter_count(s.letter, i, m, n));
                if !s.is_two_balanced() {
                    let (a, b) = (s.argmin.min(s.argmax), s.argmin.max(s.argmax));
                    witness = Some(LetterWitness {
                        letter: s.letter,
                        i: a,
                        j: b,
                        count_i: self.table.letter_count(s.letter, a, m, n),
                        count_j: self.table.letter_count(s.letter, b, m, n),
                    });
                    scanned = i + 1;
                    break 'scan;
                }
            }
        }
        let status = match witness {
            Some(_) => BalanceStatus::Unbalanced,
            None if m.min(n) == 1 => BalanceStatus::Balanced,
            None => BalanceStatus::UnknownUpToHorizon,
        };
        Ok(TwoBalanceReport { m, n, horizon, scanned, letters, status, witness })
    }
}

/// 2-balance scan of the `m × n` Tribonacci rectangles over `i < horizon`.
pub fn two_balance_scan(m: u64, n: u64, horizon: u64, budget: Budget) -> Result<TwoBalanceReport> {
    let len = horizon + m + n;
    budget.check(len)?;
    TwoBalanceScanner::new(len as usize, budget)?.scan(m, n, horizon)
}

/// All `n ≤ limit` whose `2 × n` rectangles show no 2-balance violation for
/// `i < horizon`.
pub fn balanced_2xn_list(limit: u64, horizon: u64, budget: Budget) -> Result<Vec<u64>> {
    if limit == 0 {
        return Ok(Vec::new());
    }
    let len = horizon + limit + 2;
    budget.check(len)?;
    let scanner = TwoBalanceScanner::new(len as usize, budget)?;
    let reports: Vec<TwoBalanceReport> =
        (1..=limit).into_par_iter().map(|n| scanner.scan(2, n, horizon)).collect::<Result<_>>()?;
    Ok(reports.into_iter().filter(|r| r.is_two_balanced()).map(|r| r.n).collect())
}

/// Starts `i`, `j` where the recoded word reads `w00200` and `w00000` with
/// `|w| = p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerWitness {
    pub p: u64,
    pub i: u64,
    pub j: u64,
}

impl CornerWitness {
    /// Checks the defining block conditions against the recoded word.
    pub fn verify(&self) -> bool {
        let p = self.p;
        (0..p).all(|k| trib2_symbol(self.i + k) == trib2_symbol(self.j + k))
            && (0..5).all(|k| trib2_symbol(self.i + p + k as u64) == CORNER_TAIL_HEAVY[k])
            && (0..5).all(|k| trib2_symbol(self.j + p + k as u64) == CORNER_TAIL_LIGHT[k])
    }

    /// Lower-right 3×3 block of the recoded rectangle at `start`, for an
    /// `m × n` shape with `m + n − 6 = p`.
    pub fn corner(start: u64, m: u64, n: u64) -> [[u8; 3]; 3] {
        let mut out = [[0u8; 3]; 3];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                *cell = trib2_symbol(start + (m - 3 + r as u64) + (n - 3 + c as u64));
            }
        }
        out
    }
}

/// Smallest `(i, j)` in lexicographic order forming a corner witness for `p`,
/// searching starts whose 5-symbol tail lies inside the first `search_limit`
/// symbols.
pub fn find_corner_witness(p: u64, search_limit: u64, budget: Budget) -> Result<CornerWitness> {
    budget.check(search_limit)?;
    let word = Word::generate(SequenceKind::TribonacciRecoded, search_limit as usize, budget)?;
    find_corner_witness_in(word.symbols(), p)
        .ok_or(Error::NotFoundWithinLimit { p, limit: search_limit })
}

fn find_corner_witness_in(tr2: &[u8], p: u64) -> Option<CornerWitness> {
    let p_us = p as usize;
    let starts = tr2.len().checked_sub(p_us + 5)? + 1;
    let tail = |s: usize| &tr2[s + p_us..s + p_us + 5];
    let mut lightest: HashMap<&[u8], usize> = HashMap::new();
    for j in 0..starts {
        if tail(j) == CORNER_TAIL_LIGHT {
            lightest.entry(&tr2[j..j + p_us]).or_insert(j);
        }
    }
    (0..starts)
        .filter(|&i| tail(i) == CORNER_TAIL_HEAVY)
        .find_map(|i| lightest.get(&tr2[i..i + p_us]).map(|&j| CornerWitness { p, i: i as u64, j: j as u64 }))
}

/// Certificate that the `m × n` Tribonacci rectangles are not 2-balanced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerCertificate {
    pub p: u64,
    pub i: u64,
    pub j: u64,
    pub m: u64,
    pub n: u64,
    pub counts: [LetterCountVector; 2],
}

impl CornerCertificate {
    pub fn letter2_gap(&self) -> i64 {
        self.counts[0].get(2) as i64 - self.counts[1].get(2) as i64
    }
}

/// Builds the certificate for `m, n ≥ 3` from a witness with `p = m + n − 6`.
pub fn corner_certificate(w: &CornerWitness, m: u64, n: u64, table: &HankelTable) -> Result<CornerCertificate> {
    if m < 3 || n < 3 || m + n - 6 != w.p {
        return Err(Error::InvalidArgument(format!("({m},{n}) does not match p = {}", w.p)));
    }
    Ok(CornerCertificate {
        p: w.p,
        i: w.i,
        j: w.j,
        m,
        n,
        counts: [table.letter_counts(w.i, m, n), table.letter_counts(w.j, m, n)],
    })
}

/// Certifies that no `m × n` pair with `3 ≤ m ≤ n ≤ max_dim` is 2-balanced.
pub fn verify_no_2balance_3plus(max_dim: u64, search_limit: u64, budget: Budget) -> Result<bool> {
    if max_dim < 3 {
        return Err(Error::InvalidArgument("max_dim must be at least 3".into()));
    }
    budget.check(search_limit)?;
    let tr2 = Word::generate(SequenceKind::TribonacciRecoded, search_limit as usize, budget)?;
    let table = HankelTable::for_kind(SequenceKind::Tribonacci, search_limit as usize, budget)?;
    let heavy = [[0, 0, 2], [0, 2, 0], [2, 0, 0]];
    for p in 0..=2 * max_dim - 6 {
        let w = find_corner_witness_in(tr2.symbols(), p)
            .ok_or(Error::NotFoundWithinLimit { p, limit: search_limit })?;
        for m in 3..=max_dim {
            let Some(n) = (p + 6).checked_sub(m).filter(|&n| n >= m && n <= max_dim) else {
                continue;
            };
            let cert = corner_certificate(&w, m, n, &table)?;
            let corners_ok = CornerWitness::corner(w.i, m, n) == heavy
                && CornerWitness::corner(w.j, m, n) == [[0; 3]; 3];
            if cert.letter2_gap() != 3 || !corners_ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::trib_symbol;
    use rand::{rngs::StdRng, Rng, SeedableRng};

    const KNOWN_2XN: [u64; 22] = [1, 2, 3, 4, 7, 8, 9, 10, 11, 14, 15, 22, 23, 24, 27, 28, 33, 34, 35, 46, 47, 48];

    fn naive_count(letter: u8, i: u64, m: u64, n: u64) -> u64 {
        let mut c = 0;
        for k in 0..m {
            for l in 0..n {
                c += (trib_symbol(i + k + l) == letter) as u64;
            }
        }
        c
    }

    #[test]
    fn prefix_sum_counts_match_naive() {
        let table = HankelTable::for_kind(SequenceKind::Tribonacci, 3000, Budget::default()).unwrap();
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..1000 {
            let (i, m, n) = (rng.gen_range(0..2000), rng.gen_range(0..=20), rng.gen_range(0..=20));
            for c in 0..3 {
                assert_eq!(table.letter_count(c, i, m, n), naive_count(c, i, m, n));
            }
        }
    }

    #[test]
    fn single_rows_are_two_balanced() {
        let scanner = TwoBalanceScanner::new(100_300, Budget::default()).unwrap();
        for n in 1..=200 {
            let r = scanner.scan(1, n, 100_000).unwrap();
            assert_eq!(r.status, BalanceStatus::Balanced, "n = {n}");
        }
    }

    #[test]
    fn two_row_examples() {
        let scanner = TwoBalanceScanner::new(1_000_100, Budget::default()).unwrap();
        let bad = scanner.scan(2, 5, 1_000_000).unwrap();
        assert_eq!(bad.status, BalanceStatus::Unbalanced);
        let w = bad.witness.unwrap();
        assert_eq!(w.count_i, naive_count(w.letter, w.i, 2, 5));
        assert_eq!(w.count_j, naive_count(w.letter, w.j, 2, 5));
        assert!(w.count_i.abs_diff(w.count_j) > 2);
        assert!(bad.scanned < bad.horizon);
        let good = scanner.scan(2, 7, 1_000_000).unwrap();
        assert_eq!(good.status, BalanceStatus::UnknownUpToHorizon);
        assert_eq!(good.scanned, 1_000_000);
    }

    #[test]
    fn two_row_list_prefix() {
        assert!(balanced_2xn_list(0, 1000, Budget::default()).unwrap().is_empty());
        assert_eq!(balanced_2xn_list(4, 10_000, Budget::default()).unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(balanced_2xn_list(48, 100_000, Budget::default()).unwrap(), KNOWN_2XN);
    }

    #[test]
    fn corner_witnesses_small_p() {
        for p in 0..=10 {
            let w = find_corner_witness(p, 100_000, Budget::default()).unwrap();
            assert!(w.verify(), "p = {p}");
        }
        assert!(matches!(
            find_corner_witness(40, 30, Budget::default()),
            Err(Error::NotFoundWithinLimit { p: 40, .. })
        ));
    }

    #[test]
    fn corner_matrices_match() {
        let w = find_corner_witness(4, 100_000, Budget::default()).unwrap();
        assert_eq!(CornerWitness::corner(w.i, 5, 5), [[0, 0, 2], [0, 2, 0], [2, 0, 0]]);
        assert_eq!(CornerWitness::corner(w.j, 5, 5), [[0; 3]; 3]);
        let table = HankelTable::for_kind(SequenceKind::Tribonacci, 100_000, Budget::default()).unwrap();
        let cert = corner_certificate(&w, 3, 7, &table).unwrap();
        assert_eq!(cert.letter2_gap(), 3);
        assert_eq!(cert.counts[0].get(2), naive_count(2, w.i, 3, 7));
    }

    #[test]
    fn no_two_balance_from_three() {
        assert!(verify_no_2balance_3plus(3, 100_000, Budget::default()).unwrap());
        assert!(verify_no_2balance_3plus(10, 100_000, Budget::default()).unwrap());
    }
}
