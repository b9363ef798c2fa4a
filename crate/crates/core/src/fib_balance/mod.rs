//! Balance of Fibonacci word rectangles.
//!
//! Three independent deciders are provided:
//!
//! * [`exact_balance`]: the circle partition of [`circle`], a true decision
//!   procedure carrying the full value set of `T(i, m, n)`;
//! * [`delta_scan`]: streams `Δ(i, m, n)` and reports a block
//!   `±1, 0, …, 0, ±1` (a semi-decision: it can only certify imbalance);
//! * [`zeck_characterization`]: the closed-form criterion on the Zeckendorf
//!   index lists of `m` and `n`.
//!
//! Balance is analysed on the word `a = 0f` (`a_i = ⌊(i+1)γ⌋ − ⌊iγ⌋`), which
//! has the same factors as `f`, so both indexings give the same verdicts.

pub mod circle;
pub mod sweep;
mod zeck;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeration::fibonacci;
use crate::quadratic::floor_gamma;
use crate::rectangles::{delta, HankelTable};
use crate::scalar::{fits, Coefficient};
use crate::words::{Budget, SequenceKind};

pub use circle::{CirclePartition, RotationPoint};
pub use sweep::{BalanceSweep, BalanceTable, RotationOrder, ValueRange};
pub use zeck::{zeck_case, zeck_characterization, ZeckCase};

/// Default horizon for [`delta_scan`].
pub const DEFAULT_SCAN_HORIZON: u64 = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    Scan,
    Zeck,
    Sweep,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exact => "exact",
            Method::Scan => "scan",
            Method::Zeck => "zeck",
            Method::Sweep => "sweep",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BalanceStatus {
    Balanced,
    Unbalanced,
    UnknownUpToHorizon,
}

impl fmt::Display for BalanceStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BalanceStatus::Balanced => "balanced",
            BalanceStatus::Unbalanced => "unbalanced",
            BalanceStatus::UnknownUpToHorizon => "unknown-up-to-horizon",
        })
    }
}

/// Two a-indexed positions whose rectangle sums differ by at least 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub i: u64,
    pub j: u64,
    pub t_i: u64,
    pub t_j: u64,
}

impl Witness {
    /// Recomputes both sums from the word and checks the gap.
    pub fn verify(&self, m: u64, n: u64) -> bool {
        let (a, b) = (t_direct(self.i, m, n), t_direct(self.j, m, n));
        a == self.t_i && b == self.t_j && a.abs_diff(b) >= 2
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.i, self.j, self.t_i, self.t_j)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalanceVerdict {
    pub m: u64,
    pub n: u64,
    pub method: Method,
    pub status: BalanceStatus,
    pub witness: Option<Witness>,
    pub horizon: Option<u64>,
    /// Sorted distinct values of `T(i, m, n)`; only the exact method knows it.
    pub values: Option<Vec<u64>>,
}

impl BalanceVerdict {
    pub fn is_balanced(&self) -> bool {
        self.status == BalanceStatus::Balanced
    }

    pub fn is_unbalanced(&self) -> bool {
        self.status == BalanceStatus::Unbalanced
    }
}

/// `T(i, m, n)` on the word `a`, summing rows through floors; O(m).
pub fn t_direct(i: u64, m: u64, n: u64) -> u64 {
    (0..m).map(|k| floor_gamma(i + k + n) - floor_gamma(i + k)).sum()
}

/// `T(i, m, n) = m⌊nγ⌋ + #{k < m : frac((i+k)γ) ≥ 1 − frac(nγ)}`.
pub fn t_counting_form(i: u64, m: u64, n: u64) -> u64 {
    if m == 0 {
        return 0;
    }
    if n == 0 {
        return 0;
    }
    let beta = RotationPoint::new(-(n as i64));
    let hits = (0..m)
        .filter(|&k| {
            let p = RotationPoint::new((i + k) as i64);
            let ord = p.cmp_with::<i128>(&beta);
            // frac((i+k)γ) = frac(−nγ) would need i + k = −n.
            assert_ne!(ord, Ordering::Equal, "breakpoint hit at i = {i}");
            ord == Ordering::Greater
        })
        .count() as u64;
    m * floor_gamma(n) + hits
}

/// Exact decision with coefficients of type `T`.
pub fn exact_balance_with<T: Coefficient>(m: u64, n: u64) -> BalanceVerdict {
    let (lo, hi) = if m <= n { (m, n) } else { (n, m) };
    let part = CirclePartition::<T>::build(lo, hi);
    let values = part.value_set();
    let balanced = values.len() <= 2;
    let witness = if balanced { None } else { find_witness(lo, hi, values[0], *values.last().unwrap()) };
    BalanceVerdict {
        m,
        n,
        method: Method::Exact,
        status: if balanced { BalanceStatus::Balanced } else { BalanceStatus::Unbalanced },
        witness,
        horizon: None,
        values: Some(values),
    }
}

/// Exact decision via the circle partition, picking the narrowest safe
/// coefficient type.
pub fn exact_balance(m: u64, n: u64) -> BalanceVerdict {
    // Coefficients stay below 4(m + n) + 8 in magnitude.
    let bound = 4 * (m as u128 + n as u128) + 8;
    if fits::<i64>(bound) {
        exact_balance_with::<i64>(m, n)
    } else if fits::<i128>(bound) {
        exact_balance_with::<i128>(m, n)
    } else {
        exact_balance_with::<num_bigint::BigInt>(m, n)
    }
}

/// Walks `T(i)` forward until both extremes have been seen.
fn find_witness(m: u64, n: u64, min: u64, max: u64) -> Option<Witness> {
    let cap = 64 * (m + n) + 1024;
    let mut t = t_direct(0, m, n);
    let (mut at_min, mut at_max) = (None, None);
    for i in 0..cap {
        if t == min && at_min.is_none() {
            at_min = Some(i);
        }
        if t == max && at_max.is_none() {
            at_max = Some(i);
        }
        if let (Some(a), Some(b)) = (at_min, at_max) {
            let (i, j) = (a.min(b), a.max(b));
            return Some(Witness { i, j, t_i: t_direct(i, m, n), t_j: t_direct(j, m, n) });
        }
        t = (t as i64 + delta(i, m, n)) as u64;
    }
    None
}

/// Looks for a block `a, 0, …, 0, a` (`a = ±1`) in `Δ(i, m, n)` for
/// `i < horizon`. Finding one at `i₀ < i₁` gives `T(i₁+1) = T(i₀) + 2a`.
pub fn delta_scan(m: u64, n: u64, horizon: u64) -> BalanceVerdict {
    let mut last: Option<(u64, i64)> = None;
    for i in 0..horizon {
        let d = delta(i, m, n);
        if d == 0 {
            continue;
        }
        if let Some((i0, d0)) = last {
            if d0 == d {
                let j = i + 1;
                let witness = Witness { i: i0, j, t_i: t_direct(i0, m, n), t_j: t_direct(j, m, n) };
                return BalanceVerdict {
                    m,
                    n,
                    method: Method::Scan,
                    status: BalanceStatus::Unbalanced,
                    witness: Some(witness),
                    horizon: Some(horizon),
                    values: None,
                };
            }
        }
        last = Some((i, d));
    }
    BalanceVerdict {
        m,
        n,
        method: Method::Scan,
        status: BalanceStatus::UnknownUpToHorizon,
        witness: None,
        horizon: Some(horizon),
        values: None,
    }
}

/// Verdict from the closed-form Zeckendorf criterion.
pub fn zeck_balance(m: u64, n: u64) -> BalanceVerdict {
    BalanceVerdict {
        m,
        n,
        method: Method::Zeck,
        status: if zeck_characterization(m, n) { BalanceStatus::Balanced } else { BalanceStatus::Unbalanced },
        witness: None,
        horizon: None,
        values: None,
    }
}

/// Number of distinct values of `T(i, m, n)` over all `i`.
pub fn distinct_value_count(m: u64, n: u64) -> u64 {
    exact_balance(m, n).values.map_or(0, |v| v.len() as u64)
}

/// One side of the diverse-rectangle identities, checked on `f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    /// f-indexed start of the larger rectangle.
    pub i: u64,
    pub j: u64,
    pub side: u64,
    pub t_i: u64,
    pub t_j: u64,
    pub expected: i64,
}

impl IdentityCheck {
    pub fn difference(&self) -> i64 {
        self.t_i as i64 - self.t_j as i64
    }

    pub fn holds(&self) -> bool {
        self.difference() == self.expected
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiverseReport {
    pub k: u64,
    /// `T((F_{6k−1}−1)/4, s, s) − T((F_{6k+2}−1)/4, s, s) = 2k`, `s = F_{6k}/2`.
    pub even: IdentityCheck,
    /// `T((F_{6k+5}−1)/4, s, s) − T((F_{6k+2}−1)/4, s, s) = 2k + 1`, `s = F_{6k+3}/2`.
    pub odd: IdentityCheck,
}

impl DiverseReport {
    pub fn holds(&self) -> bool {
        self.even.holds() && self.odd.holds()
    }
}

/// Checks both diverse-rectangle identities for `k ≥ 1` by direct summation
/// over the f-indexed Fibonacci word, cross-checked against the counting form.
pub fn diverse_identities_check(k: u64, budget: Budget) -> Result<DiverseReport> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let k_us = k as usize;
    if 6 * k_us + 5 >= crate::numeration::fibonacci_table().len() {
        return Err(Error::BudgetExceeded { requested: u64::MAX, cap: budget.0 });
    }
    let quarter = |idx: usize| (fibonacci(idx) - 1) / 4;
    let even = (quarter(6 * k_us - 1), quarter(6 * k_us + 2), fibonacci(6 * k_us) / 2, 2 * k as i64);
    let odd = (quarter(6 * k_us + 5), quarter(6 * k_us + 2), fibonacci(6 * k_us + 3) / 2, 2 * k as i64 + 1);
    let need = [even, odd].iter().map(|&(i, j, s, _)| i.max(j) + 2 * s).max().unwrap();
    budget.check(need)?;
    let table = HankelTable::for_kind(SequenceKind::Fibonacci, need as usize, budget)?;
    let check = |(i, j, side, expected): (u64, u64, u64, i64)| {
        let t_i = table.sum(i, side, side);
        let t_j = table.sum(j, side, side);
        // T_f(i) = T_a(i + 1)
        debug_assert_eq!(t_i, t_counting_form(i + 1, side, side));
        IdentityCheck { i, j, side, t_i, t_j, expected }
    };
    Ok(DiverseReport { k, even: check(even), odd: check(odd) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{rngs::StdRng, Rng, SeedableRng};

    fn brute_values(m: u64, n: u64, horizon: u64) -> Vec<u64> {
        let mut v: Vec<u64> = (0..horizon).map(|i| t_direct(i, m, n)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    #[test]
    fn counting_form_examples() {
        assert_eq!(t_counting_form(2, 4, 4), 7);
        assert_eq!(t_counting_form(5, 0, 4), 0);
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..10_000 {
            let (i, m, n) = (rng.gen_range(0..5000), rng.gen_range(0..60), rng.gen_range(0..60));
            assert_eq!(t_counting_form(i, m, n), t_direct(i, m, n), "({i},{m},{n})");
        }
    }

    #[test]
    fn exact_examples() {
        assert!(exact_balance(4, 3).is_balanced());
        assert!(exact_balance(4, 18).is_balanced());
        let v = exact_balance(4, 4);
        assert!(v.is_unbalanced());
        assert_eq!(v.values.as_deref(), Some(&[5, 6, 7][..]));
        assert!(v.witness.unwrap().verify(4, 4));
        assert!(exact_balance(0, 9).is_balanced());
        assert_eq!(exact_balance(0, 9).values, Some(vec![0]));
    }

    #[test]
    fn exact_value_sets_match_brute_force() {
        for m in 0..30 {
            for n in 0..30 {
                let exact = exact_balance(m, n).values.unwrap();
                assert_eq!(exact, brute_values(m, n, 3000), "({m},{n})");
            }
        }
    }

    #[test]
    fn exact_is_symmetric() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..1000 {
            let (m, n) = (rng.gen_range(0..400), rng.gen_range(0..400));
            assert_eq!(exact_balance(m, n).status, exact_balance(n, m).status);
            assert_eq!(exact_balance(m, n).values, exact_balance(n, m).values);
        }
    }

    #[test]
    fn coefficient_routes_agree() {
        for (m, n) in [(4, 4), (17, 17), (72, 72), (100, 233), (13, 40)] {
            let small = exact_balance_with::<i64>(m, n);
            let big = exact_balance_with::<num_bigint::BigInt>(m, n);
            assert_eq!(small.values, big.values);
        }
    }

    #[test]
    fn unbalanced_verdicts_carry_witnesses() {
        for m in 0..60 {
            for n in 0..60 {
                let v = exact_balance(m, n);
                if v.is_unbalanced() {
                    assert!(v.witness.expect("witness").verify(m, n), "({m},{n})");
                }
            }
        }
    }

    #[test]
    fn scan_examples() {
        let v = delta_scan(4, 4, 1000);
        assert!(v.is_unbalanced());
        assert!(v.witness.unwrap().verify(4, 4));
        assert_eq!(delta_scan(4, 3, 100_000).status, BalanceStatus::UnknownUpToHorizon);
        assert_eq!(delta_scan(1, 1, 10).status, BalanceStatus::UnknownUpToHorizon);
    }

    #[test]
    fn distinct_counts() {
        assert_eq!(distinct_value_count(4, 4), 3);
        assert_eq!(distinct_value_count(1, 1), 2);
        for k in 1..=7usize {
            let s = fibonacci(3 * k) / 2;
            assert!(distinct_value_count(s, s) > k as u64, "k = {k}");
        }
    }

    #[test]
    fn diverse_identities_small_k() {
        let r = diverse_identities_check(1, Budget::default()).unwrap();
        assert_eq!((r.even.i, r.even.j, r.even.side), (1, 5, 4));
        assert_eq!((r.even.t_i, r.even.t_j), (7, 5));
        assert_eq!((r.odd.i, r.odd.j, r.odd.side), (22, 5, 17));
        assert_eq!(r.odd.difference(), 3);
        assert!(r.holds());
        let r2 = diverse_identities_check(2, Budget::default()).unwrap();
        assert_eq!(r2.even.side, 72);
        assert_eq!(r2.even.difference(), 4);
        assert!(matches!(diverse_identities_check(3, Budget(1000)), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn sweep_matches_exact() {
        let table = BalanceTable::square(80);
        for m in 0..=80 {
            for n in 0..=80 {
                let exact = exact_balance(m, n).values.unwrap();
                let r = table.range(m, n);
                assert_eq!((r.min, r.max), (exact[0], *exact.last().unwrap()), "({m},{n})");
                assert_eq!(r.distinct(), exact.len() as u64);
            }
        }
    }

    #[test]
    fn row_sweep_from_arbitrary_start() {
        let sweep = BalanceSweep::new(400);
        for m in [0, 1, 5, 40, 100] {
            let row = sweep.row(m, 37, 250);
            for (off, r) in row.iter().enumerate() {
                let n = 37 + off as u64;
                let exact = exact_balance(m, n).values.unwrap();
                assert_eq!((r.min, r.max), (exact[0], *exact.last().unwrap()), "({m},{n})");
            }
        }
    }

    #[test]
    fn including_position_zero_never_changes_a_verdict() {
        // Quantifying from i = 1 instead gives the same value set.
        for m in 0..=200 {
            for n in m..=200 {
                let t0 = t_direct(0, m, n);
                let cap = 4 * (m + n) + 64;
                let mut t = t0;
                let mut seen = false;
                for i in 0..cap {
                    t = (t as i64 + delta(i, m, n)) as u64;
                    if t == t0 {
                        seen = true;
                        break;
                    }
                }
                assert!(seen, "({m},{n})");
            }
        }
    }

    #[test]
    fn zeck_criterion_matches_sweep() {
        let table = BalanceTable::square(300);
        for m in 0..=300 {
            for n in m..=300 {
                assert_eq!(zeck_characterization(m, n), table.is_balanced(m, n), "({m},{n})");
            }
        }
    }
}
