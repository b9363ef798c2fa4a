//! Thue–Morse rectangle balance through the signed excess
//! `s(i, m, n) = 2|A(i,m,n)|₁ − mn`.
//!
//! Pairing `t_{2k} + t_{2k+1} = 1` inside every row leaves only the two
//! border columns, and those reduce to half-length factors of `t` again.
//! Hence `|s| ≤ 4`, `s` is O(1) to evaluate, and the set of excess values is
//! symmetric under complementation.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::tm_symbol;

/// Smallest horizon used by [`default_horizon`].
pub const MIN_TM_HORIZON: u64 = 100_000;

/// Hard cap on `|s(i, m, n)|`.
pub const EXCESS_BOUND: i64 = 4;

/// `t_0 + … + t_{n−1}`.
pub fn prefsum(n: u64) -> u64 {
    n / 2 + if n % 2 == 1 { tm_symbol(n - 1) as u64 } else { 0 }
}

/// `t_i + … + t_{i+n−1}`.
pub fn factorsum(i: u64, n: u64) -> u64 {
    prefsum(i + n) - prefsum(i)
}

/// `2|A(i,m,n)|₁ − mn`, summed row by row; O(m).
pub fn excess(i: u64, m: u64, n: u64) -> i64 {
    let ones: u64 = (0..m).map(|k| factorsum(i + k, n)).sum();
    2 * ones as i64 - (m * n) as i64
}

fn ee(i: u64, m: u64, n: u64) -> i64 {
    let a = factorsum(i / 2, m / 2) as i64;
    let b = factorsum((i + n) / 2, m / 2) as i64;
    2 * (b - a)
}

/// Excess for even `i`, `m`, `n`: `2(b − a)` with `a`, `b` the half-length
/// factor sums read off the two border columns.
pub fn excess_even_even(i: u64, m: u64, n: u64) -> Result<i64> {
    for (name, value) in [("i", i), ("m", m), ("n", n)] {
        if value % 2 == 1 {
            return Err(Error::ParityViolation { name, value });
        }
    }
    Ok(ee(i, m, n))
}

/// Excess in O(1) for every parity of `(i, m, n)`: odd `i` peels the first
/// row, odd `n` peels the last column, odd `m` peels the last row.
pub fn excess_parity_reduced(i: u64, m: u64, n: u64) -> i64 {
    if m == 0 || n == 0 {
        return 0;
    }
    if i % 2 == 1 {
        return (2 * factorsum(i, n) as i64 - n as i64) + excess_parity_reduced(i + 1, m - 1, n);
    }
    let col = |m: u64| 2 * factorsum(i + n - 1, m) as i64 - m as i64;
    let m_odd_n_even = |m: u64, n: u64| ee(i, m - 1, n) + 2 * factorsum(i + m - 1, n) as i64 - n as i64;
    match (m % 2, n % 2) {
        (0, 0) => ee(i, m, n),
        (0, _) => ee(i, m, n - 1) + col(m),
        (_, 0) => m_odd_n_even(m, n),
        _ => m_odd_n_even(m, n - 1) + col(m),
    }
}

/// `max(10⁵, 2^(⌈log₂ mn⌉ + 6))`.
pub fn default_horizon(m: u64, n: u64) -> u64 {
    let area = (m * n).max(1);
    let log = 64 - (area - 1).leading_zeros() as u64;
    MIN_TM_HORIZON.max(1u64 << (log + 6).min(62))
}

/// Extremes of the excess over `i < horizon`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcessProfile {
    pub m: u64,
    pub n: u64,
    pub min_s: i64,
    pub max_s: i64,
    pub horizon: u64,
    /// Spread of `|A(i,m,n)|₁`, equal to `(max_s − min_s)/2`.
    pub balance: u64,
    /// Sorted distinct excess values seen.
    pub values: Vec<i64>,
}

impl ExcessProfile {
    pub fn is_symmetric(&self) -> bool {
        self.values.iter().all(|v| self.values.contains(&-v))
    }
}

/// Bitmask of excess values in `[−4, 4]`.
fn value_mask(m: u64, n: u64, lo: u64, hi: u64) -> u16 {
    (lo..hi).fold(0u16, |mask, i| mask | 1 << (excess_parity_reduced(i, m, n) + EXCESS_BOUND))
}

/// Scans `i < horizon` in parallel chunks and merges the value sets.
pub fn excess_profile(m: u64, n: u64, horizon: u64) -> ExcessProfile {
    const CHUNK: u64 = 1 << 16;
    let chunks = horizon.div_ceil(CHUNK);
    let mask = (0..chunks)
        .into_par_iter()
        .map(|c| value_mask(m, n, c * CHUNK, ((c + 1) * CHUNK).min(horizon)))
        .reduce(|| 0, |a, b| a | b);
    let values: Vec<i64> = (0..=2 * EXCESS_BOUND).filter(|b| mask >> b & 1 == 1).map(|b| b - EXCESS_BOUND).collect();
    let (min_s, max_s) = match (values.first(), values.last()) {
        (Some(&lo), Some(&hi)) => (lo, hi),
        _ => (0, 0),
    };
    ExcessProfile { m, n, min_s, max_s, horizon, balance: ((max_s - min_s) / 2) as u64, values }
}

/// Every excess value `c` seen below `horizon` has `−c` below `2·horizon`.
pub fn verify_excess_symmetry(m: u64, n: u64, horizon: u64) -> bool {
    let near = excess_profile(m, n, horizon);
    let far = excess_profile(m, n, 2 * horizon);
    near.values.iter().all(|c| far.values.contains(&-c))
}

/// Balance class of every `(m, n)` with `1 ≤ m, n ≤ max`, row-major.
pub fn balance_class_table(max: u64, horizon: Option<u64>) -> Vec<ExcessProfile> {
    (1..=max)
        .flat_map(|m| (1..=max).map(move |n| (m, n)))
        .map(|(m, n)| excess_profile(m, n, horizon.unwrap_or_else(|| default_horizon(m, n))))
        .collect()
}

/// For `3 ≤ m, n ≤ max_dim`, balance is exactly 3 iff `m` and `n` are both odd.
pub fn verify_odd_odd_class_three(max_dim: u64, horizon: Option<u64>) -> Result<bool> {
    if max_dim < 3 {
        return Err(Error::InvalidArgument("max_dim must be at least 3".into()));
    }
    let ok = (3..=max_dim).flat_map(|m| (3..=max_dim).map(move |n| (m, n))).all(|(m, n)| {
        let p = excess_profile(m, n, horizon.unwrap_or_else(|| default_horizon(m, n)));
        (p.balance == 3) == (m % 2 == 1 && n % 2 == 1)
    });
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{rngs::StdRng, Rng, SeedableRng};

    fn naive(i: u64, m: u64, n: u64) -> i64 {
        let mut ones = 0i64;
        for k in 0..m {
            for l in 0..n {
                ones += tm_symbol(i + k + l) as i64;
            }
        }
        2 * ones - (m * n) as i64
    }

    #[test]
    fn excess_examples() {
        assert_eq!(excess(0, 1, 1), -1);
        assert_eq!(excess(1, 1, 1), 1);
        assert_eq!(excess(5, 0, 3), 0);
        assert_eq!(prefsum(8), 4);
        assert_eq!(prefsum(3), 2);
    }

    #[test]
    fn excess_is_bounded_and_has_parity_of_area() {
        for m in 1..=32 {
            for n in 1..=32 {
                for i in 0..10_000 {
                    let s = excess_parity_reduced(i, m, n);
                    assert!(s.abs() <= EXCESS_BOUND, "({i},{m},{n})");
                    assert_eq!(s.rem_euclid(2), ((m * n) % 2) as i64);
                }
            }
        }
    }

    #[test]
    fn even_even_formula() {
        assert_eq!(excess_even_even(0, 2, 2).unwrap(), excess(0, 2, 2));
        assert_eq!(excess_even_even(4, 4, 8).unwrap(), excess(4, 4, 8));
        assert_eq!(excess_even_even(6, 0, 4).unwrap(), 0);
        assert_eq!(excess_even_even(1, 2, 2), Err(Error::ParityViolation { name: "i", value: 1 }));
        assert_eq!(excess_even_even(2, 3, 2), Err(Error::ParityViolation { name: "m", value: 3 }));
        for i in (0..400).step_by(2) {
            for m in (0..20).step_by(2) {
                for n in (0..20).step_by(2) {
                    assert_eq!(excess_even_even(i, m, n).unwrap(), naive(i, m, n));
                }
            }
        }
    }

    #[test]
    fn parity_reduction_matches_naive() {
        assert_eq!(excess_parity_reduced(0, 2, 3), naive(0, 2, 3));
        assert_eq!(excess_parity_reduced(0, 3, 2), naive(0, 3, 2));
        assert_eq!(excess_parity_reduced(1, 3, 3), naive(1, 3, 3));
        let mut rng = StdRng::seed_from_u64(10);
        for _ in 0..10_000 {
            let (i, m, n) = (rng.gen_range(0..100_000), rng.gen_range(0..40), rng.gen_range(0..40));
            assert_eq!(excess_parity_reduced(i, m, n), naive(i, m, n), "({i},{m},{n})");
            assert_eq!(excess(i, m, n), naive(i, m, n));
        }
    }

    #[test]
    fn profiles() {
        let p = excess_profile(3, 3, 100_000);
        assert_eq!(p.balance, 3);
        assert!(p.is_symmetric());
        assert_eq!(excess_profile(1, 1, 1000).values, vec![-1, 1]);
        assert_eq!(excess_profile(1, 1, 1000).balance, 1);
        assert!([2, 4].contains(&excess_profile(4, 4, 100_000).balance));
    }

    #[test]
    fn horizon_scaling() {
        assert_eq!(default_horizon(3, 3), 100_000);
        assert_eq!(default_horizon(64, 64), 1 << 18);
        assert_eq!(default_horizon(100, 100), 1 << 20);
    }

    #[test]
    fn symmetry_and_classes() {
        assert!(verify_excess_symmetry(3, 3, 10_000));
        assert!(verify_excess_symmetry(2, 5, 10_000));
        assert!(verify_excess_symmetry(1, 1, 100));
        assert!(verify_odd_odd_class_three(5, None).unwrap());
        assert!(verify_odd_odd_class_three(15, None).unwrap());
        for p in balance_class_table(12, Some(50_000)) {
            assert!((1..=4).contains(&p.balance), "{p:?}");
        }
    }
}
