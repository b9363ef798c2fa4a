//! Exact arithmetic in Q(√5) restricted to half-integer coefficients.
//!
//! A [`QuadraticValue`] stores `(a + b√5) / 2` with `a ≡ b (mod 2)`. That
//! ring contains γ = (3 − √5)/2 and φ = (1 + √5)/2 and is closed under
//! addition and multiplication, so every floor and every comparison used by
//! the balance deciders is computed without rounding.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_integer::Roots;

use crate::scalar::Coefficient;

/// The real number `(num_rational + num_surd·√5) / 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticValue<T> {
    num_rational: T,
    num_surd: T,
}

impl<T: Coefficient> QuadraticValue<T> {
    /// Builds `(a + b√5)/2`; `None` unless `a` and `b` have equal parity.
    pub fn new(num_rational: T, num_surd: T) -> Option<Self> {
        if (num_rational.clone() - num_surd.clone()).is_even() {
            Some(Self { num_rational, num_surd })
        } else {
            None
        }
    }

    pub fn from_integer(k: T) -> Self {
        Self { num_rational: k.clone() + k, num_surd: T::zero() }
    }

    pub fn zero() -> Self {
        Self { num_rational: T::zero(), num_surd: T::zero() }
    }

    /// γ = (3 − √5)/2, the slope of the Fibonacci word.
    pub fn gamma() -> Self {
        Self { num_rational: T::lift(3), num_surd: T::lift(-1) }
    }

    /// φ = (1 + √5)/2.
    pub fn phi() -> Self {
        Self { num_rational: T::one(), num_surd: T::one() }
    }

    /// `t·γ` for an integer `t`.
    pub fn gamma_multiple(t: i64) -> Self {
        Self { num_rational: T::lift(3) * T::lift(t), num_surd: T::lift(-t) }
    }

    pub fn num_rational(&self) -> &T {
        &self.num_rational
    }

    pub fn num_surd(&self) -> &T {
        &self.num_surd
    }

    pub fn scale(&self, k: &T) -> Self {
        Self {
            num_rational: self.num_rational.clone() * k.clone(),
            num_surd: self.num_surd.clone() * k.clone(),
        }
    }

    /// Sign of the represented real number: -1, 0 or +1.
    pub fn sign(&self) -> i8 {
        sign_of_sum(&self.num_rational, &self.num_surd)
    }

    /// The unique integer `t` with `t ≤ x < t + 1`.
    pub fn floor_value(&self) -> T {
        let two = T::lift(2);
        let three = T::lift(3);
        // |x| ≤ |a|/2 + 3|b|/2 since √5 < 3.
        let bound = self.num_rational.abs() / two.clone()
            + self.num_surd.abs() * three / two.clone()
            + T::one();
        // Invariant: lo ≤ x < hi.
        let mut lo = -bound.clone();
        let mut hi = bound + T::one();
        while hi.clone() - lo.clone() > T::one() {
            let mid = (lo.clone() + hi.clone()).div_floor(&two);
            if (self.clone() - Self::from_integer(mid.clone())).sign() >= 0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    /// `x − ⌊x⌋`, always in `[0, 1)`.
    pub fn frac_value(&self) -> Self {
        self.clone() - Self::from_integer(self.floor_value())
    }

    pub fn is_zero(&self) -> bool {
        self.num_rational.is_zero() && self.num_surd.is_zero()
    }
}

/// Sign of `a + b√5`.
pub(crate) fn sign_of_sum<T: Coefficient>(a: &T, b: &T) -> i8 {
    let sa = signum(a);
    let sb = signum(b);
    if sa >= 0 && sb >= 0 {
        return if sa == 0 && sb == 0 { 0 } else { 1 };
    }
    if sa <= 0 && sb <= 0 {
        return -1;
    }
    // Opposite signs: compare a² with 5b².
    let lhs = a.clone() * a.clone();
    let rhs = T::lift(5) * b.clone() * b.clone();
    match lhs.cmp(&rhs) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => unreachable!("√5 is irrational"),
    }
}

fn signum<T: Coefficient>(v: &T) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

impl<T: Coefficient> Add for QuadraticValue<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            num_rational: self.num_rational + rhs.num_rational,
            num_surd: self.num_surd + rhs.num_surd,
        }
    }
}

impl<T: Coefficient> Sub for QuadraticValue<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            num_rational: self.num_rational - rhs.num_rational,
            num_surd: self.num_surd - rhs.num_surd,
        }
    }
}

impl<T: Coefficient> Neg for QuadraticValue<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { num_rational: -self.num_rational, num_surd: -self.num_surd }
    }
}

impl<T: Coefficient> Mul for QuadraticValue<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // (a + b√5)(c + d√5)/4 = ((ac + 5bd)/2 + (ad + bc)/2 · √5)/2; both
        // numerators are even because a ≡ b and c ≡ d (mod 2).
        let two = T::lift(2);
        let (a, b, c, d) = (self.num_rational, self.num_surd, rhs.num_rational, rhs.num_surd);
        Self {
            num_rational: (a.clone() * c.clone() + T::lift(5) * b.clone() * d.clone()) / two.clone(),
            num_surd: (a * d + b * c) / two,
        }
    }
}

impl<T: Coefficient> PartialOrd for QuadraticValue<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Coefficient> Ord for QuadraticValue<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).sign().cmp(&0)
    }
}

impl<T: Coefficient> fmt::Display for QuadraticValue<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}√5)/2", self.num_rational, self.num_surd)
    }
}

/// `⌊n√5⌋` computed with an exact integer square root.
fn floor_sqrt5(n: u64) -> u128 {
    let n = n as u128;
    (5 * n * n).sqrt()
}

/// `⌊nφ⌋` via `⌊(n + ⌊n√5⌋)/2⌋`.
pub fn floor_n_phi(n: u64) -> u64 {
    ((n as u128 + floor_sqrt5(n)) / 2) as u64
}

/// `⌊nγ⌋` via `⌊(3n − ⌊n√5⌋ − 1)/2⌋` for `n ≥ 1`.
pub fn floor_n_gamma(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    ((3 * n as u128 - floor_sqrt5(n) - 1) / 2) as u64
}

const FLOOR_TABLE_LEN: usize = 1 << 21;

/// `⌊xγ⌋`, served from a table built once by summing the Fibonacci word
/// (`⌊(x+1)γ⌋ − ⌊xγ⌋ = a_x`), falling back to [`floor_n_gamma`].
#[inline]
pub fn floor_gamma(x: u64) -> u64 {
    static TABLE: OnceLock<Vec<u32>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let word = crate::words::morphic_prefix(crate::words::SequenceKind::Fibonacci, FLOOR_TABLE_LEN);
        let mut t = Vec::with_capacity(FLOOR_TABLE_LEN);
        // a_0 = 0 and a_x = f_{x-1}, so ⌊xγ⌋ = f_0 + … + f_{x-2}.
        let mut acc = 0u32;
        t.extend([0, 0]);
        for &c in &word[..FLOOR_TABLE_LEN - 2] {
            acc += c as u32;
            t.push(acc);
        }
        t
    });
    match table.get(x as usize) {
        Some(&v) => v as u64,
        None => floor_n_gamma(x),
    }
}

/// `⌊tγ⌋` for any integer `t`.
pub fn floor_t_gamma(t: i64) -> i64 {
    if t >= 0 {
        floor_gamma(t as u64) as i64
    } else {
        -(floor_gamma(t.unsigned_abs()) as i64) - 1
    }
}

/// `frac(tγ)` as an exact value.
pub fn frac_t_gamma<T: Coefficient>(t: i64) -> QuadraticValue<T> {
    QuadraticValue::gamma_multiple(t) - QuadraticValue::from_integer(T::lift(floor_t_gamma(t)))
}

/// Compares `frac(sγ)` with `frac(tγ)` exactly.
pub fn cmp_frac_gamma<T: Coefficient>(s: i64, t: i64) -> Ordering {
    if s == t {
        return Ordering::Equal;
    }
    // frac(sγ) − frac(tγ) = (s − t)γ − (⌊sγ⌋ − ⌊tγ⌋)
    let d = s - t;
    let df = floor_t_gamma(s) - floor_t_gamma(t);
    let a = T::lift(3) * T::lift(d) - T::lift(2) * T::lift(df);
    let b = T::lift(-d);
    sign_of_sum(&a, &b).cmp(&0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type Q = QuadraticValue<BigInt>;

    fn int(k: i64) -> Q {
        Q::from_integer(BigInt::from(k))
    }

    fn q(a: i64, b: i64) -> Q {
        Q::new(BigInt::from(a), BigInt::from(b)).unwrap()
    }

    #[test]
    fn addition_examples() {
        assert_eq!(Q::gamma() + Q::phi(), int(2));
        assert_eq!(Q::gamma() + Q::zero(), Q::gamma());
        // 3 − √5
        assert_eq!(Q::gamma() + Q::gamma(), q(6, -2));
    }

    #[test]
    fn sign_examples() {
        assert_eq!(Q::gamma().sign(), 1);
        assert_eq!((Q::gamma() + Q::gamma() - int(1)).sign(), -1);
        assert_eq!(Q::zero().sign(), 0);
        assert_eq!((-Q::phi()).sign(), -1);
    }

    #[test]
    fn floor_examples() {
        assert_eq!(Q::gamma().scale(&BigInt::from(4)).floor_value(), BigInt::from(1));
        assert_eq!(Q::zero().floor_value(), BigInt::from(0));
        assert_eq!(Q::gamma().scale(&BigInt::from(18)).floor_value(), BigInt::from(6));
        assert_eq!((-Q::gamma()).floor_value(), BigInt::from(-1));
        assert_eq!(int(-3).floor_value(), BigInt::from(-3));
    }

    #[test]
    fn frac_examples() {
        let three_gamma = Q::gamma().scale(&BigInt::from(3));
        assert_eq!(three_gamma.frac_value(), three_gamma.clone() - int(1));
        assert_eq!(int(2).frac_value(), Q::zero());
        assert_eq!(Q::gamma().frac_value(), Q::gamma());
    }

    #[test]
    fn floor_n_gamma_examples() {
        assert_eq!(floor_n_gamma(0), 0);
        assert_eq!(floor_n_gamma(4), 1);
        assert_eq!(floor_n_gamma(18), 6);
        assert_eq!(floor_n_phi(0), 0);
        assert_eq!(floor_n_phi(1), 1);
        assert_eq!(floor_n_phi(4), 6);
    }

    #[test]
    fn alpha_identity_and_generic_floor_agree() {
        for n in 1..=100_000u64 {
            assert_eq!(floor_n_gamma(n) + floor_n_phi(n) + 1, 2 * n, "n = {n}");
        }
        for n in (0..=3_000i64).chain([1 << 40, (1 << 40) + 7]) {
            let via_search = Q::gamma_multiple(n).floor_value();
            assert_eq!(via_search, BigInt::from(floor_t_gamma(n)), "n = {n}");
            let via_search = Q::gamma_multiple(-n).floor_value();
            assert_eq!(via_search, BigInt::from(floor_t_gamma(-n)), "n = -{n}");
        }
    }

    #[test]
    fn floor_table_matches_square_root_route() {
        for x in (0..(FLOOR_TABLE_LEN as u64 + 10)).step_by(3) {
            assert_eq!(floor_gamma(x), floor_n_gamma(x), "x = {x}");
        }
    }

    #[test]
    fn product_is_exact() {
        // γ·φ = φ − 1 = 1/φ
        assert_eq!(Q::gamma() * Q::phi(), Q::phi() - int(1));
        assert_eq!(Q::phi() * Q::phi(), Q::phi() + int(1));
    }

    #[test]
    fn new_rejects_mixed_parity() {
        assert!(Q::new(BigInt::from(1), BigInt::from(0)).is_none());
    }

    #[test]
    fn fixed_width_paths_agree_with_bigint() {
        for s in -60..60i64 {
            for t in -60..60i64 {
                let exact = frac_t_gamma::<BigInt>(s).cmp(&frac_t_gamma::<BigInt>(t));
                assert_eq!(cmp_frac_gamma::<i64>(s, t), exact);
                assert_eq!(cmp_frac_gamma::<i128>(s, t), exact);
            }
        }
    }
}
