//! Circle partition deciding Fibonacci rectangle balance exactly.
//!
//! On the word `a_i = ⌊(i+1)γ⌋ − ⌊iγ⌋` each row of `A(i,m,n)` sums to
//! `⌊(i+k+n)γ⌋ − ⌊(i+k)γ⌋ = ⌊nγ⌋ + [frac((i+k)γ) ≥ β]` with
//! `β = 1 − frac(nγ)`. Writing `x = frac(iγ)`,
//!
//! ```text
//! T(i,m,n) = m⌊nγ⌋ + N(x),   N(x) = #{k < m : frac(x + kγ) ≥ β}.
//! ```
//!
//! `N` is a right-continuous step function of `x` on the circle whose jumps
//! sit at `frac(−jγ)` for `j ∈ [0,m)` (down by one) and `j ∈ [n, n+m)` (up by
//! one). The orbit `frac(iγ)` is dense and meets a breakpoint only at `i = 0`,
//! so the achieved values of `T` are exactly the values of `N` on the arcs.

use std::cmp::Ordering;

use crate::quadratic::{floor_gamma, floor_t_gamma, frac_t_gamma, sign_of_sum, QuadraticValue};
use crate::scalar::Coefficient;

/// The point `frac(tγ)` together with `⌊tγ⌋`, so comparisons need no roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RotationPoint {
    pub t: i64,
    floor: i64,
}

impl RotationPoint {
    pub fn new(t: i64) -> Self {
        Self { t, floor: floor_t_gamma(t) }
    }

    /// Exact comparison of `frac(sγ)` and `frac(tγ)` using coefficients of type `T`.
    #[inline]
    pub fn cmp_with<T: Coefficient>(&self, other: &Self) -> Ordering {
        if self.t == other.t {
            return Ordering::Equal;
        }
        // frac(sγ) − frac(tγ) = (d(3 − √5) − 2Δ⌊·⌋)/2 with d = s − t.
        let d = self.t - other.t;
        let df = self.floor - other.floor;
        let a = T::lift(3) * T::lift(d) - T::lift(2) * T::lift(df);
        let b = T::lift(-d);
        sign_of_sum(&a, &b).cmp(&0)
    }

    pub fn value<T: Coefficient>(&self) -> QuadraticValue<T> {
        frac_t_gamma(self.t)
    }
}

/// `#{k < m : frac((t+k)γ) ≥ frac(−nγ)}`: the counting function at the point
/// `frac(tγ)`, with ties resolved by the right-limit rule.
pub fn count_at<T: Coefficient>(t: i64, m: u64, n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let beta = RotationPoint::new(-(n as i64));
    (0..m as i64)
        .filter(|&k| RotationPoint::new(t + k).cmp_with::<T>(&beta) != Ordering::Less)
        .count() as u64
}

/// Breakpoints of the counting function and its value on each arc.
#[derive(Clone, Debug)]
pub struct CirclePartition<T> {
    m: u64,
    n: u64,
    base: u64,
    points: Vec<RotationPoint>,
    breakpoints: Vec<QuadraticValue<T>>,
    arc_values: Vec<u64>,
}

impl<T: Coefficient> CirclePartition<T> {
    /// Partition for the pair `(m, n)` as given (no symmetry swap).
    pub fn build(m: u64, n: u64) -> Self {
        let base = m * floor_gamma(n);
        if m == 0 {
            return Self { m, n, base, points: vec![], breakpoints: vec![], arc_values: vec![0] };
        }
        let mut events: Vec<(RotationPoint, i64)> = (0..m)
            .map(|j| (RotationPoint::new(-(j as i64)), -1))
            .chain((n..n + m).map(|j| (RotationPoint::new(-(j as i64)), 1)))
            .collect();
        events.sort_by(|a, b| a.0.cmp_with::<T>(&b.0));
        // Merge coincident points (only when n < m, where a down-jump and an
        // up-jump share the same j).
        let mut merged: Vec<(RotationPoint, i64)> = Vec::with_capacity(events.len());
        for (p, d) in events {
            match merged.last_mut() {
                Some(last) if last.0.t == p.t => last.1 += d,
                _ => merged.push((p, d)),
            }
        }
        debug_assert_eq!(merged[0].0.t, 0);
        let mut arc_values = Vec::with_capacity(merged.len());
        let mut current = count_at::<T>(0, m, n) as i64;
        arc_values.push(current as u64);
        for &(_, d) in &merged[1..] {
            current += d;
            debug_assert!(current >= 0 && current <= m as i64);
            arc_values.push(current as u64);
        }
        let points: Vec<RotationPoint> = merged.iter().map(|e| e.0).collect();
        let breakpoints = points.iter().map(|p| p.value()).collect();
        Self { m, n, base, points, breakpoints, arc_values }
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Strictly increasing points of `[0, 1)`.
    pub fn breakpoints(&self) -> &[QuadraticValue<T>] {
        &self.breakpoints
    }

    /// Rotation indices `t` with breakpoint `frac(tγ)`, in circle order.
    pub fn rotation_indices(&self) -> impl Iterator<Item = i64> + '_ {
        self.points.iter().map(|p| p.t)
    }

    /// Value of `N` on `[p_r, p_{r+1})`, the last arc wrapping to 1.
    pub fn arc_values(&self) -> &[u64] {
        &self.arc_values
    }

    /// `m⌊nγ⌋`.
    pub fn base(&self) -> u64 {
        self.base
    }

    /// Evaluates the counting function directly at breakpoint `r`.
    pub fn evaluate_breakpoint(&self, r: usize) -> u64 {
        count_at::<T>(self.points[r].t, self.m, self.n)
    }

    /// Sorted distinct values of `T(i, m, n)` over all `i ≥ 0`.
    pub fn value_set(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.arc_values.iter().map(|a| self.base + a).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}
