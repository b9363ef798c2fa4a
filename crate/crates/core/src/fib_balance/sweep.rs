//! Grid sweeps over `(m, n)`.
//!
//! All breakpoints `frac(−jγ)` with `j < limit` are sorted once. For a fixed
//! row `m` the jump array over that global order is kept in a segment tree
//! holding (sum, min prefix, max prefix); moving from `n` to `n + 1` changes
//! two jumps, so each pair costs O(log limit) instead of a fresh sort.

use rayon::prelude::*;

use super::circle::RotationPoint;
use crate::quadratic::floor_gamma;

/// Circle order of `frac(−jγ)` for `0 ≤ j < len`.
#[derive(Clone, Debug)]
pub struct RotationOrder {
    rank: Vec<u32>,
}

impl RotationOrder {
    pub fn new(len: usize) -> Self {
        let mut points: Vec<RotationPoint> = (0..len as i64).map(|j| RotationPoint::new(-j)).collect();
        points.sort_by(|a, b| a.cmp_with::<i64>(b));
        let mut rank = vec![0u32; len];
        for (r, p) in points.iter().enumerate() {
            rank[(-p.t) as usize] = r as u32;
        }
        Self { rank }
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn rank(&self, j: u64) -> usize {
        self.rank[j as usize] as usize
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct Node {
    sum: i32,
    min: i32,
    max: i32,
}

impl Node {
    fn leaf(v: i32) -> Self {
        Self { sum: v, min: v, max: v }
    }

    fn join(l: Node, r: Node) -> Node {
        Node {
            sum: l.sum + r.sum,
            min: l.min.min(l.sum + r.min),
            max: l.max.max(l.sum + r.max),
        }
    }
}

struct PrefixTree {
    size: usize,
    nodes: Vec<Node>,
}

impl PrefixTree {
    fn new(values: &[i32]) -> Self {
        let size = values.len().next_power_of_two();
        let mut nodes = vec![Node::default(); 2 * size];
        for (k, &v) in values.iter().enumerate() {
            nodes[size + k] = Node::leaf(v);
        }
        for k in (1..size).rev() {
            nodes[k] = Node::join(nodes[2 * k], nodes[2 * k + 1]);
        }
        Self { size, nodes }
    }

    fn add(&mut self, pos: usize, delta: i32) {
        let mut k = self.size + pos;
        let v = self.nodes[k].sum + delta;
        self.nodes[k] = Node::leaf(v);
        k /= 2;
        while k >= 1 {
            self.nodes[k] = Node::join(self.nodes[2 * k], self.nodes[2 * k + 1]);
            k /= 2;
        }
    }

    fn root(&self) -> Node {
        self.nodes[1]
    }
}

/// Extreme values of `T(i, m, n)` over all `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ValueRange {
    pub min: u64,
    pub max: u64,
}

impl ValueRange {
    pub fn distinct(&self) -> u64 {
        self.max - self.min + 1
    }

    pub fn is_balanced(&self) -> bool {
        self.max - self.min <= 1
    }
}

/// Sweeps rows of the `(m, n)` grid with `m + n ≤ limit`.
#[derive(Clone, Debug)]
pub struct BalanceSweep {
    order: RotationOrder,
    /// `G(x) = Σ_{k<x} ⌊kγ⌋`
    floor_sums: Vec<u64>,
}

impl BalanceSweep {
    pub fn new(limit: u64) -> Self {
        let len = limit as usize + 1;
        let mut floor_sums = Vec::with_capacity(len + 1);
        let mut acc = 0u64;
        floor_sums.push(0);
        for k in 0..len as u64 {
            acc += floor_gamma(k);
            floor_sums.push(acc);
        }
        Self { order: RotationOrder::new(len), floor_sums }
    }

    /// Largest supported `m + n`.
    pub fn limit(&self) -> u64 {
        self.order.len() as u64 - 1
    }

    /// `T(0, m, n)` on the word `a`.
    fn t_at_zero(&self, m: u64, n: u64) -> u64 {
        let g = |x: u64| self.floor_sums[x as usize];
        (g(n + m) - g(n)) - g(m)
    }

    /// Calls `visit(n, range)` for every `n` in `n_lo..=n_hi`, in order.
    pub fn sweep_row(&self, m: u64, n_lo: u64, n_hi: u64, mut visit: impl FnMut(u64, ValueRange)) {
        assert!(m + n_hi <= self.limit(), "pair ({m},{n_hi}) beyond sweep limit {}", self.limit());
        if n_lo > n_hi {
            return;
        }
        if m == 0 {
            for n in n_lo..=n_hi {
                visit(n, ValueRange { min: 0, max: 0 });
            }
            return;
        }
        let mut jumps = vec![0i32; self.order.len()];
        for j in 0..m {
            jumps[self.order.rank(j)] -= 1;
        }
        for j in n_lo..n_lo + m {
            jumps[self.order.rank(j)] += 1;
        }
        let mut tree = PrefixTree::new(&jumps);
        for n in n_lo..=n_hi {
            let root = tree.root();
            // Rank 0 is j = 0, whose prefix is the walk value at i = 0.
            let at_zero = jumps_prefix_at_zero(m, n);
            let t0 = self.t_at_zero(m, n) as i64;
            let min = (t0 + (root.min - at_zero) as i64) as u64;
            let max = (t0 + (root.max - at_zero) as i64) as u64;
            visit(n, ValueRange { min, max });
            if n < n_hi {
                tree.add(self.order.rank(n), -1);
                tree.add(self.order.rank(n + m), 1);
            }
        }
    }

    /// Value ranges for a single row, `n ∈ n_lo..=n_hi`.
    pub fn row(&self, m: u64, n_lo: u64, n_hi: u64) -> Vec<ValueRange> {
        let mut out = Vec::with_capacity((n_hi + 1).saturating_sub(n_lo) as usize);
        self.sweep_row(m, n_lo, n_hi, |_, r| out.push(r));
        out
    }
}

/// Jump recorded at rank 0 (the point 0, j = 0) for the pair `(m, n)`, m ≥ 1.
fn jumps_prefix_at_zero(m: u64, n: u64) -> i32 {
    let up = n == 0 && m > 0;
    -1 + up as i32
}

/// Value ranges for every pair `0 ≤ m ≤ m_max`, `0 ≤ n ≤ n_max`.
#[derive(Clone, Debug)]
pub struct BalanceTable {
    m_max: u64,
    n_max: u64,
    min: Vec<u64>,
    width: Vec<u32>,
}

impl BalanceTable {
    pub fn compute(m_max: u64, n_max: u64) -> Self {
        let sweep = BalanceSweep::new(m_max + n_max);
        let rows: Vec<Vec<ValueRange>> = (0..=m_max)
            .into_par_iter()
            .map(|m| sweep.row(m, 0, n_max))
            .collect();
        let mut min = Vec::with_capacity(((m_max + 1) * (n_max + 1)) as usize);
        let mut width = Vec::with_capacity(min.capacity());
        for r in rows.iter().flatten() {
            min.push(r.min);
            width.push((r.max - r.min) as u32);
        }
        Self { m_max, n_max, min, width }
    }

    /// Square table over `0 ≤ m, n ≤ max`.
    pub fn square(max: u64) -> Self {
        Self::compute(max, max)
    }

    pub fn m_max(&self) -> u64 {
        self.m_max
    }

    pub fn n_max(&self) -> u64 {
        self.n_max
    }

    fn index(&self, m: u64, n: u64) -> usize {
        assert!(m <= self.m_max && n <= self.n_max, "({m},{n}) outside table");
        (m * (self.n_max + 1) + n) as usize
    }

    pub fn range(&self, m: u64, n: u64) -> ValueRange {
        let k = self.index(m, n);
        ValueRange { min: self.min[k], max: self.min[k] + self.width[k] as u64 }
    }

    pub fn is_balanced(&self, m: u64, n: u64) -> bool {
        self.width[self.index(m, n)] <= 1
    }

    pub fn distinct(&self, m: u64, n: u64) -> u64 {
        self.width[self.index(m, n)] as u64 + 1
    }
}
