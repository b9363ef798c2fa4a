//! Closed-form balance criterion on Zeckendorf index lists.
//!
//! With `m ≤ n`, `m = F_{a₁} + … + F_{a_k}` and `n = F_{b₁} + … + F_{b_ℓ}`
//! (indices decreasing, `F_2 = 1`), the pair is balanced iff one of:
//!
//! * (a) `m ∈ {0, 1}`;
//! * (b) `m = F_{a₁}`, `a₁ ∉ {b}`, and for the `b_j > a₁ > b_{j+1}` enclosing
//!   `a₁` from above, `a₁ ≡ b_j (mod 2)`;
//! * (c) `m = F_{a₁}` and `a₁ ∈ {b}`;
//! * (d) `a₁ = b_ℓ` and `b_ℓ ≢ b_{ℓ−1} (mod 2)`;
//! * (e) `a₁ < b_ℓ`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::numeration::ZeckRep;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ZeckCase {
    A,
    B,
    C,
    D,
    E,
}

impl fmt::Display for ZeckCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ZeckCase::A => "a",
            ZeckCase::B => "b",
            ZeckCase::C => "c",
            ZeckCase::D => "d",
            ZeckCase::E => "e",
        })
    }
}

/// First case (in alphabetical order) that accepts the pair, if any.
pub fn zeck_case(m: u64, n: u64) -> Option<ZeckCase> {
    let (m, n) = if m <= n { (m, n) } else { (n, m) };
    if m <= 1 {
        return Some(ZeckCase::A);
    }
    let a = ZeckRep::encode(m).indices();
    let b = ZeckRep::encode(n).indices();
    let a1 = a[0];
    let single = a.len() == 1;
    let b_last = *b.last().unwrap();
    if single && !b.contains(&a1) {
        // The nearest b_j above a₁; m ≤ n guarantees b₁ > a₁ here.
        if let Some(&bj) = b.iter().rev().find(|&&x| x > a1) {
            if bj % 2 == a1 % 2 {
                return Some(ZeckCase::B);
            }
        }
    }
    if single && b.contains(&a1) {
        return Some(ZeckCase::C);
    }
    if b.len() >= 2 && a1 == b_last && b[b.len() - 2] % 2 != b_last % 2 {
        return Some(ZeckCase::D);
    }
    if a1 < b_last {
        return Some(ZeckCase::E);
    }
    None
}

/// True iff some case of the criterion accepts `(m, n)`.
pub fn zeck_characterization(m: u64, n: u64) -> bool {
    zeck_case(m, n).is_some()
}
