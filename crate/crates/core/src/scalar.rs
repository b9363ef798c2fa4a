//! Integer coefficient types usable inside [`QuadraticValue`](crate::QuadraticValue).
//!
//! Every coefficient type must be an exact, signed integer. `i64` and `i128`
//! are fast paths for bounded inputs, [`BigInt`] is the unbounded default.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer usable as a coefficient of `a + b√5`.
pub trait Coefficient:
    Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync
{
    /// Largest magnitude for which callers may rely on `a² - 5b²` not
    /// overflowing; `None` when unbounded.
    const SAFE_MAGNITUDE: Option<u128>;

    fn lift(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("i64 fits every coefficient type")
    }
}

impl Coefficient for i64 {
    // 5 * (2^29)^2 < 2^63
    const SAFE_MAGNITUDE: Option<u128> = Some(1 << 29);
}

impl Coefficient for i128 {
    const SAFE_MAGNITUDE: Option<u128> = Some(1 << 61);
}

impl Coefficient for BigInt {
    const SAFE_MAGNITUDE: Option<u128> = None;
}

/// True when coefficients of magnitude up to `bound` are safe in `T`.
pub fn fits<T: Coefficient>(bound: u128) -> bool {
    T::SAFE_MAGNITUDE.is_none_or(|cap| bound <= cap)
}
