//! Balance of word rectangles built from the Fibonacci, Tribonacci and
//! Thue–Morse words.
//!
//! The exact machinery works in `Q(√5)` through [`QuadraticValue`], generic
//! over its integer coefficient type. The aliases [`Quadratic`],
//! [`Quadratic64`] and [`Quadratic128`] fix the common choices.

pub mod dfa;
pub mod error;
pub mod fib_balance;
pub mod numeration;
pub mod quadratic;
pub mod rectangles;
pub mod scalar;
pub mod tm_balance;
pub mod trib_balance;
pub mod words;

pub use error::{Error, Result};
pub use fib_balance::{
    distinct_value_count, diverse_identities_check, exact_balance, delta_scan, zeck_balance,
    zeck_characterization, BalanceStatus, BalanceTable, BalanceVerdict, Method, Witness,
};
pub use numeration::{FibIndexList, NegaBinRep, PairSymbol, TribRep, ZeckRep};
pub use quadratic::QuadraticValue;
pub use rectangles::{HankelTable, LetterCountVector, RectangleQuery};
pub use scalar::Coefficient;
pub use words::{Budget, SequenceKind, Word};

/// Exact value in `Q(√5)` with arbitrary-precision coefficients.
pub type Quadratic = QuadraticValue<num_bigint::BigInt>;
/// Exact value in `Q(√5)` with `i64` coefficients.
pub type Quadratic64 = QuadraticValue<i64>;
/// Exact value in `Q(√5)` with `i128` coefficients.
pub type Quadratic128 = QuadraticValue<i128>;
