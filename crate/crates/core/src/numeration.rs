//! Zeckendorf, Tribonacci and base-(−2) numeration.
//!
//! Digit strings are most-significant first over `{0, 1}`. Zero is the empty
//! string. Fibonacci indices follow `F_0 = 0, F_1 = F_2 = 1, F_3 = 2`, and the
//! last Zeckendorf digit has weight `F_2`.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `F_0 ..= F_93`, every Fibonacci number that fits in a `u64`.
pub fn fibonacci_table() -> &'static [u64] {
    static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = vec![0u64, 1];
        while let Some(next) = t[t.len() - 1].checked_add(t[t.len() - 2]) {
            t.push(next);
        }
        t
    })
}

/// `F_k` with `F_0 = 0`, `F_1 = F_2 = 1`.
pub fn fibonacci(k: usize) -> u64 {
    fibonacci_table()[k]
}

/// Tribonacci weights `1, 2, 4, 7, 13, 24, …` used by the Tribonacci system.
pub fn tribonacci_weights() -> &'static [u64] {
    static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = vec![1u64, 2, 4];
        loop {
            let l = t.len();
            match t[l - 1].checked_add(t[l - 2]).and_then(|s| s.checked_add(t[l - 3])) {
                Some(next) => t.push(next),
                None => break t,
            }
        }
    })
}

fn render(digits: &[u8]) -> String {
    digits.iter().map(|&d| char::from(b'0' + d)).collect()
}

fn parse_bits(system: &'static str, s: &str) -> Result<Vec<u8>> {
    s.bytes()
        .map(|c| match c {
            b'0' => Ok(0),
            b'1' => Ok(1),
            _ => Err(Error::InvalidRepresentation {
                system,
                digits: s.to_string(),
                reason: "digits must be 0 or 1",
            }),
        })
        .collect()
}

fn strip_leading_zeros(digits: &[u8]) -> Vec<u8> {
    let first = digits.iter().position(|&d| d == 1).unwrap_or(digits.len());
    digits[first..].to_vec()
}

/// Canonical Zeckendorf representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ZeckRep {
    digits: Vec<u8>,
    value: u64,
}

impl ZeckRep {
    /// Greedy encoding: the largest Fibonacci number not exceeding the
    /// remainder is always taken.
    pub fn encode(n: u64) -> Self {
        if n == 0 {
            return Self { digits: Vec::new(), value: 0 };
        }
        let fib = fibonacci_table();
        // Largest index k ≥ 2 with F_k ≤ n.
        let top = (2..fib.len()).take_while(|&k| fib[k] <= n).last().unwrap();
        let mut rest = n;
        let digits = (2..=top)
            .rev()
            .map(|k| {
                if fib[k] <= rest {
                    rest -= fib[k];
                    1
                } else {
                    0
                }
            })
            .collect();
        Self { digits, value: n }
    }

    /// Decodes a digit string; leading zeros are accepted and dropped.
    pub fn decode(digits: &[u8]) -> Result<Self> {
        let err = |reason| Error::InvalidRepresentation {
            system: "Zeckendorf",
            digits: render(digits),
            reason,
        };
        if digits.iter().any(|&d| d > 1) {
            return Err(err("digits must be 0 or 1"));
        }
        if digits.windows(2).any(|w| w == [1, 1]) {
            return Err(err("adjacent 1 digits"));
        }
        let digits = strip_leading_zeros(digits);
        let fib = fibonacci_table();
        if digits.len() + 1 >= fib.len() {
            return Err(err("value does not fit in 64 bits"));
        }
        let value = zeck_value(&digits);
        Ok(Self { digits, value })
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::decode(&parse_bits("Zeckendorf", s)?)
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// Positions of the 1 digits, largest first.
    pub fn indices(&self) -> Vec<usize> {
        let len = self.digits.len();
        self.digits
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 1)
            .map(|(pos, _)| len + 1 - pos)
            .collect()
    }
}

impl fmt::Display for ZeckRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&render(&self.digits))
        }
    }
}

/// Value of a Zeckendorf-style digit string (no validity check).
pub fn zeck_value(digits: &[u8]) -> u64 {
    let len = digits.len();
    digits
        .iter()
        .enumerate()
        .filter(|(_, &d)| d == 1)
        .map(|(pos, _)| fibonacci(len + 1 - pos))
        .sum()
}

pub fn zeck_encode(n: u64) -> ZeckRep {
    ZeckRep::encode(n)
}

pub fn zeck_decode(digits: &[u8]) -> Result<u64> {
    ZeckRep::decode(digits).map(|r| r.value())
}

/// Value of the Zeckendorf digits of `n` shifted one place left, i.e. every
/// `F_j` replaced by `F_{j+1}`.
pub fn zeck_shift(n: u64) -> u64 {
    let mut digits = ZeckRep::encode(n).digits;
    digits.push(0);
    zeck_value(&digits)
}

/// `⌊nφ⌋` through the shift rule `shift(n − 1) + 1`.
pub fn floor_n_phi_by_shift(n: u64) -> u64 {
    if n == 0 {
        0
    } else {
        zeck_shift(n - 1) + 1
    }
}

/// True iff the canonical representation matches `10*`.
pub fn is_fibonacci(n: u64) -> bool {
    let rep = ZeckRep::encode(n);
    rep.digits.first() == Some(&1) && rep.digits[1..].iter().all(|&d| d == 0)
}

/// True iff `(u, v) = (F_k, F_{k+1})` for some `k ≥ 2`.
pub fn adjacent_fib(u: u64, v: u64) -> bool {
    let fib = fibonacci_table();
    (2..fib.len() - 1).any(|k| fib[k] == u && fib[k + 1] == v)
}

/// Indices `a_1 > a_2 > … > a_k ≥ 2` of the Zeckendorf summands of a
/// positive integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibIndexList {
    indices: Vec<usize>,
}

impl FibIndexList {
    pub fn of(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyExpansion);
        }
        Ok(Self { indices: ZeckRep::encode(n).indices() })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn largest(&self) -> usize {
        self.indices[0]
    }

    pub fn smallest(&self) -> usize {
        *self.indices.last().unwrap()
    }

    pub fn value(&self) -> u64 {
        self.indices.iter().map(|&k| fibonacci(k)).sum()
    }
}

pub fn fib_index_list(n: u64) -> Result<FibIndexList> {
    FibIndexList::of(n)
}

/// Canonical Tribonacci representation over weights `1, 2, 4, 7, 13, …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TribRep {
    digits: Vec<u8>,
    value: u64,
}

impl TribRep {
    pub fn encode(n: u64) -> Self {
        if n == 0 {
            return Self { digits: Vec::new(), value: 0 };
        }
        let w = tribonacci_weights();
        let top = w.iter().take_while(|&&t| t <= n).count() - 1;
        let mut rest = n;
        let digits = (0..=top)
            .rev()
            .map(|k| {
                if w[k] <= rest {
                    rest -= w[k];
                    1
                } else {
                    0
                }
            })
            .collect();
        Self { digits, value: n }
    }

    pub fn decode(digits: &[u8]) -> Result<Self> {
        let err = |reason| Error::InvalidRepresentation {
            system: "Tribonacci",
            digits: render(digits),
            reason,
        };
        if digits.iter().any(|&d| d > 1) {
            return Err(err("digits must be 0 or 1"));
        }
        if digits.windows(3).any(|w| w == [1, 1, 1]) {
            return Err(err("three consecutive 1 digits"));
        }
        let digits = strip_leading_zeros(digits);
        let w = tribonacci_weights();
        if digits.len() > w.len() {
            return Err(err("value does not fit in 64 bits"));
        }
        let len = digits.len();
        let value = digits
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 1)
            .map(|(pos, _)| w[len - 1 - pos])
            .sum();
        Ok(Self { digits, value })
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::decode(&parse_bits("Tribonacci", s)?)
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn value(&self) -> u64 {
        self.value
    }
}

impl fmt::Display for TribRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&render(&self.digits))
        }
    }
}

pub fn trib_encode(n: u64) -> TribRep {
    TribRep::encode(n)
}

pub fn trib_decode(digits: &[u8]) -> Result<u64> {
    TribRep::decode(digits).map(|r| r.value())
}

/// Base-(−2) representation of an integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NegaBinRep {
    digits: Vec<u8>,
    value: i64,
}

impl NegaBinRep {
    pub fn encode(n: i64) -> Self {
        let mut digits = Vec::new();
        let mut rest = n as i128;
        while rest != 0 {
            let d = rest.rem_euclid(2);
            digits.push(d as u8);
            rest = (rest - d) / -2;
        }
        digits.reverse();
        Self { digits, value: n }
    }

    pub fn decode(digits: &[u8]) -> Result<Self> {
        let err = |reason| Error::InvalidRepresentation {
            system: "base-(-2)",
            digits: render(digits),
            reason,
        };
        if digits.iter().any(|&d| d > 1) {
            return Err(err("digits must be 0 or 1"));
        }
        let digits = strip_leading_zeros(digits);
        let mut value: i128 = 0;
        for &d in &digits {
            value = value * -2 + d as i128;
            if i64::try_from(value).is_err() {
                return Err(err("value does not fit in 64 bits"));
            }
        }
        Ok(Self { digits, value: value as i64 })
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::decode(&parse_bits("base-(-2)", s)?)
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn value(&self) -> i64 {
        self.value
    }
}

impl fmt::Display for NegaBinRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&render(&self.digits))
        }
    }
}

pub fn negabin_encode(n: i64) -> NegaBinRep {
    NegaBinRep::encode(n)
}

pub fn negabin_decode(digits: &[u8]) -> Result<i64> {
    NegaBinRep::decode(digits).map(|r| r.value())
}

/// One letter of a two-track input, `[m-digit, n-digit]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PairSymbol(pub u8, pub u8);

impl PairSymbol {
    pub const ALL: [PairSymbol; 4] =
        [PairSymbol(0, 0), PairSymbol(0, 1), PairSymbol(1, 0), PairSymbol(1, 1)];

    /// Index in `ALL`.
    pub fn code(self) -> usize {
        (self.0 as usize) * 2 + self.1 as usize
    }

    pub fn from_code(code: usize) -> Self {
        Self::ALL[code]
    }
}

impl fmt::Display for PairSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.0, self.1)
    }
}

/// Zeckendorf pair encoding of `(m, n)`: the shorter representation is
/// padded with leading zeros and the tracks are zipped msd-first.
pub fn encode_pair(m: u64, n: u64) -> Vec<PairSymbol> {
    let a = ZeckRep::encode(m).digits;
    let b = ZeckRep::encode(n).digits;
    let len = a.len().max(b.len());
    let pad = |d: &[u8]| {
        let mut v = vec![0u8; len - d.len()];
        v.extend_from_slice(d);
        v
    };
    let (a, b) = (pad(&a), pad(&b));
    a.into_iter().zip(b).map(|(x, y)| PairSymbol(x, y)).collect()
}

/// Inverse of [`encode_pair`]; leading `[0,0]` padding is allowed.
pub fn decode_pair(word: &[PairSymbol]) -> Result<(u64, u64)> {
    let a: Vec<u8> = word.iter().map(|s| s.0).collect();
    let b: Vec<u8> = word.iter().map(|s| s.1).collect();
    Ok((zeck_decode(&a)?, zeck_decode(&b)?))
}

pub fn format_pair_word(word: &[PairSymbol]) -> String {
    word.iter().map(|s| s.to_string()).collect()
}

/// Parses `[0,1][0,0]…`.
pub fn parse_pair_word(s: &str) -> Result<Vec<PairSymbol>> {
    let bad = || Error::InvalidArgument(format!("malformed pair word {s:?}"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let b = rest.as_bytes();
        if b.len() < 5 || b[0] != b'[' || b[2] != b',' || b[4] != b']' {
            return Err(bad());
        }
        let bit = |c: u8| match c {
            b'0' => Ok(0),
            b'1' => Ok(1),
            _ => Err(bad()),
        };
        out.push(PairSymbol(bit(b[1])?, bit(b[3])?));
        rest = &rest[5..];
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadratic::floor_n_phi;

    fn bits(s: &str) -> Vec<u8> {
        s.bytes().map(|c| c - b'0').collect()
    }

    #[test]
    fn zeckendorf_examples() {
        assert_eq!(zeck_encode(4).to_string(), "101");
        assert_eq!(zeck_encode(18).to_string(), "101000");
        assert!(zeck_encode(0).digits().is_empty());
        assert_eq!(zeck_encode(0).to_string(), "0");
        assert_eq!(zeck_encode(19).to_string(), "101001");
        assert_eq!(zeck_decode(&bits("101000")).unwrap(), 18);
        assert_eq!(zeck_decode(&bits("000101")).unwrap(), 4);
    }

    #[test]
    fn zeckendorf_rejects_adjacent_ones() {
        assert!(matches!(
            zeck_decode(&bits("0110")),
            Err(Error::InvalidRepresentation { .. })
        ));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(zeck_shift(0), 0);
        assert_eq!(zeck_shift(4), 7);
        assert_eq!(zeck_shift(3), 5);
    }

    #[test]
    fn fibonacci_predicates() {
        assert!(is_fibonacci(8));
        assert!(!is_fibonacci(0));
        assert!(!is_fibonacci(4));
        assert!(is_fibonacci(1));
        assert!(adjacent_fib(1, 2));
        assert!(adjacent_fib(2, 3));
        assert!(!adjacent_fib(3, 4));
        assert!(!adjacent_fib(1, 1));
    }

    #[test]
    fn index_lists() {
        assert_eq!(fib_index_list(4).unwrap().indices(), &[4, 2]);
        assert_eq!(fib_index_list(1).unwrap().indices(), &[2]);
        assert_eq!(fib_index_list(18).unwrap().indices(), &[7, 5]);
        assert_eq!(fib_index_list(0), Err(Error::EmptyExpansion));
        for n in 1..2000 {
            assert_eq!(fib_index_list(n).unwrap().value(), n);
        }
    }

    #[test]
    fn tribonacci_examples() {
        assert_eq!(trib_encode(5).to_string(), "101");
        assert!(trib_encode(0).digits().is_empty());
        assert_eq!(trib_encode(7).to_string(), "1000");
        assert!(trib_decode(&bits("0111")).is_err());
        assert_eq!(trib_decode(&bits("110")).unwrap(), 6);
    }

    #[test]
    fn negabinary_examples() {
        assert_eq!(negabin_encode(3).to_string(), "111");
        assert_eq!(negabin_encode(-1).to_string(), "11");
        assert!(negabin_encode(0).digits().is_empty());
        assert_eq!(negabin_encode(6).to_string(), "11010");
        assert_eq!(negabin_decode(&bits("11010")).unwrap(), 6);
    }

    #[test]
    fn round_trips() {
        for n in 0..=100_000u64 {
            let z = zeck_encode(n);
            assert_eq!(zeck_decode(z.digits()).unwrap(), n);
            let t = trib_encode(n);
            assert_eq!(trib_decode(t.digits()).unwrap(), n);
        }
        for n in -10_000..=10_000i64 {
            let r = negabin_encode(n);
            assert_eq!(negabin_decode(r.digits()).unwrap(), n);
            assert!(r.digits().first() != Some(&0));
        }
    }

    #[test]
    fn greedy_takes_largest_fibonacci() {
        let fib = fibonacci_table();
        for n in 1..=20_000u64 {
            let largest = *fib.iter().filter(|&&f| f <= n).max().unwrap();
            let rep = zeck_encode(n);
            assert_eq!(fibonacci(rep.indices()[0]), largest, "n = {n}");
        }
    }

    #[test]
    fn phin_identity() {
        for n in 0..=100_000u64 {
            assert_eq!(floor_n_phi_by_shift(n), floor_n_phi(n), "n = {n}");
        }
    }

    #[test]
    fn pair_encoding_matches_worked_example() {
        let word = encode_pair(4, 18);
        assert_eq!(format_pair_word(&word), "[0,1][0,0][0,1][1,0][0,0][1,0]");
        assert_eq!(decode_pair(&word).unwrap(), (4, 18));
        assert_eq!(parse_pair_word("[0,1][0,0][0,1][1,0][0,0][1,0]").unwrap(), word);
        assert!(encode_pair(0, 0).is_empty());
    }
}
