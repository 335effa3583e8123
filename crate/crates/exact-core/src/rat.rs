use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Exact rational scalar used everywhere; no floating point in this workspace.
pub type Rat = BigRational;

/// Shorthand for `n/d`. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer rational.
pub fn int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Binomial coefficient, zero when `k > n`.
pub fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Renders `p/q`, or just `p` when the denominator is 1.
pub fn format_fraction(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionParseError {
    input: String,
}

impl fmt::Display for FractionParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid fraction {:?}, expected p or p/q", self.input)
    }
}

impl std::error::Error for FractionParseError {}

/// Parses `p` or `p/q` with optional sign; the denominator must be nonzero.
pub fn parse_fraction(s: &str) -> Result<Rat, FractionParseError> {
    let err = || FractionParseError {
        input: s.to_string(),
    };
    let t = s.trim();
    let (num_str, den_str) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let numer: BigInt = num_str.parse().map_err(|_| err())?;
    let denom: BigInt = match den_str {
        Some(d) => d.parse().map_err(|_| err())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(err());
    }
    Ok(Rat::new(numer, denom))
}

/// True when `r` is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Sign as -1, 0, or 1.
pub fn sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
