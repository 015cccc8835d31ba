//! Exact rational scalars and small combinatorial helpers.

use crate::error::Error;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number; every coefficient in the engine is one.
pub type Rational = num_rational::BigRational;

/// `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical text form: `"p"` when the denominator is one, `"p/q"` otherwise
/// (always in lowest terms with a positive denominator).
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"p"` or `"p/q"`; the denominator must be positive.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let err = |reason| Error::InvalidRational {
        text: text.to_owned(),
        reason,
    };
    let (num_str, den_str) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let numer: BigInt = num_str.parse().map_err(|_| err("bad numerator"))?;
    let denom: BigInt = match den_str {
        Some(d) => d.parse().map_err(|_| err("bad denominator"))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(err("zero denominator"));
    }
    if denom.is_negative() {
        return Err(err("denominator must be positive"));
    }
    Ok(Rational::new(numer, denom))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn binomial(n: usize, r: usize) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `n!! = n(n-2)(n-4)...` down to 2 or 1; `0!! = (-1)!! = 1` by convention.
pub fn double_factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    let mut i = n;
    while i >= 2 {
        acc *= BigInt::from(i);
        i -= 2;
    }
    acc
}
