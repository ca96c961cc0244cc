//! Exact rational scalars: the coefficient field of the whole kernel.
//!
//! Backed by `num_rational::BigRational`, which already maintains the
//! invariants we need (lowest terms, positive denominator, zero as 0/1).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Builds `num/den` from machine integers. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for a whole number.
pub fn int(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

/// Canonical text form: `a` for integers, `a/b` with `b > 1` otherwise.
/// The sign always sits on the numerator.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the canonical form produced by [`rational_to_string`].
pub fn rational_from_str(s: &str) -> Result<Rational, String> {
    let (num_str, den_str) = match s.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (s, None),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| format!("invalid integer {num_str:?}"))?;
    let denom: BigInt = match den_str {
        Some(d) => d.parse().map_err(|_| format!("invalid integer {d:?}"))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err("zero denominator".to_string());
    }
    Ok(Rational::new(numer, denom))
}

/// Magnitude of a rational, for printers that fold the sign elsewhere.
pub fn rational_abs(r: &Rational) -> Rational {
    r.abs()
}
