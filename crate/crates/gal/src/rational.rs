//! Exact rational scalars used by the LP layer and all combinatorial results.
//!
//! `Rational` is arbitrary precision, always in lowest terms with a positive
//! denominator (both maintained by `num`).

use num::bigint::Sign;
use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `n/d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_u64(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("rational out of f64 range")
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Integer value of an integral rational, if it fits in u64.
pub fn to_u64(r: &Rational) -> Option<u64> {
    if !is_integer(r) || r.is_negative() {
        return None;
    }
    r.numer().to_u64()
}

/// Canonical text form `num/den`, e.g. `5/2`, `3/1`, `-1/4`.
pub fn fmt_canonical(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Short display form: integers without the `/1`.
pub fn fmt_short(r: &Rational) -> String {
    if is_integer(r) {
        r.numer().to_string()
    } else {
        fmt_canonical(r)
    }
}

/// Parses `num`, `num/den` or a plain integer. Sign on the numerator only.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (ns, ds) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let n: BigInt = ns
        .parse()
        .map_err(|_| Error::invalid(format!("bad rational numerator: {s:?}")))?;
    let d: BigInt = ds
        .parse()
        .map_err(|_| Error::invalid(format!("bad rational denominator: {s:?}")))?;
    if d.is_zero() {
        return Err(Error::invalid(format!("zero denominator in {s:?}")));
    }
    if d.sign() == Sign::Minus {
        return Err(Error::invalid(format!(
            "denominator must be positive in {s:?}"
        )));
    }
    Ok(Rational::new(n, d))
}

/// Least common multiple of all denominators (>= 1).
pub fn common_denominator(rs: &[Rational]) -> BigInt {
    let mut l = BigInt::one();
    for r in rs {
        l = l.lcm(r.denom());
    }
    l
}

/// Scales rationals to integers by the common denominator: returns (L, r*L).
pub fn scale_to_integers(rs: &[Rational]) -> (BigInt, Vec<BigInt>) {
    let l = common_denominator(rs);
    let scaled = rs.iter().map(|r| r.numer() * (&l / r.denom())).collect();
    (l, scaled)
}

/// Exact ceiling of a rational.
pub fn ceil_big(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}
