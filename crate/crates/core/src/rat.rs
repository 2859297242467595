//! Exact rational scalars and small helpers used across the crate.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. No floating representation is ever stored.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses "p", "-p" or "p/q".
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::validation(format!("cannot parse rational {s:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::validation(format!("cannot parse rational {s:?}")))?;
    if d.is_zero() {
        return Err(Error::validation(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

/// "p" for integers, "p/q" otherwise. Inverse of [`parse_rational`].
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Nearest integer, halves rounded down (floor(x + 1/2)).
pub fn round_nearest(r: &Rational) -> BigInt {
    let shifted = r + Rational::new(BigInt::one(), BigInt::from(2));
    shifted.floor().to_integer()
}

/// Largest n ≥ 0 with n² ≤ r. Requires r ≥ 0.
pub fn floor_sqrt(r: &Rational) -> BigInt {
    assert!(!r.is_negative(), "floor_sqrt of negative rational");
    if r.is_zero() {
        return BigInt::zero();
    }
    let (p, q) = (r.numer(), r.denom());
    // sqrt(p/q) = sqrt(p*q)/q; start from an integer estimate and fix up exactly.
    let mut n = (p * q).sqrt() / q;
    loop {
        let next = &n + 1;
        if &next * &next * q <= *p {
            n = next;
        } else {
            break;
        }
    }
    while !n.is_zero() && &n * &n * q > *p {
        n -= 1;
    }
    n
}

/// f64 approximation (for pruning heuristics and display only).
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(1.0);
        n / d
    })
}

/// Exact comparison sign of a rational, as -1/0/1.
pub fn sign(r: &Rational) -> i32 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Least common multiple of the denominators of an iterator of rationals.
pub fn denominator_lcm<'a>(it: impl Iterator<Item = &'a Rational>) -> BigInt {
    let mut l = BigInt::one();
    for r in it {
        l = l.lcm(r.denom());
    }
    l
}

/// Serde adapter: rationals as JSON numbers when integral, "p/q" strings otherwise.
pub mod serde_rational {
    use super::*;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, ser: S) -> std::result::Result<S::Ok, S::Error> {
        if r.is_integer() {
            if let Some(i) = r.numer().to_i64() {
                return ser.serialize_i64(i);
            }
        }
        ser.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<Rational, D::Error> {
        let v = serde_json::Value::deserialize(de)?;
        value_to_rational(&v).map_err(D::Error::custom)
    }

    pub fn value_to_rational(v: &serde_json::Value) -> std::result::Result<Rational, String> {
        match v {
            serde_json::Value::Number(n) => {
                if let Some(i) = n.as_i64() {
                    Ok(Rational::from_integer(BigInt::from(i)))
                } else {
                    Err(format!("non-integral JSON number {n}; use a \"p/q\" string"))
                }
            }
            serde_json::Value::String(s) => parse_rational(s).map_err(|e| e.to_string()),
            other => Err(format!("expected number or \"p/q\" string, got {other}")),
        }
    }
}

/// Serde adapter: rationals always as "p/q"/"p" strings (used by Hermitian
/// Gram entries); accepts integral JSON numbers on input.
pub mod serde_rational_str {
    use super::*;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<Rational, D::Error> {
        let v = serde_json::Value::deserialize(de)?;
        super::serde_rational::value_to_rational(&v).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "5", "-3", "12/7", "-9/11", "4294967296/3"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn rounding() {
        assert_eq!(round_nearest(&ratio(1, 2)), BigInt::from(1));
        assert_eq!(round_nearest(&ratio(-1, 2)), BigInt::from(0));
        assert_eq!(round_nearest(&ratio(7, 3)), BigInt::from(2));
        assert_eq!(round_nearest(&ratio(-7, 3)), BigInt::from(-2));
    }

    #[test]
    fn floor_sqrt_exact() {
        assert_eq!(floor_sqrt(&rat(0)), BigInt::zero());
        assert_eq!(floor_sqrt(&rat(1)), BigInt::one());
        assert_eq!(floor_sqrt(&rat(35)), BigInt::from(5));
        assert_eq!(floor_sqrt(&rat(36)), BigInt::from(6));
        assert_eq!(floor_sqrt(&ratio(35, 11)), BigInt::from(1));
        assert_eq!(floor_sqrt(&ratio(80, 49)), BigInt::from(1));
        assert_eq!(floor_sqrt(&ratio(1, 3)), BigInt::zero());
    }
}
