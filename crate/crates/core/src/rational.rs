//! Exact rationals.
//!
//! [`Rational`] is `num_rational::BigRational`, which is always kept in lowest
//! terms with a positive denominator, so structural equality is numeric
//! equality. This module adds the constructors, the text format and the
//! exact square-root test the rest of the crate relies on.
//!
//! Text format: an optional minus sign, decimal digits, optionally followed
//! by `/` and positive digits, e.g. `-8/3`. Output uses the same reduced form
//! (integers are printed without a denominator).

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Builds `num/den` in lowest terms with a positive denominator.
pub fn make_rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational> {
    let den = den.into();
    if den.is_zero() {
        return Err(Error::Domain("zero denominator".into()));
    }
    Ok(Rational::new(num.into(), den))
}

/// Shorthand for small literals; panics on a zero denominator.
pub fn q(num: i64, den: i64) -> Rational {
    make_rational(num, den).expect("nonzero denominator")
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses the canonical text form `[-]digits[/digits]`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("malformed rational literal {text:?}"));
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || !den.is_none_or(digits) {
        return Err(bad());
    }
    let mut n: BigInt = num.parse().map_err(|_| bad())?;
    if negative {
        n = -n;
    }
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(n, d))
}

/// Accepts the canonical form plus finite decimals (`-0.125`), converted by
/// exact base-10 expansion.
pub fn parse_rational_or_decimal(text: &str) -> Result<Rational> {
    let Some((whole, frac)) = text.split_once('.') else {
        return parse_rational(text);
    };
    let bad = || Error::Parse(format!("malformed decimal literal {text:?}"));
    let (negative, whole) = match whole.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, whole),
    };
    if frac.is_empty()
        || !frac.bytes().all(|b| b.is_ascii_digit())
        || !whole.bytes().all(|b| b.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits = format!("{whole}{frac}");
    let mut n: BigInt = digits.parse().map_err(|_| bad())?;
    if negative {
        n = -n;
    }
    let scale = num_traits::pow(BigInt::from(10), frac.len());
    Ok(Rational::new(n, scale))
}

/// Reduced text form, identical to `Display`.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Exact floor square root of a nonnegative integer.
pub fn isqrt(n: &BigUint) -> BigUint {
    n.sqrt()
}

/// `Some(√n)` when `n` is a perfect square.
pub fn exact_isqrt(n: &BigUint) -> Option<BigUint> {
    let root = isqrt(n);
    (&root * &root == *n).then_some(root)
}

/// The nonnegative rational square root, when it exists.
///
/// Negative input yields `None` rather than an error.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let num = x.numer().to_biguint()?;
    let den = x.denom().to_biguint()?;
    let rn = exact_isqrt(&num)?;
    let rd = exact_isqrt(&den)?;
    Some(Rational::new(
        BigInt::from_biguint(Sign::Plus, rn),
        BigInt::from_biguint(Sign::Plus, rd),
    ))
}

/// Serde adapter storing a [`Rational`] as its reduced string.
pub mod serde_rational {
    use super::{format_rational, parse_rational, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(D::Error::custom)
    }
}

/// Serde adapter for `Option<Rational>`.
pub mod serde_opt_rational {
    use super::{format_rational, Rational};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(x: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(x) => s.serialize_str(&format_rational(x)),
            None => s.serialize_none(),
        }
    }
}

/// Serde adapter for a `[Rational]` list.
pub mod serde_rational_seq {
    use super::{format_rational, Rational};
    use serde::{ser::SerializeSeq, Serializer};

    pub fn serialize<S: Serializer>(xs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&format_rational(x))?;
        }
        seq.end()
    }
}
