//! Bounded search for `x⁴ + 4y⁴ = z²`, the primitive Pythagorean triple rule
//! and the search for rational `a` with `r² = a⁶ + 4a²`.
//!
//! None of these ever produce a hit: `x⁴ + 4y⁴ = z²` has no solution in
//! positive integers, and a rational `a` as above would give one through
//! [`biquadratic_from_c2_witness`].

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::cubic_for;
use crate::rational::{rational_sqrt, Rational};

/// Positive integers `x, y, z`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Triple {
    #[serde(serialize_with = "ser_big")]
    pub x: BigUint,
    #[serde(serialize_with = "ser_big")]
    pub y: BigUint,
    #[serde(serialize_with = "ser_big")]
    pub z: BigUint,
}

fn ser_big<S: serde::Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

impl Triple {
    pub fn new(x: impl Into<BigUint>, y: impl Into<BigUint>, z: impl Into<BigUint>) -> Result<Self> {
        let (x, y, z) = (x.into(), y.into(), z.into());
        if x.is_zero() || y.is_zero() || z.is_zero() {
            return Err(Error::Domain("triple entries must be positive".into()));
        }
        Ok(Triple { x, y, z })
    }

    pub fn is_pythagorean(&self) -> bool {
        &self.x * &self.x + &self.y * &self.y == &self.z * &self.z
    }

    pub fn is_primitive(&self) -> bool {
        self.x.gcd(&self.y).gcd(&self.z).is_one()
    }

    /// `x⁴ + 4y⁴ = z²`.
    pub fn is_biquadratic_solution(&self) -> bool {
        let x2 = &self.x * &self.x;
        let y2 = &self.y * &self.y;
        &x2 * &x2 + 4u32 * &y2 * &y2 == &self.z * &self.z
    }
}

/// Largest accepted search bound; keeps `x⁴ + 4y⁴` inside `u128`.
pub const MAX_SEARCH_BOUND: u64 = 1 << 30;

/// Result of [`search_biquadratic`], also the JSON report of `dioph-search`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BiquadraticSearch {
    pub bound: u64,
    pub solutions: Vec<Triple>,
    pub checked_pairs: u64,
}

/// Every `(x, y, z)` with `1 ≤ x, y ≤ bound` and `x⁴ + 4y⁴ = z²`, ordered by
/// `(x, y)`. The `x` range is split across threads.
pub fn search_biquadratic(bound: u64) -> Result<BiquadraticSearch> {
    if bound < 1 {
        return Err(Error::Domain("bound must be at least 1".into()));
    }
    if bound > MAX_SEARCH_BOUND {
        return Err(Error::Domain(format!("bound must not exceed {MAX_SEARCH_BOUND}")));
    }
    let fourth = |n: u64| {
        let n = n as u128;
        n * n * n * n
    };
    let solutions: Vec<Triple> = (1..=bound)
        .into_par_iter()
        .flat_map_iter(|x| {
            let x4 = fourth(x);
            (1..=bound).filter_map(move |y| {
                let total = x4 + 4 * fourth(y);
                let z = total.isqrt();
                (z * z == total).then(|| Triple {
                    x: x.into(),
                    y: y.into(),
                    z: BigUint::from(z),
                })
            })
        })
        .collect();
    Ok(BiquadraticSearch {
        bound,
        solutions,
        checked_pairs: bound * bound,
    })
}

/// `(a² − b², 2ab, a² + b²)` for coprime `a > b ≥ 1` of opposite parity.
pub fn diophante_triple(a: u64, b: u64) -> Result<Triple> {
    if b < 1 || a <= b {
        return Err(Error::Domain(format!("need a > b >= 1, got a={a}, b={b}")));
    }
    if a.gcd(&b) != 1 {
        return Err(Error::Domain(format!("a={a} and b={b} are not coprime")));
    }
    if (a + b).is_multiple_of(2) {
        return Err(Error::Domain(format!("a={a} and b={b} have the same parity")));
    }
    let (a, b) = (BigUint::from(a), BigUint::from(b));
    let (a2, b2) = (&a * &a, &b * &b);
    Ok(Triple {
        x: &a2 - &b2,
        y: 2u32 * &a * &b,
        z: a2 + b2,
    })
}

/// Looks for a rational `a` with `r² = a⁶ + 4a²`, taking the sign of `r`.
///
/// Such an `a` squares to a rational root of `Y³ + 4Y − r²`; each positive
/// rational root is tested for being a rational square.
pub fn c2_witness_search(r: &Rational) -> Result<Option<Rational>> {
    if r.is_zero() {
        return Err(Error::Domain("r must be nonzero".into()));
    }
    let witness = cubic_for(r)
        .rational_roots()?
        .into_iter()
        .filter(|y| y.is_positive())
        .find_map(|y| rational_sqrt(&y))
        .map(|a| if r.is_negative() { -a } else { a });
    Ok(witness)
}

/// Turns a hypothetical `a = y/z` (lowest terms) with `(r/a)² = a⁴ + 4` into
/// the integer solution `(y, z, z²·r/a)` of `x⁴ + 4y⁴ = w²`.
///
/// Returns `None` when `a` is not such a witness for `r`.
pub fn biquadratic_from_c2_witness(r: &Rational, a: &Rational) -> Option<Triple> {
    if r.is_zero() || a.is_zero() {
        return None;
    }
    let a2 = a * a;
    let lhs = (r / a) * (r / a);
    if lhs != &a2 * &a2 + Rational::from_integer(4.into()) {
        return None;
    }
    let y = a.numer().abs();
    let z = a.denom().clone();
    let w = (Rational::from_integer(&z * &z) * r / a).abs();
    if !w.is_integer() {
        return None;
    }
    let to_u = |n: BigInt| n.to_biguint();
    Triple::new(to_u(y)?, to_u(z)?, to_u(w.to_integer())?).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, q};

    #[test]
    fn small_searches_are_empty() {
        let s = search_biquadratic(1).unwrap();
        assert!(s.solutions.is_empty());
        assert_eq!(s.checked_pairs, 1);
        let s = search_biquadratic(100).unwrap();
        assert!(s.solutions.is_empty());
        assert_eq!(s.checked_pairs, 10_000);
        assert!(search_biquadratic(0).is_err());
        assert!(search_biquadratic(MAX_SEARCH_BOUND + 1).is_err());
    }

    #[test]
    fn triple_rule_examples() {
        let t = diophante_triple(2, 1).unwrap();
        assert_eq!(t, Triple::new(3u32, 4u32, 5u32).unwrap());
        let t = diophante_triple(3, 2).unwrap();
        assert_eq!(t, Triple::new(5u32, 12u32, 13u32).unwrap());
        assert!(matches!(diophante_triple(3, 1), Err(Error::Domain(_))));
        assert!(diophante_triple(1, 2).is_err());
        assert!(diophante_triple(6, 3).is_err());
        assert!(diophante_triple(4, 2).is_err());
        assert!(diophante_triple(5, 0).is_err());
    }

    #[test]
    fn c2_search_examples() {
        assert_eq!(c2_witness_search(&int(1)).unwrap(), None);
        assert_eq!(c2_witness_search(&int(4)).unwrap(), None);
        assert_eq!(c2_witness_search(&q(15, 2)).unwrap(), None);
        assert!(c2_witness_search(&int(0)).is_err());
    }

    #[test]
    fn c2_reduction_rejects_non_witnesses() {
        // r = 4, a² = 2 would need a = √2; no rational candidate works.
        for a in [int(1), q(3, 2), q(-7, 5), int(2)] {
            assert!(biquadratic_from_c2_witness(&int(4), &a).is_none());
        }
    }

    #[test]
    fn triple_predicates() {
        let t = Triple::new(3u32, 4u32, 5u32).unwrap();
        assert!(t.is_pythagorean() && t.is_primitive());
        assert!(!t.is_biquadratic_solution());
        assert!(Triple::new(0u32, 1u32, 1u32).is_err());
        let fake = Triple::new(2u32, 1u32, 2u32).unwrap();
        assert!(!fake.is_biquadratic_solution());
    }
}
