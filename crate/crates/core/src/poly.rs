//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{to_f64, Rational};

/// Coefficients are stored lowest degree first with no trailing zeros, so
/// the zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// The monomial `c·X^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `X^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(to_f64).collect()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// `p(-X)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Renders with the given variable name, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let unit = abs.is_one() && k > 0;
            if !unit {
                if abs.is_integer() || k == 0 {
                    out.push_str(&abs.to_string());
                } else {
                    out.push_str(&format!("({abs})"));
                }
            }
            match k {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{k}")),
            }
        }
        out
    }

    /// All rational roots, ascending and without repetition.
    ///
    /// Factors of `X` are stripped first; the remaining polynomial is cleared
    /// to primitive integer form and every candidate `±p/q` with `p` dividing
    /// the constant term and `q` dividing the leading term is tested: first
    /// modulo two primes, then exactly for the survivors.
    pub fn rational_roots(&self) -> Result<Vec<Rational>> {
        if self.is_zero() {
            return Err(Error::Domain("rational roots of the zero polynomial".into()));
        }
        let lowest = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
        let mut roots = Vec::new();
        if lowest > 0 {
            roots.push(Rational::zero());
        }
        let ints = primitive_integer_coeffs(&self.coeffs[lowest..]);
        if ints.len() > 1 {
            let constant = ints[0].magnitude().clone();
            let leading = ints[ints.len() - 1].magnitude().clone();
            // Cauchy bound |x| < bound_num / leading.
            let bound_num = ints[..ints.len() - 1]
                .iter()
                .map(|c| c.abs())
                .max()
                .unwrap_or_else(BigInt::zero)
                + BigInt::from(leading.clone());
            let filters: Vec<ModFilter> = FILTER_PRIMES
                .iter()
                .map(|&m| ModFilter::new(&ints, m))
                .collect();
            let ps = divisors(&constant);
            let qs = divisors(&leading);
            let q_res: Vec<Vec<u64>> = filters.iter().map(|f| f.residues(&qs)).collect();
            let p_res: Vec<Vec<u64>> = filters.iter().map(|f| f.residues(&ps)).collect();
            let leading_int = BigInt::from(leading.clone());
            for (i, p) in ps.iter().enumerate() {
                for (j, q) in qs.iter().enumerate() {
                    for negative in [false, true] {
                        let passes = filters.iter().enumerate().all(|(k, f)| {
                            let pr = if negative { f.neg(p_res[k][i]) } else { p_res[k][i] };
                            f.vanishes(pr, q_res[k][j])
                        });
                        if !passes || !p.gcd(q).is_one() {
                            continue;
                        }
                        let (p, q): (BigInt, BigInt) = (p.clone().into(), q.clone().into());
                        if &p * &leading_int > &bound_num * &q {
                            continue;
                        }
                        let cand = if negative { -p } else { p };
                        if homogeneous_eval(&ints, &cand, &q).is_zero() {
                            roots.push(Rational::new(cand, q));
                        }
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        debug_assert!(roots.iter().all(|r| self.eval(r).is_zero()));
        Ok(roots)
    }
}

/// Scales rational coefficients to coprime integers with the same roots.
fn primitive_integer_coeffs(coeffs: &[Rational]) -> Vec<BigInt> {
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() || content.is_one() {
        ints
    } else {
        ints.into_iter().map(|c| c / &content).collect()
    }
}

const FILTER_PRIMES: [u64; 2] = [(1 << 61) - 1, u64::MAX - 58];

/// The homogeneous evaluation below, reduced modulo a prime. A candidate
/// whose residue is nonzero cannot be a root.
struct ModFilter {
    modulus: u64,
    coeffs: Vec<u64>,
}

impl ModFilter {
    fn new(ints: &[BigInt], modulus: u64) -> Self {
        let m = BigInt::from(modulus);
        let coeffs = ints
            .iter()
            .map(|c| c.mod_floor(&m).to_u64().expect("reduced below modulus"))
            .collect();
        ModFilter { modulus, coeffs }
    }

    fn residues(&self, xs: &[BigUint]) -> Vec<u64> {
        let m = BigUint::from(self.modulus);
        xs.iter()
            .map(|x| (x % &m).to_u64().expect("reduced below modulus"))
            .collect()
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.modulus as u128) as u64
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.modulus as u128) as u64
    }

    fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    fn vanishes(&self, p: u64, q: u64) -> bool {
        let n = self.coeffs.len() - 1;
        let mut acc = self.coeffs[n];
        let mut q_pow = 1;
        for i in (0..n).rev() {
            q_pow = self.mul(q_pow, q);
            acc = self.add(self.mul(acc, p), self.mul(self.coeffs[i], q_pow));
        }
        acc == 0
    }
}

/// `Σ a_i p^i q^(n-i)`, which vanishes iff `p/q` is a root.
fn homogeneous_eval(ints: &[BigInt], p: &BigInt, q: &BigInt) -> BigInt {
    let n = ints.len() - 1;
    let mut q_pows = vec![BigInt::one(); n + 1];
    for i in 1..=n {
        q_pows[i] = &q_pows[i - 1] * q;
    }
    let mut p_pow = BigInt::one();
    let mut sum = BigInt::zero();
    for (i, a) in ints.iter().enumerate() {
        sum += a * &p_pow * &q_pows[n - i];
        p_pow *= p;
    }
    sum
}

/// Positive divisors by trial-division factorization, ascending.
pub(crate) fn divisors(n: &BigUint) -> Vec<BigUint> {
    if n.is_zero() {
        return Vec::new();
    }
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    let mut rest = n.clone();
    let mut push = |f: BigUint, e: u32| factors.push((f, e));
    if let Some(mut m) = rest.to_u64() {
        let mut d = 2u64;
        while d.saturating_mul(d) <= m {
            let mut e = 0;
            while m % d == 0 {
                m /= d;
                e += 1;
            }
            if e > 0 {
                push(d.into(), e);
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if m > 1 {
            push(m.into(), 1);
        }
    } else {
        let mut d = BigUint::from(2u32);
        while &d * &d <= rest {
            let mut e = 0;
            while (&rest % &d).is_zero() {
                rest /= &d;
                e += 1;
            }
            if e > 0 {
                push(d.clone(), e);
            }
            d += if d == BigUint::from(2u32) { 1u32 } else { 2u32 };
        }
        if rest > BigUint::one() {
            push(rest, 1);
        }
    }
    let mut divs = vec![BigUint::one()];
    for (f, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut power = d.clone();
            next.push(power.clone());
            for _ in 0..e {
                power *= &f;
                next.push(power.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("X"))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}
