//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use stewart_alhazen::rational::{q, Rational};
use stewart_alhazen::RatPoint;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Nonzero rational with numerator and denominator bounded by `height`.
pub fn random_nonzero_rational(rng: &mut impl Rng, height: i64) -> Rational {
    loop {
        let n = rng.gen_range(-height..=height);
        let d = rng.gen_range(1..=height);
        if n != 0 {
            return q(n, d);
        }
    }
}

/// Point with `0 < |P| < 2`, `|P| ≠ 1`, coordinates of denominator ≤ 50.
pub fn random_annulus_point(rng: &mut impl Rng) -> RatPoint {
    loop {
        let d = rng.gen_range(1..=50i64);
        let e = rng.gen_range(1..=50i64);
        let x = q(rng.gen_range(-2 * d + 1..=2 * d - 1), d);
        let y = q(rng.gen_range(-2 * e + 1..=2 * e - 1), e);
        let p = RatPoint::new(x, y);
        let n2 = p.norm_squared();
        if !n2.is_zero() && n2 < q(4, 1) && n2 != q(1, 1) {
            return p;
        }
    }
}

/// Real roots of a polynomial (coefficients highest degree first) found by
/// scanning for sign changes on a fine grid and bisecting each bracket.
/// Roots of even multiplicity are invisible to it.
pub fn bisection_roots(coeffs: &[f64], lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    let p = |x: f64| coeffs.iter().fold(0.0, |acc, c| acc * x + c);
    let h = (hi - lo) / steps as f64;
    let mut roots = Vec::new();
    let mut a = lo;
    let mut fa = p(a);
    for k in 1..=steps {
        let b = lo + h * k as f64;
        let fb = p(b);
        if fa == 0.0 {
            roots.push(a);
        } else if fa.signum() != fb.signum() && fb != 0.0 {
            let (mut l, mut r, mut fl) = (a, b, fa);
            for _ in 0..200 {
                let m = 0.5 * (l + r);
                let fm = p(m);
                if fm == 0.0 || r - l < 1e-15 * (1.0 + m.abs()) {
                    l = m;
                    r = m;
                    break;
                }
                if fm.signum() == fl.signum() {
                    l = m;
                    fl = fm;
                } else {
                    r = m;
                }
            }
            roots.push(0.5 * (l + r));
        }
        a = b;
        fa = fb;
    }
    roots
}

/// Determinant by fraction-exact Gaussian elimination.
pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = q(1, 1);
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return q(0, 1);
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            let f = &m[r][col] / &p;
            let pivot_row = m[col].clone();
            for (target, v) in m[r].iter_mut().zip(pivot_row).skip(col) {
                *target -= &f * v;
            }
        }
    }
    det
}

/// Resultant through the Sylvester matrix; coefficients highest degree first.
pub fn resultant(f: &[Rational], g: &[Rational]) -> Rational {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![q(0, 1); size];
        for (j, c) in f.iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![q(0, 1); size];
        for (j, c) in g.iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    determinant(rows)
}

/// Discriminant of a quartic via `Res(f, f′) / a₄` (the sign factor is +1).
pub fn quartic_discriminant_oracle(f: &[Rational; 5]) -> Rational {
    let df: Vec<Rational> = f[..4]
        .iter()
        .enumerate()
        .map(|(i, c)| c * q((4 - i) as i64, 1))
        .collect();
    resultant(f, &df) / &f[0]
}

pub fn approx_eq(a: f64, b: f64, eps: f64) -> bool {
    (a - b).abs() <= eps || (a.is_nan() && b.is_nan())
}

pub fn is_positive(x: &Rational) -> bool {
    x.is_positive()
}
