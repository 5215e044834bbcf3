//! Root finding: the unique real root of the increasing cubic `Y³ + 4Y − r²`
//! and the real roots of quartics of degree at most four.

use num_complex::Complex64;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{serde_opt_rational, to_f64, Rational};

/// Numeric tolerances.
///
/// `residual` is compared against `|p(x)| / Σ|cᵢ||x|ⁱ`, which coincides with
/// the plain absolute residual for roots of modulus about one.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub abs_root: f64,
    pub residual: f64,
    pub merge: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs_root: 1e-12,
            residual: 1e-10,
            merge: 1e-7,
        }
    }
}

impl Tolerance {
    pub fn new(abs_root: f64, residual: f64, merge: f64) -> Result<Self> {
        let tol = Tolerance {
            abs_root,
            residual,
            merge,
        };
        tol.validate()?;
        Ok(tol)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = |v: f64| v.is_finite() && v > 0.0;
        if ok(self.abs_root) && ok(self.residual) && ok(self.merge) {
            Ok(())
        } else {
            Err(Error::Domain(format!("tolerances must be positive: {self:?}")))
        }
    }
}

/// A real algebraic quantity known exactly when it happens to be rational,
/// and always known approximately.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExactOrApprox {
    #[serde(
        serialize_with = "serde_opt_rational::serialize",
        skip_serializing_if = "Option::is_none"
    )]
    pub exact: Option<Rational>,
    pub approx: f64,
    pub error_bound: f64,
}

impl ExactOrApprox {
    pub fn exact(value: Rational) -> Self {
        let approx = to_f64(&value);
        ExactOrApprox {
            exact: Some(value),
            approx,
            error_bound: approx.abs() * f64::EPSILON,
        }
    }

    pub fn approx(approx: f64, error_bound: f64) -> Self {
        ExactOrApprox {
            exact: None,
            approx,
            error_bound: error_bound.abs(),
        }
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }
}

/// The companion cubic `Y³ + 4Y − r²`.
pub(crate) fn cubic_for(r: &Rational) -> Polynomial {
    Polynomial::new(vec![
        -(r * r),
        Rational::from_integer(4.into()),
        Rational::zero(),
        Rational::from_integer(1.into()),
    ])
}

/// The unique real root of `Y³ + 4Y − r²`.
///
/// The root is bracketed in `(0, r²/4]`, located by bisection and polished
/// with Newton steps. A rational root is returned exactly.
pub fn monotone_root(r: &Rational, tol: &Tolerance) -> Result<ExactOrApprox> {
    if r.is_zero() {
        return Err(Error::Domain("r must be nonzero".into()));
    }
    tol.validate()?;
    let cubic = cubic_for(r);
    if let Some(root) = cubic.rational_roots()?.into_iter().next() {
        return Ok(ExactOrApprox::exact(root));
    }

    let r2 = to_f64(r).powi(2);
    let f = |t: f64| t * t * t + 4.0 * t - r2;
    let df = |t: f64| 3.0 * t * t + 4.0;
    let (mut lo, mut hi) = (0.0f64, r2 / 4.0);
    for _ in 0..200 {
        if hi - lo <= tol.abs_root * hi.max(1.0) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut t = 0.5 * (lo + hi);
    for _ in 0..8 {
        let next = t - f(t) / df(t);
        if !(next > 0.0) || next > r2 / 4.0 || f(next).abs() >= f(t).abs() {
            break;
        }
        t = next;
    }
    let err = f(t).abs() / df(t) + t * f64::EPSILON;
    Ok(ExactOrApprox::approx(t, err))
}

/// A real root together with how many computed roots were merged into it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RealRoot {
    pub value: f64,
    pub multiplicity: usize,
}

/// Real roots of `c[0]·x^n + … + c[n]` (highest degree first), ascending.
pub fn quartic_real_roots(coeffs: &[f64], tol: &Tolerance) -> Result<Vec<f64>> {
    Ok(real_roots_detailed(coeffs, tol)?
        .into_iter()
        .map(|r| r.value)
        .collect())
}

/// As [`quartic_real_roots`], reporting merged near-multiple roots.
pub fn real_roots_detailed(coeffs: &[f64], tol: &Tolerance) -> Result<Vec<RealRoot>> {
    tol.validate()?;
    if coeffs.len() > 5 {
        return Err(Error::Domain(format!(
            "expected at most five coefficients, got {}",
            coeffs.len()
        )));
    }
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::Domain("non-finite coefficient".into()));
    }
    let Some(first) = coeffs.iter().position(|&c| c != 0.0) else {
        return Err(Error::Domain("zero polynomial has no root set".into()));
    };
    let poly = &coeffs[first..];
    let degree = poly.len() - 1;
    if degree == 0 {
        return Ok(Vec::new());
    }

    let candidates: Vec<f64> = if degree == 1 {
        vec![-poly[1] / poly[0]]
    } else {
        aberth(poly)
            .into_iter()
            .filter(|z| z.im.abs() <= 1e-6 * (1.0 + z.re.abs()))
            .map(|z| z.re)
            .collect()
    };

    let mut roots: Vec<f64> = candidates
        .into_iter()
        .map(|x| newton_polish(poly, x))
        .filter(|&x| scaled_residual(poly, x) < tol.residual)
        .collect();
    roots.sort_by(f64::total_cmp);
    Ok(merge_close(&roots, tol.merge))
}

/// Horner evaluation of a highest-first coefficient slice and its derivative.
fn eval_with_derivative(poly: &[f64], x: f64) -> (f64, f64) {
    let mut p = 0.0;
    let mut dp = 0.0;
    for &c in poly {
        dp = dp * x + p;
        p = p * x + c;
    }
    (p, dp)
}

pub(crate) fn scaled_residual(poly: &[f64], x: f64) -> f64 {
    let (p, _) = eval_with_derivative(poly, x);
    if p == 0.0 {
        return 0.0;
    }
    let scale = poly.iter().fold(0.0, |acc, c| acc * x.abs() + c.abs());
    p.abs() / scale.max(f64::MIN_POSITIVE)
}

fn newton_polish(poly: &[f64], mut x: f64) -> f64 {
    let mut best = eval_with_derivative(poly, x).0.abs();
    for _ in 0..60 {
        let (p, dp) = eval_with_derivative(poly, x);
        if p == 0.0 || dp == 0.0 {
            break;
        }
        let next = x - p / dp;
        let value = eval_with_derivative(poly, next).0.abs();
        if !(value < best) {
            break;
        }
        best = value;
        x = next;
    }
    x
}

fn merge_close(sorted: &[f64], merge: f64) -> Vec<RealRoot> {
    let mut out: Vec<RealRoot> = Vec::new();
    let mut cluster: Vec<f64> = Vec::new();
    let flush = |cluster: &mut Vec<f64>, out: &mut Vec<RealRoot>| {
        if !cluster.is_empty() {
            out.push(RealRoot {
                value: cluster.iter().sum::<f64>() / cluster.len() as f64,
                multiplicity: cluster.len(),
            });
            cluster.clear();
        }
    };
    for &x in sorted {
        if let Some(&last) = cluster.last() {
            if x - last > merge * (1.0 + x.abs()) {
                flush(&mut cluster, &mut out);
            }
        }
        cluster.push(x);
    }
    flush(&mut cluster, &mut out);
    out
}

/// Aberth–Ehrlich simultaneous iteration for all complex roots.
fn aberth(poly: &[f64]) -> Vec<Complex64> {
    let n = poly.len() - 1;
    let lead = poly[0];
    let monic: Vec<f64> = poly.iter().map(|c| c / lead).collect();
    // Fujiwara-style radius for the starting circle.
    let radius = (1..=n)
        .map(|k| monic[k].abs().powf(1.0 / k as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius, angle)
        })
        .collect();

    let eval = |x: Complex64| {
        let mut p = Complex64::zero();
        let mut dp = Complex64::zero();
        for &c in &monic {
            dp = dp * x + p;
            p = p * x + c;
        }
        (p, dp)
    };

    for _ in 0..500 {
        let mut max_step = 0.0f64;
        for k in 0..n {
            let (p, dp) = eval(z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| {
                    let d = z[k] - z[j];
                    if d.norm() == 0.0 {
                        Complex64::zero()
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.re.is_finite() && step.im.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm() / (1.0 + z[k].norm()));
            }
        }
        if max_step < 1e-16 {
            break;
        }
    }
    z
}
