//! The quartics `S(X) = X⁴ − rX − 1` for nonzero rational `r`.
//!
//! Over the reals `S = (X² + aX + b)(X² − aX + b̄)` where `a²` is the unique
//! real root of the companion cubic `R(Y) = Y³ + 4Y − r²`, `a` carries the
//! sign of `r`, and `2b = a² + √(a⁴+4)`, `2b̄ = a² − √(a⁴+4)`. The first
//! factor carries the complex pair, the second the two real roots.
//!
//! Over ℚ, `S` is reducible exactly when it has a rational root: the
//! quadratic split would need `a` rational, which never happens (see
//! [`crate::diophantine::c2_witness_search`]). For irreducible `S`, the real
//! roots are constructible exactly when the resolvent cubic has a rational
//! root.
//!
//! Resolvent convention: for `X⁴ + pX² + qX + c` we use
//! `ρ(W) = W³ + 2pW² + (p² − 4c)W − q²`. For `S` this is `R(W)` itself. The
//! other common normalization, `W³ + 4W + r² = −R(−W)`, has negated roots
//! and therefore the same reducibility.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::diophantine::c2_witness_search;
use crate::error::{Error, Result};
use crate::numerics::{cubic_for, monotone_root, ExactOrApprox, Tolerance};
use crate::poly::Polynomial;
use crate::rational::{int, rational_sqrt, serde_opt_rational, serde_rational, to_f64, Rational};

/// A validated nonzero `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StewartParameter(Rational);

impl StewartParameter {
    pub fn new(r: Rational) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::Domain("r must be a nonzero rational".into()));
        }
        Ok(StewartParameter(r))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    /// `X⁴ − rX − 1`.
    pub fn polynomial(&self) -> Polynomial {
        stewart_polynomial(&self.0)
    }
}

fn check_r(r: &Rational) -> Result<()> {
    StewartParameter::new(r.clone()).map(drop)
}

pub fn stewart_polynomial(r: &Rational) -> Polynomial {
    Polynomial::new(vec![int(-1), -r, int(0), int(0), int(1)])
}

/// `R(Y) = Y³ + 4Y − r²`.
pub fn companion_cubic(r: &Rational) -> Result<Polynomial> {
    check_r(r)?;
    Ok(cubic_for(r))
}

/// `W³ + 2pW² + (p² − 4c)W − q²` for the depressed quartic `X⁴ + pX² + qX + c`.
pub fn resolvent_cubic(p: &Rational, q: &Rational, c: &Rational) -> Polynomial {
    Polynomial::new(vec![
        -(q * q),
        p * p - int(4) * c,
        int(2) * p,
        int(1),
    ])
}

/// Discriminant of `X⁴ + pX² + qX + c`.
pub fn depressed_quartic_discriminant(p: &Rational, q: &Rational, c: &Rational) -> Rational {
    let p2 = p * p;
    let q2 = q * q;
    let c2 = c * c;
    int(16) * &p2 * &p2 * c - int(4) * &p2 * p * &q2 - int(128) * &p2 * &c2
        + int(144) * p * &q2 * c
        - int(27) * &q2 * &q2
        + int(256) * &c2 * c
}

/// `−27r⁴ − 256`, always negative.
pub fn stewart_discriminant(r: &Rational) -> Result<Rational> {
    check_r(r)?;
    Ok(depressed_quartic_discriminant(&int(0), &-r, &int(-1)))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FactorData {
    pub a_squared: ExactOrApprox,
    pub a: ExactOrApprox,
    pub b: ExactOrApprox,
    pub b_bar: ExactOrApprox,
}

impl FactorData {
    /// Floating expansion of `(X² + aX + b)(X² − aX + b̄)`, lowest degree first.
    pub fn expanded_product(&self) -> [f64; 5] {
        let (a, b, bb) = (self.a.approx, self.b.approx, self.b_bar.approx);
        [b * bb, a * (bb - b), b + bb - a * a, 0.0, 1.0]
    }

    /// Exact quadratic factors, available only when `a`, `b`, `b̄` are rational.
    pub fn exact_factors(&self) -> Option<(Polynomial, Polynomial)> {
        let a = self.a.exact.as_ref()?;
        let b = self.b.exact.as_ref()?;
        let bb = self.b_bar.exact.as_ref()?;
        Some((
            Polynomial::new(vec![b.clone(), a.clone(), int(1)]),
            Polynomial::new(vec![bb.clone(), -a, int(1)]),
        ))
    }
}

/// The real quadratic factorization data `a², a, b, b̄`.
pub fn factor_parameters(r: &Rational, tol: &Tolerance) -> Result<FactorData> {
    check_r(r)?;
    let a_squared = monotone_root(r, tol)?;
    let sign = if r.is_negative() { -1.0 } else { 1.0 };

    let t = a_squared.approx;
    let a_num = sign * t.sqrt();
    let radical = (t * t + 4.0).sqrt();
    let b_num = 0.5 * (t + radical);
    // b·b̄ = −1 and b > 0, so this avoids the cancellation in a² − √(a⁴+4).
    let b_bar_num = -1.0 / b_num;

    let t_err = a_squared.error_bound;
    let a_err = t_err / (2.0 * a_num.abs()) + a_num.abs() * f64::EPSILON;
    let radical_err = t * t_err / radical + radical * f64::EPSILON;
    let b_err = 0.5 * (t_err + radical_err) + b_num * f64::EPSILON;
    let b_bar_err = b_err / (b_num * b_num) + b_bar_num.abs() * f64::EPSILON;

    let exact_a = a_squared
        .exact
        .as_ref()
        .and_then(rational_sqrt)
        .map(|root| if r.is_negative() { -root } else { root });

    let (a, b, b_bar) = match exact_a {
        Some(a) => {
            let a2 = &a * &a;
            let radical = r / &a;
            let half = Rational::new(1.into(), 2.into());
            let b = (&a2 + &radical) * &half;
            let b_bar = (&a2 - &radical) * &half;
            (
                ExactOrApprox::exact(a),
                ExactOrApprox::exact(b),
                ExactOrApprox::exact(b_bar),
            )
        }
        None => (
            ExactOrApprox::approx(a_num, a_err),
            ExactOrApprox::approx(b_num, b_err),
            ExactOrApprox::approx(b_bar_num, b_bar_err),
        ),
    };
    Ok(FactorData {
        a_squared,
        a,
        b,
        b_bar,
    })
}

/// Real part and (positive) imaginary part of one of the conjugate roots.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComplexPair {
    pub re: ExactOrApprox,
    pub im: ExactOrApprox,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootSet {
    /// Ascending.
    pub real_roots: [ExactOrApprox; 2],
    pub complex_pair: ComplexPair,
}

/// The four roots of `S`, from the two quadratic factors.
pub fn stewart_roots(r: &Rational, tol: &Tolerance) -> Result<RootSet> {
    let data = factor_parameters(r, tol)?;
    let rf = to_f64(r);
    let (a, b_bar, b) = (data.a.approx, data.b_bar.approx, data.b.approx);

    // X² − aX + b̄: discriminant a² − 4b̄ = 2√(a⁴+4) − a² > 0.
    let disc = (a * a - 4.0 * b_bar).sqrt();
    let big = 0.5 * (a + a.signum() * disc);
    let small = b_bar / big;

    let s = |x: f64| x.powi(4) - rf * x - 1.0;
    let ds = |x: f64| 4.0 * x.powi(3) - rf;
    let polish = |mut x: f64| {
        for _ in 0..4 {
            let step = s(x) / ds(x);
            if !step.is_finite() || s(x - step).abs() >= s(x).abs() {
                break;
            }
            x -= step;
        }
        x
    };
    let rational = stewart_polynomial(r).rational_roots()?;
    let finish = |x: f64| {
        let x = polish(x);
        match rational.iter().find(|q| (to_f64(q) - x).abs() < 1e-6 * (1.0 + x.abs())) {
            Some(q) => ExactOrApprox::exact(q.clone()),
            None => ExactOrApprox::approx(x, s(x).abs() / ds(x).abs() + x.abs() * f64::EPSILON),
        }
    };
    let mut real = [finish(big), finish(small)];
    if real[0].approx > real[1].approx {
        real.swap(0, 1);
    }

    let im = 0.5 * (4.0 * b - a * a).sqrt();
    let complex_pair = ComplexPair {
        re: ExactOrApprox::approx(-0.5 * a, 0.5 * data.a.error_bound),
        im: ExactOrApprox::approx(im, data.b.error_bound + data.a.error_bound + im * f64::EPSILON),
    };
    Ok(RootSet {
        real_roots: real,
        complex_pair,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducibilityVerdict {
    pub reducible: bool,
    /// A rational root `s` of `S`, equivalently `r = s³ − 1/s`.
    #[serde(serialize_with = "serde_opt_rational::serialize")]
    pub c1_witness: Option<Rational>,
    /// A rational `a` with `r² = a⁶ + 4a²`; never found.
    #[serde(serialize_with = "serde_opt_rational::serialize")]
    pub c2_witness: Option<Rational>,
}

pub fn reducibility_verdict(r: &Rational) -> Result<ReducibilityVerdict> {
    check_r(r)?;
    let c1_witness = stewart_polynomial(r).rational_roots()?.into_iter().next();
    let c2_witness = c2_witness_search(r)?;
    Ok(ReducibilityVerdict {
        reducible: c1_witness.is_some() || c2_witness.is_some(),
        c1_witness,
        c2_witness,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Constructibility {
    Constructible,
    NotConstructible,
    /// `S` is reducible and the resolvent criterion does not apply.
    ReducibleCase,
}

/// Status of the two real roots of `S` (they always share it).
pub fn constructibility_verdict(r: &Rational) -> Result<Constructibility> {
    if reducibility_verdict(r)?.reducible {
        return Ok(Constructibility::ReducibleCase);
    }
    let resolvent = resolvent_cubic(&int(0), &-r, &int(-1));
    Ok(if resolvent.rational_roots()?.is_empty() {
        Constructibility::NotConstructible
    } else {
        Constructibility::Constructible
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GaloisGroup {
    S4,
    A4,
    V4,
    /// D4 and C4 are not told apart.
    D4orC4,
    Reducible,
}

impl GaloisGroup {
    pub fn order_is_power_of_two(self) -> bool {
        matches!(self, GaloisGroup::V4 | GaloisGroup::D4orC4)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisClass {
    pub group: GaloisGroup,
    pub order_is_power_of_two: bool,
}

impl From<GaloisGroup> for GaloisClass {
    fn from(group: GaloisGroup) -> Self {
        GaloisClass {
            group,
            order_is_power_of_two: group.order_is_power_of_two(),
        }
    }
}

/// Galois group of an irreducible `X⁴ + pX² + qX + c` from the number of
/// rational roots of its resolvent and whether its discriminant is a square.
pub fn classify_irreducible_quartic(p: &Rational, q: &Rational, c: &Rational) -> Result<GaloisGroup> {
    let roots = resolvent_cubic(p, q, c).rational_roots()?;
    let disc = depressed_quartic_discriminant(p, q, c);
    Ok(match roots.len() {
        0 if rational_sqrt(&disc).is_some() => GaloisGroup::A4,
        0 => GaloisGroup::S4,
        1 => GaloisGroup::D4orC4,
        _ => GaloisGroup::V4,
    })
}

pub fn galois_class(r: &Rational) -> Result<GaloisClass> {
    if reducibility_verdict(r)?.reducible {
        return Ok(GaloisGroup::Reducible.into());
    }
    Ok(classify_irreducible_quartic(&int(0), &-r, &int(-1))?.into())
}

/// Everything above for one `r`, in the shape of the JSON report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StewartAnalysis {
    #[serde(with = "serde_rational")]
    pub r: Rational,
    pub polynomial: String,
    pub companion_cubic: String,
    /// Same polynomial as the companion cubic under our resolvent convention.
    pub resolvent: String,
    pub a_squared: ExactOrApprox,
    pub a: ExactOrApprox,
    pub b: ExactOrApprox,
    pub b_bar: ExactOrApprox,
    pub real_roots: [ExactOrApprox; 2],
    pub complex_pair: ComplexPair,
    pub reducible: bool,
    #[serde(serialize_with = "serde_opt_rational::serialize")]
    pub c1_witness: Option<Rational>,
    #[serde(serialize_with = "serde_opt_rational::serialize")]
    pub c2_witness: Option<Rational>,
    pub constructibility: Constructibility,
    pub galois_class: GaloisClass,
    #[serde(with = "serde_rational")]
    pub discriminant: Rational,
}

pub fn analyze(r: &Rational, tol: &Tolerance) -> Result<StewartAnalysis> {
    let param = StewartParameter::new(r.clone())?;
    let factors = factor_parameters(r, tol)?;
    let roots = stewart_roots(r, tol)?;
    let verdict = reducibility_verdict(r)?;
    Ok(StewartAnalysis {
        r: r.clone(),
        polynomial: param.polynomial().display_in("X"),
        companion_cubic: companion_cubic(r)?.display_in("Y"),
        resolvent: resolvent_cubic(&int(0), &-r, &int(-1)).display_in("W"),
        a_squared: factors.a_squared,
        a: factors.a,
        b: factors.b,
        b_bar: factors.b_bar,
        real_roots: roots.real_roots,
        complex_pair: roots.complex_pair,
        reducible: verdict.reducible,
        c1_witness: verdict.c1_witness,
        c2_witness: verdict.c2_witness,
        constructibility: constructibility_verdict(r)?,
        galois_class: galois_class(r)?,
        discriminant: stewart_discriminant(r)?,
    })
}

/// `s³ − 1/s`, the `r` for which `s` is a root of `S`.
pub fn r_from_rational_root(s: &Rational) -> Result<Rational> {
    if s.is_zero() {
        return Err(Error::Domain("s must be nonzero".into()));
    }
    Ok(s * s * s - Rational::one() / s)
}
