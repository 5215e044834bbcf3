//! The circular mirror: given a circle and points `A`, `B`, find the points
//! `I` of the circle where a ray from `A` reflects through `B`.
//!
//! After moving the circle to the unit circle, write `A = (s, t)` and
//! `B = (u, v)`. The lines `IO` and `IT` (radius and tangent at `I`) bisect
//! the angles between `IA` and `IB` exactly when the slopes of
//! `IA, IB, IO, IT` are in harmonic ratio. On the unit circle that condition
//! is the conic
//!
//! ```text
//! H:  (sv + tu)(y² − x²) + 2(su − tv)xy + (t + v)x − (s + u)y = 0
//! ```
//!
//! and with `x = (1 − z²)/(1 + z²)`, `y = 2z/(1 + z²)` it becomes
//! `Q(z) / (1 + z²)² = 0` for the quartic built by [`alhazen_quartic`].
//! The point `(−1, 0)` has no finite parameter; it lies on `H` exactly when
//! the `z⁴` coefficient of `Q` vanishes.
//!
//! Both bisector cases satisfy the harmonic condition. Each solution is
//! classified by which line bisects the angle `AIB` internally: the radius
//! ([`Classification::TrueReflection`]) or the tangent
//! ([`Classification::TangentBisector`]).

use std::f64::consts::PI;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numerics::{real_roots_detailed, Tolerance};
use crate::poly::Polynomial;
use crate::rational::{
    format_rational, int, parse_rational, serde_rational, serde_rational_seq, to_f64, Rational,
};
use crate::stewart::stewart_polynomial;

/// A point with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatPoint {
    pub x: Rational,
    pub y: Rational,
}

impl RatPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        RatPoint { x, y }
    }

    pub fn origin() -> Self {
        RatPoint::new(Rational::zero(), Rational::zero())
    }

    pub fn to_f64(&self) -> Point {
        Point::new(to_f64(&self.x), to_f64(&self.y))
    }

    pub fn norm_squared(&self) -> Rational {
        &self.x * &self.x + &self.y * &self.y
    }
}

impl Serialize for RatPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [format_rational(&self.x), format_rational(&self.y)].serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let [x, y] = <[String; 2]>::deserialize(d)?;
        Ok(RatPoint::new(
            parse_rational(&x).map_err(D::Error::custom)?,
            parse_rational(&y).map_err(D::Error::custom)?,
        ))
    }
}

/// A floating-point point, used once root finding has happened.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    fn sub(self, other: Point) -> Point {
        Point::new(self.x - other.x, self.y - other.y)
    }

    fn unit(self) -> Point {
        let n = self.norm();
        Point::new(self.x / n, self.y / n)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.x, self.y].serialize(s)
    }
}

/// A circle (center, radius) and the two points `A`, `B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MirrorScenario {
    pub center: RatPoint,
    #[serde(with = "serde_rational")]
    pub radius: Rational,
    #[serde(rename = "A")]
    pub a: RatPoint,
    #[serde(rename = "B")]
    pub b: RatPoint,
}

impl MirrorScenario {
    pub fn new(center: RatPoint, radius: Rational, a: RatPoint, b: RatPoint) -> Result<Self> {
        let scenario = MirrorScenario {
            center,
            radius,
            a,
            b,
        };
        scenario.validate()?;
        Ok(scenario)
    }

    /// The unit circle about the origin.
    pub fn unit(a: RatPoint, b: RatPoint) -> Result<Self> {
        Self::new(RatPoint::origin(), Rational::one(), a, b)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.radius.is_positive() {
            return Err(Error::InvalidScenario(format!(
                "radius must be positive, got {}",
                self.radius
            )));
        }
        if self.a == self.center && self.b == self.center {
            return Err(Error::DegenerateConfiguration(
                "A and B both coincide with the center".into(),
            ));
        }
        Ok(())
    }

    /// `P ↦ (P − center) / radius`.
    pub fn normalize(&self, p: &RatPoint) -> RatPoint {
        RatPoint::new(
            (&p.x - &self.center.x) / &self.radius,
            (&p.y - &self.center.y) / &self.radius,
        )
    }

    /// Inverse of [`normalize`](Self::normalize), in floating point.
    pub fn denormalize(&self, p: Point) -> Point {
        let r = to_f64(&self.radius);
        let c = self.center.to_f64();
        Point::new(c.x + r * p.x, c.y + r * p.y)
    }

    pub fn normalized_points(&self) -> (RatPoint, RatPoint) {
        (self.normalize(&self.a), self.normalize(&self.b))
    }
}

/// `Q(z) = c₄z⁴ + c₃z³ + c₂z² + c₁z + c₀`, not identically zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlhazenQuartic {
    /// Lowest degree first.
    coeffs: [Rational; 5],
}

impl AlhazenQuartic {
    /// From `[c₄, c₃, c₂, c₁, c₀]`.
    pub fn from_high_first(c: [Rational; 5]) -> Result<Self> {
        if c.iter().all(Zero::is_zero) {
            return Err(Error::DegenerateConfiguration(
                "all five quartic coefficients vanish".into(),
            ));
        }
        let [c4, c3, c2, c1, c0] = c;
        Ok(AlhazenQuartic {
            coeffs: [c0, c1, c2, c3, c4],
        })
    }

    /// Coefficient of `z^k`.
    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    /// `[c₄, c₃, c₂, c₁, c₀]`.
    pub fn high_first(&self) -> [Rational; 5] {
        let mut c = self.coeffs.clone();
        c.reverse();
        c
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(self.coeffs.to_vec())
    }

    /// `Some(λ)` when `self = λ·other` for a nonzero rational `λ`.
    pub fn ratio_to(&self, other: &Polynomial) -> Option<Rational> {
        let k = (0..5).find(|&k| !other.coeff(k).is_zero())?;
        let lambda = &self.coeffs[k] / other.coeff(k);
        if lambda.is_zero() {
            return None;
        }
        (0..5)
            .all(|i| self.coeffs[i] == &lambda * other.coeff(i))
            .then_some(lambda)
    }
}

impl Serialize for AlhazenQuartic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde_rational_seq::serialize(&self.high_first(), s)
    }
}

/// The quartic `Q` for `A = (s, t)`, `B = (u, v)` on the unit circle.
pub fn alhazen_quartic(a: &RatPoint, b: &RatPoint) -> Result<AlhazenQuartic> {
    let (s, t, u, v) = (&a.x, &a.y, &b.x, &b.y);
    let two = int(2);
    let sym = s * v + t * u;
    let cross = int(2) * s * u - int(2) * t * v;
    AlhazenQuartic::from_high_first([
        &sym + t + v,
        &two * (&cross + s + u),
        int(-6) * &sym,
        -&two * (&cross - s - u),
        &sym - t - v,
    ])
    .map_err(|_| Error::DegenerateConfiguration("A = B = O makes Q identically zero".into()))
}

/// The coefficient form `(a+1)c, 2(a+b+2ab), −6ac, 2(a+b−2ab), (a−1)c`,
/// i.e. the quartic for `A = (a, 0)`, `B = (b, c)`.
pub fn carrega_quartic(a: &Rational, b: &Rational, c: &Rational) -> Result<AlhazenQuartic> {
    let one = Rational::one();
    let ab2 = int(2) * a * b;
    AlhazenQuartic::from_high_first([
        (a + &one) * c,
        int(2) * (a + b + &ab2),
        int(-6) * a * c,
        int(2) * (a + b - &ab2),
        (a - &one) * c,
    ])
}

/// `H: h_sq(y² − x²) + 2·h_xy·xy + h_x·x + h_y·y = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ConicH {
    #[serde(with = "serde_rational")]
    pub h_sq: Rational,
    #[serde(with = "serde_rational")]
    pub h_xy: Rational,
    #[serde(with = "serde_rational")]
    pub h_x: Rational,
    #[serde(with = "serde_rational")]
    pub h_y: Rational,
}

impl ConicH {
    pub fn eval_exact(&self, p: &RatPoint) -> Rational {
        let (x, y) = (&p.x, &p.y);
        &self.h_sq * (y * y - x * x) + int(2) * &self.h_xy * x * y + &self.h_x * x + &self.h_y * y
    }

    pub fn eval(&self, p: Point) -> f64 {
        let (x, y) = (p.x, p.y);
        to_f64(&self.h_sq) * (y * y - x * x)
            + 2.0 * to_f64(&self.h_xy) * x * y
            + to_f64(&self.h_x) * x
            + to_f64(&self.h_y) * y
    }
}

pub fn hyperbola_coefficients(a: &RatPoint, b: &RatPoint) -> ConicH {
    let (s, t, u, v) = (&a.x, &a.y, &b.x, &b.y);
    ConicH {
        h_sq: s * v + t * u,
        h_xy: s * u - t * v,
        h_x: t + v,
        h_y: -(s + u),
    }
}

/// Left side of `H` for floating-point `A`, `B`.
fn conic_value(a: Point, b: Point, i: Point) -> f64 {
    let (s, t, u, v) = (a.x, a.y, b.x, b.y);
    let (x, y) = (i.x, i.y);
    (s * v + t * u) * (y * y - x * x) + 2.0 * (s * u - t * v) * x * y + (t + v) * x - (s + u) * y
}

/// `((1 − z²)/(1 + z²), 2z/(1 + z²))`.
pub fn circle_param(z: f64) -> Point {
    if !z.is_finite() {
        return Point::new(-1.0, 0.0);
    }
    let d = 1.0 + z * z;
    Point::new((1.0 - z * z) / d, 2.0 * z / d)
}

pub fn circle_param_exact(z: &Rational) -> RatPoint {
    let z2 = z * z;
    let d = Rational::one() + &z2;
    RatPoint::new((Rational::one() - &z2) / &d, int(2) * z / &d)
}

/// The parameter `z = y/(1 + x)` of a unit-circle point; `None` at `(−1, 0)`.
pub fn param_of(p: Point, tol: f64) -> Result<Option<f64>> {
    if (p.norm() - 1.0).abs() > tol {
        return Err(Error::Domain(format!(
            "point ({}, {}) is not on the unit circle",
            p.x, p.y
        )));
    }
    if p.x >= 0.0 {
        return Ok(Some(p.y / (1.0 + p.x)));
    }
    // y/(1 + x) = (1 − x)/y on the circle; the second form is stable for x < 0.
    if p.y.abs() <= tol {
        return Ok(None);
    }
    Ok(Some((1.0 - p.x) / p.y))
}

/// A line direction in the projective sense: slope `dy/dx`, vertical when
/// `dx = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Slope {
    dx: f64,
    dy: f64,
}

impl Slope {
    pub fn finite(m: f64) -> Self {
        Slope { dx: 1.0, dy: m }
    }

    pub fn vertical() -> Self {
        Slope { dx: 0.0, dy: 1.0 }
    }

    pub fn from_direction(dx: f64, dy: f64) -> Self {
        Slope { dx, dy }
    }

    /// Direction of the line through `from` and `to`.
    pub fn between(from: Point, to: Point) -> Self {
        Slope::from_direction(to.x - from.x, to.y - from.y)
    }

    fn unit(self) -> (f64, f64) {
        let n = self.dx.hypot(self.dy);
        (self.dx / n, self.dy / n)
    }
}

fn det(a: (f64, f64), b: (f64, f64)) -> f64 {
    a.0 * b.1 - a.1 * b.0
}

const SLOPE_EPS: f64 = 1e-12;

/// `((m₁ − m₃)(m₂ − m₄)) / ((m₂ − m₃)(m₁ − m₄))`, computed from directions so
/// that vertical lines need no special case.
pub fn cross_ratio_slopes(m1: Slope, m2: Slope, m3: Slope, m4: Slope) -> Result<f64> {
    let d = [m1.unit(), m2.unit(), m3.unit(), m4.unit()];
    if d.iter().any(|(x, y)| !x.is_finite() || !y.is_finite()) {
        return Err(Error::DegenerateConfiguration("zero-length direction".into()));
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if det(d[i], d[j]).abs() < SLOPE_EPS {
                return Err(Error::DegenerateConfiguration(format!(
                    "lines {} and {} coincide",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(det(d[0], d[2]) * det(d[1], d[3]) / (det(d[1], d[2]) * det(d[0], d[3])))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Classification {
    /// The radius bisects angle `AIB`: the reflection law holds at `I`.
    TrueReflection,
    /// The tangent bisects angle `AIB`; the radius is the external bisector.
    TangentBisector,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    /// `|H(I)|`.
    pub residual_h: f64,
    /// `|CR + 1|` for the slopes of `IA, IB, IO, IT`; `None` when two of these
    /// lines coincide (e.g. `A` on the radius through `I`).
    pub cross_ratio_deviation: Option<f64>,
    /// Deviation of the radius from bisecting `AIB`, as lines, in radians.
    pub residual_angle: f64,
    pub classification: Classification,
}

fn wrap_half_turn(angle: f64) -> f64 {
    let wrapped = angle.rem_euclid(PI);
    if wrapped > PI / 2.0 {
        wrapped - PI
    } else {
        wrapped
    }
}

/// Checks a candidate `I` on the unit circle against `A` and `B`.
pub fn verify_solution(a: Point, b: Point, i: Point, tol: f64) -> Result<VerificationReport> {
    if (i.norm() - 1.0).abs() > tol {
        return Err(Error::Domain(format!(
            "I = ({}, {}) is not on the unit circle",
            i.x, i.y
        )));
    }
    if i.dist(a) <= tol || i.dist(b) <= tol {
        return Err(Error::DegenerateConfiguration("I coincides with A or B".into()));
    }
    let residual_h = conic_value(a, b, i).abs();

    let cross_ratio_deviation = cross_ratio_slopes(
        Slope::between(i, a),
        Slope::between(i, b),
        Slope::from_direction(i.x, i.y),
        Slope::from_direction(-i.y, i.x),
    )
    .ok()
    .map(|cr| (cr + 1.0).abs());

    let to_a = a.sub(i);
    let to_b = b.sub(i);
    let residual_angle = wrap_half_turn(to_a.angle() + to_b.angle() - 2.0 * i.angle()).abs();

    let (ua, ub) = (to_a.unit(), to_b.unit());
    let internal = Point::new(ua.x + ub.x, ua.y + ub.y);
    let external = Point::new(ua.x - ub.x, ua.y - ub.y);
    let along = |d: Point| (d.x * i.x + d.y * i.y).abs();
    let across = |d: Point| (d.x * i.y - d.y * i.x).abs();
    // The two bisectors are orthogonal; test against the better-conditioned one.
    let radial_is_internal = if internal.norm() >= external.norm() {
        along(internal) >= across(internal)
    } else {
        across(external) >= along(external)
    };
    Ok(VerificationReport {
        residual_h,
        cross_ratio_deviation,
        residual_angle,
        classification: if radial_is_internal {
            Classification::TrueReflection
        } else {
            Classification::TangentBisector
        },
    })
}

fn ser_param<S: Serializer>(z: &Option<f64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match z {
        Some(z) => s.serialize_f64(*z),
        None => s.serialize_str("infinity"),
    }
}

/// One point of the circle satisfying the harmonic condition.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReflectionSolution {
    /// In the scenario's coordinates.
    pub point: Point,
    /// Parameter on the normalized circle; `None` for `(−1, 0)`.
    #[serde(serialize_with = "ser_param")]
    pub z: Option<f64>,
    /// `|H(I)|` in normalized coordinates.
    #[serde(rename = "residual_H")]
    pub residual_h: f64,
    pub residual_angle: f64,
    pub cross_ratio_deviation: Option<f64>,
    pub classification: Classification,
    /// Set when near-coincident roots of `Q` were merged into this one.
    pub double_root: bool,
}

impl ReflectionSolution {
    /// Position on the normalized unit circle.
    pub fn unit_point(&self) -> Point {
        self.z.map_or(Point::new(-1.0, 0.0), circle_param)
    }
}

/// All harmonic solutions, sorted by angle about the center.
///
/// Points of the circle equal to `A` or `B` are always roots of `Q` and are
/// not reported.
pub fn solve_mirror(scenario: &MirrorScenario, tol: &Tolerance) -> Result<Vec<ReflectionSolution>> {
    scenario.validate()?;
    tol.validate()?;
    let (an, bn) = scenario.normalized_points();
    let quartic = alhazen_quartic(&an, &bn)?;
    let coeffs: Vec<f64> = quartic.high_first().iter().map(to_f64).collect();

    let mut params: Vec<(Option<f64>, bool)> = real_roots_detailed(&coeffs, tol)?
        .into_iter()
        .map(|root| (Some(root.value), root.multiplicity > 1))
        .collect();
    if quartic.coeff(4).is_zero() {
        params.push((None, false));
    }

    let (af, bf) = (an.to_f64(), bn.to_f64());
    let coincide = 1e-9;
    let mut solutions = Vec::with_capacity(params.len());
    for (z, double_root) in params {
        let unit = z.map_or(Point::new(-1.0, 0.0), circle_param);
        if unit.dist(af) <= coincide || unit.dist(bf) <= coincide {
            continue;
        }
        let report = verify_solution(af, bf, unit, 1e-9)?;
        solutions.push(ReflectionSolution {
            point: scenario.denormalize(unit),
            z,
            residual_h: report.residual_h,
            residual_angle: report.residual_angle,
            cross_ratio_deviation: report.cross_ratio_deviation,
            classification: report.classification,
            double_root,
        });
    }
    solutions.sort_by(|p, q| p.unit_point().angle().total_cmp(&q.unit_point().angle()));
    Ok(solutions)
}

/// The unit-circle scenario whose quartic is `λ·(z⁴ − rz − 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StewartEmbedding {
    #[serde(with = "serde_rational")]
    pub r: Rational,
    /// `A = (σ, σ)`.
    #[serde(with = "serde_rational")]
    pub sigma: Rational,
    pub scenario: MirrorScenario,
    #[serde(with = "serde_rational")]
    pub lambda: Rational,
    pub quartic: AlhazenQuartic,
}

/// `σ = −r / (2(r + 4))`, `A = (σ, σ)`, `B = (w, −w)` with `w = −σ/(4σ + 1)`,
/// `λ = 2σ(2σ + 1)/(4σ + 1)`.
pub fn stewart_scenario(r: &Rational) -> Result<StewartEmbedding> {
    if r.is_zero() {
        return Err(Error::Domain("r must be a nonzero rational".into()));
    }
    let four = int(4);
    if r.abs() == four {
        return Err(Error::EmbeddingDegenerate(format!(
            "r = {r} has no mirror embedding"
        )));
    }
    let sigma = -r / (int(2) * (r + &four));
    let denom = &four * &sigma + Rational::one();
    let w = -&sigma / &denom;
    let lambda = int(2) * &sigma * (int(2) * &sigma + Rational::one()) / &denom;
    let scenario = MirrorScenario::unit(
        RatPoint::new(sigma.clone(), sigma.clone()),
        RatPoint::new(w.clone(), -w),
    )?;
    let quartic = alhazen_quartic(&scenario.a, &scenario.b)?;
    debug_assert_eq!(quartic.ratio_to(&stewart_polynomial(r)), Some(lambda.clone()));
    Ok(StewartEmbedding {
        r: r.clone(),
        sigma,
        scenario,
        lambda,
        quartic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn pt(x: Rational, y: Rational) -> RatPoint {
        RatPoint::new(x, y)
    }

    fn coeffs(q4: &AlhazenQuartic) -> [Rational; 5] {
        q4.high_first()
    }

    #[test]
    fn quartic_examples() {
        let a = pt(q(1, 2), int(0));
        let b = pt(int(0), q(1, 2));
        assert_eq!(
            coeffs(&alhazen_quartic(&a, &b).unwrap()),
            [q(3, 4), int(1), q(-3, 2), int(1), q(-1, 4)]
        );
        let b2 = pt(q(-1, 2), int(0));
        assert_eq!(
            coeffs(&alhazen_quartic(&a, &b2).unwrap()),
            [int(0), int(-1), int(0), int(1), int(0)]
        );
        assert_eq!(alhazen_quartic(&a, &b), alhazen_quartic(&b, &a));
        assert!(matches!(
            alhazen_quartic(&RatPoint::origin(), &RatPoint::origin()),
            Err(Error::DegenerateConfiguration(_))
        ));
    }

    #[test]
    fn carrega_examples() {
        assert_eq!(
            coeffs(&carrega_quartic(&q(1, 2), &int(0), &q(1, 2)).unwrap()),
            [q(3, 4), int(1), q(-3, 2), int(1), q(-1, 4)]
        );
        assert_eq!(
            coeffs(&carrega_quartic(&int(1), &int(1), &int(1)).unwrap()),
            [int(2), int(8), int(-6), int(0), int(0)]
        );
    }

    #[test]
    fn quartic_is_the_conic_pulled_back() {
        // (1 + z²)² H(x(z), y(z)) = −Q(z) exactly, checked at many rational z.
        let a = pt(q(3, 7), q(-5, 4));
        let b = pt(q(-2, 9), q(1, 3));
        let h = hyperbola_coefficients(&a, &b);
        let poly = alhazen_quartic(&a, &b).unwrap().to_polynomial();
        for n in -6..=6 {
            for d in 1..=4 {
                let z = q(n, d);
                let w = Rational::one() + &z * &z;
                let lhs = &w * &w * h.eval_exact(&circle_param_exact(&z));
                assert_eq!(lhs, -poly.eval(&z), "z = {z}");
            }
        }
        // H(−1, 0) = −c₄.
        assert_eq!(
            h.eval_exact(&pt(int(-1), int(0))),
            -alhazen_quartic(&a, &b).unwrap().coeff(4)
        );
    }

    #[test]
    fn hyperbola_examples() {
        let a = pt(q(1, 2), int(0));
        let b = pt(int(0), q(1, 2));
        let h = hyperbola_coefficients(&a, &b);
        assert_eq!((h.h_sq.clone(), h.h_xy.clone()), (q(1, 4), int(0)));
        assert_eq!((h.h_x.clone(), h.h_y.clone()), (q(1, 2), q(-1, 2)));
        assert_eq!(h.eval_exact(&RatPoint::origin()), int(0));
        let s = 0.5f64.sqrt();
        assert!(h.eval(Point::new(s, s)).abs() < 1e-15);
    }

    #[test]
    fn parametrization() {
        assert_eq!(circle_param(0.0), Point::new(1.0, 0.0));
        assert_eq!(circle_param(1.0), Point::new(0.0, 1.0));
        let p = circle_param(2f64.sqrt() - 1.0);
        let s = 0.5f64.sqrt();
        assert!((p.x - s).abs() < 1e-15 && (p.y - s).abs() < 1e-15);

        assert_eq!(param_of(Point::new(0.0, 1.0), 1e-12).unwrap(), Some(1.0));
        assert_eq!(param_of(Point::new(1.0, 0.0), 1e-12).unwrap(), Some(0.0));
        assert_eq!(param_of(Point::new(-1.0, 0.0), 1e-12).unwrap(), None);
        assert!(param_of(Point::new(0.5, 0.5), 1e-12).is_err());
        for z in [-30.0, -2.0, -0.3, 0.7, 5.0] {
            let back = param_of(circle_param(z), 1e-12).unwrap().unwrap();
            assert!((back - z).abs() < 1e-12 * (1.0 + z * z), "{z} -> {back}");
        }
    }

    #[test]
    fn cross_ratio_examples() {
        let cr = cross_ratio_slopes(
            Slope::finite(1.0),
            Slope::finite(-1.0),
            Slope::finite(0.0),
            Slope::vertical(),
        )
        .unwrap();
        assert!((cr + 1.0).abs() < 1e-15);
        assert!(matches!(
            cross_ratio_slopes(
                Slope::finite(2.0),
                Slope::finite(2.0),
                Slope::finite(0.0),
                Slope::vertical()
            ),
            Err(Error::DegenerateConfiguration(_))
        ));
        // Agrees with the slope formula when all slopes are finite.
        let (m1, m2, m3, m4) = (0.3, -2.0, 1.5, 4.0);
        let direct = ((m1 - m3) * (m2 - m4)) / ((m2 - m3) * (m1 - m4));
        let cr = cross_ratio_slopes(
            Slope::finite(m1),
            Slope::finite(m2),
            Slope::finite(m3),
            Slope::finite(m4),
        )
        .unwrap();
        assert!((cr - direct).abs() < 1e-12);
    }

    #[test]
    fn verification_examples() {
        let a = Point::new(0.5, 0.0);
        let b = Point::new(0.0, 0.5);
        let s = 0.5f64.sqrt();
        for i in [Point::new(s, s), Point::new(-s, -s)] {
            let rep = verify_solution(a, b, i, 1e-12).unwrap();
            assert!(rep.residual_h < 1e-12);
            assert!(rep.residual_angle < 1e-12);
            assert!(rep.cross_ratio_deviation.unwrap() < 1e-12);
            assert_eq!(rep.classification, Classification::TrueReflection);
        }
        let rep = verify_solution(a, b, Point::new(1.0, 0.0), 1e-12).unwrap();
        assert!((rep.residual_h - 0.25).abs() < 1e-15);
        assert!(rep.cross_ratio_deviation.is_none_or(|d| d > 0.1));

        assert!(matches!(
            verify_solution(a, b, Point::new(0.5, 0.5), 1e-9),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            verify_solution(Point::new(1.0, 0.0), b, Point::new(1.0, 0.0), 1e-9),
            Err(Error::DegenerateConfiguration(_))
        ));
    }

    #[test]
    fn tangent_bisector_classification() {
        // A and B mirror each other across the tangent x = 1 at (1, 0).
        let a = Point::new(2.0, 1.0);
        let b = Point::new(0.0, 1.0);
        let rep = verify_solution(a, b, Point::new(1.0, 0.0), 1e-12).unwrap();
        assert_eq!(rep.classification, Classification::TangentBisector);
        assert!(rep.residual_h < 1e-15);
    }

    #[test]
    fn solve_diagonal_case() {
        let scenario = MirrorScenario::unit(pt(q(1, 2), int(0)), pt(int(0), q(1, 2))).unwrap();
        let sols = solve_mirror(&scenario, &Tolerance::default()).unwrap();
        assert_eq!(sols.len(), 2);
        let s = 0.5f64.sqrt();
        let want = [(-s, -s, -1.0 - 2f64.sqrt()), (s, s, 2f64.sqrt() - 1.0)];
        for (sol, (x, y, z)) in sols.iter().zip(want) {
            assert!((sol.point.x - x).abs() < 1e-12 && (sol.point.y - y).abs() < 1e-12);
            assert!((sol.z.unwrap() - z).abs() < 1e-12);
            assert_eq!(sol.classification, Classification::TrueReflection);
        }
    }

    #[test]
    fn solve_with_degree_drop() {
        let scenario = MirrorScenario::unit(pt(q(1, 2), int(0)), pt(q(-1, 2), int(0))).unwrap();
        let sols = solve_mirror(&scenario, &Tolerance::default()).unwrap();
        let pts: Vec<Point> = sols.iter().map(|s| s.point).collect();
        let want = [(0.0, -1.0), (1.0, 0.0), (0.0, 1.0), (-1.0, 0.0)];
        assert_eq!(pts.len(), 4);
        for (p, (x, y)) in pts.iter().zip(want) {
            assert!((p.x - x).abs() < 1e-12 && (p.y - y).abs() < 1e-12, "{p:?}");
        }
        assert_eq!(sols[3].z, None);
    }

    #[test]
    fn solve_rejects_bad_scenarios() {
        let bad = MirrorScenario {
            center: RatPoint::origin(),
            radius: int(0),
            a: pt(int(1), int(2)),
            b: pt(int(0), int(1)),
        };
        assert!(matches!(solve_mirror(&bad, &Tolerance::default()), Err(Error::InvalidScenario(_))));
        let c = pt(int(3), int(3));
        assert!(matches!(
            MirrorScenario::new(c.clone(), int(2), c.clone(), c),
            Err(Error::DegenerateConfiguration(_))
        ));
    }

    #[test]
    fn solve_translated_and_scaled() {
        let scenario = MirrorScenario::new(
            pt(int(3), int(-2)),
            int(4),
            pt(int(5), int(-2)),
            pt(int(3), int(0)),
        )
        .unwrap();
        let sols = solve_mirror(&scenario, &Tolerance::default()).unwrap();
        assert_eq!(sols.len(), 2);
        let d = 4.0 * 0.5f64.sqrt();
        assert!((sols[1].point.x - (3.0 + d)).abs() < 1e-12);
        assert!((sols[1].point.y - (-2.0 + d)).abs() < 1e-12);
    }

    #[test]
    fn point_on_circle_is_not_a_solution() {
        let scenario = MirrorScenario::unit(pt(int(1), int(0)), pt(int(0), q(1, 2))).unwrap();
        let sols = solve_mirror(&scenario, &Tolerance::default()).unwrap();
        assert!(sols.iter().all(|s| s.unit_point().dist(Point::new(1.0, 0.0)) > 1e-6));
    }

    #[test]
    fn embedding_examples() {
        let e = stewart_scenario(&int(1)).unwrap();
        assert_eq!(e.scenario.a, pt(q(-1, 10), q(-1, 10)));
        assert_eq!(e.scenario.b, pt(q(1, 6), q(-1, 6)));
        assert_eq!(e.lambda, q(-4, 15));
        assert_eq!(e.quartic.to_polynomial(), stewart_polynomial(&int(1)).scale(&q(-4, 15)));
        assert!(matches!(stewart_scenario(&int(4)), Err(Error::EmbeddingDegenerate(_))));
        assert!(matches!(stewart_scenario(&int(-4)), Err(Error::EmbeddingDegenerate(_))));
        assert!(matches!(stewart_scenario(&int(0)), Err(Error::Domain(_))));
    }

    #[test]
    fn embedded_scenario_solutions() {
        let e = stewart_scenario(&int(1)).unwrap();
        let sols = solve_mirror(&e.scenario, &Tolerance::default()).unwrap();
        assert_eq!(sols.len(), 2);
        let want = [(0.31157, -0.95022), (-0.19686, 0.98043)];
        for (sol, (x, y)) in sols.iter().zip(want) {
            assert!((sol.point.x - x).abs() < 1e-5 && (sol.point.y - y).abs() < 1e-5, "{:?}", sol.point);
        }
        let zs: Vec<f64> = sols.iter().map(|s| s.z.unwrap()).collect();
        assert!((zs[0] - -0.724492).abs() < 1e-6 && (zs[1] - 1.220744).abs() < 1e-6);
    }

    #[test]
    fn scenario_json_round_trip() {
        let text = r#"{"center":["1/2","0"],"radius":"3/2","A":["-1","1/3"],"B":["2","0"]}"#;
        let scenario: MirrorScenario = serde_json::from_str(text).unwrap();
        assert_eq!(scenario.radius, q(3, 2));
        assert_eq!(scenario.a, pt(int(-1), q(1, 3)));
        assert_eq!(serde_json::to_string(&scenario).unwrap(), text);
        assert!(serde_json::from_str::<MirrorScenario>(r#"{"center":["x","0"],"radius":"1","A":["0","0"],"B":["1","1"]}"#).is_err());
    }
}
