//! Exact analysis of the quartics `X⁴ − rX − 1` and of the circular-mirror
//! (Alhazen) problem.
//!
//! * [`rational`], [`poly`]: exact rationals and univariate polynomials with
//!   rational-root extraction.
//! * [`stewart`]: the real factorization of `X⁴ − rX − 1`, reducibility over
//!   ℚ, constructibility of its real roots and its Galois group class.
//! * [`mirror`]: the quartic whose real roots give the reflection points on
//!   a circle, the solver built on it, and the scenario realizing any
//!   `X⁴ − rX − 1` as such a quartic.
//! * [`diophantine`]: bounded search for `x⁴ + 4y⁴ = z²`, primitive
//!   Pythagorean triples, and the search for a rational `a` with
//!   `r² = a⁶ + 4a²`.
//! * [`numerics`]: root finding with explicit tolerances.
//! * [`svg`], [`cli`]: figures and the command line.

pub mod cli;
pub mod diophantine;
pub mod error;
pub mod mirror;
pub mod numerics;
pub mod poly;
pub mod rational;
pub mod stewart;
pub mod svg;

pub use error::{Error, Result};
pub use mirror::{
    alhazen_quartic, carrega_quartic, solve_mirror, stewart_scenario, verify_solution,
    Classification, MirrorScenario, Point, RatPoint, ReflectionSolution,
};
pub use numerics::{ExactOrApprox, Tolerance};
pub use poly::Polynomial;
pub use rational::{make_rational, parse_rational, rational_sqrt, Rational};
pub use stewart::{
    analyze, constructibility_verdict, galois_class, reducibility_verdict, Constructibility,
    GaloisGroup,
};
