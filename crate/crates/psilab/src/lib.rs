//! High-precision verification laboratory for a family of closed-form
//! identities: digamma-kernel series, polylogarithm special values,
//! alternating harmonic sums, and log-trigonometric integrals over (0,1).
//!
//! The crate is organized as a small stack:
//!
//! * [`xprec`] — extended-precision real/complex scalars (≥ 32 significant
//!   decimal digits) and exact rationals,
//! * [`specfun`] — digamma/polygamma, integer zeta/eta, Catalan's constant,
//!   complex di/trilogarithm, and the kernel ψ((2k+2n+5)/4) − ψ((2k+2n+3)/4),
//! * [`closedform`] — exact rational-coefficient combinations over a fixed
//!   12-constant basis; every theorem right-hand side is built here,
//! * [`quadrature`] — tanh-sinh (double exponential) integration plus the
//!   catalogue of integrands under study,
//! * [`series`] — summation engines (alternating acceleration, Euler–Maclaurin
//!   tails) and the Θ₁/Θ₂ series families,
//! * [`registry`] — the identity registry binding each left-hand side to its
//!   closed form with a tolerance.

pub mod closedform;
pub mod quadrature;
pub mod registry;
pub mod series;
pub mod specfun;
pub mod xprec;

pub use xprec::{Rational, XComplex, XReal};
