//! Special-function evaluators: digamma and polygamma (orders 1–4),
//! integer zeta/eta, Catalan's constant, harmonic numbers, the complex
//! dilogarithm and trilogarithm, and the digamma kernel
//! f(k, n) = ψ((2k+2n+5)/4) − ψ((2k+2n+3)/4) in both direct and
//! finite closed form.

pub mod bernoulli;
mod catalan;
mod digamma;
mod kernel;
mod polylog;
mod zeta;

pub use catalan::catalan;
pub use digamma::{cot_derivative, digamma, polygamma};
pub use kernel::{f_finite, f_psi, half_kernel, FiniteKernel};
pub use polylog::{dilog, im_li3_1pi, re_li3_1pi, trilog};
pub use zeta::{eta_int, zeta3, zeta_int};

use crate::xprec::Rational;

/// n-th harmonic number H_n = Σ_{k=1}^n 1/k as an exact rational; H_0 = 0.
pub fn harmonic(n: u64) -> Rational {
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc = acc + Rational::from_int_pair(1, k as i64).unwrap();
    }
    acc
}

/// Errors from special-function evaluation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecFunError {
    #[error("argument outside domain: {0}")]
    Domain(&'static str),
    #[error("argument on branch cut (real axis in (1, inf))")]
    BranchCut,
    #[error("no transformation chain reaches the series disk")]
    NoReduction,
    #[error(transparent)]
    Arith(#[from] crate::xprec::Error),
}

pub type Result<T> = core::result::Result<T, SpecFunError>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xprec::{ConstName, Rational, XReal};

    #[test]
    fn harmonic_small_values() {
        assert_eq!(harmonic(0), Rational::zero());
        assert_eq!(harmonic(3), Rational::from_int_pair(11, 6).unwrap());
        assert_eq!(harmonic(5), Rational::from_int_pair(137, 60).unwrap());
    }

    #[test]
    fn harmonic_100_matches_asymptotic_oracle() {
        // H_100 ≈ ln 100 + γ + 1/200 − 1/120000 to within 1e-8
        let h = harmonic(100).to_xreal();
        let asym = XReal::from_i64(100).ln().unwrap()
            + crate::xprec::consts::constant(ConstName::EulerGamma)
            + XReal::from_ratio(1, 200)
            - XReal::from_ratio(1, 120_000);
        let diff = (&h - &asym).abs();
        assert!(diff < XReal::parse("1e-8").unwrap(), "diff {diff}");
    }
}
