//! Fundamental constants at working precision.
//!
//! π and ln 2 come from the backing bigfloat's verified algorithms
//! (Chudnovsky binary splitting and argument-reduced series). Euler's
//! constant is derived at startup from the Euler–Maclaurin expansion of
//! H_N − ln N at N = 128, so ln 128 = 7·ln 2 reuses the cached ln 2 and the
//! tail uses the exact Bernoulli table; the remainder at N = 128 with
//! B₂…B₆₄ is far below working precision.

use std::sync::OnceLock;

use astro_float::RoundingMode;

use super::real::{with_consts, XReal};
use super::{Error, Result, PREC_BITS};
use crate::specfun::bernoulli;

/// Names of the fundamental cached constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstName {
    Pi,
    Ln2,
    EulerGamma,
}

/// Looks up a fundamental constant; unknown names are unrepresentable by
/// construction of [`ConstName`].
pub fn constant(name: ConstName) -> XReal {
    match name {
        ConstName::Pi => pi(),
        ConstName::Ln2 => ln2(),
        ConstName::EulerGamma => euler_gamma(),
    }
}

/// Fallible lookup by string name, for the CLI surface.
pub fn constant_by_name(name: &str) -> Result<XReal> {
    match name {
        "pi" => Ok(pi()),
        "ln2" => Ok(ln2()),
        "euler_gamma" => Ok(euler_gamma()),
        _ => Err(Error::Domain("unknown constant name")),
    }
}

pub fn pi() -> XReal {
    static PI: OnceLock<XReal> = OnceLock::new();
    PI.get_or_init(|| XReal::from_raw(with_consts(|cc| cc.pi(PREC_BITS, RoundingMode::ToEven))))
        .clone()
}

pub fn ln2() -> XReal {
    static LN2: OnceLock<XReal> = OnceLock::new();
    LN2.get_or_init(|| XReal::from_raw(with_consts(|cc| cc.ln_2(PREC_BITS, RoundingMode::ToEven))))
        .clone()
}

pub fn euler_gamma() -> XReal {
    static GAMMA: OnceLock<XReal> = OnceLock::new();
    GAMMA
        .get_or_init(|| {
            const N: u64 = 128;
            let h = crate::specfun::harmonic(N).to_xreal();
            let ln_n = ln2() * XReal::from_i64(7); // ln 128
            let n = XReal::from_u64(N);
            let mut acc = &h - &ln_n - XReal::one() / (&n + &n);
            // + sum_j B_{2j} / (2j N^{2j})
            let inv_n2 = (&n * &n).recip().unwrap();
            let mut npow = inv_n2.clone();
            for j in 1..=bernoulli::TABLE_LEN {
                let b = bernoulli::b2j(j).to_xreal();
                acc = &acc + &(&b * &npow) / XReal::from_u64(2 * j as u64);
                npow = &npow * &inv_n2;
            }
            acc
        })
        .clone()
}
