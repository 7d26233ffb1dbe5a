//! Extended-precision scalars and exact rationals.
//!
//! [`XReal`] wraps a software big-float at a fixed working precision of
//! 192 bits (~57 significant decimal digits), comfortably above the
//! crate-wide contract of 32 significant digits with primitive relative
//! error ≤ 1e-32. All values are finite by construction: out-of-domain
//! inputs surface as [`Error`], never as NaN.

mod complex;
mod consts;
mod rational;
mod real;

pub use complex::XComplex;
pub use consts::ConstName;
pub use rational::Rational;
pub use real::XReal;

/// Working precision in bits for every `XReal` operation.
pub const PREC_BITS: usize = 192;

/// Precision used when warming the per-thread constant cache. Keeping the
/// cache ahead of `PREC_BITS` makes cached-constant rounding independent of
/// request order.
pub(crate) const WARM_BITS: usize = 384;

/// Errors from extended-precision arithmetic and elementary functions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("domain violation: {0}")]
    Domain(&'static str),
    #[error("argument on branch cut: {0}")]
    BranchCut(&'static str),
    #[error("could not parse decimal number: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
