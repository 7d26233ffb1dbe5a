//! Extended-precision complex scalar with principal-branch logarithm.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use super::real::XReal;
use super::{Error, Result};

/// Complex number on a pair of [`XReal`]s. Complex logarithms use the
/// principal branch, Im ln z ∈ (−π, π].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XComplex {
    pub re: XReal,
    pub im: XReal,
}

impl XComplex {
    pub fn new(re: XReal, im: XReal) -> Self {
        XComplex { re, im }
    }

    pub fn from_real(re: XReal) -> Self {
        XComplex { re, im: XReal::zero() }
    }

    pub fn zero() -> Self {
        Self::from_real(XReal::zero())
    }

    pub fn one() -> Self {
        Self::from_real(XReal::one())
    }

    pub fn i() -> Self {
        XComplex { re: XReal::zero(), im: XReal::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// True when the value lies on the real axis.
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        XComplex { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sq(&self) -> XReal {
        self.re.sq() + self.im.sq()
    }

    pub fn abs(&self) -> XReal {
        self.norm_sq().sqrt().expect("norm is non-negative")
    }

    pub fn scale(&self, s: &XReal) -> Self {
        XComplex { re: &self.re * s, im: &self.im * s }
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        let d = rhs.norm_sq();
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self * &rhs.conj();
        Ok(XComplex { re: num.re / &d, im: num.im / &d })
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one().try_div(self)
    }

    /// Principal-branch logarithm: ln|z| + i·arg z with arg z ∈ (−π, π].
    pub fn ln(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("ln of zero"));
        }
        let re = self.norm_sq().ln()?.ldexp(-1);
        let im = XReal::atan2(&self.im, &self.re)?;
        Ok(XComplex { re, im })
    }

    /// Principal-branch arctangent via (i/2)·(ln(1−iz) − ln(1+iz)).
    pub fn atan(&self) -> Result<Self> {
        let iz = self * &Self::i();
        let a = (Self::one() - &iz).ln()?;
        let b = (Self::one() + &iz).ln()?;
        let diff = a - b;
        // multiply by i/2
        Ok(XComplex { re: (-&diff.im).ldexp(-1), im: diff.re.ldexp(-1) })
    }

    /// Integer power by binary exponentiation.
    pub fn pow_int(&self, n: i64) -> Result<Self> {
        if n < 0 {
            return self.pow_int(-n)?.recip();
        }
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = n as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }
}

impl fmt::Display for XComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.re, self.im)
    }
}

macro_rules! cplx_binop {
    ($trait:ident, $method:ident, $imp:expr) => {
        impl $trait<&XComplex> for &XComplex {
            type Output = XComplex;
            fn $method(self, rhs: &XComplex) -> XComplex {
                let f: fn(&XComplex, &XComplex) -> XComplex = $imp;
                f(self, rhs)
            }
        }
        impl $trait<XComplex> for XComplex {
            type Output = XComplex;
            fn $method(self, rhs: XComplex) -> XComplex {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&XComplex> for XComplex {
            type Output = XComplex;
            fn $method(self, rhs: &XComplex) -> XComplex {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<XComplex> for &XComplex {
            type Output = XComplex;
            fn $method(self, rhs: XComplex) -> XComplex {
                $trait::$method(self, &rhs)
            }
        }
    };
}

cplx_binop!(Add, add, |a, b| XComplex {
    re: &a.re + &b.re,
    im: &a.im + &b.im,
});
cplx_binop!(Sub, sub, |a, b| XComplex {
    re: &a.re - &b.re,
    im: &a.im - &b.im,
});
cplx_binop!(Mul, mul, |a, b| XComplex {
    re: &a.re * &b.re - &a.im * &b.im,
    im: &a.re * &b.im + &a.im * &b.re,
});
cplx_binop!(Div, div, |a, b| a
    .try_div(b)
    .expect("complex division by zero (use try_div)"));

impl Neg for &XComplex {
    type Output = XComplex;
    fn neg(self) -> XComplex {
        XComplex { re: -&self.re, im: -&self.im }
    }
}

impl Neg for XComplex {
    type Output = XComplex;
    fn neg(self) -> XComplex {
        XComplex { re: -self.re, im: -self.im }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xprec::consts;

    #[test]
    fn i_squared_is_minus_one() {
        let i = XComplex::i();
        assert_eq!(&i * &i, -XComplex::one());
    }

    #[test]
    fn conjugation_is_an_involution() {
        let z = XComplex::new(XReal::from_ratio(3, 7), XReal::from_ratio(-2, 5));
        assert_eq!(z.conj().conj(), z);
    }

    #[test]
    fn principal_log_of_one_plus_i() {
        let z = XComplex::new(XReal::one(), XReal::one());
        let l = z.ln().unwrap();
        let want_re = consts::ln2().ldexp(-1);
        let want_im = consts::pi().ldexp(-2);
        assert!((&l.re - &want_re).abs() <= want_re.ldexp(-180));
        assert!((&l.im - &want_im).abs() <= want_im.ldexp(-180));
    }

    #[test]
    fn log_branch_is_principal_on_negative_axis() {
        let z = XComplex::new(XReal::from_i64(-2), XReal::zero());
        let l = z.ln().unwrap();
        assert!((l.im - consts::pi()).abs() <= consts::pi().ldexp(-180));
    }

    #[test]
    fn complex_atan_of_pure_imaginary_matches_atanh() {
        // atan(iy) = i·atanh(y)
        let y = XReal::from_ratio(3, 10);
        let z = XComplex::new(XReal::zero(), y.clone());
        let a = z.atan().unwrap();
        assert!(a.re.abs() <= XReal::one().ldexp(-185));
        let want = y.atanh().unwrap();
        assert!((&a.im - &want).abs() <= want.abs().ldexp(-180));
    }
}
