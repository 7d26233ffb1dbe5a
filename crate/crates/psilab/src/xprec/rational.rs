//! Exact arbitrary-precision rationals.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::real::XReal;
use super::{Error, Result};

/// Exact rational number, always in lowest terms with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::from_integer(1.into()))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    /// Builds `num/den`; fails on a zero denominator. The result is stored
    /// in lowest terms with positive denominator.
    pub fn from_int_pair(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num.into(), den.into())))
    }

    pub fn from_bigint_pair(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    /// Parses "num/den" or a bare integer, both in decimal.
    pub fn parse(s: &str) -> Result<Self> {
        let parse_int = |t: &str| t.parse::<BigInt>().map_err(|_| Error::Parse(t.to_string()));
        match s.split_once('/') {
            Some((n, d)) => Self::from_bigint_pair(parse_int(n.trim())?, parse_int(d.trim())?),
            None => Ok(Rational(BigRational::from_integer(parse_int(s.trim())?))),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn cmp_rat(&self, rhs: &Self) -> Ordering {
        self.0.cmp(&rhs.0)
    }

    /// Rounds to working precision. Numerator and denominator are converted
    /// separately (exactly, then rounded once), followed by one division.
    pub fn to_xreal(&self) -> XReal {
        bigint_to_xreal(self.0.numer()) / bigint_to_xreal(self.0.denom())
    }

    /// Canonical "num/den" rendering (plain integer when the denominator is 1).
    pub fn canonical_string(&self) -> String {
        self.to_string()
    }
}

fn bigint_to_xreal(v: &BigInt) -> XReal {
    let (sign, digits) = v.to_u64_digits();
    let mut acc = XReal::zero();
    for limb in digits.iter().rev() {
        acc = acc.ldexp(64) + XReal::from_u64(*limb);
    }
    if sign == Sign::Minus {
        acc = -acc;
    }
    acc
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(&self.0 $op rhs.0)
            }
        }
    };
}

rat_binop!(Add, add, +);
rat_binop!(Sub, sub, -);
rat_binop!(Mul, mul, *);

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        self.try_div(rhs).expect("division by zero rational")
    }
}

impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        (&self).div(&rhs)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::from_int_pair(n, d).unwrap()
    }

    #[test]
    fn half_plus_third() {
        assert_eq!(&r(1, 2) + &r(1, 3), r(5, 6));
    }

    #[test]
    fn already_lowest_terms() {
        let v = r(11, 6);
        assert_eq!(v.numer(), &BigInt::from(11));
        assert_eq!(v.denom(), &BigInt::from(6));
    }

    #[test]
    fn negative_denominator_normalizes() {
        let v = r(3, -9);
        assert_eq!(v, r(-1, 3));
        assert_eq!(v.denom(), &BigInt::from(3));
    }

    #[test]
    fn to_xreal_long_division_oracle() {
        // 8804/3375 = 2.608592592... (digit pattern 592 repeating)
        let x = r(8804, 3375).to_xreal();
        let s = x.format_digits(34);
        assert!(s.starts_with("2.608592592592592592592592592592593"), "{s}");
    }

    #[test]
    fn zero_divisor_is_an_error() {
        assert!(Rational::from_int_pair(1, 0).is_err());
        assert!(r(1, 2).try_div(&Rational::zero()).is_err());
    }

    #[test]
    fn parse_canonical_roundtrip() {
        let v = Rational::parse("-304/105").unwrap();
        assert_eq!(v.canonical_string(), "-304/105");
        assert_eq!(Rational::parse("7").unwrap().canonical_string(), "7");
    }
}
