//! The extended-precision real scalar.

use core::cell::RefCell;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};

use super::{Error, Result, PREC_BITS, WARM_BITS};

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    // Per-thread constant cache, warmed past the working precision so that
    // cached-constant rounding does not depend on request order.
    static CONSTS: RefCell<Consts> = RefCell::new({
        let mut cc = Consts::new().expect("constant cache");
        let _ = cc.pi(WARM_BITS, RM);
        let _ = cc.e(WARM_BITS, RM);
        let _ = cc.ln_2(WARM_BITS, RM);
        let _ = cc.ln_10(WARM_BITS, RM);
        cc
    });
}

pub(crate) fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

/// Extended-precision real number at the fixed working precision
/// [`PREC_BITS`]. Always finite; operations that could leave the domain
/// return [`Error`] instead of NaN.
#[derive(Clone, Debug)]
pub struct XReal(pub(crate) BigFloat);

impl XReal {
    pub(crate) fn from_raw(v: BigFloat) -> Self {
        debug_assert!(!v.is_nan() && !v.is_inf(), "non-finite XReal");
        XReal(v)
    }

    pub fn zero() -> Self {
        XReal(BigFloat::from_word(0, PREC_BITS))
    }

    pub fn one() -> Self {
        XReal(BigFloat::from_word(1, PREC_BITS))
    }

    pub fn from_i64(v: i64) -> Self {
        XReal(BigFloat::from_i64(v, PREC_BITS))
    }

    pub fn from_u64(v: u64) -> Self {
        XReal(BigFloat::from_u64(v, PREC_BITS))
    }

    /// Exact ratio of two small integers.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i64(num).try_div(&Self::from_i64(den)).unwrap()
    }

    /// Parses a decimal string (scientific notation accepted, up to 36+
    /// significant digits are preserved losslessly within working precision).
    pub fn parse(s: &str) -> Result<Self> {
        let v = with_consts(|cc| BigFloat::parse(s, Radix::Dec, PREC_BITS, RM, cc));
        if v.is_nan() || v.is_inf() {
            return Err(Error::Parse(s.to_string()));
        }
        Ok(XReal(v))
    }

    /// Formats to `digits` significant decimal digits in scientific notation.
    pub fn format_digits(&self, digits: usize) -> String {
        assert!(digits >= 1);
        if self.0.is_zero() {
            return format!("0.{}e+0", "0".repeat(digits.saturating_sub(1)));
        }
        let (sign, mant, exp) = with_consts(|cc| self.0.convert_to_radix(Radix::Dec, RM, cc))
            .expect("finite value converts");
        // `mant` holds decimal digits d0 d1 d2 ... with value 0.d0d1... * 10^exp.
        let mut ds: Vec<u8> = mant;
        while ds.len() < digits + 1 {
            ds.push(0);
        }
        // round at position `digits`
        let mut exp10 = exp as i64 - 1; // exponent for d0.d1d2... form
        if ds[digits] >= 5 {
            let mut i = digits;
            loop {
                if i == 0 {
                    // 9.99... rolled over to 10.0...
                    ds.insert(0, 1);
                    exp10 += 1;
                    break;
                }
                i -= 1;
                if ds[i] == 9 {
                    ds[i] = 0;
                } else {
                    ds[i] += 1;
                    break;
                }
            }
        }
        let lead = ds[0];
        let tail: String = ds[1..digits].iter().map(|d| (b'0' + d) as char).collect();
        let sgn = if sign == Sign::Neg { "-" } else { "" };
        if digits == 1 {
            format!("{sgn}{lead}e{}{}", if exp10 >= 0 { "+" } else { "-" }, exp10.abs())
        } else {
            format!("{sgn}{lead}.{tail}e{}{}", if exp10 >= 0 { "+" } else { "-" }, exp10.abs())
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative() && !self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive() && !self.0.is_zero()
    }

    pub fn abs(&self) -> Self {
        XReal(self.0.abs())
    }

    /// Binary exponent, or `None` for zero.
    pub fn exponent(&self) -> Option<i32> {
        if self.0.is_zero() {
            None
        } else {
            self.0.exponent()
        }
    }

    /// `self * 2^k`, exact.
    pub fn ldexp(&self, k: i32) -> Self {
        if self.0.is_zero() {
            return self.clone();
        }
        let mut v = self.0.clone();
        let e = v.exponent().expect("finite");
        v.set_exponent(e + k);
        XReal(v)
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(XReal(self.0.div(&rhs.0, PREC_BITS, RM)))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(XReal(self.0.reciprocal(PREC_BITS, RM)))
    }

    pub fn sqrt(&self) -> Result<Self> {
        if self.is_negative() {
            return Err(Error::Domain("sqrt of negative number"));
        }
        Ok(XReal(self.0.sqrt(PREC_BITS, RM)))
    }

    /// Cube root (defined for all reals).
    pub fn cbrt(&self) -> Self {
        XReal(self.0.cbrt(PREC_BITS, RM))
    }

    pub fn ln(&self) -> Result<Self> {
        if !self.is_positive() {
            return Err(Error::Domain("ln requires a positive argument"));
        }
        Ok(with_consts(|cc| XReal(self.0.ln(PREC_BITS, RM, cc))))
    }

    pub fn exp(&self) -> Self {
        with_consts(|cc| XReal(self.0.exp(PREC_BITS, RM, cc)))
    }

    pub fn atan(&self) -> Self {
        with_consts(|cc| XReal(self.0.atan(PREC_BITS, RM, cc)))
    }

    /// Principal-branch `atan2(y, x)`; error only at the origin.
    pub fn atan2(y: &Self, x: &Self) -> Result<Self> {
        let pi = super::consts::pi();
        if x.is_zero() && y.is_zero() {
            return Err(Error::Domain("atan2 at the origin"));
        }
        if x.is_positive() {
            return Ok(y.try_div(x).unwrap().atan());
        }
        if x.is_zero() {
            let half_pi = pi.ldexp(-1);
            return Ok(if y.is_positive() { half_pi } else { -&half_pi });
        }
        // x < 0: shift by ±π; y == 0 maps to +π (principal branch upper side)
        let base = y.try_div(x).unwrap().atan();
        if y.is_negative() {
            Ok(&base - &pi)
        } else {
            Ok(&base + &pi)
        }
    }

    /// Inverse hyperbolic tangent via the log form ½·ln((1+x)/(1−x)).
    pub fn atanh(&self) -> Result<Self> {
        let one = Self::one();
        let num = &one + self;
        let den = &one - self;
        if !num.is_positive() || !den.is_positive() {
            return Err(Error::Domain("atanh requires |x| < 1"));
        }
        Ok(num.try_div(&den).unwrap().ln().unwrap().ldexp(-1))
    }

    pub fn sin(&self) -> Self {
        with_consts(|cc| XReal(self.0.sin(PREC_BITS, RM, cc)))
    }

    pub fn cos(&self) -> Self {
        with_consts(|cc| XReal(self.0.cos(PREC_BITS, RM, cc)))
    }

    pub fn sinh(&self) -> Self {
        with_consts(|cc| XReal(self.0.sinh(PREC_BITS, RM, cc)))
    }

    pub fn cosh(&self) -> Self {
        with_consts(|cc| XReal(self.0.cosh(PREC_BITS, RM, cc)))
    }

    /// Integer power by binary exponentiation; `0^0 = 1`.
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

    /// Square, a frequent special case.
    pub fn sq(&self) -> Self {
        self * self
    }

    /// Conversion for coarse, non-critical estimates (budget heuristics).
    pub fn to_f64_approx(&self) -> f64 {
        self.format_digits(17).parse::<f64>().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for XReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_digits(36))
    }
}

impl PartialEq for XReal {
    fn eq(&self, other: &Self) -> bool {
        self.0.cmp(&other.0) == Some(0)
    }
}

impl Eq for XReal {}

impl PartialOrd for XReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for XReal {
    fn cmp(&self, other: &Self) -> Ordering {
        let c = self.0.cmp(&other.0).expect("finite values compare");
        c.cmp(&0)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $imp:expr) => {
        impl $trait<&XReal> for &XReal {
            type Output = XReal;
            fn $method(self, rhs: &XReal) -> XReal {
                let f: fn(&XReal, &XReal) -> XReal = $imp;
                f(self, rhs)
            }
        }
        impl $trait<XReal> for XReal {
            type Output = XReal;
            fn $method(self, rhs: XReal) -> XReal {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&XReal> for XReal {
            type Output = XReal;
            fn $method(self, rhs: &XReal) -> XReal {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<XReal> for &XReal {
            type Output = XReal;
            fn $method(self, rhs: XReal) -> XReal {
                $trait::$method(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| XReal(a.0.add(&b.0, PREC_BITS, RM)));
binop!(Sub, sub, |a, b| XReal(a.0.sub(&b.0, PREC_BITS, RM)));
binop!(Mul, mul, |a, b| XReal(a.0.mul(&b.0, PREC_BITS, RM)));
binop!(Div, div, |a, b| a
    .try_div(b)
    .expect("division by zero (use try_div for fallible division)"));

impl Neg for &XReal {
    type Output = XReal;
    fn neg(self) -> XReal {
        XReal(self.0.neg())
    }
}

impl Neg for XReal {
    type Output = XReal;
    fn neg(self) -> XReal {
        XReal(self.0.neg())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn third_has_33_plus_correct_digits() {
        let third = XReal::from_ratio(1, 3);
        let s = third.format_digits(36);
        assert!(s.starts_with("3.33333333333333333333333333333333"), "{s}");
        assert!(s.ends_with("e-1"), "{s}");
    }

    #[test]
    fn decimal_roundtrip_36_digits() {
        let s = "7.24999999999999999999999999999999917e+0";
        let x = XReal::parse(s).unwrap();
        assert_eq!(x.format_digits(36), s);
    }

    #[test]
    fn format_carry_propagation() {
        let x = XReal::parse("9.9999999999999999999e+0").unwrap();
        assert_eq!(x.format_digits(6), "1.00000e+1");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let e = XReal::one().try_div(&XReal::zero());
        assert_eq!(e.unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn ln_domain_checked() {
        assert!(XReal::from_i64(-3).ln().is_err());
        assert!(XReal::zero().ln().is_err());
    }

    #[test]
    fn pow_int_matches_repeated_multiplication() {
        let x = XReal::from_ratio(7, 5);
        let mut acc = XReal::one();
        for _ in 0..11 {
            acc = &acc * &x;
        }
        let d = (&acc - &x.pow_int(11).unwrap()).abs();
        assert!(d <= acc.abs().ldexp(-(PREC_BITS as i32) + 8));
    }

    #[test]
    fn ldexp_is_exact() {
        let x = XReal::from_ratio(3, 7);
        assert_eq!(x.ldexp(5), &x * &XReal::from_i64(32));
    }
}
