//! Catalan's constant.

use std::sync::OnceLock;

use super::bernoulli;
use crate::xprec::{consts, Rational, XReal};

/// Catalan's constant G = Σ (−1)^k/(2k+1)², computed from the Clausen-type
/// expansion at θ = π/2:
///
///   G = θ − θ·ln θ + Σ_{n≥1} ζ(2n)/(n(2n+1)) · θ^{2n+1}/(2π)^{2n}
///
/// with ζ(2n)/(2π)^{2n} = |B₂ₙ|/(2·(2n)!). The ratio per term is 1/16
/// (≈ 1.2 decimal digits per term), and the exact Bernoulli table covers
/// the ~50 terms needed at working precision.
pub fn catalan() -> XReal {
    static G: OnceLock<XReal> = OnceLock::new();
    G.get_or_init(|| {
        let theta = consts::pi().ldexp(-1);
        let mut sum = &theta - &(&theta * &theta.ln().expect("pi/2 > 0"));
        // q_n = theta^{2n+1}/(2pi)^{2n}; with 2pi = 4 theta this is theta/16^n,
        // so the per-term ratio is exactly a binary shift
        let mut q = theta.ldexp(-4);
        let mut fact = Rational::from_int(2); // (2n)! at n = 1
        for n in 1..=bernoulli::TABLE_LEN {
            let coeff = bernoulli::b2j(n)
                .abs()
                .try_div(&(Rational::from_int(2) * &fact))
                .unwrap()
                .try_div(&Rational::from_int_pair(n as i64 * (2 * n as i64 + 1), 1).unwrap())
                .unwrap();
            sum = sum + coeff.to_xreal() * &q;
            q = q.ldexp(-4); // * theta^2/(2pi)^2 = 1/16
            let t = 2 * n as i64;
            fact = fact * Rational::from_int(t + 1) * Rational::from_int(t + 2);
        }
        sum
    })
    .clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_ten_digits() {
        assert!(catalan().format_digits(11).starts_with("9.159655941"));
    }

    #[test]
    fn matches_frozen_oracle_literal() {
        let want = XReal::parse("9.15965594177219015054603514932384110774149374282e-1").unwrap();
        assert!((catalan() - want).abs() < XReal::one().ldexp(-120));
    }

    #[test]
    fn central_binomial_formula_oracle() {
        // 8G = pi ln(2 + sqrt 3) + 3 sum_{k>=0} 1/((2k+1)^2 C(2k,k))
        let sqrt3 = XReal::from_i64(3).sqrt().unwrap();
        let mut sum = Rational::zero();
        let mut binom = Rational::one(); // C(0,0)
        for k in 0i64..120 {
            sum = sum
                + Rational::one()
                    .try_div(&(Rational::from_int((2 * k + 1) * (2 * k + 1)) * &binom))
                    .unwrap();
            binom = binom * Rational::from_int_pair(2 * (2 * k + 1), k + 1).unwrap();
        }
        let rhs = crate::xprec::consts::pi() * (XReal::from_i64(2) + sqrt3).ln().unwrap()
            + XReal::from_i64(3) * sum.to_xreal();
        let diff = (catalan().ldexp(3) - rhs).abs();
        assert!(diff < XReal::one().ldexp(-170), "diff {diff}");
    }
}
