//! Digamma and polygamma via recurrence shift plus Bernoulli asymptotics.

use std::sync::OnceLock;

use super::bernoulli;
use super::{Result, SpecFunError};
use crate::xprec::{consts, Rational, XReal};

/// Arguments are shifted upward past this point before the asymptotic
/// expansion is applied. With the B₂…B₆₄ table the expansion remainder at
/// x = 40 sits below the 192-bit noise floor.
const SHIFT: i64 = 40;

/// ψ(x) for x > 0: upward recurrence ψ(x+1) = ψ(x) + 1/x to x ≥ 40, then
/// ψ(x) ≈ ln x − 1/(2x) − Σ B₂ⱼ/(2j·x^{2j}).
pub fn digamma(x: &XReal) -> Result<XReal> {
    if !x.is_positive() {
        return Err(SpecFunError::Domain("digamma requires x > 0"));
    }
    static COEFFS: OnceLock<Vec<XReal>> = OnceLock::new();
    let coeffs = COEFFS.get_or_init(|| {
        (1..=bernoulli::TABLE_LEN)
            .map(|j| {
                (bernoulli::b2j(j) / Rational::from_int(2 * j as i64)).to_xreal()
            })
            .collect()
    });

    let threshold = XReal::from_i64(SHIFT);
    let mut shift_sum = XReal::zero();
    let mut t = x.clone();
    while t < threshold {
        shift_sum = &shift_sum + &t.recip().unwrap();
        t = &t + &XReal::one();
    }

    let inv = t.recip().unwrap();
    let inv2 = inv.sq();
    // Horner over the Bernoulli tail in powers of 1/x^2
    let mut tail = XReal::zero();
    for c in coeffs.iter().rev() {
        tail = (&tail + c) * &inv2;
    }
    let psi = t.ln()? - inv.ldexp(-1) - tail;
    Ok(psi - shift_sum)
}

/// ψ_n(x) for 1 ≤ n ≤ 4 and x > 0, by the same shift-then-asymptotic
/// scheme: ψ_n(x) = (−1)^{n−1}[(n−1)!/xⁿ + n!/(2x^{n+1})
/// + Σ B₂ⱼ·(2j+n−1)!/(2j)!·x^{−2j−n}].
pub fn polygamma(order: u32, x: &XReal) -> Result<XReal> {
    if !(1..=4).contains(&order) {
        return Err(SpecFunError::Domain("polygamma order must be in 1..=4"));
    }
    if !x.is_positive() {
        return Err(SpecFunError::Domain("polygamma requires x > 0"));
    }
    Ok(polygamma_unchecked(order, x))
}

pub(crate) fn polygamma_unchecked(order: u32, x: &XReal) -> XReal {
    static COEFFS: OnceLock<Vec<Vec<XReal>>> = OnceLock::new();
    let all = COEFFS.get_or_init(|| {
        (1u32..=4)
            .map(|n| {
                (1..=bernoulli::TABLE_LEN)
                    .map(|j| {
                        // B_{2j} * (2j+n-1)! / (2j)!
                        let mut rising = Rational::one();
                        for i in 1..n as i64 {
                            rising = rising * Rational::from_int(2 * j as i64 + i);
                        }
                        (bernoulli::b2j(j) * &rising).to_xreal()
                    })
                    .collect()
            })
            .collect()
    });
    let n = order as i64;
    let coeffs = &all[(order - 1) as usize];

    let factorial = |m: i64| -> i64 { (1..=m).product::<i64>().max(1) };
    let threshold = XReal::from_i64(SHIFT);
    // recurrence: psi_n(x) = psi_n(x+1) + (-1)^{n-1} n! / x^{n+1}
    let n_fact = XReal::from_i64(factorial(n));
    let mut shift_sum = XReal::zero();
    let mut t = x.clone();
    while t < threshold {
        shift_sum = shift_sum + &n_fact / t.pow_int(n + 1).unwrap();
        t = &t + &XReal::one();
    }

    let inv = t.recip().unwrap();
    let inv2 = inv.sq();
    let inv_n = inv.pow_int(n).unwrap();
    let mut tail = XReal::zero();
    for c in coeffs.iter().rev() {
        tail = (&tail + c) * &inv2;
    }
    // (n-1)!/x^n + n!/(2 x^{n+1}) + x^{-n} * tail
    let main = XReal::from_i64(factorial(n - 1)) * &inv_n
        + (&n_fact * &inv_n * &inv).ldexp(-1)
        + &inv_n * &tail;
    let signed = if n % 2 == 1 { main } else { -main };
    let shift_signed = if n % 2 == 1 { shift_sum } else { -shift_sum };
    signed + shift_signed
}

/// dⁿ/dzⁿ cot(πz) in closed form for 0 ≤ n ≤ 4, z non-integer.
///
/// Writing c = cot(πz), each derivative is πⁿ·Qₙ(c) for a polynomial Qₙ
/// with integer coefficients obtained from Q₀ = c and
/// Q_{m+1} = −(1+c²)·Q'_m.
pub fn cot_derivative(order: u32, z: &XReal) -> Result<XReal> {
    if order > 4 {
        return Err(SpecFunError::Domain("cot derivative order must be in 0..=4"));
    }
    let pi = consts::pi();
    let pz = &pi * z;
    let s = pz.sin();
    if s.is_zero() {
        return Err(SpecFunError::Domain("cot(pi z) pole at integer z"));
    }
    let c = pz.cos() / &s;

    // polynomials Q_0..Q_4 as integer coefficient vectors (low degree first)
    let mut polys: Vec<Vec<i64>> = vec![vec![0, 1]];
    for _ in 0..4 {
        let prev = polys.last().unwrap();
        // derivative
        let mut dp = vec![0i64; prev.len().max(2) - 1];
        for (i, a) in prev.iter().enumerate().skip(1) {
            dp[i - 1] = a * i as i64;
        }
        // multiply by -(1 + c^2)
        let mut next = vec![0i64; dp.len() + 2];
        for (i, a) in dp.iter().enumerate() {
            next[i] -= a;
            next[i + 2] -= a;
        }
        polys.push(next);
    }

    let q = &polys[order as usize];
    let mut val = XReal::zero();
    for a in q.iter().rev() {
        val = &val * &c + XReal::from_i64(*a);
    }
    Ok(pi.pow_int(order as i64).unwrap() * val)
}
