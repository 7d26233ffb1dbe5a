//! Exact table of even-index Bernoulli numbers B₂ … B₆₄.
//!
//! Stored as literal numerator/denominator pairs rather than computed at
//! runtime. The table feeds the digamma/polygamma asymptotic expansions,
//! Euler–Maclaurin tails, ζ(2n) closed forms, and the Catalan series.

use std::sync::OnceLock;

use crate::xprec::Rational;

// (numerator, denominator) of B_{2j} for j = 1..=32
const TABLE: &[(&str, &str)] = &[
    ("1", "6"),
    ("-1", "30"),
    ("1", "42"),
    ("-1", "30"),
    ("5", "66"),
    ("-691", "2730"),
    ("7", "6"),
    ("-3617", "510"),
    ("43867", "798"),
    ("-174611", "330"),
    ("854513", "138"),
    ("-236364091", "2730"),
    ("8553103", "6"),
    ("-23749461029", "870"),
    ("8615841276005", "14322"),
    ("-7709321041217", "510"),
    ("2577687858367", "6"),
    ("-26315271553053477373", "1919190"),
    ("2929993913841559", "6"),
    ("-261082718496449122051", "13530"),
    ("1520097643918070802691", "1806"),
    ("-27833269579301024235023", "690"),
    ("596451111593912163277961", "282"),
    ("-5609403368997817686249127547", "46410"),
    ("495057205241079648212477525", "66"),
    ("-801165718135489957347924991853", "1590"),
    ("29149963634884862421418123812691", "798"),
    ("-2479392929313226753685415739663229", "870"),
    ("84483613348880041862046775994036021", "354"),
    ("-1215233140483755572040304994079820246041491", "56786730"),
    ("12300585434086858541953039857403386151", "6"),
    ("-106783830147866529886385444979142647942017", "510"),
];

/// Number of even-index entries in the table (B₂ through B₆₄).
pub const TABLE_LEN: usize = 32;

/// B_{2j} for j in 1..=TABLE_LEN.
pub fn b2j(j: usize) -> &'static Rational {
    static PARSED: OnceLock<Vec<Rational>> = OnceLock::new();
    let v = PARSED.get_or_init(|| {
        TABLE
            .iter()
            .map(|(n, d)| {
                Rational::from_bigint_pair(n.parse().unwrap(), d.parse().unwrap()).unwrap()
            })
            .collect()
    });
    &v[j - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrence_reproduces_the_table() {
        // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1, with B_0 = 1, B_1 = -1/2
        let mut b: Vec<Rational> = vec![Rational::one(), Rational::from_int_pair(-1, 2).unwrap()];
        for m in 2..=64u64 {
            let mut binom = Rational::one(); // C(m+1, 0)
            let mut acc = Rational::zero();
            for (k, bk) in b.iter().enumerate() {
                acc = acc + &binom * bk;
                // C(m+1, k+1) = C(m+1, k) * (m+1-k)/(k+1)
                binom = binom
                    * Rational::from_int_pair(m as i64 + 1 - k as i64, k as i64 + 1).unwrap();
            }
            let bm = -acc.try_div(&Rational::from_int(m as i64 + 1)).unwrap();
            b.push(bm);
        }
        for j in 1..=TABLE_LEN {
            assert_eq!(&b[2 * j], b2j(j), "B_{}", 2 * j);
        }
    }
}
