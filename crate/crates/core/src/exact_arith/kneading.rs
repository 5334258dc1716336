//! The base β determined by a kneading sequence.

use num_bigint::BigInt;

use super::algebraic::{isolate_root, AlgebraicNumber};
use super::poly::IntegerPolynomial;
use super::rational::int;
use crate::error::{Error, Result};
use crate::symbolic::EventuallyPeriodic;

/// Clears denominators in `1 = Σ w_r β^{-(r+1)}` for `w = P·Q̄`, giving
/// `β^{p+q} - β^p - P(β)(β^q - 1) - Q(β)` with `P(β) = Σ P_i β^{p-1-i}` and
/// `Q` likewise. The result is primitive with positive leading coefficient.
pub fn poly_from_kneading(w: &EventuallyPeriodic) -> Result<IntegerPolynomial> {
    let (pre, per) = (w.preperiod(), w.period());
    if pre.iter().all(|&d| d == 0) && per.iter().all(|&d| d == 0) {
        return Err(Error::ZeroKneading);
    }
    let (p, q) = (pre.len(), per.len());
    let mut c = vec![BigInt::from(0); p + q + 1];
    c[p + q] += 1;
    c[p] -= 1;
    // -P(β)·β^q + P(β)
    for (i, &d) in pre.iter().enumerate() {
        let e = p - 1 - i;
        c[e + q] -= d;
        c[e] += d;
    }
    for (i, &d) in per.iter().enumerate() {
        c[q - 1 - i] -= d;
    }
    Ok(IntegerPolynomial::new(c).primitive())
}

/// The unique β > 1 solving the series identity for `w`.
pub fn beta_from_kneading(w: &EventuallyPeriodic) -> Result<AlgebraicNumber> {
    let p = poly_from_kneading(w)?;
    // The digit series is strictly decreasing in β and at most 1 at β = k.
    isolate_root(&p, &int(1), &int(w.k() as i64 + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::DigitSeq;

    fn ep(text: &str, k: u8) -> EventuallyPeriodic {
        DigitSeq::parse(text, k, 1).unwrap().as_periodic().unwrap().clone()
    }

    fn high(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64_high_first(c)
    }

    #[test]
    fn known_polynomials() {
        assert_eq!(poly_from_kneading(&ep("(10)", 2)).unwrap(), high(&[1, -1, -1]));
        assert_eq!(poly_from_kneading(&ep("1(10)", 2)).unwrap(), high(&[1, -1, -2, 1]));
        assert_eq!(
            poly_from_kneading(&ep("(200120011)", 3)).unwrap(),
            high(&[1, -2, 0, 0, -1, -2, 0, 0, -1, -2])
        );
        assert_eq!(
            poly_from_kneading(&ep("2001(20012000)", 3)).unwrap(),
            high(&[1, -2, 0, 0, -1, -2, 0, 0, -2, 0, 0, 0, 1])
        );
        assert_eq!(poly_from_kneading(&ep("(0)", 3)), Err(Error::ZeroKneading));
    }

    #[test]
    fn bases() {
        assert_eq!(beta_from_kneading(&ep("(10)", 2)).unwrap().to_decimal(3), "1.618");
        assert_eq!(beta_from_kneading(&ep("1(10)", 2)).unwrap().to_decimal(3), "1.802");
        assert_eq!(beta_from_kneading(&ep("(200120011)", 3)).unwrap().to_decimal(6), "2.190055");
        // all-top digits give exactly the integer k
        assert_eq!(beta_from_kneading(&ep("(2)", 3)).unwrap().as_rational(), Some(&int(3)));
    }
}
