//! Integer polynomials, exact division over the rationals, and Sturm chains.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Polynomial with arbitrary-precision integer coefficients, lowest degree
/// first. The leading coefficient is nonzero unless the polynomial is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<String>", try_from = "Vec<String>")]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntegerPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Coefficients highest degree first, as polynomials are usually written.
    pub fn from_i64_high_first(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().rev().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntegerPolynomial { coeffs: Vec::new() }
    }

    /// `den * x - num`, whose only root is `num/den`.
    pub fn linear_root(r: &BigRational) -> Self {
        Self::new(vec![-r.numer().clone(), r.denom().clone()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeffs_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| i64::try_from(c).ok()).collect()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn sign_at_rational(&self, x: &BigRational) -> Ordering {
        sign(&self.eval(x))
    }

    /// Encloses `p([lo, hi])` by interval Horner evaluation.
    pub fn eval_interval(&self, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
        debug_assert!(lo <= hi);
        let mut a = BigRational::zero();
        let mut b = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            let products = [&a * lo, &a * hi, &b * lo, &b * hi];
            let mut na = products[0].clone();
            let mut nb = products[0].clone();
            for p in &products[1..] {
                if *p < na {
                    na = p.clone();
                }
                if *p > nb {
                    nb = p.clone();
                }
            }
            let c = BigRational::from_integer(c.clone());
            a = na + &c;
            b = nb + c;
        }
        (a, b)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Content removed and leading coefficient made positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Greatest common divisor, normalized to be primitive with positive
    /// leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let g = qgcd(to_q(self), to_q(other));
        from_q(&g).primitive()
    }

    pub fn square_free_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.primitive();
        }
        let (q, r) = qdivrem(&to_q(self), &to_q(&g));
        debug_assert!(r.is_empty());
        from_q(&q).primitive()
    }

    /// Exact quotient `self / divisor` when the division is exact.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = qdivrem(&to_q(self), &to_q(divisor));
        if !r.is_empty() {
            return None;
        }
        let q = from_q_exact(&q)?;
        Some(q)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn sturm_chain(&self) -> SturmChain {
        SturmChain::new(self)
    }

    /// Human-readable form in the variable `var`, e.g. `x^2 - x - 1`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(&mono);
        }
        out
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl From<IntegerPolynomial> for Vec<String> {
    fn from(p: IntegerPolynomial) -> Self {
        p.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl TryFrom<Vec<String>> for IntegerPolynomial {
    type Error = Error;
    fn try_from(v: Vec<String>) -> Result<Self> {
        let coeffs = v
            .iter()
            .map(|s| s.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("bad coefficient {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }
}

/// Parses a comma-separated coefficient list, lowest degree first. A trailing
/// `r` marks the list as written highest degree first instead.
pub fn parse_coefficients(text: &str) -> Result<IntegerPolynomial> {
    let t = text.trim();
    let (body, reversed) = match t.strip_suffix('r') {
        Some(b) => (b, true),
        None => (t, false),
    };
    let mut coeffs = body
        .split(',')
        .map(|s| s.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("bad coefficient {s:?}"))))
        .collect::<Result<Vec<_>>>()?;
    if reversed {
        coeffs.reverse();
    }
    Ok(IntegerPolynomial::new(coeffs))
}

pub(crate) fn sign(x: &BigRational) -> Ordering {
    if x.is_positive() {
        Ordering::Greater
    } else if x.is_negative() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

// Dense rational polynomials, lowest degree first, no trailing zeros.
pub(crate) type QPoly = Vec<BigRational>;

pub(crate) fn to_q(p: &IntegerPolynomial) -> QPoly {
    p.coeffs.iter().cloned().map(BigRational::from_integer).collect()
}

pub(crate) fn trim(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Scales a rational polynomial by a positive constant to make it integral
/// and primitive; signs are preserved.
pub(crate) fn from_q(p: &[BigRational]) -> IntegerPolynomial {
    let l = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        return IntegerPolynomial::zero();
    }
    IntegerPolynomial::new(ints.into_iter().map(|c| c / &g).collect())
}

fn from_q_exact(p: &[BigRational]) -> Option<IntegerPolynomial> {
    if p.iter().all(|c| c.is_integer()) {
        Some(IntegerPolynomial::new(p.iter().map(|c| c.to_integer()).collect()))
    } else {
        None
    }
}

pub(crate) fn qdivrem(a: &[BigRational], b: &[BigRational]) -> (QPoly, QPoly) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r: QPoly = a.to_vec();
    if r.len() < b.len() {
        return (Vec::new(), trim(r));
    }
    let lead = b.last().unwrap();
    let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
    for i in (0..q.len()).rev() {
        let c = &r[i + b.len() - 1] / lead;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] -= &c * bj;
            }
        }
        q[i] = c;
    }
    r.truncate(b.len() - 1);
    (trim(q), trim(r))
}

pub(crate) fn qrem(a: &[BigRational], b: &[BigRational]) -> QPoly {
    qdivrem(a, b).1
}

fn qgcd(mut a: QPoly, mut b: QPoly) -> QPoly {
    a = trim(a);
    b = trim(b);
    while !b.is_empty() {
        let r = qrem(&a, &b);
        a = b;
        // Keep coefficient growth in check by renormalizing to primitive integers.
        b = to_q(&from_q(&r));
    }
    a
}

/// Sturm chain of the square-free part of a polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntegerPolynomial>,
}

impl SturmChain {
    pub fn new(p: &IntegerPolynomial) -> Self {
        let p0 = p.square_free_part();
        let mut chain = vec![p0.clone()];
        if p0.degree().unwrap_or(0) == 0 {
            return SturmChain { chain };
        }
        chain.push(p0.derivative());
        loop {
            let n = chain.len();
            let r = qrem(&to_q(&chain[n - 2]), &to_q(&chain[n - 1]));
            if r.is_empty() {
                break;
            }
            // from_q scales by a positive constant, so negating first is sign-correct.
            let neg: QPoly = r.into_iter().map(|c| -c).collect();
            chain.push(from_q(&neg));
        }
        SturmChain { chain }
    }

    pub fn polynomial(&self) -> &IntegerPolynomial {
        &self.chain[0]
    }

    pub fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = Ordering::Equal;
        for p in &self.chain {
            let s = p.sign_at_rational(x);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct real roots in the half-open interval `(a, b]`.
    pub fn count_half_open(&self, a: &BigRational, b: &BigRational) -> usize {
        if a >= b {
            return 0;
        }
        self.variations(a).saturating_sub(self.variations(b))
    }

    /// Distinct real roots in the open interval `(a, b)`.
    pub fn count_open(&self, a: &BigRational, b: &BigRational) -> usize {
        let c = self.count_half_open(a, b);
        if c > 0 && self.chain[0].sign_at_rational(b) == Ordering::Equal {
            c - 1
        } else {
            c
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::{int, rat};

    #[test]
    fn display_and_parse() {
        let p = IntegerPolynomial::from_i64_high_first(&[1, -2, -1, -2, -1]);
        assert_eq!(p.to_string(), "x^4 - 2x^3 - x^2 - 2x - 1");
        assert_eq!(parse_coefficients("1,-2,-1,-2,-1r").unwrap(), p);
        assert_eq!(parse_coefficients("-1,-2,-1,-2,1").unwrap(), p);
        assert_eq!(IntegerPolynomial::from_i64(&[-1, 1]).to_string(), "x - 1");
    }

    #[test]
    fn gcd_and_square_free() {
        // (x-1)^2 (x+2)
        let p = IntegerPolynomial::from_i64(&[2, -3, 0, 1]);
        assert_eq!(p.square_free_part(), IntegerPolynomial::from_i64(&[-2, 1, 1]));
        let q = IntegerPolynomial::from_i64(&[-1, 0, 1]);
        assert_eq!(p.gcd(&q), IntegerPolynomial::from_i64(&[-1, 1]));
        assert_eq!(p.div_exact(&IntegerPolynomial::from_i64(&[-1, 1])), Some(IntegerPolynomial::from_i64(&[-2, 1, 1])));
    }

    #[test]
    fn sturm_counts() {
        // x^2 - 2 has roots ±1.414
        let s = IntegerPolynomial::from_i64(&[-2, 0, 1]).sturm_chain();
        assert_eq!(s.count_half_open(&int(-2), &int(2)), 2);
        assert_eq!(s.count_half_open(&int(0), &int(2)), 1);
        assert_eq!(s.count_open(&int(2), &int(3)), 0);
        // root exactly at the right endpoint is excluded by count_open
        let l = IntegerPolynomial::from_i64(&[-1, 1]).sturm_chain();
        assert_eq!(l.count_half_open(&int(0), &int(1)), 1);
        assert_eq!(l.count_open(&int(0), &int(1)), 0);
        assert_eq!(l.count_open(&int(0), &rat(3, 2)), 1);
    }

    #[test]
    fn interval_evaluation_encloses() {
        let p = IntegerPolynomial::from_i64(&[-1, -1, 1]);
        let (a, b) = p.eval_interval(&rat(3, 2), &rat(17, 10));
        for x in [rat(3, 2), rat(8, 5), rat(17, 10)] {
            let v = p.eval(&x);
            assert!(a <= v && v <= b);
        }
    }
}
