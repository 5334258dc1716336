//! Real algebraic numbers as a square-free polynomial plus an isolating interval.

use std::cmp::Ordering;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::poly::IntegerPolynomial;
use super::rational::{format_rational, int, midpoint, pow2_neg, serde_rat, to_decimal, to_f64};
use crate::error::{Error, Result};

/// Default cap on adaptive refinement, in bits of interval width.
pub const DEFAULT_BIT_BUDGET: u64 = 4096;

static BIT_BUDGET: AtomicU64 = AtomicU64::new(DEFAULT_BIT_BUDGET);

/// The process-wide refinement cap used when no explicit budget is given.
pub fn bit_budget() -> u64 {
    BIT_BUDGET.load(AtomicOrdering::Relaxed)
}

pub fn set_bit_budget(bits: u64) {
    BIT_BUDGET.store(bits.max(START_BITS), AtomicOrdering::Relaxed);
}

const START_BITS: u64 = 64;

/// A real root of `poly`, the unique one in the open interval `(lo, hi)`.
/// When `lo == hi` the number is that rational exactly.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraicNumber {
    poly: IntegerPolynomial,
    #[serde(with = "serde_rat")]
    lo: BigRational,
    #[serde(with = "serde_rat")]
    hi: BigRational,
}

impl AlgebraicNumber {
    pub fn from_rational(r: BigRational) -> Self {
        AlgebraicNumber { poly: IntegerPolynomial::linear_root(&r), lo: r.clone(), hi: r }
    }

    pub fn poly(&self) -> &IntegerPolynomial {
        &self.poly
    }

    pub fn interval(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    pub fn is_rational(&self) -> bool {
        self.lo == self.hi
    }

    fn sign_lo(&self) -> Ordering {
        self.poly.sign_at_rational(&self.lo)
    }

    /// Halves the isolating interval once. May discover that the midpoint is
    /// the root, in which case the number becomes exact.
    fn bisect(&mut self) {
        if self.is_rational() {
            return;
        }
        let m = midpoint(&self.lo, &self.hi);
        match self.poly.sign_at_rational(&m) {
            Ordering::Equal => {
                self.lo = m.clone();
                self.hi = m;
            }
            s if s == self.sign_lo() => self.lo = m,
            _ => self.hi = m,
        }
    }

    /// Shrinks the interval in place until its width is below `eps`.
    pub fn refine_in_place(&mut self, eps: &BigRational) {
        assert!(eps.is_positive(), "refinement width must be positive");
        while &(&self.hi - &self.lo) >= eps {
            self.bisect();
        }
    }

    pub fn refine_to_bits(&mut self, bits: u64) {
        self.refine_in_place(&pow2_neg(bits));
    }

    pub fn refined(&self, eps: &BigRational) -> Self {
        let mut a = self.clone();
        a.refine_in_place(eps);
        a
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.refined(&pow2_neg(60));
        to_f64(&midpoint(&a.lo, &a.hi))
    }

    /// Decimal approximation with `places` digits after the point, correctly
    /// rounded whenever the bit budget suffices to separate the root from a
    /// rounding boundary.
    pub fn to_decimal(&self, places: usize) -> String {
        if let Some(r) = self.as_rational() {
            return to_decimal(r, places);
        }
        let mut a = self.refined(&BigRational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(10), places + 2)));
        let mut prec = START_BITS;
        loop {
            let (l, h) = (to_decimal(&a.lo, places), to_decimal(&a.hi, places));
            if l == h || prec > bit_budget() || a.is_rational() {
                return to_decimal(&midpoint(&a.lo, &a.hi), places);
            }
            a.refine_to_bits(prec);
            prec *= 2;
        }
    }

    /// Exact comparison with a rational, using one sign evaluation.
    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        if let Some(x) = self.as_rational() {
            return x.cmp(r);
        }
        if r <= &self.lo {
            return Ordering::Greater;
        }
        if r >= &self.hi {
            return Ordering::Less;
        }
        match self.poly.sign_at_rational(r) {
            Ordering::Equal => Ordering::Equal,
            s if s == self.sign_lo() => Ordering::Greater,
            _ => Ordering::Less,
        }
    }

    /// True iff both denote the same real number.
    pub fn equals(&self, other: &AlgebraicNumber) -> bool {
        if let Some(r) = other.as_rational() {
            return self.cmp_rational(r) == Ordering::Equal;
        }
        if let Some(r) = self.as_rational() {
            return other.cmp_rational(r) == Ordering::Equal;
        }
        let lo = (&self.lo).max(&other.lo);
        let hi = (&self.hi).min(&other.hi);
        if lo >= hi {
            return false;
        }
        let g = self.poly.gcd(&other.poly);
        if g.degree().unwrap_or(0) == 0 {
            return false;
        }
        // A common root of both polynomials in the intersection is the unique
        // root of each interval.
        g.sturm_chain().count_open(lo, hi) > 0
    }

    pub fn compare(&self, other: &AlgebraicNumber) -> Result<Ordering> {
        self.compare_with_budget(other, bit_budget())
    }

    pub fn compare_with_budget(&self, other: &AlgebraicNumber, bits: u64) -> Result<Ordering> {
        if let Some(r) = other.as_rational() {
            return Ok(self.cmp_rational(r));
        }
        if let Some(r) = self.as_rational() {
            return Ok(other.cmp_rational(r).reverse());
        }
        if self.equals(other) {
            return Ok(Ordering::Equal);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let mut prec = START_BITS;
        loop {
            if a.hi <= b.lo {
                return Ok(Ordering::Less);
            }
            if b.hi <= a.lo {
                return Ok(Ordering::Greater);
            }
            if prec > bits {
                return Err(Error::PrecisionExhausted(bits));
            }
            a.refine_to_bits(prec);
            b.refine_to_bits(prec);
            prec *= 2;
        }
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => f.write_str(&format_rational(r)),
            None => write!(
                f,
                "root of {} in ({}, {})",
                self.poly,
                format_rational(&self.lo),
                format_rational(&self.hi)
            ),
        }
    }
}

/// Isolates the unique root of `p` in the open interval `(lo, hi)`.
pub fn isolate_root(p: &IntegerPolynomial, lo: &BigRational, hi: &BigRational) -> Result<AlgebraicNumber> {
    if lo >= hi {
        return Err(Error::BadInterval);
    }
    if p.is_zero() {
        return Err(Error::MultipleRoots(usize::MAX));
    }
    let q = p.square_free_part();
    match q.sturm_chain().count_open(lo, hi) {
        0 => return Err(Error::NoRoot),
        1 => {}
        n => return Err(Error::MultipleRoots(n)),
    }
    if q.degree() == Some(1) {
        let c = q.coeffs();
        return Ok(AlgebraicNumber::from_rational(BigRational::new(-c[0].clone(), c[1].clone())));
    }
    let s = q.sturm_chain();
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    // Move endpoints off other roots; a square-free polynomial then changes sign.
    while q.sign_at_rational(&lo) == Ordering::Equal || q.sign_at_rational(&hi) == Ordering::Equal {
        let m = midpoint(&lo, &hi);
        if q.sign_at_rational(&m) == Ordering::Equal {
            return Ok(AlgebraicNumber { poly: q, lo: m.clone(), hi: m });
        }
        if s.count_open(&lo, &m) == 1 {
            hi = m;
        } else {
            lo = m;
        }
    }
    Ok(AlgebraicNumber { poly: q, lo, hi })
}

/// Returns a sub-interval of width below `eps` that still isolates the root.
pub fn refine(a: &AlgebraicNumber, eps: &BigRational) -> (BigRational, BigRational) {
    let r = a.refined(eps);
    (r.lo, r.hi)
}

/// Exact sign of `p` at an algebraic point.
pub fn sign_at(p: &IntegerPolynomial, a: &AlgebraicNumber) -> Result<Ordering> {
    sign_at_with_budget(p, a, bit_budget())
}

pub fn sign_at_with_budget(p: &IntegerPolynomial, a: &AlgebraicNumber, bits: u64) -> Result<Ordering> {
    if let Some(r) = a.as_rational() {
        return Ok(p.sign_at_rational(r));
    }
    if p.is_zero() {
        return Ok(Ordering::Equal);
    }
    let g = p.gcd(&a.poly);
    if g.degree().unwrap_or(0) > 0 && g.sturm_chain().count_open(&a.lo, &a.hi) > 0 {
        return Ok(Ordering::Equal);
    }
    let mut a = a.clone();
    let mut prec = START_BITS;
    loop {
        let (lo, hi) = p.eval_interval(&a.lo, &a.hi);
        if lo.is_positive() {
            return Ok(Ordering::Greater);
        }
        if hi.is_negative() {
            return Ok(Ordering::Less);
        }
        if let Some(r) = a.as_rational() {
            return Ok(p.sign_at_rational(r));
        }
        if prec > bits {
            return Err(Error::PrecisionExhausted(bits));
        }
        a.refine_to_bits(prec);
        prec *= 2;
    }
}

/// Floor of an algebraic number, decided exactly.
pub fn floor(a: &AlgebraicNumber) -> BigRational {
    let mut f = a.lo.floor();
    loop {
        let n = &f + int(1);
        match a.cmp_rational(&n) {
            Ordering::Less => return f,
            Ordering::Equal => return n,
            Ordering::Greater => f = n,
        }
    }
}
