//! Exact arithmetic on polynomial expressions in a fixed real β.
//!
//! Elements are rational polynomials in β reduced modulo β's defining
//! polynomial. For rational β the modulus is linear and elements are plain
//! rationals, so the same code serves both cases.

use std::cmp::Ordering;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::algebraic::{bit_budget, AlgebraicNumber};
use super::poly::{from_q, qdivrem, to_q, trim, IntegerPolynomial, QPoly};
use crate::error::{Error, Result};

#[derive(Debug)]
struct Inner {
    beta: AlgebraicNumber,
    // Monic, no factor of x.
    modulus: QPoly,
    beta_inv: QPoly,
    bits: u64,
    approx: f64,
    // Refined copy of β and its current precision in bits, grown on demand.
    work: Mutex<(AlgebraicNumber, u64)>,
}

/// The ring Q[β] for one fixed β, shared cheaply between elements.
#[derive(Clone, Debug)]
pub struct BetaRing {
    inner: Arc<Inner>,
}

/// An element of Q[β], stored as its canonical remainder.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BetaElement {
    coeffs: Vec<BigRational>,
}

impl BetaRing {
    pub fn new(beta: &AlgebraicNumber) -> Self {
        Self::with_budget(beta, bit_budget())
    }

    pub fn with_budget(beta: &AlgebraicNumber, bits: u64) -> Self {
        let mut p = match beta.as_rational() {
            Some(r) => IntegerPolynomial::linear_root(r),
            None => beta.poly().clone(),
        };
        // β > 0 in every use here, so a factor x never vanishes at β.
        while p.coeffs().first().is_some_and(Zero::is_zero) {
            p = IntegerPolynomial::new(p.coeffs()[1..].to_vec());
        }
        let lead = BigRational::from_integer(p.leading().expect("nonzero modulus").clone());
        let modulus: QPoly = to_q(&p).into_iter().map(|c| c / &lead).collect();
        // β·q(β) = -m(0) where m(x) - m(0) = x·q(x).
        let m0 = modulus[0].clone();
        let beta_inv = qdivrem(&trim(modulus[1..].iter().map(|c| -c / &m0).collect()), &modulus).1;
        let work = Mutex::new((beta.clone(), 0));
        BetaRing { inner: Arc::new(Inner { beta: beta.clone(), modulus, beta_inv, bits, approx: beta.to_f64(), work }) }
    }

    pub fn beta(&self) -> &AlgebraicNumber {
        &self.inner.beta
    }

    pub fn degree(&self) -> usize {
        self.inner.modulus.len() - 1
    }

    fn reduce(&self, p: QPoly) -> BetaElement {
        let p = trim(p);
        let coeffs = if p.len() >= self.inner.modulus.len() { qdivrem(&p, &self.inner.modulus).1 } else { p };
        BetaElement { coeffs }
    }

    pub fn zero(&self) -> BetaElement {
        BetaElement { coeffs: Vec::new() }
    }

    pub fn rational(&self, r: BigRational) -> BetaElement {
        self.reduce(vec![r])
    }

    pub fn int(&self, n: i64) -> BetaElement {
        self.rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn one(&self) -> BetaElement {
        self.int(1)
    }

    /// The element β itself.
    pub fn beta_element(&self) -> BetaElement {
        self.reduce(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn add(&self, a: &BetaElement, b: &BetaElement) -> BetaElement {
        let n = a.coeffs.len().max(b.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in a.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in b.coeffs.iter().enumerate() {
            out[i] += c;
        }
        BetaElement { coeffs: trim(out) }
    }

    pub fn sub(&self, a: &BetaElement, b: &BetaElement) -> BetaElement {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &BetaElement) -> BetaElement {
        BetaElement { coeffs: a.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, a: &BetaElement, b: &BetaElement) -> BetaElement {
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            return self.zero();
        }
        let mut out = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        self.reduce(out)
    }

    pub fn mul_beta(&self, a: &BetaElement) -> BetaElement {
        let mut out = Vec::with_capacity(a.coeffs.len() + 1);
        out.push(BigRational::zero());
        out.extend(a.coeffs.iter().cloned());
        self.reduce(out)
    }

    pub fn mul_beta_inv(&self, a: &BetaElement) -> BetaElement {
        self.mul(a, &BetaElement { coeffs: self.inner.beta_inv.clone() })
    }

    pub fn sub_int(&self, a: &BetaElement, n: i64) -> BetaElement {
        self.sub(a, &self.int(n))
    }

    pub fn scale(&self, a: &BetaElement, r: &BigRational) -> BetaElement {
        BetaElement { coeffs: trim(a.coeffs.iter().map(|c| c * r).collect()) }
    }

    /// Exact sign of the element's value at β. Zero is decided by a gcd
    /// test; otherwise β is refined until interval evaluation excludes zero.
    pub fn sign(&self, a: &BetaElement) -> Result<Ordering> {
        if a.coeffs.is_empty() {
            return Ok(Ordering::Equal);
        }
        if a.coeffs.len() == 1 {
            return Ok(a.coeffs[0].cmp(&BigRational::zero()));
        }
        let p = from_q(&a.coeffs);
        let mut zero_checked = false;
        let mut work = self.inner.work.lock().unwrap();
        loop {
            let (lo, hi) = {
                let (l, h) = work.0.interval();
                p.eval_interval(l, h)
            };
            if lo > BigRational::zero() {
                return Ok(Ordering::Greater);
            }
            if hi < BigRational::zero() {
                return Ok(Ordering::Less);
            }
            if let Some(r) = work.0.as_rational() {
                return Ok(p.sign_at_rational(r));
            }
            if !zero_checked {
                let g = p.gcd(self.inner.beta.poly());
                let (l, h) = work.0.interval();
                if g.degree().unwrap_or(0) > 0 && g.sturm_chain().count_open(l, h) > 0 {
                    return Ok(Ordering::Equal);
                }
                zero_checked = true;
            }
            let next = if work.1 == 0 { 64 } else { work.1 * 2 };
            if next > self.inner.bits {
                return Err(Error::PrecisionExhausted(self.inner.bits));
            }
            work.0.refine_to_bits(next);
            work.1 = next;
        }
    }

    pub fn compare(&self, a: &BetaElement, b: &BetaElement) -> Result<Ordering> {
        self.sign(&self.sub(a, b))
    }

    pub fn to_f64(&self, a: &BetaElement) -> f64 {
        let b = self.inner.approx;
        a.coeffs.iter().rev().fold(0.0, |acc, c| acc * b + super::rational::to_f64(c))
    }
}

impl BetaElement {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }
}
