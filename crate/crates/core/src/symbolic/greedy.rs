//! Greedy β-expansions and the kneading datum `w_β`.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::seq::{DigitSeq, DigitStream, EventuallyPeriodic, StopReason};
use super::word::Word;
use crate::error::{Error, Result};
use crate::exact_arith::{floor, AlgebraicNumber, BetaElement, BetaRing};

/// Alphabet size `k = ⌈β⌉` for a non-integer β > 1.
pub fn alphabet_size(beta: &AlgebraicNumber) -> Result<u8> {
    let f = floor(beta);
    if f < BigRational::one() || beta.cmp_rational(&f) == Ordering::Equal {
        return Err(Error::IntegerBase);
    }
    (f.to_integer() + BigInt::one()).to_u8().ok_or(Error::IntegerBase)
}

/// One step of `x ↦ βx mod 1`, emitting the digit `⌊βx⌋`.
trait Orbit {
    fn step(&mut self) -> Result<u8>;
    fn is_zero(&self) -> bool;
}

/// Exact orbit for rational β = p/q, kept as a reduced fraction `a/b`.
struct RationalOrbit {
    p: BigInt,
    q: BigInt,
    a: BigInt,
    b: BigInt,
    k: u8,
    // When gcd(p, b) = 1 the new gcd always divides q, so reduction is cheap.
    fast: bool,
}

impl RationalOrbit {
    fn new(beta: &BigRational, x: &BigRational, k: u8) -> Self {
        let (p, q) = (beta.numer().clone(), beta.denom().clone());
        let (a, b) = (x.numer().clone(), x.denom().clone());
        let fast = p.gcd(&b).is_one();
        RationalOrbit { p, q, a, b, k, fast }
    }

    fn state(&self) -> (&BigInt, &BigInt) {
        (&self.a, &self.b)
    }
}

impl Orbit for RationalOrbit {
    fn step(&mut self) -> Result<u8> {
        let num = &self.p * &self.a;
        let den = &self.q * &self.b;
        let (j, r) = num.div_rem(&den);
        let g = if self.fast { (&r % &self.q).gcd(&self.q) } else { r.gcd(&den) };
        let g = if g.is_zero() { den.clone() } else { g };
        self.a = r / &g;
        self.b = den / g;
        let d = j.to_u8().filter(|&d| d < self.k).expect("orbit point stays in [0, 1]");
        Ok(d)
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero()
    }
}

/// Exact orbit for algebraic β, with points in Q[β].
struct AlgebraicOrbit {
    ring: BetaRing,
    y: BetaElement,
    k: u8,
}

impl Orbit for AlgebraicOrbit {
    fn step(&mut self) -> Result<u8> {
        let z = self.ring.mul_beta(&self.y);
        let guess = self.ring.to_f64(&z).floor();
        let mut j = if guess.is_finite() { guess.clamp(0.0, (self.k - 1) as f64) as i64 } else { 0 };
        // The float guess only seeds the search; each digit is certified by exact signs.
        loop {
            if self.ring.sign(&self.ring.sub_int(&z, j))? == Ordering::Less {
                j -= 1;
                continue;
            }
            if j + 1 < self.k as i64 && self.ring.sign(&self.ring.sub_int(&z, j + 1))? != Ordering::Less {
                j += 1;
                continue;
            }
            break;
        }
        self.y = self.ring.sub_int(&z, j);
        Ok(j as u8)
    }

    fn is_zero(&self) -> bool {
        // The modulus need not be irreducible, so zero is decided by sign.
        self.y.is_zero() || self.ring.sign(&self.y).is_ok_and(|s| s == Ordering::Equal)
    }
}

fn orbit(beta: &AlgebraicNumber, x: &BigRational, k: u8) -> Box<dyn Orbit> {
    match beta.as_rational() {
        Some(b) => Box::new(RationalOrbit::new(b, x, k)),
        None => {
            let ring = BetaRing::new(beta);
            let y = ring.rational(x.clone());
            Box::new(AlgebraicOrbit { ring, y, k })
        }
    }
}

/// The first `count` digits of the greedy β-expansion of `x ∈ [0, 1]`.
pub fn greedy_digits(beta: &AlgebraicNumber, x: &BigRational, count: usize) -> Result<Word> {
    let k = alphabet_size(beta)?;
    if x.is_negative() || x > &BigRational::one() {
        return Err(Error::PointOutOfRange);
    }
    let mut o = orbit(beta, x, k);
    let mut digits = Vec::with_capacity(count);
    while digits.len() < count {
        if o.is_zero() {
            digits.resize(count, 0);
            break;
        }
        digits.push(o.step()?);
    }
    Word::new(digits, k)
}

/// Applies the finite-orbit correction to `d_1 … d_r 0̄`.
fn corrected(mut digits: Vec<u8>, k: u8) -> Result<DigitSeq> {
    let last = digits.last_mut().expect("finite expansion of 1 has a nonzero digit");
    *last -= 1;
    Ok(EventuallyPeriodic::purely_periodic(digits, k)?.into())
}

/// The kneading datum `w_β`: `d_β(1)`, except that a finite expansion
/// `d_1 … d_r 0̄` becomes the periodic sequence with block `d_1 … d_{r-1}(d_r - 1)`.
///
/// The result is exact when the orbit of 1 reaches 0, or (rational β only)
/// becomes periodic, within `budget` digits. Otherwise it is a stream holding
/// the certified prefix; running out of precision also ends that prefix.
pub fn w_beta(beta: &AlgebraicNumber, budget: usize) -> Result<DigitSeq> {
    let k = alphabet_size(beta)?;
    let one = BigRational::one();
    let mut digits = Vec::new();
    if let Some(b) = beta.as_rational() {
        let mut o = RationalOrbit::new(b, &one, k);
        // Reduced denominators never decrease along the orbit of 1, so a
        // repeated point must repeat within one denominator level.
        let mut level = BigInt::zero();
        let mut seen: HashMap<BigInt, usize> = HashMap::new();
        while digits.len() < budget {
            if o.is_zero() {
                return corrected(digits, k);
            }
            let (a, d) = o.state();
            if *d != level {
                level = d.clone();
                seen.clear();
            }
            if let Some(&j) = seen.get(a) {
                let period = digits[j..].to_vec();
                digits.truncate(j);
                return Ok(EventuallyPeriodic::new(digits, period, k)?.into());
            }
            seen.insert(a.clone(), digits.len());
            digits.push(o.step()?);
        }
        if o.is_zero() {
            return corrected(digits, k);
        }
        return Ok(DigitSeq::Stream(DigitStream::from_prefix(k, digits, StopReason::Budget)));
    }
    let mut o = orbit(beta, &one, k);
    let mut stop = StopReason::Budget;
    while digits.len() < budget {
        if o.is_zero() {
            return corrected(digits, k);
        }
        match o.step() {
            Ok(d) => digits.push(d),
            Err(e) => {
                stop = StopReason::Failed(e);
                break;
            }
        }
    }
    if o.is_zero() {
        return corrected(digits, k);
    }
    Ok(DigitSeq::Stream(DigitStream::from_prefix(k, digits, stop)))
}

/// `d_β(1)` when it is finite: the digits before the `0̄` tail.
pub fn finite_kneading(beta: &AlgebraicNumber, budget: usize) -> Result<Option<Vec<u8>>> {
    let k = alphabet_size(beta)?;
    let mut o = orbit(beta, &BigRational::one(), k);
    let mut digits = Vec::new();
    while digits.len() < budget {
        if o.is_zero() {
            return Ok(Some(digits));
        }
        digits.push(o.step()?);
    }
    Ok(o.is_zero().then_some(digits))
}
