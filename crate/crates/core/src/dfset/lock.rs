//! Mode-locking intervals and the digit frequency set of a given `β`.

use serde_json::{json, Value};

use super::polytope::{df_polytope, df_sandwich, DfSandwich, Polytope};
use crate::cfk::{n_of_w, s_of, Itinerary};
use crate::error::{Error, Result};
use crate::exact_arith::rational::format_rational;
use crate::exact_arith::{beta_from_kneading, AlgebraicNumber};
use crate::symbolic::{w_beta, DigitSeq, EventuallyPeriodic};

/// One endpoint of a locking interval: the kneading datum and its `β`.
#[derive(Clone, Debug)]
pub struct LockEndpoint {
    pub itinerary: Itinerary,
    pub kneading: EventuallyPeriodic,
    pub beta: AlgebraicNumber,
}

impl LockEndpoint {
    fn new(itinerary: Itinerary, k: u8) -> Result<Self> {
        // Infimax blocks of short prefixes are tiny; the budget only guards
        // against absurd entries.
        let s = s_of(&itinerary, k, 1 << 22)?;
        let kneading = s.as_periodic().cloned().ok_or(Error::PrecisionExhausted(1 << 22))?;
        let beta = beta_from_kneading(&kneading)?;
        Ok(LockEndpoint { itinerary, kneading, beta })
    }

    pub fn to_json(&self, places: usize) -> Value {
        let (lo, hi) = self.beta.interval();
        json!({
            "itinerary": self.itinerary.to_text(),
            "kneading": self.kneading.to_text(),
            "poly": self.beta.poly(),
            "poly_text": self.beta.poly().to_string(),
            "interval": [format_rational(lo), format_rational(hi)],
            "decimal": self.beta.to_decimal(places),
        })
    }
}

/// The interval of `β` on which `DF(β)` is the polytope of the rational
/// itinerary `n₀ … n_{R-1} (n_R+1) 0̄`.
#[derive(Clone, Debug)]
pub struct LockInterval {
    pub prefix: Vec<u64>,
    pub k: u8,
    pub lo: LockEndpoint,
    pub hi: LockEndpoint,
    pub polytope: Polytope,
}

impl LockInterval {
    pub fn to_json(&self, places: usize) -> Value {
        json!({
            "prefix": self.prefix,
            "k": self.k,
            "lo": self.lo.to_json(places),
            "hi": self.hi.to_json(places),
            "polytope": self.polytope.to_json(),
        })
    }
}

pub fn lock_interval(prefix: &[u64], k: u8) -> Result<LockInterval> {
    let (last, init) = prefix.split_last().ok_or(Error::InsufficientDepth { needed: 1, available: 0 })?;
    let mut bumped = init.to_vec();
    bumped.push(last + 1);
    let rational = Itinerary::rational(bumped);
    let finite = Itinerary::finite(prefix.to_vec());
    let lo = LockEndpoint::new(rational.clone(), k)?;
    let hi = LockEndpoint::new(finite, k)?;
    let polytope = df_polytope(&rational, k as usize)?;
    Ok(LockInterval { prefix: prefix.to_vec(), k, lo, hi, polytope })
}

/// `DF(β)`, exact when the itinerary of `w_β` resolves.
#[derive(Clone, Debug)]
pub enum DfResult {
    Exact(Polytope),
    Approximate(DfSandwich),
}

#[derive(Clone, Debug)]
pub struct DfOfBeta {
    pub w: DigitSeq,
    pub itinerary: Itinerary,
    pub result: DfResult,
}

impl DfOfBeta {
    pub fn is_exact(&self) -> bool {
        matches!(self.result, DfResult::Exact(_))
    }
}

/// `w_β → n(w_β) → DF`. Periodic itineraries are bracketed at depth
/// `depth_budget - 1`, truncated ones at their last certified entry.
pub fn df_of_beta(beta: &AlgebraicNumber, digit_budget: usize, depth_budget: usize) -> Result<DfOfBeta> {
    let w = w_beta(beta, digit_budget)?;
    let k = w.k() as usize;
    let extracted = n_of_w(&w, depth_budget)?;
    let itinerary = extracted.itinerary;
    let result = match &itinerary {
        Itinerary::Rational { .. } | Itinerary::Finite { .. } => DfResult::Exact(df_polytope(&itinerary, k)?),
        Itinerary::Periodic { .. } => DfResult::Approximate(df_sandwich(&itinerary, depth_budget.max(1) - 1, k)?),
        Itinerary::Truncated { entries, .. } => {
            if entries.is_empty() {
                return Err(Error::InsufficientDepth { needed: 1, available: 0 });
            }
            DfResult::Approximate(df_sandwich(&itinerary, entries.len() - 1, k)?)
        }
    };
    Ok(DfOfBeta { w, itinerary, result })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{isolate_root, parse_coefficients, rat, IntegerPolynomial};
    use crate::symbolic::FreqVector;
    use std::cmp::Ordering;

    fn coeffs(p: &IntegerPolynomial) -> Vec<i64> {
        p.coeffs_i64().unwrap()
    }

    #[test]
    fn three_letter_interval() {
        let l = lock_interval(&[2, 1, 0, 0], 3).unwrap();
        assert_eq!(coeffs(l.lo.beta.poly()), [-2, -1, 0, 0, -2, -1, 0, 0, -2, 1]);
        assert_eq!(coeffs(l.hi.beta.poly()), [1, 0, 0, 0, -2, 0, 0, -2, -1, 0, 0, -2, 1]);
        assert_eq!(l.lo.beta.to_decimal(6), "2.190055");
        assert_eq!(l.hi.beta.to_decimal(5), "2.19019");
        assert_eq!(l.lo.beta.compare(&l.hi.beta).unwrap(), Ordering::Less);
        assert_eq!(l.polytope.vertices().len(), 5);
    }

    #[test]
    fn other_alphabets() {
        let l = lock_interval(&[2, 1, 0, 0], 4).unwrap();
        assert_eq!(coeffs(l.lo.beta.poly()), [-1, 0, 0, -3, -1, 0, 0, -3, 1]);
        assert_eq!(coeffs(l.hi.beta.poly()), [-1, 0, 3, -4, -1, 0, 0, -3, 1]);
        // Quoted to four places as 3.0688 and 3.0690; the second root is 3.06905….
        assert!((l.lo.beta.to_f64() - 3.0688).abs() < 1e-4);
        assert!((l.hi.beta.to_f64() - 3.0690).abs() < 1e-4);
        assert_eq!(l.hi.beta.to_decimal(5), "3.06905");
        let l = lock_interval(&[0], 2).unwrap();
        assert_eq!(l.lo.beta.to_decimal(3), "1.618");
        assert_eq!(l.hi.beta.to_decimal(3), "1.802");
        assert_eq!(l.polytope.points()[0], FreqVector::parse("1/2,1/2").unwrap());
    }

    #[test]
    fn beta_pipeline() {
        let r = df_of_beta(&AlgebraicNumber::from_rational(rat(21901, 10000)), 10_000, 100).unwrap();
        assert_eq!(r.itinerary.to_text(), "2 1 0 1 *0");
        match r.result {
            DfResult::Exact(p) => assert_eq!(p, df_polytope(&r.itinerary, 3).unwrap()),
            DfResult::Approximate(_) => panic!("expected an exact polytope"),
        }
        let p = parse_coefficients("1,-2,-1,-2,-1r").unwrap();
        let beta = isolate_root(&p, &rat(2, 1), &rat(3, 1)).unwrap();
        let r = df_of_beta(&beta, 10_000, 100).unwrap();
        assert_eq!(r.itinerary.to_text(), "0 1 1 *0");
        assert!(r.is_exact());
    }

    #[test]
    fn interior_rationals_lock() {
        let l = lock_interval(&[2, 1, 0, 0], 3).unwrap();
        for beta in [rat(21901, 10000), rat(219006, 100000), rat(219018, 100000)] {
            assert_eq!(l.lo.beta.cmp_rational(&beta), Ordering::Less);
            assert_eq!(l.hi.beta.cmp_rational(&beta), Ordering::Greater);
            let r = df_of_beta(&AlgebraicNumber::from_rational(beta), 10_000, 100).unwrap();
            match r.result {
                DfResult::Exact(p) => assert!(p.same_vertices(&l.polytope)),
                DfResult::Approximate(_) => panic!("locked β must resolve"),
            }
        }
    }
}
