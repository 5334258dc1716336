mod common;

use std::cmp::Ordering;

use betadf::exact_arith::{beta_from_kneading, poly_from_kneading, refine};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

/// `1 - Σ_{r<n} w_r β^{-(r+1)}`, summed over the integers: with `β = p/q`
/// it is `(p^n - q T_n) / p^n` where `T_{j+1} = p T_j + w_j q^j`.
fn series_defect(w: &betadf::symbolic::EventuallyPeriodic, beta: &BigRational, n: usize) -> BigRational {
    let (p, q) = (beta.numer(), beta.denom());
    let mut t = BigInt::zero();
    let mut qj = BigInt::one();
    for r in 0..n {
        t = t * p + &qj * BigInt::from(w.digit(r));
        qj *= q;
    }
    let pn = p.pow(n as u32);
    BigRational::new(&pn - q * t, pn)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn kneading_root_solves_the_series(w in (2u8..=4).prop_flat_map(common::kneading_ep)) {
        let beta = beta_from_kneading(&w).unwrap();
        let (lo, hi) = refine(&beta, &BigRational::new(1.into(), num_bigint::BigInt::from(10).pow(20)));
        let n = 80;
        let km1 = BigRational::from_integer((w.k() - 1).into());
        // Tail of the series at lo, plus the slope over the interval.
        let tail = &km1 * lo.recip().pow(n as i32) / (&lo - BigRational::one());
        let slope_bound = &km1 * BigRational::from_integer(((n * n) as i64).into());
        let bound = tail + slope_bound * (&hi - &lo);
        let d = series_defect(&w, &lo, n);
        prop_assert!(d.abs() <= bound, "defect {} exceeds {}", d, bound);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn refinement_keeps_the_root(w in (2u8..=4).prop_flat_map(common::kneading_ep), bits in 1u32..120) {
        let beta = beta_from_kneading(&w).unwrap();
        let eps = BigRational::new(1.into(), num_bigint::BigInt::from(2).pow(bits));
        let (lo, hi) = refine(&beta, &eps);
        prop_assert!(&hi - &lo < eps);
        let p = beta.poly();
        if lo == hi {
            prop_assert_eq!(p.sign_at_rational(&lo), Ordering::Equal);
        } else {
            let (a, b) = (p.sign_at_rational(&lo), p.sign_at_rational(&hi));
            prop_assert!(a != Ordering::Equal && b != Ordering::Equal && a != b);
        }
    }

    #[test]
    fn kneading_to_beta_is_increasing(
        (v, w) in (2u8..=4).prop_flat_map(|k| (common::kneading_ep(k), common::kneading_ep(k)))
    ) {
        let (bv, bw) = (beta_from_kneading(&v).unwrap(), beta_from_kneading(&w).unwrap());
        prop_assert_eq!(bv.compare(&bw).unwrap(), v.cmp(&w));
    }

    #[test]
    fn normalized_polynomials(w in (2u8..=4).prop_flat_map(common::kneading_ep)) {
        let p = poly_from_kneading(&w).unwrap();
        prop_assert!(p.leading().unwrap().is_positive());
        prop_assert_eq!(p.primitive(), p);
    }
}
