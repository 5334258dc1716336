mod common;

use std::cmp::Ordering;

use betadf::cfk::{compare_itineraries, Itinerary};
use betadf::dfset::geometry::hausdorff_sq;
use betadf::dfset::{
    df_polytope, df_sandwich, is_certified_extreme, lock_interval, membership, theta_sequence, Membership, Polytope, VertexTag,
};
use betadf::symbolic::FreqVector;
use betadf::Comparison;
use proptest::prelude::*;

fn rational(max_len: usize, max_entry: u64) -> impl Strategy<Value = Itinerary> {
    prop::collection::vec(0..=max_entry, 0..=max_len).prop_map(Itinerary::rational)
}

proptest! {
    #[test]
    fn df_is_monotone(m in rational(4, 4), n in rational(4, 4), k in 3usize..=4) {
        let (pm, pn) = (df_polytope(&m, k).unwrap(), df_polytope(&n, k).unwrap());
        match compare_itineraries(&m, &n) {
            Comparison::Less => prop_assert!(pm.points().iter().all(|v| pn.contains(v))),
            Comparison::Greater => prop_assert!(pn.points().iter().all(|v| pm.contains(v))),
            _ => prop_assert!(pm.same_vertices(&pn)),
        }
    }

    #[test]
    fn vertices_are_certified_and_closed(n in rational(5, 5), k in 2usize..=4) {
        let p = df_polytope(&n, k).unwrap();
        prop_assert!(is_certified_extreme(&p));
        let again = Polytope::hull(k, p.vertices().to_vec()).unwrap();
        prop_assert_eq!(again, p);
    }

    #[test]
    fn rational_finite_pairs_agree(prefix in common::prefix(4, 4), k in 2usize..=4) {
        let mut bumped = prefix.clone();
        *bumped.last_mut().unwrap() += 1;
        let a = df_polytope(&Itinerary::rational(bumped), k).unwrap();
        let b = df_polytope(&Itinerary::finite(prefix), k).unwrap();
        prop_assert!(a.same_vertices(&b));
    }

    #[test]
    fn itinerary_and_hull_membership_agree(n in rational(3, 3), alpha in (2usize..=4).prop_flat_map(|k| common::interior_freq(k, 7))) {
        let k = alpha.k();
        let p = df_polytope(&n, k).unwrap();
        let by_itinerary = membership(&alpha, &n) == Membership::Inside;
        prop_assert_eq!(by_itinerary, p.contains(&alpha));
    }

    #[test]
    fn sandwich_gap_never_grows(pre in prop::collection::vec(0u64..4, 0..3), per in prop::collection::vec(0u64..4, 1..3), k in 3usize..=4) {
        prop_assume!(per.iter().any(|&x| x != 0));
        let n = Itinerary::periodic(pre, per).unwrap();
        let mut last = None;
        for r in 0..6 {
            let s = df_sandwich(&n, r, k).unwrap();
            prop_assert!(s.inner.points().iter().all(|v| s.outer.contains(v)));
            let gap = hausdorff_sq(&s.inner.points(), &s.outer.points());
            if let Some(prev) = last {
                prop_assert!(gap <= prev);
            }
            last = Some(gap);
        }
    }

    #[test]
    fn theta_is_nondecreasing(prefix in common::prefix(8, 6)) {
        let seq = theta_sequence(&prefix, prefix.len() - 1).unwrap();
        for r in 0..seq.len() - 1 {
            let c = seq[r + 1].cmp_angle(&seq[r]);
            if prefix[r + 1] == 0 {
                prop_assert_eq!(c, Ordering::Equal);
            } else {
                prop_assert_eq!(c, Ordering::Greater);
            }
        }
    }

    #[test]
    fn fe_vertices_alternate_sides(prefix in prop::collection::vec(1u64..5, 1..6)) {
        // Counterclockwise from (1,0,0): even-depth FE points, then Φ⁻¹,
        // then odd-depth FE points in decreasing depth, then (0,1,0).
        let p = df_polytope(&Itinerary::rational(prefix), 3).unwrap();
        let tags: Vec<VertexTag> = p.vertices().iter().map(|v| v.tag).collect();
        let phi = tags.iter().position(|t| *t == VertexTag::PhiInverse).unwrap();
        let depths = |ts: &[VertexTag]| ts.iter().filter_map(|t| match t { VertexTag::Fe(s) => Some(*s), _ => None }).collect::<Vec<_>>();
        let before = depths(&tags[..phi]);
        let after = depths(&tags[phi..]);
        prop_assert!(before.iter().all(|s| s % 2 == 0) && before.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(after.iter().all(|s| s % 2 == 1) && after.windows(2).all(|w| w[0] > w[1]));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn lock_intervals_are_disjoint(a in common::prefix(3, 3), b in common::prefix(3, 3)) {
        prop_assume!(a != b);
        let (x, y) = (lock_interval(&a, 3).unwrap(), lock_interval(&b, 3).unwrap());
        let apart = x.hi.beta.compare(&y.lo.beta).unwrap() == Ordering::Less
            || y.hi.beta.compare(&x.lo.beta).unwrap() == Ordering::Less;
        prop_assert!(apart);
    }
}

#[test]
fn non_extreme_points_are_inside() {
    let p = df_polytope(&Itinerary::rational(vec![2, 1, 0, 1]), 3).unwrap();
    let q = FreqVector::parse("2/5,2/5,1/5").unwrap();
    assert!(p.contains(&q));
    assert!(!p.points().contains(&q));
}
