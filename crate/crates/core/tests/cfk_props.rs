mod common;

use betadf::cfk::{
    apply_lambda, apply_lambda_seq, compare_itineraries, gamma, itinerary_of, j_index, k_inv, k_map, lambda_chain, s_of,
    simplex_images, Itinerary,
};
use betadf::dfset::geometry::in_hull;
use betadf::symbolic::{compare_seqs, compare_words, digit_freq_digits, is_maximal, DigitSeq, EventuallyPeriodic, FreqVector, Word};
use betadf::Comparison;
use proptest::prelude::*;
use std::cmp::Ordering;

fn word(k: u8) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..k, 1..8).prop_map(move |d| Word::new(d, k).unwrap())
}

fn rational_or_finite() -> impl Strategy<Value = Itinerary> {
    (prop::collection::vec(0u64..4, 0..4), any::<bool>())
        .prop_map(|(e, fin)| if fin { Itinerary::finite(e) } else { Itinerary::rational(e) })
}

fn exact_s(n: &Itinerary, k: u8) -> EventuallyPeriodic {
    s_of(n, k, 1 << 16).unwrap().as_periodic().expect("small itineraries give exact infimax sequences").clone()
}

fn is_proper_power(block: &[u8]) -> bool {
    let n = block.len();
    (1..n).any(|p| n.is_multiple_of(p) && (p..n).all(|i| block[i] == block[i - p]))
}

proptest! {
    #[test]
    fn lambda_preserves_word_order((v, w) in (2u8..=4).prop_flat_map(|k| (word(k), word(k))), n in 0u64..5) {
        let before = compare_words(&v, &w).unwrap();
        prop_assert_eq!(compare_words(&apply_lambda(n, &v), &apply_lambda(n, &w)).unwrap(), before);
    }

    #[test]
    fn lambda_preserves_sequence_order(
        (v, w) in (2u8..=4).prop_flat_map(|k| (common::ep(k, 3, 4), common::ep(k, 3, 4))),
        n in 0u64..5,
    ) {
        prop_assert_eq!(apply_lambda_seq(n, &v).cmp(&apply_lambda_seq(n, &w)), v.cmp(&w));
    }

    #[test]
    fn gamma_inverts_lambda(v in common::any_ep(4, 4), n in 0u64..5) {
        let image = DigitSeq::from(apply_lambda_seq(n, &v));
        let back = gamma(n, &image).unwrap();
        prop_assert_eq!(back.as_periodic(), Some(&v));
    }

    #[test]
    fn s_preserves_order(m in rational_or_finite(), n in rational_or_finite(), k in 2u8..=4) {
        let c = compare_itineraries(&m, &n);
        let s = compare_seqs(&exact_s(&m, k).into(), &exact_s(&n, k).into());
        prop_assert_eq!(s, c);
    }

    #[test]
    fn k_inverts_its_branches(alpha in (2usize..=4).prop_flat_map(|k| common::interior_freq(k, 9)), n in 0u64..20) {
        let beta = k_inv(n, &alpha);
        prop_assert_eq!(j_index(&beta).unwrap(), n);
        prop_assert_eq!(k_map(&beta).unwrap(), alpha);
    }

    #[test]
    fn infimax_block_realizes_the_frequency(alpha in (2usize..=4).prop_flat_map(|k| common::interior_freq(k, 6))) {
        let k = alpha.k() as u8;
        let n = itinerary_of(&alpha);
        let s = exact_s(&n, k);
        prop_assert!(s.preperiod().is_empty());
        prop_assert_eq!(digit_freq_digits(s.period(), k).unwrap(), alpha);
        prop_assert!(is_maximal(&s));
    }

    #[test]
    fn infimax_blocks_are_primitive(entries in prop::collection::vec(0u64..4, 0..5), k in 2u8..=4) {
        let n = Itinerary::rational(entries.clone());
        let block = lambda_chain(&entries, &[k - 1], k, usize::MAX);
        prop_assert!(!is_proper_power(&block));
        let s = exact_s(&n, k);
        prop_assert_eq!(s.period(), &block[..]);
    }

    #[test]
    fn upsilon_matches_block_frequencies(p in common::prefix(5, 4), k in 2usize..=4) {
        for r in 0..p.len() {
            let img = simplex_images(&p, r, k).unwrap();
            for i in 0..k {
                let block = lambda_chain(&p[..=r], &[i as u8], k as u8, usize::MAX);
                prop_assert_eq!(&img.a_vertices[i], &digit_freq_digits(&block, k as u8).unwrap());
                prop_assert_eq!(img.lengths[i].clone(), block.len().into());
            }
        }
    }

    #[test]
    fn simplex_images_nest(p in common::prefix(6, 5), k in 2usize..=4) {
        for r in 0..p.len() - 1 {
            let outer = simplex_images(&p, r, k).unwrap().a_vertices;
            for v in simplex_images(&p, r + 1, k).unwrap().a_vertices {
                prop_assert!(in_hull(&v, &outer));
            }
        }
    }

    #[test]
    fn concatenations_stay_below_the_infimax(
        (alpha, others, picks) in (2usize..=3).prop_flat_map(|k| (
            common::interior_freq(k, 5),
            prop::collection::vec(common::interior_freq(k, 5), 1..4),
            prop::collection::vec(0usize..16, 1..6),
        ))
    ) {
        let k = alpha.k() as u8;
        let top = exact_s(&itinerary_of(&alpha), k);
        let blocks: Vec<Vec<u8>> = others
            .iter()
            .map(|a| exact_s(&itinerary_of(a), k))
            .filter(|s| s.cmp(&top) == Ordering::Less)
            .map(|s| s.period().to_vec())
            .collect();
        prop_assume!(!blocks.is_empty());
        let w: Vec<u8> = picks.iter().flat_map(|&i| blocks[i % blocks.len()].clone()).collect();
        for r in 0..w.len() {
            let tail = &w[r..];
            prop_assert_ne!(tail.cmp(&top.prefix(tail.len())[..]), Ordering::Greater);
        }
    }
}

#[test]
fn itinerary_order_examples() {
    let r = Itinerary::rational(vec![2, 1, 0, 1]);
    let f = Itinerary::finite(vec![2, 1, 0, 0]);
    assert_eq!(compare_itineraries(&r, &f), Comparison::Less);
    let alpha = FreqVector::parse("7/16,5/16,4/16").unwrap();
    assert_eq!(itinerary_of(&alpha), Itinerary::rational(vec![1, 5, 3]));
}
