#![allow(dead_code)]

use betadf::symbolic::{is_maximal, EventuallyPeriodic, FreqVector};
use proptest::prelude::*;

pub fn ep(k: u8, max_pre: usize, max_per: usize) -> impl Strategy<Value = EventuallyPeriodic> {
    (prop::collection::vec(0..k, 0..=max_pre), prop::collection::vec(0..k, 1..=max_per))
        .prop_map(move |(pre, per)| EventuallyPeriodic::new(pre, per, k).unwrap())
}

pub fn any_ep(max_pre: usize, max_per: usize) -> impl Strategy<Value = EventuallyPeriodic> {
    (2u8..=4).prop_flat_map(move |k| ep(k, max_pre, max_per))
}

/// Maximal, not eventually zero, and starting with the top digit.
pub fn kneading_ep(k: u8) -> impl Strategy<Value = EventuallyPeriodic> {
    (prop::collection::vec(0..k, 0..=3), prop::collection::vec(0..k, 1..=4))
        .prop_map(move |(mut pre, mut per)| {
            match pre.first_mut() {
                Some(d) => *d = k - 1,
                None => per[0] = k - 1,
            }
            EventuallyPeriodic::new(pre, per, k).unwrap()
        })
        .prop_filter("admissible kneading datum", |w| !w.is_finite() && is_maximal(w))
}

/// A rational frequency vector with `α_{k-1} > 0`.
pub fn interior_freq(k: usize, max: u64) -> impl Strategy<Value = FreqVector> {
    (prop::collection::vec(0..=max, k - 1), 1..=max).prop_map(|(mut c, last)| {
        c.push(last);
        FreqVector::from_counts(&c).unwrap()
    })
}

pub fn prefix(max_len: usize, max_entry: u64) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0..=max_entry, 1..=max_len)
}
