//! Finitely described points of the compactified itinerary space.

use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_arith::rational::pow2_neg;
use crate::order::Comparison;

/// An itinerary `n₀ n₁ n₂ …`, compared reverse-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Itinerary {
    /// `entries` followed by `0̄`; never ends in a zero.
    Rational { entries: Vec<u64> },
    /// `entries` followed by `∞`.
    Finite { entries: Vec<u64> },
    /// `preperiod` then `period` repeated; the period is primitive and not
    /// all zero.
    Periodic { preperiod: Vec<u64>, period: Vec<u64> },
    /// Only `entries` are known. `candidate_finite` records a finite-type
    /// reading consistent with every digit examined.
    Truncated { entries: Vec<u64>, candidate_finite: Option<FiniteCandidate> },
}

/// A finite-type itinerary `entries ∞` supported by the first `depth`
/// digits of the input, but not decidable from them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteCandidate {
    pub entries: Vec<u64>,
    pub depth: usize,
}

/// One position of an itinerary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Entry {
    N(u64),
    Inf,
    /// Past the `∞` of a finite-type itinerary.
    End,
    /// Past the certified part of a truncated itinerary.
    Unknown,
}

impl Itinerary {
    pub fn rational(mut entries: Vec<u64>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        Itinerary::Rational { entries }
    }

    pub fn finite(entries: Vec<u64>) -> Self {
        Itinerary::Finite { entries }
    }

    pub fn truncated(entries: Vec<u64>) -> Self {
        Itinerary::Truncated { entries, candidate_finite: None }
    }

    pub fn periodic(mut preperiod: Vec<u64>, mut period: Vec<u64>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        if period.iter().all(|&x| x == 0) {
            return Ok(Itinerary::rational(preperiod));
        }
        let n = period.len();
        let root = (1..=n).find(|&d| n.is_multiple_of(d) && (d..n).all(|i| period[i] == period[i - d])).unwrap_or(n);
        period.truncate(root);
        while preperiod.last().is_some_and(|x| Some(x) == period.last()) {
            preperiod.pop();
            period.rotate_right(1);
        }
        Ok(Itinerary::Periodic { preperiod, period })
    }

    pub fn entry(&self, i: usize) -> Entry {
        match self {
            Itinerary::Rational { entries } => Entry::N(entries.get(i).copied().unwrap_or(0)),
            Itinerary::Finite { entries } => match i.cmp(&entries.len()) {
                std::cmp::Ordering::Less => Entry::N(entries[i]),
                std::cmp::Ordering::Equal => Entry::Inf,
                std::cmp::Ordering::Greater => Entry::End,
            },
            Itinerary::Periodic { preperiod, period } => {
                if i < preperiod.len() {
                    Entry::N(preperiod[i])
                } else {
                    Entry::N(period[(i - preperiod.len()) % period.len()])
                }
            }
            Itinerary::Truncated { entries, .. } => entries.get(i).map_or(Entry::Unknown, |&x| Entry::N(x)),
        }
    }

    /// The first `n` natural entries (fewer if the itinerary hits `∞` or its
    /// certified end first).
    pub fn prefix(&self, n: usize) -> Vec<u64> {
        (0..n)
            .map_while(|i| match self.entry(i) {
                Entry::N(x) => Some(x),
                _ => None,
            })
            .collect()
    }

    /// Number of entries known exactly; `None` when the whole itinerary is known.
    pub fn certified_depth(&self) -> Option<usize> {
        match self {
            Itinerary::Truncated { entries, .. } => Some(entries.len()),
            _ => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Itinerary::Truncated { .. })
    }

    /// Positions after which two non-truncated itineraries can no longer
    /// first disagree, and the period of what follows.
    fn shape(&self) -> (usize, usize) {
        match self {
            Itinerary::Rational { entries } => (entries.len(), 1),
            Itinerary::Finite { entries } => (entries.len() + 1, 1),
            Itinerary::Periodic { preperiod, period } => (preperiod.len(), period.len()),
            Itinerary::Truncated { entries, .. } => (entries.len(), 1),
        }
    }

    /// Parses the text form: `2 1 0 1 *0`, `2 1 0 0 inf`, `1 1 (1 0)`, `2 1 …`.
    pub fn parse(text: &str) -> Result<Self> {
        let spaced = text.replace('(', " ( ").replace(')', " ) ");
        let tokens: Vec<&str> = spaced.split_whitespace().collect();
        let bad = || Error::Parse(format!("bad itinerary {text:?}; expected e.g. \"2 1 0 1 *0\", \"2 1 0 0 inf\", \"1 1 (1 0)\" or \"2 1 …\""));
        let nums = |ts: &[&str]| -> Result<Vec<u64>> { ts.iter().map(|t| t.parse::<u64>().map_err(|_| bad())).collect() };
        let (last, body) = tokens.split_last().ok_or_else(bad)?;
        match *last {
            "*0" => Ok(Itinerary::rational(nums(body)?)),
            "inf" | "∞" => Ok(Itinerary::finite(nums(body)?)),
            "…" | "..." => Ok(Itinerary::truncated(nums(body)?)),
            ")" => {
                let open = body.iter().position(|&t| t == "(").ok_or_else(bad)?;
                Itinerary::periodic(nums(&body[..open])?, nums(&body[open + 1..])?)
            }
            _ => Err(bad()),
        }
    }

    pub fn to_text(&self) -> String {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
        let with = |v: &[u64], tail: &str| if v.is_empty() { tail.to_string() } else { format!("{} {tail}", join(v)) };
        match self {
            Itinerary::Rational { entries } => with(entries, "*0"),
            Itinerary::Finite { entries } => with(entries, "inf"),
            Itinerary::Periodic { preperiod, period } => with(preperiod, &format!("({})", join(period))),
            Itinerary::Truncated { entries, .. } => with(entries, "…"),
        }
    }
}

impl fmt::Display for Itinerary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Reverse-lexicographic comparison: at the first difference `r`, `m < n`
/// iff `m_r = ∞` or `m_r > n_r`.
pub fn compare_itineraries(m: &Itinerary, n: &Itinerary) -> Comparison {
    match first_difference(m, n) {
        Diff::Equal => Comparison::Equal,
        Diff::Unknown(depth) => Comparison::Undecided { depth },
        Diff::At(_, a, b) => match (a, b) {
            (Entry::Inf, _) => Comparison::Less,
            (_, Entry::Inf) => Comparison::Greater,
            (Entry::N(x), Entry::N(y)) => y.cmp(&x).into(),
            _ => unreachable!("End only follows Inf"),
        },
    }
}

enum Diff {
    Equal,
    Unknown(usize),
    At(usize, Entry, Entry),
}

fn first_difference(m: &Itinerary, n: &Itinerary) -> Diff {
    let (lm, pm) = m.shape();
    let (ln, pn) = n.shape();
    let bound = lm.max(ln) + pm.lcm(&pn);
    let mut i = 0;
    loop {
        let (a, b) = (m.entry(i), n.entry(i));
        if a == Entry::Unknown || b == Entry::Unknown {
            return Diff::Unknown(i);
        }
        if a != b {
            return Diff::At(i, a, b);
        }
        if a == Entry::Inf || (i >= bound && m.is_exact() && n.is_exact()) {
            return Diff::Equal;
        }
        i += 1;
    }
}

/// `d(m, n) = 2^{-X}` with `X = r + min(Σ_{s≤r} m_s, Σ_{s≤r} n_s)` at the
/// first difference `r`; an `∞` entry contributes an infinite sum.
pub fn metric_d(m: &Itinerary, n: &Itinerary) -> Result<BigRational> {
    if !m.is_exact() || !n.is_exact() {
        return Err(Error::TruncatedItinerary);
    }
    match first_difference(m, n) {
        Diff::Equal => Ok(BigRational::zero()),
        Diff::Unknown(_) => unreachable!("exact itineraries always decide"),
        Diff::At(r, _, _) => {
            let sum = |it: &Itinerary| -> Option<u64> {
                (0..=r).try_fold(0u64, |acc, i| match it.entry(i) {
                    Entry::N(x) => Some(acc.saturating_add(x)),
                    _ => None,
                })
            };
            let s = match (sum(m), sum(n)) {
                (Some(a), Some(b)) => a.min(b),
                (Some(a), None) | (None, Some(a)) => a,
                (None, None) => unreachable!("∞ at the same position means equal"),
            };
            Ok(pow2_neg(r as u64 + s))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;

    fn it(s: &str) -> Itinerary {
        Itinerary::parse(s).unwrap()
    }

    #[test]
    fn text_round_trip() {
        for s in ["2 1 0 1 *0", "2 1 0 0 inf", "1 1 (1 0)", "2 1 …", "*0", "inf", "(3)"] {
            assert_eq!(it(s).to_text(), s);
        }
        assert_eq!(it("1 5 3 0 0 *0"), it("1 5 3 *0"));
        assert_eq!(it("2 (0)"), it("2 *0"));
        assert_eq!(it("1 1 (1 0 1 0)").to_text(), "1 1 (1 0)");
        assert_eq!(it("1 (0 1)").to_text(), "(1 0)");
        assert!(Itinerary::parse("1 2").is_err());
        assert!(Itinerary::parse("").is_err());
    }

    #[test]
    fn reverse_lexicographic() {
        assert_eq!(compare_itineraries(&it("2 1 0 1 *0"), &it("2 1 0 0 inf")), Comparison::Less);
        assert_eq!(compare_itineraries(&it("1 5 3 *0"), &it("1 5 3 *0")), Comparison::Equal);
        assert_eq!(compare_itineraries(&it("3 *0"), &it("2 *0")), Comparison::Less);
        assert_eq!(compare_itineraries(&it("inf"), &it("*0")), Comparison::Less);
        assert_eq!(compare_itineraries(&it("1 *0"), &it("1 (1)")), Comparison::Greater);
        assert_eq!(compare_itineraries(&it("(1 0)"), &it("1 0 1 0 (1 0)")), Comparison::Equal);
        assert_eq!(compare_itineraries(&it("2 1 …"), &it("2 1 0 *0")), Comparison::Undecided { depth: 2 });
        assert_eq!(compare_itineraries(&it("2 1 …"), &it("2 3 *0")), Comparison::Greater);
    }

    #[test]
    fn metric() {
        assert_eq!(metric_d(&it("1 *0"), &it("2 *0")).unwrap(), rat(1, 2));
        assert_eq!(metric_d(&it("0 5 *0"), &it("0 7 *0")).unwrap(), rat(1, 64));
        assert_eq!(metric_d(&it("1 1 (1 0)"), &it("1 1 (1 0)")).unwrap(), BigRational::zero());
        assert_eq!(metric_d(&it("3 inf"), &it("3 2 *0")).unwrap(), rat(1, 64));
        assert!(metric_d(&it("1 …"), &it("1 *0")).is_err());
    }
}
