//! The substitutions `Λ_n`, the infimax map `S`, the left inverses `Γ_n`
//! and the itinerary-extraction recursion `n(w)`.

use std::collections::HashMap;

use super::itinerary::{FiniteCandidate, Itinerary};
use super::matrix::AbelianMatrix;
use crate::error::{Error, Result};
use crate::symbolic::{DigitSeq, DigitStream, EventuallyPeriodic, StopReason, Word};

/// `Λ_n(j)`: `j ↦ j+1` below `k-2`, `k-2 ↦ (k-1)0^{n+1}`, `k-1 ↦ (k-1)0^n`.
pub fn lambda_image(n: u64, j: u8, k: u8) -> Vec<u8> {
    if j + 2 < k {
        return vec![j + 1];
    }
    let zeros = if j + 2 == k { n + 1 } else { n };
    let mut out = Vec::with_capacity(zeros as usize + 1);
    out.push(k - 1);
    out.extend(std::iter::repeat_n(0, zeros as usize));
    out
}

/// `Λ_n` applied to a digit list, keeping at most `limit` output digits.
pub fn apply_lambda_digits(n: u64, digits: &[u8], k: u8, limit: usize) -> Vec<u8> {
    let mut out = Vec::new();
    for &d in digits {
        if out.len() >= limit {
            break;
        }
        if d + 2 < k {
            out.push(d + 1);
        } else {
            let zeros = if d + 2 == k { n + 1 } else { n };
            out.push(k - 1);
            let room = limit - out.len();
            out.extend(std::iter::repeat_n(0, (zeros as usize).min(room)));
        }
    }
    out.truncate(limit);
    out
}

pub fn apply_lambda(n: u64, w: &Word) -> Word {
    Word::new(apply_lambda_digits(n, w.digits(), w.k(), usize::MAX), w.k()).expect("substitution preserves the alphabet")
}

/// `Λ_n` on an eventually periodic sequence, substituting preperiod and
/// period separately.
pub fn apply_lambda_seq(n: u64, s: &EventuallyPeriodic) -> EventuallyPeriodic {
    let k = s.k();
    let pre = apply_lambda_digits(n, s.preperiod(), k, usize::MAX);
    let per = apply_lambda_digits(n, s.period(), k, usize::MAX);
    EventuallyPeriodic::new(pre, per, k).expect("substitution preserves the alphabet")
}

/// `Λ_{n₀} ∘ ⋯ ∘ Λ_{n_r}` applied to `digits`, truncated to `limit`. Every
/// letter maps to a nonempty word, so truncating each stage is exact.
pub fn lambda_chain(prefix: &[u64], digits: &[u8], k: u8, limit: usize) -> Vec<u8> {
    let mut cur: Vec<u8> = digits.iter().copied().take(limit).collect();
    for &n in prefix.iter().rev() {
        cur = apply_lambda_digits(n, &cur, k, limit);
    }
    cur
}

fn block_len(prefix: &[u64], j: u8, k: u8) -> usize {
    let lens = AbelianMatrix::chain(prefix, k).column_sums();
    usize::try_from(&lens[j as usize]).unwrap_or(usize::MAX)
}

fn stream(k: u8, digits: Vec<u8>) -> DigitSeq {
    DigitSeq::Stream(DigitStream::from_prefix(k, digits, StopReason::Budget))
}

/// The infimax sequence `S(n)`. Rational and finite types give exact
/// sequences when their blocks fit in `budget`; otherwise, and for periodic
/// or truncated itineraries, the result is a certified prefix of length at
/// most `budget`.
pub fn s_of(n: &Itinerary, k: u8, budget: usize) -> Result<DigitSeq> {
    if k < 2 {
        return Err(Error::BadAlphabet(k));
    }
    let top = k - 1;
    match n {
        Itinerary::Rational { entries } => {
            if block_len(entries, top, k) <= budget {
                let block = lambda_chain(entries, &[top], k, usize::MAX);
                Ok(EventuallyPeriodic::purely_periodic(block, k)?.into())
            } else {
                Ok(stream(k, repeat_chain(entries, &[top], k, budget)))
            }
        }
        Itinerary::Finite { entries } => {
            if block_len(entries, top, k).saturating_add(block_len(entries, 0, k)) <= budget {
                let pre = lambda_chain(entries, &[top], k, usize::MAX);
                let per = lambda_chain(entries, &[0], k, usize::MAX);
                Ok(EventuallyPeriodic::new(pre, per, k)?.into())
            } else {
                let mut seed = vec![top];
                seed.extend(std::iter::repeat_n(0, budget));
                Ok(stream(k, lambda_chain(entries, &seed, k, budget)))
            }
        }
        Itinerary::Periodic { .. } => {
            // Λ_{n,r}(k-1) is a prefix of S(n) for every r; deepen until the
            // budget is filled or the depth cap is reached.
            let mut r = 8;
            loop {
                let p = n.prefix(r);
                let digits = lambda_chain(&p, &[top], k, budget);
                if digits.len() >= budget || r > budget.saturating_mul(4).max(64) {
                    return Ok(stream(k, digits));
                }
                r *= 2;
            }
        }
        Itinerary::Truncated { entries, .. } => Ok(stream(k, lambda_chain(entries, &[top], k, budget))),
    }
}

fn repeat_chain(entries: &[u64], block_seed: &[u8], k: u8, budget: usize) -> Vec<u8> {
    // The block exceeds the budget, so one copy already fills the prefix.
    lambda_chain(entries, block_seed, k, budget)
}

/// Read access used by `Γ_n`.
trait Digits {
    fn get(&self, i: usize) -> Option<u8>;
    /// True when every digit from `i` on is known to be 0.
    fn zeros_from(&self, i: usize) -> bool;
}

impl Digits for EventuallyPeriodic {
    fn get(&self, i: usize) -> Option<u8> {
        Some(self.digit(i))
    }

    fn zeros_from(&self, i: usize) -> bool {
        self.is_finite() && i >= self.preperiod().len()
    }
}

impl Digits for DigitSeq {
    fn get(&self, i: usize) -> Option<u8> {
        self.digit(i)
    }

    fn zeros_from(&self, i: usize) -> bool {
        match self {
            DigitSeq::Periodic(p) => p.zeros_from(i),
            DigitSeq::Stream(_) => false,
        }
    }
}

enum Chunk {
    Out(u8, usize),
    Zeros,
    TopForever,
    Incomplete(usize),
}

/// One step of `Γ_n` at position `i`.
fn read_chunk<D: Digits>(w: &D, i: usize, n: u64, k: u8) -> Chunk {
    let d = match w.get(i) {
        Some(d) => d,
        None => return Chunk::Incomplete(i + 1),
    };
    if d == 0 {
        return Chunk::Zeros;
    }
    if d < k - 1 {
        return Chunk::Out(d - 1, 1);
    }
    let n = n as usize;
    for t in 1..=n {
        if w.zeros_from(i + t) {
            return Chunk::Out(k - 2, n + 2);
        }
        match w.get(i + t) {
            Some(0) => {}
            Some(_) => return Chunk::TopForever,
            None => return Chunk::Incomplete(i + t + 1),
        }
    }
    match w.get(i + n + 1) {
        Some(0) => Chunk::Out(k - 2, n + 2),
        Some(_) => Chunk::Out(k - 1, n + 1),
        None => Chunk::Incomplete(i + n + 2),
    }
}

/// `Γ_n(w)`, the left inverse of `Λ_n`.
///
/// Exact inputs give exact outputs. On a stream the output is exact as soon
/// as a terminal case (`0̄` or `(k-1)̄`) is reached; otherwise it is the
/// prefix produced by the complete chunks read.
pub fn gamma(n: u64, w: &DigitSeq) -> Result<DigitSeq> {
    let k = w.k();
    match w {
        DigitSeq::Periodic(p) => Ok(gamma_periodic(n, p).into()),
        DigitSeq::Stream(s) => {
            let mut out = Vec::new();
            let mut pos = 0;
            loop {
                match read_chunk(w, pos, n, k) {
                    Chunk::Out(d, used) => {
                        out.push(d);
                        pos += used;
                    }
                    Chunk::Zeros => return Ok(EventuallyPeriodic::with_zero_tail(out, k)?.into()),
                    Chunk::TopForever => return Ok(EventuallyPeriodic::new(out, vec![k - 1], k)?.into()),
                    Chunk::Incomplete(needed) => {
                        if out.is_empty() {
                            return Err(Error::InsufficientDigits { needed, available: s.generated() });
                        }
                        let stop = s.stop_reason().unwrap_or(StopReason::Budget);
                        return Ok(DigitSeq::Stream(DigitStream::from_prefix(k, out, stop)));
                    }
                }
            }
        }
    }
}

fn gamma_periodic(n: u64, w: &EventuallyPeriodic) -> EventuallyPeriodic {
    let k = w.k();
    let (pre, per) = (w.preperiod().len(), w.period().len());
    let normalize = |p: usize| if p < pre { p } else { pre + (p - pre) % per };
    let mut seen: HashMap<usize, usize> = HashMap::new();
    let mut out = Vec::new();
    let mut pos = 0;
    loop {
        let state = normalize(pos);
        if let Some(&j) = seen.get(&state) {
            let period = out.split_off(j);
            return EventuallyPeriodic::new(out, period, k).unwrap();
        }
        seen.insert(state, out.len());
        match read_chunk(w, state, n, k) {
            Chunk::Out(d, used) => {
                out.push(d);
                pos = state + used;
            }
            Chunk::Zeros => return EventuallyPeriodic::with_zero_tail(out, k).unwrap(),
            Chunk::TopForever => return EventuallyPeriodic::new(out, vec![k - 1], k).unwrap(),
            Chunk::Incomplete(_) => unreachable!("exact sequences never run out"),
        }
    }
}

/// Result of the itinerary-extraction recursion.
#[derive(Clone, Debug)]
pub struct ExtractedItinerary {
    pub itinerary: Itinerary,
    /// The successive `Γ` outputs, in order.
    pub trace: Vec<DigitSeq>,
}

/// `n(w)`: the itinerary whose infimax sequence is the largest one not
/// exceeding `w`, computed by peeling off `Γ` layers. At most `depth_budget`
/// entries are produced; a stream that runs out gives a truncated result.
pub fn n_of_w(w: &DigitSeq, depth_budget: usize) -> Result<ExtractedItinerary> {
    let k = w.k();
    let top = k - 1;
    let mut entries: Vec<u64> = Vec::new();
    let mut trace = Vec::new();
    let mut cur = w.clone();
    let mut seen: HashMap<EventuallyPeriodic, usize> = HashMap::new();
    let truncated = |entries: Vec<u64>, candidate: Option<FiniteCandidate>, trace| {
        Ok(ExtractedItinerary { itinerary: Itinerary::Truncated { entries, candidate_finite: candidate }, trace })
    };
    loop {
        match cur.digit(0) {
            None => return truncated(entries, None, trace),
            Some(d) if d != top => return Err(Error::NotMaximalForm),
            Some(_) => {}
        }
        if let DigitSeq::Periodic(p) = &cur {
            if let Some(&j) = seen.get(p) {
                let period = entries.split_off(j);
                return Ok(ExtractedItinerary { itinerary: Itinerary::periodic(entries, period)?, trace });
            }
            seen.insert(p.clone(), entries.len());
        }
        if entries.len() >= depth_budget {
            return truncated(entries, None, trace);
        }
        // w = (k-1) 0^n v with v₀ ≠ 0
        let mut i = 1;
        loop {
            if cur.zeros_from(i) {
                return Ok(ExtractedItinerary { itinerary: Itinerary::finite(entries), trace });
            }
            match cur.digit(i) {
                Some(0) => i += 1,
                Some(_) => break,
                None => {
                    let candidate = FiniteCandidate { entries: entries.clone(), depth: i };
                    return truncated(entries, Some(candidate), trace);
                }
            }
        }
        let n = (i - 1) as u64;
        // Compare v with Λ_n(0̄), the tail of S(n ∞): smaller means the
        // rational neighbour (n+1) 0̄, equal means n ∞.
        match compare_tail(&cur, i, n, k) {
            TailOrder::Less => {
                entries.push(n + 1);
                return Ok(ExtractedItinerary { itinerary: Itinerary::rational(entries), trace });
            }
            TailOrder::Equal => {
                entries.push(n);
                return Ok(ExtractedItinerary { itinerary: Itinerary::finite(entries), trace });
            }
            TailOrder::Unknown(depth) => {
                let mut cand = entries.clone();
                cand.push(n);
                let candidate = FiniteCandidate { entries: cand, depth };
                return truncated(entries, Some(candidate), trace);
            }
            TailOrder::Greater => {}
        }
        entries.push(n);
        let next = gamma(n, &cur);
        let next = match next {
            Ok(s) => s,
            Err(Error::InsufficientDigits { .. }) => return truncated(entries, None, trace),
            Err(e) => return Err(e),
        };
        trace.push(next.clone());
        cur = next;
    }
}

enum TailOrder {
    Less,
    Equal,
    Greater,
    Unknown(usize),
}

/// Orders `σ^i(w)` against `Λ_n(0̄)`, which is `1̄` for `k ≥ 3` and
/// `(1 0^{n+1})̄` for `k = 2`.
fn compare_tail(w: &DigitSeq, i: usize, n: u64, k: u8) -> TailOrder {
    let tail = lambda_image(n, 0, k);
    if let DigitSeq::Periodic(p) = w {
        let t = EventuallyPeriodic::purely_periodic(tail, k).expect("valid digits");
        return match p.shift(i).cmp(&t) {
            std::cmp::Ordering::Less => TailOrder::Less,
            std::cmp::Ordering::Equal => TailOrder::Equal,
            std::cmp::Ordering::Greater => TailOrder::Greater,
        };
    }
    let mut j = 0;
    loop {
        let t = tail[j % tail.len()];
        match w.digit(i + j) {
            None => return TailOrder::Unknown(i + j),
            Some(d) if d < t => return TailOrder::Less,
            Some(d) if d > t => return TailOrder::Greater,
            Some(_) => j += 1,
        }
    }
}
