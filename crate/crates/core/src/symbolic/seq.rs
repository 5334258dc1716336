//! Infinite digit sequences: exact eventually periodic ones and lazily
//! generated streams with a hard digit budget.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Mutex;

use num_integer::Integer;

use super::word::{check_alphabet, check_digits, digits_to_string, parse_digits};
use crate::error::{Error, Result};
use crate::order::Comparison;

/// `preperiod · period period period …`, stored canonically: the period is
/// primitive and the preperiod is as short as possible.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EventuallyPeriodic {
    k: u8,
    preperiod: Vec<u8>,
    period: Vec<u8>,
}

impl EventuallyPeriodic {
    pub fn new(preperiod: Vec<u8>, period: Vec<u8>, k: u8) -> Result<Self> {
        check_alphabet(k)?;
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        check_digits(&preperiod, k)?;
        check_digits(&period, k)?;
        let mut s = EventuallyPeriodic { k, preperiod, period };
        s.canonicalize();
        Ok(s)
    }

    pub fn purely_periodic(period: Vec<u8>, k: u8) -> Result<Self> {
        Self::new(Vec::new(), period, k)
    }

    /// `word` followed by `0̄`.
    pub fn with_zero_tail(word: Vec<u8>, k: u8) -> Result<Self> {
        Self::new(word, vec![0], k)
    }

    fn canonicalize(&mut self) {
        let n = self.period.len();
        let root = (1..=n)
            .find(|&d| n.is_multiple_of(d) && (d..n).all(|i| self.period[i] == self.period[i - d]))
            .unwrap_or(n);
        self.period.truncate(root);
        while self.preperiod.last().is_some_and(|d| Some(d) == self.period.last()) {
            let d = self.preperiod.pop().unwrap();
            self.period.rotate_right(1);
            debug_assert_eq!(self.period[0], d);
        }
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn preperiod(&self) -> &[u8] {
        &self.preperiod
    }

    pub fn period(&self) -> &[u8] {
        &self.period
    }

    pub fn digit(&self, i: usize) -> u8 {
        if i < self.preperiod.len() {
            self.preperiod[i]
        } else {
            self.period[(i - self.preperiod.len()) % self.period.len()]
        }
    }

    pub fn prefix(&self, n: usize) -> Vec<u8> {
        (0..n).map(|i| self.digit(i)).collect()
    }

    /// `σ^r`, the sequence with its first `r` digits removed.
    pub fn shift(&self, r: usize) -> Self {
        if r <= self.preperiod.len() {
            return EventuallyPeriodic { k: self.k, preperiod: self.preperiod[r..].to_vec(), period: self.period.clone() };
        }
        let mut period = self.period.clone();
        period.rotate_left((r - self.preperiod.len()) % self.period.len());
        EventuallyPeriodic { k: self.k, preperiod: Vec::new(), period }
    }

    /// True when the sequence ends in `0̄`.
    pub fn is_finite(&self) -> bool {
        self.period == [0]
    }

    /// Digits before the `0̄` tail, when there is one.
    pub fn finite_part(&self) -> Option<&[u8]> {
        self.is_finite().then_some(&self.preperiod[..])
    }

    /// Lexicographic order of the digit sequences.
    #[allow(clippy::should_implement_trait)]
    pub fn cmp(&self, other: &Self) -> Ordering {
        let depth = self.preperiod.len().max(other.preperiod.len()) + self.period.len().lcm(&other.period.len());
        (0..depth)
            .map(|i| self.digit(i).cmp(&other.digit(i)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }

    /// Concatenated digits with the period in parentheses, e.g. `2001(20012000)`.
    pub fn to_text(&self) -> String {
        format!("{}({})", digits_to_string(&self.preperiod), digits_to_string(&self.period))
    }
}

impl fmt::Display for EventuallyPeriodic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// True iff every shift of `w` is at most `w`.
pub fn is_maximal(w: &EventuallyPeriodic) -> bool {
    (1..w.preperiod.len() + w.period.len()).all(|r| w.shift(r).cmp(w) != Ordering::Greater)
}

/// A producer of digits for a [`DigitStream`]. `Ok(None)` means no further
/// digits can be certified.
pub trait DigitSource: Send + fmt::Debug {
    fn next_digit(&mut self) -> Result<Option<u8>>;
    fn clone_box(&self) -> Box<dyn DigitSource>;
}

/// Source that replays a fixed list of digits.
#[derive(Clone, Debug)]
pub struct PrefixSource {
    digits: Vec<u8>,
    pos: usize,
}

impl PrefixSource {
    pub fn new(digits: Vec<u8>) -> Self {
        PrefixSource { digits, pos: 0 }
    }
}

impl DigitSource for PrefixSource {
    fn next_digit(&mut self) -> Result<Option<u8>> {
        let d = self.digits.get(self.pos).copied();
        self.pos += 1;
        Ok(d)
    }

    fn clone_box(&self) -> Box<dyn DigitSource> {
        Box::new(self.clone())
    }
}

/// Source that repeats an eventually periodic pattern forever.
#[derive(Clone, Debug)]
pub struct PatternSource {
    pattern: EventuallyPeriodic,
    pos: usize,
}

impl PatternSource {
    pub fn new(pattern: EventuallyPeriodic) -> Self {
        PatternSource { pattern, pos: 0 }
    }
}

impl DigitSource for PatternSource {
    fn next_digit(&mut self) -> Result<Option<u8>> {
        let d = self.pattern.digit(self.pos);
        self.pos += 1;
        Ok(Some(d))
    }

    fn clone_box(&self) -> Box<dyn DigitSource> {
        Box::new(self.clone())
    }
}

/// Why a stream stopped producing digits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StopReason {
    Budget,
    SourceEnded,
    Failed(Error),
}

#[derive(Debug)]
struct StreamState {
    cache: Vec<u8>,
    source: Box<dyn DigitSource>,
    stop: Option<StopReason>,
}

/// A lazily generated sequence whose digits are certified only up to the
/// generated prefix, and never beyond `budget`.
#[derive(Debug)]
pub struct DigitStream {
    k: u8,
    budget: usize,
    state: Mutex<StreamState>,
}

impl Clone for DigitStream {
    fn clone(&self) -> Self {
        let s = self.state.lock().unwrap();
        DigitStream {
            k: self.k,
            budget: self.budget,
            state: Mutex::new(StreamState { cache: s.cache.clone(), source: s.source.clone_box(), stop: s.stop.clone() }),
        }
    }
}

impl DigitStream {
    pub fn new(k: u8, source: Box<dyn DigitSource>, budget: usize) -> Self {
        DigitStream { k, budget, state: Mutex::new(StreamState { cache: Vec::new(), source, stop: None }) }
    }

    /// A stream consisting of exactly the given certified digits.
    pub fn from_prefix(k: u8, digits: Vec<u8>, stop: StopReason) -> Self {
        let budget = digits.len();
        DigitStream {
            k,
            budget,
            state: Mutex::new(StreamState { cache: digits, source: Box::new(PrefixSource::new(Vec::new())), stop: Some(stop) }),
        }
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// Digit `i`, generating as needed; `None` once the stream has stopped.
    pub fn digit(&self, i: usize) -> Option<u8> {
        let mut s = self.state.lock().unwrap();
        while s.cache.len() <= i && s.stop.is_none() {
            if s.cache.len() >= self.budget {
                s.stop = Some(StopReason::Budget);
                break;
            }
            match s.source.next_digit() {
                Ok(Some(d)) if d < self.k => s.cache.push(d),
                Ok(Some(d)) => s.stop = Some(StopReason::Failed(Error::DigitOutOfRange { digit: d, k: self.k })),
                Ok(None) => s.stop = Some(StopReason::SourceEnded),
                Err(e) => s.stop = Some(StopReason::Failed(e)),
            }
        }
        s.cache.get(i).copied()
    }

    /// Number of digits generated so far.
    pub fn generated(&self) -> usize {
        self.state.lock().unwrap().cache.len()
    }

    /// Generates as far as possible and returns the certified prefix length.
    pub fn certify_all(&self) -> usize {
        self.digit(self.budget);
        self.generated()
    }

    pub fn prefix(&self, n: usize) -> Vec<u8> {
        if n > 0 {
            self.digit(n - 1);
        }
        let s = self.state.lock().unwrap();
        s.cache[..n.min(s.cache.len())].to_vec()
    }

    pub fn stop_reason(&self) -> Option<StopReason> {
        self.state.lock().unwrap().stop.clone()
    }
}

/// An infinite digit sequence: exact, or a budget-limited stream.
#[derive(Clone, Debug)]
pub enum DigitSeq {
    Periodic(EventuallyPeriodic),
    Stream(DigitStream),
}

impl DigitSeq {
    pub fn k(&self) -> u8 {
        match self {
            DigitSeq::Periodic(p) => p.k(),
            DigitSeq::Stream(s) => s.k(),
        }
    }

    pub fn digit(&self, i: usize) -> Option<u8> {
        match self {
            DigitSeq::Periodic(p) => Some(p.digit(i)),
            DigitSeq::Stream(s) => s.digit(i),
        }
    }

    /// Up to `n` leading digits; shorter only if a stream stops first.
    pub fn prefix(&self, n: usize) -> Vec<u8> {
        match self {
            DigitSeq::Periodic(p) => p.prefix(n),
            DigitSeq::Stream(s) => s.prefix(n),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, DigitSeq::Periodic(_))
    }

    pub fn as_periodic(&self) -> Option<&EventuallyPeriodic> {
        match self {
            DigitSeq::Periodic(p) => Some(p),
            DigitSeq::Stream(_) => None,
        }
    }

    /// Generated prefix length of a stream (after generating everything the
    /// budget allows); `None` for exact sequences.
    pub fn certified_len(&self) -> Option<usize> {
        match self {
            DigitSeq::Periodic(_) => None,
            DigitSeq::Stream(s) => Some(s.certify_all()),
        }
    }

    /// Parses `P(Q)` as an exact sequence, or a text ending in `…` (or `...`)
    /// as a stream. `P(Q)…` repeats the pattern up to `budget` digits; plain
    /// digits followed by `…` give exactly those digits.
    pub fn parse(text: &str, k: u8, budget: usize) -> Result<Self> {
        let t = text.trim();
        let (body, truncated) = match t.strip_suffix('…').or_else(|| t.strip_suffix("...")) {
            Some(b) => (b.trim_end(), true),
            None => (t, false),
        };
        let pattern = match body.find('(') {
            Some(open) => {
                let close = body.rfind(')').filter(|&c| c == body.len() - 1 && c > open);
                let close = close.ok_or_else(|| Error::Parse(format!("unbalanced period in {text:?}")))?;
                let pre = parse_digits(&body[..open])?;
                let per = parse_digits(&body[open + 1..close])?;
                Some(EventuallyPeriodic::new(pre, per, k)?)
            }
            None => None,
        };
        match (pattern, truncated) {
            (Some(p), false) => Ok(DigitSeq::Periodic(p)),
            (Some(p), true) => Ok(DigitSeq::Stream(DigitStream::new(k, Box::new(PatternSource::new(p)), budget))),
            (None, true) => {
                let digits = parse_digits(body)?;
                check_digits(&digits, k)?;
                Ok(DigitSeq::Stream(DigitStream::from_prefix(k, digits, StopReason::Budget)))
            }
            (None, false) => Err(Error::Parse(format!("sequence {text:?} needs a period \"( )\" or a trailing \"…\""))),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            DigitSeq::Periodic(p) => p.to_text(),
            DigitSeq::Stream(s) => {
                let n = s.certify_all();
                format!("{}…", digits_to_string(&s.prefix(n)))
            }
        }
    }
}

impl From<EventuallyPeriodic> for DigitSeq {
    fn from(p: EventuallyPeriodic) -> Self {
        DigitSeq::Periodic(p)
    }
}

impl fmt::Display for DigitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Lexicographic comparison. Exact sequences always decide; a stream that
/// stops before any disagreement gives `Undecided` at the depth examined.
pub fn compare_seqs(v: &DigitSeq, w: &DigitSeq) -> Comparison {
    if let (DigitSeq::Periodic(a), DigitSeq::Periodic(b)) = (v, w) {
        return a.cmp(b).into();
    }
    let mut i = 0;
    loop {
        match (v.digit(i), w.digit(i)) {
            (Some(a), Some(b)) if a != b => return a.cmp(&b).into(),
            (Some(_), Some(_)) => i += 1,
            _ => return Comparison::Undecided { depth: i },
        }
    }
}
