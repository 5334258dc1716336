use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no root in interval")]
    NoRoot,
    #[error("multiple roots in interval ({0} distinct roots)")]
    MultipleRoots(usize),
    #[error("empty or inverted interval")]
    BadInterval,
    #[error("precision exhausted after {0} bits")]
    PrecisionExhausted(u64),
    #[error("kneading sequence 0̄ has no valid base")]
    ZeroKneading,
    #[error("digit {digit} out of range for alphabet size {k}")]
    DigitOutOfRange { digit: u8, k: u8 },
    #[error("alphabet size must be at least 2 (got {0})")]
    BadAlphabet(u8),
    #[error("alphabet mismatch: {0} vs {1}")]
    AlphabetMismatch(u8, u8),
    #[error("empty word")]
    EmptyWord,
    #[error("period must be nonempty")]
    EmptyPeriod,
    #[error("base must lie strictly between two consecutive integers >= 1")]
    IntegerBase,
    #[error("point must lie in [0, 1]")]
    PointOutOfRange,
    #[error("insufficient digits: needed {needed}, available {available}")]
    InsufficientDigits { needed: usize, available: usize },
    #[error("frequency vector lies on the face alpha_(k-1) = 0")]
    OnFace,
    #[error("invalid frequency vector: {0}")]
    BadFrequency(String),
    #[error("itinerary is truncated; exact input required")]
    TruncatedItinerary,
    #[error("expected a rational or finite type itinerary")]
    NotRationalOrFinite,
    #[error("insufficient certified depth: need {needed} entries, have {available}")]
    InsufficientDepth { needed: usize, available: usize },
    #[error("sequence does not start with the top digit k-1")]
    NotMaximalForm,
    #[error("degenerate triangle at depth {0}")]
    DegenerateTriangle(usize),
    #[error("not Markov at requested base: {0}")]
    NotMarkov(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("operation requires k = {expected} (got {got})")]
    WrongDimension { expected: usize, got: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
