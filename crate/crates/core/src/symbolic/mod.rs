//! Digit words and sequences, greedy β-expansions, digit frequencies.

pub mod freq;
pub mod greedy;
pub mod seq;
pub mod word;

pub use freq::{digit_freq, digit_freq_digits, prefix_freq_trajectory, FreqVector};
pub use greedy::{alphabet_size, finite_kneading, greedy_digits, w_beta};
pub use seq::{compare_seqs, is_maximal, DigitSeq, DigitSource, DigitStream, EventuallyPeriodic, PatternSource, StopReason};
pub use word::{compare_words, Word};
