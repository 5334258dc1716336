use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Highest alphabet size that has a single-character text form.
pub const MAX_TEXT_ALPHABET: u8 = 36;

/// A finite word over the alphabet `{0, …, k-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    digits: Vec<u8>,
    k: u8,
}

impl Word {
    pub fn new(digits: Vec<u8>, k: u8) -> Result<Self> {
        check_alphabet(k)?;
        check_digits(&digits, k)?;
        Ok(Word { digits, k })
    }

    pub fn parse(text: &str, k: u8) -> Result<Self> {
        Word::new(parse_digits(text)?, k)
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn into_digits(self) -> Vec<u8> {
        self.digits
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&digits_to_string(&self.digits))
    }
}

/// Lexicographic order in which a proper initial subword is the greater word.
pub fn compare_words(v: &Word, w: &Word) -> Result<Ordering> {
    if v.k != w.k {
        return Err(Error::AlphabetMismatch(v.k, w.k));
    }
    Ok(compare_digit_words(&v.digits, &w.digits))
}

pub fn compare_digit_words(v: &[u8], w: &[u8]) -> Ordering {
    for (a, b) in v.iter().zip(w) {
        if a != b {
            return a.cmp(b);
        }
    }
    w.len().cmp(&v.len())
}

pub(crate) fn check_alphabet(k: u8) -> Result<()> {
    if k < 2 {
        Err(Error::BadAlphabet(k))
    } else {
        Ok(())
    }
}

pub(crate) fn check_digits(digits: &[u8], k: u8) -> Result<()> {
    match digits.iter().find(|&&d| d >= k) {
        Some(&digit) => Err(Error::DigitOutOfRange { digit, k }),
        None => Ok(()),
    }
}

pub(crate) fn digit_char(d: u8) -> char {
    std::char::from_digit(d as u32, MAX_TEXT_ALPHABET as u32).unwrap_or('?')
}

pub fn digits_to_string(digits: &[u8]) -> String {
    digits.iter().map(|&d| digit_char(d)).collect()
}

/// Digits `0-9` then `a-z`; whitespace is ignored.
pub fn parse_digits(text: &str) -> Result<Vec<u8>> {
    text.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| {
            c.to_digit(MAX_TEXT_ALPHABET as u32)
                .map(|d| d as u8)
                .ok_or_else(|| Error::Parse(format!("bad digit {c:?}")))
        })
        .collect()
}
