use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::seq::DigitSeq;
use super::word::Word;
use crate::error::{Error, Result};
use crate::exact_arith::rational::{format_rational, parse_rational, serde_rat_vec};

/// A point of the standard simplex: `k` nonnegative rationals summing to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FreqRepr", into = "FreqRepr")]
pub struct FreqVector {
    comps: Vec<BigRational>,
}

#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct FreqRepr(#[serde(with = "serde_rat_vec")] Vec<BigRational>);

impl TryFrom<FreqRepr> for FreqVector {
    type Error = Error;
    fn try_from(r: FreqRepr) -> Result<Self> {
        FreqVector::new(r.0)
    }
}

impl From<FreqVector> for FreqRepr {
    fn from(f: FreqVector) -> Self {
        FreqRepr(f.comps)
    }
}

impl FreqVector {
    pub fn new(comps: Vec<BigRational>) -> Result<Self> {
        if comps.len() < 2 {
            return Err(Error::BadFrequency(format!("need at least 2 components, got {}", comps.len())));
        }
        if comps.iter().any(Signed::is_negative) {
            return Err(Error::BadFrequency("negative component".into()));
        }
        let sum: BigRational = comps.iter().sum();
        if !sum.is_one() {
            return Err(Error::BadFrequency(format!("components sum to {}", format_rational(&sum))));
        }
        Ok(FreqVector { comps })
    }

    /// Rescales a nonzero nonnegative vector onto the simplex.
    pub fn normalized(comps: Vec<BigRational>) -> Result<Self> {
        let sum: BigRational = comps.iter().sum();
        if sum.is_zero() {
            return Err(Error::BadFrequency("zero vector".into()));
        }
        FreqVector::new(comps.into_iter().map(|c| c / &sum).collect())
    }

    pub fn from_counts(counts: &[u64]) -> Result<Self> {
        Self::normalized(counts.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
    }

    /// The vertex `e_i` of the simplex in dimension `k`.
    pub fn unit(k: usize, i: usize) -> Self {
        let mut comps = vec![BigRational::zero(); k];
        comps[i] = BigRational::one();
        FreqVector { comps }
    }

    /// Parses comma-separated rationals, e.g. `7/16,5/16,4/16`.
    pub fn parse(text: &str) -> Result<Self> {
        let comps = text.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
        FreqVector::new(comps)
    }

    pub fn k(&self) -> usize {
        self.comps.len()
    }

    pub fn comps(&self) -> &[BigRational] {
        &self.comps
    }

    pub fn get(&self, i: usize) -> &BigRational {
        &self.comps[i]
    }

    pub fn last(&self) -> &BigRational {
        self.comps.last().unwrap()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.comps.iter().map(crate::exact_arith::rational::to_f64).collect()
    }
}

impl fmt::Display for FreqVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.comps.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Exact digit frequencies of a nonempty word.
pub fn digit_freq(w: &Word) -> Result<FreqVector> {
    digit_freq_digits(w.digits(), w.k())
}

pub fn digit_freq_digits(digits: &[u8], k: u8) -> Result<FreqVector> {
    if digits.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut counts = vec![0u64; k as usize];
    for &d in digits {
        counts[d as usize] += 1;
    }
    FreqVector::from_counts(&counts)
}

/// Digit frequencies of the prefixes of `w` of each given length.
pub fn prefix_freq_trajectory(w: &DigitSeq, strides: &[usize]) -> Result<Vec<FreqVector>> {
    let longest = strides.iter().copied().max().unwrap_or(0);
    let prefix = w.prefix(longest);
    strides
        .iter()
        .map(|&s| {
            if s > prefix.len() {
                Err(Error::InsufficientDigits { needed: s, available: prefix.len() })
            } else {
                digit_freq_digits(&prefix[..s], w.k())
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::rat;

    fn fv(a: &[(i64, i64)]) -> FreqVector {
        FreqVector::new(a.iter().map(|&(p, q)| rat(p, q)).collect()).unwrap()
    }

    #[test]
    fn word_frequencies() {
        let w = Word::parse("2011111200200200", 3).unwrap();
        assert_eq!(digit_freq(&w).unwrap(), fv(&[(7, 16), (5, 16), (4, 16)]));
        assert_eq!(digit_freq(&Word::parse("0", 4).unwrap()).unwrap(), FreqVector::unit(4, 0));
        assert_eq!(digit_freq(&Word::parse("2120", 3).unwrap()).unwrap(), fv(&[(1, 4), (1, 4), (1, 2)]));
        assert_eq!(digit_freq(&Word::parse("", 3).unwrap()), Err(Error::EmptyWord));
    }

    #[test]
    fn trajectories() {
        let w = DigitSeq::parse("(10)", 2, 10).unwrap();
        let t = prefix_freq_trajectory(&w, &[2, 4, 6]).unwrap();
        assert!(t.iter().all(|f| *f == fv(&[(1, 2), (1, 2)])));
        let s = DigitSeq::parse("2001200120000…", 3, 100).unwrap();
        assert_eq!(prefix_freq_trajectory(&s, &[4]).unwrap()[0], fv(&[(2, 4), (1, 4), (1, 4)]));
        assert!(matches!(prefix_freq_trajectory(&s, &[14]), Err(Error::InsufficientDigits { .. })));
    }

    #[test]
    fn validation_and_json() {
        assert!(FreqVector::parse("1/2,1/3").is_err());
        assert!(FreqVector::parse("-1/2,3/2").is_err());
        let f = FreqVector::parse("7/16,5/16,4/16").unwrap();
        let j = serde_json::to_string(&f).unwrap();
        assert_eq!(j, r#"["7/16","5/16","1/4"]"#);
        assert_eq!(serde_json::from_str::<FreqVector>(&j).unwrap(), f);
    }
}
