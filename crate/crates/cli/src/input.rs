//! Parsing of command-line values into library types.

use betadf::cfk::Itinerary;
use betadf::exact_arith::{isolate_root, parse_coefficients, parse_rational, AlgebraicNumber};
use betadf::symbolic::FreqVector;
use betadf::{Error, Result};
use clap::Args;

/// A base given as an exact rational or as a root of an integer polynomial.
#[derive(Args, Clone, Debug, Default)]
pub struct BetaArgs {
    /// Exact base: a decimal such as 2.1901 or a fraction p/q.
    #[arg(long, conflicts_with = "beta_poly")]
    pub beta: Option<String>,
    /// Integer coefficients, lowest degree first; a trailing `r` means highest first.
    #[arg(long, requires = "interval", allow_hyphen_values = true)]
    pub beta_poly: Option<String>,
    /// Isolating interval `lo,hi` for --beta-poly.
    #[arg(long)]
    pub interval: Option<String>,
}

impl BetaArgs {
    pub fn resolve(&self) -> Result<AlgebraicNumber> {
        match (&self.beta, &self.beta_poly, &self.interval) {
            (Some(b), _, _) => parse_beta(b),
            (None, Some(p), Some(i)) => {
                let (lo, hi) = i.split_once(',').ok_or_else(|| Error::Parse(format!("interval {i:?} must be lo,hi")))?;
                isolate_root(&parse_coefficients(p)?, &parse_rational(lo)?, &parse_rational(hi)?)
            }
            _ => Err(Error::Parse("give --beta, or --beta-poly with --interval".into())),
        }
    }
}

/// `2.1901`, `21901/10000`, or `poly@lo,hi` (the batch-file form).
pub fn parse_beta(text: &str) -> Result<AlgebraicNumber> {
    let t = text.trim();
    if let Some((poly, interval)) = t.split_once('@') {
        return BetaArgs { beta: None, beta_poly: Some(poly.into()), interval: Some(interval.into()) }.resolve();
    }
    if t.contains(['e', 'E']) {
        return Err(Error::Parse(format!("{t:?}: exponent notation is not accepted; write the base exactly")));
    }
    Ok(AlgebraicNumber::from_rational(parse_rational(t)?))
}

/// `7/16,5/16,4/16`.
pub fn parse_alpha(text: &str) -> Result<FreqVector> {
    FreqVector::parse(text)
}

pub fn parse_itinerary(text: &str) -> Result<Itinerary> {
    Itinerary::parse(text)
}

/// `2,1,0,0`, `[2,1,0,0]` or `2 1 0 0`.
pub fn parse_list<T: std::str::FromStr>(text: &str) -> Result<Vec<T>> {
    text.trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split([',', ' '])
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<T>().map_err(|_| Error::Parse(format!("bad list entry {t:?}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beta_forms() {
        assert_eq!(parse_beta("2.1901").unwrap().to_decimal(4), "2.1901");
        assert_eq!(parse_beta("5/2").unwrap().to_decimal(1), "2.5");
        assert_eq!(parse_beta("1,-2,-1,-2,-1r@2,3").unwrap().to_decimal(3), "2.697");
        assert!(parse_beta("2.19e0").is_err());
        assert_eq!(parse_list::<u64>("[2, 1,0 ,0]").unwrap(), [2, 1, 0, 0]);
    }
}
