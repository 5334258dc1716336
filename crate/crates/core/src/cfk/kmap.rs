//! The continued-fraction map K on the simplex, its branch inverses, and the
//! itinerary map.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::itinerary::Itinerary;
use super::matrix::AbelianMatrix;
use crate::error::{Error, Result};
use crate::symbolic::FreqVector;

fn natural(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `J(α) = ⌊α₀ / α_{k-1}⌋`.
pub fn j_index(alpha: &FreqVector) -> Result<u64> {
    let last = alpha.last();
    if last.is_zero() {
        return Err(Error::OnFace);
    }
    (alpha.get(0) / last).floor().to_integer().to_u64().ok_or_else(|| Error::BadFrequency("itinerary entry exceeds 64 bits".into()))
}

/// `K(α) = K_{J(α)}(α)`.
pub fn k_map(alpha: &FreqVector) -> Result<FreqVector> {
    let n = j_index(alpha)?;
    let c = alpha.comps();
    let k = c.len();
    let nn = natural(n);
    let mut out: Vec<BigRational> = c[1..k - 1].to_vec();
    out.push(&c[0] - &nn * &c[k - 1]);
    out.push((nn + BigRational::one()) * &c[k - 1] - &c[0]);
    let scale = BigRational::one() - &c[0];
    FreqVector::new(out.into_iter().map(|x| x / &scale).collect())
}

/// `K_n⁻¹(α)`.
pub fn k_inv(n: u64, alpha: &FreqVector) -> FreqVector {
    let c = alpha.comps();
    let k = c.len();
    let nn = natural(n);
    let first = (&nn + BigRational::one()) * &c[k - 2] + &nn * &c[k - 1];
    let d = &first + BigRational::one();
    let mut out = Vec::with_capacity(k);
    out.push(first);
    out.extend(c[..k - 2].iter().cloned());
    out.push(&c[k - 2] + &c[k - 1]);
    FreqVector::new(out.into_iter().map(|x| x / &d).collect()).expect("K_n inverse maps the simplex into itself")
}

/// The itinerary `Φ(α)` of a rational frequency vector: rational type, or
/// `∞` on the face `α_{k-1} = 0`.
pub fn itinerary_of(alpha: &FreqVector) -> Itinerary {
    if alpha.last().is_zero() {
        return Itinerary::finite(Vec::new());
    }
    // Work on the primitive integer vector proportional to α; K acts on it
    // projectively, and each step with a nonzero first coordinate lowers
    // the total mass, while a zero first coordinate only shifts entries.
    let l = alpha.comps().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut v: Vec<BigInt> = alpha.comps().iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect();
    let k = v.len();
    let mut entries = Vec::new();
    while v[..k - 1].iter().any(|x| !x.is_zero()) {
        let (n, _) = v[0].div_rem(&v[k - 1]);
        let next_last = (&n + 1) * &v[k - 1] - &v[0];
        let next_prev = &v[0] - &n * &v[k - 1];
        v.remove(0);
        let last = v.len() - 1;
        v[last] = next_prev;
        v.push(next_last);
        let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        for x in v.iter_mut() {
            *x /= &g;
        }
        entries.push(n.to_u64().expect("itinerary entry fits in 64 bits"));
    }
    Itinerary::rational(entries)
}

/// `Υ_{n,r}(α) = K_{n₀}⁻¹ ∘ … ∘ K_{n_r}⁻¹(α)` for `prefix = n₀ … n_r`.
pub fn upsilon(prefix: &[u64], alpha: &FreqVector) -> FreqVector {
    prefix.iter().rev().fold(alpha.clone(), |a, &n| k_inv(n, &a))
}

/// Vertices of `Υ_{n,r}(Δ)` and of its face `Υ_{n,r}(𝓕)`, with the block
/// lengths `|Λ_{n,r}(i)|`.
#[derive(Clone, Debug)]
pub struct SimplexImages {
    pub a_vertices: Vec<FreqVector>,
    pub f_vertices: Vec<FreqVector>,
    pub lengths: Vec<BigInt>,
}

/// Images of the simplex under `Υ` over `prefix[..=r]`.
pub fn simplex_images(prefix: &[u64], r: usize, k: usize) -> Result<SimplexImages> {
    if r >= prefix.len() {
        return Err(Error::InsufficientDepth { needed: r + 1, available: prefix.len() });
    }
    let p = &prefix[..=r];
    let a_vertices: Vec<FreqVector> = (0..k).map(|i| upsilon(p, &FreqVector::unit(k, i))).collect();
    let f_vertices = a_vertices[..k - 1].to_vec();
    let lengths = AbelianMatrix::chain(p, k as u8).column_sums();
    Ok(SimplexImages { a_vertices, f_vertices, lengths })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fv(s: &str) -> FreqVector {
        FreqVector::parse(s).unwrap()
    }

    #[test]
    fn j_and_k() {
        assert_eq!(j_index(&fv("7/16,5/16,4/16")).unwrap(), 1);
        assert_eq!(j_index(&fv("0,0,1")).unwrap(), 0);
        assert_eq!(j_index(&fv("3/4,0,1/4")).unwrap(), 3);
        assert_eq!(j_index(&fv("1,0,0")), Err(Error::OnFace));
        assert_eq!(k_map(&fv("7/16,5/16,4/16")).unwrap(), fv("5/9,3/9,1/9"));
        assert_eq!(k_map(&fv("5/9,3/9,1/9")).unwrap(), fv("3/4,0,1/4"));
        assert_eq!(k_map(&fv("0,0,1")).unwrap(), fv("0,0,1"));
    }

    #[test]
    fn inverses() {
        assert_eq!(k_inv(2, &fv("0,1,0")), fv("3/4,0,1/4"));
        assert_eq!(k_inv(0, &fv("0,0,0,1")), fv("0,0,0,1"));
        let a = k_inv(2, &k_inv(1, &k_inv(0, &fv("0,1,0"))));
        assert_eq!(a, fv("5/8,1/8,2/8"));
        assert_eq!(k_map(&k_inv(5, &fv("1/3,1/3,1/3"))).unwrap(), fv("1/3,1/3,1/3"));
        // k = 2
        assert_eq!(k_map(&k_inv(3, &fv("2/5,3/5"))).unwrap(), fv("2/5,3/5"));
    }

    #[test]
    fn itineraries() {
        assert_eq!(itinerary_of(&fv("7/16,5/16,4/16")), Itinerary::rational(vec![1, 5, 3]));
        assert_eq!(itinerary_of(&fv("0,0,0,1")), Itinerary::rational(vec![]));
        assert_eq!(itinerary_of(&fv("1,0,0")), Itinerary::finite(vec![]));
        assert_eq!(itinerary_of(&fv("4/9,3/9,2/9")), Itinerary::rational(vec![2, 1, 0, 1]));
        assert_eq!(itinerary_of(&fv("3/4,0,1/4")), Itinerary::rational(vec![3]));
    }

    #[test]
    fn upsilon_and_images() {
        assert_eq!(upsilon(&[2, 1, 0, 1], &fv("0,0,1")), fv("4/9,3/9,2/9"));
        assert_eq!(upsilon(&[], &fv("1/2,1/2")), fv("1/2,1/2"));
        assert_eq!(upsilon(&[2], &fv("0,0,1,0")), fv("3/4,0,0,1/4"));
        let s = simplex_images(&[2, 1, 0, 1], 3, 3).unwrap();
        assert_eq!(s.a_vertices[2], fv("4/9,3/9,2/9"));
        assert_eq!(s.f_vertices.len(), 2);
        let s = simplex_images(&[7], 0, 3).unwrap();
        for i in 0..3 {
            assert_eq!(s.a_vertices[i], k_inv(7, &FreqVector::unit(3, i)));
        }
        let s = simplex_images(&[1], 0, 3).unwrap();
        assert_eq!(s.lengths, vec![BigInt::from(1), BigInt::from(3), BigInt::from(2)]);
        assert!(simplex_images(&[1], 1, 3).is_err());
    }
}
