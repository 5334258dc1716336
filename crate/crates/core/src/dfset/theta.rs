//! The angle `θ_r` of the triangle `A_{n,r}` at its vertex `Υ_{n,r}(e₂)`
//! (`k = 3`).

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::cfk::upsilon;
use crate::error::{Error, Result};
use crate::exact_arith::rational::serde_rat;
use crate::symbolic::FreqVector;

/// Exact data for one angle. Larger `signed_cos_sq` means a smaller angle.
#[derive(Clone, Debug, Serialize)]
pub struct ThetaCertificate {
    pub r: usize,
    /// `u·v` for the edges `u, v` leaving the apex.
    #[serde(with = "serde_rat")]
    pub dot: BigRational,
    /// `sign(u·v) (u·v)² / (|u|² |v|²)`, i.e. `sign(cos θ) cos² θ`.
    #[serde(with = "serde_rat")]
    pub signed_cos_sq: BigRational,
    /// `θ_r` in radians, for reports only.
    pub approx: f64,
}

impl ThetaCertificate {
    /// Orders the angles themselves.
    pub fn cmp_angle(&self, other: &ThetaCertificate) -> Ordering {
        other.signed_cos_sq.cmp(&self.signed_cos_sq)
    }

    pub fn is_obtuse(&self) -> bool {
        self.dot.is_negative()
    }
}

fn diff(a: &FreqVector, b: &FreqVector) -> Vec<BigRational> {
    a.comps().iter().zip(b.comps()).map(|(x, y)| x - y).collect()
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Certificate for `θ_r`, using entries `n₀ … n_r`.
pub fn theta(prefix: &[u64], r: usize) -> Result<ThetaCertificate> {
    if prefix.len() <= r {
        return Err(Error::InsufficientDepth { needed: r + 1, available: prefix.len() });
    }
    let p = &prefix[..=r];
    let v: Vec<FreqVector> = (0..3).map(|i| upsilon(p, &FreqVector::unit(3, i))).collect();
    let a = diff(&v[0], &v[2]);
    let b = diff(&v[1], &v[2]);
    let (aa, bb, ab) = (dot(&a, &a), dot(&b, &b), dot(&a, &b));
    if aa.is_zero() || bb.is_zero() || &ab * &ab == &aa * &bb {
        return Err(Error::DegenerateTriangle(r));
    }
    let cos_sq = &ab * &ab / (&aa * &bb);
    let signed_cos_sq = if ab.is_negative() { -cos_sq.clone() } else { cos_sq.clone() };
    let cos = cos_sq.to_f64().unwrap_or(0.0).sqrt().copysign(ab.to_f64().unwrap_or(0.0));
    Ok(ThetaCertificate { r, dot: ab, signed_cos_sq, approx: cos.clamp(-1.0, 1.0).acos() })
}

/// `θ_0, …, θ_{r_max}`.
pub fn theta_sequence(prefix: &[u64], r_max: usize) -> Result<Vec<ThetaCertificate>> {
    (0..=r_max).map(|r| theta(prefix, r)).collect()
}
