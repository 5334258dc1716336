//! Digit frequency polytopes of itineraries and their sandwiches.

use std::fmt;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::geometry::{extreme_points, hausdorff_sq, in_hull, in_planar_polygon, planar_hull};
use crate::cfk::{compare_itineraries, itinerary_of, upsilon, Itinerary};
use crate::error::{Error, Result};
use crate::order::Comparison;
use crate::symbolic::FreqVector;

/// Where a vertex comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexTag {
    /// A unit vector `e_i`, `i ≤ k-2`.
    Trivial,
    /// `Υ_{n,s}(e_{k-2})` at depth `s`.
    Fe(usize),
    /// The point with the given rational itinerary.
    PhiInverse,
    /// A hull vertex with no further structure (e.g. a loop frequency).
    Hull,
}

impl fmt::Display for VertexTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexTag::Trivial => f.write_str("trivial"),
            VertexTag::Fe(s) => write!(f, "fe:{s}"),
            VertexTag::PhiInverse => f.write_str("phi-inverse"),
            VertexTag::Hull => f.write_str("hull"),
        }
    }
}

impl std::str::FromStr for VertexTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trivial" => Ok(VertexTag::Trivial),
            "phi-inverse" => Ok(VertexTag::PhiInverse),
            "hull" => Ok(VertexTag::Hull),
            _ => s
                .strip_prefix("fe:")
                .and_then(|d| d.parse().ok())
                .map(VertexTag::Fe)
                .ok_or_else(|| Error::Parse(format!("unknown vertex tag {s:?}"))),
        }
    }
}

impl Serialize for VertexTag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VertexTag {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub coords: FreqVector,
    pub tag: VertexTag,
}

/// The convex hull of finitely many rational points of the simplex, stored
/// by its extreme points. For `k = 3` the vertices run counterclockwise in
/// the `(α₀, α₂)` plane from the vertex of largest `α₀`; otherwise they
/// are sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Polytope {
    k: usize,
    vertices: Vec<Vertex>,
    exact: bool,
}

#[derive(Deserialize)]
struct PolytopeRepr {
    k: usize,
    vertices: Vec<Vertex>,
    exact: bool,
}

impl<'de> Deserialize<'de> for Polytope {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PolytopeRepr::deserialize(d)?;
        if r.vertices.iter().any(|v| v.coords.k() != r.k) {
            return Err(serde::de::Error::custom("vertex dimension does not match k"));
        }
        let mut p = Polytope::hull(r.k, r.vertices).map_err(serde::de::Error::custom)?;
        p.exact = r.exact;
        Ok(p)
    }
}

impl Polytope {
    /// Hull of tagged points; non-extreme points are discarded. When a
    /// point appears more than once the first tag wins.
    pub fn hull(k: usize, points: Vec<Vertex>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::BadFrequency("empty point set".into()));
        }
        if let Some(v) = points.iter().find(|v| v.coords.k() != k) {
            return Err(Error::WrongDimension { expected: k, got: v.coords.k() });
        }
        let mut unique: Vec<Vertex> = Vec::new();
        for p in points {
            if !unique.iter().any(|u| u.coords == p.coords) {
                unique.push(p);
            }
        }
        let coords: Vec<FreqVector> = unique.iter().map(|v| v.coords.clone()).collect();
        let keep = if k == 3 { planar_hull(&coords) } else { extreme_points(&coords) };
        let vertices = keep.into_iter().map(|i| unique[i].clone()).collect();
        Ok(Polytope { k, vertices, exact: true })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn points(&self) -> Vec<FreqVector> {
        self.vertices.iter().map(|v| v.coords.clone()).collect()
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn set_exact(&mut self, exact: bool) {
        self.exact = exact;
    }

    pub fn contains(&self, alpha: &FreqVector) -> bool {
        if alpha.k() != self.k {
            return false;
        }
        if self.k == 3 {
            in_planar_polygon(alpha, &self.points())
        } else {
            in_hull(alpha, &self.points())
        }
    }

    /// Same vertex set, ignoring order and tags.
    pub fn same_vertices(&self, other: &Polytope) -> bool {
        let mut a = self.points();
        let mut b = other.points();
        a.sort();
        b.sort();
        a == b
    }

    /// Hausdorff distance, as a float; the squared distance is exact.
    pub fn hausdorff(&self, other: &Polytope) -> f64 {
        hausdorff_sq(&self.points(), &other.points()).to_f64().unwrap_or(f64::INFINITY).sqrt()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("polytopes serialize")
    }
}

/// `Υ_{n,s}(e_{k-2})` for each `s` followed within `k-2` places by a nonzero entry.
pub(crate) fn fe_points(entries: &[u64], k: usize) -> Vec<Vertex> {
    let lookahead = k.saturating_sub(2);
    (0..entries.len())
        .filter(|&s| (1..=lookahead).any(|t| entries.get(s + t).is_some_and(|&x| x != 0)))
        .map(|s| Vertex { coords: upsilon(&entries[..=s], &FreqVector::unit(k, k - 2)), tag: VertexTag::Fe(s) })
        .collect()
}

fn trivial_points(k: usize) -> Vec<Vertex> {
    (0..k - 1).map(|i| Vertex { coords: FreqVector::unit(k, i), tag: VertexTag::Trivial }).collect()
}

/// The entries of the rational itinerary with the same digit frequency set
/// as `n`, or `None` for `∞`.
fn rational_partner(n: &Itinerary) -> Result<Option<Vec<u64>>> {
    match n {
        Itinerary::Rational { entries } => Ok(Some(entries.clone())),
        Itinerary::Finite { entries } => match entries.split_last() {
            None => Ok(None),
            Some((last, init)) => {
                let mut e = init.to_vec();
                e.push(last + 1);
                Ok(Some(e))
            }
        },
        _ => Err(Error::NotRationalOrFinite),
    }
}

/// The digit frequency set of a rational- or finite-type itinerary.
pub fn df_polytope(n: &Itinerary, k: usize) -> Result<Polytope> {
    if k < 2 {
        return Err(Error::BadAlphabet(k as u8));
    }
    let mut points = trivial_points(k);
    match rational_partner(n)? {
        // DF(∞) is the face α_{k-1} = 0.
        None => {}
        Some(entries) => {
            points.extend(fe_points(&entries, k));
            points.push(Vertex { coords: upsilon(&entries, &FreqVector::unit(k, k - 1)), tag: VertexTag::PhiInverse });
        }
    }
    Polytope::hull(k, points)
}

/// Inner and outer polytopes bracketing `DF(n)` at depth `r`.
#[derive(Clone, Debug, Serialize)]
pub struct DfSandwich {
    pub inner: Polytope,
    pub outer: Polytope,
    pub depth: usize,
    pub gap: f64,
}

/// Brackets `DF(n)` between `DF(n₀ … n_{r-1} (n_r+1) 0̄)` and
/// `DF(n₀ … n_r 0̄)`.
pub fn df_sandwich(n: &Itinerary, r: usize, k: usize) -> Result<DfSandwich> {
    if let Itinerary::Finite { entries } = n {
        if entries.len() <= r {
            let p = df_polytope(n, k)?;
            return Ok(DfSandwich { inner: p.clone(), outer: p, depth: r, gap: 0.0 });
        }
    }
    let prefix = n.prefix(r + 1);
    if prefix.len() <= r {
        return Err(Error::InsufficientDepth { needed: r + 1, available: prefix.len() });
    }
    // Bounds on DF(n), not DF(n) itself.
    let mut outer = df_polytope(&Itinerary::rational(prefix.clone()), k)?;
    outer.exact = false;
    let mut lower = prefix;
    lower[r] += 1;
    let mut inner = df_polytope(&Itinerary::rational(lower), k)?;
    inner.exact = false;
    let gap = inner.hausdorff(&outer);
    Ok(DfSandwich { inner, outer, depth: r, gap })
}

/// Outcome of a membership query.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Membership {
    Inside,
    Outside,
    Undecided { depth: usize },
}

/// Whether `α ∈ DF(n)`, i.e. `Φ(α) ≤ n`.
pub fn membership(alpha: &FreqVector, n: &Itinerary) -> Membership {
    match compare_itineraries(&itinerary_of(alpha), n) {
        Comparison::Less | Comparison::Equal => Membership::Inside,
        Comparison::Greater => Membership::Outside,
        Comparison::Undecided { depth } => Membership::Undecided { depth },
    }
}

/// Orders two frequency vectors by their itineraries. `Less` means every
/// digit frequency set containing `β` also contains `α`.
pub fn forcing_compare(alpha: &FreqVector, beta: &FreqVector) -> Comparison {
    compare_itineraries(&itinerary_of(alpha), &itinerary_of(beta))
}

/// The extremality certificate: the squared distance from each vertex to
/// the hull of the others, all of which must be positive.
pub fn extremality_gaps(p: &Polytope) -> Vec<BigRational> {
    let pts = p.points();
    (0..pts.len())
        .map(|i| {
            let others: Vec<Vec<BigRational>> =
                pts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v.comps().to_vec()).collect();
            if others.is_empty() {
                return BigRational::from_integer(1.into());
            }
            super::geometry::distance_sq_to_hull(pts[i].comps(), &others)
        })
        .collect()
}

pub fn is_certified_extreme(p: &Polytope) -> bool {
    extremality_gaps(p).iter().all(|g| !g.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fv(s: &str) -> FreqVector {
        FreqVector::parse(s).unwrap()
    }

    fn it(s: &str) -> Itinerary {
        Itinerary::parse(s).unwrap()
    }

    fn coords(p: &Polytope) -> Vec<String> {
        p.points().iter().map(|v| v.to_string()).collect()
    }

    #[test]
    fn pentagon() {
        let p = df_polytope(&it("2 1 0 1 *0"), 3).unwrap();
        assert_eq!(
            coords(&p),
            ["(1, 0, 0)", "(3/4, 0, 1/4)", "(5/8, 1/8, 1/4)", "(4/9, 1/3, 2/9)", "(0, 1, 0)"]
        );
        let tags: Vec<String> = p.vertices().iter().map(|v| v.tag.to_string()).collect();
        assert_eq!(tags, ["trivial", "fe:0", "fe:2", "phi-inverse", "trivial"]);
        assert!(p.contains(&fv("2/5,2/5,1/5")));
        assert!(is_certified_extreme(&p));
        assert_eq!(membership(&fv("2/5,2/5,1/5"), &it("2 1 0 1 *0")), Membership::Inside);
    }

    #[test]
    fn four_letters() {
        let p = df_polytope(&it("2 1 0 1 *0"), 4).unwrap();
        assert_eq!(p.vertices().len(), 7);
        for v in ["2/5,2/5,0,1/5", "5/8,1/8,0,2/8", "3/4,0,0,1/4", "2/5,1/5,1/5,1/5"] {
            assert!(p.points().contains(&fv(v)), "{v}");
        }
        assert!(is_certified_extreme(&p));
    }

    #[test]
    fn small_cases() {
        let p = df_polytope(&it("0 1 1 *0"), 3).unwrap();
        let mut got = p.points();
        got.sort();
        let mut want: Vec<FreqVector> = ["1,0,0", "0,1,0", "1/2,0,1/2", "0,2/3,1/3", "1/4,1/4,1/2"].iter().map(|s| fv(s)).collect();
        want.sort();
        assert_eq!(got, want);
        assert_eq!(df_polytope(&it("*0"), 3).unwrap().vertices().len(), 3);
        assert_eq!(coords(&df_polytope(&it("inf"), 3).unwrap()), ["(1, 0, 0)", "(0, 1, 0)"]);
        assert_eq!(df_polytope(&it("2 1 0 0 inf"), 3).unwrap(), df_polytope(&it("2 1 0 1 *0"), 3).unwrap());
        assert_eq!(coords(&df_polytope(&it("1 *0"), 2).unwrap()), ["(1/2, 1/2)", "(1, 0)"]);
        assert!(df_polytope(&it("1 1 (1 0)"), 3).is_err());
    }

    #[test]
    fn membership_and_forcing() {
        assert_eq!(membership(&fv("0,0,1"), &it("*0")), Membership::Inside);
        assert_eq!(membership(&fv("0,0,1"), &it("1 *0")), Membership::Outside);
        assert_eq!(membership(&fv("1,0,0"), &it("inf")), Membership::Inside);
        assert_eq!(membership(&fv("1/3,1/3,1/3"), &it("1 …")), Membership::Undecided { depth: 1 });
        assert_eq!(forcing_compare(&fv("3/4,0,1/4"), &fv("4/9,3/9,2/9")), Comparison::Less);
        assert_eq!(forcing_compare(&fv("1,0,0"), &fv("1/3,1/3,1/3")), Comparison::Less);
        // Both lie on the face α₂ = 0.
        assert_eq!(forcing_compare(&fv("1,0,0"), &fv("0,1,0")), Comparison::Equal);
        assert_eq!(forcing_compare(&fv("1/3,1/3,1/3"), &fv("1/3,1/3,1/3")), Comparison::Equal);
    }

    #[test]
    fn sandwich() {
        let n = it("1 1 (1 0)");
        let s0 = df_sandwich(&n, 0, 3).unwrap();
        assert_eq!(s0.inner.vertices(), df_polytope(&it("2 *0"), 3).unwrap().vertices());
        assert_eq!(s0.outer.vertices(), df_polytope(&it("1 *0"), 3).unwrap().vertices());
        assert!(!s0.inner.is_exact() && !s0.outer.is_exact());
        let mut last = f64::INFINITY;
        for r in [2, 5, 10, 20] {
            let s = df_sandwich(&n, r, 3).unwrap();
            assert!(s.inner.points().iter().all(|v| s.outer.contains(v)));
            assert!(s.gap < last);
            last = s.gap;
        }
        assert!(df_sandwich(&it("1 2 …"), 3, 3).is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = df_polytope(&it("2 1 0 1 *0"), 3).unwrap();
        let text = serde_json::to_string(&p).unwrap();
        assert!(text.contains("\"tag\":\"fe:2\""));
        let back: Polytope = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
    }
}
