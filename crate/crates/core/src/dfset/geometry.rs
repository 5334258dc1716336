//! Exact convex geometry on the simplex.
//!
//! Planar work (`k = 3`) uses orientation predicates in the `(α₀, α₂)`
//! chart. Everything else goes through [`distance_sq_to_hull`], an exact
//! rational minimum-norm-point solver: a point lies in a hull exactly when
//! its squared distance is zero.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::symbolic::FreqVector;

type Q = BigRational;

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn combine(points: &[Vec<Q>], weights: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); points[0].len()];
    for (p, w) in points.iter().zip(weights) {
        for (o, x) in out.iter_mut().zip(p) {
            *o += x * w;
        }
    }
    out
}

/// Solves `m x = rhs` exactly; `None` if `m` is singular.
fn solve(mut m: Vec<Vec<Q>>, mut rhs: Vec<Q>) -> Option<Vec<Q>> {
    let n = rhs.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = &m[r][col] / &m[col][col];
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row).skip(col) {
                    *x -= &f * y;
                }
                let t = &f * &rhs[col];
                rhs[r] -= t;
            }
        }
    }
    Some((0..n).map(|i| &rhs[i] / &m[i][i]).collect())
}

/// Weights of the point of minimum norm in the affine hull of `s`.
fn affine_minimizer(s: &[Vec<Q>]) -> Vec<Q> {
    let m = s.len();
    let mut a = vec![vec![Q::zero(); m + 1]; m + 1];
    for i in 0..m {
        for j in 0..m {
            a[i][j] = dot(&s[i], &s[j]);
        }
        a[i][m] = Q::from_integer(1.into());
        a[m][i] = Q::from_integer(1.into());
    }
    let mut rhs = vec![Q::zero(); m + 1];
    rhs[m] = Q::from_integer(1.into());
    let mut sol = solve(a, rhs).expect("active set stays affinely independent");
    sol.truncate(m);
    sol
}

/// Exact squared Euclidean distance from `p` to the convex hull of `points`
/// (Wolfe's minimum-norm-point method in rational arithmetic).
pub fn distance_sq_to_hull(p: &[Q], points: &[Vec<Q>]) -> Q {
    assert!(!points.is_empty(), "hull of no points");
    let pts: Vec<Vec<Q>> = points.iter().map(|v| sub(v, p)).collect();
    let start = (0..pts.len()).min_by(|&i, &j| dot(&pts[i], &pts[i]).cmp(&dot(&pts[j], &pts[j]))).unwrap();
    let mut active = vec![pts[start].clone()];
    let mut lambda = vec![Q::from_integer(1.into())];
    let mut x = pts[start].clone();
    loop {
        let xx = dot(&x, &x);
        if xx.is_zero() {
            return xx;
        }
        let (j, best) = pts.iter().map(|q| dot(&x, q)).enumerate().min_by(|a, b| a.1.cmp(&b.1)).unwrap();
        if best >= xx {
            return xx;
        }
        active.push(pts[j].clone());
        lambda.push(Q::zero());
        loop {
            let mu = affine_minimizer(&active);
            if mu.iter().all(Signed::is_positive) {
                x = combine(&active, &mu);
                lambda = mu;
                break;
            }
            let theta = lambda
                .iter()
                .zip(&mu)
                .filter(|(_, m)| !m.is_positive())
                .map(|(l, m)| if l == m { Q::zero() } else { l / (l - m) })
                .min()
                .unwrap();
            for (l, m) in lambda.iter_mut().zip(&mu) {
                *l = &*l + &theta * (m - &*l);
            }
            let keep: Vec<bool> = lambda.iter().map(|l| l.is_positive()).collect();
            let mut idx = 0;
            active.retain(|_| {
                idx += 1;
                keep[idx - 1]
            });
            lambda.retain(Signed::is_positive);
        }
    }
}

/// True when `p` is a convex combination of `points`.
pub fn in_hull(p: &FreqVector, points: &[FreqVector]) -> bool {
    let pts: Vec<Vec<Q>> = points.iter().map(|v| v.comps().to_vec()).collect();
    !points.is_empty() && distance_sq_to_hull(p.comps(), &pts).is_zero()
}

/// `(α₀, α₂)`, the chart used for planar work.
fn chart(p: &FreqVector) -> (Q, Q) {
    (p.get(0).clone(), p.get(2).clone())
}

fn cross(o: &(Q, Q), a: &(Q, Q), b: &(Q, Q)) -> Q {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

/// Indices of the extreme points of a planar set, counterclockwise in the
/// `(α₀, α₂)` chart, starting from the point with largest `α₀` (then
/// smallest `α₂`). Duplicates and collinear boundary points are dropped.
pub fn planar_hull(points: &[FreqVector]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    let c: Vec<(Q, Q)> = points.iter().map(chart).collect();
    idx.sort_by(|&i, &j| c[i].cmp(&c[j]));
    idx.dedup_by(|a, b| c[*a] == c[*b]);
    if idx.len() <= 2 {
        return rotate_to_start(idx, &c);
    }
    let mut hull: Vec<usize> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &usize>> = if pass == 0 { Box::new(idx.iter()) } else { Box::new(idx.iter().rev()) };
        for &i in iter {
            while hull.len() >= start + 2 && !cross(&c[hull[hull.len() - 2]], &c[hull[hull.len() - 1]], &c[i]).is_positive() {
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    rotate_to_start(hull, &c)
}

fn rotate_to_start(mut hull: Vec<usize>, c: &[(Q, Q)]) -> Vec<usize> {
    if let Some(pos) = (0..hull.len()).max_by(|&a, &b| {
        let (p, q) = (&c[hull[a]], &c[hull[b]]);
        p.0.cmp(&q.0).then_with(|| q.1.cmp(&p.1))
    }) {
        hull.rotate_left(pos);
    }
    hull
}

/// Membership in a convex polygon given counterclockwise (or in a
/// degenerate segment/point).
pub fn in_planar_polygon(p: &FreqVector, ccw: &[FreqVector]) -> bool {
    let q = chart(p);
    let c: Vec<(Q, Q)> = ccw.iter().map(chart).collect();
    match c.len() {
        0 => false,
        1 => c[0] == q,
        2 => {
            cross(&c[0], &c[1], &q).is_zero()
                && q.0 >= c[0].0.clone().min(c[1].0.clone())
                && q.0 <= c[0].0.clone().max(c[1].0.clone())
                && q.1 >= c[0].1.clone().min(c[1].1.clone())
                && q.1 <= c[0].1.clone().max(c[1].1.clone())
        }
        n => (0..n).all(|i| !cross(&c[i], &c[(i + 1) % n], &q).is_negative()),
    }
}

/// Indices of the extreme points of an arbitrary finite set, in
/// lexicographic order of coordinates.
pub fn extreme_points(points: &[FreqVector]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&i, &j| points[i].cmp(&points[j]));
    idx.dedup_by(|a, b| points[*a] == points[*b]);
    let distinct: Vec<usize> = idx.clone();
    idx.into_iter()
        .filter(|&i| {
            let others: Vec<FreqVector> = distinct.iter().filter(|&&j| j != i).map(|&j| points[j].clone()).collect();
            others.is_empty() || !in_hull(&points[i], &others)
        })
        .collect()
}

/// Squared Hausdorff distance between the hulls of two point sets.
pub fn hausdorff_sq(a: &[FreqVector], b: &[FreqVector]) -> Q {
    let av: Vec<Vec<Q>> = a.iter().map(|v| v.comps().to_vec()).collect();
    let bv: Vec<Vec<Q>> = b.iter().map(|v| v.comps().to_vec()).collect();
    let one_side = |from: &[Vec<Q>], to: &[Vec<Q>]| from.iter().map(|p| distance_sq_to_hull(p, to)).max().unwrap_or_else(Q::zero);
    std::cmp::max(one_side(&av, &bv), one_side(&bv, &av))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;

    fn fv(s: &str) -> FreqVector {
        FreqVector::parse(s).unwrap()
    }

    #[test]
    fn min_norm_distances() {
        let tri = [fv("1,0,0"), fv("0,1,0"), fv("0,0,1")];
        assert!(in_hull(&fv("1/3,1/3,1/3"), &tri));
        let seg = [fv("1,0,0"), fv("0,1,0")];
        // (1/3,1/3,1/3) to the edge α₂ = 0: nearest point (1/2,1/2,0).
        let d = distance_sq_to_hull(fv("1/3,1/3,1/3").comps(), &seg.iter().map(|v| v.comps().to_vec()).collect::<Vec<_>>());
        assert_eq!(d, rat(1, 36) + rat(1, 36) + rat(1, 9));
        assert!(!in_hull(&fv("0,0,1"), &seg));
        assert!(in_hull(&fv("1/2,1/2"), &[fv("1,0"), fv("0,1")]));
        let tet = [fv("1,0,0,0"), fv("0,1,0,0"), fv("0,0,1,0"), fv("0,0,0,1")];
        assert!(in_hull(&fv("1/4,1/4,1/4,1/4"), &tet));
        assert!(!in_hull(&fv("1/4,1/4,1/4,1/4"), &tet[..3]));
    }

    #[test]
    fn planar_hull_order() {
        let pts = [fv("0,1,0"), fv("4/9,3/9,2/9"), fv("2/5,2/5,1/5"), fv("1,0,0"), fv("5/8,1/8,2/8"), fv("3/4,0,1/4")];
        let h = planar_hull(&pts);
        let got: Vec<&FreqVector> = h.iter().map(|&i| &pts[i]).collect();
        assert_eq!(got, [&pts[3], &pts[5], &pts[4], &pts[1], &pts[0]]);
        let poly: Vec<FreqVector> = h.iter().map(|&i| pts[i].clone()).collect();
        assert!(in_planar_polygon(&pts[2], &poly));
        assert!(!in_planar_polygon(&fv("0,0,1"), &poly));
        let ext = extreme_points(&pts);
        assert_eq!(ext.len(), 5);
        assert!(!ext.contains(&2));
    }

    #[test]
    fn hausdorff() {
        let a = [fv("1,0,0"), fv("0,1,0")];
        let b = [fv("1,0,0"), fv("0,1,0"), fv("0,0,1")];
        assert_eq!(hausdorff_sq(&a, &a), rat(0, 1));
        assert_eq!(hausdorff_sq(&a, &b), rat(3, 2));
    }
}
