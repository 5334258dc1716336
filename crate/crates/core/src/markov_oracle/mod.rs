//! An independent route to `DF(β)` when the orbit of 1 is finite: Markov
//! partition, transition graph, simple cycles and the hull of their digit
//! frequencies.

use std::cmp::Ordering;

use serde::Serialize;
use serde_json::{json, Value};

use crate::dfset::{Polytope, Vertex, VertexTag};
use crate::error::{Error, Result};
use crate::exact_arith::{AlgebraicNumber, BetaElement, BetaRing};
use crate::symbolic::{alphabet_size, FreqVector, Word};

/// Consecutive intervals `J_1 < J_2 < …` cut at the orbit of 1 and at the
/// points `j/β`.
#[derive(Clone, Debug)]
pub struct MarkovPartition {
    pub ring: BetaRing,
    pub k: u8,
    /// Strictly increasing, from 0 to 1.
    pub cut_points: Vec<BetaElement>,
    /// Digit read on each interval.
    pub labels: Vec<u8>,
}

impl MarkovPartition {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Endpoints of interval `i` as floats, for reports.
    pub fn interval_approx(&self, i: usize) -> (f64, f64) {
        (self.ring.to_f64(&self.cut_points[i]), self.ring.to_f64(&self.cut_points[i + 1]))
    }
}

/// `i → j` when `f_β(J_i) ⊇ J_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransitionGraph {
    pub adjacency: Vec<Vec<usize>>,
    pub labels: Vec<u8>,
}

/// A simple cycle, rotated to start at its smallest node. Nodes are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Loop(pub Vec<usize>);

impl Loop {
    pub fn freq(&self, labels: &[u8], k: u8) -> FreqVector {
        let mut counts = vec![0u64; k as usize];
        for &v in &self.0 {
            counts[labels[v] as usize] += 1;
        }
        FreqVector::from_counts(&counts).expect("loops are nonempty")
    }

    /// 1-based node names concatenated, e.g. `1352`.
    pub fn name(&self) -> String {
        self.0.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(if self.0.len() > 9 { " " } else { "" })
    }
}

fn position(ring: &BetaRing, cuts: &[BetaElement], x: &BetaElement) -> Result<Option<usize>> {
    for (i, c) in cuts.iter().enumerate() {
        if ring.compare(c, x)? == Ordering::Equal {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Builds the partition from `β` and the claimed expansion `d_β(1) = d_1 … d_r 0̄`.
pub fn build_partition(beta: &AlgebraicNumber, kneading: &Word) -> Result<(MarkovPartition, TransitionGraph)> {
    let k = alphabet_size(beta)?;
    if kneading.k() != k {
        return Err(Error::AlphabetMismatch(kneading.k(), k));
    }
    let ring = BetaRing::new(beta);
    let zero = ring.zero();
    let one = ring.one();
    // Orbit of 1, checking that each claimed digit is the greedy one.
    let mut orbit = vec![one.clone()];
    let mut y = one.clone();
    for (s, &d) in kneading.digits().iter().enumerate() {
        y = ring.sub_int(&ring.mul_beta(&y), d as i64);
        let below = ring.sign(&y)? == Ordering::Less;
        let above = ring.compare(&y, &one)? != Ordering::Less;
        if below || above {
            return Err(Error::NotMarkov(format!("digit {d} at position {} is not the greedy digit", s + 1)));
        }
        orbit.push(y.clone());
    }
    if ring.sign(&y)? != Ordering::Equal {
        return Err(Error::NotMarkov(format!("orbit of 1 does not reach 0 after {} digits", kneading.len())));
    }
    orbit.pop();
    let mut points = vec![zero];
    let inv = ring.mul_beta_inv(&one);
    points.extend((1..k).map(|j| ring.scale(&inv, &num_rational::BigRational::from_integer(j.into()))));
    points.extend(orbit);
    let mut cuts: Vec<BetaElement> = Vec::new();
    for p in points {
        if position(&ring, &cuts, &p)?.is_none() {
            cuts.push(p);
        }
    }
    sort_elements(&ring, &mut cuts)?;
    let m = cuts.len() - 1;
    // The label of J_i is the number of points j/β at or below its left end.
    let mut labels = Vec::with_capacity(m);
    for c in &cuts[..m] {
        let mut j = 0u8;
        while j + 1 < k && ring.compare(&ring.scale(&inv, &num_rational::BigRational::from_integer((j + 1).into())), c)? != Ordering::Greater {
            j += 1;
        }
        labels.push(j);
    }
    let mut adjacency = Vec::with_capacity(m);
    for i in 0..m {
        let image = |x: &BetaElement| ring.sub_int(&ring.mul_beta(x), labels[i] as i64);
        let a = position(&ring, &cuts, &image(&cuts[i]))?;
        let b = position(&ring, &cuts, &image(&cuts[i + 1]))?;
        match (a, b) {
            (Some(a), Some(b)) if a < b => adjacency.push((a..b).collect()),
            _ => return Err(Error::NotMarkov(format!("image of interval {} is not a union of intervals", i + 1))),
        }
    }
    let graph = TransitionGraph { adjacency, labels: labels.clone() };
    Ok((MarkovPartition { ring, k, cut_points: cuts, labels }, graph))
}

fn sort_elements(ring: &BetaRing, v: &mut [BetaElement]) -> Result<()> {
    // Insertion sort; comparisons can fail, so no std sort.
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && ring.compare(&v[j - 1], &v[j])? == Ordering::Greater {
            v.swap(j - 1, j);
            j -= 1;
        }
    }
    Ok(())
}

/// All simple cycles, each starting at its smallest node, sorted.
pub fn minimal_loops(g: &TransitionGraph) -> Vec<Loop> {
    let n = g.adjacency.len();
    let mut loops = Vec::new();
    for start in 0..n {
        let mut path = vec![start];
        let mut on_path = vec![false; n];
        on_path[start] = true;
        // Stack of (node, next edge index).
        let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
        while let Some((v, e)) = stack.last().copied() {
            if e < g.adjacency[v].len() {
                stack.last_mut().unwrap().1 += 1;
                let w = g.adjacency[v][e];
                if w == start {
                    loops.push(Loop(path.clone()));
                } else if w > start && !on_path[w] {
                    on_path[w] = true;
                    path.push(w);
                    stack.push((w, 0));
                }
            } else {
                stack.pop();
                on_path[v] = false;
                path.pop();
            }
        }
    }
    loops.sort();
    loops
}

/// The convex hull of the loop frequencies.
pub fn oracle_hull(loops: &[Loop], labels: &[u8], k: u8) -> Result<Polytope> {
    let points = loops.iter().map(|l| Vertex { coords: l.freq(labels, k), tag: VertexTag::Hull }).collect();
    Polytope::hull(k as usize, points)
}

/// Loops with their frequencies, 1-based node lists.
pub fn loops_json(loops: &[Loop], labels: &[u8], k: u8) -> Value {
    Value::Array(
        loops
            .iter()
            .map(|l| {
                json!({
                    "nodes": l.0.iter().map(|v| v + 1).collect::<Vec<_>>(),
                    "freq": l.freq(labels, k),
                })
            })
            .collect(),
    )
}
