//! Point clouds for drawing `DF(n)`: FE points, the `Φ⁻¹` vertex and the
//! triangles `A_{n,r}`.

use std::fmt::Write as _;
use std::str::FromStr;

use super::polytope::fe_points;
use crate::cfk::{simplex_images, upsilon};
use crate::error::{Error, Result};
use crate::exact_arith::{format_rational, to_decimal};
use crate::symbolic::FreqVector;

/// How the itinerary entries are generated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlotRule {
    /// `n_r = r³`.
    Cubes,
    /// `n_r = r²`.
    Squares,
    Explicit(Vec<u64>),
}

impl PlotRule {
    /// Entries `n_0 … n_depth` (explicit lists are cut to `depth + 1`).
    pub fn entries(&self, depth: usize) -> Vec<u64> {
        match self {
            PlotRule::Cubes => (0..=depth as u64).map(|r| r.pow(3)).collect(),
            PlotRule::Squares => (0..=depth as u64).map(|r| r.pow(2)).collect(),
            PlotRule::Explicit(v) => v.iter().copied().take(depth.saturating_add(1)).collect(),
        }
    }
}

impl FromStr for PlotRule {
    type Err = Error;

    /// `cubes`, `squares`, or a list such as `[2,1,0,1]`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "cubes" => Ok(PlotRule::Cubes),
            "squares" => Ok(PlotRule::Squares),
            other => {
                let inner = other.trim_start_matches('[').trim_end_matches(']');
                let v = inner
                    .split([',', ' '])
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<u64>().map_err(|_| Error::Parse(format!("bad entry {t:?} in plot rule"))))
                    .collect::<Result<Vec<_>>>()?;
                if v.is_empty() {
                    return Err(Error::Parse(format!("unknown plot rule {other:?}")));
                }
                Ok(PlotRule::Explicit(v))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlotRow {
    pub depth: usize,
    /// `fe`, `phi-inverse`, or `a0 … a{k-1}`.
    pub tag: String,
    pub coords: FreqVector,
}

/// Rows for the rational itinerary `entries 0̄`, ordered by depth.
pub fn plot_rows(entries: &[u64], k: usize, triangles: bool) -> Result<Vec<PlotRow>> {
    if k < 2 {
        return Err(Error::BadAlphabet(k as u8));
    }
    if entries.is_empty() {
        return Err(Error::InsufficientDepth { needed: 1, available: 0 });
    }
    let mut fe = fe_points(entries, k).into_iter().peekable();
    let mut rows = Vec::new();
    for r in 0..entries.len() {
        while let Some(v) = fe.next_if(|v| matches!(v.tag, super::VertexTag::Fe(s) if s == r)) {
            rows.push(PlotRow { depth: r, tag: "fe".into(), coords: v.coords });
        }
        if triangles {
            let img = simplex_images(entries, r, k)?;
            for (i, a) in img.a_vertices.into_iter().enumerate() {
                rows.push(PlotRow { depth: r, tag: format!("a{i}"), coords: a });
            }
        }
    }
    let phi = upsilon(entries, &FreqVector::unit(k, k - 1));
    rows.push(PlotRow { depth: entries.len() - 1, tag: "phi-inverse".into(), coords: phi });
    Ok(rows)
}

/// The `fe` rows only.
pub fn fe_table(rows: &[PlotRow]) -> Vec<&PlotRow> {
    rows.iter().filter(|r| r.tag == "fe").collect()
}

/// CSV with header `depth,tag,coord_0,…,x_proj,y_proj`; projections are
/// `α₀` and `α_{k-1}` to `places` decimals.
pub fn plot_csv(rows: &[PlotRow], k: usize, places: usize) -> String {
    let mut out = String::from("depth,tag");
    for i in 0..k {
        let _ = write!(out, ",coord_{i}");
    }
    out.push_str(",x_proj,y_proj\n");
    for row in rows {
        let _ = write!(out, "{},{}", row.depth, row.tag);
        for c in row.coords.comps() {
            let _ = write!(out, ",{}", format_rational(c));
        }
        let _ = writeln!(out, ",{},{}", to_decimal(row.coords.get(0), places), to_decimal(row.coords.last(), places));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explicit_rows() {
        let rule: PlotRule = "[2,1,0,1]".parse().unwrap();
        let rows = plot_rows(&rule.entries(usize::MAX - 1), 3, false).unwrap();
        let got: Vec<(usize, &str, String)> = rows.iter().map(|r| (r.depth, r.tag.as_str(), r.coords.to_string())).collect();
        assert_eq!(
            got,
            [(0, "fe", "(3/4, 0, 1/4)".to_string()), (2, "fe", "(5/8, 1/8, 1/4)".into()), (3, "phi-inverse", "(4/9, 1/3, 2/9)".into())]
        );
        let csv = plot_csv(&rows, 3, 4);
        assert_eq!(csv.lines().next().unwrap(), "depth,tag,coord_0,coord_1,coord_2,x_proj,y_proj");
        assert_eq!(csv.lines().nth(1).unwrap(), "0,fe,3/4,0,1/4,0.7500,0.2500");
    }

    #[test]
    fn rules() {
        assert_eq!(PlotRule::Cubes.entries(3), [0, 1, 8, 27]);
        assert_eq!(PlotRule::Squares.entries(3), [0, 1, 4, 9]);
        assert!("".parse::<PlotRule>().is_err());
        let rows = plot_rows(&PlotRule::Squares.entries(4), 3, true).unwrap();
        assert_eq!(fe_table(&rows).len(), 4);
        assert_eq!(rows.iter().filter(|r| r.tag == "a1").count(), 5);
    }
}
