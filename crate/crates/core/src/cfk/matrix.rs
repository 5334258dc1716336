//! Abelianization matrices of the substitutions and the Hilbert-metric
//! diameter used as a contraction diagnostic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A `k × k` nonnegative integer matrix; column `j` of `A_n` counts the
/// digits of `Λ_n(j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianMatrix {
    rows: Vec<Vec<BigInt>>,
}

/// `d(A)`, infinite when some entry vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diameter {
    Finite(BigRational),
    Infinite,
}

impl AbelianMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Self {
        let k = rows.len();
        assert!(rows.iter().all(|r| r.len() == k), "matrix must be square");
        AbelianMatrix { rows }
    }

    pub fn from_u64(rows: &[&[u64]]) -> Self {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn identity(k: usize) -> Self {
        Self::new((0..k).map(|i| (0..k).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect())
    }

    /// The abelianization `A_n` of `Λ_n` on `k` letters.
    pub fn lambda(n: u64, k: u8) -> Self {
        let size = k as usize;
        let mut rows = vec![vec![BigInt::zero(); size]; size];
        for j in 0..k {
            for (i, c) in lambda_counts(n, j, k).into_iter().enumerate() {
                rows[i][j as usize] = BigInt::from(c);
            }
        }
        Self::new(rows)
    }

    /// `A_{n₀} A_{n₁} ⋯ A_{n_r}`.
    pub fn chain(prefix: &[u64], k: u8) -> Self {
        prefix.iter().fold(Self::identity(k as usize), |acc, &n| acc.mul(&Self::lambda(n, k)))
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let k = self.size();
        let rows = (0..k)
            .map(|i| (0..k).map(|j| (0..k).map(|l| &self.rows[i][l] * &other.rows[l][j]).sum()).collect())
            .collect();
        Self::new(rows)
    }

    /// `|Λ(j)|` for each column `j`.
    pub fn column_sums(&self) -> Vec<BigInt> {
        (0..self.size()).map(|j| self.rows.iter().map(|r| &r[j]).sum()).collect()
    }

    pub fn is_positive(&self) -> bool {
        self.rows.iter().flatten().all(|x| x > &BigInt::zero())
    }
}

fn lambda_counts(n: u64, j: u8, k: u8) -> Vec<u64> {
    let mut counts = vec![0u64; k as usize];
    let top = k as usize - 1;
    if j + 2 < k {
        counts[j as usize + 1] = 1;
    } else if j + 2 == k {
        counts[top] = 1;
        counts[0] = n + 1;
    } else {
        counts[top] = 1;
        counts[0] = n;
    }
    counts
}

/// `d(A) = max a_il a_jm / (a_im a_jl)` over all pairs of rows and columns.
pub fn hilbert_diameter(m: &AbelianMatrix) -> Diameter {
    if !m.is_positive() {
        return Diameter::Infinite;
    }
    let k = m.size();
    let mut best = BigRational::one();
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                for q in 0..k {
                    let r = BigRational::new(m.get(i, l) * m.get(j, q), m.get(i, q) * m.get(j, l));
                    if r > best {
                        best = r;
                    }
                }
            }
        }
    }
    Diameter::Finite(best)
}
