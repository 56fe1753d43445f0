use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// A dense square matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(n: usize) -> Self {
        RationalMatrix {
            n,
            data: vec![BigRational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(RationalMatrix { n, data })
    }

    pub fn from_integers<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigRational) {
        self.data[i * self.n + j] = x;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// The principal submatrix on the given (ordered) indices.
    pub fn principal_submatrix(&self, idx: &[usize]) -> Self {
        let mut m = Self::zeros(idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    /// The leading `t × t` block.
    pub fn leading(&self, t: usize) -> Self {
        self.principal_submatrix(&(0..t).collect::<Vec<_>>())
    }

    /// Rows scaled by the lcm of their denominators; rank and the sign of each
    /// minor's determinant are unchanged up to a positive factor.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.n)
            .map(|i| {
                let row = &self.data[i * self.n..(i + 1) * self.n];
                let l = row
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter()
                    .map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Fraction-free (Bareiss) forward elimination in place. Pivot is the first
/// nonzero entry at or below the current row. Returns the rank and the parity
/// of row swaps.
fn bareiss(a: &mut [Vec<BigInt>]) -> (usize, bool) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut swapped = false;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            swapped = !swapped;
        }
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom.iter_mut() {
            for j in c + 1..cols {
                let t = &pivot_row[c] * &row[j] - &row[c] * &pivot_row[j];
                row[j] = t / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot_row[c].clone();
        rank += 1;
    }
    (rank, swapped)
}

/// Exact rank by fraction-free elimination after clearing row denominators.
pub fn rank_exact(m: &RationalMatrix) -> usize {
    let mut a = m.integer_rows();
    bareiss(&mut a).0
}

/// Exact determinant.
pub fn determinant(m: &RationalMatrix) -> BigRational {
    let n = m.dim();
    if n == 0 {
        return BigRational::one();
    }
    let mut scale = BigRational::one();
    let mut a = Vec::with_capacity(n);
    for i in 0..n {
        let row: Vec<BigRational> = (0..n).map(|j| m.get(i, j).clone()).collect();
        let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        scale /= BigRational::from_integer(l.clone());
        a.push(
            row.iter()
                .map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
                .collect::<Vec<_>>(),
        );
    }
    let (rank, swapped) = bareiss(&mut a);
    if rank < n {
        return BigRational::zero();
    }
    // After Bareiss the last pivot equals the determinant of the scaled matrix.
    let det = BigRational::from_integer(a[n - 1][n - 1].clone()) * scale;
    if swapped {
        -det
    } else {
        det
    }
}

/// Weighted strict diagonal dominance: for every row `u`,
/// `Σ_{w≠u} c_w·|a_uw| < c_u·a_uu`. For symmetric matrices this implies
/// positive definiteness.
pub fn dominance_pd(m: &RationalMatrix, c: &[BigRational]) -> Result<bool> {
    if c.len() != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            got: c.len(),
        });
    }
    if let Some(bad) = c.iter().find(|x| !x.is_positive()) {
        return Err(Error::InvalidArgument(format!("weight {bad} is not positive")));
    }
    Ok((0..m.dim()).all(|u| {
        let off: BigRational = (0..m.dim())
            .filter(|&w| w != u)
            .map(|w| &c[w] * m.get(u, w).abs())
            .sum();
        off < &c[u] * m.get(u, u)
    }))
}

/// Sylvester's criterion: every leading principal minor is positive.
pub fn sylvester_pd(m: &RationalMatrix) -> bool {
    (1..=m.dim()).all(|t| determinant(&m.leading(t)).is_positive())
}
