use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::designs::Multigraph;
use crate::{Error, Result};

/// A complete graph with nonnegative rational edge weights.
///
/// Vertices are addressed by local index `0..len()`; each carries a label
/// (its name in some ambient point set), which defaults to the index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    labels: Vec<usize>,
    wt: Vec<BigRational>,
}

impl WeightedGraph {
    /// The all-zero graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Self::with_labels((0..n).collect())
    }

    pub fn with_labels(labels: Vec<usize>) -> Self {
        let n = labels.len();
        WeightedGraph {
            labels,
            wt: vec![BigRational::zero(); n * n],
        }
    }

    /// Edge weights equal to multiplicities.
    pub fn from_multigraph(g: &Multigraph) -> Self {
        let mut out = Self::new(g.vertex_count());
        for (u, w, mu) in g.edges() {
            let x = BigRational::from_integer(BigInt::from(mu));
            out.put(u, w, x);
        }
        out
    }

    /// Builds a graph from a symmetric table of integer weights with a zero
    /// diagonal.
    pub fn from_integer_weights(rows: &[Vec<u64>]) -> Result<Self> {
        let n = rows.len();
        let mut g = Self::new(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            if row[i] != 0 {
                return Err(Error::InvalidArgument(format!("loop at vertex {i}")));
            }
            for j in i + 1..n {
                if rows[j][i] != row[j] {
                    return Err(Error::InvalidArgument(format!(
                        "weight table is not symmetric at ({i}, {j})"
                    )));
                }
                g.put(i, j, BigRational::from_integer(BigInt::from(row[j])));
            }
        }
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> usize {
        self.labels[i]
    }

    pub fn weight(&self, i: usize, j: usize) -> &BigRational {
        &self.wt[i * self.len() + j]
    }

    pub fn set_weight(&mut self, i: usize, j: usize, x: BigRational) -> Result<()> {
        let n = self.len();
        if i >= n || j >= n {
            return Err(Error::InvalidArgument(format!(
                "edge ({i}, {j}) outside a graph on {n} vertices"
            )));
        }
        if i == j {
            return Err(Error::InvalidArgument(format!("loop at vertex {i}")));
        }
        if x.is_negative() {
            return Err(Error::InvalidArgument(format!("negative weight {x}")));
        }
        self.put(i, j, x);
        Ok(())
    }

    fn put(&mut self, i: usize, j: usize, x: BigRational) {
        let n = self.len();
        self.wt[i * n + j] = x.clone();
        self.wt[j * n + i] = x;
    }

    /// `wt(u) = Σ_{w≠u} wt(uw)`.
    pub fn vertex_weight(&self, u: usize) -> BigRational {
        let n = self.len();
        self.wt[u * n..(u + 1) * n].iter().sum()
    }

    pub fn vertex_weights(&self) -> Vec<BigRational> {
        (0..self.len()).map(|u| self.vertex_weight(u)).collect()
    }

    /// `wt_{G[S]}(u)`: weight of `u` counting only neighbours in `set`.
    pub fn weight_within(&self, u: usize, set: &[usize]) -> BigRational {
        set.iter().filter(|&&w| w != u).map(|&w| self.weight(u, w)).sum()
    }

    /// The induced subgraph `G[S]`, keeping labels.
    pub fn induced(&self, set: &[usize]) -> Result<WeightedGraph> {
        check_subset(self.len(), set)?;
        let mut g = Self::with_labels(set.iter().map(|&i| self.labels[i]).collect());
        for (a, &i) in set.iter().enumerate() {
            for (b, &j) in set.iter().enumerate().skip(a + 1) {
                g.put(a, b, self.weight(i, j).clone());
            }
        }
        Ok(g)
    }

    /// Whether `wt_{G[S]}(u) < m` for every `u ∈ S`.
    pub fn is_m_independent(&self, set: &[usize], m: u64) -> bool {
        let m = BigRational::from_integer(BigInt::from(m));
        set.iter().all(|&u| self.weight_within(u, set) < m)
    }
}

/// Rejects out-of-range and repeated indices.
pub(crate) fn check_subset(n: usize, set: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    for &i in set {
        if i >= n {
            return Err(Error::InvalidArgument(format!(
                "vertex {i} outside a graph on {n} vertices"
            )));
        }
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::InvalidArgument(format!("vertex {i} repeated")));
        }
    }
    Ok(())
}

impl fmt::Display for WeightedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.len();
        write!(f, "graph on {:?}", self.labels)?;
        for i in 0..n {
            for j in i + 1..n {
                let x = self.weight(i, j);
                if !x.is_zero() {
                    write!(f, " {}-{}:{}", self.labels[i], self.labels[j], x)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn vertex_weights_are_edge_sums() {
        let mut g = WeightedGraph::new(3);
        g.set_weight(0, 1, q(1, 2)).unwrap();
        g.set_weight(1, 2, q(2, 1)).unwrap();
        assert_eq!(g.vertex_weights(), vec![q(1, 2), q(5, 2), q(2, 1)]);
        assert_eq!(g.weight(1, 0), &q(1, 2));
        assert_eq!(g.weight_within(1, &[0, 1]), q(1, 2));
    }

    #[test]
    fn rejects_bad_edges() {
        let mut g = WeightedGraph::new(3);
        assert!(g.set_weight(0, 0, q(1, 1)).is_err());
        assert!(g.set_weight(0, 3, q(1, 1)).is_err());
        assert!(g.set_weight(0, 1, q(-1, 1)).is_err());
        assert!(WeightedGraph::from_integer_weights(&[vec![0, 1], vec![2, 0]]).is_err());
        assert!(WeightedGraph::from_integer_weights(&[vec![1, 1], vec![1, 0]]).is_err());
    }

    #[test]
    fn induced_keeps_labels() {
        let g = WeightedGraph::from_integer_weights(&[
            vec![0, 1, 2],
            vec![1, 0, 3],
            vec![2, 3, 0],
        ])
        .unwrap();
        let h = g.induced(&[2, 0]).unwrap();
        assert_eq!(h.labels(), &[2, 0]);
        assert_eq!(h.weight(0, 1), &q(2, 1));
        assert!(g.induced(&[1, 1]).is_err());
    }

    #[test]
    fn m_independence() {
        let g = WeightedGraph::from_integer_weights(&[
            vec![0, 1, 1],
            vec![1, 0, 1],
            vec![1, 1, 0],
        ])
        .unwrap();
        assert!(!g.is_m_independent(&[0, 1, 2], 2));
        assert!(g.is_m_independent(&[0, 1, 2], 3));
        assert!(g.is_m_independent(&[0, 1], 2));
        assert!(g.is_m_independent(&[], 1));
    }

    #[test]
    fn from_multigraph_copies_multiplicities() {
        let m = Multigraph::from_table(vec![vec![0, 2, 0], vec![2, 0, 1], vec![0, 1, 0]]).unwrap();
        let g = WeightedGraph::from_multigraph(&m);
        assert_eq!(g.vertex_weights(), vec![q(2, 1), q(3, 1), q(1, 1)]);
    }
}
