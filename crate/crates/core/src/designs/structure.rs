use crate::bounds::Side;
use crate::{Error, Result};

use super::Design;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DesignKind {
    /// Every pair exactly λ times (covering and packing at once).
    ExactDesign,
    Covering,
    Packing,
    Neither,
}

/// Pair-multiplicity classification of a design.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub kind: DesignKind,
    pub min_pair: u64,
    pub max_pair: u64,
}

impl Classification {
    pub fn is_covering(&self) -> bool {
        matches!(self.kind, DesignKind::Covering | DesignKind::ExactDesign)
    }

    pub fn is_packing(&self) -> bool {
        matches!(self.kind, DesignKind::Packing | DesignKind::ExactDesign)
    }

    /// The convention used for excess/leave bookkeeping. Exact designs are
    /// treated as coverings (their excess is empty either way).
    pub fn side(&self) -> Result<Side> {
        match self.kind {
            DesignKind::ExactDesign | DesignKind::Covering => Ok(Side::Cover),
            DesignKind::Packing => Ok(Side::Pack),
            DesignKind::Neither => Err(Error::NeitherCoveringNorPacking),
        }
    }
}

pub fn classify(d: &Design) -> Classification {
    let counts = d.pair_counts();
    let mut min_pair = u64::MAX;
    let mut max_pair = 0;
    for u in 0..d.v() {
        for w in u + 1..d.v() {
            min_pair = min_pair.min(counts[u][w]);
            max_pair = max_pair.max(counts[u][w]);
        }
    }
    if d.v() < 2 {
        min_pair = d.lambda();
        max_pair = d.lambda();
    }
    let covering = min_pair >= d.lambda();
    let packing = max_pair <= d.lambda();
    let kind = match (covering, packing) {
        (true, true) => DesignKind::ExactDesign,
        (true, false) => DesignKind::Covering,
        (false, true) => DesignKind::Packing,
        (false, false) => DesignKind::Neither,
    };
    Classification {
        kind,
        min_pair,
        max_pair,
    }
}

/// A loopless multigraph on `{0, …, v−1}` stored as a symmetric multiplicity
/// table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    mult: Vec<Vec<u64>>,
}

impl Multigraph {
    pub fn empty(v: usize) -> Self {
        Multigraph {
            mult: vec![vec![0; v]; v],
        }
    }

    /// Builds from a symmetric table with zero diagonal.
    pub fn from_table(mult: Vec<Vec<u64>>) -> Result<Self> {
        let v = mult.len();
        for (u, row) in mult.iter().enumerate() {
            if row.len() != v {
                return Err(Error::DimensionMismatch {
                    expected: v,
                    got: row.len(),
                });
            }
            if row[u] != 0 {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            for (w, &m) in row.iter().enumerate() {
                if mult[w][u] != m {
                    return Err(Error::InvalidArgument(format!(
                        "asymmetric multiplicity between {u} and {w}"
                    )));
                }
            }
        }
        Ok(Multigraph { mult })
    }

    pub fn vertex_count(&self) -> usize {
        self.mult.len()
    }

    pub fn mu(&self, u: usize, w: usize) -> u64 {
        self.mult[u][w]
    }

    pub fn degree(&self, u: usize) -> u64 {
        self.mult[u].iter().sum()
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.vertex_count()).map(|u| self.degree(u)).collect()
    }

    /// Edges `(u, w, μ)` with `u < w` and `μ > 0`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        let v = self.vertex_count();
        (0..v).flat_map(move |u| {
            (u + 1..v).filter_map(move |w| {
                let m = self.mult[u][w];
                (m > 0).then_some((u, w, m))
            })
        })
    }

    pub fn is_empty(&self) -> bool {
        self.edges().next().is_none()
    }
}

/// The excess (covering) or leave (packing) of a design:
/// `μ(uw) = |r_D(uw) − λ|`.
pub fn excess_or_leave(d: &Design) -> Result<Multigraph> {
    classify(d).side()?;
    let counts = d.pair_counts();
    let lambda = d.lambda();
    let mult = counts
        .iter()
        .enumerate()
        .map(|(u, row)| {
            row.iter()
                .enumerate()
                .map(|(w, &c)| if u == w { 0 } else { c.abs_diff(lambda) })
                .collect()
        })
        .collect();
    Ok(Multigraph { mult })
}

/// Structural quantities of a covering or packing: block count `b`, the
/// replication decomposition `(r, d)` for its side, the slack
/// `a = bk − rv` (covering) or `a = rv − bk` (packing), and the partition
/// `V_i = {u : deg_G(u) = d + i(k−1)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bookkeeping {
    pub side: Side,
    pub b: usize,
    pub r: i64,
    pub d: i64,
    pub a: i64,
    /// `parts[i]` lists the points of `V_i`; trailing empty classes are omitted.
    pub parts: Vec<Vec<usize>>,
}

impl Bookkeeping {
    pub fn part(&self, i: usize) -> &[usize] {
        self.parts.get(i).map_or(&[], Vec::as_slice)
    }
}

/// `(r, d)` with `λ(v−1) = r(k−1) ∓ d` and `0 ≤ d < k−1`.
pub(crate) fn replication_split(v: i64, k: i64, lambda: i64, side: Side) -> (i64, i64) {
    let total = lambda * (v - 1);
    let floor = total.div_euclid(k - 1);
    let rem = total - floor * (k - 1);
    match side {
        Side::Pack => (floor, rem),
        Side::Cover if rem == 0 => (floor, 0),
        Side::Cover => (floor + 1, (floor + 1) * (k - 1) - total),
    }
}

pub fn bookkeeping(d: &Design) -> Result<Bookkeeping> {
    if d.k() < 2 {
        return Err(Error::InvalidArgument("block size must be at least 2".into()));
    }
    let side = classify(d).side()?;
    let g = excess_or_leave(d)?;
    let (v, k, lambda) = (d.v() as i64, d.k() as i64, d.lambda() as i64);
    let (r, dd) = replication_split(v, k, lambda, side);
    let b = d.len();
    let a = match side {
        Side::Cover => b as i64 * k - r * v,
        Side::Pack => r * v - b as i64 * k,
    };

    let replication = d.replication();
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut degree_sum = 0i64;
    for u in 0..d.v() {
        let deg = g.degree(u) as i64;
        degree_sum += deg;
        let excess = deg - dd;
        if excess < 0 || excess % (k - 1) != 0 {
            return Err(Error::Inconsistent(format!(
                "degree {deg} of point {} is not d + i(k-1) with d = {dd}",
                u + 1
            )));
        }
        let i = (excess / (k - 1)) as usize;
        let expected_r = match side {
            Side::Cover => r + i as i64,
            Side::Pack => r - i as i64,
        };
        if replication[u] as i64 != expected_r {
            return Err(Error::Inconsistent(format!(
                "point {} lies in V_{i} but has replication {}",
                u + 1,
                replication[u]
            )));
        }
        if parts.len() <= i {
            parts.resize(i + 1, Vec::new());
        }
        parts[i].push(u);
    }
    if degree_sum != dd * v + a * (k - 1) {
        return Err(Error::Inconsistent(format!(
            "degree sum {degree_sum} != dv + a(k-1) = {}",
            dd * v + a * (k - 1)
        )));
    }
    let outside_v0 = d.v() - parts.first().map_or(0, Vec::len);
    if outside_v0 as i64 > a {
        return Err(Error::Inconsistent(format!(
            "{outside_v0} points outside V_0 exceed a = {a}"
        )));
    }
    if parts.is_empty() {
        parts.push(Vec::new());
    }
    Ok(Bookkeeping {
        side,
        b,
        r,
        d: dd,
        a,
        parts,
    })
}
