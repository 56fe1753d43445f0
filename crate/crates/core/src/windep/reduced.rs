use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::graph::WeightedGraph;
use super::greedy::f_m;
use crate::bounds::Side;
use crate::designs::{bookkeeping, excess_or_leave, Design, Multigraph};
use crate::{Error, Result};

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// The c-reduced excess or leave: a weighted graph on `V_0 ∪ V_1` with
/// weight `μ` inside `V_1`, `c·μ` between the classes and 0 inside `V_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CReducedGraph {
    graph: WeightedGraph,
    v0: Vec<usize>,
    v1: Vec<usize>,
    c: BigRational,
}

impl CReducedGraph {
    /// Vertices are labelled by their original point; local order is
    /// ascending by label.
    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn v0(&self) -> &[usize] {
        &self.v0
    }

    pub fn v1(&self) -> &[usize] {
        &self.v1
    }

    pub fn c(&self) -> &BigRational {
        &self.c
    }

    /// Translates a set of local vertices into original points together with
    /// the certificate weights (`c` on `V_0`, 1 on `V_1`).
    pub fn certificate_weights(&self, set: &[usize]) -> (Vec<usize>, Vec<BigRational>) {
        set.iter()
            .map(|&i| {
                let p = self.graph.label(i);
                let w = if self.v0.binary_search(&p).is_ok() {
                    self.c.clone()
                } else {
                    BigRational::one()
                };
                (p, w)
            })
            .unzip()
    }
}

/// Builds the c-reduced graph of `g` for classes `V_0`, `V_1`. Requires
/// `d/n < c < 1`, where `n = r − λ`.
pub fn c_reduced(
    g: &Multigraph,
    v0: &[usize],
    v1: &[usize],
    c: &BigRational,
    d: i64,
    n: i64,
) -> Result<CReducedGraph> {
    if n < 1 || d < 0 {
        return Err(Error::OutOfDomain(format!("need n ≥ 1 and d ≥ 0, got n = {n}, d = {d}")));
    }
    let lo = BigRational::new(d.into(), n.into());
    if !(lo < *c && *c < BigRational::one()) {
        return Err(Error::OutOfDomain(format!("c = {c} is not in ({lo}, 1)")));
    }
    let points = g.vertex_count();
    let mut class = vec![None; points];
    for (cls, set) in [(0u8, v0), (1, v1)] {
        for &p in set {
            if p >= points {
                return Err(Error::InvalidArgument(format!("point {p} outside the multigraph")));
            }
            if class[p].replace(cls).is_some() {
                return Err(Error::InvalidArgument(format!(
                    "point {p} appears twice in V_0 ∪ V_1"
                )));
            }
        }
    }
    let labels: Vec<usize> = (0..points).filter(|&p| class[p].is_some()).collect();
    let mut graph = WeightedGraph::with_labels(labels.clone());
    for (i, &p) in labels.iter().enumerate() {
        for (j, &q) in labels.iter().enumerate().skip(i + 1) {
            let mu = int(g.mu(p, q) as i64);
            let x = match (class[p], class[q]) {
                (Some(1), Some(1)) => mu,
                (Some(0), Some(0)) => BigRational::zero(),
                _ => c * mu,
            };
            graph.set_weight(i, j, x)?;
        }
    }
    let mut v0 = v0.to_vec();
    let mut v1 = v1.to_vec();
    v0.sort_unstable();
    v1.sort_unstable();
    Ok(CReducedGraph {
        graph,
        v0,
        v1,
        c: c.clone(),
    })
}

/// The c-reduced excess or leave of a covering or packing, with the matching
/// independence parameter `m = r − λ ± 1` (`+` for coverings).
pub fn c_reduced_of(design: &Design, c: &BigRational) -> Result<(CReducedGraph, i64)> {
    let bk = bookkeeping(design)?;
    let n = bk.r - design.lambda() as i64;
    let g = excess_or_leave(design)?;
    let reduced = c_reduced(&g, bk.part(0), bk.part(1), c, bk.d, n)?;
    let m = match bk.side {
        Side::Cover => n + 1,
        Side::Pack => n - 1,
    };
    Ok((reduced, m))
}

/// Parameters of the lower-bound function `h` on the number of blocks of a
/// design with `v_0`, `v_1` points in the two lowest classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HParams {
    pub v0: i64,
    pub v1: i64,
    pub d: i64,
    pub k: i64,
    pub n: i64,
    pub m: i64,
}

impl HParams {
    fn check(&self) -> Result<()> {
        let HParams { v0, v1, d, k, n, m } = *self;
        if v0 < 0 || v1 < 0 || d < 0 || m < 1 || k < 1 || d >= n {
            return Err(Error::OutOfDomain(format!("invalid h parameters {self:?}")));
        }
        Ok(())
    }

    /// Upper end of the domain, `min(v_0·d, v_1·(d+k−1))`.
    pub fn domain_max(&self) -> i64 {
        (self.v0 * self.d).min(self.v1 * (self.d + self.k - 1))
    }

    fn check_point(&self, x: &BigRational) -> Result<()> {
        self.check()?;
        if x.is_negative() || *x > int(self.domain_max()) {
            return Err(Error::OutOfDomain(format!(
                "x = {x} outside [0, {}]",
                self.domain_max()
            )));
        }
        Ok(())
    }

    /// `h(x)` by its definition through `f_m`.
    pub fn h(&self, x: &BigRational) -> Result<BigRational> {
        self.check_point(x)?;
        let HParams { v0, v1, d, k, n, m } = *self;
        let m = m as u64;
        if x.is_zero() {
            return Ok(int(v0) + int(v1) * f_m(m, &int(d + k - 1)));
        }
        let first = int(d) * x / int(n * v0);
        let second = int(d + k - 1) - int(n - d) * x / int(n * v1);
        Ok(int(v0) * f_m(m, &first) + int(v1) * f_m(m, &second))
    }

    /// Branch point `z = n·v_1·(d+k−m−1)/(n−d)`.
    pub fn z(&self) -> BigRational {
        let HParams { v1, d, k, n, m, .. } = *self;
        BigRational::new((n * v1 * (d + k - m - 1)).into(), (n - d).into())
    }

    pub fn h1(&self, x: &BigRational) -> BigRational {
        let HParams { v0, v1, d, k, n, m } = *self;
        int(v0) + int(v1) * (BigRational::one() - BigRational::new((d + k - 1).into(), (2 * m).into()))
            + int(n - 2 * d) * x / int(2 * m * n)
    }

    pub fn h2(&self, x: &BigRational) -> BigRational {
        let HParams { v0, v1, d, k, n, m } = *self;
        int(v0) + int(n * v1 * v1 * (m + 1)) / (int(2 * n * v1 * (d + k)) - int(2 * (n - d)) * x)
            - int(d) * x / int(2 * m * n)
    }

    pub fn h3(&self) -> BigRational {
        let HParams { v0, v1, d, k, m, .. } = *self;
        int(v0) + int(v1) * BigRational::new((m + 1).into(), (2 * (d + k)).into())
    }

    /// `h(x)` through the closed-form pieces `h_1`, `h_2`, `h_3`. Requires
    /// `d ≤ m ≤ k − 1`.
    pub fn h_piecewise(&self, x: &BigRational) -> Result<BigRational> {
        self.check_point(x)?;
        if self.d > self.m || self.k < self.m + 1 {
            return Err(Error::OutOfDomain(format!(
                "closed forms need d ≤ m ≤ k − 1, got {self:?}"
            )));
        }
        Ok(if x.is_zero() {
            self.h3()
        } else if *x >= self.z() {
            self.h1(x)
        } else {
            self.h2(x)
        })
    }
}

/// `h(x)`; see [`HParams::h`].
pub fn h_value(v0: i64, v1: i64, d: i64, k: i64, n: i64, m: i64, x: &BigRational) -> Result<BigRational> {
    HParams { v0, v1, d, k, n, m }.h(x)
}
