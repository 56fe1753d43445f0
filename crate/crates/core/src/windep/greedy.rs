use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::graph::{check_subset, WeightedGraph};
use crate::{Error, Result};

fn int(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// The guarantee function
/// `f_m(x) = 1 − x/(2m)` for `x ≤ m` and `(m+1)/(2x+2)` for `x ≥ m`.
///
/// Panics if `m == 0` or `x < 0`.
pub fn f_m(m: u64, x: &BigRational) -> BigRational {
    assert!(m >= 1, "f_m needs m ≥ 1");
    assert!(!x.is_negative(), "f_m is defined on x ≥ 0");
    let mq = int(m);
    if *x <= mq {
        BigRational::one() - x / (int(2) * mq)
    } else {
        (mq + BigRational::one()) / (int(2) * x + int(2))
    }
}

/// m-MAX with the deterministic tie-break: among vertices of maximum
/// remaining weight, delete the one with the smallest index.
pub fn m_max(g: &WeightedGraph, m: u64) -> Vec<usize> {
    m_max_by(g, m, |_| 0)
}

/// m-MAX where `choose` picks, from the (ascending) list of maximum-weight
/// vertices, the position of the one to delete next. Returns the surviving
/// vertices in ascending order.
pub fn m_max_by(g: &WeightedGraph, m: u64, mut choose: impl FnMut(&[usize]) -> usize) -> Vec<usize> {
    let mq = int(m);
    let mut alive = vec![true; g.len()];
    let mut weight = g.vertex_weights();
    loop {
        let Some(top) = (0..g.len()).filter(|&u| alive[u]).map(|u| &weight[u]).max().cloned() else {
            return Vec::new();
        };
        if top < mq {
            return (0..g.len()).filter(|&u| alive[u]).collect();
        }
        let ties: Vec<usize> = (0..g.len()).filter(|&u| alive[u] && weight[u] == top).collect();
        let w = ties[choose(&ties)];
        alive[w] = false;
        for u in (0..g.len()).filter(|&u| alive[u]) {
            let x = &weight[u] - g.weight(u, w);
            weight[u] = x;
        }
    }
}

/// Every set m-MAX can return, over all tie-break choices. Limited to 64
/// vertices.
pub fn m_max_outcomes(g: &WeightedGraph, m: u64) -> Result<BTreeSet<Vec<usize>>> {
    let n = g.len();
    if n > 64 {
        return Err(Error::InvalidArgument(format!(
            "outcome enumeration is limited to 64 vertices, got {n}"
        )));
    }
    let mq = int(m);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut seen = HashSet::new();
    let mut stack = vec![full];
    let mut out = BTreeSet::new();
    while let Some(mask) = stack.pop() {
        if !seen.insert(mask) {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&u| mask >> u & 1 == 1).collect();
        let weights: Vec<BigRational> = members.iter().map(|&u| g.weight_within(u, &members)).collect();
        match weights.iter().max() {
            Some(top) if *top >= mq => {
                for (i, &u) in members.iter().enumerate() {
                    if weights[i] == *top {
                        stack.push(mask & !(1u64 << u));
                    }
                }
            }
            _ => {
                out.insert(members);
            }
        }
    }
    Ok(out)
}

/// Checks the edge hypothesis of the Caro–Tuza guarantee: every edge of
/// positive weight joining two vertices of weight at least `m` has weight at
/// least 1. Zero-weight pairs are non-edges.
pub fn check_hypothesis(g: &WeightedGraph, m: u64) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let mq = int(m);
    let heavy: Vec<usize> = g
        .vertex_weights()
        .iter()
        .enumerate()
        .filter(|(_, w)| **w >= mq)
        .map(|(u, _)| u)
        .collect();
    for (i, &u) in heavy.iter().enumerate() {
        for &w in &heavy[i + 1..] {
            let x = g.weight(u, w);
            if x.is_positive() && *x < BigRational::one() {
                return Err(Error::HypothesisViolation(format!(
                    "edge {}-{} of weight {x} joins two vertices of weight ≥ {m}",
                    g.label(u),
                    g.label(w)
                )));
            }
        }
    }
    Ok(())
}

fn ceil_usize(x: &BigRational) -> usize {
    x.ceil().to_integer().try_into().expect("bound fits in usize")
}

/// `⌈Σ_u f_m(wt(u))⌉`, a lower bound on the size of any m-MAX output.
pub fn caro_tuza_bound(g: &WeightedGraph, m: u64) -> Result<usize> {
    check_hypothesis(g, m)?;
    let total: BigRational = g.vertex_weights().iter().map(|w| f_m(m, w)).sum();
    Ok(ceil_usize(&total))
}

fn class_term(g: &WeightedGraph, m: u64, set: &[usize]) -> BigRational {
    let size = int(set.len() as u64);
    let mean = set.iter().map(|&u| g.vertex_weight(u)).sum::<BigRational>() / &size;
    size * f_m(m, &mean)
}

/// `⌈|S|·f_m(x)⌉` with `x` the mean weight in `G` of the vertices of `S`:
/// a lower bound on m-MAX applied to `G[S]`.
pub fn induced_bound_a(g: &WeightedGraph, m: u64, set: &[usize]) -> Result<usize> {
    check_hypothesis(g, m)?;
    if set.is_empty() {
        return Err(Error::InvalidArgument("S must be nonempty".into()));
    }
    check_subset(g.len(), set)?;
    Ok(ceil_usize(&class_term(g, m, set)))
}

/// `⌈|S_0|·f_m(x_0) + |S_1|·f_m(x_1)⌉` with class-wise mean weights in `G`:
/// a lower bound on m-MAX applied to `G[S_0 ∪ S_1]`.
pub fn induced_bound_b(g: &WeightedGraph, m: u64, s0: &[usize], s1: &[usize]) -> Result<usize> {
    check_hypothesis(g, m)?;
    if s0.is_empty() || s1.is_empty() {
        return Err(Error::InvalidArgument("both classes must be nonempty".into()));
    }
    let union: Vec<usize> = s0.iter().chain(s1).copied().collect();
    check_subset(g.len(), &union).map_err(|_| {
        Error::InvalidArgument("classes must be disjoint sets of vertices".into())
    })?;
    Ok(ceil_usize(&(class_term(g, m, s0) + class_term(g, m, s1))))
}
