use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::bounds::Side;
use crate::{Error, Result};

use super::matrix::{rank_exact, RationalMatrix};
use super::structure::{classify, excess_or_leave};
use super::Design;

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// The Gram matrix `M*(D) = X·Xᵀ`, built from the incidence matrix and
/// cross-checked against `R ± A(G) + λJ`.
pub fn gram(d: &Design) -> Result<RationalMatrix> {
    let side = classify(d).side()?;
    let v = d.v();

    let x = d.incidence();
    let mut direct = RationalMatrix::zeros(v);
    for u in 0..v {
        for w in 0..v {
            let dot: i64 = x[u].iter().zip(&x[w]).map(|(&a, &b)| (a * b) as i64).sum();
            direct.set(u, w, int(dot));
        }
    }

    let g = excess_or_leave(d)?;
    let r = d.replication();
    let lambda = d.lambda() as i64;
    let sign = match side {
        Side::Cover => 1,
        Side::Pack => -1,
    };
    let mut structural = RationalMatrix::zeros(v);
    for u in 0..v {
        for w in 0..v {
            let entry = if u == w {
                r[u] as i64
            } else {
                sign * g.mu(u, w) as i64 + lambda
            };
            structural.set(u, w, int(entry));
        }
    }

    if direct != structural {
        return Err(Error::Inconsistent(
            "X·Xᵀ differs from R ± A(G) + λJ".into(),
        ));
    }
    Ok(direct)
}

/// `M(D) = R ± A(G)`: `M*(D)` without the `λJ` term.
pub fn reduced_gram(d: &Design) -> Result<RationalMatrix> {
    let mut m = gram(d)?;
    let lambda = int(d.lambda() as i64);
    for u in 0..m.dim() {
        for w in 0..m.dim() {
            let x = m.get(u, w) - &lambda;
            m.set(u, w, x);
        }
    }
    Ok(m)
}

/// Rank lower bound on the block count: `b ≥ rank(X) ≥ rank(M*(D))`.
pub fn bose_lower(d: &Design) -> Result<usize> {
    Ok(rank_exact(&gram(d)?))
}

/// Checks the weighted dominance premise on a point subset `S` with positive
/// weights `c` (indexed like `S`): for each `u ∈ S`,
/// `Σ_{w ∈ S∖u} c_w·μ(uw) < c_u·(r_D(u) − λ)`.
///
/// When the premise holds the design must have at least `|S|` blocks; a
/// design that violates this yields [`Error::SoundnessViolation`].
pub fn certificate_check(d: &Design, subset: &[usize], c: &[BigRational]) -> Result<bool> {
    if subset.len() != c.len() {
        return Err(Error::DimensionMismatch {
            expected: subset.len(),
            got: c.len(),
        });
    }
    let mut seen = vec![false; d.v()];
    for &u in subset {
        if u >= d.v() {
            return Err(Error::InvalidArgument(format!("point {} outside design", u + 1)));
        }
        if std::mem::replace(&mut seen[u], true) {
            return Err(Error::InvalidArgument(format!("point {} repeated in S", u + 1)));
        }
    }
    if let Some(bad) = c.iter().find(|x| !x.is_positive()) {
        return Err(Error::InvalidArgument(format!("weight {bad} is not positive")));
    }

    let g = excess_or_leave(d)?;
    let r = d.replication();
    let lambda = d.lambda() as i64;
    let holds = subset.iter().zip(c).all(|(&u, cu)| {
        let lhs: BigRational = subset
            .iter()
            .zip(c)
            .filter(|(&w, _)| w != u)
            .map(|(&w, cw)| cw * int(g.mu(u, w) as i64))
            .fold(BigRational::zero(), |acc, x| acc + x);
        lhs < cu * int(r[u] as i64 - lambda)
    });
    if holds && d.len() < subset.len() {
        return Err(Error::SoundnessViolation(format!(
            "certificate premise holds on |S| = {} but the design has only {} blocks",
            subset.len(),
            d.len()
        )));
    }
    Ok(holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::fixtures::{blocks, fano};
    use crate::designs::matrix::{dominance_pd, sylvester_pd};
    use crate::designs::structure::bookkeeping;

    fn ones(n: usize) -> Vec<BigRational> {
        vec![int(1); n]
    }

    #[test]
    fn fano_gram_is_2i_plus_j() {
        let m = gram(&fano()).unwrap();
        for u in 0..7 {
            for w in 0..7 {
                assert_eq!(m.get(u, w), &int(if u == w { 3 } else { 1 }));
            }
        }
        assert_eq!(bose_lower(&fano()).unwrap(), 7);
    }

    #[test]
    fn gram_diagonal_is_replication() {
        let d = Design::new(6, 3, 1, blocks(&[&[1, 2, 3], &[3, 4, 5], &[1, 5, 6]])).unwrap();
        let m = gram(&d).unwrap();
        let r = d.replication();
        for u in 0..6 {
            assert_eq!(m.get(u, u), &int(r[u] as i64));
        }
    }

    #[test]
    fn single_block_packing_gram() {
        let d = Design::new(5, 3, 1, blocks(&[&[1, 2, 3]])).unwrap();
        let m = reduced_gram(&d).unwrap();
        // R = diag(0,0,0,−1,−1); −A(G) has −1 off the {1,2,3} triangle.
        assert_eq!(m.get(0, 0), &int(0));
        assert_eq!(m.get(3, 3), &int(-1));
        assert_eq!(m.get(0, 1), &int(0));
        assert_eq!(m.get(0, 3), &int(-1));
        let g = gram(&d).unwrap();
        assert_eq!(g.get(0, 0), &int(1));
        assert_eq!(g.get(3, 3), &int(0));
        assert_eq!(bose_lower(&d).unwrap(), 1);
    }

    #[test]
    fn empty_packing_has_zero_rank() {
        let d = Design::new(4, 3, 1, vec![]).unwrap();
        assert_eq!(bose_lower(&d).unwrap(), 0);
    }

    #[test]
    fn exact_design_certificate() {
        // Empty excess: premise reduces to 0 < r − λ.
        let all: Vec<usize> = (0..7).collect();
        assert!(certificate_check(&fano(), &all, &ones(7)).unwrap());
        let d = Design::new(4, 2, 1, blocks(&[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4], &[3, 4]])).unwrap();
        let all: Vec<usize> = (0..4).collect();
        // r = 3, λ = 1 → 0 < 2 holds.
        assert!(certificate_check(&d, &all, &ones(4)).unwrap());
    }

    #[test]
    fn packing_certificate_literal() {
        // r = (2,1,1,1,1); the leave is the 4-cycle 2–4–3–5–2.
        // At u = 2: Σ μ = 2 < r − λ = 0 fails.
        let d = Design::new(5, 3, 1, blocks(&[&[1, 2, 3], &[1, 4, 5]])).unwrap();
        assert!(!certificate_check(&d, &[1, 2, 3, 4], &ones(4)).unwrap());
        // S = {1}: 0 < 2 − 1 holds and 2 ≥ 1.
        assert!(certificate_check(&d, &[0], &ones(1)).unwrap());
    }

    #[test]
    fn covering_v0_certificate() {
        // S = V_0 with unit weights.
        let cov = Design::new(
            5,
            3,
            1,
            blocks(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4], &[1, 2, 5], &[3, 4, 5]]),
        )
        .unwrap();
        let bk = bookkeeping(&cov).unwrap();
        let s = bk.part(0).to_vec();
        assert!(certificate_check(&cov, &s, &ones(s.len())).unwrap());
    }

    #[test]
    fn certificate_matches_submatrix_dominance() {
        let d = Design::new(5, 3, 1, blocks(&[&[1, 2, 3], &[1, 4, 5], &[2, 4, 5]])).unwrap();
        // {4,5} twice and {1,6} never: neither side.
        assert!(reduced_gram(&d).is_err());
        let d = Design::new(6, 3, 1, blocks(&[&[1, 2, 3], &[1, 4, 5], &[2, 4, 6], &[3, 5, 6]])).unwrap();
        let m = reduced_gram(&d).unwrap();
        for s in [vec![0usize, 1, 2], vec![0, 5], vec![1, 3, 4]] {
            let sub = m.principal_submatrix(&s);
            let premise = certificate_check(&d, &s, &ones(s.len())).unwrap();
            assert_eq!(premise, dominance_pd(&sub, &ones(s.len())).unwrap());
            if premise {
                assert!(sylvester_pd(&sub));
            }
        }
    }

    #[test]
    fn certificate_errors() {
        let d = fano();
        assert!(matches!(
            certificate_check(&d, &[0, 1], &ones(1)),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(certificate_check(&d, &[0, 0], &ones(2)).is_err());
        assert!(certificate_check(&d, &[9], &ones(1)).is_err());
        assert!(certificate_check(&d, &[0], &[int(0)]).is_err());
        assert!(certificate_check(&d, &[], &[]).unwrap());
    }

    #[test]
    fn lambda_two_exact_design() {
        // r = 3, λ = 2: premise 0 < 1 holds on all four points, b = 4.
        let d = Design::new(4, 3, 2, blocks(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])).unwrap();
        let all: Vec<usize> = (0..4).collect();
        assert!(certificate_check(&d, &all, &ones(4)).unwrap());
    }
}
