use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::field::prime_power;
use super::plane::{blowup, restrict_covering};
use crate::bounds::{best_bounds, schonheim, BoundName, ParamSet};
use crate::designs::classify;
use crate::{Error, Result};

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A run of `v` for which `C(v, sq) = q² + q`: all integers with
/// `sq² − q + 1 − z < v ≤ sq²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactRange {
    pub q: u64,
    pub s: u64,
    pub z: BigRational,
    pub v_lo: u64,
    pub v_hi: u64,
}

/// Computes the range for an affine plane of order `q` blown up by `s`.
/// Requires `s ≥ 2q + 1`.
pub fn exact_range(q: u64, s: u64) -> Result<ExactRange> {
    if q < 2 {
        return Err(Error::OutOfDomain(format!("q = {q} must be at least 2")));
    }
    prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if s < 2 * q + 1 {
        return Err(Error::OutOfDomain(format!("s = {s} is below 2q + 1 = {}", 2 * q + 1)));
    }
    let (qi, si) = (q as i64, s as i64);
    let z = if s <= 4 * q + 1 {
        let second = BigRational::new((qi * (si - 2 * qi - 1) + 2).into(), (qi + 1).into());
        second.min(int(qi - 1))
    } else {
        BigRational::new(
            (qi * qi * (si - qi - 2) - qi + 2).into(),
            (3 * qi * qi + 3 * qi - 2).into(),
        )
    };
    let v_hi = s * q * q;
    let edge = int(v_hi as i64 - qi + 1) - &z;
    let v_lo = (edge.floor().to_integer() + BigInt::from(1))
        .to_u64()
        .expect("range start is positive");
    Ok(ExactRange { q, s, z, v_lo, v_hi })
}

impl ExactRange {
    pub fn k(&self) -> u64 {
        self.s * self.q
    }

    /// The common covering number `q² + q`.
    pub fn covering_number(&self) -> u64 {
        self.q * self.q + self.q
    }

    pub fn contains(&self, v: u64) -> bool {
        (self.v_lo..=self.v_hi).contains(&v)
    }

    pub fn values(&self) -> std::ops::RangeInclusive<u64> {
        self.v_lo..=self.v_hi
    }

    /// Values in the range whose covering number is not already forced by
    /// the Schönheim bound.
    pub fn beyond_schonheim(&self) -> Vec<u64> {
        let target = self.covering_number() as i64;
        self.values()
            .filter(|&v| {
                let p = ParamSet::new(v as i64, self.k() as i64, 1).expect("v > k in range");
                schonheim(&p).value < target
            })
            .collect()
    }
}

/// Every range with block size `k` and plane order `q ≥ min_q` (`q` a prime
/// power dividing `k` with `k/q ≥ 2q + 1`), ordered by `q`.
pub fn ranges_for_block_size(k: u64, min_q: u64) -> Vec<ExactRange> {
    (min_q.max(2)..=k)
        .filter(|&q| k % q == 0 && prime_power(q).is_some() && k / q >= 2 * q + 1)
        .map(|q| exact_range(q, k / q).expect("parameters checked"))
        .collect()
}

/// Evidence that every `v` in a range has `C(v, sq) = q² + q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangeCertificate {
    /// Best catalog lower bound at `v_lo`, and the bound achieving it.
    pub lower_at_lo: i64,
    pub lower_source: BoundName,
    /// Blocks in the restricted blow-up covering on `v_lo` points.
    pub witness_blocks: usize,
    /// Best catalog lower bound at each `v` of the range, in order.
    pub direct_lower: Vec<i64>,
}

impl RangeCertificate {
    /// Number of values whose own catalog lower bound already reaches
    /// `q² + q`, without appealing to monotonicity.
    pub fn directly_certified(&self, target: i64) -> usize {
        self.direct_lower.iter().filter(|&&b| b >= target).count()
    }
}

/// Checks a range end to end: the catalog lower bound at `v_lo` reaches
/// `q² + q`, the restricted blow-up on `v_lo` points is a covering with
/// `q² + q` blocks, and no catalog bound anywhere in the range exceeds the
/// construction. Monotonicity of `C(·, k)` then fixes every value.
pub fn certify_exact_range(range: &ExactRange) -> Result<RangeCertificate> {
    let target = range.covering_number() as i64;
    let k = range.k() as i64;
    let mut direct_lower = Vec::new();
    for v in range.values() {
        let report = best_bounds(&ParamSet::new(v as i64, k, 1)?);
        if report.cover_best > target {
            return Err(Error::SoundnessViolation(format!(
                "lower bound {} ({}) at v = {v} exceeds the {target}-block construction",
                report.cover_best,
                report.cover_source.as_str()
            )));
        }
        direct_lower.push(report.cover_best);
    }
    let lo = best_bounds(&ParamSet::new(range.v_lo as i64, k, 1)?);
    if lo.cover_best < target {
        return Err(Error::Inconsistent(format!(
            "best lower bound at v = {} is {}, short of {target}",
            range.v_lo, lo.cover_best
        )));
    }
    let full = blowup(range.q, range.s as usize)?;
    let witness = restrict_covering(&full, range.v_lo as usize)?;
    if !classify(&witness).is_covering() || witness.len() as i64 != target {
        return Err(Error::Inconsistent("restricted blow-up is not a matching covering".into()));
    }
    Ok(RangeCertificate {
        lower_at_lo: lo.cover_best,
        lower_source: lo.cover_source,
        witness_blocks: witness.len(),
        direct_lower,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn range_examples() {
        let r = exact_range(4, 9).unwrap();
        assert_eq!((r.z.clone(), r.v_lo, r.v_hi), (q(2, 5), 141, 144));
        assert_eq!(r.beyond_schonheim(), vec![141]);

        let r = exact_range(4, 10).unwrap();
        assert_eq!(r.z, q(6, 5));
        assert_eq!(r.beyond_schonheim(), vec![156, 157]);

        let r = exact_range(2, 5).unwrap();
        assert_eq!((r.z.clone(), r.v_lo, r.v_hi), (q(2, 3), 19, 20));
    }

    #[test]
    fn second_case_formula() {
        // s = 4q + 2 = 18 for q = 4: z = (16·12 − 2)/(48 + 12 − 2) = 190/58.
        let r = exact_range(4, 18).unwrap();
        assert_eq!(r.z, q(95, 29));
        assert!(r.z > q(3, 1));
    }

    #[test]
    fn integral_z_excludes_endpoint() {
        // z = min(q − 1, …) = 3 for q = 4 once s ≥ 12: the strict inequality
        // leaves out v = sq² − q + 1 − z.
        let r = exact_range(4, 13).unwrap();
        assert_eq!(r.z, q(3, 1));
        assert_eq!(r.v_lo, 13 * 16 - 4 + 1 - 3 + 1);
    }

    #[test]
    fn domain_errors() {
        assert!(exact_range(4, 8).is_err());
        assert!(exact_range(6, 20).is_err());
        assert!(exact_range(1, 5).is_err());
    }

    #[test]
    fn z_is_positive() {
        for qq in [2u64, 3, 4, 5, 7, 8, 9] {
            for s in 2 * qq + 1..=6 * qq {
                assert!(exact_range(qq, s).unwrap().z > q(0, 1), "q={qq} s={s}");
            }
        }
    }

    #[test]
    fn ranges_for_36() {
        let rs = ranges_for_block_size(36, 4);
        assert_eq!(rs.len(), 1);
        assert_eq!((rs[0].q, rs[0].s), (4, 9));
        assert!(ranges_for_block_size(35, 4).is_empty());
        let rs = ranges_for_block_size(105, 4);
        assert_eq!(rs.iter().map(|r| r.q).collect::<Vec<_>>(), vec![5, 7]);
    }

    #[test]
    fn certify_small_ranges() {
        for (qq, s) in [(4u64, 9u64), (4, 10), (4, 11), (5, 11), (5, 12), (5, 13)] {
            let r = exact_range(qq, s).unwrap();
            let c = certify_exact_range(&r).unwrap();
            assert_eq!(c.witness_blocks as u64, r.covering_number());
            assert_eq!(c.lower_at_lo, r.covering_number() as i64);
        }
    }
}
