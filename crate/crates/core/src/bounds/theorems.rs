use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::params::{ParamSet, Side};
use super::value::BoundValue;
use crate::{Error, Result};

/// An exact bound value together with its integer rounding (ceiling for
/// coverings, floor for packings).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluated {
    pub value: BoundValue,
    pub rounded: i64,
}

impl Evaluated {
    fn round(value: BoundValue, side: Side) -> Self {
        let rounded = match side {
            Side::Cover => value.ceil(),
            Side::Pack => value.floor(),
        };
        Evaluated {
            rounded: to_i64(&rounded),
            value,
        }
    }
}

fn to_i64(n: &BigInt) -> i64 {
    n.to_i64().expect("bound value exceeds i64")
}

fn q(num: i64, den: i64) -> BoundValue {
    BoundValue::ratio(num, den)
}

fn int(n: i64) -> BoundValue {
    BoundValue::from_integer(n)
}

fn check_order(alpha: &BoundValue, beta: &BoundValue) -> Result<()> {
    if beta.is_negative() {
        return Err(Error::InvalidArgument(format!("beta = {beta} is negative")));
    }
    if alpha < beta {
        return Err(Error::InvalidArgument(format!(
            "alpha = {alpha} is smaller than beta = {beta}"
        )));
    }
    Ok(())
}

/// `CB(α, β) = (r·v·(α−β) + α·v) / (k·(α−β) + 1)` with `r = r_cov`.
pub fn cb_value(p: &ParamSet, alpha: &BoundValue, beta: &BoundValue) -> Result<BoundValue> {
    check_order(alpha, beta)?;
    let (v, k, r) = (int(p.v()), int(p.k()), int(p.r_cov()));
    let diff = alpha - beta;
    let num = &(&(&r * &v) * &diff) + &(alpha * &v);
    let den = &(&k * &diff) + &BoundValue::one();
    Ok(&num / &den)
}

/// `DB(α, β) = (r·v·(α−β) − α·v) / (k·(α−β) − 1)` with `r = r_pack`; requires
/// `α > β + 1/k`.
pub fn db_value(p: &ParamSet, alpha: &BoundValue, beta: &BoundValue) -> Result<BoundValue> {
    check_order(alpha, beta)?;
    let (v, k, r) = (int(p.v()), int(p.k()), int(p.r_pack()));
    let diff = alpha - beta;
    let den = &(&k * &diff) - &BoundValue::one();
    if !den.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "DB requires alpha > beta + 1/k (alpha = {alpha}, beta = {beta}, k = {})",
            p.k()
        )));
    }
    let num = &(&(&r * &v) * &diff) - &(alpha * &v);
    Ok(&num / &den)
}

fn cb(p: &ParamSet, alpha: &BoundValue, beta: &BoundValue) -> Evaluated {
    let value = cb_value(p, alpha, beta).expect("theorem side conditions guarantee alpha >= beta >= 0");
    Evaluated::round(value, Side::Cover)
}

fn db(p: &ParamSet, alpha: &BoundValue, beta: &BoundValue) -> Evaluated {
    let value = db_value(p, alpha, beta).expect("theorem side conditions guarantee alpha > beta + 1/k");
    Evaluated::round(value, Side::Pack)
}

/// `⌈v(r+1)/(k+1)⌉` when `d < r − λ` (covering decomposition).
pub fn thm_1_1(p: &ParamSet) -> Option<Evaluated> {
    (p.d_cov() < p.n_cov()).then(|| {
        Evaluated::round(q(p.v() * (p.r_cov() + 1), p.k() + 1), Side::Cover)
    })
}

/// `⌊v(r−1)/(k−1)⌋` when `d < r − λ` (packing decomposition).
pub fn thm_1_2(p: &ParamSet) -> Option<Evaluated> {
    (p.d_pack() < p.n_pack()).then(|| {
        Evaluated::round(q(p.v() * (p.r_pack() - 1), p.k() - 1), Side::Pack)
    })
}

/// `⌈CB((n+1)/(2d+2), (n+1)/(2(d+k)))⌉` when `r < k` and `d ≥ n`.
pub fn thm_5_3(p: &ParamSet) -> Option<Evaluated> {
    let (r, d, n) = p.rdn(Side::Cover);
    let k = p.k();
    if !(r < k && d >= n) {
        return None;
    }
    Some(cb(p, &q(n + 1, 2 * d + 2), &q(n + 1, 2 * (d + k))))
}

/// The two parts of the packing bound for `d ≥ r − λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thm54 {
    /// `⌊DB((n+1)/(2d+2), 0)⌋`, when `k(n+1) > 2d+2`.
    pub a: Option<Evaluated>,
    /// `⌊DB(n/(2d+2), n/(2(d+k)))⌋`, when `nk(k−1) > 2(d+1)(d+k)`.
    pub b: Option<Evaluated>,
}

/// Packing bounds for `r < k`, `d ≥ n`. Part (a) runs m-MAX with `m = n` and
/// part (b) with `m = n − 1`; each part is gated on its `m` being positive.
pub fn thm_5_4(p: &ParamSet) -> Option<Thm54> {
    let (r, d, n) = p.rdn(Side::Pack);
    let k = p.k();
    if !(r < k && d >= n && n >= 1) {
        return None;
    }
    let a = (k * (n + 1) > 2 * d + 2).then(|| db(p, &q(n + 1, 2 * d + 2), &BoundValue::zero()));
    let gate_b = (n as i128) * (k as i128) * (k as i128 - 1)
        > 2 * (d as i128 + 1) * (d as i128 + k as i128);
    let b = (n >= 2 && gate_b).then(|| db(p, &q(n, 2 * d + 2), &q(n, 2 * (d + k))));
    Some(Thm54 { a, b })
}

/// The three parts of the bounds for `d < r − λ` built on the c-reduced
/// excess/leave.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thm6x {
    pub a: Evaluated,
    pub b: Option<Evaluated>,
    pub c: Option<Evaluated>,
}

impl Thm6x {
    /// Best of the applicable parts (max for coverings, min for packings).
    pub fn best(&self, side: Side) -> i64 {
        let parts = [Some(&self.a), self.b.as_ref(), self.c.as_ref()];
        let values = parts.into_iter().flatten().map(|e| e.rounded);
        match side {
            Side::Cover => values.max(),
            Side::Pack => values.min(),
        }
        .expect("part (a) is always present")
    }
}

/// The `(α, β)` pairs for parts (a), (b), (c) with independence parameter `m`
/// (`m = n+1` for coverings, `m = n−1` for packings).
pub(crate) struct TrickyPairs {
    pub a: (BoundValue, BoundValue),
    pub b: Option<(BoundValue, BoundValue)>,
    pub c: Option<(BoundValue, BoundValue)>,
}

pub(crate) fn tricky_pairs(n: i64, d: i64, k: i64, m: i64) -> TrickyPairs {
    let (n_, d_, k_, m_) = (n as i128, d as i128, k as i128, m as i128);
    let a = (
        &BoundValue::one() - &q(d * d, 2 * m * n),
        q(m + 1, 2 * (d + k)),
    );
    let b = (2 * d >= n && d_ * (d_ + k_ - 1) < m_ * n_).then(|| {
        (
            BoundValue::one(),
            &BoundValue::one() - &q(d * (d + k - 1), m * n),
        )
    });
    let gate_c = 4 * m_ * (m_ + 1) * (n_ - d_) > d_ * (d_ + k_) * (d_ + k_);
    let c = (d >= 1 && 2 * d < n && gate_c).then(|| {
        let radicand = BigRational::new((d * (m + 1)).into(), (m * (n - d)).into());
        let beta = &BoundValue::sqrt_of(&radicand) - &q(d * (d + k), 2 * m * (n - d));
        (BoundValue::one(), beta)
    });
    TrickyPairs { a, b, c }
}

/// Covering bounds for `r < k`, `d < n` (independence parameter `m = n+1`).
/// Part (c) is treated as inapplicable when `d = 0`.
pub fn thm_6_2(p: &ParamSet) -> Option<Thm6x> {
    let (r, d, n) = p.rdn(Side::Cover);
    let k = p.k();
    if !(r < k && d < n) {
        return None;
    }
    let pairs = tricky_pairs(n, d, k, n + 1);
    Some(Thm6x {
        a: cb(p, &pairs.a.0, &pairs.a.1),
        b: pairs.b.map(|(al, be)| cb(p, &al, &be)),
        c: pairs.c.map(|(al, be)| cb(p, &al, &be)),
    })
}

/// Packing bounds for `r < k`, `d < n` (independence parameter `m = n−1`,
/// so `n ≥ 2` is required). Part (c) is treated as inapplicable when `d = 0`.
pub fn thm_6_3(p: &ParamSet) -> Option<Thm6x> {
    let (r, d, n) = p.rdn(Side::Pack);
    let k = p.k();
    if !(r < k && d < n && n >= 2) {
        return None;
    }
    let pairs = tricky_pairs(n, d, k, n - 1);
    Some(Thm6x {
        a: db(p, &pairs.a.0, &pairs.a.1),
        b: pairs.b.map(|(al, be)| db(p, &al, &be)),
        c: pairs.c.map(|(al, be)| db(p, &al, &be)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::classical::{johnson1, schonheim};

    fn p(v: i64, k: i64, l: i64) -> ParamSet {
        ParamSet::new(v, k, l).unwrap()
    }

    #[test]
    fn cb_examples() {
        let v = cb_value(&p(17, 5, 1), &q(1, 1), &q(0, 1)).unwrap();
        assert_eq!(v, q(85, 6));
        assert_eq!(v.ceil(), 15.into());

        // α = β collapses to αv
        let v = cb_value(&p(17, 5, 1), &q(2, 3), &q(2, 3)).unwrap();
        assert_eq!(v, q(34, 3));

        // (34,10,1): r = 4; α−β = 1/2 − 2/13 = 9/26
        // (4·34·9/26 + 17) / (90/26 + 1) = (1224 + 442)/116 = 1666/116
        let v = cb_value(&p(34, 10, 1), &q(1, 2), &q(2, 13)).unwrap();
        assert_eq!(v, q(1666, 116));
        assert_eq!(v.ceil(), 15.into());

        assert!(cb_value(&p(17, 5, 1), &q(0, 1), &q(1, 2)).is_err());
        assert!(cb_value(&p(17, 5, 1), &q(1, 1), &q(-1, 2)).is_err());
    }

    #[test]
    fn db_examples() {
        // α=1, β=0 → v(r−1)/(k−1)
        let ps = p(25, 7, 2);
        let v = db_value(&ps, &q(1, 1), &q(0, 1)).unwrap();
        assert_eq!(v, q(25 * (ps.r_pack() - 1), 6));

        let v = db_value(&p(34, 10, 1), &q(1, 1), &q(0, 1)).unwrap();
        assert_eq!(v, q(68, 9));
        assert_eq!(v.floor(), 7.into());

        // α = 1/2 with k = 2·… : α ≤ β + 1/k fails for k = 3 when α−β = 1/3
        assert!(db_value(&p(10, 3, 1), &q(1, 3), &q(0, 1)).is_err());
        assert!(db_value(&p(10, 4, 1), &q(1, 4), &q(0, 1)).is_err());
    }

    #[test]
    fn thm_1_1_examples() {
        assert_eq!(thm_1_1(&p(17, 5, 1)).unwrap().rounded, 15);
        assert_eq!(thm_1_1(&p(28, 8, 1)).unwrap().rounded, 16);
        assert_eq!(schonheim(&p(28, 8, 1)).value, 14);
        assert!(thm_1_1(&p(34, 10, 1)).is_none());
    }

    #[test]
    fn thm_1_2_examples() {
        assert_eq!(thm_1_2(&p(25, 7, 2)).unwrap().rounded, 29);
        assert_eq!(thm_1_2(&p(7, 3, 1)).unwrap().rounded, 7);
        assert!(thm_1_2(&p(34, 10, 1)).is_none());
    }

    #[test]
    fn thm_5_3_examples() {
        assert_eq!(thm_5_3(&p(34, 10, 1)).unwrap().rounded, 15);
        let s = schonheim(&p(41, 12, 1)).value;
        assert!(thm_5_3(&p(41, 12, 1)).unwrap().rounded > s);
        let s = schonheim(&p(42, 12, 1)).value;
        assert!(thm_5_3(&p(42, 12, 1)).unwrap().rounded >= s + 2);
        assert!(thm_5_3(&p(17, 5, 1)).is_none());
    }

    #[test]
    fn thm_5_4_examples() {
        // (34,10,1): r=3, d=6, n=2. (a): DB(3/14, 0) = (3·34·3/14 − 3·34/14)/(30/14 − 1)
        //          = (306 − 102)/16 = 51/4
        let t = thm_5_4(&p(34, 10, 1)).unwrap();
        let a = t.a.unwrap();
        assert_eq!(a.value, q(51, 4));
        assert_eq!(a.rounded, 12);
        // (b) gate: 2·10·9 = 180 > 2·7·16 = 224 fails
        assert!(t.b.is_none());

        assert!(thm_5_4(&p(17, 5, 1)).is_none());
    }

    #[test]
    fn thm_5_4_part_b_strict_gate() {
        // Search for a parameter set with nk(k−1) = 2(d+1)(d+k) exactly.
        let mut found = false;
        for lambda in 1..4 {
            for k in 3..60 {
                for v in k + 1..k * k {
                    let ps = p(v, k, lambda);
                    let (r, d, n) = ps.rdn(Side::Pack);
                    if r < k && d >= n && n >= 2 && n * k * (k - 1) == 2 * (d + 1) * (d + k) {
                        found = true;
                        assert!(thm_5_4(&ps).unwrap().b.is_none());
                    }
                }
            }
        }
        assert!(found, "no equality instance in range");
    }

    #[test]
    fn thm_6_2_examples() {
        let t = thm_6_2(&p(30, 7, 1)).unwrap();
        assert_eq!(t.a.rounded, 23);
        let c = t.c.unwrap();
        assert_eq!(c.rounded, 24);
        assert!(!c.value.is_rational());
        assert_eq!(thm_1_1(&p(30, 7, 1)).unwrap().rounded, 23);

        let t = thm_6_2(&p(21, 6, 1)).unwrap();
        assert!(t.best(Side::Cover) > thm_1_1(&p(21, 6, 1)).unwrap().rounded);
    }

    #[test]
    fn thm_6_2_part_c_absent_when_d_zero() {
        // (17,5,1): d = 0, n = 3
        let t = thm_6_2(&p(17, 5, 1)).unwrap();
        assert!(t.c.is_none());
        assert!(t.b.is_none());
    }

    #[test]
    fn thm_6_3_examples() {
        // (25,7,2) has r = 8 ≥ k, so the theorem does not apply.
        assert!(thm_6_3(&p(25, 7, 2)).is_none());

        // d = 0 → α_a = 1, β_a = n/(2k); (19,7,2): 36 = 6·6, n = 4
        let ps = p(19, 7, 2);
        let (_, d, n) = ps.rdn(Side::Pack);
        assert_eq!((d, n), (0, 4));
        let t = thm_6_3(&ps).unwrap();
        let expected = db_value(&ps, &q(1, 1), &q(n, 2 * 7)).unwrap();
        assert_eq!(t.a.value, expected);
        assert!(t.a.rounded <= johnson1(&ps).value);
        assert!(t.c.is_none());

        // n_pack = 1, d_pack = 0: (5,3,1) has r = 2.
        let ps = p(5, 3, 1);
        assert_eq!(ps.rdn(Side::Pack), (2, 0, 1));
        assert!(thm_6_3(&ps).is_none());
    }
}
