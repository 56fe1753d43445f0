use super::params::ParamSet;

/// A classical bound together with its ±1 refinement flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RefinableBound {
    pub value: i64,
    /// True when `λ(v−1) ≡ 0 (mod k−1)` and `λv(v−1) ≡ 1 (mod k)`.
    pub refinement_applies: bool,
    step: i64,
}

impl RefinableBound {
    /// The refined bound, when the congruence pair holds.
    pub fn refined(&self) -> Option<i64> {
        self.refinement_applies.then_some(self.value + self.step)
    }

    /// The refined bound if it applies, otherwise the plain one.
    pub fn best(&self) -> i64 {
        self.refined().unwrap_or(self.value)
    }
}

fn refinement_applies(p: &ParamSet) -> bool {
    let (v, k, l) = (p.v() as i128, p.k() as i128, p.lambda() as i128);
    (l * (v - 1)) % (k - 1) == 0 && (l * v * (v - 1)) % k == 1
}

/// Schönheim: `C_λ(v,k) ≥ ⌈v·r/k⌉` with `r = ⌈λ(v−1)/(k−1)⌉`, improved by one
/// under the congruence pair.
pub fn schonheim(p: &ParamSet) -> RefinableBound {
    RefinableBound {
        value: div_ceil(p.v() * p.r_cov(), p.k()),
        refinement_applies: refinement_applies(p),
        step: 1,
    }
}

/// First Johnson bound: `D_λ(v,k) ≤ ⌊v·r/k⌋` with `r = ⌊λ(v−1)/(k−1)⌋`,
/// reduced by one under the congruence pair when λ = 1.
///
/// For λ ≥ 2 the leave may contain repeated edges and the reduction fails:
/// `D_2(5,3) = 6` although the congruences hold.
pub fn johnson1(p: &ParamSet) -> RefinableBound {
    RefinableBound {
        value: (p.v() * p.r_pack()).div_euclid(p.k()),
        refinement_applies: p.lambda() == 1 && refinement_applies(p),
        step: -1,
    }
}

/// Weak form of the second Johnson bound (λ = 1): `⌊v(k−1)/(k²−v)⌋`, defined
/// only when `k² > v`.
pub fn johnson2_weak(v: i64, k: i64) -> Option<i64> {
    let den = k * k - v;
    (den > 0).then(|| (v * (k - 1)).div_euclid(den))
}

/// How the block count is decomposed in the second Johnson inequality
/// `b(b−1) ≥ x(x−1)v + 2xy`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Johnson2Reading {
    /// `b·k = x·v + y`, `0 ≤ y < v`: the point-incidence count.
    #[default]
    BlockIncidences,
    /// `b = x·v + y`, `0 ≤ y < v`: the decomposition taken literally.
    Literal,
}

/// Strong form of the second Johnson bound (λ = 1) under the default reading.
pub fn johnson2_strong(v: i64, k: i64) -> i64 {
    johnson2_strong_with(v, k, Johnson2Reading::default())
}

/// Largest `b ≤ ⌊v·⌊(v−1)/(k−1)⌋/k⌋` satisfying the second Johnson inequality.
///
/// The scan is capped by the first Johnson bound, which the true packing number
/// also satisfies; otherwise the feasible set is unbounded when `k² ≤ v`.
pub fn johnson2_strong_with(v: i64, k: i64, reading: Johnson2Reading) -> i64 {
    let cap = (v * ((v - 1) / (k - 1))).div_euclid(k);
    let (v, k) = (v as i128, k as i128);
    (0..=cap)
        .rev()
        .find(|&b| {
            let b = b as i128;
            let total = match reading {
                Johnson2Reading::BlockIncidences => b * k,
                Johnson2Reading::Literal => b,
            };
            let (x, y) = (total / v, total % v);
            x * (x - 1) * v + 2 * x * y <= b * (b - 1)
        })
        .unwrap_or(0)
}

pub(crate) fn div_ceil(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}
