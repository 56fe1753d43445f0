use std::fmt;

use super::classical::{
    johnson1, johnson2_strong, johnson2_strong_with, johnson2_weak, schonheim, Johnson2Reading,
};
use super::params::{ParamSet, Side};
use super::theorems::{thm_1_1, thm_1_2, thm_5_3, thm_5_4, thm_6_2, thm_6_3, Evaluated};
use super::value::BoundValue;

/// The fixed catalog of bounds evaluated by [`best_bounds`], in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundName {
    Schonheim,
    SchonheimPlus1,
    Johnson1,
    Johnson1Minus1,
    Johnson2Weak,
    Johnson2Strong,
    Thm1_1,
    Thm1_2,
    Thm5_3,
    Thm5_4a,
    Thm5_4b,
    Thm6_2a,
    Thm6_2b,
    Thm6_2c,
    Thm6_3a,
    Thm6_3b,
    Thm6_3c,
}

impl BoundName {
    pub const ALL: [BoundName; 17] = [
        BoundName::Schonheim,
        BoundName::SchonheimPlus1,
        BoundName::Johnson1,
        BoundName::Johnson1Minus1,
        BoundName::Johnson2Weak,
        BoundName::Johnson2Strong,
        BoundName::Thm1_1,
        BoundName::Thm1_2,
        BoundName::Thm5_3,
        BoundName::Thm5_4a,
        BoundName::Thm5_4b,
        BoundName::Thm6_2a,
        BoundName::Thm6_2b,
        BoundName::Thm6_2c,
        BoundName::Thm6_3a,
        BoundName::Thm6_3b,
        BoundName::Thm6_3c,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundName::Schonheim => "schonheim",
            BoundName::SchonheimPlus1 => "schonheim_plus1",
            BoundName::Johnson1 => "johnson1",
            BoundName::Johnson1Minus1 => "johnson1_minus1",
            BoundName::Johnson2Weak => "johnson2_weak",
            BoundName::Johnson2Strong => "johnson2_strong",
            BoundName::Thm1_1 => "thm_1_1",
            BoundName::Thm1_2 => "thm_1_2",
            BoundName::Thm5_3 => "thm_5_3",
            BoundName::Thm5_4a => "thm_5_4a",
            BoundName::Thm5_4b => "thm_5_4b",
            BoundName::Thm6_2a => "thm_6_2a",
            BoundName::Thm6_2b => "thm_6_2b",
            BoundName::Thm6_2c => "thm_6_2c",
            BoundName::Thm6_3a => "thm_6_3a",
            BoundName::Thm6_3b => "thm_6_3b",
            BoundName::Thm6_3c => "thm_6_3c",
        }
    }

    /// Lower bounds on coverings or upper bounds on packings.
    pub fn side(self) -> Side {
        use BoundName::*;
        match self {
            Schonheim | SchonheimPlus1 | Thm1_1 | Thm5_3 | Thm6_2a | Thm6_2b | Thm6_2c => {
                Side::Cover
            }
            _ => Side::Pack,
        }
    }
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundEntry {
    pub name: BoundName,
    pub applicable: bool,
    pub value: Option<BoundValue>,
    pub rounded: Option<i64>,
}

/// Every catalog bound for one parameter set, with the winners per side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub params: ParamSet,
    pub entries: Vec<BoundEntry>,
    pub cover_best: i64,
    pub cover_source: BoundName,
    pub pack_best: i64,
    pub pack_source: BoundName,
    /// Second Johnson bound under the literal `D = xv + y` reading, when
    /// λ = 1 and it differs from the default reading.
    pub johnson2_literal: Option<i64>,
}

impl BoundReport {
    pub fn entry(&self, name: BoundName) -> &BoundEntry {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .expect("every catalog name has an entry")
    }

    pub fn rounded(&self, name: BoundName) -> Option<i64> {
        self.entry(name).rounded
    }

    pub fn best(&self, side: Side) -> (i64, BoundName) {
        match side {
            Side::Cover => (self.cover_best, self.cover_source),
            Side::Pack => (self.pack_best, self.pack_source),
        }
    }

    pub fn applicable(&self, side: Side) -> impl Iterator<Item = &BoundEntry> {
        self.entries
            .iter()
            .filter(move |e| e.applicable && e.name.side() == side)
    }
}

fn exact(name: BoundName, e: Option<Evaluated>) -> BoundEntry {
    match e {
        Some(e) => BoundEntry {
            name,
            applicable: true,
            value: Some(e.value),
            rounded: Some(e.rounded),
        },
        None => BoundEntry {
            name,
            applicable: false,
            value: None,
            rounded: None,
        },
    }
}

fn integral(name: BoundName, n: Option<i64>) -> BoundEntry {
    BoundEntry {
        name,
        applicable: n.is_some(),
        value: n.map(BoundValue::from_integer),
        rounded: n,
    }
}

/// Evaluates the whole catalog. The covering winner is the largest applicable
/// lower bound and the packing winner the smallest applicable upper bound;
/// ties go to the earlier catalog entry. The second Johnson bounds are only
/// considered for λ = 1.
pub fn best_bounds(p: &ParamSet) -> BoundReport {
    use BoundName::*;
    let (v, k) = (p.v(), p.k());
    let lambda_one = p.lambda() == 1;

    let s = schonheim(p);
    let j = johnson1(p);
    let t54 = thm_5_4(p);
    let t62 = thm_6_2(p);
    let t63 = thm_6_3(p);

    let mut entries = vec![
        integral(Schonheim, Some(s.value)),
        integral(SchonheimPlus1, s.refined()),
        integral(Johnson1, Some(j.value)),
        integral(Johnson1Minus1, j.refined()),
        integral(Johnson2Weak, johnson2_weak(v, k).filter(|_| lambda_one)),
        integral(Johnson2Strong, lambda_one.then(|| johnson2_strong(v, k))),
        exact(Thm1_1, thm_1_1(p)),
        exact(Thm1_2, thm_1_2(p)),
        exact(Thm5_3, thm_5_3(p)),
        exact(Thm5_4a, t54.as_ref().and_then(|t| t.a.clone())),
        exact(Thm5_4b, t54.as_ref().and_then(|t| t.b.clone())),
        exact(Thm6_2a, t62.as_ref().map(|t| t.a.clone())),
        exact(Thm6_2b, t62.as_ref().and_then(|t| t.b.clone())),
        exact(Thm6_2c, t62.as_ref().and_then(|t| t.c.clone())),
        exact(Thm6_3a, t63.as_ref().map(|t| t.a.clone())),
        exact(Thm6_3b, t63.as_ref().and_then(|t| t.b.clone())),
        exact(Thm6_3c, t63.as_ref().and_then(|t| t.c.clone())),
    ];
    debug_assert!(entries.iter().map(|e| e.name).eq(BoundName::ALL));

    let pick = |side: Side, entries: &[BoundEntry]| {
        let mut best: Option<(i64, BoundName)> = None;
        for e in entries.iter().filter(|e| e.applicable && e.name.side() == side) {
            let r = e.rounded.expect("applicable entries are evaluated");
            let better = match (best, side) {
                (None, _) => true,
                (Some((b, _)), Side::Cover) => r > b,
                (Some((b, _)), Side::Pack) => r < b,
            };
            if better {
                best = Some((r, e.name));
            }
        }
        best.expect("schonheim and johnson1 always apply")
    };
    let (cover_best, cover_source) = pick(Side::Cover, &entries);
    let (pack_best, pack_source) = pick(Side::Pack, &entries);

    let johnson2_literal = lambda_one
        .then(|| johnson2_strong_with(v, k, Johnson2Reading::Literal))
        .filter(|&lit| Some(lit) != entries[5].rounded);

    entries.shrink_to_fit();
    BoundReport {
        params: *p,
        entries,
        cover_best,
        cover_source,
        pack_best,
        pack_source,
        johnson2_literal,
    }
}
