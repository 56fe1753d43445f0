use covera_core::bounds::{schonheim, thm_1_1, thm_5_3, thm_6_2, BoundName, ParamSet};
use covera_core::construct::ranges_for_block_size;
use covera_core::{Error, Result};
use rayon::prelude::*;

/// Which of the tricky bounds beat part (a), shown as a superscript.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Superscript {
    B,
    C,
}

impl Superscript {
    pub fn as_str(self) -> &'static str {
        match self {
            Superscript::B => "b",
            Superscript::C => "c",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub k: u64,
    pub v: u64,
    /// How far the new bound exceeds the baseline; always at least 1.
    pub improvement: i64,
    pub source: &'static str,
    pub superscript: Option<Superscript>,
    /// Plane order, for the exact-range table only.
    pub q: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableOptions {
    pub k_max: u64,
    pub lambda: i64,
    /// Compare against the +1-refined Schönheim bound instead of the plain one.
    pub refined: bool,
}

impl TableOptions {
    /// The block-size range of the published table `n`.
    pub fn published(n: u8) -> Self {
        let k_max = match n {
            1 => 12,
            2 => 20,
            3 => 13,
            _ => 147,
        };
        TableOptions {
            k_max,
            lambda: 1,
            refined: false,
        }
    }
}

pub const TABLE_IDS: [u8; 4] = [1, 2, 3, 4];

/// Rows of table `n`, ordered by `k`, then `q`, then `v`.
pub fn table(n: u8, opts: &TableOptions) -> Result<Vec<TableRow>> {
    if !TABLE_IDS.contains(&n) {
        return Err(Error::InvalidArgument(format!("no table {n}; choose 1, 2, 3 or 4")));
    }
    if opts.lambda < 1 {
        return Err(Error::InvalidArgument("lambda must be at least 1".into()));
    }
    if n == 4 && opts.lambda != 1 {
        return Err(Error::InvalidArgument("table 4 is defined for lambda = 1 only".into()));
    }
    let per_k: Vec<Vec<TableRow>> = (3..=opts.k_max)
        .into_par_iter()
        .map(|k| match n {
            1 => improvements(k, opts, Neat),
            2 => improvements(k, opts, Large),
            3 => improvements(k, opts, Tricky),
            _ => exact_rows(k, opts),
        })
        .collect();
    Ok(per_k.into_iter().flatten().collect())
}

#[derive(Clone, Copy)]
enum Family {
    Neat,
    Large,
    Tricky,
}
use Family::*;

/// Candidate `v` for block size `k`: `13k/4 < v` and `r < k`, since none of
/// the families can beat its baseline once `r ≥ k`.
fn candidates(k: u64, lambda: i64) -> impl Iterator<Item = u64> {
    let lo = 13 * k / 4 + 1;
    let hi = (k - 1) * (k - 1) / lambda as u64 + 1;
    (lo.max(k + 1)..=hi).filter(move |&v| 4 * v > 13 * k)
}

fn baseline(p: &ParamSet, refined: bool) -> i64 {
    let s = schonheim(p);
    if refined {
        s.best()
    } else {
        s.value
    }
}

fn improvements(k: u64, opts: &TableOptions, family: Family) -> Vec<TableRow> {
    let mut rows = Vec::new();
    for v in candidates(k, opts.lambda) {
        let p = ParamSet::new(v as i64, k as i64, opts.lambda).expect("v > k ≥ 3");
        let row = match family {
            Neat => thm_1_1(&p).map(|t| (t.rounded - baseline(&p, opts.refined), BoundName::Thm1_1, None)),
            Large => thm_5_3(&p).map(|t| (t.rounded - baseline(&p, opts.refined), BoundName::Thm5_3, None)),
            Tricky => tricky_row(&p),
        };
        if let Some((improvement, source, superscript)) = row {
            if improvement >= 1 {
                rows.push(TableRow {
                    k,
                    v,
                    improvement,
                    source: source.as_str(),
                    superscript,
                    q: None,
                });
            }
        }
    }
    rows
}

/// Best of the three tricky bounds against the neat bound. A `c` superscript
/// takes precedence over `b` when both parts beat part (a).
fn tricky_row(p: &ParamSet) -> Option<(i64, BoundName, Option<Superscript>)> {
    let t = thm_6_2(p)?;
    let neat = thm_1_1(p)?.rounded;
    let a = t.a.rounded;
    let b = t.b.map(|e| e.rounded);
    let c = t.c.map(|e| e.rounded);
    let mut best = (a, BoundName::Thm6_2a);
    for (val, name) in [(b, BoundName::Thm6_2b), (c, BoundName::Thm6_2c)] {
        if let Some(x) = val {
            if x > best.0 {
                best = (x, name);
            }
        }
    }
    let superscript = if c.is_some_and(|x| x > a) {
        Some(Superscript::C)
    } else if b.is_some_and(|x| x > a) {
        Some(Superscript::B)
    } else {
        None
    };
    Some((best.0 - neat, best.1, superscript))
}

fn exact_rows(k: u64, opts: &TableOptions) -> Vec<TableRow> {
    let mut rows = Vec::new();
    for range in ranges_for_block_size(k, 4) {
        let target = range.covering_number() as i64;
        for v in range.values() {
            let p = ParamSet::new(v as i64, k as i64, 1).expect("v > k in range");
            let base = baseline(&p, opts.refined);
            if base < target {
                rows.push(TableRow {
                    k,
                    v,
                    improvement: target - base,
                    source: "exact_range",
                    superscript: None,
                    q: Some(range.q),
                });
            }
        }
    }
    rows
}
