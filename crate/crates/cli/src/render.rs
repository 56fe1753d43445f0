use std::fmt::Write;

use clap::ValueEnum;
use covera_core::bounds::{BoundReport, Side};
use serde_json::{json, Value};

use crate::tables::TableRow;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Tsv,
    Json,
}

/// Renders a row label the way the printed tables do: `28_2` for an
/// improvement of 2, `30^c` for a superscript. Exact-range rows carry no
/// subscript.
pub fn row_label(row: &TableRow) -> String {
    let mut s = row.v.to_string();
    if row.improvement >= 2 && row.q.is_none() {
        write!(s, "_{}", row.improvement).unwrap();
    }
    if let Some(sup) = row.superscript {
        write!(s, "^{}", sup.as_str()).unwrap();
    }
    s
}

pub fn table(rows: &[TableRow], format: Format) -> String {
    match format {
        Format::Text => table_text(rows),
        Format::Tsv => table_tsv(rows),
        Format::Json => rows.iter().map(|r| row_json(r).to_string() + "\n").collect(),
    }
}

fn table_tsv(rows: &[TableRow]) -> String {
    let mut out = String::from("k\tq\tv\timprovement\tsource\tsuperscript\n");
    for r in rows {
        let q = r.q.map(|q| q.to_string()).unwrap_or_default();
        let sup = r.superscript.map(|s| s.as_str()).unwrap_or_default();
        writeln!(out, "{}\t{q}\t{}\t{}\t{}\t{sup}", r.k, r.v, r.improvement, r.source).unwrap();
    }
    out
}

fn row_json(r: &TableRow) -> Value {
    json!({
        "k": r.k,
        "q": r.q,
        "v": r.v,
        "improvement": r.improvement,
        "source": r.source,
        "superscript": r.superscript.map(|s| s.as_str()),
    })
}

/// One line per `(k, q)` group. Runs of three or more consecutive values
/// with no marks are written `a..b`.
fn table_text(rows: &[TableRow]) -> String {
    let mut groups: Vec<((u64, Option<u64>), Vec<&TableRow>)> = Vec::new();
    for r in rows {
        match groups.last_mut() {
            Some((key, members)) if *key == (r.k, r.q) => members.push(r),
            _ => groups.push(((r.k, r.q), vec![r])),
        }
    }
    let width = groups
        .iter()
        .map(|((k, q), _)| head(*k, *q).len())
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    for ((k, q), members) in &groups {
        writeln!(out, "{:<width$}  {}", head(*k, *q), compress(members)).unwrap();
    }
    out
}

fn head(k: u64, q: Option<u64>) -> String {
    match q {
        Some(q) => format!("k={k} q={q}"),
        None => format!("k={k}"),
    }
}

fn compress(rows: &[&TableRow]) -> String {
    let plain = |r: &TableRow| r.superscript.is_none() && r.q.is_some();
    let mut parts = Vec::new();
    let mut i = 0;
    while i < rows.len() {
        let mut j = i;
        while j + 1 < rows.len() && plain(rows[j + 1]) && plain(rows[i]) && rows[j + 1].v == rows[j].v + 1 {
            j += 1;
        }
        if j - i >= 2 {
            parts.push(format!("{}..{}", rows[i].v, rows[j].v));
        } else {
            parts.extend(rows[i..=j].iter().map(|r| row_label(r)));
        }
        i = j + 1;
    }
    parts.join(", ")
}

/// Entries restricted to `side` (or all when `None`), then the winners.
pub fn bound_report(report: &BoundReport, side: Option<Side>, format: Format) -> String {
    let sides: Vec<Side> = side.map_or(vec![Side::Cover, Side::Pack], |s| vec![s]);
    let entries: Vec<_> = report
        .entries
        .iter()
        .filter(|e| sides.contains(&e.name.side()))
        .collect();
    let value_of = |e: &covera_core::bounds::BoundEntry| {
        e.value.as_ref().map(|v| v.to_string()).unwrap_or_else(|| "-".into())
    };
    let rounded_of = |e: &covera_core::bounds::BoundEntry| {
        e.rounded.map(|r| r.to_string()).unwrap_or_else(|| "-".into())
    };
    let p = &report.params;
    let mut out = String::new();
    match format {
        Format::Text => {
            writeln!(out, "v={} k={} lambda={}", p.v(), p.k(), p.lambda()).unwrap();
            let w = entries.iter().map(|e| e.name.as_str().len()).max().unwrap_or(0);
            for e in &entries {
                let status = if e.applicable { "yes" } else { "no" };
                writeln!(
                    out,
                    "  {:<w$}  {:<5}  {:<3}  {:>8}  {}",
                    e.name.as_str(),
                    e.name.side().to_string(),
                    status,
                    rounded_of(e),
                    value_of(e)
                )
                .unwrap();
            }
            for s in &sides {
                let (best, name) = report.best(*s);
                writeln!(out, "winner {s}: {name} = {best}").unwrap();
            }
            if let Some(lit) = report.johnson2_literal.filter(|_| sides.contains(&Side::Pack)) {
                writeln!(out, "note: johnson2_strong under the literal b = xv + y reading gives {lit}").unwrap();
            }
        }
        Format::Tsv => {
            out.push_str("kind\tname\tside\tapplicable\trounded\tvalue\n");
            for e in &entries {
                writeln!(
                    out,
                    "entry\t{}\t{}\t{}\t{}\t{}",
                    e.name,
                    e.name.side(),
                    e.applicable,
                    rounded_of(e),
                    value_of(e)
                )
                .unwrap();
            }
            for s in &sides {
                let (best, name) = report.best(*s);
                writeln!(out, "winner\t{name}\t{s}\ttrue\t{best}\t{best}").unwrap();
            }
        }
        Format::Json => {
            for e in &entries {
                let line = json!({
                    "name": e.name.as_str(),
                    "side": e.name.side().to_string(),
                    "applicable": e.applicable,
                    "rounded": e.rounded,
                    "value": e.value.as_ref().map(|v| v.to_string()),
                });
                writeln!(out, "{line}").unwrap();
            }
            for s in &sides {
                let (best, name) = report.best(*s);
                let line = json!({"winner": name.as_str(), "side": s.to_string(), "value": best});
                writeln!(out, "{line}").unwrap();
            }
        }
    }
    out
}
