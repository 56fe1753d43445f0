use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use covera_core::bounds::{best_bounds, ParamSet, Side};
use covera_core::construct::{affine_plane, blowup, restrict_covering};
use covera_core::designs::{bose_lower, certificate_check, classify, excess_or_leave, Design, DesignKind};
use covera_core::oracle::{max_pack, min_cover, SearchBudget, SearchOutcome};
use covera_core::Error;
use num_rational::BigRational;

use crate::render::{self, Format};
use crate::tables::{self, TableOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SOUNDNESS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "covera", version, about = "Bounds, tables and small exact values for covering and packing numbers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Cover,
    Pack,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Cover => Side::Cover,
            SideArg::Pack => Side::Pack,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every catalog bound for one parameter set.
    Bound {
        v: i64,
        k: i64,
        lambda: i64,
        #[arg(long, value_enum)]
        side: Option<SideArg>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Regenerate one of the improvement tables (1 to 4).
    Table {
        n: u8,
        #[arg(long)]
        k_max: Option<u64>,
        #[arg(long, default_value_t = 1)]
        lambda: i64,
        /// Compare against the +1-refined Schönheim bound.
        #[arg(long)]
        refined: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Build an affine plane, its blow-up, or a restricted blow-up.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
        /// Write the design here instead of standard output.
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
    },
    /// Classify a design file and check it against every bound.
    Verify {
        path: PathBuf,
        /// 1-based points of a subset for the rank certificate.
        #[arg(long, value_delimiter = ',')]
        subset: Vec<usize>,
        /// Positive rational weights for the subset, e.g. `1,1/2,1`.
        #[arg(long, value_delimiter = ',')]
        weights: Vec<String>,
    },
    /// Exact covering or packing number by exhaustive search.
    Search {
        v: i64,
        k: i64,
        lambda: i64,
        #[arg(long, value_enum, default_value = "cover")]
        side: SideArg,
        #[arg(long)]
        max_seconds: Option<f64>,
        #[arg(long)]
        max_nodes: Option<u64>,
        /// Write the witness design here instead of standard output.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ConstructKind {
    Plane { q: u64 },
    Blowup { q: u64, s: usize },
    Restrict { q: u64, s: usize, v: usize },
}

/// A failed command: exit code plus message.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SoundnessViolation(_) | Error::Inconsistent(_) => EXIT_SOUNDNESS,
            _ => EXIT_USAGE,
        };
        Failure(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Sizes the global worker pool from `COVERA_THREADS`, if set.
pub fn configure_threads() {
    if let Some(n) = std::env::var("COVERA_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Bound { v, k, lambda, side, format } => {
            let report = best_bounds(&ParamSet::new(v, k, lambda)?);
            out.write_all(render::bound_report(&report, side.map(Side::from), format).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Table { n, k_max, lambda, refined, format } => {
            let defaults = TableOptions::published(n);
            let opts = TableOptions {
                k_max: k_max.unwrap_or(defaults.k_max),
                lambda,
                refined,
            };
            let rows = tables::table(n, &opts)?;
            out.write_all(render::table(&rows, format).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Construct { kind, out: path } => construct(kind, path.as_deref(), out),
        Command::Verify { path, subset, weights } => verify(&path, &subset, &weights, out),
        Command::Search { v, k, lambda, side, max_seconds, max_nodes, out: path } => {
            let max_time = match max_seconds {
                Some(s) if !(s.is_finite() && s >= 0.0) => {
                    return Err(Failure(EXIT_USAGE, format!("--max-seconds {s} is not a valid duration")));
                }
                s => s.map(Duration::from_secs_f64),
            };
            let budget = SearchBudget {
                max_nodes,
                max_time,
                ..SearchBudget::default()
            };
            search(v, k, lambda, side.into(), budget, path.as_deref(), out)
        }
    }
}

fn summary(d: &Design) -> Vec<String> {
    let c = classify(d);
    let mut lines = vec![
        format!("v={} k={} lambda={} b={}", d.v(), d.k(), d.lambda(), d.len()),
        format!("classification: {}", kind_name(c.kind)),
    ];
    if let Ok(g) = excess_or_leave(d) {
        let label = if c.kind == DesignKind::Packing { "leave" } else { "excess" };
        let edges = g.edges().count();
        let weight: u64 = g.edges().map(|(_, _, m)| m).sum();
        let max_degree = g.degrees().into_iter().max().unwrap_or(0);
        lines.push(format!("{label}: {edges} edges, total multiplicity {weight}, max degree {max_degree}"));
    }
    lines
}

fn kind_name(kind: DesignKind) -> &'static str {
    match kind {
        DesignKind::ExactDesign => "exact design",
        DesignKind::Covering => "covering",
        DesignKind::Packing => "packing",
        DesignKind::Neither => "neither covering nor packing",
    }
}

/// Writes `d` with its summary as leading comment lines, to `path` or `out`.
fn emit_design(d: &Design, path: Option<&Path>, out: &mut dyn Write) -> std::io::Result<()> {
    let lines = summary(d);
    let mut text: String = lines.iter().map(|l| format!("# {l}\n")).collect();
    text.push_str(&d.to_text());
    match path {
        Some(p) => {
            fs::write(p, text)?;
            for l in &lines {
                writeln!(out, "{l}")?;
            }
            writeln!(out, "wrote {}", p.display())
        }
        None => out.write_all(text.as_bytes()),
    }
}

fn construct(kind: ConstructKind, path: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let d = match kind {
        ConstructKind::Plane { q } => affine_plane(q)?,
        ConstructKind::Blowup { q, s } => blowup(q, s)?,
        ConstructKind::Restrict { q, s, v } => restrict_covering(&blowup(q, s)?, v)?,
    };
    emit_design(&d, path, out)?;
    Ok(EXIT_OK)
}

fn verify(path: &Path, subset: &[usize], weights: &[String], out: &mut dyn Write) -> Outcome {
    let text = fs::read_to_string(path)?;
    let d = Design::parse(&text)?;
    let c = classify(&d);
    let b = d.len();
    let mut sound = true;
    for l in summary(&d) {
        writeln!(out, "{l}")?;
    }
    if c.kind == DesignKind::Neither {
        writeln!(out, "no covering or packing relations apply")?;
        return Ok(EXIT_OK);
    }

    let rank = bose_lower(&d)?;
    let ok = b >= rank;
    sound &= ok;
    writeln!(out, "bose_lower: {rank} ({})", verdict(ok))?;

    match ParamSet::new(d.v() as i64, d.k() as i64, d.lambda() as i64) {
        Ok(p) => {
            let report = best_bounds(&p);
            if c.is_covering() {
                let (lo, name) = report.best(Side::Cover);
                let ok = b as i64 >= lo;
                sound &= ok;
                writeln!(out, "cover lower bound: {name} = {lo} <= b ({})", verdict(ok))?;
            }
            if c.is_packing() {
                let (hi, name) = report.best(Side::Pack);
                let ok = b as i64 <= hi;
                sound &= ok;
                writeln!(out, "pack upper bound: {name} = {hi} >= b ({})", verdict(ok))?;
            }
        }
        Err(e) => writeln!(out, "bounds: not applicable ({e})")?,
    }

    if !subset.is_empty() {
        let points: Vec<usize> = subset
            .iter()
            .map(|&p| p.checked_sub(1).ok_or_else(|| Failure(EXIT_USAGE, "subset points are 1-based".into())))
            .collect::<Result<_, _>>()?;
        let c_weights: Vec<BigRational> = if weights.is_empty() {
            vec![BigRational::from_integer(1.into()); points.len()]
        } else {
            weights
                .iter()
                .map(|w| {
                    BigRational::from_str(w.trim())
                        .map_err(|_| Failure(EXIT_USAGE, format!("`{w}` is not a rational weight")))
                })
                .collect::<Result<_, _>>()?
        };
        match certificate_check(&d, &points, &c_weights) {
            Ok(true) => writeln!(out, "certificate: premise holds, |S| = {} <= b (ok)", points.len())?,
            Ok(false) => writeln!(out, "certificate: premise fails, no conclusion")?,
            Err(Error::SoundnessViolation(msg)) => {
                sound = false;
                writeln!(out, "certificate: {msg} (VIOLATION)")?;
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(if sound { EXIT_OK } else { EXIT_SOUNDNESS })
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "VIOLATION"
    }
}

fn search(
    v: i64,
    k: i64,
    lambda: i64,
    side: Side,
    budget: SearchBudget,
    path: Option<&Path>,
    out: &mut dyn Write,
) -> Outcome {
    let outcome = match side {
        Side::Cover => min_cover(v, k, lambda, budget)?,
        Side::Pack => max_pack(v, k, lambda, budget)?,
    };
    let symbol = if side == Side::Cover { 'C' } else { 'D' };
    match outcome {
        SearchOutcome::Exact { value, witness, nodes } => {
            writeln!(out, "{symbol}_{lambda}({v},{k}) = {value} ({nodes} nodes)")?;
            emit_design(&witness, path, out)?;
            Ok(EXIT_OK)
        }
        SearchOutcome::BudgetExceeded { bound, nodes } => {
            writeln!(out, "budget exceeded after {nodes} nodes; {symbol}_{lambda}({v},{k}) >= {bound}")?;
            Ok(EXIT_BUDGET)
        }
    }
}
