use std::time::{Duration, Instant};

use crate::bounds::{schonheim, ParamSet};
use crate::designs::Design;
use crate::{Error, Result};

/// Largest point count the oracle accepts.
pub const MAX_ORACLE_POINTS: usize = 16;

/// Limits on a single search. Exceeding any of them ends the search with
/// [`SearchOutcome::BudgetExceeded`]; the oracle never guesses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
    /// Covering only: first block count tried by the deepening loop. Must be
    /// a valid lower bound; defaults to the Schönheim bound.
    pub start: Option<usize>,
    /// Covering only: largest block count tried before giving up.
    pub cap: Option<usize>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(n: u64) -> Self {
        SearchBudget {
            max_nodes: Some(n),
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Exact {
        value: usize,
        witness: Design,
        nodes: u64,
    },
    /// For coverings `bound` is a proven lower bound on `C`; for packings it
    /// is the size of the best packing found, a lower bound on `D`.
    BudgetExceeded { bound: usize, nodes: u64 },
}

impl SearchOutcome {
    pub fn value(&self) -> Option<usize> {
        match self {
            SearchOutcome::Exact { value, .. } => Some(*value),
            SearchOutcome::BudgetExceeded { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&Design> {
        match self {
            SearchOutcome::Exact { witness, .. } => Some(witness),
            SearchOutcome::BudgetExceeded { .. } => None,
        }
    }

    pub fn nodes(&self) -> u64 {
        match self {
            SearchOutcome::Exact { nodes, .. } | SearchOutcome::BudgetExceeded { nodes, .. } => *nodes,
        }
    }
}

/// All `k`-subsets of `[v]` in lexicographic order with their pair lists.
struct Instance {
    v: usize,
    k: usize,
    lambda: u8,
    pair_index: Vec<Vec<usize>>,
    pair_points: Vec<(usize, usize)>,
    blocks: Vec<Vec<usize>>,
    block_pairs: Vec<Vec<usize>>,
    blocks_through: Vec<Vec<usize>>,
}

impl Instance {
    fn new(v: i64, k: i64, lambda: i64) -> Result<Self> {
        ParamSet::new(v, k, lambda)?;
        let (v, k) = (v as usize, k as usize);
        if v > MAX_ORACLE_POINTS {
            return Err(Error::InvalidArgument(format!(
                "exhaustive search is limited to v ≤ {MAX_ORACLE_POINTS}"
            )));
        }
        let lambda = u8::try_from(lambda)
            .map_err(|_| Error::InvalidArgument(format!("λ = {lambda} is too large to search")))?;
        let mut pair_index = vec![vec![usize::MAX; v]; v];
        let mut pair_points = Vec::new();
        for x in 0..v {
            for y in x + 1..v {
                pair_index[x][y] = pair_points.len();
                pair_index[y][x] = pair_points.len();
                pair_points.push((x, y));
            }
        }
        let mut blocks = Vec::new();
        let mut current = Vec::with_capacity(k);
        subsets(v, k, 0, &mut current, &mut blocks);
        let block_pairs: Vec<Vec<usize>> = blocks
            .iter()
            .map(|b| {
                let mut ps = Vec::new();
                for (i, &x) in b.iter().enumerate() {
                    for &y in &b[i + 1..] {
                        ps.push(pair_index[x][y]);
                    }
                }
                ps
            })
            .collect();
        let mut blocks_through = vec![Vec::new(); pair_points.len()];
        for (bi, ps) in block_pairs.iter().enumerate() {
            for &p in ps {
                blocks_through[p].push(bi);
            }
        }
        Ok(Instance {
            v,
            k,
            lambda,
            pair_index,
            pair_points,
            blocks,
            block_pairs,
            blocks_through,
        })
    }

    fn design(&self, chosen: &[usize]) -> Design {
        let blocks = chosen.iter().map(|&b| self.blocks[b].clone()).collect();
        Design::new(self.v, self.k, self.lambda as u64, blocks).expect("search blocks are valid")
    }
}

fn subsets(v: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for x in from..=v - (k - cur.len()) {
        cur.push(x);
        subsets(v, k, x + 1, cur, out);
        cur.pop();
    }
}

struct Clock {
    nodes: u64,
    started: Instant,
    budget: SearchBudget,
    aborted: bool,
}

impl Clock {
    fn new(budget: SearchBudget) -> Self {
        Clock {
            nodes: 0,
            started: Instant::now(),
            budget,
            aborted: false,
        }
    }

    /// Counts a node; returns `false` once the budget is spent.
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.budget.max_nodes.is_some_and(|m| self.nodes > m) {
            self.aborted = true;
        }
        if self.nodes % 4096 == 0 && self.budget.max_time.is_some_and(|t| self.started.elapsed() > t) {
            self.aborted = true;
        }
        !self.aborted
    }
}

struct CoverState<'a> {
    inst: &'a Instance,
    deficit: Vec<u8>,
    point_deficit: Vec<u32>,
    total_deficit: u32,
    chosen: Vec<usize>,
    changed: Vec<Vec<usize>>,
    clock: Clock,
}

impl<'a> CoverState<'a> {
    fn new(inst: &'a Instance, budget: SearchBudget) -> Self {
        let pairs = inst.pair_points.len();
        CoverState {
            inst,
            deficit: vec![inst.lambda; pairs],
            point_deficit: vec![inst.lambda as u32 * (inst.v as u32 - 1); inst.v],
            total_deficit: inst.lambda as u32 * pairs as u32,
            chosen: Vec::new(),
            changed: Vec::new(),
            clock: Clock::new(budget),
        }
    }

    fn apply(&mut self, b: usize) {
        let mut touched = Vec::new();
        for &p in &self.inst.block_pairs[b] {
            if self.deficit[p] > 0 {
                self.deficit[p] -= 1;
                self.total_deficit -= 1;
                let (x, y) = self.inst.pair_points[p];
                self.point_deficit[x] -= 1;
                self.point_deficit[y] -= 1;
                touched.push(p);
            }
        }
        self.changed.push(touched);
        self.chosen.push(b);
    }

    fn undo(&mut self) {
        self.chosen.pop();
        for p in self.changed.pop().expect("undo follows apply") {
            self.deficit[p] += 1;
            self.total_deficit += 1;
            let (x, y) = self.inst.pair_points[p];
            self.point_deficit[x] += 1;
            self.point_deficit[y] += 1;
        }
    }

    /// Blocks still needed, by pair count and by point deficiency.
    fn needed(&self) -> usize {
        let k = self.inst.k as u32;
        let per_block = k * (k - 1) / 2;
        let by_pairs = self.total_deficit.div_ceil(per_block);
        let through: Vec<u32> = self.point_deficit.iter().map(|d| d.div_ceil(k - 1)).collect();
        let by_points = through.iter().sum::<u32>().div_ceil(k);
        let by_max = through.iter().copied().max().unwrap_or(0);
        by_pairs.max(by_points).max(by_max) as usize
    }

    /// Whether the deficiencies can be cleared with at most `remaining`
    /// further blocks. Each step adds a block through the first deficient
    /// pair; successive blocks for the same pair are nondecreasing.
    fn dfs(&mut self, remaining: usize, prev: (usize, usize)) -> bool {
        if !self.clock.tick() {
            return false;
        }
        let Some(p) = self.deficit.iter().position(|&d| d > 0) else {
            return true;
        };
        if self.needed() > remaining {
            return false;
        }
        let inst = self.inst;
        for &b in &inst.blocks_through[p] {
            if prev.0 == p && b < prev.1 {
                continue;
            }
            self.apply(b);
            if self.dfs(remaining - 1, (p, b)) {
                return true;
            }
            self.undo();
            if self.clock.aborted {
                return false;
            }
        }
        false
    }
}

/// Exact covering number `C_λ(v, k)` by iterative deepening on the block
/// count.
///
/// The search fixes the first block to `{0, …, k−1}` (any covering can be
/// relabelled to contain it), then always extends through the
/// lexicographically first deficient pair.
pub fn min_cover(v: i64, k: i64, lambda: i64, budget: SearchBudget) -> Result<SearchOutcome> {
    let inst = Instance::new(v, k, lambda)?;
    let start = budget
        .start
        .unwrap_or_else(|| schonheim(&ParamSet::new(v, k, lambda).expect("checked")).value as usize)
        .max(1);
    let cap = budget.cap.unwrap_or(usize::MAX);
    let mut state = CoverState::new(&inst, budget);
    let first_pair = inst.pair_index[0][1];
    let mut depth = start;
    while depth <= cap {
        state.apply(0);
        let found = state.dfs(depth - 1, (first_pair, 0));
        if found {
            return Ok(SearchOutcome::Exact {
                value: depth,
                witness: inst.design(&state.chosen),
                nodes: state.clock.nodes,
            });
        }
        state.undo();
        if state.clock.aborted {
            break;
        }
        depth += 1;
    }
    Ok(SearchOutcome::BudgetExceeded {
        bound: depth,
        nodes: state.clock.nodes,
    })
}

struct PackState<'a> {
    inst: &'a Instance,
    slack: Vec<u8>,
    closed: Vec<bool>,
    point_open: Vec<u32>,
    total_open: u32,
    chosen: Vec<usize>,
    best: Vec<usize>,
    clock: Clock,
}

impl<'a> PackState<'a> {
    fn new(inst: &'a Instance, budget: SearchBudget) -> Self {
        let pairs = inst.pair_points.len();
        PackState {
            inst,
            slack: vec![inst.lambda; pairs],
            closed: vec![false; pairs],
            point_open: vec![inst.lambda as u32 * (inst.v as u32 - 1); inst.v],
            total_open: inst.lambda as u32 * pairs as u32,
            chosen: Vec::new(),
            best: Vec::new(),
            clock: Clock::new(budget),
        }
    }

    fn fits(&self, b: usize) -> bool {
        self.inst.block_pairs[b]
            .iter()
            .all(|&p| !self.closed[p] && self.slack[p] > 0)
    }

    fn shift(&mut self, p: usize, amount: u32, up: bool) {
        let (x, y) = self.inst.pair_points[p];
        if up {
            self.total_open += amount;
            self.point_open[x] += amount;
            self.point_open[y] += amount;
        } else {
            self.total_open -= amount;
            self.point_open[x] -= amount;
            self.point_open[y] -= amount;
        }
    }

    fn apply(&mut self, b: usize) {
        let inst = self.inst;
        for &p in &inst.block_pairs[b] {
            self.slack[p] -= 1;
            self.shift(p, 1, false);
        }
        self.chosen.push(b);
    }

    fn undo(&mut self) {
        let b = self.chosen.pop().expect("undo follows apply");
        let inst = self.inst;
        for &p in &inst.block_pairs[b] {
            self.slack[p] += 1;
            self.shift(p, 1, true);
        }
    }

    /// Most blocks that could still be added using open capacity.
    fn room(&self) -> usize {
        let k = self.inst.k as u32;
        let by_pairs = self.total_open / (k * (k - 1) / 2);
        let by_points = self.point_open.iter().map(|c| c / (k - 1)).sum::<u32>() / k;
        by_pairs.min(by_points) as usize
    }

    /// Branches on the first open pair with spare capacity: either add a
    /// block through it (nondecreasing for repeated choices on the same
    /// pair) or close it for good.
    fn dfs(&mut self, prev: (usize, usize)) {
        if !self.clock.tick() {
            return;
        }
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        if self.chosen.len() + self.room() <= self.best.len() {
            return;
        }
        let Some(p) = (0..self.slack.len()).find(|&p| !self.closed[p] && self.slack[p] > 0) else {
            return;
        };
        let inst = self.inst;
        for &b in &inst.blocks_through[p] {
            if prev.0 == p && b < prev.1 {
                continue;
            }
            if !self.fits(b) {
                continue;
            }
            self.apply(b);
            self.dfs((p, b));
            self.undo();
            if self.clock.aborted {
                return;
            }
        }
        let s = self.slack[p] as u32;
        self.closed[p] = true;
        self.shift(p, s, false);
        self.dfs((usize::MAX, 0));
        self.shift(p, s, true);
        self.closed[p] = false;
    }
}

/// Exact packing number `D_λ(v, k)` by branch and bound. The first block is
/// fixed to `{0, …, k−1}`.
pub fn max_pack(v: i64, k: i64, lambda: i64, budget: SearchBudget) -> Result<SearchOutcome> {
    let inst = Instance::new(v, k, lambda)?;
    let mut state = PackState::new(&inst, budget);
    state.apply(0);
    state.dfs((inst.pair_index[0][1], 0));
    let nodes = state.clock.nodes;
    if state.clock.aborted {
        return Ok(SearchOutcome::BudgetExceeded {
            bound: state.best.len(),
            nodes,
        });
    }
    Ok(SearchOutcome::Exact {
        value: state.best.len(),
        witness: inst.design(&state.best),
        nodes,
    })
}
