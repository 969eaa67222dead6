//! Branch-and-bound for the set `k`-multicover form of `dim_k^t(G)`.
//!
//! State per search node: each vertex is undecided, in, or out; each pair
//! tracks its remaining demand `need` and its undecided members `avail`.
//! Excluding a vertex can make `need == avail` (all remaining members are
//! forced in) or `need > avail` (dead end). Changes are recorded on a trail
//! and undone in LIFO order.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;

use super::greedy::greedy_cover;
use super::{check_query, DimensionResult, SolveStats, SolverConfig, Status, TieBreak};
use crate::error::Result;
use crate::metric::{DistanceMatrix, PairTable, Truncation};
use crate::vertex_set::VertexSet;

/// Exact `dim_k^t(G)`. `t` beyond the diameter of a connected graph is
/// clamped. If the node budget runs out the best generator found so far is
/// returned as `UpperBoundOnly`.
pub fn exact_dimension(
    dm: &DistanceMatrix,
    t: Truncation,
    k: usize,
    cfg: &SolverConfig,
) -> Result<DimensionResult> {
    check_query(dm, k)?;
    cfg.validate()?;
    let start = Instant::now();
    let table = dm.pairs(t);
    let t = table.truncation();
    if let Some(r) = table.records().iter().find(|r| r.size() < k) {
        let stats = SolveStats {
            nodes: 0,
            elapsed: start.elapsed(),
        };
        return Ok(DimensionResult::no_generator(k, t, (r.x, r.y), stats));
    }
    let inst = Instance::new(&table);
    let upper = greedy_cover(&table, k, cfg.tie_break);
    let shared = Shared {
        best_value: AtomicUsize::new(upper.len()),
        best_set: Mutex::new(upper),
        nodes: AtomicU64::new(0),
        budget: cfg.node_budget,
        aborted: AtomicBool::new(false),
    };
    let mut root = State::new(&inst, k, cfg);
    let feasible = !cfg.forced_pruning || root.force_tight_pairs();
    let root_bound = if feasible {
        root.chosen + root.residual_bound()
    } else {
        usize::MAX
    };

    if feasible && root_bound < shared.best_value.load(Ordering::Relaxed) {
        if cfg.threads <= 1 {
            root.search(&shared);
        } else {
            search_parallel(root, &shared, cfg.threads);
        }
    }

    let value = shared.best_value.load(Ordering::Relaxed);
    let basis = shared
        .best_set
        .into_inner()
        .expect("incumbent lock poisoned");
    let aborted = shared.aborted.load(Ordering::Relaxed);
    let stats = SolveStats {
        nodes: shared.nodes.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
    };
    Ok(DimensionResult {
        status: if aborted {
            Status::UpperBoundOnly
        } else {
            Status::Solved
        },
        k,
        t: t.get(),
        value: Some(value),
        basis: Some(basis),
        lower_bound: if aborted {
            root_bound.min(value)
        } else {
            value
        },
        deficient_pair: None,
        stats,
    })
}

/// Frontier depth that yields enough independent subtrees for the pool.
fn frontier_depth(threads: usize) -> usize {
    let target = (threads * 8).max(2);
    (usize::BITS - (target - 1).leading_zeros()) as usize
}

fn search_parallel(mut root: State<'_>, shared: &Shared, threads: usize) {
    let mut frontier = Vec::new();
    root.expand(
        frontier_depth(threads),
        &mut Vec::new(),
        &mut frontier,
        shared,
    );
    let run = || {
        frontier.par_iter().for_each(|path| {
            let mut state = root.clone();
            for &(v, include) in path {
                if include {
                    state.include(v);
                } else {
                    let ok = state.exclude_and_propagate(v);
                    debug_assert!(ok, "frontier paths are consistent");
                }
            }
            state.search(shared);
        })
    };
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    }
}

struct Shared {
    best_value: AtomicUsize,
    best_set: Mutex<VertexSet>,
    nodes: AtomicU64,
    budget: u64,
    aborted: AtomicBool,
}

impl Shared {
    fn offer(&self, chosen: usize, set: VertexSet) {
        let mut best = self.best_set.lock().expect("incumbent lock poisoned");
        if chosen < self.best_value.load(Ordering::Acquire) {
            *best = set;
            self.best_value.store(chosen, Ordering::Release);
        }
    }

    /// Counts a node; false once the budget is spent.
    fn tick(&self) -> bool {
        if self.aborted.load(Ordering::Relaxed) {
            return false;
        }
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            self.aborted.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }
}

/// Static multicover instance.
struct Instance {
    n: usize,
    words: usize,
    members: Vec<Vec<u32>>,
    cover: Vec<Vec<u32>>,
    masks: Vec<u64>,
    /// Pairs by increasing set size, for the disjoint packing bound.
    packing_order: Vec<u32>,
}

impl Instance {
    fn new(table: &PairTable) -> Self {
        let n = table.order();
        let words = n.div_ceil(64);
        let mut members = Vec::with_capacity(table.len());
        let mut cover = vec![Vec::new(); n];
        let mut masks = vec![0u64; table.len() * words];
        for (p, r) in table.records().iter().enumerate() {
            let list: Vec<u32> = r.set.iter().map(|v| v as u32).collect();
            for &v in &list {
                cover[v as usize].push(p as u32);
                masks[p * words + v as usize / 64] |= 1 << (v % 64);
            }
            members.push(list);
        }
        let mut packing_order: Vec<u32> = (0..table.len() as u32).collect();
        packing_order.sort_by_key(|&p| members[p as usize].len());
        Self {
            n,
            words,
            members,
            cover,
            masks,
            packing_order,
        }
    }

    fn mask(&self, p: usize) -> &[u64] {
        &self.masks[p * self.words..(p + 1) * self.words]
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mark {
    Undecided,
    In,
    Out,
}

#[derive(Clone, Copy)]
enum Op {
    Include(u32),
    Exclude(u32),
}

#[derive(Clone)]
struct State<'a> {
    inst: &'a Instance,
    forced_pruning: bool,
    tie_break: TieBreak,
    mark: Vec<Mark>,
    need: Vec<i32>,
    avail: Vec<i32>,
    gain: Vec<i32>,
    total_need: i64,
    chosen: usize,
    undecided: Vec<u64>,
    trail: Vec<Op>,
}

impl<'a> State<'a> {
    fn new(inst: &'a Instance, k: usize, cfg: &SolverConfig) -> Self {
        let m = inst.members.len();
        let avail: Vec<i32> = inst.members.iter().map(|l| l.len() as i32).collect();
        let gain: Vec<i32> = inst.cover.iter().map(|c| c.len() as i32).collect();
        let mut undecided = vec![0u64; inst.words];
        for v in 0..inst.n {
            undecided[v / 64] |= 1 << (v % 64);
        }
        Self {
            inst,
            forced_pruning: cfg.forced_pruning,
            tie_break: cfg.tie_break,
            mark: vec![Mark::Undecided; inst.n],
            need: vec![k as i32; m],
            avail,
            gain,
            total_need: (k * m) as i64,
            chosen: 0,
            undecided,
            trail: Vec::with_capacity(inst.n),
        }
    }

    fn include(&mut self, v: usize) {
        debug_assert!(self.mark[v] == Mark::Undecided);
        self.mark[v] = Mark::In;
        self.undecided[v / 64] &= !(1 << (v % 64));
        self.chosen += 1;
        let inst = self.inst;
        for &p in &inst.cover[v] {
            let p = p as usize;
            self.avail[p] -= 1;
            if self.need[p] > 0 {
                self.total_need -= 1;
                if self.need[p] == 1 {
                    for &u in &inst.members[p] {
                        if self.mark[u as usize] == Mark::Undecided {
                            self.gain[u as usize] -= 1;
                        }
                    }
                }
            }
            self.need[p] -= 1;
        }
        self.trail.push(Op::Include(v as u32));
    }

    fn exclude(&mut self, v: usize) {
        debug_assert!(self.mark[v] == Mark::Undecided);
        self.mark[v] = Mark::Out;
        self.undecided[v / 64] &= !(1 << (v % 64));
        for &p in &self.inst.cover[v] {
            self.avail[p as usize] -= 1;
        }
        self.trail.push(Op::Exclude(v as u32));
    }

    fn undo_to(&mut self, len: usize) {
        let inst = self.inst;
        while self.trail.len() > len {
            match self.trail.pop().expect("trail is longer than len") {
                Op::Include(v) => {
                    let v = v as usize;
                    for &p in &inst.cover[v] {
                        let p = p as usize;
                        self.need[p] += 1;
                        if self.need[p] > 0 {
                            self.total_need += 1;
                            if self.need[p] == 1 {
                                for &u in &inst.members[p] {
                                    if self.mark[u as usize] == Mark::Undecided {
                                        self.gain[u as usize] += 1;
                                    }
                                }
                            }
                        }
                        self.avail[p] += 1;
                    }
                    self.chosen -= 1;
                    self.mark[v] = Mark::Undecided;
                    self.undecided[v / 64] |= 1 << (v % 64);
                }
                Op::Exclude(v) => {
                    let v = v as usize;
                    for &p in &inst.cover[v] {
                        self.avail[p as usize] += 1;
                    }
                    self.mark[v] = Mark::Undecided;
                    self.undecided[v / 64] |= 1 << (v % 64);
                }
            }
        }
    }

    fn force_pair(&mut self, p: usize) {
        let inst = self.inst;
        for &u in &inst.members[p] {
            if self.mark[u as usize] == Mark::Undecided {
                self.include(u as usize);
            }
        }
    }

    /// Root forcing: every pair whose whole set is needed. False if some
    /// pair cannot be covered at all.
    fn force_tight_pairs(&mut self) -> bool {
        for p in 0..self.need.len() {
            if self.need[p] > self.avail[p] {
                return false;
            }
            if self.need[p] > 0 && self.need[p] == self.avail[p] {
                self.force_pair(p);
            }
        }
        true
    }

    /// Excludes `v` and applies forcing; false on a dead end (the exclusion
    /// stays on the trail either way).
    fn exclude_and_propagate(&mut self, v: usize) -> bool {
        self.exclude(v);
        let inst = self.inst;
        for &p in &inst.cover[v] {
            let p = p as usize;
            if self.need[p] > self.avail[p] {
                return false;
            }
            if self.forced_pruning && self.need[p] > 0 && self.need[p] == self.avail[p] {
                self.force_pair(p);
            }
        }
        true
    }

    /// Lower bound on how many more vertices must be chosen.
    fn residual_bound(&self) -> usize {
        if self.total_need <= 0 {
            return 0;
        }
        let max_need = self.need.iter().copied().max().unwrap_or(0).max(0) as usize;

        let mut gains: Vec<i32> = (0..self.inst.n)
            .filter(|&v| self.mark[v] == Mark::Undecided)
            .map(|v| self.gain[v])
            .collect();
        gains.sort_unstable_by(|a, b| b.cmp(a));
        let mut covered = 0i64;
        let mut by_gain = usize::MAX;
        for (i, &g) in gains.iter().enumerate() {
            covered += g as i64;
            if covered >= self.total_need {
                by_gain = i + 1;
                break;
            }
        }

        let words = self.inst.words;
        let mut used = vec![0u64; words];
        let mut packed = 0usize;
        for &p in &self.inst.packing_order {
            let p = p as usize;
            if self.need[p] <= 0 {
                continue;
            }
            let mask = self.inst.mask(p);
            let disjoint = (0..words).all(|w| mask[w] & self.undecided[w] & used[w] == 0);
            if disjoint {
                packed += self.need[p] as usize;
                for w in 0..words {
                    used[w] |= mask[w] & self.undecided[w];
                }
            }
        }
        max_need.max(by_gain).max(packed)
    }

    fn branch_vertex(&self) -> Option<usize> {
        let candidates =
            (0..self.inst.n).filter(|&v| self.mark[v] == Mark::Undecided && self.gain[v] > 0);
        match self.tie_break {
            TieBreak::LowestIndex => candidates.rev().max_by_key(|&v| self.gain[v]),
            TieBreak::HighestIndex => candidates.max_by_key(|&v| self.gain[v]),
        }
    }

    fn current_set(&self) -> VertexSet {
        let members = (0..self.inst.n).filter(|&v| self.mark[v] == Mark::In);
        VertexSet::from_members(self.inst.n, members).expect("indices are in range")
    }

    fn search(&mut self, shared: &Shared) {
        if !shared.tick() {
            return;
        }
        if self.total_need <= 0 {
            if self.chosen < shared.best_value.load(Ordering::Acquire) {
                shared.offer(self.chosen, self.current_set());
            }
            return;
        }
        if self.chosen + self.residual_bound() >= shared.best_value.load(Ordering::Acquire) {
            return;
        }
        let Some(v) = self.branch_vertex() else {
            return;
        };
        let mark = self.trail.len();
        self.include(v);
        self.search(shared);
        self.undo_to(mark);
        if shared.aborted.load(Ordering::Relaxed) {
            return;
        }
        if self.exclude_and_propagate(v) {
            self.search(shared);
        }
        self.undo_to(mark);
    }

    /// Sequential search down to `depth` branchings; open nodes at that depth
    /// are returned as decision paths instead of being explored.
    fn expand(
        &mut self,
        depth: usize,
        path: &mut Vec<(usize, bool)>,
        out: &mut Vec<Vec<(usize, bool)>>,
        shared: &Shared,
    ) {
        if self.total_need <= 0 {
            if self.chosen < shared.best_value.load(Ordering::Acquire) {
                shared.offer(self.chosen, self.current_set());
            }
            return;
        }
        if self.chosen + self.residual_bound() >= shared.best_value.load(Ordering::Acquire) {
            return;
        }
        if depth == 0 {
            out.push(path.clone());
            return;
        }
        if !shared.tick() {
            return;
        }
        let Some(v) = self.branch_vertex() else {
            return;
        };
        let mark = self.trail.len();
        self.include(v);
        path.push((v, true));
        self.expand(depth - 1, path, out, shared);
        path.pop();
        self.undo_to(mark);
        if self.exclude_and_propagate(v) {
            path.push((v, false));
            self.expand(depth - 1, path, out, shared);
            path.pop();
        }
        self.undo_to(mark);
    }
}
