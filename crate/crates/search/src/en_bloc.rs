//! Backtracking search for extensible embeddings over en bloc layouts.
//!
//! The layout space is fixed to en bloc form: block `b` of `H □ C_s`
//! occupies slots `[(b-1)h, bh)`, so the natural counter-clockwise block
//! order holds by construction and only the internal order of each block is
//! chosen. Blocks are completed one at a time — internal order, then the
//! block's interior edge pages, then the boundary matching to the previous
//! block — so both the coloring constraints and the seed conditions prune
//! early. Page symmetry is broken as in the fixed-layout search; layout
//! symmetry is quotiented by the cycle factor's rotations and reflections
//! and, when H is itself a standard cycle, by H's rotations.
//!
//! Soundness: a completed assignment is only reported after the
//! independent verifier accepts it, the extensibility predicate holds, and
//! one replication step succeeds as a smoke test.

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

#[cfg(feature = "parallel")]
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use mbe_core::blocks::is_extensible;
use mbe_core::embedding::{BookEmbedding, PageColoring};
use mbe_core::extend::extend;
use mbe_core::graph::{cartesian_product, cycle, Graph, ProductNumbering};
use mbe_core::layout::CyclicLayout;

use crate::checkpoint::{config_hash, Checkpoint, Choice};
use crate::color_search::SearchError;
use crate::config::{SearchConfig, SearchOutcome, SearchStats, SearchStatus};

const UNSET: usize = usize::MAX;

#[derive(Clone, Copy)]
enum Level {
    /// Choose the internal order of block `b`.
    Block(usize),
    /// Assign a page to edge id `e`; the flag requests a seed-viability
    /// check after the assignment (set on sub-batch boundaries).
    Edge(usize, bool),
}

struct Problem {
    product: Graph,
    numbering: ProductNumbering,
    k: usize,
    t: usize,
    levels: Vec<Level>,
    /// Per block (0-based): interior edge ids and boundary matching ids.
    block_intra: Vec<Vec<usize>>,
    block_before: Vec<Vec<usize>>,
    block_after: Vec<Vec<usize>>,
    /// Whether H is the standard cycle on its vertex count, enabling
    /// fiber-rotation symmetry breaking.
    is_h_cycle: bool,
    hash: String,
}

impl Problem {
    fn new(h_graph: &Graph, s: usize, k: usize) -> Result<Self, SearchError> {
        if s < 3 {
            return Err(SearchError::CycleTooShort(s));
        }
        if h_graph.n() == 0 || !h_graph.is_regular() {
            return Err(SearchError::FactorNotRegular);
        }
        if h_graph.is_bipartite() {
            return Err(SearchError::FactorBipartite);
        }
        let t = h_graph.max_degree();
        if k != t + 3 {
            return Err(SearchError::PageBudgetMismatch {
                t,
                expected: t + 3,
                got: k,
            });
        }
        let h = h_graph.n();
        let product =
            cartesian_product(h_graph, &cycle(s).expect("s >= 3")).expect("factors nonempty");
        let numbering = ProductNumbering::new(h, s);

        let mut block_intra = vec![Vec::new(); s];
        let mut matching = vec![Vec::new(); s]; // matching[j-1] joins blocks j and j+1 (cyclic)
        for (id, e) in product.edges().iter().enumerate() {
            let a = numbering.block_index(e.u());
            let b = numbering.block_index(e.v());
            if a == b {
                block_intra[a - 1].push(id);
            } else {
                debug_assert!(b == a + 1 || (a == 1 && b == s), "product edges join neighbors");
                let j = if b == a + 1 { a } else { b };
                matching[j - 1].push(id);
            }
        }
        let block_before: Vec<Vec<usize>> = (1..=s)
            .map(|j| matching[if j == 1 { s - 1 } else { j - 2 }].clone())
            .collect();
        let block_after: Vec<Vec<usize>> = (1..=s).map(|j| matching[j - 1].clone()).collect();

        let mut levels = Vec::new();
        let push_batch = |levels: &mut Vec<Level>, ids: &[usize]| {
            for (i, &e) in ids.iter().enumerate() {
                levels.push(Level::Edge(e, i + 1 == ids.len()));
            }
        };
        for b in 1..=s {
            levels.push(Level::Block(b));
            push_batch(&mut levels, &block_intra[b - 1]);
            if b >= 2 {
                push_batch(&mut levels, &block_before[b - 1]);
            }
            if b == s {
                push_batch(&mut levels, &block_after[s - 1]);
            }
        }

        let is_h_cycle = h >= 3 && cycle(h).map(|c| &c == h_graph).unwrap_or(false);
        Ok(Problem {
            hash: config_hash(h_graph, s, k),
            product,
            numbering,
            k,
            t,
            levels,
            block_intra,
            block_before,
            block_after,
            is_h_cycle,
        })
    }

    fn h(&self) -> usize {
        self.numbering.h()
    }

    fn s(&self) -> usize {
        self.numbering.s()
    }
}

/// Fiber sequence normalized by the rotation that anchors its first entry
/// at fiber 1 (identity when fiber rotations are not available).
fn normalize(fibers: &[usize], h: usize, rotate: bool) -> Vec<usize> {
    if !rotate {
        return fibers.to_vec();
    }
    let c = fibers[0];
    fibers.iter().map(|&x| (x + h - c) % h + 1).collect()
}

enum Stopped {
    Found,
    Budget,
    /// Another worker won, or a resume prefix failed to replay.
    Cancelled,
}

trait SharedControl {
    /// Claims one node; false when the global node budget is spent.
    fn claim_node(&self) -> bool;
    fn cancelled(&self) -> bool;
    fn cancel(&self);
}

struct LocalControl {
    budget: u64,
    spent: std::cell::Cell<u64>,
}

impl SharedControl for LocalControl {
    fn claim_node(&self) -> bool {
        let next = self.spent.get() + 1;
        if next > self.budget {
            return false;
        }
        self.spent.set(next);
        true
    }
    fn cancelled(&self) -> bool {
        false
    }
    fn cancel(&self) {}
}

#[cfg(feature = "parallel")]
struct AtomicControl {
    budget: u64,
    spent: AtomicU64,
    found: AtomicBool,
}

#[cfg(feature = "parallel")]
impl SharedControl for AtomicControl {
    fn claim_node(&self) -> bool {
        self.spent.fetch_add(1, Ordering::Relaxed) < self.budget
    }
    fn cancelled(&self) -> bool {
        self.found.load(Ordering::Relaxed)
    }
    fn cancel(&self) {
        self.found.store(true, Ordering::Relaxed);
    }
}

struct Walker<'p, 'c> {
    p: &'p Problem,
    control: &'c dyn SharedControl,
    slot_of: Vec<usize>,
    vertex_at: Vec<usize>,
    page_of: Vec<u8>,
    assigned: Vec<u32>,
    stats: SearchStats,
    path: Vec<Choice>,
    /// Prefix being replayed on the first descent; the final entry is the
    /// pending (unapplied) choice. Replay applies interior entries without
    /// recounting nodes or prunes — they are in the checkpoint's stats.
    resume: Option<Vec<Choice>>,
    replaying: bool,
    deadline: Option<Instant>,
    checkpoint_interval: Option<u64>,
    checkpoint_path: Option<PathBuf>,
    /// Set when the walk pauses on a budget or deadline.
    paused: Option<Checkpoint>,
    witness: Option<BookEmbedding>,
    /// Restrict the root level to one candidate (parallel task splitting).
    root_pin: Option<Vec<usize>>,
}

impl<'p, 'c> Walker<'p, 'c> {
    fn new(p: &'p Problem, control: &'c dyn SharedControl) -> Self {
        let n = p.numbering.n();
        Walker {
            p,
            control,
            slot_of: vec![UNSET; n + 1],
            vertex_at: vec![UNSET; n],
            page_of: vec![0; p.product.edge_count()],
            assigned: Vec::with_capacity(p.product.edge_count()),
            stats: SearchStats::default(),
            path: Vec::with_capacity(p.levels.len()),
            resume: None,
            replaying: false,
            deadline: None,
            checkpoint_interval: None,
            checkpoint_path: None,
            paused: None,
            witness: None,
            root_pin: None,
        }
    }

    fn fiber(&self, v: usize) -> usize {
        self.p.numbering.fiber_index(v)
    }

    fn pi1_fibers(&self) -> Vec<usize> {
        (0..self.p.h()).map(|i| self.fiber(self.vertex_at[i])).collect()
    }

    /// Internal orders for block `b` surviving symmetry breaking, in
    /// lexicographic order. `count` controls whether rejected orders are
    /// added to the symmetry-prune statistics (suppressed during replay).
    fn block_candidates(&mut self, b: usize, count: bool) -> Vec<Vec<usize>> {
        if b == 1 {
            if let Some(pin) = &self.root_pin {
                return vec![pin.clone()];
            }
        }
        let h = self.p.h();
        let base = (b - 1) * h;
        let vertices: Vec<usize> = (base + 1..=base + h).collect();
        let rot = self.p.is_h_cycle;
        let pi1 = if b >= 2 { self.pi1_fibers() } else { Vec::new() };
        let mut out = Vec::new();
        for perm in itertools::Itertools::permutations(vertices.iter().copied(), h) {
            let fibers: Vec<usize> = perm.iter().map(|&v| self.fiber(v)).collect();
            let rev: Vec<usize> = fibers.iter().rev().copied().collect();
            let keep = if b == 1 {
                // Anchor on fiber 1 (fiber rotations) and quotient the
                // combined circle-plus-cycle reflection.
                (!rot || fibers[0] == 1) && fibers <= normalize(&rev, h, rot)
            } else {
                // Necessary conditions for the block-rotation and
                // -reflection canonical form: no block may beat block 1.
                normalize(&fibers, h, rot) >= pi1 && normalize(&rev, h, rot) >= pi1
            };
            if keep {
                out.push(perm);
            } else if count {
                self.stats.symmetry_prunes += 1;
            }
        }
        out
    }

    fn place_block(&mut self, b: usize, order: &[usize]) {
        let base = (b - 1) * self.p.h();
        for (i, &v) in order.iter().enumerate() {
            self.slot_of[v] = base + i;
            self.vertex_at[base + i] = v;
        }
    }

    fn unplace_block(&mut self, b: usize, order: &[usize]) {
        let base = (b - 1) * self.p.h();
        for (i, &v) in order.iter().enumerate() {
            self.slot_of[v] = UNSET;
            self.vertex_at[base + i] = UNSET;
        }
    }

    /// Forbidden page masks for `edge` against everything assigned so far,
    /// split by clash kind. Positions of both endpoints are placed by the
    /// time an edge's level is reached.
    fn forbidden(&self, edge: usize) -> (u64, u64) {
        let edges = self.p.product.edges();
        let e = edges[edge];
        let (u, v) = (e.u(), e.v());
        let (pu, pv) = (self.slot_of[u], self.slot_of[v]);
        let n = self.p.numbering.n();
        let len = (pv + n - pu) % n;
        let mut adj = 0u64;
        let mut cross = 0u64;
        for &other in &self.assigned {
            let o = edges[other as usize];
            let bit = 1u64 << self.page_of[other as usize];
            if o.touches(u) || o.touches(v) {
                adj |= bit;
                continue;
            }
            let off_a = (self.slot_of[o.u()] + n - pu) % n;
            let off_b = (self.slot_of[o.v()] + n - pu) % n;
            if (off_a > 0 && off_a < len) != (off_b > 0 && off_b < len) {
                cross |= bit;
            }
        }
        (adj, cross)
    }

    /// Monotone seed-viability test: blocks with uncolored interiors are
    /// still open; a fully colored interior on more than `t+1` pages is
    /// dead; otherwise the block is dead only when every 2-subset of its
    /// unused pages already has both pages on one boundary matching
    /// (pages only accumulate, so dead blocks stay dead). When no block
    /// remains open or viable the branch cannot produce a seed.
    fn seed_still_possible(&self) -> bool {
        let k = self.p.k;
        let t = self.p.t;
        for j in 0..self.p.s() {
            let mut used = 0u64;
            let mut open = false;
            for &e in &self.p.block_intra[j] {
                let page = self.page_of[e];
                if page == 0 {
                    open = true;
                    break;
                }
                used |= 1 << page;
            }
            if open {
                return true;
            }
            if (used.count_ones() as usize) > t + 1 {
                continue;
            }
            let mask_of = |ids: &[usize]| -> u64 {
                ids.iter()
                    .map(|&e| self.page_of[e])
                    .filter(|&p| p != 0)
                    .fold(0u64, |m, p| m | (1 << p))
            };
            let before = mask_of(&self.p.block_before[j]);
            let after = mask_of(&self.p.block_after[j]);
            let unused: Vec<usize> = (1..=k).filter(|&p| used & (1 << p) == 0).collect();
            for (a, &x) in unused.iter().enumerate() {
                for &y in &unused[a + 1..] {
                    let pair = (1u64 << x) | (1u64 << y);
                    if before & pair != pair && after & pair != pair {
                        return true;
                    }
                }
            }
        }
        false
    }

    fn snapshot(&self, pending: Choice) -> Checkpoint {
        let mut prefix = self.path.clone();
        prefix.push(pending);
        Checkpoint {
            prefix,
            stats: self.stats.without_wall(),
            config_hash: self.p.hash.clone(),
        }
    }

    /// Budget, deadline, cancellation, and periodic checkpointing,
    /// evaluated right before a choice is applied.
    fn gate(&mut self, pending: Choice) -> Option<Stopped> {
        if self.control.cancelled() {
            return Some(Stopped::Cancelled);
        }
        if !self.control.claim_node() {
            self.paused = Some(self.snapshot(pending));
            return Some(Stopped::Budget);
        }
        if let Some(deadline) = self.deadline {
            if self.stats.nodes % 1024 == 0 && Instant::now() >= deadline {
                self.paused = Some(self.snapshot(pending));
                return Some(Stopped::Budget);
            }
        }
        if let Some(interval) = self.checkpoint_interval {
            if self.stats.nodes > 0 && self.stats.nodes % interval == 0 {
                if let Some(path) = &self.checkpoint_path {
                    let cp = self.snapshot(pending);
                    let _ = fs::write(path, cp.to_json());
                }
            }
        }
        None
    }

    /// The recorded choice for `level` when replaying, plus whether it is
    /// the pending (unapplied) entry. Leaving replay mode happens here.
    fn resume_lookup(&mut self, level: usize) -> Option<(Choice, bool)> {
        if !self.replaying {
            return None;
        }
        let prefix = self.resume.as_ref().expect("replaying implies a prefix");
        let choice = prefix[level].clone();
        let pending = level + 1 == prefix.len();
        if pending {
            self.replaying = false;
        }
        Some((choice, pending))
    }

    fn explore(&mut self, level: usize, max_used: usize) -> Result<(), Stopped> {
        match self.p.levels[level] {
            Level::Block(b) => self.explore_block(level, max_used, b),
            Level::Edge(edge, check_seed) => self.explore_edge(level, max_used, edge, check_seed),
        }
    }

    fn explore_block(&mut self, level: usize, max_used: usize, b: usize) -> Result<(), Stopped> {
        let entry_replaying = self.replaying;
        let candidates = self.block_candidates(b, !entry_replaying);
        let (start, mut silent) = match self.resume_lookup(level) {
            None => (0, false),
            Some((Choice::Block(order), pending)) => {
                match candidates.iter().position(|c| *c == order) {
                    Some(idx) => (idx, !pending),
                    None => return Err(Stopped::Cancelled),
                }
            }
            Some((Choice::Page(_), _)) => return Err(Stopped::Cancelled),
        };
        for idx in start..candidates.len() {
            let order = &candidates[idx];
            if !silent {
                if let Some(stop) = self.gate(Choice::Block(order.clone())) {
                    return Err(stop);
                }
                self.stats.nodes += 1;
            }
            self.place_block(b, order);
            self.path.push(Choice::Block(order.clone()));
            let result = self.explore(level + 1, max_used);
            self.path.pop();
            self.unplace_block(b, order);
            result?;
            silent = false;
        }
        Ok(())
    }

    fn explore_edge(
        &mut self,
        level: usize,
        max_used: usize,
        edge: usize,
        check_seed: bool,
    ) -> Result<(), Stopped> {
        let entry_replaying = self.replaying;
        let k = self.p.k;
        let m = self.p.product.edge_count();
        // Surjectivity: the edges still uncolored (including this one)
        // must be able to introduce every page not yet used.
        if max_used + (m - self.assigned.len()) < k {
            self.stats.capacity_prunes += 1;
            return Ok(());
        }
        let (adj, cross) = self.forbidden(edge);
        let cap = (max_used + 1).min(k);
        if !entry_replaying {
            self.stats.symmetry_prunes += (k - cap) as u64;
        }
        let (start_page, mut silent) = match self.resume_lookup(level) {
            None => (1, false),
            Some((Choice::Page(p), pending)) if (1..=cap).contains(&p) => (p, !pending),
            Some(_) => return Err(Stopped::Cancelled),
        };
        for page in start_page..=cap {
            let bit = 1u64 << page;
            if adj & bit != 0 {
                if silent {
                    return Err(Stopped::Cancelled); // prefix divergence
                }
                self.stats.adjacency_prunes += 1;
                continue;
            }
            if cross & bit != 0 {
                if silent {
                    return Err(Stopped::Cancelled);
                }
                self.stats.crossing_prunes += 1;
                continue;
            }
            if !silent {
                if let Some(stop) = self.gate(Choice::Page(page)) {
                    return Err(stop);
                }
                self.stats.nodes += 1;
            }
            self.page_of[edge] = page as u8;
            self.assigned.push(edge as u32);
            self.path.push(Choice::Page(page));
            let new_max = max_used.max(page);
            let result = if check_seed && !silent && !self.seed_still_possible() {
                self.stats.seed_prunes += 1;
                Ok(())
            } else if level + 1 == self.p.levels.len() {
                self.complete(new_max)
            } else {
                self.explore(level + 1, new_max)
            };
            self.path.pop();
            self.assigned.pop();
            self.page_of[edge] = 0;
            result?;
            silent = false;
        }
        Ok(())
    }

    /// A complete assignment: re-check everything through the library
    /// predicates before accepting it.
    fn complete(&mut self, max_used: usize) -> Result<(), Stopped> {
        if max_used != self.p.k {
            self.stats.rejected_candidates += 1;
            return Ok(());
        }
        let layout = CyclicLayout::new(self.vertex_at.clone()).expect("all slots placed");
        let assignment = self
            .p
            .product
            .edges()
            .iter()
            .enumerate()
            .map(|(id, &e)| (e, self.page_of[id] as usize))
            .collect();
        let coloring = PageColoring::new(self.p.k, assignment).expect("pages in range");
        let embedding = BookEmbedding::new(self.p.product.clone(), layout, coloring)
            .expect("assignment is total");
        let verdict = is_extensible(&embedding, self.p.h(), self.p.s(), self.p.t);
        if !verdict.extensible {
            self.stats.rejected_candidates += 1;
            return Ok(());
        }
        // Smoke test: one replication step must verify too.
        if extend(&embedding, self.p.h(), self.p.s(), verdict.seeds[0], 2).is_err() {
            self.stats.rejected_candidates += 1;
            return Ok(());
        }
        self.witness = Some(embedding);
        self.control.cancel();
        Err(Stopped::Found)
    }
}

fn run_sequential(
    problem: &Problem,
    config: &SearchConfig,
    resume: Option<Vec<Choice>>,
    base_stats: SearchStats,
) -> Result<SearchOutcome, SearchError> {
    let started = Instant::now();
    let control = LocalControl {
        budget: config.node_budget.unwrap_or(u64::MAX),
        spent: std::cell::Cell::new(base_stats.nodes),
    };
    let mut walker = Walker::new(problem, &control);
    walker.stats = base_stats;
    walker.deadline = config.time_budget.map(|d| started + d);
    walker.checkpoint_interval = config.checkpoint_interval;
    walker.checkpoint_path = config.checkpoint_path.clone();
    walker.replaying = resume.is_some();
    walker.resume = resume;

    let result = walker.explore(0, 0);
    let mut stats = walker.stats;
    stats.wall_ms = started.elapsed().as_millis() as u64;
    match result {
        Err(Stopped::Found) => Ok(SearchOutcome {
            status: SearchStatus::Found,
            witness: walker.witness,
            stats,
            checkpoint: None,
        }),
        Err(Stopped::Budget) => {
            let checkpoint = walker.paused;
            if let (Some(cp), Some(path)) = (&checkpoint, &config.checkpoint_path) {
                let _ = fs::write(path, cp.to_json());
            }
            Ok(SearchOutcome {
                status: SearchStatus::BudgetExhausted,
                witness: None,
                stats,
                checkpoint,
            })
        }
        Err(Stopped::Cancelled) => Err(SearchError::CheckpointInvalid(
            "recorded prefix does not replay against this search tree".into(),
        )),
        Ok(()) => Ok(SearchOutcome {
            status: SearchStatus::Exhausted,
            witness: None,
            stats,
            checkpoint: None,
        }),
    }
}

/// Searches en bloc layouts of `H □ C_s` for an extensible `k`-page
/// embedding (`H` must be `t`-regular nonbipartite with `k = t+3`).
///
/// Single-worker runs are fully deterministic and resumable; multi-worker
/// runs split the root block's candidate orders across tasks and guarantee
/// the same found/exhausted status but not the same witness or statistics.
pub fn search_extensible(
    h_graph: &Graph,
    s: usize,
    k: usize,
    config: &SearchConfig,
) -> Result<SearchOutcome, SearchError> {
    let problem = Problem::new(h_graph, s, k)?;

    // Pages are matchings: with too few slots nothing can be colored.
    let n = problem.numbering.n();
    if problem.product.edge_count() > k * (n / 2) {
        return Ok(SearchOutcome {
            status: SearchStatus::Exhausted,
            witness: None,
            stats: SearchStats {
                capacity_prunes: 1,
                ..Default::default()
            },
            checkpoint: None,
        });
    }

    if config.workers == 1 {
        return run_sequential(&problem, config, None, SearchStats::default());
    }
    if config.checkpoint_interval.is_some() || config.checkpoint_path.is_some() {
        return Err(SearchError::ParallelCheckpointUnsupported);
    }
    run_parallel(&problem, config)
}

/// Resumes a truncated single-worker run from its checkpoint. The search
/// inputs must hash to the checkpoint's `config_hash`; statistics continue
/// from the recorded values, so a resumed run finishes with exactly the
/// outcome and counters of an uninterrupted one.
pub fn resume_extensible(
    h_graph: &Graph,
    s: usize,
    k: usize,
    config: &SearchConfig,
    checkpoint: &Checkpoint,
) -> Result<SearchOutcome, SearchError> {
    let problem = Problem::new(h_graph, s, k)?;
    if checkpoint.config_hash != problem.hash {
        return Err(SearchError::CheckpointMismatch {
            expected: problem.hash.clone(),
            got: checkpoint.config_hash.clone(),
        });
    }
    if config.workers != 1 {
        return Err(SearchError::ParallelCheckpointUnsupported);
    }
    if checkpoint.prefix.is_empty() || checkpoint.prefix.len() > problem.levels.len() {
        return Err(SearchError::CheckpointInvalid(
            "prefix length does not fit the search tree".into(),
        ));
    }
    run_sequential(
        &problem,
        config,
        Some(checkpoint.prefix.clone()),
        checkpoint.stats.without_wall(),
    )
}

#[cfg(feature = "parallel")]
fn run_parallel(problem: &Problem, config: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    use rayon::prelude::*;

    let started = Instant::now();
    let control = AtomicControl {
        budget: config.node_budget.unwrap_or(u64::MAX),
        spent: AtomicU64::new(0),
        found: AtomicBool::new(false),
    };
    // Root candidates, computed once; each becomes an independent task.
    let roots = {
        let local = LocalControl {
            budget: u64::MAX,
            spent: std::cell::Cell::new(0),
        };
        Walker::new(problem, &local).block_candidates(1, false)
    };

    let body = || {
        roots
            .par_iter()
            .map(|root| {
                let mut walker = Walker::new(problem, &control);
                walker.deadline = config.time_budget.map(|d| started + d);
                walker.root_pin = Some(root.clone());
                let result = walker.explore(0, 0);
                (
                    matches!(result, Err(Stopped::Found)),
                    matches!(result, Err(Stopped::Budget)),
                    walker.witness,
                    walker.stats,
                )
            })
            .collect::<Vec<_>>()
    };
    let results = if config.workers == 0 {
        body()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
            .expect("thread pool");
        pool.install(body)
    };

    let mut stats = SearchStats::default();
    let mut witness = None;
    let mut budget_hit = false;
    for (found, hit, w, task_stats) in results {
        stats.add(&task_stats);
        budget_hit |= hit;
        if found && witness.is_none() {
            witness = w;
        }
    }
    stats.wall_ms = started.elapsed().as_millis() as u64;
    let status = if witness.is_some() {
        SearchStatus::Found
    } else if budget_hit {
        SearchStatus::BudgetExhausted
    } else {
        SearchStatus::Exhausted
    };
    Ok(SearchOutcome {
        status,
        witness,
        stats,
        checkpoint: None,
    })
}

#[cfg(not(feature = "parallel"))]
fn run_parallel(problem: &Problem, config: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    // Sequential fallback: worker counts other than 1 degrade to the
    // deterministic single-worker walk.
    run_sequential(problem, config, None, SearchStats::default())
}
