//! Search configuration, statistics, and outcomes.

use std::path::PathBuf;
use std::time::Duration;

use mbe_core::BookEmbedding;
use serde::{Deserialize, Serialize};

use crate::checkpoint::Checkpoint;

/// Budgets and parallelism for a search run.
///
/// Node budgets are the machine-independent mechanism: two runs with the
/// same node budget expand the same tree. Time budgets are a secondary
/// safety net checked coarsely. `workers = 1` is fully deterministic;
/// `workers = 0` uses every available core, and larger widths split the
/// search at disjoint DFS prefixes (same found/exhausted status, possibly
/// a different witness, and approximate budget cuts).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    /// Write a checkpoint every this many nodes (single-worker runs only).
    pub checkpoint_interval: Option<u64>,
    /// Where periodic and budget-stop checkpoints are written.
    pub checkpoint_path: Option<PathBuf>,
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: None,
            time_budget: None,
            checkpoint_interval: None,
            checkpoint_path: None,
            workers: 1,
        }
    }
}

impl SearchConfig {
    pub fn with_node_budget(mut self, budget: u64) -> Self {
        self.node_budget = Some(budget);
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    Found,
    Exhausted,
    BudgetExhausted,
}

/// Counters for expanded nodes and pruned branches.
///
/// A node is one applied choice (a block order or an edge-page
/// assignment). Wall time is informational and excluded from determinism
/// comparisons.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub adjacency_prunes: u64,
    pub crossing_prunes: u64,
    pub symmetry_prunes: u64,
    pub capacity_prunes: u64,
    pub seed_prunes: u64,
    /// Completed assignments rejected by the final re-verification
    /// (extensibility or the replication smoke test).
    pub rejected_candidates: u64,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub wall_ms: u64,
}

fn is_zero(v: &u64) -> bool {
    *v == 0
}

impl SearchStats {
    pub fn add(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.adjacency_prunes += other.adjacency_prunes;
        self.crossing_prunes += other.crossing_prunes;
        self.symmetry_prunes += other.symmetry_prunes;
        self.capacity_prunes += other.capacity_prunes;
        self.seed_prunes += other.seed_prunes;
        self.rejected_candidates += other.rejected_candidates;
        self.wall_ms = self.wall_ms.max(other.wall_ms);
    }

    /// The same stats with wall time zeroed, for determinism assertions.
    pub fn without_wall(&self) -> SearchStats {
        SearchStats {
            wall_ms: 0,
            ..self.clone()
        }
    }

    pub fn wall(&self) -> Duration {
        Duration::from_millis(self.wall_ms)
    }
}

/// Result of a search run. A witness, when present, has already passed the
/// independent verifier (and the extensibility check where required); it is
/// never trusted from search state alone.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub witness: Option<BookEmbedding>,
    pub stats: SearchStats,
    /// Present when the run stopped on a budget; resuming from it
    /// continues the same tree walk.
    pub checkpoint: Option<Checkpoint>,
}

impl SearchOutcome {
    pub fn found(&self) -> bool {
        self.status == SearchStatus::Found
    }
}
