//! Search engines for matching book embeddings.
//!
//! Three deciders share one soundness rule — a witness is only ever
//! reported after the independent verifier re-checks it:
//!
//! * [`color_search`]: can the edges be put on at most `k` pages for a
//!   fixed circular layout? Backtracking with incremental forbidden-page
//!   masks and page-symmetry breaking.
//! * [`mbt_exact`]: exact matching book thickness of a tiny graph, by
//!   enumerating layouts up to rotation/reflection.
//! * [`search_extensible`]: the campaign search over en bloc layouts of
//!   `H □ C_s` for an extensible `t+3`-page embedding, with block-symmetry
//!   breaking, seed-viability pruning, budgets, and resumable checkpoints.
//!
//! With the default `parallel` feature, layout scans and the en bloc
//! search split across threads via rayon; without it everything runs on
//! the same sequential code path. [`oracles`] holds the deliberately naive
//! reference deciders the test suites compare against.

pub mod checkpoint;
pub mod cnf;
pub mod color_search;
pub mod config;
pub mod en_bloc;
pub mod mbt;
pub mod oracles;

pub use checkpoint::{config_hash, Checkpoint, Choice};
pub use cnf::{export_cnf, CnfDocument, CnfError};
pub use color_search::{color_search, SearchError};
pub use config::{SearchConfig, SearchOutcome, SearchStats, SearchStatus};
pub use en_bloc::{resume_extensible, search_extensible};
pub use mbt::{any_layout_colorable, canonical_layouts, mbt_exact, DEFAULT_MBT_CEILING};
