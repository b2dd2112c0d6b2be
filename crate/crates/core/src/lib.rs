//! Matching book embeddings of graphs, centered on Cartesian products of
//! cycles: circular layouts, page colorings, a verifier, en bloc block
//! structure with seed conditions, and the seed-replication extension that
//! turns one extensible embedding of `H □ C_s` into embeddings of
//! `H □ C_{s+r}` for every even `r > 0`.
//!
//! All types are immutable values after construction and every operation
//! here is a pure function, so everything is safe to share across threads.

pub mod blocks;
pub mod embedding;
pub mod extend;
pub mod fixtures;
pub mod graph;
pub mod json;
pub mod layout;

pub use blocks::{
    boundary_matchings, detect_blocks, is_extensible, seed_report, BlockError, BlockStructure,
    ExtensibilityVerdict, NotEnBloc, SeedReport,
};
pub use embedding::{
    edges_conflict, verify, BookEmbedding, PageColoring, PageId, ValidityReport, Violation,
};
pub use extend::{certify_family, extend, reverse_block, Extension, ExtensionPlan, ExtendError};
pub use graph::{cartesian_product, cycle, Edge, Graph, GraphError, ProductNumbering};
pub use layout::{CyclicLayout, LayoutError};
