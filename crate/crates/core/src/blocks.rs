//! En bloc structure of product layouts and the seed conditions.
//!
//! For `G = H □ C_s` under [`ProductNumbering`], a layout is *en bloc* when
//! (1) every block — the fiber of one second coordinate — occupies a
//! contiguous arc, and (2) the blocks appear in the natural
//! counter-clockwise order `1, 2, …, s` (up to rotation). Each block is
//! joined to its circular predecessor and successor by perfect matchings;
//! a block is a *seed* when its interior uses at most `t+1` of the `t+3`
//! pages and some two unused pages are separated across those matchings.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::embedding::{verify, BookEmbedding, PageId};
use crate::graph::{Edge, ProductNumbering};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BlockError {
    #[error("embedding has {got} vertices, expected h*s = {expected}")]
    VertexCountMismatch { expected: usize, got: usize },
    #[error("coloring has {got} pages but extensibility is defined for t+3 = {expected}")]
    PageCountMismatch { expected: usize, got: usize },
}

/// Why a layout failed the en bloc test, with a witness vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NotEnBloc {
    /// Some block's vertices do not form one contiguous arc. The witness is
    /// the block's vertex found outside its longest run.
    BlockNotContiguous { block: usize, witness: usize },
    /// Blocks are contiguous but not in the natural cyclic order. The
    /// witness is the first vertex of the offending arc.
    BlocksOutOfOrder { block: usize, witness: usize },
}

/// The arcs of an en bloc layout, indexed by block `1..=s`, each listed in
/// layout (counter-clockwise) order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockStructure {
    numbering: ProductNumbering,
    arcs: Vec<Vec<usize>>,
}

impl BlockStructure {
    pub fn numbering(&self) -> ProductNumbering {
        self.numbering
    }

    pub fn s(&self) -> usize {
        self.numbering.s()
    }

    pub fn h(&self) -> usize {
        self.numbering.h()
    }

    /// Layout-order vertex sequence of block `j` (1-based).
    pub fn arc(&self, j: usize) -> &[usize] {
        &self.arcs[j - 1]
    }

    pub fn arcs(&self) -> &[Vec<usize>] {
        &self.arcs
    }

    fn predecessor(&self, j: usize) -> usize {
        if j == 1 {
            self.s()
        } else {
            j - 1
        }
    }

    fn successor(&self, j: usize) -> usize {
        if j == self.s() {
            1
        } else {
            j + 1
        }
    }
}

/// Checks the two en bloc conditions and returns the block partition, or a
/// verdict naming the first violated condition.
///
/// Returns an error when the vertex count is not `h*s`.
pub fn detect_blocks(
    embedding: &BookEmbedding,
    h: usize,
    s: usize,
) -> Result<Result<BlockStructure, NotEnBloc>, BlockError> {
    let numbering = ProductNumbering::new(h, s);
    let n = embedding.graph().n();
    if n != numbering.n() {
        return Err(BlockError::VertexCountMismatch {
            expected: numbering.n(),
            got: n,
        });
    }
    let layout = embedding.layout();

    // Contiguity: the positions of each block must form one cyclic run.
    for j in 1..=s {
        let mut slots: Vec<usize> = numbering.block_vertices(j).map(|v| layout.position(v)).collect();
        slots.sort_unstable();
        // Count cyclic gaps between consecutive occupied slots.
        let mut gaps = 0;
        let mut gap_start = None;
        for i in 0..h {
            let next = slots[(i + 1) % h];
            let cur = slots[i];
            let diff = (next + n - cur) % n;
            if diff != 1 {
                gaps += 1;
                gap_start = Some(next);
            }
        }
        if gaps > 1 {
            // The vertex right after some gap is outside the block's main run.
            let witness_slot = gap_start.expect("gaps imply a gap start");
            let witness = layout.vertex_at(witness_slot);
            return Ok(Err(NotEnBloc::BlockNotContiguous { block: j, witness }));
        }
    }

    // Natural order: walking the circle from block 1's arc must visit
    // blocks 1, 2, …, s.
    let start = numbering
        .block_vertices(1)
        .map(|v| layout.position(v))
        .min()
        .map(|p| {
            // Block 1's arc may wrap; its first slot is the one whose cyclic
            // predecessor belongs to a different block.
            let mut first = p;
            for v in numbering.block_vertices(1) {
                let q = layout.position(v);
                let prev = layout.vertex_at((q + n - 1) % n);
                if numbering.block_index(prev) != 1 {
                    first = q;
                }
            }
            first
        })
        .expect("blocks are nonempty");

    let mut arcs = vec![Vec::new(); s];
    for step in 0..n {
        let slot = (start + step) % n;
        let v = layout.vertex_at(slot);
        let expected_block = step / h + 1;
        let actual_block = numbering.block_index(v);
        if actual_block != expected_block {
            return Ok(Err(NotEnBloc::BlocksOutOfOrder {
                block: expected_block,
                witness: v,
            }));
        }
        arcs[actual_block - 1].push(v);
    }

    Ok(Ok(BlockStructure { numbering, arcs }))
}

/// The perfect matchings joining block `j` to its counter-clockwise
/// predecessor (`before`) and successor (`after`), in canonical edge order.
pub fn boundary_matchings(
    embedding: &BookEmbedding,
    blocks: &BlockStructure,
    j: usize,
) -> (Vec<Edge>, Vec<Edge>) {
    let numbering = blocks.numbering();
    let collect = |a: usize, b: usize| -> Vec<Edge> {
        embedding
            .graph()
            .edges()
            .iter()
            .copied()
            .filter(|e| {
                let (bu, bv) = (numbering.block_index(e.u()), numbering.block_index(e.v()));
                (bu == a && bv == b) || (bu == b && bv == a)
            })
            .collect()
    };
    (
        collect(blocks.predecessor(j), j),
        collect(j, blocks.successor(j)),
    )
}

/// Per-block seed verdicts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeedReport {
    /// Block index `1..=s`.
    pub block: usize,
    /// Pages used by intra-block edges.
    pub intra_pages: BTreeSet<PageId>,
    /// Pages on the before-matching.
    pub before_pages: BTreeSet<PageId>,
    /// Pages on the after-matching.
    pub after_pages: BTreeSet<PageId>,
    /// Pages unused inside the block.
    pub unused_pages: Vec<PageId>,
    /// Every candidate pair of unused pages with where (if anywhere) it is
    /// blocked: whether the before/after matching carries both of its pages.
    pub pair_checks: Vec<UnusedPairCheck>,
    /// The first separated pair, when one exists; this is the pair the
    /// extension uses for its inserted matchings.
    pub chosen_pair: Option<(PageId, PageId)>,
    /// Intra-block edges use at most `t+1` pages.
    pub verdict_a: bool,
    /// Some pair of unused pages is separated by the boundary matchings.
    pub verdict_b: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct UnusedPairCheck {
    pub pair: (PageId, PageId),
    pub both_in_before: bool,
    pub both_in_after: bool,
}

impl UnusedPairCheck {
    pub fn separated(&self) -> bool {
        !self.both_in_before && !self.both_in_after
    }
}

impl SeedReport {
    pub fn is_seed(&self) -> bool {
        self.verdict_a && self.verdict_b
    }
}

/// Computes one [`SeedReport`] per block. `t` is the regularity degree of
/// the H factor; the total page count must be `t+3`.
///
/// When a block uses fewer than `t+1` pages there are more than two unused
/// pages; every 2-subset is then evaluated and condition (b) holds iff some
/// 2-subset is separated, which is recorded as `chosen_pair`.
pub fn seed_report(
    embedding: &BookEmbedding,
    blocks: &BlockStructure,
    t: usize,
) -> Result<Vec<SeedReport>, BlockError> {
    let k = embedding.coloring().k();
    if k != t + 3 {
        return Err(BlockError::PageCountMismatch {
            expected: t + 3,
            got: k,
        });
    }
    let numbering = blocks.numbering();
    let coloring = embedding.coloring();

    let pages_of = |edges: &[Edge]| -> BTreeSet<PageId> {
        edges
            .iter()
            .map(|e| coloring.page_of(*e).expect("well-formed embedding"))
            .collect()
    };

    let mut reports = Vec::with_capacity(blocks.s());
    for j in 1..=blocks.s() {
        let intra: Vec<Edge> = embedding
            .graph()
            .edges()
            .iter()
            .copied()
            .filter(|e| {
                numbering.block_index(e.u()) == j && numbering.block_index(e.v()) == j
            })
            .collect();
        let (before, after) = boundary_matchings(embedding, blocks, j);

        let intra_pages = pages_of(&intra);
        let before_pages = pages_of(&before);
        let after_pages = pages_of(&after);
        let unused_pages: Vec<PageId> = (1..=k).filter(|p| !intra_pages.contains(p)).collect();

        let mut pair_checks = Vec::new();
        for (i, &x) in unused_pages.iter().enumerate() {
            for &y in &unused_pages[i + 1..] {
                pair_checks.push(UnusedPairCheck {
                    pair: (x, y),
                    both_in_before: before_pages.contains(&x) && before_pages.contains(&y),
                    both_in_after: after_pages.contains(&x) && after_pages.contains(&y),
                });
            }
        }
        let chosen_pair = pair_checks.iter().find(|c| c.separated()).map(|c| c.pair);

        reports.push(SeedReport {
            block: j,
            verdict_a: intra_pages.len() <= t + 1,
            verdict_b: chosen_pair.is_some(),
            intra_pages,
            before_pages,
            after_pages,
            unused_pages,
            pair_checks,
            chosen_pair,
        });
    }
    Ok(reports)
}

/// Why an embedding is not extensible.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExtensibilityFailure {
    BadDimensions(BlockError),
    Invalid { violations: usize },
    WrongPageCount { expected: usize, got: usize },
    NotEnBloc(NotEnBloc),
    NoSeed,
}

/// Outcome of the extensibility test: valid `t+3`-page en bloc embedding
/// with at least one seed block.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtensibilityVerdict {
    pub extensible: bool,
    /// Indices of all seed blocks (empty when not en bloc or invalid).
    pub seeds: Vec<usize>,
    pub failure: Option<ExtensibilityFailure>,
}

/// Tests extensibility of an embedding of `H □ C_s` where `H` is
/// `t`-regular: the embedding verifies, uses exactly `t+3` pages, is en
/// bloc, and has at least one seed block.
pub fn is_extensible(
    embedding: &BookEmbedding,
    h: usize,
    s: usize,
    t: usize,
) -> ExtensibilityVerdict {
    let fail = |failure: ExtensibilityFailure| ExtensibilityVerdict {
        extensible: false,
        seeds: Vec::new(),
        failure: Some(failure),
    };

    let report = verify(embedding);
    if !report.valid {
        return fail(ExtensibilityFailure::Invalid {
            violations: report.violations.len(),
        });
    }
    if embedding.coloring().k() != t + 3 {
        return fail(ExtensibilityFailure::WrongPageCount {
            expected: t + 3,
            got: embedding.coloring().k(),
        });
    }
    let blocks = match detect_blocks(embedding, h, s) {
        Err(e) => return fail(ExtensibilityFailure::BadDimensions(e)),
        Ok(Err(v)) => return fail(ExtensibilityFailure::NotEnBloc(v)),
        Ok(Ok(b)) => b,
    };
    let reports = match seed_report(embedding, &blocks, t) {
        Err(e) => return fail(ExtensibilityFailure::BadDimensions(e)),
        Ok(r) => r,
    };
    let seeds: Vec<usize> = reports.iter().filter(|r| r.is_seed()).map(|r| r.block).collect();
    if seeds.is_empty() {
        return fail(ExtensibilityFailure::NoSeed);
    }
    ExtensibilityVerdict {
        extensible: true,
        seeds,
        failure: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{BookEmbedding, PageColoring};
    use crate::fixtures;
    use crate::graph::{cartesian_product, cycle};
    use crate::layout::CyclicLayout;

    #[test]
    fn lemma1_blocks_in_circle_order() {
        let f = fixtures::by_name("lemma1-c3c3").unwrap();
        let blocks = detect_blocks(&f.embedding, 3, 3).unwrap().unwrap();
        assert_eq!(blocks.arc(1), &[1, 2, 3]);
        assert_eq!(blocks.arc(2), &[6, 5, 4]);
        assert_eq!(blocks.arc(3), &[7, 8, 9]);
    }

    #[test]
    fn lemma2_block_internal_orders() {
        let f = fixtures::by_name("lemma2-c5c5").unwrap();
        let blocks = detect_blocks(&f.embedding, 5, 5).unwrap().unwrap();
        assert_eq!(blocks.arc(1), &[1, 2, 3, 4, 5]);
        assert_eq!(blocks.arc(2), &[10, 9, 8, 7, 6]);
        assert_eq!(blocks.arc(3), &[11, 12, 13, 15, 14]);
        assert_eq!(blocks.arc(4), &[19, 20, 16, 17, 18]);
        assert_eq!(blocks.arc(5), &[23, 22, 21, 25, 24]);
    }

    #[test]
    fn interleaved_fibers_are_not_en_bloc() {
        let g = cartesian_product(&cycle(3).unwrap(), &cycle(3).unwrap()).unwrap();
        // Reuse the 9-vertex product but lay out fibers interleaved.
        let layout = CyclicLayout::new(vec![1, 4, 2, 5, 3, 6, 7, 8, 9]).unwrap();
        let coloring = PageColoring::from_pages(&[g.edges().to_vec()]).unwrap();
        let e = BookEmbedding::new(g, layout, coloring).unwrap();
        match detect_blocks(&e, 3, 3).unwrap() {
            Err(NotEnBloc::BlockNotContiguous { block: 1, .. }) => {}
            other => panic!("expected block 1 contiguity failure, got {other:?}"),
        }
    }

    #[test]
    fn wrong_vertex_count_is_an_error() {
        let f = fixtures::by_name("lemma1-c3c3").unwrap();
        assert!(matches!(
            detect_blocks(&f.embedding, 3, 4),
            Err(BlockError::VertexCountMismatch { .. })
        ));
    }

    #[test]
    fn lemma1_boundary_matchings() {
        let f = fixtures::by_name("lemma1-c3c3").unwrap();
        let blocks = detect_blocks(&f.embedding, 3, 3).unwrap().unwrap();
        let (before, after) = boundary_matchings(&f.embedding, &blocks, 2);
        assert_eq!(before, vec![Edge::new(1, 4), Edge::new(2, 5), Edge::new(3, 6)]);
        assert_eq!(after, vec![Edge::new(4, 7), Edge::new(5, 8), Edge::new(6, 9)]);
    }

    #[test]
    fn lemma2_boundary_matchings_are_perfect() {
        let f = fixtures::by_name("lemma2-c5c5").unwrap();
        let blocks = detect_blocks(&f.embedding, 5, 5).unwrap().unwrap();
        for j in 1..=5 {
            let (before, after) = boundary_matchings(&f.embedding, &blocks, j);
            assert_eq!(before.len(), 5);
            assert_eq!(after.len(), 5);
        }
    }

    #[test]
    fn lemma2_seed_classification() {
        let f = fixtures::by_name("lemma2-c5c5").unwrap();
        let blocks = detect_blocks(&f.embedding, 5, 5).unwrap().unwrap();
        let reports = seed_report(&f.embedding, &blocks, 2).unwrap();
        for r in &reports {
            if r.block == 3 {
                assert_eq!(blocks.arc(3), &[11, 12, 13, 15, 14]);
                assert!(!r.verdict_a, "block 3 uses {} pages", r.intra_pages.len());
                assert_eq!(r.intra_pages.len(), 4);
            } else {
                assert!(r.is_seed(), "block {} should be a seed: {r:?}", r.block);
            }
        }
    }

    #[test]
    fn lemma1_every_block_is_a_seed() {
        let f = fixtures::by_name("lemma1-c3c3").unwrap();
        let verdict = is_extensible(&f.embedding, 3, 3, 2);
        assert!(verdict.extensible);
        assert_eq!(verdict.seeds, vec![1, 2, 3]);
    }

    #[test]
    fn lemma2_extensible_with_four_seeds() {
        let f = fixtures::by_name("lemma2-c5c5").unwrap();
        let verdict = is_extensible(&f.embedding, 5, 5, 2);
        assert!(verdict.extensible);
        assert_eq!(verdict.seeds, vec![1, 2, 4, 5]);
    }

    #[test]
    fn gadget_satisfies_a_but_not_b() {
        let f = fixtures::by_name("figure3-gadget").unwrap();
        let blocks = detect_blocks(&f.embedding, 5, 3).unwrap().unwrap();
        let reports = seed_report(&f.embedding, &blocks, 2).unwrap();
        let r = &reports[1]; // gadget block is block 2
        assert!(r.verdict_a);
        assert!(!r.verdict_b);
        // The failure sits in the before-matching: it carries both unused pages.
        assert_eq!(r.unused_pages, vec![4, 5]);
        assert_eq!(r.pair_checks.len(), 1);
        assert!(r.pair_checks[0].both_in_before);
        assert!(!r.pair_checks[0].both_in_after);
    }

    #[test]
    fn invalid_coloring_is_not_extensible() {
        let f = fixtures::by_name("lemma1-c3c3").unwrap();
        let mut assignment = f.embedding.coloring().assignment().clone();
        assignment.insert(Edge::new(2, 3), 1);
        let coloring = PageColoring::new(5, assignment).unwrap();
        let e = BookEmbedding::new(
            f.embedding.graph().clone(),
            f.embedding.layout().clone(),
            coloring,
        )
        .unwrap();
        let verdict = is_extensible(&e, 3, 3, 2);
        assert!(!verdict.extensible);
        assert!(matches!(verdict.failure, Some(ExtensibilityFailure::Invalid { .. })));
    }

    #[test]
    fn page_count_precondition() {
        let f = fixtures::by_name("lemma1-c3c3").unwrap();
        let blocks = detect_blocks(&f.embedding, 3, 3).unwrap().unwrap();
        assert!(matches!(
            seed_report(&f.embedding, &blocks, 3),
            Err(BlockError::PageCountMismatch { expected: 6, got: 5 })
        ));
    }
}
