//! Page colorings, the crossing predicate, and the matching-book-embedding
//! verifier.
//!
//! A `k`-page matching book embedding is a circular layout together with an
//! assignment of every edge to one of `k` pages such that edges sharing a
//! page are neither adjacent (sharing a vertex) nor conflicting (their
//! chords cross). The verifier here is the trusted final word: search
//! witnesses and extension outputs are always re-checked through it.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph};
use crate::layout::CyclicLayout;

/// Pages are numbered from 1.
pub type PageId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("page count must be at least 1")]
    ZeroPages,
    #[error("edge {edge} assigned page {page}, outside 1..={k}")]
    PageOutOfRange { edge: Edge, page: PageId, k: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("layout covers {layout_n} vertices but the graph has {graph_n}")]
    LayoutSizeMismatch { layout_n: usize, graph_n: usize },
    #[error("edge {0} of the graph has no page assigned")]
    UncoloredEdge(Edge),
    #[error("coloring mentions {0}, which is not an edge of the graph")]
    UnknownEdge(Edge),
    #[error("edge {0} has an endpoint outside the layout")]
    EndpointNotInLayout(Edge),
}

/// An assignment of edges to pages `1..=k`.
///
/// Construction checks only well-formedness (pages in range). Surjectivity
/// onto `1..=k` — every page nonempty — is part of embedding validity and
/// is reported by [`verify`] rather than enforced here, so that malformed
/// inputs can be diagnosed instead of rejected.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PageColoring {
    k: usize,
    assignment: BTreeMap<Edge, PageId>,
}

impl PageColoring {
    pub fn new(k: usize, assignment: BTreeMap<Edge, PageId>) -> Result<Self, ColoringError> {
        if k == 0 {
            return Err(ColoringError::ZeroPages);
        }
        for (&edge, &page) in &assignment {
            if page < 1 || page > k {
                return Err(ColoringError::PageOutOfRange { edge, page, k });
            }
        }
        Ok(PageColoring { k, assignment })
    }

    /// Builds a coloring from per-page edge lists; page `p` is `pages[p-1]`.
    pub fn from_pages(pages: &[Vec<Edge>]) -> Result<Self, ColoringError> {
        let mut assignment = BTreeMap::new();
        for (i, list) in pages.iter().enumerate() {
            for &e in list {
                assignment.insert(e, i + 1);
            }
        }
        PageColoring::new(pages.len(), assignment)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn page_of(&self, e: Edge) -> Option<PageId> {
        self.assignment.get(&e).copied()
    }

    pub fn assignment(&self) -> &BTreeMap<Edge, PageId> {
        &self.assignment
    }

    /// Edges on page `p`, in canonical order.
    pub fn page_edges(&self, p: PageId) -> Vec<Edge> {
        self.assignment
            .iter()
            .filter(|&(_, &q)| q == p)
            .map(|(&e, _)| e)
            .collect()
    }

    /// Pages that actually occur in the assignment.
    pub fn used_pages(&self) -> Vec<PageId> {
        let mut used: Vec<PageId> = self.assignment.values().copied().collect();
        used.sort_unstable();
        used.dedup();
        used
    }
}

/// Graph + layout + coloring. Construction guarantees well-formedness
/// (layout covers the vertex set, coloring covers exactly the edge set);
/// validity is a separate, computed verdict.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BookEmbedding {
    graph: Graph,
    layout: CyclicLayout,
    coloring: PageColoring,
}

impl BookEmbedding {
    pub fn new(
        graph: Graph,
        layout: CyclicLayout,
        coloring: PageColoring,
    ) -> Result<Self, EmbeddingError> {
        if layout.n() != graph.n() {
            return Err(EmbeddingError::LayoutSizeMismatch {
                layout_n: layout.n(),
                graph_n: graph.n(),
            });
        }
        for e in graph.edges() {
            if coloring.page_of(*e).is_none() {
                return Err(EmbeddingError::UncoloredEdge(*e));
            }
        }
        for &e in coloring.assignment().keys() {
            if !graph.has_edge(e.u(), e.v()) {
                return Err(EmbeddingError::UnknownEdge(e));
            }
        }
        Ok(BookEmbedding {
            graph,
            layout,
            coloring,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn layout(&self) -> &CyclicLayout {
        &self.layout
    }

    pub fn coloring(&self) -> &PageColoring {
        &self.coloring
    }
}

/// Whether two edges conflict with respect to `layout`: their four
/// endpoints are distinct and occur in alternating order around the circle
/// (equivalently, exactly one endpoint of `e2` lies strictly inside one of
/// the two arcs cut by `e1`). Edges sharing a vertex never conflict.
///
/// Returns an error if any endpoint is missing from the layout.
pub fn edges_conflict(
    layout: &CyclicLayout,
    e1: Edge,
    e2: Edge,
) -> Result<bool, EmbeddingError> {
    for e in [e1, e2] {
        if layout.try_position(e.u()).is_none() || layout.try_position(e.v()).is_none() {
            return Err(EmbeddingError::EndpointNotInLayout(e));
        }
    }
    Ok(conflict_by_position(layout, e1, e2))
}

/// Unchecked conflict test for callers that already hold a well-formed
/// embedding; O(1) given the layout's inverse permutation.
pub(crate) fn conflict_by_position(layout: &CyclicLayout, e1: Edge, e2: Edge) -> bool {
    if e1.shared_vertex(&e2).is_some() || e1 == e2 {
        return false;
    }
    let a = layout.position(e1.u());
    let b = layout.position(e1.v());
    let x = layout.strictly_inside_arc(a, b, layout.position(e2.u()));
    let y = layout.strictly_inside_arc(a, b, layout.position(e2.v()));
    x != y
}

/// A violation found by [`verify`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Violation {
    /// Two same-page edges share a vertex.
    AdjacentClash { e1: Edge, e2: Edge, page: PageId, shared: usize },
    /// Two same-page chords cross.
    CrossingClash { e1: Edge, e2: Edge, page: PageId },
    /// A declared page with no edges (the coloring is not surjective).
    EmptyPage { page: PageId },
}

/// Outcome of verification: the complete list of violations, not just the
/// first, so search output can be debugged.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValidityReport {
    pub valid: bool,
    pub page_count: usize,
    pub violations: Vec<Violation>,
}

/// Checks that an embedding is a valid matching book embedding:
/// (i) adjacent edges are on distinct pages, (ii) conflicting edges are on
/// distinct pages, (iii) every page `1..=k` is used.
///
/// Enumerates all edge pairs; quadratic in the edge count, which is fine at
/// the scales this crate verifies (searches keep their own incremental
/// structures and re-check winners here).
pub fn verify(embedding: &BookEmbedding) -> ValidityReport {
    let graph = embedding.graph();
    let layout = embedding.layout();
    let coloring = embedding.coloring();
    let edges = graph.edges();
    let mut violations = Vec::new();

    for (i, &e1) in edges.iter().enumerate() {
        let p1 = coloring.page_of(e1).expect("well-formed embedding");
        for &e2 in &edges[i + 1..] {
            let p2 = coloring.page_of(e2).expect("well-formed embedding");
            if p1 != p2 {
                continue;
            }
            if let Some(shared) = e1.shared_vertex(&e2) {
                violations.push(Violation::AdjacentClash { e1, e2, page: p1, shared });
            } else if conflict_by_position(layout, e1, e2) {
                violations.push(Violation::CrossingClash { e1, e2, page: p1 });
            }
        }
    }

    let used = coloring.used_pages();
    for page in 1..=coloring.k() {
        if !used.contains(&page) {
            violations.push(Violation::EmptyPage { page });
        }
    }

    ValidityReport {
        valid: violations.is_empty(),
        page_count: coloring.k(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::cycle;

    fn lemma1_layout() -> CyclicLayout {
        CyclicLayout::new(vec![1, 2, 3, 6, 5, 4, 7, 8, 9]).unwrap()
    }

    #[test]
    fn conflict_examples_on_reference_layout() {
        let l = lemma1_layout();
        // positions: 1→0, 3→2 vs 2→1, 8→7: alternating.
        assert!(edges_conflict(&l, Edge::new(1, 3), Edge::new(2, 8)).unwrap());
        // 4-5 nests inside the arc cut by 2-8.
        assert!(!edges_conflict(&l, Edge::new(2, 8), Edge::new(4, 5)).unwrap());
        // Shared vertex: never a conflict.
        assert!(!edges_conflict(&l, Edge::new(1, 2), Edge::new(2, 8)).unwrap());
    }

    #[test]
    fn conflict_rejects_missing_endpoints() {
        let l = CyclicLayout::identity(4);
        assert!(matches!(
            edges_conflict(&l, Edge::new(1, 5), Edge::new(2, 3)),
            Err(EmbeddingError::EndpointNotInLayout(_))
        ));
    }

    #[test]
    fn fixtures_verify_with_five_pages() {
        for name in ["lemma1-c3c3", "lemma2-c5c5"] {
            let f = fixtures::by_name(name).unwrap();
            let report = verify(&f.embedding);
            assert!(report.valid, "{name}: {:?}", report.violations);
            assert_eq!(report.page_count, 5);
        }
    }

    #[test]
    fn corrupted_fixture_reports_single_adjacent_clash() {
        let f = fixtures::by_name("lemma1-c3c3").unwrap();
        let mut assignment = f.embedding.coloring().assignment().clone();
        // Force 1-2 and 2-3 onto one (new) page of their own.
        assignment.insert(Edge::new(1, 2), 6);
        assignment.insert(Edge::new(2, 3), 6);
        let coloring = PageColoring::new(6, assignment).unwrap();
        let e = BookEmbedding::new(f.embedding.graph().clone(), f.embedding.layout().clone(), coloring)
            .unwrap();
        let report = verify(&e);
        assert!(!report.valid);
        assert_eq!(report.violations.len(), 1);
        match &report.violations[0] {
            Violation::AdjacentClash { shared, .. } => assert_eq!(*shared, 2),
            other => panic!("expected an adjacent clash, got {other:?}"),
        }
    }

    #[test]
    fn empty_page_is_reported() {
        let g = cycle(4).unwrap();
        let mut assignment = BTreeMap::new();
        for e in g.edges() {
            assignment.insert(*e, if e.u() % 2 == 1 { 1 } else { 2 });
        }
        let coloring = PageColoring::new(3, assignment).unwrap();
        let e = BookEmbedding::new(g, CyclicLayout::identity(4), coloring).unwrap();
        let report = verify(&e);
        assert!(report.violations.contains(&Violation::EmptyPage { page: 3 }));
    }
}
