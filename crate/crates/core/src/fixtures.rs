//! Built-in reference embeddings and gadgets.
//!
//! `lemma1-c3c3` and `lemma2-c5c5` carry the published five-page layouts of
//! `C3 □ C3` and `C5 □ C5` verbatim (vertex labels, spine orders, and page
//! lists); `figure3-gadget` is a block that satisfies the interior seed
//! condition but whose boundary matchings share both unused pages; and
//! `figure4-c3c5-derived` is generated, not hand-entered, by replicating a
//! seed of `lemma1-c3c3`.

use crate::embedding::{BookEmbedding, PageColoring};
use crate::extend::extend;
use crate::graph::{cartesian_product, cycle, Edge};
use crate::layout::CyclicLayout;

/// A named reference embedding with display-only page color names.
pub struct Fixture {
    pub name: &'static str,
    /// What the fixture demonstrates.
    pub note: &'static str,
    /// Page number to color-name map, for display and drawing only; page
    /// numbers are the semantic identity.
    pub color_names: &'static [(usize, &'static str)],
    pub embedding: BookEmbedding,
}

pub const FIXTURE_NAMES: [&str; 4] = [
    "lemma1-c3c3",
    "lemma2-c5c5",
    "figure3-gadget",
    "figure4-c3c5-derived",
];

/// Looks up a fixture by name.
pub fn by_name(name: &str) -> Option<Fixture> {
    match name {
        "lemma1-c3c3" => Some(lemma1_c3c3()),
        "lemma2-c5c5" => Some(lemma2_c5c5()),
        "figure3-gadget" => Some(figure3_gadget()),
        "figure4-c3c5-derived" => Some(figure4_c3c5_derived()),
        _ => None,
    }
}

fn build(
    h: usize,
    s: usize,
    order: Vec<usize>,
    pages: &[&[(usize, usize)]],
) -> BookEmbedding {
    let graph = cartesian_product(&cycle(h).unwrap(), &cycle(s).unwrap()).unwrap();
    let layout = CyclicLayout::new(order).unwrap();
    let page_lists: Vec<Vec<Edge>> = pages
        .iter()
        .map(|list| list.iter().map(|&(a, b)| Edge::new(a, b)).collect())
        .collect();
    let coloring = PageColoring::from_pages(&page_lists).unwrap();
    BookEmbedding::new(graph, layout, coloring).unwrap()
}

/// Five-page embedding of `C3 □ C3`; every block is a seed.
/// Pages 1..=5 are red, black, green, blue, purple.
pub fn lemma1_c3c3() -> Fixture {
    let embedding = build(
        3,
        3,
        vec![1, 2, 3, 6, 5, 4, 7, 8, 9],
        &[
            &[(1, 2), (3, 9), (5, 6), (8, 7)],
            &[(1, 3), (9, 6), (8, 5), (7, 4)],
            &[(2, 3), (6, 4), (1, 7), (8, 9)],
            &[(2, 8), (4, 5)],
            &[(3, 6), (2, 5), (1, 4), (9, 7)],
        ],
    );
    Fixture {
        name: "lemma1-c3c3",
        note: "five-page embedding of C3xC3 (Delta+1 pages on a 4-regular nonbipartite graph); \
               all three blocks are seeds",
        color_names: &[(1, "red"), (2, "black"), (3, "green"), (4, "blue"), (5, "purple")],
        embedding,
    }
}

/// Five-page embedding of `C5 □ C5`; block 3 fails the interior seed
/// condition, the other four blocks are seeds.
/// Pages 1..=5 are purple, blue, red, green, black.
pub fn lemma2_c5c5() -> Fixture {
    let embedding = build(
        5,
        5,
        vec![
            1, 2, 3, 4, 5, 10, 9, 8, 7, 6, 11, 12, 13, 15, 14, 19, 20, 16, 17, 18, 23, 22, 21,
            25, 24,
        ],
        &[
            &[
                (1, 2),
                (3, 4),
                (9, 14),
                (8, 7),
                (11, 15),
                (12, 13),
                (24, 19),
                (25, 20),
                (21, 16),
                (22, 17),
                (23, 18),
            ],
            &[
                (2, 3),
                (1, 5),
                (10, 9),
                (7, 6),
                (11, 12),
                (13, 18),
                (15, 20),
                (14, 19),
                (16, 17),
                (21, 22),
                (23, 24),
            ],
            &[
                (5, 10),
                (4, 9),
                (3, 8),
                (2, 7),
                (1, 6),
                (12, 17),
                (13, 14),
                (22, 23),
                (25, 21),
            ],
            &[
                (24, 25),
                (1, 21),
                (2, 22),
                (3, 23),
                (4, 5),
                (10, 15),
                (8, 13),
                (7, 12),
                (6, 11),
                (19, 18),
                (20, 16),
            ],
            &[
                (4, 24),
                (5, 25),
                (10, 6),
                (9, 8),
                (11, 16),
                (15, 14),
                (19, 20),
                (18, 17),
            ],
        ],
    );
    Fixture {
        name: "lemma2-c5c5",
        note: "five-page embedding of C5xC5; block (11,12,13,15,14) uses four pages inside \
               and is not a seed, the other four blocks are",
        color_names: &[(1, "purple"), (2, "blue"), (3, "red"), (4, "green"), (5, "black")],
        embedding,
    }
}

/// A block that satisfies the interior condition (three pages, t+1) but
/// whose unused pages are not separated: the before-matching carries both.
///
/// The gadget sits as block 2 of a `C5 □ C3` host laid out en bloc with
/// identity arcs; the remaining edges are colored arbitrarily (the host is
/// not itself a valid embedding and is only meant for block-level reports).
/// Pages 1..=5 are red, blue, green, purple, black. Block 2's arc edges are
/// colored r,b,r,g with the long chord b; the before-matching is
/// p,k,k,k,k and the after-matching g,p,p,p,p.
pub fn figure3_gadget() -> Fixture {
    let embedding = build(
        5,
        3,
        (1..=15).collect(),
        &[
            // red
            &[(1, 2), (3, 4), (6, 7), (8, 9), (11, 12), (13, 14)],
            // blue
            &[(2, 3), (4, 5), (7, 8), (6, 10), (12, 13), (14, 15)],
            // green
            &[(1, 5), (9, 10), (6, 11), (11, 15)],
            // purple
            &[(1, 6), (7, 12), (8, 13), (9, 14), (10, 15)],
            // black
            &[(2, 7), (3, 8), (4, 9), (5, 10), (1, 11), (2, 12), (3, 13), (4, 14), (5, 15)],
        ],
    );
    Fixture {
        name: "figure3-gadget",
        note: "block 2 uses three pages inside but both unused pages appear on its \
               before-matching, so it is not a seed",
        color_names: &[(1, "red"), (2, "blue"), (3, "green"), (4, "purple"), (5, "black")],
        embedding,
    }
}

/// Five-page embedding of `C3 □ C5`, derived by replicating seed block 1 of
/// `lemma1-c3c3` twice. Generated rather than hand-entered.
pub fn figure4_c3c5_derived() -> Fixture {
    let lemma1 = lemma1_c3c3();
    let extension =
        extend(&lemma1.embedding, 3, 3, 1, 2).expect("reference extension verifies");
    Fixture {
        name: "figure4-c3c5-derived",
        note: "five-page embedding of C3xC5 produced by seed replication from lemma1-c3c3",
        color_names: lemma1.color_names,
        embedding: extension.embedding,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_product, cycle};

    #[test]
    fn fixture_edge_sets_match_the_products() {
        for (name, m, s) in [("lemma1-c3c3", 3, 3), ("lemma2-c5c5", 5, 5), ("figure3-gadget", 5, 3)]
        {
            let f = by_name(name).unwrap();
            let product =
                cartesian_product(&cycle(m).unwrap(), &cycle(s).unwrap()).unwrap();
            assert_eq!(f.embedding.graph(), &product, "{name}");
            // Union of pages covers every edge exactly once (guaranteed by
            // embedding well-formedness, asserted here against transcription
            // slips in the page lists).
            assert_eq!(f.embedding.coloring().assignment().len(), product.edge_count());
        }
    }

    #[test]
    fn gadget_block_colors_are_as_specified() {
        let f = figure3_gadget().embedding;
        let c = f.coloring();
        // arc edges r,b,r,g and the long chord b
        assert_eq!(c.page_of(Edge::new(6, 7)), Some(1));
        assert_eq!(c.page_of(Edge::new(7, 8)), Some(2));
        assert_eq!(c.page_of(Edge::new(8, 9)), Some(1));
        assert_eq!(c.page_of(Edge::new(9, 10)), Some(3));
        assert_eq!(c.page_of(Edge::new(6, 10)), Some(2));
        // before-matching p,k,k,k,k
        assert_eq!(c.page_of(Edge::new(1, 6)), Some(4));
        for e in [(2, 7), (3, 8), (4, 9), (5, 10)] {
            assert_eq!(c.page_of(Edge::new(e.0, e.1)), Some(5));
        }
        // after-matching g,p,p,p,p
        assert_eq!(c.page_of(Edge::new(6, 11)), Some(3));
        for e in [(7, 12), (8, 13), (9, 14), (10, 15)] {
            assert_eq!(c.page_of(Edge::new(e.0, e.1)), Some(4));
        }
    }

    #[test]
    fn derived_fixture_is_generated_and_valid() {
        let f = figure4_c3c5_derived();
        assert_eq!(f.embedding.graph().n(), 15);
        assert_eq!(f.embedding.graph().edge_count(), 30);
        assert!(crate::embedding::verify(&f.embedding).valid);
    }

    #[test]
    fn all_names_resolve() {
        for name in FIXTURE_NAMES {
            assert!(by_name(name).is_some(), "{name}");
        }
        assert!(by_name("nope").is_none());
    }
}
