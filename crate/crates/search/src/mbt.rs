//! Exact matching book thickness for tiny graphs, by canonical layout
//! enumeration plus the fixed-layout coloring search. This is the
//! desk-scale oracle the test suites compare everything else against.

use mbe_core::graph::Graph;
use mbe_core::layout::CyclicLayout;

use crate::color_search::{color_search, SearchError};
use crate::config::{SearchConfig, SearchStatus};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// All circular layouts of `1..=n` up to rotation and reflection: vertex 1
/// is anchored at position 0 and the reflection class is broken by
/// requiring the second vertex to be smaller than the last. `(n-1)!/2`
/// layouts for `n >= 3`, in lexicographic order.
pub fn canonical_layouts(n: usize) -> Vec<CyclicLayout> {
    if n <= 2 {
        return vec![CyclicLayout::identity(n)];
    }
    let rest: Vec<usize> = (2..=n).collect();
    let mut layouts = Vec::new();
    for perm in itertools::Itertools::permutations(rest.iter().copied(), n - 1) {
        if perm[0] > perm[n - 2] {
            continue;
        }
        let mut order = Vec::with_capacity(n);
        order.push(1);
        order.extend(perm);
        layouts.push(CyclicLayout::new(order).expect("generated orders are permutations"));
    }
    layouts
}

/// Whether any of `layouts` admits a coloring with at most `k` pages.
/// `workers = 1` scans sequentially (deterministic); any other value uses
/// the parallel scan when the `parallel` feature is enabled.
pub fn any_layout_colorable(g: &Graph, layouts: &[CyclicLayout], k: usize, workers: usize) -> bool {
    let unlimited = SearchConfig::default();
    let decide = |layout: &CyclicLayout| {
        color_search(g, layout, k, &unlimited)
            .map(|o| o.status == SearchStatus::Found)
            .unwrap_or(false)
    };
    #[cfg(feature = "parallel")]
    if workers != 1 {
        return layouts.par_iter().any(decide);
    }
    let _ = workers;
    layouts.iter().any(decide)
}

/// Exact matching book thickness: the least `k` for which some layout (up
/// to rotation and reflection) admits a `k`-page assignment. Refuses
/// graphs above `max_vertices` to keep the factorial enumeration honest.
pub fn mbt_exact(g: &Graph, max_vertices: usize) -> Result<usize, SearchError> {
    if g.n() > max_vertices {
        return Err(SearchError::TooLarge {
            n: g.n(),
            max: max_vertices,
        });
    }
    let m = g.edge_count();
    if m == 0 {
        return Ok(0);
    }
    let layouts = canonical_layouts(g.n());
    for k in 1..=m {
        if any_layout_colorable(g, &layouts, k, 0) {
            return Ok(k);
        }
    }
    unreachable!("one edge per page always succeeds at k = m")
}

/// Default ceiling for [`mbt_exact`].
pub const DEFAULT_MBT_CEILING: usize = 10;

#[cfg(test)]
mod tests {
    use super::*;
    use mbe_core::graph::{cartesian_product, cycle, Graph};

    #[test]
    fn canonical_layout_counts() {
        assert_eq!(canonical_layouts(3).len(), 1);
        assert_eq!(canonical_layouts(4).len(), 3);
        assert_eq!(canonical_layouts(5).len(), 12);
        assert_eq!(canonical_layouts(6).len(), 60);
    }

    #[test]
    fn canonical_layouts_are_canonical_and_distinct() {
        let layouts = canonical_layouts(6);
        for l in &layouts {
            assert_eq!(&l.canonical(), l);
        }
        let mut orders: Vec<_> = layouts.iter().map(|l| l.order().to_vec()).collect();
        orders.dedup();
        assert_eq!(orders.len(), layouts.len());
    }

    #[test]
    fn cycle_thickness_matches_parity() {
        assert_eq!(mbt_exact(&cycle(4).unwrap(), 10).unwrap(), 2);
        assert_eq!(mbt_exact(&cycle(6).unwrap(), 10).unwrap(), 2);
        assert_eq!(mbt_exact(&cycle(3).unwrap(), 10).unwrap(), 3);
        assert_eq!(mbt_exact(&cycle(5).unwrap(), 10).unwrap(), 3);
        assert_eq!(mbt_exact(&cycle(7).unwrap(), 10).unwrap(), 3);
    }

    #[test]
    fn k4_needs_four_pages() {
        let k4 = Graph::new(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        let exact = mbt_exact(&k4, 10).unwrap();
        assert_eq!(exact, 4);
        assert!(exact >= k4.mbt_lower_bound());
    }

    #[test]
    fn oracle_refuses_large_graphs() {
        let g = cartesian_product(&cycle(3).unwrap(), &cycle(4).unwrap()).unwrap();
        assert!(matches!(
            mbt_exact(&g, 10),
            Err(SearchError::TooLarge { n: 12, max: 10 })
        ));
    }

    #[test]
    fn lower_bound_agrees_on_small_corpus() {
        // mbt_exact >= mbt_lower_bound everywhere; equality on cycles.
        for n in 3..=7 {
            let g = cycle(n).unwrap();
            assert_eq!(mbt_exact(&g, 10).unwrap(), g.mbt_lower_bound());
        }
        let path = Graph::new(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(mbt_exact(&path, 10).unwrap() >= path.mbt_lower_bound());
    }
}
