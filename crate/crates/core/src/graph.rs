//! Simple undirected graphs with 1-based vertex identifiers, plus the
//! generators (cycles, Cartesian products) and structural predicates the
//! rest of the crate builds on.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// An undirected edge stored with its smaller endpoint first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Builds an edge, normalizing endpoint order.
    ///
    /// # Panics
    /// Panics if `a == b`; self-loops are rejected earlier, at graph level.
    pub fn new(a: usize, b: usize) -> Self {
        assert!(a != b, "self-loop {a}-{b}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn touches(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }

    /// The vertex shared with `other`, if the two edges are adjacent
    /// (distinct edges of a simple graph share at most one vertex).
    pub fn shared_vertex(&self, other: &Edge) -> Option<usize> {
        if *self == *other {
            return None;
        }
        if other.touches(self.u) {
            Some(self.u)
        } else if other.touches(self.v) {
            Some(self.v)
        } else {
            None
        }
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

impl From<Edge> for (usize, usize) {
    fn from(e: Edge) -> Self {
        (e.u, e.v)
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("cycle order must be at least 3, got {0}")]
    InvalidCycleOrder(usize),
    #[error("Cartesian product factors must be nonempty")]
    EmptyFactor,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("edge {edge} has endpoint outside 1..={n}")]
    EndpointOutOfRange { edge: Edge, n: usize },
}

/// An immutable simple graph on vertices `1..=n`.
///
/// The edge set is kept canonically ordered (smaller endpoint first, sorted
/// lexicographically) so two graphs are equal iff their fields are equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from vertex count and edge pairs, validating that
    /// there are no self-loops, no duplicates, and no endpoints outside
    /// `1..=n`.
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for (a, b) in pairs {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let e = Edge::new(a, b);
            if e.u() < 1 || e.v() > n {
                return Err(GraphError::EndpointOutOfRange { edge: e, n });
            }
            edges.push(e);
        }
        edges.sort();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0]));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u() - 1].push(e.v());
            adj[e.v() - 1].push(e.u());
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        if a == b || a < 1 || b < 1 || a > self.n || b > self.n {
            return false;
        }
        self.adj[a - 1].binary_search(&b).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn max_degree(&self) -> usize {
        (1..=self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        match self.n {
            0 => true,
            _ => {
                let d = self.degree(1);
                (2..=self.n).all(|v| self.degree(v) == d)
            }
        }
    }

    /// Bipartiteness via 2-coloring of each component.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![0u8; self.n]; // 0 = unvisited
        let mut queue = Vec::new();
        for start in 1..=self.n {
            if color[start - 1] != 0 {
                continue;
            }
            color[start - 1] = 1;
            queue.push(start);
            while let Some(v) = queue.pop() {
                for &w in self.neighbors(v) {
                    if color[w - 1] == 0 {
                        color[w - 1] = 3 - color[v - 1];
                        queue.push(w);
                    } else if color[w - 1] == color[v - 1] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// A lower bound on the matching book thickness.
    ///
    /// Every valid embedding needs at least Δ pages (the edges at a
    /// maximum-degree vertex are pairwise adjacent), and a regular
    /// nonbipartite graph cannot be dispersable, which forces Δ+1.
    /// Exact chromatic index is deliberately not computed.
    pub fn mbt_lower_bound(&self) -> usize {
        let delta = self.max_degree();
        if delta > 0 && self.is_regular() && !self.is_bipartite() {
            delta + 1
        } else {
            delta
        }
    }

    /// The set of distinct vertex identifiers, for validation convenience.
    pub fn vertex_set(&self) -> BTreeSet<usize> {
        (1..=self.n).collect()
    }
}

/// The cycle `1–2–…–n–1`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidCycleOrder(n));
    }
    let pairs = (1..n).map(|i| (i, i + 1)).chain(std::iter::once((1, n)));
    Graph::new(n, pairs)
}

/// Row/column numbering for product graphs: vertex `(i, j)` of `H □ C_s`
/// (H-vertex `i` in `1..=h`, block index `j` in `1..=s`) gets identifier
/// `(j-1)*h + i`, so each block is a contiguous identifier range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductNumbering {
    h: usize,
    s: usize,
}

impl ProductNumbering {
    pub fn new(h: usize, s: usize) -> Self {
        assert!(h >= 1 && s >= 1);
        ProductNumbering { h, s }
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn n(&self) -> usize {
        self.h * self.s
    }

    /// Identifier of `(i, j)`.
    pub fn id(&self, i: usize, j: usize) -> usize {
        debug_assert!((1..=self.h).contains(&i) && (1..=self.s).contains(&j));
        (j - 1) * self.h + i
    }

    /// H-coordinate of a vertex identifier.
    pub fn fiber_index(&self, v: usize) -> usize {
        debug_assert!((1..=self.n()).contains(&v));
        (v - 1) % self.h + 1
    }

    /// Block (second coordinate) of a vertex identifier.
    pub fn block_index(&self, v: usize) -> usize {
        debug_assert!((1..=self.n()).contains(&v));
        (v - 1) / self.h + 1
    }

    /// Vertices of block `j` in identifier order.
    pub fn block_vertices(&self, j: usize) -> impl Iterator<Item = usize> {
        let base = (j - 1) * self.h;
        (1..=self.h).map(move |i| base + i)
    }
}

/// Cartesian product with the first factor as the in-block (H) factor and
/// the second factor providing the block coordinate, numbered by
/// [`ProductNumbering`]: `(u,j) ~ (v,j)` iff `u ~ v` in `g`, and
/// `(u,j) ~ (u,j')` iff `j ~ j'` in `h`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    if g.n() == 0 || h.n() == 0 {
        return Err(GraphError::EmptyFactor);
    }
    let numbering = ProductNumbering::new(g.n(), h.n());
    let mut pairs = Vec::with_capacity(g.n() * h.edge_count() + h.n() * g.edge_count());
    for j in 1..=h.n() {
        for e in g.edges() {
            pairs.push((numbering.id(e.u(), j), numbering.id(e.v(), j)));
        }
    }
    for e in h.edges() {
        for i in 1..=g.n() {
            pairs.push((numbering.id(i, e.u()), numbering.id(i, e.v())));
        }
    }
    Graph::new(numbering.n(), pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_3_is_a_triangle() {
        let g = cycle(3).unwrap();
        assert_eq!(g.edges(), &[Edge::new(1, 2), Edge::new(1, 3), Edge::new(2, 3)]);
        assert!(g.is_regular());
    }

    #[test]
    fn cycle_parity() {
        assert!(cycle(4).unwrap().is_bipartite());
        assert_eq!(cycle(4).unwrap().edge_count(), 4);
        assert!(!cycle(5).unwrap().is_bipartite());
        assert_eq!(cycle(5).unwrap().edge_count(), 5);
    }

    #[test]
    fn cycle_rejects_small_orders() {
        assert_eq!(cycle(2), Err(GraphError::InvalidCycleOrder(2)));
        assert_eq!(cycle(0), Err(GraphError::InvalidCycleOrder(0)));
    }

    #[test]
    fn product_c3_c3() {
        let c3 = cycle(3).unwrap();
        let g = cartesian_product(&c3, &c3).unwrap();
        assert_eq!(g.n(), 9);
        assert_eq!(g.edge_count(), 18);
        assert_eq!(g.max_degree(), 4);
        assert!(g.is_regular());
        // Spot-check edges against the reference labeling.
        assert!(g.has_edge(1, 2));
        assert!(g.has_edge(2, 8));
        assert!(g.has_edge(3, 6));
        assert!(!g.has_edge(1, 5));
    }

    #[test]
    fn product_c5_c5() {
        let c5 = cycle(5).unwrap();
        let g = cartesian_product(&c5, &c5).unwrap();
        assert_eq!(g.n(), 25);
        assert_eq!(g.edge_count(), 50);
        assert!(g.is_regular());
        assert_eq!(g.max_degree(), 4);
    }

    #[test]
    fn numbering_blocks_match_reference_labels() {
        let p = ProductNumbering::new(3, 3);
        assert_eq!(p.block_vertices(1).collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(p.block_vertices(2).collect::<Vec<_>>(), vec![4, 5, 6]);
        assert_eq!(p.block_vertices(3).collect::<Vec<_>>(), vec![7, 8, 9]);
        let q = ProductNumbering::new(5, 5);
        assert_eq!(q.block_vertices(1).collect::<Vec<_>>(), vec![1, 2, 3, 4, 5]);
        assert_eq!(q.block_vertices(5).collect::<Vec<_>>(), vec![21, 22, 23, 24, 25]);
    }

    #[test]
    fn numbering_is_a_bijection() {
        let p = ProductNumbering::new(4, 7);
        let mut seen = vec![false; p.n()];
        for j in 1..=7 {
            for i in 1..=4 {
                let v = p.id(i, j);
                assert!(!seen[v - 1]);
                seen[v - 1] = true;
                assert_eq!(p.fiber_index(v), i);
                assert_eq!(p.block_index(v), j);
            }
        }
        assert!(seen.iter().all(|&b| b));
    }

    #[test]
    fn lower_bounds() {
        let c3 = cycle(3).unwrap();
        let g = cartesian_product(&c3, &c3).unwrap();
        assert_eq!(g.mbt_lower_bound(), 5);
        assert_eq!(cycle(4).unwrap().mbt_lower_bound(), 2);
        // K4 built by hand: 3-regular, nonbipartite.
        let k4 = Graph::new(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(k4.mbt_lower_bound(), 4);
    }

    #[test]
    fn graph_validation_errors() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, [(1, 2), (2, 1)]),
            Err(GraphError::DuplicateEdge(Edge::new(1, 2)))
        );
        assert!(matches!(
            Graph::new(3, [(1, 4)]),
            Err(GraphError::EndpointOutOfRange { .. })
        ));
    }
}
