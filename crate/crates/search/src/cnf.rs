//! DIMACS CNF export of the fixed-layout page coloring problem, for
//! handing to external SAT solvers, plus the decoder that turns a model
//! back into a page coloring.
//!
//! Variables: `x(e, p)` for edge index `e` (in canonical edge order) and
//! page `p` in `1..=k`, numbered `e*k + p`. Clauses: exactly-one page per
//! edge, and `¬x(e,p) ∨ ¬x(e',p)` for every adjacent or conflicting pair
//! and every page. Running a solver is the operator's business; this
//! module only writes the standard text format and reads assignments back.

use std::collections::BTreeMap;

use mbe_core::embedding::PageColoring;
use mbe_core::graph::{Edge, Graph};
use mbe_core::layout::CyclicLayout;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CnfError {
    #[error("model assigns edge {0} to {1} pages, expected exactly one")]
    NotExactlyOne(Edge, usize),
    #[error("model text contains no literals")]
    EmptyModel,
}

/// A propositional encoding of one `(graph, layout, k)` instance.
#[derive(Clone, Debug)]
pub struct CnfDocument {
    pub k: usize,
    /// Edges in variable order.
    pub edges: Vec<Edge>,
    pub clauses: Vec<Vec<i64>>,
}

impl CnfDocument {
    pub fn num_vars(&self) -> usize {
        self.edges.len() * self.k
    }

    /// DIMACS variable for edge index `e` on page `p` (1-based page).
    pub fn var(&self, e: usize, p: usize) -> i64 {
        (e * self.k + p) as i64
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        out.push_str("c matching book embedding page assignment\n");
        out.push_str(&format!(
            "c {} edges, {} pages; var(e,p) = e*k + p with e from 0\n",
            self.edges.len(),
            self.k
        ));
        for (i, e) in self.edges.iter().enumerate() {
            out.push_str(&format!("c edge {} = {}\n", i, e));
        }
        out.push_str(&format!("p cnf {} {}\n", self.num_vars(), self.clauses.len()));
        for clause in &self.clauses {
            for lit in clause {
                out.push_str(&format!("{lit} "));
            }
            out.push_str("0\n");
        }
        out
    }

    /// Reads a satisfying assignment (any mix of plain literals, solver
    /// "v" lines, and a terminating 0) back into a page coloring. The
    /// returned coloring is compacted onto the pages actually used.
    pub fn decode_model(&self, literals: &[i64]) -> Result<PageColoring, CnfError> {
        if literals.is_empty() {
            return Err(CnfError::EmptyModel);
        }
        let mut truth = vec![false; self.num_vars() + 1];
        for &lit in literals {
            if lit > 0 {
                let idx = lit as usize;
                if idx < truth.len() {
                    truth[idx] = true;
                }
            }
        }
        let mut raw: BTreeMap<Edge, usize> = BTreeMap::new();
        for (i, &e) in self.edges.iter().enumerate() {
            let pages: Vec<usize> =
                (1..=self.k).filter(|&p| truth[self.var(i, p) as usize]).collect();
            if pages.len() != 1 {
                return Err(CnfError::NotExactlyOne(e, pages.len()));
            }
            raw.insert(e, pages[0]);
        }
        // Compact page numbers so the coloring is surjective.
        let mut used: Vec<usize> = raw.values().copied().collect();
        used.sort_unstable();
        used.dedup();
        let renum: BTreeMap<usize, usize> =
            used.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
        let assignment = raw.into_iter().map(|(e, p)| (e, renum[&p])).collect();
        Ok(PageColoring::new(used.len(), assignment).expect("compacted pages are in range"))
    }

    /// Extracts literals from solver output: integers from any line,
    /// skipping comment/status words, stopping at a bare 0 terminator.
    pub fn parse_model_text(text: &str) -> Vec<i64> {
        let mut literals = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.starts_with('c') || line.starts_with("s ") || line == "s" {
                continue;
            }
            for token in line.split_whitespace() {
                if token == "v" {
                    continue;
                }
                if let Ok(lit) = token.parse::<i64>() {
                    if lit == 0 {
                        continue;
                    }
                    literals.push(lit);
                }
            }
        }
        literals
    }
}

/// Encodes the `k`-page decision for a fixed layout.
pub fn export_cnf(g: &Graph, layout: &CyclicLayout, k: usize) -> CnfDocument {
    let edges: Vec<Edge> = g.edges().to_vec();
    let doc = CnfDocument {
        k,
        edges: edges.clone(),
        clauses: Vec::new(),
    };
    let mut clauses = Vec::new();
    for (i, _) in edges.iter().enumerate() {
        // At least one page...
        clauses.push((1..=k).map(|p| doc.var(i, p)).collect::<Vec<_>>());
        // ...and at most one.
        for p in 1..=k {
            for q in (p + 1)..=k {
                clauses.push(vec![-doc.var(i, p), -doc.var(i, q)]);
            }
        }
    }
    for i in 0..edges.len() {
        for j in (i + 1)..edges.len() {
            let clash = edges[i].shared_vertex(&edges[j]).is_some()
                || mbe_core::edges_conflict(layout, edges[i], edges[j])
                    .expect("edges lie in the layout");
            if clash {
                for p in 1..=k {
                    clauses.push(vec![-doc.var(i, p), -doc.var(j, p)]);
                }
            }
        }
    }
    CnfDocument { clauses, ..doc }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mbe_core::embedding::{verify, BookEmbedding};
    use mbe_core::graph::cycle;

    #[test]
    fn triangle_encoding_shape() {
        let g = cycle(3).unwrap();
        let doc = export_cnf(&g, &CyclicLayout::identity(3), 3);
        assert_eq!(doc.num_vars(), 9);
        // 3 ALO + 3*3 AMO + 3 adjacent pairs * 3 pages
        assert_eq!(doc.clauses.len(), 3 + 9 + 9);
        let text = doc.to_dimacs();
        assert!(text.contains("p cnf 9 21"));
    }

    #[test]
    fn decode_round_trip() {
        let g = cycle(3).unwrap();
        let layout = CyclicLayout::identity(3);
        let doc = export_cnf(&g, &layout, 3);
        // Hand-built model: edge 0 -> page 1, edge 1 -> page 2, edge 2 -> page 3.
        let lits = vec![
            doc.var(0, 1),
            -doc.var(0, 2),
            -doc.var(0, 3),
            doc.var(1, 2),
            doc.var(2, 3),
        ];
        let coloring = doc.decode_model(&lits).unwrap();
        let embedding = BookEmbedding::new(g, layout, coloring).unwrap();
        assert!(verify(&embedding).valid);
    }

    #[test]
    fn model_text_parsing() {
        let text = "c comment\ns SATISFIABLE\nv 1 -2 3\nv -4 0\n";
        assert_eq!(CnfDocument::parse_model_text(text), vec![1, -2, 3, -4]);
    }

    #[test]
    fn incomplete_model_is_rejected() {
        let g = cycle(3).unwrap();
        let doc = export_cnf(&g, &CyclicLayout::identity(3), 2);
        assert!(matches!(
            doc.decode_model(&[doc.var(0, 1), doc.var(0, 2)]),
            Err(CnfError::NotExactlyOne(_, 2))
        ));
    }
}
