//! Independent reference deciders used to cross-validate the searches.
//!
//! These are intentionally naive and share no code with the search
//! implementations: the coloring oracle enumerates raw assignments and
//! tests each one with the library verifier, and the SAT oracle is a plain
//! DPLL over the exported clauses. Both are only usable at small scale,
//! which is the point — they are ground truth for the test corpus, not
//! tools.

use std::collections::BTreeMap;

use mbe_core::embedding::{verify, BookEmbedding, PageColoring};
use mbe_core::graph::Graph;
use mbe_core::layout::CyclicLayout;

/// Whether any assignment of at most `k` pages is a valid matching book
/// embedding for the fixed layout, by enumerating all `k^m` assignments
/// in lexicographic order (short-circuiting each test on the verifier's
/// first violation via its report).
pub fn naive_color_decision(g: &Graph, layout: &CyclicLayout, k: usize) -> bool {
    let m = g.edge_count();
    if m == 0 {
        return true;
    }
    let mut digits = vec![1usize; m];
    loop {
        let assignment: BTreeMap<_, _> = g
            .edges()
            .iter()
            .zip(digits.iter())
            .map(|(&e, &p)| (e, p))
            .collect();
        // Compact the declared page count so surjectivity cannot fail the
        // candidate: "at most k pages" is the decision being made.
        let used = *digits.iter().max().expect("m > 0");
        let ok = PageColoring::new(used, assignment)
            .ok()
            .and_then(|c| BookEmbedding::new(g.clone(), layout.clone(), c).ok())
            .map(|e| verify(&e).valid)
            .unwrap_or(false);
        if ok {
            return true;
        }
        // Next assignment.
        let mut i = 0;
        loop {
            if i == m {
                return false;
            }
            digits[i] += 1;
            if digits[i] <= k {
                break;
            }
            digits[i] = 1;
            i += 1;
        }
    }
}

/// Plain DPLL with unit propagation: satisfiability of a clause set given
/// as DIMACS-style literals. Returns the model when satisfiable.
pub fn dpll_sat(num_vars: usize, clauses: &[Vec<i64>]) -> Option<Vec<i64>> {
    // 0 = unassigned, 1 = true, 2 = false
    let mut assign = vec![0u8; num_vars + 1];

    fn lit_state(assign: &[u8], lit: i64) -> u8 {
        let v = lit.unsigned_abs() as usize;
        match (assign[v], lit > 0) {
            (0, _) => 0,
            (1, true) | (2, false) => 1,
            _ => 2,
        }
    }

    fn solve(assign: &mut Vec<u8>, clauses: &[Vec<i64>]) -> bool {
        // Unit propagation to fixpoint.
        let mut trail: Vec<usize> = Vec::new();
        loop {
            let mut unit: Option<i64> = None;
            for clause in clauses {
                let mut unassigned = None;
                let mut satisfied = false;
                let mut open = 0;
                for &lit in clause {
                    match lit_state(assign, lit) {
                        1 => {
                            satisfied = true;
                            break;
                        }
                        0 => {
                            open += 1;
                            unassigned = Some(lit);
                        }
                        _ => {}
                    }
                }
                if satisfied {
                    continue;
                }
                match open {
                    0 => {
                        for &v in &trail {
                            assign[v] = 0;
                        }
                        return false;
                    }
                    1 => {
                        unit = Some(unassigned.expect("one open literal"));
                        break;
                    }
                    _ => {}
                }
            }
            match unit {
                Some(lit) => {
                    let v = lit.unsigned_abs() as usize;
                    assign[v] = if lit > 0 { 1 } else { 2 };
                    trail.push(v);
                }
                None => break,
            }
        }
        // Branch on the first unassigned variable.
        let var = (1..assign.len()).find(|&v| assign[v] == 0);
        let var = match var {
            None => return true,
            Some(v) => v,
        };
        for value in [1u8, 2u8] {
            assign[var] = value;
            if solve(assign, clauses) {
                return true;
            }
            assign[var] = 0;
        }
        for &v in &trail {
            assign[v] = 0;
        }
        false
    }

    if solve(&mut assign, clauses) {
        Some(
            (1..=num_vars)
                .map(|v| if assign[v] == 1 { v as i64 } else { -(v as i64) })
                .collect(),
        )
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mbe_core::graph::cycle;

    #[test]
    fn naive_decision_on_cycles() {
        let c4 = cycle(4).unwrap();
        let layout = CyclicLayout::identity(4);
        assert!(!naive_color_decision(&c4, &layout, 1));
        assert!(naive_color_decision(&c4, &layout, 2));
        let c5 = cycle(5).unwrap();
        let layout5 = CyclicLayout::identity(5);
        assert!(!naive_color_decision(&c5, &layout5, 2));
        assert!(naive_color_decision(&c5, &layout5, 3));
    }

    #[test]
    fn dpll_basics() {
        // (x1 v x2) & (!x1) & (!x2 v x3)
        let clauses = vec![vec![1, 2], vec![-1], vec![-2, 3]];
        let model = dpll_sat(3, &clauses).unwrap();
        assert!(model.contains(&-1));
        assert!(model.contains(&2));
        assert!(model.contains(&3));
        // x & !x
        assert!(dpll_sat(1, &[vec![1], vec![-1]]).is_none());
    }
}
