//! Circular (spine) orders: a cyclic permutation of the vertex set, read
//! counter-clockwise around a circle.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LayoutError {
    #[error("layout of length {got} is not a permutation of 1..={got}: {problem}")]
    NotAPermutation { got: usize, problem: String },
}

/// A cyclic vertex order.
///
/// `order` lists all vertices counter-clockwise; positions are `0..n-1`.
/// Two layouts describe the same circular drawing iff they agree up to
/// rotation and reflection; [`CyclicLayout::canonical`] picks a unique
/// representative of that class.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclicLayout {
    order: Vec<usize>,
    pos: Vec<usize>,
}

impl CyclicLayout {
    pub fn new(order: Vec<usize>) -> Result<Self, LayoutError> {
        let n = order.len();
        let mut pos = vec![usize::MAX; n];
        for (p, &v) in order.iter().enumerate() {
            if v < 1 || v > n {
                return Err(LayoutError::NotAPermutation {
                    got: n,
                    problem: format!("vertex {v} out of range"),
                });
            }
            if pos[v - 1] != usize::MAX {
                return Err(LayoutError::NotAPermutation {
                    got: n,
                    problem: format!("vertex {v} appears twice"),
                });
            }
            pos[v - 1] = p;
        }
        Ok(CyclicLayout { order, pos })
    }

    pub fn identity(n: usize) -> Self {
        CyclicLayout::new((1..=n).collect()).expect("identity order is a permutation")
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Position of vertex `v` (which must be in `1..=n`).
    pub fn position(&self, v: usize) -> usize {
        self.pos[v - 1]
    }

    pub fn try_position(&self, v: usize) -> Option<usize> {
        if v >= 1 && v <= self.n() {
            Some(self.pos[v - 1])
        } else {
            None
        }
    }

    pub fn vertex_at(&self, position: usize) -> usize {
        self.order[position]
    }

    /// The layout rotated so that the vertex at position `d` comes first.
    pub fn rotated(&self, d: usize) -> CyclicLayout {
        let n = self.n();
        let order = (0..n).map(|i| self.order[(i + d) % n]).collect();
        CyclicLayout::new(order).expect("rotation preserves permutations")
    }

    /// The layout read in the opposite direction (same starting vertex).
    pub fn reflected(&self) -> CyclicLayout {
        let n = self.n();
        let order = (0..n).map(|i| self.order[(n - i) % n]).collect();
        CyclicLayout::new(order).expect("reflection preserves permutations")
    }

    /// Canonical representative of the rotation/reflection class:
    /// the lexicographically least vertex sequence over all `2n` rotations
    /// and reflections. Since vertex 1 is the smallest identifier the
    /// canonical sequence starts with 1, so only the two rotations
    /// anchoring 1 at position 0 need comparing.
    pub fn canonical(&self) -> CyclicLayout {
        let fwd = self.rotated(self.position(1));
        let bwd = self.reflected().rotated(self.reflected().position(1));
        if fwd.order <= bwd.order {
            fwd
        } else {
            bwd
        }
    }

    /// True iff position `x` lies strictly inside the arc walked
    /// counter-clockwise from position `a` to position `b`.
    pub fn strictly_inside_arc(&self, a: usize, b: usize, x: usize) -> bool {
        let n = self.n();
        let len = (b + n - a) % n;
        let off = (x + n - a) % n;
        off > 0 && off < len
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_permutations() {
        assert!(CyclicLayout::new(vec![1, 2, 2]).is_err());
        assert!(CyclicLayout::new(vec![1, 2, 4]).is_err());
        assert!(CyclicLayout::new(vec![0, 1, 2]).is_err());
    }

    #[test]
    fn positions_invert_order() {
        let l = CyclicLayout::new(vec![1, 2, 3, 6, 5, 4, 7, 8, 9]).unwrap();
        assert_eq!(l.position(1), 0);
        assert_eq!(l.position(6), 3);
        assert_eq!(l.position(4), 5);
        assert_eq!(l.vertex_at(8), 9);
    }

    #[test]
    fn canonical_is_idempotent_and_class_invariant() {
        let l = CyclicLayout::new(vec![3, 1, 4, 2, 5]).unwrap();
        let c = l.canonical();
        assert_eq!(c.canonical(), c);
        assert_eq!(l.rotated(2).canonical(), c);
        assert_eq!(l.reflected().canonical(), c);
        assert_eq!(c.order()[0], 1);
    }

    #[test]
    fn arc_membership_wraps() {
        let l = CyclicLayout::identity(6);
        assert!(l.strictly_inside_arc(4, 1, 5));
        assert!(l.strictly_inside_arc(4, 1, 0));
        assert!(!l.strictly_inside_arc(4, 1, 2));
        assert!(!l.strictly_inside_arc(4, 1, 4));
        assert!(!l.strictly_inside_arc(4, 1, 1));
    }
}
