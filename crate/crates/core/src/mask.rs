//! Bitmask view of a vertex universe with at most 128 labels.
//!
//! Heavy algorithms (face enumeration, collapsing, bistellar search,
//! isomorphism pruning) run on `u128` masks; this module holds the mapping
//! between arbitrary `u32` labels and bit positions. Bit *i* of a mask
//! corresponds to the *i*-th smallest label in the universe, so subset tests
//! are single `AND`s and lexicographic label order agrees with ascending
//! bit order.

use crate::error::{Error, Result};
use crate::simplex::{Simplex, Vertex};

/// Maximum universe size for mask-based algorithms.
pub const MASK_LIMIT: usize = 128;

/// A sorted label universe defining the mask encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexIndex {
    labels: Vec<Vertex>,
}

impl VertexIndex {
    /// Builds an index from sorted distinct labels.
    pub fn new(labels: Vec<Vertex>) -> Result<Self> {
        if labels.len() > MASK_LIMIT {
            return Err(Error::TooManyVertices {
                got: labels.len(),
                limit: MASK_LIMIT,
            });
        }
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        Ok(Self { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Vertex] {
        &self.labels
    }

    pub fn label(&self, bit: usize) -> Vertex {
        self.labels[bit]
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.labels.binary_search(&v).ok()
    }

    /// Encodes a simplex; `None` when it uses a label outside the universe.
    pub fn mask_of(&self, s: &Simplex) -> Option<u128> {
        let mut m = 0u128;
        for &v in s.vertices() {
            m |= 1u128 << self.position(v)?;
        }
        Some(m)
    }

    /// Decodes a mask back into a simplex.
    pub fn simplex_of(&self, mut m: u128) -> Simplex {
        let mut verts = smallvec::SmallVec::<[Vertex; 8]>::new();
        while m != 0 {
            let bit = m.trailing_zeros() as usize;
            verts.push(self.labels[bit]);
            m &= m - 1;
        }
        Simplex::from_sorted(verts)
    }

    /// Mask with every universe bit set.
    pub fn full_mask(&self) -> u128 {
        if self.labels.len() == MASK_LIMIT {
            u128::MAX
        } else {
            (1u128 << self.labels.len()) - 1
        }
    }
}

/// Enumerates all non-empty submasks of `m`, including `m` itself.
///
/// Visits submasks in decreasing numeric order via the standard
/// `s  = (s - 1) & m` walk.
pub fn for_each_submask(m: u128, mut f: impl FnMut(u128)) {
    if m == 0 {
        return;
    }
    let mut s = m;
    loop {
        f(s);
        if s == 0 {
            break;
        }
        s = (s - 1) & m;
        if s == 0 {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex;

    #[test]
    fn roundtrip() {
        let idx = VertexIndex::new(vec![2, 7, 40, 1000]).unwrap();
        let s = simplex![7, 1000];
        let m = idx.mask_of(&s).unwrap();
        assert_eq!(m, 0b1010);
        assert_eq!(idx.simplex_of(m), s);
        assert_eq!(idx.mask_of(&simplex![3]), None);
        assert_eq!(idx.full_mask(), 0b1111);
    }

    #[test]
    fn submask_walk_hits_every_nonempty_subset() {
        let mut seen = Vec::new();
        for_each_submask(0b1011, |s| seen.push(s));
        seen.sort_unstable();
        assert_eq!(seen, vec![0b0001, 0b0010, 0b0011, 0b1000, 0b1001, 0b1010, 0b1011]);
    }
}
