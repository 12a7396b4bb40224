//! Abstract simplices over `u32` vertex labels.
//!
//! A [`Simplex`] is a finite set of vertices stored as a strictly increasing
//! sequence, so equality, hashing and lexicographic comparison agree with the
//! set semantics. The empty simplex (dimension −1) is permitted; it shows up
//! as the link carrier of a facet and as the base case of cone constructions.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use std::fmt;

/// Vertex label. Labels are arbitrary `u32`s; contiguity is never assumed.
pub type Vertex = u32;

/// Inline capacity: facets in this toolkit have ≤ 8 vertices almost always
/// (top dimension 7 occurs for the 8-dimensional-ball boundaries), so the
/// common case never allocates.
const INLINE: usize = 8;

/// A finite vertex set, kept sorted and duplicate-free.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Simplex {
    verts: SmallVec<[Vertex; INLINE]>,
}

impl Simplex {
    /// Builds a simplex from arbitrary-order labels. Fails on duplicates.
    pub fn new(mut verts: Vec<Vertex>) -> Result<Self> {
        verts.sort_unstable();
        for w in verts.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidSimplex(format!(
                    "duplicate vertex {} in {:?}",
                    w[0], verts
                )));
            }
        }
        Ok(Self {
            verts: SmallVec::from_vec(verts),
        })
    }

    /// Builds from labels known to be strictly increasing.
    ///
    /// Only checked in debug builds; use for internally generated data.
    pub fn from_sorted(verts: impl Into<SmallVec<[Vertex; INLINE]>>) -> Self {
        let verts = verts.into();
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]), "unsorted {verts:?}");
        Self { verts }
    }

    /// The empty simplex (dimension −1).
    pub fn empty() -> Self {
        Self {
            verts: SmallVec::new(),
        }
    }

    /// A single vertex.
    pub fn vertex(v: Vertex) -> Self {
        Self {
            verts: SmallVec::from_slice(&[v]),
        }
    }

    /// Dimension: one less than the number of vertices.
    pub fn dim(&self) -> i64 {
        self.verts.len() as i64 - 1
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    /// The vertices in strictly increasing order.
    pub fn vertices(&self) -> &[Vertex] {
        &self.verts
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.verts.binary_search(&v).is_ok()
    }

    /// Set inclusion `self ⊆ other` (merge walk; both sides are sorted).
    pub fn is_subset_of(&self, other: &Simplex) -> bool {
        if self.verts.len() > other.verts.len() {
            return false;
        }
        let mut it = other.verts.iter();
        'outer: for &v in &self.verts {
            for &w in it.by_ref() {
                match w.cmp(&v) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Equal => continue 'outer,
                    std::cmp::Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    /// Set union.
    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut out: SmallVec<[Vertex; INLINE]> =
            SmallVec::with_capacity(self.verts.len() + other.verts.len());
        let (mut i, mut j) = (0, 0);
        while i < self.verts.len() && j < other.verts.len() {
            match self.verts[i].cmp(&other.verts[j]) {
                std::cmp::Ordering::Less => {
                    out.push(self.verts[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.verts[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(self.verts[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.verts[i..]);
        out.extend_from_slice(&other.verts[j..]);
        Simplex { verts: out }
    }

    /// Set intersection.
    pub fn intersection(&self, other: &Simplex) -> Simplex {
        let mut out = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.verts.len() && j < other.verts.len() {
            match self.verts[i].cmp(&other.verts[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(self.verts[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        Simplex { verts: out }
    }

    /// True when the vertex sets are disjoint.
    pub fn is_disjoint(&self, other: &Simplex) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.verts.len() && j < other.verts.len() {
            match self.verts[i].cmp(&other.verts[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    /// Set difference `self \ other`.
    pub fn difference(&self, other: &Simplex) -> Simplex {
        let verts = self
            .verts
            .iter()
            .copied()
            .filter(|&v| !other.contains(v))
            .collect();
        Simplex { verts }
    }

    /// `self` with one extra vertex. Fails if `v` is already present.
    pub fn with_vertex(&self, v: Vertex) -> Result<Simplex> {
        match self.verts.binary_search(&v) {
            Ok(_) => Err(Error::InvalidSimplex(format!(
                "vertex {v} already in {self}"
            ))),
            Err(pos) => {
                let mut verts = self.verts.clone();
                verts.insert(pos, v);
                Ok(Simplex { verts })
            }
        }
    }

    /// `self` minus one vertex (no-op if absent).
    pub fn without_vertex(&self, v: Vertex) -> Simplex {
        match self.verts.binary_search(&v) {
            Ok(pos) => {
                let mut verts = self.verts.clone();
                verts.remove(pos);
                Simplex { verts }
            }
            Err(_) => self.clone(),
        }
    }

    /// All codimension-1 faces, ordered by the index of the dropped vertex.
    pub fn boundary_facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.verts.len()).map(move |i| {
            let mut verts = self.verts.clone();
            verts.remove(i);
            Simplex { verts }
        })
    }

    /// All subsets with `k` vertices, in lexicographic order.
    pub fn faces_with_len(&self, k: usize) -> Vec<Simplex> {
        let n = self.verts.len();
        if k > n {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(Simplex {
                verts: idx.iter().map(|&i| self.verts[i]).collect(),
            });
            // advance the combination
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if idx[i] != i + n - k {
                    idx[i] += 1;
                    for j in i + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    /// Every subset, the empty simplex included (2^len entries).
    pub fn all_faces(&self) -> Vec<Simplex> {
        let mut out = Vec::with_capacity(1 << self.verts.len());
        for pattern in 0u32..(1 << self.verts.len()) {
            let verts = self
                .verts
                .iter()
                .enumerate()
                .filter(|(i, _)| pattern >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            out.push(Simplex { verts });
        }
        out
    }

    /// Relabels vertices through `map`, re-sorting the result.
    /// Fails if `map` merges two vertices.
    pub fn relabel(&self, map: impl Fn(Vertex) -> Vertex) -> Result<Simplex> {
        Simplex::new(self.verts.iter().map(|&v| map(v)).collect())
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.verts.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl FromIterator<Vertex> for Simplex {
    /// Collects labels into a simplex, panicking on duplicates.
    /// Intended for literals in tests and builders.
    fn from_iter<T: IntoIterator<Item = Vertex>>(iter: T) -> Self {
        Simplex::new(iter.into_iter().collect()).expect("duplicate vertex in simplex literal")
    }
}

/// Shorthand used pervasively in tests and builders: `simplex![0, 5, 10]`.
#[macro_export]
macro_rules! simplex {
    ($($v:expr),* $(,)?) => {
        $crate::simplex::Simplex::new(vec![$($v as u32),*]).expect("bad simplex literal")
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_sorts_and_rejects_duplicates() {
        let s = Simplex::new(vec![5, 1, 3]).unwrap();
        assert_eq!(s.vertices(), &[1, 3, 5]);
        assert_eq!(s.dim(), 2);
        assert!(Simplex::new(vec![2, 2]).is_err());
        assert_eq!(Simplex::empty().dim(), -1);
    }

    #[test]
    fn subset_union_intersection() {
        let a = simplex![1, 3, 5];
        let b = simplex![3, 5];
        let c = simplex![2, 3];
        assert!(b.is_subset_of(&a));
        assert!(!a.is_subset_of(&b));
        assert!(!c.is_subset_of(&a));
        assert_eq!(a.union(&c), simplex![1, 2, 3, 5]);
        assert_eq!(a.intersection(&c), simplex![3]);
        assert!(a.is_disjoint(&simplex![0, 2]));
        assert!(!a.is_disjoint(&c));
        assert_eq!(a.difference(&b), simplex![1]);
    }

    #[test]
    fn boundary_and_faces() {
        let t = simplex![0, 1, 2];
        let bd: Vec<_> = t.boundary_facets().collect();
        assert_eq!(bd, vec![simplex![1, 2], simplex![0, 2], simplex![0, 1]]);
        assert_eq!(
            t.faces_with_len(2),
            vec![simplex![0, 1], simplex![0, 2], simplex![1, 2]]
        );
        assert_eq!(t.all_faces().len(), 8);
        assert_eq!(t.faces_with_len(0), vec![Simplex::empty()]);
    }

    #[test]
    fn vertex_edits() {
        let e = simplex![2, 7];
        assert_eq!(e.with_vertex(4).unwrap(), simplex![2, 4, 7]);
        assert!(e.with_vertex(7).is_err());
        assert_eq!(e.without_vertex(2), simplex![7]);
        let r = e.relabel(|v| 10 - v).unwrap();
        assert_eq!(r, simplex![3, 8]);
        assert!(e.relabel(|_| 1).is_err());
    }
}
