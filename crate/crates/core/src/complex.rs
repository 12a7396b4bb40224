//! Finite abstract simplicial complexes, stored by their inclusion-maximal
//! faces (facets).
//!
//! The facet list is kept in a canonical form — lexicographically sorted,
//! duplicate-free, with dominated faces removed — so structural equality of
//! two `SimplicialComplex` values coincides with equality of the complexes.
//! Complexes need not be pure. The complex with no facets is "empty"
//! (dimension −1); single points, simplex boundaries and everything else are
//! built through [`SimplicialComplex::from_facets`] or the dedicated
//! constructors.

use crate::error::{Error, Result};
use crate::mask::VertexIndex;
use crate::simplex::{Simplex, Vertex};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};
use std::fmt;

/// An abstract simplicial complex over `u32` vertex labels.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    /// Canonical facet list: lexicographically sorted, inclusion-maximal.
    facets: Vec<Simplex>,
}

impl SimplicialComplex {
    // ------------------------------------------------------------------
    // Construction
    // ------------------------------------------------------------------

    /// Builds a complex from candidate faces, keeping the maximal ones.
    ///
    /// Empty simplices are dropped, duplicates removed, and any face
    /// contained in another is discarded. An empty candidate list yields
    /// the empty complex.
    pub fn from_facets(facets: impl IntoIterator<Item = Simplex>) -> Self {
        let mut list: Vec<Simplex> = facets.into_iter().filter(|s| !s.is_empty()).collect();
        list.sort_unstable();
        list.dedup();
        if list.is_empty() {
            return Self { facets: list };
        }
        let min_len = list.iter().map(Simplex::len).min().unwrap();
        let max_len = list.iter().map(Simplex::len).max().unwrap();
        if min_len == max_len {
            // Equal-size faces cannot dominate one another.
            return Self { facets: list };
        }
        Self {
            facets: remove_dominated(list),
        }
    }

    /// Builds from faces already known to be inclusion-maximal and distinct.
    ///
    /// Sorts into canonical order; maximality is only spot-checked in debug
    /// builds (full verification would defeat the purpose of this fast path).
    pub fn from_maximal(mut facets: Vec<Simplex>) -> Self {
        facets.sort_unstable();
        facets.dedup();
        debug_assert!(
            facets.iter().all(|s| !s.is_empty()),
            "empty simplex passed as facet"
        );
        Self { facets }
    }

    /// Parses nested vertex lists — convenient for literals and data files.
    pub fn from_facet_lists(lists: &[Vec<Vertex>]) -> Result<Self> {
        let facets = lists
            .iter()
            .map(|l| Simplex::new(l.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_facets(facets))
    }

    /// The boundary complex of the full simplex on `verts`.
    pub fn simplex_boundary(verts: &Simplex) -> Self {
        Self::from_maximal(verts.boundary_facets().collect())
    }

    /// The full simplex on `verts` as a complex.
    pub fn full_simplex(verts: &Simplex) -> Self {
        Self::from_maximal(vec![verts.clone()])
    }

    /// The empty complex (no faces, dimension −1).
    pub fn empty() -> Self {
        Self { facets: Vec::new() }
    }

    // ------------------------------------------------------------------
    // Basic accessors
    // ------------------------------------------------------------------

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension: the largest facet dimension, −1 for the empty complex.
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(Simplex::dim).max().unwrap_or(-1)
    }

    /// True when every facet has the same dimension.
    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(f) => {
                let d = f.len();
                self.facets.iter().all(|s| s.len() == d)
            }
        }
    }

    /// Sorted distinct vertex labels.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = self
            .facets
            .iter()
            .flat_map(|s| s.vertices().iter().copied())
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices().len()
    }

    /// Mask encoding of the facet list over this complex's vertex universe.
    pub fn mask_view(&self) -> Result<(VertexIndex, Vec<u128>)> {
        let idx = VertexIndex::new(self.vertices())?;
        let masks = self
            .facets
            .iter()
            .map(|s| idx.mask_of(s).expect("facet within own universe"))
            .collect();
        Ok((idx, masks))
    }

    // ------------------------------------------------------------------
    // Face queries
    // ------------------------------------------------------------------

    /// Membership test: is `s` a face (subset of some facet)?
    pub fn contains_face(&self, s: &Simplex) -> bool {
        if s.is_empty() {
            return !self.facets.is_empty();
        }
        self.facets.iter().any(|f| s.is_subset_of(f))
    }

    /// All non-empty faces, sorted by (dimension, lex).
    pub fn all_faces(&self) -> Vec<Simplex> {
        let mut out: Vec<Simplex> = match self.mask_view() {
            Ok((idx, masks)) => {
                let mut seen: HashSet<u128> = HashSet::new();
                for m in masks {
                    crate::mask::for_each_submask(m, |s| {
                        seen.insert(s);
                    });
                }
                seen.into_iter().map(|m| idx.simplex_of(m)).collect()
            }
            Err(_) => {
                let mut seen: HashSet<Simplex> = HashSet::new();
                for f in &self.facets {
                    for s in f.all_faces() {
                        if !s.is_empty() {
                            seen.insert(s);
                        }
                    }
                }
                seen.into_iter().collect()
            }
        };
        out.sort_unstable_by_key(|s| (s.len(), s.clone()));
        out
    }

    /// All faces of the given dimension, lexicographically sorted.
    pub fn faces_of_dim(&self, dim: i64) -> Vec<Simplex> {
        if dim < 0 {
            return Vec::new();
        }
        let k = (dim + 1) as usize;
        let mut set: HashSet<Simplex> = HashSet::new();
        for f in &self.facets {
            if f.len() >= k {
                set.extend(f.faces_with_len(k));
            }
        }
        let mut out: Vec<Simplex> = set.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// Face counts by dimension: entry `i` counts the `i`-dimensional faces.
    pub fn f_vector(&self) -> Vec<u64> {
        let top = self.dim();
        if top < 0 {
            return Vec::new();
        }
        let mut counts = vec![0u64; (top + 1) as usize];
        match self.mask_view() {
            Ok((_, masks)) => {
                let mut seen: HashSet<u128> = HashSet::new();
                for m in masks {
                    crate::mask::for_each_submask(m, |s| {
                        if seen.insert(s) {
                            counts[(s.count_ones() - 1) as usize] += 1;
                        }
                    });
                }
            }
            Err(_) => {
                let mut seen: HashSet<Simplex> = HashSet::new();
                for f in &self.facets {
                    for s in f.all_faces() {
                        if !s.is_empty() && seen.insert(s.clone()) {
                            counts[s.dim() as usize] += 1;
                        }
                    }
                }
            }
        }
        counts
    }

    /// Euler characteristic Σ (−1)^i f_i.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    // ------------------------------------------------------------------
    // Local structure
    // ------------------------------------------------------------------

    /// Link of `s`: `{ F \ s : s ⊆ F facet }`. Empty when `s` is not a face.
    pub fn link(&self, s: &Simplex) -> SimplicialComplex {
        let facets: Vec<Simplex> = self
            .facets
            .iter()
            .filter(|f| s.is_subset_of(f))
            .map(|f| f.difference(s))
            .filter(|r| !r.is_empty())
            .collect();
        // Distinct facets of the ambient complex give distinct link faces,
        // and none can contain another (adding `s` back would violate
        // maximality upstairs), so no dominance pass is needed.
        SimplicialComplex::from_maximal(facets)
    }

    /// Closed star of `s`: the subcomplex generated by facets containing `s`.
    pub fn closed_star(&self, s: &Simplex) -> SimplicialComplex {
        SimplicialComplex::from_maximal(
            self.facets
                .iter()
                .filter(|f| s.is_subset_of(f))
                .cloned()
                .collect(),
        )
    }

    /// Subcomplex induced on a vertex set: all faces with vertices in `keep`.
    pub fn induced(&self, keep: &[Vertex]) -> SimplicialComplex {
        let keep: HashSet<Vertex> = keep.iter().copied().collect();
        let restricted: Vec<Simplex> = self
            .facets
            .iter()
            .map(|f| {
                Simplex::from_sorted(
                    f.vertices()
                        .iter()
                        .copied()
                        .filter(|v| keep.contains(v))
                        .collect::<smallvec::SmallVec<[Vertex; 8]>>(),
                )
            })
            .collect();
        SimplicialComplex::from_facets(restricted)
    }

    /// The `k`-skeleton: all faces of dimension ≤ `k`.
    pub fn skeleton(&self, k: i64) -> SimplicialComplex {
        if k < 0 {
            return SimplicialComplex::empty();
        }
        let mut facets = self.faces_of_dim(k);
        for f in &self.facets {
            if f.dim() < k {
                facets.push(f.clone());
            }
        }
        // k-faces are mutually incomparable and smaller facets are maximal
        // already, so the union is inclusion-maximal as-is.
        SimplicialComplex::from_maximal(facets)
    }

    /// Cone over the complex with a fresh apex vertex.
    ///
    /// The cone over the empty complex is the single point `{apex}`.
    pub fn cone(&self, apex: Vertex) -> Result<SimplicialComplex> {
        if self.vertices().contains(&apex) {
            return Err(Error::InvalidComplex(format!(
                "cone apex {apex} already occurs in the complex"
            )));
        }
        if self.facets.is_empty() {
            return Ok(SimplicialComplex::from_maximal(vec![Simplex::vertex(apex)]));
        }
        let facets = self
            .facets
            .iter()
            .map(|f| f.with_vertex(apex))
            .collect::<Result<Vec<_>>>()?;
        Ok(SimplicialComplex::from_maximal(facets))
    }

    /// Simplicial join; the vertex sets must be disjoint.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if self.facets.is_empty() {
            return Ok(other.clone());
        }
        if other.facets.is_empty() {
            return Ok(self.clone());
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                if !a.is_disjoint(b) {
                    return Err(Error::InvalidComplex(format!(
                        "join factors share vertices: {a} and {b}"
                    )));
                }
                facets.push(a.union(b));
            }
        }
        Ok(SimplicialComplex::from_maximal(facets))
    }

    // ------------------------------------------------------------------
    // Combination
    // ------------------------------------------------------------------

    /// Union of two complexes (union of face sets).
    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        SimplicialComplex::from_facets(
            self.facets
                .iter()
                .chain(other.facets.iter())
                .cloned()
                .collect::<Vec<_>>(),
        )
    }

    /// Intersection of two complexes (intersection of face sets).
    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        // Every common face lies in some F ∩ G, and each F ∩ G is a common
        // face, so the maximal elements of the pairwise intersections are
        // exactly the facets of the intersection complex.
        let mut candidates: HashSet<Simplex> = HashSet::new();
        for f in &self.facets {
            for g in &other.facets {
                let s = f.intersection(g);
                if !s.is_empty() {
                    candidates.insert(s);
                }
            }
        }
        SimplicialComplex::from_facets(candidates)
    }

    /// True when every face of `self` is a face of `other`.
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets.iter().all(|f| other.contains_face(f))
    }

    /// Removes the given facets (must be facets, not arbitrary faces) and
    /// returns the complex generated by the rest plus the boundaries of the
    /// removed ones. Used by facet-replacement surgeries.
    pub fn replace_facets(
        &self,
        remove: &HashSet<Simplex>,
        add: impl IntoIterator<Item = Simplex>,
    ) -> SimplicialComplex {
        let mut facets: Vec<Simplex> = self
            .facets
            .iter()
            .filter(|f| !remove.contains(*f))
            .cloned()
            .collect();
        facets.extend(add);
        SimplicialComplex::from_facets(facets)
    }

    // ------------------------------------------------------------------
    // Boundary and connectivity
    // ------------------------------------------------------------------

    /// Map from each ridge (codim-1 face of a facet) to its facet count.
    pub fn ridge_degrees(&self) -> HashMap<Simplex, u32> {
        let mut counts: HashMap<Simplex, u32> = HashMap::new();
        let d = self.dim();
        for f in &self.facets {
            if f.dim() == d {
                for r in f.boundary_facets() {
                    *counts.entry(r).or_insert(0) += 1;
                }
            }
        }
        counts
    }

    /// Boundary subcomplex of a pure complex: ridges lying in exactly one
    /// facet, closed downwards.
    pub fn boundary(&self) -> Result<SimplicialComplex> {
        if !self.is_pure() {
            return Err(Error::InvalidComplex(
                "boundary is defined here for pure complexes only".into(),
            ));
        }
        let ridges: Vec<Simplex> = self
            .ridge_degrees()
            .into_iter()
            .filter(|(_, c)| *c == 1)
            .map(|(r, _)| r)
            .collect();
        Ok(SimplicialComplex::from_maximal(ridges))
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member. Connectivity is facet-wise (equivalently: through
    /// the 1-skeleton).
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let verts = self.vertices();
        let index: HashMap<Vertex, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut dsu = Dsu::new(verts.len());
        for f in &self.facets {
            let vs = f.vertices();
            for w in vs.windows(2) {
                dsu.union(index[&w[0]], index[&w[1]]);
            }
        }
        let mut comps: HashMap<usize, Vec<Vertex>> = HashMap::new();
        for (i, &v) in verts.iter().enumerate() {
            comps.entry(dsu.find(i)).or_default().push(v);
        }
        let mut out: Vec<Vec<Vertex>> = comps.into_values().collect();
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort_unstable();
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    // ------------------------------------------------------------------
    // Relabeling and subdivision
    // ------------------------------------------------------------------

    /// Applies a vertex map facet-wise. Fails if the map collapses a facet.
    pub fn relabel(&self, map: impl Fn(Vertex) -> Vertex) -> Result<SimplicialComplex> {
        let facets = self
            .facets
            .iter()
            .map(|f| f.relabel(&map))
            .collect::<Result<Vec<_>>>()?;
        Ok(SimplicialComplex::from_facets(facets))
    }

    /// Stellar subdivision at `face`: removes the open star and cones the
    /// boundary-sphere remnant from `new_vertex`.
    ///
    /// `face` must be a face of the complex and `new_vertex` must be fresh.
    pub fn stellar_subdivide(&self, face: &Simplex, new_vertex: Vertex) -> Result<SimplicialComplex> {
        self.stellar_subdivide_filtered(face, new_vertex, |_| true)
    }

    /// One-sided stellar subdivision: only the facets containing `face`
    /// whose link part lies in the connected component of `link(face)`
    /// containing `component_witness` are replaced. The face itself
    /// survives when other link components remain.
    pub fn stellar_subdivide_in_component(
        &self,
        face: &Simplex,
        new_vertex: Vertex,
        component_witness: &Simplex,
    ) -> Result<SimplicialComplex> {
        let lk = self.link(face);
        if !lk.contains_face(component_witness) {
            return Err(Error::Precondition(format!(
                "witness {component_witness} is not in the link of {face}"
            )));
        }
        let comps = lk.connected_components();
        let target: HashSet<Vertex> = comps
            .into_iter()
            .find(|c| component_witness.vertices().iter().all(|v| c.contains(v)))
            .ok_or_else(|| Error::Precondition("witness spans several link components".into()))?
            .into_iter()
            .collect();
        self.stellar_subdivide_filtered(face, new_vertex, |link_part| {
            link_part.vertices().iter().all(|v| target.contains(v))
        })
    }

    fn stellar_subdivide_filtered(
        &self,
        face: &Simplex,
        new_vertex: Vertex,
        mut replace_when: impl FnMut(&Simplex) -> bool,
    ) -> Result<SimplicialComplex> {
        if face.is_empty() {
            return Err(Error::Precondition("cannot subdivide the empty face".into()));
        }
        if !self.contains_face(face) {
            return Err(Error::Precondition(format!(
                "{face} is not a face of the complex"
            )));
        }
        if self.vertices().contains(&new_vertex) {
            return Err(Error::Precondition(format!(
                "subdivision vertex {new_vertex} already present"
            )));
        }
        let mut out: Vec<Simplex> = Vec::with_capacity(self.facets.len() + 8);
        for f in &self.facets {
            if face.is_subset_of(f) && replace_when(&f.difference(face)) {
                for &v in face.vertices() {
                    out.push(f.without_vertex(v).with_vertex(new_vertex)?);
                }
            } else {
                out.push(f.clone());
            }
        }
        // Replacement facets have the same cardinality as the originals and
        // the untouched facets stay maximal, so no dominance pass is needed;
        // duplicates cannot arise because each new facet determines (f, v).
        Ok(SimplicialComplex::from_maximal(out))
    }
}

/// Removes faces dominated by another face in the list. Input is sorted
/// and deduplicated; output keeps canonical order.
fn remove_dominated(list: Vec<Simplex>) -> Vec<Simplex> {
    // Try the mask fast path over the union universe.
    let mut verts: Vec<Vertex> = list
        .iter()
        .flat_map(|s| s.vertices().iter().copied())
        .collect();
    verts.sort_unstable();
    verts.dedup();
    if let Ok(idx) = VertexIndex::new(verts) {
        let masks: Vec<u128> = list
            .iter()
            .map(|s| idx.mask_of(s).expect("face within union universe"))
            .collect();
        // Order indices by descending size so that a face is only compared
        // against strictly larger kept faces.
        let mut order: Vec<usize> = (0..list.len()).collect();
        order.sort_unstable_by_key(|&i| std::cmp::Reverse(masks[i].count_ones()));
        let mut kept_masks: Vec<u128> = Vec::with_capacity(list.len());
        let mut keep = vec![false; list.len()];
        for &i in &order {
            let m = masks[i];
            let dominated = kept_masks
                .iter()
                .take_while(|&&k| k.count_ones() > m.count_ones())
                .any(|&k| k & m == m);
            if !dominated {
                kept_masks.push(m);
                keep[i] = true;
            }
        }
        let mut out: Vec<Simplex> = list
            .into_iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(s, _)| s)
            .collect();
        out.sort_unstable();
        return out;
    }
    // Generic path for universes beyond the mask limit.
    let mut order: Vec<usize> = (0..list.len()).collect();
    order.sort_unstable_by_key(|&i| std::cmp::Reverse(list[i].len()));
    let mut kept: Vec<usize> = Vec::new();
    let mut keep = vec![false; list.len()];
    for &i in &order {
        let dominated = kept
            .iter()
            .take_while(|&&j| list[j].len() > list[i].len())
            .any(|&j| list[i].is_subset_of(&list[j]));
        if !dominated {
            kept.push(i);
            keep[i] = true;
        }
    }
    let mut out: Vec<Simplex> = list
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(s, _)| s)
        .collect();
    out.sort_unstable();
    out
}

/// Union–find over dense indices.
struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SimplicialComplex(dim {}, {} facets)",
            self.dim(),
            self.facet_count()
        )?;
        if self.facet_count() <= 12 {
            write!(f, " {:?}", self.facets)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex;

    fn triangle_boundary() -> SimplicialComplex {
        SimplicialComplex::from_facet_lists(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    #[test]
    fn normalization_removes_dominated_faces() {
        let c = SimplicialComplex::from_facets(vec![
            simplex![0, 1],
            simplex![0, 1, 2],
            simplex![1, 2],
            simplex![3],
        ]);
        assert_eq!(c.facets(), &[simplex![0, 1, 2], simplex![3]]);
        assert!(!c.is_pure());
        assert_eq!(c.dim(), 2);
        assert_eq!(SimplicialComplex::from_facets(vec![]).dim(), -1);
    }

    #[test]
    fn f_vector_and_euler() {
        let bd = SimplicialComplex::simplex_boundary(&simplex![0, 1, 2, 3]);
        assert_eq!(bd.f_vector(), vec![4, 6, 4]);
        assert_eq!(bd.euler_characteristic(), 2); // 2-sphere
        let t = triangle_boundary();
        assert_eq!(t.f_vector(), vec![3, 3]);
        assert_eq!(t.euler_characteristic(), 0); // circle
        let solid = SimplicialComplex::full_simplex(&simplex![0, 1, 2, 3]);
        assert_eq!(solid.f_vector(), vec![4, 6, 4, 1]);
        assert_eq!(solid.euler_characteristic(), 1);
    }

    #[test]
    fn face_queries() {
        let bd = SimplicialComplex::simplex_boundary(&simplex![0, 1, 2, 3]);
        assert!(bd.contains_face(&simplex![0, 2]));
        assert!(!bd.contains_face(&simplex![0, 1, 2, 3]));
        assert_eq!(bd.faces_of_dim(1).len(), 6);
        assert_eq!(bd.all_faces().len(), 14);
        assert_eq!(bd.vertices(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn link_star_induced() {
        let bd = SimplicialComplex::simplex_boundary(&simplex![0, 1, 2, 3]);
        let lk = bd.link(&simplex![0]);
        assert_eq!(lk, triangle_boundary().relabel(|v| v + 1).unwrap());
        let st = bd.closed_star(&simplex![0]);
        assert_eq!(st.facet_count(), 3);
        assert!(st.is_subcomplex_of(&bd));
        let ind = bd.induced(&[0, 1, 2]);
        assert_eq!(ind.facets(), &[simplex![0, 1, 2]]);
        // Link of a facet is empty; link of a non-face is empty.
        assert!(bd.link(&simplex![0, 1, 2]).is_empty());
        assert!(bd.link(&simplex![0, 4]).is_empty());
    }

    #[test]
    fn cone_join_skeleton() {
        let circle = triangle_boundary();
        let disk = circle.cone(9).unwrap();
        assert_eq!(disk.euler_characteristic(), 1);
        assert_eq!(disk.dim(), 2);
        assert!(circle.cone(0).is_err());
        let edge = SimplicialComplex::full_simplex(&simplex![7, 8]);
        let join = circle.join(&edge).unwrap();
        assert_eq!(join.dim(), 3);
        assert_eq!(join.facet_count(), 3);
        let sk = SimplicialComplex::simplex_boundary(&simplex![0, 1, 2, 3]).skeleton(1);
        assert_eq!(sk.f_vector(), vec![4, 6]);
        // Cone over the empty complex is a point.
        let pt = SimplicialComplex::empty().cone(5).unwrap();
        assert_eq!(pt.f_vector(), vec![1]);
    }

    #[test]
    fn union_intersection_subcomplex() {
        let a = SimplicialComplex::from_facet_lists(&[vec![0, 1, 2]]).unwrap();
        let b = SimplicialComplex::from_facet_lists(&[vec![1, 2, 3]]).unwrap();
        let u = a.union(&b);
        assert_eq!(u.facet_count(), 2);
        let i = a.intersection(&b);
        assert_eq!(i.facets(), &[simplex![1, 2]]);
        assert!(i.is_subcomplex_of(&a) && i.is_subcomplex_of(&b));
        assert!(!a.is_subcomplex_of(&b));
    }

    #[test]
    fn boundary_and_components() {
        let solid = SimplicialComplex::full_simplex(&simplex![0, 1, 2, 3]);
        let bd = solid.boundary().unwrap();
        assert_eq!(bd, SimplicialComplex::simplex_boundary(&simplex![0, 1, 2, 3]));
        let sphere = bd.boundary().unwrap();
        assert!(sphere.is_empty());
        let two = SimplicialComplex::from_facet_lists(&[vec![0, 1], vec![5, 6]]).unwrap();
        assert_eq!(two.connected_components(), vec![vec![0, 1], vec![5, 6]]);
        assert!(!two.is_connected());
    }

    #[test]
    fn stellar_subdivision_full() {
        // Subdividing an edge of the 2-sphere boundary keeps it a sphere
        // and adds one vertex / two facets over each incident triangle.
        let bd = SimplicialComplex::simplex_boundary(&simplex![0, 1, 2, 3]);
        let sub = bd.stellar_subdivide(&simplex![0, 1], 9).unwrap();
        assert_eq!(sub.f_vector(), vec![5, 9, 6]);
        assert_eq!(sub.euler_characteristic(), 2);
        assert!(!sub.contains_face(&simplex![0, 1]));
        assert!(sub.contains_face(&simplex![0, 9]));
        // Subdividing a facet of the solid tetrahedron = coning it.
        let solid = SimplicialComplex::full_simplex(&simplex![0, 1, 2, 3]);
        let sub = solid.stellar_subdivide(&simplex![0, 1, 2, 3], 9).unwrap();
        assert_eq!(sub.facet_count(), 4);
        assert_eq!(sub.euler_characteristic(), 1);
    }

    #[test]
    fn stellar_subdivision_one_sided() {
        // Two triangles sharing edge (0 1); subdivide only on the side of 2.
        let c = SimplicialComplex::from_facet_lists(&[vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        let sub = c
            .stellar_subdivide_in_component(&simplex![0, 1], 9, &simplex![2])
            .unwrap();
        assert!(sub.contains_face(&simplex![0, 1])); // edge survives
        assert!(sub.contains_face(&simplex![0, 1, 3])); // far side untouched
        assert!(!sub.contains_face(&simplex![0, 1, 2]));
        assert_eq!(sub.facet_count(), 3);
        // A witness outside the link is rejected.
        assert!(c
            .stellar_subdivide_in_component(&simplex![0, 1], 9, &simplex![7])
            .is_err());
    }

    #[test]
    fn relabel_is_canonical() {
        let bd = SimplicialComplex::simplex_boundary(&simplex![0, 1, 2, 3]);
        let r = bd.relabel(|v| 3 - v).unwrap();
        assert_eq!(r, bd);
        assert!(bd.relabel(|_| 0).is_err());
    }
}
