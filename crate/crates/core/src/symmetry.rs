//! Permutation actions on labeled complexes: orbit expansion, group
//! closure, free-involution quotients, cocycle double covers, fixed-point
//! complexes and isomorphism search.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::simplex::{Simplex, Vertex};
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

// ----------------------------------------------------------------------
// Permutations
// ----------------------------------------------------------------------

/// A permutation of `u32` labels with finite support; labels outside the
/// stored map are fixed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation {
    /// Sorted support → image. Entries with `v → v` are dropped.
    map: BTreeMap<Vertex, Vertex>,
}

impl Permutation {
    /// Identity permutation.
    pub fn identity() -> Self {
        Self {
            map: BTreeMap::new(),
        }
    }

    /// Builds from explicit point images; must be injective.
    pub fn from_images(pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        let mut seen_images = HashSet::new();
        for (v, w) in pairs {
            if map.insert(v, w).is_some() {
                return Err(Error::InvalidPermutation(format!("point {v} mapped twice")));
            }
            if !seen_images.insert(w) {
                return Err(Error::InvalidPermutation(format!("image {w} hit twice")));
            }
        }
        // A finite-support injection is a permutation iff support = image set.
        let support: HashSet<Vertex> = map.keys().copied().collect();
        let images: HashSet<Vertex> = map.values().copied().collect();
        if support != images {
            return Err(Error::InvalidPermutation(
                "support and image set differ (not a permutation of a finite set)".into(),
            ));
        }
        map.retain(|v, w| v != w);
        Ok(Self { map })
    }

    /// Builds from disjoint cycles, e.g. `[[1,3,5],[2,4]]`.
    pub fn from_cycles(cycles: &[Vec<Vertex>]) -> Result<Self> {
        let mut pairs = Vec::new();
        for cyc in cycles {
            if cyc.is_empty() {
                continue;
            }
            for i in 0..cyc.len() {
                pairs.push((cyc[i], cyc[(i + 1) % cyc.len()]));
            }
        }
        Self::from_images(pairs)
    }

    /// The cyclic shift `x ↦ x+1 (mod n)` on labels `0..n`.
    pub fn cyclic_shift(n: u32) -> Self {
        Self::from_images((0..n).map(|x| (x, (x + 1) % n))).expect("shift is a permutation")
    }

    /// Image of a point.
    pub fn apply(&self, v: Vertex) -> Vertex {
        *self.map.get(&v).unwrap_or(&v)
    }

    /// Image of a simplex (re-sorted).
    pub fn apply_simplex(&self, s: &Simplex) -> Simplex {
        s.relabel(|v| self.apply(v))
            .expect("permutations cannot merge vertices")
    }

    /// Image of a complex.
    pub fn apply_complex(&self, c: &SimplicialComplex) -> SimplicialComplex {
        c.relabel(|v| self.apply(v))
            .expect("permutations cannot merge vertices")
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let mut support: HashSet<Vertex> = self.map.keys().copied().collect();
        support.extend(other.map.keys().copied());
        let mut map = BTreeMap::new();
        for v in support {
            let w = self.apply(other.apply(v));
            if w != v {
                map.insert(v, w);
            }
        }
        Permutation { map }
    }

    pub fn inverse(&self) -> Permutation {
        Permutation {
            map: self.map.iter().map(|(&v, &w)| (w, v)).collect(),
        }
    }

    /// `self` raised to the `k`-th power (k ≥ 0).
    pub fn pow(&self, k: u64) -> Permutation {
        let mut acc = Permutation::identity();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_empty()
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        let mut ord = 1u64;
        for cyc in self.cycles() {
            ord = num_integer::lcm(ord, cyc.len() as u64);
        }
        ord
    }

    /// Disjoint cycle decomposition (nontrivial cycles only), each cycle
    /// rotated to start at its smallest point, cycles sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<Vertex>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for &start in self.map.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut cyc = vec![start];
            seen.insert(start);
            let mut cur = self.apply(start);
            while cur != start {
                cyc.push(cur);
                seen.insert(cur);
                cur = self.apply(cur);
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.map.iter().all(|(&v, &w)| self.apply(w) == v)
    }

    /// Support of the permutation (moved points, sorted).
    pub fn moved_points(&self) -> Vec<Vertex> {
        self.map.keys().copied().collect()
    }

    /// The 2-cycles of an involution, each as (smaller, larger).
    pub fn two_cycles(&self) -> Vec<(Vertex, Vertex)> {
        self.cycles()
            .into_iter()
            .filter(|c| c.len() == 2)
            .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
            .collect()
    }
}

// ----------------------------------------------------------------------
// Groups and orbits
// ----------------------------------------------------------------------

/// How a symmetry group is presented.
#[derive(Clone, Debug)]
pub enum GroupSpec {
    /// ℤ_n acting by `x ↦ x+1 (mod n)` on labels `0..n`.
    Cyclic { modulus: u32 },
    /// The group generated by explicit permutations.
    Generated { gens: Vec<Permutation> },
}

impl GroupSpec {
    pub fn generators(&self) -> Vec<Permutation> {
        match self {
            GroupSpec::Cyclic { modulus } => vec![Permutation::cyclic_shift(*modulus)],
            GroupSpec::Generated { gens } => gens.clone(),
        }
    }
}

/// Enumerates all elements of ⟨gens⟩ by breadth-first closure.
/// Fails once more than `cap` elements are found.
pub fn group_elements(gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let mut seen: HashSet<Vec<(Vertex, Vertex)>> = HashSet::new();
    let key = |p: &Permutation| -> Vec<(Vertex, Vertex)> {
        p.map.iter().map(|(&v, &w)| (v, w)).collect()
    };
    let mut elements = vec![Permutation::identity()];
    seen.insert(key(&elements[0]));
    let mut queue: VecDeque<Permutation> = elements.iter().cloned().collect();
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = g.compose(&p);
            if seen.insert(key(&q)) {
                if elements.len() >= cap {
                    return Err(Error::GroupTooLarge { cap });
                }
                elements.push(q.clone());
                queue.push_back(q);
            }
        }
    }
    Ok(elements)
}

/// Orbit of one simplex under ⟨gens⟩, sorted. BFS on images, so large
/// groups are fine as long as the orbit itself is small.
pub fn simplex_orbit(seed: &Simplex, gens: &[Permutation], cap: usize) -> Result<Vec<Simplex>> {
    let mut seen: HashSet<Simplex> = HashSet::new();
    seen.insert(seed.clone());
    let mut queue: VecDeque<Simplex> = VecDeque::new();
    queue.push_back(seed.clone());
    while let Some(s) = queue.pop_front() {
        for g in gens {
            let t = g.apply_simplex(&s);
            if !seen.contains(&t) {
                if seen.len() >= cap {
                    return Err(Error::BudgetExhausted(format!(
                        "orbit of {seed} exceeded {cap} simplices"
                    )));
                }
                seen.insert(t.clone());
                queue.push_back(t);
            }
        }
    }
    let mut out: Vec<Simplex> = seen.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// Expands seed simplices to the complex generated by their group orbits.
pub fn expand_orbits(
    seeds: &[Simplex],
    group: &GroupSpec,
    cap: usize,
) -> Result<SimplicialComplex> {
    let gens = group.generators();
    let mut facets: Vec<Simplex> = Vec::new();
    for seed in seeds {
        facets.extend(simplex_orbit(seed, &gens, cap)?);
    }
    Ok(SimplicialComplex::from_facets(facets))
}

/// Partitions the given simplices into group orbits. Orbits are sorted by
/// their lexicographically smallest member; simplices outside the closure
/// of the input set still land in their full orbit (images not present in
/// `items` are ignored — the partition covers `items` only).
pub fn orbit_partition(items: &[Simplex], gens: &[Permutation]) -> Vec<Vec<Simplex>> {
    let item_set: HashSet<&Simplex> = items.iter().collect();
    let mut assigned: HashSet<Simplex> = HashSet::new();
    let mut orbits: Vec<Vec<Simplex>> = Vec::new();
    let mut sorted_items: Vec<&Simplex> = items.iter().collect();
    sorted_items.sort_unstable();
    for &root in &sorted_items {
        if assigned.contains(root) {
            continue;
        }
        // BFS over images, recording those that belong to `items`.
        let mut seen: HashSet<Simplex> = HashSet::new();
        seen.insert(root.clone());
        let mut queue = VecDeque::new();
        queue.push_back(root.clone());
        let mut orbit = Vec::new();
        while let Some(s) = queue.pop_front() {
            if item_set.contains(&s) {
                orbit.push(s.clone());
                assigned.insert(s.clone());
            }
            for g in gens {
                let t = g.apply_simplex(&s);
                if seen.insert(t.clone()) {
                    queue.push_back(t);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

/// Checks that every generator maps the complex onto itself.
pub fn is_invariant(c: &SimplicialComplex, gens: &[Permutation]) -> bool {
    gens.iter().all(|g| &g.apply_complex(c) == c)
}

// ----------------------------------------------------------------------
// Quotients by free involutions
// ----------------------------------------------------------------------

/// Result of a free-involution quotient: the quotient complex plus the
/// vertex projection used (each vertex to the smaller member of its pair).
pub struct Quotient {
    pub complex: SimplicialComplex,
    pub projection: HashMap<Vertex, Vertex>,
}

/// Quotients a complex by a fixed-point-free simplicial involution.
///
/// Preconditions checked (each necessary for the projection to be a
/// simplicial double covering):
/// 1. `invol` is an involution moving every vertex of `c`, and maps `c`
///    onto itself;
/// 2. no edge joins a vertex to its partner;
/// 3. no vertex is adjacent to both members of a pair.
///
/// Conditions 2–3 make the projection exactly 2-to-1 on faces of every
/// dimension: a face and its partner are the only preimages of their image.
pub fn quotient_by_free_involution(
    c: &SimplicialComplex,
    invol: &Permutation,
) -> Result<Quotient> {
    if !invol.is_involution() {
        return Err(Error::Precondition("map is not an involution".into()));
    }
    let verts = c.vertices();
    for &v in &verts {
        if invol.apply(v) == v {
            return Err(Error::Precondition(format!(
                "involution fixes vertex {v}; quotient requires a free action"
            )));
        }
    }
    if &invol.apply_complex(c) != c {
        return Err(Error::Precondition(
            "involution does not preserve the complex".into(),
        ));
    }
    // Adjacency as label sets.
    let mut nbrs: HashMap<Vertex, HashSet<Vertex>> = HashMap::new();
    for e in c.faces_of_dim(1) {
        let vs = e.vertices();
        nbrs.entry(vs[0]).or_default().insert(vs[1]);
        nbrs.entry(vs[1]).or_default().insert(vs[0]);
    }
    for &v in &verts {
        let w = invol.apply(v);
        if v > w {
            continue;
        }
        if nbrs.get(&v).is_some_and(|n| n.contains(&w)) {
            return Err(Error::Precondition(format!(
                "edge ({v} {w}) joins an involution pair"
            )));
        }
        if let (Some(nv), Some(nw)) = (nbrs.get(&v), nbrs.get(&w)) {
            if let Some(u) = nv.intersection(nw).min() {
                return Err(Error::Precondition(format!(
                    "vertex {u} is adjacent to both {v} and {w}; quotient would not be simplicial"
                )));
            }
        }
    }
    let projection: HashMap<Vertex, Vertex> = verts
        .iter()
        .map(|&v| (v, v.min(invol.apply(v))))
        .collect();
    let complex = c.relabel(|v| projection[&v])?;
    Ok(Quotient {
        complex,
        projection,
    })
}

// ----------------------------------------------------------------------
// Double covers from mod-2 one-cocycles
// ----------------------------------------------------------------------

/// A double cover together with its deck transform and sheet labeling:
/// vertex `v` lifts to `v` (sheet 0) and `v + offset` (sheet 1).
pub struct DoubleCover {
    pub complex: SimplicialComplex,
    pub deck: Permutation,
    pub offset: u32,
}

/// Builds the double cover classified by a mod-2 one-cocycle.
///
/// `flip_edges` is the support of the cocycle: crossing one of these edges
/// switches sheets. The cocycle condition — every triangle of `c` carries
/// an even number of flip edges — is verified; it is exactly what makes the
/// sheet assignment consistent across each facet. A facet then has two
/// lifts, fixed by the sign of its smallest vertex.
pub fn double_cover(
    c: &SimplicialComplex,
    flip_edges: &HashSet<Simplex>,
    offset: u32,
) -> Result<DoubleCover> {
    for e in flip_edges {
        if e.len() != 2 {
            return Err(Error::Precondition(format!("{e} is not an edge")));
        }
        if !c.contains_face(e) {
            return Err(Error::Precondition(format!(
                "flip edge {e} is not an edge of the complex"
            )));
        }
    }
    let verts = c.vertices();
    if let Some(&max) = verts.iter().max() {
        if max >= offset {
            return Err(Error::Precondition(format!(
                "offset {offset} collides with vertex label {max}"
            )));
        }
    }
    let flips = |a: Vertex, b: Vertex| -> bool {
        flip_edges.contains(&Simplex::from_sorted(
            smallvec::SmallVec::<[Vertex; 8]>::from_slice(&[a.min(b), a.max(b)]),
        ))
    };
    for t in c.faces_of_dim(2) {
        let vs = t.vertices();
        let parity =
            flips(vs[0], vs[1]) as u32 + flips(vs[1], vs[2]) as u32 + flips(vs[0], vs[2]) as u32;
        if parity % 2 != 0 {
            return Err(Error::Precondition(format!(
                "triangle {t} carries an odd number of flip edges; not a cocycle"
            )));
        }
    }
    let mut cover_facets = Vec::with_capacity(2 * c.facet_count());
    for f in c.facets() {
        let vs = f.vertices();
        // Sheet of each vertex relative to the smallest one; consistency
        // over all pairs is guaranteed by the triangle condition.
        let mut sheets = vec![0u32; vs.len()];
        for i in 1..vs.len() {
            sheets[i] = flips(vs[0], vs[i]) as u32;
        }
        for base in 0..2u32 {
            let lifted: Vec<Vertex> = vs
                .iter()
                .zip(&sheets)
                .map(|(&v, &s)| v + ((s + base) % 2) * offset)
                .collect();
            cover_facets.push(Simplex::new(lifted)?);
        }
    }
    let deck = Permutation::from_images(
        verts
            .iter()
            .flat_map(|&v| [(v, v + offset), (v + offset, v)]),
    )?;
    Ok(DoubleCover {
        complex: SimplicialComplex::from_facets(cover_facets),
        deck,
        offset,
    })
}

// ----------------------------------------------------------------------
// Fixed-point complexes of involutions
// ----------------------------------------------------------------------

/// Computes the fixed-point set of a simplicial involution as a complex.
///
/// For every face σ with σ = invol(σ) setwise, the restriction must split
/// into fixed vertices and 2-cycles (a longer cycle inside one face is
/// rejected — the fixed set would then not be spanned by vertices and edge
/// midpoints; for a genuine involution this cannot occur). The fixed set
/// inside σ is the simplex on the fixed vertices together with one midpoint
/// vertex per 2-cycle. `midpoint` supplies the midpoint labels keyed by the
/// *sorted* pair; it is called repeatedly and must be a deterministic,
/// injective function of the pair, with values fresh w.r.t. the complex.
pub fn fixed_point_complex(
    c: &SimplicialComplex,
    invol: &Permutation,
    mut midpoint: impl FnMut(Vertex, Vertex) -> Vertex,
) -> Result<SimplicialComplex> {
    if !invol.is_involution() {
        return Err(Error::Precondition("map is not an involution".into()));
    }
    if &invol.apply_complex(c) != c {
        return Err(Error::Precondition(
            "involution does not preserve the complex".into(),
        ));
    }
    let mut pieces: Vec<Simplex> = Vec::new();
    for sigma in c.all_faces() {
        if invol.apply_simplex(&sigma) != sigma {
            continue;
        }
        let mut verts: Vec<Vertex> = Vec::new();
        let mut ok = true;
        for &v in sigma.vertices() {
            let w = invol.apply(v);
            if w == v {
                verts.push(v);
            } else if sigma.contains(w) {
                if v < w {
                    verts.push(midpoint(v, w));
                }
            } else {
                // σ invariant but v's partner outside σ is impossible.
                ok = false;
                break;
            }
        }
        if !ok {
            return Err(Error::Precondition(format!(
                "invariant face {sigma} is not a union of fixed vertices and 2-cycles"
            )));
        }
        if !verts.is_empty() {
            pieces.push(Simplex::new(verts)?);
        }
    }
    Ok(SimplicialComplex::from_facets(pieces))
}

// ----------------------------------------------------------------------
// Isomorphism search
// ----------------------------------------------------------------------

/// Finds one isomorphism `a → b` (a vertex bijection carrying facets onto
/// facets), or `None`. Uses iterated degree refinement for pruning and a
/// most-constrained-first backtracking search.
pub fn find_isomorphism(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
) -> Option<HashMap<Vertex, Vertex>> {
    let mut found = None;
    search_isomorphisms(a, b, usize::MAX, &mut |m| {
        found = Some(m.clone());
        true // stop at the first
    });
    found
}

/// Counts automorphisms of `a` (cap guards runaway symmetric inputs).
pub fn automorphism_count(a: &SimplicialComplex, cap: usize) -> usize {
    let mut n = 0usize;
    search_isomorphisms(a, a, cap, &mut |_| {
        n += 1;
        false
    });
    n
}

/// Enumerates isomorphisms a→b, invoking `on_found` per hit; stops when it
/// returns `true` or after `cap` hits. Backtracking over refined classes.
fn search_isomorphisms(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    cap: usize,
    on_found: &mut impl FnMut(&HashMap<Vertex, Vertex>) -> bool,
) {
    if a.f_vector() != b.f_vector() {
        return;
    }
    let va = a.vertices();
    let vb = b.vertices();
    if va.len() != vb.len() {
        return;
    }
    let colors_a = refine_colors(a);
    let colors_b = refine_colors(b);
    // Compare color histograms.
    let hist = |cols: &HashMap<Vertex, u64>| {
        let mut h: BTreeMap<u64, usize> = BTreeMap::new();
        for &c in cols.values() {
            *h.entry(c).or_insert(0) += 1;
        }
        h
    };
    if hist(&colors_a) != hist(&colors_b) {
        return;
    }
    // Facet sets for O(1) membership.
    let facet_set_b: HashSet<&Simplex> = b.facets().iter().collect();
    // Vertex → incident facets (indices) in a.
    let mut incident_a: HashMap<Vertex, Vec<usize>> = HashMap::new();
    for (i, f) in a.facets().iter().enumerate() {
        for &v in f.vertices() {
            incident_a.entry(v).or_default().push(i);
        }
    }
    // Order a's vertices: rarest color first, then label.
    let mut order: Vec<Vertex> = va.clone();
    let class_size: HashMap<u64, usize> = {
        let mut m = HashMap::new();
        for &c in colors_a.values() {
            *m.entry(c).or_insert(0usize) += 1;
        }
        m
    };
    order.sort_unstable_by_key(|v| (class_size[&colors_a[v]], colors_a[v], *v));

    struct Ctx<'a> {
        order: &'a [Vertex],
        colors_a: &'a HashMap<Vertex, u64>,
        colors_b: &'a HashMap<Vertex, u64>,
        vb: &'a [Vertex],
        a_facets: &'a [Simplex],
        incident_a: &'a HashMap<Vertex, Vec<usize>>,
        facet_set_b: &'a HashSet<&'a Simplex>,
        hits: usize,
        cap: usize,
        stop: bool,
    }

    fn recurse(
        ctx: &mut Ctx,
        depth: usize,
        map: &mut HashMap<Vertex, Vertex>,
        used: &mut HashSet<Vertex>,
        on_found: &mut impl FnMut(&HashMap<Vertex, Vertex>) -> bool,
    ) {
        if ctx.stop {
            return;
        }
        if depth == ctx.order.len() {
            ctx.hits += 1;
            if on_found(map) || ctx.hits >= ctx.cap {
                ctx.stop = true;
            }
            return;
        }
        let v = ctx.order[depth];
        let cv = ctx.colors_a[&v];
        for &w in ctx.vb {
            if used.contains(&w) || ctx.colors_b[&w] != cv {
                continue;
            }
            map.insert(v, w);
            used.insert(w);
            // Check every a-facet that became fully mapped by this choice.
            let ok = ctx.incident_a[&v].iter().all(|&fi| {
                let f = &ctx.a_facets[fi];
                if !f.vertices().iter().all(|u| map.contains_key(u)) {
                    return true; // incomplete: defer until fully mapped
                }
                let img = f.relabel(|u| map[&u]).expect("injective partial map");
                ctx.facet_set_b.contains(&img)
            });
            if ok {
                recurse(ctx, depth + 1, map, used, on_found);
                if ctx.stop {
                    return;
                }
            }
            map.remove(&v);
            used.remove(&w);
        }
    }

    let mut ctx = Ctx {
        order: &order,
        colors_a: &colors_a,
        colors_b: &colors_b,
        vb: &vb,
        a_facets: a.facets(),
        incident_a: &incident_a,
        facet_set_b: &facet_set_b,
        hits: 0,
        cap,
        stop: false,
    };
    let mut map = HashMap::new();
    let mut used = HashSet::new();
    recurse(&mut ctx, 0, &mut map, &mut used, on_found);
}

/// Iterated refinement of vertex colors by neighborhood structure: the
/// initial color is the multiset of incident-facet sizes; each round mixes
/// in the sorted colors of the link vertices, until stable. Color values
/// are 64-bit hashes — equal colors are necessary for symmetry, collisions
/// merely weaken pruning.
fn refine_colors(c: &SimplicialComplex) -> HashMap<Vertex, u64> {
    use std::hash::{Hash, Hasher};
    let verts = c.vertices();
    let mut nbrs: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
    for e in c.faces_of_dim(1) {
        let vs = e.vertices();
        nbrs.entry(vs[0]).or_default().push(vs[1]);
        nbrs.entry(vs[1]).or_default().push(vs[0]);
    }
    let mut colors: HashMap<Vertex, u64> = HashMap::new();
    for &v in &verts {
        let mut sizes: Vec<usize> = c
            .facets()
            .iter()
            .filter(|f| f.contains(v))
            .map(Simplex::len)
            .collect();
        sizes.sort_unstable();
        let mut h = std::collections::hash_map::DefaultHasher::new();
        sizes.hash(&mut h);
        colors.insert(v, h.finish());
    }
    for _round in 0..verts.len() {
        let mut next: HashMap<Vertex, u64> = HashMap::new();
        for &v in &verts {
            let mut neigh: Vec<u64> = nbrs
                .get(&v)
                .map(|ns| ns.iter().map(|u| colors[u]).collect())
                .unwrap_or_default();
            neigh.sort_unstable();
            let mut h = std::collections::hash_map::DefaultHasher::new();
            colors[&v].hash(&mut h);
            neigh.hash(&mut h);
            next.insert(v, h.finish());
        }
        let classes_before: HashSet<u64> = colors.values().copied().collect();
        let classes_after: HashSet<u64> = next.values().copied().collect();
        let stable = classes_after.len() == classes_before.len();
        colors = next;
        if stable {
            break;
        }
    }
    colors
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex;

    #[test]
    fn permutation_algebra() {
        let p = Permutation::from_cycles(&[vec![1, 2, 3]]).unwrap();
        assert_eq!(p.apply(1), 2);
        assert_eq!(p.apply(7), 7);
        assert_eq!(p.order(), 3);
        assert!(p.pow(3).is_identity());
        assert_eq!(p.inverse().apply(2), 1);
        let q = Permutation::from_cycles(&[vec![3, 4]]).unwrap();
        // (p ∘ q)(3) = p(4) = 4; (q ∘ p)(3) = q(1) = 1
        assert_eq!(p.compose(&q).apply(3), 4);
        assert_eq!(q.compose(&p).apply(3), 1);
        assert!(q.is_involution());
        assert!(!p.is_involution());
        assert_eq!(q.two_cycles(), vec![(3, 4)]);
        assert!(Permutation::from_images([(1, 2)]).is_err()); // not closed
        assert_eq!(p.cycles(), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn cyclic_orbit_expansion() {
        // (0 1 3) under ℤ₇ is the full 7-orbit.
        let c = expand_orbits(
            &[simplex![0, 1, 3]],
            &GroupSpec::Cyclic { modulus: 7 },
            10_000,
        )
        .unwrap();
        assert_eq!(c.facet_count(), 7);
        assert!(c.contains_face(&simplex![0, 2, 6])); // shift by 6
                                                      // A seed invariant under a subgroup gives a short orbit:
                                                      // (0 2 4) under ℤ₆ has length 2.
        let short = expand_orbits(
            &[simplex![0, 2, 4]],
            &GroupSpec::Cyclic { modulus: 6 },
            10_000,
        )
        .unwrap();
        assert_eq!(short.facet_count(), 2);
    }

    #[test]
    fn group_closure() {
        let gens = vec![
            Permutation::from_cycles(&[vec![0, 1]]).unwrap(),
            Permutation::from_cycles(&[vec![0, 1, 2]]).unwrap(),
        ];
        let g = group_elements(&gens, 100).unwrap();
        assert_eq!(g.len(), 6); // S₃
        assert!(matches!(
            group_elements(&gens, 4),
            Err(Error::GroupTooLarge { cap: 4 })
        ));
    }

    #[test]
    fn orbit_partition_splits_classes() {
        let gens = vec![Permutation::cyclic_shift(4)];
        let items = vec![
            simplex![0, 1],
            simplex![1, 2],
            simplex![2, 3],
            simplex![0, 3],
            simplex![0, 2],
            simplex![1, 3],
        ];
        let orbits = orbit_partition(&items, &gens);
        assert_eq!(orbits.len(), 2);
        assert_eq!(orbits[0].len(), 4); // consecutive edges
        assert_eq!(orbits[1].len(), 2); // diagonals
    }

    #[test]
    fn quotient_hexagon_to_triangle() {
        let hexagon = expand_orbits(
            &[simplex![0, 1]],
            &GroupSpec::Cyclic { modulus: 6 },
            100,
        )
        .unwrap();
        let antipode =
            Permutation::from_cycles(&[vec![0, 3], vec![1, 4], vec![2, 5]]).unwrap();
        let q = quotient_by_free_involution(&hexagon, &antipode).unwrap();
        assert_eq!(q.complex.f_vector(), vec![3, 3]);
        assert_eq!(q.projection[&4], 1);
        // The octahedron quotient is *not* simplicial (3 vertices would
        // have to span a projective plane): rejected by the common-neighbor
        // check.
        let oct = SimplicialComplex::from_facet_lists(&[
            vec![0, 2, 4],
            vec![0, 2, 5],
            vec![0, 3, 4],
            vec![0, 3, 5],
            vec![1, 2, 4],
            vec![1, 2, 5],
            vec![1, 3, 4],
            vec![1, 3, 5],
        ])
        .unwrap();
        let anti = Permutation::from_cycles(&[vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        assert!(quotient_by_free_involution(&oct, &anti).is_err());
    }

    #[test]
    fn double_cover_of_triangle_is_hexagon() {
        let triangle = SimplicialComplex::from_facet_lists(&[vec![0, 1], vec![1, 2], vec![0, 2]])
            .unwrap();
        let flips: HashSet<Simplex> = triangle.facets().iter().cloned().collect();
        let cover = double_cover(&triangle, &flips, 10).unwrap();
        assert_eq!(cover.complex.f_vector(), vec![6, 6]);
        assert!(cover.complex.is_connected());
        assert!(cover.deck.is_involution());
        // Quotient back down recovers the triangle.
        let q = quotient_by_free_involution(&cover.complex, &cover.deck).unwrap();
        assert_eq!(q.complex, triangle);
        // Trivial cocycle (no flip edges) gives a disconnected cover, but
        // on a triangle every single edge is *not* a cocycle (odd count on
        // the triangle face only when a 2-face exists — here there is none,
        // so any edge set is a cocycle).
        let none = double_cover(&triangle, &HashSet::new(), 10).unwrap();
        assert!(!none.complex.is_connected());
        // On a filled triangle an odd edge set is rejected.
        let filled = SimplicialComplex::from_facet_lists(&[vec![0, 1, 2]]).unwrap();
        let mut one = HashSet::new();
        one.insert(simplex![0, 1]);
        assert!(double_cover(&filled, &one, 10).is_err());
    }

    #[test]
    fn fixed_points_of_sphere_reflection() {
        // Reflect ∂Δ³ by swapping vertices 0 and 1: the fixed set is the
        // circle through vertex 2, vertex 3 and the midpoint of (0 1).
        let sphere = SimplicialComplex::simplex_boundary(&simplex![0, 1, 2, 3]);
        let refl = Permutation::from_cycles(&[vec![0, 1]]).unwrap();
        let fixed = fixed_point_complex(&sphere, &refl, |a, b| {
            assert_eq!((a, b), (0, 1));
            100
        })
        .unwrap();
        assert_eq!(fixed.f_vector(), vec![3, 3]);
        assert_eq!(fixed.euler_characteristic(), 0);
        assert!(fixed.contains_face(&simplex![2, 100]));
    }

    #[test]
    fn isomorphism_and_automorphisms() {
        let a = SimplicialComplex::simplex_boundary(&simplex![0, 1, 2, 3]);
        let b = a.relabel(|v| v * 10 + 3).unwrap();
        let iso = find_isomorphism(&a, &b).unwrap();
        let mapped = a.relabel(|v| iso[&v]).unwrap();
        assert_eq!(mapped, b);
        // Aut(∂Δ³) = S₄.
        assert_eq!(automorphism_count(&a, 1000), 24);
        // A path of two edges is not isomorphic to a triangle.
        let path = SimplicialComplex::from_facet_lists(&[vec![0, 1], vec![1, 2]]).unwrap();
        let tri = SimplicialComplex::from_facet_lists(&[vec![0, 1], vec![1, 2], vec![0, 2]])
            .unwrap();
        assert!(find_isomorphism(&path, &tri).is_none());
    }
}
