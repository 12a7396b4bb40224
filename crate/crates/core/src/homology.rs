//! Simplicial homology: chain complexes, GF(2) Betti numbers, integral
//! homology via Smith normal form, null-homology tests, and
//! inclusion-induced maps on homology.
//!
//! Large complexes are first shrunk by an algebraic reduction engine
//! (iterated cancellation of unit-coefficient face pairs, preferring the
//! zero-fill cases: cells with a unique face or a unique coface). The
//! engine is a chain homotopy equivalence, so the small surviving core has
//! the same homology; exact linear algebra then runs on the core only.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::exact::{gf2_rank, GF2Matrix};
use crate::simplex::Simplex;

// ----------------------------------------------------------------------
// Chain complexes
// ----------------------------------------------------------------------

/// A based chain complex extracted from a simplicial complex: one ordered
/// basis of faces per dimension and the signed boundary maps between them.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    /// `bases[k]` lists the k-faces in canonical (lex) order.
    pub bases: Vec<Vec<Simplex>>,
    /// `boundaries[k]` is ∂ₖ for k ≥ 1: for each k-face, its (k−1)-faces
    /// as (index in `bases[k-1]`, sign) pairs; `boundaries[0]` is empty.
    pub boundaries: Vec<Vec<Vec<(usize, i8)>>>,
}

impl ChainComplex {
    /// Builds the chain complex of all faces, verifying ∂∘∂ = 0.
    pub fn new(c: &SimplicialComplex) -> Result<ChainComplex> {
        let dim = c.dim();
        if dim < 0 {
            return Ok(ChainComplex { bases: Vec::new(), boundaries: Vec::new() });
        }
        let mut bases: Vec<Vec<Simplex>> = Vec::with_capacity(dim as usize + 1);
        let mut index: Vec<HashMap<Simplex, usize>> = Vec::with_capacity(dim as usize + 1);
        for k in 0..=dim {
            let faces = c.faces_of_dim(k);
            let map = faces.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
            bases.push(faces);
            index.push(map);
        }
        let mut boundaries: Vec<Vec<Vec<(usize, i8)>>> = vec![Vec::new()];
        for k in 1..=dim as usize {
            let mut rows = Vec::with_capacity(bases[k].len());
            for s in &bases[k] {
                let mut row = Vec::with_capacity(k + 1);
                for (drop, face) in s.boundary_facets().enumerate() {
                    let sign = if drop % 2 == 0 { 1i8 } else { -1i8 };
                    let j = *index[k - 1].get(&face).ok_or_else(|| {
                        Error::InvalidComplex("face closure is incomplete".into())
                    })?;
                    row.push((j, sign));
                }
                rows.push(row);
            }
            boundaries.push(rows);
        }
        let cc = ChainComplex { bases, boundaries };
        cc.verify_square_zero()?;
        Ok(cc)
    }

    /// Number of dimensions present (top dimension + 1); 0 for empty.
    pub fn depth(&self) -> usize {
        self.bases.len()
    }

    fn verify_square_zero(&self) -> Result<()> {
        for k in 2..self.depth() {
            for row in &self.boundaries[k] {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for &(j, s) in row {
                    for &(i, t) in &self.boundaries[k - 1][j] {
                        *acc.entry(i).or_insert(0) += s as i64 * t as i64;
                    }
                }
                if acc.values().any(|&v| v != 0) {
                    return Err(Error::InvalidComplex(
                        "boundary composed with boundary is nonzero".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Index of a k-simplex in `bases[k]`, if present.
    pub fn position(&self, s: &Simplex) -> Option<(usize, usize)> {
        let k = s.dim();
        if k < 0 || k as usize >= self.depth() {
            return None;
        }
        let k = k as usize;
        self.bases[k].binary_search(s).ok().map(|i| (k, i))
    }
}

// ----------------------------------------------------------------------
// Homology profiles
// ----------------------------------------------------------------------

/// Coefficient ring tag for a homology computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ring {
    GF2,
    Integer,
}

/// One homology group: free rank plus torsion invariant factors (> 1,
/// in a divisibility chain; always empty over GF(2)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn free(rank: usize) -> Self {
        HomologyGroup { rank, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Homology groups per dimension 0..=dim, tagged with the ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyProfile {
    pub ring: Ring,
    pub groups: Vec<HomologyGroup>,
}

impl HomologyProfile {
    /// Betti numbers (free ranks) per dimension.
    pub fn betti(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.rank).collect()
    }

    /// Alternating sum of Betti numbers. Over a field this equals the
    /// Euler characteristic.
    pub fn euler(&self) -> i64 {
        self.groups
            .iter()
            .enumerate()
            .map(|(k, g)| if k % 2 == 0 { g.rank as i64 } else { -(g.rank as i64) })
            .sum()
    }

    /// GF(2) Betti numbers implied by an integral profile (universal
    /// coefficients: free rank plus 2-torsion from this and the previous
    /// dimension).
    pub fn gf2_from_integral(&self) -> Result<Vec<usize>> {
        if self.ring != Ring::Integer {
            return Err(Error::Precondition("expected an integral profile".into()));
        }
        let two_torsion = |g: &HomologyGroup| {
            g.torsion.iter().filter(|t| (*t % BigInt::from(2)).is_zero()).count()
        };
        Ok((0..self.groups.len())
            .map(|k| {
                self.groups[k].rank
                    + two_torsion(&self.groups[k])
                    + if k > 0 { two_torsion(&self.groups[k - 1]) } else { 0 }
            })
            .collect())
    }
}

impl std::fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names: Vec<String> = self.groups.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", names.join(", "))
    }
}

// ----------------------------------------------------------------------
// Algebraic reduction engine
// ----------------------------------------------------------------------

/// Internal cell store for the reduction engine. Cell 0 is the empty face
/// (degree 0 internally = simplex dimension −1), so the engine computes
/// reduced homology; the caller adds the augmentation Z back to H₀.
struct Reducer {
    /// Internal degree per cell (simplex dim + 1).
    degree: Vec<u32>,
    /// Sparse boundary rows: cell -> {face cell -> coefficient}.
    faces: Vec<BTreeMap<u32, i64>>,
    /// Reverse adjacency: cell -> set of cells having it in their boundary.
    cofaces: Vec<BTreeSet<u32>>,
    alive: Vec<bool>,
    /// Reduce coefficients mod 2 (all nonzero become 1).
    mod2: bool,
    alive_count: usize,
}

impl Reducer {
    fn from_chain(cc: &ChainComplex, mod2: bool) -> Reducer {
        let mut offsets = vec![0usize; cc.depth() + 1];
        // Cell ids: 0 = empty face; then faces by dimension.
        let mut total = 1usize;
        for k in 0..cc.depth() {
            offsets[k] = total;
            total += cc.bases[k].len();
        }
        let mut degree = vec![0u32; total];
        let mut faces: Vec<BTreeMap<u32, i64>> = vec![BTreeMap::new(); total];
        let mut cofaces: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); total];
        for k in 0..cc.depth() {
            for i in 0..cc.bases[k].len() {
                let id = offsets[k] + i;
                degree[id] = (k + 1) as u32;
                if k == 0 {
                    // Augmentation: every vertex has the empty face once.
                    faces[id].insert(0, 1);
                    cofaces[0].insert(id as u32);
                } else {
                    for &(j, s) in &cc.boundaries[k][i] {
                        let fid = (offsets[k - 1] + j) as u32;
                        let coeff = if mod2 { 1 } else { s as i64 };
                        faces[id].insert(fid, coeff);
                        cofaces[fid as usize].insert(id as u32);
                    }
                }
            }
        }
        Reducer {
            degree,
            faces,
            cofaces,
            alive: vec![true; total],
            mod2,
            alive_count: total,
        }
    }

    fn coeff_normalize(&self, v: i64) -> i64 {
        if self.mod2 {
            v.rem_euclid(2)
        } else {
            v
        }
    }

    /// Cancels the pair (a, b) where a ∈ ∂b with unit coefficient λ.
    /// Gaussian cancellation: every other cell c with a ∈ ∂c gets
    /// ∂c ← ∂c − ⟨∂c,a⟩·λ⁻¹·∂b, and cells with b in their boundary just
    /// drop the b term. Fill can only appear in the first family.
    fn cancel(&mut self, a: u32, b: u32, queue: &mut VecDeque<u32>) -> Result<()> {
        debug_assert!(self.alive[a as usize] && self.alive[b as usize]);
        let lambda = self.faces[b as usize][&a];
        debug_assert!(lambda == 1 || lambda == -1);
        self.alive[a as usize] = false;
        self.alive[b as usize] = false;
        self.alive_count -= 2;

        let db: Vec<(u32, i64)> = self.faces[b as usize]
            .iter()
            .filter(|(x, _)| **x != a)
            .map(|(x, w)| (*x, *w))
            .collect();

        // Cells with a in their boundary (other than b).
        let holders: Vec<u32> = self.cofaces[a as usize]
            .iter()
            .copied()
            .filter(|&c| c != b && self.alive[c as usize])
            .collect();
        for c in holders {
            let mu = self.faces[c as usize].remove(&a).expect("coface bookkeeping");
            // −μ·λ⁻¹ with λ = ±1 ⇒ λ⁻¹ = λ.
            let factor = -mu
                .checked_mul(lambda)
                .ok_or_else(|| Error::Arithmetic("coefficient overflow in reduction".into()))?;
            for &(x, w) in &db {
                if !self.alive[x as usize] {
                    continue;
                }
                let add = factor
                    .checked_mul(w)
                    .ok_or_else(|| Error::Arithmetic("coefficient overflow in reduction".into()))?;
                let cur = self.faces[c as usize].get(&x).copied().unwrap_or(0);
                let new = self.coeff_normalize(cur.checked_add(add).ok_or_else(|| {
                    Error::Arithmetic("coefficient overflow in reduction".into())
                })?);
                if new == 0 {
                    self.faces[c as usize].remove(&x);
                    self.cofaces[x as usize].remove(&c);
                    if self.alive[x as usize] && self.cofaces_alive(x) == 1 {
                        queue.push_back(x);
                    }
                } else {
                    self.faces[c as usize].insert(x, new);
                    self.cofaces[x as usize].insert(c);
                }
            }
            if self.faces[c as usize].len() == 1 {
                queue.push_back(c);
            }
        }

        // Cells with b in their boundary: drop the term.
        let uppers: Vec<u32> = self.cofaces[b as usize].iter().copied().collect();
        for d in uppers {
            if self.alive[d as usize] {
                self.faces[d as usize].remove(&b);
                if self.faces[d as usize].len() == 1 {
                    queue.push_back(d);
                }
            }
        }

        // Detach a and b from the adjacency of their own faces.
        for cell in [a, b] {
            let fs: Vec<u32> = self.faces[cell as usize].keys().copied().collect();
            for x in fs {
                self.cofaces[x as usize].remove(&cell);
                if self.alive[x as usize] && self.cofaces_alive(x) == 1 {
                    queue.push_back(x);
                }
            }
            self.faces[cell as usize].clear();
            self.cofaces[cell as usize].clear();
        }
        Ok(())
    }

    fn cofaces_alive(&self, x: u32) -> usize {
        self.cofaces[x as usize]
            .iter()
            .filter(|c| self.alive[**c as usize])
            .count()
    }

    fn single_unit_face(&self, c: u32) -> Option<u32> {
        if self.faces[c as usize].len() != 1 {
            return None;
        }
        let (&x, &w) = self.faces[c as usize].iter().next().unwrap();
        ((w == 1 || w == -1) && self.alive[x as usize]).then_some(x)
    }

    fn single_coface_with_unit(&self, a: u32) -> Option<u32> {
        let mut found = None;
        for &c in &self.cofaces[a as usize] {
            if self.alive[c as usize] {
                if found.is_some() {
                    return None;
                }
                found = Some(c);
            }
        }
        let b = found?;
        let w = self.faces[b as usize][&a];
        (w == 1 || w == -1).then_some(b)
    }

    /// Runs the reduction to a fixed point.
    fn run(&mut self) -> Result<()> {
        let n = self.alive.len();
        let mut queue: VecDeque<u32> = VecDeque::new();
        // Seed: the empty cell is the unique face of every vertex.
        for id in 0..n as u32 {
            if self.faces[id as usize].len() == 1 {
                queue.push_back(id);
            }
        }
        loop {
            // Zero-fill phase.
            while let Some(cell) = queue.pop_front() {
                if !self.alive[cell as usize] {
                    continue;
                }
                if let Some(a) = self.single_unit_face(cell) {
                    self.cancel(a, cell, &mut queue)?;
                } else if let Some(b) = self.single_coface_with_unit(cell) {
                    self.cancel(cell, b, &mut queue)?;
                }
            }
            // Fill phase: pick the unit-coefficient pair with the smallest
            // fill estimate, deterministically by (estimate, b, a).
            let mut best: Option<(usize, u32, u32)> = None;
            for b in 0..n as u32 {
                if !self.alive[b as usize] {
                    continue;
                }
                let blen = self.faces[b as usize].len();
                if blen == 0 {
                    continue;
                }
                for (&a, &w) in &self.faces[b as usize] {
                    if w != 1 && w != -1 {
                        continue;
                    }
                    if !self.alive[a as usize] {
                        continue;
                    }
                    let est = (blen - 1) * (self.cofaces_alive(a).saturating_sub(1));
                    if best.as_ref().map_or(true, |(e, bb, aa)| {
                        (est, b, a) < (*e, *bb, *aa)
                    }) {
                        best = Some((est, b, a));
                    }
                }
            }
            match best {
                Some((_, b, a)) => self.cancel(a, b, &mut queue)?,
                None => return Ok(()),
            }
        }
    }

    /// Surviving cells grouped by internal degree, and their boundary
    /// maps as dense integer matrices (rows = degree-k cells, columns =
    /// degree-(k−1) cells).
    fn core(&self) -> (Vec<usize>, Vec<Vec<Vec<BigInt>>>) {
        let max_deg = *self.degree.iter().max().unwrap_or(&0) as usize;
        let mut cells_by_deg: Vec<Vec<u32>> = vec![Vec::new(); max_deg + 1];
        for id in 0..self.alive.len() as u32 {
            if self.alive[id as usize] {
                cells_by_deg[self.degree[id as usize] as usize].push(id);
            }
        }
        let counts: Vec<usize> = cells_by_deg.iter().map(|v| v.len()).collect();
        let mut mats: Vec<Vec<Vec<BigInt>>> = Vec::with_capacity(max_deg + 1);
        mats.push(Vec::new()); // degree 0 has no boundary map
        for k in 1..=max_deg {
            let cols: HashMap<u32, usize> = cells_by_deg[k - 1]
                .iter()
                .enumerate()
                .map(|(i, &c)| (c, i))
                .collect();
            let mut m = Vec::with_capacity(cells_by_deg[k].len());
            for &c in &cells_by_deg[k] {
                let mut row = vec![BigInt::zero(); cells_by_deg[k - 1].len()];
                for (&x, &w) in &self.faces[c as usize] {
                    if let Some(&j) = cols.get(&x) {
                        row[j] = BigInt::from(w);
                    }
                }
                m.push(row);
            }
            mats.push(m);
        }
        (counts, mats)
    }
}

// ----------------------------------------------------------------------
// Smith normal form
// ----------------------------------------------------------------------

/// Invariant factors (positive, divisibility chain) of an integer matrix.
/// The number of factors is the rank.
pub fn smith_invariant_factors(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut factors: Vec<BigInt> = Vec::new();
    let mut t = 0usize;
    while t < rows && t < cols {
        // Find the entry of minimal nonzero magnitude in the submatrix.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !m[i][j].is_zero()
                    && pivot
                        .map_or(true, |(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        // Reduce row and column by the pivot until clean.
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if !m[i][t].is_zero() {
                    let q = div_round(&m[i][t], &m[t][t]);
                    if !q.is_zero() {
                        for j in t..cols {
                            let sub = &q * &m[t][j];
                            m[i][j] -= sub;
                        }
                    }
                    if !m[i][t].is_zero() {
                        m.swap(t, i);
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !m[t][j].is_zero() {
                    let q = div_round(&m[t][j], &m[t][t]);
                    if !q.is_zero() {
                        for row in m.iter_mut().skip(t) {
                            let sub = &q * &row[t];
                            row[j] -= sub;
                        }
                    }
                    if !m[t][j].is_zero() {
                        for row in m.iter_mut() {
                            row.swap(t, j);
                        }
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }
        // Enforce divisibility: if the pivot fails to divide some entry,
        // fold that row in and redo this position.
        let mut offender = None;
        'scan: for i in t + 1..rows {
            for j in t + 1..cols {
                if !(&m[i][j] % &m[t][t]).is_zero() {
                    offender = Some(i);
                    break 'scan;
                }
            }
        }
        if let Some(i) = offender {
            let extra = m[i].clone();
            for (j, v) in extra.into_iter().enumerate() {
                if j >= t {
                    m[t][j] += v;
                }
            }
            continue;
        }
        factors.push(m[t][t].abs());
        t += 1;
    }
    factors
}

/// Integer division rounding to nearest (ties toward zero), which makes
/// remainders as small as possible during elimination.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = num_integer::Integer::div_rem(a, b);
    let double: BigInt = &r + &r;
    if double.abs() > b.abs() {
        if (r.sign() == b.sign()) || r.is_zero() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

// ----------------------------------------------------------------------
// Public homology operations
// ----------------------------------------------------------------------

fn homology_with_ring(c: &SimplicialComplex, ring: Ring) -> Result<HomologyProfile> {
    if c.is_empty() {
        return Ok(HomologyProfile { ring, groups: Vec::new() });
    }
    let cc = ChainComplex::new(c)?;
    let mut red = Reducer::from_chain(&cc, ring == Ring::GF2);
    red.run()?;
    let (counts, mats) = red.core();
    let depth = cc.depth(); // simplex dims 0..depth-1 = internal degrees 1..depth
    let mut rank_of = vec![0usize; depth + 2];
    let mut torsion_into = vec![Vec::<BigInt>::new(); depth + 2]; // torsion_into[k] = torsion of H_{k-1}
    for (k, mat) in mats.iter().enumerate().skip(1) {
        if counts.len() <= k {
            break;
        }
        let factors = if ring == Ring::GF2 {
            // Over GF(2), rank suffices; no torsion.
            let g = GF2Matrix::from_rows(
                mat.iter().map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(j, _)| j)
                        .collect::<Vec<_>>()
                }),
                if mat.is_empty() { 0 } else { mat[0].len() },
            );
            vec![BigInt::from(1); gf2_rank(&g)]
        } else {
            smith_invariant_factors(mat.clone())
        };
        rank_of[k] = factors.len();
        torsion_into[k] = factors
            .into_iter()
            .filter(|f| f > &BigInt::from(1))
            .collect();
    }
    let mut groups = Vec::with_capacity(depth);
    for deg in 1..=depth {
        let n = counts.get(deg).copied().unwrap_or(0);
        let rank = n - rank_of[deg] - rank_of[deg + 1];
        let torsion = std::mem::take(&mut torsion_into[deg + 1]);
        groups.push(HomologyGroup { rank, torsion });
    }
    // The engine computed reduced homology (cell 0 was the empty face,
    // giving the augmented chain complex); restore the Z in H₀.
    groups[0].rank += 1;
    let profile = HomologyProfile { ring, groups };
    // Automatic consistency check: the alternating sum of free ranks must
    // equal the Euler characteristic (torsion never contributes).
    if profile.euler() != c.euler_characteristic() {
        return Err(Error::InvalidComplex(format!(
            "homology/Euler mismatch: betti {:?} vs characteristic {}",
            profile.betti(),
            c.euler_characteristic()
        )));
    }
    Ok(profile)
}

/// GF(2) Betti numbers of all dimensions.
pub fn betti_gf2(c: &SimplicialComplex) -> Result<Vec<usize>> {
    Ok(homology_with_ring(c, Ring::GF2)?.betti())
}

/// Integral homology (free ranks and torsion) via Smith normal form on
/// the reduced core.
pub fn homology_integral(c: &SimplicialComplex) -> Result<HomologyProfile> {
    homology_with_ring(c, Ring::Integer)
}

/// Rational Betti numbers (free ranks of the integral profile).
pub fn betti_rational(c: &SimplicialComplex) -> Result<Vec<usize>> {
    Ok(homology_integral(c)?.betti())
}

// ----------------------------------------------------------------------
// Cycles, cocycles, and induced maps (GF(2))
// ----------------------------------------------------------------------

/// Boundary matrix ∂ₖ of `c` over GF(2): rows = k-faces, columns =
/// (k−1)-faces.
fn gf2_boundary(cc: &ChainComplex, k: usize) -> GF2Matrix {
    if k == 0 || k >= cc.depth() {
        return GF2Matrix::zero(
            cc.bases.get(k).map_or(0, |b| b.len()),
            k.checked_sub(1).and_then(|j| cc.bases.get(j)).map_or(0, |b| b.len()),
        );
    }
    GF2Matrix::from_rows(
        cc.boundaries[k]
            .iter()
            .map(|row| row.iter().map(|&(j, _)| j).collect::<Vec<_>>()),
        cc.bases[k - 1].len(),
    )
}

/// Decides whether a GF(2) k-cycle bounds in `c`.
///
/// `cycle` lists the k-faces with coefficient 1. Errors if some face is
/// missing from `c` or the chain is not a cycle.
pub fn is_null_homologous(c: &SimplicialComplex, cycle: &[Simplex]) -> Result<bool> {
    if cycle.is_empty() {
        return Ok(true);
    }
    let k = cycle[0].dim();
    if k < 0 || cycle.iter().any(|s| s.dim() != k) {
        return Err(Error::Precondition("chain mixes dimensions".into()));
    }
    let k = k as usize;
    let cc = ChainComplex::new(c)?;
    let mut z = vec![false; cc.bases[k].len()];
    for s in cycle {
        let (_, i) = cc
            .position(s)
            .ok_or_else(|| Error::Precondition(format!("chain face {s} not in complex")))?;
        z[i] ^= true; // doubled faces cancel over GF(2)
    }
    // Cycle check: ∂z = 0.
    if k > 0 {
        let mut img = vec![false; cc.bases[k - 1].len()];
        for (i, &on) in z.iter().enumerate() {
            if on {
                for &(j, _) in &cc.boundaries[k][i] {
                    img[j] ^= true;
                }
            }
        }
        if img.iter().any(|&b| b) {
            return Err(Error::Precondition("chain is not a cycle".into()));
        }
    }
    // Bounding check: solve ∂_{k+1}ᵀ x = z.
    if k + 1 >= cc.depth() {
        return Ok(z.iter().all(|&b| !b));
    }
    let d = gf2_boundary(&cc, k + 1).transpose(); // k-faces × (k+1)-faces
    Ok(d.solve(&z).is_some())
}

/// A GF(2) 1-cocycle (edge set) representing a nonzero class of H¹, if
/// one exists: every triangle meets the set evenly, and the set is not
/// the coboundary of any vertex assignment.
pub fn nontrivial_one_cocycle(c: &SimplicialComplex) -> Result<Option<Vec<Simplex>>> {
    let cc = ChainComplex::new(c)?;
    if cc.depth() < 2 {
        return Ok(None);
    }
    let n_edges = cc.bases[1].len();
    // Cocycle condition: for each triangle, the sum of its edges is 0.
    let delta1 = if cc.depth() > 2 {
        gf2_boundary(&cc, 2) // triangles × edges
    } else {
        GF2Matrix::zero(0, n_edges)
    };
    // Coboundary of vertices: edge e = {u,v} ↦ rows of ∂₁ (edges × vertices).
    let d1 = gf2_boundary(&cc, 1); // edges × vertices
    for z in delta1.nullspace() {
        if z.iter().all(|&b| !b) {
            continue;
        }
        // z is a coboundary iff ∂₁·f = z has a vertex solution f.
        if d1.solve(&z).is_none() {
            let edges = z
                .iter()
                .enumerate()
                .filter(|(_, &on)| on)
                .map(|(i, _)| cc.bases[1][i].clone())
                .collect();
            return Ok(Some(edges));
        }
    }
    Ok(None)
}

/// Whether the inclusion `a` ⊆ `c` induces an injective map
/// H_k(a; GF2) → H_k(c; GF2).
///
/// Uses the rank identity: the map is injective iff
/// dim(Z_k(a) + B_k(c)) − dim B_k(c) = Betti_k(a),
/// where Z is the cycle space and B the boundary space inside C_k(c).
pub fn induced_map_injective(a: &SimplicialComplex, c: &SimplicialComplex, k: usize) -> Result<bool> {
    if !a.is_subcomplex_of(c) {
        return Err(Error::Precondition("first complex is not a subcomplex".into()));
    }
    if a.is_empty() {
        return Ok(true);
    }
    let cca = ChainComplex::new(a)?;
    let ccc = ChainComplex::new(c)?;
    if k >= cca.depth() {
        return Ok(true); // H_k(a) = 0
    }
    // Cycle basis of a in dimension k: kernel of ∂ₖ as a map out of the
    // k-chains, i.e. the nullspace of the ((k−1)-faces × k-faces) matrix.
    let cycles = if k == 0 {
        // Every vertex chain is a 0-cycle.
        (0..cca.bases[0].len())
            .map(|i| {
                let mut v = vec![false; cca.bases[0].len()];
                v[i] = true;
                v
            })
            .collect::<Vec<_>>()
    } else {
        gf2_boundary(&cca, k).transpose().nullspace()
    };
    let betti_a = {
        let rank_up = if k + 1 < cca.depth() {
            gf2_rank(&gf2_boundary(&cca, k + 1))
        } else {
            0
        };
        cycles.len() - rank_up
    };
    // Embed a's k-faces into c's k-face coordinates.
    let n_c = ccc.bases[k].len();
    let embed: Vec<usize> = cca.bases[k]
        .iter()
        .map(|s| ccc.position(s).expect("subcomplex face missing").1)
        .collect();
    let mut stacked: Vec<Vec<usize>> = Vec::new();
    for z in &cycles {
        stacked.push(
            z.iter()
                .enumerate()
                .filter(|(_, &on)| on)
                .map(|(i, _)| embed[i])
                .collect(),
        );
    }
    let boundary_rows: Vec<Vec<usize>> = if k + 1 < ccc.depth() {
        ccc.boundaries[k + 1]
            .iter()
            .map(|row| row.iter().map(|&(j, _)| j).collect())
            .collect()
    } else {
        Vec::new()
    };
    let dim_bc = gf2_rank(&GF2Matrix::from_rows(boundary_rows.iter().cloned(), n_c));
    let all_rows = stacked.into_iter().chain(boundary_rows);
    let dim_sum = gf2_rank(&GF2Matrix::from_rows(all_rows, n_c));
    Ok(dim_sum - dim_bc == betti_a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;
    use crate::data::load_complex;
    use crate::permcycle::permuted_difference_cycle;
    use crate::simplex;

    fn groups(profile: &HomologyProfile) -> Vec<String> {
        profile.groups.iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn homology_of_small_spaces() {
        // point
        let p = SimplicialComplex::from_facets(vec![simplex![0]]);
        assert_eq!(groups(&homology_integral(&p).unwrap()), ["Z"]);
        // two points
        let pp = SimplicialComplex::from_facets(vec![simplex![0], simplex![1]]);
        assert_eq!(groups(&homology_integral(&pp).unwrap()), ["Z^2"]);
        // circle
        let circle = SimplicialComplex::simplex_boundary(&simplex![0, 1, 2]);
        assert_eq!(groups(&homology_integral(&circle).unwrap()), ["Z", "Z"]);
        // 2-sphere
        let s2 = SimplicialComplex::simplex_boundary(&simplex![0, 1, 2, 3]);
        assert_eq!(groups(&homology_integral(&s2).unwrap()), ["Z", "0", "Z"]);
        assert_eq!(betti_gf2(&s2).unwrap(), vec![1, 0, 1]);
        // solid tetrahedron: contractible
        let b3 = SimplicialComplex::full_simplex(&simplex![0, 1, 2, 3]);
        assert_eq!(groups(&homology_integral(&b3).unwrap()), ["Z", "0", "0", "0"]);
    }

    #[test]
    fn six_vertex_projective_plane_has_two_torsion() {
        let rp2 = SimplicialComplex::from_facet_lists(&[
            vec![1, 2, 3],
            vec![1, 2, 4],
            vec![1, 3, 5],
            vec![1, 4, 6],
            vec![1, 5, 6],
            vec![2, 3, 6],
            vec![2, 4, 5],
            vec![2, 5, 6],
            vec![3, 4, 5],
            vec![3, 4, 6],
        ])
        .unwrap();
        let h = homology_integral(&rp2).unwrap();
        assert_eq!(groups(&h), ["Z", "Z/2", "0"]);
        assert_eq!(betti_gf2(&rp2).unwrap(), vec![1, 1, 1]);
        assert_eq!(h.gf2_from_integral().unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn three_torus_betti_numbers() {
        let t3 = permuted_difference_cycle(&[1, 2, 4, 8], 15).unwrap();
        assert_eq!(betti_gf2(&t3).unwrap(), vec![1, 3, 3, 1]);
        let h = homology_integral(&t3).unwrap();
        assert_eq!(groups(&h), ["Z", "Z^3", "Z^3", "Z"]);
    }

    #[test]
    fn twisted_sphere_bundle_from_difference_cycles() {
        // The unique 9-vertex triangulation of the twisted S²-bundle over
        // S¹ (the 3-dimensional Klein bottle).
        let kb = permuted_difference_cycle(&[1, 1, 2, 5], 9).unwrap();
        assert_eq!(kb.f_vector(), vec![9, 36, 54, 27]);
        assert_eq!(kb.euler_characteristic(), 0);
        let h = homology_integral(&kb).unwrap();
        assert_eq!(groups(&h), ["Z", "Z", "Z/2", "0"]);
        assert_eq!(betti_gf2(&kb).unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(h.gf2_from_integral().unwrap(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn projective_spaces_from_bundled_data() {
        let rp3 = load_complex("rp3-nice-12").unwrap();
        let h = homology_integral(&rp3).unwrap();
        assert_eq!(groups(&h), ["Z", "Z/2", "0", "Z"]);
        assert_eq!(betti_gf2(&rp3).unwrap(), vec![1, 1, 1, 1]);

        let rp4 = load_complex("rp4-min-16").unwrap();
        let h = homology_integral(&rp4).unwrap();
        assert_eq!(groups(&h), ["Z", "Z/2", "0", "Z/2", "0"]);
        assert_eq!(betti_gf2(&rp4).unwrap(), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn null_homology_detection_in_projective_space() {
        let p12 = load_complex("p12").unwrap();
        // The boundary of any triangle bounds.
        let tri = p12.faces_of_dim(2)[0].clone();
        let edges: Vec<Simplex> = tri.boundary_facets().collect();
        assert!(is_null_homologous(&p12, &edges).unwrap());
        // The empty triangle (1 2 4) is a cycle that does not bound…
        let gen1: Vec<Simplex> = simplex![1, 2, 4].boundary_facets().collect();
        assert!(!p12.contains_face(&simplex![1, 2, 4]));
        assert!(!is_null_homologous(&p12, &gen1).unwrap());
        // …while the sum of two adjacent empty triangles does.
        let gen2: Vec<Simplex> = simplex![2, 3, 4].boundary_facets().collect();
        let mut sum: Vec<Simplex> = Vec::new();
        for e in gen1.iter().chain(&gen2) {
            if let Some(pos) = sum.iter().position(|x| x == e) {
                sum.remove(pos);
            } else {
                sum.push(e.clone());
            }
        }
        assert!(!p12.contains_face(&simplex![2, 3, 4]));
        assert!(is_null_homologous(&p12, &sum).unwrap());
    }

    #[test]
    fn one_cocycles_exist_exactly_when_h1_is_nonzero() {
        let s2 = SimplicialComplex::simplex_boundary(&simplex![0, 1, 2, 3]);
        assert!(nontrivial_one_cocycle(&s2).unwrap().is_none());
        let rp3 = load_complex("rp3-nice-12").unwrap();
        let z = nontrivial_one_cocycle(&rp3).unwrap().expect("H¹(RP³;GF2) ≠ 0");
        // Cocycle condition: every triangle contains an even number of
        // the selected edges.
        for t in rp3.faces_of_dim(2) {
            let hits = t
                .boundary_facets()
                .filter(|e| z.contains(e))
                .count();
            assert_eq!(hits % 2, 0, "triangle {t}");
        }
    }

    #[test]
    fn induced_maps_on_cylinder_and_identity() {
        // Cylinder: two boundary circles are homologous, so including both
        // gives a rank-2 H₁ source with a rank-1 image.
        let cyl = SimplicialComplex::from_facet_lists(&[
            vec![0, 1, 3],
            vec![1, 3, 4],
            vec![1, 2, 4],
            vec![2, 4, 5],
            vec![0, 2, 5],
            vec![0, 3, 5],
        ])
        .unwrap();
        let bottom = SimplicialComplex::simplex_boundary(&simplex![0, 1, 2]);
        let top = SimplicialComplex::simplex_boundary(&simplex![3, 4, 5]);
        assert!(induced_map_injective(&bottom, &cyl, 1).unwrap());
        assert!(induced_map_injective(&top, &cyl, 1).unwrap());
        let both = bottom.union(&top);
        assert!(!induced_map_injective(&both, &cyl, 1).unwrap());
        // Identity inclusion is always injective.
        assert!(induced_map_injective(&cyl, &cyl, 0).unwrap());
        assert!(induced_map_injective(&cyl, &cyl, 1).unwrap());
        // H₀: two components merging into one are detected.
        let two = SimplicialComplex::from_facets(vec![simplex![0], simplex![1]]);
        let edge = SimplicialComplex::from_facets(vec![simplex![0, 1]]);
        assert!(!induced_map_injective(&two, &edge, 0).unwrap());
    }

    #[test]
    #[ignore = "large input; exercised by the acceptance suite"]
    fn seven_sphere_scale_gf2_betti() {
        use crate::data::load_union;
        let union = load_union(&["s7-h1", "s7-h2", "s7-h3", "s7-h4"]).unwrap();
        assert_eq!(union.f_vector().iter().sum::<u64>(), 204_662);
        let betti = betti_gf2(&union).unwrap();
        assert_eq!(betti, vec![1, 0, 0, 0, 0, 0, 0, 1]);
        // A single solid piece deformation-retracts to a circle.
        let piece = load_union(&["s7-h1"]).unwrap();
        assert_eq!(betti_gf2(&piece).unwrap(), vec![1, 1, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn smith_normal_form_basics() {
        // diag(2,6) ~ invariant factors (2,6); matrix [[2,0],[0,6]] plus a
        // disturbance keeps the same factors after row operations.
        let m = vec![
            vec![BigInt::from(2), BigInt::from(4)],
            vec![BigInt::from(4), BigInt::from(14)],
        ];
        // det = 28 − 16 = 12, gcd of entries = 2 ⇒ factors (2, 6).
        assert_eq!(
            smith_invariant_factors(m),
            vec![BigInt::from(2), BigInt::from(6)]
        );
        let zero = vec![vec![BigInt::zero(); 3]; 2];
        assert!(smith_invariant_factors(zero).is_empty());
    }
}
