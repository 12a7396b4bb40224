//! Builders for the toolkit's named spaces.
//!
//! The module constructs, from first principles, every complex the rest of
//! the crate verifies: boundary complexes of cyclic polytopes (exact, via
//! Gale's evenness condition), boundaries of trigonometric-moment polytopes
//! (floating-point proposal, interval-arithmetic certification), the
//! bi-cyclic spheres with their solid-torus splittings, the cube-quotient
//! models of real projective spaces together with their pyramid
//! decompositions and Klein-bottle subcomplexes, the equilibrium
//! triangulations of complex projective spaces, and the 16-vertex real
//! projective 4-space cut out of an exact polytope over ℚ(√5).

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::exact::{certified_sign_det, interval_trig_point, CertifiedInterval, DetSign};
use crate::homology::nontrivial_one_cocycle;
use crate::hopf::{assemble_perfect_equilibrium, EquilibriumAssembly};
use crate::recognition::{boundary_faces, sphere_check_with, CertStatus, SphereOptions};
use crate::simplex::{Simplex, Vertex};
use crate::symmetry::{double_cover, orbit_partition, simplex_orbit, Permutation};

// ----------------------------------------------------------------------
// Small dense float helpers (proposal stage only; never trusted)
// ----------------------------------------------------------------------

fn fdot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn fnorm(a: &[f64]) -> f64 {
    fdot(a, a).sqrt()
}

fn fsub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Removes the components of `v` along an orthonormal family.
fn project_out(v: &mut [f64], basis: &[Vec<f64>]) {
    for b in basis {
        let c = fdot(v, b);
        for (x, y) in v.iter_mut().zip(b) {
            *x -= c * y;
        }
    }
}

/// Gram–Schmidt; directions with negligible residue are dropped.
fn orthonormal_basis(vectors: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(vectors.len());
    for v in vectors {
        let mut w = v.clone();
        project_out(&mut w, &basis);
        let n = fnorm(&w);
        if n > 1e-9 {
            for x in &mut w {
                *x /= n;
            }
            basis.push(w);
        }
    }
    basis
}

/// Deterministic stream of "generic" unit directions.
struct GenericDirections {
    state: u64,
    dim: usize,
}

impl GenericDirections {
    fn new(dim: usize) -> Self {
        GenericDirections { state: 0x9E37_79B9_7F4A_7C15, dim }
    }

    fn next_dir(&mut self) -> Vec<f64> {
        let mut v = Vec::with_capacity(self.dim);
        for _ in 0..self.dim {
            // SplitMix64 step; converted to a float in (-1, 1).
            self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
            let mut z = self.state;
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
            z ^= z >> 31;
            v.push((z >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0);
        }
        let n = fnorm(&v);
        v.iter_mut().for_each(|x| *x /= n.max(1e-300));
        v
    }
}

// ----------------------------------------------------------------------
// Cyclic polytope boundaries (exact, Gale's evenness condition)
// ----------------------------------------------------------------------

/// Tests Gale's evenness condition: every maximal run of consecutive
/// members of `subset` that is bounded on both sides by non-members must
/// have even length.
fn gale_even(subset: &[u32], n: u32) -> bool {
    let mut i = 0;
    while i < subset.len() {
        let mut j = i;
        while j + 1 < subset.len() && subset[j + 1] == subset[j] + 1 {
            j += 1;
        }
        let touches_left = subset[i] == 0;
        let touches_right = subset[j] == n - 1;
        if !touches_left && !touches_right && (j - i + 1) % 2 == 1 {
            return false;
        }
        i = j + 1;
    }
    true
}

/// Boundary complex of the cyclic `d`-polytope on `n` vertices with the
/// standard vertex order, by Gale's evenness condition. Exact: no
/// floating-point arithmetic is involved.
pub fn cyclic_polytope_boundary(n: u32, d: u32) -> Result<SimplicialComplex> {
    if d < 2 {
        return Err(Error::Precondition(format!(
            "cyclic polytope boundary needs dimension ≥ 2, got {d}"
        )));
    }
    if n <= d {
        return Err(Error::Precondition(format!(
            "cyclic polytope needs more vertices than its dimension: n={n}, d={d}"
        )));
    }
    let mut facets: Vec<Simplex> = Vec::new();
    let mut subset: Vec<u32> = Vec::with_capacity(d as usize);
    fn rec(n: u32, d: u32, start: u32, subset: &mut Vec<u32>, out: &mut Vec<Simplex>) {
        if subset.len() == d as usize {
            if gale_even(subset, n) {
                out.push(Simplex::from_sorted(smallvec::SmallVec::from_slice(subset)));
            }
            return;
        }
        let remaining = d as usize - subset.len();
        for v in start..=(n - remaining as u32) {
            subset.push(v);
            rec(n, d, v + 1, subset, out);
            subset.pop();
        }
    }
    rec(n, d, 0, &mut subset, &mut facets);
    Ok(SimplicialComplex::from_facets(facets))
}

// ----------------------------------------------------------------------
// Trigonometric-moment polytopes: float proposal + interval certification
// ----------------------------------------------------------------------

/// A polytope on the trigonometric curve
/// `j ↦ (cos 2πf₁j/n, sin 2πf₁j/n, …, cos 2πf_kj/n, sin 2πf_kj/n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KCyclicSpec {
    pub frequencies: Vec<u32>,
    pub n: u32,
}

impl KCyclicSpec {
    pub fn new(frequencies: Vec<u32>, n: u32) -> Result<Self> {
        let spec = KCyclicSpec { frequencies, n };
        spec.validate()?;
        Ok(spec)
    }

    /// Ambient dimension: two coordinates per frequency.
    pub fn dim(&self) -> usize {
        2 * self.frequencies.len()
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.frequencies.len();
        if k == 0 {
            return Err(Error::Precondition("need at least one frequency".into()));
        }
        if (self.n as usize) < 2 * k + 1 {
            return Err(Error::Precondition(format!(
                "need n ≥ 2k+1 = {} vertices, got {}",
                2 * k + 1,
                self.n
            )));
        }
        let mut seen = BTreeSet::new();
        for &f in &self.frequencies {
            let r = f % self.n;
            if r == 0 {
                return Err(Error::Precondition(format!(
                    "frequency {f} is ≡ 0 mod {}; the curve would be degenerate",
                    self.n
                )));
            }
            if !seen.insert(r) {
                return Err(Error::Precondition(format!(
                    "frequencies must be distinct mod {}; {f} repeats",
                    self.n
                )));
            }
        }
        Ok(())
    }

    /// Floating-point curve points, one per residue `0..n`.
    pub fn float_points(&self) -> Vec<Vec<f64>> {
        let n = self.n as f64;
        (0..self.n)
            .map(|j| {
                let mut p = Vec::with_capacity(self.dim());
                for &f in &self.frequencies {
                    let t = 2.0 * std::f64::consts::PI * (f as f64) * (j as f64) / n;
                    p.push(t.cos());
                    p.push(t.sin());
                }
                p
            })
            .collect()
    }
}

/// Finds one facet of the hull of `pts` by wrapping a supporting
/// hyperplane: start at the extreme point of a generic direction and
/// rotate the hyperplane around the affine hull of the touch set until it
/// supports `d` affinely independent points.
fn first_hull_facet(pts: &[Vec<f64>]) -> Result<Vec<usize>> {
    let d = pts[0].len();
    let mut gen = GenericDirections::new(d);
    let c0 = gen.next_dir();
    let start = (0..pts.len())
        .max_by(|&a, &b| {
            fdot(&pts[a], &c0)
                .partial_cmp(&fdot(&pts[b], &c0))
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .expect("nonempty point set");
    let mut touched: Vec<usize> = vec![start];
    let mut normal = c0;
    while touched.len() < d {
        let r0 = &pts[touched[0]];
        let dirs: Vec<Vec<f64>> = touched[1..].iter().map(|&t| fsub(&pts[t], r0)).collect();
        let basis = orthonormal_basis(&dirs);
        let mut nu = normal.clone();
        project_out(&mut nu, &basis);
        let nn = fnorm(&nu);
        if nn < 1e-12 {
            return Err(Error::Construction(
                "hull wrap lost its supporting normal; points may be degenerate".into(),
            ));
        }
        nu.iter_mut().for_each(|x| *x /= nn);
        // A second direction in the quotient, orthogonal to the normal.
        let mut second = None;
        for _ in 0..(d + 4) {
            let mut a = gen.next_dir();
            project_out(&mut a, &basis);
            let proj = fdot(&a, &nu);
            for (x, y) in a.iter_mut().zip(&nu) {
                *x -= proj * y;
            }
            let na = fnorm(&a);
            if na > 1e-9 {
                a.iter_mut().for_each(|x| *x /= na);
                second = Some(a);
                break;
            }
        }
        let a = second.ok_or_else(|| {
            Error::Construction("hull wrap could not find a rotation direction".into())
        })?;
        // First point touched when rotating the support towards `a`.
        let mut best: Option<(f64, usize)> = None;
        for (q, p) in pts.iter().enumerate() {
            if touched.contains(&q) {
                continue;
            }
            let w = fsub(p, r0);
            let x = fdot(&nu, &w);
            let y = fdot(&a, &w);
            if x.hypot(y) < 1e-12 {
                continue;
            }
            let mut phi = y.atan2(x);
            if phi < 0.0 {
                phi += 2.0 * std::f64::consts::PI;
            }
            let mut theta = phi - std::f64::consts::FRAC_PI_2;
            if theta < 0.0 {
                theta += 2.0 * std::f64::consts::PI;
            }
            if best.as_ref().map_or(true, |&(bt, _)| theta < bt) {
                best = Some((theta, q));
            }
        }
        let (theta, w) = best.ok_or_else(|| {
            Error::Construction("hull wrap ran out of candidate points".into())
        })?;
        normal = nu
            .iter()
            .zip(&a)
            .map(|(x, y)| x * theta.cos() + y * theta.sin())
            .collect();
        touched.push(w);
    }
    touched.sort_unstable();
    Ok(touched)
}

/// Given a hull ridge and the extra vertex `u` of one facet through it,
/// finds the extra vertex of the other facet through the ridge by angular
/// pivoting in the 2-dimensional quotient of the ridge's affine hull.
fn pivot_across_ridge(pts: &[Vec<f64>], ridge: &[usize], u: usize) -> Result<usize> {
    let r0 = &pts[ridge[0]];
    let dirs: Vec<Vec<f64>> = ridge[1..].iter().map(|&t| fsub(&pts[t], r0)).collect();
    let basis = orthonormal_basis(&dirs);
    let mut e1 = fsub(&pts[u], r0);
    project_out(&mut e1, &basis);
    let n1 = fnorm(&e1);
    if n1 < 1e-12 {
        return Err(Error::Construction(
            "ridge pivot: the facet vertex collapsed onto the ridge".into(),
        ));
    }
    e1.iter_mut().for_each(|x| *x /= n1);
    let d = pts[0].len();
    let mut gen = GenericDirections::new(d);
    let mut e2 = None;
    for _ in 0..(d + 4) {
        let mut a = gen.next_dir();
        project_out(&mut a, &basis);
        let p = fdot(&a, &e1);
        for (x, y) in a.iter_mut().zip(&e1) {
            *x -= p * y;
        }
        let na = fnorm(&a);
        if na > 1e-9 {
            a.iter_mut().for_each(|x| *x /= na);
            e2 = Some(a);
            break;
        }
    }
    let e2 = e2.ok_or_else(|| {
        Error::Construction("ridge pivot could not build a quotient frame".into())
    })?;
    // Project every candidate; all lie (up to float noise) in a cone with
    // the current facet vertex on one extreme ray. The neighbor is the
    // other extreme ray: the candidate of maximal angle from `u`.
    let mut coords: Vec<(usize, f64, f64)> = Vec::new();
    for (q, p) in pts.iter().enumerate() {
        if q == u || ridge.contains(&q) {
            continue;
        }
        let w = fsub(p, r0);
        let x = fdot(&e1, &w);
        let y = fdot(&e2, &w);
        if x.hypot(y) > 1e-12 {
            coords.push((q, x, y));
        }
    }
    let sign_ref = coords
        .iter()
        .max_by(|a, b| {
            a.2.abs()
                .partial_cmp(&b.2.abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .map(|&(_, _, y)| if y >= 0.0 { 1.0 } else { -1.0 })
        .unwrap_or(1.0);
    let mut best: Option<(f64, usize)> = None;
    for &(q, x, y) in &coords {
        let alpha = (sign_ref * y).atan2(x);
        if best.as_ref().map_or(true, |&(ba, _)| alpha > ba) {
            best = Some((alpha, q));
        }
    }
    best.map(|(_, q)| q)
        .ok_or_else(|| Error::Construction("ridge pivot found no neighbor".into()))
}

/// Proposes the full facet list of the hull of `pts` (assumed simplicial)
/// by breadth-first ridge expansion from one wrapped facet.
fn propose_hull_facets(pts: &[Vec<f64>]) -> Result<Vec<Vec<usize>>> {
    let d = pts[0].len();
    let first = first_hull_facet(pts)?;
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    seen.insert(first.clone());
    let mut queue = VecDeque::from([first]);
    let mut ridge_done: BTreeSet<Vec<usize>> = BTreeSet::new();
    while let Some(f) = queue.pop_front() {
        for omit in 0..d {
            let mut ridge = f.clone();
            let u = ridge.remove(omit);
            if !ridge_done.insert(ridge.clone()) {
                continue;
            }
            let w = pivot_across_ridge(pts, &ridge, u)?;
            let mut g = ridge;
            g.push(w);
            g.sort_unstable();
            if seen.insert(g.clone()) {
                queue.push_back(g);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Boundary complex of the trigonometric-moment polytope described by
/// `spec`. Facets are proposed with floating-point arithmetic and then
/// certified: for every proposed facet, the sign of the hyperplane side
/// test against every non-facet vertex is resolved with interval
/// arithmetic on a rising precision schedule up to `precision` bits. The
/// returned status is `Certified` (any unresolvable sign is an error, as
/// is a side test contradicting the proposal). A final closure check —
/// every ridge in exactly two facets — guarantees the certified facet set
/// is the complete boundary.
pub fn k_cyclic_boundary(
    spec: &KCyclicSpec,
    precision: u32,
) -> Result<(SimplicialComplex, CertStatus)> {
    spec.validate()?;
    let pts = spec.float_points();
    let proposed = propose_hull_facets(&pts)?;
    let d = spec.dim();
    let n = spec.n as u64;
    let freqs: Vec<u64> = spec.frequencies.iter().map(|&f| f as u64).collect();
    let mut schedule: Vec<u32> = Vec::new();
    let mut bits = 64.min(precision.max(16));
    loop {
        schedule.push(bits);
        if bits >= precision {
            break;
        }
        bits = (bits * 2).min(precision);
    }
    // Interval coordinates (with a trailing exact 1) cached per precision.
    let mut cache: HashMap<u32, Vec<Vec<CertifiedInterval>>> = HashMap::new();
    let max_bits = *schedule.last().expect("schedule nonempty");
    for facet in &proposed {
        let mut facet_sign: Option<DetSign> = None;
        for q in 0..pts.len() {
            if facet.contains(&q) {
                continue;
            }
            let sign = certified_sign_det(
                |b| {
                    let rows = cache.entry(b).or_insert_with(|| {
                        (0..n)
                            .map(|j| {
                                let mut row = interval_trig_point(j, n, &freqs, b);
                                row.push(CertifiedInterval::exact_int(1, b));
                                row
                            })
                            .collect()
                    });
                    let mut m: Vec<Vec<CertifiedInterval>> = Vec::with_capacity(d + 1);
                    for &v in facet {
                        m.push(rows[v].clone());
                    }
                    m.push(rows[q].clone());
                    m
                },
                &schedule,
            );
            match sign {
                DetSign::Indeterminate { .. } => {
                    return Err(Error::Construction(format!(
                        "degenerate hull: the side test of face {:?} against vertex {q} \
                         stayed indeterminate at {max_bits} bits",
                        facet
                    )));
                }
                s => match &facet_sign {
                    None => facet_sign = Some(s),
                    Some(prev) if *prev == s => {}
                    Some(_) => {
                        return Err(Error::Construction(format!(
                            "proposed face {:?} is not a facet: vertices lie on both \
                             sides of its hyperplane",
                            facet
                        )));
                    }
                },
            }
        }
    }
    let facets: Vec<Simplex> = proposed
        .iter()
        .map(|f| Simplex::new(f.iter().map(|&v| v as Vertex).collect()))
        .collect::<Result<_>>()?;
    let complex = SimplicialComplex::from_facets(facets);
    if complex.vertex_count() != spec.n as usize {
        return Err(Error::Construction(format!(
            "hull uses {} of the {} curve points; the proposal is incomplete",
            complex.vertex_count(),
            spec.n
        )));
    }
    for (ridge, deg) in complex.ridge_degrees() {
        if deg != 2 {
            return Err(Error::Construction(format!(
                "certified facet set is not closed: ridge {ridge} lies in {deg} facets"
            )));
        }
    }
    Ok((
        complex,
        CertStatus::certified(format!(
            "{} facets; every hyperplane side test resolved within {max_bits} bits; \
             ridge closure verified",
            proposed.len()
        )),
    ))
}

// ----------------------------------------------------------------------
// Bi-cyclic spheres and their solid-torus splitting
// ----------------------------------------------------------------------

/// A bi-cyclic 3-sphere together with its decomposition into two solid
/// tori glued along the shift-invariant torus with triangle generators
/// `(0 1 m+1)` and `(0 m m+1)`.
#[derive(Debug)]
pub struct BicyclicHopf {
    pub sphere: SimplicialComplex,
    pub solid_tori: [SimplicialComplex; 2],
    pub torus: SimplicialComplex,
    /// Lexicographically smallest facet of each shift orbit, per solid torus.
    pub torus_orbit_generators: [Vec<Simplex>; 2],
    pub status: CertStatus,
}

/// Builds the bi-cyclic 3-sphere on `n = m² + m + 1` vertices with
/// frequencies `{1, m}` and splits it along its intermediate torus. The
/// solid torus listed first contains the facet `(0 1 2 3)`; its orbit
/// generators are `(0 1 j j+1)` for `j = 2..m`.
pub fn bicyclic_hopf(m: u32) -> Result<BicyclicHopf> {
    if m < 2 {
        return Err(Error::Precondition(format!(
            "bi-cyclic sphere needs m ≥ 2, got {m}"
        )));
    }
    let n = m * m + m + 1;
    let spec = KCyclicSpec::new(vec![1, m], n)?;
    let (sphere, status) = k_cyclic_boundary(&spec, 256)?;
    let shift = Permutation::cyclic_shift(n);
    let mut torus_facets: BTreeSet<Simplex> = BTreeSet::new();
    for gen in [vec![0, 1, m + 1], vec![m + 1, 0, m]] {
        let seed = Simplex::new(gen)?;
        for t in simplex_orbit(&seed, std::slice::from_ref(&shift), 16 * n as usize)? {
            torus_facets.insert(t);
        }
    }
    let torus = SimplicialComplex::from_facets(torus_facets.iter().cloned());
    if torus.facet_count() != 2 * n as usize {
        return Err(Error::Construction(format!(
            "intermediate torus has {} triangles, expected {}",
            torus.facet_count(),
            2 * n
        )));
    }
    // Split the dual graph of the sphere along the torus triangles.
    let facets = sphere.facets();
    let mut ridge_to: HashMap<Simplex, Vec<usize>> = HashMap::new();
    for (i, f) in facets.iter().enumerate() {
        for r in f.boundary_facets() {
            ridge_to.entry(r).or_default().push(i);
        }
    }
    let mut parent: Vec<usize> = (0..facets.len()).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (r, fs) in &ridge_to {
        if fs.len() == 2 && !torus_facets.contains(r) {
            let (a, b) = (find(&mut parent, fs[0]), find(&mut parent, fs[1]));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let mut sides: BTreeMap<usize, Vec<Simplex>> = BTreeMap::new();
    for (i, f) in facets.iter().enumerate() {
        sides.entry(find(&mut parent, i)).or_default().push(f.clone());
    }
    if sides.len() != 2 {
        return Err(Error::Construction(format!(
            "the torus splits the sphere into {} pieces instead of two",
            sides.len()
        )));
    }
    let marker = Simplex::new(vec![0, 1, 2, 3])?;
    let mut pieces: Vec<Vec<Simplex>> = sides.into_values().collect();
    if !pieces[0].contains(&marker) {
        pieces.swap(0, 1);
    }
    let mut solid_tori_vec: Vec<SimplicialComplex> = Vec::with_capacity(2);
    let mut gens: Vec<Vec<Simplex>> = Vec::with_capacity(2);
    for piece in &pieces {
        let st = SimplicialComplex::from_facets(piece.iter().cloned());
        let bd: BTreeSet<Simplex> = boundary_faces(&st).into_iter().collect();
        if bd != torus_facets {
            return Err(Error::Construction(
                "a torus side's boundary is not the intermediate torus".into(),
            ));
        }
        let orbits = orbit_partition(piece, std::slice::from_ref(&shift));
        gens.push(orbits.iter().map(|o| o[0].clone()).collect());
        solid_tori_vec.push(st);
    }
    let [a, b] = <[SimplicialComplex; 2]>::try_from(solid_tori_vec)
        .map_err(|_| Error::Construction("expected exactly two solid tori".into()))?;
    let [ga, gb] =
        <[Vec<Simplex>; 2]>::try_from(gens).map_err(|_| Error::Construction("orbit generators".into()))?;
    Ok(BicyclicHopf {
        sphere,
        solid_tori: [a, b],
        torus,
        torus_orbit_generators: [ga, gb],
        status,
    })
}

// ----------------------------------------------------------------------
// Cubical complexes, antipodal quotients, pyramid decompositions
// ----------------------------------------------------------------------

/// A combinatorial cube: the fixed coordinates select a face of an ambient
/// binary cube, and `corners` lists its vertex labels positionally — the
/// corner at position `p` sets the `t`-th free axis (ascending) to bit `t`
/// of `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cube {
    pub free_axes: Vec<u32>,
    pub fixed: Vec<(u32, u8)>,
    pub corners: Vec<Vertex>,
}

impl Cube {
    pub fn dim(&self) -> usize {
        self.free_axes.len()
    }

    /// The corner-label set, sorted.
    pub fn corner_set(&self) -> Vec<Vertex> {
        let mut c = self.corners.clone();
        c.sort_unstable();
        c
    }

    /// The 2·dim facet sub-cubes, with positional corner arrays re-derived
    /// over the remaining free axes (ascending).
    pub fn facet_cubes(&self) -> Vec<Cube> {
        let k = self.dim();
        let mut out = Vec::with_capacity(2 * k);
        for (t, &axis) in self.free_axes.iter().enumerate() {
            for value in 0..2u8 {
                let rest: Vec<u32> = self
                    .free_axes
                    .iter()
                    .copied()
                    .filter(|&a| a != axis)
                    .collect();
                let mut fixed = self.fixed.clone();
                fixed.push((axis, value));
                fixed.sort_unstable();
                let mut corners = Vec::with_capacity(1 << rest.len());
                for p in 0..(1u32 << rest.len()) {
                    // Rebuild the position in the parent cube.
                    let mut parent_pos = (value as u32) << t;
                    for (s, _) in rest.iter().enumerate() {
                        let bit = (p >> s) & 1;
                        let parent_bit = if s < t { s } else { s + 1 };
                        parent_pos |= bit << parent_bit;
                    }
                    corners.push(self.corners[parent_pos as usize]);
                }
                out.push(Cube { free_axes: rest, fixed, corners });
            }
        }
        out
    }
}

/// A pure cubical complex given by its top-dimensional cubes.
#[derive(Clone, Debug)]
pub struct CubicalComplex {
    pub ambient_bits: u32,
    pub cubes: Vec<Cube>,
}

/// The boundary of the `(k+1)`-dimensional binary cube: `2(k+1)` facet
/// `k`-cubes on the `2^{k+1}` corners, labeled by their binary expansion.
pub fn cube_boundary(k: u32) -> Result<CubicalComplex> {
    if k < 1 {
        return Err(Error::Precondition("cube boundary needs k ≥ 1".into()));
    }
    let bits = k + 1;
    let mut cubes = Vec::with_capacity(2 * bits as usize);
    for axis in 0..bits {
        for value in 0..2u8 {
            let free: Vec<u32> = (0..bits).filter(|&a| a != axis).collect();
            let mut corners = Vec::with_capacity(1 << k);
            for p in 0..(1u32 << k) {
                let mut x = (value as u32) << axis;
                for (t, &a) in free.iter().enumerate() {
                    x |= ((p >> t) & 1) << a;
                }
                corners.push(x as Vertex);
            }
            cubes.push(Cube { free_axes: free, fixed: vec![(axis, value)], corners });
        }
    }
    Ok(CubicalComplex { ambient_bits: bits, cubes })
}

/// Antipodal quotient of `cube_boundary(k)`: one `k`-cube class per axis
/// (the two facets of each axis pair are identified), corners relabeled by
/// `x ↦ min(x, complement(x))`, which maps classes bijectively onto
/// `0..2^k`.
pub fn antipodal_quotient_cubes(k: u32) -> Result<CubicalComplex> {
    let full: u32 = (1 << (k + 1)) - 1;
    let cc = cube_boundary(k)?;
    let cubes = cc
        .cubes
        .into_iter()
        .filter(|c| c.fixed == vec![(c.fixed[0].0, 0)])
        .map(|mut c| {
            for v in &mut c.corners {
                *v = (*v).min(full ^ *v);
            }
            c
        })
        .collect();
    Ok(CubicalComplex { ambient_bits: k + 1, cubes })
}

/// A pyramid: a cube base coned to an apex.
#[derive(Clone, Debug)]
pub struct Pyramid {
    pub apex: Vertex,
    pub base: Cube,
}

/// The pyramid decomposition of the antipodal quotient of the cubical
/// `k`-sphere: every facet `(k−1)`-cube of each of the `k+1` quotient
/// `k`-cubes is coned to that cube's center, labeled `2^k + axis`. Gives
/// `2k(k+1)` pyramids on `2^k + k + 1` vertices.
#[derive(Clone, Debug)]
pub struct PyramidDecomposition {
    pub vertex_count: u32,
    pub pyramids: Vec<Pyramid>,
}

pub fn pyramid_decomposition(k: u32) -> Result<PyramidDecomposition> {
    let quotient = antipodal_quotient_cubes(k)?;
    let mut pyramids = Vec::new();
    for cube in &quotient.cubes {
        let apex = (1u32 << k) + cube.fixed[0].0;
        for base in cube.facet_cubes() {
            pyramids.push(Pyramid { apex: apex as Vertex, base });
        }
    }
    Ok(PyramidDecomposition {
        vertex_count: (1 << k) + k + 1,
        pyramids,
    })
}

// ----------------------------------------------------------------------
// The two mirror five-tetrahedra cube triangulations
// ----------------------------------------------------------------------

/// A 3-cube triangulated into five tetrahedra (no interior vertex, no main
/// diagonal), together with the diagonal each of its six boundary squares
/// receives.
#[derive(Clone, Debug)]
pub struct FiveTetCube {
    pub tetrahedra: Vec<Simplex>,
    /// Six entries: (sorted corner labels of the square, its diagonal).
    pub square_diagonals: Vec<([Vertex; 4], (Vertex, Vertex))>,
}

/// Triangulates a positional 3-cube (see [`Cube`] for the corner
/// convention) into five tetrahedra. The central tetrahedron sits on the
/// odd-parity positions for `mirror = false` and on the even-parity
/// positions for `mirror = true`; the two versions induce opposite
/// diagonals on every boundary square.
pub fn cube3_five_tet(mirror: bool, corners: &[Vertex; 8]) -> Result<FiveTetCube> {
    let distinct: BTreeSet<Vertex> = corners.iter().copied().collect();
    if distinct.len() != 8 {
        return Err(Error::Precondition(
            "cube corners must be eight distinct labels".into(),
        ));
    }
    let central_parity: u32 = if mirror { 0 } else { 1 };
    let central: Vec<Vertex> = (0u32..8)
        .filter(|p| p.count_ones() % 2 == central_parity)
        .map(|p| corners[p as usize])
        .collect();
    let mut tetrahedra = vec![Simplex::new(central)?];
    for p in 0u32..8 {
        if p.count_ones() % 2 != central_parity {
            let t = vec![
                corners[p as usize],
                corners[(p ^ 1) as usize],
                corners[(p ^ 2) as usize],
                corners[(p ^ 4) as usize],
            ];
            tetrahedra.push(Simplex::new(t)?);
        }
    }
    let mut square_diagonals = Vec::with_capacity(6);
    for t in 0..3u32 {
        for value in 0..2u32 {
            let positions: Vec<u32> = (0u32..8).filter(|p| (p >> t) & 1 == value).collect();
            let mut sq: Vec<Vertex> = positions.iter().map(|&p| corners[p as usize]).collect();
            sq.sort_unstable();
            let mut diag: Vec<Vertex> = positions
                .iter()
                .filter(|p| p.count_ones() % 2 == central_parity)
                .map(|&p| corners[p as usize])
                .collect();
            diag.sort_unstable();
            square_diagonals.push((
                [sq[0], sq[1], sq[2], sq[3]],
                (diag[0], diag[1]),
            ));
        }
    }
    Ok(FiveTetCube { tetrahedra, square_diagonals })
}

/// The flat adaptor tetrahedron over a square whose two neighbouring
/// triangulations induce different diagonals: the simplex on the four
/// corners, whose two pairs of triangles realize both diagonals.
pub fn flat_adaptor(
    square: &[Vertex; 4],
    diag_a: (Vertex, Vertex),
    diag_b: (Vertex, Vertex),
) -> Result<Simplex> {
    let norm = |d: (Vertex, Vertex)| (d.0.min(d.1), d.0.max(d.1));
    let a = norm(diag_a);
    let b = norm(diag_b);
    if a == b {
        return Err(Error::Precondition(
            "square is coherently triangulated; no adaptor is needed".into(),
        ));
    }
    let corners: BTreeSet<Vertex> = square.iter().copied().collect();
    if corners.len() != 4 {
        return Err(Error::Precondition("square needs four distinct corners".into()));
    }
    for d in [a, b] {
        if !corners.contains(&d.0) || !corners.contains(&d.1) {
            return Err(Error::Precondition(format!(
                "diagonal ({} {}) is not spanned by the square's corners",
                d.0, d.1
            )));
        }
    }
    if a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1 {
        return Err(Error::Precondition(
            "the two diagonals of a square must be disjoint corner pairs".into(),
        ));
    }
    Simplex::new(corners.into_iter().collect())
}

// ----------------------------------------------------------------------
// Cube-quotient models of real projective 3-space
// ----------------------------------------------------------------------

/// Coherent diagonal choice on the twelve square classes of the antipodal
/// 3-cube quotient. The diagonals form two complete graphs, on corner
/// classes {1,2,4,7} and {0,3,5,6}, so the two pyramids over each square
/// class induce the same diagonal and the union needs no adaptors.
const RP3_SQUARE_DIAGONALS: [([Vertex; 4], (Vertex, Vertex)); 12] = [
    ([0, 1, 2, 3], (1, 2)),
    ([0, 1, 4, 5], (1, 4)),
    ([0, 1, 6, 7], (0, 6)),
    ([0, 2, 4, 6], (2, 4)),
    ([0, 2, 5, 7], (0, 5)),
    ([0, 3, 4, 7], (0, 3)),
    ([1, 2, 5, 6], (5, 6)),
    ([1, 3, 4, 6], (3, 6)),
    ([1, 3, 5, 7], (1, 7)),
    ([2, 3, 4, 5], (3, 5)),
    ([2, 3, 6, 7], (2, 7)),
    ([4, 5, 6, 7], (4, 7)),
];

/// The two tetrahedra triangulating a pyramid over a square with a chosen
/// diagonal: cone the square's two triangles to the apex.
fn pyramid_tets(
    apex: Vertex,
    square: &[Vertex; 4],
    diagonal: (Vertex, Vertex),
) -> Result<[Simplex; 2]> {
    let (d1, d2) = diagonal;
    let rest: Vec<Vertex> = square
        .iter()
        .copied()
        .filter(|&x| x != d1 && x != d2)
        .collect();
    if rest.len() != 2 {
        return Err(Error::Precondition(format!(
            "diagonal ({d1} {d2}) is not a corner pair of square {square:?}"
        )));
    }
    Ok([
        Simplex::new(vec![apex, d1, d2, rest[0]])?,
        Simplex::new(vec![apex, d1, d2, rest[1]])?,
    ])
}

/// The 12-vertex triangulation of real projective 3-space assembled from
/// the pyramid decomposition of the antipodal cube quotient: each of the
/// four quotient 3-cubes is coned from its own center (labels 8..12, the
/// cube fixing axis `t` getting center `8 + (t+1 mod 4)`), and every
/// square class receives the coherent diagonal of
/// [`RP3_SQUARE_DIAGONALS`]. 48 tetrahedra.
pub fn build_rp3_nice_12() -> Result<SimplicialComplex> {
    let quotient = antipodal_quotient_cubes(3)?;
    let diagonals: BTreeMap<[Vertex; 4], (Vertex, Vertex)> =
        RP3_SQUARE_DIAGONALS.iter().copied().collect();
    let mut tets: Vec<Simplex> = Vec::with_capacity(48);
    for cube in &quotient.cubes {
        let apex = 8 + ((cube.fixed[0].0 + 1) % 4);
        for sq in cube.facet_cubes() {
            let corners = sq.corner_set();
            let key: [Vertex; 4] = [corners[0], corners[1], corners[2], corners[3]];
            let diag = *diagonals.get(&key).ok_or_else(|| {
                Error::Construction(format!("no diagonal rule covers square {key:?}"))
            })?;
            tets.extend(pyramid_tets(apex as Vertex, &key, diag)?);
        }
    }
    Ok(SimplicialComplex::from_facets(tets))
}

/// Exhaustively fills a triangulated 2-sphere with tetrahedra drawn from
/// `candidates`: depth-first on the lexicographically smallest open
/// triangle, accepting a filling where every boundary triangle has exactly
/// one containing tetrahedron and every interior triangle exactly two.
/// Returns the first filling found (the search order is deterministic).
fn fill_ball_exhaustive(boundary: &[Simplex], candidates: &[Simplex]) -> Option<Vec<Simplex>> {
    let boundary_set: BTreeSet<Simplex> = boundary.iter().cloned().collect();
    let target = |t: &Simplex| if boundary_set.contains(t) { 1u32 } else { 2u32 };
    fn recurse(
        boundary_set: &BTreeSet<Simplex>,
        target: &dyn Fn(&Simplex) -> u32,
        candidates: &[Simplex],
        used: &mut Vec<bool>,
        counts: &mut BTreeMap<Simplex, u32>,
        chosen: &mut Vec<Simplex>,
    ) -> bool {
        // The lexicographically smallest triangle still short of its target.
        let open = counts
            .iter()
            .find(|(t, &c)| c < target(t))
            .map(|(t, _)| t.clone());
        let Some(open) = open else {
            // Saturated; since every chosen tetrahedron's triangles are in
            // `counts` and none exceeds its target, the filling is valid as
            // long as the boundary was reached (guaranteed: counts was
            // seeded with the boundary triangles).
            return true;
        };
        for i in 0..candidates.len() {
            if used[i] || !open.is_subset_of(&candidates[i]) {
                continue;
            }
            let tris = candidates[i].faces_with_len(3);
            if tris
                .iter()
                .any(|t| counts.get(t).copied().unwrap_or(0) + 1 > target(t))
            {
                continue;
            }
            used[i] = true;
            for t in &tris {
                *counts.entry(t.clone()).or_insert(0) += 1;
            }
            chosen.push(candidates[i].clone());
            if recurse(boundary_set, target, candidates, used, counts, chosen) {
                return true;
            }
            chosen.pop();
            for t in &tris {
                let c = counts.get_mut(t).expect("just incremented");
                *c -= 1;
                if *c == 0 && !boundary_set.contains(t) {
                    counts.remove(t);
                }
            }
            used[i] = false;
        }
        false
    }
    let mut counts: BTreeMap<Simplex, u32> =
        boundary.iter().map(|t| (t.clone(), 0)).collect();
    let mut used = vec![false; candidates.len()];
    let mut chosen = Vec::new();
    if recurse(
        &boundary_set,
        &target,
        candidates,
        &mut used,
        &mut counts,
        &mut chosen,
    ) {
        Some(chosen)
    } else {
        None
    }
}

/// The 11-vertex triangulation of real projective 3-space: remove the
/// open star of vertex 8 from the 12-vertex model (a coned cube), refill
/// the exposed cube boundary without its center — using only edges already
/// present on that boundary — and close the label gap. The refill is found
/// by exhaustive search and is unique: the five-tetrahedra triangulation
/// of the cube whose central tetrahedron is spanned by the diagonals.
pub fn build_rp3_11() -> Result<SimplicialComplex> {
    let twelve = build_rp3_nice_12()?;
    let removed: Vertex = 8;
    let hole = twelve.link(&Simplex::vertex(removed));
    let kept: Vec<Simplex> = twelve
        .facets()
        .iter()
        .filter(|f| !f.contains(removed))
        .cloned()
        .collect();
    let allowed_edges: BTreeSet<Simplex> = hole.faces_of_dim(1).into_iter().collect();
    let hole_vertices = hole.vertices();
    let mut candidates: Vec<Simplex> = Vec::new();
    for (i, &a) in hole_vertices.iter().enumerate() {
        for (j, &b) in hole_vertices.iter().enumerate().skip(i + 1) {
            for (k, &c) in hole_vertices.iter().enumerate().skip(j + 1) {
                for &d in hole_vertices.iter().skip(k + 1) {
                    let tet = Simplex::new(vec![a, b, c, d])?;
                    if tet
                        .faces_with_len(2)
                        .iter()
                        .all(|e| allowed_edges.contains(e))
                    {
                        candidates.push(tet);
                    }
                }
            }
        }
    }
    let filling = fill_ball_exhaustive(&hole.facets().to_vec(), &candidates).ok_or_else(
        || {
            Error::Construction(
                "the exposed cube boundary admits no tetrahedral filling over its own edges"
                    .into(),
            )
        },
    )?;
    let all = kept.into_iter().chain(filling);
    let complex = SimplicialComplex::from_facets(all);
    complex.relabel(|v| if v > removed { v - 1 } else { v })
}

// ----------------------------------------------------------------------
// Octahedral decompositions and the 24-cell double cover
// ----------------------------------------------------------------------

/// An octahedron inside a 3-dimensional complex: the star of a 4-valent
/// edge. The edge is one of the three diagonals; its link is the square
/// `cycle` (in cyclic order), whose two corner pairs `(cycle[0], cycle[2])`
/// and `(cycle[1], cycle[3])` are the other two diagonals.
#[derive(Clone, Debug)]
pub struct Octahedron {
    pub diagonal: (Vertex, Vertex),
    pub cycle: [Vertex; 4],
    pub star: Vec<Simplex>,
}

/// A partition of a 3-dimensional complex into edge-star octahedra.
#[derive(Clone, Debug)]
pub struct OctahedralDecomposition {
    pub octahedra: Vec<Octahedron>,
    /// The 4-valent octahedral edges, one per octahedron, sorted.
    pub diagonals: Vec<Simplex>,
}

/// If the link of `edge` (given by its cofacet list) is a single 4-cycle,
/// returns the cycle in canonical order: smallest vertex first, then its
/// smaller neighbor.
fn edge_link_four_cycle(edge: &Simplex, cofacets: &[&Simplex]) -> Option<[Vertex; 4]> {
    if cofacets.len() != 4 {
        return None;
    }
    let mut adjacency: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for f in cofacets {
        let opposite = f.difference(edge);
        let vs = opposite.vertices();
        if vs.len() != 2 {
            return None;
        }
        adjacency.entry(vs[0]).or_default().push(vs[1]);
        adjacency.entry(vs[1]).or_default().push(vs[0]);
    }
    if adjacency.len() != 4 || adjacency.values().any(|n| n.len() != 2) {
        return None;
    }
    let start = *adjacency.keys().next().expect("nonempty");
    let mut cycle = vec![start];
    let second = *adjacency[&start].iter().min().expect("two neighbors");
    cycle.push(second);
    while cycle.len() < 4 {
        let prev = cycle[cycle.len() - 2];
        let here = cycle[cycle.len() - 1];
        let next = *adjacency[&here].iter().find(|&&x| x != prev)?;
        if cycle.contains(&next) {
            return None;
        }
        cycle.push(next);
    }
    // Closure: the last vertex must neighbor the first.
    if !adjacency[&cycle[3]].contains(&cycle[0]) {
        return None;
    }
    Some([cycle[0], cycle[1], cycle[2], cycle[3]])
}

/// Decomposes a pure 3-dimensional complex into octahedra, each the full
/// star of a 4-valent edge whose link is a 4-cycle. A facet can contain
/// several such edges (the cone point of a coned cube contributes
/// spurious ones), so the partition is found by exact-cover search:
/// repeatedly cover the first uncovered facet with the star of one of its
/// 4-valent edges, backtracking on conflicts. The search order is
/// deterministic and the first partition found is returned; a complex
/// admitting none (e.g. the boundary of the 4-simplex, where every edge
/// is 3-valent) fails with a construction error.
pub fn octahedralize(c: &SimplicialComplex) -> Result<OctahedralDecomposition> {
    if c.dim() != 3 {
        return Err(Error::Precondition(format!(
            "octahedral decomposition needs a 3-dimensional complex, got dimension {}",
            c.dim()
        )));
    }
    let facets = c.facets();
    let mut edge_cofacets: BTreeMap<Simplex, Vec<usize>> = BTreeMap::new();
    for (i, f) in facets.iter().enumerate() {
        for e in f.faces_with_len(2) {
            edge_cofacets.entry(e).or_default().push(i);
        }
    }
    // Candidate octahedra: 4-valent edges with 4-cycle links, in edge order.
    struct Candidate {
        edge: Simplex,
        cycle: [Vertex; 4],
        star: [usize; 4],
    }
    let mut candidates: Vec<Candidate> = Vec::new();
    for (e, cof) in &edge_cofacets {
        let refs: Vec<&Simplex> = cof.iter().map(|&i| &facets[i]).collect();
        if let Some(cycle) = edge_link_four_cycle(e, &refs) {
            candidates.push(Candidate {
                edge: e.clone(),
                cycle,
                star: [cof[0], cof[1], cof[2], cof[3]],
            });
        }
    }
    let mut per_facet: Vec<Vec<usize>> = vec![Vec::new(); facets.len()];
    for (ci, cand) in candidates.iter().enumerate() {
        for &fi in &cand.star {
            per_facet[fi].push(ci);
        }
    }
    fn cover(
        candidates: &[Candidate],
        per_facet: &[Vec<usize>],
        covered: &mut [bool],
        chosen: &mut Vec<usize>,
    ) -> bool {
        let Some(next) = covered.iter().position(|&c| !c) else {
            return true;
        };
        for &ci in &per_facet[next] {
            let cand = &candidates[ci];
            if cand.star.iter().any(|&fi| covered[fi]) {
                continue;
            }
            for &fi in &cand.star {
                covered[fi] = true;
            }
            chosen.push(ci);
            if cover(candidates, per_facet, covered, chosen) {
                return true;
            }
            chosen.pop();
            for &fi in &cand.star {
                covered[fi] = false;
            }
        }
        false
    }
    let mut covered = vec![false; facets.len()];
    let mut chosen = Vec::new();
    if !cover(&candidates, &per_facet, &mut covered, &mut chosen) {
        let witness = covered
            .iter()
            .position(|&c| !c)
            .map(|i| facets[i].to_string())
            .unwrap_or_else(|| "the empty complex".into());
        return Err(Error::Construction(format!(
            "no partition into octahedral edge stars exists; first uncoverable facet: {witness}"
        )));
    }
    chosen.sort_unstable();
    let mut octahedra = Vec::with_capacity(chosen.len());
    let mut diagonals = Vec::with_capacity(chosen.len());
    for ci in chosen {
        let cand = &candidates[ci];
        let vs = cand.edge.vertices();
        octahedra.push(Octahedron {
            diagonal: (vs[0], vs[1]),
            cycle: cand.cycle,
            star: cand.star.iter().map(|&fi| facets[fi].clone()).collect(),
        });
        diagonals.push(cand.edge.clone());
    }
    Ok(OctahedralDecomposition { octahedra, diagonals })
}

/// The square link of vertex `v` inside an octahedron, in cyclic order:
/// the four octahedron vertices that are not `v` and not its antipode.
fn octahedron_vertex_square(oct: &Octahedron, v: Vertex) -> Option<[Vertex; 4]> {
    let (a, b) = oct.diagonal;
    if v == a || v == b {
        return Some(oct.cycle);
    }
    let i = oct.cycle.iter().position(|&x| x == v)?;
    Some([
        a,
        oct.cycle[(i + 1) % 4],
        b,
        oct.cycle[(i + 3) % 4],
    ])
}

/// Verifies that a 3-complex is covered two-to-one by the boundary complex
/// of the 24-cell: decomposes the complex into octahedra, builds the
/// double cover classified by a nontrivial mod-2 one-cocycle, decomposes
/// the cover into octahedra, and checks the 24-cell's local signature at
/// every cover vertex — six surrounding octahedra whose vertex-link
/// squares assemble into the boundary of a 3-cube (8 corners on 3 squares
/// each, 12 edges on 2 each, connected).
pub fn verify_24cell_cover(c: &SimplicialComplex) -> Result<CertStatus> {
    octahedralize(c)?;
    let cocycle = nontrivial_one_cocycle(c)?.ok_or_else(|| {
        Error::Construction(
            "no nontrivial mod-2 one-cocycle: the complex admits no connected double cover"
                .into(),
        )
    })?;
    let flips: std::collections::HashSet<Simplex> = cocycle.into_iter().collect();
    let offset = c.vertices().iter().max().copied().unwrap_or(0) + 1;
    let cover = double_cover(c, &flips, offset)?;
    if !cover.complex.is_connected() {
        return Err(Error::Construction(
            "the double cover classified by the chosen cocycle is disconnected".into(),
        ));
    }
    let co = octahedralize(&cover.complex)?;
    for v in cover.complex.vertices() {
        let squares: Vec<[Vertex; 4]> = co
            .octahedra
            .iter()
            .filter_map(|oct| octahedron_vertex_square(oct, v))
            .collect();
        if squares.len() != 6 {
            return Err(Error::Construction(format!(
                "cover vertex {v} lies in {} octahedra; a 24-cell vertex lies in 6",
                squares.len()
            )));
        }
        let mut corner_count: BTreeMap<Vertex, u32> = BTreeMap::new();
        let mut edge_count: BTreeMap<(Vertex, Vertex), u32> = BTreeMap::new();
        for sq in &squares {
            for i in 0..4 {
                *corner_count.entry(sq[i]).or_insert(0) += 1;
                let (x, y) = (sq[i], sq[(i + 1) % 4]);
                *edge_count.entry((x.min(y), x.max(y))).or_insert(0) += 1;
            }
        }
        if corner_count.len() != 8 || corner_count.values().any(|&k| k != 3) {
            return Err(Error::Construction(format!(
                "the six squares around cover vertex {v} do not close into a cube: \
                 expected 8 corners on 3 squares each, got {:?}",
                corner_count
            )));
        }
        if edge_count.len() != 12 || edge_count.values().any(|&k| k != 2) {
            return Err(Error::Construction(format!(
                "the six squares around cover vertex {v} do not close into a cube: \
                 expected 12 edges on 2 squares each, got {} edges",
                edge_count.len()
            )));
        }
        // Connectivity of the square adjacency graph.
        let mut reached = vec![false; 6];
        let mut stack = vec![0usize];
        reached[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..6 {
                if reached[j] {
                    continue;
                }
                let shares_edge = (0..4).any(|p| {
                    (0..4).any(|q| {
                        let e1 = {
                            let (x, y) = (squares[i][p], squares[i][(p + 1) % 4]);
                            (x.min(y), x.max(y))
                        };
                        let e2 = {
                            let (x, y) = (squares[j][q], squares[j][(q + 1) % 4]);
                            (x.min(y), x.max(y))
                        };
                        e1 == e2
                    })
                });
                if shares_edge {
                    reached[j] = true;
                    stack.push(j);
                }
            }
        }
        if !reached.iter().all(|&r| r) {
            return Err(Error::Construction(format!(
                "the six squares around cover vertex {v} fall into several components"
            )));
        }
    }
    Ok(CertStatus::certified(format!(
        "double cover on {} vertices splits into {} octahedra; every vertex figure \
         closes into a cube boundary",
        cover.complex.vertex_count(),
        co.octahedra.len()
    )))
}

// ----------------------------------------------------------------------
// The 21-vertex model of real projective 4-space
// ----------------------------------------------------------------------

/// A 3-cube class of the antipodal quotient of the 5-cube boundary: two
/// axes are fixed — the smaller at 0 (the antipodal normal form), the
/// larger at `level` — and the corners run positionally over the three
/// free axes (ascending), each label being the antipodal class
/// `min(x, ~x)` of its 5-bit corner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientCube {
    pub axes: (u32, u32),
    pub level: u8,
    pub corners: [Vertex; 8],
}

/// One five-tetrahedra mirror bit per quotient 3-cube, indexed in the
/// lexicographiccube order of [`rp4_quotient_cubes`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CubeAssignment(pub Vec<bool>);

impl CubeAssignment {
    pub fn zeros() -> Self {
        CubeAssignment(vec![false; 20])
    }

    /// Bit `i` of `bits` orients cube `i`.
    pub fn from_bits(bits: u32) -> Self {
        CubeAssignment((0..20).map(|i| (bits >> i) & 1 == 1).collect())
    }

    pub fn to_bits(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &b)| acc | ((b as u32) << i))
    }
}

/// The twenty 3-cube classes of the antipodal 5-cube boundary quotient,
/// in lexicographic (axis pair, level) order.
pub fn rp4_quotient_cubes() -> Vec<QuotientCube> {
    let mut cubes = Vec::with_capacity(20);
    for i in 0..5u32 {
        for j in (i + 1)..5 {
            for level in 0..2u8 {
                let free: Vec<u32> = (0..5).filter(|&a| a != i && a != j).collect();
                let mut corners = [0 as Vertex; 8];
                for (p, corner) in corners.iter_mut().enumerate() {
                    let mut x = (level as u32) << j;
                    for (t, &a) in free.iter().enumerate() {
                        x |= (((p as u32) >> t) & 1) << a;
                    }
                    *corner = x.min(31 ^ x) as Vertex;
                }
                cubes.push(QuotientCube { axes: (i, j), level, corners });
            }
        }
    }
    cubes
}

/// The 21-vertex triangulation of real projective 4-space induced by a
/// mirror-bit assignment, together with everything the construction
/// produces along the way.
#[derive(Debug)]
pub struct Rp4Nice {
    /// The full 4-complex: five cone neighborhoods glued along the cubical
    /// 3-skeleton. 21 vertices.
    pub complex: SimplicialComplex,
    /// The triangulated cubical 3-skeleton: the hundred five-tetrahedra
    /// pieces plus the flat adaptors. 16 vertices.
    pub three_skeleton: SimplicialComplex,
    pub cubes: Vec<QuotientCube>,
    pub assignment: CubeAssignment,
    /// Corner quadruples of the squares whose three cubes disagree.
    pub incoherent_squares: Vec<[Vertex; 4]>,
    /// One flat tetrahedron per incoherent square, parallel to it.
    pub adaptors: Vec<Simplex>,
    /// The two cone axes whose spheres carry each adaptor, parallel to
    /// `adaptors`.
    pub adaptor_spheres: Vec<[u32; 2]>,
    /// The five cone-neighborhood boundary 3-spheres, by axis.
    pub spheres: Vec<SimplicialComplex>,
    pub sphere_status: Vec<CertStatus>,
}

/// Builds the 21-vertex projective 4-space: triangulate each quotient
/// 3-cube by its assigned five-tetrahedra orientation, patch every
/// incoherent square class with a flat adaptor placed in exactly two of
/// the five cone spheres, verify each sphere, and glue the five cones
/// (apex `16 + axis`).
pub fn build_rp4_nice(assignment: &CubeAssignment) -> Result<Rp4Nice> {
    if assignment.0.len() != 20 {
        return Err(Error::Precondition(format!(
            "assignment must orient all 20 cubes, got {}",
            assignment.0.len()
        )));
    }
    let cubes = rp4_quotient_cubes();
    let fives: Vec<FiveTetCube> = cubes
        .iter()
        .zip(&assignment.0)
        .map(|(c, &mirror)| cube3_five_tet(mirror, &c.corners))
        .collect::<Result<_>>()?;
    let mut squares: BTreeMap<[Vertex; 4], Vec<(usize, (Vertex, Vertex))>> = BTreeMap::new();
    for (ci, five) in fives.iter().enumerate() {
        for (sq, diag) in &five.square_diagonals {
            squares.entry(*sq).or_default().push((ci, *diag));
        }
    }
    let mut incoherent_squares = Vec::new();
    let mut adaptors: Vec<Simplex> = Vec::new();
    let mut adaptor_spheres: Vec<[u32; 2]> = Vec::new();
    let mut sphere_extra: Vec<Vec<Simplex>> = vec![Vec::new(); 5];
    for (sq, entries) in &squares {
        if entries.len() != 3 {
            return Err(Error::Construction(format!(
                "square {sq:?} lies in {} cubes; the quotient shares every square \
                 class among exactly 3",
                entries.len()
            )));
        }
        let diags: BTreeSet<(Vertex, Vertex)> = entries.iter().map(|&(_, d)| d).collect();
        if diags.len() == 1 {
            continue;
        }
        let mut it = diags.iter();
        let (da, db) = (*it.next().expect("two"), *it.next().expect("two"));
        let adaptor = flat_adaptor(sq, da, db)?;
        // The square's three fixed axes, each shared by two of its cubes;
        // an axis whose two cubes disagree sends the adaptor into that
        // axis' cone sphere.
        let mut axis_entries: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (k, &(ci, _)) in entries.iter().enumerate() {
            axis_entries.entry(cubes[ci].axes.0).or_default().push(k);
            axis_entries.entry(cubes[ci].axes.1).or_default().push(k);
        }
        if axis_entries.len() != 3 || axis_entries.values().any(|v| v.len() != 2) {
            return Err(Error::Construction(format!(
                "square {sq:?} has a malformed containing-cube triple"
            )));
        }
        let hit: Vec<u32> = axis_entries
            .iter()
            .filter(|(_, ks)| entries[ks[0]].1 != entries[ks[1]].1)
            .map(|(&a, _)| a)
            .collect();
        if hit.len() != 2 {
            return Err(Error::Construction(format!(
                "incoherent square {sq:?} would enter {} cone spheres; a flat adaptor \
                 fits exactly 2",
                hit.len()
            )));
        }
        sphere_extra[hit[0] as usize].push(adaptor.clone());
        sphere_extra[hit[1] as usize].push(adaptor.clone());
        incoherent_squares.push(*sq);
        adaptor_spheres.push([hit[0], hit[1]]);
        adaptors.push(adaptor);
    }
    let mut spheres = Vec::with_capacity(5);
    let mut sphere_status = Vec::with_capacity(5);
    let mut complex: Option<SimplicialComplex> = None;
    for axis in 0..5u32 {
        let mut tets: Vec<Simplex> = Vec::new();
        for (ci, cube) in cubes.iter().enumerate() {
            if cube.axes.0 == axis || cube.axes.1 == axis {
                tets.extend(fives[ci].tetrahedra.iter().cloned());
            }
        }
        tets.extend(sphere_extra[axis as usize].iter().cloned());
        let sphere = SimplicialComplex::from_facets(tets);
        let status = sphere_check_with(&sphere, 3, &SphereOptions::for_links(0));
        if !status.passed() {
            return Err(Error::Construction(format!(
                "cone sphere around axis {axis} fails the 3-sphere check: {}",
                status.evidence().detail
            )));
        }
        let cone = sphere.cone((16 + axis) as Vertex)?;
        complex = Some(match complex {
            None => cone,
            Some(acc) => acc.union(&cone),
        });
        spheres.push(sphere);
        sphere_status.push(status);
    }
    let three_skeleton = SimplicialComplex::from_facets(
        fives
            .iter()
            .flat_map(|f| f.tetrahedra.iter().cloned())
            .chain(adaptors.iter().cloned()),
    );
    Ok(Rp4Nice {
        complex: complex.expect("five cones"),
        three_skeleton,
        cubes,
        assignment: assignment.clone(),
        incoherent_squares,
        adaptors,
        adaptor_spheres,
        spheres,
        sphere_status,
    })
}

/// Scans all 2²⁰ mirror-bit assignments and returns the minimum number of
/// incoherent square classes together with every assignment attaining it,
/// in ascending binary order. Exhaustive, not symmetry-reduced.
pub fn search_min_incoherent() -> Result<(u32, Vec<CubeAssignment>)> {
    use rayon::prelude::*;
    let cubes = rp4_quotient_cubes();
    let fives: Vec<FiveTetCube> = cubes
        .iter()
        .map(|c| cube3_five_tet(false, &c.corners))
        .collect::<Result<_>>()?;
    let mut squares: BTreeMap<[Vertex; 4], Vec<(usize, bool)>> = BTreeMap::new();
    for (ci, five) in fives.iter().enumerate() {
        for (sq, diag) in &five.square_diagonals {
            // Orientation of this cube's diagonal relative to the square's
            // canonical one (the diagonal through its smallest corner);
            // flipping the cube's mirror bit flips it.
            let bit = diag.0 != sq[0] && diag.1 != sq[0];
            squares.entry(*sq).or_default().push((ci, bit));
        }
    }
    let mut triples: Vec<[(usize, bool); 3]> = Vec::with_capacity(squares.len());
    for (sq, entries) in &squares {
        if entries.len() != 3 {
            return Err(Error::Construction(format!(
                "square {sq:?} lies in {} cubes; expected 3",
                entries.len()
            )));
        }
        triples.push([entries[0], entries[1], entries[2]]);
    }
    let counts: Vec<u32> = (0u32..1 << 20)
        .into_par_iter()
        .map(|a| {
            triples
                .iter()
                .filter(|t| {
                    let s: u32 = t
                        .iter()
                        .map(|&(ci, b)| ((a >> ci) & 1) ^ (b as u32))
                        .sum();
                    s != 0 && s != 3
                })
                .count() as u32
        })
        .collect();
    let min = *counts.iter().min().expect("nonempty scan");
    let argmins: Vec<CubeAssignment> = counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c == min)
        .map(|(a, _)| CubeAssignment::from_bits(a as u32))
        .collect();
    Ok((min, argmins))
}

/// Cuts the Klein-bottle pair out of the 21-vertex projective 4-space:
/// returns the cubical hypersurface separating the cone neighborhoods of
/// apexes 16 and 17 (a closed 3-pseudomanifold on the twelve cubes whose
/// axis pair meets {0,1} once), and the triangulated Klein bottle bounding
/// six of those twelve cubes — the axis-0 family with cube ((0,2), level 0)
/// traded for ((1,3), level 0). Each boundary square is triangulated by
/// the solid-side cube's induced diagonal, so the surface is a subcomplex
/// of both the hypersurface and the full space.
pub fn extract_klein_bottle(rp4: &Rp4Nice) -> Result<(SimplicialComplex, SimplicialComplex)> {
    let (apex_s, apex_t): (Vertex, Vertex) = (16, 17);
    let neighborhood = SimplicialComplex::from_facets(
        rp4.complex
            .facets()
            .iter()
            .filter(|f| f.contains(apex_s) || f.contains(apex_t))
            .cloned(),
    );
    let hypersurface = SimplicialComplex::from_facets(boundary_faces(&neighborhood));
    let in_family = |c: &QuotientCube, axis: u32| c.axes.0 == axis || c.axes.1 == axis;
    let m_cubes: Vec<usize> = (0..rp4.cubes.len())
        .filter(|&i| {
            let c = &rp4.cubes[i];
            (in_family(c, 0) as u32) + (in_family(c, 1) as u32) == 1
        })
        .collect();
    if m_cubes.len() != 12 {
        return Err(Error::Construction(format!(
            "the separating hypersurface spans {} cubes; expected 12",
            m_cubes.len()
        )));
    }
    let chosen: BTreeSet<usize> = m_cubes
        .iter()
        .copied()
        .filter(|&i| {
            let c = &rp4.cubes[i];
            if in_family(c, 0) {
                !(c.axes == (0, 2) && c.level == 0)
            } else {
                c.axes == (1, 3) && c.level == 0
            }
        })
        .collect();
    if chosen.len() != 6 {
        return Err(Error::Construction(format!(
            "the solid side selects {} cubes; expected 6",
            chosen.len()
        )));
    }
    let fives: Vec<(usize, FiveTetCube)> = m_cubes
        .iter()
        .map(|&i| {
            cube3_five_tet(rp4.assignment.0[i], &rp4.cubes[i].corners).map(|f| (i, f))
        })
        .collect::<Result<_>>()?;
    let mut shared: BTreeMap<[Vertex; 4], Vec<(usize, (Vertex, Vertex))>> = BTreeMap::new();
    for (i, five) in &fives {
        for (sq, diag) in &five.square_diagonals {
            shared.entry(*sq).or_default().push((*i, *diag));
        }
    }
    let internal: Vec<(&[Vertex; 4], &Vec<(usize, (Vertex, Vertex))>)> = shared
        .iter()
        .filter(|(_, entries)| entries.len() == 2)
        .collect();
    if internal.len() != 36 {
        return Err(Error::Construction(format!(
            "the hypersurface has {} internal square classes; expected 36",
            internal.len()
        )));
    }
    let mut triangles: Vec<Simplex> = Vec::new();
    let mut interface_count = 0;
    for (sq, entries) in internal {
        let inside: Vec<&(usize, (Vertex, Vertex))> = entries
            .iter()
            .filter(|(i, _)| chosen.contains(i))
            .collect();
        if inside.len() != 1 {
            continue;
        }
        interface_count += 1;
        let (d1, d2) = inside[0].1;
        for &x in sq.iter().filter(|&&x| x != d1 && x != d2) {
            triangles.push(Simplex::new(vec![d1, d2, x])?);
        }
    }
    if interface_count != 16 {
        return Err(Error::Construction(format!(
            "the solid side is bounded by {interface_count} squares; expected 16"
        )));
    }
    let surface = SimplicialComplex::from_facets(triangles);
    for t in surface.facets() {
        if !hypersurface.contains_face(t) || !rp4.complex.contains_face(t) {
            return Err(Error::Construction(format!(
                "surface triangle {t} is not a face of the ambient space"
            )));
        }
    }
    Ok((hypersurface, surface))
}

// ----------------------------------------------------------------------
// Equilibrium models of complex projective spaces
// ----------------------------------------------------------------------

/// The equilibrium model of the complex projective line: cone the
/// 3-vertex circle over two apexes rotated by the doubling map. A
/// 2-sphere on 5 vertices.
pub fn build_cp1() -> Result<EquilibriumAssembly> {
    let circle = cyclic_polytope_boundary(3, 2)?;
    assemble_perfect_equilibrium(&circle, 1)
}

/// The equilibrium model of the complex projective plane: cone the cyclic
/// 3-sphere on 7 vertices over three apexes rotated by the doubling map.
/// 10 vertices, 42 facets, no assembly defects.
pub fn build_cp2_equilibrium() -> Result<EquilibriumAssembly> {
    let sphere = cyclic_polytope_boundary(7, 4)?;
    assemble_perfect_equilibrium(&sphere, 2)
}

/// The new-vertex label blocks used by the 84-vertex repair of the
/// equilibrium model of complex projective 3-space.
const CP3_ONE_SIDED_BASE: Vertex = 19;
const CP3_FULL_ORBIT_BASES: [Vertex; 4] = [24, 39, 54, 69];
/// Shift-orbit generators of the four triangle orbits that get full
/// stellar subdivisions, in subdivision order.
const CP3_FULL_ORBIT_GENERATORS: [[Vertex; 3]; 4] =
    [[3, 5, 12], [3, 10, 12], [5, 6, 9], [6, 9, 10]];

/// The equilibrium model of complex projective 3-space together with the
/// assembly it repairs.
#[derive(Debug)]
pub struct Cp3Build {
    /// The raw four-ball assembly on 19 vertices, including its defect
    /// report (three shift orbits of disconnected-link faces).
    pub assembly: EquilibriumAssembly,
    /// The repaired 84-vertex combinatorial manifold.
    pub complex: SimplicialComplex,
}

/// Assembles complex projective 3-space from the 200-facet 5-sphere: cone
/// it over four apexes rotated by the doubling map (19 vertices), then
/// repair the disconnected-link defects by five one-sided stellar
/// subdivisions at the short triangle orbit (new vertices 19..24, chosen
/// side transported along the shift from the orbit representative) and
/// sixty full stellar subdivisions at four triangle orbits (new vertices
/// 24..84, orbit-sequential). The result is gated on being a closed
/// 6-pseudomanifold all of whose vertex links are closed pseudomanifolds
/// with the mod-2 homology of the 5-sphere.
pub fn build_cp3_equilibrium() -> Result<Cp3Build> {
    let sphere = crate::data::load_union(&["s5-200-h1", "s5-200-h2", "s5-200-h3"])?;
    let assembly = assemble_perfect_equilibrium(&sphere, 3)?;
    let mut complex = assembly.union.clone();
    // The shift symmetry of the union: rotate the base labels, fix the
    // four apexes.
    let tau_union = Permutation::from_images(
        (0..19u32).map(|v| (v, if v < 15 { (v + 1) % 15 } else { v })),
    )?;
    // One-sided subdivisions at the five triangles {j, 5+j, 10+j}: the
    // side is chosen once, at j = 0, as the link component of the
    // lexicographically smallest facet through the triangle, and
    // transported to the other four triangles by the shift.
    let rep = Simplex::new(vec![0, 5, 10])?;
    let rep_witness = complex
        .facets()
        .iter()
        .filter(|f| rep.is_subset_of(f))
        .min()
        .map(|f| f.difference(&rep))
        .ok_or_else(|| {
            Error::Construction("the short defect triangle has no cofacet".into())
        })?;
    for j in 0..5u32 {
        let mut shift = Permutation::identity();
        for _ in 0..j {
            shift = tau_union.compose(&shift);
        }
        let triangle = shift.apply_simplex(&rep);
        let witness = shift.apply_simplex(&rep_witness);
        complex =
            complex.stellar_subdivide_in_component(&triangle, CP3_ONE_SIDED_BASE + j, &witness)?;
    }
    // Full subdivisions at the four long triangle orbits.
    for (gen, base) in CP3_FULL_ORBIT_GENERATORS.iter().zip(CP3_FULL_ORBIT_BASES) {
        for j in 0..15u32 {
            let triangle = Simplex::new(gen.iter().map(|&v| (v + j) % 15).collect())?;
            complex = complex.stellar_subdivide(&triangle, base + j)?;
        }
    }
    if complex.vertex_count() != 84 {
        return Err(Error::Construction(format!(
            "repaired complex has {} vertices, expected 84",
            complex.vertex_count()
        )));
    }
    if !crate::recognition::is_closed_pseudomanifold(&complex, 6) {
        return Err(Error::Construction(
            "repaired complex is not a closed 6-pseudomanifold".into(),
        ));
    }
    let sphere_signature = vec![1, 0, 0, 0, 0, 1];
    for v in complex.vertices() {
        let link = complex.link(&Simplex::vertex(v));
        if !crate::recognition::is_closed_pseudomanifold(&link, 5) {
            return Err(Error::Construction(format!(
                "link of vertex {v} is not a closed 5-pseudomanifold"
            )));
        }
        if crate::homology::betti_gf2(&link)? != sphere_signature {
            return Err(Error::Construction(format!(
                "link of vertex {v} does not have the mod-2 homology of the 5-sphere"
            )));
        }
    }
    Ok(Cp3Build { assembly, complex })
}

/// The three structure maps of the 84-vertex model as label permutations:
/// the shift, the negation, and the doubling map, each extended over the
/// four apexes and the 65 subdivision vertices.
pub fn cp3_structure_maps() -> Result<[Permutation; 3]> {
    let mut tau: Vec<(Vertex, Vertex)> = Vec::with_capacity(84);
    let mut rho: Vec<(Vertex, Vertex)> = Vec::with_capacity(84);
    let mut sigma: Vec<(Vertex, Vertex)> = Vec::with_capacity(84);
    for v in 0..15u32 {
        tau.push((v, (v + 1) % 15));
        rho.push((v, (15 - v) % 15));
        sigma.push((v, (2 * v) % 15));
    }
    for a in 15..19u32 {
        tau.push((a, a));
        rho.push((a, a));
        // The doubling map rotates the four cone balls.
        sigma.push((a, 15 + ((a - 15 + 1) % 4)));
    }
    for j in 0..5u32 {
        tau.push((19 + j, 19 + (j + 1) % 5));
        rho.push((19 + j, 19 + (5 - j) % 5));
        sigma.push((19 + j, 19 + (2 * j) % 5));
    }
    // The negation and doubling maps permute the four long orbits:
    // negation swaps the first with the second and the third with the
    // fourth; doubling sends first→fourth→first and second→third→second,
    // acting by j ↦ −j and j ↦ 2j on orbit positions respectively.
    let rho_orbit = [1usize, 0, 3, 2];
    let sigma_orbit = [3usize, 2, 1, 0];
    for (o, &base) in CP3_FULL_ORBIT_BASES.iter().enumerate() {
        for j in 0..15u32 {
            tau.push((base + j, base + (j + 1) % 15));
            rho.push((
                base + j,
                CP3_FULL_ORBIT_BASES[rho_orbit[o]] + (15 - j) % 15,
            ));
            sigma.push((
                base + j,
                CP3_FULL_ORBIT_BASES[sigma_orbit[o]] + (2 * j) % 15,
            ));
        }
    }
    Ok([
        Permutation::from_images(tau)?,
        Permutation::from_images(rho)?,
        Permutation::from_images(sigma)?,
    ])
}

// ----------------------------------------------------------------------
// The 15-vertex real projective 3-space from the fixed-point locus
// ----------------------------------------------------------------------

/// The twelve triangles of the 8-vertex 2-sphere whose rotated cones
/// assemble the 12-vertex precursor of the fixed-point model.
const FIXED_SPHERE_TRIANGLES: [[Vertex; 3]; 12] = [
    [0, 1, 2],
    [1, 2, 3],
    [4, 5, 6],
    [5, 6, 7],
    [0, 2, 4],
    [2, 4, 6],
    [1, 3, 5],
    [3, 5, 7],
    [0, 1, 5],
    [0, 4, 5],
    [2, 3, 7],
    [2, 6, 7],
];

/// Builds the 15-vertex model of real projective 3-space: cone the
/// 8-vertex sphere over four apexes rotated by the order-4 permutation
/// (1 2 4 7)(3 6), then repair the three disconnected-link edges by
/// one-sided stellar subdivisions — new vertices 12, 13, 14 in sorted
/// edge order, the side at the edge (5 6) being the rotation image of the
/// side chosen at (3 5).
pub fn build_rp3_from_fixed_points() -> Result<SimplicialComplex> {
    let sphere = SimplicialComplex::from_facets(
        FIXED_SPHERE_TRIANGLES
            .iter()
            .map(|t| Simplex::new(t.to_vec()))
            .collect::<Result<Vec<_>>>()?,
    );
    let rot = Permutation::from_cycles(&[vec![1, 2, 4, 7], vec![3, 6]])?;
    let mut complex: Option<SimplicialComplex> = None;
    let mut image = sphere;
    for t in 0..4u32 {
        let cone = image.cone(8 + t)?;
        complex = Some(match complex {
            None => cone,
            Some(acc) => acc.union(&cone),
        });
        image = rot.apply_complex(&image);
    }
    let mut complex = complex.expect("four cones");
    // The extension of the rotation over the apexes is an automorphism.
    let rot_hat = Permutation::from_images(
        (0..12u32).map(|v| {
            if v < 8 {
                (v, rot.apply(v))
            } else {
                (v, 8 + ((v - 8 + 1) % 4))
            }
        }),
    )?;
    let defect_edges = [
        Simplex::new(vec![0, 5])?,
        Simplex::new(vec![3, 5])?,
        Simplex::new(vec![5, 6])?,
    ];
    for e in &defect_edges {
        let comps = complex.link(e).connected_components();
        if comps.len() != 2 {
            return Err(Error::Construction(format!(
                "edge {e} has {} link components; the fixed-point model repairs \
                 exactly the two-component edges",
                comps.len()
            )));
        }
    }
    let lex_witness = |c: &SimplicialComplex, e: &Simplex| -> Result<Simplex> {
        c.facets()
            .iter()
            .filter(|f| e.is_subset_of(f))
            .min()
            .map(|f| f.difference(e))
            .ok_or_else(|| Error::Construction(format!("edge {e} has no cofacet")))
    };
    let w05 = lex_witness(&complex, &defect_edges[0])?;
    complex = complex.stellar_subdivide_in_component(&defect_edges[0], 12, &w05)?;
    let w35 = lex_witness(&complex, &defect_edges[1])?;
    complex = complex.stellar_subdivide_in_component(&defect_edges[1], 13, &w35)?;
    // (5 6) is the rotation image of (3 5); transport the chosen side.
    let w56 = rot_hat.apply_simplex(&w35);
    complex = complex.stellar_subdivide_in_component(&defect_edges[2], 14, &w56)?;
    Ok(complex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::is_invariant;

    #[test]
    fn cyclic_polytope_small_counts() {
        assert_eq!(cyclic_polytope_boundary(6, 4).unwrap().facet_count(), 9);
        assert_eq!(cyclic_polytope_boundary(7, 4).unwrap().facet_count(), 14);
        // Simplex boundary: every d-subset of d+1 vertices.
        assert_eq!(cyclic_polytope_boundary(5, 4).unwrap().facet_count(), 5);
        // Polygon.
        assert_eq!(cyclic_polytope_boundary(7, 2).unwrap().facet_count(), 7);
    }

    #[test]
    fn cyclic_polytope_seven_four_is_the_two_orbit_complex() {
        let c = cyclic_polytope_boundary(7, 4).unwrap();
        let shift = Permutation::cyclic_shift(7);
        let mut expected: BTreeSet<Simplex> = BTreeSet::new();
        for gen in [vec![0, 1, 2, 3], vec![0, 1, 3, 4]] {
            let seed = Simplex::new(gen).unwrap();
            for s in simplex_orbit(&seed, std::slice::from_ref(&shift), 100).unwrap() {
                expected.insert(s);
            }
        }
        let got: BTreeSet<Simplex> = c.facets().iter().cloned().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn trigonometric_hull_matches_exact_cyclic_on_seven_vertices() {
        let spec = KCyclicSpec::new(vec![1, 2], 7).unwrap();
        let (hull, status) = k_cyclic_boundary(&spec, 128).unwrap();
        assert!(status.is_certified());
        let gale = cyclic_polytope_boundary(7, 4).unwrap();
        assert_eq!(hull, gale);
    }

    #[test]
    fn trigonometric_hull_three_frequencies_has_225_facets() {
        let spec = KCyclicSpec::new(vec![1, 2, 4], 15).unwrap();
        let (hull, status) = k_cyclic_boundary(&spec, 256).unwrap();
        assert!(status.is_certified());
        assert_eq!(hull.facet_count(), 225);
        assert_eq!(hull.dim(), 5);
        let shift = Permutation::cyclic_shift(15);
        assert!(is_invariant(&hull, std::slice::from_ref(&shift)));
    }

    #[test]
    fn invalid_specs_are_rejected() {
        assert!(KCyclicSpec::new(vec![], 7).is_err());
        assert!(KCyclicSpec::new(vec![1, 2], 4).is_err());
        assert!(KCyclicSpec::new(vec![1, 8], 7).is_err());
        assert!(KCyclicSpec::new(vec![7], 7).is_err());
    }

    #[test]
    fn bicyclic_two_is_the_cyclic_polytope() {
        let b = bicyclic_hopf(2).unwrap();
        assert_eq!(b.sphere, cyclic_polytope_boundary(7, 4).unwrap());
        assert_eq!(b.torus.facet_count(), 14);
        assert_eq!(b.torus_orbit_generators[0].len(), 1);
        assert_eq!(b.torus_orbit_generators[1].len(), 1);
        assert_eq!(
            b.torus_orbit_generators[0][0],
            Simplex::new(vec![0, 1, 2, 3]).unwrap()
        );
        assert_eq!(
            b.torus_orbit_generators[1][0],
            Simplex::new(vec![0, 1, 3, 4]).unwrap()
        );
    }

    #[test]
    fn bicyclic_three_splits_into_two_solid_tori_of_two_orbits() {
        let b = bicyclic_hopf(3).unwrap();
        assert_eq!(b.sphere.facet_count(), 52);
        assert_eq!(b.torus.facet_count(), 26);
        assert_eq!(b.torus.euler_characteristic(), 0);
        assert_eq!(b.torus_orbit_generators[0].len(), 2);
        assert_eq!(b.torus_orbit_generators[1].len(), 2);
        assert_eq!(
            b.torus_orbit_generators[0],
            vec![
                Simplex::new(vec![0, 1, 2, 3]).unwrap(),
                Simplex::new(vec![0, 1, 3, 4]).unwrap()
            ]
        );
        assert_eq!(
            b.torus_orbit_generators[1],
            vec![
                Simplex::new(vec![0, 1, 4, 5]).unwrap(),
                Simplex::new(vec![0, 1, 5, 9]).unwrap()
            ]
        );
        assert_eq!(
            b.solid_tori[0].facet_count() + b.solid_tori[1].facet_count(),
            52
        );
    }

    #[test]
    fn pyramid_decomposition_counts() {
        let p1 = pyramid_decomposition(1).unwrap();
        assert_eq!(p1.pyramids.len(), 4);
        assert_eq!(p1.vertex_count, 4);
        // Each pyramid over a 0-cube is an edge.
        assert!(p1.pyramids.iter().all(|p| p.base.corners.len() == 1));
        let p3 = pyramid_decomposition(3).unwrap();
        assert_eq!(p3.pyramids.len(), 24);
        assert_eq!(p3.vertex_count, 12);
        let p4 = pyramid_decomposition(4).unwrap();
        assert_eq!(p4.pyramids.len(), 40);
        assert_eq!(p4.vertex_count, 21);
    }

    #[test]
    fn five_tet_cube_structure() {
        let corners: [Vertex; 8] = [0, 1, 2, 3, 4, 5, 6, 7];
        let a = cube3_five_tet(false, &corners).unwrap();
        assert_eq!(a.tetrahedra.len(), 5);
        assert_eq!(a.square_diagonals.len(), 6);
        assert_eq!(a.tetrahedra[0], Simplex::new(vec![1, 2, 4, 7]).unwrap());
        let b = cube3_five_tet(true, &corners).unwrap();
        assert_eq!(b.tetrahedra[0], Simplex::new(vec![0, 3, 5, 6]).unwrap());
        // Same squares, opposite diagonals.
        for ((sq_a, d_a), (sq_b, d_b)) in
            a.square_diagonals.iter().zip(b.square_diagonals.iter())
        {
            assert_eq!(sq_a, sq_b);
            assert_ne!(d_a, d_b);
            let all: BTreeSet<Vertex> = sq_a.iter().copied().collect();
            let used: BTreeSet<Vertex> = [d_a.0, d_a.1, d_b.0, d_b.1].into_iter().collect();
            assert_eq!(all, used);
        }
        // Both versions triangulate the cube: 5 tetrahedra, union of
        // volumes checked combinatorially via the boundary squares above.
        let ca = SimplicialComplex::from_facets(a.tetrahedra.clone());
        assert_eq!(ca.f_vector(), vec![8, 18, 16, 5]);
    }

    #[test]
    fn rp3_twelve_vertex_model() {
        let c = build_rp3_nice_12().unwrap();
        assert_eq!(c.f_vector(), vec![12, 60, 96, 48]);
        assert_eq!(crate::homology::betti_gf2(&c).unwrap(), vec![1, 1, 1, 1]);
        let stored = crate::data::load_complex("rp3-nice-12").unwrap();
        assert_eq!(c, stored);
    }

    #[test]
    fn rp3_eleven_vertex_model() {
        let c = build_rp3_11().unwrap();
        assert_eq!(c.f_vector(), vec![11, 52, 82, 41]);
        assert_eq!(crate::homology::betti_gf2(&c).unwrap(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn octahedral_decomposition_of_the_twelve_vertex_model() {
        let c = build_rp3_nice_12().unwrap();
        let oct = octahedralize(&c).unwrap();
        assert_eq!(oct.octahedra.len(), 12);
        let covered: usize = oct.octahedra.iter().map(|o| o.star.len()).sum();
        assert_eq!(covered, 48);
        // The twelve octahedral diagonals form two complete graphs on the
        // two central corner classes.
        let mut class_edges: BTreeMap<bool, usize> = BTreeMap::new();
        for d in &oct.diagonals {
            let vs = d.vertices();
            let in_first = [1, 2, 4, 7].contains(&vs[0]);
            assert_eq!(in_first, [1, 2, 4, 7].contains(&vs[1]));
            *class_edges.entry(in_first).or_insert(0) += 1;
        }
        assert_eq!(class_edges[&true], 6);
        assert_eq!(class_edges[&false], 6);
    }

    #[test]
    fn octahedralize_rejects_the_simplex_boundary() {
        let c =
            SimplicialComplex::simplex_boundary(&Simplex::new(vec![0, 1, 2, 3, 4]).unwrap());
        assert!(octahedralize(&c).is_err());
    }

    #[test]
    fn twelve_vertex_model_is_covered_by_the_24cell() {
        let c = build_rp3_nice_12().unwrap();
        let status = verify_24cell_cover(&c).unwrap();
        assert!(status.is_certified());
    }

    #[test]
    fn quotient_cube_catalogue() {
        let cubes = rp4_quotient_cubes();
        assert_eq!(cubes.len(), 20);
        assert!(cubes.iter().all(|c| c.corners.iter().all(|&v| v < 16)));
        let keys: BTreeSet<(u32, u32, u8)> = cubes
            .iter()
            .map(|c| (c.axes.0, c.axes.1, c.level))
            .collect();
        assert_eq!(keys.len(), 20);
        // Each corner class supports ten of the twenty cubes.
        let mut count: BTreeMap<Vertex, u32> = BTreeMap::new();
        for c in &cubes {
            for &v in &c.corners {
                *count.entry(v).or_insert(0) += 1;
            }
        }
        assert_eq!(count.len(), 16);
        assert!(count.values().all(|&k| k == 10));
    }

    #[test]
    fn rp4_nice_baseline_build() {
        let rp4 = build_rp4_nice(&CubeAssignment::zeros()).unwrap();
        assert_eq!(rp4.incoherent_squares.len(), 20);
        assert_eq!(rp4.adaptors.len(), 20);
        assert_eq!(rp4.three_skeleton.f_vector(), vec![16, 100, 200, 120]);
        assert_eq!(rp4.complex.f_vector(), vec![21, 180, 520, 600, 240]);
        assert_eq!(
            crate::homology::betti_gf2(&rp4.complex).unwrap(),
            vec![1, 1, 1, 1, 1]
        );
        // Every adaptor sits in exactly two cone spheres; forty placements.
        assert_eq!(rp4.adaptor_spheres.len(), 20);
        let placements: usize = rp4
            .spheres
            .iter()
            .map(|s| s.facet_count())
            .sum::<usize>();
        assert_eq!(placements, 5 * 40 + 40);
        assert!(rp4.sphere_status.iter().all(|s| s.passed()));
        // The shipped copy keeps its original 1-based labels; the builder
        // relabels by quotient class, so compare up to isomorphism.
        let stored = crate::data::load_complex("rp4-nice-21").unwrap();
        assert!(crate::symmetry::find_isomorphism(&rp4.complex, &stored).is_some());
    }

    #[test]
    fn klein_bottle_extraction() {
        let rp4 = build_rp4_nice(&CubeAssignment::zeros()).unwrap();
        let (hypersurface, surface) = extract_klein_bottle(&rp4).unwrap();
        assert!(crate::recognition::is_closed_pseudomanifold(
            &hypersurface,
            3
        ));
        assert_eq!(hypersurface.euler_characteristic(), 0);
        let reference = crate::permcycle::permuted_difference_cycle(&[1, 1, 2, 5], 9).unwrap();
        assert_eq!(
            crate::homology::betti_gf2(&hypersurface).unwrap(),
            crate::homology::betti_gf2(&reference).unwrap()
        );
        assert_eq!(surface.f_vector(), vec![16, 48, 32]);
        assert_eq!(surface.euler_characteristic(), 0);
        assert!(surface.is_connected());
        assert_eq!(
            crate::homology::betti_gf2(&surface).unwrap(),
            vec![1, 2, 1]
        );
        assert_eq!(
            crate::homology::betti_rational(&surface).unwrap(),
            vec![1, 1, 0]
        );
    }

    #[test]
    fn mirror_assignment_search() {
        let (min, argmins) = search_min_incoherent().unwrap();
        assert_eq!(min, 20);
        assert_eq!(argmins.len(), 1920);
        assert_eq!(argmins[0], CubeAssignment::zeros());
        assert!(argmins.windows(2).all(|w| w[0].to_bits() < w[1].to_bits()));
    }

    #[test]
    fn cp1_is_a_two_sphere() {
        let a = build_cp1().unwrap();
        assert_eq!(a.union.f_vector(), vec![5, 9, 6]);
        assert!(a.defects.is_empty());
        assert!(a.perfect.as_ref().unwrap().passed());
        assert_eq!(
            crate::homology::betti_rational(&a.union).unwrap(),
            vec![1, 0, 1]
        );
    }

    #[test]
    fn cp2_equilibrium_model() {
        let a = build_cp2_equilibrium().unwrap();
        assert_eq!(a.union.vertex_count(), 10);
        assert_eq!(a.union.facet_count(), 42);
        assert!(a.defects.is_empty());
        assert!(a.perfect.as_ref().unwrap().passed());
        assert_eq!(
            crate::homology::betti_rational(&a.union).unwrap(),
            vec![1, 0, 1, 0, 1]
        );
        assert_eq!(crate::symmetry::automorphism_count(&a.union, 10_000), 42);
    }

    #[test]
    fn cp3_equilibrium_model() {
        let b = build_cp3_equilibrium().unwrap();
        let mut orbits = b.assembly.defects.orbits.clone();
        orbits.sort_by(|a, b| a.generator.cmp(&b.generator));
        let summary: Vec<(String, usize, u32, usize)> = orbits
            .iter()
            .map(|o| {
                (
                    o.generator.to_string(),
                    o.orbit_len,
                    o.invariance_power,
                    o.link_components,
                )
            })
            .collect();
        assert_eq!(
            summary,
            vec![
                ("(0 1 4 5)".to_string(), 15, 2, 2),
                ("(0 2 7 9)".to_string(), 15, 2, 2),
                ("(0 5 10)".to_string(), 5, 1, 2),
            ]
        );
        assert_eq!(b.complex.vertex_count(), 84);
        let maps = cp3_structure_maps().unwrap();
        assert!(is_invariant(&b.complex, &maps));
    }

    #[test]
    fn rp3_fixed_point_model_matches_the_fixed_locus() {
        let rp3 = build_rp3_from_fixed_points().unwrap();
        assert_eq!(rp3.vertex_count(), 15);
        assert_eq!(crate::homology::betti_gf2(&rp3).unwrap(), vec![1, 1, 1, 1]);
        let cp3 = build_cp3_equilibrium().unwrap();
        let maps = cp3_structure_maps().unwrap();
        let mut memo: BTreeMap<(Vertex, Vertex), Vertex> = BTreeMap::new();
        let mut next = 100u32;
        let fixed = crate::symmetry::fixed_point_complex(&cp3.complex, &maps[1], |a, b| {
            *memo.entry((a, b)).or_insert_with(|| {
                let v = next;
                next += 1;
                v
            })
        })
        .unwrap();
        assert!(crate::symmetry::find_isomorphism(&rp3, &fixed).is_some());
    }

    #[test]
    fn flat_adaptor_rules() {
        let sq = [0, 1, 2, 3];
        let t = flat_adaptor(&sq, (0, 3), (1, 2)).unwrap();
        assert_eq!(t, Simplex::new(vec![0, 1, 2, 3]).unwrap());
        assert!(flat_adaptor(&sq, (0, 3), (3, 0)).is_err());
        assert!(flat_adaptor(&sq, (0, 3), (0, 2)).is_err());
        assert!(flat_adaptor(&sq, (0, 5), (1, 2)).is_err());
    }
}
