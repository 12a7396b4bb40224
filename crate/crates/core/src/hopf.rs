//! Hopf decompositions of odd spheres and equilibrium decompositions of
//! the complex/real projective quotients built from them.
//!
//! A Hopf decomposition presents a (2k−1)-sphere as a union of k pieces
//! indexed by the non-empty subsets w of {1..k}, where the piece for w is
//! a (S¹)^{|w|} × B^{2k−2|w|} product piece and intersections follow the
//! Boolean algebra: A_w ∩ A_{w′} = A_{w∪w′}. The central piece (w full) is
//! a k-torus. This module verifies such decompositions, searches for them
//! on trigonometric-coordinate spheres by barycenter ranks, assembles
//! equilibrium complexes by coning and rotating a sphere, detects the
//! obstructions to that assembly (faces with disconnected links), and
//! verifies equilibrium decompositions of the assembled quotient spaces.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;

use num_rational::BigRational as Rational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::exact::{ratio, CertifiedInterval, Sign};
use crate::homology::betti_gf2;
use crate::permcycle::permuted_difference_cycle;
use crate::recognition::{
    boundary_faces, dehn_sommerville_residual, handlebody_check, is_bounded_pseudomanifold,
    is_closed_pseudomanifold, is_combinatorial_manifold_with, CertStatus, ManifoldOptions,
    ProductSignature, SphereOptions,
};
use crate::simplex::{Simplex, Vertex};
use crate::symmetry::{orbit_partition, Permutation};

// ----------------------------------------------------------------------
// Piece maps and reports
// ----------------------------------------------------------------------

/// Pieces are keyed by the sorted list of direction indices they belong to.
pub type PieceKey = Vec<u32>;

/// Normalizes a subset key: sorted, deduplicated.
pub fn piece_key(indices: impl IntoIterator<Item = u32>) -> PieceKey {
    let mut v: Vec<u32> = indices.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Options shared by the verification entry points.
#[derive(Debug, Clone)]
pub struct HopfOptions {
    pub seed: u64,
    pub morse_tries: u32,
    pub sphere: SphereOptions,
}

impl Default for HopfOptions {
    fn default() -> Self {
        HopfOptions { seed: 0, morse_tries: 24, sphere: SphereOptions::default() }
    }
}

/// Verification result for one subset-indexed piece.
#[derive(Debug, Clone, Serialize)]
pub struct PieceReport {
    pub subset: PieceKey,
    pub dim: i64,
    pub facet_count: usize,
    pub signature: Option<ProductSignature>,
    pub status: CertStatus,
}

/// One named pass/fail item of a decomposition check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

/// Full report for a Hopf or equilibrium decomposition verification.
#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport {
    pub k: usize,
    pub pieces: Vec<PieceReport>,
    pub checks: Vec<CheckItem>,
    pub valid: bool,
}

impl DecompositionReport {
    fn push_check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        let item = CheckItem { name: name.into(), ok, detail: detail.into() };
        if !ok {
            self.valid = false;
        }
        self.checks.push(item);
    }
}

fn subset_label(w: &[u32]) -> String {
    let mut s = String::from("{");
    for (i, x) in w.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{x}");
    }
    s.push('}');
    s
}

// ----------------------------------------------------------------------
// Hopf decomposition verification
// ----------------------------------------------------------------------

/// Verifies a Hopf decomposition of the (2k−1)-sphere `s`.
///
/// `pieces` maps non-empty subsets of {1..k} to their designated
/// subcomplexes; at least the singletons must be present. Checks, in
/// order: every piece is a subcomplex of `s`; the singleton pieces cover
/// `s` facet-for-facet; for every pair of provided subsets whose union is
/// also provided, the complex intersection equals the provided union piece
/// exactly (face-set equality); the intersection of all singleton pieces
/// equals `expected_central` when one is claimed; each piece passes the
/// product-signature check for (S¹)^{|w|} × B^{2k−2|w|}, the central piece
/// being the closed k-torus.
pub fn verify_hopf(
    s: &SimplicialComplex,
    pieces: &BTreeMap<PieceKey, SimplicialComplex>,
    k: usize,
    expected_central: Option<&SimplicialComplex>,
    opts: &HopfOptions,
) -> Result<DecompositionReport> {
    if pieces.is_empty() {
        return Err(Error::Precondition("no pieces supplied".into()));
    }
    let mut report =
        DecompositionReport { k, pieces: Vec::new(), checks: Vec::new(), valid: true };
    let full: PieceKey = (1..=k as u32).collect();

    // Index-set coverage.
    let singles: Vec<u32> = (1..=k as u32)
        .filter(|i| pieces.contains_key(&vec![*i]))
        .collect();
    report.push_check(
        "singleton pieces present",
        singles.len() == k,
        format!("{} of {k} singleton pieces supplied", singles.len()),
    );

    // Containment.
    for (w, a) in pieces {
        if !a.is_subcomplex_of(s) {
            let bad = a
                .facets()
                .iter()
                .find(|f| !s.contains_face(f))
                .map(|f| f.to_string())
                .unwrap_or_default();
            report.push_check(
                format!("piece {} contained in sphere", subset_label(w)),
                false,
                format!("facet {bad} is not a face of the sphere"),
            );
        }
    }

    // Covering: the union of the singleton pieces is the whole sphere.
    if singles.len() == k {
        let mut union = pieces[&vec![singles[0]]].clone();
        for &i in &singles[1..] {
            union = union.union(&pieces[&vec![i]]);
        }
        let ok = &union == s;
        let detail = if ok {
            format!("{} facets covered", s.facet_count())
        } else {
            let missing = s
                .facets()
                .iter()
                .find(|f| !union.contains_face(f))
                .map(|f| f.to_string())
                .unwrap_or_else(|| "none missing; union has extra faces".into());
            format!("union of singleton pieces differs from the sphere at {missing}")
        };
        report.push_check("singleton pieces cover the sphere", ok, detail);
    }

    // Boolean algebra on the provided subsets.
    let keys: Vec<&PieceKey> = pieces.keys().collect();
    for (ai, a) in keys.iter().enumerate() {
        for b in keys.iter().skip(ai + 1) {
            let u = piece_key(a.iter().chain(b.iter()).copied());
            if u == **a || u == **b {
                continue; // nested index sets: nothing new to check
            }
            if let Some(expected) = pieces.get(&u) {
                let got = pieces[*a].intersection(&pieces[*b]);
                let ok = &got == expected;
                let detail = if ok {
                    format!("{} maximal faces", got.facet_count())
                } else {
                    let off = got
                        .facets()
                        .iter()
                        .find(|f| !expected.contains_face(f))
                        .or_else(|| expected.facets().iter().find(|f| !got.contains_face(f)))
                        .map(|f| f.to_string())
                        .unwrap_or_default();
                    format!("mismatch at face {off}")
                };
                report.push_check(
                    format!(
                        "intersection {} ∩ {} = {}",
                        subset_label(a),
                        subset_label(b),
                        subset_label(&u)
                    ),
                    ok,
                    detail,
                );
            }
        }
    }

    // Full intersection against the claimed central torus.
    if singles.len() == k {
        let mut inter = pieces[&vec![singles[0]]].clone();
        for &i in &singles[1..] {
            inter = inter.intersection(&pieces[&vec![i]]);
        }
        if let Some(expected) = expected_central {
            report.push_check(
                "full intersection equals the reference torus",
                &inter == expected,
                format!("{} maximal faces", inter.facet_count()),
            );
        }
        if let Some(provided) = pieces.get(&full) {
            report.push_check(
                "full intersection equals the provided central piece",
                &inter == provided,
                format!("{} maximal faces", inter.facet_count()),
            );
        }
        // A Hopf decomposition keeps every sphere vertex on the central torus.
        report.push_check(
            "central torus spans all sphere vertices",
            inter.vertex_count() == s.vertex_count(),
            format!("{} of {} vertices", inter.vertex_count(), s.vertex_count()),
        );
    }

    // Piece type certificates.
    let piece_list: Vec<(&PieceKey, &SimplicialComplex)> = pieces.iter().collect();
    let mut piece_reports: Vec<(usize, PieceReport)> = piece_list
        .par_iter()
        .enumerate()
        .map(|(idx, (w, a))| {
            let m = w.len() as u32;
            let entry = if w.len() == k {
                PieceReport {
                    subset: (*w).clone(),
                    dim: a.dim(),
                    facet_count: a.facet_count(),
                    signature: None,
                    status: central_torus_check(a, k, expected_central),
                }
            } else {
                let sig = ProductSignature {
                    ball_dim: (2 * k as u32).saturating_sub(2 * m),
                    circle_factors: m,
                };
                let status = handlebody_check(a, &sig, opts.seed, opts.morse_tries)
                    .unwrap_or_else(|e| CertStatus::fail(format!("check failed to run: {e}")));
                PieceReport {
                    subset: (*w).clone(),
                    dim: a.dim(),
                    facet_count: a.facet_count(),
                    signature: Some(sig),
                    status,
                }
            };
            (idx, entry)
        })
        .collect();
    piece_reports.sort_by_key(|(idx, _)| *idx);
    for (_, entry) in piece_reports {
        if !entry.status.passed() {
            report.valid = false;
        }
        report.pieces.push(entry);
    }
    Ok(report)
}

/// Certificate that a complex is the closed k-torus: closed pseudomanifold
/// of dimension k, connected, with the binomial GF(2) Betti profile;
/// certified outright when it equals a supplied reference torus.
fn central_torus_check(
    a: &SimplicialComplex,
    k: usize,
    expected: Option<&SimplicialComplex>,
) -> CertStatus {
    if let Some(t) = expected {
        if a == t {
            return CertStatus::certified("equals the reference torus face-for-face");
        }
    }
    if !is_closed_pseudomanifold(a, k as i64) {
        return CertStatus::fail(format!("not a closed {k}-pseudomanifold"));
    }
    if !a.is_connected() {
        return CertStatus::fail("central piece is disconnected");
    }
    match betti_gf2(a) {
        Ok(b) => {
            let want: Vec<usize> = (0..=k).map(|j| binomial_usize(k, j)).collect();
            if b == want {
                CertStatus::heuristic(format!("closed with k-torus GF(2) Betti numbers {b:?}"))
            } else {
                CertStatus::fail(format!("GF(2) Betti {b:?}, expected {want:?}"))
            }
        }
        Err(e) => CertStatus::fail(format!("homology failed: {e}")),
    }
}

fn binomial_usize(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r = 1usize;
    for j in 0..k.min(n - k) {
        r = r * (n - j) / (j + 1);
    }
    r
}

// ----------------------------------------------------------------------
// Barycenter-rank decomposition search
// ----------------------------------------------------------------------

/// One facet orbit of a trigonometric sphere with its certified barycenter
/// data. `magnitude_sq` holds, per complex coordinate direction, an
/// enclosure of the squared norm of the coordinate-wise sum of the orbit
/// representative's vertex points (the common barycenter scaling cancels
/// in every rank ratio). `assigned` is the direction the rank test
/// certifies, when one exists.
#[derive(Debug, Clone)]
pub struct RankedOrbit {
    pub generator: Simplex,
    pub orbit_len: usize,
    pub magnitude_sq: Vec<CertifiedInterval>,
    pub assigned: Option<usize>,
}

/// Options for `barycenter_rank_search`.
#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Rank threshold p > 1. Orbits with certified rank above p are
    /// assigned; orbits that cannot be certified are ambiguous.
    pub threshold: Rational,
    pub precision_bits: u32,
    /// Cap on candidate subsets examined per direction.
    pub max_subsets: u64,
    pub seed: u64,
    pub morse_tries: u32,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            threshold: ratio(5, 4),
            precision_bits: 128,
            max_subsets: 4096,
            seed: 0,
            morse_tries: 16,
        }
    }
}

/// Outcome of a successful decomposition search.
#[derive(Debug)]
pub struct SearchOutcome {
    pub pieces: BTreeMap<PieceKey, SimplicialComplex>,
    pub ranked: Vec<RankedOrbit>,
    pub ambiguous: Vec<Simplex>,
    pub report: DecompositionReport,
}

/// True when `a` is certified strictly greater than `r` times `b`.
fn certainly_dominates(a: &CertifiedInterval, b: &CertifiedInterval, r: &Rational) -> bool {
    matches!(a.sub(&b.scale(r)).sign(), Some(Sign::Positive))
}

/// Advances `combo` to the next size-|combo| combination of {0..m}, in
/// lexicographic order. Returns false when exhausted.
fn next_combination(combo: &mut [usize], m: usize) -> bool {
    let size = combo.len();
    let mut i = size;
    while i > 0 {
        i -= 1;
        if combo[i] < m - size + i {
            combo[i] += 1;
            for j in i + 1..size {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Searches for a Hopf decomposition of the boundary sphere of a
/// trigonometric polytope by barycenter ranks.
///
/// The sphere's vertices are the points j ↦ (cos 2πf₁j/n, sin 2πf₁j/n, …)
/// for the given frequency list. The procedure: partition the facets into
/// ℤ_n-orbits; for each orbit compute certified squared magnitudes of the
/// barycenter per complex coordinate; assign orbits whose rank in some
/// direction certifiably exceeds the threshold; collect the rest as
/// ambiguous; then, per direction, adjoin subsets of the ambiguous orbits
/// (by increasing size, then lexicographic order) until the candidate is a
/// bounded pseudomanifold with closed boundary, vanishing boundary
/// Dehn–Sommerville residuals, certified vertex links and the
/// S¹ × B^{2k−2} product signature. A successful search is re-verified as
/// a Hopf decomposition before returning.
pub fn barycenter_rank_search(
    c: &SimplicialComplex,
    frequencies: &[u64],
    n: u64,
    opts: &SearchOptions,
) -> Result<SearchOutcome> {
    let k = frequencies.len();
    if k < 2 {
        return Err(Error::Precondition("need at least two coordinate directions".into()));
    }
    if opts.threshold <= Rational::one() {
        return Err(Error::Precondition("threshold must exceed 1".into()));
    }
    let d = 2 * k as i64 - 1;
    if c.dim() != d {
        return Err(Error::Precondition(format!(
            "expected a {d}-dimensional sphere, found dimension {}",
            c.dim()
        )));
    }
    let shift = Permutation::cyclic_shift(n as u32);
    let orbits = orbit_partition(c.facets(), std::slice::from_ref(&shift));
    let p_sq = &opts.threshold * &opts.threshold;

    // Rank every orbit from certified barycenter magnitudes.
    let ranked: Vec<RankedOrbit> = orbits
        .par_iter()
        .map(|orbit| {
            let rep = orbit[0].clone();
            let mags = barycenter_magnitudes(&rep, frequencies, n, opts.precision_bits);
            // Direction i is certified when ‖b_i‖² > p²·‖b_j‖² for all j≠i.
            let assigned = (0..k).find(|&i| {
                (0..k).all(|j| j == i || certainly_dominates(&mags[i], &mags[j], &p_sq))
            });
            RankedOrbit { generator: rep, orbit_len: orbit.len(), magnitude_sq: mags, assigned }
        })
        .collect();

    let mut assigned: Vec<Vec<&RankedOrbit>> = vec![Vec::new(); k];
    let mut ambiguous: Vec<&RankedOrbit> = Vec::new();
    for r in &ranked {
        match r.assigned {
            Some(i) => assigned[i].push(r),
            None => ambiguous.push(r),
        }
    }
    ambiguous.sort_by(|a, b| a.generator.cmp(&b.generator));

    let orbit_facets: HashMap<&Simplex, &Vec<Simplex>> =
        orbits.iter().map(|o| (&o[0], o)).collect();
    let expand = |reps: &[&RankedOrbit]| -> SimplicialComplex {
        let mut facets: Vec<Simplex> = Vec::new();
        for r in reps {
            facets.extend(orbit_facets[&r.generator].iter().cloned());
        }
        SimplicialComplex::from_facets(facets)
    };

    // Per direction, adjoin ambiguous-orbit subsets by increasing size,
    // then lexicographically, until a valid product piece appears.
    let mut pieces: BTreeMap<PieceKey, SimplicialComplex> = BTreeMap::new();
    for dir in 0..k {
        let mut found: Option<SimplicialComplex> = None;
        let mut examined: u64 = 0;
        'sizes: for size in 0..=ambiguous.len() {
            let mut combo: Vec<usize> = (0..size).collect();
            loop {
                if examined >= opts.max_subsets {
                    return Err(Error::BudgetExhausted(format!(
                        "examined {examined} candidate subsets for direction {} without \
                         success ({} ambiguous orbits)",
                        dir + 1,
                        ambiguous.len()
                    )));
                }
                examined += 1;
                let mut reps: Vec<&RankedOrbit> = assigned[dir].clone();
                reps.extend(combo.iter().map(|&i| ambiguous[i]));
                let cand = expand(&reps);
                if candidate_is_product_piece(&cand, k, opts) {
                    found = Some(cand);
                    break 'sizes;
                }
                if size == 0 || !next_combination(&mut combo, ambiguous.len()) {
                    break;
                }
            }
        }
        let piece = found.ok_or_else(|| {
            Error::BudgetExhausted(format!(
                "no valid piece found for direction {} ({} ambiguous orbits)",
                dir + 1,
                ambiguous.len()
            ))
        })?;
        pieces.insert(vec![dir as u32 + 1], piece);
    }
    let ambiguous_generators: Vec<Simplex> =
        ambiguous.iter().map(|r| r.generator.clone()).collect();

    let hopf_opts = HopfOptions {
        seed: opts.seed,
        morse_tries: opts.morse_tries,
        sphere: SphereOptions::default(),
    };
    let report = verify_hopf(c, &pieces, k, None, &hopf_opts)?;
    Ok(SearchOutcome { pieces, ranked, ambiguous: ambiguous_generators, report })
}

/// Squared magnitudes of the coordinate sums of a simplex's vertex points
/// on the trigonometric curve, one per complex coordinate direction.
fn barycenter_magnitudes(
    rep: &Simplex,
    frequencies: &[u64],
    n: u64,
    bits: u32,
) -> Vec<CertifiedInterval> {
    let points: Vec<Vec<CertifiedInterval>> = rep
        .vertices()
        .iter()
        .map(|&v| crate::exact::interval_trig_point(v as u64 % n, n, frequencies, bits))
        .collect();
    (0..frequencies.len())
        .map(|i| {
            let mut re = CertifiedInterval::exact_int(0, bits);
            let mut im = CertifiedInterval::exact_int(0, bits);
            for p in &points {
                re = re.add(&p[2 * i]);
                im = im.add(&p[2 * i + 1]);
            }
            re.mul(&re).add(&im.mul(&im))
        })
        .collect()
}

/// The acceptance cascade of the rank search: bounded pseudomanifold,
/// closed boundary with vanishing Dehn–Sommerville residuals, certified
/// vertex links, and the S¹ × B^{2k−2} product signature.
fn candidate_is_product_piece(cand: &SimplicialComplex, k: usize, opts: &SearchOptions) -> bool {
    let d = 2 * k as i64 - 1;
    if cand.is_empty() || cand.dim() != d || !cand.is_pure() {
        return false;
    }
    if !is_bounded_pseudomanifold(cand, d) {
        return false;
    }
    let boundary = SimplicialComplex::from_facets(boundary_faces(cand));
    if boundary.is_empty() || !is_closed_pseudomanifold(&boundary, d - 1) {
        return false;
    }
    // ∂(S¹ × B^{2k−2}) = S¹ × S^{2k−3} has Euler characteristic 0.
    let res = dehn_sommerville_residual(&boundary, d - 1, 0);
    if !res.iter().all(Rational::is_zero) {
        return false;
    }
    let mopts = ManifoldOptions {
        with_boundary: true,
        sphere: SphereOptions::for_links(opts.seed),
    };
    if !is_combinatorial_manifold_with(cand, &mopts).status.passed() {
        return false;
    }
    let sig = ProductSignature { ball_dim: 2 * k as u32 - 2, circle_factors: 1 };
    handlebody_check(cand, &sig, opts.seed, opts.morse_tries)
        .map(|s| s.passed())
        .unwrap_or(false)
}

// ----------------------------------------------------------------------
// Equilibrium assembly by coning and rotating
// ----------------------------------------------------------------------

/// A face orbit obstructing an equilibrium assembly: its link in the union
/// of the cone balls is disconnected.
#[derive(Debug, Clone, Serialize)]
pub struct DefectOrbit {
    /// Lexicographically smallest face of the shift orbit.
    pub generator: Simplex,
    pub orbit_len: usize,
    /// Smallest power m ≥ 1 with the doubling map preserving the orbit as
    /// a set of faces (0 if no power at most k+1 preserves it).
    pub invariance_power: u32,
    pub link_components: usize,
}

/// The complete list of assembly obstructions; empty means every face link
/// in the union is connected.
#[derive(Debug, Clone, Default, Serialize)]
pub struct DefectReport {
    pub orbits: Vec<DefectOrbit>,
}

impl DefectReport {
    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }
}

/// The result of coning a sphere over one apex and rotating by the
/// doubling map: the union complex, the k+1 cone balls, their apexes, the
/// central torus, and the defect scan.
#[derive(Debug)]
pub struct EquilibriumAssembly {
    pub union: SimplicialComplex,
    pub balls: Vec<SimplicialComplex>,
    pub apexes: Vec<Vertex>,
    pub central: SimplicialComplex,
    pub defects: DefectReport,
    /// Present exactly when the defect report is empty: the certificate
    /// that the three structure maps act as automorphisms.
    pub perfect: Option<CertStatus>,
}

/// The vertex-doubling permutation x ↦ 2x mod n on {0..n−1}.
pub fn doubling_map(n: u64) -> Permutation {
    Permutation::from_images((0..n as Vertex).map(|v| (v, ((2 * v as u64) % n) as Vertex)))
        .expect("doubling is a bijection for odd modulus")
}

/// The vertex-negation permutation x ↦ −x mod n on {0..n−1}.
pub fn negation_map(n: u64) -> Permutation {
    Permutation::from_images((0..n as Vertex).map(|v| (v, ((n - v as u64) % n) as Vertex)))
        .expect("negation is a bijection")
}

/// The solid-torus filling pattern on 2^{k+1}−1 vertices: three unit steps
/// followed by the doubling powers 4, 8, …, 2^k.
pub fn filling_pattern(k: usize) -> Vec<u32> {
    let mut p = vec![1u32; 3];
    for e in 2..=k {
        p.push(1 << e);
    }
    p
}

/// The central torus pattern 1, 2, 4, …, 2^k.
pub fn torus_pattern(k: usize) -> Vec<u32> {
    (0..=k).map(|e| 1u32 << e).collect()
}

/// Assembles the equilibrium complex for the complex projective space of
/// complex dimension k from a sphere on n = 2^{k+1}−1 vertices.
///
/// The sphere is coned from apex p₀ = n; applying the doubling map σ
/// (extended by the apex cycle p_i ↦ p_{i+1}) k times produces k+1
/// 2k-balls whose union is returned. Because σ^{k+1} is the identity on
/// {0..n−1}, the extended doubling map is an automorphism of the union by
/// construction; the sphere itself need not be doubling-invariant. Every
/// face of the union with a disconnected link obstructs the manifold
/// structure; the scan lists them as shift-orbit generators. When no
/// defect exists the assembly is perfect and the certificate confirms the
/// shift, negation, and doubling maps act as automorphisms (shift and
/// negation fixing the apexes pointwise, doubling cycling them).
pub fn assemble_perfect_equilibrium(
    s: &SimplicialComplex,
    k: usize,
) -> Result<EquilibriumAssembly> {
    let n = (1u64 << (k + 1)) - 1;
    let verts = s.vertices();
    if verts.len() as u64 != n || verts.iter().any(|&v| v as u64 >= n) {
        return Err(Error::Precondition(format!(
            "sphere must use exactly the vertex labels 0..{n}"
        )));
    }
    if s.dim() != 2 * k as i64 - 1 {
        return Err(Error::Precondition(format!(
            "expected sphere dimension {}, found {}",
            2 * k - 1,
            s.dim()
        )));
    }
    let tau = Permutation::cyclic_shift(n as u32);
    let rho = negation_map(n);
    if &tau.apply_complex(s) != s || &rho.apply_complex(s) != s {
        return Err(Error::Precondition(
            "sphere is not invariant under the shift and negation maps".into(),
        ));
    }
    let sigma = doubling_map(n);
    let central = permuted_difference_cycle(&torus_pattern(k), n as u32)?;
    if !central.is_subcomplex_of(s) {
        return Err(Error::Precondition(
            "sphere does not contain the central torus".into(),
        ));
    }
    if k >= 2 {
        // At least k of the k+1 doubling multiples of the solid-torus
        // filling must be present for the product piece structure.
        let filling = permuted_difference_cycle(&filling_pattern(k), n as u32)?;
        let mut count = 0;
        let mut image = filling;
        for _ in 0..=k {
            if image.is_subcomplex_of(s) {
                count += 1;
            }
            image = sigma.apply_complex(&image);
        }
        if count < k {
            return Err(Error::Precondition(format!(
                "only {count} of the {} doubling multiples of the solid-torus filling \
                 are contained in the sphere (need at least {k})",
                k + 1
            )));
        }
    }

    // Cone and rotate.
    let mut apexes: Vec<Vertex> = Vec::with_capacity(k + 1);
    let mut balls: Vec<SimplicialComplex> = Vec::with_capacity(k + 1);
    let mut image = s.clone();
    for i in 0..=k {
        let apex = (n + i as u64) as Vertex;
        apexes.push(apex);
        balls.push(image.cone(apex)?);
        image = sigma.apply_complex(&image);
    }
    let mut union = balls[0].clone();
    for b in &balls[1..] {
        union = union.union(b);
    }

    let defects = scan_disconnected_links(&union, &sigma, &tau, k)?;
    let perfect = if defects.is_empty() {
        Some(perfectness_certificate(&union, n, &apexes))
    } else {
        None
    };
    Ok(EquilibriumAssembly { union, balls, apexes, central, defects, perfect })
}

/// Finds all faces of dimension ≤ dim−2 whose link in `c` is disconnected,
/// groups them into shift orbits, and records for each orbit the smallest
/// doubling power fixing its generator.
pub fn scan_disconnected_links(
    c: &SimplicialComplex,
    sigma: &Permutation,
    tau: &Permutation,
    k: usize,
) -> Result<DefectReport> {
    let d = c.dim();
    let (index, facets) = c.mask_view()?;
    // Cofacet lists for every face.
    let mut cofacets: HashMap<u128, Vec<u128>> = HashMap::new();
    for &f in &facets {
        crate::mask::for_each_submask(f, |m| {
            cofacets.entry(m).or_default().push(f);
        });
    }
    let mut bad: Vec<(Simplex, usize)> = cofacets
        .par_iter()
        .filter_map(|(&face, cof)| {
            let fdim = face.count_ones() as i64 - 1;
            if fdim > d - 2 {
                return None;
            }
            let comps = link_component_count(face, cof);
            if comps <= 1 {
                return None;
            }
            Some((index.simplex_of(face), comps))
        })
        .collect();
    bad.sort_by(|a, b| a.0.cmp(&b.0));

    // Partition into shift orbits.
    let faces: Vec<Simplex> = bad.iter().map(|(s, _)| s.clone()).collect();
    let comp_of: HashMap<&Simplex, usize> = bad.iter().map(|(s, c)| (s, *c)).collect();
    let orbits = orbit_partition(&faces, std::slice::from_ref(tau));
    let mut report = DefectReport::default();
    for orbit in orbits {
        let generator = orbit[0].clone();
        let orbit_set: HashSet<&Simplex> = orbit.iter().collect();
        let mut invariance_power = 0u32;
        let mut images: Vec<Simplex> = orbit.clone();
        for m in 1..=(k as u32 + 1) {
            for f in &mut images {
                *f = sigma.apply_simplex(f);
            }
            if images.iter().all(|f| orbit_set.contains(f)) {
                invariance_power = m;
                break;
            }
        }
        report.orbits.push(DefectOrbit {
            link_components: comp_of[&generator],
            orbit_len: orbit.len(),
            generator,
            invariance_power,
        });
    }
    Ok(report)
}

/// Number of connected components of the link of `face` given the facets
/// containing it: union-find over the link's maximal faces, glued when
/// they share a vertex.
fn link_component_count(face: u128, cofacets: &[u128]) -> usize {
    let parts: Vec<u128> = cofacets.iter().map(|&f| f & !face).collect();
    let m = parts.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..m {
        for j in i + 1..m {
            if parts[i] & parts[j] != 0 {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    (0..m)
        .map(|i| find(&mut parent, i))
        .collect::<HashSet<_>>()
        .len()
}

/// Certificate that shift and negation fix the assembly with apexes
/// pointwise fixed, and doubling with the apex cycle is an automorphism.
fn perfectness_certificate(
    union: &SimplicialComplex,
    n: u64,
    apexes: &[Vertex],
) -> CertStatus {
    let fix_apex = apexes.iter().map(|&a| (a, a));
    let tau = Permutation::from_images(
        (0..n as Vertex)
            .map(|v| (v, (v + 1) % n as Vertex))
            .chain(fix_apex.clone()),
    )
    .expect("valid permutation");
    let rho = Permutation::from_images(
        (0..n as Vertex)
            .map(|v| (v, ((n - v as u64) % n) as Vertex))
            .chain(fix_apex),
    )
    .expect("valid permutation");
    let cycle = apexes
        .iter()
        .enumerate()
        .map(|(i, &a)| (a, apexes[(i + 1) % apexes.len()]));
    let sigma = Permutation::from_images(
        (0..n as Vertex)
            .map(|v| (v, ((2 * v as u64) % n) as Vertex))
            .chain(cycle),
    )
    .expect("valid permutation");
    for (name, g) in [("shift", &tau), ("negation", &rho), ("doubling", &sigma)] {
        if &g.apply_complex(union) != union {
            return CertStatus::fail(format!("{name} map is not an automorphism"));
        }
    }
    CertStatus::certified(
        "shift and negation fix the apexes and the doubling map cycles them; all three \
         are automorphisms",
    )
}

// ----------------------------------------------------------------------
// Equilibrium verification of assembled quotients
// ----------------------------------------------------------------------

/// Which quotient structure an equilibrium decomposition models.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EquilibriumKind {
    /// Complex projective quotient: the central piece is a k-torus.
    Complex,
    /// Real projective quotient: the central piece is 2^k isolated points.
    Real,
}

/// Verifies an equilibrium decomposition of `c` into `balls` with the
/// given `apexes` (one per ball; the apex is the coning vertex of its
/// ball). All deeper pieces are obtained as intersections, so the Boolean
/// algebra holds by construction; the substantial checks are: each ball is
/// a subcomplex and the balls cover `c`; the central piece (intersection
/// of all balls) is the k-torus (complex kind) or 2^k isolated vertices
/// (real kind); and, per apex, the link of the apex in `c` equals the
/// ball's boundary sphere and is covered by that ball's pairwise
/// intersections with the others — the restriction identity between the
/// quotient decomposition and the sphere decomposition.
pub fn verify_equilibrium(
    c: &SimplicialComplex,
    balls: &[SimplicialComplex],
    apexes: &[Vertex],
    kind: EquilibriumKind,
    opts: &HopfOptions,
) -> Result<DecompositionReport> {
    if balls.is_empty() || balls.len() != apexes.len() {
        return Err(Error::Precondition(
            "need one apex per ball and at least one ball".into(),
        ));
    }
    let _ = opts;
    let k = balls.len() - 1;
    let mut report =
        DecompositionReport { k, pieces: Vec::new(), checks: Vec::new(), valid: true };

    for (i, b) in balls.iter().enumerate() {
        report.push_check(
            format!("ball {i} contained"),
            b.is_subcomplex_of(c),
            format!("{} facets", b.facet_count()),
        );
    }
    let mut union = balls[0].clone();
    for b in &balls[1..] {
        union = union.union(b);
    }
    report.push_check(
        "balls cover the complex",
        &union == c,
        format!("{} facets", c.facet_count()),
    );

    // All subset pieces by intersection.
    let mut pieces: BTreeMap<PieceKey, SimplicialComplex> = BTreeMap::new();
    for (i, b) in balls.iter().enumerate() {
        pieces.insert(vec![i as u32], b.clone());
    }
    let index_count = balls.len();
    for size in 2..=index_count {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let key: PieceKey = combo.iter().map(|&i| i as u32).collect();
            let prefix: PieceKey = key[..key.len() - 1].to_vec();
            let inter = pieces[&prefix].intersection(&balls[*combo.last().unwrap()]);
            pieces.insert(key, inter);
            if !next_combination(&mut combo, index_count) {
                break;
            }
        }
    }

    // Central piece.
    let full_key: PieceKey = (0..index_count as u32).collect();
    let central = pieces[&full_key].clone();
    match kind {
        EquilibriumKind::Complex => {
            let status = central_torus_check(&central, k, None);
            report.push_check(
                "central piece is a k-torus",
                status.passed(),
                format!("{} maximal faces", central.facet_count()),
            );
        }
        EquilibriumKind::Real => {
            let want = 1usize << k;
            report.push_check(
                "central piece is 2^k isolated points",
                central.dim() == 0 && central.facet_count() == want,
                format!(
                    "dimension {}, {} maximal faces (expected {want} points)",
                    central.dim(),
                    central.facet_count()
                ),
            );
        }
    }

    // Apex restriction identity: link(p_i) = ball boundary, covered by the
    // pairwise pieces through i.
    for (i, (&apex, ball)) in apexes.iter().zip(balls).enumerate() {
        let link = c.link(&Simplex::vertex(apex));
        let bdry = SimplicialComplex::from_facets(boundary_faces(ball));
        report.push_check(
            format!("apex {i} link equals its ball boundary"),
            link == bdry,
            format!("{} facets", link.facet_count()),
        );
        let mut cover: Option<SimplicialComplex> = None;
        for j in 0..index_count {
            if j == i {
                continue;
            }
            let key = piece_key([i as u32, j as u32]);
            let piece = &pieces[&key];
            report.push_check(
                format!("piece {} lies on apex {i} link", subset_label(&key)),
                piece.is_subcomplex_of(&link),
                format!("{} maximal faces", piece.facet_count()),
            );
            cover = Some(match cover {
                None => piece.clone(),
                Some(u) => u.union(piece),
            });
        }
        if let Some(u) = cover {
            report.push_check(
                format!("pairwise pieces cover apex {i} link"),
                u == link,
                format!("{} facets", link.facet_count()),
            );
        }
    }

    // Piece inventory with type certificates for the balls.
    let ball_dim = c.dim();
    let ball_reports: Vec<PieceReport> = balls
        .par_iter()
        .enumerate()
        .map(|(i, b)| {
            let status = ball_like_check(b, ball_dim);
            PieceReport {
                subset: vec![i as u32],
                dim: b.dim(),
                facet_count: b.facet_count(),
                signature: Some(ProductSignature {
                    ball_dim: ball_dim as u32,
                    circle_factors: 0,
                }),
                status,
            }
        })
        .collect();
    for entry in ball_reports {
        if !entry.status.passed() {
            report.valid = false;
        }
        report.pieces.push(entry);
    }
    for (key, piece) in &pieces {
        if key.len() >= 2 {
            report.pieces.push(PieceReport {
                subset: key.clone(),
                dim: piece.dim(),
                facet_count: piece.facet_count(),
                signature: None,
                status: CertStatus::heuristic("intersection piece recorded"),
            });
        }
    }
    Ok(report)
}

/// A coned ball: bounded pseudomanifold whose boundary is closed and whose
/// GF(2) homology is that of a point.
fn ball_like_check(b: &SimplicialComplex, d: i64) -> CertStatus {
    if b.dim() != d || !b.is_pure() {
        return CertStatus::fail(format!("piece is not pure of dimension {d}"));
    }
    if !is_bounded_pseudomanifold(b, d) {
        return CertStatus::fail("not a bounded pseudomanifold");
    }
    let boundary = SimplicialComplex::from_facets(boundary_faces(b));
    if !is_closed_pseudomanifold(&boundary, d - 1) {
        return CertStatus::fail("boundary is not closed");
    }
    match betti_gf2(b) {
        Ok(betti) => {
            let trivial =
                betti.first() == Some(&1) && betti.iter().skip(1).all(|&x| x == 0);
            if trivial {
                CertStatus::heuristic("bounded pseudomanifold with the homology of a point")
            } else {
                CertStatus::fail(format!("GF(2) Betti {betti:?} is not point-like"))
            }
        }
        Err(e) => CertStatus::fail(format!("homology failed: {e}")),
    }
}

// ----------------------------------------------------------------------
// Census of 5-sphere candidates
// ----------------------------------------------------------------------

/// Structural facts about one sphere candidate relevant to the
/// perfect-assembly question.
#[derive(Debug, Clone, Serialize)]
pub struct CensusEntry {
    pub name: String,
    pub facet_count: usize,
    pub shift_negation_invariant: bool,
    pub contains_central_torus: bool,
    /// How many of the k+1 doubling multiples of the solid-torus filling
    /// pattern are subcomplexes.
    pub filling_multiples: usize,
    /// Size of the orbit of the complex under the doubling map.
    pub doubling_orbit_size: usize,
}

/// Report over all candidates: per-candidate facts plus the verdict that
/// no candidate assembles into a perfect equilibrium quotient.
#[derive(Debug, Clone, Serialize)]
pub struct CensusReport {
    pub entries: Vec<CensusEntry>,
    /// Names of candidates carrying at least k filling multiples (the only
    /// ones with the required product piece structure).
    pub hopf_candidates: Vec<String>,
    /// For each such candidate, the number of defect orbits its assembly
    /// produces (non-zero ⟹ not perfect).
    pub assembly_defects: Vec<(String, usize)>,
    pub no_perfect_assembly: bool,
}

/// Examines sphere candidates on 2^{k+1}−1 vertices for the
/// perfect-assembly obstruction: counts contained filling multiples and
/// doubling-orbit sizes, then runs the assembly on every candidate with
/// enough multiples and reports its defects.
pub fn census_no_perfect_assembly(
    candidates: &[(String, SimplicialComplex)],
    k: usize,
) -> Result<CensusReport> {
    let n = (1u64 << (k + 1)) - 1;
    let tau = Permutation::cyclic_shift(n as u32);
    let rho = negation_map(n);
    let sigma = doubling_map(n);
    let torus = permuted_difference_cycle(&torus_pattern(k), n as u32)?;
    let filling = permuted_difference_cycle(&filling_pattern(k), n as u32)?;

    let mut entries = Vec::new();
    let mut hopf_candidates = Vec::new();
    let mut assembly_defects = Vec::new();
    for (name, s) in candidates {
        let invariant = &tau.apply_complex(s) == s && &rho.apply_complex(s) == s;
        let torus_in = torus.is_subcomplex_of(s);
        let mut multiples = 0;
        let mut image = filling.clone();
        for _ in 0..=k {
            if image.is_subcomplex_of(s) {
                multiples += 1;
            }
            image = sigma.apply_complex(&image);
        }
        let mut orbit_size = 1;
        let mut img = sigma.apply_complex(s);
        while &img != s {
            orbit_size += 1;
            img = sigma.apply_complex(&img);
            if orbit_size > k + 1 {
                break;
            }
        }
        entries.push(CensusEntry {
            name: name.clone(),
            facet_count: s.facet_count(),
            shift_negation_invariant: invariant,
            contains_central_torus: torus_in,
            filling_multiples: multiples,
            doubling_orbit_size: orbit_size,
        });
        if multiples >= k {
            hopf_candidates.push(name.clone());
            let assembly = assemble_perfect_equilibrium(s, k)?;
            assembly_defects.push((name.clone(), assembly.defects.orbits.len()));
        }
    }
    let no_perfect_assembly =
        !assembly_defects.is_empty() && assembly_defects.iter().all(|(_, d)| *d > 0);
    Ok(CensusReport { entries, hopf_candidates, assembly_defects, no_perfect_assembly })
}

// ----------------------------------------------------------------------
// Tests
// ----------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::{expand_orbits, GroupSpec};

    fn cyclic_orbits(gens: &[&[Vertex]], n: u32) -> SimplicialComplex {
        let seeds: Vec<Simplex> = gens
            .iter()
            .map(|g| Simplex::new(g.to_vec()).unwrap())
            .collect();
        expand_orbits(&seeds, &GroupSpec::Cyclic { modulus: n }, 100_000).unwrap()
    }

    /// The 7-vertex 3-sphere bounding the polytope with vertices
    /// (cos 2πj/7, sin 2πj/7, cos 4πj/7, sin 4πj/7).
    fn seven_vertex_sphere() -> SimplicialComplex {
        cyclic_orbits(&[&[0, 1, 2, 3], &[0, 1, 3, 4]], 7)
    }

    #[test]
    fn hopf_structure_of_the_seven_vertex_three_sphere() {
        let s = seven_vertex_sphere();
        assert_eq!(s.facet_count(), 14);
        let a1 = cyclic_orbits(&[&[0, 1, 2, 3]], 7);
        let a2 = cyclic_orbits(&[&[0, 1, 3, 4]], 7);
        let torus = permuted_difference_cycle(&[1, 2, 4], 7).unwrap();
        assert_eq!(torus.facet_count(), 14);
        let mut pieces = BTreeMap::new();
        pieces.insert(vec![1], a1);
        pieces.insert(vec![2], a2);
        pieces.insert(vec![1, 2], torus.clone());
        let report =
            verify_hopf(&s, &pieces, 2, Some(&torus), &HopfOptions::default()).unwrap();
        for check in &report.checks {
            assert!(check.ok, "failed check: {} — {}", check.name, check.detail);
        }
        assert!(report.valid);
        assert!(report.pieces.iter().all(|p| p.status.passed()));
    }

    #[test]
    fn hopf_verification_rejects_a_wrong_central_claim() {
        let s = seven_vertex_sphere();
        let a1 = cyclic_orbits(&[&[0, 1, 2, 3]], 7);
        let a2 = cyclic_orbits(&[&[0, 1, 3, 4]], 7);
        // Claim a central piece different from the actual intersection.
        let wrong = cyclic_orbits(&[&[0, 1, 2]], 7);
        let mut pieces = BTreeMap::new();
        pieces.insert(vec![1], a1);
        pieces.insert(vec![2], a2);
        pieces.insert(vec![1, 2], wrong);
        let report = verify_hopf(&s, &pieces, 2, None, &HopfOptions::default()).unwrap();
        assert!(!report.valid);
        assert!(report
            .checks
            .iter()
            .any(|c| c.name.contains("central piece") && !c.ok));
    }

    #[test]
    fn rank_search_recovers_the_two_solid_tori_without_ambiguity() {
        let s = seven_vertex_sphere();
        let opts = SearchOptions { threshold: ratio(11, 10), ..Default::default() };
        let out = barycenter_rank_search(&s, &[1, 2], 7, &opts).unwrap();
        assert!(out.ambiguous.is_empty(), "ambiguous: {:?}", out.ambiguous);
        assert!(out.report.valid);
        let a1 = cyclic_orbits(&[&[0, 1, 2, 3]], 7);
        let a2 = cyclic_orbits(&[&[0, 1, 3, 4]], 7);
        assert_eq!(out.pieces[&vec![1]], a1, "direction 1 is the consecutive orbit");
        assert_eq!(out.pieces[&vec![2]], a2, "direction 2 is the stretched orbit");
    }

    #[test]
    fn degenerate_threshold_exhausts_the_search_budget() {
        let s = seven_vertex_sphere();
        let opts = SearchOptions {
            threshold: ratio(1_000_000_000, 1),
            max_subsets: 1,
            ..Default::default()
        };
        let err = barycenter_rank_search(&s, &[1, 2], 7, &opts).unwrap_err();
        assert!(matches!(err, Error::BudgetExhausted(_)), "got {err:?}");
    }

    #[test]
    fn two_of_three_filling_multiples_lie_in_the_seven_vertex_sphere() {
        let s = seven_vertex_sphere();
        let sigma = doubling_map(7);
        let mut filling = permuted_difference_cycle(&filling_pattern(2), 7).unwrap();
        let mut contained = Vec::new();
        for _ in 0..3 {
            contained.push(filling.is_subcomplex_of(&s));
            filling = sigma.apply_complex(&filling);
        }
        assert_eq!(contained, vec![true, false, true]);
    }

    #[test]
    fn assembly_of_the_circle_gives_the_five_vertex_double_cone() {
        // k = 1: the 3-vertex circle cones to two 2-balls; their union is
        // the 5-vertex 2-sphere modelling the complex projective line.
        let circle = cyclic_orbits(&[&[0, 1]], 3);
        let asm = assemble_perfect_equilibrium(&circle, 1).unwrap();
        assert!(asm.defects.is_empty());
        assert_eq!(asm.union.vertex_count(), 5);
        assert_eq!(asm.union.facet_count(), 6);
        let cert = asm.perfect.expect("perfect");
        assert!(cert.is_certified(), "{cert:?}");
    }

    #[test]
    fn assembly_of_the_seven_vertex_sphere_is_perfect() {
        let s = seven_vertex_sphere();
        let asm = assemble_perfect_equilibrium(&s, 2).unwrap();
        assert!(asm.defects.is_empty(), "defects: {:?}", asm.defects);
        assert_eq!(asm.union.vertex_count(), 10);
        assert_eq!(asm.union.facet_count(), 42);
        assert!(asm.perfect.unwrap().is_certified());
    }

    #[test]
    fn equilibrium_verification_accepts_the_ten_vertex_quotient() {
        let s = seven_vertex_sphere();
        let asm = assemble_perfect_equilibrium(&s, 2).unwrap();
        let report = verify_equilibrium(
            &asm.union,
            &asm.balls,
            &asm.apexes,
            EquilibriumKind::Complex,
            &HopfOptions::default(),
        )
        .unwrap();
        for check in &report.checks {
            assert!(check.ok, "failed: {} — {}", check.name, check.detail);
        }
        assert!(report.valid);
    }

    #[test]
    fn assembly_of_the_fifteen_vertex_sphere_lists_three_defect_orbits() {
        let s = crate::data::load_union(&["s5-200-h1", "s5-200-h2", "s5-200-h3"]).unwrap();
        assert_eq!(s.facet_count(), 200);
        let asm = assemble_perfect_equilibrium(&s, 3).unwrap();
        assert!(asm.perfect.is_none());
        let got: Vec<(Vec<Vertex>, u32, usize, usize)> = asm
            .defects
            .orbits
            .iter()
            .map(|o| {
                (
                    o.generator.vertices().to_vec(),
                    o.invariance_power,
                    o.orbit_len,
                    o.link_components,
                )
            })
            .collect();
        // One short triangle orbit preserved by doubling, two tetrahedron
        // orbits swapped by doubling and preserved by its square.
        assert_eq!(
            got,
            vec![
                (vec![0, 1, 4, 5], 2, 15, 2),
                (vec![0, 2, 7, 9], 2, 15, 2),
                (vec![0, 5, 10], 1, 5, 2),
            ]
        );
        // The two tetrahedron orbits contain the shift translates
        // {3,5,10,12} and {5,6,9,10} respectively.
        let t_a = Simplex::new(vec![3, 5, 10, 12]).unwrap();
        let t_b = Simplex::new(vec![5, 6, 9, 10]).unwrap();
        let shift = Permutation::cyclic_shift(15);
        let in_orbit = |gen: &Simplex, target: &Simplex| -> bool {
            let mut img = gen.clone();
            for _ in 0..15 {
                if &img == target {
                    return true;
                }
                img = shift.apply_simplex(&img);
            }
            false
        };
        assert!(in_orbit(&asm.defects.orbits[1].generator, &t_a));
        assert!(in_orbit(&asm.defects.orbits[0].generator, &t_b));
    }

    #[test]
    fn defect_scan_flags_an_edge_with_a_split_link() {
        // Two tetrahedra sharing exactly one edge: the edge's link is two
        // disjoint edges, while the shared vertices keep connected links.
        let c = SimplicialComplex::from_facet_lists(&[
            vec![0, 1, 2, 3],
            vec![0, 1, 4, 5],
        ])
        .unwrap();
        let report = scan_disconnected_links(
            &c,
            &Permutation::identity(),
            &Permutation::identity(),
            1,
        )
        .unwrap();
        let edge = Simplex::new(vec![0, 1]).unwrap();
        assert!(report
            .orbits
            .iter()
            .any(|o| o.generator == edge && o.link_components == 2));
        assert!(
            report.orbits.iter().all(|o| o.generator.len() > 1),
            "vertex links here are connected"
        );
    }
}
