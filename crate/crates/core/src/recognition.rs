//! Certificate layer: pseudomanifold and closedness checks,
//! Dehn–Sommerville residuals, bistellar-flip sphere recognition, random
//! discrete Morse vectors, collapsibility, and handlebody signature
//! checks.
//!
//! Statuses are honest about undecidability: `Certified` always carries a
//! finite, replayable witness (an exact low-dimensional classification or
//! a flip sequence ending at the boundary of a simplex), while
//! `HeuristicPass` records that only homology- and Morse-level evidence
//! was obtained.

use std::collections::{HashMap, HashSet};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use smallvec::SmallVec;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::exact::{rat, Rational};
use crate::homology::{betti_gf2, homology_integral};
use crate::mask::{for_each_submask, VertexIndex};
use crate::simplex::Simplex;

// ----------------------------------------------------------------------
// Certificates
// ----------------------------------------------------------------------

/// Supporting material attached to a [`CertStatus`].
#[derive(Debug, Clone, Default, Serialize)]
pub struct Evidence {
    /// Human-readable explanation of how the status was reached.
    pub detail: String,
    /// Flip sequence witnessing a sphere (ends at the boundary of a
    /// simplex when replayed).
    pub flip_trace: Option<FlipTrace>,
    /// Best discrete Morse vector observed, when one was computed.
    pub morse: Option<MorseVector>,
    /// A face at which the check failed, when one exists.
    pub failing_face: Option<Simplex>,
}

impl Evidence {
    fn text(detail: impl Into<String>) -> Self {
        Evidence { detail: detail.into(), ..Default::default() }
    }
}

/// Outcome of a recognition procedure.
#[derive(Debug, Clone, Serialize)]
pub enum CertStatus {
    /// A finite checkable witness exists (exact classification in
    /// dimension ≤ 2, or a replayable flip reduction).
    Certified(Evidence),
    /// All computable obstructions vanished, but no witness of the
    /// claimed homeomorphism type exists.
    HeuristicPass(Evidence),
    /// A definite obstruction was found.
    Fail(Evidence),
}

impl CertStatus {
    pub fn certified(detail: impl Into<String>) -> Self {
        CertStatus::Certified(Evidence::text(detail))
    }

    pub fn heuristic(detail: impl Into<String>) -> Self {
        CertStatus::HeuristicPass(Evidence::text(detail))
    }

    pub fn fail(detail: impl Into<String>) -> Self {
        CertStatus::Fail(Evidence::text(detail))
    }

    pub fn fail_at(detail: impl Into<String>, face: Simplex) -> Self {
        CertStatus::Fail(Evidence {
            detail: detail.into(),
            failing_face: Some(face),
            ..Default::default()
        })
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, CertStatus::Certified(_))
    }

    /// True for `Certified` and `HeuristicPass`.
    pub fn passed(&self) -> bool {
        !matches!(self, CertStatus::Fail(_))
    }

    pub fn evidence(&self) -> &Evidence {
        match self {
            CertStatus::Certified(e) | CertStatus::HeuristicPass(e) | CertStatus::Fail(e) => e,
        }
    }

    /// Strength for aggregation: Fail < HeuristicPass < Certified.
    fn strength(&self) -> u8 {
        match self {
            CertStatus::Fail(_) => 0,
            CertStatus::HeuristicPass(_) => 1,
            CertStatus::Certified(_) => 2,
        }
    }
}

/// Counts of critical cells per dimension from a discrete Morse function.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct MorseVector(pub Vec<u64>);

impl MorseVector {
    /// Alternating sum; equals the Euler characteristic of the complex
    /// the Morse function lives on.
    pub fn alternating_sum(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Entrywise domination of a Betti vector (a hard lower bound for any
    /// Morse function).
    pub fn dominates(&self, betti: &[usize]) -> bool {
        betti.len() <= self.0.len()
            && betti
                .iter()
                .enumerate()
                .all(|(i, &b)| self.0[i] >= b as u64)
    }
}

impl std::fmt::Display for MorseVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

// ----------------------------------------------------------------------
// Pseudomanifold structure
// ----------------------------------------------------------------------

/// Ridges ((d−1)-faces) lying in exactly one facet.
pub fn boundary_faces(c: &SimplicialComplex) -> Vec<Simplex> {
    let mut out: Vec<Simplex> = c
        .ridge_degrees()
        .into_iter()
        .filter(|(_, deg)| *deg == 1)
        .map(|(r, _)| r)
        .collect();
    out.sort_unstable();
    out
}

/// Pure of dimension `d` with every ridge in exactly two facets.
pub fn is_closed_pseudomanifold(c: &SimplicialComplex, d: i64) -> bool {
    c.dim() == d && c.is_pure() && c.ridge_degrees().values().all(|&deg| deg == 2)
}

/// Pure of dimension `d`, every ridge in at most two facets, and at least
/// one ridge in exactly one (i.e. the boundary is nonempty).
pub fn is_bounded_pseudomanifold(c: &SimplicialComplex, d: i64) -> bool {
    if c.dim() != d || !c.is_pure() {
        return false;
    }
    let degs = c.ridge_degrees();
    degs.values().all(|&deg| deg <= 2) && degs.values().any(|&deg| deg == 1)
}

// ----------------------------------------------------------------------
// Dehn–Sommerville residuals
// ----------------------------------------------------------------------

fn binomial_i64(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Residuals of the generalized Dehn–Sommerville relations for a closed
/// d-manifold with Euler characteristic `chi`.
///
/// Entry 0 is the Euler relation Σ (−1)ʲ fⱼ − χ. Entry m+1 (for
/// 0 ≤ m ≤ d−1) is the double-counting relation obtained from links of
/// m-faces being (d−m−1)-spheres:
///   Σ_{j>m} (−1)^{j−m−1} C(j+1, m+1) fⱼ − (1 + (−1)^{d−m−1}) f_m.
/// All entries vanish on every closed triangulated manifold.
pub fn dehn_sommerville_residual(c: &SimplicialComplex, d: i64, chi: i64) -> Vec<Rational> {
    let f = c.f_vector();
    let fj = |j: i64| -> i64 {
        if j < 0 || j as usize >= f.len() {
            0
        } else {
            f[j as usize] as i64
        }
    };
    let mut out = Vec::with_capacity((d + 1).max(1) as usize);
    let euler: i64 = (0..=d).map(|j| if j % 2 == 0 { fj(j) } else { -fj(j) }).sum();
    out.push(rat(euler - chi));
    for m in 0..d {
        let mut lhs: i64 = 0;
        for j in (m + 1)..=d {
            let term = binomial_i64(j + 1, m + 1) * fj(j);
            if (j - m - 1) % 2 == 0 {
                lhs += term;
            } else {
                lhs -= term;
            }
        }
        let sphere_chi = 1 + if (d - m - 1) % 2 == 0 { 1 } else { -1 };
        out.push(rat(lhs - sphere_chi * fj(m)));
    }
    out
}

// ----------------------------------------------------------------------
// Bistellar flips
// ----------------------------------------------------------------------

/// A recorded move: the face `a` whose star was exchanged, and the
/// complementary simplex `b` it was exchanged against.
#[derive(Debug, Clone, Serialize)]
pub struct FlipTrace {
    /// Seed of the annealing round that found the reduction.
    pub seed: u64,
    /// Moves in application order; replaying them from the original
    /// complex ends at the boundary of a simplex.
    pub flips: Vec<(Simplex, Simplex)>,
}

/// Working representation for flip moves: every nonempty face mapped to
/// the facets containing it, over a fixed ≤128-vertex index.
#[derive(Clone)]
struct FlipComplex {
    d: usize,
    faces: HashMap<u128, SmallVec<[u128; 4]>>,
    facets: HashSet<u128>,
}

impl FlipComplex {
    fn new(c: &SimplicialComplex) -> Result<(FlipComplex, VertexIndex)> {
        let d = c.dim();
        if d < 0 {
            return Err(Error::Precondition("empty complex".into()));
        }
        if !c.is_pure() {
            return Err(Error::Precondition("flip moves need a pure complex".into()));
        }
        let (idx, masks) = c.mask_view()?;
        let mut fc = FlipComplex {
            d: d as usize,
            faces: HashMap::new(),
            facets: HashSet::new(),
        };
        for m in masks {
            fc.insert_facet(m);
        }
        Ok((fc, idx))
    }

    fn insert_facet(&mut self, f: u128) {
        self.facets.insert(f);
        for_each_submask(f, |s| {
            self.faces.entry(s).or_default().push(f);
        });
    }

    fn remove_facet(&mut self, f: u128) {
        self.facets.remove(&f);
        for_each_submask(f, |s| {
            if let Some(list) = self.faces.get_mut(&s) {
                if let Some(pos) = list.iter().position(|&x| x == f) {
                    list.swap_remove(pos);
                }
                if list.is_empty() {
                    self.faces.remove(&s);
                }
            }
        });
    }

    fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// All admissible moves (a, b): `a` is a face whose link is the
    /// boundary of the simplex `b`, and `b` is not a face. Sorted for
    /// determinism. Moves that would introduce a new vertex are excluded.
    fn admissible_moves(&self) -> Vec<(u128, u128)> {
        let mut out = Vec::new();
        for (&a, cof) in &self.faces {
            let m = a.count_ones() as usize - 1; // dim of a
            if m > self.d {
                continue;
            }
            let needed = self.d - m + 1;
            if cof.len() != needed {
                continue;
            }
            let mut union: u128 = 0;
            for &f in cof {
                union |= f;
            }
            let b = union & !a;
            if b.count_ones() as usize != needed {
                continue;
            }
            if self.faces.contains_key(&b) {
                continue;
            }
            out.push((a, b));
        }
        out.sort_unstable();
        out
    }

    /// Applies the move (a, b): replaces star(a) = a ∗ ∂b by ∂a ∗ b.
    fn apply(&mut self, a: u128, b: u128) {
        let old: SmallVec<[u128; 4]> = self.faces[&a].clone();
        for f in old {
            self.remove_facet(f);
        }
        let mut rest = a;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest &= rest - 1;
            self.insert_facet((a & !bit) | b);
        }
    }

    /// True exactly when the complex is the boundary of a (d+1)-simplex.
    fn is_simplex_boundary(&self) -> bool {
        if self.facets.len() != self.d + 2 {
            return false;
        }
        let support: u128 = self.facets.iter().fold(0, |acc, f| acc | f);
        support.count_ones() as usize == self.d + 2
    }
}

/// Tuning for bistellar annealing and the checks built on it.
#[derive(Debug, Clone, Serialize)]
pub struct SphereOptions {
    pub seed: u64,
    /// Independent annealing restarts.
    pub rounds: u32,
    /// Flip budget per restart.
    pub moves_per_round: u32,
    /// Skip annealing entirely above this facet count (heuristics only).
    pub facet_cap: usize,
}

impl Default for SphereOptions {
    fn default() -> Self {
        SphereOptions { seed: 0, rounds: 20, moves_per_round: 5000, facet_cap: 20_000 }
    }
}

impl SphereOptions {
    /// Smaller budget suitable for checking many links.
    pub fn for_links(seed: u64) -> Self {
        SphereOptions { seed, rounds: 8, moves_per_round: 2000, facet_cap: 20_000 }
    }
}

fn pick_weighted_move(
    moves: &[(u128, u128)],
    d: usize,
    uniform: bool,
    rng: &mut ChaCha8Rng,
) -> (u128, u128) {
    let weight = |a: u128| -> u64 {
        if uniform {
            return 1;
        }
        let m = a.count_ones() as i64 - 1;
        let delta = 2 * m - d as i64;
        if delta < 0 {
            16
        } else if delta == 0 {
            4
        } else {
            1
        }
    };
    let total: u64 = moves.iter().map(|&(a, _)| weight(a)).sum();
    let mut roll = rng.gen_range(0..total);
    for &(a, b) in moves {
        let w = weight(a);
        if roll < w {
            return (a, b);
        }
        roll -= w;
    }
    unreachable!("weighted pick exhausted");
}

fn anneal_round(base: &FlipComplex, seed: u64, max_moves: u32) -> Option<Vec<(u128, u128)>> {
    let mut fc = base.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut trace = Vec::new();
    let mut best = fc.facet_count();
    let mut stall = 0u32;
    for _ in 0..max_moves {
        if fc.is_simplex_boundary() {
            return Some(trace);
        }
        let moves = fc.admissible_moves();
        if moves.is_empty() {
            return None;
        }
        // Heat bursts while stalled: temporarily sample uniformly so
        // facet-increasing moves can unlock the configuration.
        let heat = stall > 400 && (stall % 120) < 40;
        let (a, b) = pick_weighted_move(&moves, fc.d, heat, &mut rng);
        fc.apply(a, b);
        trace.push((a, b));
        if fc.facet_count() < best {
            best = fc.facet_count();
            stall = 0;
        } else {
            stall += 1;
        }
    }
    fc.is_simplex_boundary().then_some(trace)
}

/// Seeks a flip sequence from `c` to the boundary of a simplex by
/// simulated annealing over `opts.rounds` restarts.
///
/// Restarts run in parallel; the returned witness is always the one from
/// the smallest round seed that succeeded, independent of scheduling.
pub fn bistellar_reduce(c: &SimplicialComplex, opts: &SphereOptions) -> Result<Option<FlipTrace>> {
    let (base, idx) = FlipComplex::new(c)?;
    if base.is_simplex_boundary() {
        return Ok(Some(FlipTrace { seed: opts.seed, flips: Vec::new() }));
    }
    let results: Vec<(u64, Option<Vec<(u128, u128)>>)> = (0..opts.rounds as u64)
        .into_par_iter()
        .map(|r| {
            let seed = opts.seed.wrapping_add(r);
            (seed, anneal_round(&base, seed, opts.moves_per_round))
        })
        .collect();
    for (seed, res) in results {
        if let Some(flips) = res {
            let flips = flips
                .into_iter()
                .map(|(a, b)| (idx.simplex_of(a), idx.simplex_of(b)))
                .collect();
            return Ok(Some(FlipTrace { seed, flips }));
        }
    }
    Ok(None)
}

/// Replays a flip trace from `c`, validating admissibility of every move,
/// and returns the final complex.
pub fn replay_flips(c: &SimplicialComplex, trace: &FlipTrace) -> Result<SimplicialComplex> {
    let (mut fc, idx) = FlipComplex::new(c)?;
    for (step, (a, b)) in trace.flips.iter().enumerate() {
        let am = idx
            .mask_of(a)
            .ok_or_else(|| Error::Precondition(format!("flip {step}: unknown face {a}")))?;
        let bm = idx
            .mask_of(b)
            .ok_or_else(|| Error::Precondition(format!("flip {step}: unknown simplex {b}")))?;
        let m = am.count_ones() as usize - 1;
        let needed = fc.d - m + 1;
        let ok = fc.faces.get(&am).map_or(false, |cof| {
            cof.len() == needed && {
                let union: u128 = cof.iter().fold(0, |acc, f| acc | f);
                union & !am == bm && bm.count_ones() as usize == needed
            }
        }) && !fc.faces.contains_key(&bm);
        if !ok {
            return Err(Error::Precondition(format!(
                "flip {step} at {a} against {b} is not admissible"
            )));
        }
        fc.apply(am, bm);
    }
    let facets: Vec<Simplex> = {
        let mut v: Vec<u128> = fc.facets.iter().copied().collect();
        v.sort_unstable();
        v.into_iter().map(|f| idx.simplex_of(f)).collect()
    };
    Ok(SimplicialComplex::from_facets(facets))
}

// ----------------------------------------------------------------------
// Sphere recognition
// ----------------------------------------------------------------------

fn link_is_circle(link: &SimplicialComplex) -> bool {
    link.dim() == 1
        && link.is_pure()
        && link.is_connected()
        && link.ridge_degrees().values().all(|&deg| deg == 2)
}

fn link_is_arc(link: &SimplicialComplex) -> bool {
    if link.dim() != 1 || !link.is_pure() || !link.is_connected() {
        return false;
    }
    let degs = link.ridge_degrees();
    degs.values().all(|&d| d <= 2) && degs.values().filter(|&&d| d == 1).count() == 2
}

/// Sphere homology profile check, integral when the complex is small
/// enough for exact Smith normal form, otherwise over GF(2).
fn has_sphere_homology(c: &SimplicialComplex, d: i64) -> Result<(bool, String)> {
    let f = c.f_vector();
    let small = f.iter().all(|&n| n <= 10_000);
    if small {
        let h = homology_integral(c)?;
        let good = h.groups.iter().enumerate().all(|(k, g)| {
            let want = usize::from(k == 0 || k as i64 == d);
            g.rank == want && g.torsion.is_empty()
        }) && h.groups.len() as i64 == d + 1;
        Ok((good, format!("integral homology {h}")))
    } else {
        let b = betti_gf2(c)?;
        let good = (0..=d as usize)
            .all(|k| b.get(k).copied().unwrap_or(0) == usize::from(k == 0 || k as i64 == d));
        Ok((good, format!("GF(2) Betti numbers {b:?}")))
    }
}

/// Decides whether `c` is a triangulated d-sphere.
///
/// Dimensions ≤ 2 are classified exactly (always `Certified` or `Fail`).
/// For d ≥ 3 the check requires a closed connected pseudomanifold with
/// sphere homology, then attempts a bistellar-flip reduction to the
/// boundary of a (d+1)-simplex; success certifies, otherwise the homology
/// evidence alone yields `HeuristicPass`.
pub fn sphere_check_with(c: &SimplicialComplex, d: i64, opts: &SphereOptions) -> CertStatus {
    if c.dim() != d {
        return CertStatus::fail(format!("dimension is {}, expected {}", c.dim(), d));
    }
    match d {
        0 => {
            if c.vertex_count() == 2 {
                CertStatus::certified("two points")
            } else {
                CertStatus::fail(format!("{} points, expected 2", c.vertex_count()))
            }
        }
        1 => {
            if link_is_circle(c) {
                CertStatus::certified("single closed curve")
            } else {
                CertStatus::fail("not a single closed curve")
            }
        }
        2 => {
            if !is_closed_pseudomanifold(c, 2) {
                return CertStatus::fail("not a closed surface");
            }
            if !c.is_connected() {
                return CertStatus::fail("disconnected");
            }
            for v in c.vertices() {
                if !link_is_circle(&c.link(&Simplex::vertex(v))) {
                    return CertStatus::fail_at("vertex link is not a circle", Simplex::vertex(v));
                }
            }
            if c.euler_characteristic() == 2 {
                CertStatus::certified("closed surface with Euler characteristic 2")
            } else {
                CertStatus::fail(format!(
                    "closed surface with Euler characteristic {}",
                    c.euler_characteristic()
                ))
            }
        }
        _ => {
            if !is_closed_pseudomanifold(c, d) {
                let witness = boundary_faces(c).into_iter().next();
                return match witness {
                    Some(r) => CertStatus::fail_at("ridge lies in one facet", r),
                    None => CertStatus::fail("not a closed pseudomanifold"),
                };
            }
            if !c.is_connected() {
                return CertStatus::fail("disconnected");
            }
            let (good, detail) = match has_sphere_homology(c, d) {
                Ok(x) => x,
                Err(e) => return CertStatus::fail(format!("homology computation failed: {e}")),
            };
            if !good {
                return CertStatus::fail(format!("homology differs from a sphere: {detail}"));
            }
            if c.vertex_count() > 128 || c.facet_count() > opts.facet_cap {
                return CertStatus::heuristic(format!(
                    "{detail}; too large for flip reduction"
                ));
            }
            match bistellar_reduce(c, opts) {
                Ok(Some(trace)) => CertStatus::Certified(Evidence {
                    detail: format!(
                        "flip reduction to the boundary simplex in {} moves (seed {})",
                        trace.flips.len(),
                        trace.seed
                    ),
                    flip_trace: Some(trace),
                    ..Default::default()
                }),
                Ok(None) => CertStatus::heuristic(format!(
                    "{detail}; flip reduction did not terminate within budget"
                )),
                Err(e) => CertStatus::fail(format!("flip engine rejected the input: {e}")),
            }
        }
    }
}

/// [`sphere_check_with`] under default options.
pub fn sphere_check(c: &SimplicialComplex, d: i64) -> CertStatus {
    sphere_check_with(c, d, &SphereOptions::default())
}

// ----------------------------------------------------------------------
// Combinatorial manifolds
// ----------------------------------------------------------------------

/// Options for [`is_combinatorial_manifold_with`].
#[derive(Debug, Clone, Default)]
pub struct ManifoldOptions {
    /// Accept bounded complexes whose boundary-vertex links are balls.
    pub with_boundary: bool,
    /// Budget for the per-link sphere checks.
    pub sphere: SphereOptions,
}

/// Status of one vertex link.
#[derive(Debug, Clone, Serialize)]
pub struct LinkReport {
    pub vertex: u32,
    pub status: CertStatus,
}

/// Outcome of a manifold check with all link evidence.
#[derive(Debug, Clone, Serialize)]
pub struct ManifoldReport {
    pub status: CertStatus,
    pub links: Vec<LinkReport>,
}

/// Cheap necessary conditions on every face link: pure, closed (or
/// bounded in boundary mode) pseudomanifold, connected. Returns the
/// lexicographically first failing face.
fn face_link_prepass(c: &SimplicialComplex, with_boundary: bool) -> Option<(Simplex, String)> {
    for face in c.all_faces() {
        if face.dim() >= c.dim() - 1 {
            continue;
        }
        let link = c.link(&face);
        if !link.is_pure() || link.dim() != c.dim() - face.dim() - 1 {
            return Some((face, "impure link".into()));
        }
        if !link.is_connected() && link.dim() > 0 {
            return Some((face, "disconnected link".into()));
        }
        let degs = link.ridge_degrees();
        let bad_closed = degs.values().any(|&d| d != 2);
        let bad_bounded = degs.values().any(|&d| d > 2);
        if (with_boundary && bad_bounded) || (!with_boundary && bad_closed) {
            return Some((face, "link is not a pseudomanifold of the right kind".into()));
        }
    }
    None
}

/// Exact ball classification in dimensions ≤ 2, heuristics above.
fn ball_check(c: &SimplicialComplex, d: i64, opts: &SphereOptions) -> CertStatus {
    if c.dim() != d {
        return CertStatus::fail(format!("dimension is {}, expected {}", c.dim(), d));
    }
    match d {
        0 => {
            if c.vertex_count() == 1 {
                CertStatus::certified("single point")
            } else {
                CertStatus::fail("not a single point")
            }
        }
        1 => {
            if link_is_arc(c) {
                CertStatus::certified("arc")
            } else {
                CertStatus::fail("not an arc")
            }
        }
        2 => {
            if !is_bounded_pseudomanifold(c, 2) || !c.is_connected() {
                return CertStatus::fail("not a connected bounded surface");
            }
            for v in c.vertices() {
                let link = c.link(&Simplex::vertex(v));
                if !(link_is_circle(&link) || link_is_arc(&link)) {
                    return CertStatus::fail_at("vertex link is neither arc nor circle", Simplex::vertex(v));
                }
            }
            let bd = match c.boundary() {
                Ok(b) => b,
                Err(e) => return CertStatus::fail(format!("boundary extraction failed: {e}")),
            };
            if c.euler_characteristic() == 1 && sphere_check(&bd, 1).is_certified() {
                CertStatus::certified("disc: bounded surface, Euler characteristic 1, circle boundary")
            } else {
                CertStatus::fail("bounded surface is not a disc")
            }
        }
        _ => {
            if !is_bounded_pseudomanifold(c, d) || !c.is_connected() {
                return CertStatus::fail("not a connected bounded pseudomanifold");
            }
            let contractible = match homology_integral(c) {
                Ok(h) => {
                    h.groups[0].rank == 1
                        && h.groups[0].torsion.is_empty()
                        && h.groups[1..].iter().all(|g| g.is_trivial())
                }
                Err(_) => false,
            };
            if !contractible {
                return CertStatus::fail("homology is not that of a point");
            }
            let bd = match c.boundary() {
                Ok(b) => b,
                Err(e) => return CertStatus::fail(format!("boundary extraction failed: {e}")),
            };
            if !sphere_check_with(&bd, d - 1, opts).passed() {
                return CertStatus::fail("boundary is not a sphere");
            }
            CertStatus::heuristic("contractible bounded pseudomanifold with sphere boundary")
        }
    }
}

/// Full manifold check: cheap pre-pass on all face links, then a sphere
/// (or, in boundary mode, sphere-or-ball) certificate for every vertex
/// link. Vertex links running in parallel; the aggregate status is the
/// weakest link status.
pub fn is_combinatorial_manifold_with(
    c: &SimplicialComplex,
    opts: &ManifoldOptions,
) -> ManifoldReport {
    let d = c.dim();
    if d < 0 {
        return ManifoldReport {
            status: CertStatus::fail("empty complex"),
            links: Vec::new(),
        };
    }
    if !c.is_pure() {
        return ManifoldReport {
            status: CertStatus::fail("not pure"),
            links: Vec::new(),
        };
    }
    if d == 0 {
        return ManifoldReport {
            status: CertStatus::certified("finite point set"),
            links: Vec::new(),
        };
    }
    if let Some((face, why)) = face_link_prepass(c, opts.with_boundary) {
        return ManifoldReport {
            status: CertStatus::fail_at(why, face),
            links: Vec::new(),
        };
    }
    let verts = c.vertices();
    let links: Vec<LinkReport> = verts
        .par_iter()
        .map(|&v| {
            let link = c.link(&Simplex::vertex(v));
            let closed = is_closed_pseudomanifold(&link, d - 1);
            let status = if closed || !opts.with_boundary {
                sphere_check_with(&link, d - 1, &opts.sphere)
            } else {
                ball_check(&link, d - 1, &opts.sphere)
            };
            LinkReport { vertex: v, status }
        })
        .collect();
    let weakest = links
        .iter()
        .map(|l| l.status.strength())
        .min()
        .unwrap_or(2);
    let status = match weakest {
        2 => CertStatus::certified(format!("all {} vertex links certified", links.len())),
        1 => CertStatus::heuristic("every vertex link passed, some only heuristically"),
        _ => {
            let bad = links
                .iter()
                .find(|l| !l.status.passed())
                .expect("weakest status came from some link");
            CertStatus::Fail(Evidence {
                detail: format!(
                    "link of vertex {} failed: {}",
                    bad.vertex,
                    bad.status.evidence().detail
                ),
                failing_face: Some(Simplex::vertex(bad.vertex)),
                ..Default::default()
            })
        }
    };
    ManifoldReport { status, links }
}

/// Closed-manifold check under default options.
pub fn is_combinatorial_manifold(c: &SimplicialComplex) -> CertStatus {
    is_combinatorial_manifold_with(c, &ManifoldOptions::default()).status
}

/// Sphere status of the link of every m-face, sorted by face.
pub fn face_link_statuses(
    c: &SimplicialComplex,
    m: i64,
    opts: &SphereOptions,
) -> Vec<(Simplex, CertStatus)> {
    let d = c.dim();
    let faces = c.faces_of_dim(m);
    faces
        .into_par_iter()
        .map(|face| {
            let link = c.link(&face);
            let status = sphere_check_with(&link, d - m - 1, opts);
            (face, status)
        })
        .collect()
}

// ----------------------------------------------------------------------
// Random discrete Morse and collapses
// ----------------------------------------------------------------------

/// Face-poset state for collapse runs: every face keyed by mask with its
/// count of alive codimension-1 cofaces.
#[derive(Clone)]
struct CollapseState {
    support: u128,
    /// face -> number of alive cofaces one dimension up; key presence
    /// doubles as the alive set.
    count: HashMap<u128, u32>,
    /// Alive faces by dimension (with tombstones; check `count`).
    by_dim: Vec<Vec<u128>>,
    protected: HashSet<u128>,
}

impl CollapseState {
    fn new(c: &SimplicialComplex, protected: &[Simplex]) -> Result<(CollapseState, VertexIndex)> {
        let (idx, _) = c.mask_view()?;
        let faces = c.all_faces();
        let dim = c.dim().max(0) as usize;
        let mut count: HashMap<u128, u32> = HashMap::with_capacity(faces.len());
        let mut by_dim: Vec<Vec<u128>> = vec![Vec::new(); dim + 1];
        for f in &faces {
            let m = idx.mask_of(f).expect("face uses indexed vertices");
            count.insert(m, 0);
            by_dim[f.dim() as usize].push(m);
        }
        for level in by_dim.iter().skip(1) {
            for &m in level {
                let mut rest = m;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest &= rest - 1;
                    *count.get_mut(&(m & !bit)).expect("faces are closed downward") += 1;
                }
            }
        }
        let mut prot = HashSet::new();
        for p in protected {
            if let Some(m) = idx.mask_of(p) {
                if count.contains_key(&m) {
                    prot.insert(m);
                }
            }
        }
        let support = idx.full_mask();
        Ok((CollapseState { support, count, by_dim, protected: prot }, idx))
    }

    fn alive(&self, m: u128) -> bool {
        self.count.contains_key(&m)
    }

    /// The unique alive coface of a face with coface count 1.
    fn sole_coface(&self, m: u128) -> Option<u128> {
        let mut rest = self.support & !m;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest &= rest - 1;
            let up = m | bit;
            if self.alive(up) {
                return Some(up);
            }
        }
        None
    }

    /// Removes a face, decrementing subface counts; newly free faces are
    /// pushed onto `candidates`.
    fn remove(&mut self, m: u128, candidates: &mut Vec<u128>) {
        self.count.remove(&m);
        let mut rest = m;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest &= rest - 1;
            let sub = m & !bit;
            if sub == 0 {
                continue;
            }
            if let Some(n) = self.count.get_mut(&sub) {
                *n -= 1;
                if *n == 1 && !self.protected.contains(&sub) {
                    candidates.push(sub);
                }
            }
        }
    }
}

/// Result of one random collapse sequence.
#[derive(Debug, Clone, Serialize)]
pub struct MorseRun {
    pub vector: MorseVector,
    pub seed: u64,
}

fn collapse_run(
    base: &CollapseState,
    seed: u64,
) -> (Vec<u128> /* critical faces */, Vec<u64> /* per dim */) {
    let mut st = base.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dims = st.by_dim.len();
    let mut critical_faces = Vec::new();
    let mut critical = vec![0u64; dims];
    // Free faces (coface count exactly 1), possibly stale.
    let mut candidates: Vec<u128> = Vec::new();
    for level in &st.by_dim {
        for &m in level {
            if st.count[&m] == 1 && !st.protected.contains(&m) {
                candidates.push(m);
            }
        }
    }
    loop {
        // Collapse phase: pick uniformly among (possibly stale) free
        // faces, validating on pop.
        let mut collapsed = false;
        while !candidates.is_empty() {
            let i = rng.gen_range(0..candidates.len());
            let m = candidates.swap_remove(i);
            if !st.alive(m) || st.count[&m] != 1 {
                continue;
            }
            let Some(up) = st.sole_coface(m) else { continue };
            if st.protected.contains(&up) {
                continue; // permanently blocked
            }
            st.remove(up, &mut candidates);
            st.remove(m, &mut candidates);
            collapsed = true;
            break;
        }
        if collapsed {
            continue;
        }
        // No free pair: remove one maximal face of top dimension as
        // critical.
        let mut removed = false;
        for dim in (0..dims).rev() {
            let mut alive: Vec<u128> = st.by_dim[dim]
                .iter()
                .copied()
                .filter(|&m| st.alive(m) && st.count[&m] == 0 && !st.protected.contains(&m))
                .collect();
            if alive.is_empty() {
                continue;
            }
            let i = rng.gen_range(0..alive.len());
            let m = alive.swap_remove(i);
            st.remove(m, &mut candidates);
            critical[dim] += 1;
            critical_faces.push(m);
            removed = true;
            break;
        }
        if !removed {
            break; // only protected (and blocked) faces remain
        }
    }
    (critical_faces, critical)
}

/// Runs `tries` independent random collapse sequences and returns the
/// lexicographically smallest Morse vector, with the smallest seed
/// achieving it as witness.
pub fn random_discrete_morse(c: &SimplicialComplex, seed: u64, tries: u32) -> Result<MorseRun> {
    if tries == 0 {
        return Err(Error::Precondition("tries must be at least 1".into()));
    }
    if c.is_empty() {
        return Err(Error::Precondition("empty complex".into()));
    }
    let (base, _) = CollapseState::new(c, &[])?;
    let best = (0..tries as u64)
        .into_par_iter()
        .map(|t| {
            let s = seed.wrapping_add(t);
            let (_, vec) = collapse_run(&base, s);
            (MorseVector(vec), s)
        })
        .min()
        .expect("tries >= 1");
    Ok(MorseRun { vector: best.0, seed: best.1 })
}

/// A collapse of the complex toward a protected target.
#[derive(Debug, Clone, Serialize)]
pub struct CollapseTrace {
    /// Critical faces removed outside the protected target, sorted.
    pub critical: Vec<Simplex>,
    /// Critical counts per dimension.
    pub counts: Vec<u64>,
    pub seed: u64,
}

/// Collapses `c` while protecting every face of `target` (which itself
/// need not be a face of `c` — protecting the boundary of a missing
/// simplex is the typical use) and every face listed in `avoid`. Returns
/// the run with the fewest critical cells over `tries` seeds.
pub fn collapse_onto(
    c: &SimplicialComplex,
    target: &Simplex,
    avoid: &[Simplex],
    seed: u64,
    tries: u32,
) -> Result<CollapseTrace> {
    if tries == 0 {
        return Err(Error::Precondition("tries must be at least 1".into()));
    }
    let mut protected: Vec<Simplex> = target
        .all_faces()
        .into_iter()
        .filter(|f| !f.is_empty() && c.contains_face(f))
        .collect();
    protected.extend(avoid.iter().cloned());
    if protected.is_empty() {
        return Err(Error::Precondition(
            "no face of the target lies in the complex".into(),
        ));
    }
    let (base, idx) = CollapseState::new(c, &protected)?;
    let best = (0..tries as u64)
        .into_par_iter()
        .map(|t| {
            let s = seed.wrapping_add(t);
            let (faces, counts) = collapse_run(&base, s);
            (faces.len(), MorseVector(counts), s, faces)
        })
        .min_by(|x, y| (x.0, &x.1, x.2).cmp(&(y.0, &y.1, y.2)))
        .expect("tries >= 1");
    let (_, MorseVector(counts), s, faces) = best;
    let mut critical: Vec<Simplex> = faces.into_iter().map(|m| idx.simplex_of(m)).collect();
    critical.sort_unstable_by_key(|f| (f.len(), f.clone()));
    Ok(CollapseTrace { critical, counts, seed: s })
}

// ----------------------------------------------------------------------
// Handlebodies
// ----------------------------------------------------------------------

/// Product type `B^{ball_dim} × (S¹)^{circle_factors}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProductSignature {
    pub ball_dim: u32,
    pub circle_factors: u32,
}

impl ProductSignature {
    /// GF(2) Betti numbers of the product (those of the torus factor),
    /// padded to the full dimension.
    pub fn betti_profile(&self) -> Vec<usize> {
        let d = (self.ball_dim + self.circle_factors) as usize;
        let j = self.circle_factors as i64;
        (0..=d as i64)
            .map(|k| binomial_i64(j, k) as usize)
            .collect()
    }
}

impl std::fmt::Display for ProductSignature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "B^{}", self.ball_dim)?;
        for _ in 0..self.circle_factors {
            write!(f, " x S^1")?;
        }
        Ok(())
    }
}

/// Checks that `c` looks like the product `sig`: correct dimension,
/// bounded pseudomanifold with closed boundary, GF(2) homology of the
/// torus factor, and a random discrete Morse vector achieving the torus
/// optimum. Never better than `HeuristicPass` (no PL certificate exists
/// at this level).
pub fn handlebody_check(
    c: &SimplicialComplex,
    sig: &ProductSignature,
    seed: u64,
    tries: u32,
) -> Result<CertStatus> {
    let d = (sig.ball_dim + sig.circle_factors) as i64;
    if c.dim() != d {
        return Ok(CertStatus::fail(format!(
            "dimension is {}, signature {} needs {}",
            c.dim(),
            sig,
            d
        )));
    }
    if !is_bounded_pseudomanifold(c, d) {
        return Ok(CertStatus::fail("not a bounded pseudomanifold"));
    }
    let bd = c.boundary()?;
    if !is_closed_pseudomanifold(&bd, d - 1) {
        return Ok(CertStatus::fail("boundary is not a closed pseudomanifold"));
    }
    let want = sig.betti_profile();
    let got = betti_gf2(c)?;
    if got != want {
        return Ok(CertStatus::fail(format!(
            "GF(2) Betti numbers {got:?} differ from the product profile {want:?}"
        )));
    }
    let run = random_discrete_morse(c, seed, tries)?;
    let optimal: Vec<u64> = want.iter().map(|&b| b as u64).collect();
    if run.vector.0 != optimal {
        return Ok(CertStatus::Fail(Evidence {
            detail: format!(
                "best Morse vector {} did not reach the product optimum",
                run.vector
            ),
            morse: Some(run.vector),
            ..Default::default()
        }));
    }
    Ok(CertStatus::HeuristicPass(Evidence {
        detail: format!(
            "bounded pseudomanifold with {sig} homology and a perfect Morse vector (seed {})",
            run.seed
        ),
        morse: Some(run.vector),
        ..Default::default()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::load_complex;
    use crate::permcycle::permuted_difference_cycle;
    use crate::simplex;
    use num_traits::Zero;

    #[test]
    fn boundary_of_solid_torus_is_flat_torus() {
        let solid = permuted_difference_cycle(&[1, 1, 1, 4, 8], 15).unwrap();
        let torus = permuted_difference_cycle(&[1, 2, 4, 8], 15).unwrap();
        let bd = solid.boundary().unwrap();
        assert_eq!(bd.facets(), torus.facets());
        assert!(is_bounded_pseudomanifold(&solid, 4));
        assert!(is_closed_pseudomanifold(&torus, 3));
        assert_eq!(boundary_faces(&torus), Vec::<Simplex>::new());
    }

    #[test]
    fn dehn_sommerville_residuals_vanish_on_closed_manifolds() {
        let s4 = SimplicialComplex::simplex_boundary(&simplex![0, 1, 2, 3, 4, 5]);
        assert!(dehn_sommerville_residual(&s4, 4, 2).iter().all(|r| r.is_zero()));
        let p12 = load_complex("p12").unwrap();
        assert!(dehn_sommerville_residual(&p12, 3, 0).iter().all(|r| r.is_zero()));
        let single = SimplicialComplex::full_simplex(&simplex![0, 1, 2, 3]);
        assert!(!dehn_sommerville_residual(&single, 3, 1).iter().all(|r| r.is_zero()));
    }

    #[test]
    fn sphere_check_classifies_low_dimensions_exactly() {
        let two = SimplicialComplex::from_facets(vec![simplex![0], simplex![1]]);
        assert!(sphere_check(&two, 0).is_certified());
        let circle = SimplicialComplex::simplex_boundary(&simplex![0, 1, 2]);
        assert!(sphere_check(&circle, 1).is_certified());
        // Octahedron.
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
        assert!(sphere_check(&oct, 2).is_certified());
        // Six-vertex real projective plane: closed surface, wrong Euler
        // characteristic.
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
        assert!(!sphere_check(&rp2, 2).passed());
    }

    #[test]
    fn simplex_boundaries_certify_without_flips() {
        for d in 3..=7 {
            let verts = Simplex::new((0..=(d as u32 + 1)).collect()).unwrap();
            let c = SimplicialComplex::simplex_boundary(&verts);
            let status = sphere_check(&c, d);
            match &status {
                CertStatus::Certified(e) => {
                    let t = e.flip_trace.as_ref().expect("flip trace present");
                    assert_eq!(t.flips.len(), 0, "dimension {d}");
                }
                other => panic!("expected Certified for dimension {d}, got {other:?}"),
            }
        }
    }

    #[test]
    fn suspended_octahedron_reduces_by_flips() {
        // Boundary of the 4-dimensional cross-polytope: 16 facets.
        let mut facets = Vec::new();
        for a in [0u32, 1] {
            for b in [2u32, 3] {
                for c in [4u32, 5] {
                    for d in [6u32, 7] {
                        facets.push(vec![a, b, c, d]);
                    }
                }
            }
        }
        let cross = SimplicialComplex::from_facet_lists(&facets).unwrap();
        let status = sphere_check(&cross, 3);
        let CertStatus::Certified(e) = &status else {
            panic!("expected certification, got {status:?}");
        };
        let trace = e.flip_trace.as_ref().unwrap();
        assert!(!trace.flips.is_empty());
        // The witness replays and ends at the boundary of a 4-simplex.
        let end = replay_flips(&cross, trace).unwrap();
        assert_eq!(end.facet_count(), 5);
        assert_eq!(end.vertex_count(), 5);
    }

    #[test]
    fn sphere_check_rejects_torus_homology() {
        let torus = permuted_difference_cycle(&[1, 2, 4, 8], 15).unwrap();
        assert!(!sphere_check(&torus, 3).passed());
    }

    #[test]
    fn flat_torus_is_a_certified_combinatorial_manifold() {
        let torus = permuted_difference_cycle(&[1, 2, 4, 8], 15).unwrap();
        assert!(is_combinatorial_manifold(&torus).is_certified());
    }

    #[test]
    fn twelve_vertex_projective_space_is_a_certified_manifold() {
        let rp3 = load_complex("rp3-nice-12").unwrap();
        let report = is_combinatorial_manifold_with(&rp3, &ManifoldOptions::default());
        assert!(report.status.is_certified(), "{:?}", report.status);
        assert_eq!(report.links.len(), 12);
        assert!(report.links.iter().all(|l| l.status.is_certified()));
    }

    #[test]
    fn cone_is_a_manifold_with_boundary() {
        let base = SimplicialComplex::simplex_boundary(&simplex![0, 1, 2, 3]);
        let cone = base.cone(9).unwrap();
        let closed = is_combinatorial_manifold(&cone);
        assert!(!closed.passed(), "a cone is not closed");
        let opts = ManifoldOptions { with_boundary: true, ..Default::default() };
        let report = is_combinatorial_manifold_with(&cone, &opts);
        assert!(report.status.is_certified(), "{:?}", report.status);
    }

    #[test]
    fn random_collapses_find_perfect_morse_vectors() {
        let ball = SimplicialComplex::full_simplex(&simplex![0, 1, 2, 3, 4]);
        let run = random_discrete_morse(&ball, 0, 4).unwrap();
        assert_eq!(run.vector.0, vec![1, 0, 0, 0, 0]);
        let p12 = load_complex("p12").unwrap();
        let run = random_discrete_morse(&p12, 0, 32).unwrap();
        assert_eq!(run.vector.0, vec![1, 1, 1, 1]);
        assert_eq!(run.vector.alternating_sum(), 0);
        let betti = betti_gf2(&p12).unwrap();
        assert!(run.vector.dominates(&betti));
    }

    #[test]
    fn morse_runs_are_reproducible() {
        let p12 = load_complex("p12").unwrap();
        let a = random_discrete_morse(&p12, 7, 16).unwrap();
        let b = random_discrete_morse(&p12, 7, 16).unwrap();
        assert_eq!(a.vector, b.vector);
        assert_eq!(a.seed, b.seed);
    }

    #[test]
    fn collapse_toward_missing_triangle_leaves_two_critical_cells() {
        let p12 = load_complex("p12").unwrap();
        let target = simplex![1, 2, 4];
        assert!(!p12.contains_face(&target));
        let trace = collapse_onto(&p12, &target, &[], 0, 64).unwrap();
        assert_eq!(
            trace.counts,
            vec![0, 0, 1, 1],
            "criticals {:?}",
            trace.critical
        );
        assert_eq!(trace.critical.len(), 2);
        assert_eq!(trace.critical[0].dim(), 2);
        assert_eq!(trace.critical[1].dim(), 3);
    }

    #[test]
    fn full_simplex_collapses_onto_a_vertex() {
        let ball = SimplicialComplex::full_simplex(&simplex![0, 1, 2, 3]);
        let trace = collapse_onto(&ball, &simplex![0], &[], 0, 4).unwrap();
        assert!(trace.critical.is_empty());
    }

    #[test]
    fn five_vertex_moebius_band_collapses_onto_an_empty_triangle() {
        let p12 = load_complex("p12").unwrap();
        let band = p12.induced(&[1, 2, 3, 4, 6]);
        assert_eq!(band.dim(), 2);
        // Find an empty triangle (all edges present, face missing) that
        // the band collapses onto without critical cells.
        let verts = band.vertices();
        let mut found = false;
        'outer: for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                for k in j + 1..verts.len() {
                    let t = Simplex::new(vec![verts[i], verts[j], verts[k]]).unwrap();
                    if band.contains_face(&t) {
                        continue;
                    }
                    if !t.boundary_facets().all(|e| band.contains_face(&e)) {
                        continue;
                    }
                    let trace = collapse_onto(&band, &t, &[], 0, 16).unwrap();
                    if trace.critical.is_empty() {
                        found = true;
                        break 'outer;
                    }
                }
            }
        }
        assert!(found, "no empty triangle admitting a full collapse");
    }

    #[test]
    fn solid_torus_matches_its_product_signature() {
        let solid = permuted_difference_cycle(&[1, 1, 1, 4, 8], 15).unwrap();
        let sig = ProductSignature { ball_dim: 2, circle_factors: 2 };
        assert_eq!(sig.betti_profile(), vec![1, 2, 1, 0, 0]);
        let status = handlebody_check(&solid, &sig, 0, 48).unwrap();
        assert!(
            matches!(status, CertStatus::HeuristicPass(_)),
            "{status:?}"
        );
        // A ball is not a circle product.
        let ball = SimplicialComplex::full_simplex(&simplex![0, 1, 2, 3, 4]);
        let circle_sig = ProductSignature { ball_dim: 3, circle_factors: 1 };
        assert!(!handlebody_check(&ball, &circle_sig, 0, 4).unwrap().passed());
    }

    #[test]
    #[ignore = "large input; exercised by the acceptance suite"]
    fn fifteen_vertex_five_sphere_is_certified() {
        use crate::data::load_union;
        let s5 = load_union(&["s5-200-h1", "s5-200-h2", "s5-200-h3"]).unwrap();
        assert_eq!(s5.facet_count(), 200);
        let status = sphere_check(&s5, 5);
        assert!(status.is_certified(), "{status:?}");
        let manifold = is_combinatorial_manifold(&s5);
        assert!(manifold.is_certified(), "{manifold:?}");
    }

    #[test]
    #[ignore = "large input; exercised by the acceptance suite"]
    fn seven_sphere_handlebody_has_circle_morse_vector() {
        use crate::data::load_union;
        let a4 = load_union(&["s7-h4"]).unwrap();
        let sig = ProductSignature { ball_dim: 6, circle_factors: 1 };
        let status = handlebody_check(&a4, &sig, 0, 24).unwrap();
        assert!(matches!(status, CertStatus::HeuristicPass(_)), "{status:?}");
    }
}
