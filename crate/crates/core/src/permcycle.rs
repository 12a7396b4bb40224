//! Difference-cycle triangulations on ℤ_n.
//!
//! A *difference cycle* `(d₁ : d₂ : … : d_m)` with `d₁ + ⋯ + d_m ≡ 0
//! (mod n)` names the ℤ_n-orbit of the simplex whose vertices are the
//! partial sums `0, d₁, d₁+d₂, …, d₁+⋯+d_{m−1}` taken mod n. The *permuted*
//! variant takes the union over all reorderings of the multiset
//! `{d₁, …, d_m}`; the result is a pure, ℤ_n-invariant complex of
//! dimension m−1 that is independent of the order in which the dᵢ are
//! listed. Several of the torus, sphere and Klein-bottle triangulations in
//! this toolkit are specified this way.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::simplex::Simplex;
use crate::symmetry::{expand_orbits, GroupSpec};
use itertools::Itertools;
use std::collections::HashSet;

/// The simplex of partial sums of `pattern` starting at 0 (mod `modulus`).
///
/// Fails if two partial sums collide mod `modulus` (they never do when the
/// entries are positive and sum to exactly `modulus`).
fn partial_sum_simplex(pattern: &[u32], modulus: u32) -> Result<Simplex> {
    let mut verts = Vec::with_capacity(pattern.len());
    let mut acc = 0u64;
    verts.push(0u32);
    for &d in &pattern[..pattern.len() - 1] {
        acc += u64::from(d);
        verts.push((acc % u64::from(modulus)) as u32);
    }
    Simplex::new(verts).map_err(|_| {
        Error::Precondition(format!(
            "difference pattern {pattern:?} has colliding partial sums mod {modulus}"
        ))
    })
}

/// Expands a single difference cycle into its ℤ_n orbit complex.
pub fn difference_cycle(pattern: &[u32], modulus: u32) -> Result<SimplicialComplex> {
    check_pattern(pattern, modulus)?;
    let seed = partial_sum_simplex(pattern, modulus)?;
    expand_orbits(&[seed], &GroupSpec::Cyclic { modulus }, 1 << 20)
}

/// Expands a permuted difference cycle: the union of the ℤ_n orbits over
/// every reordering of the pattern.
pub fn permuted_difference_cycle(pattern: &[u32], modulus: u32) -> Result<SimplicialComplex> {
    check_pattern(pattern, modulus)?;
    let k = pattern.len();
    let mut seeds: HashSet<Simplex> = HashSet::new();
    // `permutations` over the multiset repeats equal reorderings; the seed
    // set dedups them, and orbit expansion dedups rotations.
    for perm in pattern.iter().copied().permutations(k) {
        seeds.insert(partial_sum_simplex(&perm, modulus)?);
    }
    let mut seeds: Vec<Simplex> = seeds.into_iter().collect();
    seeds.sort_unstable();
    expand_orbits(&seeds, &GroupSpec::Cyclic { modulus }, 1 << 20)
}

fn check_pattern(pattern: &[u32], modulus: u32) -> Result<()> {
    if modulus == 0 {
        return Err(Error::Precondition("modulus must be positive".into()));
    }
    if pattern.is_empty() {
        return Err(Error::Precondition("empty difference pattern".into()));
    }
    if pattern.iter().any(|&d| d == 0) {
        return Err(Error::Precondition(
            "difference patterns must have positive entries".into(),
        ));
    }
    let sum: u64 = pattern.iter().map(|&d| u64::from(d)).sum();
    if sum % u64::from(modulus) != 0 {
        return Err(Error::Precondition(format!(
            "pattern {pattern:?} sums to {sum}, not a multiple of {modulus}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex;

    #[test]
    fn single_cycle_orbit() {
        // (1 : 2 : 4) mod 7: orbit of (0 1 3), length 7.
        let c = difference_cycle(&[1, 2, 4], 7).unwrap();
        assert_eq!(c.facet_count(), 7);
        assert!(c.contains_face(&simplex![0, 1, 3]));
        // (5 : 5 : 5) mod 15: orbit of (0 5 10), length 5.
        let short = difference_cycle(&[5, 5, 5], 15).unwrap();
        assert_eq!(short.facet_count(), 5);
    }

    #[test]
    fn permuted_cycle_unions_all_reorderings() {
        // (1 : 2 : 4) mod 7 permuted: reorderings give partial-sum sets
        // {0,1,3}, {0,1,5}, {0,2,3}, {0,2,6}, {0,4,5}, {0,4,6} — which all
        // lie in the two orbits of (0 1 3) and (0 1 5).
        let c = permuted_difference_cycle(&[1, 2, 4], 7).unwrap();
        assert_eq!(c.facet_count(), 14);
        assert!(c.contains_face(&simplex![0, 1, 5]));
    }

    #[test]
    fn mod_15_workhorse_expansions() {
        // (1 : 2 : 4 : 8) mod 15 permuted: 24 reorderings collapse to 6
        // ℤ₁₅-orbits of tetrahedra (cyclic rotations of a pattern give the
        // same orbit), so 90 facets; the complex is 2-neighborly.
        let torus = permuted_difference_cycle(&[1, 2, 4, 8], 15).unwrap();
        assert_eq!(torus.facet_count(), 90);
        assert!(torus.is_pure() && torus.dim() == 3);
        assert_eq!(torus.f_vector()[1], 15 * 14 / 2);
        assert_eq!(torus.euler_characteristic(), 0);
        // (1 : 1 : 1 : 4 : 8) mod 15 permuted: 20 distinct reorderings,
        // 4 orbits of 4-simplices, 60 facets.
        let solid = permuted_difference_cycle(&[1, 1, 1, 4, 8], 15).unwrap();
        assert_eq!(solid.facet_count(), 60);
        assert!(solid.is_pure() && solid.dim() == 4);
        assert!(solid.contains_face(&simplex![0, 1, 2, 3, 7]));
        assert!(solid.contains_face(&simplex![0, 4, 5, 6, 7]));
        // The 3-torus lives on the boundary of the solid handle union.
        assert!(torus.is_subcomplex_of(&solid));
    }

    #[test]
    fn bad_patterns_rejected() {
        assert!(difference_cycle(&[1, 2], 7).is_err()); // sum not ≡ 0
        assert!(difference_cycle(&[0, 7], 7).is_err()); // zero entry
        assert!(permuted_difference_cycle(&[], 7).is_err());
        // Sum a *proper* multiple of n with colliding partial sums:
        // pattern (7 : 7) mod 7 → partial sums {0, 0}.
        assert!(difference_cycle(&[7, 7], 7).is_err());
    }
}
