//! hopfforge-core: a combinatorial-topology kernel for building and
//! certifying highly symmetric triangulations.
//!
//! The crate provides, bottom-up:
//!
//! * [`simplex`] / [`complex`] — abstract simplicial complexes with the
//!   standard local operations (links, stars, joins, stellar subdivisions);
//! * [`mask`] — the 128-vertex bitmask fast path shared by the heavy
//!   algorithms;
//! * [`symmetry`] — permutation groups, orbit expansion of generating
//!   simplices, quotients and double covers;
//! * [`exact`] — exact arithmetic: rationals, ℚ(√5), dyadic interval
//!   enclosures with certified sign decisions, and a small exact LP;
//! * [`homology`] — integral and mod-2 simplicial homology with collapse
//!   and coreduction preprocessing;
//! * [`recognition`] — pseudomanifold/sphere/manifold certification,
//!   bistellar-flip search and discrete-Morse collapsing;
//! * [`constructions`] — the concrete triangulation builders (cyclic and
//!   bicyclic polytope boundaries, cube-based projective planes and spaces,
//!   sphere product decompositions);
//! * [`hopf`] — decomposition verifiers and assemblers for sphere fibrations
//!   and the equilibrium structure of the projective-space triangulations;
//! * [`tightness`] — tight-embedding certificates.

pub mod complex;
pub mod constructions;
pub mod data;
pub mod error;
pub mod exact;
pub mod homology;
pub mod hopf;
pub mod io;
pub mod mask;
pub mod permcycle;
pub mod recognition;
pub mod simplex;
pub mod symmetry;

pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use simplex::{Simplex, Vertex};
