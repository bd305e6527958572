//! Exact combinatorics of GKZ composition factors.
//!
//! Given an integer configuration `A` and a rational parameter `γ`, this crate computes
//! the face lattice of the cone over `A`, facet functionals, saturation and normality,
//! exact semigroup membership, the resonance loci `res`, `sres`, `dres`, `wres`,
//! `SRes`, `DRes`, and composition-factor labels for the weight filtrations of the
//! associated D-modules and perverse sheaves.
//!
//! Everything is exact: integers are arbitrary precision and parameters are rationals.
//! Brute-force oracles for cross-checking live in [`oracle`].

#![no_std]

extern crate alloc;

pub mod arith;
pub mod cone;
pub mod error;
pub mod factors;
pub mod geometry;
pub mod lattice;
pub mod oracle;
pub mod resonance;
pub mod semigroup;

pub use arith::{Int, Rat};
pub use error::{Error, Result};
pub use geometry::{Configuration, Face, FacetFunctional};
pub use lattice::{IntMatrix, LatticeQuotient};
