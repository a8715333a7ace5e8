//! Affine Weyl group combinatorics for basic loci of Coxeter type.
//!
//! The crate works with enhanced Coxeter data `(W̃, σ, μ, K)`: an extended
//! affine Weyl group of adjoint type, a diagram automorphism, a dominant
//! coweight and a spherical parahoric. It decides whether such a datum is of
//! Coxeter type, computes dimensions of affine Deligne-Lusztig varieties by
//! reduction, and describes the resulting stratification.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod admissible;
pub mod classifier;
pub mod datum;
pub mod dl_reduction;
pub mod error;
mod linalg;
pub mod root_data;
pub mod smoothness;
pub mod strata;
pub mod weyl;

pub use datum::CoxeterDatum;
pub use error::Error;
pub use root_data::{CartanType, Family, Node, NodeSet, RootDatum};
pub use weyl::{AffineWeylGroup, DiagramAut, Element};
