//! Exact-arithmetic models for rational dihedral equivariant algebra.
//!
//! Everything here runs over the rationals with no floating point: matrices,
//! bounded chain complexes with an order-two involution, the representable
//! diagram category that models dihedral spectra, its Burnside ring of
//! operations, derived hom and extension tables, and small dg-categories of
//! endomorphisms. The `verify` module packages the randomized law checks the
//! CLI exposes.

pub mod linalg;
pub mod dg;
pub mod dihedral;
pub mod burnside;
pub mod homotopy;
pub mod ringoid;
pub mod json;
pub mod sample;
pub mod verify;

pub use linalg::{QMatrix, Rational, Subspace};
