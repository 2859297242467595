//! Exact-arithmetic toolkit for Euclidean lattices and Hermitian lattices
//! over imaginary quadratic fields.
//!
//! Everything is computed in exact rational arithmetic: Gram matrices,
//! determinants, short-vector norms, Voronoi cells, discriminant bounds.
//! Floating point is used only as a pruning heuristic inside the
//! short-vector enumerator, and every candidate it produces is re-verified
//! exactly before it is reported.
//!
//! The main pieces:
//!
//! * [`number_field`] — arithmetic in K = ℚ(√−d): norms, traces, Euclidean
//!   division, norm-equation solving, Euclidean minima and deep holes.
//! * [`zlattice`] — Euclidean lattices given by rational Gram matrices:
//!   short vectors, minima, duals, tensor products, perfection ranks,
//!   isometry testing.
//! * [`hermitian`] — free Hermitian O_K-lattices: trace lattices, duals,
//!   minimal sublattice discriminants d_r, Hermitian tensor products.
//! * [`certify`] — certification pipelines for minima of Hermitian tensor
//!   products, sublattice representation counting, and tensor perfection
//!   reports.
//! * [`catalog`] — built-in corpus of reference lattices plus JSON
//!   ingestion and serialization.

pub mod bound;
pub mod catalog;
pub mod certify;
pub mod error;
pub mod hermitian;
pub mod matrix;
pub mod number_field;
pub mod rat;
pub mod zlattice;

pub use error::{Error, Result};
pub use rat::Rational;
