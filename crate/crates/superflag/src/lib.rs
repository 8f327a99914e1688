//! Exact computations around homogeneous split supermanifolds `(M, Λ(E))` where
//! `M = G/P` is a flag variety of a semisimple group and `E` is induced from an
//! irreducible `P`-module.
//!
//! The crate computes dimensions (or exact intervals) for the graded pieces of
//! the superalgebra of vector fields on such a supermanifold, decides
//! transitivity and irreducibility of finite-dimensional graded Lie
//! superalgebras given by structure constants, and builds explicit models to
//! cross-check everything against. All arithmetic is exact: weights and
//! multiplicities are integers, structure constants and elimination steps are
//! arbitrary-precision rationals.

pub mod chars;
pub mod flag;
pub mod glsa;
pub mod linalg;
pub mod models;
pub mod roots;
pub mod sections;
pub mod superfields;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
