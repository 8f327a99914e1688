//! Explicit algebra models: simple Lie algebras in a Chevalley basis,
//! superderivations of a Grassmann algebra, the contraction/Lie-derivative/
//! differential superalgebra over a Lie algebra, isotropy invariants of
//! tangent-twisted form modules, and invariant comparison of models.

mod chevalley;
mod compare;
mod hatd;
mod isotropy;
mod vect;

pub use chevalley::{chevalley_algebra, ChevalleyModel};
pub use compare::{compare_invariants, ComparisonReport};
pub use hatd::hat_d;
pub use isotropy::tangent_invariant_dim;
pub use vect::vect_superpoint;
