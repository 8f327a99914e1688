//! Side-by-side numeric invariants of two graded superalgebras.
//!
//! Equal invariants never certify an isomorphism, so the abstract verdict is
//! always "undecided"; a graded isomorphism is ruled out when the graded
//! dimension vectors differ.

use serde::Serialize;

use crate::glsa::GradedLsa;

#[derive(Debug, Clone, Serialize)]
pub struct ComparisonReport {
    pub superdim_a: (usize, usize),
    pub superdim_b: (usize, usize),
    pub superdim_equal: bool,
    /// (degree, even dim, odd dim), ascending by degree
    pub graded_a: Vec<(i64, usize, usize)>,
    pub graded_b: Vec<(i64, usize, usize)>,
    pub graded_equal: bool,
    pub derived_a: usize,
    pub derived_b: usize,
    pub derived_equal: bool,
    pub even_derived_a: usize,
    pub even_derived_b: usize,
    pub even_derived_equal: bool,
    /// "excluded" when the graded dimensions differ, otherwise "undecided"
    pub graded_isomorphism: String,
    /// invariant agreement is one-directional evidence, so always "undecided"
    pub abstract_isomorphism: String,
}

fn graded_vector(g: &GradedLsa) -> Vec<(i64, usize, usize)> {
    g.graded_dims().into_iter().map(|(p, (e, o))| (p, e, o)).collect()
}

pub fn compare_invariants(a: &GradedLsa, b: &GradedLsa) -> ComparisonReport {
    let graded_a = graded_vector(a);
    let graded_b = graded_vector(b);
    let graded_equal = graded_a == graded_b;
    let superdim_a = a.superdim();
    let superdim_b = b.superdim();
    let derived_a = a.derived_dim();
    let derived_b = b.derived_dim();
    let even_derived_a = a.even_derived_dim();
    let even_derived_b = b.even_derived_dim();
    ComparisonReport {
        superdim_a,
        superdim_b,
        superdim_equal: superdim_a == superdim_b,
        graded_equal,
        graded_a,
        graded_b,
        derived_a,
        derived_b,
        derived_equal: derived_a == derived_b,
        even_derived_a,
        even_derived_b,
        even_derived_equal: even_derived_a == even_derived_b,
        graded_isomorphism: if graded_equal { "undecided" } else { "excluded" }.to_string(),
        abstract_isomorphism: "undecided".to_string(),
    }
}
