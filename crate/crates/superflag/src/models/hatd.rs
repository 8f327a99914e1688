//! The graded superalgebra of contractions, Lie derivatives, a grading
//! operator, and a differential attached to a semisimple Lie algebra.
//!
//! For g of dimension n the result has dimension 2n + 2: contractions i_v in
//! degree -1 (odd), Lie derivatives th_v and the grading operator eps in
//! degree 0 (even), and the differential d in degree 1 (odd).  The bracket
//! table encodes the usual calculus identities, with both families of
//! brackets among i's and th's inherited from g.

use crate::glsa::{BasisElement, GradedLsa, SparseVec};
use crate::linalg::q;
use crate::{Error, Result};

use super::chevalley::ChevalleyModel;

pub fn hat_d(model: &ChevalleyModel) -> Result<GradedLsa> {
    let g = model.algebra();
    let n = g.dim();
    let eps = 2 * n;
    let d = 2 * n + 1;

    let mut basis = Vec::with_capacity(2 * n + 2);
    for b in g.basis() {
        basis.push(BasisElement::graded(format!("i({})", b.label()), -1));
    }
    for b in g.basis() {
        basis.push(BasisElement::graded(format!("th({})", b.label()), 0));
    }
    basis.push(BasisElement::graded("eps".to_string(), 0));
    basis.push(BasisElement::graded("d".to_string(), 1));

    let shift = |v: SparseVec, off: usize| -> SparseVec {
        v.into_iter().map(|(t, c)| (t + off, c)).collect()
    };

    let mut brackets: Vec<(usize, usize, SparseVec)> = Vec::new();
    for v in 0..n {
        for u in 0..n {
            // [i_v, th_u] = i_[v,u]
            let w = g.bracket(v, u);
            if !w.is_empty() {
                brackets.push((v, n + u, shift(w, 0)));
            }
        }
        // [i_v, eps] = i_v and [i_v, d] = th_v
        brackets.push((v, eps, vec![(v, q(1))]));
        brackets.push((v, d, vec![(n + v, q(1))]));
    }
    for u in 0..n {
        for t in (u + 1)..n {
            let w = g.bracket(u, t);
            if !w.is_empty() {
                brackets.push((n + u, n + t, shift(w, n)));
            }
        }
    }
    brackets.push((eps, d, vec![(d, q(1))]));

    GradedLsa::new(basis, brackets)
        .map_err(|err| Error::Internal(format!("bad calculus bracket table: {err}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::chevalley_algebra;
    use crate::roots::{build_root_system, SemisimpleType};

    fn calculus(t: &str) -> (GradedLsa, usize) {
        let model = chevalley_algebra(
            build_root_system(&t.parse::<SemisimpleType>().unwrap()).unwrap(),
        )
        .unwrap();
        let n = model.dim();
        (hat_d(&model).unwrap(), n)
    }

    #[test]
    fn rank_one_shape() {
        let (g, n) = calculus("A1");
        assert_eq!(n, 3);
        assert_eq!(g.dim(), 8);
        assert_eq!(g.superdim(), (4, 4));
        let mut dims = g.graded_dims().into_iter().collect::<Vec<_>>();
        dims.sort();
        assert_eq!(dims, vec![(-1, (0, 3)), (0, (4, 0)), (1, (0, 1))]);
        assert!(g.super_jacobi_violations().is_empty());
        assert!(g.is_transitive());
        assert!(g.is_irreducible().unwrap());
    }

    #[test]
    fn calculus_identities() {
        let (g, n) = calculus("A2");
        let eps = 2 * n;
        let d = 2 * n + 1;
        for v in 0..n {
            // contractions anticommute and d closes the pair
            for w in v..n {
                assert!(g.bracket(v, w).is_empty());
            }
            assert_eq!(g.bracket(d, v), vec![(n + v, q(1))]);
            assert_eq!(g.bracket(eps, v), vec![(v, q(-1))]);
            assert!(g.bracket(d, n + v).is_empty());
        }
        assert_eq!(g.bracket(eps, d), vec![(d, q(1))]);
        assert!(g.bracket(d, d).is_empty());
        assert!(g.super_jacobi_violations().is_empty());
    }

    #[test]
    fn jacobi_across_types() {
        for t in ["A1", "A2", "B2", "A1xA1"] {
            let (g, _) = calculus(t);
            assert!(
                g.super_jacobi_violations().is_empty(),
                "jacobi fails for {t}"
            );
            assert!(g.is_transitive());
        }
    }

    #[test]
    fn grading_operator() {
        let (g, n) = calculus("A1");
        let z = g.grading_element().expect("grading element");
        assert_eq!(z, vec![(2 * n, q(1))]);
        let center = g.degree_zero_center();
        assert_eq!(center.len(), 1);
        assert_eq!(center[0], vec![(2 * n, q(1))]);
    }

    #[test]
    fn composite_base() {
        let model = chevalley_algebra(
            build_root_system(&"A1xA1".parse::<SemisimpleType>().unwrap()).unwrap(),
        )
        .unwrap();
        let g = hat_d(&model).unwrap();
        assert_eq!(g.dim(), 14);
        // adjoint action of a product is reducible on the contractions
        assert!(!g.is_irreducible().unwrap());
    }
}
