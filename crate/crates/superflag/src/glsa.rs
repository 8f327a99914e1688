//! Finite-dimensional Z-graded Lie superalgebras over the rationals, given by
//! a homogeneous basis and a table of structure constants.
//!
//! Parity is tied to the grading: a basis element of degree p has parity
//! p mod 2.  The table stores brackets for index pairs i <= j only; the other
//! order is recovered from [x, y] = -(-1)^{|x||y|} [y, x].  Constructors
//! validate the grading, so every stored bracket is homogeneous, but they do
//! not check the Jacobi identity; that is a separate, reportable check.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::linalg::{q, QMat, RowSpan, Q};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_degree(p: i64) -> Parity {
        if p.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(&self) -> bool {
        matches!(self, Parity::Odd)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    label: String,
    degree: i64,
    parity: Parity,
}

impl BasisElement {
    pub fn new(label: impl Into<String>, degree: i64, parity: Parity) -> BasisElement {
        BasisElement { label: label.into(), degree, parity }
    }

    /// Element with the parity forced by its degree.
    pub fn graded(label: impl Into<String>, degree: i64) -> BasisElement {
        BasisElement::new(label, degree, Parity::of_degree(degree))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }
}

/// Sparse vector in the basis: sorted index/coefficient pairs, no zeros.
pub type SparseVec = Vec<(usize, Q)>;

/// Accumulates duplicate indices and drops zeros; result is sorted.
pub fn normalize_sparse(v: SparseVec) -> SparseVec {
    let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
    for (k, c) in v {
        let e = acc.entry(k).or_insert_with(Q::zero);
        *e += c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn scale_sparse(v: &[(usize, Q)], c: &Q) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(k, a)| (*k, a * c)).collect()
}

pub struct GradedLsa {
    basis: Vec<BasisElement>,
    // upper-triangle pair index (i <= j); empty vec means zero bracket
    table: Vec<SparseVec>,
}

fn pair_index(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i <= j && j < n);
    i * (2 * n - i + 1) / 2 + (j - i)
}

impl GradedLsa {
    pub fn new(
        basis: Vec<BasisElement>,
        brackets: Vec<(usize, usize, SparseVec)>,
    ) -> Result<GradedLsa> {
        let n = basis.len();
        for (index, b) in basis.iter().enumerate() {
            if Parity::of_degree(b.degree) != b.parity {
                return Err(Error::ParityDegreeMismatch { index, degree: b.degree });
            }
        }
        let mut table = vec![Vec::new(); n * (n + 1) / 2];
        let mut seen = vec![false; n * (n + 1) / 2];
        for (i, j, v) in brackets {
            if i >= n {
                return Err(Error::BasisIndexOutOfRange(i, n));
            }
            if j >= n {
                return Err(Error::BasisIndexOutOfRange(j, n));
            }
            if i > j {
                return Err(Error::BracketKeyOrder { i, j });
            }
            let v = normalize_sparse(v);
            if i == j && !basis[i].parity.is_odd() && !v.is_empty() {
                return Err(Error::EvenSelfBracket(i));
            }
            let deg = basis[i].degree + basis[j].degree;
            for &(k, _) in &v {
                if k >= n {
                    return Err(Error::BasisIndexOutOfRange(k, n));
                }
                if basis[k].degree != deg {
                    return Err(Error::BracketGrading { i, j, k });
                }
            }
            let p = pair_index(i, j, n);
            if seen[p] {
                return Err(Error::DuplicateBracket(i, j));
            }
            seen[p] = true;
            table[p] = v;
        }
        Ok(GradedLsa { basis, table })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    /// (even, odd) dimensions.
    pub fn superdim(&self) -> (usize, usize) {
        let odd = self.basis.iter().filter(|b| b.parity.is_odd()).count();
        (self.basis.len() - odd, odd)
    }

    /// (even, odd) dimensions per occupied degree.
    pub fn graded_dims(&self) -> BTreeMap<i64, (usize, usize)> {
        let mut m: BTreeMap<i64, (usize, usize)> = BTreeMap::new();
        for b in &self.basis {
            let e = m.entry(b.degree).or_insert((0, 0));
            if b.parity.is_odd() {
                e.1 += 1;
            } else {
                e.0 += 1;
            }
        }
        m
    }

    pub fn indices_of_degree(&self, p: i64) -> Vec<usize> {
        (0..self.basis.len()).filter(|&i| self.basis[i].degree == p).collect()
    }

    /// Bracket of two basis elements, either index order.
    pub fn bracket(&self, i: usize, j: usize) -> SparseVec {
        let n = self.basis.len();
        if i <= j {
            self.table[pair_index(i, j, n)].clone()
        } else {
            let stored = &self.table[pair_index(j, i, n)];
            let both_odd = self.basis[i].parity.is_odd() && self.basis[j].parity.is_odd();
            let sign = if both_odd { q(1) } else { q(-1) };
            scale_sparse(stored, &sign)
        }
    }

    fn bracket_sparse_basis(&self, x: &[(usize, Q)], j: usize) -> SparseVec {
        let mut out = Vec::new();
        for (i, c) in x {
            out.extend(scale_sparse(&self.bracket(*i, j), c));
        }
        normalize_sparse(out)
    }

    fn bracket_basis_sparse(&self, i: usize, v: &[(usize, Q)]) -> SparseVec {
        let mut out = Vec::new();
        for (t, c) in v {
            out.extend(scale_sparse(&self.bracket(i, *t), c));
        }
        normalize_sparse(out)
    }

    /// Index triples (i, j, k), i <= j, where the Jacobi identity fails.
    ///
    /// The identity is checked in the derivation form
    /// [[x,y],z] = [x,[y,z]] - (-1)^{|x||y|} [y,[x,z]];
    /// swapping x and y only rescales it, so pairs i <= j suffice.
    pub fn super_jacobi_violations(&self) -> Vec<(usize, usize, usize)> {
        let n = self.basis.len();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in i..n {
                let xy = self.bracket(i, j);
                let both_odd =
                    self.basis[i].parity.is_odd() && self.basis[j].parity.is_odd();
                let sign = if both_odd { q(-1) } else { q(1) };
                for k in 0..n {
                    let mut d = self.bracket_sparse_basis(&xy, k);
                    let yz = self.bracket(j, k);
                    d.extend(scale_sparse(&self.bracket_basis_sparse(i, &yz), &q(-1)));
                    let xz = self.bracket(i, k);
                    d.extend(scale_sparse(&self.bracket_basis_sparse(j, &xz), &sign));
                    if !normalize_sparse(d).is_empty() {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }

    /// No nonzero element of degree p >= 0 commutes with all of degree -1.
    pub fn is_transitive(&self) -> bool {
        let neg = self.indices_of_degree(-1);
        let degrees: Vec<i64> = {
            let mut d: Vec<i64> =
                self.basis.iter().map(|b| b.degree).filter(|&p| p >= 0).collect();
            d.sort_unstable();
            d.dedup();
            d
        };
        for p in degrees {
            let cols = self.indices_of_degree(p);
            if cols.is_empty() {
                continue;
            }
            if neg.is_empty() {
                return false;
            }
            let targets = self.indices_of_degree(p - 1);
            let pos: BTreeMap<usize, usize> =
                targets.iter().enumerate().map(|(r, &t)| (t, r)).collect();
            let mut mat = QMat::zero(neg.len() * targets.len().max(1), cols.len());
            for (mi, &m) in neg.iter().enumerate() {
                for (ci, &x) in cols.iter().enumerate() {
                    for (t, c) in self.bracket(x, m) {
                        mat.set(mi * targets.len() + pos[&t], ci, c);
                    }
                }
            }
            if mat.rank() < cols.len() {
                return false;
            }
        }
        true
    }

    /// The degree-0 part acts irreducibly (in the absolute sense) on the
    /// degree -1 part: the generated matrix algebra fills End of that space.
    pub fn is_irreducible(&self) -> Result<bool> {
        let neg = self.indices_of_degree(-1);
        let n = neg.len();
        if n == 0 {
            return Err(Error::EmptyNegativePart);
        }
        let pos: BTreeMap<usize, usize> =
            neg.iter().enumerate().map(|(r, &t)| (t, r)).collect();
        // row-major n x n action matrices, flattened
        let mut gens: Vec<Vec<Q>> = Vec::new();
        for z in self.indices_of_degree(0) {
            let mut a = vec![Q::zero(); n * n];
            for (c, &m) in neg.iter().enumerate() {
                for (t, coeff) in self.bracket(z, m) {
                    a[pos[&t] * n + c] = coeff;
                }
            }
            gens.push(a);
        }
        let mut id = vec![Q::zero(); n * n];
        for r in 0..n {
            id[r * n + r] = Q::one();
        }
        let mut span = RowSpan::new(n * n);
        let mut work: Vec<Vec<Q>> = Vec::new();
        if span.insert(id.clone()) {
            work.push(id);
        }
        for g in &gens {
            if span.insert(g.clone()) {
                work.push(g.clone());
            }
        }
        while let Some(m) = work.pop() {
            if span.dim() == n * n {
                return Ok(true);
            }
            for g in &gens {
                let mut prod = vec![Q::zero(); n * n];
                for r in 0..n {
                    for k in 0..n {
                        let grk = &g[r * n + k];
                        if grk.is_zero() {
                            continue;
                        }
                        for c in 0..n {
                            let v = &m[k * n + c];
                            if !v.is_zero() {
                                prod[r * n + c] += grk * v;
                            }
                        }
                    }
                }
                if span.insert(prod.clone()) {
                    work.push(prod);
                }
            }
        }
        Ok(span.dim() == n * n)
    }

    /// Degree-0 element acting as p times the identity on each degree-p piece,
    /// as coefficients over the degree-0 basis; None when no such element.
    pub fn grading_element(&self) -> Option<SparseVec> {
        let zero_deg = self.indices_of_degree(0);
        let n = self.basis.len();
        if zero_deg.is_empty() {
            return self.basis.is_empty().then(Vec::new);
        }
        let mut mat = QMat::zero(n * n, zero_deg.len());
        let mut rhs = vec![Q::zero(); n * n];
        for (ci, &z) in zero_deg.iter().enumerate() {
            for j in 0..n {
                for (t, c) in self.bracket(z, j) {
                    mat.set(j * n + t, ci, c);
                }
            }
        }
        for j in 0..n {
            rhs[j * n + j] = q(self.basis[j].degree);
        }
        let sol = mat.solve(&rhs)?;
        Some(
            zero_deg
                .into_iter()
                .zip(sol)
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        )
    }

    /// Dimension of the span of all brackets.
    pub fn derived_dim(&self) -> usize {
        let mut span = RowSpan::new(self.basis.len());
        for v in &self.table {
            if !v.is_empty() {
                let mut row = vec![Q::zero(); self.basis.len()];
                for (k, c) in v {
                    row[*k] = c.clone();
                }
                span.insert(row);
            }
        }
        span.dim()
    }

    /// Dimension of the derived algebra of the even part alone.
    pub fn even_derived_dim(&self) -> usize {
        let n = self.basis.len();
        let mut span = RowSpan::new(n);
        for i in 0..n {
            if self.basis[i].parity.is_odd() {
                continue;
            }
            for j in i..n {
                if self.basis[j].parity.is_odd() {
                    continue;
                }
                let v = &self.table[pair_index(i, j, n)];
                if !v.is_empty() {
                    let mut row = vec![Q::zero(); n];
                    for (k, c) in v {
                        row[*k] = c.clone();
                    }
                    span.insert(row);
                }
            }
        }
        span.dim()
    }

    /// Basis of the center of the degree-0 subalgebra.
    pub fn degree_zero_center(&self) -> Vec<SparseVec> {
        let zero_deg = self.indices_of_degree(0);
        if zero_deg.is_empty() {
            return Vec::new();
        }
        let n = self.basis.len();
        let mut mat = QMat::zero(zero_deg.len() * n, zero_deg.len());
        for (ci, &z) in zero_deg.iter().enumerate() {
            for (wi, &w) in zero_deg.iter().enumerate() {
                for (t, c) in self.bracket(z, w) {
                    mat.set(wi * n + t, ci, c);
                }
            }
        }
        mat.kernel_basis()
            .into_iter()
            .map(|v| {
                zero_deg
                    .iter()
                    .zip(v)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(&i, c)| (i, c))
                    .collect()
            })
            .collect()
    }

    /// Serialize basis and bracket table; coefficients as exact strings.
    pub fn to_json(&self) -> String {
        let n = self.basis.len();
        let basis: Vec<JsonBasis> = self
            .basis
            .iter()
            .map(|b| JsonBasis {
                label: b.label.clone(),
                degree: b.degree,
                parity: if b.parity.is_odd() { "odd" } else { "even" }.to_string(),
            })
            .collect();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i..n {
                let v = &self.table[pair_index(i, j, n)];
                if v.is_empty() {
                    continue;
                }
                let mut dense = vec!["0".to_string(); n];
                for (k, c) in v {
                    dense[*k] = c.to_string();
                }
                brackets.push((i, j, dense));
            }
        }
        serde_json::to_string_pretty(&JsonModel { basis, brackets })
            .expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<GradedLsa> {
        let parsed: JsonModel =
            serde_json::from_str(s).map_err(|e| Error::ModelJson(e.to_string()))?;
        let n = parsed.basis.len();
        let mut basis = Vec::with_capacity(n);
        for b in parsed.basis {
            let parity = match b.parity.as_str() {
                "even" => Parity::Even,
                "odd" => Parity::Odd,
                other => {
                    return Err(Error::ModelJson(format!(
                        "parity must be \"even\" or \"odd\", got {other:?}"
                    )))
                }
            };
            basis.push(BasisElement::new(b.label, b.degree, parity));
        }
        let mut brackets = Vec::new();
        for (i, j, dense) in parsed.brackets {
            if dense.len() != n {
                return Err(Error::ModelJson(format!(
                    "bracket [{i}, {j}] has {} coefficients, basis has {n}",
                    dense.len()
                )));
            }
            let mut v = Vec::new();
            for (k, s) in dense.iter().enumerate() {
                let c: Q = s.parse().map_err(|_| {
                    Error::ModelJson(format!("bad rational {s:?} in bracket [{i}, {j}]"))
                })?;
                if !c.is_zero() {
                    v.push((k, c));
                }
            }
            brackets.push((i, j, v));
        }
        GradedLsa::new(basis, brackets)
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct JsonModel {
    basis: Vec<JsonBasis>,
    brackets: Vec<(usize, usize, Vec<String>)>,
}

#[derive(serde::Serialize, serde::Deserialize)]
struct JsonBasis {
    label: String,
    degree: i64,
    parity: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    // derivations of the one-odd-variable line: basis d/dx (degree -1),
    // x d/dx (degree 0), with x odd
    fn odd_line() -> GradedLsa {
        GradedLsa::new(
            vec![BasisElement::graded("D", -1), BasisElement::graded("xD", 0)],
            vec![(0, 1, vec![(0, q(1))])],
        )
        .unwrap()
    }

    #[test]
    fn constructor_validation() {
        let b =|d| BasisElement::graded("b", d);
        let mism = GradedLsa::new(vec![BasisElement::new("b", 1, Parity::Even)], vec![]);
        assert!(matches!(mism, Err(Error::ParityDegreeMismatch { .. })));

        let order =
            GradedLsa::new(vec![b(-1), b(0)], vec![(1, 0, vec![(0, q(1))])]);
        assert!(matches!(order, Err(Error::BracketKeyOrder { i: 1, j: 0 })));

        let selfbr = GradedLsa::new(vec![b(0)], vec![(0, 0, vec![(0, q(1))])]);
        assert!(matches!(selfbr, Err(Error::EvenSelfBracket(0))));

        let graded = GradedLsa::new(vec![b(-1), b(0)], vec![(0, 1, vec![(1, q(1))])]);
        assert!(matches!(graded, Err(Error::BracketGrading { i: 0, j: 1, k: 1 })));

        let range = GradedLsa::new(vec![b(0)], vec![(0, 3, vec![])]);
        assert!(matches!(range, Err(Error::BasisIndexOutOfRange(3, 1))));

        let dup = GradedLsa::new(
            vec![b(-1), b(0)],
            vec![(0, 1, vec![(0, q(1))]), (0, 1, vec![(0, q(2))])],
        );
        assert!(matches!(dup, Err(Error::DuplicateBracket(0, 1))));

        // a self-bracket that cancels to zero is fine
        let ok = GradedLsa::new(vec![b(0)], vec![(0, 0, vec![(0, q(1)), (0, q(-1))])]);
        assert!(ok.is_ok());
    }

    #[test]
    fn bracket_symmetry() {
        let g = odd_line();
        // odd/even pair: flipping the order flips the sign
        assert_eq!(g.bracket(0, 1), vec![(0, q(1))]);
        assert_eq!(g.bracket(1, 0), vec![(0, q(-1))]);

        // two odd elements bracket symmetrically
        let h = GradedLsa::new(
            vec![
                BasisElement::graded("x", -1),
                BasisElement::graded("h", 0),
                BasisElement::graded("y", 1),
            ],
            vec![(0, 2, vec![(1, q(1))])],
        )
        .unwrap();
        assert_eq!(h.bracket(0, 2), vec![(1, q(1))]);
        assert_eq!(h.bracket(2, 0), vec![(1, q(1))]);
    }

    #[test]
    fn jacobi_detection() {
        assert!(odd_line().super_jacobi_violations().is_empty());

        // super Heisenberg: [x, y] = h with h central; consistent
        let heis = GradedLsa::new(
            vec![
                BasisElement::graded("x", -1),
                BasisElement::graded("h", 0),
                BasisElement::graded("y", 1),
            ],
            vec![(0, 2, vec![(1, q(1))])],
        )
        .unwrap();
        assert!(heis.super_jacobi_violations().is_empty());

        // making h act on y breaks the identity
        let broken = GradedLsa::new(
            vec![
                BasisElement::graded("x", -1),
                BasisElement::graded("h", 0),
                BasisElement::graded("y", 1),
            ],
            vec![(0, 2, vec![(1, q(1))]), (1, 2, vec![(2, q(1))])],
        )
        .unwrap();
        let bad = broken.super_jacobi_violations();
        assert!(bad.contains(&(0, 1, 2)), "{bad:?}");
    }

    #[test]
    fn transitivity() {
        assert!(odd_line().is_transitive());

        // nothing in degree -1 but something above: not transitive
        let stranded = GradedLsa::new(vec![BasisElement::graded("u", 1)], vec![]).unwrap();
        assert!(!stranded.is_transitive());

        // central degree-0 element is killed by everything
        let heis = GradedLsa::new(
            vec![
                BasisElement::graded("x", -1),
                BasisElement::graded("h", 0),
                BasisElement::graded("y", 1),
            ],
            vec![(0, 2, vec![(1, q(1))])],
        )
        .unwrap();
        assert!(!heis.is_transitive());
    }

    #[test]
    fn irreducibility() {
        assert!(odd_line().is_irreducible().unwrap());

        // scalar action on a 2-dim space: every line is invariant
        let scalar = GradedLsa::new(
            vec![
                BasisElement::graded("m1", -1),
                BasisElement::graded("m2", -1),
                BasisElement::graded("z", 0),
            ],
            vec![(0, 2, vec![(0, q(-1))]), (1, 2, vec![(1, q(-1))])],
        )
        .unwrap();
        assert!(!scalar.is_irreducible().unwrap());

        let empty = GradedLsa::new(vec![BasisElement::graded("u", 0)], vec![]).unwrap();
        assert!(matches!(empty.is_irreducible(), Err(Error::EmptyNegativePart)));
    }

    #[test]
    fn grading_element_and_invariants() {
        let g = odd_line();
        assert_eq!(g.grading_element(), Some(vec![(1, q(1))]));
        assert_eq!(g.superdim(), (1, 1));
        assert_eq!(g.graded_dims(), [(-1, (0, 1)), (0, (1, 0))].into());
        assert_eq!(g.derived_dim(), 1);
        assert_eq!(g.even_derived_dim(), 0);
        assert_eq!(g.degree_zero_center(), vec![vec![(1, q(1))]]);

        // no grading element when degree 0 acts trivially on nonzero degrees
        let heis = GradedLsa::new(
            vec![
                BasisElement::graded("x", -1),
                BasisElement::graded("h", 0),
                BasisElement::graded("y", 1),
            ],
            vec![(0, 2, vec![(1, q(1))])],
        )
        .unwrap();
        assert_eq!(heis.grading_element(), None);
    }

    #[test]
    fn json_round_trip() {
        let g = odd_line();
        let s = g.to_json();
        let back = GradedLsa::from_json(&s).unwrap();
        assert_eq!(back.basis(), g.basis());
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                assert_eq!(back.bracket(i, j), g.bracket(i, j));
            }
        }

        assert!(matches!(GradedLsa::from_json("{"), Err(Error::ModelJson(_))));
        let bad_parity = r#"{"basis":[{"label":"a","degree":0,"parity":"up"}],"brackets":[]}"#;
        assert!(matches!(GradedLsa::from_json(bad_parity), Err(Error::ModelJson(_))));
        let bad_len =
            r#"{"basis":[{"label":"a","degree":0,"parity":"even"}],"brackets":[[0,0,[]]]}"#;
        assert!(matches!(GradedLsa::from_json(bad_len), Err(Error::ModelJson(_))));
        let bad_q = r#"{"basis":[{"label":"a","degree":0,"parity":"even"}],"brackets":[[0,0,["x"]]]}"#;
        assert!(matches!(GradedLsa::from_json(bad_q), Err(Error::ModelJson(_))));
    }
}
