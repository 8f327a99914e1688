//! Semisimple Lie algebras over the rationals in a Chevalley basis
//! h_1..h_r, e_alpha, f_alpha, with integer structure constants.
//!
//! The signs of the constants N_{a,b} ([e_a, e_b] = N_{a,b} e_{a+b}) are fixed
//! level by level: for each target root the decomposition pair with the
//! smallest first member in the canonical root order is pinned to +(p+1),
//! p the string length, and the remaining pairs are solved from the Jacobi
//! relations on positive root triples summing to the target.  The solved
//! values are checked against |N| = p+1; any mismatch is a bug, not an input
//! condition.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{ToPrimitive, Zero};

use crate::glsa::{BasisElement, GradedLsa, SparseVec};
use crate::linalg::{q, QMat, Q};
use crate::roots::RootSystem;
use crate::{Error, Result};

/// A Chevalley-basis Lie algebra with its root-space labeling.  The algebra
/// sits in degree 0, all even, so the graded container is a plain one.
pub struct ChevalleyModel {
    system: Arc<RootSystem>,
    algebra: GradedLsa,
}

impl ChevalleyModel {
    pub fn system(&self) -> &Arc<RootSystem> {
        &self.system
    }

    pub fn algebra(&self) -> &GradedLsa {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Basis index of the coroot generator h_i, i < rank.
    pub fn h_index(&self, i: usize) -> usize {
        debug_assert!(i < self.system.rank());
        i
    }

    /// Basis index of e_alpha for the positive root with canonical index a.
    pub fn e_index(&self, a: usize) -> usize {
        debug_assert!(a < self.system.num_positive_roots());
        self.system.rank() + a
    }

    /// Basis index of f_alpha.
    pub fn f_index(&self, a: usize) -> usize {
        debug_assert!(a < self.system.num_positive_roots());
        self.system.rank() + self.system.num_positive_roots() + a
    }

    pub fn bracket(&self, i: usize, j: usize) -> SparseVec {
        self.algebra.bracket(i, j)
    }
}

// N_{a,b} with sign handling; zero when the sum is not a positive root
fn n_of(table: &HashMap<(usize, usize), i64>, a: usize, b: usize) -> i64 {
    if a < b {
        table.get(&(a, b)).copied().unwrap_or(0)
    } else if a > b {
        -table.get(&(b, a)).copied().unwrap_or(0)
    } else {
        0
    }
}

fn positive_constants(rs: &RootSystem) -> Result<HashMap<(usize, usize), i64>> {
    let np = rs.num_positive_roots();
    let mut table: HashMap<(usize, usize), i64> = HashMap::new();
    for g in 0..np {
        let gr = rs.positive_roots()[g].clone();
        if gr.height() < 2 {
            continue;
        }
        let gs = gr.simple_coords().to_vec();
        let internal =
            || Error::InternalUnderdetermined(gs.clone());

        // all decompositions of the target into two positive roots
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for a in 0..np {
            let ar = &rs.positive_roots()[a];
            if ar.height() >= gr.height() {
                break;
            }
            let diff: Vec<i64> =
                gs.iter().zip(ar.simple_coords()).map(|(x, y)| x - y).collect();
            if diff.iter().any(|&x| x < 0) {
                continue;
            }
            if let Some(b) = rs.positive_root_index_simple(&diff) {
                if a < b {
                    pairs.push((a, b));
                }
            }
        }
        if pairs.is_empty() {
            return Err(internal());
        }
        pairs.sort_unstable();
        let col: HashMap<(usize, usize), usize> =
            pairs.iter().enumerate().map(|(c, &p)| (p, c)).collect();
        let pin = pairs[0];
        let string = |a: usize, b: usize| {
            rs.string_down_len(
                rs.positive_roots()[b].simple_coords(),
                rs.positive_roots()[a].simple_coords(),
            )
        };
        let pin_val = string(pin.0, pin.1) + 1;

        let mut values = vec![0i64; pairs.len()];
        values[0] = pin_val;
        if pairs.len() > 1 {
            // Jacobi relations from triples a < b < c of positive roots
            // summing to the target; the inner constants sit at lower levels
            let mut rows: Vec<Vec<Q>> = Vec::new();
            let mut rhs: Vec<Q> = Vec::new();
            for a in 0..np {
                for b in (a + 1)..np {
                    let hs =
                        rs.positive_roots()[a].height() + rs.positive_roots()[b].height();
                    if hs >= gr.height() {
                        continue;
                    }
                    let diff: Vec<i64> = gs
                        .iter()
                        .zip(rs.positive_roots()[a].simple_coords())
                        .zip(rs.positive_roots()[b].simple_coords())
                        .map(|((x, y), z)| x - y - z)
                        .collect();
                    if diff.iter().any(|&x| x < 0) {
                        continue;
                    }
                    let Some(c) = rs.positive_root_index_simple(&diff) else {
                        continue;
                    };
                    if c <= b {
                        continue;
                    }
                    let mut row = vec![Q::zero(); pairs.len()];
                    let mut any = false;
                    // N_{a,b} x_{a+b,c} + N_{b,c} x_{b+c,a} + N_{c,a} x_{c+a,b} = 0
                    for (u, v, w) in [(a, b, c), (b, c, a), (c, a, b)] {
                        let sum: Vec<i64> = rs.positive_roots()[u]
                            .simple_coords()
                            .iter()
                            .zip(rs.positive_roots()[v].simple_coords())
                            .map(|(x, y)| x + y)
                            .collect();
                        let Some(s) = rs.positive_root_index_simple(&sum) else {
                            continue;
                        };
                        let known = n_of(&table, u, v);
                        if known == 0 {
                            return Err(internal());
                        }
                        let (key, sign) =
                            if s < w { ((s, w), 1) } else { ((w, s), -1) };
                        row[col[&key]] += q(known * sign);
                        any = true;
                    }
                    if any {
                        rhs.push(Q::zero());
                        rows.push(row);
                    }
                }
            }
            // substitute the pinned value and solve the rest
            let free: Vec<usize> = (1..pairs.len()).collect();
            let mut mat = QMat::zero(rows.len(), free.len());
            let mut b = Vec::with_capacity(rows.len());
            for (ri, row) in rows.iter().enumerate() {
                for (ci, &pc) in free.iter().enumerate() {
                    mat.set(ri, ci, row[pc].clone());
                }
                b.push(&rhs[ri] - &row[0] * q(pin_val));
            }
            let (sol, unique) = mat.solve_with_uniqueness(&b).ok_or_else(internal)?;
            if !unique {
                return Err(internal());
            }
            for (ci, &pc) in free.iter().enumerate() {
                if !sol[ci].is_integer() {
                    return Err(internal());
                }
                values[pc] = sol[ci].to_integer().to_i64().ok_or_else(internal)?;
            }
        }

        for (idx, &(a, b)) in pairs.iter().enumerate() {
            let expected = string(a, b) + 1;
            if values[idx].abs() != expected {
                return Err(internal());
            }
            table.insert((a, b), values[idx]);
        }
    }
    Ok(table)
}

// [e_a, f_b] for distinct positive roots a, b: a nonzero multiple of
// e_{a-b} or f_{b-a} when the difference is a root, zero otherwise
fn mixed_constant(
    rs: &RootSystem,
    table: &HashMap<(usize, usize), i64>,
    a: usize,
    b: usize,
) -> Result<Option<(bool, usize, i64)>> {
    let ar = &rs.positive_roots()[a];
    let br = &rs.positive_roots()[b];
    let diff: Vec<i64> = ar
        .simple_coords()
        .iter()
        .zip(br.simple_coords())
        .map(|(x, y)| x - y)
        .collect();
    let (on_e, d) = if diff.iter().all(|&x| x >= 0) {
        match rs.positive_root_index_simple(&diff) {
            Some(d) => (true, d),
            None => return Ok(None),
        }
    } else if diff.iter().all(|&x| x <= 0) {
        let neg: Vec<i64> = diff.iter().map(|&x| -x).collect();
        match rs.positive_root_index_simple(&neg) {
            Some(d) => (false, d),
            None => return Ok(None),
        }
    } else {
        return Ok(None);
    };
    let dr = &rs.positive_roots()[d];
    // cyclic proportionality N_{x,y}/|z|^2 over x+y+z = 0, with
    // N_{-x,-y} = -N_{x,y}, reduces both cases to positive constants
    let (num, den, inner) = if on_e {
        (dr.half_norm(), ar.half_norm(), n_of(table, b, d))
    } else {
        (dr.half_norm(), br.half_norm(), n_of(table, a, d))
    };
    if inner == 0 {
        return Err(Error::Internal(format!(
            "missing inner constant for mixed bracket at roots {a}, {b}"
        )));
    }
    let val = -num * inner;
    if val % den != 0 {
        return Err(Error::Internal(format!(
            "non-integer mixed constant at roots {a}, {b}"
        )));
    }
    Ok(Some((on_e, d, val / den)))
}

pub fn chevalley_algebra(system: Arc<RootSystem>) -> Result<ChevalleyModel> {
    let rs = system.as_ref();
    let r = rs.rank();
    let np = rs.num_positive_roots();
    let table = positive_constants(rs)?;

    let mut basis = Vec::with_capacity(r + 2 * np);
    for i in 0..r {
        basis.push(BasisElement::graded(format!("h{}", i + 1), 0));
    }
    let root_tag = |a: usize| {
        let cs: Vec<String> = rs.positive_roots()[a]
            .simple_coords()
            .iter()
            .map(|c| c.to_string())
            .collect();
        cs.join(",")
    };
    for a in 0..np {
        basis.push(BasisElement::graded(format!("e({})", root_tag(a)), 0));
    }
    for a in 0..np {
        basis.push(BasisElement::graded(format!("f({})", root_tag(a)), 0));
    }

    let e = |a: usize| r + a;
    let f = |a: usize| r + np + a;
    let mut brackets: Vec<(usize, usize, SparseVec)> = Vec::new();
    for i in 0..r {
        for a in 0..np {
            let c = rs.positive_roots()[a].weight().coords()[i];
            if c != 0 {
                brackets.push((i, e(a), vec![(e(a), q(c))]));
                brackets.push((i, f(a), vec![(f(a), q(-c))]));
            }
        }
    }
    for a in 0..np {
        for b in (a + 1)..np {
            let n = n_of(&table, a, b);
            if n != 0 {
                let sum: Vec<i64> = rs.positive_roots()[a]
                    .simple_coords()
                    .iter()
                    .zip(rs.positive_roots()[b].simple_coords())
                    .map(|(x, y)| x + y)
                    .collect();
                let s = rs
                    .positive_root_index_simple(&sum)
                    .expect("nonzero constant only at root sums");
                brackets.push((e(a), e(b), vec![(e(s), q(n))]));
                brackets.push((f(a), f(b), vec![(f(s), q(-n))]));
            }
        }
    }
    for a in 0..np {
        for b in 0..np {
            if a == b {
                let coroot = rs.coroot_coeffs(a);
                let v: SparseVec = coroot
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| *c != 0)
                    .map(|(i, c)| (i, q(c)))
                    .collect();
                brackets.push((e(a), f(a), v));
            } else if let Some((on_e, d, val)) = mixed_constant(rs, &table, a, b)? {
                let target = if on_e { e(d) } else { f(d) };
                brackets.push((e(a), f(b), vec![(target, q(val))]));
            }
        }
    }

    let algebra = GradedLsa::new(basis, brackets)
        .map_err(|err| Error::Internal(format!("bad generated bracket table: {err}")))?;
    Ok(ChevalleyModel { system, algebra })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{build_root_system, SemisimpleType};
    use num_traits::Signed;

    fn model(t: &str) -> ChevalleyModel {
        chevalley_algebra(build_root_system(&t.parse::<SemisimpleType>().unwrap()).unwrap())
            .unwrap()
    }

    #[test]
    fn rank_one_relations() {
        let m = model("A1");
        assert_eq!(m.dim(), 3);
        assert_eq!(m.bracket(m.h_index(0), m.e_index(0)), vec![(m.e_index(0), q(2))]);
        assert_eq!(m.bracket(m.h_index(0), m.f_index(0)), vec![(m.f_index(0), q(-2))]);
        assert_eq!(m.bracket(m.e_index(0), m.f_index(0)), vec![(m.h_index(0), q(1))]);
        assert!(m.algebra().super_jacobi_violations().is_empty());
    }

    #[test]
    fn cartan_acts_by_fundamental_coordinates() {
        for t in ["A2", "B2", "G2", "C3"] {
            let m = model(t);
            let rs = m.system().clone();
            for a in 0..rs.num_positive_roots() {
                for i in 0..rs.rank() {
                    let c = rs.positive_roots()[a].weight().coords()[i];
                    let expect: SparseVec =
                        if c == 0 { vec![] } else { vec![(m.e_index(a), q(c))] };
                    assert_eq!(m.bracket(m.h_index(i), m.e_index(a)), expect);
                }
            }
        }
    }

    #[test]
    fn string_lengths_fix_constant_magnitudes() {
        // all constants in the simply-laced rank-2 algebra are +-1
        let m = model("A2");
        assert_eq!(m.dim(), 8);
        let rs = m.system().clone();
        for a in 0..3 {
            for b in (a + 1)..3 {
                let v = m.bracket(m.e_index(a), m.e_index(b));
                let sum: Vec<i64> = rs.positive_roots()[a]
                    .simple_coords()
                    .iter()
                    .zip(rs.positive_roots()[b].simple_coords())
                    .map(|(x, y)| x + y)
                    .collect();
                match rs.positive_root_index_simple(&sum) {
                    Some(s) => {
                        assert_eq!(v.len(), 1);
                        assert_eq!(v[0].0, m.e_index(s));
                        assert_eq!(v[0].1.to_integer().abs(), 1.into());
                    }
                    None => assert!(v.is_empty()),
                }
            }
        }

        // long strings force constants of magnitude 2 and 3
        let g2 = model("G2");
        let rs = g2.system().clone();
        let idx = |c: &[i64]| rs.positive_root_index_simple(c).unwrap();
        let short = idx(&[1, 0]);
        let mid = idx(&[1, 1]);
        let v = g2.bracket(g2.e_index(short), g2.e_index(mid));
        assert_eq!(v[0].0, g2.e_index(idx(&[2, 1])));
        assert_eq!(v[0].1.to_integer().abs(), 2.into());
        let v = g2.bracket(g2.e_index(short), g2.e_index(idx(&[2, 1])));
        assert_eq!(v[0].0, g2.e_index(idx(&[3, 1])));
        assert_eq!(v[0].1.to_integer().abs(), 3.into());
    }

    #[test]
    fn coroot_of_the_highest_root() {
        let m = model("A2");
        let rs = m.system().clone();
        let theta = rs.positive_root_index(&rs.highest_root(0).unwrap()).unwrap();
        assert_eq!(
            m.bracket(m.e_index(theta), m.f_index(theta)),
            vec![(m.h_index(0), q(1)), (m.h_index(1), q(1))]
        );
        // mixed bracket down to a shorter root
        let a1 = rs.positive_root_index_simple(&[1, 0]).unwrap();
        let a2 = rs.positive_root_index_simple(&[0, 1]).unwrap();
        let v = m.bracket(m.e_index(theta), m.f_index(a1));
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].0, m.e_index(a2));
        assert_eq!(v[0].1.to_integer().abs(), 1.into());
    }

    #[test]
    fn jacobi_battery() {
        for t in ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "A1xA1", "A1xB2"] {
            let m = model(t);
            let rs = m.system().clone();
            assert_eq!(m.dim(), rs.rank() + 2 * rs.num_positive_roots());
            assert!(
                m.algebra().super_jacobi_violations().is_empty(),
                "jacobi fails for {t}"
            );
        }
    }

    #[test]
    fn factors_commute() {
        let m = model("A1xA1");
        assert_eq!(m.dim(), 6);
        // canonical order puts (0,1) before (1,0), so e_0 sits in factor two
        assert!(m.bracket(m.e_index(0), m.e_index(1)).is_empty());
        assert!(m.bracket(m.e_index(0), m.f_index(1)).is_empty());
        assert!(m.bracket(m.h_index(0), m.e_index(0)).is_empty());
        assert_eq!(m.bracket(m.h_index(0), m.e_index(1)), vec![(m.e_index(1), q(2))]);
    }
}
