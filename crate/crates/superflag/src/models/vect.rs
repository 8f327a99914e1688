//! Vector fields on a superpoint: derivations of the Grassmann algebra on m
//! odd coordinates, graded by polynomial degree minus one.
//!
//! Monomials in the odd coordinates are bitmasks.  A basis field is a
//! monomial times a single partial derivative, and brackets are computed by
//! applying the composed operators to the coordinate generators rather than
//! from a precomputed constant table: a derivation is determined by its
//! values on generators, so the coefficient of a basis field in a bracket
//! can be read off directly.

use crate::glsa::{normalize_sparse, BasisElement, GradedLsa, SparseVec};
use crate::linalg::q;
use crate::{Error, Result};

const MAX_COORDS: usize = 8;

// partial derivative of the monomial `mask`, with the Koszul sign picked up
// moving past the coordinates below bit j
fn del(j: usize, mask: u32) -> Option<(i64, u32)> {
    if mask & (1 << j) == 0 {
        return None;
    }
    let below = (mask & ((1u32 << j) - 1)).count_ones();
    let sign = if below % 2 == 0 { 1 } else { -1 };
    Some((sign, mask & !(1 << j)))
}

// product of monomials s and t, zero on a shared coordinate
fn wedge(s: u32, t: u32) -> Option<(i64, u32)> {
    if s & t != 0 {
        return None;
    }
    let mut inversions = 0u32;
    let mut rest = t;
    while rest != 0 {
        let b = rest.trailing_zeros();
        inversions += (s >> (b + 1)).count_ones();
        rest &= rest - 1;
    }
    let sign = if inversions % 2 == 0 { 1 } else { -1 };
    Some((sign, s | t))
}

// value of the field (s, j) = xi_s d_j on the generator xi_k, as a scalar
// multiple of a monomial
fn apply(s: u32, j: usize, k: usize) -> Option<(i64, u32)> {
    if j == k {
        Some((1, s))
    } else {
        None
    }
}

/// The vector fields on a superpoint with m odd coordinates, 1 <= m <= 8.
pub fn vect_superpoint(m: usize) -> Result<GradedLsa> {
    if m == 0 || m > MAX_COORDS {
        return Err(Error::SuperpointRange(m));
    }
    let full: u32 = (1u32 << m) - 1;
    let mut fields: Vec<(u32, usize)> = Vec::new();
    for mask in 0..=full {
        for j in 0..m {
            fields.push((mask, j));
        }
    }
    fields.sort_by_key(|&(mask, j)| (mask.count_ones(), mask, j));
    let index: std::collections::HashMap<(u32, usize), usize> =
        fields.iter().enumerate().map(|(i, &f)| (f, i)).collect();

    let label = |mask: u32, j: usize| {
        if mask == 0 {
            format!("d{}", j + 1)
        } else {
            let vars: String = (0..m)
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| (b + 1).to_string())
                .collect();
            format!("x{}d{}", vars, j + 1)
        }
    };
    let basis: Vec<BasisElement> = fields
        .iter()
        .map(|&(mask, j)| {
            BasisElement::graded(label(mask, j), mask.count_ones() as i64 - 1)
        })
        .collect();

    let n = fields.len();
    let mut brackets: Vec<(usize, usize, SparseVec)> = Vec::new();
    for i in 0..n {
        for jdx in i..n {
            let (s, a) = fields[i];
            let (t, b) = fields[jdx];
            let odd_x = (s.count_ones() as i64 - 1).rem_euclid(2) == 1;
            let odd_y = (t.count_ones() as i64 - 1).rem_euclid(2) == 1;
            let koszul = if odd_x && odd_y { 1 } else { -1 };
            // [X, Y] applied to each generator xi_k determines the bracket
            let mut acc: SparseVec = Vec::new();
            for k in 0..m {
                let mut val: SparseVec = Vec::new();
                // X(Y(xi_k))
                if let Some((c1, mono)) = apply(t, b, k) {
                    // X acting on the monomial xi_mono
                    for bit in 0..m {
                        if let Some((c2, rest)) = del(bit, mono) {
                            if let Some((c3, inner)) = apply(s, a, bit) {
                                if let Some((c4, out)) = wedge(inner, rest) {
                                    val.push((
                                        index[&(out, k)],
                                        q(c1 * c2 * c3 * c4),
                                    ));
                                }
                            }
                        }
                    }
                }
                // -+ Y(X(xi_k))
                if let Some((c1, mono)) = apply(s, a, k) {
                    for bit in 0..m {
                        if let Some((c2, rest)) = del(bit, mono) {
                            if let Some((c3, inner)) = apply(t, b, bit) {
                                if let Some((c4, out)) = wedge(inner, rest) {
                                    val.push((
                                        index[&(out, k)],
                                        q(koszul * c1 * c2 * c3 * c4),
                                    ));
                                }
                            }
                        }
                    }
                }
                acc.extend(val);
            }
            let acc = normalize_sparse(acc);
            if !acc.is_empty() {
                brackets.push((i, jdx, acc));
            }
        }
    }
    GradedLsa::new(basis, brackets)
}
