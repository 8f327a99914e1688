//! Fixed vectors of the isotropy subalgebra acting on T (x) Lambda^p T*,
//! where T is the quotient of the Chevalley algebra by a parabolic.
//!
//! The isotropy subalgebra is spanned by the Cartan generators, every
//! negative root vector, and the positive root vectors inside the Levi
//! subsystem.  Fixed vectors of the connected isotropy group are exactly the
//! vectors killed by these generators, so the dimension is the kernel
//! dimension of a stacked action matrix.

use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;

use crate::flag::ParabolicSpec;
use crate::linalg::{QMat, Q};
use crate::Result;

use super::chevalley::ChevalleyModel;

fn combinations(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(p);
    fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for s in start..=(n - left) {
            cur.push(s);
            rec(s + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    if p <= n {
        rec(0, n, p, &mut cur, &mut out);
    }
    out
}

// replace t by u in the sorted tuple k, with the sign of resorting the wedge
fn substitute(k: &[usize], t: usize, u: usize) -> Option<(i64, Vec<usize>)> {
    if u != t && k.contains(&u) {
        return None;
    }
    let (lo, hi) = (t.min(u), t.max(u));
    let between = k.iter().filter(|&&w| w > lo && w < hi && w != t).count();
    let sign = if between % 2 == 0 { 1 } else { -1 };
    let mut next: Vec<usize> = k.iter().copied().filter(|&w| w != t).collect();
    let at = next.partition_point(|&w| w < u);
    next.insert(at, u);
    Some((sign, next))
}

/// Dimension of the space of isotropy-fixed vectors in T (x) Lambda^p T*.
pub fn tangent_invariant_dim(
    model: &ChevalleyModel,
    levi: &BTreeSet<usize>,
    p: usize,
) -> Result<u64> {
    let spec = ParabolicSpec::new(model.system().clone(), levi.clone())?;
    let outside = spec.tangent_root_indices();
    let nt = outside.len();
    if p > nt {
        return Ok(0);
    }
    let rs = model.system();
    let r = rs.rank();
    let np = rs.num_positive_roots();
    let pos_in_t: HashMap<usize, usize> =
        outside.iter().enumerate().map(|(c, &g)| (g, c)).collect();

    let mut gens: Vec<usize> = (0..r).collect();
    for a in 0..np {
        gens.push(model.f_index(a));
    }
    for a in 0..np {
        if !pos_in_t.contains_key(&a) {
            gens.push(model.e_index(a));
        }
    }

    // entry [row][col] is the coefficient of e_row in x . e_col on the quotient
    let mats: Vec<Vec<Vec<Q>>> = gens
        .iter()
        .map(|&x| {
            let mut m = vec![vec![Q::zero(); nt]; nt];
            for (col, &g) in outside.iter().enumerate() {
                for (tgt, c) in model.bracket(x, model.e_index(g)) {
                    if tgt >= r && tgt < r + np {
                        if let Some(&row) = pos_in_t.get(&(tgt - r)) {
                            m[row][col] = c;
                        }
                    }
                }
            }
            m
        })
        .collect();

    let combos = combinations(nt, p);
    let combo_at: HashMap<Vec<usize>, usize> =
        combos.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
    let dim_w = nt * combos.len();
    let windex = |i: usize, kpos: usize| kpos * nt + i;

    let mut stacked = QMat::zero(gens.len() * dim_w, dim_w);
    for (gi, a) in mats.iter().enumerate() {
        let base = gi * dim_w;
        for (kpos, k) in combos.iter().enumerate() {
            for i in 0..nt {
                let col = windex(i, kpos);
                for row in 0..nt {
                    if !a[row][i].is_zero() {
                        let out = base + windex(row, kpos);
                        let cur = stacked.at(out, col) + &a[row][i];
                        stacked.set(out, col, cur);
                    }
                }
                for &t in k {
                    for u in 0..nt {
                        if a[t][u].is_zero() {
                            continue;
                        }
                        let Some((sign, next)) = substitute(k, t, u) else {
                            continue;
                        };
                        let out = base + windex(i, combo_at[&next]);
                        let term = -&a[t][u] * Q::from_integer(sign.into());
                        let cur = stacked.at(out, col) + term;
                        stacked.set(out, col, cur);
                    }
                }
            }
        }
    }
    Ok((dim_w - stacked.rank()) as u64)
}
