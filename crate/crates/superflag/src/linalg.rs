//! Exact linear algebra over arbitrary-precision rationals.
//!
//! Everything downstream (kernels of bracket maps, structure-constant solving,
//! associative span saturation) reduces to rank / kernel / solve on dense
//! rational matrices. Elimination is plain Gauss-Jordan with exact pivots; no
//! floating point anywhere.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

/// Rational from an integer.
pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMat { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    /// Builds from rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            data.extend(r);
        }
        QMat { rows: nrows, cols: ncols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.data[i * self.cols + j] = v;
    }

    /// Reduced row echelon form in place; returns (pivot row, pivot column)
    /// pairs in order.
    pub fn rref(&mut self) -> Vec<(usize, usize)> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            // partial "pivoting": any nonzero entry works over exact Q; take
            // the first for determinism
            let Some(pr) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, pr);
            let inv = self.at(row, col).recip();
            self.scale_row(row, &inv);
            for r in 0..self.rows {
                if r != row && !self.at(r, col).is_zero() {
                    let f = self.at(r, col).clone();
                    self.axpy_rows(row, r, &-f);
                }
            }
            pivots.push((row, col));
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right kernel {x : Mx = 0}, one vector per free column,
    /// in ascending free-column order.
    pub fn kernel_basis(&self) -> Vec<Vec<Q>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_cols: BTreeMap<usize, usize> =
            pivots.iter().map(|&(r, c)| (c, r)).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_cols.contains_key(&free) {
                continue;
            }
            let mut v = vec![Q::zero(); self.cols];
            v[free] = Q::one();
            for (&c, &r) in &pivot_cols {
                v[c] = -m.at(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// The canonical solution of Mx = rhs (free variables set to zero), or
    /// None when the system is inconsistent.
    pub fn solve(&self, rhs: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = QMat::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let pivots = aug.rref();
        if pivots.iter().any(|&(_, c)| c == self.cols) {
            return None; // a pivot in the augmented column
        }
        let mut x = vec![Q::zero(); self.cols];
        for (r, c) in pivots {
            x[c] = aug.at(r, self.cols).clone();
        }
        Some(x)
    }

    /// Solve demanding a unique solution; None when inconsistent, Err-like
    /// None-with-flag is avoided: returns (solution, is_unique).
    pub fn solve_with_uniqueness(&self, rhs: &[Q]) -> Option<(Vec<Q>, bool)> {
        let x = self.solve(rhs)?;
        let unique = self.rank() == self.cols;
        Some((x, unique))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, f: &Q) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            if !self.data[idx].is_zero() {
                self.data[idx] = &self.data[idx] * f;
            }
        }
    }

    /// row[dst] += f * row[src]
    fn axpy_rows(&mut self, src: usize, dst: usize, f: &Q) {
        for j in 0..self.cols {
            let s = self.data[src * self.cols + j].clone();
            if !s.is_zero() {
                self.data[dst * self.cols + j] = &self.data[dst * self.cols + j] + s * f;
            }
        }
    }
}

/// Incrementally maintained row space in reduced form; used for span
/// saturation loops where vectors arrive one at a time.
#[derive(Clone, Debug)]
pub struct RowSpan {
    cols: usize,
    rows: Vec<Vec<Q>>,
    pivot_of_row: Vec<usize>,
    row_of_pivot: BTreeMap<usize, usize>,
}

impl RowSpan {
    pub fn new(cols: usize) -> Self {
        RowSpan { cols, rows: Vec::new(), pivot_of_row: Vec::new(), row_of_pivot: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces v against the span; returns true when v enlarged it.
    pub fn insert(&mut self, mut v: Vec<Q>) -> bool {
        assert_eq!(v.len(), self.cols);
        for (&p, &r) in &self.row_of_pivot {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for j in p..self.cols {
                    let s = self.rows[r][j].clone();
                    if !s.is_zero() {
                        v[j] = &v[j] - s * &f;
                    }
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        // back-reduce existing rows so lookups stay O(pivots)
        for r in 0..self.rows.len() {
            if !self.rows[r][p].is_zero() {
                let f = self.rows[r][p].clone();
                for j in 0..self.cols {
                    let s = v[j].clone();
                    if !s.is_zero() {
                        self.rows[r][j] = &self.rows[r][j] - s * &f;
                    }
                }
            }
        }
        self.row_of_pivot.insert(p, self.rows.len());
        self.pivot_of_row.push(p);
        self.rows.push(v);
        true
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        let mut w = v.to_vec();
        for (&p, &r) in &self.row_of_pivot {
            if !w[p].is_zero() {
                let f = w[p].clone();
                for j in p..self.cols {
                    let s = self.rows[r][j].clone();
                    if !s.is_zero() {
                        w[j] = &w[j] - s * &f;
                    }
                }
            }
        }
        w.iter().all(Zero::is_zero)
    }
}

/// Exact integer quotient of two rationals that must divide evenly.
pub fn exact_integer_div(num: &Q, den: &Q) -> Option<BigInt> {
    if den.is_zero() {
        return None;
    }
    let r = num / den;
    r.is_integer().then(|| r.to_integer())
}

/// Rational absolute value.
pub fn qabs(x: &Q) -> Q {
    x.abs()
}
