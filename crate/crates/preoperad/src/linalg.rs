//! Exact rational linear algebra.
//!
//! Everything here runs over arbitrary-precision rationals; there is no
//! floating point anywhere in the computational path. Elimination uses
//! first-nonzero pivoting so that ranks, kernel bases and solutions are
//! deterministic functions of the input matrix.


pub use crate::scalar::Rat;

use crate::error::{Error, Result};

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_int(n)
}

/// Rational `n/d`. Panics if `d == 0`; intended for literals in code.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::from_int(n) / Rat::from_int(d)
}

/// Checked division, the one field operation with a precondition.
pub fn rat_div(a: &Rat, b: &Rat) -> Result<Rat> {
    if b.is_zero() {
        return Err(Error::DivideByZero);
    }
    Ok(a / b)
}

/// `(-1)^e` with the exponent reduced mod 2; `e` may be negative
/// (reduced degrees can be -1, and `(-1)^(-1) = -1`).
pub fn parity_sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Dense row-major matrix over [`Rat`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix whose columns are the given vectors (all of equal length).
    pub fn from_columns(rows: usize, cols: &[Vec<Rat>]) -> Self {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn mat_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = vec![Rat::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for r in 0..self.rows {
                let a = self.at(r, j);
                if !a.is_zero() {
                    out[r] += a * x;
                }
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    ///
    /// Pivot choice is the first row (top to bottom) with a nonzero entry in
    /// the current column, which makes the output deterministic.
    pub fn rref(mut self) -> (Matrix, Vec<usize>) {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.entries.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self.at(row, col).recip();
            for c in col..self.cols {
                if !self.at(row, c).is_zero() {
                    let v = self.at(row, c) * &inv;
                    self.set(row, c, v);
                }
            }
            for r in 0..self.rows {
                if r == row || self.at(r, col).is_zero() {
                    continue;
                }
                let factor = self.at(r, col).clone();
                for c in col..self.cols {
                    if !self.at(row, c).is_zero() {
                        let v = self.at(r, c) - &factor * self.at(row, c);
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (self, pivots)
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        self.clone().rref().1.len()
    }

    /// Basis of the null space, one vector per free column, in increasing
    /// free-column order. Every returned `v` satisfies `M v = 0` exactly,
    /// and the count is `cols - rank`.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (rref, pivots) = self.clone().rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                let coeff = rref.at(row, free);
                if !coeff.is_zero() {
                    v[pc] = -coeff.clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Indices of the pivot columns of `self`; the corresponding original
    /// columns form a deterministic basis of the column space.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.clone().rref().1
    }
}

/// Coordinates `x` with `B x = b` if `b` lies in the span of the columns of
/// `B`, choosing zero for every free variable; `None` otherwise.
pub fn solve_in_span(basis: &Matrix, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(b.len(), basis.rows(), "right-hand side length mismatch");
    let mut aug = Matrix::zeros(basis.rows(), basis.cols() + 1);
    for r in 0..basis.rows() {
        for c in 0..basis.cols() {
            aug.set(r, c, basis.at(r, c).clone());
        }
        aug.set(r, basis.cols(), b[r].clone());
    }
    let (rref, pivots) = aug.rref();
    if pivots.contains(&basis.cols()) {
        return None; // inconsistent: b adds rank
    }
    let mut x = vec![Rat::zero(); basis.cols()];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = rref.at(row, basis.cols()).clone();
    }
    Some(x)
}
