//! Dense matrices over the rationals with exact kernels: commutator,
//! fraction-free (Bareiss) determinant, kernel basis, inverse.
//!
//! Conventions, fixed once for the whole crate: entries are stored row-major,
//! vectors are columns, and the matrix of a linear map `f` has `f(e_j)` as its
//! j-th column.

use std::ops::{Add, Index, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::integer::lcm;
use num::{One, Zero};

use crate::error::Error;
use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Matrix with a single 1 at (`r`, `c`).
    pub fn unit(rows: usize, cols: usize, r: usize, c: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        m.set(r, c, Rat::one());
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self { rows, cols, entries }
    }

    /// Panics unless all rows have equal length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == nc), "ragged rows");
        Self {
            rows: nr,
            cols: nc,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    /// Row-major view of all entries.
    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Rat) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    /// Matrix-vector product. Panics unless `v.len() == cols`.
    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "vector length != cols");
        (0..self.rows)
            .map(|r| {
                let mut acc = Rat::zero();
                for c in 0..self.cols {
                    let e = self.get(r, c);
                    if !e.is_zero() && !v[c].is_zero() {
                        acc += e * &v[c];
                    }
                }
                acc
            })
            .collect()
    }

    /// `AB - BA`. Both operands must be square of equal size.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix, Error> {
        if !self.is_square() || !other.is_square() || self.rows != other.rows {
            return Err(Error::Shape(format!(
                "commutator needs equal square matrices, got {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(&(self * other) - &(other * self))
    }

    /// Exact determinant by fraction-free (Bareiss) elimination: denominators
    /// are cleared row by row and the integer matrix is reduced with exact
    /// divisions, which keeps intermediate entries at minor size.
    pub fn det(&self) -> Result<Rat, Error> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "determinant of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rat::one());
        }
        let (mut a, scale) = self.cleared_rows();
        let mut sign = 1i8;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                match (k + 1..n).find(|&r| !a[r * n + k].is_zero()) {
                    Some(r) => {
                        swap_rows(&mut a, n, k, r);
                        sign = -sign;
                    }
                    None => return Ok(Rat::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[k * n + k] * &a[i * n + j] - &a[i * n + k] * &a[k * n + j];
                    a[i * n + j] = exact_div(num, &prev);
                }
                a[i * n + k] = BigInt::zero();
            }
            prev = a[k * n + k].clone();
        }
        let mut det = Rat::new(a[n * n - 1].clone(), scale);
        if sign < 0 {
            det = -det;
        }
        Ok(det)
    }

    /// Basis of `{v : Mv = 0}` in reduced echelon parametrization: one vector
    /// per free column, carrying a 1 in that coordinate.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (echelon, pivots) = self.fraction_free_echelon();
        let rref = rational_rref(echelon, &pivots, self.cols);

        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivot_cols.contains(c)) {
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for &(prow, pcol) in &pivots {
                v[pcol] = -rref[prow][free].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Rank via the same fraction-free elimination as `kernel_basis`.
    pub fn rank(&self) -> usize {
        self.fraction_free_echelon().1.len()
    }

    /// Exact inverse by Gauss-Jordan elimination on `[A | I]`.
    pub fn inverse(&self) -> Result<Matrix, Error> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "inverse of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut aug: Vec<Vec<Rat>> = (0..n)
            .map(|r| {
                let mut row: Vec<Rat> = (0..n).map(|c| self.get(r, c).clone()).collect();
                row.extend((0..n).map(|c| if c == r { Rat::one() } else { Rat::zero() }));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !aug[r][col].is_zero())
                .ok_or(Error::Singular)?;
            aug.swap(col, pivot);
            let p = aug[col][col].clone();
            for e in &mut aug[col] {
                *e /= p.clone();
            }
            for r in 0..n {
                if r != col && !aug[r][col].is_zero() {
                    let f = aug[r][col].clone();
                    for c in 0..2 * n {
                        let sub = &aug[col][c] * &f;
                        aug[r][c] -= sub;
                    }
                }
            }
        }
        Ok(Matrix::from_fn(n, n, |r, c| aug[r][n + c].clone()))
    }

    /// Clears denominators row by row; returns the integer matrix and the
    /// product of the row multipliers.
    fn cleared_rows(&self) -> (Vec<BigInt>, BigInt) {
        let mut out = Vec::with_capacity(self.entries.len());
        let mut scale = BigInt::one();
        for r in 0..self.rows {
            let mut m = BigInt::one();
            for c in 0..self.cols {
                m = lcm(m, self.get(r, c).denom().clone());
            }
            for c in 0..self.cols {
                let e = self.get(r, c);
                out.push(e.numer() * (&m / e.denom()));
            }
            scale *= m;
        }
        (out, scale)
    }

    /// Fraction-free forward elimination with column skipping; returns the
    /// integer echelon matrix and the (row, col) pivot positions.
    fn fraction_free_echelon(&self) -> (Vec<BigInt>, Vec<(usize, usize)>) {
        let (mut a, _) = self.cleared_rows();
        let (nr, nc) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut row = 0;
        for col in 0..nc {
            if row == nr {
                break;
            }
            let Some(pr) = (row..nr).find(|&r| !a[r * nc + col].is_zero()) else {
                continue;
            };
            swap_rows(&mut a, nc, row, pr);
            for i in row + 1..nr {
                for j in col + 1..nc {
                    let num = &a[row * nc + col] * &a[i * nc + j] - &a[i * nc + col] * &a[row * nc + j];
                    a[i * nc + j] = exact_div(num, &prev);
                }
                a[i * nc + col] = BigInt::zero();
            }
            prev = a[row * nc + col].clone();
            pivots.push((row, col));
            row += 1;
        }
        (a, pivots)
    }
}

/// Back-substitutes the integer echelon form into a rational reduced row
/// echelon form (pivot entries 1, zeros above pivots).
fn rational_rref(echelon: Vec<BigInt>, pivots: &[(usize, usize)], nc: usize) -> Vec<Vec<Rat>> {
    let mut rref: Vec<Vec<Rat>> = pivots
        .iter()
        .map(|&(r, _)| {
            (0..nc)
                .map(|c| Rat::from_integer(echelon[r * nc + c].clone()))
                .collect()
        })
        .collect();
    for idx in (0..pivots.len()).rev() {
        let (prow, pcol) = pivots[idx];
        let p = rref[prow][pcol].clone();
        for e in &mut rref[prow] {
            *e /= p.clone();
        }
        for i in 0..prow {
            if !rref[i][pcol].is_zero() {
                let f = rref[i][pcol].clone();
                for c in 0..nc {
                    let sub = &rref[prow][c] * &f;
                    rref[i][c] -= sub;
                }
            }
        }
    }
    rref
}

fn swap_rows(a: &mut [BigInt], nc: usize, r1: usize, r2: usize) {
    if r1 != r2 {
        for c in 0..nc {
            a.swap(r1 * nc + c, r2 * nc + c);
        }
    }
}

// Bareiss steps divide by the previous pivot exactly; the assert guards the
// invariant rather than rounding.
fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    debug_assert!((&num % den).is_zero(), "fraction-free division not exact");
    num / den
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rat;

    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        self.get(r, c)
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in +");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in -");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in *");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        let add = a * b;
                        let cur = out.get(r, c) + &add;
                        out.set(r, c, cur);
                    }
                }
            }
        }
        out
    }
}
