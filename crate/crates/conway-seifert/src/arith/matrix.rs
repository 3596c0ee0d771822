//! Dense rectangular matrices over an exact ring.
//!
//! Determinants use cofactor expansion up to 4x4 and fraction-free Bareiss
//! elimination above that; the divisions Bareiss performs are exact by
//! Sylvester's identity, so no fractions ever appear for integer or
//! polynomial entries. Before elimination each row is divided by a common
//! unit (for Laurent polynomials the lowest power of the variable), which
//! keeps intermediate entries ordinary polynomials.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use super::{ExactDiv, Int, Ring};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn from_fn<F>(rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> R,
    {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// Build from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged rows in matrix literal"
        );
        Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| R::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
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

    pub fn row(&self, i: usize) -> &[R] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<S: Ring, F>(&self, f: F) -> Matrix<S>
    where
        F: Fn(&R) -> S,
    {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|e| e.clone() * c.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(R::is_zero)
    }

    /// Matrix power; the matrix must be square.
    pub fn pow(&self, n: usize) -> Self {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut acc = Self::identity(self.rows);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The minor obtained by deleting row `i` and column `j`.
    fn minor(&self, i: usize, j: usize) -> Self {
        Self::from_fn(self.rows - 1, self.cols - 1, |r, c| {
            let rr = if r < i { r } else { r + 1 };
            let cc = if c < j { c } else { c + 1 };
            self[(rr, cc)].clone()
        })
    }

    /// Recursive cofactor expansion along the first row.
    fn det_cofactor(&self) -> R {
        match self.rows {
            0 => R::one(),
            1 => self[(0, 0)].clone(),
            2 => {
                self[(0, 0)].clone() * self[(1, 1)].clone()
                    - self[(0, 1)].clone() * self[(1, 0)].clone()
            }
            _ => {
                let mut det = R::zero();
                for j in 0..self.cols {
                    if self[(0, j)].is_zero() {
                        continue;
                    }
                    let term = self[(0, j)].clone() * self.minor(0, j).det_cofactor();
                    det = if j % 2 == 0 { det + term } else { det - term };
                }
                det
            }
        }
    }
}

impl<R: ExactDiv> Matrix<R> {
    /// Exact determinant. Panics on non-square input.
    pub fn det(&self) -> R {
        assert!(
            self.is_square(),
            "determinant of a {}x{} matrix",
            self.rows,
            self.cols
        );
        // Pull a common unit out of every row first (the lowest power of the
        // variable for Laurent entries), so elimination runs over ordinary
        // polynomials.
        let mut unit = R::one();
        let mut work = self.clone();
        for i in 0..self.rows {
            let u = R::common_row_unit(work.row(i));
            if !u.is_one() {
                for j in 0..self.cols {
                    work.entries[i * self.cols + j] =
                        work.entries[i * self.cols + j].exact_div(&u);
                }
                unit = unit * u;
            }
        }
        let det = if work.rows <= 4 {
            work.det_cofactor()
        } else {
            work.det_bareiss()
        };
        unit * det
    }

    /// One-step fraction-free Bareiss elimination.
    fn det_bareiss(mut self) -> R {
        let n = self.rows;
        let mut sign_flip = false;
        let mut prev = R::one();
        for k in 0..n - 1 {
            if self[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !self[(i, k)].is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            self.entries.swap(k * n + j, i * n + j);
                        }
                        sign_flip = !sign_flip;
                    }
                    None => return R::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = self[(k, k)].clone() * self[(i, j)].clone()
                        - self[(i, k)].clone() * self[(k, j)].clone();
                    self.entries[i * n + j] = num.exact_div(&prev);
                }
                self.entries[i * n + k] = R::zero();
            }
            prev = self[(k, k)].clone();
        }
        let det = self[(n - 1, n - 1)].clone();
        if sign_flip {
            -det
        } else {
            det
        }
    }

    /// Adjugate matrix: `self * adjugate(self) = det(self) * I`.
    /// Panics on non-square input.
    pub fn adjugate(&self) -> Self {
        assert!(
            self.is_square(),
            "adjugate of a {}x{} matrix",
            self.rows,
            self.cols
        );
        let n = self.rows;
        if n == 0 {
            return Self::identity(0);
        }
        if n == 1 {
            return Self::identity(1);
        }
        Self::from_fn(n, n, |i, j| {
            let cof = self.minor(j, i).det();
            if (i + j) % 2 == 0 {
                cof
            } else {
                -cof
            }
        })
    }
}

impl Matrix<Int> {
    /// Embed integer entries as constants of a polynomial ring.
    pub fn to_laurent<const X: char>(&self) -> Matrix<super::LaurentPoly<X>> {
        self.map(|c| super::LaurentPoly::constant(c.clone()))
    }
}

impl<R> Index<(usize, usize)> for Matrix<R> {
    type Output = R;
    fn index(&self, (i, j): (usize, usize)) -> &R {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.entries[i * self.cols + j]
    }
}

impl<R: Ring> Add for &Matrix<R> {
    type Output = Matrix<R>;
    fn add(self, rhs: Self) -> Matrix<R> {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "shape mismatch");
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() + rhs[(i, j)].clone()
        })
    }
}

impl<R: Ring> Sub for &Matrix<R> {
    type Output = Matrix<R>;
    fn sub(self, rhs: Self) -> Matrix<R> {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "shape mismatch");
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - rhs[(i, j)].clone()
        })
    }
}

impl<R: Ring> Mul for &Matrix<R> {
    type Output = Matrix<R>;
    fn mul(self, rhs: Self) -> Matrix<R> {
        assert!(
            self.cols == rhs.rows,
            "product shape mismatch: {}x{} * {}x{}",
            self.rows,
            self.cols,
            rhs.rows,
            rhs.cols
        );
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = R::zero();
            for k in 0..self.cols {
                acc = acc + self[(i, k)].clone() * rhs[(k, j)].clone();
            }
            acc
        })
    }
}

impl<R: Ring> Neg for &Matrix<R> {
    type Output = Matrix<R>;
    fn neg(self) -> Matrix<R> {
        self.map(|e| -e.clone())
    }
}

impl<R: fmt::Display> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entries[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Row vector times matrix; `v` must have `m.rows()` entries.
pub fn row_times_matrix(v: &[Int], m: &Matrix<Int>) -> Vec<Int> {
    assert_eq!(v.len(), m.rows(), "row vector length mismatch");
    (0..m.cols())
        .map(|j| {
            v.iter()
                .enumerate()
                .fold(Int::zero(), |acc, (i, c)| acc + c * &m[(i, j)])
        })
        .collect()
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    assert_eq!(a.len(), b.len(), "dot product length mismatch");
    a.iter().zip(b).fold(Int::zero(), |acc, (x, y)| acc + x * y)
}
