//! Dense and sparse matrices over an exact ring.
//!
//! Empty matrices (zero rows or zero columns) are legal and stand for zero
//! maps between possibly-zero free modules.

use std::fmt;

use super::ring::{EuclideanDomain, Field, Ring};
use super::LaurentPoly;

/// A dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

/// Matrix over the Laurent polynomial ring.
pub type MatrixL<F> = Matrix<LaurentPoly<F>>;

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, R::one());
        }
        m
    }

    /// Builds from row vectors; all rows must have length `cols`.
    pub fn from_rows(rows: Vec<Vec<R>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
    }

    /// Integer-entry convenience constructor.
    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| R::from_i64(x)).collect()).collect(), cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        self.data[i * self.cols + j] = v;
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut R {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.get_mut(i, j).add_assign(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Entrywise image under a ring map.
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Rows and columns selected by index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    /// Stacks `self` on top of `o`.
    pub fn vstack(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Matrix { rows: self.rows + o.rows, cols: self.cols, data }
    }

    /// Places `self` to the left of `o`.
    pub fn hstack(&self, o: &Self) -> Self {
        assert_eq!(self.rows, o.rows);
        let mut m = Self::zeros(self.rows, self.cols + o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for j in 0..o.cols {
                m.set(i, self.cols + j, o.get(i, j).clone());
            }
        }
        m
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn to_sparse(&self) -> SparseMatrix<R> {
        let mut s = SparseMatrix::new(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                if !x.is_zero() {
                    s.rows[i].push((j, x.clone()));
                }
            }
        }
        s
    }
}

impl<R: EuclideanDomain> Matrix<R> {
    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> R {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return R::one();
        }
        let mut a = self.clone();
        let mut sign = R::one();
        let mut prev = R::one();
        for k in 0..n {
            if a.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                    return R::zero();
                };
                for j in 0..n {
                    let tmp = a.get(k, j).clone();
                    let other = a.get(p, j).clone();
                    a.set(k, j, other);
                    a.set(p, j, tmp);
                }
                sign = sign.neg();
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a.get(i, j).mul(a.get(k, k)).sub(&a.get(i, k).mul(a.get(k, j)));
                    a.set(i, j, v.exact_div(&prev));
                }
            }
            prev = a.get(k, k).clone();
        }
        sign.mul(a.get(n - 1, n - 1))
    }
}

impl<F: Field> MatrixL<F> {
    /// Specializes `q = 1`.
    pub fn eval_one(&self) -> Matrix<F> {
        self.map(|x| x.eval_one())
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Row-sparse matrix: each row is a list of `(column, nonzero entry)` sorted
/// by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix<R> {
    pub nrows: usize,
    pub ncols: usize,
    pub rows: Vec<Vec<(usize, R)>>,
}

impl<R: Ring> SparseMatrix<R> {
    pub fn new(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    /// Adds `v` to entry `(i, j)`.
    pub fn add_entry(&mut self, i: usize, j: usize, v: R) {
        assert!(i < self.nrows && j < self.ncols);
        let row = &mut self.rows[i];
        match row.binary_search_by_key(&j, |e| e.0) {
            Ok(p) => {
                row[p].1.add_assign(&v);
                if row[p].1.is_zero() {
                    row.remove(p);
                }
            }
            Err(p) => {
                if !v.is_zero() {
                    row.insert(p, (j, v));
                }
            }
        }
    }

    pub fn get(&self, i: usize, j: usize) -> R {
        match self.rows[i].binary_search_by_key(&j, |e| e.0) {
            Ok(p) => self.rows[i][p].1.clone(),
            Err(_) => R::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn to_dense(&self) -> Matrix<R> {
        let mut m = Matrix::zeros(self.nrows, self.ncols);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                m.set(i, *j, v.clone());
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut t = SparseMatrix::new(self.ncols, self.nrows);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                t.rows[*j].push((i, v.clone()));
            }
        }
        t
    }

    /// Product with a dense matrix.
    pub fn mul_dense(&self, o: &Matrix<R>) -> Matrix<R> {
        assert_eq!(self.ncols, o.rows());
        let mut out: Matrix<R> = Matrix::zeros(self.nrows, o.cols());
        for (i, row) in self.rows.iter().enumerate() {
            for (k, a) in row {
                for j in 0..o.cols() {
                    let b = o.get(*k, j);
                    if !b.is_zero() {
                        out.get_mut(i, j).add_assign(&a.mul(b));
                    }
                }
            }
        }
        out
    }
}

/// `dst -= c * src` on sorted sparse vectors.
pub(crate) fn sparse_axpy<R: Ring>(dst: &mut Vec<(usize, R)>, c: &R, src: &[(usize, R)]) {
    if c.is_zero() || src.is_empty() {
        return;
    }
    let mut out = Vec::with_capacity(dst.len() + src.len());
    let mut a = std::mem::take(dst).into_iter().peekable();
    let mut b = src.iter().peekable();
    loop {
        match (a.peek(), b.peek()) {
            (Some((ja, _)), Some((jb, _))) if ja < jb => out.push(a.next().unwrap()),
            (Some((ja, _)), Some((jb, _))) if ja > jb => {
                let (j, v) = b.next().unwrap();
                out.push((*j, c.mul(v).neg()));
            }
            (Some(_), Some(_)) => {
                let (j, mut x) = a.next().unwrap();
                let (_, v) = b.next().unwrap();
                x.sub_mul_assign(c, v);
                if !x.is_zero() {
                    out.push((j, x));
                }
            }
            (Some(_), None) => out.push(a.next().unwrap()),
            (None, Some(_)) => {
                let (j, v) = b.next().unwrap();
                out.push((*j, c.mul(v).neg()));
            }
            (None, None) => break,
        }
    }
    *dst = out;
}

/// `a*x + b*y` on sorted sparse vectors.
pub(crate) fn sparse_lincomb<R: Ring>(
    a: &R,
    x: &[(usize, R)],
    b: &R,
    y: &[(usize, R)],
) -> Vec<(usize, R)> {
    let mut out: Vec<(usize, R)> = x.iter().map(|(j, v)| (*j, a.mul(v))).filter(|e| !e.1.is_zero()).collect();
    sparse_axpy(&mut out, &b.neg(), y);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn bareiss_determinant() {
        let m = Matrix::<BigInt>::from_i64(&[vec![2, -1, 0], vec![1, 3, 4], vec![0, 5, 6]]);
        // 2*(18-20) - (-1)*(6-0) = -4 + 6 = 2
        assert_eq!(m.determinant(), BigInt::from(2));
        let z = Matrix::<BigInt>::from_i64(&[vec![0, 1], vec![0, 2]]);
        assert_eq!(z.determinant(), BigInt::from(0));
    }

    #[test]
    fn axpy_cancels() {
        let mut a = vec![(0usize, BigInt::from(2)), (3, BigInt::from(1))];
        let b = vec![(0usize, BigInt::from(1)), (2, BigInt::from(5))];
        sparse_axpy(&mut a, &BigInt::from(2), &b);
        assert_eq!(a, vec![(2, BigInt::from(-10)), (3, BigInt::from(1))]);
    }
}
