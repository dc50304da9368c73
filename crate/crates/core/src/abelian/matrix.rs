use std::fmt;
use std::ops::{Index, IndexMut};

use crate::scalar::IntScalar;

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<Z> {
    rows: usize,
    cols: usize,
    data: Vec<Z>,
}

impl<Z: IntScalar> Matrix<Z> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Z::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Z::one();
        }
        m
    }

    /// Builds a matrix from rows. All rows must have `cols` entries.
    pub fn from_rows(rows: usize, cols: usize, entries: Vec<Vec<Z>>) -> Self {
        assert_eq!(entries.len(), rows, "row count mismatch");
        let mut data = Vec::with_capacity(rows * cols);
        for r in entries {
            assert_eq!(r.len(), cols, "column count mismatch");
            data.extend(r);
        }
        Matrix { rows, cols, data }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        let entries = rows.iter().map(|r| r.iter().map(|&v| Z::from_int(v)).collect()).collect();
        Self::from_rows(rows.len(), cols, entries)
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<Z>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Z] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Z> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Z>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Z>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let p = a.clone() * other[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + p;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Z]) -> Vec<Z> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Z::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Z]) -> Vec<Z> {
        assert_eq!(self.rows, v.len(), "dimension mismatch in vector-matrix product");
        (0..self.cols)
            .map(|j| (0..self.rows).fold(Z::zero(), |acc, i| acc + v[i].clone() * self[(i, j)].clone()))
            .collect()
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// `self - I`.
    pub fn minus_identity(&self) -> Self {
        self.sub(&Self::identity(self.rows))
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let cols: Vec<Vec<Z>> = idx.iter().map(|&j| self.column(j)).collect();
        Self::from_columns(self.rows, &cols)
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let rows = idx.iter().map(|&i| self.row(i).to_vec()).collect();
        Self::from_rows(idx.len(), self.cols, rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, k: &Z) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self[(src, j)].clone() * k.clone();
            self[(dst, j)] = self[(dst, j)].clone() + v;
        }
    }

    /// col[dst] += k * col[src]
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, k: &Z) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self[(i, src)].clone() * k.clone();
            self[(i, dst)] = self[(i, dst)].clone() + v;
        }
    }

    pub fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            self[(r, j)] = -self[(r, j)].clone();
        }
    }

    pub fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            self[(i, c)] = -self[(i, c)].clone();
        }
    }

    pub fn cast<W: IntScalar>(&self) -> Option<Matrix<W>> {
        let data = self.data.iter().map(|v| v.cast::<W>()).collect::<Option<Vec<_>>>()?;
        Some(Matrix { rows: self.rows, cols: self.cols, data })
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Z {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Z::one();
        }
        let mut a = self.clone();
        let mut sign = Z::one();
        let mut prev = Z::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(p) => {
                        a.swap_rows(k, p);
                        sign = -sign;
                    }
                    None => return Z::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[(i, j)].clone() * a[(k, k)].clone() - a[(i, k)].clone() * a[(k, j)].clone();
                    a[(i, j)] = v / prev.clone();
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.det().abs().is_one()
    }
}

impl<Z> Index<(usize, usize)> for Matrix<Z> {
    type Output = Z;

    fn index(&self, (i, j): (usize, usize)) -> &Z {
        &self.data[i * self.cols + j]
    }
}

impl<Z> IndexMut<(usize, usize)> for Matrix<Z> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Z {
        &mut self.data[i * self.cols + j]
    }
}

impl<Z: fmt::Debug> fmt::Debug for Matrix<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:?}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn bareiss_determinant() {
        let m: Matrix<BigInt> = Matrix::from_i64_rows(&[vec![2, 4, 1], vec![6, 8, 0], vec![1, 1, 1]], 3);
        // 2(8-0) - 4(6-0) + 1(6-8) = 16 - 24 - 2
        assert_eq!(m.det(), BigInt::from(-10));
        let z: Matrix<i64> = Matrix::from_i64_rows(&[vec![0, 1], vec![1, 0]], 2);
        assert_eq!(z.det(), -1);
        assert!(z.is_unimodular());
    }

    #[test]
    fn products_and_stacks() {
        let a: Matrix<i64> = Matrix::from_i64_rows(&[vec![1, 2], vec![3, 4]], 2);
        let b = Matrix::identity(2);
        assert_eq!(a.mul(&b), a);
        assert_eq!(a.mul_vec(&[1, 1]), vec![3, 7]);
        assert_eq!(a.vec_mul(&[1, 1]), vec![4, 6]);
        assert_eq!(a.hstack(&b).cols(), 4);
        assert_eq!(a.vstack(&b).rows(), 4);
        assert_eq!(a.transpose()[(0, 1)], 3);
    }
}
