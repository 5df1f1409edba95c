//! Exact linear algebra over a [`Field`].
//!
//! Matrices are stored densely as row-major vectors of scalars; the sizes
//! arising from truncated resolutions stay small enough that exact dense
//! elimination with deterministic pivoting is both simple and fast.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

/// A rows x cols matrix over a fixed field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    pub field: Field,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { field, rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            field,
            rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect(),
        )
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let f = self.field;
        let mut out = Matrix::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let v = f.add(out.get(i, j), &f.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, f.add(self.get(i, j), other.get(i, j)));
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, f.sub(self.get(i, j), other.get(i, j)));
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let f = self.field;
        let mut out = self.clone();
        for v in &mut out.data {
            *v = f.mul(v, c);
        }
        out
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&self.field.neg(&self.field.one()))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| self.field.is_zero(v))
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let f = self.field;
        let mut out = vec![f.zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) || f.is_zero(&v[j]) {
                    continue;
                }
                out[i] = f.add(&out[i], &f.mul(a, &v[j]));
            }
        }
        out
    }

    /// Reduced row echelon form; returns (rref, pivot column indices).
    ///
    /// Pivoting is deterministic: for each column in order, the first
    /// unused row with a nonzero entry is chosen. Deterministic pivoting
    /// keeps every downstream basis (kernels, cohomology representatives)
    /// reproducible run to run.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r >= m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    let a = m.get(r, j).clone();
                    let b = m.get(pr, j).clone();
                    m.set(r, j, b);
                    m.set(pr, j, a);
                }
            }
            let inv = f.inv(m.get(r, c)).unwrap();
            for j in 0..m.cols {
                m.set(r, j, f.mul(m.get(r, j), &inv));
            }
            for i in 0..m.rows {
                if i == r || f.is_zero(m.get(i, c)) {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in 0..m.cols {
                    let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the right kernel `{v : M v = 0}`, as column vectors.
    /// Free variables are set to 1 one at a time, in increasing column
    /// order, giving a canonical basis.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let f = self.field;
        let (r, pivots) = self.rref();
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; self.cols];
            for &p in &pivots {
                s[p] = true;
            }
            s
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(row, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `M x = b`; returns one solution or `None` if inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let f = self.field;
        let mut aug = Matrix::zero(f, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Solves `M X = B` column by column; `None` if any column is inconsistent.
    pub fn solve_matrix(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(b.rows, self.rows);
        let mut cols = Vec::with_capacity(b.cols);
        for j in 0..b.cols {
            cols.push(self.solve(&b.col(j))?);
        }
        let mut out = Matrix::zero(self.field, self.cols, b.cols);
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                out.set(i, j, v.clone());
            }
        }
        Some(out)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::Math("inverse of a non-square matrix".into()));
        }
        self.solve_matrix(&Matrix::identity(self.field, self.rows))
            .ok_or_else(|| Error::Math("matrix is singular".into()))
    }

    /// Stacks matrices vertically.
    pub fn vstack(field: Field, mats: &[&Matrix]) -> Matrix {
        let cols = mats.first().map_or(0, |m| m.cols);
        let mut rows = Vec::new();
        for m in mats {
            assert_eq!(m.cols, cols);
            for i in 0..m.rows {
                rows.push(m.row(i));
            }
        }
        if rows.is_empty() {
            Matrix::zero(field, 0, cols)
        } else {
            Matrix::from_rows(field, rows)
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(field: Field, len: usize, cols: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zero(field, len, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), len);
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }
}

/// Span utilities over column vectors.
pub struct Span {
    field: Field,
    dim: usize,
    /// rref of the row matrix whose rows are the spanning vectors.
    reduced: Matrix,
    rank: usize,
}

impl Span {
    pub fn new(field: Field, dim: usize, vectors: &[Vec<Scalar>]) -> Span {
        let m = if vectors.is_empty() {
            Matrix::zero(field, 0, dim)
        } else {
            Matrix::from_rows(field, vectors.to_vec())
        };
        let (reduced, pivots) = m.rref();
        Span { field, dim, reduced, rank: pivots.len() }
    }

    pub fn empty(field: Field, dim: usize) -> Span {
        Span::new(field, dim, &[])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Adds a vector to the span; returns true if it enlarged the span.
    pub fn add(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.dim);
        if self.contains(v) {
            return false;
        }
        let mut rows: Vec<Vec<Scalar>> = (0..self.rank).map(|i| self.reduced.row(i)).collect();
        rows.push(v.to_vec());
        let m = Matrix::from_rows(self.field, rows);
        let (reduced, pivots) = m.rref();
        self.rank = pivots.len();
        self.reduced = reduced;
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut rows: Vec<Vec<Scalar>> = (0..self.rank).map(|i| self.reduced.row(i)).collect();
        rows.push(v.to_vec());
        let m = Matrix::from_rows(self.field, rows);
        m.rank() == self.rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_over_f5_matches_determinant() {
        // [[1,3],[2,1]] over F5: det = 1 - 6 = -5 = 0 mod 5, and the
        // matrix is nonzero, so the rank must be exactly 1.
        let f = Field::prime(5).unwrap();
        let m = Matrix::from_i64_rows(f, &[&[1, 3], &[2, 1]]);
        let det = f.sub(
            &f.mul(m.get(0, 0), m.get(1, 1)),
            &f.mul(m.get(0, 1), m.get(1, 0)),
        );
        assert!(f.is_zero(&det));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_of_row_over_f2_exhaustive() {
        // Kernel of [1 1] over F2: check against brute force over all of F2^2.
        let f = Field::prime(2).unwrap();
        let m = Matrix::from_i64_rows(f, &[&[1, 1]]);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 1);
        let mut kernel_vectors = Vec::new();
        for a in 0..2i64 {
            for b in 0..2i64 {
                let v = vec![f.from_i64(a), f.from_i64(b)];
                if m.apply(&v).iter().all(|x| f.is_zero(x)) {
                    kernel_vectors.push(v);
                }
            }
        }
        assert_eq!(kernel_vectors.len(), 2); // zero vector and (1,1)
        assert_eq!(basis[0], vec![f.from_i64(1), f.from_i64(1)]);
    }

    #[test]
    fn solve_and_inverse_over_q() {
        let f = Field::Rationals;
        let m = Matrix::from_i64_rows(f, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(f, 2));
        let x = m.solve(&[f.from_i64(3), f.from_i64(2)]).unwrap();
        assert_eq!(x, vec![f.from_i64(1), f.from_i64(1)]);
    }

    #[test]
    fn solve_inconsistent() {
        let f = Field::Rationals;
        let m = Matrix::from_i64_rows(f, &[&[1, 1], &[1, 1]]);
        assert!(m.solve(&[f.from_i64(1), f.from_i64(2)]).is_none());
    }

    #[test]
    fn span_membership() {
        let f = Field::Rationals;
        let span = Span::new(f, 3, &[
            vec![f.from_i64(1), f.from_i64(0), f.from_i64(1)],
            vec![f.from_i64(0), f.from_i64(1), f.from_i64(1)],
        ]);
        assert_eq!(span.rank(), 2);
        assert!(span.contains(&[f.from_i64(1), f.from_i64(1), f.from_i64(2)]));
        assert!(!span.contains(&[f.from_i64(0), f.from_i64(0), f.from_i64(1)]));
    }
}
