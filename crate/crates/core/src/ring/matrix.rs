//! Matrices of ring elements under the composition convention where a matrix
//! with m columns and n rows is a morphism from an m-fold to an n-fold sum,
//! and the composite of U (m cols, n rows) with V (n cols, o rows) has
//! entries w_{i,k} = sum_j v_{j,k} * u_{i,j}.
//!
//! Stored row-major, so the composite V after U is the ordinary matrix
//! product V * U of the row-major arrays.

use super::{RingAutomorphism, RingDescriptor, Scalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub ring: RingDescriptor,
    cols: usize,
    rows: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(ring: RingDescriptor, cols: usize, rows: usize, entries: Vec<Scalar>) -> Self {
        assert_eq!(entries.len(), cols * rows, "entry count mismatch");
        Matrix {
            ring,
            cols,
            rows,
            entries,
        }
    }

    pub fn from_rows(ring: RingDescriptor, rows_data: Vec<Vec<Scalar>>) -> Result<Self> {
        let rows = rows_data.len();
        let cols = rows_data.first().map_or(0, |r| r.len());
        for r in &rows_data {
            if r.len() != cols {
                return Err(Error::DimensionMismatch("ragged matrix rows".into()));
            }
        }
        Ok(Matrix {
            ring,
            cols,
            rows,
            entries: rows_data.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(ring: &RingDescriptor, rows_data: &[&[i64]]) -> Self {
        let rows: Vec<Vec<Scalar>> = rows_data
            .iter()
            .map(|r| r.iter().map(|&v| ring.from_i64(v)).collect())
            .collect();
        Matrix::from_rows(ring.clone(), rows).expect("rectangular")
    }

    pub fn zero(ring: RingDescriptor, cols: usize, rows: usize) -> Self {
        let z = ring.zero();
        Matrix {
            ring,
            cols,
            rows,
            entries: vec![z; cols * rows],
        }
    }

    pub fn identity(ring: RingDescriptor, n: usize) -> Self {
        let mut m = Matrix::zero(ring.clone(), n, n);
        let one = ring.one();
        for i in 0..n {
            m.set(i, i, one.clone());
        }
        m
    }

    pub fn scalar(ring: RingDescriptor, n: usize, value: &Scalar) -> Self {
        let mut m = Matrix::zero(ring.clone(), n, n);
        for i in 0..n {
            m.set(i, i, value.clone());
        }
        m
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn is_square(&self) -> bool {
        self.cols == self.rows
    }

    /// Entry u_{i,j}: column i (source index), row j (target index); 0-based.
    pub fn entry(&self, col: usize, row: usize) -> &Scalar {
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, col: usize, row: usize, v: Scalar) {
        self.entries[row * self.cols + col] = v;
    }

    pub fn row_slices(&self) -> Vec<&[Scalar]> {
        (0..self.rows)
            .map(|j| &self.entries[j * self.cols..(j + 1) * self.cols])
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.ring.is_zero(e))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.ring.clone(), self.cols)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_ring(other)?;
        if self.cols != other.cols || self.rows != other.rows {
            return Err(Error::DimensionMismatch("matrix add shape".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.ring.add(a, b))
            .collect();
        Ok(Matrix {
            ring: self.ring.clone(),
            cols: self.cols,
            rows: self.rows,
            entries,
        })
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            ring: self.ring.clone(),
            cols: self.cols,
            rows: self.rows,
            entries: self.entries.iter().map(|e| self.ring.neg(e)).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            ring: self.ring.clone(),
            cols: self.cols,
            rows: self.rows,
            entries: self.entries.iter().map(|e| self.ring.mul(s, e)).collect(),
        }
    }

    /// Apply a ring automorphism entrywise.
    pub fn map_aut(&self, aut: &RingAutomorphism) -> Matrix {
        Matrix {
            ring: self.ring.clone(),
            cols: self.cols,
            rows: self.rows,
            entries: self.entries.iter().map(|e| aut.apply(e)).collect(),
        }
    }

    fn check_same_ring(&self, other: &Matrix) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!(
                "{} vs {}",
                self.ring, other.ring
            )));
        }
        Ok(())
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_ring(other)?;
        let mut m = Matrix::zero(
            self.ring.clone(),
            self.cols + other.cols,
            self.rows + other.rows,
        );
        for j in 0..self.rows {
            for i in 0..self.cols {
                m.set(i, j, self.entry(i, j).clone());
            }
        }
        for j in 0..other.rows {
            for i in 0..other.cols {
                m.set(self.cols + i, self.rows + j, other.entry(i, j).clone());
            }
        }
        Ok(m)
    }

    /// Kronecker product: block (I,J) of the result is a_{I,J} * other.
    pub fn kronecker(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_ring(other)?;
        let mut m = Matrix::zero(
            self.ring.clone(),
            self.cols * other.cols,
            self.rows * other.rows,
        );
        for bj in 0..self.rows {
            for bi in 0..self.cols {
                let a = self.entry(bi, bj);
                for j in 0..other.rows {
                    for i in 0..other.cols {
                        m.set(
                            bi * other.cols + i,
                            bj * other.rows + j,
                            self.ring.mul(a, other.entry(i, j)),
                        );
                    }
                }
            }
        }
        Ok(m)
    }

    /// Build a block matrix from an (block_cols x block_rows) grid of equally
    /// sized blocks; `get(bi, bj)` returns the block at block-column bi,
    /// block-row bj.
    pub fn from_blocks<F>(
        ring: RingDescriptor,
        block_cols: usize,
        block_rows: usize,
        inner_cols: usize,
        inner_rows: usize,
        get: F,
    ) -> Matrix
    where
        F: Fn(usize, usize) -> Matrix,
    {
        let mut m = Matrix::zero(
            ring.clone(),
            block_cols * inner_cols,
            block_rows * inner_rows,
        );
        for bj in 0..block_rows {
            for bi in 0..block_cols {
                let blk = get(bi, bj);
                assert_eq!(blk.cols(), inner_cols);
                assert_eq!(blk.rows(), inner_rows);
                for j in 0..inner_rows {
                    for i in 0..inner_cols {
                        m.set(
                            bi * inner_cols + i,
                            bj * inner_rows + j,
                            blk.entry(i, j).clone(),
                        );
                    }
                }
            }
        }
        m
    }

    /// Extract the block at block-column bi, block-row bj of an evenly
    /// partitioned matrix.
    pub fn block(&self, bi: usize, bj: usize, inner_cols: usize, inner_rows: usize) -> Matrix {
        let mut m = Matrix::zero(self.ring.clone(), inner_cols, inner_rows);
        for j in 0..inner_rows {
            for i in 0..inner_cols {
                m.set(
                    i,
                    j,
                    self.entry(bi * inner_cols + i, bj * inner_rows + j).clone(),
                );
            }
        }
        m
    }
}

/// The composite V after U. Requires V's column count to equal U's row count.
pub fn matrix_compose(u: &Matrix, v: &Matrix) -> Result<Matrix> {
    if u.ring != v.ring {
        return Err(Error::RingMismatch(format!("{} vs {}", u.ring, v.ring)));
    }
    if v.cols() != u.rows() {
        return Err(Error::DimensionMismatch(format!(
            "compose: V has {} columns but U has {} rows",
            v.cols(),
            u.rows()
        )));
    }
    let ring = u.ring.clone();
    let mut w = Matrix::zero(ring.clone(), u.cols(), v.rows());
    for k in 0..v.rows() {
        for i in 0..u.cols() {
            let mut acc = ring.zero();
            for j in 0..u.rows() {
                acc = ring.add(&acc, &ring.mul(v.entry(j, k), u.entry(i, j)));
            }
            w.set(i, k, acc);
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> RingDescriptor {
        RingDescriptor::Integers
    }

    #[test]
    fn compose_column_vector_with_row_vector() {
        // U: 1 column, 2 rows; V: 2 columns, 1 row; V o U is the scalar 3*1 + 4*2.
        let u = Matrix::from_i64_rows(&z(), &[&[1], &[2]]);
        let v = Matrix::from_i64_rows(&z(), &[&[3, 4]]);
        let w = matrix_compose(&u, &v).unwrap();
        assert_eq!(w.cols(), 1);
        assert_eq!(w.rows(), 1);
        assert_eq!(*w.entry(0, 0), z().from_i64(11));
    }

    #[test]
    fn identity_is_neutral() {
        let u = Matrix::from_i64_rows(&z(), &[&[1, 2], &[3, 4], &[5, 6]]);
        let idl = Matrix::identity(z(), 3);
        let idr = Matrix::identity(z(), 2);
        assert_eq!(matrix_compose(&u, &idl).unwrap(), u);
        assert_eq!(matrix_compose(&idr, &u).unwrap(), u);
    }

    #[test]
    fn permutation_composition() {
        // Columns index sources; the permutation matrix for p sends source i
        // to target p(i), entry (i, p(i)) = 1.
        let perm = |p: &[usize]| {
            let mut m = Matrix::zero(z(), p.len(), p.len());
            for (i, &pi) in p.iter().enumerate() {
                m.set(i, pi, z().one());
            }
            m
        };
        let a = [1usize, 2, 0]; // i -> i+1 mod 3
        let b = [2usize, 0, 1]; // i -> i-1 mod 3
        let ma = perm(&a);
        let mb = perm(&b);
        let composed = matrix_compose(&ma, &mb).unwrap(); // b after a
        let expected: Vec<usize> = (0..3).map(|i| b[a[i]]).collect();
        assert_eq!(composed, perm(&expected));
    }

    #[test]
    fn shape_mismatch_rejected() {
        let u = Matrix::from_i64_rows(&z(), &[&[1, 2]]);
        assert!(matrix_compose(&u, &u).is_err());
    }

    #[test]
    fn compose_is_associative_on_samples() {
        let u = Matrix::from_i64_rows(&z(), &[&[1, -2], &[0, 3], &[2, 2]]);
        let v = Matrix::from_i64_rows(&z(), &[&[1, 0, 5], &[-1, 2, 1]]);
        let w = Matrix::from_i64_rows(&z(), &[&[2, 1], &[1, 1]]);
        let left = matrix_compose(&matrix_compose(&u, &v).unwrap(), &w).unwrap();
        let right = matrix_compose(&u, &matrix_compose(&v, &w).unwrap()).unwrap();
        assert_eq!(left, right);
    }
}
