//! Sparse matrices over an exact field.
//!
//! Rows are stored as sorted `(column, value)` lists with no explicit zeros,
//! so two matrices are equal exactly when they have the same shape and the
//! same nonzero entries. Complex differentials have a handful of nonzeros per
//! row, which keeps everything at desk scale cheap.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// A sparse vector: sorted by index, zero-free.
pub type SparseVec<E> = Vec<(usize, E)>;

#[derive(Clone)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<SparseVec<F::Elem>>,
}

impl<F: Field> PartialEq for Matrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<F: Field> Eq for Matrix<F> {}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix({}x{}) {}", self.rows, self.cols, self)
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.field.render(&self.get(r, c)))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

pub(crate) fn add_scaled<F: Field>(
    field: &F,
    a: &[(usize, F::Elem)],
    scale: &F::Elem,
    b: &[(usize, F::Elem)],
) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = field.mul(scale, &b[j].1);
            if !field.is_zero(&v) {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = field.add(&a[i].1, &field.mul(scale, &b[j].1));
            if !field.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Self {
            field: field.clone(),
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        Self::scalar(field, n, field.one())
    }

    pub fn scalar(field: &F, n: usize, c: F::Elem) -> Self {
        let mut m = Self::zeros(field, n, n);
        if !field.is_zero(&c) {
            for (i, row) in m.data.iter_mut().enumerate() {
                row.push((i, c.clone()));
            }
        }
        m
    }

    /// Builds from `(row, col, value)` triplets; repeated positions are summed.
    pub fn from_triplets(
        field: &F,
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, F::Elem)>,
    ) -> Result<Self> {
        let mut buckets: Vec<std::collections::BTreeMap<usize, F::Elem>> =
            vec![Default::default(); rows];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::shape(format!(
                    "entry ({r}, {c}) outside a {rows}x{cols} matrix"
                )));
            }
            let slot = buckets[r].entry(c).or_insert_with(|| field.zero());
            *slot = field.add(slot, &v);
        }
        let data = buckets
            .into_iter()
            .map(|b| b.into_iter().filter(|(_, v)| !field.is_zero(v)).collect())
            .collect();
        Ok(Self {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    /// Builds from dense rows.
    pub fn from_rows(field: &F, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::shape("ragged matrix rows"));
        }
        let n = rows.len();
        let data = rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .enumerate()
                    .filter(|(_, v)| !field.is_zero(v))
                    .collect()
            })
            .collect();
        Ok(Self {
            field: field.clone(),
            rows: n,
            cols,
            data,
        })
    }

    pub fn from_i64_rows(field: &F, rows: &[&[i64]]) -> Self {
        let dense = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, dense).expect("rectangular literal")
    }

    /// Builds from already sorted, zero-free sparse rows.
    pub(crate) fn from_sparse_rows(field: &F, cols: usize, data: Vec<SparseVec<F::Elem>>) -> Self {
        debug_assert!(data
            .iter()
            .all(|r| r.windows(2).all(|w| w[0].0 < w[1].0) && r.iter().all(|(c, _)| *c < cols)));
        Self {
            field: field.clone(),
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, r: usize) -> &[(usize, F::Elem)] {
        &self.data[r]
    }

    pub fn get(&self, r: usize, c: usize) -> F::Elem {
        match self.data[r].binary_search_by_key(&c, |(col, _)| *col) {
            Ok(i) => self.data[r][i].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    /// Nonzero entries in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &F::Elem)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn to_dense(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c)).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<SparseVec<F::Elem>> = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                data[*c].push((r, v.clone()));
            }
        }
        Self::from_sparse_rows(&self.field, self.rows, data)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: SparseVec<F::Elem> = Vec::new();
                for (k, v) in row {
                    acc = add_scaled(f, &acc, v, &other.data[*k]);
                }
                acc
            })
            .collect();
        Ok(Self::from_sparse_rows(f, other.cols, data))
    }

    /// `self + scale * other`.
    pub fn add_scaled(&self, scale: &F::Elem, other: &Self) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::shape(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| add_scaled(&self.field, a, scale, b))
            .collect();
        Ok(Self::from_sparse_rows(&self.field, self.cols, data))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.add_scaled(&self.field.one(), other)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add_scaled(&self.field.neg(&self.field.one()), other)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        let data = self
            .data
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(k, v)| (*k, f.mul(c, v)))
                    .filter(|(_, v)| !f.is_zero(v))
                    .collect()
            })
            .collect();
        Self::from_sparse_rows(f, self.cols, data)
    }

    pub fn apply(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.cols {
            return Err(Error::shape(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let f = &self.field;
        Ok(self
            .data
            .iter()
            .map(|row| {
                row.iter()
                    .fold(f.zero(), |acc, (c, x)| f.add(&acc, &f.mul(x, &v[*c])))
            })
            .collect())
    }

    /// Stacks `blocks` vertically.
    pub fn vstack(field: &F, cols: usize, blocks: &[&Self]) -> Result<Self> {
        let mut data = Vec::new();
        for b in blocks {
            if b.cols != cols {
                return Err(Error::shape("vstack of mismatched widths"));
            }
            data.extend(b.data.iter().cloned());
        }
        Ok(Self::from_sparse_rows(field, cols, data))
    }

    /// Matrix whose columns are the given dense vectors.
    pub fn from_columns(field: &F, dim: usize, columns: &[Vec<F::Elem>]) -> Result<Self> {
        let mut triplets = Vec::new();
        for (c, col) in columns.iter().enumerate() {
            if col.len() != dim {
                return Err(Error::shape("column of wrong length"));
            }
            for (r, v) in col.iter().enumerate() {
                if !field.is_zero(v) {
                    triplets.push((r, c, v.clone()));
                }
            }
        }
        Self::from_triplets(field, dim, columns.len(), triplets)
    }

    pub fn rendered_triplets(&self) -> Vec<(usize, usize, String)> {
        self.triplets()
            .map(|(r, c, v)| (r, c, self.field.render(v)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn product_and_transpose() {
        let q = Rationals;
        let a = Matrix::from_i64_rows(&q, &[&[1, 2], &[0, 1], &[3, 0]]);
        let b = Matrix::from_i64_rows(&q, &[&[1, 0, 1], &[1, 1, 0]]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(
            ab,
            Matrix::from_i64_rows(&q, &[&[3, 2, 1], &[1, 1, 0], &[3, 0, 3]])
        );
        assert_eq!(ab.transpose(), b.transpose().mul(&a.transpose()).unwrap());
        assert!(a.mul(&a).is_err());
    }

    #[test]
    fn cancellation_leaves_no_explicit_zeros() {
        let f = PrimeField::new(2).unwrap();
        let a = Matrix::from_i64_rows(&f, &[&[1, 1], &[0, 1]]);
        let s = a.add(&a).unwrap();
        assert!(s.is_zero());
        assert_eq!(s, Matrix::zeros(&f, 2, 2));
        assert_eq!(s.nnz(), 0);
    }

    #[test]
    fn triplets_sum_duplicates() {
        let q = Rationals;
        let m = Matrix::from_triplets(
            &q,
            2,
            2,
            [
                (0, 1, q.from_i64(1)),
                (0, 1, q.from_i64(-1)),
                (1, 0, q.from_i64(2)),
            ],
        )
        .unwrap();
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.get(1, 0), q.from_i64(2));
        assert!(Matrix::from_triplets(&q, 1, 1, [(1, 0, q.one())]).is_err());
    }
}
