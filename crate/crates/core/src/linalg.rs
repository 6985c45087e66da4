//! Rank, kernels, images and homology over an exact field.
//!
//! Everything goes through one incremental row-echelon structure. Over ℚ the
//! rank is computed separately with fraction-free elimination on integer rows,
//! which avoids rational blow-up in the large differentials.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::complex::ComplexWindow;
use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::matrix::{add_scaled, Matrix, SparseVec};

/// Row-echelon form built one vector at a time. Every stored row has leading
/// coefficient one and a distinct leading column.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    dim: usize,
    rows: Vec<SparseVec<F::Elem>>,
    pivots: BTreeMap<usize, usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: &F, dim: usize) -> Self {
        Self {
            field: field.clone(),
            dim,
            rows: Vec::new(),
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn reduce(&self, mut v: SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        while let Some((lead, coeff)) = v.first().cloned() {
            match self.pivots.get(&lead) {
                Some(&r) => {
                    let scale = self.field.neg(&coeff);
                    v = add_scaled(&self.field, &v, &scale, &self.rows[r]);
                }
                None => break,
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether it was independent.
    pub fn insert(&mut self, v: SparseVec<F::Elem>) -> bool {
        let v = self.reduce(v);
        let Some((lead, coeff)) = v.first().cloned() else {
            return false;
        };
        let inv = self.field.inv(&coeff).expect("leading entry is nonzero");
        let f = &self.field;
        let v = v.into_iter().map(|(c, x)| (c, f.mul(&inv, &x))).collect();
        self.pivots.insert(lead, self.rows.len());
        self.rows.push(v);
        true
    }

    pub fn insert_dense(&mut self, v: &[F::Elem]) -> bool {
        self.insert(to_sparse(&self.field, v))
    }

    pub fn contains(&self, v: SparseVec<F::Elem>) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn contains_dense(&self, v: &[F::Elem]) -> bool {
        self.contains(to_sparse(&self.field, v))
    }

    /// Reduced row-echelon rows, ordered by pivot column.
    pub fn reduced(&self) -> Vec<(usize, SparseVec<F::Elem>)> {
        let mut rows: Vec<(usize, SparseVec<F::Elem>)> = self
            .pivots
            .iter()
            .map(|(&c, &r)| (c, self.rows[r].clone()))
            .collect();
        for k in (0..rows.len()).rev() {
            let (col, pivot_row) = rows[k].clone();
            for (_, row) in rows.iter_mut().take(k) {
                if let Ok(i) = row.binary_search_by_key(&col, |(c, _)| *c) {
                    let scale = self.field.neg(&row[i].1);
                    *row = add_scaled(&self.field, row, &scale, &pivot_row);
                }
            }
        }
        rows
    }
}

pub fn to_sparse<F: Field>(field: &F, v: &[F::Elem]) -> SparseVec<F::Elem> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !field.is_zero(x))
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn to_dense<F: Field>(field: &F, dim: usize, v: &[(usize, F::Elem)]) -> Vec<F::Elem> {
    let mut out = vec![field.zero(); dim];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// Rank by plain elimination over the matrix's field.
pub fn echelon_rank<F: Field>(m: &Matrix<F>) -> usize {
    let (vectors, dim) = if m.rows() <= m.cols() {
        (m.clone(), m.cols())
    } else {
        (m.transpose(), m.rows())
    };
    let mut ech = Echelon::new(m.field(), dim);
    for r in 0..vectors.rows() {
        ech.insert(vectors.row(r).to_vec());
        if ech.rank() == dim {
            break;
        }
    }
    ech.rank()
}

type IntRow = Vec<(usize, BigInt)>;

fn primitive(mut row: IntRow) -> IntRow {
    let mut g = BigInt::zero();
    for (_, x) in &row {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    if row.first().is_some_and(|(_, x)| x.is_negative()) {
        g = -g;
    }
    if !g.is_zero() && !g.is_one() {
        for (_, x) in row.iter_mut() {
            *x = &*x / &g;
        }
    }
    row
}

/// `a * u - b * v` on sparse integer rows.
fn int_combine(a: &BigInt, u: &IntRow, b: &BigInt, v: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(u.len() + v.len());
    let (mut i, mut j) = (0, 0);
    while i < u.len() || j < v.len() {
        let (col, val) = if j == v.len() || (i < u.len() && u[i].0 < v[j].0) {
            i += 1;
            (u[i - 1].0, a * &u[i - 1].1)
        } else if i == u.len() || v[j].0 < u[i].0 {
            j += 1;
            (v[j - 1].0, -(b * &v[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (u[i - 1].0, a * &u[i - 1].1 - b * &v[j - 1].1)
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    out
}

/// Rank over ℚ by fraction-free elimination: each row is scaled to a primitive
/// integer vector and eliminated by cross-multiplication, never by division.
pub fn fraction_free_rank(m: &Matrix<Rationals>) -> usize {
    let vectors = if m.rows() <= m.cols() {
        m.clone()
    } else {
        m.transpose()
    };
    let mut pivots: BTreeMap<usize, IntRow> = BTreeMap::new();
    for r in 0..vectors.rows() {
        let row = vectors.row(r);
        if row.is_empty() {
            continue;
        }
        let lcm = row
            .iter()
            .fold(BigInt::one(), |acc, (_, q)| acc.lcm(q.denom()));
        let mut v: IntRow = primitive(
            row.iter()
                .map(|(c, q)| (*c, q.numer() * (&lcm / q.denom())))
                .collect(),
        );
        while let Some((lead, coeff)) = v.first().cloned() {
            match pivots.get(&lead) {
                Some(p) => {
                    let g = coeff.gcd(&p[0].1);
                    let a = &p[0].1 / &g;
                    let b = &coeff / &g;
                    v = primitive(int_combine(&a, &v, &b, p));
                }
                None => {
                    pivots.insert(lead, v);
                    break;
                }
            }
        }
    }
    pivots.len()
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    m.field().rank(m)
}

/// Basis of the null space, one vector per free column of the reduced
/// echelon form (free coordinate set to one).
pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Vec<Vec<F::Elem>> {
    let f = m.field();
    let mut ech = Echelon::new(f, m.cols());
    for r in 0..m.rows() {
        ech.insert(m.row(r).to_vec());
    }
    let reduced = ech.reduced();
    let pivot_cols: std::collections::BTreeSet<usize> = reduced.iter().map(|(c, _)| *c).collect();
    (0..m.cols())
        .filter(|c| !pivot_cols.contains(c))
        .map(|free| {
            let mut v = vec![f.zero(); m.cols()];
            v[free] = f.one();
            for (pc, row) in &reduced {
                if let Ok(i) = row.binary_search_by_key(&free, |(c, _)| *c) {
                    v[*pc] = f.neg(&row[i].1);
                }
            }
            v
        })
        .collect()
}

/// The columns of `m` that are independent of the columns before them.
pub fn image_basis<F: Field>(m: &Matrix<F>) -> Vec<Vec<F::Elem>> {
    let f = m.field();
    let t = m.transpose();
    let mut ech = Echelon::new(f, m.rows());
    (0..t.rows())
        .filter(|&c| ech.insert(t.row(c).to_vec()))
        .map(|c| to_dense(f, m.rows(), t.row(c)))
        .collect()
}

pub fn span_rank<F: Field>(field: &F, dim: usize, vectors: &[Vec<F::Elem>]) -> Result<usize> {
    let mut ech = Echelon::new(field, dim);
    for v in vectors {
        if v.len() != dim {
            return Err(Error::shape(format!(
                "vector of length {} in ambient dimension {dim}",
                v.len()
            )));
        }
        ech.insert_dense(v);
    }
    Ok(ech.rank())
}

/// True iff the two lists of columns span the same subspace.
pub fn subspace_equal<F: Field>(
    field: &F,
    dim: usize,
    a: &[Vec<F::Elem>],
    b: &[Vec<F::Elem>],
) -> Result<bool> {
    let ra = span_rank(field, dim, a)?;
    let rb = span_rank(field, dim, b)?;
    if ra != rb {
        return Ok(false);
    }
    let mut ech = Echelon::new(field, dim);
    for v in a {
        ech.insert_dense(v);
    }
    Ok(b.iter().all(|v| ech.contains_dense(v)))
}

/// True iff every vector of `b` lies in the span of `a`.
pub fn subspace_contains<F: Field>(
    field: &F,
    dim: usize,
    a: &[Vec<F::Elem>],
    b: &[Vec<F::Elem>],
) -> Result<bool> {
    span_rank(field, dim, b)?;
    let mut ech = Echelon::new(field, dim);
    for v in a {
        if v.len() != dim {
            return Err(Error::shape("vector of wrong length"));
        }
        ech.insert_dense(v);
    }
    Ok(b.iter().all(|v| ech.contains_dense(v)))
}

/// Homology at one degree of a window.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HomologyEntry<E> {
    pub degree: usize,
    pub betti: usize,
    pub dim: usize,
    pub kernel_dim: usize,
    pub image_dim: usize,
    /// Cycles that are independent modulo boundaries, one per Betti unit.
    #[serde(skip)]
    pub representatives: Vec<Vec<E>>,
}

/// Homology of `... -> incoming -> C -> outgoing -> ...` at `C`.
pub fn homology_at<F: Field>(
    field: &F,
    degree: usize,
    dim: usize,
    outgoing: Option<&Matrix<F>>,
    incoming: Option<&Matrix<F>>,
) -> Result<HomologyEntry<F::Elem>> {
    let kernel = match outgoing {
        Some(m) => kernel_basis(m),
        None => (0..dim)
            .map(|i| {
                let mut v = vec![field.zero(); dim];
                v[i] = field.one();
                v
            })
            .collect(),
    };
    let image = incoming.map(image_basis).unwrap_or_default();
    let mut ech = Echelon::new(field, dim);
    for v in &image {
        ech.insert_dense(v);
    }
    let image_dim = ech.rank();
    let representatives: Vec<_> = kernel
        .iter()
        .filter(|v| ech.insert_dense(v))
        .cloned()
        .collect();
    let kernel_dim = kernel.len();
    if image_dim + representatives.len() != kernel_dim {
        return Err(Error::Inconsistent(format!(
            "boundaries at degree {degree} are not contained in the cycles"
        )));
    }
    Ok(HomologyEntry {
        degree,
        betti: representatives.len(),
        dim,
        kernel_dim,
        image_dim,
        representatives,
    })
}

pub fn homology_of_window<F: Field>(
    window: &ComplexWindow<F>,
    degree: usize,
) -> Result<HomologyEntry<F::Elem>> {
    if degree >= window.max_degree() {
        return Err(Error::DegreeOutOfWindow {
            degree,
            max: window.max_degree(),
        });
    }
    homology_at(
        window.field(),
        degree,
        window.dims()[degree],
        window.outgoing(degree),
        window.incoming(degree),
    )
}

/// Betti numbers for degrees `0..N`, from ranks only.
pub fn betti_numbers<F: Field>(window: &ComplexWindow<F>) -> Vec<usize> {
    let ranks: Vec<usize> = window.differentials().iter().map(rank).collect();
    (0..window.max_degree())
        .map(|n| {
            let out = window.outgoing_index(n).map_or(0, |i| ranks[i]);
            let inc = window.incoming_index(n).map_or(0, |i| ranks[i]);
            window.dims()[n] - out - inc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn identity_over_gf2() {
        let f = PrimeField::new(2).unwrap();
        let id = Matrix::identity(&f, 2);
        assert_eq!(rank(&id), 2);
        assert!(kernel_basis(&id).is_empty());
    }

    #[test]
    fn all_ones_over_q() {
        let q = Rationals;
        let m = Matrix::from_i64_rows(&q, &[&[1, 1], &[1, 1]]);
        assert_eq!(rank(&m), 1);
        let k = kernel_basis(&m);
        assert_eq!(k, vec![vec![q.from_i64(-1), q.from_i64(1)]]);
        assert!(subspace_equal(&q, 2, &k, &[vec![q.from_i64(1), q.from_i64(-1)]]).unwrap());
    }

    #[test]
    fn fraction_free_agrees_with_plain_elimination() {
        let q = Rationals;
        let m = Matrix::from_i64_rows(
            &q,
            &[&[2, 4, 6, 8], &[1, 3, 5, 7], &[3, 7, 11, 15], &[0, 2, 4, 7]],
        );
        assert_eq!(fraction_free_rank(&m), 3);
        assert_eq!(echelon_rank(&m), 3);
        let half = m.scale(&q.parse("1/2").unwrap());
        assert_eq!(fraction_free_rank(&half), 3);
    }

    #[test]
    fn subspace_equality_cases() {
        let q = Rationals;
        let e1 = vec![q.one(), q.zero()];
        let two_e1 = vec![q.from_i64(2), q.zero()];
        let e2 = vec![q.zero(), q.one()];
        assert!(subspace_equal(&q, 2, &[e1.clone()], &[two_e1]).unwrap());
        assert!(!subspace_equal(&q, 2, &[e1.clone()], &[e2]).unwrap());
        assert!(subspace_equal(&q, 3, &[e1.clone()], &[e1]).is_err());
    }

    #[test]
    fn image_basis_picks_independent_columns() {
        let q = Rationals;
        let m = Matrix::from_i64_rows(&q, &[&[1, 2, 0], &[1, 2, 1]]);
        let img = image_basis(&m);
        assert_eq!(img.len(), 2);
        assert_eq!(img[0], vec![q.one(), q.one()]);
        assert_eq!(img[1], vec![q.zero(), q.one()]);
    }

    #[test]
    fn two_step_zero_complex() {
        let q = Rationals;
        let zero = Matrix::zeros(&q, 1, 1);
        let h0 = homology_at(&q, 0, 1, Some(&zero), None).unwrap();
        let h1 = homology_at(&q, 1, 1, None, Some(&zero)).unwrap();
        assert_eq!((h0.betti, h1.betti), (1, 1));
    }
}
