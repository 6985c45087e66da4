//! Hom-algebras given by structure constants, the Hom-group algebra `KG`,
//! Hom-inverses of scaled basis elements and the commutator bracket.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::homgroup::HomGroup;
use crate::linalg::{to_dense, to_sparse};
use crate::matrix::{add_scaled, Matrix, SparseVec};
use crate::report::AxiomReport;

/// A finite-dimensional Hom-algebra with a distinguished basis `e_0..e_{d-1}`.
///
/// `constants[i][j]` is `e_i e_j` as a sparse coordinate vector; column `j`
/// of `alpha` is `α(e_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HomAlgebra<F: Field> {
    field: F,
    dim: usize,
    constants: Vec<Vec<SparseVec<F::Elem>>>,
    alpha: Matrix<F>,
    alpha_cols: Vec<SparseVec<F::Elem>>,
    unit: SparseVec<F::Elem>,
}

fn render_vec<F: Field>(field: &F, dim: usize, v: &[(usize, F::Elem)]) -> String {
    let parts: Vec<String> = to_dense(field, dim, v)
        .iter()
        .map(|x| field.render(x))
        .collect();
    format!("[{}]", parts.join(","))
}

impl<F: Field> HomAlgebra<F> {
    /// Builds an algebra from dense structure constants, `alpha` (d×d) and the
    /// unit vector. Only shapes are checked here.
    pub fn new(
        field: &F,
        constants: Vec<Vec<Vec<F::Elem>>>,
        alpha: Matrix<F>,
        unit: Vec<F::Elem>,
    ) -> Result<Self> {
        let dim = constants.len();
        if dim == 0 {
            return Err(Error::shape("algebra dimension must be positive"));
        }
        let mut sparse = Vec::with_capacity(dim);
        for (i, row) in constants.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::shape(format!(
                    "constants row {i} has {} entries",
                    row.len()
                )));
            }
            let mut out = Vec::with_capacity(dim);
            for (j, v) in row.iter().enumerate() {
                if v.len() != dim {
                    return Err(Error::shape(format!(
                        "product e{i}e{j} has length {}",
                        v.len()
                    )));
                }
                out.push(to_sparse(field, v));
            }
            sparse.push(out);
        }
        if alpha.shape() != (dim, dim) {
            return Err(Error::shape(format!("alpha has shape {:?}", alpha.shape())));
        }
        if unit.len() != dim {
            return Err(Error::shape(format!("unit has length {}", unit.len())));
        }
        let alpha_t = alpha.transpose();
        let alpha_cols = (0..dim).map(|j| alpha_t.row(j).to_vec()).collect();
        Ok(Self {
            field: field.clone(),
            dim,
            constants: sparse,
            alpha,
            alpha_cols,
            unit: to_sparse(field, &unit),
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alpha_matrix(&self) -> &Matrix<F> {
        &self.alpha
    }

    /// `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec<F::Elem> {
        &self.constants[i][j]
    }

    /// `α(e_i)`.
    pub fn basis_alpha(&self, i: usize) -> &SparseVec<F::Elem> {
        &self.alpha_cols[i]
    }

    pub fn unit(&self) -> &SparseVec<F::Elem> {
        &self.unit
    }

    pub fn basis(&self, i: usize) -> SparseVec<F::Elem> {
        vec![(i, self.field.one())]
    }

    pub fn constants_dense(&self) -> Vec<Vec<Vec<F::Elem>>> {
        self.constants
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| to_dense(&self.field, self.dim, v))
                    .collect()
            })
            .collect()
    }

    pub fn mul(&self, a: &[(usize, F::Elem)], b: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        let f = &self.field;
        let mut acc = Vec::new();
        for (i, x) in a {
            for (j, y) in b {
                acc = add_scaled(f, &acc, &f.mul(x, y), &self.constants[*i][*j]);
            }
        }
        acc
    }

    pub fn apply_alpha(&self, a: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        let mut acc = Vec::new();
        for (i, x) in a {
            acc = add_scaled(&self.field, &acc, x, &self.alpha_cols[*i]);
        }
        acc
    }

    pub fn add(&self, a: &[(usize, F::Elem)], b: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        add_scaled(&self.field, a, &self.field.one(), b)
    }

    pub fn sub(&self, a: &[(usize, F::Elem)], b: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        add_scaled(&self.field, a, &self.field.from_i64(-1), b)
    }

    pub fn render(&self, v: &[(usize, F::Elem)]) -> String {
        render_vec(&self.field, self.dim, v)
    }

    /// First basis triple with `(e_i e_j) e_k != e_i (e_j e_k)`, if any.
    pub fn associativity_probe(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let left = self.mul(&self.constants[i][j], &self.basis(k));
                    let right = self.mul(&self.basis(i), &self.constants[j][k]);
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }
}

/// Exhaustive check of the unital Hom-algebra axioms on basis elements.
pub fn verify_hom_algebra<F: Field>(a: &HomAlgebra<F>) -> AxiomReport {
    let d = a.dim();
    let mut report = AxiomReport::new();
    let e = |i| a.basis(i);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let lhs = a.mul(a.basis_alpha(i), a.basis_product(j, k));
                let rhs = a.mul(a.basis_product(i, j), a.basis_alpha(k));
                if lhs != rhs {
                    report.push(
                        "hom_associativity",
                        vec![i, j, k],
                        a.render(&lhs),
                        a.render(&rhs),
                    );
                }
            }
            let lhs = a.apply_alpha(a.basis_product(i, j));
            let rhs = a.mul(a.basis_alpha(i), a.basis_alpha(j));
            if lhs != rhs {
                report.push(
                    "alpha_multiplicative",
                    vec![i, j],
                    a.render(&lhs),
                    a.render(&rhs),
                );
            }
        }
        let right = a.mul(&e(i), a.unit());
        let left = a.mul(a.unit(), &e(i));
        if &right != a.basis_alpha(i) {
            report.push(
                "unit_right",
                vec![i],
                a.render(&right),
                a.render(a.basis_alpha(i)),
            );
        }
        if &left != a.basis_alpha(i) {
            report.push(
                "unit_left",
                vec![i],
                a.render(&left),
                a.render(a.basis_alpha(i)),
            );
        }
    }
    let au = a.apply_alpha(a.unit());
    if &au != a.unit() {
        report.push("alpha_unit", vec![], a.render(&au), a.render(a.unit()));
    }
    report
}

/// The Hom-group algebra `KG`: basis indexed by `G`, `e_g e_h = e_{gh}`.
pub fn group_algebra<F: Field>(g: &HomGroup, field: &F) -> HomAlgebra<F> {
    let n = g.order();
    let basis = |x: usize| {
        let mut v = vec![field.zero(); n];
        v[x] = field.one();
        v
    };
    let constants = (0..n)
        .map(|x| (0..n).map(|y| basis(g.mul(x, y))).collect())
        .collect();
    let alpha = Matrix::from_triplets(field, n, n, (0..n).map(|x| (g.alpha(x), x, field.one())))
        .expect("permutation-shaped triplets");
    HomAlgebra::new(field, constants, alpha, basis(g.unit())).expect("well-shaped group algebra")
}

/// A Hom-inverse of `c·e_g` in `KG` together with its invertibility index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisHomInverse<E> {
    pub coefficient: E,
    pub element: usize,
    /// Least `k` with `α^k(x x⁻¹) = α^k(x⁻¹ x) = 1`.
    pub index: usize,
}

/// Least `k <= bound` with `α^k(x y) = α^k(y x) = 1` in `a`.
pub fn hom_inverse_index<F: Field>(
    a: &HomAlgebra<F>,
    x: &[(usize, F::Elem)],
    y: &[(usize, F::Elem)],
    bound: usize,
) -> Option<usize> {
    let mut xy = a.mul(x, y);
    let mut yx = a.mul(y, x);
    for k in 0..=bound {
        if &xy == a.unit() && &yx == a.unit() {
            return Some(k);
        }
        xy = a.apply_alpha(&xy);
        yx = a.apply_alpha(&yx);
    }
    None
}

/// `c⁻¹ e_{g⁻¹}`, the Hom-inverse of `c·e_g` in `KG`, with its certificate.
pub fn hom_inverse_of_basis<F: Field>(
    g: &HomGroup,
    field: &F,
    c: &F::Elem,
    elem: usize,
) -> Result<BasisHomInverse<F::Elem>> {
    let c_inv = field.inv(c).ok_or(Error::ZeroScalar)?;
    if elem >= g.order() {
        return Err(Error::shape(format!("element {elem} out of range")));
    }
    let kg = group_algebra(g, field);
    let x = vec![(elem, c.clone())];
    let y = vec![(g.inv(elem), c_inv.clone())];
    let index = hom_inverse_index(&kg, &x, &y, g.order()).ok_or_else(|| {
        Error::Inconsistent(format!("c^-1 e_{} is not a Hom-inverse", g.inv(elem)))
    })?;
    Ok(BasisHomInverse {
        coefficient: c_inv,
        element: g.inv(elem),
        index,
    })
}

/// Every scaled basis element `s·e_h` (with `s` drawn from `scalars`) that is
/// a Hom-inverse of `c·e_g` within `|G|` twists.
pub fn scaled_basis_hom_inverses<F: Field>(
    g: &HomGroup,
    field: &F,
    c: &F::Elem,
    elem: usize,
    scalars: &[F::Elem],
) -> Vec<(F::Elem, usize)> {
    let kg = group_algebra(g, field);
    let x = vec![(elem, c.clone())];
    let mut out = Vec::new();
    for s in scalars.iter().filter(|s| !field.is_zero(s)) {
        for h in g.elements() {
            let y = vec![(h, s.clone())];
            if hom_inverse_index(&kg, &x, &y, g.order()).is_some() {
                out.push((s.clone(), h));
            }
        }
    }
    out
}

/// Commutator bracket constants with the Hom-Lie checks.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BracketCertificate {
    /// `bracket[i][j]` is `[e_i, e_j]` rendered densely.
    pub bracket: Vec<Vec<String>>,
    pub is_zero: bool,
    pub antisymmetric: bool,
    pub hom_jacobi: bool,
    pub jacobi_witness: Option<(usize, usize, usize)>,
}

pub fn commutator_bracket<F: Field>(a: &HomAlgebra<F>) -> BracketCertificate {
    let d = a.dim();
    let table: Vec<Vec<SparseVec<F::Elem>>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| a.sub(a.basis_product(i, j), a.basis_product(j, i)))
                .collect()
        })
        .collect();
    let bracket = |x: &[(usize, F::Elem)], y: &[(usize, F::Elem)]| {
        let f = a.field();
        let mut acc = Vec::new();
        for (i, s) in x {
            for (j, t) in y {
                acc = add_scaled(f, &acc, &f.mul(s, t), &table[*i][*j]);
            }
        }
        acc
    };
    let antisymmetric =
        (0..d).all(|i| (0..d).all(|j| a.add(&table[i][j], &table[j][i]).is_empty()));
    let mut jacobi_witness = None;
    'outer: for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let t1 = bracket(a.basis_alpha(i), &table[j][k]);
                let t2 = bracket(a.basis_alpha(j), &table[k][i]);
                let t3 = bracket(a.basis_alpha(k), &table[i][j]);
                if !a.add(&a.add(&t1, &t2), &t3).is_empty() {
                    jacobi_witness = Some((i, j, k));
                    break 'outer;
                }
            }
        }
    }
    BracketCertificate {
        bracket: table
            .iter()
            .map(|row| row.iter().map(|v| a.render(v)).collect())
            .collect(),
        is_zero: table.iter().flatten().all(Vec::is_empty),
        antisymmetric,
        hom_jacobi: jacobi_witness.is_none(),
        jacobi_witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::homgroup::{twist_group, Group};

    #[test]
    fn trivial_group_algebra() {
        let kg = group_algebra(&HomGroup::trivial(), &Rationals);
        assert_eq!(kg.dim(), 1);
        assert_eq!(kg.basis_product(0, 0), &kg.basis(0));
        assert!(verify_hom_algebra(&kg).is_empty());
    }

    #[test]
    fn twisted_z3_algebra_is_not_associative() {
        let g = twist_group(&Group::cyclic(3), &[0, 2, 1]).unwrap();
        let kg = group_algebra(&g, &Rationals);
        assert!(verify_hom_algebra(&kg).is_empty());
        // (e1 e0) e0 = e1 but e1 (e0 e0) = e2
        let left = kg.mul(kg.basis_product(1, 0), &kg.basis(0));
        let right = kg.mul(&kg.basis(1), kg.basis_product(0, 0));
        assert_eq!(left, kg.basis(1));
        assert_eq!(right, kg.basis(2));
        assert!(kg.associativity_probe().is_some());
    }

    #[test]
    fn untwisted_algebra_is_associative() {
        let g = HomGroup::from_group(&Group::symmetric3());
        let kg = group_algebra(&g, &Rationals);
        assert_eq!(kg.associativity_probe(), None);
    }

    #[test]
    fn one_dimensional_field_algebra() {
        let q = Rationals;
        let a = HomAlgebra::new(
            &q,
            vec![vec![vec![q.one()]]],
            Matrix::identity(&q, 1),
            vec![q.one()],
        )
        .unwrap();
        assert!(verify_hom_algebra(&a).is_empty());
    }

    #[test]
    fn perturbed_alpha_breaks_multiplicativity() {
        let q = Rationals;
        let g = twist_group(&Group::cyclic(3), &[0, 2, 1]).unwrap();
        let kg = group_algebra(&g, &q);
        let mut alpha = kg.alpha_matrix().to_dense();
        alpha[0][1] = q.one();
        let bad = HomAlgebra::new(
            &q,
            kg.constants_dense(),
            Matrix::from_rows(&q, alpha).unwrap(),
            to_dense(&q, 3, kg.unit()),
        )
        .unwrap();
        assert!(verify_hom_algebra(&bad).has_axiom("alpha_multiplicative"));
    }

    #[test]
    fn basis_inverses() {
        let f = PrimeField::new(5).unwrap();
        let g = twist_group(&Group::cyclic(3), &[0, 2, 1]).unwrap();
        let inv = hom_inverse_of_basis(&g, &f, &2, 1).unwrap();
        assert_eq!((inv.coefficient, inv.element, inv.index), (3, 2, 0));
        assert!(matches!(
            hom_inverse_of_basis(&g, &f, &0, 1),
            Err(Error::ZeroScalar)
        ));
        let unit = hom_inverse_of_basis(&g, &f, &1, 0).unwrap();
        assert_eq!((unit.coefficient, unit.element, unit.index), (1, 0, 0));
    }

    #[test]
    fn brackets() {
        let g = twist_group(&Group::cyclic(3), &[0, 2, 1]).unwrap();
        let cert = commutator_bracket(&group_algebra(&g, &Rationals));
        assert!(cert.is_zero && cert.antisymmetric && cert.hom_jacobi);
        let s3 = HomGroup::from_group(&Group::symmetric3());
        let cert = commutator_bracket(&group_algebra(&s3, &Rationals));
        assert!(!cert.is_zero && cert.antisymmetric && cert.hom_jacobi);
    }
}
