//! (Co)face families of the group and Hochschild (co)chain complexes as
//! explicit matrices, and finite windows of the resulting complexes.
//!
//! Coordinates of `C^n(G, M)` and `C_n(G, M)` are pairs `(t, i)` with `t` a
//! tuple in `G^n` (lexicographic, first entry most significant) and `i` a basis
//! index of `M`; the flat index is `tuple_index(t) * dim M + i`.

use serde::{Deserialize, Serialize};

use crate::algebra::group_algebra;
use crate::algebra::HomAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homgroup::HomGroup;
use crate::matrix::Matrix;
use crate::module::{
    left_equivariance_witness, right_equivariance_witness, verify_module_over, ActionModule, Flavor,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Cochain,
    Chain,
}

pub fn tuple_count(order: usize, len: usize) -> usize {
    order.pow(len as u32)
}

pub fn encode_tuple(order: usize, t: &[usize]) -> usize {
    t.iter().fold(0, |acc, &x| acc * order + x)
}

pub fn decode_tuple(order: usize, len: usize, mut idx: usize) -> Vec<usize> {
    let mut t = vec![0; len];
    for slot in t.iter_mut().rev() {
        *slot = idx % order;
        idx /= order;
    }
    t
}

/// Places `coef * block` at block position `(row_tuple, col_tuple)`.
struct BlockAssembler<'a, F: Field> {
    field: &'a F,
    d: usize,
    triplets: Vec<(usize, usize, F::Elem)>,
}

impl<'a, F: Field> BlockAssembler<'a, F> {
    fn new(field: &'a F, d: usize) -> Self {
        Self {
            field,
            d,
            triplets: Vec::new(),
        }
    }

    fn put(&mut self, row: usize, col: usize, coef: &F::Elem, block: &Matrix<F>) {
        for (i, j, v) in block.triplets() {
            self.triplets
                .push((row * self.d + i, col * self.d + j, self.field.mul(coef, v)));
        }
    }

    fn finish(self, row_tuples: usize, col_tuples: usize) -> Matrix<F> {
        Matrix::from_triplets(
            self.field,
            row_tuples * self.d,
            col_tuples * self.d,
            self.triplets,
        )
        .expect("block positions lie inside the matrix")
    }
}

fn alpha_all(g: &HomGroup, t: &[usize]) -> Vec<usize> {
    t.iter().map(|&x| g.alpha(x)).collect()
}

/// `(α t_1, .., t_i t_{i+1}, .., α t_m)` for `1 <= i < m` (one-based `i`).
fn merge_at(g: &HomGroup, t: &[usize], i: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(t.len() - 1);
    for (k, &x) in t.iter().enumerate() {
        if k + 1 == i {
            out.push(g.mul(x, t[k + 1]));
        } else if k == i {
            continue;
        } else {
            out.push(g.alpha(x));
        }
    }
    out
}

fn require_module<F: Field>(
    a: &HomAlgebra<F>,
    m: &ActionModule<F>,
    allowed: &[Flavor],
    ignore: &[&str],
) -> Result<crate::module::ModuleReport> {
    m.require_flavor(allowed)?;
    let r = verify_module_over(a, m)?;
    let mut relevant = r.report.clone();
    relevant.violations.retain(|v| !ignore.contains(&v.axiom));
    if !relevant.is_empty() {
        return Err(Error::NotVerified {
            what: format!("{} module", m.flavor()),
            report: relevant,
        });
    }
    Ok(r)
}

fn group_cofaces_unchecked<F: Field>(
    g: &HomGroup,
    m: &ActionModule<F>,
    n: usize,
    left_acting: bool,
) -> Vec<Matrix<F>> {
    let f = m.field();
    let (order, d) = (g.order(), m.dim());
    let one = f.one();
    let rows = tuple_count(order, n + 1);
    let cols = tuple_count(order, n);
    (0..=n + 1)
        .map(|face| {
            let mut asm = BlockAssembler::new(f, d);
            for s_idx in 0..rows {
                let s = decode_tuple(order, n + 1, s_idx);
                let (arg, block) = if face == 0 {
                    let arg = alpha_all(g, &s[1..]);
                    (arg, if left_acting { m.left(s[0]) } else { m.beta() })
                } else if face == n + 1 {
                    let arg = alpha_all(g, &s[..n]);
                    (arg, if left_acting { m.beta() } else { m.right(s[n]) })
                } else {
                    (merge_at(g, &s, face), m.beta())
                };
                asm.put(s_idx, encode_tuple(order, &arg), &one, block);
            }
            asm.finish(rows, cols)
        })
        .collect()
}

/// Cofaces `δ_0..δ_{n+1}: C^n(G, M) -> C^{n+1}(G, M)` for a dual left module:
/// `δ_0` acts by `g_1`, inner cofaces multiply neighbours and apply `β`, the
/// last drops `g_{n+1}` and applies `β`.
pub fn group_cochain_cofaces<F: Field>(
    g: &HomGroup,
    m: &ActionModule<F>,
    n: usize,
) -> Result<Vec<Matrix<F>>> {
    let kg = group_algebra(g, m.field());
    require_module(
        &kg,
        m,
        &[Flavor::DualLeft, Flavor::DualBimodule],
        &[
            "dual_right_action",
            "right_unit",
            "dual_bimodule_compatibility",
        ],
    )?;
    Ok(group_cofaces_unchecked(g, m, n, true))
}

/// Cofaces for a dual right module: `δ_0` drops `g_1` and applies `β`, inner
/// cofaces as in the left case, `δ_{n+1}` acts on the right by `g_{n+1}`.
pub fn group_cochain_cofaces_right<F: Field>(
    g: &HomGroup,
    m: &ActionModule<F>,
    n: usize,
) -> Result<Vec<Matrix<F>>> {
    let kg = group_algebra(g, m.field());
    require_module(
        &kg,
        m,
        &[Flavor::DualRight, Flavor::DualBimodule],
        &[
            "dual_left_action",
            "left_unit",
            "dual_bimodule_compatibility",
        ],
    )?;
    Ok(group_cofaces_unchecked(g, m, n, false))
}

fn group_faces_unchecked<F: Field>(
    g: &HomGroup,
    m: &ActionModule<F>,
    n: usize,
    right_acting: bool,
) -> Vec<Matrix<F>> {
    assert!(n >= 1, "faces start in degree one");
    let f = m.field();
    let (order, d) = (g.order(), m.dim());
    let one = f.one();
    let cols = tuple_count(order, n);
    let rows = tuple_count(order, n - 1);
    (0..=n)
        .map(|face| {
            let mut asm = BlockAssembler::new(f, d);
            for t_idx in 0..cols {
                let t = decode_tuple(order, n, t_idx);
                let (target, block) = if face == 0 {
                    let target = alpha_all(g, &t[1..]);
                    (
                        target,
                        if right_acting {
                            m.right(t[0])
                        } else {
                            m.beta()
                        },
                    )
                } else if face == n {
                    let target = alpha_all(g, &t[..n - 1]);
                    (
                        target,
                        if right_acting {
                            m.beta()
                        } else {
                            m.left(t[n - 1])
                        },
                    )
                } else {
                    (merge_at(g, &t, face), m.beta())
                };
                asm.put(encode_tuple(order, &target), t_idx, &one, block);
            }
            asm.finish(rows, cols)
        })
        .collect()
}

/// Faces `d_0..d_n: C_n(G, M) -> C_{n-1}(G, M)` for a right module with
/// `β(m·g) = β(m)·α(g)`: `d_0` acts by `g_1`, the last face drops `g_n`.
pub fn group_chain_faces<F: Field>(
    g: &HomGroup,
    m: &ActionModule<F>,
    n: usize,
) -> Result<Vec<Matrix<F>>> {
    let kg = group_algebra(g, m.field());
    require_module(&kg, m, &[Flavor::Right, Flavor::Bimodule], &[])?;
    if let Some(w) = right_equivariance_witness(&kg, m) {
        return Err(Error::HypothesisUnmet {
            hypothesis: "beta(m.g) = beta(m).alpha(g)".into(),
            witness: w,
        });
    }
    Ok(group_faces_unchecked(g, m, n, true))
}

/// Faces for a left module with `β(g·m) = α(g)·β(m)`, coefficient slot last:
/// `d_0` drops `g_1`, inner faces multiply neighbours, `d_n` lets `g_n` act.
pub fn group_chain_faces_left<F: Field>(
    g: &HomGroup,
    m: &ActionModule<F>,
    n: usize,
) -> Result<Vec<Matrix<F>>> {
    let kg = group_algebra(g, m.field());
    require_module(&kg, m, &[Flavor::Left, Flavor::Bimodule], &[])?;
    if let Some(w) = left_equivariance_witness(&kg, m) {
        return Err(Error::HypothesisUnmet {
            hypothesis: "beta(g.m) = alpha(g).beta(m)".into(),
            witness: w,
        });
    }
    Ok(group_faces_unchecked(g, m, n, false))
}

/// Expands a tensor of basis combinations into `(tuple index, coefficient)`.
fn expand<F: Field>(
    field: &F,
    order: usize,
    factors: &[Vec<(usize, F::Elem)>],
) -> Vec<(usize, F::Elem)> {
    let mut acc = vec![(0usize, field.one())];
    for factor in factors {
        let mut next = Vec::with_capacity(acc.len() * factor.len());
        for (idx, c) in &acc {
            for (b, x) in factor {
                next.push((idx * order + b, field.mul(c, x)));
            }
        }
        acc = next;
    }
    acc
}

/// Arguments `(α a_1, .., a_i a_{i+1}, .., α a_m)` as combinations; `i = 0`
/// means every entry twisted.
fn algebra_args<F: Field>(
    a: &HomAlgebra<F>,
    t: &[usize],
    merge: usize,
) -> Vec<Vec<(usize, F::Elem)>> {
    let mut out = Vec::with_capacity(t.len());
    let mut k = 0;
    while k < t.len() {
        if merge != 0 && k + 1 == merge {
            out.push(a.basis_product(t[k], t[k + 1]).clone());
            k += 2;
        } else {
            out.push(a.basis_alpha(t[k]).clone());
            k += 1;
        }
    }
    out
}

fn hochschild_cofaces_unchecked<F: Field>(
    a: &HomAlgebra<F>,
    m: &ActionModule<F>,
    n: usize,
) -> Vec<Matrix<F>> {
    let f = a.field();
    let (dim_a, d) = (a.dim(), m.dim());
    let rows = tuple_count(dim_a, n + 1);
    let cols = tuple_count(dim_a, n);
    (0..=n + 1)
        .map(|face| {
            let mut asm = BlockAssembler::new(f, d);
            for s_idx in 0..rows {
                let s = decode_tuple(dim_a, n + 1, s_idx);
                let (args, block) = if face == 0 {
                    (algebra_args(a, &s[1..], 0), m.left(s[0]))
                } else if face == n + 1 {
                    (algebra_args(a, &s[..n], 0), m.right(s[n]))
                } else {
                    (algebra_args(a, &s, face), m.beta())
                };
                for (col, coef) in expand(f, dim_a, &args) {
                    asm.put(s_idx, col, &coef, block);
                }
            }
            asm.finish(rows, cols)
        })
        .collect()
}

/// Hom-Hochschild cofaces on `C^n(A, M) = Hom(A^{⊗n}, M)` for a dual
/// bimodule: `a_1` acts on the left in `δ_0`, `a_{n+1}` on the right in
/// `δ_{n+1}`.
pub fn hochschild_cofaces<F: Field>(
    a: &HomAlgebra<F>,
    m: &ActionModule<F>,
    n: usize,
) -> Result<Vec<Matrix<F>>> {
    check_hochschild_cochain_module(a, m)?;
    Ok(hochschild_cofaces_unchecked(a, m, n))
}

fn check_hochschild_cochain_module<F: Field>(a: &HomAlgebra<F>, m: &ActionModule<F>) -> Result<()> {
    let r = require_module(
        a,
        m,
        &[Flavor::DualBimodule],
        &["dual_bimodule_compatibility"],
    )?;
    if r.coface_compatible != Some(true) {
        let rho = m.left_family().expect("dual bimodule");
        let sigma = m.right_family().expect("dual bimodule");
        let witness = (0..a.dim())
            .find(|&x| {
                (0..a.dim()).any(|y| {
                    let lhs = act_combo(m, sigma, y, a.basis_alpha(x), true);
                    let rhs = act_combo(m, rho, x, a.basis_alpha(y), false);
                    lhs != rhs
                })
            })
            .unwrap_or(0);
        return Err(Error::HypothesisUnmet {
            hypothesis: "(alpha(a).v).b = a.(v.alpha(b))".into(),
            witness,
        });
    }
    Ok(())
}

/// `family[k] * (Σ c other(j))` or the product in the other order.
fn act_combo<F: Field>(
    m: &ActionModule<F>,
    family: &[Matrix<F>],
    k: usize,
    combo: &[(usize, F::Elem)],
    other_is_left: bool,
) -> Matrix<F> {
    let other = if other_is_left {
        m.left_family().expect("left family")
    } else {
        m.right_family().expect("right family")
    };
    let mut acc = Matrix::zeros(m.field(), m.dim(), m.dim());
    for (j, c) in combo {
        acc = acc.add_scaled(c, &other[*j]).expect("square");
    }
    family[k].mul(&acc).expect("square")
}

fn hochschild_faces_unchecked<F: Field>(
    a: &HomAlgebra<F>,
    m: &ActionModule<F>,
    n: usize,
) -> Vec<Matrix<F>> {
    assert!(n >= 1, "faces start in degree one");
    let f = a.field();
    let (dim_a, d) = (a.dim(), m.dim());
    let cols = tuple_count(dim_a, n);
    let rows = tuple_count(dim_a, n - 1);
    (0..=n)
        .map(|face| {
            let mut asm = BlockAssembler::new(f, d);
            for t_idx in 0..cols {
                let t = decode_tuple(dim_a, n, t_idx);
                let (args, block) = if face == 0 {
                    (algebra_args(a, &t[1..], 0), m.right(t[0]))
                } else if face == n {
                    (algebra_args(a, &t[..n - 1], 0), m.left(t[n - 1]))
                } else {
                    (algebra_args(a, &t, face), m.beta())
                };
                for (row, coef) in expand(f, dim_a, &args) {
                    asm.put(row, t_idx, &coef, block);
                }
            }
            asm.finish(rows, cols)
        })
        .collect()
}

/// Hom-Hochschild faces on `C_n(A, V) = V ⊗ A^{⊗n}` for a bimodule with
/// `β(v·a) = β(v)·α(a)` and `β(a·v) = α(a)·β(v)`.
pub fn hochschild_faces<F: Field>(
    a: &HomAlgebra<F>,
    m: &ActionModule<F>,
    n: usize,
) -> Result<Vec<Matrix<F>>> {
    check_hochschild_chain_module(a, m)?;
    Ok(hochschild_faces_unchecked(a, m, n))
}

fn check_hochschild_chain_module<F: Field>(a: &HomAlgebra<F>, m: &ActionModule<F>) -> Result<()> {
    require_module(a, m, &[Flavor::Bimodule], &[])?;
    if let Some(w) = right_equivariance_witness(a, m) {
        return Err(Error::HypothesisUnmet {
            hypothesis: "beta(v.a) = beta(v).alpha(a)".into(),
            witness: w,
        });
    }
    if let Some(w) = left_equivariance_witness(a, m) {
        return Err(Error::HypothesisUnmet {
            hypothesis: "beta(a.v) = alpha(a).beta(v)".into(),
            witness: w,
        });
    }
    Ok(())
}

/// Cofaces of `C^n(G, (KG)*)` in the translated picture, where a cochain is a
/// function `φ(g_0, g_1, .., g_n)` on `G^{n+1}` (the value of `φ(g_1..g_n)` at
/// `e_{g_0}`). Returns `n+2` matrices `|G|^{n+2} × |G|^{n+1}`.
pub fn kg_dual_cofaces<F: Field>(g: &HomGroup, field: &F, n: usize) -> Vec<Matrix<F>> {
    let order = g.order();
    let rows = tuple_count(order, n + 2);
    let cols = tuple_count(order, n + 1);
    (0..=n + 1)
        .map(|face| {
            let triplets = (0..rows).map(|s_idx| {
                let s = decode_tuple(order, n + 2, s_idx);
                let arg: Vec<usize> = if face == n + 1 {
                    std::iter::once(g.mul(s[n + 1], s[0]))
                        .chain(s[1..=n].iter().map(|&x| g.alpha(x)))
                        .collect()
                } else {
                    // the inner merge rule with g_0 in position zero
                    let mut arg = Vec::with_capacity(n + 1);
                    let mut k = 0;
                    while k < n + 2 {
                        if k == face {
                            arg.push(g.mul(s[k], s[k + 1]));
                            k += 2;
                        } else {
                            arg.push(g.alpha(s[k]));
                            k += 1;
                        }
                    }
                    arg
                };
                (s_idx, encode_tuple(order, &arg), field.one())
            });
            Matrix::from_triplets(field, rows, cols, triplets.collect::<Vec<_>>())
                .expect("translated coface shape")
        })
        .collect()
}

/// Permutation from generic coordinates `(t, g_0)` of `C^n(G, (KG)*)` to the
/// translated coordinates `(g_0, t)`.
pub fn translation_permutation<F: Field>(field: &F, order: usize, n: usize) -> Matrix<F> {
    let tuples = tuple_count(order, n);
    let size = tuples * order;
    Matrix::from_triplets(
        field,
        size,
        size,
        (0..tuples)
            .flat_map(|t| (0..order).map(move |g0| (g0 * tuples + t, t * order + g0, field.one()))),
    )
    .expect("permutation shape")
}

/// Which complex to build.
#[derive(Clone, Debug)]
pub enum Builder<F: Field> {
    /// Group cochains with a dual left module.
    DualLeft {
        group: HomGroup,
        module: ActionModule<F>,
    },
    /// Group cochains with a dual right module.
    DualRight {
        group: HomGroup,
        module: ActionModule<F>,
    },
    /// Group chains `M × G^n` with a right module.
    RightChain {
        group: HomGroup,
        module: ActionModule<F>,
    },
    /// Group chains `G^n × M` with a left module.
    LeftChain {
        group: HomGroup,
        module: ActionModule<F>,
    },
    /// Hom-Hochschild cochains with a dual bimodule.
    HochschildCochain {
        algebra: HomAlgebra<F>,
        module: ActionModule<F>,
    },
    /// Hom-Hochschild chains with a bimodule.
    HochschildChain {
        algebra: HomAlgebra<F>,
        module: ActionModule<F>,
    },
    /// `C^*(G, (KG)*)` in the translated picture.
    KgDual { group: HomGroup, field: F },
}

impl<F: Field> Builder<F> {
    pub fn direction(&self) -> Direction {
        match self {
            Builder::DualLeft { .. }
            | Builder::DualRight { .. }
            | Builder::HochschildCochain { .. }
            | Builder::KgDual { .. } => Direction::Cochain,
            _ => Direction::Chain,
        }
    }

    pub fn field(&self) -> &F {
        match self {
            Builder::DualLeft { module, .. }
            | Builder::DualRight { module, .. }
            | Builder::RightChain { module, .. }
            | Builder::LeftChain { module, .. }
            | Builder::HochschildCochain { module, .. }
            | Builder::HochschildChain { module, .. } => module.field(),
            Builder::KgDual { field, .. } => field,
        }
    }

    /// Dimension of the (co)chain space in degree `n`.
    pub fn dim(&self, n: usize) -> usize {
        match self {
            Builder::DualLeft { group, module }
            | Builder::DualRight { group, module }
            | Builder::RightChain { group, module }
            | Builder::LeftChain { group, module } => tuple_count(group.order(), n) * module.dim(),
            Builder::HochschildCochain { algebra, module }
            | Builder::HochschildChain { algebra, module } => {
                tuple_count(algebra.dim(), n) * module.dim()
            }
            Builder::KgDual { group, .. } => tuple_count(group.order(), n + 1),
        }
    }

    /// Checks module axioms and theorem hypotheses once.
    pub fn check(&self) -> Result<()> {
        match self {
            Builder::DualLeft { group, module } => {
                group_cochain_cofaces(group, module, 0).map(drop)
            }
            Builder::DualRight { group, module } => {
                group_cochain_cofaces_right(group, module, 0).map(drop)
            }
            Builder::RightChain { group, module } => group_chain_faces(group, module, 1).map(drop),
            Builder::LeftChain { group, module } => {
                group_chain_faces_left(group, module, 1).map(drop)
            }
            Builder::HochschildCochain { algebra, module } => {
                check_hochschild_cochain_module(algebra, module)
            }
            Builder::HochschildChain { algebra, module } => {
                check_hochschild_chain_module(algebra, module)
            }
            Builder::KgDual { .. } => Ok(()),
        }
    }

    /// Cofaces out of degree `n` (cochain) or faces out of degree `n >= 1`
    /// (chain), without re-checking hypotheses.
    pub fn faces(&self, n: usize) -> Vec<Matrix<F>> {
        match self {
            Builder::DualLeft { group, module } => group_cofaces_unchecked(group, module, n, true),
            Builder::DualRight { group, module } => {
                group_cofaces_unchecked(group, module, n, false)
            }
            Builder::RightChain { group, module } => group_faces_unchecked(group, module, n, true),
            Builder::LeftChain { group, module } => group_faces_unchecked(group, module, n, false),
            Builder::HochschildCochain { algebra, module } => {
                hochschild_cofaces_unchecked(algebra, module, n)
            }
            Builder::HochschildChain { algebra, module } => {
                hochschild_faces_unchecked(algebra, module, n)
            }
            Builder::KgDual { group, field } => kg_dual_cofaces(group, field, n),
        }
    }
}

/// Alternating sum `Σ (-1)^i faces[i]`.
pub fn alternating_sum<F: Field>(faces: &[Matrix<F>]) -> Matrix<F> {
    let f = faces[0].field();
    let (r, c) = faces[0].shape();
    let minus = f.from_i64(-1);
    let plus = f.one();
    faces
        .iter()
        .enumerate()
        .fold(Matrix::zeros(f, r, c), |acc, (i, m)| {
            acc.add_scaled(if i % 2 == 0 { &plus } else { &minus }, m)
                .expect("faces share a shape")
        })
}

/// Degrees `0..=N` of a cochain or chain complex.
///
/// Cochain windows store `b_n: C^n -> C^{n+1}` at `differentials[n]`; chain
/// windows store `∂_{n+1}: C_{n+1} -> C_n` at `differentials[n]`. Either way
/// there are `N` differentials and homology is available in degrees `0..N`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexWindow<F: Field> {
    field: F,
    direction: Direction,
    dims: Vec<usize>,
    differentials: Vec<Matrix<F>>,
    faces: Vec<Vec<Matrix<F>>>,
}

impl<F: Field> ComplexWindow<F> {
    /// Builds a window from raw differentials, checking shapes and that
    /// consecutive differentials compose to zero.
    pub fn from_parts(
        field: &F,
        direction: Direction,
        dims: Vec<usize>,
        differentials: Vec<Matrix<F>>,
    ) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::shape("window needs at least degree 0"));
        }
        if differentials.len() + 1 != dims.len() {
            return Err(Error::shape(format!(
                "{} differentials for {} degrees",
                differentials.len(),
                dims.len()
            )));
        }
        for (n, m) in differentials.iter().enumerate() {
            let expected = match direction {
                Direction::Cochain => (dims[n + 1], dims[n]),
                Direction::Chain => (dims[n], dims[n + 1]),
            };
            if m.shape() != expected {
                return Err(Error::shape(format!(
                    "differential {n} has shape {:?}, expected {expected:?}",
                    m.shape()
                )));
            }
        }
        let w = Self {
            field: field.clone(),
            direction,
            dims,
            differentials,
            faces: Vec::new(),
        };
        w.check_square_zero()?;
        Ok(w)
    }

    fn check_square_zero(&self) -> Result<()> {
        for n in 1..self.differentials.len() {
            let composite = match self.direction {
                Direction::Cochain => self.differentials[n].mul(&self.differentials[n - 1])?,
                Direction::Chain => self.differentials[n - 1].mul(&self.differentials[n])?,
            };
            if !composite.is_zero() {
                return Err(Error::Inconsistent(format!(
                    "consecutive differentials {} and {n} do not compose to zero",
                    n - 1
                )));
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `N`: homology is computed in degrees `0..N`.
    pub fn max_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn differentials(&self) -> &[Matrix<F>] {
        &self.differentials
    }

    /// The (co)face families behind each differential; empty for imported
    /// windows.
    pub fn faces(&self) -> &[Vec<Matrix<F>>] {
        &self.faces
    }

    /// Index of the differential leaving degree `n`.
    pub fn outgoing_index(&self, n: usize) -> Option<usize> {
        match self.direction {
            Direction::Cochain => (n < self.differentials.len()).then_some(n),
            Direction::Chain => n.checked_sub(1),
        }
    }

    /// Index of the differential arriving in degree `n`.
    pub fn incoming_index(&self, n: usize) -> Option<usize> {
        match self.direction {
            Direction::Cochain => n.checked_sub(1),
            Direction::Chain => (n < self.differentials.len()).then_some(n),
        }
    }

    pub fn outgoing(&self, n: usize) -> Option<&Matrix<F>> {
        self.outgoing_index(n).map(|i| &self.differentials[i])
    }

    pub fn incoming(&self, n: usize) -> Option<&Matrix<F>> {
        self.incoming_index(n).map(|i| &self.differentials[i])
    }
}

/// Builds degrees `0..=max_degree` and checks that `b∘b = 0`.
pub fn assemble_window<F: Field>(
    builder: &Builder<F>,
    max_degree: usize,
) -> Result<ComplexWindow<F>> {
    builder.check()?;
    let dims: Vec<usize> = (0..=max_degree).map(|n| builder.dim(n)).collect();
    let faces: Vec<Vec<Matrix<F>>> = match builder.direction() {
        Direction::Cochain => (0..max_degree).map(|n| builder.faces(n)).collect(),
        Direction::Chain => (1..=max_degree).map(|n| builder.faces(n)).collect(),
    };
    let differentials = faces.iter().map(|f| alternating_sum(f)).collect();
    let mut w =
        ComplexWindow::from_parts(builder.field(), builder.direction(), dims, differentials)?;
    w.faces = faces;
    Ok(w)
}
