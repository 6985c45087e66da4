//! Coefficient modules: dual left/right modules, left/right modules and the
//! two bimodule variants, all as families of matrices.
//!
//! The left action of `g` is the matrix `ρ(g)` applied to coordinate columns;
//! the right action is `σ(g)`, so `(m·h)·g = σ(g)σ(h)m`. Actions are indexed by
//! the acting basis: group elements, or basis vectors of a Hom-algebra.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{group_algebra, HomAlgebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homgroup::HomGroup;
use crate::matrix::Matrix;
use crate::report::AxiomReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    DualLeft,
    DualRight,
    Left,
    Right,
    Bimodule,
    DualBimodule,
}

impl Flavor {
    pub fn needs_left(self) -> bool {
        !matches!(self, Flavor::DualRight | Flavor::Right)
    }

    pub fn needs_right(self) -> bool {
        !matches!(self, Flavor::DualLeft | Flavor::Left)
    }

    pub fn name(self) -> &'static str {
        match self {
            Flavor::DualLeft => "dual_left",
            Flavor::DualRight => "dual_right",
            Flavor::Left => "left",
            Flavor::Right => "right",
            Flavor::Bimodule => "bimodule",
            Flavor::DualBimodule => "dual_bimodule",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ActionModule<F: Field> {
    field: F,
    dim: usize,
    beta: Matrix<F>,
    left: Option<Vec<Matrix<F>>>,
    right: Option<Vec<Matrix<F>>>,
    flavor: Flavor,
}

fn check_family<F: Field>(family: &[Matrix<F>], dim: usize, side: &str) -> Result<()> {
    if family.is_empty() {
        return Err(Error::shape(format!("{side} action family is empty")));
    }
    for (g, m) in family.iter().enumerate() {
        if m.shape() != (dim, dim) {
            return Err(Error::shape(format!(
                "{side} action of {g} has shape {:?}, expected {dim}x{dim}",
                m.shape()
            )));
        }
    }
    Ok(())
}

impl<F: Field> ActionModule<F> {
    pub fn new(
        field: &F,
        beta: Matrix<F>,
        left: Option<Vec<Matrix<F>>>,
        right: Option<Vec<Matrix<F>>>,
        flavor: Flavor,
    ) -> Result<Self> {
        let dim = beta.rows();
        if beta.cols() != dim {
            return Err(Error::shape("beta must be square"));
        }
        if flavor.needs_left() && left.is_none() {
            return Err(Error::MissingAction {
                flavor: flavor.name().into(),
                side: "left",
            });
        }
        if flavor.needs_right() && right.is_none() {
            return Err(Error::MissingAction {
                flavor: flavor.name().into(),
                side: "right",
            });
        }
        if let Some(l) = &left {
            check_family(l, dim, "left")?;
        }
        if let Some(r) = &right {
            check_family(r, dim, "right")?;
        }
        if let (Some(l), Some(r)) = (&left, &right) {
            if l.len() != r.len() {
                return Err(Error::shape("left and right families have different sizes"));
            }
        }
        Ok(Self {
            field: field.clone(),
            dim,
            beta,
            left,
            right,
            flavor,
        })
    }

    /// One-dimensional module with `β` and every action equal to the identity.
    pub fn trivial(field: &F, acting: usize, flavor: Flavor) -> Self {
        Self::scaled(field, acting, field.one(), 1, flavor)
    }

    /// `β = c·id` and every action `c·id` on a `dim`-dimensional space.
    pub fn scaled(field: &F, acting: usize, c: F::Elem, dim: usize, flavor: Flavor) -> Self {
        let m = Matrix::scalar(field, dim, c);
        let family = || Some(vec![m.clone(); acting]);
        Self::new(
            field,
            m.clone(),
            flavor.needs_left().then(family).flatten(),
            flavor.needs_right().then(family).flatten(),
            flavor,
        )
        .expect("scaled module shapes")
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn beta(&self) -> &Matrix<F> {
        &self.beta
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Number of acting basis elements.
    pub fn acting(&self) -> usize {
        self.left
            .as_ref()
            .or(self.right.as_ref())
            .map_or(0, Vec::len)
    }

    pub fn left_family(&self) -> Option<&[Matrix<F>]> {
        self.left.as_deref()
    }

    pub fn right_family(&self) -> Option<&[Matrix<F>]> {
        self.right.as_deref()
    }

    /// `ρ(g)`; panics when the module has no left action.
    pub fn left(&self, g: usize) -> &Matrix<F> {
        &self.left.as_ref().expect("module has a left action")[g]
    }

    /// `σ(g)`; panics when the module has no right action.
    pub fn right(&self, g: usize) -> &Matrix<F> {
        &self.right.as_ref().expect("module has a right action")[g]
    }

    pub fn with_flavor(&self, flavor: Flavor) -> Result<Self> {
        Self::new(
            &self.field,
            self.beta.clone(),
            self.left.clone(),
            self.right.clone(),
            flavor,
        )
    }

    pub fn require_flavor(&self, allowed: &[Flavor]) -> Result<()> {
        if allowed.contains(&self.flavor) {
            Ok(())
        } else {
            Err(Error::FlavorMismatch {
                expected: allowed
                    .iter()
                    .map(|f| f.name())
                    .collect::<Vec<_>>()
                    .join(" or "),
                found: self.flavor.name().into(),
            })
        }
    }
}

/// Axiom report for a module plus the computed compatibility flags. Flags are
/// `None` when the relevant action family is absent.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ModuleReport {
    pub report: AxiomReport,
    /// `ρ(α g) β = β ρ(g)` for all `g`.
    pub left_equivariant: Option<bool>,
    /// `σ(α g) β = β σ(g)` for all `g`.
    pub right_equivariant: Option<bool>,
    /// `σ(b) ρ(α a) = ρ(a) σ(α b)` for all `a, b`, the form the Hochschild
    /// cofaces need.
    pub coface_compatible: Option<bool>,
}

impl ModuleReport {
    pub fn is_empty(&self) -> bool {
        self.report.is_empty()
    }
}

/// `Σ c_k family[k]` for a combination of acting basis elements.
fn act<F: Field>(
    field: &F,
    dim: usize,
    family: &[Matrix<F>],
    combo: &[(usize, F::Elem)],
) -> Matrix<F> {
    let mut acc = Matrix::zeros(field, dim, dim);
    for (k, c) in combo {
        acc = acc.add_scaled(c, &family[*k]).expect("square family");
    }
    acc
}

fn mul<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    a.mul(b).expect("square family")
}

/// Checks the axioms of `m`'s flavor over the Hom-algebra `a`.
pub fn verify_module_over<F: Field>(
    a: &HomAlgebra<F>,
    m: &ActionModule<F>,
) -> Result<ModuleReport> {
    let n = a.dim();
    if m.acting() != n {
        return Err(Error::shape(format!(
            "module has {} action matrices, acting basis has {n}",
            m.acting()
        )));
    }
    let f = m.field();
    let d = m.dim();
    let beta = m.beta();
    let mut report = AxiomReport::new();
    let on = |fam: &[Matrix<F>], combo: &[(usize, F::Elem)]| act(f, d, fam, combo);

    if let Some(rho) = m.left_family() {
        match m.flavor() {
            Flavor::DualLeft | Flavor::DualBimodule => {
                for g in 0..n {
                    for h in 0..n {
                        report.check(
                            "dual_left_action",
                            &[g, h],
                            mul(&rho[g], &on(rho, a.basis_alpha(h))),
                            mul(beta, &on(rho, a.basis_product(g, h))),
                        );
                    }
                }
            }
            Flavor::Left | Flavor::Bimodule => {
                for g in 0..n {
                    for k in 0..n {
                        report.check(
                            "left_action",
                            &[g, k],
                            mul(&on(rho, a.basis_product(g, k)), beta),
                            mul(&on(rho, a.basis_alpha(g)), &rho[k]),
                        );
                    }
                }
            }
            _ => {}
        }
        if m.flavor().needs_left() {
            report.check("left_unit", &[], on(rho, a.unit()), beta.clone());
        }
    }
    if let Some(sigma) = m.right_family() {
        match m.flavor() {
            Flavor::DualRight | Flavor::DualBimodule => {
                for g in 0..n {
                    for h in 0..n {
                        report.check(
                            "dual_right_action",
                            &[g, h],
                            mul(&sigma[g], &on(sigma, a.basis_alpha(h))),
                            mul(beta, &on(sigma, a.basis_product(h, g))),
                        );
                    }
                }
            }
            Flavor::Right | Flavor::Bimodule => {
                for g in 0..n {
                    for k in 0..n {
                        report.check(
                            "right_action",
                            &[g, k],
                            mul(&on(sigma, a.basis_product(g, k)), beta),
                            mul(&on(sigma, a.basis_alpha(k)), &sigma[g]),
                        );
                    }
                }
            }
            _ => {}
        }
        if m.flavor().needs_right() {
            report.check("right_unit", &[], on(sigma, a.unit()), beta.clone());
        }
    }
    if let (Some(rho), Some(sigma)) = (m.left_family(), m.right_family()) {
        let tag = match m.flavor() {
            Flavor::Bimodule => Some("bimodule_compatibility"),
            Flavor::DualBimodule => Some("dual_bimodule_compatibility"),
            _ => None,
        };
        if let Some(tag) = tag {
            for g in 0..n {
                for k in 0..n {
                    report.check(
                        tag,
                        &[g, k],
                        mul(&on(rho, a.basis_alpha(g)), &sigma[k]),
                        mul(&on(sigma, a.basis_alpha(k)), &rho[g]),
                    );
                }
            }
        }
    }

    let left_equivariant = m
        .left_family()
        .map(|rho| left_equivariance_witness_over(a, m, rho).is_none());
    let right_equivariant = m
        .right_family()
        .map(|sigma| right_equivariance_witness_over(a, m, sigma).is_none());
    let coface_compatible = match (m.left_family(), m.right_family()) {
        (Some(rho), Some(sigma)) => Some((0..n).all(|x| {
            (0..n).all(|y| {
                mul(&sigma[y], &on(rho, a.basis_alpha(x)))
                    == mul(&rho[x], &on(sigma, a.basis_alpha(y)))
            })
        })),
        _ => None,
    };
    Ok(ModuleReport {
        report,
        left_equivariant,
        right_equivariant,
        coface_compatible,
    })
}

fn left_equivariance_witness_over<F: Field>(
    a: &HomAlgebra<F>,
    m: &ActionModule<F>,
    rho: &[Matrix<F>],
) -> Option<usize> {
    (0..a.dim()).find(|&g| {
        mul(&act(m.field(), m.dim(), rho, a.basis_alpha(g)), m.beta()) != mul(m.beta(), &rho[g])
    })
}

fn right_equivariance_witness_over<F: Field>(
    a: &HomAlgebra<F>,
    m: &ActionModule<F>,
    sigma: &[Matrix<F>],
) -> Option<usize> {
    (0..a.dim()).find(|&g| {
        mul(&act(m.field(), m.dim(), sigma, a.basis_alpha(g)), m.beta()) != mul(m.beta(), &sigma[g])
    })
}

/// First acting element violating `ρ(α g) β = β ρ(g)`.
pub fn left_equivariance_witness<F: Field>(
    a: &HomAlgebra<F>,
    m: &ActionModule<F>,
) -> Option<usize> {
    m.left_family()
        .and_then(|rho| left_equivariance_witness_over(a, m, rho))
}

/// First acting element violating `σ(α g) β = β σ(g)`.
pub fn right_equivariance_witness<F: Field>(
    a: &HomAlgebra<F>,
    m: &ActionModule<F>,
) -> Option<usize> {
    m.right_family()
        .and_then(|sigma| right_equivariance_witness_over(a, m, sigma))
}

/// Checks `m` as a module over the Hom-group `g`.
pub fn verify_module<F: Field>(g: &HomGroup, m: &ActionModule<F>) -> Result<ModuleReport> {
    verify_module_over(&group_algebra(g, m.field()), m)
}

/// Verifies and returns the report, or fails with `NotVerified`.
pub fn require_verified<F: Field>(g: &HomGroup, m: &ActionModule<F>) -> Result<ModuleReport> {
    let r = verify_module(g, m)?;
    if r.is_empty() {
        Ok(r)
    } else {
        Err(Error::NotVerified {
            what: format!("{} module", m.flavor()),
            report: r.report,
        })
    }
}

fn reindexed_by_inverse<F: Field>(g: &HomGroup, family: &[Matrix<F>]) -> Vec<Matrix<F>> {
    g.elements().map(|x| family[g.inv(x)].clone()).collect()
}

fn transport<F: Field>(
    g: &HomGroup,
    m: &ActionModule<F>,
    from: Flavor,
    to: Flavor,
) -> Result<ActionModule<F>> {
    m.require_flavor(&[from])?;
    require_verified(g, m)?;
    let (left, right) = if from.needs_left() {
        (
            None,
            Some(reindexed_by_inverse(
                g,
                m.left_family().expect("left family"),
            )),
        )
    } else {
        (
            Some(reindexed_by_inverse(
                g,
                m.right_family().expect("right family"),
            )),
            None,
        )
    };
    let out = ActionModule::new(m.field(), m.beta().clone(), left, right, to)?;
    let check = verify_module(g, &out)?;
    if !check.is_empty() {
        return Err(Error::Inconsistent(format!(
            "{from} to {to} transport produced an invalid module:\n{}",
            check.report
        )));
    }
    Ok(out)
}

/// `g·m := m·g⁻¹` on a dual right module.
pub fn dual_right_to_dual_left<F: Field>(
    g: &HomGroup,
    m: &ActionModule<F>,
) -> Result<ActionModule<F>> {
    transport(g, m, Flavor::DualRight, Flavor::DualLeft)
}

/// `m·g := g⁻¹·m` on a dual left module.
pub fn dual_left_to_dual_right<F: Field>(
    g: &HomGroup,
    m: &ActionModule<F>,
) -> Result<ActionModule<F>> {
    transport(g, m, Flavor::DualLeft, Flavor::DualRight)
}

/// `g·m := m·g⁻¹` on a right module.
pub fn right_module_to_left<F: Field>(
    g: &HomGroup,
    m: &ActionModule<F>,
) -> Result<ActionModule<F>> {
    transport(g, m, Flavor::Right, Flavor::Left)
}

/// `m·g := g⁻¹·m` on a left module.
pub fn left_module_to_right<F: Field>(
    g: &HomGroup,
    m: &ActionModule<F>,
) -> Result<ActionModule<F>> {
    transport(g, m, Flavor::Left, Flavor::Right)
}

/// The linear dual `M* = Hom(M, K)` with transposed matrices: right modules
/// become dual left modules, left modules dual right ones, bimodules dual
/// bimodules.
pub fn linear_dual<F: Field>(g: &HomGroup, m: &ActionModule<F>) -> Result<ActionModule<F>> {
    m.require_flavor(&[Flavor::Right, Flavor::Left, Flavor::Bimodule])?;
    require_verified(g, m)?;
    let t = |fam: Option<&[Matrix<F>]>| fam.map(|f| f.iter().map(Matrix::transpose).collect());
    let flavor = match m.flavor() {
        Flavor::Right => Flavor::DualLeft,
        Flavor::Left => Flavor::DualRight,
        _ => Flavor::DualBimodule,
    };
    ActionModule::new(
        m.field(),
        m.beta().transpose(),
        t(m.right_family()),
        t(m.left_family()),
        flavor,
    )
}

fn permutation<F: Field>(field: &F, n: usize, image: impl Fn(usize) -> usize) -> Matrix<F> {
    Matrix::from_triplets(field, n, n, (0..n).map(|x| (image(x), x, field.one())))
        .expect("permutation triplets")
}

/// `KG` acting on itself: `ρ(g) e_h = e_{gh}`, `σ(g) e_h = e_{hg}`, `β = α`.
pub fn regular_bimodule<F: Field>(g: &HomGroup, field: &F) -> ActionModule<F> {
    let n = g.order();
    let left = g
        .elements()
        .map(|x| permutation(field, n, |h| g.mul(x, h)))
        .collect();
    let right = g
        .elements()
        .map(|x| permutation(field, n, |h| g.mul(h, x)))
        .collect();
    ActionModule::new(
        field,
        permutation(field, n, |h| g.alpha(h)),
        Some(left),
        Some(right),
        Flavor::Bimodule,
    )
    .expect("regular bimodule shapes")
}

/// `(KG)*`, the linear dual of the regular bimodule.
pub fn kg_dual<F: Field>(g: &HomGroup, field: &F) -> ActionModule<F> {
    linear_dual(g, &regular_bimodule(g, field)).expect("regular bimodule verifies")
}

/// Keeps only one side of a bimodule-like module under a new flavor.
pub fn one_sided<F: Field>(m: &ActionModule<F>, flavor: Flavor) -> Result<ActionModule<F>> {
    ActionModule::new(
        m.field(),
        m.beta().clone(),
        flavor
            .needs_left()
            .then(|| m.left_family().map(<[_]>::to_vec))
            .flatten(),
        flavor
            .needs_right()
            .then(|| m.right_family().map(<[_]>::to_vec))
            .flatten(),
        flavor,
    )
}

/// `M̃`: a dual left module with the trivial right action `m·g := β(m)`.
pub fn trivialize_right_action<F: Field>(
    g: &HomGroup,
    m: &ActionModule<F>,
) -> Result<ActionModule<F>> {
    m.require_flavor(&[Flavor::DualLeft])?;
    require_verified(g, m)?;
    let kg = group_algebra(g, m.field());
    if let Some(w) = left_equivariance_witness(&kg, m) {
        return Err(Error::HypothesisUnmet {
            hypothesis: "alpha(g).beta(m) = beta(g.m)".into(),
            witness: w,
        });
    }
    let out = ActionModule::new(
        m.field(),
        m.beta().clone(),
        m.left_family().map(<[_]>::to_vec),
        Some(vec![m.beta().clone(); g.order()]),
        Flavor::DualBimodule,
    )?;
    let check = verify_module(g, &out)?;
    if !check.is_empty() || check.coface_compatible != Some(true) {
        return Err(Error::Inconsistent(format!(
            "trivialized right action is not a dual bimodule:\n{}",
            check.report
        )));
    }
    Ok(out)
}

/// `M̃`: a right module with the trivial left action `g·m := β(m)`.
pub fn trivialize_left_action<F: Field>(
    g: &HomGroup,
    m: &ActionModule<F>,
) -> Result<ActionModule<F>> {
    m.require_flavor(&[Flavor::Right])?;
    require_verified(g, m)?;
    let kg = group_algebra(g, m.field());
    if let Some(w) = right_equivariance_witness(&kg, m) {
        return Err(Error::HypothesisUnmet {
            hypothesis: "beta(m.g) = beta(m).alpha(g)".into(),
            witness: w,
        });
    }
    let out = ActionModule::new(
        m.field(),
        m.beta().clone(),
        Some(vec![m.beta().clone(); g.order()]),
        m.right_family().map(<[_]>::to_vec),
        Flavor::Bimodule,
    )?;
    let check = verify_module(g, &out)?;
    if !check.is_empty() {
        return Err(Error::Inconsistent(format!(
            "trivialized left action is not a bimodule:\n{}",
            check.report
        )));
    }
    Ok(out)
}
