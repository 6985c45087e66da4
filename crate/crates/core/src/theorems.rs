//! Matrix-level certificates for the comparison theorems: (co)simplicial
//! identities, the inverse transport isomorphisms, the reduction to
//! Hom-Hochschild (co)homology of `KG`, explicit low-degree cocycles and the
//! functorial maps induced by Hom-group morphisms.

use serde::Serialize;

use crate::algebra::group_algebra;
use crate::complex::{
    assemble_window, decode_tuple, encode_tuple, tuple_count, Builder, ComplexWindow, Direction,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homgroup::{HomGroup, HomGroupMorphism};
use crate::linalg::{
    betti_numbers, image_basis, kernel_basis, rank, subspace_contains, subspace_equal,
};
use crate::matrix::Matrix;
use crate::module::{
    dual_right_to_dual_left, one_sided, regular_bimodule, right_module_to_left,
    trivialize_left_action, trivialize_right_action, ActionModule, Flavor,
};

/// Outcome of checking every composable (co)simplicial identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IdentityCertificate {
    pub checked: usize,
    /// Failing `(i, j, n)`: indices of the identity and the source degree.
    pub failures: Vec<(usize, usize, usize)>,
}

impl IdentityCertificate {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `δ_i δ_j = δ_j δ_{i-1}` (`0 <= j < i <= n+2`) for cofaces, or
/// `d_i d_j = d_j d_{i+1}` (`0 <= j <= i <= n-2`) for faces.
///
/// Cochain families are indexed by source degree starting at 0; chain
/// families start at degree 1, as stored in [`ComplexWindow::faces`].
pub fn check_simplicial_identities<F: Field>(
    direction: Direction,
    families: &[Vec<Matrix<F>>],
) -> Result<IdentityCertificate> {
    let mut cert = IdentityCertificate::default();
    for k in 0..families.len().saturating_sub(1) {
        let (lower, upper) = (&families[k], &families[k + 1]);
        match direction {
            Direction::Cochain => {
                // lower: C^n -> C^{n+1}, upper: C^{n+1} -> C^{n+2}
                let n = k;
                for i in 1..=n + 2 {
                    for j in 0..i {
                        cert.checked += 1;
                        if upper[i].mul(&lower[j])? != upper[j].mul(&lower[i - 1])? {
                            cert.failures.push((i, j, n));
                        }
                    }
                }
            }
            Direction::Chain => {
                // upper: C_{n} -> C_{n-1}, lower: C_{n-1} -> C_{n-2}
                let n = k + 2;
                for i in 0..=n - 2 {
                    for j in 0..=i {
                        cert.checked += 1;
                        if lower[i].mul(&upper[j])? != lower[j].mul(&upper[i + 1])? {
                            cert.failures.push((i, j, n));
                        }
                    }
                }
            }
        }
    }
    Ok(cert)
}

/// Degreewise matrices of a map between two windows, with certified flags.
#[derive(Clone, Debug)]
pub struct TransportMap<F: Field> {
    pub maps: Vec<Matrix<F>>,
    pub source: ComplexWindow<F>,
    pub target: ComplexWindow<F>,
    /// Commutes with the differentials in every degree of the window.
    pub chain_map: bool,
    /// Per-degree invertibility.
    pub invertible: Vec<bool>,
    /// Commutes with every individual (co)face, when checked.
    pub faces_commute: Option<bool>,
}

impl<F: Field> TransportMap<F> {
    /// Certifies `maps` against the two windows.
    pub fn certify(
        maps: Vec<Matrix<F>>,
        source: ComplexWindow<F>,
        target: ComplexWindow<F>,
    ) -> Result<Self> {
        if source.direction() != target.direction()
            || maps.len() != source.dims().len()
            || maps.len() != target.dims().len()
        {
            return Err(Error::shape("transport map does not match its windows"));
        }
        for (n, m) in maps.iter().enumerate() {
            if m.shape() != (target.dims()[n], source.dims()[n]) {
                return Err(Error::shape(format!(
                    "transport map in degree {n} has wrong shape"
                )));
            }
        }
        let mut chain_map = true;
        for n in 0..source.differentials().len() {
            let (ds, dt) = (&source.differentials()[n], &target.differentials()[n]);
            let ok = match source.direction() {
                Direction::Cochain => maps[n + 1].mul(ds)? == dt.mul(&maps[n])?,
                Direction::Chain => maps[n].mul(ds)? == dt.mul(&maps[n + 1])?,
            };
            chain_map &= ok;
        }
        let invertible = maps
            .iter()
            .map(|m| m.rows() == m.cols() && rank(m) == m.rows())
            .collect();
        Ok(Self {
            maps,
            source,
            target,
            chain_map,
            invertible,
            faces_commute: None,
        })
    }

    pub fn is_isomorphism(&self) -> bool {
        self.chain_map && self.invertible.iter().all(|&b| b)
    }

    /// Checks `F δ_i = δ'_i F` for every stored (co)face.
    pub fn check_faces(&mut self) -> Result<bool> {
        let mut ok = true;
        let (sf, tf) = (self.source.faces(), self.target.faces());
        if sf.len() != tf.len() {
            return Err(Error::shape("face families of different lengths"));
        }
        for (k, (s, t)) in sf.iter().zip(tf).enumerate() {
            for (ds, dt) in s.iter().zip(t) {
                ok &= match self.source.direction() {
                    Direction::Cochain => self.maps[k + 1].mul(ds)? == dt.mul(&self.maps[k])?,
                    Direction::Chain => self.maps[k].mul(ds)? == dt.mul(&self.maps[k + 1])?,
                };
            }
        }
        self.faces_commute = Some(ok);
        Ok(ok)
    }

    /// Explicit check that cycles go to cycles and boundaries to boundaries in
    /// degrees `0..N`.
    pub fn preserves_cycles_and_boundaries(&self) -> Result<bool> {
        let f = self.source.field();
        for n in 0..self.source.max_degree() {
            let fmap = &self.maps[n];
            let cycles = match self.source.outgoing(n) {
                Some(d) => kernel_basis(d),
                None => identity_columns(f, self.source.dims()[n]),
            };
            let images: Vec<_> = cycles
                .iter()
                .map(|v| fmap.apply(v))
                .collect::<Result<_>>()?;
            if let Some(dt) = self.target.outgoing(n) {
                for v in &images {
                    if dt.apply(v)?.iter().any(|x| !f.is_zero(x)) {
                        return Ok(false);
                    }
                }
            }
            if let Some(ds) = self.source.incoming(n) {
                let bounds: Vec<_> = image_basis(ds)
                    .iter()
                    .map(|v| fmap.apply(v))
                    .collect::<Result<_>>()?;
                let target_bounds = self.target.incoming(n).map(image_basis).unwrap_or_default();
                if !subspace_contains(f, self.target.dims()[n], &target_bounds, &bounds)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn betti_pair(&self) -> (Vec<usize>, Vec<usize>) {
        (betti_numbers(&self.source), betti_numbers(&self.target))
    }
}

fn identity_columns<F: Field>(f: &F, dim: usize) -> Vec<Vec<F::Elem>> {
    (0..dim)
        .map(|i| {
            let mut v = vec![f.zero(); dim];
            v[i] = f.one();
            v
        })
        .collect()
}

/// `(g_1..g_n) ↦ (g_n⁻¹..g_1⁻¹)`.
fn reversed_inverses(g: &HomGroup, t: &[usize]) -> Vec<usize> {
    t.iter().rev().map(|&x| g.inv(x)).collect()
}

/// Signed tuple-reversal matrix on `G^n × M`, sign `(-1)^{n(n+1)/2}`.
/// A permutation up to sign exactly when `inv` is injective.
pub fn reversal_matrix<F: Field>(g: &HomGroup, field: &F, d: usize, n: usize) -> Matrix<F> {
    let order = g.order();
    let count = tuple_count(order, n);
    let sign = if (n * (n + 1) / 2).is_multiple_of(2) {
        field.one()
    } else {
        field.from_i64(-1)
    };
    let triplets = (0..count).flat_map(|t_idx| {
        let r = encode_tuple(order, &reversed_inverses(g, &decode_tuple(order, n, t_idx)));
        let sign = sign.clone();
        (0..d).map(move |i| (r * d + i, t_idx * d + i, sign.clone()))
    });
    Matrix::from_triplets(field, count * d, count * d, triplets.collect::<Vec<_>>())
        .expect("reversal shape")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Cochain,
    Chain,
}

/// The comparison `C(G, M̃) -> C(G, M)` induced by inverting and reversing
/// tuples. For cochains `M` is a dual right module and `M̃` its dual left
/// transport; for chains `M` is a β-equivariant right module and `M̃` its
/// left transport.
///
/// Needs `inv` to be an involution: Hom-inverses need not be unique when `α`
/// is not injective, and then the reversal is neither invertible nor (for
/// cochains) a chain map.
pub fn inverse_transport_iso<F: Field>(
    g: &HomGroup,
    m: &ActionModule<F>,
    variant: Variant,
    max_degree: usize,
) -> Result<TransportMap<F>> {
    if let Some(x) = g.elements().find(|&x| g.inv(g.inv(x)) != x) {
        return Err(Error::HypothesisUnmet {
            hypothesis: "inv(inv(g)) = g".into(),
            witness: x,
        });
    }
    let (source, target) = match variant {
        Variant::Cochain => {
            let mt = dual_right_to_dual_left(g, m)?;
            (
                Builder::DualLeft {
                    group: g.clone(),
                    module: mt,
                },
                Builder::DualRight {
                    group: g.clone(),
                    module: m.clone(),
                },
            )
        }
        Variant::Chain => {
            let mt = right_module_to_left(g, m)?;
            (
                Builder::LeftChain {
                    group: g.clone(),
                    module: mt,
                },
                Builder::RightChain {
                    group: g.clone(),
                    module: m.clone(),
                },
            )
        }
    };
    let target = assemble_window(&target, max_degree)?;
    let source = assemble_window(&source, max_degree)?;
    let maps = (0..=max_degree)
        .map(|n| reversal_matrix(g, m.field(), m.dim(), n))
        .collect();
    TransportMap::certify(maps, source, target)
}

/// Group window against the `KG` Hom-Hochschild window of `M̃`.
#[derive(Clone, Debug)]
pub struct ReductionCertificate<F: Field> {
    pub group_window: ComplexWindow<F>,
    pub hochschild_window: ComplexWindow<F>,
    pub identical_faces: bool,
    pub identical_differentials: bool,
    pub group_betti: Vec<usize>,
    pub hochschild_betti: Vec<usize>,
}

impl<F: Field> ReductionCertificate<F> {
    pub fn holds(&self) -> bool {
        self.identical_faces
            && self.identical_differentials
            && self.group_betti == self.hochschild_betti
    }
}

/// Builds both windows and compares their matrices entrywise. Cochain: `M`
/// dual left with `α(g)·β(m) = β(g·m)`, `M̃` gets the right action `β`.
/// Chain: `M` right with `β(m·g) = β(m)·α(g)`, `M̃` gets the left action `β`.
pub fn hochschild_reduction<F: Field>(
    g: &HomGroup,
    m: &ActionModule<F>,
    variant: Variant,
    max_degree: usize,
) -> Result<ReductionCertificate<F>> {
    let kg = group_algebra(g, m.field());
    let (group_builder, hoch_builder) = match variant {
        Variant::Cochain => {
            let mt = trivialize_right_action(g, m)?;
            (
                Builder::DualLeft {
                    group: g.clone(),
                    module: m.clone(),
                },
                Builder::HochschildCochain {
                    algebra: kg,
                    module: mt,
                },
            )
        }
        Variant::Chain => {
            let mt = trivialize_left_action(g, m)?;
            (
                Builder::RightChain {
                    group: g.clone(),
                    module: m.clone(),
                },
                Builder::HochschildChain {
                    algebra: kg,
                    module: mt,
                },
            )
        }
    };
    let group_window = assemble_window(&group_builder, max_degree)?;
    let hochschild_window = assemble_window(&hoch_builder, max_degree)?;
    Ok(ReductionCertificate {
        identical_faces: group_window.faces() == hochschild_window.faces(),
        identical_differentials: group_window.differentials() == hochschild_window.differentials(),
        group_betti: betti_numbers(&group_window),
        hochschild_betti: betti_numbers(&hochschild_window),
        group_window,
        hochschild_window,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CocycleKind {
    H0Invariants,
    H1Crossed,
    Trace,
}

/// A cocycle space assembled from its defining equations, compared with the
/// kernel of the matching differential.
#[derive(Clone, Debug, Serialize)]
pub struct SpecialCocycles<E> {
    pub kind: CocycleKind,
    pub dim: usize,
    pub matches_window: bool,
    /// For H¹: dimension of the principal maps `g ↦ m·g − β(m)` and whether
    /// they span the image of `b_0`.
    pub principal_dim: Option<usize>,
    pub principal_matches: Option<bool>,
    #[serde(skip)]
    pub basis: Vec<Vec<E>>,
}

/// Direct description of `H⁰`, 1-cocycles or trace maps. `H0Invariants` and
/// `H1Crossed` take a dual right module; `Trace` ignores `m` apart from its
/// field and works with `(KG)*` in the translated picture.
pub fn special_cocycles<F: Field>(
    g: &HomGroup,
    m: &ActionModule<F>,
    kind: CocycleKind,
) -> Result<SpecialCocycles<F::Elem>> {
    let f = m.field();
    let order = g.order();
    let d = m.dim();
    match kind {
        CocycleKind::H0Invariants => {
            m.require_flavor(&[Flavor::DualRight])?;
            let window = assemble_window(
                &Builder::DualRight {
                    group: g.clone(),
                    module: m.clone(),
                },
                1,
            )?;
            // rows σ(g) − β, stacked over g
            let mut triplets = Vec::new();
            for x in g.elements() {
                let block = m.right(x).sub(m.beta())?;
                triplets.extend(block.triplets().map(|(i, j, v)| (x * d + i, j, v.clone())));
            }
            let cond = Matrix::from_triplets(f, order * d, d, triplets)?;
            let basis = kernel_basis(&cond);
            let window_kernel = kernel_basis(&window.differentials()[0]);
            Ok(SpecialCocycles {
                kind,
                dim: basis.len(),
                matches_window: subspace_equal(f, d, &basis, &window_kernel)?,
                principal_dim: None,
                principal_matches: None,
                basis,
            })
        }
        CocycleKind::H1Crossed => {
            m.require_flavor(&[Flavor::DualRight])?;
            let window = assemble_window(
                &Builder::DualRight {
                    group: g.clone(),
                    module: m.clone(),
                },
                2,
            )?;
            // β f(gh) = f(α g)·h + β f(α h) on every pair
            let minus = f.from_i64(-1);
            let mut triplets = Vec::new();
            let mut put = |row: usize, col: usize, coef: &F::Elem, block: &Matrix<F>| {
                for (i, j, v) in block.triplets() {
                    triplets.push((row * d + i, col * d + j, f.mul(coef, v)));
                }
            };
            for x in g.elements() {
                for h in g.elements() {
                    let row = x * order + h;
                    put(row, g.alpha(x), &f.one(), m.right(h));
                    put(row, g.mul(x, h), &minus, m.beta());
                    put(row, g.alpha(h), &f.one(), m.beta());
                }
            }
            let cond = Matrix::from_triplets(f, order * order * d, order * d, triplets)?;
            let basis = kernel_basis(&cond);
            let dim1 = order * d;
            let window_kernel = kernel_basis(&window.differentials()[1]);
            // principal maps φ_m(g) = m·g − β(m)
            let principal: Vec<Vec<F::Elem>> = identity_columns(f, d)
                .iter()
                .map(|e| {
                    let be = m.beta().apply(e)?;
                    let mut v = Vec::with_capacity(dim1);
                    for x in g.elements() {
                        let ge = m.right(x).apply(e)?;
                        v.extend(ge.iter().zip(&be).map(|(a, b)| f.sub(a, b)));
                    }
                    Ok(v)
                })
                .collect::<Result<_>>()?;
            let boundaries = image_basis(&window.differentials()[0]);
            let principal_dim = crate::linalg::span_rank(f, dim1, &principal)?;
            Ok(SpecialCocycles {
                kind,
                dim: basis.len(),
                matches_window: subspace_equal(f, dim1, &basis, &window_kernel)?,
                principal_dim: Some(principal_dim),
                principal_matches: Some(subspace_equal(f, dim1, &principal, &boundaries)?),
                basis,
            })
        }
        CocycleKind::Trace => {
            let window = assemble_window(
                &Builder::KgDual {
                    group: g.clone(),
                    field: f.clone(),
                },
                1,
            )?;
            let triplets: Vec<_> = g
                .elements()
                .flat_map(|x| g.elements().map(move |h| (x, h)))
                .flat_map(|(x, h)| {
                    let row = x * order + h;
                    [
                        (row, g.mul(x, h), f.one()),
                        (row, g.mul(h, x), f.from_i64(-1)),
                    ]
                })
                .collect();
            let cond = Matrix::from_triplets(f, order * order, order, triplets)?;
            let basis = kernel_basis(&cond);
            let window_kernel = kernel_basis(&window.differentials()[0]);
            Ok(SpecialCocycles {
                kind,
                dim: basis.len(),
                matches_window: subspace_equal(f, order, &basis, &window_kernel)?,
                principal_dim: None,
                principal_matches: None,
                basis,
            })
        }
    }
}

/// Pullback `C^n(G', (KG')*) -> C^n(G, (KG)*)`, `φ ↦ φ∘f` on translated
/// cochains (functions on `G'^{n+1}`).
pub fn kg_dual_pullback_matrix<F: Field>(f: &HomGroupMorphism, field: &F, n: usize) -> Matrix<F> {
    let (g, h) = (f.source(), f.target());
    let rows = tuple_count(g.order(), n + 1);
    let cols = tuple_count(h.order(), n + 1);
    let triplets = (0..rows).map(|s| {
        let image: Vec<usize> = decode_tuple(g.order(), n + 1, s)
            .iter()
            .map(|&x| f.apply(x))
            .collect();
        (s, encode_tuple(h.order(), &image), field.one())
    });
    Matrix::from_triplets(field, rows, cols, triplets.collect::<Vec<_>>()).expect("pullback shape")
}

/// Pushforward `C_n(G, KG) -> C_n(G', KG')`, `(g_1..g_n; e_{g_0}) ↦
/// (f(g_1)..f(g_n); e_{f(g_0)})` for the right regular modules.
pub fn kg_chain_pushforward_matrix<F: Field>(
    f: &HomGroupMorphism,
    field: &F,
    n: usize,
) -> Matrix<F> {
    let (g, h) = (f.source(), f.target());
    let cols = tuple_count(g.order(), n + 1);
    let rows = tuple_count(h.order(), n + 1);
    // coordinates (t, g_0) are exactly the tuple (t_1..t_n, g_0)
    let triplets = (0..cols).map(|c| {
        let image: Vec<usize> = decode_tuple(g.order(), n + 1, c)
            .iter()
            .map(|&x| f.apply(x))
            .collect();
        (encode_tuple(h.order(), &image), c, field.one())
    });
    Matrix::from_triplets(field, rows, cols, triplets.collect::<Vec<_>>())
        .expect("pushforward shape")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctorialVariant {
    CochainKgDual,
    ChainKg,
}

/// The map induced by a Hom-group morphism, with chain-map and face
/// commutation certified. Invertibility is computed but not expected.
pub fn functorial_map<F: Field>(
    f: &HomGroupMorphism,
    field: &F,
    variant: FunctorialVariant,
    max_degree: usize,
) -> Result<TransportMap<F>> {
    let (g, h) = (f.source(), f.target());
    let mut map = match variant {
        FunctorialVariant::CochainKgDual => {
            let source = assemble_window(
                &Builder::KgDual {
                    group: h.clone(),
                    field: field.clone(),
                },
                max_degree,
            )?;
            let target = assemble_window(
                &Builder::KgDual {
                    group: g.clone(),
                    field: field.clone(),
                },
                max_degree,
            )?;
            let maps = (0..=max_degree)
                .map(|n| kg_dual_pullback_matrix(f, field, n))
                .collect();
            TransportMap::certify(maps, source, target)?
        }
        FunctorialVariant::ChainKg => {
            let regular = |x: &HomGroup| one_sided(&regular_bimodule(x, field), Flavor::Right);
            let source = assemble_window(
                &Builder::RightChain {
                    group: g.clone(),
                    module: regular(g)?,
                },
                max_degree,
            )?;
            let target = assemble_window(
                &Builder::RightChain {
                    group: h.clone(),
                    module: regular(h)?,
                },
                max_degree,
            )?;
            let maps = (0..=max_degree)
                .map(|n| kg_chain_pushforward_matrix(f, field, n))
                .collect();
            TransportMap::certify(maps, source, target)?
        }
    };
    map.check_faces()?;
    Ok(map)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Certified,
    HypothesisUnmet,
    Failed,
}

/// Exported certificate record.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub theorem: String,
    pub instance: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<serde_json::Value>,
}

impl Certificate {
    /// Maps a check outcome to a certificate: `Ok(true)` certifies, a
    /// hypothesis error is recorded as unmet, anything else fails.
    pub fn from_outcome(
        theorem: &str,
        instance: &str,
        outcome: Result<(bool, serde_json::Value)>,
    ) -> Self {
        let (status, witness, details) = match outcome {
            Ok((true, d)) => (Status::Certified, None, Some(d)),
            Ok((false, d)) => (Status::Failed, None, Some(d)),
            Err(Error::HypothesisUnmet {
                hypothesis,
                witness,
            }) => (
                Status::HypothesisUnmet,
                Some(format!("{hypothesis} fails at element {witness}")),
                None,
            ),
            Err(e) => (Status::Failed, Some(e.to_string()), None),
        };
        Self {
            theorem: theorem.into(),
            instance: instance.into(),
            status,
            witness,
            details,
        }
    }
}
