//! Finite Hom-groups: axiom checking, the twisting construction, morphisms,
//! kernels and Hom-subgroups.
//!
//! A Hom-group is a set with a product `μ`, a twist `α`, an inverse map and a
//! unit, where associativity, unitality and invertibility only hold up to
//! `α`. Elements are dense indices `0..order`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::AxiomReport;

/// Hom-group document: `{"order", "mul", "alpha", "inv", "unit"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawHomGroup {
    pub order: usize,
    pub mul: Vec<Vec<usize>>,
    pub alpha: Vec<usize>,
    pub inv: Vec<usize>,
    pub unit: usize,
}

/// Group plus endomorphism document, the input of the twisting construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawGroupEndo {
    pub order: usize,
    pub mul: Vec<Vec<usize>>,
    pub endo: Vec<usize>,
    pub inv: Vec<usize>,
    pub unit: usize,
}

fn check_table(name: &str, order: usize, table: &[usize]) -> Result<()> {
    if table.len() != order {
        return Err(Error::shape(format!(
            "{name} has {} entries, expected {order}",
            table.len()
        )));
    }
    if let Some(&bad) = table.iter().find(|&&x| x >= order) {
        return Err(Error::shape(format!(
            "{name} entry {bad} out of range 0..{order}"
        )));
    }
    Ok(())
}

fn check_square(order: usize, mul: &[Vec<usize>]) -> Result<Vec<usize>> {
    if order == 0 {
        return Err(Error::shape("order must be positive"));
    }
    if mul.len() != order {
        return Err(Error::shape(format!(
            "mul has {} rows, expected {order}",
            mul.len()
        )));
    }
    for row in mul {
        check_table("mul row", order, row)?;
    }
    Ok(mul.concat())
}

/// An ordinary (associative) finite group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    unit: usize,
}

impl Group {
    /// Builds a group from a full table, deriving unit and inverses.
    pub fn from_table(mul: Vec<Vec<usize>>) -> Result<Self> {
        let order = mul.len();
        let flat = check_square(order, &mul)?;
        let unit = (0..order)
            .find(|&e| (0..order).all(|g| flat[e * order + g] == g && flat[g * order + e] == g))
            .ok_or_else(|| Error::shape("table has no two-sided identity"))?;
        let inv = (0..order)
            .map(|g| {
                (0..order)
                    .find(|&h| flat[g * order + h] == unit && flat[h * order + g] == unit)
                    .ok_or_else(|| Error::shape(format!("element {g} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        let group = Self {
            order,
            mul: flat,
            inv,
            unit,
        };
        let report = group.verify();
        if !report.is_empty() {
            return Err(Error::NotVerified {
                what: "group table".into(),
                report,
            });
        }
        Ok(group)
    }

    fn from_parts(order: usize, mul: &[Vec<usize>], inv: &[usize], unit: usize) -> Result<Self> {
        let flat = check_square(order, mul)?;
        check_table("inv", order, inv)?;
        if unit >= order {
            return Err(Error::shape(format!("unit {unit} out of range")));
        }
        let group = Self {
            order,
            mul: flat,
            inv: inv.to_vec(),
            unit,
        };
        let report = group.verify();
        if !report.is_empty() {
            return Err(Error::NotVerified {
                what: "group".into(),
                report,
            });
        }
        Ok(group)
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Self::from_table(table).expect("cyclic group table")
    }

    /// ℤ/2 × ℤ/2, elements encoded as two bits.
    pub fn klein() -> Self {
        let table = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        Self::from_table(table).expect("Klein table")
    }

    /// The symmetric group on three letters; element `i` is the `i`-th
    /// permutation of `[0, 1, 2]` in lexicographic order, so 0 is the identity.
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    // (a * b)(x) = a(b(x))
                    .map(|b| index([a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect();
        Self::from_table(table).expect("S3 table")
    }

    /// Every group of order at most `max_order` up to isomorphism, for
    /// `max_order <= 6`.
    pub fn all_up_to(max_order: usize) -> Vec<(String, Group)> {
        assert!(max_order <= 6, "group catalogue stops at order 6");
        let mut out = vec![("C1".to_string(), Group::cyclic(1))];
        for n in 2..=max_order {
            out.push((format!("C{n}"), Group::cyclic(n)));
            if n == 4 {
                out.push(("V4".into(), Group::klein()));
            }
            if n == 6 {
                out.push(("S3".into(), Group::symmetric3()));
            }
        }
        out
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mul[g * self.order + h]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inv[g]
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn verify(&self) -> AxiomReport {
        let n = self.order;
        let mut report = AxiomReport::new();
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    report.check(
                        "associativity",
                        &[g, h, k],
                        self.mul(g, self.mul(h, k)),
                        self.mul(self.mul(g, h), k),
                    );
                }
            }
            report.check("unit", &[g], self.mul(g, self.unit), g);
            report.check("unit", &[g], self.mul(self.unit, g), g);
            report.check("inverse", &[g], self.mul(g, self.inv(g)), self.unit);
            report.check("inverse", &[g], self.mul(self.inv(g), g), self.unit);
        }
        report
    }

    pub fn is_endomorphism(&self, f: &[usize]) -> bool {
        f.len() == self.order
            && f.iter().all(|&x| x < self.order)
            && (0..self.order)
                .all(|g| (0..self.order).all(|h| f[self.mul(g, h)] == self.mul(f[g], f[h])))
    }

    /// A generating set chosen greedily in index order.
    fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span: BTreeSet<usize> = [self.unit].into();
        for g in 0..self.order {
            if span.contains(&g) {
                continue;
            }
            gens.push(g);
            span = self.closure(&gens);
        }
        gens
    }

    fn closure(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut span: BTreeSet<usize> = [self.unit].into();
        let mut frontier = vec![self.unit];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if span.insert(y) {
                    frontier.push(y);
                }
            }
        }
        span
    }
}

/// All endomorphisms of `group`, sorted lexicographically by table.
///
/// Images of a generating set are chosen freely and the map is propagated
/// along products; assignments that clash or fail multiplicativity are
/// dropped.
pub fn enumerate_endomorphisms(group: &Group) -> Vec<Vec<usize>> {
    let n = group.order();
    let gens = group.generators();
    let mut out = Vec::new();
    let mut images = vec![0usize; gens.len()];
    loop {
        if let Some(f) = extend_from_generators(group, &gens, &images) {
            out.push(f);
        }
        // odometer over generator images
        let mut i = 0;
        loop {
            if i == images.len() {
                out.sort();
                out.dedup();
                return out;
            }
            images[i] += 1;
            if images[i] < n {
                break;
            }
            images[i] = 0;
            i += 1;
        }
    }
}

fn extend_from_generators(group: &Group, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = group.order();
    let mut f: Vec<Option<usize>> = vec![None; n];
    f[group.unit()] = Some(group.unit());
    let mut frontier = vec![group.unit()];
    while let Some(x) = frontier.pop() {
        let fx = f[x].expect("frontier elements are assigned");
        for (&g, &img) in gens.iter().zip(images) {
            let y = group.mul(x, g);
            let fy = group.mul(fx, img);
            match f[y] {
                Some(existing) if existing != fy => return None,
                Some(_) => {}
                None => {
                    f[y] = Some(fy);
                    frontier.push(y);
                }
            }
        }
    }
    let f: Vec<usize> = f.into_iter().collect::<Option<_>>()?;
    group.is_endomorphism(&f).then_some(f)
}

/// A verified finite Hom-group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomGroup {
    order: usize,
    mul: Vec<usize>,
    alpha: Vec<usize>,
    inv: Vec<usize>,
    unit: usize,
}

/// Checks every Hom-group axiom instance. Shape problems are errors;
/// failed axioms are listed in the report.
pub fn verify_hom_group(raw: &RawHomGroup) -> Result<AxiomReport> {
    let g = HomGroup::unchecked(raw)?;
    Ok(g.axiom_report())
}

impl HomGroup {
    fn unchecked(raw: &RawHomGroup) -> Result<Self> {
        let mul = check_square(raw.order, &raw.mul)?;
        check_table("alpha", raw.order, &raw.alpha)?;
        check_table("inv", raw.order, &raw.inv)?;
        if raw.unit >= raw.order {
            return Err(Error::shape(format!("unit {} out of range", raw.unit)));
        }
        Ok(Self {
            order: raw.order,
            mul,
            alpha: raw.alpha.clone(),
            inv: raw.inv.clone(),
            unit: raw.unit,
        })
    }

    pub fn new(raw: &RawHomGroup) -> Result<Self> {
        let g = Self::unchecked(raw)?;
        let report = g.axiom_report();
        if report.is_empty() {
            Ok(g)
        } else {
            Err(Error::NotVerified {
                what: "Hom-group".into(),
                report,
            })
        }
    }

    /// The one-element Hom-group.
    pub fn trivial() -> Self {
        Self {
            order: 1,
            mul: vec![0],
            alpha: vec![0],
            inv: vec![0],
            unit: 0,
        }
    }

    /// An ordinary group viewed as a Hom-group with `α = id`.
    pub fn from_group(group: &Group) -> Self {
        let id: Vec<usize> = (0..group.order()).collect();
        twist_group(group, &id).expect("identity is an endomorphism")
    }

    pub fn to_raw(&self) -> RawHomGroup {
        RawHomGroup {
            order: self.order,
            mul: self.mul.chunks(self.order).map(<[usize]>::to_vec).collect(),
            alpha: self.alpha.clone(),
            inv: self.inv.clone(),
            unit: self.unit,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mul[g * self.order + h]
    }

    pub fn alpha(&self, g: usize) -> usize {
        self.alpha[g]
    }

    pub fn alpha_pow(&self, mut g: usize, k: usize) -> usize {
        for _ in 0..k {
            g = self.alpha[g];
        }
        g
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inv[g]
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn alpha_table(&self) -> &[usize] {
        &self.alpha
    }

    pub fn is_alpha_injective(&self) -> bool {
        self.alpha.iter().collect::<BTreeSet<_>>().len() == self.order
    }

    /// The same carrier with the opposite product.
    pub fn opposite(&self) -> Self {
        let n = self.order;
        let mul = (0..n * n).map(|i| self.mul(i % n, i / n)).collect();
        Self {
            order: n,
            mul,
            alpha: self.alpha.clone(),
            inv: self.inv.clone(),
            unit: self.unit,
        }
    }

    fn axiom_report(&self) -> AxiomReport {
        let n = self.order;
        let mut report = AxiomReport::new();
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    report.check(
                        "hom_associativity",
                        &[g, h, k],
                        self.mul(self.alpha(g), self.mul(h, k)),
                        self.mul(self.mul(g, h), self.alpha(k)),
                    );
                }
                report.check(
                    "alpha_multiplicative",
                    &[g, h],
                    self.alpha(self.mul(g, h)),
                    self.mul(self.alpha(g), self.alpha(h)),
                );
                report.check(
                    "inverse_antimorphism",
                    &[g, h],
                    self.inv(self.mul(g, h)),
                    self.mul(self.inv(h), self.inv(g)),
                );
            }
            report.check("unit_right", &[g], self.mul(g, self.unit), self.alpha(g));
            report.check("unit_left", &[g], self.mul(self.unit, g), self.alpha(g));
            if self.invertibility_index(g, n).is_none() {
                report.push(
                    "hom_invertibility",
                    vec![g],
                    format!(
                        "alpha^k({}) / alpha^k({})",
                        self.mul(g, self.inv(g)),
                        self.mul(self.inv(g), g)
                    ),
                    format!("{} for some k <= {n}", self.unit),
                );
            }
        }
        report.check("alpha_unit", &[self.unit], self.alpha(self.unit), self.unit);
        report
    }

    /// Smallest `k <= bound` with `α^k(g g⁻¹) = α^k(g⁻¹ g) = 1`.
    pub fn invertibility_index(&self, g: usize, bound: usize) -> Option<usize> {
        let mut left = self.mul(g, self.inv(g));
        let mut right = self.mul(self.inv(g), g);
        for k in 0..=bound {
            if left == self.unit && right == self.unit {
                return Some(k);
            }
            left = self.alpha(left);
            right = self.alpha(right);
        }
        None
    }
}

/// Per-element invertibility indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvertibilityProfile {
    pub indices: Vec<usize>,
}

/// Invertibility indices, searching up to `bound` (default: the order).
pub fn invertibility_profile(g: &HomGroup, bound: Option<usize>) -> Result<InvertibilityProfile> {
    let bound = bound.unwrap_or(g.order());
    let indices = g
        .elements()
        .map(|x| {
            g.invertibility_index(x, bound).ok_or_else(|| {
                Error::Inconsistent(format!("element {x} has no invertibility index <= {bound}"))
            })
        })
        .collect::<Result<_>>()?;
    Ok(InvertibilityProfile { indices })
}

/// The twisted Hom-group `G_α` with product `α(gh)`.
pub fn twist_group(group: &Group, endo: &[usize]) -> Result<HomGroup> {
    let n = group.order();
    check_table("endo", n, endo)?;
    let mut report = AxiomReport::new();
    for g in 0..n {
        for h in 0..n {
            report.check(
                "endo_homomorphism",
                &[g, h],
                endo[group.mul(g, h)],
                group.mul(endo[g], endo[h]),
            );
        }
    }
    if !report.is_empty() {
        return Err(Error::NotVerified {
            what: "endomorphism".into(),
            report,
        });
    }
    let raw = RawHomGroup {
        order: n,
        mul: (0..n)
            .map(|g| (0..n).map(|h| endo[group.mul(g, h)]).collect())
            .collect(),
        alpha: endo.to_vec(),
        inv: (0..n).map(|g| group.inv(g)).collect(),
        unit: group.unit(),
    };
    HomGroup::new(&raw)
}

/// Twisting from a group-plus-endomorphism document.
pub fn twist_document(raw: &RawGroupEndo) -> Result<HomGroup> {
    let group = Group::from_parts(raw.order, &raw.mul, &raw.inv, raw.unit)?;
    twist_group(&group, &raw.endo)
}

/// Every twisted Hom-group `G_α` for groups of order `<= max_order`, labelled
/// `"<group>/<endomorphism table>"`.
pub fn twisted_catalogue(max_order: usize) -> Vec<(String, HomGroup)> {
    Group::all_up_to(max_order)
        .into_iter()
        .flat_map(|(name, group)| {
            enumerate_endomorphisms(&group)
                .into_iter()
                .map(move |endo| {
                    let label = format!("{name}/{endo:?}");
                    (
                        label,
                        twist_group(&group, &endo).expect("enumerated endomorphism"),
                    )
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorphismReport {
    pub report: AxiomReport,
    pub unit_preserving: bool,
}

/// Checks `β(f(g)) = f(α(g))` and `f(gk) = f(g)f(k)`.
pub fn verify_morphism(
    map: &[usize],
    source: &HomGroup,
    target: &HomGroup,
) -> Result<MorphismReport> {
    if map.len() != source.order() {
        return Err(Error::shape(format!(
            "map has {} entries, source has order {}",
            map.len(),
            source.order()
        )));
    }
    if let Some(&bad) = map.iter().find(|&&x| x >= target.order()) {
        return Err(Error::shape(format!(
            "map value {bad} out of range 0..{}",
            target.order()
        )));
    }
    let mut report = AxiomReport::new();
    for g in source.elements() {
        report.check(
            "morphism_twist",
            &[g],
            target.alpha(map[g]),
            map[source.alpha(g)],
        );
        for k in source.elements() {
            report.check(
                "morphism_multiplicative",
                &[g, k],
                map[source.mul(g, k)],
                target.mul(map[g], map[k]),
            );
        }
    }
    Ok(MorphismReport {
        report,
        unit_preserving: map[source.unit()] == target.unit(),
    })
}

/// A verified morphism of Hom-groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomGroupMorphism {
    source: HomGroup,
    target: HomGroup,
    map: Vec<usize>,
}

impl HomGroupMorphism {
    pub fn new(source: &HomGroup, target: &HomGroup, map: Vec<usize>) -> Result<Self> {
        let checked = verify_morphism(&map, source, target)?;
        if !checked.report.is_empty() {
            return Err(Error::NotVerified {
                what: "Hom-group morphism".into(),
                report: checked.report,
            });
        }
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            map,
        })
    }

    pub fn identity(g: &HomGroup) -> Self {
        Self::new(g, g, g.elements().collect()).expect("identity is a morphism")
    }

    pub fn source(&self) -> &HomGroup {
        &self.source
    }

    pub fn target(&self) -> &HomGroup {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, g: usize) -> usize {
        self.map[g]
    }

    pub fn is_unit_preserving(&self) -> bool {
        self.map[self.source.unit()] == self.target.unit()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &HomGroupMorphism) -> Result<Self> {
        if self.target != other.source {
            return Err(Error::shape("morphisms are not composable"));
        }
        let map = self.map.iter().map(|&x| other.map[x]).collect();
        Self::new(&self.source, &other.target, map)
    }
}

/// Every Hom-group morphism `G -> H`, by backtracking over images.
pub fn enumerate_morphisms(source: &HomGroup, target: &HomGroup) -> Vec<HomGroupMorphism> {
    let n = source.order();
    let mut out = Vec::new();
    let mut map = vec![0usize; n];
    fn consistent(source: &HomGroup, target: &HomGroup, map: &[usize], upto: usize) -> bool {
        // checks every instance whose arguments are all below `upto`
        let g = upto - 1;
        for k in 0..upto {
            for (a, b) in [(g, k), (k, g)] {
                let ab = source.mul(a, b);
                if ab < upto && map[ab] != target.mul(map[a], map[b]) {
                    return false;
                }
            }
        }
        let ag = source.alpha(g);
        (ag >= upto || map[ag] == target.alpha(map[g]))
            && (0..upto).all(|x| {
                let ax = source.alpha(x);
                ax >= upto || map[ax] == target.alpha(map[x])
            })
    }
    fn go(
        source: &HomGroup,
        target: &HomGroup,
        map: &mut Vec<usize>,
        pos: usize,
        out: &mut Vec<HomGroupMorphism>,
    ) {
        if pos == map.len() {
            if let Ok(m) = HomGroupMorphism::new(source, target, map.clone()) {
                out.push(m);
            }
            return;
        }
        for img in target.elements() {
            map[pos] = img;
            if consistent(source, target, map, pos + 1) {
                go(source, target, map, pos + 1, out);
            }
        }
    }
    go(source, target, &mut map, 0, &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitImageCertificate {
    /// Invertibility index of `f(1_G)` in the target.
    pub index: usize,
    /// Whether `β^{index+2}(f(1_G)) = 1_H`.
    pub holds: bool,
}

pub fn unit_image_property(f: &HomGroupMorphism) -> Result<UnitImageCertificate> {
    let h = f.target();
    let image = f.apply(f.source().unit());
    let index = h
        .invertibility_index(image, h.order())
        .ok_or_else(|| Error::Inconsistent(format!("f(1) = {image} has no invertibility index")))?;
    Ok(UnitImageCertificate {
        index,
        holds: h.alpha_pow(image, index + 2) == h.unit(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelResult {
    pub elements: Vec<usize>,
    /// `Some(true)` when `f` preserves units and the kernel was certified as a
    /// Hom-subgroup; `None` when `f(1) != 1`, where no claim is made.
    pub certified: Option<bool>,
}

pub fn kernel_of_morphism(f: &HomGroupMorphism) -> KernelResult {
    let unit = f.target().unit();
    let elements: Vec<usize> = f
        .source()
        .elements()
        .filter(|&g| f.apply(g) == unit)
        .collect();
    let certified = f
        .is_unit_preserving()
        .then(|| check_hom_subgroup(f.source(), &elements).holds);
    KernelResult {
        elements,
        certified,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupCheck {
    pub holds: bool,
    pub witness: Option<String>,
}

/// Whether `subset` with the restricted structure is itself a Hom-group.
pub fn check_hom_subgroup(g: &HomGroup, subset: &[usize]) -> SubgroupCheck {
    let fail = |w: String| SubgroupCheck {
        holds: false,
        witness: Some(w),
    };
    let set: BTreeSet<usize> = subset.iter().copied().collect();
    if set.is_empty() {
        return fail("empty subset".into());
    }
    if let Some(&bad) = set.iter().find(|&&x| x >= g.order()) {
        return fail(format!("{bad} is not an element"));
    }
    if !set.contains(&g.unit()) {
        return fail(format!("unit {} not in subset", g.unit()));
    }
    for &x in &set {
        for &y in &set {
            let xy = g.mul(x, y);
            if !set.contains(&xy) {
                return fail(format!("mul({x},{y})={xy} not in subset"));
            }
        }
        if !set.contains(&g.inv(x)) {
            return fail(format!("inv({x})={} not in subset", g.inv(x)));
        }
        if !set.contains(&g.alpha(x)) {
            return fail(format!("alpha({x})={} not in subset", g.alpha(x)));
        }
    }
    let elems: Vec<usize> = set.iter().copied().collect();
    let pos = |x: usize| elems.binary_search(&x).expect("closed subset");
    let raw = RawHomGroup {
        order: elems.len(),
        mul: elems
            .iter()
            .map(|&x| elems.iter().map(|&y| pos(g.mul(x, y))).collect())
            .collect(),
        alpha: elems.iter().map(|&x| pos(g.alpha(x))).collect(),
        inv: elems.iter().map(|&x| pos(g.inv(x))).collect(),
        unit: pos(g.unit()),
    };
    match verify_hom_group(&raw) {
        Ok(report) if report.is_empty() => SubgroupCheck {
            holds: true,
            witness: None,
        },
        Ok(report) => fail(format!(
            "restricted structure fails: {}",
            report.violations[0].axiom
        )),
        Err(e) => fail(e.to_string()),
    }
}

/// An isomorphism `G -> H` if one exists (backtracking over bijections that
/// fix the unit and commute with the twists).
pub fn find_isomorphism(g: &HomGroup, h: &HomGroup) -> Option<Vec<usize>> {
    if g.order() != h.order() {
        return None;
    }
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        g: &HomGroup,
        h: &HomGroup,
        pos: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = g.order();
        if pos == n {
            return verify_morphism(map, g, h).is_ok_and(|r| r.report.is_empty());
        }
        for img in 0..n {
            if used[img] || (pos == g.unit()) != (img == h.unit()) {
                continue;
            }
            map[pos] = img;
            let ok = (0..=pos).all(|x| {
                let ax = g.alpha(x);
                ax > pos || map[ax] == h.alpha(map[x])
            }) && (0..=pos).all(|x| {
                (0..=pos).all(|y| {
                    let xy = g.mul(x, y);
                    xy > pos || map[xy] == h.mul(map[x], map[y])
                })
            });
            if ok {
                used[img] = true;
                if go(g, h, pos + 1, map, used) {
                    return true;
                }
                used[img] = false;
            }
        }
        map[pos] = usize::MAX;
        false
    }
    go(g, h, 0, &mut map, &mut used).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z3_doubling() -> HomGroup {
        twist_group(&Group::cyclic(3), &[0, 2, 1]).unwrap()
    }

    #[test]
    fn twisted_z3_is_hom_group() {
        let g = z3_doubling();
        assert!(verify_hom_group(&g.to_raw()).unwrap().is_empty());
        // 2 * (1 + 1) mod 3
        assert_eq!(g.mul(1, 1), 1);
    }

    #[test]
    fn trivial_carrier_passes() {
        let raw = RawHomGroup {
            order: 1,
            mul: vec![vec![0]],
            alpha: vec![0],
            inv: vec![0],
            unit: 0,
        };
        assert!(verify_hom_group(&raw).unwrap().is_empty());
    }

    #[test]
    fn constant_alpha_on_z2_breaks_unitality() {
        let raw = RawHomGroup {
            order: 2,
            mul: vec![vec![0, 1], vec![1, 0]],
            alpha: vec![0, 0],
            inv: vec![0, 1],
            unit: 0,
        };
        let report = verify_hom_group(&raw).unwrap();
        let v: Vec<_> = report.of_axiom("unit_right").collect();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].witness, vec![1]);
        assert_eq!((v[0].lhs.as_str(), v[0].rhs.as_str()), ("1", "0"));
    }

    #[test]
    fn out_of_range_entry_is_shape_error() {
        let raw = RawHomGroup {
            order: 2,
            mul: vec![vec![0, 1], vec![1, 2]],
            alpha: vec![0, 1],
            inv: vec![0, 1],
            unit: 0,
        };
        assert!(matches!(verify_hom_group(&raw), Err(Error::Shape(_))));
    }

    #[test]
    fn invertibility_of_twisted_groups_is_zero() {
        let g = z3_doubling();
        assert_eq!(
            invertibility_profile(&g, None).unwrap().indices,
            vec![0, 0, 0]
        );
        assert_eq!(HomGroup::trivial().invertibility_index(0, 0), Some(0));
    }

    #[test]
    fn identity_twist_is_original_group() {
        let s3 = Group::symmetric3();
        let g = HomGroup::from_group(&s3);
        assert_eq!(g.to_raw().mul, s3.table());
    }

    #[test]
    fn non_injective_twist_of_z4() {
        let g = twist_group(&Group::cyclic(4), &[0, 2, 0, 2]).unwrap();
        assert!(verify_hom_group(&g.to_raw()).unwrap().is_empty());
        assert!(!g.is_alpha_injective());
    }

    #[test]
    fn twist_rejects_non_homomorphism() {
        let err = twist_group(&Group::cyclic(3), &[0, 1, 1]).unwrap_err();
        match err {
            Error::NotVerified { report, .. } => assert!(report.has_axiom("endo_homomorphism")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn endomorphism_counts() {
        assert_eq!(
            enumerate_endomorphisms(&Group::cyclic(2)),
            vec![vec![0, 0], vec![0, 1]]
        );
        assert_eq!(
            enumerate_endomorphisms(&Group::cyclic(3)),
            vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]]
        );
    }

    #[test]
    fn alpha_is_an_endomorphism_of_the_twisted_group() {
        let g = z3_doubling();
        let r = verify_morphism(g.alpha_table(), &g, &g).unwrap();
        assert!(r.report.is_empty());
        assert!(r.unit_preserving);
    }

    #[test]
    fn constant_map_on_c2() {
        let c2 = HomGroup::from_group(&Group::cyclic(2));
        let f = HomGroupMorphism::new(&c2, &c2, vec![0, 0]).unwrap();
        assert!(f.is_unit_preserving());
        let cert = unit_image_property(&f).unwrap();
        assert_eq!(
            cert,
            UnitImageCertificate {
                index: 0,
                holds: true
            }
        );
        assert_eq!(kernel_of_morphism(&f).elements, vec![0, 1]);
    }

    #[test]
    fn reduction_mod_two_kernel() {
        let z4 = HomGroup::from_group(&Group::cyclic(4));
        let z2 = HomGroup::from_group(&Group::cyclic(2));
        let f = HomGroupMorphism::new(&z4, &z2, vec![0, 1, 0, 1]).unwrap();
        let k = kernel_of_morphism(&f);
        assert_eq!(k.elements, vec![0, 2]);
        assert_eq!(k.certified, Some(true));
        let id = HomGroupMorphism::identity(&z4);
        assert_eq!(kernel_of_morphism(&id).elements, vec![0]);
    }

    #[test]
    fn subgroup_checks() {
        let c2 = HomGroup::from_group(&Group::cyclic(2));
        let check = check_hom_subgroup(&c2, &[1]);
        assert!(!check.holds);
        assert!(check_hom_subgroup(&c2, &[0]).holds);
        let z4 = twist_group(&Group::cyclic(4), &[0, 3, 2, 1]).unwrap();
        assert!(check_hom_subgroup(&z4, &[0, 2]).holds);
        assert!(!check_hom_subgroup(&z4, &[0, 1]).holds);
    }

    #[test]
    fn opposite_and_isomorphism() {
        let s3 = HomGroup::from_group(&Group::symmetric3());
        // S3 is isomorphic to its opposite via inversion
        assert!(find_isomorphism(&s3, &s3.opposite()).is_some());
        let z4 = HomGroup::from_group(&Group::cyclic(4));
        let v4 = HomGroup::from_group(&Group::klein());
        assert!(find_isomorphism(&z4, &v4).is_none());
    }
}
