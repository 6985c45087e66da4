//! Small Hom-groups and modules used for sweeps.

use crate::field::{Field, PrimeField};
use crate::homgroup::{twist_group, Group, HomGroup};
use crate::matrix::Matrix;
use crate::module::{kg_dual, one_sided, regular_bimodule, verify_module, ActionModule, Flavor};

pub use crate::homgroup::twisted_catalogue;

/// A handful of named Hom-groups covering the trivial, untwisted, injective
/// and non-injective twist cases.
pub fn named_groups() -> Vec<(&'static str, HomGroup)> {
    vec![
        ("trivial", HomGroup::trivial()),
        ("C2", HomGroup::from_group(&Group::cyclic(2))),
        (
            "Z3_twisted",
            twist_group(&Group::cyclic(3), &[0, 2, 1]).expect("x -> 2x"),
        ),
        (
            "Z4_twisted",
            twist_group(&Group::cyclic(4), &[0, 3, 2, 1]).expect("x -> 3x"),
        ),
        (
            "Z4_doubling",
            twist_group(&Group::cyclic(4), &[0, 2, 0, 2]).expect("x -> 2x"),
        ),
    ]
}

/// Verified modules of the given flavor over `g`: trivial, scaled by 2 in
/// dimensions 1 and 2, and the regular or dual-regular module when it has
/// that flavor.
pub fn module_corpus<F: Field>(
    g: &HomGroup,
    field: &F,
    flavor: Flavor,
) -> Vec<(String, ActionModule<F>)> {
    let n = g.order();
    let mut out = vec![
        (
            "trivial".to_string(),
            ActionModule::trivial(field, n, flavor),
        ),
        (
            "scaled2_d1".to_string(),
            ActionModule::scaled(field, n, field.from_i64(2), 1, flavor),
        ),
        (
            "scaled2_d2".to_string(),
            ActionModule::scaled(field, n, field.from_i64(2), 2, flavor),
        ),
    ];
    let regular = regular_bimodule(g, field);
    let dual = kg_dual(g, field);
    let extra = match flavor {
        Flavor::Left | Flavor::Right | Flavor::Bimodule => {
            Some(("regular", one_sided(&regular, flavor)))
        }
        Flavor::DualLeft | Flavor::DualRight => Some(("kg_dual", one_sided(&dual, flavor))),
        Flavor::DualBimodule => Some(("kg_dual", Ok(dual))),
    };
    if let Some((name, Ok(m))) = extra {
        out.push((name.to_string(), m));
    }
    out.retain(|(_, m)| verify_module(g, m).is_ok_and(|r| r.is_empty()));
    out
}

/// Every one-dimensional module of the given flavor over GF(p), by
/// exhaustive search over `β` and the action scalars.
pub fn one_dimensional_modules(
    g: &HomGroup,
    field: &PrimeField,
    flavor: Flavor,
) -> Vec<ActionModule<PrimeField>> {
    let n = g.order();
    let p = field.modulus();
    let sides = usize::from(flavor.needs_left()) + usize::from(flavor.needs_right());
    let slots = 1 + sides * n;
    let total = (p as usize).pow(slots as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut digits = Vec::with_capacity(slots);
        for _ in 0..slots {
            digits.push((c % p as usize) as u64);
            c /= p as usize;
        }
        let scalar = |x: u64| Matrix::scalar(field, 1, x);
        let beta = scalar(digits[0]);
        let mut rest = digits[1..].chunks(n);
        let left = flavor.needs_left().then(|| {
            rest.next()
                .expect("left slots")
                .iter()
                .map(|&x| scalar(x))
                .collect()
        });
        let right = flavor.needs_right().then(|| {
            rest.next()
                .expect("right slots")
                .iter()
                .map(|&x| scalar(x))
                .collect()
        });
        let m = ActionModule::new(field, beta, left, right, flavor).expect("1x1 shapes");
        if verify_module(g, &m).is_ok_and(|r| r.is_empty()) {
            out.push(m);
        }
    }
    out
}
