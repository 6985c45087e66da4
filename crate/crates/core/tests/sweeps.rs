//! Corpus sweeps over the named Hom-groups and their modules.

use homgroup::algebra::group_algebra;
use homgroup::complex::{assemble_window, Builder, Direction};
use homgroup::corpus::{module_corpus, named_groups, one_dimensional_modules};
use homgroup::field::{Field, PrimeField, Rationals};
use homgroup::homgroup::HomGroup;
use homgroup::linalg::betti_numbers;
use homgroup::module::{
    kg_dual, left_equivariance_witness, right_equivariance_witness, trivialize_left_action,
    trivialize_right_action, verify_module, ActionModule, Flavor,
};
use homgroup::theorems::{
    check_simplicial_identities, hochschild_reduction, inverse_transport_iso, special_cocycles,
    CocycleKind, Variant,
};
use homgroup::Error;

fn builders<F: Field>(g: &HomGroup, field: &F) -> Vec<(String, Builder<F>)> {
    let mut out = Vec::new();
    for (name, m) in module_corpus(g, field, Flavor::DualLeft) {
        out.push((
            format!("dual_left/{name}"),
            Builder::DualLeft {
                group: g.clone(),
                module: m,
            },
        ));
    }
    for (name, m) in module_corpus(g, field, Flavor::DualRight) {
        out.push((
            format!("dual_right/{name}"),
            Builder::DualRight {
                group: g.clone(),
                module: m,
            },
        ));
    }
    for (name, m) in module_corpus(g, field, Flavor::Right) {
        out.push((
            format!("right/{name}"),
            Builder::RightChain {
                group: g.clone(),
                module: m,
            },
        ));
    }
    for (name, m) in module_corpus(g, field, Flavor::Left) {
        out.push((
            format!("left/{name}"),
            Builder::LeftChain {
                group: g.clone(),
                module: m,
            },
        ));
    }
    let kg = group_algebra(g, field);
    for (name, m) in module_corpus(g, field, Flavor::DualBimodule) {
        out.push((
            format!("hochschild_cochain/{name}"),
            Builder::HochschildCochain {
                algebra: kg.clone(),
                module: m,
            },
        ));
    }
    for (name, m) in module_corpus(g, field, Flavor::Bimodule) {
        out.push((
            format!("hochschild_chain/{name}"),
            Builder::HochschildChain {
                algebra: kg.clone(),
                module: m,
            },
        ));
    }
    out.push((
        "kg_dual".into(),
        Builder::KgDual {
            group: g.clone(),
            field: field.clone(),
        },
    ));
    out
}

#[test]
fn identities_hold_for_every_builder_and_module() {
    let f5 = PrimeField::new(5).unwrap();
    for (gname, g) in named_groups() {
        for (name, b) in builders(&g, &f5) {
            let top = if b.direction() == Direction::Cochain {
                3
            } else {
                4
            };
            let w = assemble_window(&b, top).unwrap_or_else(|e| panic!("{gname}/{name}: {e}"));
            let cert = check_simplicial_identities(w.direction(), w.faces()).unwrap();
            assert!(cert.holds(), "{gname}/{name}: {:?}", cert.failures);
        }
    }
}

#[test]
fn transports_are_isomorphisms_on_one_dimensional_modules() {
    let f3 = PrimeField::new(3).unwrap();
    for (gname, g) in named_groups().into_iter().take(4) {
        for m in one_dimensional_modules(&g, &f3, Flavor::DualRight) {
            let t = inverse_transport_iso(&g, &m, Variant::Cochain, 3).unwrap();
            assert!(t.is_isomorphism(), "{gname}");
            let (a, b) = t.betti_pair();
            assert_eq!(a, b, "{gname}");
        }
        let kg = group_algebra(&g, &f3);
        for m in one_dimensional_modules(&g, &f3, Flavor::Right) {
            match inverse_transport_iso(&g, &m, Variant::Chain, 3) {
                Ok(t) => {
                    assert!(right_equivariance_witness(&kg, &m).is_none());
                    assert!(t.is_isomorphism(), "{gname}");
                    let (a, b) = t.betti_pair();
                    assert_eq!(a, b);
                }
                Err(Error::HypothesisUnmet { .. }) => {
                    assert!(right_equivariance_witness(&kg, &m).is_some());
                }
                Err(e) => panic!("{gname}: {e}"),
            }
        }
    }
}

#[test]
fn reductions_hold_where_hypotheses_hold() {
    let f3 = PrimeField::new(3).unwrap();
    for (gname, g) in named_groups().into_iter().take(4) {
        let kg = group_algebra(&g, &f3);
        for m in one_dimensional_modules(&g, &f3, Flavor::DualLeft) {
            match hochschild_reduction(&g, &m, Variant::Cochain, 3) {
                Ok(c) => assert!(c.holds(), "{gname}"),
                Err(Error::HypothesisUnmet { witness, .. }) => {
                    assert_eq!(left_equivariance_witness(&kg, &m), Some(witness));
                    assert!(trivialize_right_action(&g, &m).is_err());
                }
                Err(e) => panic!("{gname}: {e}"),
            }
        }
        for m in one_dimensional_modules(&g, &f3, Flavor::Right) {
            match hochschild_reduction(&g, &m, Variant::Chain, 3) {
                Ok(c) => assert!(c.holds(), "{gname}"),
                Err(Error::HypothesisUnmet { witness, .. }) => {
                    assert_eq!(right_equivariance_witness(&kg, &m), Some(witness));
                    assert!(trivialize_left_action(&g, &m).is_err());
                }
                Err(e) => panic!("{gname}: {e}"),
            }
        }
    }
}

#[test]
fn low_degree_cocycles_match_windows() {
    let f3 = PrimeField::new(3).unwrap();
    for (gname, g) in named_groups() {
        let mut modules = one_dimensional_modules(&g, &f3, Flavor::DualRight);
        modules.extend(
            module_corpus(&g, &f3, Flavor::DualRight)
                .into_iter()
                .map(|(_, m)| m),
        );
        for m in modules {
            for kind in [CocycleKind::H0Invariants, CocycleKind::H1Crossed] {
                let r = special_cocycles(&g, &m, kind).unwrap();
                assert!(r.matches_window, "{gname} {kind:?}");
                assert_ne!(r.principal_matches, Some(false), "{gname}");
            }
        }
    }
}

#[test]
fn kg_dual_left_equivariance_can_fail() {
    // gives the reduction theorem a genuine hypothesis-unmet instance
    let q = Rationals;
    let mut failures = 0;
    for (_, g) in named_groups() {
        let left = homgroup::module::one_sided(&kg_dual(&g, &q), Flavor::DualLeft).unwrap();
        let r = verify_module(&g, &left).unwrap();
        assert!(r.is_empty());
        if r.left_equivariant == Some(false) {
            failures += 1;
            assert!(matches!(
                hochschild_reduction(&g, &left, Variant::Cochain, 2),
                Err(Error::HypothesisUnmet { .. })
            ));
        }
    }
    assert!(failures > 0);
}

#[test]
fn regular_modules_have_equal_betti_under_transport() {
    let q = Rationals;
    for (gname, g) in named_groups() {
        let m = ActionModule::trivial(&q, g.order(), Flavor::DualRight);
        let t = inverse_transport_iso(&g, &m, Variant::Cochain, 3).unwrap();
        assert_eq!(
            betti_numbers(&t.source),
            betti_numbers(&t.target),
            "{gname}"
        );
    }
}

#[test]
fn one_sided_modules_are_automatically_equivariant() {
    // k = 1 in the right axiom (g = 1 in the left one) forces equivariance,
    // so the chain builders' hypothesis check never fires on a verified module
    let f3 = PrimeField::new(3).unwrap();
    for (gname, g) in named_groups() {
        let kg = group_algebra(&g, &f3);
        for m in one_dimensional_modules(&g, &f3, Flavor::Right) {
            assert_eq!(right_equivariance_witness(&kg, &m), None, "{gname}");
        }
        for m in one_dimensional_modules(&g, &f3, Flavor::Left) {
            assert_eq!(left_equivariance_witness(&kg, &m), None, "{gname}");
        }
        for (name, m) in module_corpus(&g, &f3, Flavor::Right) {
            assert_eq!(right_equivariance_witness(&kg, &m), None, "{gname}/{name}");
        }
        for (name, m) in module_corpus(&g, &f3, Flavor::Left) {
            assert_eq!(left_equivariance_witness(&kg, &m), None, "{gname}/{name}");
        }
    }
}
