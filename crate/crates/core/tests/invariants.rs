//! Randomized invariants: rank identities, basis-change invariance of Betti
//! numbers, and stability of modules under isomorphism and duality.

use proptest::prelude::*;

use homgroup::complex::{assemble_window, Builder, ComplexWindow, Direction};
use homgroup::corpus::{module_corpus, named_groups};
use homgroup::field::{Field, PrimeField, Rationals};
use homgroup::linalg::{betti_numbers, echelon_rank, fraction_free_rank, kernel_basis, rank};
use homgroup::matrix::Matrix;
use homgroup::module::{linear_dual, verify_module, ActionModule, Flavor};

fn small_rows(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}

fn to_matrix<F: Field>(field: &F, rows: &[Vec<i64>]) -> Matrix<F> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
        .collect();
    Matrix::from_rows(field, rows).unwrap()
}

/// An invertible matrix and its inverse, from elementary row additions.
fn elementary_pair<F: Field>(
    field: &F,
    n: usize,
    ops: &[(usize, usize, i64)],
) -> (Matrix<F>, Matrix<F>) {
    let mut p = Matrix::identity(field, n);
    let mut q = Matrix::identity(field, n);
    for &(i, j, c) in ops {
        let (i, j) = (i % n, j % n);
        if i == j || n < 2 {
            continue;
        }
        let e = |c: i64| {
            let mut t: Vec<(usize, usize, F::Elem)> = (0..n).map(|k| (k, k, field.one())).collect();
            t.push((i, j, field.from_i64(c)));
            Matrix::from_triplets(field, n, n, t).unwrap()
        };
        p = e(c).mul(&p).unwrap();
        q = q.mul(&e(-c)).unwrap();
    }
    (p, q)
}

type Ops = Vec<(usize, usize, i64)>;

fn ops() -> impl Strategy<Value = Ops> {
    prop::collection::vec((0usize..64, 0usize..64, -2i64..=2), 0..8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_of_transpose_and_rank_nullity(rows in small_rows(6)) {
        let f = PrimeField::new(5).unwrap();
        let m = to_matrix(&f, &rows);
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
        let kernel = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + kernel.len(), m.cols());
        for v in &kernel {
            prop_assert!(m.apply(v).unwrap().iter().all(|x| f.is_zero(x)));
        }
        let q = to_matrix(&Rationals, &rows);
        prop_assert_eq!(rank(&q), rank(&q.transpose()));
        prop_assert_eq!(fraction_free_rank(&q), echelon_rank(&q));
        prop_assert_eq!(rank(&q) + kernel_basis(&q).len(), q.cols());
    }

    #[test]
    fn betti_numbers_survive_basis_change(
        group in 0usize..5,
        module in 0usize..4,
        chain in any::<bool>(),
        per_degree in prop::collection::vec(ops(), 4),
    ) {
        let f = PrimeField::new(3).unwrap();
        let (_, g) = named_groups().swap_remove(group);
        let flavor = if chain { Flavor::Right } else { Flavor::DualRight };
        let mut ms = module_corpus(&g, &f, flavor);
        let (_, m) = ms.swap_remove(module % ms.len());
        let b = if chain {
            Builder::RightChain { group: g.clone(), module: m }
        } else {
            Builder::DualRight { group: g.clone(), module: m }
        };
        let w = assemble_window(&b, 3).unwrap();
        let pairs: Vec<_> = w.dims().iter().zip(&per_degree).map(|(&d, o)| elementary_pair(&f, d, o)).collect();
        // new differential in each slot: P_target · d · P_source⁻¹
        let moved: Vec<Matrix<PrimeField>> = w
            .differentials()
            .iter()
            .enumerate()
            .map(|(k, d)| {
                let (src, dst) = match w.direction() {
                    Direction::Cochain => (k, k + 1),
                    Direction::Chain => (k + 1, k),
                };
                pairs[dst].0.mul(d).unwrap().mul(&pairs[src].1).unwrap()
            })
            .collect();
        let conjugated = ComplexWindow::from_parts(&f, w.direction(), w.dims().to_vec(), moved).unwrap();
        prop_assert_eq!(betti_numbers(&w), betti_numbers(&conjugated));
    }

    #[test]
    fn modules_in_a_new_basis_verify_and_dualize(
        group in 0usize..5,
        module in 0usize..4,
        o in ops(),
    ) {
        let f = PrimeField::new(3).unwrap();
        let (_, g) = named_groups().swap_remove(group);
        let mut ms = module_corpus(&g, &f, Flavor::Right);
        let (_, m) = ms.swap_remove(module % ms.len());
        let (p, q) = elementary_pair(&f, m.dim(), &o);
        let conj = |x: &Matrix<PrimeField>| p.mul(x).unwrap().mul(&q).unwrap();
        let moved = ActionModule::new(
            &f,
            conj(m.beta()),
            None,
            Some(m.right_family().unwrap().iter().map(conj).collect()),
            Flavor::Right,
        )
        .unwrap();
        prop_assert!(verify_module(&g, &moved).unwrap().is_empty());
        let dual = linear_dual(&g, &moved).unwrap();
        prop_assert_eq!(dual.flavor(), Flavor::DualLeft);
        prop_assert!(verify_module(&g, &dual).unwrap().is_empty());

        let homology = |m: ActionModule<PrimeField>| {
            betti_numbers(&assemble_window(&Builder::RightChain { group: g.clone(), module: m }, 3).unwrap())
        };
        prop_assert_eq!(homology(m), homology(moved));
    }
}
