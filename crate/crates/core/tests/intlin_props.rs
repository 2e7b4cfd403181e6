#![allow(clippy::needless_range_loop)]

use cartan_pi0_core::intlin::*;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn matrix_strategy(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(-bound..=bound, c), r)
            .prop_map(move |rows| IntMatrix::from_i64_rows(c, &rows))
    })
}

fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

proptest! {
    #[test]
    fn snf_certificate(m in matrix_strategy(6, 100)) {
        let snf = smith_normal_form(&m);
        prop_assert!(snf.verify(&m));
        prop_assert!(snf.u.is_unimodular() && snf.v.is_unimodular());
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            prop_assert!(w[1].is_zero() || (!w[0].is_zero() && w[1].is_multiple_of(&w[0])));
        }
    }

    #[test]
    fn torsion_ignores_row_order_and_redundant_rows(m in matrix_strategy(5, 12), a in -3i64..=3, b in -3i64..=3) {
        let base = torsion_invariants(&m);
        let rows = m.row_vecs();
        let reversed: Vec<Vec<BigInt>> = rows.iter().rev().cloned().collect();
        prop_assert_eq!(&torsion_invariants(&IntMatrix::from_rows(m.cols(), &reversed)), &base);
        let combo: Vec<BigInt> = (0..m.cols())
            .map(|j| BigInt::from(a) * &rows[0][j] + BigInt::from(b) * &rows[rows.len() - 1][j])
            .collect();
        let mut extended = rows.clone();
        extended.push(combo);
        prop_assert_eq!(&torsion_invariants(&IntMatrix::from_rows(m.cols(), &extended)), &base);
    }

    #[test]
    fn torsion_order_matches_determinant(m in matrix_strategy(4, 9)) {
        prop_assume!(m.rows() == m.cols());
        let det = m.determinant();
        prop_assume!(!det.is_zero());
        prop_assert_eq!(torsion_invariants(&m).order(), det.abs());
    }

    #[test]
    fn f2_rank_nullity(rows in prop::collection::vec(prop::collection::vec(any::<bool>(), 7), 0..9)) {
        let m = F2Matrix::from_bools(7, &rows);
        let kernel = f2_nullspace(&m);
        prop_assert_eq!(kernel.len() + m.rank(), 7);
        for x in &kernel {
            prop_assert!(m.mul_vec(x).is_zero());
        }
    }

    #[test]
    fn hermite_is_canonical(gens in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 1..6)) {
        let basis = hermite_basis_i64(&gens, 3);
        let mut shuffled = gens.clone();
        shuffled.reverse();
        prop_assert_eq!(&hermite_basis_i64(&shuffled, 3), &basis);
        for g in &gens {
            let v: Vec<BigInt> = g.iter().map(|&x| BigInt::from(x)).collect();
            prop_assert!(lattice_contains(&basis, &v));
        }
    }

    #[test]
    fn intersection_against_box_search(
        gens in prop::collection::vec(prop::collection::vec(-4i64..=4, 3), 3),
        keep_mask in 1u8..7,
    ) {
        let basis = hermite_basis_i64(&gens, 3);
        prop_assume!(basis.len() == 3);
        let keep: Vec<usize> = (0..3).filter(|i| keep_mask >> i & 1 == 1).collect();
        let inter = lattice_intersect_coordinate_subspace(&basis, 3, &keep);
        for v in &inter {
            prop_assert!(lattice_contains(&basis, v));
            for j in 0..3 {
                if !keep.contains(&j) {
                    prop_assert!(v[j].is_zero());
                }
            }
        }
        let bound = lattice_index(&basis, 3).unwrap();
        let r = 4i64.min(i64::try_from(&bound).unwrap_or(4));
        for x in -r..=r {
            for y in -r..=r {
                for z in -r..=r {
                    let v = [x, y, z];
                    if (0..3).any(|j| !keep.contains(&j) && v[j] != 0) {
                        continue;
                    }
                    let vb: Vec<BigInt> = v.iter().map(|&t| BigInt::from(t)).collect();
                    if lattice_contains(&basis, &vb) {
                        prop_assert!(lattice_contains(&inter, &vb), "missed {:?}", v);
                    }
                }
            }
        }
    }
}

#[test]
fn hermite_examples() {
    let b = hermite_basis_i64(&[vec![2, 0], vec![0, 2], vec![1, 1]], 2);
    assert_eq!(lattice_index(&b, 2), Some(BigInt::from(2)));
    assert!(hermite_basis_i64(&[], 2).is_empty());
    assert_eq!(hermite_basis_i64(&[vec![1, 0], vec![0, 1]], 2), big(&[&[1, 0], &[0, 1]]));
}

#[test]
fn intersection_examples() {
    let z2 = big(&[&[1, 0], &[0, 1]]);
    assert_eq!(lattice_intersect_coordinate_subspace(&z2, 2, &[0]), big(&[&[1, 0]]));
    let l = hermite_basis_i64(&[vec![1, 1], vec![0, 2]], 2);
    assert_eq!(lattice_intersect_coordinate_subspace(&l, 2, &[0]), big(&[&[2, 0]]));
    let even = hermite_basis_i64(&[vec![1, 1, 0], vec![0, 1, 1], vec![2, 0, 0]], 3);
    let inter = lattice_intersect_coordinate_subspace(&even, 3, &[0, 1]);
    assert_eq!(inter, hermite_basis_i64(&[vec![1, 1, 0], vec![2, 0, 0]], 3));
}

#[test]
fn torsion_examples() {
    assert_eq!(
        torsion_invariants(&IntMatrix::from_i64_rows(3, &[vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2]])),
        FiniteAbelianGroup::elementary_two(3)
    );
    assert!(torsion_invariants(&IntMatrix::zeros(2, 3)).is_trivial());
    assert_eq!(
        torsion_invariants(&IntMatrix::from_i64_rows(2, &[vec![2, 0], vec![2, 0]])),
        FiniteAbelianGroup::elementary_two(1)
    );
}

#[test]
fn rational_solve_gram_example() {
    // ‖τ‖² = 2 Gram system of the one-black-node B₂ datum
    assert_eq!(rational_solve(&[vec![rat(2)]], &[rat(2)]), Solution::Unique(vec![rat(1)]));
}
