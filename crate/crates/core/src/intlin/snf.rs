use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::group::FiniteAbelianGroup;
use super::matrix::IntMatrix;

/// Certificate `U · M · V = D` with `U`, `V` unimodular and `D` diagonal
/// with a nonnegative divisibility chain.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// Inverse of `v`; its rows give a basis of the cokernel adapted to `d`.
    pub v_inv: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|x| !x.is_zero()).count()
    }

    /// Recomputes `U · M · V` and compares with `D`, and checks the chain.
    pub fn verify(&self, m: &IntMatrix) -> bool {
        let lhs = &(&self.u * m) * &self.v;
        if lhs != self.d || !self.d.is_diagonal() {
            return false;
        }
        if !self.u.is_unimodular() || !self.v.is_unimodular() {
            return false;
        }
        if &self.v * &self.v_inv != IntMatrix::identity(self.v.rows()) {
            return false;
        }
        let diag = self.diagonal();
        diag.iter().all(|x| !x.is_negative())
            && diag.windows(2).all(|w| if w[0].is_zero() { w[1].is_zero() } else { w[1].is_multiple_of(&w[0]) })
    }
}

/// Nearest-integer quotient, so that remainders are bounded by |b|/2.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    // r carries the sign of b, so stepping q up shrinks the remainder
    if (&r * BigInt::from(2)).abs() > b.abs() {
        q + 1
    } else {
        q
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut v_inv = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // pivot: smallest nonzero absolute value in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = &d[(i, j)];
                    if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            v_inv.swap_rows(t, pj);

            let pivot = d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -round_div(&d[(i, t)], &pivot);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = round_div(&d[(t, j)], &pivot);
                let neg = -&q;
                d.add_col_multiple(j, t, &neg);
                v.add_col_multiple(j, t, &neg);
                v_inv.add_row_multiple(t, j, &q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into the pivot row and retry
            let offending = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offending {
                Some(i) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    let snf = SmithForm { u, d, v, v_inv };
    #[cfg(debug_assertions)]
    debug_assert!(snf.verify(m), "Smith normal form certificate failed");
    snf
}

/// Invariant factors greater than one of `Z^cols / rowlattice(K)`, with
/// representative generators of the corresponding cyclic summands.
pub fn torsion_invariants(k: &IntMatrix) -> FiniteAbelianGroup {
    let snf = smith_normal_form(k);
    let mut factors = Vec::new();
    let mut gens = Vec::new();
    for (i, x) in snf.diagonal().into_iter().enumerate() {
        if x.is_zero() || x == BigInt::from(1) {
            continue;
        }
        factors.push(x);
        gens.push(snf.v_inv.row(i).to_vec());
    }
    FiniteAbelianGroup::with_generators(factors, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn identity_and_scalar() {
        let id = IntMatrix::identity(3);
        assert_eq!(smith_normal_form(&id).d, id);
        let two = IntMatrix::from_i64_rows(1, &[vec![2]]);
        assert_eq!(smith_normal_form(&two).d, two);
    }

    #[test]
    fn rank_one_example() {
        let m = IntMatrix::from_i64_rows(2, &[vec![2, 0], vec![2, 0]]);
        let snf = smith_normal_form(&m);
        assert!(snf.verify(&m));
        assert_eq!(snf.diagonal(), vec![BigInt::from(2), BigInt::from(0)]);
        assert_eq!(snf.rank(), 1);
        assert_eq!(torsion_invariants(&m), FiniteAbelianGroup::elementary_two(1));
    }

    #[test]
    fn divisibility_fix() {
        // diag(2, 3) is not in Smith form; the chain is (1, 6)
        let m = IntMatrix::from_i64_rows(2, &[vec![2, 0], vec![0, 3]]);
        let snf = smith_normal_form(&m);
        assert!(snf.verify(&m));
        assert_eq!(snf.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn torsion_simple_cases() {
        assert_eq!(
            torsion_invariants(&IntMatrix::from_i64_rows(3, &[vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2]])),
            FiniteAbelianGroup::elementary_two(3)
        );
        assert!(torsion_invariants(&IntMatrix::zeros(2, 3)).is_trivial());
        assert!(torsion_invariants(&IntMatrix::zeros(0, 3)).is_trivial());
    }

    #[test]
    fn round_div_is_nearest() {
        let q = |a: i64, b: i64| round_div(&BigInt::from(a), &BigInt::from(b));
        assert_eq!(q(7, 2), BigInt::from(3));
        assert_eq!(q(-7, 2), BigInt::from(-4));
        assert_eq!(q(5, 3), BigInt::from(2));
        assert_eq!(q(-5, 3), BigInt::from(-2));
        assert_eq!(q(4, -3), BigInt::from(-1));
    }
}
