use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Verdict of an exact linear solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Rational>),
    Inconsistent,
    Underdetermined,
}

/// Solves `A x = b` by exact Gaussian elimination.
pub fn rational_solve(a: &[Vec<Rational>], b: &[Rational]) -> Solution {
    assert_eq!(a.len(), b.len(), "row count mismatch");
    let n = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            assert_eq!(row.len(), n, "ragged matrix");
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in c..=n {
                let v = &f * &m[r][j];
                m[i][j] -= v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[n].is_zero()) {
        return Solution::Inconsistent;
    }
    if pivots.len() < n {
        return Solution::Underdetermined;
    }
    Solution::Unique(m[..n].iter().map(|row| row[n].clone()).collect())
}

/// Exact inverse of a square rational matrix, if it exists.
pub fn rational_inverse(a: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<Rational> = (0..n).map(|i| if i == j { Rational::one() } else { Rational::zero() }).collect();
        match rational_solve(a, &e) {
            Solution::Unique(x) => cols.push(x),
            _ => return None,
        }
    }
    Some((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

pub fn is_integral(x: &Rational) -> bool {
    x.is_integer()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn identity_and_scalar() {
        let id = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
        assert_eq!(rational_solve(&id, &[rat(3), rat(-4)]), Solution::Unique(vec![rat(3), rat(-4)]));
        assert_eq!(rational_solve(&[vec![rat(2)]], &[rat(3)]), Solution::Unique(vec![rat_frac(3, 2)]));
    }

    #[test]
    fn degenerate_verdicts() {
        let a = vec![vec![rat(1), rat(1)], vec![rat(2), rat(2)]];
        assert_eq!(rational_solve(&a, &[rat(1), rat(3)]), Solution::Inconsistent);
        assert_eq!(rational_solve(&a, &[rat(1), rat(2)]), Solution::Underdetermined);
    }

    #[test]
    fn inverse_roundtrip() {
        let a = vec![vec![rat(2), rat(-1)], vec![rat(-1), rat(2)]];
        let inv = rational_inverse(&a).unwrap();
        assert_eq!(inv, vec![vec![rat_frac(2, 3), rat_frac(1, 3)], vec![rat_frac(1, 3), rat_frac(2, 3)]]);
    }
}
