use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Row-style Hermite normal form of the lattice spanned by `gens` in `Z^dim`.
///
/// The returned rows are in echelon form with positive pivots and entries
/// above each pivot reduced into `[0, pivot)`; the basis is therefore
/// canonical for the lattice and two lattices are equal iff their bases are.
pub fn hermite_basis(gens: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigInt>> {
    let (rows, _) = echelonize(gens.to_vec(), dim, dim);
    rows.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect()
}

pub fn hermite_basis_i64(gens: &[Vec<i64>], dim: usize) -> Vec<Vec<BigInt>> {
    let g: Vec<Vec<BigInt>> = gens.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    hermite_basis(&g, dim)
}

/// Echelon reduction on the first `active` columns of `rows`, carrying the
/// remaining columns along. Returns the rows (rank rows first) and the rank.
fn echelonize(mut rows: Vec<Vec<BigInt>>, width: usize, active: usize) -> (Vec<Vec<BigInt>>, usize) {
    for r in &rows {
        assert_eq!(r.len(), width, "generator of wrong length");
    }
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..active {
        if pivot_row == rows.len() {
            break;
        }
        // gcd-eliminate column `col` below `pivot_row`
        loop {
            let best = (pivot_row..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
            let Some(p) = best else { break };
            rows.swap(pivot_row, p);
            let mut done = true;
            for i in pivot_row + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[pivot_row][col]);
                sub_multiple(&mut rows, i, pivot_row, &q);
                done &= rows[i][col].is_zero();
            }
            if done {
                break;
            }
        }
        if rows[pivot_row][col].is_zero() {
            continue;
        }
        if rows[pivot_row][col].is_negative() {
            for x in rows[pivot_row].iter_mut() {
                *x = -core::mem::take(x);
            }
        }
        pivots.push((pivot_row, col));
        pivot_row += 1;
    }
    // reduce above pivots
    for &(r, c) in &pivots {
        for i in 0..r {
            let q = rows[i][c].div_floor(&rows[r][c]);
            if !q.is_zero() {
                sub_multiple(&mut rows, i, r, &q);
            }
        }
    }
    (rows, pivot_row)
}

fn sub_multiple(rows: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    let (a, b) = if dst < src {
        let (lo, hi) = rows.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in a.iter_mut().zip(b.iter()) {
        *x -= q * y;
    }
}

/// Coefficients of `v` in a Hermite basis, if `v` lies in the lattice.
pub fn lattice_coordinates(basis: &[Vec<BigInt>], v: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rest = v.to_vec();
    let mut coeffs = Vec::with_capacity(basis.len());
    for row in basis {
        let col = row.iter().position(|x| !x.is_zero())?;
        // every earlier column must already be cleared
        if rest[..col].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let (q, r) = rest[col].div_mod_floor(&row[col]);
        if !r.is_zero() {
            return None;
        }
        for (x, y) in rest.iter_mut().zip(row) {
            *x -= &q * y;
        }
        coeffs.push(q);
    }
    if rest.iter().all(Zero::is_zero) {
        Some(coeffs)
    } else {
        None
    }
}

pub fn lattice_contains(basis: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    lattice_coordinates(basis, v).is_some()
}

/// A basis of `{x in Z^n : x · M = 0}` where `M` is given by its `n` rows.
pub fn integer_left_kernel(m: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let n = m.len();
    let aug: Vec<Vec<BigInt>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let (rows, rank) = echelonize(aug, cols + n, cols);
    let kernel: Vec<Vec<BigInt>> = rows[rank..].iter().map(|r| r[cols..].to_vec()).collect();
    hermite_basis(&kernel, n)
}

/// Basis of `{v in L : v_j = 0 for all j not in keep}`.
pub fn lattice_intersect_coordinate_subspace(basis: &[Vec<BigInt>], dim: usize, keep: &[usize]) -> Vec<Vec<BigInt>> {
    let drop: Vec<usize> = (0..dim).filter(|j| !keep.contains(j)).collect();
    let restricted: Vec<Vec<BigInt>> = basis.iter().map(|r| drop.iter().map(|&j| r[j].clone()).collect()).collect();
    let kernel = integer_left_kernel(&restricted, drop.len());
    let vectors: Vec<Vec<BigInt>> = kernel
        .iter()
        .map(|x| {
            let mut v = vec![BigInt::zero(); dim];
            for (c, b) in x.iter().zip(basis) {
                for (vj, bj) in v.iter_mut().zip(b) {
                    *vj += c * bj;
                }
            }
            v
        })
        .collect();
    hermite_basis(&vectors, dim)
}

/// Absolute determinant of a full-rank square basis (the lattice index in
/// `Z^dim`), or `None` if the basis is not full rank.
pub fn lattice_index(basis: &[Vec<BigInt>], dim: usize) -> Option<BigInt> {
    if basis.len() != dim {
        return None;
    }
    // Hermite bases are upper triangular
    let mut idx = BigInt::one();
    for (i, row) in basis.iter().enumerate() {
        if row[..i].iter().any(|x| !x.is_zero()) || row[i].is_zero() {
            return None;
        }
        idx *= row[i].abs();
    }
    Some(idx)
}
