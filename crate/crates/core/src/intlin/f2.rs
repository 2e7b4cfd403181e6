//! Linear algebra over the two-element field, rows packed into `u64` words.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vec {
    len: usize,
    words: Vec<u64>,
}

impl F2Vec {
    pub fn zeros(len: usize) -> Self {
        F2Vec { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, b: bool) {
        assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if b {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &F2Vec) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn dot(&self, other: &F2Vec) -> bool {
        assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones()) & 1 == 1
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    fn lowest_set(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }
}

impl fmt::Debug for F2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Matrix {
    cols: usize,
    rows: Vec<F2Vec>,
}

impl F2Matrix {
    pub fn new(cols: usize, rows: Vec<F2Vec>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols));
        F2Matrix { cols, rows }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        F2Matrix { cols, rows: (0..rows).map(|_| F2Vec::zeros(cols)).collect() }
    }

    pub fn identity(n: usize) -> Self {
        F2Matrix { cols: n, rows: (0..n).map(|i| F2Vec::unit(n, i)).collect() }
    }

    pub fn from_bools(cols: usize, rows: &[Vec<bool>]) -> Self {
        Self::new(cols, rows.iter().map(|r| F2Vec::from_bools(r)).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &F2Vec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[F2Vec] {
        &self.rows
    }

    pub fn mul_vec(&self, x: &F2Vec) -> F2Vec {
        let mut out = F2Vec::zeros(self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            out.set(i, r.dot(x));
        }
        out
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Vec<F2Vec>, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c)) else { continue };
            rows.swap(r, p);
            let pivot = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(c) {
                    row.xor_assign(&pivot);
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        (rows, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
}

/// Basis of `{x : M x = 0}`.
pub fn f2_nullspace(m: &F2Matrix) -> Vec<F2Vec> {
    let (rref, pivots) = m.rref();
    let n = m.ncols();
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut x = F2Vec::unit(n, free);
            for (row, &p) in rref.iter().zip(&pivots) {
                if row.get(free) {
                    x.set(p, true);
                }
            }
            x
        })
        .collect()
}

/// Echelon basis of the span of `vectors`, all of length `len`.
pub fn f2_span_basis(vectors: &[F2Vec], len: usize) -> Vec<F2Vec> {
    F2Matrix::new(len, vectors.to_vec()).rref().0
}

pub fn f2_in_span(basis: &[F2Vec], v: &F2Vec) -> bool {
    let mut all = basis.to_vec();
    all.push(v.clone());
    f2_span_basis(&all, v.len()).len() == f2_span_basis(basis, v.len()).len()
}

/// Vectors of `outer` extending a basis of `inner` (assumed a subspace of
/// the span of `outer`) to a basis of `span(outer)`.
pub fn f2_complement(inner: &[F2Vec], outer: &[F2Vec], len: usize) -> Vec<F2Vec> {
    let mut current = f2_span_basis(inner, len);
    let mut out = Vec::new();
    for v in outer {
        let mut reduced = v.clone();
        for b in &current {
            if let Some(p) = b.lowest_set() {
                if reduced.get(p) {
                    reduced.xor_assign(b);
                }
            }
        }
        if !reduced.is_zero() {
            out.push(v.clone());
            current.push(v.clone());
            current = f2_span_basis(&current, len);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_examples() {
        let z = F2Matrix::zeros(2, 3);
        assert_eq!(f2_nullspace(&z).len(), 3);
        assert!(f2_nullspace(&F2Matrix::identity(4)).is_empty());
        let parity = F2Matrix::from_bools(2, &[vec![true, true]]);
        assert_eq!(f2_nullspace(&parity), vec![F2Vec::from_bools(&[true, true])]);
    }

    #[test]
    fn wide_vectors_cross_word_boundary() {
        let mut v = F2Vec::zeros(130);
        v.set(129, true);
        v.set(3, true);
        assert_eq!(v.weight(), 2);
        assert_eq!(v.lowest_set(), Some(3));
        let m = F2Matrix::new(130, vec![v.clone()]);
        let ns = f2_nullspace(&m);
        assert_eq!(ns.len(), 129);
        assert!(ns.iter().all(|x| !x.dot(&v)));
    }

    #[test]
    fn complement_extends_basis() {
        let e = |b: &[bool]| F2Vec::from_bools(b);
        let inner = vec![e(&[true, true, false])];
        let outer = vec![e(&[true, false, false]), e(&[false, true, false]), e(&[false, false, true])];
        let c = f2_complement(&inner, &outer, 3);
        assert_eq!(c.len(), 2);
        assert!(!f2_in_span(&inner, &c[0]));
    }
}
