//! Root systems of types A–G in Bourbaki numbering.
//!
//! Conventions used throughout the crate:
//!
//! * `cartan[i][j] = (α_j | α_i^∨)`.
//! * A root is stored in simple-root coordinates and in weight coordinates;
//!   the weight coordinates of `α` are `((α|α_1^∨), …, (α|α_ℓ^∨))`, so the
//!   fundamental weights are the unit vectors and `(ω_i|α_j^∨) = δ_ij`.
//! * Squared norms come from the minimal integer symmetrizer `d`
//!   (`diag(d)·C` symmetric), so the short roots have squared norm `2·min d`.
//! * A functional on the weight space is given by its values on the simple
//!   roots.
//! * A word `[i1, i2, …]` acts by applying `s_{i1}` first.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{FromPrimitive, Num, Signed, Zero};

use crate::intlin::{rat, rational_inverse, Rational};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootType {
    pub series: Series,
    pub rank: usize,
}

impl RootType {
    /// Accepts A ℓ≥1, B ℓ≥2, C ℓ≥2, D ℓ≥4, E 6–8, F 4, G 2.
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let bad = |reason| Err(Error::InvalidType { series: series.letter(), rank, reason });
        match series {
            Series::A if rank < 1 => bad("type A needs rank >= 1"),
            Series::B if rank < 2 => bad("type B needs rank >= 2"),
            Series::C if rank < 2 => bad("type C needs rank >= 2 (C2 is accepted as B2 relabeled)"),
            Series::D if rank < 4 => bad("type D needs rank >= 4"),
            Series::E if !(6..=8).contains(&rank) => bad("type E exists in ranks 6, 7, 8"),
            Series::F if rank != 4 => bad("type F exists only in rank 4"),
            Series::G if rank != 2 => bad("type G exists only in rank 2"),
            _ => Ok(RootType { series, rank }),
        }
    }

    /// Number of positive roots, from the classical formulas.
    pub fn positive_root_count(self) -> usize {
        let l = self.rank;
        match self.series {
            Series::A => l * (l + 1) / 2,
            Series::B | Series::C => l * l,
            Series::D => l * (l - 1),
            Series::E => match l {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Series::F => 24,
            Series::G => 6,
        }
    }

    /// Dimension of the complex simple Lie algebra.
    pub fn algebra_dimension(self) -> usize {
        self.rank + 2 * self.positive_root_count()
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

/// Cartan matrix in Bourbaki numbering, `C[i][j] = (α_j | α_i^∨)`.
pub fn cartan_matrix(t: RootType) -> Vec<Vec<i64>> {
    let l = t.rank;
    let mut c = vec![vec![0i64; l]; l];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut bond = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match t.series {
        Series::A | Series::B | Series::C => (0..l - 1).for_each(|i| bond(i, i + 1)),
        Series::D => {
            (0..l - 2).for_each(|i| bond(i, i + 1));
            bond(l - 3, l - 1);
        }
        Series::E => {
            for (i, j) in [(0, 2), (2, 3), (3, 4), (1, 3), (4, 5), (5, 6), (6, 7)] {
                if j < l {
                    bond(i, j);
                }
            }
        }
        Series::F => (0..3).for_each(|i| bond(i, i + 1)),
        Series::G => bond(0, 1),
    }
    match t.series {
        // α_ℓ short
        Series::B => c[l - 1][l - 2] = -2,
        // α_ℓ long
        Series::C => c[l - 2][l - 1] = -2,
        // α_3, α_4 short
        Series::F => c[2][1] = -2,
        // α_1 short
        Series::G => c[0][1] = -3,
        _ => {}
    }
    c
}

/// Minimal positive integer `d` with `diag(d)·C` symmetric (connected diagram).
fn symmetrizer(c: &[Vec<i64>]) -> Vec<i64> {
    let l = c.len();
    let mut d: Vec<Option<Rational>> = vec![None; l];
    d[0] = Some(rat(1));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..l {
            if i != j && c[i][j] != 0 && d[j].is_none() {
                // d_i C_ij = d_j C_ji
                let di = d[i].clone().unwrap();
                d[j] = Some(di * rat(c[i][j]) / rat(c[j][i]));
                queue.push_back(j);
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().map(|x| x.expect("connected Dynkin diagram")).collect();
    let lcm = d.iter().fold(num_bigint::BigInt::from(1), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
    let ints: Vec<num_bigint::BigInt> =
        d.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(num_bigint::BigInt::from(0), |acc, x| num_integer::Integer::gcd(&acc, x));
    ints.iter().map(|x| i64::try_from(x / &g).unwrap()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    simple: Vec<i64>,
    weight: Vec<i64>,
    coroot: Vec<i64>,
    norm: i64,
    positive: bool,
}

impl Root {
    /// Coordinates in the simple-root basis.
    pub fn simple(&self) -> &[i64] {
        &self.simple
    }

    /// Weight coordinates, `((α|α_1^∨), …, (α|α_ℓ^∨))`.
    pub fn weight(&self) -> &[i64] {
        &self.weight
    }

    /// Coordinates of the coroot in the simple-coroot basis.
    pub fn coroot(&self) -> &[i64] {
        &self.coroot
    }

    /// Squared norm in the symmetrizer normalization.
    pub fn norm(&self) -> i64 {
        self.norm
    }

    pub fn is_positive(&self) -> bool {
        self.positive
    }

    pub fn height(&self) -> i64 {
        self.simple.iter().sum()
    }
}

/// Index of a root inside its [`RootSystem`].
pub type RootId = usize;

/// Values of a functional on the simple roots.
pub type Functional = Vec<Rational>;

#[derive(Clone, Debug)]
pub struct RootSystem {
    root_type: RootType,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    roots: Vec<Root>,
    by_simple: BTreeMap<Vec<i64>, RootId>,
    by_weight: BTreeMap<Vec<i64>, RootId>,
    cartan_inv: Vec<Vec<Rational>>,
    n_positive: usize,
}

/// A Weyl chamber, recorded by a word carrying the base chamber onto it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    pub word: Vec<usize>,
    /// `simple_roots[j]` is the image of `α_j` under the word.
    pub simple_roots: Vec<RootId>,
}

impl RootSystem {
    pub fn new(root_type: RootType) -> Self {
        let cartan = cartan_matrix(root_type);
        let symmetrizer = symmetrizer(&cartan);
        let l = root_type.rank;

        // closure of the simple roots under simple reflections
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..l {
            let mut e = vec![0; l];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(c) = queue.pop_front() {
            let w = mat_vec(&cartan, &c);
            for i in 0..l {
                let mut r = c.clone();
                r[i] -= w[i];
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }

        let mut positive: Vec<Vec<i64>> = seen.into_iter().filter(|c| c.iter().all(|&x| x >= 0)).collect();
        positive.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let n_positive = positive.len();
        let negative: Vec<Vec<i64>> = positive.iter().map(|c| c.iter().map(|x| -x).collect()).collect();

        let c: Vec<Vec<Rational>> = cartan.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
        let cartan_inv = rational_inverse(&c).expect("Cartan matrices are invertible");
        let mut rs = RootSystem {
            root_type,
            cartan,
            symmetrizer,
            roots: Vec::new(),
            by_simple: BTreeMap::new(),
            by_weight: BTreeMap::new(),
            cartan_inv,
            n_positive,
        };
        for (k, c) in positive.into_iter().chain(negative).enumerate() {
            let root = rs.make_root(c);
            rs.by_simple.insert(root.simple.clone(), k);
            rs.by_weight.insert(root.weight.clone(), k);
            rs.roots.push(root);
        }
        rs
    }

    pub fn build(series: Series, rank: usize) -> Result<Self> {
        Ok(Self::new(RootType::new(series, rank)?))
    }

    fn make_root(&self, simple: Vec<i64>) -> Root {
        let weight = mat_vec(&self.cartan, &simple);
        let norm = self.inner_simple(&simple, &simple);
        let coroot = simple.iter().zip(&self.symmetrizer).map(|(c, d)| 2 * c * d / norm).collect();
        let positive = simple.iter().all(|&x| x >= 0);
        Root { simple, weight, coroot, norm, positive }
    }

    pub fn root_type(&self) -> RootType {
        self.root_type
    }

    pub fn rank(&self) -> usize {
        self.root_type.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, r: RootId) -> &Root {
        &self.roots[r]
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Positive roots occupy ids `0..n_positive`, simple roots first.
    pub fn positive_ids(&self) -> core::ops::Range<RootId> {
        0..self.n_positive
    }

    pub fn num_positive(&self) -> usize {
        self.n_positive
    }

    pub fn simple_root(&self, i: usize) -> RootId {
        debug_assert_eq!(self.roots[i].simple.iter().sum::<i64>(), 1);
        debug_assert_eq!(self.roots[i].simple[i], 1);
        i
    }

    pub fn negative(&self, r: RootId) -> RootId {
        if r < self.n_positive {
            r + self.n_positive
        } else {
            r - self.n_positive
        }
    }

    pub fn find_simple(&self, simple: &[i64]) -> Option<RootId> {
        self.by_simple.get(simple).copied()
    }

    /// Looks up a root by weight coordinates.
    pub fn find_weight(&self, weight: &[i64]) -> Option<RootId> {
        self.by_weight.get(weight).copied()
    }

    /// Converts integral weight coordinates to simple-root coordinates when the
    /// weight lies in the root lattice.
    pub fn weight_to_simple(&self, weight: &[i64]) -> Option<Vec<i64>> {
        let inv = &self.cartan_inv;
        let mut out = Vec::with_capacity(self.rank());
        for row in inv {
            let x: Rational = row.iter().zip(weight).map(|(a, &w)| a * rat(w)).sum();
            if !x.is_integer() {
                return None;
            }
            out.push(i64::try_from(x.to_integer()).ok()?);
        }
        Some(out)
    }

    /// `C^{-1}` as exact rationals.
    pub fn cartan_inverse(&self) -> &[Vec<Rational>] {
        &self.cartan_inv
    }

    /// Invariant form on simple-root coordinates.
    pub fn inner_simple(&self, a: &[i64], b: &[i64]) -> i64 {
        let l = self.rank();
        let mut s = 0;
        for i in 0..l {
            if a[i] == 0 {
                continue;
            }
            for j in 0..l {
                s += a[i] * b[j] * self.symmetrizer[i] * self.cartan[i][j];
            }
        }
        s
    }

    pub fn inner(&self, a: RootId, b: RootId) -> i64 {
        self.inner_simple(&self.roots[a].simple, &self.roots[b].simple)
    }

    /// `(λ | α^∨)` for rational weight coordinates `λ`.
    pub fn pairing(&self, lambda: &[Rational], alpha: RootId) -> Result<Rational> {
        self.check_len(lambda.len())?;
        let alpha = self.roots.get(alpha).ok_or(Error::IndexOutOfRange { index: alpha, bound: self.len() })?;
        Ok(lambda.iter().zip(&alpha.coroot).map(|(l, &c)| l * rat(c)).sum())
    }

    /// `(λ | α^∨)` for integral weights.
    pub fn pairing_int(&self, lambda: &[i64], alpha: RootId) -> i64 {
        lambda.iter().zip(&self.roots[alpha].coroot).map(|(l, c)| l * c).sum()
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if n != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: n });
        }
        Ok(())
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange { index: i, bound: self.rank() });
        }
        Ok(())
    }

    /// `s_i(λ) = λ − (λ|α_i^∨) α_i` on weight coordinates.
    pub fn reflect<T>(&self, lambda: &[T], i: usize) -> Result<Vec<T>>
    where
        T: Clone + Num + FromPrimitive,
    {
        self.check_len(lambda.len())?;
        self.check_index(i)?;
        Ok(self.reflect_unchecked(lambda, i))
    }

    fn reflect_unchecked<T>(&self, lambda: &[T], i: usize) -> Vec<T>
    where
        T: Clone + Num + FromPrimitive,
    {
        let li = lambda[i].clone();
        lambda
            .iter()
            .enumerate()
            .map(|(k, x)| x.clone() - li.clone() * T::from_i64(self.cartan[k][i]).unwrap())
            .collect()
    }

    pub fn apply_word<T>(&self, lambda: &[T], word: &[usize]) -> Result<Vec<T>>
    where
        T: Clone + Num + FromPrimitive,
    {
        let mut v = lambda.to_vec();
        for &i in word {
            v = self.reflect(&v, i)?;
        }
        Ok(v)
    }

    /// Reflects the dominant-chamber representative out of `v`: repeatedly
    /// applies `s_k` at the first negative coordinate `k`.
    pub fn make_dominant<T>(&self, v: &[T]) -> Result<(Vec<T>, Vec<usize>)>
    where
        T: Clone + Num + FromPrimitive + Signed,
    {
        self.check_len(v.len())?;
        let mut cur = v.to_vec();
        let mut word = Vec::new();
        while let Some(k) = cur.iter().position(|x| x.is_negative()) {
            cur = self.reflect_unchecked(&cur, k);
            word.push(k);
        }
        Ok((cur, word))
    }

    pub fn reflect_root(&self, r: RootId, i: usize) -> RootId {
        let root = &self.roots[r];
        let mut c = root.simple.clone();
        c[i] -= root.weight[i];
        self.by_simple[&c]
    }

    pub fn apply_word_to_root(&self, r: RootId, word: &[usize]) -> RootId {
        word.iter().fold(r, |acc, &i| self.reflect_root(acc, i))
    }

    pub fn value(&self, f: &[Rational], r: RootId) -> Rational {
        self.roots[r].simple.iter().zip(f).map(|(&c, x)| rat(c) * x).sum()
    }

    /// The chamber on which the regular functional `f` is positive.
    pub fn chamber_of(&self, f: &[Rational]) -> Result<Chamber> {
        self.check_len(f.len())?;
        if (0..self.len()).any(|r| self.value(f, r).is_zero()) {
            return Err(Error::InvalidFunctional("functional is not regular".into()));
        }
        let mut cur = f.to_vec();
        let mut steps = Vec::new();
        // (s_i f)(α_k) = f(α_k) − C[i][k] f(α_i)
        while let Some(i) = cur.iter().position(|x| x.is_negative()) {
            let fi = cur[i].clone();
            for (k, x) in cur.iter_mut().enumerate() {
                *x -= &fi * rat(self.cartan[i][k]);
            }
            steps.push(i);
        }
        steps.reverse();
        let simple_roots = (0..self.rank()).map(|j| self.apply_word_to_root(j, &steps)).collect();
        let chamber = Chamber { word: steps, simple_roots };
        debug_assert!(chamber.simple_roots.iter().all(|&r| self.value(f, r).is_positive()));
        Ok(chamber)
    }

    pub fn base_chamber(&self) -> Chamber {
        Chamber { word: Vec::new(), simple_roots: (0..self.rank()).collect() }
    }

    /// Decomposes every root over `basis`; true iff each decomposition is
    /// integral with coefficients all ≥ 0 or all ≤ 0.
    pub fn is_simple_system(&self, basis: &[RootId]) -> bool {
        let l = self.rank();
        if basis.len() != l {
            return false;
        }
        // columns are the basis roots
        let m: Vec<Vec<Rational>> =
            (0..l).map(|i| basis.iter().map(|&b| rat(self.roots[b].simple[i])).collect()).collect();
        let Some(inv) = rational_inverse(&m) else { return false };
        self.roots.iter().all(|root| {
            let x: Vec<Rational> =
                inv.iter().map(|row| row.iter().zip(&root.simple).map(|(a, &c)| a * rat(c)).sum()).collect();
            x.iter().all(Rational::is_integer)
                && (x.iter().all(|v| !v.is_negative()) || x.iter().all(|v| !v.is_positive()))
        })
    }

    /// Elements of the positive system `p` that are not a sum of two of its
    /// elements.
    pub fn indecomposable_basis(&self, p: &[RootId]) -> Result<Vec<RootId>> {
        let set: BTreeSet<RootId> = p.iter().copied().collect();
        for &a in &set {
            if a >= self.len() {
                return Err(Error::IndexOutOfRange { index: a, bound: self.len() });
            }
            if set.contains(&self.negative(a)) {
                return Err(Error::NotAPositiveSystem("contains a root and its negative".into()));
            }
        }
        let mut decomposable = BTreeSet::new();
        for &a in &set {
            for &b in &set {
                if b <= a {
                    continue;
                }
                let sum: Vec<i64> =
                    self.roots[a].simple.iter().zip(&self.roots[b].simple).map(|(x, y)| x + y).collect();
                if let Some(s) = self.find_simple(&sum) {
                    if !set.contains(&s) {
                        return Err(Error::NotAPositiveSystem("not closed under addition".into()));
                    }
                    decomposable.insert(s);
                }
            }
        }
        Ok(set.difference(&decomposable).copied().collect())
    }

    /// Extends the simple system `sub_basis` of `ℛ′ = ker(a) ∩ ℛ` (taken
    /// relative to `b`) to a simple system of the whole root system, via the
    /// regular functional `a + ε b`.
    pub fn extend_to_simple_system(&self, sub_basis: &[RootId], a: &[Rational], b: &[Rational]) -> Result<Chamber> {
        self.check_len(a.len())?;
        self.check_len(b.len())?;
        let kernel: Vec<RootId> = (0..self.len()).filter(|&r| self.value(a, r).is_zero()).collect();
        if kernel.iter().any(|&r| self.value(b, r).is_zero()) {
            return Err(Error::InvalidFunctional("b is not regular on the kernel subsystem".into()));
        }
        let positive: Vec<RootId> = kernel.iter().copied().filter(|&r| self.value(b, r).is_positive()).collect();
        let expected = self.indecomposable_basis(&positive)?;
        let given: BTreeSet<RootId> = sub_basis.iter().copied().collect();
        if given != expected.iter().copied().collect() {
            return Err(Error::InvalidFunctional(
                "sub_basis is not the simple system of ker(a) ∩ ℛ relative to b".into(),
            ));
        }

        let eps = epsilon(self, a, b);
        let f: Functional = a.iter().zip(b).map(|(x, y)| x + &eps * y).collect();
        let chamber = self.chamber_of(&f)?;
        if !sub_basis.iter().all(|r| chamber.simple_roots.contains(r)) {
            return Err(Error::Defect("extended simple system does not contain the sub-basis".into()));
        }
        Ok(chamber)
    }
}

/// Half the minimum of `|α(a)|/|α(b)|` over roots with both values nonzero.
pub fn epsilon(rs: &RootSystem, a: &[Rational], b: &[Rational]) -> Rational {
    let half = Rational::new(1.into(), 2.into());
    rs.positive_ids()
        .filter_map(|r| {
            let va = rs.value(a, r);
            let vb = rs.value(b, r);
            (!va.is_zero() && !vb.is_zero()).then(|| va.abs() / vb.abs())
        })
        .min()
        .map_or(rat(1), |m| m * half)
}

fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_types() -> Vec<RootType> {
        let mut v = Vec::new();
        for l in 1..=8 {
            v.push(RootType::new(Series::A, l).unwrap());
        }
        for l in 2..=8 {
            v.push(RootType::new(Series::B, l).unwrap());
            v.push(RootType::new(Series::C, l).unwrap());
        }
        for l in 4..=8 {
            v.push(RootType::new(Series::D, l).unwrap());
        }
        for l in 6..=8 {
            v.push(RootType::new(Series::E, l).unwrap());
        }
        v.push(RootType::new(Series::F, 4).unwrap());
        v.push(RootType::new(Series::G, 2).unwrap());
        v
    }

    #[test]
    fn rejects_invalid_types() {
        assert!(RootType::new(Series::A, 0).is_err());
        assert!(RootType::new(Series::B, 1).is_err());
        assert!(RootType::new(Series::D, 3).is_err());
        assert!(RootType::new(Series::E, 5).is_err());
        assert!(RootType::new(Series::F, 3).is_err());
        assert!(RootType::new(Series::G, 3).is_err());
        assert!(RootType::new(Series::C, 2).is_ok());
    }

    #[test]
    fn cartan_invariants_and_counts() {
        for t in all_types() {
            let rs = RootSystem::new(t);
            let c = rs.cartan();
            let d = rs.symmetrizer();
            for i in 0..t.rank {
                assert_eq!(c[i][i], 2);
                for j in 0..t.rank {
                    if i != j {
                        assert!(c[i][j] <= 0);
                    }
                    assert_eq!(d[i] * c[i][j], d[j] * c[j][i], "{} not symmetrizable", t);
                }
            }
            assert_eq!(rs.num_positive(), t.positive_root_count(), "{}", t);
            assert_eq!(rs.len(), 2 * t.positive_root_count());
            // (ω_i | α_j^∨) = δ_ij and α_j's weight vector is column j of C
            for j in 0..t.rank {
                let w = rs.root(j).weight();
                for i in 0..t.rank {
                    assert_eq!(w[i], c[i][j]);
                    let mut omega = vec![0; t.rank];
                    omega[i] = 1;
                    assert_eq!(rs.pairing_int(&omega, j), i64::from(i == j));
                }
            }
        }
    }

    #[test]
    fn closure_and_negation() {
        for t in all_types() {
            let rs = RootSystem::new(t);
            for r in 0..rs.len() {
                let neg: Vec<i64> = rs.root(r).simple().iter().map(|x| -x).collect();
                assert_eq!(rs.find_simple(&neg), Some(rs.negative(r)));
                for i in 0..t.rank {
                    let s = rs.reflect(rs.root(r).weight(), i).unwrap();
                    assert!(rs.find_weight(&s).is_some());
                }
            }
        }
    }

    #[test]
    fn rank_one() {
        let rs = RootSystem::build(Series::A, 1).unwrap();
        assert_eq!(rs.len(), 2);
        assert_eq!(rs.root(0).simple(), &[1]);
        assert_eq!(rs.root(1).simple(), &[-1]);
    }

    #[test]
    fn b2_matches_euclidean_model() {
        // α1 = e1 − e2 (long), α2 = e2 (short); c1 α1 + c2 α2 = (c1, c2 − c1)
        let rs = RootSystem::build(Series::B, 2).unwrap();
        let mut vecs: Vec<(i64, i64)> =
            rs.roots().iter().map(|r| (r.simple()[0], r.simple()[1] - r.simple()[0])).collect();
        vecs.sort();
        let mut expected = vec![(1, 1), (1, -1), (-1, 1), (-1, -1), (1, 0), (-1, 0), (0, 1), (0, -1)];
        expected.sort();
        assert_eq!(vecs, expected);
        // Euclidean norms ‖e1 − e2‖² = 2, ‖e2‖² = 1, scaled by the global factor 2
        assert_eq!(rs.root(0).norm(), 4);
        assert_eq!(rs.root(1).norm(), 2);
        // (β | τ^∨) with β short, τ long: 2(e2·(e1−e2))/2 = −1
        let beta: Vec<Rational> = rs.root(1).weight().iter().map(|&x| rat(x)).collect();
        assert_eq!(rs.pairing(&beta, 0).unwrap(), rat(-1));
    }

    #[test]
    fn g2_against_bounded_enumeration() {
        let rs = RootSystem::build(Series::G, 2).unwrap();
        assert_eq!(rs.len(), 12);
        let short = 2 * rs.symmetrizer().iter().min().unwrap();
        let long = 2 * rs.symmetrizer().iter().max().unwrap();
        let mut brute = Vec::new();
        for a in -4i64..=4 {
            for b in -4i64..=4 {
                let n = rs.inner_simple(&[a, b], &[a, b]);
                if (n == short || n == long) && (a >= 0 && b >= 0 || a <= 0 && b <= 0) {
                    brute.push(vec![a, b]);
                }
            }
        }
        brute.sort();
        let mut ours: Vec<Vec<i64>> = rs.roots().iter().map(|r| r.simple().to_vec()).collect();
        ours.sort();
        assert_eq!(ours, brute);
        assert_eq!(rs.roots().iter().filter(|r| r.norm() == short).count(), 6);
        assert_eq!(rs.roots().iter().filter(|r| r.norm() == long).count(), 6);
    }

    #[test]
    fn reflection_examples() {
        let rs = RootSystem::build(Series::A, 3).unwrap();
        for i in 0..3 {
            let mut omega = vec![0i64; 3];
            omega[i] = 1;
            let s = rs.reflect(&omega, i).unwrap();
            let expected: Vec<i64> = omega.iter().zip(rs.root(i).weight()).map(|(a, b)| a - b).collect();
            assert_eq!(s, expected);
            for j in 0..3 {
                if j != i {
                    let mut oj = vec![0i64; 3];
                    oj[j] = 1;
                    assert_eq!(rs.reflect(&oj, i).unwrap(), oj);
                }
            }
            let neg: Vec<i64> = rs.root(i).weight().iter().map(|x| -x).collect();
            assert_eq!(rs.reflect(rs.root(i).weight(), i).unwrap(), neg);
        }
        assert!(rs.reflect(&[0i64, 0], 0).is_err());
        assert!(rs.reflect(&[0i64, 0, 0], 3).is_err());
    }

    #[test]
    fn make_dominant_examples() {
        for t in all_types() {
            let rs = RootSystem::new(t);
            let minus_rho = vec![rat(-1); t.rank];
            let (d, word) = rs.make_dominant(&minus_rho).unwrap();
            assert_eq!(d, vec![rat(1); t.rank]);
            assert_eq!(word.len(), rs.num_positive(), "{}", t);
            assert_eq!(rs.apply_word(&minus_rho, &word).unwrap(), d);
        }
        let rs = RootSystem::build(Series::A, 2).unwrap();
        let dominant = vec![rat(2), rat(0)];
        assert_eq!(rs.make_dominant(&dominant).unwrap(), (dominant.clone(), vec![]));
        // orbit of (−1, 2) under all six Weyl elements
        let v = vec![-1i64, 2];
        let words: [&[usize]; 6] = [&[], &[0], &[1], &[0, 1], &[1, 0], &[0, 1, 0]];
        let orbit: Vec<Vec<i64>> = words.iter().map(|w| rs.apply_word(&v, w).unwrap()).collect();
        let dominant_images: Vec<&Vec<i64>> = orbit.iter().filter(|x| x.iter().all(|&c| c >= 0)).collect();
        let (d, _) = rs.make_dominant(&v).unwrap();
        assert_eq!(dominant_images, vec![&d]);
        assert_eq!(d, vec![1, 1]);
    }

    #[test]
    fn indecomposables() {
        let rs = RootSystem::build(Series::B, 2).unwrap();
        assert!(rs.indecomposable_basis(&[]).unwrap().is_empty());
        let all: Vec<RootId> = rs.positive_ids().collect();
        assert_eq!(rs.indecomposable_basis(&all).unwrap(), vec![0, 1]);
        assert_eq!(rs.indecomposable_basis(&[0]).unwrap(), vec![0]);
        assert!(rs.indecomposable_basis(&[0, rs.negative(0)]).is_err());
        // {α1, α2} without α1 + α2 is not closed
        assert!(rs.indecomposable_basis(&[0, 1]).is_err());
    }

    #[test]
    fn extend_examples() {
        let rs = RootSystem::build(Series::B, 2).unwrap();
        // A regular, empty sub-basis: chamber of A
        let a = vec![rat(1), rat(1)];
        let ch = rs.extend_to_simple_system(&[], &a, &[rat(1), rat(0)]).unwrap();
        assert_eq!(ch, rs.chamber_of(&a).unwrap());
        // A = 0: sub-basis must be the full simple system of B
        let zero = vec![rat(0), rat(0)];
        let b = vec![rat(1), rat(1)];
        let ch = rs.extend_to_simple_system(&[0, 1], &zero, &b).unwrap();
        assert_eq!(ch, rs.chamber_of(&b).unwrap());
        // ℛ′ = {±τ}, A dual to ω
        let a = vec![rat(0), rat(1)];
        let ch = rs.extend_to_simple_system(&[0], &a, &[rat(1), rat(1)]).unwrap();
        assert!(ch.simple_roots.contains(&0));
        assert!(rs.is_simple_system(&ch.simple_roots));
        assert_eq!(ch.simple_roots, vec![0, 1]);
        // wrong sub-basis for this kernel
        assert!(rs.extend_to_simple_system(&[1], &a, &[rat(1), rat(1)]).is_err());
        // b vanishing on τ
        assert!(rs.extend_to_simple_system(&[0], &a, &[rat(0), rat(1)]).is_err());
    }

    #[test]
    fn nontrivial_chamber_word() {
        let rs = RootSystem::build(Series::A, 2).unwrap();
        let f = vec![rat(-1), rat(3)];
        let ch = rs.chamber_of(&f).unwrap();
        assert!(!ch.word.is_empty());
        assert!(rs.is_simple_system(&ch.simple_roots));
        for (j, &r) in ch.simple_roots.iter().enumerate() {
            assert_eq!(rs.apply_word_to_root(j, &ch.word), r);
        }
    }
}
