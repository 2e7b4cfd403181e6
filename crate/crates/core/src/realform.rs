//! Conjugations of real forms from Satake data.
//!
//! A Satake datum is a set of black simple roots `τ_q` and an involution `ȷ`
//! of the white ones. The conjugation then acts on simple roots by
//! `σ(τ_q) = −τ_q` and `σ(β_i) = β_{ȷi} + Σ_q k_{i,q} τ_q`, where `k` is fixed by
//! requiring `σ` to be an isometric involution. On fundamental weights this
//! reads `σ(ω_i) = ω_{ȷi}` for white `i` and `σ(θ_p) = −θ_p + Σ_j k′_{j,p} ω_j`
//! with `k′_{j,p} = k_{j,p}‖τ_p‖²/‖β_j‖²`.
//!
//! Indices here are 0-based.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::intlin::{rat, rational_solve, IntMatrix, Rational, Solution};
use crate::rootsys::{RootId, RootSystem, RootType};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SatakeDatum {
    root_type: RootType,
    black: Vec<usize>,
    /// `arrows[i] = ȷ(i)`; black nodes map to themselves.
    arrows: Vec<usize>,
}

impl SatakeDatum {
    /// `pairs` lists the non-trivial orbits `{i, ȷ(i)}` of the arrow involution.
    pub fn new(root_type: RootType, black: &[usize], pairs: &[(usize, usize)]) -> Result<Self> {
        let l = root_type.rank;
        let mut is_black = vec![false; l];
        for &b in black {
            if b >= l {
                return Err(Error::IndexOutOfRange { index: b, bound: l });
            }
            if is_black[b] {
                return Err(Error::InvalidDatum(format!("black node {} listed twice", b + 1)));
            }
            is_black[b] = true;
        }
        let mut arrows: Vec<usize> = (0..l).collect();
        for &(i, j) in pairs {
            for x in [i, j] {
                if x >= l {
                    return Err(Error::IndexOutOfRange { index: x, bound: l });
                }
                if is_black[x] {
                    return Err(Error::InvalidDatum(format!("arrow endpoint {} is black", x + 1)));
                }
            }
            if i == j {
                continue;
            }
            if arrows[i] != i || arrows[j] != j {
                return Err(Error::InvalidDatum(format!(
                    "arrow {}<->{} conflicts with another arrow; the arrow map must be an involution",
                    i + 1,
                    j + 1
                )));
            }
            arrows[i] = j;
            arrows[j] = i;
        }
        let mut black = black.to_vec();
        black.sort_unstable();
        Ok(SatakeDatum { root_type, black, arrows })
    }

    /// All nodes white, trivial arrows.
    pub fn split(root_type: RootType) -> Self {
        SatakeDatum { root_type, black: Vec::new(), arrows: (0..root_type.rank).collect() }
    }

    /// All nodes black.
    pub fn compact(root_type: RootType) -> Self {
        SatakeDatum { root_type, black: (0..root_type.rank).collect(), arrows: (0..root_type.rank).collect() }
    }

    pub fn root_type(&self) -> RootType {
        self.root_type
    }

    pub fn black(&self) -> &[usize] {
        &self.black
    }

    pub fn is_black(&self, i: usize) -> bool {
        self.black.binary_search(&i).is_ok()
    }

    /// White nodes in increasing order.
    pub fn white(&self) -> Vec<usize> {
        (0..self.root_type.rank).filter(|&i| !self.is_black(i)).collect()
    }

    pub fn arrow(&self, i: usize) -> usize {
        self.arrows[i]
    }

    /// Arrow orbits `(i, j)` with `i < j`.
    pub fn arrow_pairs(&self) -> Vec<(usize, usize)> {
        self.arrows.iter().enumerate().filter(|&(i, &j)| i < j).map(|(i, &j)| (i, j)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootKind {
    Real,
    Imaginary,
    Complex,
}

impl fmt::Display for RootKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootKind::Real => "real",
            RootKind::Imaginary => "imaginary",
            RootKind::Complex => "complex",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    fn push(&mut self, name: &'static str, passed: bool, detail: String) {
        self.checks.push(Check { name, passed, detail });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Names of the checks run by [`validate_satake`], in order.
pub const CHECK_NAMES: [&str; 8] = [
    "arrow_diagram_symmetry",
    "k_nonnegative_integer",
    "k_arrow_invariant",
    "sigma_involution",
    "sigma_isometry",
    "sigma_permutes_roots",
    "kprime_integer",
    "positivity_non_imaginary",
];

#[derive(Clone, Debug)]
pub struct SigmaAction {
    satake: SatakeDatum,
    white: Vec<usize>,
    k: IntMatrix,
    kprime: IntMatrix,
    /// σ on simple-root coordinates (columns are images of simple roots).
    sigma_simple: Vec<Vec<i64>>,
    /// σ on weight coordinates (columns are images of fundamental weights).
    s: IntMatrix,
    root_perm: Vec<RootId>,
    kinds: Vec<RootKind>,
    fixed_omegas: Vec<usize>,
}

impl SigmaAction {
    pub fn satake(&self) -> &SatakeDatum {
        &self.satake
    }

    pub fn rank(&self) -> usize {
        self.satake.root_type.rank
    }

    /// Row order of `k` and `k′`.
    pub fn white(&self) -> &[usize] {
        &self.white
    }

    /// Column order of `k` and `k′`.
    pub fn black(&self) -> &[usize] {
        &self.satake.black
    }

    /// `a × b` matrix: `σ(β_i) − β_{ȷi} = Σ_q k[i][q] τ_q`.
    pub fn k(&self) -> &IntMatrix {
        &self.k
    }

    pub fn kprime(&self) -> &IntMatrix {
        &self.kprime
    }

    /// σ on weight coordinates; `s · λ` is `σ(λ)`.
    pub fn s(&self) -> &IntMatrix {
        &self.s
    }

    pub fn sigma_simple(&self) -> &[Vec<i64>] {
        &self.sigma_simple
    }

    pub fn sigma_root(&self, r: RootId) -> RootId {
        self.root_perm[r]
    }

    pub fn root_permutation(&self) -> &[RootId] {
        &self.root_perm
    }

    pub fn kind(&self, r: RootId) -> RootKind {
        self.kinds[r]
    }

    pub fn kinds(&self) -> &[RootKind] {
        &self.kinds
    }

    /// White indices fixed by the arrow involution, i.e. `σ(ω_i) = ω_i`.
    pub fn fixed_omegas(&self) -> &[usize] {
        &self.fixed_omegas
    }

    /// (real, imaginary, complex) counts over all roots.
    pub fn kind_counts(&self) -> (usize, usize, usize) {
        let count = |k| self.kinds.iter().filter(|&&x| x == k).count();
        (count(RootKind::Real), count(RootKind::Imaginary), count(RootKind::Complex))
    }

    pub fn apply_to_weight(&self, lambda: &[BigInt]) -> Vec<BigInt> {
        (0..self.rank()).map(|i| self.s.row(i).iter().zip(lambda).map(|(a, b)| a * b).sum()).collect()
    }
}

pub fn classify_root(sa: &SigmaAction, r: RootId) -> RootKind {
    sa.kind(r)
}

/// `(S, k′)` for a validated action.
pub fn sigma_on_weights(sa: &SigmaAction) -> (IntMatrix, IntMatrix) {
    (sa.s.clone(), sa.kprime.clone())
}

pub fn validate_satake(d: &SatakeDatum, rs: &RootSystem) -> ValidationReport {
    analyze(d, rs).0
}

pub fn derive_sigma(d: &SatakeDatum, rs: &RootSystem) -> Result<SigmaAction> {
    let (report, action) = analyze(d, rs);
    match action {
        Some(sa) if report.passed() => Ok(sa),
        _ => Err(Error::InvalidSatake(report)),
    }
}

fn to_i64(x: &Rational) -> Option<i64> {
    x.is_integer().then(|| i64::try_from(x.to_integer()).ok()).flatten()
}

fn analyze(d: &SatakeDatum, rs: &RootSystem) -> (ValidationReport, Option<SigmaAction>) {
    let mut report = ValidationReport::default();
    let l = rs.rank();
    if d.root_type != rs.root_type() {
        report.push(
            "root_type",
            false,
            format!("datum is for {} but the root system is {}", d.root_type, rs.root_type()),
        );
        return (report, None);
    }
    let black = d.black.clone();
    let white = d.white();
    let cartan = rs.cartan();
    let norm = |i: usize| rs.root(i).norm();

    let mut asym = Vec::new();
    for &i in &white {
        if norm(i) != norm(d.arrow(i)) {
            asym.push(format!("|α{}| != |α{}|", i + 1, d.arrow(i) + 1));
        }
        for &j in &white {
            if cartan[i][j] != cartan[d.arrow(i)][d.arrow(j)] {
                asym.push(format!("C[{}][{}]", i + 1, j + 1));
            }
        }
    }
    report.push("arrow_diagram_symmetry", asym.is_empty(), asym.join(", "));

    // Gram system G k_i = −(b_i + b_{ȷi})
    let gram: Vec<Vec<Rational>> =
        black.iter().map(|&p| black.iter().map(|&q| rat(rs.inner(p, q))).collect()).collect();
    let mut k_rat: Vec<Vec<Rational>> = Vec::with_capacity(white.len());
    for &i in &white {
        let rhs: Vec<Rational> = black.iter().map(|&q| -rat(rs.inner(i, q) + rs.inner(d.arrow(i), q))).collect();
        match rational_solve(&gram, &rhs) {
            Solution::Unique(x) => k_rat.push(x),
            _ if black.is_empty() => k_rat.push(Vec::new()),
            _ => unreachable!("Gram matrix of simple roots is nonsingular"),
        }
    }

    let mut bad_k = Vec::new();
    for (row, &i) in k_rat.iter().zip(&white) {
        for (x, &q) in row.iter().zip(&black) {
            if !x.is_integer() || x.is_negative() {
                bad_k.push(format!("k[{}][{}] = {}", i + 1, q + 1, x));
            }
        }
    }
    let k_ok = bad_k.is_empty();
    report.push("k_nonnegative_integer", k_ok, bad_k.join(", "));

    let pos_of = |i: usize| white.binary_search(&i).unwrap();
    let mut asym_k = Vec::new();
    for (a, &i) in white.iter().enumerate() {
        if k_rat[a] != k_rat[pos_of(d.arrow(i))] {
            asym_k.push(format!("rows {} and {}", i + 1, d.arrow(i) + 1));
        }
    }
    report.push("k_arrow_invariant", asym_k.is_empty(), asym_k.join(", "));

    // σ on simple coordinates, rational
    let mut sig = vec![vec![Rational::zero(); l]; l];
    for &q in &black {
        sig[q][q] = rat(-1);
    }
    for (a, &i) in white.iter().enumerate() {
        sig[d.arrow(i)][i] += Rational::one();
        for (x, &q) in k_rat[a].iter().zip(&black) {
            sig[q][i] += x;
        }
    }
    let sq = rat_mul(&sig, &sig);
    let involution = (0..l).all(|i| (0..l).all(|j| sq[i][j] == rat(i64::from(i == j))));
    report.push("sigma_involution", involution, if involution { String::new() } else { "σ∘σ ≠ id".into() });

    // Σᵀ B Σ = B with B_ij = d_i C_ij
    let form: Vec<Vec<Rational>> =
        (0..l).map(|i| (0..l).map(|j| rat(rs.symmetrizer()[i] * cartan[i][j])).collect()).collect();
    let sig_t: Vec<Vec<Rational>> = (0..l).map(|i| (0..l).map(|j| sig[j][i].clone()).collect()).collect();
    let isometry = rat_mul(&rat_mul(&sig_t, &form), &sig) == form;
    report.push(
        "sigma_isometry",
        isometry,
        if isometry { String::new() } else { "σ does not preserve the form".into() },
    );

    let sig_int: Option<Vec<Vec<i64>>> = sig.iter().map(|row| row.iter().map(to_i64).collect()).collect();
    let mut root_perm = Vec::with_capacity(rs.len());
    let mut perm_detail = String::new();
    if let Some(si) = &sig_int {
        for r in 0..rs.len() {
            let c = rs.root(r).simple();
            let img: Vec<i64> = si.iter().map(|row| row.iter().zip(c).map(|(a, b)| a * b).sum()).collect();
            match rs.find_simple(&img) {
                Some(t) => root_perm.push(t),
                None => {
                    perm_detail = format!("σ({:?}) = {:?} is not a root", c, img);
                    break;
                }
            }
        }
    } else {
        perm_detail = "σ is not integral on the root lattice".into();
    }
    let permutes = perm_detail.is_empty();
    report.push("sigma_permutes_roots", permutes, perm_detail);

    // k′_{j,p} = k_{j,p} d_{τ_p} / d_{β_j}
    let dsym = rs.symmetrizer();
    let kprime_rat: Vec<Vec<Rational>> = k_rat
        .iter()
        .zip(&white)
        .map(|(row, &j)| row.iter().zip(&black).map(|(x, &p)| x * rat(dsym[p]) / rat(dsym[j])).collect())
        .collect();
    let bad_kp: Vec<String> = kprime_rat
        .iter()
        .zip(&white)
        .flat_map(|(row, &j)| {
            row.iter()
                .zip(&black)
                .filter(|(x, _)| !x.is_integer())
                .map(move |(x, &p)| format!("k′[{}][{}] = {}", j + 1, p + 1, x))
        })
        .collect();
    report.push("kprime_integer", bad_kp.is_empty(), bad_kp.join(", "));

    let mut kinds = Vec::new();
    let mut positivity = permutes;
    let mut pos_detail = if permutes { String::new() } else { "not evaluated: σ does not permute the roots".into() };
    if permutes {
        for r in 0..rs.len() {
            let t = root_perm[r];
            kinds.push(if t == r {
                RootKind::Real
            } else if t == rs.negative(r) {
                RootKind::Imaginary
            } else {
                RootKind::Complex
            });
        }
        for r in rs.positive_ids() {
            if kinds[r] != RootKind::Imaginary && !rs.root(root_perm[r]).is_positive() {
                positivity = false;
                pos_detail = format!("σ maps positive {:?} to a negative root", rs.root(r).simple());
                break;
            }
        }
    }
    report.push("positivity_non_imaginary", positivity, pos_detail);

    if !report.passed() {
        return (report, None);
    }

    let k_int: Vec<Vec<i64>> = k_rat.iter().map(|row| row.iter().map(|x| to_i64(x).unwrap()).collect()).collect();
    let kp_int: Vec<Vec<i64>> = kprime_rat.iter().map(|row| row.iter().map(|x| to_i64(x).unwrap()).collect()).collect();

    // columns: σω_i = ω_{ȷi} (white), σθ_p = −θ_p + Σ_j k′_{j,p} ω_j (black)
    let mut s = vec![vec![0i64; l]; l];
    for &i in &white {
        s[d.arrow(i)][i] = 1;
    }
    for (b, &p) in black.iter().enumerate() {
        s[p][p] = -1;
        for (a, &j) in white.iter().enumerate() {
            s[j][p] += kp_int[a][b];
        }
    }
    let sig_int = sig_int.unwrap();
    // weight coords are C·(simple coords), so S·C = C·Σ
    let sc = int_mul(&s, cartan);
    let cs = int_mul(cartan, &sig_int);
    if sc != cs {
        report.push("weight_action_consistent", false, "S·C ≠ C·Σ".into());
        return (report, None);
    }

    let fixed_omegas = white.iter().copied().filter(|&i| d.arrow(i) == i).collect();
    let action = SigmaAction {
        satake: d.clone(),
        k: IntMatrix::from_i64_rows(black.len(), &k_int),
        kprime: IntMatrix::from_i64_rows(black.len(), &kp_int),
        white,
        sigma_simple: sig_int,
        s: IntMatrix::from_i64_rows(l, &s),
        root_perm,
        kinds,
        fixed_omegas,
    };
    (report, Some(action))
}

fn rat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter().map(|row| (0..n).map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum()).collect()).collect()
}

pub(crate) fn int_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter().map(|row| (0..n).map(|j| row.iter().zip(b).map(|(x, brow)| x * brow[j]).sum()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Series;

    pub(crate) fn b2_example() -> (RootSystem, SigmaAction) {
        let rs = RootSystem::build(Series::B, 2).unwrap();
        let d = SatakeDatum::new(rs.root_type(), &[0], &[]).unwrap();
        let sa = derive_sigma(&d, &rs).unwrap();
        (rs, sa)
    }

    #[test]
    fn b2_example_sigma() {
        let (rs, sa) = b2_example();
        assert_eq!(sa.k(), &IntMatrix::from_i64_rows(1, &[vec![1]]));
        assert_eq!(sa.kprime(), &IntMatrix::from_i64_rows(1, &[vec![2]]));
        // σβ = β + τ
        let beta_img = rs.root(sa.sigma_root(1)).simple().to_vec();
        assert_eq!(beta_img, vec![1, 1]);
        // columns σθ = −θ + 2ω and σω = ω
        assert_eq!(sa.s(), &IntMatrix::from_i64_rows(2, &[vec![-1, 0], vec![2, 1]]));
        assert_eq!(sa.fixed_omegas(), &[1]);
        assert_eq!(classify_root(&sa, 0), RootKind::Imaginary);
        assert_eq!(classify_root(&sa, 1), RootKind::Complex);
        let tau_2beta = rs.find_simple(&[1, 2]).unwrap();
        assert_eq!(classify_root(&sa, tau_2beta), RootKind::Real);
    }

    #[test]
    fn split_and_compact() {
        for (s, l) in [(Series::A, 3), (Series::E, 8), (Series::G, 2), (Series::C, 3)] {
            let rs = RootSystem::build(s, l).unwrap();
            let split = derive_sigma(&SatakeDatum::split(rs.root_type()), &rs).unwrap();
            assert_eq!(split.s(), &IntMatrix::identity(l));
            assert_eq!(split.k().cols(), 0);
            assert_eq!(split.kind_counts(), (rs.len(), 0, 0));
            let compact = derive_sigma(&SatakeDatum::compact(rs.root_type()), &rs).unwrap();
            let minus: Vec<Vec<i64>> = (0..l).map(|i| (0..l).map(|j| -i64::from(i == j)).collect()).collect();
            assert_eq!(compact.s(), &IntMatrix::from_i64_rows(l, &minus));
            assert_eq!(compact.kind_counts(), (0, rs.len(), 0));
            assert!(compact.fixed_omegas().is_empty());
        }
    }

    #[test]
    fn su21_swap() {
        let rs = RootSystem::build(Series::A, 2).unwrap();
        let d = SatakeDatum::new(rs.root_type(), &[], &[(0, 1)]).unwrap();
        let sa = derive_sigma(&d, &rs).unwrap();
        assert_eq!(sa.s(), &IntMatrix::from_i64_rows(2, &[vec![0, 1], vec![1, 0]]));
        assert_eq!(sa.kind_counts(), (2, 0, 4));
    }

    #[test]
    fn a3_with_two_black_nodes_fails() {
        // k = (2/3, 4/3)
        let rs = RootSystem::build(Series::A, 3).unwrap();
        let d = SatakeDatum::new(rs.root_type(), &[0, 1], &[]).unwrap();
        let report = validate_satake(&d, &rs);
        assert!(!report.passed());
        assert!(!report.check("k_nonnegative_integer").unwrap().passed);
        assert!(!report.check("sigma_permutes_roots").unwrap().passed);
        assert!(matches!(derive_sigma(&d, &rs), Err(Error::InvalidSatake(_))));
    }

    #[test]
    fn a2_single_black_node_is_a_valid_involution() {
        // σ = s_1: an involution of ℛ with the required triangular shape
        let rs = RootSystem::build(Series::A, 2).unwrap();
        let d = SatakeDatum::new(rs.root_type(), &[0], &[]).unwrap();
        assert!(validate_satake(&d, &rs).passed());
    }

    #[test]
    fn datum_structure_errors() {
        let t = RootType::new(Series::A, 3).unwrap();
        assert!(SatakeDatum::new(t, &[3], &[]).is_err());
        assert!(SatakeDatum::new(t, &[1, 1], &[]).is_err());
        assert!(SatakeDatum::new(t, &[1], &[(0, 1)]).is_err());
        assert!(SatakeDatum::new(t, &[], &[(0, 2), (0, 1)]).is_err());
        let d = SatakeDatum::new(t, &[], &[(0, 2)]).unwrap();
        assert_eq!(d.arrow_pairs(), vec![(0, 2)]);
    }

    #[test]
    fn asymmetric_arrow_fails() {
        // B3 nodes 1 (long) and 3 (short) cannot be swapped
        let rs = RootSystem::build(Series::B, 3).unwrap();
        let d = SatakeDatum::new(rs.root_type(), &[], &[(0, 2)]).unwrap();
        let report = validate_satake(&d, &rs);
        assert!(!report.check("arrow_diagram_symmetry").unwrap().passed);
    }
}
