//! Parabolic subalgebras given by crossed nodes and the component groups of
//! their isotropy subgroups.
//!
//! For a set `Φ` of simple indices, `𝒬` is the set of roots whose
//! coefficients on `Φ` sum to a nonnegative number; `𝒬ʳ = 𝒬 ∩ −𝒬` and
//! `𝒬ⁿ = 𝒬 ∖ 𝒬ʳ`. The subsystem `ℛ′ = 𝒬ʳ ∩ σ(𝒬ʳ)` carries the reductive part
//! of `𝔮 ∩ σ(𝔮)`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::charcomp::pi0_fixed_character_subgroup;
use crate::intlin::{
    f2_in_span, hermite_basis, integer_left_kernel, rat, F2Matrix, F2Vec, FiniteAbelianGroup, IntMatrix, Rational,
};
use crate::realform::{RootKind, SigmaAction};
use crate::rootsys::{Chamber, Functional, RootId, RootSystem};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct ParabolicDatum<'a> {
    rs: &'a RootSystem,
    sa: &'a SigmaAction,
    phi: Vec<usize>,
    q_roots: Vec<RootId>,
    qr: Vec<RootId>,
    qn: Vec<RootId>,
    sigma_q: Vec<RootId>,
    rprime: Vec<RootId>,
    rprime_basis: Vec<RootId>,
    totally_real: bool,
}

fn phi_height(rs: &RootSystem, phi: &[usize], r: RootId) -> i64 {
    phi.iter().map(|&i| rs.root(r).simple()[i]).sum()
}

pub fn build_parabolic<'a>(rs: &'a RootSystem, sa: &'a SigmaAction, phi: &[usize]) -> Result<ParabolicDatum<'a>> {
    if sa.rank() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), found: sa.rank() });
    }
    let phi: Vec<usize> = phi.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    if let Some(&i) = phi.iter().find(|&&i| i >= rs.rank()) {
        return Err(Error::IndexOutOfRange { index: i, bound: rs.rank() });
    }
    let h = |r| phi_height(rs, &phi, r);
    let q_roots: Vec<RootId> = (0..rs.len()).filter(|&r| h(r) >= 0).collect();
    let qr: Vec<RootId> = q_roots.iter().copied().filter(|&r| h(r) == 0).collect();
    let qn: Vec<RootId> = q_roots.iter().copied().filter(|&r| h(r) > 0).collect();
    let mut sigma_q: Vec<RootId> = q_roots.iter().map(|&r| sa.sigma_root(r)).collect();
    sigma_q.sort_unstable();
    let totally_real = sigma_q == q_roots;
    let rprime: Vec<RootId> = qr.iter().copied().filter(|&r| h(sa.sigma_root(r)) == 0).collect();
    let positive: Vec<RootId> = rprime.iter().copied().filter(|&r| rs.root(r).is_positive()).collect();
    let rprime_basis = rs.indecomposable_basis(&positive)?;
    Ok(ParabolicDatum { rs, sa, phi, q_roots, qr, qn, sigma_q, rprime, rprime_basis, totally_real })
}

impl<'a> ParabolicDatum<'a> {
    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn sigma(&self) -> &'a SigmaAction {
        self.sa
    }

    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    pub fn q_roots(&self) -> &[RootId] {
        &self.q_roots
    }

    pub fn qr(&self) -> &[RootId] {
        &self.qr
    }

    pub fn qn(&self) -> &[RootId] {
        &self.qn
    }

    pub fn sigma_q(&self) -> &[RootId] {
        &self.sigma_q
    }

    pub fn rprime(&self) -> &[RootId] {
        &self.rprime
    }

    pub fn rprime_basis(&self) -> &[RootId] {
        &self.rprime_basis
    }

    pub fn is_totally_real(&self) -> bool {
        self.totally_real
    }

    pub fn m(&self) -> usize {
        self.rprime_basis.len()
    }

    pub fn z0_dim(&self) -> usize {
        self.rs.rank() - self.m()
    }

    /// Indices `i ∈ Φ` with `α_i` real.
    pub fn real_phi(&self) -> Vec<usize> {
        self.phi.iter().copied().filter(|&i| self.sa.kind(i) == RootKind::Real).collect()
    }

    /// Values of `Σ_{i∈Φ} ω_i`-dual functional on the simple roots.
    pub fn functional(&self) -> Functional {
        (0..self.rs.rank()).map(|i| rat(i64::from(self.phi.contains(&i)))).collect()
    }
}

/// Result of the Levi chamber change.
#[derive(Clone, Debug)]
pub struct LeviChamber {
    pub chamber: Chamber,
    pub epsilon: Rational,
    /// `A + εĀ` on the base simple roots.
    pub functional: Functional,
    /// σ on the new weight coordinates, `U⁻¹ S U`.
    pub s_prime: IntMatrix,
    /// `U`: columns are the new fundamental weights in base coordinates.
    pub u: IntMatrix,
    /// `Φ′ = {j : γ_j ∈ 𝒬ⁿ}`.
    pub phi_prime: Vec<usize>,
    /// Positions `j` with `γ_j` in the simple system of `ℛ′`.
    pub levi_positions: Vec<usize>,
    /// `root_relabel[α] = u⁻¹α`: the root with the same coordinates in the new chamber.
    pub root_relabel: Vec<RootId>,
    /// σ keeps its triangular Satake shape on the new simple roots.
    pub s_adapted: bool,
}

impl LeviChamber {
    pub fn is_identity(&self) -> bool {
        self.chamber.word.is_empty()
    }
}

pub fn levi_adapted_chamber(pd: &ParabolicDatum<'_>) -> Result<LeviChamber> {
    let rs = pd.rs;
    let sa = pd.sa;
    let l = rs.rank();
    let a = pd.functional();
    // Ā(α_j) = A(σα_j)
    let sig = sa.sigma_simple();
    let a_bar: Functional = (0..l).map(|j| (0..l).map(|i| rat(sig[i][j]) * &a[i]).sum()).collect();
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let epsilon = pd
        .qn
        .iter()
        .filter_map(|&r| {
            let ab = rs.value(&a_bar, r);
            (!ab.is_zero()).then(|| rs.value(&a, r) / ab.abs())
        })
        .min()
        .map_or_else(|| rat(1), |m| m * half);
    let functional: Functional = a.iter().zip(&a_bar).map(|(x, y)| x + &epsilon * y).collect();
    let height: Functional = vec![rat(1); l];
    let chamber = rs.extend_to_simple_system(&pd.rprime_basis, &functional, &height)?;

    let gamma = &chamber.simple_roots;
    if gamma.iter().any(|&g| phi_height(rs, &pd.phi, g) < 0) {
        return Err(Error::Defect("Levi chamber is not compatible with 𝒬".into()));
    }
    let levi_positions: Vec<usize> = (0..l).filter(|&j| pd.rprime_basis.contains(&gamma[j])).collect();
    if levi_positions.len() != pd.rprime_basis.len() {
        return Err(Error::Defect("Levi chamber does not contain the simple system of ℛ′".into()));
    }
    let phi_prime: Vec<usize> = (0..l).filter(|&j| phi_height(rs, &pd.phi, gamma[j]) > 0).collect();

    let inverse: Vec<usize> = chamber.word.iter().rev().copied().collect();
    let root_relabel: Vec<RootId> = (0..rs.len()).map(|r| rs.apply_word_to_root(r, &inverse)).collect();

    let units: Vec<Vec<i64>> = (0..l).map(|i| (0..l).map(|j| i64::from(i == j)).collect()).collect();
    let col_images = |word: &[usize]| -> Result<Vec<Vec<i64>>> {
        let cols: Vec<Vec<i64>> = units.iter().map(|e| rs.apply_word(e, word)).collect::<Result<_>>()?;
        Ok((0..l).map(|i| (0..l).map(|j| cols[j][i]).collect()).collect())
    };
    let u = IntMatrix::from_i64_rows(l, &col_images(&chamber.word)?);
    let u_inv = IntMatrix::from_i64_rows(l, &col_images(&inverse)?);
    if &u * &u_inv != IntMatrix::identity(l) {
        return Err(Error::Defect("Weyl word matrix is not invertible".into()));
    }
    let s_prime = &(&u_inv * sa.s()) * &u;

    let s_adapted = (0..l).all(|j| {
        let img = root_relabel[sa.sigma_root(gamma[j])];
        let c = rs.root(img).simple();
        if img == rs.negative(j) {
            return true;
        }
        // c = e_{j'} + nonnegative combination of new black simple roots
        let black: Vec<bool> = (0..l).map(|q| sa.sigma_root(gamma[q]) == rs.negative(gamma[q])).collect();
        let whites: Vec<usize> = (0..l).filter(|&q| !black[q] && c[q] != 0).collect();
        whites.len() == 1 && c[whites[0]] == 1 && (0..l).all(|q| c[q] >= 0)
    });

    Ok(LeviChamber { chamber, epsilon, functional, s_prime, u, phi_prime, levi_positions, root_relabel, s_adapted })
}

/// `ℤ₂^e` with `e = |{i ∈ Φ : α_i real}|`.
pub fn pi0_isotropy_totally_real(pd: &ParabolicDatum<'_>) -> Result<FiniteAbelianGroup> {
    if !pd.totally_real {
        return Err(Error::NotTotallyReal);
    }
    let l = pd.rs.rank();
    let gens = pd.real_phi().into_iter().map(|i| (0..l).map(|j| BigInt::from(i64::from(i == j))).collect()).collect();
    Ok(FiniteAbelianGroup::elementary_two_with_generators(gens))
}

/// Component group of `{χ ∈ Hom^σ(Π, ℂ*) : χ = 1 on Π ∩ E}` computed in the
/// Levi-adapted chamber, where `Π ∩ E` is spanned by the fundamental weights
/// dual to the simple roots of `ℛ′`.
pub fn pi0_isotropy(pd: &ParabolicDatum<'_>) -> Result<FiniteAbelianGroup> {
    let lc = levi_adapted_chamber(pd)?;
    let l = pd.rs.rank();
    let m: Vec<Vec<BigInt>> =
        lc.levi_positions.iter().map(|&j| (0..l).map(|i| BigInt::from(i64::from(i == j))).collect()).collect();
    Ok(pi0_fixed_character_subgroup(&lc.s_prime, &m))
}

/// Same group, computed in base coordinates with `Π ∩ E` obtained as an
/// integer kernel of the coroots of the non-Levi simple roots.
pub fn pi0_h_mod_h0(pd: &ParabolicDatum<'_>) -> Result<FiniteAbelianGroup> {
    let lc = levi_adapted_chamber(pd)?;
    let rs = pd.rs;
    let l = rs.rank();
    let others: Vec<RootId> =
        (0..l).filter(|j| !lc.levi_positions.contains(j)).map(|j| lc.chamber.simple_roots[j]).collect();
    // rows indexed by weight coordinates, columns by coroots
    let pairing: Vec<Vec<BigInt>> =
        (0..l).map(|i| others.iter().map(|&g| BigInt::from(rs.root(g).coroot()[i])).collect()).collect();
    let m = integer_left_kernel(&pairing, others.len());
    Ok(pi0_fixed_character_subgroup(pd.sa.s(), &m))
}

/// Rows: real simple roots in `Φ`; columns: sign coordinates `j ∈ Φ ∩ ℛ_re`.
#[derive(Clone, Debug)]
pub struct DeltaMap {
    pub sign_coords: Vec<usize>,
    pub row_roots: Vec<RootId>,
    pub matrix: F2Matrix,
}

impl DeltaMap {
    /// Rank equals `dim π₀(G₊)` and every generator lies in the row space.
    pub fn surjects_onto(&self, group: &FiniteAbelianGroup) -> bool {
        if !group.is_elementary_two() || self.matrix.rank() != group.rank() {
            return false;
        }
        let rows = self.matrix.rows();
        group.generators().is_none_or(|gens| {
            gens.iter().all(|g| {
                let v =
                    F2Vec::from_bools(&self.sign_coords.iter().map(|&j| g[j] != BigInt::zero()).collect::<Vec<_>>());
                f2_in_span(rows, &v)
            })
        })
    }
}

/// Sign vector `((−1)^{(ω_j|α^∨)})_j` of `δ(t_α)`, as exponents mod 2.
pub fn delta_sign_vector(pd: &ParabolicDatum<'_>, alpha: RootId) -> Result<F2Vec> {
    if alpha >= pd.rs.len() {
        return Err(Error::IndexOutOfRange { index: alpha, bound: pd.rs.len() });
    }
    if pd.sa.kind(alpha) != RootKind::Real {
        return Err(Error::NotARealRoot);
    }
    let coroot = pd.rs.root(alpha).coroot();
    Ok(F2Vec::from_bools(&pd.real_phi().iter().map(|&j| coroot[j] % 2 != 0).collect::<Vec<_>>()))
}

pub fn delta_map(pd: &ParabolicDatum<'_>) -> Result<DeltaMap> {
    if !pd.totally_real {
        return Err(Error::NotTotallyReal);
    }
    let sign_coords = pd.real_phi();
    let rows: Vec<F2Vec> = sign_coords.iter().map(|&i| delta_sign_vector(pd, i)).collect::<Result<_>>()?;
    Ok(DeltaMap { row_roots: sign_coords.clone(), matrix: F2Matrix::new(sign_coords.len(), rows), sign_coords })
}

/// The fundamental weights `ω_i, i ∈ Φ`, in weight coordinates.
pub fn parabolic_character_generators(pd: &ParabolicDatum<'_>) -> Vec<Vec<i64>> {
    let l = pd.rs.rank();
    pd.phi.iter().map(|&i| (0..l).map(|j| i64::from(i == j)).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionCertificate {
    pub holds: bool,
    /// Hermite basis of the image of `Π(ℛ)` in the coordinates of the
    /// fundamental weights of `ℛ′`.
    pub image_basis: Vec<Vec<BigInt>>,
}

/// Checks that projecting `Π(ℛ)` onto the span of `ℛ′` gives exactly `Π(ℛ′)`.
pub fn projected_weight_lattice_check(pd: &ParabolicDatum<'_>) -> Result<ProjectionCertificate> {
    let lc = levi_adapted_chamber(pd)?;
    let rs = pd.rs;
    let l = rs.rank();
    let levi: Vec<RootId> = lc.levi_positions.iter().map(|&j| lc.chamber.simple_roots[j]).collect();
    let m = levi.len();
    let images: Vec<Vec<BigInt>> =
        (0..l).map(|i| levi.iter().map(|&g| BigInt::from(rs.root(g).coroot()[i])).collect()).collect();
    let image_basis = hermite_basis(&images, m);
    let identity: Vec<Vec<BigInt>> =
        (0..m).map(|i| (0..m).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    Ok(ProjectionCertificate { holds: image_basis == identity, image_basis })
}
