//! Component groups of Cartan subgroups.
//!
//! For an intermediate lattice `Λ(ℛ) ⊆ 𝓛 ⊆ Π(ℛ)` the component group of the
//! Cartan subgroup `H_𝓛` is `A / A_𝓛`, where, with `c` the number of
//! σ-fixed fundamental weights,
//!
//! * `A ⊆ ℤ₂^c` is cut out by `Σ_i k′_{i,p} η_i ≡ 0 (mod 2)` for every black `p`;
//! * `A_𝓛 ⊆ A` additionally requires `Σ_i k_i η_i ≡ 0 (mod 2)` whenever
//!   `Σ_i k_i ω_i ∈ 𝓛`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::intlin::{
    f2_complement, f2_nullspace, f2_span_basis, hermite_basis, lattice_contains, lattice_index,
    lattice_intersect_coordinate_subspace, to_big, torsion_invariants, F2Matrix, F2Vec, FiniteAbelianGroup, IntMatrix,
};
use crate::realform::SigmaAction;
use crate::rootsys::RootSystem;
use crate::{Error, Result};

/// Largest `c` accepted by [`brute_force_pi0`].
pub const BRUTE_FORCE_MAX_C: usize = 16;
/// Largest coefficient box `e^c` scanned by [`brute_force_pi0`].
pub const BRUTE_FORCE_MAX_BOX: usize = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LatticeSpec {
    /// `Π(ℛ)`.
    Full,
    /// `Λ(ℛ)`.
    Root,
    /// `Λ(ℛ)` plus the given weight-coordinate generators.
    Generated(Vec<Vec<i64>>),
}

/// A σ-stable lattice between the root and weight lattices, stored by its
/// Hermite basis in weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    basis: Vec<Vec<BigInt>>,
    dim: usize,
}

impl Lattice {
    pub fn new(spec: &LatticeSpec, rs: &RootSystem, sa: &SigmaAction) -> Result<Self> {
        let l = rs.rank();
        let mut gens = root_lattice_generators(rs);
        match spec {
            LatticeSpec::Full => gens.extend((0..l).map(|i| unit(l, i))),
            LatticeSpec::Root => {}
            LatticeSpec::Generated(extra) => {
                for g in extra {
                    if g.len() != l {
                        return Err(Error::DimensionMismatch { expected: l, found: g.len() });
                    }
                    gens.push(to_big(g));
                }
            }
        }
        Self::from_generators(&gens, l, sa)
    }

    /// `gens` must contain generators of `Λ(ℛ)`.
    pub fn from_generators(gens: &[Vec<BigInt>], dim: usize, sa: &SigmaAction) -> Result<Self> {
        let basis = hermite_basis(gens, dim);
        if basis.len() != dim {
            return Err(Error::InvalidLattice("generators do not span a full-rank lattice".into()));
        }
        let lattice = Lattice { basis, dim };
        for b in &lattice.basis {
            if !lattice.contains(&sa.apply_to_weight(b)) {
                return Err(Error::InvalidLattice("lattice is not σ-stable".into()));
            }
        }
        Ok(lattice)
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        lattice_contains(&self.basis, v)
    }

    /// Index in `Π(ℛ)`.
    pub fn index_in_weights(&self) -> BigInt {
        lattice_index(&self.basis, self.dim).expect("full rank")
    }
}

fn unit(l: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); l];
    v[i] = BigInt::one();
    v
}

/// Weight vectors of the simple roots.
pub fn root_lattice_generators(rs: &RootSystem) -> Vec<Vec<BigInt>> {
    (0..rs.rank()).map(|j| to_big(rs.root(j).weight())).collect()
}

/// Hermite bases of all lattices between `Λ(ℛ)` and `Π(ℛ)`, one per subgroup
/// of `Π/Λ`. Π/Λ has at most two cyclic factors, so two generators suffice.
pub fn intermediate_lattices(rs: &RootSystem) -> Vec<Vec<Vec<BigInt>>> {
    let l = rs.rank();
    let root = root_lattice_generators(rs);
    let quotient = torsion_invariants(&IntMatrix::from_rows(l, &root));
    let factors: Vec<usize> = quotient.invariant_factors().iter().map(|d| d.to_usize().unwrap()).collect();
    let gens = quotient.generators().unwrap_or(&[]).to_vec();

    let mut elements: Vec<Vec<BigInt>> = Vec::new();
    let mut coeffs = vec![0usize; factors.len()];
    loop {
        let mut v = vec![BigInt::zero(); l];
        for (a, g) in coeffs.iter().zip(&gens) {
            for (vj, gj) in v.iter_mut().zip(g) {
                *vj += BigInt::from(*a) * gj;
            }
        }
        elements.push(v);
        let Some(pos) = (0..factors.len()).find(|&i| coeffs[i] + 1 < factors[i]) else { break };
        coeffs[pos] += 1;
        coeffs[..pos].iter_mut().for_each(|c| *c = 0);
    }

    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for x in &elements {
        for y in &elements {
            let mut g = root.clone();
            g.push(x.clone());
            g.push(y.clone());
            let basis = hermite_basis(&g, l);
            if seen.insert(basis.clone()) {
                out.push(basis);
            }
        }
    }
    out.sort_by_key(|b| lattice_index(b, l).unwrap());
    out
}

/// A subspace of `ℤ₂^c` given by an echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Subspace {
    pub ambient: usize,
    pub basis: Vec<F2Vec>,
}

impl F2Subspace {
    fn new(ambient: usize, vectors: &[F2Vec]) -> Self {
        F2Subspace { ambient, basis: f2_span_basis(vectors, ambient) }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn kprime_constraints(sa: &SigmaAction) -> Vec<F2Vec> {
    let fixed = sa.fixed_omegas();
    let kp = sa.kprime();
    (0..kp.cols())
        .map(|p| {
            let bits: Vec<bool> = fixed
                .iter()
                .map(|i| {
                    let row = sa.white().binary_search(i).unwrap();
                    kp[(row, p)].is_odd()
                })
                .collect();
            F2Vec::from_bools(&bits)
        })
        .collect()
}

fn lattice_constraints(sa: &SigmaAction, lattice: &Lattice) -> Vec<F2Vec> {
    let fixed = sa.fixed_omegas();
    lattice_intersect_coordinate_subspace(lattice.basis(), lattice.dim(), fixed)
        .iter()
        .map(|v| F2Vec::from_bools(&fixed.iter().map(|&i| v[i].is_odd()).collect::<Vec<_>>()))
        .collect()
}

pub fn group_a(sa: &SigmaAction) -> F2Subspace {
    let c = sa.fixed_omegas().len();
    let m = F2Matrix::new(c, kprime_constraints(sa));
    F2Subspace::new(c, &f2_nullspace(&m))
}

pub fn group_a_l(sa: &SigmaAction, lattice: &Lattice) -> F2Subspace {
    let c = sa.fixed_omegas().len();
    let mut rows = kprime_constraints(sa);
    rows.extend(lattice_constraints(sa, lattice));
    F2Subspace::new(c, &f2_nullspace(&F2Matrix::new(c, rows)))
}

fn sign_vector(sa: &SigmaAction, eta: &F2Vec) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); sa.rank()];
    for (pos, &i) in sa.fixed_omegas().iter().enumerate() {
        if eta.get(pos) {
            v[i] = BigInt::one();
        }
    }
    v
}

/// `π₀(H_𝓛) ≅ A / A_𝓛`. Generators are 0/1 vectors over the simple indices
/// marking the fixed `ω_i` on which the representing character is negative.
pub fn pi0_cartan(sa: &SigmaAction, lattice: &Lattice) -> FiniteAbelianGroup {
    let a = group_a(sa);
    let al = group_a_l(sa, lattice);
    let reps = f2_complement(&al.basis, &a.basis, a.ambient);
    debug_assert_eq!(reps.len(), a.dim() - al.dim());
    FiniteAbelianGroup::elementary_two_with_generators(reps.iter().map(|e| sign_vector(sa, e)).collect())
}

/// Component group of `{χ ∈ Hom^σ(Π, ℂ*) : χ(μ) = 1 for μ ∈ M}` as the torsion
/// of `ℤ^ℓ` modulo the rows of `[Sᵀ + I ; M]`.
pub fn pi0_fixed_character_subgroup(s: &IntMatrix, m: &[Vec<BigInt>]) -> FiniteAbelianGroup {
    let l = s.rows();
    let mut k = s.transpose();
    for i in 0..l {
        k[(i, i)] += 1;
    }
    let k = k.vstack(&IntMatrix::from_rows(l, m));
    torsion_invariants(&k)
}

/// Exponent of `Π/Λ`.
pub fn weight_root_exponent(rs: &RootSystem) -> BigInt {
    let q = torsion_invariants(&IntMatrix::from_rows(rs.rank(), &root_lattice_generators(rs)));
    q.invariant_factors().last().cloned().unwrap_or_else(BigInt::one)
}

/// Enumerative evaluation of `A / A_𝓛`, independent of the F2 and lattice
/// intersection machinery.
pub fn brute_force_pi0(sa: &SigmaAction, rs: &RootSystem, lattice: &Lattice) -> Result<FiniteAbelianGroup> {
    let fixed = sa.fixed_omegas();
    let c = fixed.len();
    if c > BRUTE_FORCE_MAX_C {
        return Err(Error::TooLarge { what: "c", value: c, limit: BRUTE_FORCE_MAX_C });
    }
    let l = sa.rank();
    let white = sa.white();
    let kp = sa.kprime();

    let in_a = |eta: u32| {
        (0..kp.cols()).all(|p| {
            let s: BigInt = fixed
                .iter()
                .enumerate()
                .filter(|(pos, _)| eta >> pos & 1 == 1)
                .map(|(_, i)| kp[(white.binary_search(i).unwrap(), p)].clone())
                .sum();
            s.is_even()
        })
    };
    let a: Vec<u32> = (0..1u32 << c).filter(|&eta| in_a(eta)).collect();

    let e = weight_root_exponent(rs).to_usize().unwrap();
    let box_size = e.checked_pow(c as u32).unwrap_or(usize::MAX);
    if box_size > BRUTE_FORCE_MAX_BOX {
        return Err(Error::TooLarge { what: "coefficient box", value: box_size, limit: BRUTE_FORCE_MAX_BOX });
    }
    // parity classes of Σ k_i ω_i ∈ 𝓛, as bitmasks over fixed positions
    let mut conditions: BTreeSet<u32> = BTreeSet::new();
    if e % 2 == 1 {
        conditions.extend((0..c).map(|pos| 1u32 << pos));
    }
    let mut k = vec![0usize; c];
    loop {
        let mask: u32 = k.iter().enumerate().filter(|(_, x)| *x % 2 == 1).map(|(pos, _)| 1u32 << pos).sum();
        if mask != 0 && !conditions.contains(&mask) {
            let mut v = vec![BigInt::zero(); l];
            for (pos, &i) in fixed.iter().enumerate() {
                v[i] = BigInt::from(k[pos]);
            }
            if lattice.contains(&v) {
                conditions.insert(mask);
            }
        }
        let Some(pos) = (0..c).find(|&i| k[i] + 1 < e) else { break };
        k[pos] += 1;
        k[..pos].iter_mut().for_each(|x| *x = 0);
    }
    let a_l: Vec<u32> =
        a.iter().copied().filter(|&eta| conditions.iter().all(|&m| (eta & m).count_ones() % 2 == 0)).collect();

    // cosets of A_𝓛 in A
    let mut covered: BTreeSet<u32> = BTreeSet::new();
    let mut reps = Vec::new();
    for &eta in &a {
        if covered.contains(&eta) {
            continue;
        }
        reps.push(eta);
        covered.extend(a_l.iter().map(|&x| x ^ eta));
    }
    let cosets = reps.len();
    if !cosets.is_power_of_two() {
        return Err(Error::Defect("coset count is not a power of two".into()));
    }
    Ok(FiniteAbelianGroup::elementary_two(cosets.trailing_zeros() as usize))
}
