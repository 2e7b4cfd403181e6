//! Cross-check suites run by `cartan-pi0 selftest`.

use std::time::Instant;

use cartan_pi0_core::charcomp::{
    brute_force_pi0, group_a, intermediate_lattices, pi0_cartan, pi0_fixed_character_subgroup, Lattice,
};
use cartan_pi0_core::intlin::{rat, rat_frac, smith_normal_form, FiniteAbelianGroup, IntMatrix, Rational};
use cartan_pi0_core::parabolic::{
    build_parabolic, delta_map, pi0_h_mod_h0, pi0_isotropy, pi0_isotropy_totally_real, projected_weight_lattice_check,
};
use cartan_pi0_core::realform::{derive_sigma, validate_satake, SatakeDatum, SigmaAction};
use cartan_pi0_core::rootsys::{RootSystem, RootType, Series};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::catalog::Catalog;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Depth {
    Small,
    Full,
}

#[derive(Clone, Copy, Debug)]
pub struct SelftestOptions {
    pub depth: Depth,
    pub seed: u64,
    /// Adds a suite that always fails; used to test the exit status.
    pub inject_failure: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
    pub elapsed_ms: u64,
}

struct Limits {
    oracle_rank: usize,
    two_path_rank: usize,
    parabolic_rank: usize,
    projection_rank: usize,
    random_cases: usize,
}

impl Depth {
    fn limits(self) -> Limits {
        match self {
            Depth::Small => {
                Limits { oracle_rank: 4, two_path_rank: 8, parabolic_rank: 3, projection_rank: 4, random_cases: 50 }
            }
            Depth::Full => {
                Limits { oracle_rank: 6, two_path_rank: 8, parabolic_rank: 4, projection_rank: 6, random_cases: 500 }
            }
        }
    }
}

struct Suite {
    name: &'static str,
    cases: usize,
    failures: Vec<String>,
    start: Instant,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite { name, cases: 0, failures: Vec::new(), start: Instant::now() }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        }
    }

    fn finish(self) -> SuiteResult {
        SuiteResult {
            name: self.name.to_string(),
            passed: self.failures.is_empty(),
            cases: self.cases,
            failures: self.failures,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
        }
    }
}

fn forms(catalog: &Catalog, max_rank: usize) -> Vec<(String, RootSystem, SigmaAction)> {
    catalog
        .entries()
        .iter()
        .filter(|e| e.rank <= max_rank)
        .filter_map(|e| e.instantiate().ok().map(|(rs, sa)| (e.name.clone(), rs, sa)))
        .collect()
}

fn subsets(l: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..1u32 << l).map(move |mask| (0..l).filter(|i| mask >> i & 1 == 1).collect())
}

pub fn run_selftest(catalog: &Catalog, opts: &SelftestOptions) -> Vec<SuiteResult> {
    let lim = opts.depth.limits();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut out = Vec::new();

    let mut s = Suite::new("catalog_validation");
    for e in catalog.entries() {
        let ok = match (e.root_type(), e.datum()) {
            (Ok(t), Ok(d)) => validate_satake(&d, &RootSystem::new(t)).passed(),
            _ => false,
        };
        s.expect(ok, || e.name.clone());
    }
    out.push(s.finish());

    let mut s = Suite::new("oracle_equivalence");
    for (name, rs, sa) in forms(catalog, lim.oracle_rank) {
        for basis in intermediate_lattices(&rs) {
            let Ok(lat) = Lattice::from_generators(&basis, rs.rank(), &sa) else { continue };
            let g = pi0_cartan(&sa, &lat);
            let ok = brute_force_pi0(&sa, &rs, &lat).is_ok_and(|b| b == g);
            s.expect(ok, || format!("{} index {}", name, lat.index_in_weights()));
        }
    }
    out.push(s.finish());

    let mut s = Suite::new("two_path_agreement");
    for (name, _, sa) in forms(catalog, lim.two_path_rank) {
        let g = pi0_fixed_character_subgroup(sa.s(), &[]);
        s.expect(g.is_elementary_two() && g.rank() == group_a(&sa).dim(), || name.clone());
    }
    out.push(s.finish());

    let mut s = Suite::new("totally_real_parabolics");
    let mut sweep: Vec<(String, RootSystem, SigmaAction)> = forms(catalog, lim.parabolic_rank);
    for t in all_types(lim.parabolic_rank) {
        let rs = RootSystem::new(t);
        if let Ok(sa) = derive_sigma(&SatakeDatum::split(t), &rs) {
            sweep.push((format!("split {}", t), rs, sa));
        }
    }
    for (name, rs, sa) in &sweep {
        for phi in subsets(rs.rank()) {
            let Ok(pd) = build_parabolic(rs, sa, &phi) else {
                s.expect(false, || format!("{} {:?}: build failed", name, phi));
                continue;
            };
            if !pd.is_totally_real() {
                continue;
            }
            let e = pd.real_phi().len();
            let expected = FiniteAbelianGroup::elementary_two(e);
            let iso = pi0_isotropy(&pd);
            let tr = pi0_isotropy_totally_real(&pd);
            let ok = matches!((&iso, &tr), (Ok(a), Ok(b)) if *a == expected && *b == expected);
            s.expect(ok, || format!("{} phi={:?}: {:?} vs {:?}", name, phi, iso.as_ref().ok(), tr.as_ref().ok()));
            let onto = match (delta_map(&pd), &iso) {
                (Ok(d), Ok(g)) => d.surjects_onto(g),
                _ => false,
            };
            s.expect(onto, || format!("{} phi={:?}: delta not onto", name, phi));
        }
    }
    out.push(s.finish());

    let mut s = Suite::new("projection_and_isotropy");
    for (name, rs, sa) in forms(catalog, lim.projection_rank) {
        for phi in subsets(rs.rank()) {
            let ok = build_parabolic(&rs, &sa, &phi).is_ok_and(|pd| {
                projected_weight_lattice_check(&pd).is_ok_and(|c| c.holds)
                    && matches!((pi0_isotropy(&pd), pi0_h_mod_h0(&pd)), (Ok(a), Ok(b)) if a == b)
            });
            s.expect(ok, || format!("{} phi={:?}", name, phi));
        }
    }
    out.push(s.finish());

    let mut s = Suite::new("extend_to_simple_system");
    let types = all_types(6);
    for _ in 0..lim.random_cases {
        let t = types[rng.gen_range(0..types.len())];
        s.expect(random_extension_is_simple(&RootSystem::new(t), &mut rng), || format!("{}", t));
    }
    out.push(s.finish());

    let mut s = Suite::new("smith_certificates");
    for _ in 0..lim.random_cases {
        let m = random_matrix(&mut rng, 8, 100);
        s.expect(smith_normal_form(&m).verify(&m), || format!("{:?}", m));
    }
    out.push(s.finish());

    if opts.inject_failure {
        let mut s = Suite::new("injected_failure");
        s.expect(false, || "failure injected on request".to_string());
        out.push(s.finish());
    }
    out
}

pub fn all_types(max_rank: usize) -> Vec<RootType> {
    let mut v = Vec::new();
    let series = [
        (Series::A, 1),
        (Series::B, 2),
        (Series::C, 2),
        (Series::D, 4),
        (Series::E, 6),
        (Series::F, 4),
        (Series::G, 2),
    ];
    for (s, lo) in series {
        let hi = match s {
            Series::E => 8,
            Series::F => 4,
            Series::G => 2,
            _ => 8,
        };
        for l in lo..=hi.min(max_rank) {
            v.push(RootType::new(s, l).expect("valid type"));
        }
    }
    v
}

/// Random integer matrix with dimensions in `1..=max_dim` and entries in `[-bound, bound]`.
pub fn random_matrix<R: Rng>(rng: &mut R, max_dim: usize, bound: i64) -> IntMatrix {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    let data: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect()).collect();
    IntMatrix::from_i64_rows(cols, &data)
}

/// Picks a functional `a` with small integer values and a generic `b` moved
/// by a random Weyl word, takes the indecomposable roots of the positive
/// part of `ker a` and checks that the extension is a simple system
/// containing them.
pub fn random_extension_is_simple<R: Rng>(rs: &RootSystem, rng: &mut R) -> bool {
    let l = rs.rank();
    loop {
        let a: Vec<Rational> = (0..l).map(|_| rat(rng.gen_range(-2..=2))).collect();
        let mut b: Vec<Rational> = (0..l).map(|i| rat(rng.gen_range(1..=50)) + rat_frac(1, 7 + i as i64)).collect();
        for _ in 0..rng.gen_range(0..8) {
            let i = rng.gen_range(0..l);
            let fi = b[i].clone();
            for (k, x) in b.iter_mut().enumerate() {
                *x -= &fi * rat(rs.cartan()[i][k]);
            }
        }
        let kernel: Vec<usize> = (0..rs.len()).filter(|&r| rs.value(&a, r) == rat(0)).collect();
        if kernel.iter().any(|&r| rs.value(&b, r) == rat(0)) {
            continue;
        }
        let positive: Vec<usize> = kernel.iter().copied().filter(|&r| rs.value(&b, r) > rat(0)).collect();
        let Ok(sub) = rs.indecomposable_basis(&positive) else { return false };
        return match rs.extend_to_simple_system(&sub, &a, &b) {
            Ok(ch) => rs.is_simple_system(&ch.simple_roots) && sub.iter().all(|x| ch.simple_roots.contains(x)),
            Err(_) => false,
        };
    }
}
