//! Runs a [`QueryDoc`] against the core library and assembles a [`ReportDoc`].

use std::time::Instant;

use cartan_pi0_core::charcomp::{
    brute_force_pi0, group_a, group_a_l, pi0_cartan, pi0_fixed_character_subgroup, Lattice, LatticeSpec,
};
use cartan_pi0_core::intlin::{FiniteAbelianGroup, IntMatrix};
use cartan_pi0_core::parabolic::{
    build_parabolic, delta_map, levi_adapted_chamber, pi0_h_mod_h0, pi0_isotropy, pi0_isotropy_totally_real,
    projected_weight_lattice_check, ParabolicDatum,
};
use cartan_pi0_core::realform::{derive_sigma, validate_satake, SatakeDatum, SigmaAction};
use cartan_pi0_core::rootsys::{RootSystem, RootType};
use num_bigint::BigInt;

use crate::catalog::{datum_from_one_based, parse_root_type, Catalog};
use crate::doc::*;
use crate::error::{exit, AppError};

pub const METHOD_CARTAN: &str = "sign-vector quotient A/A_L over the sigma-fixed fundamental weights";
pub const METHOD_TWO_PATH: &str = "torsion of Z^l / [S^T + I]";
pub const METHOD_BRUTE: &str = "brute-force enumeration of fixed characters";
pub const METHOD_ISOTROPY: &str = "torsion of Z^l / [S'^T + I ; Levi coordinates] in a Levi-adapted chamber";
pub const METHOD_H_MOD_H0: &str = "torsion of the fixed characters vanishing on the Levi coroots, base chamber";
pub const METHOD_TOTALLY_REAL: &str = "Z2^e over the real crossed simple roots (totally real parabolic)";
pub const METHOD_DELTA: &str = "sign vectors (omega_j | alpha^v) mod 2 over the real crossed simple roots";
pub const METHOD_VALIDATE: &str = "structural checks on the Satake datum";

pub const ASSUME_BOURBAKI: &str = "simple roots are numbered as in Bourbaki";
pub const ASSUME_ROOT_LATTICE: &str = "the character lattice contains the root lattice and is sigma-stable";
pub const ASSUME_MAX_NONCOMPACT: &str =
    "the Cartan subalgebra is maximally noncompact (acknowledged with --assume-maximally-noncompact)";

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub assume_maximally_noncompact: bool,
    pub timing: bool,
}

/// Requests in canonical order with `all` expanded.
pub fn expand_requests(q: &QueryDoc) -> Vec<Request> {
    let mut out: Vec<Request> = Vec::new();
    for &r in &q.requests {
        if r == Request::All {
            out.extend([Request::Validate, Request::Pi0Cartan]);
            if q.parabolic.is_some() {
                out.extend([Request::Pi0Isotropy, Request::Delta]);
            }
        } else {
            out.push(r);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Whether the query asks for a computation resting on the maximally
/// noncompact input contract.
pub fn needs_assumption(q: &QueryDoc) -> bool {
    expand_requests(q).iter().any(|r| matches!(r, Request::Pi0Isotropy | Request::Delta))
}

pub fn exit_code(reports: &[ReportDoc]) -> i32 {
    match reports.iter().map(|r| r.status).max() {
        Some(Status::Defect) => exit::DEFECT,
        Some(Status::Invalid) => exit::VALIDATION,
        _ => exit::OK,
    }
}

/// Runs the queries, one thread per query.
pub fn run_batch(queries: &[QueryDoc], catalog: &Catalog, opts: &RunOptions) -> Vec<ReportDoc> {
    if queries.len() < 2 {
        return queries.iter().map(|q| run_query(q, catalog, opts)).collect();
    }
    std::thread::scope(|s| {
        let handles: Vec<_> = queries.iter().map(|q| s.spawn(move || run_query(q, catalog, opts))).collect();
        handles.into_iter().map(|h| h.join().expect("query thread panicked")).collect()
    })
}

struct Ctx {
    status: Status,
    warnings: Vec<String>,
    errors: Vec<String>,
}

impl Ctx {
    fn defect(&mut self, msg: String) {
        self.status = Status::Defect;
        self.errors.push(msg);
    }

    fn invalid(&mut self, msg: String) {
        self.status = self.status.max(Status::Invalid);
        self.errors.push(msg);
    }

    fn fail(&mut self, e: &AppError) {
        match e {
            AppError::Defect(_) => self.defect(e.to_string()),
            _ => self.invalid(e.to_string()),
        }
    }
}

pub fn run_query(q: &QueryDoc, catalog: &Catalog, opts: &RunOptions) -> ReportDoc {
    let start = Instant::now();
    let mut ctx = Ctx { status: Status::Ok, warnings: Vec::new(), errors: Vec::new() };
    let mut report = ReportDoc {
        query: q.clone(),
        status: Status::Ok,
        form: FormDoc::default(),
        validation: Vec::new(),
        derived: None,
        results: Vec::new(),
        assumptions: vec![ASSUME_BOURBAKI.to_string(), ASSUME_ROOT_LATTICE.to_string()],
        warnings: Vec::new(),
        errors: Vec::new(),
        timing_us: None,
    };
    let requests = expand_requests(q);
    if q.parabolic.is_some() && requests.iter().any(|r| matches!(r, Request::Pi0Isotropy | Request::Delta)) {
        report.assumptions.push(ASSUME_MAX_NONCOMPACT.to_string());
    }

    match resolve_form(q, catalog) {
        Err(e) => {
            ctx.fail(&e);
            for &r in &requests {
                report.results.push(failed(r, "input", "", &e.to_string()));
            }
        }
        Ok((name, t, d)) => {
            report.form = form_doc(name, &d);
            let rs = RootSystem::new(t);
            let val = validate_satake(&d, &rs);
            report.validation = val
                .checks
                .iter()
                .map(|c| CheckDoc { name: c.name.to_string(), passed: c.passed, detail: c.detail.clone() })
                .collect();
            if !val.passed() {
                ctx.invalid("Satake datum failed validation".to_string());
                for &r in &requests {
                    let mut res = failed(r, quantity_of(r), METHOD_VALIDATE, "Satake datum failed validation");
                    if r == Request::Validate {
                        res.checks = report.validation.clone();
                    }
                    report.results.push(res);
                }
            } else {
                match derive_sigma(&d, &rs) {
                    Err(e) => {
                        let msg = format!("validated datum did not derive a conjugation: {}", e);
                        ctx.defect(msg.clone());
                        report.results.extend(requests.iter().map(|&r| failed(r, quantity_of(r), "", &msg)));
                    }
                    Ok(sa) => run_valid(q, &requests, &rs, &sa, opts, &mut report, &mut ctx),
                }
            }
        }
    }

    report.status = ctx.status;
    report.warnings = ctx.warnings;
    report.errors = ctx.errors;
    if opts.timing {
        report.timing_us = Some(start.elapsed().as_micros() as u64);
    }
    report
}

fn resolve_form(q: &QueryDoc, catalog: &Catalog) -> Result<(Option<String>, RootType, SatakeDatum), AppError> {
    let declared = match &q.root_type {
        Some(rt) => Some(parse_root_type(&rt.series, rt.rank)?),
        None => None,
    };
    match &q.real_form {
        RealFormDoc::Named(n) => {
            let entry = catalog.lookup(&n.name)?;
            let t = entry.root_type()?;
            if let Some(dt) = declared {
                if dt != t {
                    return Err(AppError::Invalid(format!(
                        "{} has root type {}, query declares {}",
                        entry.name, t, dt
                    )));
                }
            }
            Ok((Some(entry.name.clone()), t, entry.datum()?))
        }
        RealFormDoc::Diagram(g) => {
            let t = declared
                .ok_or_else(|| AppError::Invalid("root_type is required when real_form is a diagram".to_string()))?;
            Ok((None, t, datum_from_one_based(t, &g.black, &g.arrows)?))
        }
    }
}

fn form_doc(name: Option<String>, d: &SatakeDatum) -> FormDoc {
    FormDoc {
        name,
        root_type: d.root_type().to_string(),
        black: d.black().iter().map(|i| i + 1).collect(),
        arrows: d.arrow_pairs().iter().map(|&(a, b)| [a + 1, b + 1]).collect(),
    }
}

fn quantity_of(r: Request) -> &'static str {
    match r {
        Request::Pi0Cartan => "pi0(H_L)",
        Request::Pi0Isotropy => "pi0(G+)",
        Request::Delta => "delta: pi1(G/G+) -> pi0(G+)",
        Request::Validate | Request::All => "Satake datum",
    }
}

fn failed(r: Request, quantity: &str, method: &str, msg: &str) -> ResultDoc {
    ResultDoc {
        request: r,
        quantity: quantity.to_string(),
        ok: false,
        group: None,
        method: method.to_string(),
        checks: Vec::new(),
        delta: None,
        error: Some(msg.to_string()),
    }
}

fn check(name: &str, passed: bool, detail: String) -> CheckDoc {
    CheckDoc { name: name.to_string(), passed, detail }
}

fn to_i64(x: &BigInt) -> i64 {
    i64::try_from(x).expect("entry exceeds i64")
}

fn matrix_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(to_i64).collect()).collect()
}

pub fn group_doc(g: &FiniteAbelianGroup) -> GroupDoc {
    GroupDoc {
        notation: g.notation(),
        order: u64::try_from(&g.order()).expect("group order exceeds u64"),
        invariant_factors: g
            .invariant_factors()
            .iter()
            .map(|x| u64::try_from(x).expect("factor exceeds u64"))
            .collect(),
        generators: g.generators().map_or(Vec::new(), |gs| gs.iter().map(|v| v.iter().map(to_i64).collect()).collect()),
    }
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

fn run_valid(
    q: &QueryDoc,
    requests: &[Request],
    rs: &RootSystem,
    sa: &SigmaAction,
    opts: &RunOptions,
    report: &mut ReportDoc,
    ctx: &mut Ctx,
) {
    let (real, imaginary, complex) = sa.kind_counts();
    let mut derived = DerivedDoc {
        white: one_based(sa.white()),
        black: one_based(sa.black()),
        k: matrix_rows(sa.k()),
        kprime: matrix_rows(sa.kprime()),
        sigma_on_weights: matrix_rows(sa.s()),
        fixed_omegas: one_based(sa.fixed_omegas()),
        root_counts: RootCounts { total: rs.len(), real, imaginary, complex },
        lattice: None,
        parabolic: None,
    };

    let (spec, kind) = match &q.lattice {
        LatticeDoc::Keyword(LatticeKeyword::Full) => (LatticeSpec::Full, "full"),
        LatticeDoc::Keyword(LatticeKeyword::Root) => (LatticeSpec::Root, "root"),
        LatticeDoc::Generators(g) => (LatticeSpec::Generated(g.generators.clone()), "generated"),
    };
    let lattice = Lattice::new(&spec, rs, sa).map_err(AppError::from);
    if let Ok(lat) = &lattice {
        derived.lattice = Some(LatticeInfo {
            kind: kind.to_string(),
            basis: lat.basis().iter().map(|v| v.iter().map(to_i64).collect()).collect(),
            index_in_weight_lattice: u64::try_from(&lat.index_in_weights()).expect("index exceeds u64"),
        });
    }

    let parabolic = q.parabolic.as_ref().map(|p| {
        let phi: Vec<usize> = p
            .phi
            .iter()
            .map(|&i| {
                if i == 0 || i > rs.rank() {
                    Err(AppError::Invalid(format!("parabolic index {} out of range 1..={}", i, rs.rank())))
                } else {
                    Ok(i - 1)
                }
            })
            .collect::<Result<_, _>>()?;
        build_parabolic(rs, sa, &phi).map_err(AppError::from)
    });
    if let Some(Ok(pd)) = &parabolic {
        derived.parabolic = Some(parabolic_info(pd, ctx));
    }
    report.derived = Some(derived);

    for &r in requests {
        let res = match r {
            Request::Validate => ResultDoc {
                request: r,
                quantity: quantity_of(r).to_string(),
                ok: true,
                group: None,
                method: METHOD_VALIDATE.to_string(),
                checks: report.validation.clone(),
                delta: None,
                error: None,
            },
            Request::Pi0Cartan => match &lattice {
                Err(e) => {
                    ctx.fail(e);
                    failed(r, quantity_of(r), METHOD_CARTAN, &e.to_string())
                }
                Ok(lat) => cartan_result(rs, sa, lat, ctx),
            },
            Request::Pi0Isotropy | Request::Delta => {
                let res = match &parabolic {
                    _ if !opts.assume_maximally_noncompact => {
                        Err(AppError::Usage("isotropy computations require --assume-maximally-noncompact".to_string()))
                    }
                    None => Err(AppError::Invalid("no parabolic given".to_string())),
                    Some(Err(e)) => Err(AppError::Invalid(e.to_string())),
                    Some(Ok(pd)) if r == Request::Delta && !pd.is_totally_real() && !q.requests.contains(&r) => {
                        ctx.warnings.push("delta skipped: the parabolic is not totally real".to_string());
                        continue;
                    }
                    Some(Ok(pd)) => {
                        if r == Request::Pi0Isotropy {
                            isotropy_results(pd, ctx)
                        } else {
                            delta_result(pd, ctx).map(|d| vec![d])
                        }
                    }
                };
                match res {
                    Ok(v) => {
                        report.results.extend(v);
                        continue;
                    }
                    Err(e) => {
                        ctx.fail(&e);
                        failed(r, quantity_of(r), "", &e.to_string())
                    }
                }
            }
            Request::All => unreachable!("expanded"),
        };
        report.results.push(res);
    }
}

fn parabolic_info(pd: &ParabolicDatum<'_>, ctx: &mut Ctx) -> ParabolicInfo {
    let rs = pd.root_system();
    let levi_chamber = match levi_adapted_chamber(pd) {
        Ok(lc) => {
            if !lc.s_adapted {
                ctx.warnings
                    .push("sigma is not in triangular Satake shape on the Levi-adapted simple roots".to_string());
            }
            Some(LeviInfo {
                word: one_based(&lc.chamber.word),
                epsilon: lc.epsilon.to_string(),
                simple_roots: lc.chamber.simple_roots.iter().map(|&g| rs.root(g).simple().to_vec()).collect(),
                phi_prime: one_based(&lc.phi_prime),
                levi_positions: one_based(&lc.levi_positions),
                s_adapted: lc.s_adapted,
            })
        }
        Err(e) => {
            ctx.fail(&AppError::from(e));
            None
        }
    };
    ParabolicInfo {
        phi: one_based(pd.phi()),
        totally_real: pd.is_totally_real(),
        real_phi: one_based(&pd.real_phi()),
        rprime_basis: pd.rprime_basis().iter().map(|&g| rs.root(g).simple().to_vec()).collect(),
        rprime_size: pd.rprime().len(),
        m: pd.m(),
        z0_dim: pd.z0_dim(),
        phistar: one_based(pd.phi()),
        levi_chamber,
    }
}

fn cartan_result(rs: &RootSystem, sa: &SigmaAction, lat: &Lattice, ctx: &mut Ctx) -> ResultDoc {
    let g = pi0_cartan(sa, lat);
    let a = group_a(sa);
    let al = group_a_l(sa, lat);
    let mut checks = vec![check("dims", true, format!("dim A = {}, dim A_L = {}", a.dim(), al.dim()))];

    let two = pi0_fixed_character_subgroup(sa.s(), &[]);
    let agree = two.is_elementary_two() && two.rank() == a.dim();
    checks.push(check("two_path_A", agree, format!("{}: {}", METHOD_TWO_PATH, two.notation())));
    if !agree {
        ctx.defect(format!("group A has dimension {} but {} gives {}", a.dim(), METHOD_TWO_PATH, two.notation()));
    }

    match brute_force_pi0(sa, rs, lat) {
        Ok(b) => {
            let agree = b == g;
            checks.push(check("brute_force", agree, format!("{}: {}", METHOD_BRUTE, b.notation())));
            if !agree {
                ctx.defect(format!("pi0(H_L) = {} but brute force gives {}", g.notation(), b.notation()));
            }
        }
        Err(e) => ctx.warnings.push(format!("brute-force cross-check skipped: {}", e)),
    }

    ResultDoc {
        request: Request::Pi0Cartan,
        quantity: quantity_of(Request::Pi0Cartan).to_string(),
        ok: true,
        group: Some(group_doc(&g)),
        method: METHOD_CARTAN.to_string(),
        checks,
        delta: None,
        error: None,
    }
}

fn isotropy_results(pd: &ParabolicDatum<'_>, ctx: &mut Ctx) -> Result<Vec<ResultDoc>, AppError> {
    let iso = pi0_isotropy(pd)?;
    let hm = pi0_h_mod_h0(pd)?;
    let mut checks = Vec::new();

    let agree = iso == hm;
    checks.push(check("h_mod_h0", agree, format!("{}: {}", METHOD_H_MOD_H0, hm.notation())));
    if !agree {
        ctx.defect(format!("pi0(G+) = {} but pi0(H/H0) = {}", iso.notation(), hm.notation()));
    }

    let cert = projected_weight_lattice_check(pd)?;
    checks.push(check("projected_weight_lattice", cert.holds, String::new()));
    if !cert.holds {
        ctx.defect("projection of the weight lattice onto the Levi span is not the Levi weight lattice".to_string());
    }

    if pd.is_totally_real() {
        let tr = pi0_isotropy_totally_real(pd)?;
        let agree = tr == iso;
        checks.push(check("totally_real_formula", agree, format!("{}: {}", METHOD_TOTALLY_REAL, tr.notation())));
        if !agree {
            ctx.warnings.push(format!(
                "pi0(G+) = {} differs from the totally real formula {}; check that the Cartan subalgebra is maximally noncompact",
                iso.notation(),
                tr.notation()
            ));
        }
    }

    let mk = |quantity: &str, g: &FiniteAbelianGroup, method: &str, checks: Vec<CheckDoc>| ResultDoc {
        request: Request::Pi0Isotropy,
        quantity: quantity.to_string(),
        ok: true,
        group: Some(group_doc(g)),
        method: method.to_string(),
        checks,
        delta: None,
        error: None,
    };
    Ok(vec![mk("pi0(G+)", &iso, METHOD_ISOTROPY, checks), mk("pi0(H/H0)", &hm, METHOD_H_MOD_H0, Vec::new())])
}

fn delta_result(pd: &ParabolicDatum<'_>, ctx: &mut Ctx) -> Result<ResultDoc, AppError> {
    let dm = delta_map(pd)?;
    let rs = pd.root_system();
    let rows = dm
        .row_roots
        .iter()
        .zip(dm.matrix.rows())
        .map(|(&r, v)| DeltaRow {
            root: rs.root(r).simple().to_vec(),
            exponents: v.to_bools().iter().map(|&b| u8::from(b)).collect(),
        })
        .collect();
    let iso = pi0_isotropy(pd)?;
    let onto = dm.surjects_onto(&iso);
    if !onto {
        ctx.defect(format!("delta does not surject onto pi0(G+) = {}", iso.notation()));
    }
    Ok(ResultDoc {
        request: Request::Delta,
        quantity: quantity_of(Request::Delta).to_string(),
        ok: true,
        group: Some(group_doc(&iso)),
        method: METHOD_DELTA.to_string(),
        checks: vec![check("surjective", onto, format!("row rank {}", dm.matrix.rank()))],
        delta: Some(DeltaDoc { sign_coords: one_based(&dm.sign_coords), rows }),
        error: None,
    })
}
