//! Plain-text rendering of reports.

use std::fmt::Write;

use crate::doc::{CheckDoc, ReportDoc, Status};

fn matrix(out: &mut String, label: &str, rows: &[Vec<i64>]) {
    if rows.is_empty() || rows[0].is_empty() {
        let _ = writeln!(out, "  {}: (empty)", label);
        return;
    }
    let _ = writeln!(out, "  {}:", label);
    for r in rows {
        let cells: Vec<String> = r.iter().map(|x| format!("{:>3}", x)).collect();
        let _ = writeln!(out, "    [{} ]", cells.join(""));
    }
}

fn checks(out: &mut String, indent: &str, cs: &[CheckDoc]) {
    for c in cs {
        let mark = if c.passed { "ok  " } else { "FAIL" };
        if c.detail.is_empty() {
            let _ = writeln!(out, "{}{} {}", indent, mark, c.name);
        } else {
            let _ = writeln!(out, "{}{} {} ({})", indent, mark, c.name, c.detail);
        }
    }
}

pub fn render_text(r: &ReportDoc) -> String {
    let mut out = String::new();
    let name = r.form.name.as_deref().unwrap_or("(diagram)");
    let arrows: Vec<String> = r.form.arrows.iter().map(|[a, b]| format!("{}<->{}", a, b)).collect();
    let _ = writeln!(
        out,
        "{} {}  black={:?} arrows=[{}]  status={}",
        name,
        r.form.root_type,
        r.form.black,
        arrows.join(","),
        match r.status {
            Status::Ok => "ok",
            Status::Invalid => "invalid",
            Status::Defect => "DEFECT",
        }
    );

    if r.validation.iter().any(|c| !c.passed) {
        let _ = writeln!(out, "validation:");
        checks(&mut out, "  ", &r.validation);
    }

    if let Some(d) = &r.derived {
        let _ = writeln!(out, "derived:");
        let _ = writeln!(out, "  white={:?} black={:?} fixed omegas={:?}", d.white, d.black, d.fixed_omegas);
        matrix(&mut out, "k", &d.k);
        matrix(&mut out, "k'", &d.kprime);
        matrix(&mut out, "sigma on weights", &d.sigma_on_weights);
        let c = &d.root_counts;
        let _ =
            writeln!(out, "  roots: {} ({} real, {} imaginary, {} complex)", c.total, c.real, c.imaginary, c.complex);
        if let Some(l) = &d.lattice {
            let _ = writeln!(out, "  lattice: {} (index {} in the weight lattice)", l.kind, l.index_in_weight_lattice);
        }
        if let Some(p) = &d.parabolic {
            let _ = writeln!(
                out,
                "  parabolic: phi={:?} totally_real={} m={} z0_dim={} |R'|={}",
                p.phi, p.totally_real, p.m, p.z0_dim, p.rprime_size
            );
            if let Some(lc) = &p.levi_chamber {
                let _ = writeln!(
                    out,
                    "  levi chamber: word={:?} epsilon={} phi'={:?} levi={:?} s_adapted={}",
                    lc.word, lc.epsilon, lc.phi_prime, lc.levi_positions, lc.s_adapted
                );
            }
        }
    }

    let _ = writeln!(out, "results:");
    for res in &r.results {
        match (&res.group, &res.error) {
            (_, Some(e)) => {
                let _ = writeln!(out, "  {}: error: {}", res.quantity, e);
            }
            (Some(g), None) => {
                let _ = writeln!(out, "  {} = {}", res.quantity, g.notation);
                let _ = writeln!(out, "    via {}", res.method);
            }
            (None, None) => {
                let _ = writeln!(out, "  {}: done", res.quantity);
            }
        }
        if let Some(d) = &res.delta {
            let _ = writeln!(out, "    sign coordinates {:?}", d.sign_coords);
            for row in &d.rows {
                let _ = writeln!(out, "    {:?} -> {:?}", row.root, row.exponents);
            }
        }
        checks(&mut out, "    ", &res.checks);
    }

    for a in &r.assumptions {
        let _ = writeln!(out, "assumes: {}", a);
    }
    for w in &r.warnings {
        let _ = writeln!(out, "warning: {}", w);
    }
    for e in &r.errors {
        let _ = writeln!(out, "error: {}", e);
    }
    if let Some(t) = r.timing_us {
        let _ = writeln!(out, "time: {} us", t);
    }
    out
}
