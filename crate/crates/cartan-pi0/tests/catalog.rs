use cartan_pi0::catalog::Catalog;
use cartan_pi0_core::realform::validate_satake;
use cartan_pi0_core::rootsys::RootSystem;

fn catalog() -> Catalog {
    Catalog::builtin().unwrap()
}

#[test]
fn has_at_least_forty_entries_in_stable_order() {
    let c = catalog();
    assert!(c.len() >= 40, "{}", c.len());
    let a: Vec<String> = c.listing().iter().map(|e| e.name.clone()).collect();
    let b: Vec<String> = c.listing().iter().map(|e| e.name.clone()).collect();
    assert_eq!(a, b);
    let keys: Vec<(String, usize, String)> =
        c.listing().iter().map(|e| (e.series.clone(), e.rank, e.name.clone())).collect();
    assert!(keys.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn lookups() {
    let c = catalog();
    let e = c.lookup("sl(3,R)").unwrap();
    assert_eq!((e.series.as_str(), e.rank), ("A", 2));
    assert!(e.black.is_empty() && e.arrows.is_empty());
    let e = c.lookup("su(2,1)").unwrap();
    assert_eq!(e.arrows, vec![[1, 2]]);
    let g = c.lookup("G2(-14)").unwrap();
    assert_eq!(g.black, vec![1, 2]);
    assert_eq!(c.lookup("sp(2,R)-compact-dual").unwrap().name, "sp(2)");
    let err = c.lookup("sl(3,H)").unwrap_err().to_string();
    assert!(err.contains("sl(3,R)"), "{}", err);
}

#[test]
fn every_entry_validates() {
    for e in catalog().entries() {
        let rs = RootSystem::new(e.root_type().unwrap());
        let report = validate_satake(&e.datum().unwrap(), &rs);
        assert!(report.passed(), "{}: {:?}", e.name, report.failures().collect::<Vec<_>>());
    }
}

#[test]
fn parse_rejects_bad_lines() {
    assert!(Catalog::parse("# comment\n\n").unwrap().is_empty());
    let dup = r#"{"name": "x", "series": "A", "rank": 1}
{"name": "x", "series": "A", "rank": 1}"#;
    assert!(Catalog::parse(dup).is_err());
    assert!(Catalog::parse(r#"{"name": "x", "series": "A", "rank": 1, "color": 3}"#).is_err());
    assert!(Catalog::parse(r#"{"name": "x", "series": "A", "rank": 3, "black": [1, 2]}"#).is_err());
    assert!(Catalog::parse(r#"{"name": "x", "series": "A", "rank": 2, "black": [5]}"#).is_err());
}

/// Expected (dim 𝔨, real rank, dim 𝔤) read off the name alone.
fn from_name(name: &str) -> (i64, i64, Option<i64>) {
    let args = |s: &str| -> Vec<i64> {
        let inner = &s[s.find('(').unwrap() + 1..s.len() - 1];
        inner.split(',').filter_map(|x| x.trim().parse().ok()).collect()
    };
    let exceptional = [
        ("E6(6)", 6),
        ("E6(2)", 4),
        ("E6(-14)", 2),
        ("E6(-26)", 2),
        ("E6(-78)", 0),
        ("E7(7)", 7),
        ("E7(-5)", 4),
        ("E7(-25)", 3),
        ("E7(-133)", 0),
        ("E8(8)", 8),
        ("E8(-24)", 4),
        ("E8(-248)", 0),
        ("F4(4)", 4),
        ("F4(-20)", 1),
        ("F4(-52)", 0),
        ("G2(2)", 2),
        ("G2(-14)", 0),
    ];
    if let Some(&(_, rank)) = exceptional.iter().find(|(n, _)| *n == name) {
        // the parenthesized number is dim 𝔭 − dim 𝔨
        let sig = args(name)[0];
        let dim = match &name[..2] {
            "E6" => 78,
            "E7" => 133,
            "E8" => 248,
            "F4" => 52,
            _ => 14,
        };
        return ((dim - sig) / 2, rank, Some(dim));
    }
    let a = args(name);
    let split = name.ends_with(",R)");
    if name.starts_with("sl(") {
        let n = a[0];
        return (n * (n - 1) / 2, n - 1, Some(n * n - 1));
    }
    if name.starts_with("su*(") {
        let n = a[0] / 2;
        return (n * (2 * n + 1), n - 1, Some(4 * n * n - 1));
    }
    if name.starts_with("so*(") {
        let n = a[0] / 2;
        return (n * n, n / 2, Some(n * (2 * n - 1)));
    }
    if name.starts_with("sp(") && split {
        let n = a[0];
        return (n * n, n, Some(n * (2 * n + 1)));
    }
    let (p, q) = if a.len() == 2 { (a[0], a[1]) } else { (a[0], 0) };
    if name.starts_with("su(") {
        let n = p + q;
        return (p * p + q * q - 1, q.min(p), Some(n * n - 1));
    }
    if name.starts_with("so(") {
        let n = p + q;
        return (p * (p - 1) / 2 + q * (q - 1) / 2, q.min(p), Some(n * (n - 1) / 2));
    }
    if name.starts_with("sp(") {
        let n = p + q;
        return (p * (2 * p + 1) + q * (2 * q + 1), q.min(p), Some(n * (2 * n + 1)));
    }
    panic!("unrecognized name {}", name)
}

#[test]
fn cartan_involution_trace_and_real_rank_match_names() {
    for e in catalog().entries() {
        let (rs, sa) = e.instantiate().unwrap();
        let t = rs.root_type();
        let l = t.rank as i64;
        let a = (sa.white().len() - e.arrows.len()) as i64;
        let (_, imaginary, _) = sa.kind_counts();
        let dim = t.algebra_dimension() as i64;
        // θ: −1 on 𝔞, +1 on 𝔱, +1 on compact imaginary root spaces, traceless on the rest
        let trace = l - 2 * a + imaginary as i64;
        let (k, rank, expected_dim) = from_name(&e.name);
        assert_eq!(expected_dim, Some(dim), "{}", e.name);
        assert_eq!(a, rank, "{}: real rank", e.name);
        assert_eq!((dim + trace) / 2, k, "{}: dim k", e.name);
        assert_eq!((dim + trace) % 2, 0, "{}", e.name);
    }
}
