use std::io::Write;
use std::process::{Command, Output, Stdio};
use std::time::{Duration, Instant};

use cartan_pi0::doc::ReportDoc;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cartan-pi0"))
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child =
        bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

const B2: &str = r#"{"root_type": {"series": "B", "rank": 2}, "real_form": {"black": [1]}, "lattice": "full", "requests": ["pi0_cartan"]}"#;

#[test]
fn query_success_prints_group() {
    let out = with_stdin(&["query"], B2);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("pi0(H_L) = Z2"));
    let out = with_stdin(&["--output", "doc", "query", "-"], B2);
    assert_eq!(out.status.code(), Some(0));
    let r: ReportDoc = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r.results[0].group.as_ref().unwrap().invariant_factors, vec![2]);
    assert!(r.timing_us.is_none());
}

#[test]
fn batch_doc_output_is_an_array_and_deterministic() {
    let batch = format!("[{}, {}]", B2, B2.replace("\"full\"", "\"root\""));
    let a = with_stdin(&["--output", "doc", "query"], &batch);
    let b = with_stdin(&["--output", "doc", "query"], &batch);
    assert_eq!(a.stdout, b.stdout);
    let v: Vec<ReportDoc> = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v[1].results[0].group.as_ref().unwrap().notation, "1");
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(bin().arg("--frobnicate").output().unwrap().status.code(), Some(1));
    assert_eq!(bin().output().unwrap().status.code(), Some(1));
    assert_eq!(bin().args(["query", "/nonexistent/query.json"]).output().unwrap().status.code(), Some(1));
    let iso = r#"{"real_form": {"name": "sl(3,R)"}, "parabolic": {"phi": [1]}, "requests": ["pi0_isotropy"]}"#;
    assert_eq!(with_stdin(&["query"], iso).status.code(), Some(1));
    assert_eq!(with_stdin(&["query", "--assume-maximally-noncompact"], iso).status.code(), Some(0));
    assert_eq!(bin().arg("--help").output().unwrap().status.code(), Some(0));
}

#[test]
fn validation_failures_exit_two() {
    let out = with_stdin(&["query"], "{\"real_form\": {\"name\": \"sl(3,R)\"}, \"typo\": 1}");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
    let bad = r#"{"root_type": {"series": "A", "rank": 3}, "real_form": {"black": [1, 2]}}"#;
    let out = with_stdin(&["query"], bad);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
    assert_eq!(with_stdin(&["query"], r#"{"real_form": {"name": "sl(3,H)"}}"#).status.code(), Some(2));
}

#[test]
fn catalog_listing() {
    let out = bin().arg("catalog").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.lines().count() >= 40);
    assert!(text.contains("sl(3,R)") && text.contains("G2(-14)"));
}

#[test]
fn selftest_small_passes_quickly_and_injected_failure_exits_nonzero() {
    let start = Instant::now();
    let out = bin().args(["selftest", "--depth", "small"]).output().unwrap();
    let elapsed = start.elapsed();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(elapsed < Duration::from_secs(10), "{:?}", elapsed);
    let out = bin().args(["selftest", "--inject-failure"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL injected_failure"));
}
