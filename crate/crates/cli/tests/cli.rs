use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use trusslab::format::parse_structure;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trusslab"))
        .args(args)
        .env_remove("TRUSSLAB_MAX_ORDER")
        .output()
        .unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(name: &str) -> String {
    fixture(name).display().to_string()
}

/// Parsed `--json` output with every timing field zeroed.
fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let mut v: Value = serde_json::from_str(&stdout(&run(&full))).unwrap();
    scrub(&mut v);
    v
}

fn scrub(v: &mut Value) {
    match v {
        Value::Object(m) => {
            if let Some(t) = m.get_mut("elapsed_us") {
                *t = Value::from(0);
            }
            m.values_mut().for_each(scrub);
        }
        Value::Array(a) => a.iter_mut().for_each(scrub),
        _ => {}
    }
}

#[test]
fn verify_exit_codes() {
    assert_eq!(code(&["verify", &path("klein.json")]), 0);
    assert_eq!(code(&["verify", &path("lz2.json")]), 0);
    assert_eq!(code(&["verify", &path("klein-broken-lambda.json")]), 1);
    assert_eq!(code(&["verify", &path("rz-z3.json"), "--kind", "semi-brace"]), 0);
    assert_eq!(code(&["verify", &path("klein.json"), "--kind", "almost"]), 2);
    assert_eq!(code(&["verify", "/nonexistent/file.json"]), 2);
}

#[test]
fn broken_lambda_reports_witness() {
    let v = json(&["verify", &path("klein-broken-lambda.json")]);
    assert_eq!(v["passed"], false);
    let failed: Vec<_> = v["report"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .collect();
    assert_eq!(failed[0]["name"], "semi-truss-law");
    assert_eq!(failed[0]["witness"], serde_json::json!([0, 0, 2]));
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    let text = fs::read_to_string(fixture("lz2.json")).unwrap().replacen("[1,1]", "[1,7]", 1);
    fs::write(&bad, text).unwrap();
    let o = run(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("out of range"));
}

#[test]
fn analyze_klein() {
    let o = run(&["analyze", &path("klein.json")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("E(B) = {a, ab}"), "{text}");
    assert!(text.contains("a∘a = 1 is not idempotent"), "{text}");
}

#[test]
fn solution_commands() {
    assert_eq!(code(&["solution", &path("rz-z3.json"), "--check-ybe"]), 0);
    // right-zero addition makes every ρ_y constant
    assert_eq!(code(&["solution", &path("rz-z3.json"), "--check-nondegenerate"]), 1);
    assert_eq!(code(&["solution", &path("trivial-z2.json"), "--check-nondegenerate"]), 0);
    assert_eq!(code(&["solution", &path("trivial-z2.json"), "--associate", "--isocheck"]), 0);
    assert_eq!(code(&["solution", &path("klein.json")]), 2);
}

#[test]
fn solution_out_files_parse() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(code(&["solution", &path("trivial-z2.json"), "--associate", "--out", d]), 0);
    let mut names: Vec<_> = fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    names.sort();
    assert!(!names.is_empty());
    for p in names {
        let text = fs::read_to_string(&p).unwrap();
        let ok = parse_structure(&text).is_ok() || trusslab::format::parse_solution(&text).is_ok();
        assert!(ok, "{}", p.display());
    }
}

#[test]
fn enumerate_counts_and_files() {
    let v = json(&["enumerate", "--order", "2", "--kind", "brace-like"]);
    assert_eq!(v["count"], 14);
    assert_eq!(v["complete"], true);
    let v = json(&["enumerate", "--order", "3", "--kind", "semigroup", "--modulo-iso"]);
    assert_eq!(v["count"], 24);

    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(code(&["enumerate", "--order", "2", "--kind", "almost", "--out", d]), 0);
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), 12);
    assert!(dir.path().join("almost-2-00000.json").exists());
    for p in files {
        parse_structure(&fs::read_to_string(p).unwrap()).unwrap();
    }
}

#[test]
fn enumerate_check_all_passes() {
    assert_eq!(code(&["enumerate", "--order", "2", "--kind", "brace-like", "--check-all"]), 0);
    let v = json(&["enumerate", "--order", "3", "--kind", "almost", "--check-all"]);
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_object().unwrap().values().all(|c| c["applied"] == c["passed"]));
}

#[test]
fn enumerate_order_cap() {
    assert_eq!(code(&["enumerate", "--order", "9", "--kind", "semigroup"]), 2);
    assert_eq!(code(&["enumerate", "--order", "0", "--kind", "group"]), 2);
    let o = Command::new(env!("CARGO_BIN_EXE_trusslab"))
        .args(["enumerate", "--order", "6", "--kind", "group", "--limit", "1"])
        .env("TRUSSLAB_MAX_ORDER", "6")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(code(&["enumerate", "--order", "6", "--kind", "group"]), 2);
}

#[test]
fn limit_marks_partial() {
    let v = json(&["enumerate", "--order", "3", "--kind", "semigroup", "--limit", "5"]);
    assert_eq!(v["count"], 5);
    assert_eq!(v["complete"], false);
}

#[test]
fn json_output_is_stable() {
    for args in [
        vec!["verify", "KLEIN"],
        vec!["analyze", "KLEIN"],
        vec!["solution", "RZ", "--check-ybe", "--check-nondegenerate"],
        vec!["enumerate", "--order", "3", "--kind", "brace-like", "--check-all"],
    ] {
        let (k, r) = (path("klein.json"), path("rz-z3.json"));
        let args: Vec<&str> = args
            .iter()
            .map(|a| match *a {
                "KLEIN" => k.as_str(),
                "RZ" => r.as_str(),
                a => a,
            })
            .collect();
        assert_eq!(json(&args), json(&args), "{args:?}");
    }
}

#[test]
fn quiet_prints_nothing() {
    for args in [
        vec!["--quiet", "verify", "KLEIN"],
        vec!["--quiet", "verify", "BROKEN"],
        vec!["--quiet", "verify", "/nonexistent.json"],
    ] {
        let (k, b) = (path("klein.json"), path("klein-broken-lambda.json"));
        let args: Vec<&str> = args
            .iter()
            .map(|a| match *a {
                "KLEIN" => k.as_str(),
                "BROKEN" => b.as_str(),
                a => a,
            })
            .collect();
        let o = run(&args);
        assert!(o.stdout.is_empty() && o.stderr.is_empty(), "{args:?}");
    }
}
