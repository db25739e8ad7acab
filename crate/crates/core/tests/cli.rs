use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use complementary_choice::io::{self, Document};
use serde_json::Value;
use tempfile::TempDir;

fn ccf(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ccf"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(dir: &TempDir, name: &str) -> PathBuf {
    let o = ccf(&["fixtures", name], None);
    assert_eq!(code(&o), 0);
    let path = dir.path().join(format!("{name}.json"));
    std::fs::write(&path, &o.stdout).unwrap();
    path
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn document(o: &Output) -> Document {
    io::parse(&stdout(o)).expect("output reloads").0
}

/// Canonical text without any stamp.
fn canonical(text: &str) -> String {
    io::to_json(&io::parse(text).expect("document reloads").0, None)
}

#[test]
fn verify_example5_submodular_passes() {
    let dir = TempDir::new().unwrap();
    let p = fixture(&dir, "example5");
    let o = ccf(&["verify", arg(&p), "--expect", "submodular"], None);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn verify_example5_choice_substitutable_fails_with_witness() {
    let dir = TempDir::new().unwrap();
    let p = fixture(&dir, "example5-choice");
    let o = ccf(&["verify", arg(&p), "--expect", "substitutable"], None);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("`b` is chosen from {a,b,c}"), "{}", stdout(&o));
}

#[test]
fn verify_negated_expectation() {
    let dir = TempDir::new().unwrap();
    let p = fixture(&dir, "example5-choice");
    let o = ccf(&["verify", arg(&p), "--expect", "consistent,!substitutable"], None);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn verify_truncated_document_is_input_error() {
    let dir = TempDir::new().unwrap();
    let p = fixture(&dir, "fork");
    let text = std::fs::read_to_string(&p).unwrap();
    std::fs::write(&p, &text[..text.len() / 2]).unwrap();
    let o = ccf(&["verify", arg(&p)], None);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}

#[test]
fn verify_missing_file_and_unknown_axiom_are_input_errors() {
    assert_eq!(code(&ccf(&["verify", "/nonexistent/doc.json"], None)), 2);
    let dir = TempDir::new().unwrap();
    let p = fixture(&dir, "fork");
    assert_eq!(code(&ccf(&["verify", arg(&p), "--expect", "tasty"], None)), 2);
}

#[test]
fn verify_reads_standard_input() {
    let o = ccf(&["fixtures", "example5"], None);
    let v = ccf(&["verify", "-", "--expect", "submodular", "--format", "json"], Some(&stdout(&o)));
    assert_eq!(code(&v), 0);
    let report: Value = serde_json::from_str(&stdout(&v)).unwrap();
    assert_eq!(report["pass"], Value::Bool(true));
    assert_eq!(report["properties"]["f.substitutable"], Value::Bool(false));
}

#[test]
fn pretopology_route_round_trips() {
    let dir = TempDir::new().unwrap();
    for name in ["fork", "blocks", "bundle", "chain-ab", "example5-choice"] {
        let p = fixture(&dir, name);
        let there = ccf(&["convert", arg(&p), "--to", "pretopology"], None);
        if name == "example5-choice" {
            assert_eq!(code(&there), 1, "non-complementary input has no pretopology");
            continue;
        }
        assert_eq!(code(&there), 0, "{name}");
        assert!(matches!(document(&there), Document::Family(_)));
        let q = dir.path().join(format!("{name}-family.json"));
        std::fs::write(&q, &there.stdout).unwrap();
        let back = ccf(&["convert", arg(&q), "--to", "choice-function"], None);
        assert_eq!(code(&back), 0);
        let original = std::fs::read_to_string(&p).unwrap();
        assert_eq!(canonical(&stdout(&back)), canonical(&original), "{name}");
    }
}

#[test]
fn supermodular_route_round_trips() {
    let dir = TempDir::new().unwrap();
    for name in ["fork", "blocks", "bundle", "chain-ab"] {
        let p = fixture(&dir, name);
        let there = ccf(&["convert", arg(&p), "--to", "supermodular"], None);
        assert_eq!(code(&there), 0, "{name}");
        let q = dir.path().join(format!("{name}-u.json"));
        std::fs::write(&q, &there.stdout).unwrap();
        let check = ccf(&["verify", arg(&q), "--expect", "supermodular,f.complementary"], None);
        assert_eq!(code(&check), 0, "{}", stdout(&check));
        let back = ccf(&["convert", arg(&q), "--to", "choice-function"], None);
        assert_eq!(code(&back), 0);
        let original = std::fs::read_to_string(&p).unwrap();
        assert_eq!(canonical(&stdout(&back)), canonical(&original), "{name}");
    }
}

#[test]
fn perturbed_supermodular_route_is_stamped() {
    let dir = TempDir::new().unwrap();
    let p = fixture(&dir, "fork");
    let o = ccf(&["--epsilon", "1/4", "convert", arg(&p), "--to", "supermodular"], None);
    assert_eq!(code(&o), 0);
    let (_, stamp) = io::parse(&stdout(&o)).unwrap();
    assert!(stamp.expect("stamped").verified);
    assert_eq!(code(&ccf(&["--epsilon", "0", "convert", arg(&p), "--to", "supermodular"], None)), 2);
    assert_eq!(code(&ccf(&["--epsilon", "-1/3", "convert", arg(&p), "--to", "supermodular"], None)), 2);
}

#[test]
fn fork_has_no_preorder() {
    let dir = TempDir::new().unwrap();
    let p = fixture(&dir, "fork");
    let o = ccf(&["convert", arg(&p), "--to", "preorder"], None);
    assert_eq!(code(&o), 1);
    let err = String::from_utf8_lossy(&o.stderr).to_string();
    assert!(err.contains("minimal neighborhoods {{a,b}, {a,c}}"), "{err}");
}

#[test]
fn blocks_preorder_and_lifts_round_trip() {
    let dir = TempDir::new().unwrap();
    let p = fixture(&dir, "blocks");
    let original = canonical(&std::fs::read_to_string(&p).unwrap());
    for route in ["preorder", "lift", "economical-lift"] {
        let there = ccf(&["convert", arg(&p), "--to", route], None);
        assert_eq!(code(&there), 0, "{route}");
        let q = dir.path().join(format!("blocks-{route}.json"));
        std::fs::write(&q, &there.stdout).unwrap();
        let back = ccf(&["convert", arg(&q), "--to", "choice-function"], None);
        assert_eq!(code(&back), 0, "{route}");
        assert_eq!(canonical(&stdout(&back)), original, "{route}");
    }
}

#[test]
fn unknown_route_is_input_error() {
    let dir = TempDir::new().unwrap();
    let p = fixture(&dir, "fork");
    assert_eq!(code(&ccf(&["convert", arg(&p), "--to", "poetry"], None)), 2);
}

#[test]
fn json_output_is_canonical() {
    let dir = TempDir::new().unwrap();
    let p = fixture(&dir, "fork");
    let o = ccf(&["convert", arg(&p), "--to", "lift"], None);
    let (doc, stamp) = io::parse(&stdout(&o)).unwrap();
    assert_eq!(io::to_json(&doc, stamp.as_ref()), stdout(&o));
}

#[test]
fn enumerate_small_counts() {
    for (n, want) in [("1", 2), ("2", 7)] {
        let o = ccf(&["enumerate", n, "--format", "json"], None);
        assert_eq!(code(&o), 0);
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["union_closed_families"], want);
        assert_eq!(v["filtered_tables"], want);
    }
    let o = ccf(&["enumerate", "3", "--format", "json"], None);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["agree"], Value::Bool(true));
    assert_eq!(v["union_closed_families"], v["filtered_tables"]);
}

#[test]
fn enumerate_too_large_is_input_error() {
    assert_eq!(code(&ccf(&["enumerate", "6"], None)), 2);
}

#[test]
fn search_rediscovers_submodular_non_substitutable() {
    let o = ccf(&["search", "submodular-not-substitutable", "--n", "3", "--format", "json"], None);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["exhaustive"], Value::Bool(true));
    let findings = v["findings"].as_array().unwrap();
    assert!(!findings.is_empty());
    let example5: Vec<&str> = ["0", "3", "2", "2", "2", "2", "4", "1"].to_vec();
    assert!(findings.iter().any(|f| {
        let vals: Vec<&str> = f["set_function"]["values"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| e["value"].as_str().unwrap())
            .collect();
        vals == example5
    }));
}

#[test]
fn search_on_one_point_finds_nothing() {
    let o = ccf(&["search", "submodular-not-substitutable", "--n", "1", "--format", "json"], None);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["findings"].as_array().unwrap().is_empty());
}

#[test]
fn search_order_violation_finds_nothing() {
    for n in ["1", "2", "3"] {
        let o = ccf(&["search", "supermodular-order-violation", "--n", n, "--format", "json"], None);
        assert_eq!(code(&o), 0);
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert!(v["findings"].as_array().unwrap().is_empty(), "n = {n}");
    }
}

#[test]
fn search_unknown_pattern_is_input_error() {
    assert_eq!(code(&ccf(&["search", "bogus"], None)), 2);
    assert_eq!(code(&ccf(&["search", "custom-predicate", "--predicate", "u.wobbly"], None)), 2);
}

#[test]
fn every_fixture_reloads() {
    let o = ccf(&["fixtures", "--format", "json"], None);
    let list: Value = serde_json::from_str(&stdout(&o)).unwrap();
    for item in list.as_array().unwrap() {
        let name = item["name"].as_str().unwrap();
        let one = ccf(&["fixtures", name], None);
        assert_eq!(code(&one), 0);
        let (doc, _) = io::parse(&stdout(&one)).unwrap();
        assert_eq!(io::to_json(&doc, None), stdout(&one));
    }
    assert_eq!(code(&ccf(&["fixtures", "nope"], None)), 2);
}

#[test]
fn output_flag_writes_file() {
    let dir = TempDir::new().unwrap();
    let target = dir.path().join("out.json");
    let o = ccf(&["fixtures", "bundle", "-o", arg(&target)], None);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    io::parse(&std::fs::read_to_string(&target).unwrap()).unwrap();
}

#[test]
fn max_n_limit_rejects_large_documents() {
    let dir = TempDir::new().unwrap();
    let p = fixture(&dir, "fork");
    assert_eq!(code(&ccf(&["--max-n", "2", "verify", arg(&p)], None)), 2);
    assert_eq!(code(&ccf(&["--max-n", "0", "verify", arg(&p)], None)), 2);
}
