use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tempfile::NamedTempFile;

fn file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn dstab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dstab")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = dstab(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

const TRIANGLE: &str = "1 2\n2 3\n3 1\n";
const K4: &str = "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";

#[test]
fn analyze_even_cycle() {
    let f = file("1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n");
    let v = json(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(v["mt_bound"], 4);
    assert_eq!(v["p"], 1);
    assert_eq!(v["s"], 1);
    assert_eq!(v["components"][0]["class"], "unicyclic");
}

#[test]
fn dstab_both_on_union() {
    let f = file("1 2\n2 3\n3 1\n4 5\n5 6\n6 7\n7 4\n");
    let v = json(&["dstab", f.path().to_str().unwrap(), "--method", "both"]);
    assert_eq!(v["value"], 2);
    assert_eq!(v["oracle"], 2);
    assert_eq!(v["match"], true);
    assert_eq!(v["components"].as_array().unwrap().len(), 2);
}

#[test]
fn dstab_bound_only() {
    let f = file(K4);
    let v = json(&["dstab", f.path().to_str().unwrap(), "--method", "both"]);
    assert_eq!(v["value"], 3);
    assert_eq!(v["exact"], false);
    assert_eq!(v["oracle"], 2);
    assert_eq!(v["match"], false);
}

#[test]
fn depth_sequence_with_betti_check() {
    let f = file(TRIANGLE);
    let v = json(&["--verify", "depth-seq", f.path().to_str().unwrap(), "--max", "3"]);
    assert_eq!(v["depths"], serde_json::json!([1, 0, 0]));
    assert_eq!(v["betti_depths"], v["depths"]);
    assert_eq!(v["first_at_s"], 2);
}

#[test]
fn ass_both_methods() {
    let f = file(TRIANGLE);
    let v = json(&["ass", f.path().to_str().unwrap(), "--power", "2", "--method", "both"]);
    assert_eq!(v["match"], true);
    assert_eq!(v["contains_maximal"], true);
    assert_eq!(v["primes"].as_array().unwrap().len(), 4);
}

#[test]
fn homology_modes() {
    let facets = file("1 2\n2 3\n3 4\n4 1\n");
    let v = json(&["homology", facets.path().to_str().unwrap()]);
    assert_eq!(v["dims"], serde_json::json!([0, 0, 1]));

    let rp2 = file("1 2 3\n1 3 4\n1 4 5\n1 5 6\n1 6 2\n2 3 5\n3 4 6\n4 5 2\n5 6 3\n6 2 4\n");
    let q = json(&["homology", rp2.path().to_str().unwrap()]);
    let gf2 = json(&["--field", "gf:2", "homology", rp2.path().to_str().unwrap()]);
    assert_eq!(q["dims"], serde_json::json!([0, 0, 0, 0]));
    assert_eq!(gf2["dims"], serde_json::json!([0, 0, 1, 1]));

    let g = file(TRIANGLE);
    let v = json(&["homology", g.path().to_str().unwrap(), "--graph", "--alpha", "1,1,1", "--power", "2"]);
    assert!(v["dims"].is_array());
}

#[test]
fn reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dstab"))
        .args(["--format", "json", "dstab", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"1 2\n2 3\n3 4\n4 5\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["value"], 3);
}

#[test]
fn exit_codes() {
    let empty = file("# nothing here\n");
    assert_eq!(dstab(&["dstab", empty.path().to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(dstab(&["dstab", "/nonexistent/graph.txt"]).status.code(), Some(2));
    let bad = file("1 2\n2 x\n");
    let out = dstab(&["analyze", bad.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let t = file(TRIANGLE);
    let out = dstab(&["--max-r", "2", "dstab", t.path().to_str().unwrap(), "--method", "oracle"]);
    assert_eq!(out.status.code(), Some(3));
    let out = dstab(&["--max-power", "1", "depth-seq", t.path().to_str().unwrap(), "--max", "3"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn json_is_stable_and_thread_independent() {
    let f = file("1 2\n2 3\n3 1\n3 4\n4 5\n5 6\n6 4\n");
    let p = f.path().to_str().unwrap();
    let args = ["--format", "json", "depth-seq", p, "--max", "3"];
    let a = dstab(&args).stdout;
    let b = dstab(&args).stdout;
    let mut threaded = vec!["--threads", "2"];
    threaded.extend_from_slice(&args);
    let c = dstab(&threaded).stdout;
    assert_eq!(a, b);
    assert_eq!(a, c);
    let v: Value = serde_json::from_slice(&a).unwrap();
    let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
    assert_eq!(serde_json::from_str::<Value>(&again).unwrap(), v);
}

#[test]
fn text_output() {
    let f = file(TRIANGLE);
    let out = dstab(&["dstab", f.path().to_str().unwrap()]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("dstab 2 (exact)"), "{text}");
}
