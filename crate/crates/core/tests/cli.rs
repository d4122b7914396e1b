use std::fs;
use std::process::{Command, Output};

use critsets::fixtures;
use critsets::io::parse_edge_list;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_critsets")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_g2() {
    let j = json(&["analyze", "--fixture", "G2", "--json"]);
    assert_eq!(j["dc"], 1);
    assert_eq!(j["ker"], serde_json::json!(["x", "y"]));
    assert_eq!(j["core"], serde_json::json!(["x", "y", "z"]));
    assert_eq!(j["quasi_regularizable"], false);
    assert_eq!(j["schema"], 1);
}

#[test]
fn analyze_k2_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k2.txt");
    fs::write(&path, "a b\n").unwrap();
    let j = json(&["analyze", path.to_str().unwrap(), "--json"]);
    assert_eq!(j["dc"], 0);
    assert_eq!(j["ker"], serde_json::json!([]));
    assert_eq!(j["quasi_regularizable"], true);
}

#[test]
fn analyze_gfig3_with_oracle_and_cross_check() {
    let j = json(&["analyze", "--fixture", "Gfig3", "--json", "--oracle", "--oracle-limit", "16", "--cross-check"]);
    assert_eq!(j["ker"], serde_json::json!(["a", "b", "c"]));
    assert_eq!(j["core"], serde_json::json!(["a", "b", "c", "u"]));
    assert_eq!(j["dc"], 2);
    assert_eq!(j["oracle"]["agrees"], true);
}

#[test]
fn analyze_dimacs_and_human_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p3.col");
    fs::write(&path, "c path\np edge 3 2\ne 1 2\ne 2 3\n").unwrap();
    let out = run(&["analyze", path.to_str().unwrap(), "--format", "dimacs"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("n ≥ ζ ≥ α ≥ ξ ≥ ε ≥ d_c ≥ α−μ\n3 ≥ 2 ≥ 2 ≥ 2 ≥ 2 ≥ 1 ≥ 1\n"), "{text}");
}

#[test]
fn guard_makes_fields_unavailable() {
    let j = json(&["analyze", "--fixture", "G3", "--json", "--exact-guard", "4"]);
    assert_eq!(j["core"], "unavailable");
    assert_eq!(j["xi"], "unavailable");
    assert!(j["alpha"].is_array());
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "a b\nb a\n").unwrap();
    assert_eq!(run(&["analyze", path.to_str().unwrap()]).status.code(), Some(2));
    fs::write(&path, "a a\n").unwrap();
    assert_eq!(run(&["analyze", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "--fixture", "G9"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--random", "grid:4"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "fixtures", "--checks", "C0"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "--model", "gnp", "--n", "5", "--p", "1.5"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_tree_c13_passes() {
    let out = run(&["verify", "--random", "tree:30", "--count", "100", "--seed", "1", "--checks", "C13"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn verify_reports_failures_with_exit_1() {
    // K2 has two maximum critical independent sets, {a} and {b}, so the
    // pendant-vertex statement fails there.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k2.txt");
    fs::write(&path, "a b\n").unwrap();
    let out = run(&["verify", path.to_str().unwrap(), "--checks", "C14"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL C14"));
    let out = run(&["verify", path.to_str().unwrap(), "--checks", "C4,C17"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_json_is_ordered_and_repeatable() {
    let args = ["verify", "--random", "gnp:10,0.3", "--count", "30", "--seed", "5", "--json"];
    let a = run(&args);
    let b = run(&[&args[..], &["--workers", "1"]].concat());
    assert_eq!(a.stdout, b.stdout);
    let j: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(j["graphs"], 30);
    assert_eq!(j["reports"][7]["graph"]["name"], "gnp:10,0.3#12");
}

#[test]
fn gen_examples() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.txt");
    let o = out.to_str().unwrap();

    assert!(run(&["gen", "--model", "gnp", "--n", "5", "--p", "0", "--seed", "1", "--out", o]).status.success());
    let g = parse_edge_list(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!((g.order(), g.size()), (5, 0));
    let j = json(&["analyze", o, "--json"]);
    assert_eq!(j["isolated_vertices"], true);

    assert!(run(&["gen", "--model", "gnp", "--n", "5", "--p", "1", "--seed", "1", "--out", o]).status.success());
    let g = parse_edge_list(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(g.size(), 10);

    let text = run(&["gen", "--model", "tree", "--n", "8", "--seed", "3"]).stdout;
    let t = parse_edge_list(std::str::from_utf8(&text).unwrap()).unwrap();
    assert!(t.is_connected() && t.size() == 7 && t.is_tree());
}

#[test]
fn fixtures_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    assert!(run(&["fixtures", "--out", dir.path().to_str().unwrap()]).status.success());
    for name in fixtures::NAMES {
        let text = fs::read_to_string(dir.path().join(format!("{name}.txt"))).unwrap();
        assert_eq!(parse_edge_list(&text).unwrap(), fixtures::graph(name).unwrap(), "{name}");
    }
    let g1 = parse_edge_list(&fs::read_to_string(dir.path().join("G1.txt")).unwrap()).unwrap();
    assert_eq!(g1.size(), 5);
    let gf = parse_edge_list(&fs::read_to_string(dir.path().join("Gfig3.txt")).unwrap()).unwrap();
    assert_eq!(gf.size(), 16);
}
