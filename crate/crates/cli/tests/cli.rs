use std::fs;
use std::path::PathBuf;
use std::process::Command;

use ktmd_cli::{run, EXIT_BUDGET, EXIT_NO_GENERATOR, EXIT_OK, EXIT_USAGE};
use serde_json::Value;
use tempfile::TempDir;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn ktmd(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ktmd").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

/// Writes `gen` output for `kind sizes…` into the temp dir.
fn generated(dir: &TempDir, name: &str, gen_args: &[&str]) -> PathBuf {
    let mut args = vec!["gen", "--kind"];
    args.extend_from_slice(gen_args);
    let o = ktmd(&args);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let path = dir.path().join(name);
    fs::write(&path, o.stdout).unwrap();
    path
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", o.stdout))
}

#[test]
fn dim_on_p4() {
    let dir = TempDir::new().unwrap();
    let p4 = generated(&dir, "p4.edges", &["path", "4"]);
    let o = ktmd(&[
        "dim",
        "--input",
        p4.to_str().unwrap(),
        "--k",
        "1",
        "--t",
        "2",
    ]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("dimension = 2"), "{}", o.stdout);
    assert!(o.stdout.contains("status = Solved"));
    assert!(o.stdout.contains("basis = {"));
}

#[test]
fn dimensional_on_c7() {
    let dir = TempDir::new().unwrap();
    let c7 = generated(&dir, "c7.edges", &["cycle", "7"]);
    let o = ktmd(&[
        "dimensional",
        "--input",
        c7.to_str().unwrap(),
        "--t",
        "2",
        "--json",
    ]);
    assert_eq!(o.code, EXIT_OK);
    let v = json(&o);
    assert_eq!(v["dimension"], 4);
    assert_eq!(v["t"], 2);
    assert!(v["witness"].is_array());
}

#[test]
fn infeasible_query_exits_one() {
    let dir = TempDir::new().unwrap();
    let k5 = generated(&dir, "k5.edges", &["complete", "5"]);
    let o = ktmd(&[
        "dim",
        "--input",
        k5.to_str().unwrap(),
        "--k",
        "3",
        "--t",
        "2",
        "--json",
    ]);
    assert_eq!(o.code, EXIT_NO_GENERATOR);
    let v = json(&o);
    assert_eq!(v["status"], "NoGenerator");
    assert_eq!(v["dimension"], Value::Null);
}

#[test]
fn json_schema_is_shared() {
    let dir = TempDir::new().unwrap();
    let c6 = generated(&dir, "c6.edges", &["cycle", "6"]);
    let input = c6.to_str().unwrap();
    for args in [
        vec!["dim", "--input", input, "--k", "2", "--json"],
        vec![
            "dim", "--input", input, "--k", "2", "--json", "--solver", "greedy",
        ],
        vec![
            "dim", "--input", input, "--k", "2", "--json", "--solver", "brute",
        ],
        vec!["dimensional", "--input", input, "--json"],
        vec!["profile", "--input", input, "--json"],
    ] {
        let o = ktmd(&args);
        assert_eq!(o.code, EXIT_OK, "{args:?}: {}", o.stderr);
        let v = json(&o);
        for field in ["n", "t", "k", "status", "dimension", "basis", "stats"] {
            assert!(v.get(field).is_some(), "{args:?} lacks {field}");
        }
        assert_eq!(v["n"], 6);
        assert_eq!(v["t"], 3, "default t is the diameter");
    }
}

#[test]
fn solvers_agree_through_the_cli() {
    let dir = TempDir::new().unwrap();
    let w = generated(&dir, "w.edges", &["wheel", "6"]);
    let values: Vec<Value> = ["exact", "brute"]
        .iter()
        .map(|s| {
            json(&ktmd(&[
                "dim",
                "--input",
                w.to_str().unwrap(),
                "--k",
                "2",
                "--solver",
                s,
                "--json",
            ]))["dimension"]
                .clone()
        })
        .collect();
    assert_eq!(values[0], values[1]);
}

#[test]
fn profile_lists_every_row() {
    let dir = TempDir::new().unwrap();
    let p5 = generated(&dir, "p5.edges", &["path", "5"]);
    let o = ktmd(&[
        "profile",
        "--input",
        p5.to_str().unwrap(),
        "--t",
        "3",
        "--json",
    ]);
    assert_eq!(o.code, EXIT_OK);
    let rows = json(&o)["profile"].as_array().unwrap().clone();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["dimensional"], 2);
    assert_eq!(rows[0]["values"], serde_json::json!([4, 5]));
}

#[test]
fn gen_output_round_trips() {
    let dir = TempDir::new().unwrap();
    let first = generated(&dir, "a.edges", &["complete_bipartite", "2", "3"]);
    let text = fs::read_to_string(&first).unwrap();
    assert!(text.starts_with("5 6\n"));
    let graph = ktmd::edge_list::parse_edge_list(&text).unwrap();
    assert_eq!(ktmd::edge_list::to_edge_list(&graph), text);
}

#[test]
fn gadget_writes_h3() {
    let o = ktmd(&["gadget", "--k", "3"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.starts_with("22 "));
    let o = ktmd(&["gadget", "--k", "4"]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("odd"));
}

#[test]
fn tiny_budget_exits_three() {
    let dir = TempDir::new().unwrap();
    let c = generated(&dir, "c12.edges", &["cycle", "12"]);
    let o = ktmd(&[
        "dim",
        "--input",
        c.to_str().unwrap(),
        "--k",
        "1",
        "--t",
        "2",
        "--budget",
        "1",
    ]);
    assert_eq!(o.code, EXIT_BUDGET);
    assert!(o.stdout.contains("UpperBoundOnly"));
}

#[test]
fn usage_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    assert_eq!(ktmd(&[]).code, EXIT_USAGE);
    assert_eq!(ktmd(&["dim", "--k", "1"]).code, EXIT_USAGE);
    assert_eq!(ktmd(&["gen", "--kind", "hexagon", "3"]).code, EXIT_USAGE);
    let missing = ktmd(&["dim", "--input", "/nonexistent/file", "--k", "1"]);
    assert_eq!(missing.code, EXIT_USAGE);
    assert!(missing.stderr.starts_with("error:"));

    let bad = dir.path().join("bad.edges");
    fs::write(&bad, "3 1\n0 0\n").unwrap();
    let o = ktmd(&["dim", "--input", bad.to_str().unwrap(), "--k", "1"]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("line 2"));

    let disconnected = dir.path().join("split.edges");
    fs::write(&disconnected, "4 2\n0 1\n2 3\n").unwrap();
    let o = ktmd(&["dim", "--input", disconnected.to_str().unwrap(), "--k", "1"]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("--t"));
    let o = ktmd(&[
        "dim",
        "--input",
        disconnected.to_str().unwrap(),
        "--k",
        "1",
        "--t",
        "2",
    ]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
}

#[test]
fn verify_filters_by_tag() {
    let o = ktmd(&["verify", "--tag", "path-adjacency"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stdout);
    assert!(o
        .stdout
        .lines()
        .filter(|l| l.contains(" | "))
        .all(|l| l.starts_with("path-adjacency |")));
    let o = ktmd(&["verify", "--tag", "gadget-removal-certificate", "--json"]);
    assert_eq!(o.code, EXIT_NO_GENERATOR);
    let v = json(&o);
    assert_eq!(v["summary"]["failed"], 1);
}

#[test]
fn binary_exit_codes_and_thread_variable() {
    let dir = TempDir::new().unwrap();
    let k5 = generated(&dir, "k5.edges", &["complete", "5"]);
    let bin = env!("CARGO_BIN_EXE_ktmd");
    let status = Command::new(bin)
        .args(["dim", "--input", k5.to_str().unwrap(), "--k", "3"])
        .output()
        .unwrap()
        .status;
    assert_eq!(status.code(), Some(EXIT_NO_GENERATOR));
    let out = Command::new(bin)
        .env("KTMD_THREADS", "2")
        .args(["dim", "--input", k5.to_str().unwrap(), "--k", "2", "--json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dimension"], 5);
    let bad = Command::new(bin)
        .env("KTMD_THREADS", "0")
        .args(["dim", "--input", k5.to_str().unwrap(), "--k", "2"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(EXIT_OK));
}
