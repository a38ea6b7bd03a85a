//! End-to-end checks of the `forcing` binary: JSON reports, exit codes, and
//! file round trips.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_forcing"))
}

fn write(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn json_of(output: &Output) -> Value {
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is a JSON report")
}

const DIAMOND: &str = "p digraph 4 4\nt 1 4\ne 1 2 1\ne 1 3 1\ne 2 4 1\ne 3 4 1\n";
const C5: &str = "p graph 5 5\ne 1 2 1\ne 2 3 1\ne 3 4 1\ne 4 5 1\ne 5 1 1\n";
const TRIANGLE: &str = "p graph 3 3\ne 1 2 1\ne 2 3 1\ne 1 3 1\n";
const MATROID: &str = "p matroid 3\nb 1 2\nb 1 3\nb 2 3\n";
const UNIT_WEIGHTS3: &str = "w 1 1\nw 2 1\nw 3 1\n";

#[test]
fn sp_force_diamond() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "diamond.gr", DIAMOND);
    let out = bin().arg("sp-force").arg(&input).output().unwrap();
    let report = json_of(&out);
    assert_eq!(report["command"], "sp-force");
    assert_eq!(report["result"]["size"], 1);
    assert_eq!(report["result"]["set"], serde_json::json!([1]));
    assert!(report["input"]["sha256"].as_str().unwrap().len() == 64);

    // The per-path variant pins the other branch.
    let out = bin().arg("sp-force").arg(&input).args(["--path", "2,4"]).output().unwrap();
    let report = json_of(&out);
    assert_eq!(report["result"]["set"], serde_json::json!([2]));
}

#[test]
fn sp_antiforce_modes() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "diamond.gr", DIAMOND);
    let out = bin().arg("sp-antiforce").arg(&input).args(["--path", "1,3"]).output().unwrap();
    let report = json_of(&out);
    assert_eq!(report["result"]["size"], 1);

    let out = bin().arg("sp-antiforce").arg(&input).arg("--exact").output().unwrap();
    assert_eq!(json_of(&out)["result"]["size"], 1);

    let out = bin()
        .arg("sp-antiforce")
        .arg(&input)
        .args(["--exact", "--budget", "0"])
        .output()
        .unwrap();
    assert_eq!(json_of(&out)["result"]["exceeds_budget"], 0);

    // Neither mode selected is an input error.
    let out = bin().arg("sp-antiforce").arg(&input).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn resource_limit_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "diamond.gr", DIAMOND);
    let out = bin()
        .arg("sp-antiforce")
        .arg(&input)
        .args(["--exact", "--path-limit", "0", "--node-limit", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("resource limit"));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let zero_weight = write(dir.path(), "bad.gr", "p digraph 2 1\nt 1 2\ne 1 2 0\n");
    let out = bin().arg("sp-force").arg(&zero_weight).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin().arg("sp-force").arg(dir.path().join("missing.gr")).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin().arg("no-such-command").output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    // Unreachable target.
    let unreachable = write(dir.path(), "unreach.gr", "p digraph 2 1\nt 1 2\ne 2 1 1\n");
    let out = bin().arg("sp-force").arg(&unreachable).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mst_commands() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.gr", C5);
    let out = bin().arg("mst-antiforce").arg(&c5).output().unwrap();
    let report = json_of(&out);
    assert_eq!(report["result"]["size"], 1);
    assert_eq!(report["result"]["trace"].as_array().unwrap().len(), 1);

    let out = bin().arg("mst-force").arg(&c5).output().unwrap();
    assert_eq!(json_of(&out)["result"]["size"], 4);

    let triangle = write(dir.path(), "triangle.gr", TRIANGLE);
    let out = bin().arg("mst-antiforce").arg(&triangle).args(["--basis", "1,3"]).output().unwrap();
    let report = json_of(&out);
    assert_eq!(report["result"]["set"], serde_json::json!([2]));
    assert_eq!(report["result"]["witness"], serde_json::json!([1, 3]));

    // Weight override makes the spanning tree unique.
    let weights = write(dir.path(), "w.txt", "w 1 1\nw 2 1\nw 3 5\n");
    let out = bin()
        .arg("mst-force")
        .arg(&triangle)
        .arg("--weights")
        .arg(&weights)
        .output()
        .unwrap();
    assert_eq!(json_of(&out)["result"]["size"], 0);
}

#[test]
fn matroid_commands_report_oracle_calls() {
    let dir = tempfile::tempdir().unwrap();
    let matroid = write(dir.path(), "m.matroid", MATROID);
    let weights = write(dir.path(), "w.txt", UNIT_WEIGHTS3);
    let out = bin()
        .arg("matroid-antiforce")
        .arg(&matroid)
        .arg("--weights")
        .arg(&weights)
        .output()
        .unwrap();
    let report = json_of(&out);
    assert_eq!(report["result"]["size"], 1);
    assert!(report["oracle_calls"].as_u64().unwrap() > 0);

    let out = bin()
        .arg("matroid-force")
        .arg(&matroid)
        .arg("--weights")
        .arg(&weights)
        .args(["--basis", "1,2"])
        .output()
        .unwrap();
    assert_eq!(json_of(&out)["result"]["set"], serde_json::json!([1, 2]));

    // Non-matroid basis lists are rejected loudly.
    let bogus = write(dir.path(), "bogus.matroid", "p matroid 4\nb 1 2\nb 3 4\n");
    let out = bin().arg("matroid-force").arg(&bogus).arg("--weights").arg(&weights).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_accepts_solver_output() {
    let dir = tempfile::tempdir().unwrap();
    let diamond = write(dir.path(), "diamond.gr", DIAMOND);
    let out = bin().arg("verify").arg("sp-force").arg(&diamond).args(["--set", "1"]).output().unwrap();
    let report = json_of(&out);
    assert_eq!(report["result"]["valid"], true);
    assert_eq!(report["result"]["is_minimum"], true);

    // The empty set is not forcing here (two shortest paths).
    let out = bin().arg("verify").arg("sp-force").arg(&diamond).output().unwrap();
    assert_eq!(json_of(&out)["result"]["valid"], false);

    let c5 = write(dir.path(), "c5.gr", C5);
    let solved = json_of(&bin().arg("mst-antiforce").arg(&c5).output().unwrap());
    let set = solved["result"]["set"][0].as_u64().unwrap().to_string();
    let out = bin().arg("verify").arg("mst-antiforce").arg(&c5).args(["--set", &set]).output().unwrap();
    let report = json_of(&out);
    assert_eq!(report["result"]["valid"], true);
    assert_eq!(report["result"]["is_minimum"], true);
    assert_eq!(report["result"]["solution_count"], 5);

    let matroid = write(dir.path(), "m.matroid", MATROID);
    let weights = write(dir.path(), "w.txt", UNIT_WEIGHTS3);
    let solved = json_of(
        &bin().arg("matroid-force").arg(&matroid).arg("--weights").arg(&weights).output().unwrap(),
    );
    let set: Vec<String> = solved["result"]["set"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap().to_string())
        .collect();
    let out = bin()
        .arg("verify")
        .arg("matroid-force")
        .arg(&matroid)
        .arg("--weights")
        .arg(&weights)
        .args(["--set", &set.join(",")])
        .output()
        .unwrap();
    let report = json_of(&out);
    assert_eq!(report["result"]["valid"], true);
    assert_eq!(report["result"]["is_minimum"], true);
}

#[test]
fn reduce_vc_emits_parseable_files() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "path3.gr", "p graph 3 2\ne 1 2 1\ne 2 3 1\n");
    let prefix = dir.path().join("out");
    let out = bin()
        .arg("reduce-vc")
        .arg(&g)
        .arg("1")
        .arg("--out")
        .arg(&prefix)
        .output()
        .unwrap();
    let report = json_of(&out);
    assert_eq!(report["result"]["N"], 10);
    assert_eq!(report["result"]["shortest_path_length"], 16);

    let graph_file = report["result"]["graph_file"].as_str().unwrap().to_string();
    let roles_file = report["result"]["roles_file"].as_str().unwrap().to_string();
    let roles: Value =
        serde_json::from_str(&std::fs::read_to_string(&roles_file).unwrap()).unwrap();
    assert_eq!(roles["N"], 10);
    assert_eq!(roles["thick_groups"].as_array().unwrap().len(), 2 * 3 + 2);

    // The emitted gadget re-parses and the anti-forcing machinery runs on it.
    let out = bin().arg("sp-dag").arg(&graph_file).output().unwrap();
    let report = json_of(&out);
    assert_eq!(report["result"]["shortest_distance"], 16);
    let declared_edges = report["result"]["edge_count"].as_u64().unwrap();
    assert_eq!(
        declared_edges,
        roles["edge_roles"].as_object().unwrap().len() as u64
    );

    // Simple variant: unit weights, no parallels, doubled distance.
    let prefix2 = dir.path().join("simple");
    let out = bin()
        .arg("reduce-vc")
        .arg(&g)
        .arg("1")
        .arg("--simple")
        .arg("--out")
        .arg(&prefix2)
        .output()
        .unwrap();
    let report = json_of(&out);
    let simple_file = report["result"]["graph_file"].as_str().unwrap().to_string();
    let out = bin().arg("sp-dag").arg(&simple_file).output().unwrap();
    assert_eq!(json_of(&out)["result"]["shortest_distance"], 32);
}

#[test]
fn sp_dag_out_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    // One slack edge (id 3) should be pruned from the emitted DAG.
    let input = write(
        dir.path(),
        "g.gr",
        "p digraph 4 5\nt 1 4\ne 1 2 1\ne 1 3 1\ne 1 4 9\ne 2 4 1\ne 3 4 1\n",
    );
    let emitted = dir.path().join("dag.gr");
    let out = bin().arg("sp-dag").arg(&input).arg("--out").arg(&emitted).output().unwrap();
    let report = json_of(&out);
    assert_eq!(report["result"]["edge_id_map"], serde_json::json!([1, 2, 4, 5]));

    let out = bin().arg("sp-force").arg(&emitted).output().unwrap();
    assert_eq!(json_of(&out)["result"]["size"], 1);
}

#[test]
fn json_only_silences_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "diamond.gr", DIAMOND);
    let out = bin().arg("sp-force").arg(&input).arg("--json-only").output().unwrap();
    assert!(out.status.success());
    assert!(out.stderr.is_empty());
    let loud = bin().arg("sp-force").arg(&input).output().unwrap();
    assert!(!loud.stderr.is_empty());
}

#[test]
fn undirected_path_instance_works() {
    let dir = tempfile::tempdir().unwrap();
    // Undirected diamond with terminals: same structure as the digraph.
    let input = write(
        dir.path(),
        "ud.gr",
        "p graph 4 4\nt 1 4\ne 1 2 1\ne 1 3 1\ne 2 4 1\ne 3 4 1\n",
    );
    let out = bin().arg("sp-force").arg(&input).output().unwrap();
    assert_eq!(json_of(&out)["result"]["size"], 1);
    let out = bin().arg("sp-antiforce").arg(&input).arg("--exact").output().unwrap();
    assert_eq!(json_of(&out)["result"]["size"], 1);
}
