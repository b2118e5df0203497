//! End-to-end checks of the apexrandic binary: exit codes, report shapes,
//! input handling.

use std::io::Write;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_apexrandic"))
}

fn write_temp(content: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(content.as_bytes()).unwrap();
    f
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn randic_on_graph6_file() {
    let f = write_temp("C~\n");
    let out = bin().args(["randic", "--input"]).arg(f.path()).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["tool"], "apexrandic");
    assert_eq!(v["report"][0]["randic"]["exact"], "2");
    assert_eq!(v["report"][0]["randic"]["decimal"], "2.00000000000");
    assert_eq!(v["report"][0]["n"], 4);
    assert_eq!(v["report"][0]["m"], 6);
}

#[test]
fn randic_on_edge_list() {
    let f = write_temp("# C6\n6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    let out = bin().args(["randic", "--input"]).arg(f.path()).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["report"][0]["randic"]["exact"], "3");
    assert_eq!(v["report"][0]["asymmetric_edges"], 0);
}

#[test]
fn randic_on_family_member() {
    // K4 with edge subdivided three times, as an edge list
    let f = write_temp("7 9\n0 1\n0 2\n0 3\n1 2\n1 3\n2 4\n4 5\n5 6\n6 3\n");
    let out = bin().args(["randic", "--input"]).arg(f.path()).output().unwrap();
    let v = json_of(&out);
    assert_eq!(v["report"][0]["randic"]["exact"], "8/3 + 1/3*sqrt(6)");
    assert_eq!(v["report"][0]["randic"]["decimal"], "3.48316324759");
}

#[test]
fn randic_parse_error_exits_2() {
    let f = write_temp("C~\nC\n");
    let out = bin().args(["randic", "--input"]).arg(f.path()).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn randic_csv() {
    let f = write_temp("C~\n");
    let out = bin()
        .args(["randic", "--format", "csv", "--input"])
        .arg(f.path())
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("index,n,m,randic,gap,asymmetric_edges\n"));
    assert!(text.contains("0,4,6,2.00000000000"));
}

#[test]
fn apex_reports_witness() {
    let f = write_temp("C~\nBg\n"); // K4, P3
    let out = bin().args(["apex", "--input"]).arg(f.path()).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["report"][0]["apex_number"], 2);
    assert_eq!(v["report"][0]["witness"], serde_json::json!([0, 1]));
    assert_eq!(v["report"][1]["apex_number"], 0);
}

#[test]
fn apex_disconnected_is_per_graph_error_exit_1() {
    // two disjoint edges on 4 vertices: graph6 "C`"? build via edge list
    let f = write_temp("4 2\n0 1\n2 3\n");
    let out = bin().args(["apex", "--input"]).arg(f.path()).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    assert!(v["report"][0]["error"].as_str().unwrap().contains("connected"));
}

#[test]
fn audit_lemma5_finds_witness_exit_1() {
    let out = bin()
        .args(["audit", "lemma5", "--grid", "4..30"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    assert_eq!(v["report"]["claims"][0]["verdict"], "fails");
    assert_eq!(v["report"]["claims"][0]["witness"], "x=5");
}

#[test]
fn audit_lemma3_holds_exit_0() {
    let out = bin()
        .args(["audit", "lemma3", "--grid", "1..50"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn audit_theorem1_exit_0_with_empty_regular_list() {
    let out = bin()
        .args(["audit", "theorem1", "--k", "2", "--n", "7"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["report"][0]["scanned"], 439);
    assert_eq!(v["report"][0]["regular_witnesses"], serde_json::json!([]));
    assert_eq!(v["report"][0]["theorem_consistent"], true);
}

#[test]
fn audit_conjecture_carries_counterexamples() {
    let out = bin()
        .args(["audit", "conjecture", "--k", "2", "--n", "7"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    let report = &v["report"][0];
    assert_eq!(report["conjecture_holds"], false);
    assert_eq!(report["counterexamples"].as_array().unwrap().len(), 3);
    assert_eq!(report["max_value"]["exact"], "7/3 + 2/3*sqrt(3)");
}

#[test]
fn audit_infeasible_range_exits_2() {
    let out = bin()
        .args(["audit", "theorem1", "--k", "2", "--n", "12"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("refused"), "stderr was: {err}");
}

#[test]
fn audit_unknown_claim_exits_2() {
    let out = bin().args(["audit", "lemma9"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scan_plot_csv() {
    let out = bin()
        .args(["scan-plot", "--k", "2", "--n-range", "7..8", "--format", "csv"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,count,max_randic,extremal_value,gap_to_bound,conjecture");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("7,439,3.48803387171,3.48316324759,"));
    assert!(lines[1].ends_with(",false"));
    assert!(lines[2].starts_with("8,4011,3.98316324759,3.98316324759,"));
    assert!(lines[2].ends_with(",true"));
}

#[test]
fn scan_plot_empty_range_is_header_only() {
    let out = bin()
        .args(["scan-plot", "--k", "2", "--n-range", "8..7", "--format", "csv"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "n,count,max_randic,extremal_value,gap_to_bound,conjecture\n");
}

#[test]
fn scan_plot_below_scope_marks_na() {
    let out = bin()
        .args(["scan-plot", "--k", "2", "--n-range", "6..6", "--format", "csv"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let row = text.lines().nth(1).unwrap();
    assert!(row.starts_with("6,"));
    assert!(row.ends_with(",n/a"));
}

#[test]
fn enumerate_streams_sorted_graph6() {
    let out = bin().args(["enumerate", "--n", "5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 21);
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(lines, sorted);
}

#[test]
fn enumerate_guard_refuses_exit_2() {
    let out = bin().args(["enumerate", "--n", "12"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("allow-large"), "stderr was: {err}");
}

#[test]
fn enumerate_k_apex() {
    let out = bin()
        .args(["enumerate", "--n", "4", "--k", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 3);
}

#[test]
fn jobs_env_variable_is_honored() {
    let out = bin()
        .args(["enumerate", "--n", "4"])
        .env("APEXRANDIC_JOBS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
