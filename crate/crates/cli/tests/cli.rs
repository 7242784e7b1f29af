//! End-to-end tests of the `gdisp` binary: subcommand output, exit
//! codes, determinism, and CSV/JSON value agreement.

use graph_dispersion::extremal::canonical_mask;
use graph_dispersion::{families, graph6};
use serde_json::Value;
use std::io::Write;
use std::process::{Command, Stdio};

fn gdisp() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gdisp"))
}

fn run_ok(args: &[&str]) -> String {
    let out = gdisp().args(args).output().expect("binary runs");
    assert!(
        out.status.success(),
        "gdisp {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn run_with_stdin(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = gdisp()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).to_string(),
        String::from_utf8_lossy(&out.stderr).to_string(),
    )
}

#[test]
fn stats_on_k2_reports_regular_values() {
    let (code, stdout, _) = run_with_stdin(&["stats", "--graph6", "-"], "A_\n");
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(stdout.lines().next().unwrap()).unwrap();
    assert_eq!(v["graph6"], "A_");
    assert_eq!(v["dispersion"]["gamma"].as_f64().unwrap(), 1.0);
    assert_eq!(v["dispersion"]["c_e"].as_f64().unwrap(), 0.0);
    assert_eq!(v["dispersion"]["c_d"], "0/1");
}

#[test]
fn search_max_cd_on_six_vertices_emits_the_star() {
    let stdout = run_ok(&["search", "--n", "6", "--objective", "max-cd"]);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["census"].as_u64().unwrap(), 26704);
    let witnesses = v["witnesses"].as_array().unwrap();
    assert_eq!(witnesses.len(), 1);
    let witness = graph6::decode(witnesses[0].as_str().unwrap()).unwrap();
    let star = families::star(5).unwrap();
    assert_eq!(
        canonical_mask(&witness).unwrap(),
        canonical_mask(&star).unwrap()
    );
    assert_eq!(v["best_value"], "4/5");
}

#[test]
fn limits_table_golden_ratio_row() {
    let stdout = run_ok(&["limits-table", "--k", "1", "--n", "2000"]);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 7);
    let split = rows
        .iter()
        .find(|r| r["family"] == "S(n,kn)")
        .expect("split row present");
    let eval = &split["evaluations"][0];
    assert_eq!(eval["n"].as_u64().unwrap(), 2000);
    assert!(eval["gap_gamma_sq_minus_1"].as_f64().unwrap() <= 5e-3);
    assert!(eval["gap_c_e"].as_f64().unwrap() <= 5e-3);
    assert!(eval["gap_c_d"].as_f64().unwrap() <= 5e-3);
    // Infinite limits are the string "inf", never a float.
    let star = rows.iter().find(|r| r["family"] == "K_{1,n}").unwrap();
    assert_eq!(star["limits"]["gamma_sq_minus_1"], "inf");
    let reg = rows.iter().find(|r| r["family"] == "P_nG_n^r").unwrap();
    assert_eq!(reg["limits"]["c_e"], Value::Null);
}

#[test]
fn verify_product_suite_passes() {
    let stdout = run_ok(&["verify", "--suite", "product"]);
    assert!(stdout.lines().count() >= 4);
    for line in stdout.lines() {
        assert!(line.starts_with("PASS "), "unexpected line: {line}");
    }
}

#[test]
fn usage_errors_exit_one() {
    let out = gdisp()
        .args(["search", "--n", "6", "--objective", "max-entropy"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = gdisp().args(["--definitely-not-a-flag"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = gdisp()
        .args(["family-stats", "--family", "kite", "--params", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    // Disconnected input graph: decodes fine, but the statistics reject it.
    let (code, _, stderr) = run_with_stdin(&["stats", "--graph6", "-"], "A?\n");
    assert_eq!(code, 1, "stderr: {stderr}");
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let a = run_ok(&["limits-table", "--k", "1,2", "--n", "50,100"]);
    let b = run_ok(&["limits-table", "--k", "1,2", "--n", "50,100"]);
    assert_eq!(a, b);
    let a = run_ok(&["family-stats", "--family", "star", "--params", "9"]);
    let b = run_ok(&["family-stats", "--family", "star", "--params", "9"]);
    assert_eq!(a, b);
}

#[test]
fn search_is_deterministic_modulo_runtime() {
    let strip = |s: &str| -> Value {
        let mut v: Value = serde_json::from_str(s).unwrap();
        v.as_object_mut().unwrap().remove("runtime_secs");
        v
    };
    let a = run_ok(&["search", "--n", "5", "--objective", "min-gamma"]);
    let b = run_ok(&["search", "--n", "5", "--objective", "min-gamma"]);
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn csv_and_json_encode_the_same_values() {
    let json = run_ok(&["family-stats", "--family", "complete-split", "--params", "3,4"]);
    let csv_text = run_ok(&[
        "family-stats",
        "--family",
        "complete-split",
        "--params",
        "3,4",
        "--csv",
    ]);
    let v: Value = serde_json::from_str(&json).unwrap();
    let mut reader = csv::Reader::from_reader(csv_text.as_bytes());
    let headers = reader.headers().unwrap().clone();
    let col = |record: &csv::StringRecord, name: &str| -> String {
        let idx = headers.iter().position(|h| h == name).unwrap();
        record[idx].to_string()
    };
    let mut saw_numeric = false;
    let mut saw_analytic = false;
    for record in reader.records() {
        let record = record.unwrap();
        let route = col(&record, "route");
        let side = &v[route.replace("closed-form", "analytic").as_str()];
        saw_numeric |= route == "numeric";
        saw_analytic |= route == "analytic";
        assert_eq!(
            col(&record, "gamma").parse::<f64>().unwrap(),
            side["gamma"].as_f64().unwrap(),
            "gamma mismatch on {route}"
        );
        assert_eq!(
            col(&record, "c_e").parse::<f64>().unwrap(),
            side["c_e"].as_f64().unwrap()
        );
        assert_eq!(col(&record, "c_d"), side["c_d"].as_str().unwrap());
    }
    assert!(saw_numeric && saw_analytic);
}

#[test]
fn cartesian_power_family_is_numeric_only() {
    let stdout = run_ok(&[
        "family-stats",
        "--family",
        "cartesian-power",
        "--params",
        "2",
        "--base-family",
        "star",
        "--base-params",
        "3",
    ]);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert!(v["numeric"].is_object());
    assert!(v["analytic"].is_null());
    // c_d(K_{1,3} [] K_{1,3}) = (1/3)/2 = 1/6.
    assert_eq!(v["numeric"]["c_d"], "1/6");
    let out = gdisp()
        .args([
            "family-stats",
            "--family",
            "cartesian-power",
            "--params",
            "2",
            "--base-family",
            "star",
            "--base-params",
            "3",
            "--analytic",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn search_accepts_graph6_stream_beyond_builtin_range() {
    // Three 8-vertex graphs; the star has the largest degree dispersion.
    let star = families::star(7).unwrap();
    let path = graph_dispersion::Graph::build(8, &(0..7).map(|i| (i, i + 1)).collect::<Vec<_>>())
        .unwrap();
    let cube = families::star(1).unwrap().cartesian_power(3).unwrap();
    let stream = [&star, &path, &cube]
        .iter()
        .map(|g| graph6::encode(g).unwrap())
        .collect::<Vec<_>>()
        .join("\n");
    let dir = std::env::temp_dir().join(format!("gdisp-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("order8.g6");
    std::fs::write(&file, stream).unwrap();

    let stdout = run_ok(&[
        "search",
        "--n",
        "8",
        "--objective",
        "max-cd",
        "--graph6",
        file.to_str().unwrap(),
    ]);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["census"].as_u64().unwrap(), 3);
    assert_eq!(v["best_value"], "9/7");
    let witness = graph6::decode(v["witnesses"][0].as_str().unwrap()).unwrap();
    assert_eq!(
        canonical_mask(&witness).unwrap(),
        canonical_mask(&star).unwrap()
    );

    // Mixed orders are rejected as a usage error.
    let mixed = dir.join("mixed.g6");
    std::fs::write(&mixed, "A_\n").unwrap();
    let out = gdisp()
        .args(["search", "--n", "8", "--objective", "max-cd", "--graph6"])
        .arg(&mixed)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn clustering_comparison_is_exact() {
    let stdout = run_ok(&[
        "clustering",
        "--family",
        "complete-split",
        "--n",
        "5",
        "--m",
        "7",
    ]);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["equal"], Value::Bool(true));
    assert_eq!(v["direct"]["average"], v["closed_form"]["average"]);
}

#[test]
fn stats_reports_decode_errors_with_position() {
    let (code, _, stderr) = run_with_stdin(&["stats", "--graph6", "-"], "A_\nB\n");
    assert_eq!(code, 1);
    assert!(stderr.contains("line 2"), "stderr: {stderr}");
}
