//! Behavioural tests of the `hyperfree` binary: exit codes, format
//! parity, grid syntax, file output.

use std::process::{Command, Output};

fn hyperfree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperfree"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn eval_mass_of_cosine_member() {
    let out = hyperfree(&["eval", "charfn:C", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("s,value"));
    let row = lines.next().unwrap();
    let value: f64 = row.split(',').nth(1).unwrap().parse().unwrap();
    assert!((value - (std::f64::consts::FRAC_PI_2 - 1.0)).abs() < 1e-15);
}

#[test]
fn eval_transform_row_has_re_and_im() {
    let out = hyperfree(&["eval", "V:S", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let row = text.lines().nth(1).unwrap();
    let cells: Vec<f64> = row.split(',').map(|c| c.parse().unwrap()).collect();
    assert_eq!(cells.len(), 3);
    assert_eq!(cells[1], 0.0);
    assert!((cells[2] + 0.2703628454614782).abs() < 1e-14);
}

#[test]
fn csv_and_json_carry_identical_values() {
    let csv = hyperfree(&["eval", "charfn:psiC", "--grid", "0:2:0.5"]);
    let json = hyperfree(&["eval", "charfn:psiC", "--grid", "0:2:0.5", "--format", "json"]);
    assert_eq!(csv.status.code(), Some(0));
    assert_eq!(json.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    let csv_text = stdout(&csv);
    let csv_rows: Vec<&str> = csv_text.lines().skip(1).collect();
    assert_eq!(rows.len(), 5);
    assert_eq!(csv_rows.len(), 5);
    for (json_row, csv_row) in rows.iter().zip(csv_rows) {
        let cells: Vec<f64> = csv_row.split(',').map(|c| c.parse().unwrap()).collect();
        assert_eq!(json_row["s"].as_f64().unwrap(), cells[0]);
        assert_eq!(json_row["value"].as_f64().unwrap(), cells[1]);
    }
}

#[test]
fn grid_is_inclusive_within_half_step() {
    let out = hyperfree(&["eval", "density:T", "--grid", "0.1:0.3:0.1"]);
    let text = stdout(&out);
    let args: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|r| r.split(',').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(args.len(), 3);
    assert!((args[2] - 0.3).abs() < 1e-12);
}

#[test]
fn unknown_target_is_usage_error() {
    let out = hyperfree(&["eval", "nonsense", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_member_is_usage_error() {
    let out = hyperfree(&["eval", "V:Q", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_points_is_usage_error() {
    let out = hyperfree(&["eval", "digamma"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn domain_error_exits_three() {
    let out = hyperfree(&["eval", "digamma", "--", "-1"]);
    assert_eq!(out.status.code(), Some(3));
    let out = hyperfree(&["eval", "V:C", "0"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn clap_usage_error_exits_two() {
    let out = hyperfree(&["eval", "digamma", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_single_check_passes() {
    let out = hyperfree(&["verify", "--only", "masses"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_unknown_check_is_usage_error() {
    let out = hyperfree(&["verify", "--only", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = hyperfree(&[
        "verify",
        "--only",
        "appendixD",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["command"], "verify");
    assert_eq!(doc["rows"][0]["id"], "appendixD");
    assert_eq!(doc["rows"][0]["passed"], true);
}

#[test]
fn recover_demo_hits_closed_form() {
    let out = hyperfree(&["recover", "C", "--s", "0.5,1.0", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for row in doc["rows"].as_array().unwrap() {
        assert!(row["abs_error"].as_f64().unwrap() < 1e-4);
    }
}

#[test]
fn recover_at_zero_returns_mass() {
    let out = hyperfree(&["recover", "C", "--s", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let row = text.lines().nth(1).unwrap();
    let recovered: f64 = row.split(',').nth(1).unwrap().parse().unwrap();
    assert!((recovered - (std::f64::consts::FRAC_PI_2 - 1.0)).abs() < 1e-12);
}

#[test]
fn recover_rejects_odd_order() {
    let out = hyperfree(&["recover", "C", "--s", "1", "--order", "13"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn recover_with_alternate_backend() {
    let out = hyperfree(&[
        "recover",
        "psiC",
        "--s",
        "0.5",
        "--order",
        "10",
        "--backend",
        "talbot-contour-free",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let row = text.lines().nth(1).unwrap();
    let err: f64 = row.split(',').nth(3).unwrap().parse().unwrap();
    assert!(err < 1e-3, "contour-free backend error {err}");
}

#[test]
fn thread_cap_does_not_change_results() {
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_hyperfree"))
            .env("HYPERFREE_THREADS", threads)
            .args(["eval", "charfn:S", "--grid", "0:3:0.25"])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        String::from_utf8_lossy(&out.stdout).into_owned()
    };
    assert_eq!(run("1"), run("4"));
}
