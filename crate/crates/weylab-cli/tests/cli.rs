//! End-to-end checks of the CLI surface: outputs, JSON shape, exit codes,
//! and byte-stable exports.

use std::process::{Command, Output};

fn weylab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn poincare_and_regions() {
    let out = weylab(&["poincare", "A3", "2 1 3 2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("coefficients: 1,3,5,4,1"));
    assert!(text.contains("palindromic: false"));

    let out = weylab(&["regions", "A3", "2,1,3,2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("coefficients: 1,4,4,4,1"));
    assert!(text.contains("regions: 14"));

    let out = weylab(&["poincare", "A1", "1"]);
    assert!(stdout(&out).contains("coefficients: 1,1"));
    // Empty word is the identity.
    let out = weylab(&["poincare", "G2", ""]);
    assert!(stdout(&out).contains("coefficients: 1"));
}

#[test]
fn json_output() {
    let out = weylab(&["--json", "poincare", "A3", "2 1 3 2"]);
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["poly"], serde_json::json!([1, 3, 5, 4, 1]));
    assert_eq!(value["palindromic"], serde_json::json!(false));
    assert_eq!(value["length"], serde_json::json!(4));

    let out = weylab(&["--json", "regions", "A2", "1 2 1"]);
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["poly"], serde_json::json!([1, 2, 2, 1]));
    assert_eq!(value["regions"], serde_json::json!(6));
}

#[test]
fn verify_main_exit_codes() {
    let out = weylab(&["verify-main", "B3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("result: VERIFIED"));

    // Over the cap: resource error, exit 3, message lists feasible groups.
    let out = weylab(&["verify-main", "E8"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("feasible"));

    let out = weylab(&["--cap", "100", "verify-main", "F4"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn quotient_command() {
    let out = weylab(&["quotient", "F4", "4", "rightfree"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("24 elements"));
    assert!(text.contains("nontrivial palindromic elements: 6"));
    assert!(text.contains("special-F4"));

    let out = weylab(&["quotient", "B3", "2", "rightfree"]);
    let text = stdout(&out);
    assert!(text.contains("6 elements"));
    assert!(text.contains("rank sizes: 1,1,1,1,1,1"));

    // E8 leaf quotients stay cheap even though the full group is capped out.
    let out = weylab(&["quotient", "E8", "8", "rightfree"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("240 elements"));
    assert!(text.contains("nontrivial palindromic elements: 9"));

    // Removing a non-leaf is a usage error that cites the leaf requirement.
    let out = weylab(&["quotient", "A3", "2", "rightfree"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("leaf"));
}

#[test]
fn mlattice_and_iso() {
    let out = weylab(&["mlattice", "4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("palindromic elements (8)"));

    let out = weylab(&["verify-iso", "B4", "0"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("isomorphic"));

    let out = weylab(&["verify-iso", "D5", "1"]);
    assert!(out.status.success());

    let out = weylab(&["verify-iso", "A3", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_special_command() {
    let out = weylab(&["verify-special", "bn", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("result: VERIFIED"));

    let out = weylab(&["verify-special", "f4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("P_w = R_w: true"));
    assert!(text.contains("degree-3 factor identity"));
}

#[test]
fn export_is_byte_stable() {
    let a = weylab(&["export", "mlattice", "4", "--format", "dot"]);
    let b = weylab(&["export", "mlattice", "4", "--format", "dot"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.matches("[label=").count(), 16);

    // B3/B2 quotient is a 6-node path.
    let out = weylab(&["export", "quotient", "B3", "2", "rightfree"]);
    let text = stdout(&out);
    assert_eq!(text.matches("[label=").count(), 6);
    assert_eq!(text.matches(" -> ").count(), 5);

    // Empty-arrangement region poset exports a single element.
    let out = weylab(&["export", "region-poset", "A1", "", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["elements"].as_array().unwrap().len(), 1);

    // --out writes a file.
    let dir = std::env::temp_dir().join("weylab-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m2.dot");
    let out = weylab(&["export", "mlattice", "2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("digraph poset {"));
}

#[test]
fn usage_errors() {
    let out = weylab(&["poincare", "Z9", "1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = weylab(&["poincare", "C3", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("use B3"));

    let out = weylab(&["poincare", "A2", "7"]);
    assert_eq!(out.status.code(), Some(2));

    // clap's own usage errors also exit 2.
    let out = weylab(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn threads_flag_does_not_change_output() {
    let a = weylab(&["--threads", "1", "--json", "verify-main", "B3"]);
    let b = weylab(&["--threads", "4", "--json", "verify-main", "B3"]);
    let va: serde_json::Value = serde_json::from_str(stdout(&a).trim()).unwrap();
    let vb: serde_json::Value = serde_json::from_str(stdout(&b).trim()).unwrap();
    assert_eq!(va["report"]["failures"], vb["report"]["failures"]);
    assert_eq!(
        va["report"]["rationally_smooth"],
        vb["report"]["rationally_smooth"]
    );
}
