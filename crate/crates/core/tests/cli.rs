use std::process::{Command, Output};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .env_remove("VERIFY_SUITE")
        .output()
        .expect("verify runs")
}

#[test]
fn passing_suite_exits_zero() {
    let out = verify(&["--suite", "scalars", "--draws", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.ends_with("scalars: 10 cases, 10 passed, 0 failed, 0 skipped\n"));
}

#[test]
fn failing_convention_exits_one() {
    let out = verify(&[
        "--suite",
        "rtt",
        "--sites",
        "1",
        "--draws",
        "1",
        "--odd-sign",
        "plain",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("FAIL rtt/L1/commutators/d000"));
}

#[test]
fn config_errors_exit_two() {
    assert_eq!(verify(&["--suite", "nope"]).status.code(), Some(2));
    assert_eq!(verify(&["--c", "0"]).status.code(), Some(2));
    assert_eq!(verify(&["--c", "1/x"]).status.code(), Some(2));
    assert_eq!(verify(&["--sites", "0"]).status.code(), Some(2));
    assert_eq!(verify(&["--draws", "0"]).status.code(), Some(2));
    assert_eq!(verify(&["--format", "xml"]).status.code(), Some(2));
}

#[test]
fn json_to_file_and_env_override() {
    let path = std::env::temp_dir().join(format!("verify-{}.json", std::process::id()));
    let out = Command::new(env!("CARGO_BIN_EXE_verify"))
        .args([
            "--format",
            "json",
            "--out",
            path.to_str().unwrap(),
            "--c",
            "-1/2",
        ])
        .env("VERIFY_SUITE", "scalars")
        .env("VERIFY_DRAWS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    let records = json.as_array().unwrap();
    assert_eq!(records.len(), 5);
    let keys: Vec<&String> = records[0].as_object().unwrap().keys().collect();
    let mut expected = [
        "suite",
        "case_id",
        "equation_ref",
        "params",
        "status",
        "detail",
        "elapsed_ms",
    ];
    expected.sort_unstable();
    assert_eq!(keys, expected);
    assert_eq!(records[0]["params"]["c"], "-1/2");
    assert_eq!(records[0]["status"], "pass");
    assert!(records[0]["elapsed_ms"].is_null());
}

#[test]
fn timing_fills_elapsed() {
    let out = verify(&[
        "--suite", "scalars", "--draws", "1", "--format", "json", "--timing",
    ]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(json[0]["elapsed_ms"].is_u64());
}
