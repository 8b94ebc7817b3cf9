use std::io::Write;
use std::process::{Command, Stdio};

fn linstat() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_linstat"));
    c.env_remove("LINSTAT_MAX_DEGREE");
    c
}

fn json(out: &[u8]) -> serde_json::Value {
    serde_json::from_slice(out).expect("stdout is JSON")
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = [
        "variance",
        "--coeffs",
        "0.1,-0.7,0.3,0.9",
        "--weight",
        "jacobi",
        "--a",
        "0.1",
        "--b",
        "0.6",
        "--emit-d",
        "--emit-kernel",
        "--oracle",
    ];
    let first = linstat().args(args).output().unwrap();
    assert!(first.status.success());
    for _ in 0..3 {
        assert_eq!(linstat().args(args).output().unwrap().stdout, first.stdout);
    }
}

#[test]
fn variance_example() {
    let out = linstat()
        .args([
            "variance", "--coeffs", "0,1", "--weight", "arcsine", "--a", "-2", "--b", "2",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v = json(&out.stdout);
    assert_eq!(v["variance"], 1.0);
    assert_eq!(v["meta"]["K"], 1);
    assert_eq!(v["meta"]["weight"], "arcsine");
    assert!(v.get("d").is_none());
}

#[test]
fn kernel_example() {
    let out = linstat()
        .args([
            "kernel",
            "--weight",
            "semicircle",
            "--a",
            "0",
            "--b",
            "1",
            "--k",
            "2",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        json(&out.stdout)["kernel"],
        serde_json::json!([[4.0, 0.0], [0.0, 8.0]])
    );
}

#[test]
fn check_example_meets_tolerance() {
    let out = linstat()
        .args([
            "check",
            "--coeffs",
            "1,2,3,4",
            "--weight",
            "semicircle",
            "--a",
            "0",
            "--b",
            "1",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out.stdout)["rel_gap"].as_f64().unwrap() <= 1e-8);
}

#[test]
fn request_from_stdin_and_flag_override() {
    let mut child = linstat()
        .args(["variance", "--input", "-", "--b", "4", "--emit-d"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"coeffs":[0,0,1],"weight":"hard-edge","a":1,"b":9}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v = json(&out.stdout);
    assert_eq!(v["meta"]["b"], 4.0);
    assert_eq!(v["d"].as_array().unwrap().len(), 2);
}

#[test]
fn input_file_rejects_unknown_fields_and_other_commands() {
    let dir = std::env::temp_dir().join(format!("linstat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(
        &bad,
        r#"{"coeffs":[1],"weight":"arcsine","a":0,"b":1,"colour":"red"}"#,
    )
    .unwrap();
    let out = linstat()
        .arg("variance")
        .arg("--input")
        .arg(&bad)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let other = dir.join("other.json");
    std::fs::write(
        &other,
        r#"{"command":"kernel","coeffs":[1],"weight":"arcsine","a":0,"b":1}"#,
    )
    .unwrap();
    let out = linstat()
        .arg("variance")
        .arg("--input")
        .arg(&other)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["code"], "conflicting-input");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn environment_cap_and_flag_precedence() {
    let args = [
        "variance",
        "--coeffs",
        "0,0,0,1",
        "--weight",
        "semicircle",
        "--a",
        "0",
        "--b",
        "1",
    ];
    let out = linstat()
        .args(args)
        .env("LINSTAT_MAX_DEGREE", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["code"], "degree-cap");
    let out = linstat()
        .args(args)
        .args(["--max-degree", "3"])
        .env("LINSTAT_MAX_DEGREE", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn validation_message_names_constraint() {
    let out = linstat()
        .args([
            "variance", "--weight", "jacobi", "--a", "0.2", "--b", "1.5", "--coeffs", "0,1",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "validation");
    assert!(err["error"]["message"]
        .as_str()
        .unwrap()
        .contains("jacobi requires 0 < a < b < 1"));
}

#[test]
fn help_is_not_an_error() {
    let out = linstat().arg("--help").output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("--weight"));
}

#[test]
fn pretty_output_parses_to_the_same_object() {
    let args = [
        "transform",
        "--coeffs",
        "1,2,3",
        "--weight",
        "hard-edge",
        "--a",
        "0.5",
        "--b",
        "2",
    ];
    let compact = linstat().args(args).output().unwrap();
    let pretty = linstat().args(args).arg("--pretty").output().unwrap();
    assert_ne!(compact.stdout, pretty.stdout);
    assert_eq!(json(&compact.stdout), json(&pretty.stdout));
}
