use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn ssp(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ssp"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn ssp");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn ok_json(args: &[&str], stdin: &str) -> Value {
    let out = ssp(args, stdin);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn code(args: &[&str], stdin: &str) -> (i32, String) {
    let out = ssp(args, stdin);
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

const STRICT: &str = r#"{"dim":2,"gens":[[4,0],[3,1],[2,3],[1,4],[0,7]]}"#;
const PLANE: &str =
    r#"{"dim":3,"gens":[[2,0,0],[1,2,0],[0,3,0],[1,1,1],[0,2,1],[1,0,2],[0,1,3],[0,0,4]]}"#;

#[test]
fn bgens_of_strict_ideal() {
    assert_eq!(
        ok_json(&["bgens"], STRICT),
        json!({"bgens": [[3, 1], [1, 4], [0, 7]]})
    );
    assert_eq!(
        ok_json(&["bgens", "--via-psi"], STRICT),
        json!({"bgens": [[3, 1], [1, 4], [0, 7]]})
    );
}

#[test]
fn count_two_dimensional() {
    let v = ok_json(&["count", "--d", "2", "--n", "3"], "");
    assert_eq!(v["B"], json!([1, 2, 4, 8]));
    assert_eq!(v["T"], json!([1, 2, 4, 8]));
    let threaded = ok_json(&["count", "--d", "2", "--n", "3", "--threads", "4"], "");
    assert_eq!(threaded, v);
}

#[test]
fn list_streams_one_partition_per_line() {
    let out = ssp(
        &[
            "count",
            "--d",
            "3",
            "--n",
            "3",
            "--list",
            "--predicate",
            "ts",
        ],
        "",
    );
    assert!(out.status.success());
    let lines: Vec<Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 16);
    assert!(lines.iter().all(|v| v["dim"] == json!(3)));
}

#[test]
fn malformed_input_exits_one() {
    let (c, err) = code(&["check-partition"], r#"{"dim":2,"cells":[[1,0]]}"#);
    assert_eq!(c, 1);
    assert!(err.contains("[1, 0]"), "{err}");
    assert_eq!(code(&["check-ideal"], "not json").0, 1);
    assert_eq!(code(&["check-ideal"], r#"{"dim":2,"gens":[[1,0,0]]}"#).0, 1);
    assert_eq!(code(&["no-such-command"], "").0, 1);
    assert_eq!(code(&["bgens", "/nonexistent/file.json"], "").0, 1);
}

#[test]
fn unmet_preconditions_exit_two() {
    let unstable = r#"{"dim":2,"gens":[[0,1],[2,0]]}"#;
    let (c, err) = code(&["bgens"], unstable);
    assert_eq!(c, 2);
    assert!(
        err.contains("strongly stable") && err.contains("x1"),
        "{err}"
    );
    assert_eq!(
        code(&["ideal2partition"], r#"{"dim":2,"gens":[[0,1]]}"#).0,
        2
    );
    assert_eq!(code(&["ts2ss"], r#"{"dim":2,"cells":[[0,0],[1,0]]}"#).0, 2);
    assert_eq!(code(&["closure"], r#"{"dim":2,"gens":[]}"#).0, 2);
    assert_eq!(
        code(
            &["render", "--style", "matrix"],
            r#"{"dim":2,"cells":[[0,0]]}"#
        )
        .0,
        2
    );
}

#[test]
fn budget_exhaustion_exits_three() {
    let (c, err) = code(&["count", "--d", "3", "--n", "4", "--budget", "10"], "");
    assert_eq!(c, 3);
    assert!(err.contains("10"), "{err}");
}

#[test]
fn emitted_json_parses_back() {
    let p = ok_json(&["ideal2partition"], STRICT);
    let ts = ok_json(&["ss2ts"], &p.to_string());
    assert_eq!(ok_json(&["ts2ss"], &ts.to_string()), p);
    assert_eq!(
        ok_json(&["partition2ideal"], &p.to_string()),
        ok_json(&["closure"], STRICT)
    );

    let f = ok_json(&["lambda"], PLANE);
    assert_eq!(
        f,
        json!({"dim": 3, "side": 4, "elements": [[2, 2, 2], [1, 1, 3], [0, 2, 3], [0, 0, 4]]})
    );
    assert_eq!(
        ok_json(&["lambda", "--inverse"], &f.to_string()),
        ok_json(&["closure"], PLANE)
    );
    let sym = ok_json(&["omega"], &f.to_string());
    assert_eq!(ok_json(&["omega", "--inverse"], &sym.to_string()), f);
}

#[test]
fn renders() {
    let out = ssp(
        &["render", "--style", "matrix"],
        r#"{"dim":3,"cells":[[0,0,0],[0,0,1],[0,1,0],[1,0,0]]}"#,
    );
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "2 1\n1\n");
    let out = ssp(&["render"], r#"{"dim":2,"cells":[[0,0],[1,0],[0,1]]}"#);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "#\n##\n");
}

#[test]
fn generating_functions_and_hawkes() {
    assert_eq!(
        ok_json(&["gf", "--n", "2", "--product"], ""),
        json!([1, 1, 1, 1, 1])
    );
    assert_eq!(
        ok_json(&["gf", "--d", "3", "--n", "2", "--predicate", "ts"], ""),
        json!([1, 1, 1, 1, 1])
    );
    let h = ok_json(&["hawkes", "--d", "3", "--n", "4"], "");
    assert_eq!(h["left"], h["right"]);
    assert_eq!(h["holds"], json!(true));
    assert_eq!(code(&["hawkes", "--d", "2", "--n", "1"], "").0, 1);
}

#[test]
fn pretty_output_uses_xyz_notation() {
    let out = ssp(&["--format", "pretty", "bgens"], STRICT);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        "{x^3y, xy^4, y^7}"
    );
    let out = ssp(&["--format", "pretty", "closure"], STRICT);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        "(x^4, x^3y, x^2y^3, xy^4, y^7)"
    );
}
