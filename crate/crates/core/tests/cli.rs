//! End-to-end tests of the `hypack` binary.

use std::process::{Command, Output};

fn hypack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypack"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn tables_have_expected_rows() {
    for (which, header, rows) in [
        ("inball", "(q,r)  inradius", 8),
        ("horoball-one", "(q,r)  i", 11),
        ("horoball-two", "(q,r)  t", 3),
        ("distances", "edge", 5),
    ] {
        let out = hypack(&["table", which]);
        assert!(out.status.success(), "{which}");
        let text = stdout(&out);
        let lines: Vec<&str> = text.lines().collect();
        assert!(lines[0].starts_with(header), "{which}: {}", lines[0]);
        assert_eq!(lines.len() - 1, rows, "{which}");
    }
}

#[test]
fn output_is_deterministic() {
    let a = hypack(&["table", "horoball-two"]);
    let b = hypack(&["table", "horoball-two"]);
    assert_eq!(a.stdout, b.stdout);
    let a = hypack(&["verify", "--format", "json"]);
    let b = hypack(&["verify", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_json_shape() {
    let out = hypack(&["verify", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let entries = v.as_array().unwrap();
    assert_eq!(entries.len(), 90);
    for e in entries {
        let obj = e.as_object().unwrap();
        for k in [
            "table",
            "key",
            "quantity",
            "reference",
            "computed",
            "abs_error",
            "pass",
        ] {
            assert!(obj.contains_key(k), "missing {k}");
        }
    }
    let all_pass = entries.iter().all(|e| e["pass"].as_bool().unwrap());
    assert_eq!(out.status.code(), Some(if all_pass { 0 } else { 1 }));
}

#[test]
fn verify_fails_at_tiny_tolerance() {
    let out = hypack(&["verify", "--tol", "1e-12"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out)
        .lines()
        .last()
        .unwrap()
        .starts_with("overall: FAIL"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["table", "bogus"][..],
        &["verify", "--tol", "-1"],
        &["verify", "--tol", "0"],
        &["curve", "--q", "3", "--r", "3", "--out", "x.csv"],
        &["curve", "--q", "7", "--r", "3", "--out", "x.csv"],
        &[
            "curve",
            "--q",
            "4",
            "--r",
            "4",
            "--samples",
            "1",
            "--out",
            "x.csv",
        ],
    ] {
        let out = hypack(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn unwritable_output_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("c.csv");
    let out = hypack(&[
        "curve",
        "--q",
        "4",
        "--r",
        "4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn degenerate_curve_has_single_row() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.csv");
    let out = hypack(&[
        "curve",
        "--q",
        "3",
        "--r",
        "6",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("single point"));
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "t,density,vol_b0,vol_b2,active_constraint");
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("0.3333333333,0.85327"));
    assert!(lines[1].ends_with("B0:u0+B2:u2"));
}

#[test]
fn curve_has_requested_samples() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.csv");
    let p = path.to_str().unwrap();
    let out = hypack(&[
        "curve",
        "--q",
        "4",
        "--r",
        "4",
        "--samples",
        "11",
        "--out",
        p,
    ]);
    assert!(out.status.success());
    let mut rdr = csv::Reader::from_path(&path).unwrap();
    let ts: Vec<f64> = rdr
        .records()
        .map(|r| r.unwrap()[0].parse().unwrap())
        .collect();
    assert_eq!(ts.len(), 11);
    assert!((ts[0] - 1.0 / 3.0).abs() < 1e-9);
    assert!((ts[10] - 0.5).abs() < 1e-9);
}
