use std::process::{Command, Output};

use serde_json::Value;

fn quermass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quermass"))
        .args(args)
        .env_remove("QUERMASS_WORKERS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn mixed_volume_of_cubes() {
    let out = quermass(&["mixed-volume", "--bodies", "cube3,cube3,cube3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out)["result"]["value"].as_f64().unwrap();
    assert!((v - 1.0).abs() < 1e-12);
}

#[test]
fn mixed_volume_of_segments() {
    let out = quermass(&["mixed-volume", "--bodies", "seg:e1,seg:e2", "--n", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["value"].as_f64(), Some(0.5));
}

#[test]
fn malformed_json_is_a_validation_error_with_no_output() {
    let out = quermass(&["mixed-volume", "--bodies", "[{\"kind\": \"cube\", \"dim\": 3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("bodies"));
}

#[test]
fn validation_errors_name_the_field() {
    for (args, field) in [
        (vec!["verify", "lemma"], "invalid k"),
        (vec!["mixed-volume", "--bodies", "cube3,cube3"], "dimension"),
        (vec!["verify", "theorem", "--bodies", "cube2", "--samples", "10"], "samples"),
        (vec!["verify", "theorem", "--bodies", "cube3,cube3", "--d", "1"], "invalid d"),
        (vec!["verify", "bogus"], "bogus"),
    ] {
        let out = quermass(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains(field), "{args:?}");
    }
}

#[test]
fn theorem_square_holds_with_small_margin() {
    let out = quermass(&[
        "verify", "theorem", "--bodies", "cube2", "--d", "1", "--n", "2", "--samples", "10000", "--seed", "7",
        "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["verdict"], "BOUND_HOLDS");
    assert!(doc["margin"].as_f64().unwrap().abs() < 0.01);
    for key in ["schema_version", "config", "claim", "lhs", "rhs", "verdict", "margin", "timing"] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
    assert!(doc["timing"].is_null());
}

#[test]
fn constants_and_identity_pass() {
    let out = quermass(&["verify", "constants", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["details"]["max_relative_gap"].as_f64().unwrap() <= 1e-10);

    let out = quermass(&[
        "verify", "identity", "--n", "3", "--d", "2", "--bodies", "cube3,cube3", "--samples", "100", "--seed", "1",
        "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["details"]["max_relative_residual"].as_f64().unwrap() <= 1e-7);
}

#[test]
fn lemma_sharpness_k4_reports_inconclusive() {
    let out = quermass(&["verify", "lemma-sharpness", "--k", "4", "--samples", "200"]);
    assert_eq!(out.status.code(), Some(10));
}

#[test]
fn csv_has_one_row_per_sample() {
    let out = quermass(&["verify", "lemma", "--k", "3", "--samples", "500", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("sample_index,value"));
    assert_eq!(lines.count(), 500);
}

#[test]
fn out_path_replaces_stdout_and_replays_identically() {
    let dir = std::env::temp_dir().join(format!("quermass-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let p = path.to_str().unwrap();
    let out = quermass(&[
        "verify", "probe", "--bodies", "seg:e1,seg:e2", "--n", "3", "--samples", "300", "--seed", "4", "--format",
        "json", "--out", p, "--workers", "2",
    ]);
    assert!(out.stdout.is_empty());
    let first = std::fs::read(&path).unwrap();
    let replay = quermass(&["replay", p, "--workers", "1"]);
    assert_eq!(replay.status.code(), out.status.code());
    assert_eq!(replay.stdout, first);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn workers_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_quermass"))
        .args(["mixed-volume", "--bodies", "cube2,cube2"])
        .env("QUERMASS_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("workers: 3"));
    let bad = Command::new(env!("CARGO_BIN_EXE_quermass"))
        .args(["mixed-volume", "--bodies", "cube2,cube2"])
        .env("QUERMASS_WORKERS", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn volume_command_reports_hulls() {
    let out = quermass(&["volume", "--bodies", "cross3,simplex3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert!((doc["hulls"][0]["volume"].as_f64().unwrap() - 4.0 / 3.0).abs() < 1e-12);
    assert_eq!(doc["hulls"][1]["facets"].as_array().unwrap().len(), 4);
}
