use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn bilax(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bilax")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&bilax(&["coherence", "--group", "z2", "--tol", "-1"])), 2);
    assert_eq!(code(&bilax(&["coherence", "--group", "z2", "--tol", "0"])), 2);
    assert_eq!(code(&bilax(&["coherence", "--group", "s3", "--cap", "5"])), 2);
    assert_eq!(code(&bilax(&["coherence", "--group", "a5"])), 2);
    assert_eq!(code(&bilax(&["coherence"])), 2);
    assert_eq!(code(&bilax(&["coherence", "--group", "z2", "--suite", "nope"])), 2);
    assert_eq!(code(&bilax(&["info", "--spec", "/nonexistent/group.json"])), 2);
    assert_eq!(code(&bilax(&["frobnicate"])), 2);
}

#[test]
fn z2_coherence_reports_the_unit_normalisation_conflict() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z2.json");
    let out = bilax(&["coherence", "--group", "z2", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let report: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let failing: Vec<&str> = report["entries"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| !e["pass"].as_bool().unwrap())
        .map(|e| e["id"].as_str().unwrap())
        .collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().all(|id| id.starts_with("lax.b.")), "{failing:?}");
    assert!(String::from_utf8_lossy(&out.stderr).contains("failing lax.b.left, lax.b.right"));
}

#[test]
fn passing_suites_exit_0() {
    for suite in ["oplax", "braided", "lemmas"] {
        let out = bilax(&["coherence", "--group", "z2", "--suite", suite]);
        assert_eq!(code(&out), 0, "{suite}");
        assert!(json(&out)["entries"].as_array().unwrap().iter().all(|e| e["pass"] == true));
    }
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        bilax(&["coherence", "--group", "z3", "--seed", "5", "--suite", "lax", "--out", path.to_str().unwrap()]);
        fs::read(path).unwrap()
    };
    assert_eq!(run("a.json"), run("b.json"));
}

#[test]
fn info_lists_dimensions() {
    for (group, d, dims) in [("z2", 2.0, vec![1, 1]), ("s3", 6.0, vec![1, 1, 2]), ("q8", 8.0, vec![1, 1, 1, 1, 2])] {
        let info = json(&bilax(&["info", "--group", group]));
        assert_eq!(info["global_dim"].as_f64().unwrap(), d, "{group}");
        let mut got: Vec<u64> = info["irrep_dims"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
        got.sort();
        assert_eq!(got, dims.iter().map(|&x| x as u64).collect::<Vec<_>>(), "{group}");
        assert_eq!(info["sym_unit_dim"].as_f64().unwrap(), d);
    }
}

#[test]
fn group_spec_files_load() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z3.json");
    fs::write(&path, r#"{"name": "cyclic3", "order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]}"#).unwrap();
    let info = json(&bilax(&["info", "--spec", path.to_str().unwrap()]));
    assert_eq!(info["group"], "cyclic3");
    assert_eq!(info["irrep_dims"].as_array().unwrap().len(), 3);
    fs::write(&path, r#"{"name": "bad", "order": 2, "table": [[0,1],[0,1]]}"#).unwrap();
    assert_eq!(code(&bilax(&["info", "--spec", path.to_str().unwrap()])), 2);
}

#[test]
fn product_tables_match_the_bundle_prediction() {
    for product in ["sym", "conv"] {
        let table = json(&bilax(&["product-table", "--group", "s3", "--cap", "8", "--product", product]));
        let entries = table["entries"].as_array().unwrap();
        assert!(!entries.is_empty());
        for e in entries {
            assert_eq!(e["fibres"], e["predicted"], "{product} {e}");
            let total: u64 = e["fibres"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).sum();
            assert_eq!(total, e["dim"].as_u64().unwrap());
        }
        let dims: std::collections::HashMap<&str, u64> = table["objects"]
            .as_array()
            .unwrap()
            .iter()
            .map(|o| (o["label"].as_str().unwrap(), o["dim"].as_u64().unwrap()))
            .collect();
        for e in entries {
            let (l, r) = (dims[e["left"].as_str().unwrap()], dims[e["right"].as_str().unwrap()]);
            match product {
                "conv" => assert_eq!(e["dim"].as_u64().unwrap(), l * r),
                _ if e["left"] == "Is" => assert_eq!(e["dim"].as_u64().unwrap(), r),
                _ => {}
            }
        }
    }
}
