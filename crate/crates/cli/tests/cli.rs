//! End-to-end runs of the `spinrep` binary against golden outputs.
//!
//! Set `UPDATE_GOLDEN=1` to rewrite the files under `tests/golden/`.

mod common;

use std::process::Output;

use common::{run_case, spinrep, spinrep_stdin, tests_dir, CASES};
use serde_json::Value;

#[test]
fn golden_outputs() {
    for (name, args, code) in CASES {
        if let Err(e) = run_case(name, args, *code) {
            panic!("{e}");
        }
    }
}

#[test]
fn outputs_are_byte_stable() {
    for (name, args, _) in CASES {
        assert_eq!(spinrep(args).stdout, spinrep(args).stdout, "{name}");
    }
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn classify_reports_per_entry() {
    let v = json(&spinrep(&["classify", "spinors.json"]));
    let results = v["results"].as_array().unwrap();
    let class = |i: usize| results[i]["class"].as_str().unwrap_or("").to_string();
    assert_eq!(class(0), "C6");
    assert_eq!(class(1), "C2");
    assert_eq!(class(2), "C5");
    assert_eq!(results[4]["error"], "zero spinor");
    for key in [
        "class",
        "sigma",
        "omega",
        "J",
        "K",
        "S",
        "zero_flags",
        "tol",
        "margin",
    ] {
        assert!(results[0].get(key).is_some(), "missing {key}");
    }
    let empty = json(&spinrep(&["classify", "empty.json"]));
    assert_eq!(empty["results"], serde_json::json!([]));
}

#[test]
fn generated_files_classify_back() {
    let dir = tempfile::tempdir().unwrap();
    for class in 1..=6 {
        let path = dir.path().join(format!("c{class}.json"));
        let p = path.to_str().unwrap();
        let c = class.to_string();
        let out = spinrep(&[
            "generate", "--class", &c, "--count", "4", "--seed", "11", "--out", p,
        ]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
        let report = json(&spinrep(&["classify", p]));
        for r in report["results"].as_array().unwrap() {
            assert_eq!(r["class"], format!("C{class}"));
        }
    }
}

#[test]
fn verify_modes_on_generated_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.json");
    let p = path.to_str().unwrap();
    spinrep(&[
        "generate", "--class", "5", "--count", "5", "--seed", "1", "--out", p,
    ]);
    for mode in ["fpk", "aggregate", "boomerang"] {
        let out = spinrep(&["verify", "--mode", mode, p]);
        assert_eq!(out.status.code(), Some(0), "{mode}");
        assert_eq!(json(&out)["pass"], true);
    }
    assert_eq!(
        spinrep(&["verify", "--mode", "nope", p]).status.code(),
        Some(2)
    );
}

#[test]
fn map4_images_are_singular() {
    let v = json(&spinrep(&[
        "map4",
        "--params",
        "params.json",
        "regular.json",
    ]));
    let results = v["results"].as_array().unwrap();
    for r in &results[..3] {
        let c = &r["classification"];
        let scale: f64 = r["image"]["components"]
            .as_array()
            .unwrap()
            .iter()
            .map(|z| z[0].as_f64().unwrap().powi(2) + z[1].as_f64().unwrap().powi(2))
            .sum();
        assert!(c["sigma"].as_f64().unwrap().abs() < 1e-10 * scale);
        assert!(c["omega"].as_f64().unwrap().abs() < 1e-10 * scale);
    }
    assert!(results[3]["error"]
        .as_str()
        .unwrap()
        .contains("not regular"));
    assert_eq!(v["hermitian"], false);

    let h = json(&spinrep(&[
        "map4",
        "--params",
        "params_hermitian.json",
        "regular.json",
    ]));
    assert_eq!(h["hermitian"], true);
    for r in &h["results"].as_array().unwrap()[..3] {
        let c = &r["classification"];
        assert!(c["sigma"].as_f64().unwrap().abs() < 1e-10);
        assert!(c["omega"].as_f64().unwrap().abs() < 1e-10);
    }
}

#[test]
fn usage_and_schema_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["generate", "--class", "7"],
        &["map4", "--params", "params_zero_m12.json", "regular.json"],
        &["classify", "malformed.json"],
        &["classify", "missing.json"],
        &["frobnicate"],
    ];
    for args in cases {
        assert_eq!(spinrep(args).status.code(), Some(2), "{args:?}");
    }
    let err = String::from_utf8(spinrep(&["classify", "malformed.json"]).stderr).unwrap();
    assert!(err.contains("line"), "{err}");
}

#[test]
fn rejected_paths_exit_1() {
    let out = spinrep(&["winding", "through_origin.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("origin"));
}

#[test]
fn stdin_input() {
    let data = std::fs::read(tests_dir().join("data/spinors.json")).unwrap();
    let piped = spinrep_stdin(&["classify", "-"], &data);
    assert_eq!(piped.status.code(), Some(0));
    let direct = json(&spinrep(&["classify", "spinors.json"]));
    let piped = json(&piped);
    assert_eq!(piped["results"], direct["results"]);
}
