#![allow(dead_code)]

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

pub fn tests_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

/// Run the binary from `tests/data`.
pub fn spinrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinrep"))
        .args(args)
        .current_dir(tests_dir().join("data"))
        .output()
        .expect("binary runs")
}

pub fn spinrep_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_spinrep"))
        .args(args)
        .current_dir(tests_dir().join("data"))
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

/// (golden name, arguments, expected exit code)
pub const CASES: &[(&str, &[&str], i32)] = &[
    ("classify_spinors", &["classify", "spinors.json"], 0),
    ("classify_empty", &["classify", "empty.json"], 0),
    (
        "generate_c5",
        &["generate", "--class", "5", "--count", "3", "--seed", "0"],
        0,
    ),
    (
        "generate_c4_dirac",
        &[
            "generate", "--class", "C4", "--count", "2", "--seed", "3", "--rep", "dirac",
        ],
        0,
    ),
    (
        "verify_fpk_regular",
        &["verify", "--mode", "fpk", "regular.json"],
        0,
    ),
    (
        "verify_fpk_anomalous",
        &["verify", "--mode", "fpk", "anomalous.json"],
        1,
    ),
    (
        "verify_aggregate",
        &["verify", "--mode", "aggregate", "regular.json"],
        0,
    ),
    (
        "verify_boomerang_anomalous",
        &["verify", "--mode", "boomerang", "anomalous.json"],
        1,
    ),
    (
        "map4_random",
        &["map4", "--params", "params.json", "regular.json"],
        0,
    ),
    (
        "map4_hermitian",
        &["map4", "--params", "params_hermitian.json", "regular.json"],
        0,
    ),
    ("winding_ccw", &["winding", "circle_ccw.json"], 0),
    ("winding_cw", &["winding", "circle_cw.json"], 0),
    ("winding_off", &["winding", "circle_off.json"], 0),
    (
        "winding_ccw_json",
        &["winding", "--json", "circle_ccw.json"],
        0,
    ),
    ("reconstruct_spinors", &["reconstruct", "regular.json"], 0),
];

pub fn golden_path(name: &str) -> PathBuf {
    tests_dir().join("golden").join(format!("{name}.out"))
}

/// Compare one case with its golden file; `Err` describes the mismatch.
pub fn run_case(name: &str, args: &[&str], code: i32) -> Result<(), String> {
    let out = spinrep(args);
    if out.status.code() != Some(code) {
        return Err(format!(
            "{name}: exit {:?}, expected {code}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out.stdout).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected != out.stdout {
        return Err(format!(
            "{name}: output differs from {}\n--- actual ---\n{}",
            path.display(),
            String::from_utf8_lossy(&out.stdout)
        ));
    }
    Ok(())
}
