use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reesalg")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    })
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn groebner_of_conic() {
    let d = TempDir::new().unwrap();
    let f = write(d.path(), "conic.txt", "x1*x2 - x3^2\n");
    let out = run(&["groebner", s(&f)]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["basis"].as_array().unwrap().len(), 1);
    assert_eq!(v["vars"], serde_json::json!(["x1", "x2", "x3"]));
}

#[test]
fn rees_presentation_with_check() {
    let d = TempDir::new().unwrap();
    let f = write(d.path(), "conic.txt", "x1*x2 - x3^2\n");
    let out = run(&["rees", s(&f), "--check", "4"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["generators"].as_array().unwrap().len(), 6);
    assert_eq!(v["reduced"], false);
    assert_eq!(v["groebner_theorem"]["counts_agree"], true);
}

#[test]
fn betti_uses_cache_dir() {
    let d = TempDir::new().unwrap();
    let cache = d.path().join("cache");
    let f = write(d.path(), "cross.txt", "vars: 2\nx1*x2\n");
    let first = run(&["--cache-dir", s(&cache), "betti", s(&f)]);
    assert!(first.status.success());
    assert!(std::fs::read_dir(&cache).unwrap().count() > 0);
    let second = run(&["--cache-dir", s(&cache), "betti", s(&f)]);
    assert_eq!(json(&first), json(&second));
}

#[test]
fn cohomology_with_window_and_rees() {
    let d = TempDir::new().unwrap();
    let f = write(d.path(), "plane.txt", "vars: 2\n");
    let out = run(&["--window", "-5:2", "cohomology", "--rees", s(&f)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["rees"]["reg"], 1);
}

#[test]
fn hochster_of_two_points() {
    let d = TempDir::new().unwrap();
    let f = write(d.path(), "points.txt", "vertices: 2\n1\n2\n");
    let out = run(&["hochster", "--ideal", s(&f)]);
    assert!(out.status.success());
    let v = json(&out);
    assert!(v["ideal"].is_object());
}

#[test]
fn verify_exit_codes() {
    let d = TempDir::new().unwrap();
    let space = write(d.path(), "space.txt", "vars: 3\n");
    let ok = run(&["verify", "--suite", "maxideal", s(&space)]);
    assert_eq!(ok.status.code(), Some(0), "{}", String::from_utf8_lossy(&ok.stdout));
    assert!(json(&ok).as_array().unwrap().iter().all(|r| r["verdict"] != "fails"));

    let squares = write(d.path(), "squares.txt", "x1^2\nx2^2\nx3^2\n");
    let bad = run(&["verify", "--suite", "section3", s(&space), "--forms", s(&squares)]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(json(&bad).as_array().is_some());

    let gin = run(&["--seed", "3", "verify", "--suite", "gin", s(&space), "--trials", "4"]);
    assert_eq!(gin.status.code(), Some(0));
}

#[test]
fn errors_exit_with_two() {
    let d = TempDir::new().unwrap();
    let f = write(d.path(), "bad.txt", "x1*x2 +\n");
    let out = run(&["groebner", s(&f)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));

    let missing = run(&["betti", s(&d.path().join("none.txt"))]);
    assert_eq!(missing.status.code(), Some(2));

    let conic = write(d.path(), "conic.txt", "x1*x2 - x3^2\n");
    let no_forms = run(&["verify", "--suite", "section3", s(&conic)]);
    assert_eq!(no_forms.status.code(), Some(2));

    let window = run(&["--window", "3:1", "cohomology", s(&conic)]);
    assert_eq!(window.status.code(), Some(2));
}
