use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sphere-sets")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn table_is_deterministic() {
    let args = ["bounds", "table", "--n-min", "355", "--n-max", "365", "--format", "csv"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let text = stdout(&first);
    assert!(text.starts_with("\"n\",\"two-distance\""), "{text}");
    assert_eq!(text.lines().count(), 12);
}

#[test]
fn assume_theorems_spot_values() {
    let out = run(&["bounds", "table", "--n-min", "22", "--n-max", "23", "--mode", "assume-theorems"]);
    let text = stdout(&out);
    assert!(text.contains("\n22, 275, "), "{text}");
    assert!(text.contains("\n23, 276, "), "{text}");
}

#[test]
fn equiangular_and_two_distance_reports() {
    let out = run(&["bounds", "equiangular", "--n", "400"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("value: 64620"));
    let out = run(&["bounds", "equiangular", "--n", "137", "--a", "5"]);
    assert!(stdout(&out).contains("value: 2224"), "{}", stdout(&out));
    let out = run(&["bounds", "two-distance", "--n", "7", "--alpha", "1/3", "--beta", "-1/3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn generate_verify_and_certify() {
    let dir = tempfile::tempdir().unwrap();
    let lines = dir.path().join("lines28.txt");
    let out = run(&["generate", "--family", "lines28", "--output", path(&lines)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    let out = run(&["verify", "--input", path(&lines), "--max-degree", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).ends_with("result: PASS\n"));

    let out = run(&["certify-extremal", "--input", path(&lines), "--a", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let out = run(&["certify-extremal", "--input", path(&lines), "--a", "5"]);
    assert_eq!(out.status.code(), Some(1));

    let switched = dir.path().join("switched.txt");
    let derived = dir.path().join("derived.txt");
    assert_eq!(run(&["switch", "--input", path(&lines), "--output", path(&switched)]).status.code(), Some(0));
    let out = run(&[
        "derive",
        "--input",
        path(&switched),
        "--point-index",
        "0",
        "--product",
        "1/3",
        "--output",
        path(&derived),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("derived 27 points"), "{}", stdout(&out));
}

#[test]
fn lift_simplex_faces() {
    let dir = tempfile::tempdir().unwrap();
    let faces = dir.path().join("faces.txt");
    let lifted = dir.path().join("lifted.txt");
    let out = run(&["generate", "--family", "simplex-faces", "--n", "5", "--s", "2", "--output", path(&faces)]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["lift", "--input", path(&faces), "--output", path(&lifted)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let out = run(&["verify", "--input", path(&lifted), "--format", "csv", "--max-degree", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).starts_with("section,item,value,status\n"));
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "dim 2\npoint 1 0\npoint 1 1\n").unwrap();
    let out = run(&["verify", "--input", path(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    assert_eq!(run(&["verify", "--input", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(run(&["bounds", "table"]).status.code(), Some(2));
    assert_eq!(run(&["generate", "--family", "cube", "--output", "x"]).status.code(), Some(2));

    let oct = dir.path().join("oct.txt");
    run(&["generate", "--family", "octahedron", "--output", path(&oct)]);
    let out = run(&["derive", "--input", path(&oct), "--point-index", "0", "--product", "1/2", "--output", "y"]);
    assert_eq!(out.status.code(), Some(1));
}
