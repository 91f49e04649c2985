use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parahess")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn poincare_examples() {
    let o = run(&["poincare", "--partition", "2,2", "--parabolic", "1,3", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1 + 3t + 4t^2 + 3t^3 + t^4");
    let o = run(&["poincare", "--partition", "1", "--parabolic", ""]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1");
    let o = run(&["poincare", "--partition", "2,2", "--hessenberg", "2,2,4,4"]);
    assert_eq!(stdout(&o).trim(), "1 + 3t + 4t^2 + 3t^3 + t^4");
    let o = run(&["poincare", "--partition", "4", "--hessenberg", "2,3,4,4"]);
    assert_eq!(stdout(&o).trim(), "1 + 3t + 3t^2 + t^3");
}

#[test]
fn schubert_point_example() {
    let o = run(&["schubert-point", "--partition", "2,1,1", "--word", "2,1,3,2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines, ["s3 s2", "1,4,2,3"]);
    let o = run(&["schubert-point", "--partition", "2,1,1", "--perm", "3,4,1,2"]);
    assert_eq!(stdout(&o).lines().next(), Some("s3 s2"));
}

#[test]
fn exit_codes() {
    let o = run(&["poincare", "--partition", "3", "--hessenberg", "2,3,3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["union", "--partition", "3", "--hessenberg", "2,3,3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not parabolic"));
    assert_eq!(run(&["poincare", "--partition", "2,3", "--parabolic", "1"]).status.code(), Some(1));
    assert_eq!(run(&["poincare", "--partition", "2,2", "--parabolic", "4"]).status.code(), Some(1));
    assert_eq!(run(&["schubert-point", "--partition", "2", "--perm", "2,1"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "--n", "9"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "--n", "2", "--checks", "bogus"]).status.code(), Some(1));
    assert_eq!(run(&["poincare", "--partition", "2,2"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--n", "x"]).status.code(), Some(2));
}

#[test]
fn verify_passes() {
    let o = run(&["verify", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 36);
    assert!(!out.contains("FAIL"));
}

#[test]
fn json_round_trips() {
    for args in [
        vec!["poincare", "--partition", "2,2", "--parabolic", "1,3"],
        vec!["springer", "--partition", "2,1"],
        vec!["schubert-point", "--partition", "2,1,1", "--word", "2,1,3,2"],
        vec!["union", "--partition", "2,1,1", "--parabolic", "1,3"],
        vec!["components", "--partition", "2,1,1", "--parabolic", "1,3"],
        vec!["verify", "--n", "3", "--checks", "main-theorem"],
        vec!["census", "--n", "3"],
        vec!["census", "--n", "3", "--granularity", "cells"],
    ] {
        let mut full = args.clone();
        full.extend(["--format", "json"]);
        let o = run(&full);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let text = stdout(&o);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
        if args[0] != "verify" {
            assert_eq!(again, text, "{args:?}");
        }
        let v2: serde_json::Value = serde_json::from_str(&again).unwrap();
        assert_eq!(v, v2);
    }
}

#[test]
fn typed_json_round_trip() {
    let o = run(&["census", "--n", "4", "--format", "json"]);
    let rows: Vec<parahess::MainTheoremReport> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rows.len(), 5 * 8);
    let o = run(&["components", "--partition", "2,2", "--parabolic", "1,3", "--format", "json"]);
    let c: Vec<parahess::ComponentCandidate> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(serde_json::to_value(&c).unwrap(), serde_json::from_slice::<serde_json::Value>(&o.stdout).unwrap());
}

#[test]
fn csv_and_out_file() {
    let dir = std::env::temp_dir().join(format!("parahess-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cells.csv");
    let o = run(&["census", "--n", "4", "--granularity", "cells", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("lambda,J,w,v,y,dim,springer,schubert_point\n"));
    assert!(text.contains("\"2,2\",\"1,3\","));
    std::fs::remove_dir_all(&dir).unwrap();
}
