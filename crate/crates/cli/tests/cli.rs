use std::path::Path;
use std::process::{Command, Output};

fn cdlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cdlab"))
        .args(args)
        .env_remove("CDLAB_MAX_ORDER")
        .output()
        .expect("run cdlab")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn analyze_spec_and_file() {
    let out = cdlab(&["analyze", "symmetric:3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("mu: 4"), "{text}");
    assert!(text.contains("cd-subgroups: 1"));

    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "s3.txt", "perm 3\n1 0 2\n1 2 0\n");
    let text = stdout(&cdlab(&["analyze", &file]));
    assert!(text.starts_with("group: s3\norder: 6\n"), "{text}");
    assert!(text.contains("mu: 4"));
}

#[test]
fn lattice_dot_for_quaternions() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("q8.dot");
    let out = cdlab(&["lattice", "dicyclic:2", "--dot", out_path.to_str().unwrap()]);
    assert!(out.status.success());
    let dot = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 5);
    assert!(dot.contains("label=\"order=8, index=1\", xlabel=\"top\""));
    assert!(dot.contains("label=\"order=2, index=4\", xlabel=\"bottom\""));
}

#[test]
fn verify_catalog_file_records() {
    let dir = tempfile::tempdir().unwrap();
    let catalog = write(dir.path(), "c.txt", "dihedral:4\nheisenberg:3\nalternating:5\n");
    let out = cdlab(&["verify", "--catalog", &catalog, "--format", "records"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 3 * 8);
    for line in text.lines() {
        assert!(line.starts_with("{\"schema\":1,\"group\":"), "{line}");
    }
}

#[test]
fn verify_subset_text_summary() {
    let out = cdlab(&["verify", "--theorems", "t1,c2", "--max-order", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let listed = stdout(&cdlab(&["catalog", "list", "--max-order", "12"])).lines().count();
    assert!(text.contains(&format!("t1: pass={listed} fail=0 not_applicable=0 restricted=0 total={listed}")));
    assert!(text.contains(&format!("total={listed}")));
    assert!(!text.contains("t5:"));
}

#[test]
fn jobs_do_not_change_records() {
    let one = cdlab(&["verify", "--max-order", "32", "--jobs", "1", "--format", "records"]);
    let eight = cdlab(&["verify", "--max-order", "32", "--jobs", "8", "--format", "records"]);
    assert!(one.status.success());
    assert_eq!(one.stdout, eight.stdout);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let too_big = write(dir.path(), "big.txt", "symmetric:6\n");
    assert_eq!(cdlab(&["verify", "--catalog", &too_big]).status.code(), Some(1));

    let bad = write(dir.path(), "bad.txt", "cyclic:2\nnot_a_family:3\n");
    let out = cdlab(&["verify", "--catalog", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    assert_eq!(cdlab(&["verify", "--max-order", "513"]).status.code(), Some(2));
    assert_eq!(cdlab(&["verify", "--theorems", "t7"]).status.code(), Some(2));
    assert_eq!(cdlab(&["analyze", "dihedral:x"]).status.code(), Some(2));
    assert_eq!(cdlab(&["frobnicate"]).status.code(), Some(2));

    let empty = write(dir.path(), "empty.txt", "# nothing\n");
    let out = cdlab(&["verify", "--catalog", &empty]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 1);
}

#[test]
fn max_order_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_cdlab"))
        .args(["catalog", "list"])
        .env("CDLAB_MAX_ORDER", "8")
        .output()
        .unwrap();
    let text = stdout(&out);
    assert!(text.lines().all(|l| l.rsplit('\t').next().unwrap().parse::<usize>().unwrap() <= 8));
    assert!(text.contains("dicyclic:2\t8"));
    let default = stdout(&cdlab(&["catalog", "list"]));
    assert!(default.contains("heisenberg:3\t27"));
    assert!(default.contains("corpus:sl2_5\t120"));
}
