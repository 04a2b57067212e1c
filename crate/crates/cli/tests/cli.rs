use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn repo() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn dict(name: &str) -> PathBuf {
    repo().join("dicts").join(format!("{name}.dict"))
}

fn omegapow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_omegapow")).args(args).output().unwrap()
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = omegapow(&full);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (out.status.code().unwrap(), v)
}

fn write_dict(dir: &tempfile::TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn member_of_the_missing_point() {
    let d = dict("open-one-hole");
    let (code, v) = run_json(&["member", d.to_str().unwrap(), "1(0)"]);
    assert_eq!(code, 1);
    assert_eq!(v["member"], false);
    let (code, _) = run_json(&["member", d.to_str().unwrap(), "(01)"]);
    assert_eq!(code, 0);
}

#[test]
fn rank_of_family_member() {
    let d = dict("rank-family-2");
    let out = omegapow(&["rank", d.to_str().unwrap(), "000(1)"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains('2'));
    let (_, v) = run_json(&["rank", d.to_str().unwrap(), "000(1)"]);
    assert_eq!(v["result"], "rank");
    assert_eq!(v["value"], 2);
}

#[test]
fn equiv_and_included() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_dict(&dir, "a.dict", "alphabet 2\nmain = {01, 0}\n");
    let b = write_dict(&dir, "b.dict", "alphabet 2\nmain = {0, 10}\n");
    let (a, b) = (a.to_str().unwrap(), b.to_str().unwrap());
    assert_eq!(omegapow(&["equiv", a, a]).status.code(), Some(0));
    assert_eq!(omegapow(&["equiv", a, b]).status.code(), Some(1));
    assert_eq!(omegapow(&["included", a, b]).status.code(), Some(0));
    assert_eq!(omegapow(&["included", b, a]).status.code(), Some(1));
}

#[test]
fn classify_finite_clopen() {
    let (code, v) = run_json(&["classify", dict("finite-clopen").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["verb"], "classify");
    assert_eq!(v["class"], "Clopen");
}

#[test]
fn errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_dict(&dir, "bad.dict", "alphabet 2\nmain = {0, 2}\n");
    assert_eq!(omegapow(&["member", bad.to_str().unwrap(), "(0)"]).status.code(), Some(2));
    let d = dict("full");
    assert_eq!(omegapow(&["member", d.to_str().unwrap(), "(2)"]).status.code(), Some(2));
    let infinite = dict("open-one-hole");
    assert_eq!(omegapow(&["classify", infinite.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(omegapow(&["member", "/nonexistent.dict", "(0)"]).status.code(), Some(2));
}

#[test]
fn json_output_is_deterministic() {
    let cases: Vec<Vec<String>> = vec![
        vec!["classify".into(), dict("two-generators").display().to_string()],
        vec!["minimal".into(), dict("finite-clopen").display().to_string()],
        vec!["tree-encode".into(), repo().join("trees/small.tree").display().to_string()],
        vec!["explore-conjecture".into(), "--max-len".into(), "2".into()],
        vec!["examples".into()],
    ];
    for args in cases {
        let args: Vec<&str> = std::iter::once("--json").chain(args.iter().map(String::as_str)).collect();
        let first = omegapow(&args);
        let second = omegapow(&args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        serde_json::from_slice::<Value>(&first.stdout).unwrap();
    }
}

#[test]
fn tree_encode_fields() {
    let (code, v) = run_json(&["tree-encode", repo().join("trees/small.tree").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["tree_rank"], 3);
    assert_eq!(v["alpha0_rank"], 4);
    assert_eq!(v["alpha0_death_step"], "788");
}

#[test]
fn alpha0_prefix() {
    let out = omegapow(&["alpha0", "--prefix", "10"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("1010010001"));
}

#[test]
fn code_and_antichain_checks() {
    let dir = tempfile::tempdir().unwrap();
    let code = write_dict(&dir, "c.dict", "alphabet 2\nmain = {0, 01}\n");
    let not_code = write_dict(&dir, "n.dict", "alphabet 2\nmain = {0, 01, 10}\n");
    assert_eq!(omegapow(&["code-check", code.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(omegapow(&["code-check", not_code.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(omegapow(&["antichain", code.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn exported_dictionaries_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = omegapow(&["examples", "--export", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        let p = entry.unwrap().path();
        let name = p.file_name().unwrap().to_str().unwrap();
        assert_eq!(std::fs::read(&p).unwrap(), std::fs::read(repo().join("dicts").join(name)).unwrap(), "{name}");
    }
}
