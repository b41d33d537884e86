use std::process::{Command, Output};

fn subshift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subshift")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = subshift(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    subshift(args).status.code().unwrap()
}

#[test]
fn eta() {
    assert_eq!(stdout(&["eta", "--length", "7"]), "axayaxa\n");
    assert_eq!(stdout(&["eta", "--length", "1"]), "a\n");
    assert_eq!(stdout(&["eta", "--length", "15"]), "axayaxazaxayaxa\n");
}

#[test]
fn eta_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("eta.txt");
    stdout(&["eta", "--length", "17", "--out", path.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(path).unwrap(), "axayaxazaxayaxaxa\n");
}

#[test]
fn complexity_table() {
    let csv = stdout(&["complexity", "--max-length", "4", "--format", "csv"]);
    let c: Vec<&str> = csv.lines().skip(1).map(|l| l.split(',').nth(2).unwrap()).collect();
    assert_eq!(c, ["4", "6", "8", "10"]);
    assert!(csv.starts_with("L,C_formula,C_oracle,delta,regime_n,regime_k\n"));
    let tsv = stdout(&["complexity", "--max-length", "4", "--format", "tsv"]);
    assert_eq!(tsv.lines().nth(4), Some("4\t10\t10\t3\t2\t0"));
}

#[test]
fn complexity_check() {
    let out = stdout(&["complexity", "--max-length", "300", "--check"]);
    assert!(out.ends_with("VERIFY pass L_max=300\n"));
}

#[test]
fn special() {
    assert_eq!(stdout(&["special", "--length", "4", "--side", "right"]), "xaxa\tx,y\nyaxa\tx,y,z\n");
    assert_eq!(stdout(&["special", "--length", "6", "--side", "right"]).lines().count(), 1);
    assert!(stdout(&["special", "--length", "3", "--side", "bi"]).lines().any(|l| l.starts_with("axa\t")));
    assert_eq!(stdout(&["special", "--length", "4", "--side", "left"]), "axax\tx,y\naxay\tx,y,z\n");
    assert_eq!(stdout(&["special", "--length", "4", "--source", "formula"]), stdout(&["special", "--length", "4"]));
    assert_eq!(code(&["special", "--length", "4", "--side", "left", "--source", "formula"]), 2);
}

#[test]
fn rauzy() {
    assert!(stdout(&["rauzy", "--order", "1", "--stats"]).starts_with("order 1: V=4 E=6 "));
    assert!(stdout(&["rauzy", "--order", "3", "--stats"]).starts_with("order 3: V=8 E=10 "));
    let dot = stdout(&["rauzy", "--order", "1"]);
    assert!(dot.starts_with("digraph "));
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 6);
    assert_eq!(dot, stdout(&["rauzy", "--order", "1"]));
}

#[test]
fn relators() {
    assert_eq!(stdout(&["relators", "--family", "ad4", "--max-k", "0"]), "adadadad\n");
    let ad4 = stdout(&["relators", "--family", "ad4", "--max-k", "1"]);
    assert_eq!(ad4.lines().nth(1).unwrap().len(), 16);
    let all = stdout(&["relators", "--family", "all", "--max-k", "2", "--annotate"]);
    assert_eq!(all.lines().count(), 11);
    assert_eq!(all.lines().next(), Some("static:aa"));
}

#[test]
fn factors_dump() {
    assert_eq!(stdout(&["factors", "--length", "2"]), "ax\nay\naz\nxa\nya\nza\n");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["complexity", "--max-length", "0"]), 2);
    assert_eq!(code(&["eta"]), 2);
    assert_eq!(code(&["eta", "--length", "5", "--cap", "10"]), 2);
    assert_eq!(code(&["eta", "--length", "5000", "--cap", "1024"]), 3);
    assert_eq!(code(&["relators", "--max-k", "40"]), 3);
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing").join("g.dot");
    assert_eq!(code(&["rauzy", "--order", "2", "--dot", missing.to_str().unwrap()]), 4);
}
