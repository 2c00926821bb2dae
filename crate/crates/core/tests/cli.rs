use std::path::{Path, PathBuf};
use std::process::Command;

use picture_hanging::cli::run;
use picture_hanging::freegroup::Word;
use picture_hanging::puzzles::fixture;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("hang").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hang-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_accepts_solution_seven() {
    let f = fixture(7).unwrap();
    let word = scratch("s7.txt", &f.word.to_string());
    let spec = scratch("s7.json", &f.spec.to_json());
    let (code, out, _) = call(&["verify", "--word", s(&word), "--spec", s(&spec)]);
    assert_eq!(code, 0);
    assert_eq!(out, "verified: all 16 subsets agree\n");
}

#[test]
fn verify_rejects_corrupted_solution_seven() {
    let f = fixture(7).unwrap();
    let mut tokens: Vec<String> = f.word.to_string().split(' ').map(String::from).collect();
    tokens.remove(3);
    let word = scratch("s7-bad.txt", &tokens.join(" "));
    let spec = scratch("s7-bad.json", &f.spec.to_json());
    let (code, out, _) = call(&["verify", "--word", s(&word), "--spec", s(&spec)]);
    assert_eq!(code, 1);
    // without x4 the word x1 x2 x3 X2 X1 X4 X3 no longer falls when {3,4} go
    assert!(out.starts_with("mismatch removing {"), "{out}");

    let (code, out, _) = call(&["verify", "--word", s(&word), "--spec", s(&spec), "--json"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verified"], false);
    assert!(v["removed"].is_array());
}

#[test]
fn construct_commands() {
    let (code, out, _) = call(&["construct", "one-of", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out, "x1 x2 X1 X2 x3 x4 X3 X4 x2 x1 X2 X1 x4 x3 X4 X3\n");

    let (code, out, _) = call(&["construct", "classes", "--classes", "1,2;3,4"]);
    assert_eq!(code, 0);
    assert_eq!(out, "x1 x2 x3 x4 X2 X1 X4 X3\n");

    let (code, out, err) = call(&["construct", "k-of", "--k", "2", "--n", "3"]);
    assert_eq!(code, 0, "{err}");
    let word: Word = out.trim().parse().unwrap();
    assert_eq!(word.max_nail(), 5);
    assert!(err.contains("verified on all 8 subsets"));

    let (code, out, _) = call(&["construct", "k-of", "--k", "2", "--n", "4", "--dry-run"]);
    assert_eq!(code, 0);
    assert!(out.contains("estimated length 4189750"), "{out}");
}

#[test]
fn compile_reports() {
    let spec = scratch("p3.json", r#"{"n":3,"subsets":[[1],[2,3],[1,3]]}"#);
    let (code, out, err) = call(&["compile", "--spec", s(&spec), "--json"]);
    assert_eq!(code, 0, "{err}");
    assert!(err.contains("note: removed [1, 3]"));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verification"]["status"], "verified");
    assert_eq!(v["anchors"], serde_json::json!([4, 5]));

    let (code, _, err) = call(&[
        "compile",
        "--formula",
        "r1 | r2 | r3 | r4",
        "--budget",
        "1000",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("exceeds the letter budget 1000"));

    let (code, _, err) = call(&["compile", "--formula", "false", "--n", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("unrealizable"));
}

#[test]
fn solve_commands() {
    let word = scratch("s2.txt", "x1 x2 x3 X1 X2 X3");
    let (code, out, _) = call(&["solve", "min-fell", "--word", s(&word), "--n", "3"]);
    assert_eq!((code, out.as_str()), (0, "{1,2}\n"));
    let (code, out, _) = call(&["solve", "max-survive", "--word", s(&word), "--json"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"removed\":[1],\"size\":1}\n");
    let (code, out, _) = call(&["solve", "greedy", "--word", s(&word)]);
    assert_eq!((code, out.as_str()), (0, "{1,2}\n"));

    let inst = scratch("cover.json", r#"{"m":3,"sets":[[1,2],[2,3],[3],[1]]}"#);
    let (code, out, _) = call(&[
        "solve",
        "set-cover",
        "--instance",
        s(&inst),
        "--solve",
        "--json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["cover"].as_array().unwrap().len(), 2);
    assert_eq!(v["brute_force_optimum"], 2);

    let trivial = scratch("eps.txt", "x1 X1");
    let (code, _, err) = call(&["solve", "max-survive", "--word", s(&trivial), "--n", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("already trivial"));
}

#[test]
fn render_and_table() {
    let word = scratch("comm.txt", "x1 x2 X1 X2");
    let (code, svg, _) = call(&["render", "--word", s(&word), "--n", "2"]);
    assert_eq!(code, 0);
    assert!(svg.starts_with("<svg"));
    let (_, again, _) = call(&["render", "--word", s(&word), "--n", "2"]);
    assert_eq!(svg, again);

    let (code, _, err) = call(&["render", "--word", s(&word), "--format", "png"]);
    assert_eq!(code, 2);
    assert!(err.contains("png"));

    let (code, out, _) = call(&["table", "--word", s(&word)]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 4);
    assert_eq!(out.lines().filter(|l| l.ends_with("falls")).count(), 3);
}

#[test]
fn puzzles_listing() {
    let (code, out, _) = call(&["puzzles"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 11);
    let (code, out, _) = call(&["puzzles", "--id", "11", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["word"].as_array().unwrap().len(), 320);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_hang");
    let out = Command::new(bin)
        .args(["puzzles", "--id", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "x1 x2 x3 X1 X2 X3\n{\"n\":3,\"threshold_k\":2}\n"
    );
    let out = Command::new(bin).args(["compile"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
