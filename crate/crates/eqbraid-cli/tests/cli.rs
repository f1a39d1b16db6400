//! End-to-end checks of the binary: worked examples, exit codes, and
//! byte-stability of the output.

use std::fs;
use std::process::{Command, Output};

fn eqbraid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqbraid"))
        .args(args)
        .output()
        .expect("binary must run")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is utf-8")
}

fn exit_of(output: &Output) -> i32 {
    output.status.code().expect("process not killed by signal")
}

fn corpus_path() -> &'static str {
    concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/corpus.txt")
}

#[test]
fn jones_of_the_trefoil_pair() {
    let out = eqbraid(&["jones", "2", "", "|", "1 1 1"]);
    assert_eq!(stdout_of(&out), "1*t^1 + 1*t^3 - 1*t^4\n");
    assert_eq!(exit_of(&out), 0);
}

#[test]
fn alexander_of_the_trefoil_pair() {
    let out = eqbraid(&["alexander", "2", "", "|", "1 1 1"]);
    assert_eq!(stdout_of(&out), "1*t^-1 - 1*t^0 + 1*t^1\n");
    assert_eq!(exit_of(&out), 0);
}

#[test]
fn palcheck_reports_false_with_exit_one() {
    let out = eqbraid(&["palcheck", "4", "1 2"]);
    assert_eq!(stdout_of(&out), "false\n");
    assert_eq!(exit_of(&out), 1);
}

#[test]
fn palcheck_accepts_a_group_level_palindrome() {
    // Equal to its reverse in B_4 but not letter by letter.
    let out = eqbraid(&["palcheck", "4", "3 -2 1 -3 -2 3"]);
    assert_eq!(stdout_of(&out), "true\n");
    assert_eq!(exit_of(&out), 0);
}

#[test]
fn closure_prints_the_pd_code() {
    let out = eqbraid(&["closure", "2", "", "|", "1 1 1"]);
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 3);
    assert!(text
        .lines()
        .all(|l| l.starts_with("X ") && l.ends_with('+')));
    assert_eq!(exit_of(&out), 0);
}

#[test]
fn apply_prints_the_stabilized_pair() {
    let out = eqbraid(&["apply", "2", "", "|", "1 1 1", "stabS", "first", "+"]);
    assert_eq!(stdout_of(&out), "3;1;2 2 2\n");
    assert_eq!(exit_of(&out), 0);
}

#[test]
fn apply_reports_inapplicable_moves_with_exit_one() {
    // stabS needs the active side's seed block to avoid s1; beta = s1^3
    // factors with seed block s1.
    let out = eqbraid(&["apply", "2", "", "|", "1 1 1", "stabS", "second", "+"]);
    assert_eq!(stdout_of(&out), "");
    assert_eq!(exit_of(&out), 1);
}

#[test]
fn search_finds_a_stabilization_trace() {
    let out = eqbraid(&["search", "2", "", "|", "1 1 1", "3", "1", "|", "2 2 2"]);
    assert_eq!(stdout_of(&out), "F stabS first +\n");
    assert_eq!(exit_of(&out), 0);
}

#[test]
fn search_reports_not_found_within_budget() {
    let out = eqbraid(&[
        "search",
        "2",
        "",
        "|",
        "1 1 1",
        "2",
        "",
        "|",
        "-1 -1 -1",
        "--max-nodes=200",
    ]);
    assert_eq!(stdout_of(&out), "NOT-FOUND\n");
    assert_eq!(exit_of(&out), 1);
}

#[test]
fn corpus_verify_passes_the_bundled_file() {
    let out = eqbraid(&["corpus", "verify", corpus_path()]);
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 11);
    assert!(text.lines().take(10).all(|l| l.ends_with(": PASS")));
    assert_eq!(text.lines().last(), Some("passed 10 of 10 rows"));
    assert_eq!(exit_of(&out), 0);

    let again = eqbraid(&["corpus", "verify", corpus_path()]);
    assert_eq!(out.stdout, again.stdout, "output must be byte-stable");
}

#[test]
fn corpus_verify_tsv_lists_every_check() {
    let out = eqbraid(&["corpus", "verify", corpus_path(), "--format=tsv"]);
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 40);
    assert!(text.lines().all(|l| l.split('\t').nth(2) == Some("PASS")));
    assert_eq!(exit_of(&out), 0);
}

#[test]
fn corpus_verify_flags_a_bad_row_with_exit_one() {
    let path = std::env::temp_dir().join("eqbraid-cli-bad-corpus.txt");
    fs::write(&path, "almost;2;;1 1 1;4_1\n").unwrap();
    let out = eqbraid(&["corpus", "verify", path.to_str().unwrap()]);
    fs::remove_file(&path).ok();
    let text = stdout_of(&out);
    assert_eq!(text.lines().next(), Some("almost: FAIL jones,alexander"));
    assert_eq!(text.lines().last(), Some("passed 0 of 1 rows"));
    assert_eq!(exit_of(&out), 1);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    for args in [
        &["frobnicate"] as &[&str],
        &["palcheck", "2", "7"],
        &["jones", "2", "", "missing-pipe", "1 1 1"],
        &["corpus", "verify", "/nonexistent/corpus.txt"],
        &["apply", "2", "", "|", "1 1 1", "warp", "first", "+"],
    ] {
        let out = eqbraid(args);
        assert_eq!(exit_of(&out), 2, "args {args:?} must be a usage error");
        assert!(
            !out.stderr.is_empty(),
            "args {args:?} must explain on stderr"
        );
    }
}
