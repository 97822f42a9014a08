//! End-to-end tests of the `sdepth` binary: exit codes, the inline ideal
//! grammar, decomposition files, oracle answers, and campaign reports.

use std::process::{Command, Output};

fn sdepth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sdepth"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn parse_is_idempotent() {
    let first = sdepth(&["parse", "n=3; x1^3, x2^2*x3^2, x1*x2^3*x3"]);
    assert!(first.status.success());
    let canonical = stdout(&first);
    let second = sdepth(&["parse", canonical.trim()]);
    assert_eq!(stdout(&second), canonical);
}

#[test]
fn parse_errors_use_exit_code_2() {
    let out = sdepth(&["parse", "n=2; x1^3, x9"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("line 1"), "{err}");
    assert!(err.contains("x9"), "{err}");
}

#[test]
fn unknown_flags_are_rejected() {
    let out = sdepth(&["parse", "--frobnicate", "n=1; x1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reduce_prints_both_factors() {
    let out = sdepth(&["reduce", "n=3; x1*x2, x1*x3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("v: x1"), "{text}");
    assert!(text.contains("I': n=3; x3, x2"), "{text}");
}

#[test]
fn decompose_output_passes_verify() {
    let dir = std::env::temp_dir().join(format!("sdepth-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("example.dec");

    let out = sdepth(&[
        "decompose",
        "--target",
        "ideal",
        "--strategy",
        "three-gen",
        "--output",
        file.to_str().unwrap(),
        "n=3; x1^3, x2^2*x3^2, x1*x2^3*x3",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("# sdepth: 2"), "{text}");
    assert!(text.contains("# status: valid"), "{text}");

    let verify = sdepth(&["verify", file.to_str().unwrap()]);
    assert!(verify.status.success());
    assert!(stdout(&verify).contains("valid; sdepth 2"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_rejects_a_broken_file_with_exit_1() {
    let dir = std::env::temp_dir().join(format!("sdepth-cli-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("broken.dec");
    std::fs::write(&file, "target: ideal; ideal: x1, x2; n: 2\nx1 K[x1,x2]\n").unwrap();

    let out = sdepth(&["verify", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("invalid"), "{}", stdout(&out));

    let all = sdepth(&["verify", "--all-violations", file.to_str().unwrap()]);
    assert_eq!(all.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn oracle_subcommands_match_known_values() {
    let out = sdepth(&["sdepth", "--target", "quotient", "n=2; x1^2, x1*x2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0");

    let out = sdepth(&["sdepth", "--target", "ideal", "n=3; x1, x2, x3"]);
    assert_eq!(stdout(&out).trim(), "2");

    let out = sdepth(&["depth", "n=2; x1, x2"]);
    assert_eq!(stdout(&out).trim(), "0");

    let out = sdepth(&["depth", "n=3; x1*x2, x2*x3"]);
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn sdepth_writes_a_verifiable_witness() {
    let dir = std::env::temp_dir().join(format!("sdepth-cli-wit-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("witness.dec");

    let out = sdepth(&[
        "sdepth",
        "--target",
        "ideal",
        "--witness",
        file.to_str().unwrap(),
        "n=3; x1^3, x2^2*x3^2, x1*x2^3*x3",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2");

    let verify = sdepth(&["verify", file.to_str().unwrap()]);
    assert!(verify.status.success());
    assert!(stdout(&verify).contains("valid; sdepth 2"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn check_emits_json_and_exit_0_on_zero_violations() {
    let out = sdepth(&[
        "check",
        "--property",
        "obs34",
        "--seed",
        "1",
        "--samples",
        "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"property\": \"obs34\""), "{text}");
    assert!(text.contains("\"violations\": []"), "{text}");
    assert!(text.contains("\"elapsed_ms\""), "{text}");
}

#[test]
fn check_rejects_unknown_property() {
    let out = sdepth(&["check", "--property", "thm99"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn random_is_deterministic_in_the_seed() {
    let a = sdepth(&["random", "--seed", "7", "--n", "3", "--g", "3"]);
    let b = sdepth(&["random", "--seed", "7", "--n", "3", "--g", "3"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let c = sdepth(&["random", "--seed", "8", "--n", "3", "--g", "3"]);
    assert_ne!(stdout(&a), stdout(&c));
}

#[test]
fn budget_errors_name_the_knob() {
    let out = sdepth(&[
        "sdepth",
        "--poset-budget",
        "2",
        "n=3; x1^3, x2^2*x3^2, x1*x2^3*x3",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("poset_budget"), "{}", stderr(&out));
}
