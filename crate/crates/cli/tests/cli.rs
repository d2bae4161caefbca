//! End-to-end checks of the installed binary: output shapes, exit codes,
//! and thread-count independence.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_subdiam"))
}

fn catalogue(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../catalogue")
        .join(name);
    path.to_str().expect("utf-8 path").to_string()
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn dist_prints_the_value_with_its_label() {
    let out = bin()
        .args(["dist", "--x", "10002", "--y", "03004"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "d_E = 2\n");
}

#[test]
fn dist_renders_half_integers_as_fractions() {
    let out = bin()
        .args(["dist", "--x", "01", "--y", "0"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "d_E = 1/2\n");
}

#[test]
fn dist_engines_agree_on_the_same_pair() {
    for engine in ["auto", "dp", "bitparallel", "band"] {
        let out = bin()
            .args(["dist", "--x", "0110100110", "--y", "1001011001", "--engine", engine])
            .output()
            .expect("binary runs");
        assert!(out.status.success());
        assert_eq!(stdout_of(&out), "d_E = 3\n", "engine {engine}");
    }
}

#[test]
fn words_lists_each_factor_on_its_own_line() {
    let out = bin()
        .args(["words", "--sub", &catalogue("thue-morse.sub"), "--n", "3"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let body = stdout_of(&out);
    let lines: Vec<&str> = body.lines().collect();
    assert_eq!(lines, vec!["001", "010", "011", "100", "101", "110"]);
    assert!(stderr_of(&out).contains("6 words"));
}

#[test]
fn diam_reports_the_known_length_16_value() {
    let out = bin()
        .args(["diam", "--sub", &catalogue("thue-morse.sub"), "--n", "16"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let body = stdout_of(&out);
    let mut lines = body.lines();
    assert_eq!(
        lines.next(),
        Some("n,doubled_diam,diam,exact,witness_a,witness_b,evaluated,pruned")
    );
    let row = lines.next().expect("data row");
    assert!(row.starts_with("16,8,4,true,"), "row was {row}");
}

#[test]
fn malformed_rule_files_exit_2_with_a_position() {
    let dir = std::env::temp_dir().join("subdiam-cli-parse-test");
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join("bad.sub");
    std::fs::write(&path, "0 -> 0 1\n1 -> 1 X\n").expect("write test file");
    let out = bin()
        .args(["words", "--sub", path.to_str().expect("utf-8"), "--n", "3"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    let err = stderr_of(&out);
    assert!(err.contains("line 2"), "stderr was {err}");
    assert!(err.contains("column"), "stderr was {err}");
}

#[test]
fn exhausted_memory_budget_exits_3() {
    let out = bin()
        .args([
            "words",
            "--sub",
            &catalogue("thue-morse.sub"),
            "--n",
            "400",
            "--mem-cap",
            "1",
        ])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_of(&out).contains("resource limit"));
}

#[test]
fn out_of_domain_requests_exit_2() {
    let out = bin()
        .args(["curve", "--sub", &catalogue("doubling.sub"), "--max", "8"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("domain"));
}

#[test]
fn sampled_output_is_independent_of_thread_count() {
    let run = |threads: &str| {
        let out = bin()
            .args([
                "diam",
                "--sub",
                &catalogue("thue-morse.sub"),
                "--n",
                "48",
                "--budget",
                "400",
                "--seed",
                "31",
                "--threads",
                threads,
            ])
            .output()
            .expect("binary runs");
        assert!(out.status.success());
        stdout_of(&out)
    };
    assert_eq!(run("1"), run("8"));
}

#[test]
fn classify_names_the_regime_and_checks_witnesses() {
    let out = bin()
        .args([
            "classify",
            "--sub",
            &catalogue("crossed-doubling.sub"),
            "--witness-levels",
            "4",
        ])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let body = stdout_of(&out);
    assert!(body.contains("verdict = FULL"));
    assert!(body.contains("all hold: true"));

    let out = bin()
        .args(["classify", "--sub", &catalogue("thue-morse.sub")])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("verdict = SUBLINEAR"));
}

#[test]
fn tm_table_has_the_documented_columns() {
    let out = bin()
        .args(["tm", "--lengths", "8,16,32"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let body = stdout_of(&out);
    let mut lines = body.lines();
    assert_eq!(lines.next(), Some("n,doubled_dE,bb,lower,upper"));
    assert_eq!(lines.clone().count(), 3);
    assert!(lines.next().expect("row").starts_with("8,6,5,"));
}

#[test]
fn rk_check_emits_both_windows_and_a_verdict() {
    let out = bin()
        .args([
            "rk",
            "--sub",
            &catalogue("thue-morse.sub"),
            "--k",
            "2",
            "--exact-cap",
            "0",
            "--n-count",
            "3",
            "--pair-budget",
            "4",
            "--check",
        ])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let body = stdout_of(&out);
    assert!(body.contains("verdict = CONSISTENT"), "body was {body}");
    assert_eq!(body.matches("k,base,n_lo,n_hi").count(), 2);
}

#[test]
fn svg_output_is_wellformed() {
    let out = bin()
        .args(["tm", "--lengths", "4,8,16,32", "--format", "svg"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let body = stdout_of(&out);
    assert!(body.starts_with("<svg"));
    assert!(body.trim_end().ends_with("</svg>"));
}
