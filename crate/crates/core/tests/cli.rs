//! End-to-end checks of the `bruhat` binary: golden outputs, exit
//! codes, and JSON stability.

use std::process::{Command, Output};

fn bruhat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bruhat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = bruhat(args);
    assert!(
        out.status.success(),
        "args {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn covers_listing() {
    let text = stdout(&["covers", "132", "--stats"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2, "{text}");
    assert!(lines.iter().any(|l| l.contains("132 <. 312") && l.contains("c=1")));
    assert!(lines.iter().any(|l| l.contains("132 <. 231") && l.contains("b=1")));

    // the top element has no covers, still exit 0
    let out = bruhat(&["covers", "321"]);
    assert_eq!(exit_code(&out), 0);
    assert!(out.stdout.is_empty());

    let text = stdout(&["covers", "1234", "--n", "4"]);
    assert_eq!(text.lines().count(), 3);
}

#[test]
fn covers_json() {
    let text = stdout(&["covers", "132", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 2);
    for c in arr {
        for key in ["lower", "upper", "i", "j", "a", "b", "c", "d"] {
            assert!(c.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn schubert_printouts() {
    assert_eq!(stdout(&["schubert", "321"]).trim(), "x1^2*x2");
    assert_eq!(stdout(&["schubert", "132", "--spec1"]).trim(), "2");
    assert_eq!(stdout(&["schubert", "132", "--padded"]).trim(), "x1*y1*y2 + x2*y1^2");
    assert_eq!(stdout(&["schubert", "132"]).trim(), "x2 + x1");
}

#[test]
fn chains_printouts() {
    assert_eq!(stdout(&["chains", "--weights", "code", "e", "w0", "--n", "4"]).trim(), "720");
    assert_eq!(stdout(&["chains", "--weights", "thm14", "132", "321"]).trim(), "4");
    assert_eq!(
        stdout(&["chains", "--weights", "thm13", "e", "w0", "--n", "3"]).trim(),
        "3*a1*a2^2 + 3*a1^2*a2"
    );
    assert_eq!(
        stdout(&["chains", "--weights", "thm12:BC", "e", "w0", "--n", "3"]).trim(),
        "6"
    );
    // the empty chain
    assert_eq!(stdout(&["chains", "--weights", "code", "w0", "w0"]).trim(), "1");
}

#[test]
fn verify_passes_and_counts_cases() {
    let out = bruhat(&["verify", "thm14", "--n", "4"]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains("[ok]")).count(), 24);
    assert!(!text.contains("FAIL"));

    let out = bruhat(&["verify", "all", "--n", "3"]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn verify_sweep_and_out_file() {
    let dir = std::env::temp_dir().join("bruhat-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = bruhat(&[
        "verify",
        "thm12",
        "--max-n",
        "4",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 2); // n = 3 and n = 4
    assert_eq!(arr[0]["target"], "thm12");
    assert_eq!(arr[0]["n"], 3);
    assert_eq!(arr[1]["n"], 4);
    assert_eq!(arr[0]["cases"].as_array().unwrap().len(), 12);
}

#[test]
fn lemma_reports_use_lemma_key() {
    let text = stdout(&["verify", "lem41", "--n", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v[0]["lemma"], "lem41");
    assert!(v[0].get("target").is_none());
}

#[test]
fn json_output_is_byte_stable_across_worker_counts() {
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_bruhat"))
            .args(["verify", "prop22", "--n", "4", "--format", "json"])
            .env("BRUHAT_THREADS", threads)
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    let single = run("1");
    assert_eq!(single, run("4"));
    assert_eq!(single, run("2"));
}

#[test]
fn tsv_format() {
    let text = stdout(&["verify", "thm13", "--n", "3", "--format", "tsv"]);
    for line in text.lines() {
        let fields: Vec<&str> = line.split('\t').collect();
        assert_eq!(fields.len(), 5, "{line}");
        assert_eq!(fields[0], "thm13");
        assert_eq!(fields[3], "pass");
    }
}

#[test]
fn invalid_arguments_exit_2() {
    for args in [
        &["verify", "thm99", "--n", "3"][..],
        &["chains", "--weights", "nope", "e", "w0"][..],
        &["chains", "--weights", "thm12:BB", "e", "w0"][..],
        &["covers", "99"][..],
        &["schubert", "1325"][..],
        &["chains", "--weights", "code", "132", "4321"][..],
    ] {
        let out = bruhat(args);
        assert_eq!(exit_code(&out), 2, "args {args:?}");
        assert!(!out.stderr.is_empty(), "args {args:?} printed no error");
    }
}
