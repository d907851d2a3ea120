use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specgraph"))
        .args(args)
        .env_remove("SPECGRAPH_TOLERANCE")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

#[test]
fn family_reports_domination_and_qmin() {
    let out = run(&["family", "scriptH n=9 alpha=3"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["gamma"], 4);
    assert_eq!(v["gamma_formula"], 4);
    assert_eq!(v["n"], 9);

    let v = json(&run(&["family", "cycle", "n=5"]));
    let q = v["q_min"].as_f64().unwrap();
    let exact = 2.0 + 2.0 * (4.0 * std::f64::consts::PI / 5.0).cos();
    assert!((q - exact).abs() < 1e-11, "{q}");

    let v = json(&run(&["family", "lollipop g=3 l=1"]));
    assert_eq!((v["n"].as_u64(), v["m"].as_u64()), (Some(4), Some(4)));
}

#[test]
fn family_rejects_bad_text() {
    assert_eq!(code(&run(&["family", "wheel n=5"])), 2);
    assert_eq!(code(&run(&["family", "cycle n=2"])), 2);
}

#[test]
fn search_examples() {
    let out = run(&[
        "search",
        "--n",
        "5",
        "--gamma",
        "2",
        "--nonbipartite",
        "--no-timing",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert!(v["domain"]["count"].as_u64().unwrap() >= 2);
    assert_eq!(v["status"], "pass");

    let v = json(&run(&[
        "search",
        "--n",
        "7",
        "--unicyclic",
        "--girth",
        "3",
        "--gamma",
        "3",
    ]));
    assert_eq!(v["argmin"].as_array().unwrap().len(), 1);
    assert!(v["qstar"].as_f64().is_some());
}

#[test]
fn infeasible_search_is_empty_certificate() {
    let out = run(&["search", "--n", "4", "--gamma", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["status"], "empty-domain");
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    assert_eq!(
        code(&run(&[
            "search",
            "--n",
            "4",
            "--gamma",
            "3",
            "--fail-on-empty"
        ])),
        3
    );
}

#[test]
fn verify_exit_codes() {
    let out = run(&["verify", "theorem-1.1", "--n", "7"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["status"], "pass");

    let out = run(&["verify", "theorem-1.2", "--n", "9", "--gamma", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["status"], "empty-domain");
    let out = run(&[
        "verify",
        "theorem-1.2",
        "--n",
        "9",
        "--gamma",
        "4",
        "--fail-on-empty",
    ]);
    assert_eq!(code(&out), 3);

    assert_eq!(code(&run(&["verify", "no-such-suite"])), 2);
    assert_eq!(code(&run(&["verify", "theorem-1.1"])), 2);
    assert_eq!(code(&run(&["verify", "theorem-1.1", "--n", "8"])), 2);
}

#[test]
fn failing_suite_exits_one() {
    // The aggregated battery includes the k = 0 sunlike points, where the
    // closed form undercounts the cycle.
    let out = run(&["verify", "preliminaries", "--no-timing"]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["status"], "fail");
    assert!(v["checks"].as_array().unwrap().len() > 10);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&run(&["bogus"])), 2);
    assert_eq!(code(&run(&["qmin", "not graph6!"])), 2);
    assert_eq!(code(&run(&["search", "--n", "5", "--threads", "0"])), 2);
    let out = Command::new(env!("CARGO_BIN_EXE_specgraph"))
        .args(["qmin", "Bw"])
        .env("SPECGRAPH_TOLERANCE", "1e-20")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    let out = Command::new(env!("CARGO_BIN_EXE_specgraph"))
        .args(["qmin", "Bw"])
        .env("SPECGRAPH_TOLERANCE", "1e-10")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
}

#[test]
fn graph6_round_trip() {
    let out = run(&["encode", "--n", "4", "--edges", "0-1,1-2,2-3,3-0"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let v = json(&run(&["decode", text.trim()]));
    assert_eq!(v["n"], 4);
    assert_eq!(v["edges"].as_array().unwrap().len(), 4);
    assert_eq!(code(&run(&["encode", "--n", "3", "--edges", "0-3"])), 2);
}

#[test]
fn single_thread_output_is_byte_identical() {
    let args = [
        "--threads",
        "1",
        "--no-timing",
        "verify",
        "theorem-4.4-4.7",
        "--n",
        "9",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn thread_count_does_not_change_result() {
    let one = json(&run(&[
        "--threads",
        "1",
        "--no-timing",
        "verify",
        "lemma-2.11",
        "--n",
        "7",
    ]));
    let four = json(&run(&[
        "--threads",
        "4",
        "--no-timing",
        "verify",
        "lemma-2.11",
        "--n",
        "7",
    ]));
    assert_eq!(one, four);
}

#[test]
fn output_file_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let out = run(&[
        "verify",
        "theorem-1.1",
        "--n",
        "5",
        "--format",
        "csv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("suite,"));
    assert!(lines.next().unwrap().starts_with("theorem-1.1,"));
}
