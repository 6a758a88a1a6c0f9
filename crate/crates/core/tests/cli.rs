use std::process::{Command, Output};

use harmonic_identities::cli::{exit_code, EXIT_FAILED, EXIT_OK};
use harmonic_identities::engine::{FailedPoint, VerificationReport};
use harmonic_identities::{ParamAssignment, Rational};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_harmonic-id"))
        .args(args)
        .env_remove("HARMONIC_ID_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn reports(o: &Output) -> Vec<VerificationReport> {
    serde_json::from_slice(&o.stdout).expect("json report")
}

#[test]
fn verify_spe_sofo_a() {
    let o = run(&["verify", "spe-sofo-a", "--n-max", "10", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let reps = reports(&o);
    assert_eq!(reps.len(), 1);
    assert_eq!(reps[0].checked, 10);
    assert_eq!(reps[0].passed, 10);
    assert!(reps[0].failed.is_empty());
    assert_eq!(reps[0].skipped.len(), 1);
    assert_eq!(reps[0].skipped[0].reason, "requires n>0");
}

#[test]
fn markdown_summary() {
    let o = run(&["verify", "corl-a", "corl-b", "--n-max", "5", "--p-max", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("| corl-a | 18 | 18 | 0 | 0 |"), "{out}");
    assert!(out.contains("2 identities, 36 points checked, 0 with failures"));
}

#[test]
fn show_thm_c() {
    let o = run(&["show", "thm-c"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("pole p-q+1=0"), "{out}");
    assert!(out.contains(r"Performing the replacements $x\to x+p$"));
    assert!(out.contains("q: nonneg-int"));
}

#[test]
fn show_json_lists_domains() {
    let o = run(&["show", "corl-d", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["params"][0]["name"], "x");
    assert_eq!(v["params"][0]["domain"], "rational");
    assert_eq!(v["family"], "corollary");
}

#[test]
fn unknown_identity_exits_2_with_suggestions() {
    let o = run(&["verify", "corl-zz"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("unknown identity `corl-zz`"));
    assert!(err.contains("did you mean"));
    assert!(err.contains("corl-a"));

    let o = run(&["show", "corl-a:p=3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("corl-a:p=2n"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["verify"],
        vec!["verify", "seed", "--x-sample", "1/0"],
        vec!["verify", "seed", "--x-sample", "half"],
        vec!["verify", "seed", "--n-max", "61"],
        vec!["verify", "seed", "--format", "yaml"],
        vec!["frobnicate"],
        vec!["derive", "corl-a"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn negative_x_sample_is_accepted_and_appended() {
    let o = run(&["verify", "corl-d", "--n-max", "3", "--x-sample", "-5/3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let reps = reports(&o);
    assert_eq!(reps[0].checked + reps[0].skipped.len() as u64, 9 * 4);
}

#[test]
fn json_round_trip_and_rational_encoding() {
    let o = run(&["verify", "thm-a", "--n-max", "3", "--p-max", "3", "--x-sample", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let reps = reports(&o);
    let again: Vec<VerificationReport> = serde_json::from_str(&serde_json::to_string(&reps).unwrap()).unwrap();
    assert_eq!(reps, again);
    // x=2, p=3 hits the pole x-p+1=0
    assert!(reps[0].skipped.iter().any(|s| s.reason == "pole x-p+1=0"));
    assert!(text.contains(r#""num": "2""#) && text.contains(r#""den": "1""#), "{text}");
}

#[test]
fn failure_entry_schema() {
    let rep = VerificationReport {
        id: "corl-a".into(),
        anchor: "a".into(),
        checked: 1,
        passed: 0,
        skipped: vec![],
        failed: vec![FailedPoint {
            params: ParamAssignment::new(2).with_p(1),
            lhs: Some(Rational::frac(3, 2)),
            rhs: Some(Rational::frac(-7, 3)),
            error: None,
        }],
        elapsed_ms: 4,
    };
    let v = serde_json::to_value(&rep).unwrap();
    assert_eq!(v["failed"][0]["lhs"]["num"], "3");
    assert_eq!(v["failed"][0]["rhs"]["num"], "-7");
    assert_eq!(v["failed"][0]["rhs"]["den"], "3");
    assert!(v["failed"][0].get("error").is_none());
    assert_eq!(serde_json::from_value::<VerificationReport>(v).unwrap(), rep);
    assert_eq!(exit_code(std::slice::from_ref(&rep)), EXIT_FAILED);
    assert_eq!(exit_code(&[]), EXIT_OK);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("index.csv");
    let o = run(&["list", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 75);
    assert_eq!(&rows[0][0], "seed");
}

#[test]
fn list_markdown_has_anchors() {
    let out = stdout(&run(&["list"]));
    assert!(out.contains(r"| corl-a | corollary | p: nonneg-int, n: nonneg-int |  | Letting $x=p$ in Theorem |"), "{out}");
}

#[test]
fn derive_command() {
    let o = run(&["derive", "thm-c", "--n-max", "4", "--p-max", "2", "--q-max", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("thm-c: 35 of 35 derivation points matched"), "{}", stdout(&o));

    let o = run(&["derive", "thm-a", "--n-max", "3", "--p-max", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.as_array().unwrap().iter().all(|r| r["matched"] == true));
}

#[test]
fn worker_count_does_not_change_the_report() {
    let args = ["verify", "thm-d", "thm-e", "--n-max", "6", "--p-max", "3", "--q-max", "3", "--format", "json"];
    let seq = Command::new(env!("CARGO_BIN_EXE_harmonic-id")).args(args).env("HARMONIC_ID_WORKERS", "1").output().unwrap();
    let par = run(&[&args[..], &["--workers", "4"]].concat());
    let (a, b) = (reports(&seq), reports(&par));
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(&b) {
        assert!(x.same_outcome(y));
    }
}
