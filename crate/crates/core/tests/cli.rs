use std::process::{Command, Output};

use qumbral::QRat;
use serde_json::Value;

fn qumbral(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qumbral"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn euler_table_shows_second_number() {
    let out = qumbral(&["table", "euler", "--n", "3"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["rows"][2]["number_text"], "(q-1)/4");
    let number: QRat = serde_json::from_value(v["rows"][2]["number"].clone()).unwrap();
    assert_eq!(
        number,
        &(&QRat::q() - &QRat::one()) * &QRat::from_ratio(1, 4)
    );
}

#[test]
fn bernoulli_table_at_q_one() {
    let out = qumbral(&["table", "bernoulli", "--n", "2", "--at-q", "1"]);
    let v = json(&out);
    let texts: Vec<_> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["number_text"].clone())
        .collect();
    assert_eq!(texts, ["1", "-1/2", "1/6"]);
}

#[test]
fn table_at_q_one_matches_classical() {
    let e = qumbral::identities::classical_euler(12);
    let out = qumbral(&["table", "euler", "--n", "12", "--at-q", "1"]);
    let v = json(&out);
    for (n, expected) in e.iter().enumerate() {
        let got: QRat = serde_json::from_value(v["rows"][n]["number"].clone()).unwrap();
        assert_eq!(got.as_constant().as_ref(), Some(expected), "n = {n}");
    }
}

#[test]
fn order_two_table() {
    for flag in ["--order", "--r"] {
        let out = qumbral(&["table", "euler", "--n", "1", flag, "2"]);
        assert_eq!(json(&out)["rows"][1]["number_text"], "-1");
    }
}

#[test]
fn expand_square() {
    let out = qumbral(&["expand", "x^2", "--basis", "euler"]);
    let v = json(&out);
    assert_eq!(
        v["coefficients_text"],
        serde_json::json!(["1/2", "(q+1)/2", "1"])
    );
    assert_eq!(v["reconstructed"], true);
}

#[test]
fn expand_zero_is_empty() {
    let v = json(&qumbral(&["expand", "0"]));
    assert_eq!(v["coefficients"], serde_json::json!([]));
}

#[test]
fn expand_parse_error() {
    let out = qumbral(&["expand", "x^^2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 2"));
}

#[test]
fn verify_thm4() {
    let out = qumbral(&["verify", "--id", "thm4", "--n", "12"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)[0]["status"], "pass");
}

#[test]
fn verify_unknown_id() {
    assert_eq!(qumbral(&["verify", "--id", "nope"]).status.code(), Some(2));
}

#[test]
fn verify_all_is_deterministic_across_jobs() {
    let a = qumbral(&["verify", "--id", "all", "--n", "5", "--r", "2"]);
    let b = qumbral(&[
        "verify", "--id", "all", "--n", "5", "--r", "2", "--jobs", "4",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v.as_array().unwrap().len(), 15);
    assert!(v[0]["elapsed_ms"].is_null());
}

#[test]
fn verify_at_q_and_formats() {
    let out = qumbral(&[
        "verify", "--id", "eq18", "--id", "thm6", "--n", "4", "--at-q", "2/3", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("id,n_max,r_max,status"));
    assert!(text.contains("thm6,4,2,pass"));
}

#[test]
fn eval_at_x_and_q() {
    let v = json(&qumbral(&["eval", "x^2+q", "--x", "1/2", "--q", "1/3"]));
    assert_eq!(v["value_text"], "7/12");
    let v = json(&qumbral(&["eval", "x^2+q", "--x", "2"]));
    assert_eq!(v["value_text"], "q+4");
}

#[test]
fn latex_table_uses_q_binomials() {
    let out = qumbral(&["table", "bernoulli", "--n", "2", "--format", "latex"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\\binom{n}{l}_q"));
    assert!(text.contains("B_{2,q}"));
}

#[test]
fn leading_minus_and_negative_values() {
    let v = json(&qumbral(&["eval", "-1/2*(q+1)*x^2 + 3", "--x", "-1", "--q", "-1/2"]));
    assert_eq!(v["value_text"], "11/4");
}

#[test]
fn pole_reports_index() {
    let out = qumbral(&["table", "bernoulli", "--n", "3", "--at-q", "-1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("n = 1"));
}
