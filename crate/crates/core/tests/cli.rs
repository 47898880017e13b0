//! End-to-end runs of the binary on the four classical knot examples.

use std::process::{Command, Output};

fn twobridge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twobridge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).unwrap()
}

fn schema() -> jsonschema::Validator {
    let text = include_str!("../schema/verdict.schema.json");
    jsonschema::validator_for(&serde_json::from_str(text).unwrap()).unwrap()
}

fn check_json(args: &[&str]) -> (i32, serde_json::Value) {
    let out = twobridge(args);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let validator = schema();
    let errors: Vec<String> = validator
        .iter_errors(&value)
        .map(|e| e.to_string())
        .collect();
    assert!(errors.is_empty(), "{errors:?}");
    (out.status.code().unwrap(), value)
}

fn failing_tests(report: &serde_json::Value) -> Vec<&str> {
    report["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|v| v["outcome"] == "fail" && v["kind"] == "theorem")
        .map(|v| v["test"].as_str().unwrap())
        .collect()
}

#[test]
fn eight_five() {
    let out = twobridge(&["check", "1 - z^2 - 3z^4 - z^6"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        stdout(&out),
        "\
-z^6-3z^4-z^2+1
  mod2-fibonacci             FAIL  D=7 k=2 [p mod 2 differs from f_7 mod 2 at z^2]
  coefficient-bound          pass
  prime-refined-bound        pass
  fibonacci-sign             pass
  fibonacci-trapezoid        pass  (conjecture)
obstructed: not a two-bridge polynomial
"
    );
    let (code, report) = check_json(&["check", "--json", "1 - z^2 - 3z^4 - z^6"]);
    assert_eq!(code, 1);
    assert_eq!(failing_tests(&report), ["mod2-fibonacci"]);
}

#[test]
fn ten_145() {
    let out = twobridge(&["check", "1+5z^2+z^4"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        stdout(&out),
        "\
z^4+5z^2+1
  mod2-fibonacci             pass  D=5
  coefficient-bound          FAIL  k=1 bound=3 actual=5 [|c_2| exceeds C(3, 1) |c_4|]
  prime-refined-bound        FAIL  k=1 bound=3 actual=5 [|c_2| exceeds the bound with g = 1]
  fibonacci-sign             FAIL  k=1 bound=0 actual=-2 [alpha_1 is negative]
  fibonacci-trapezoid        FAIL  (conjecture) k=1 actual=-2 [conjectural obstruction: alpha is not unimodal]
obstructed: not a two-bridge polynomial
"
    );
    let (_, report) = check_json(&["check", "--json", "1+5z^2+z^4"]);
    let nak1 = &report["verdicts"][1];
    assert_eq!(nak1["test"], "coefficient-bound");
    assert_eq!(
        (nak1["witness_k"].as_u64(), nak1["bound"].as_str()),
        (Some(1), Some("3"))
    );
}

#[test]
fn eleven_n109() {
    let out = twobridge(&["check", "1,0,6,0,1,0,-1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        stdout(&out),
        "\
-z^6+z^4+6z^2+1
  mod2-fibonacci             pass  D=7
  coefficient-bound          FAIL  k=1 bound=5 actual=1 [equality at k=2 does not propagate to k=1]
  prime-refined-bound        pass
  fibonacci-sign             pass
  fibonacci-trapezoid        pass  (conjecture)
obstructed: not a two-bridge polynomial
"
    );
    let (_, report) = check_json(&["check", "--json", "1+6z^2+z^4-z^6"]);
    assert_eq!(failing_tests(&report), ["coefficient-bound"]);
}

#[test]
fn thirteen_n1862() {
    let out = twobridge(&["check", "1+8z^2+3z^4-z^6"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        stdout(&out),
        "\
-z^6+3z^4+8z^2+1
  mod2-fibonacci             pass  D=7
  coefficient-bound          FAIL  k=2 bound=6 actual=8 [|c_2| exceeds C(4, 2) |c_6|]
  prime-refined-bound        FAIL  k=2 bound=6 actual=8 [|c_2| exceeds the bound with g = 1]
  fibonacci-sign             pass
  fibonacci-trapezoid        pass  (conjecture)
obstructed: not a two-bridge polynomial
"
    );

    // the Alexander polynomial of the same knot slips through every test
    let out = twobridge(&["alexander", "1+8z^2+3z^4-z^6"]);
    assert_eq!(
        stdout(&out),
        "23 - 19(t+t^-1) + 9(t^2+t^-2) - (t^3+t^-3)\na = (23,19,9,1)\n"
    );
    let out = twobridge(&["check-alex", "23,19,9,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "\
23 - 19(t+t^-1) + 9(t^2+t^-2) - (t^3+t^-3)
  murasugi-parity            pass  k=3
  hartley-trapezoid          pass  k=0
  nakanishi-suketa           pass
  refined-nakanishi-suketa   n/a   [requires a_n != 1]
  convexity                  pass  (conjecture) k=1
not obstructed
"
    );
    let (code, report) = check_json(&["check-alex", "--json", "23,19,9,1"]);
    assert_eq!(code, 0);
    assert!(failing_tests(&report).is_empty());
}

#[test]
fn json_is_schema_valid_across_outcomes() {
    for args in [
        &["check", "--json", "z^3+2z"][..],
        &["check", "--json", "0"],
        &["check", "--json", "1+z"],
        &["check", "--json", "3+z^2"],
        &["check-alex", "--json", "--link", "1,0,1"],
        &["check-alex", "--json", "--raw", "1,-1"],
        &["check-alex", "--json", "3,2,1"],
        &["check-alex", "--json", "25,13,2"],
    ] {
        check_json(args);
    }
}

#[test]
fn output_is_deterministic() {
    let a = twobridge(&["census", "--budget", "10", "--json"]);
    let b = twobridge(&["census", "--budget", "10", "--json", "--jobs", "3"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn usage_errors() {
    let out = twobridge(&["check", "1+5z^2#z^4"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        std::str::from_utf8(&out.stderr).unwrap(),
        "error: expected '+' or '-', found '#'\n  1+5z^2#z^4\n        ^\n"
    );
    assert_eq!(twobridge(&["census"]).status.code(), Some(2));
    assert_eq!(twobridge(&["conway", "C(2,0)"]).status.code(), Some(2));
}
