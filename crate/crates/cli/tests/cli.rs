use assert_cmd::Command;
use serde_json::Value;

use trinomial_core::elliptic::RegisteredCurve;
use trinomial_core::families::{FamilyInfo, FamilySample};
use trinomial_core::search::{FoundPoint, SquareConditionCurve};
use trinomial_core::verify::VerificationReport;
use trinomial_core::{Factorization, Poly, ReducibilityType, Trinomial};

fn bin() -> Command {
    Command::cargo_bin("trinomial").unwrap()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, stdout, stderr) = run(args);
    assert_eq!(code, 0, "{stderr}");
    serde_json::from_str(&stdout).unwrap()
}

fn field<T: serde::de::DeserializeOwned>(v: &Value, key: &str) -> T {
    serde_json::from_value(v[key].clone()).unwrap()
}

#[test]
fn classify_quintic_text() {
    let (code, stdout, _) = run(&["classify", "5", "1", "-341", "780"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("type (1,2,2)"));
    assert!(stdout.contains("(x - 3)"));
}

#[test]
fn classify_json_round_trips() {
    let v = json(&["classify", "5", "1", "-341", "780", "--json"]);
    let t: Trinomial = field(&v, "trinomial");
    let rtype: ReducibilityType = field(&v, "type");
    let f: Factorization = field(&v, "factorization");
    assert_eq!(t, Trinomial::from_ints(5, 1, -341, 780).unwrap());
    assert_eq!(rtype.degrees, vec![1, 2, 2]);
    assert_eq!(f.expand(), t.poly());
    assert_eq!(serde_json::to_value(&t).unwrap(), v["trinomial"]);
}

#[test]
fn malformed_rational_is_a_usage_error_with_position() {
    let (code, _, stderr) = run(&["classify", "5", "1", "-3x", "7"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("position 2"), "{stderr}");
    let (code, _, stderr) = run(&["factor", "1,2/0"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("coefficient 1"), "{stderr}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["classify", "5"]).0, 2);
    assert_eq!(run(&["classify", "5", "1", "0", "3"]).0, 2);
    assert_eq!(run(&["generate", "NOPE", "1"]).0, 2);
    assert_eq!(run(&["generate", "Q4_112"]).0, 2);
    assert_eq!(run(&["search", "C_NOPE"]).0, 2);
    assert_eq!(run(&["verify", "9.9"]).0, 2);
    assert_eq!(run(&["verify"]).0, 2);
}

#[test]
fn factor_json_round_trips() {
    let v = json(&["factor", "-1,0,0,0,1", "--format", "json"]);
    let f: Factorization = serde_json::from_value(v).unwrap();
    assert_eq!(f.degrees(), vec![1, 1, 2]);
    assert_eq!(f.expand(), "-1,0,0,0,1".parse::<Poly>().unwrap());
}

#[test]
fn generate_quartic_family_at_two() {
    let (code, stdout, _) = run(&["generate", "Q4_112", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("x^4 - 15x + 14"), "{stdout}");
    let v = json(&["generate", "Q4_112", "2", "--json"]);
    let samples: Vec<FamilySample> = serde_json::from_value(v).unwrap();
    assert_eq!(samples.len(), 1);
    assert!(samples[0].identity_holds());
}

#[test]
fn generate_random_is_seeded() {
    let a = run(&["generate", "Q5_122", "--random", "5", "--seed", "7", "--json"]).1;
    let b = run(&["generate", "Q5_122", "--random", "5", "--seed", "7", "--json"]).1;
    let c = run(&["generate", "Q5_122", "--random", "5", "--seed", "8", "--json"]).1;
    assert_eq!(a, b);
    assert_ne!(a, c);
    let samples: Vec<FamilySample> = serde_json::from_str(&a).unwrap();
    assert_eq!(samples.len(), 5);
}

#[test]
fn generate_listed_cases_with_types() {
    let v = json(&["generate", "F15M3", "--classify", "--json"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    for row in rows {
        let t: ReducibilityType = field(row, "type");
        assert_eq!(t.degrees, vec![5, 10]);
        let s: FamilySample = serde_json::from_value(row.clone()).unwrap();
        assert!(s.identity_holds());
    }
}

#[test]
fn search_reports_the_four_points() {
    let v = json(&["search", "C_THM51", "--height", "100", "--json"]);
    let curve: SquareConditionCurve = field(&v, "curve");
    let points: Vec<FoundPoint> = field(&v, "points");
    assert_eq!(curve.key, "C_THM51");
    let xs: Vec<String> = points.iter().map(|p| p.params[0].to_string()).collect();
    assert_eq!(xs, ["-1", "1", "1/3", "7/5"]);
    assert!(points.iter().all(|p| curve.check_point(p)));
    assert_eq!(v["comparison"]["matches_up_to_height"], Value::Bool(true));
}

#[test]
fn verify_single_statement() {
    let (code, stdout, _) = run(&["verify", "table-7"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("summary: 7 passed, 0 failed"));
    let v = json(&["verify", "6.2", "--json"]);
    let reports: Vec<VerificationReport> = serde_json::from_value(v).unwrap();
    assert!(reports[0].passed());
    assert!(reports[0].checks.iter().any(|c| c.witness.contains("lhs 9 != rhs 405")));
}

#[test]
fn verify_all_exit_code_tracks_failures() {
    let out = bin()
        .args(["verify", "--all", "--json", "--scan-height", "12", "--height", "60", "--ternary-height", "20"])
        .output()
        .unwrap();
    let reports: Vec<VerificationReport> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports.len(), 22);
    let all_pass = reports.iter().all(VerificationReport::passed);
    assert_eq!(out.status.code(), Some(if all_pass { 0 } else { 1 }));
}

#[test]
fn listings_round_trip() {
    let fams: Vec<FamilyInfo> = serde_json::from_value(json(&["families", "--json"])).unwrap();
    assert_eq!(fams.len(), 23);
    let v = json(&["curves", "--json"]);
    let curves: Vec<RegisteredCurve> = field(&v, "elliptic");
    assert_eq!(curves.len(), 8);
    assert_eq!(v["off_curve"].as_array().unwrap().len(), 1);
    let presets: Vec<SquareConditionCurve> = field(&v, "square_condition");
    assert_eq!(presets.len(), 11);
    let rows = json(&["sporadic", "--json"]);
    assert_eq!(rows.as_array().unwrap().len(), 7);
}

#[test]
fn negative_parameters() {
    let a: Vec<FamilySample> = serde_json::from_value(json(&["generate", "Q5_122", "-3", "--json"])).unwrap();
    let b: Vec<FamilySample> = serde_json::from_value(json(&["generate", "Q5_122", "--json", "--", "-3/2"])).unwrap();
    assert_eq!(a[0].params[0].to_string(), "-3");
    assert_eq!(b[0].params[0].to_string(), "-3/2");
}
