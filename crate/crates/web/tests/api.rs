use serde_json::Value;

use triads_web::{positivity_json, solve_json, verify_json};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn verify_pass_and_fail() {
    let v = parse(verify_json("129", "108", "124"));
    assert_eq!(v["ok"], true);
    assert_eq!(v["pass"], true);
    assert_eq!(v["certificate"], serde_json::json!(["19", "209", "2305"]));

    let v = parse(verify_json("1", "2", "3"));
    assert_eq!(v["pass"], false);
    assert_eq!(v["stage"], "sum");

    let v = parse(verify_json("1", "x", "3"));
    assert_eq!(v["ok"], false);
    assert!(v["error"].as_str().unwrap().contains("parse"));
}

#[test]
fn solve_in_and_out_of_the_window() {
    let v = parse(solve_json("3/2"));
    assert_eq!(v["positive"], true);
    assert_eq!(v["verified"], true);
    assert_eq!(v["square_reduced"], true);
    assert_eq!(v["triad"][0], "22104703132724392891974197260485203180817980456068478");

    let v = parse(solve_json("0"));
    assert_eq!(v["ok"], true);
    assert_eq!(v["positive"], false);
    assert_eq!(v["rational"].as_array().unwrap().len(), 3);

    assert_eq!(parse(solve_json("1/0"))["ok"], false);
}

#[test]
fn positivity_curve() {
    let v = parse(positivity_json("1.4", "1.6", 20));
    assert_eq!(v["ok"], false, "decimal input is not accepted");

    let v = parse(positivity_json("7/5", "8/5", 20));
    let pts = v["points"].as_array().unwrap();
    assert_eq!(pts.len(), 21);
    // m = 3/2 is the midpoint
    assert_eq!(pts[10]["positive"], true);
    let abc: Vec<f64> = pts[10]["abc"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    assert!((abc.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    assert_eq!(pts[0]["positive"], false);

    assert_eq!(parse(positivity_json("2", "1", 10))["ok"], false);
    assert_eq!(parse(positivity_json("1", "2", 0))["ok"], false);
}
