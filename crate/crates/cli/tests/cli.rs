use std::process::{Command, Output};

use triads_cli::record::{parse_int, parse_rat, Kind, OutputRecord};

fn triads(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_triads")).args(args).output().expect("binary runs")
}

fn records(out: &Output) -> Vec<OutputRecord> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| {
            let r = OutputRecord::parse(l).unwrap_or_else(|e| panic!("{e}: {l}"));
            assert_eq!(r.to_line(), l, "record does not round-trip");
            r
        })
        .collect()
}

fn triad_of(r: &OutputRecord) -> Vec<String> {
    r.payload["triad"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_string()).collect()
}

#[test]
fn verify_known_triads() {
    let out = triads(&["verify", "108", "124", "129"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("(19, 209, 2305)"));

    let out = triads(&["--json", "verify", "2873", "34", "2134"]);
    assert_eq!(out.status.code(), Some(0));
    let recs = records(&out);
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0].kind, Kind::Certificate);
    assert_eq!(triad_of(&recs[0]), ["34", "2134", "2873"]);
    let cert: Vec<_> = ["u", "v", "w"].iter().map(|k| recs[0].get_str(k).unwrap()).collect();
    assert_eq!(cert, ["71", "3579", "182845"]);
}

#[test]
fn verify_failure_is_a_domain_error() {
    let out = triads(&["verify", "1", "2", "3", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let recs = records(&out);
    assert_eq!(recs[0].kind, Kind::Error);
    assert_eq!(recs[0].get_str("stage"), Some("sum"));
    assert_eq!(recs[0].get_str("value"), Some("6"));

    let out = triads(&["verify", "0", "2", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "1", "2"][..],
        &["verify", "1", "2", "x"],
        &["solve", "--m", "3/0"],
        &["search", "--max-sum", "2"],
        &["points", "--m", "3/2", "--count", "0"],
        &["identities", "--samples", "0"],
        &["frobnicate"],
    ] {
        let out = triads(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn search_is_independent_of_jobs() {
    let one = records(&triads(&["--json", "search", "--max-sum", "3000", "--jobs", "1"]));
    let four = records(&triads(&["--json", "search", "--max-sum", "3000", "--jobs", "4"]));
    let hits = |r: &[OutputRecord]| -> Vec<Vec<String>> {
        r.iter().filter(|x| x.kind == Kind::Hit).map(triad_of).collect()
    };
    assert_eq!(hits(&one), vec![vec!["108", "124", "129"]]);
    assert_eq!(hits(&one), hits(&four));
    let summary = one.last().unwrap();
    assert_eq!(summary.kind, Kind::Report);
    assert_eq!(summary.get_str("count"), Some("1"));
}

#[test]
fn solve_three_halves() {
    let out = triads(&["--json", "solve", "--m", "3/2", "--raw"]);
    assert_eq!(out.status.code(), Some(0));
    let recs = records(&out);
    assert_eq!(recs.len(), 2);
    assert_eq!(recs[0].kind, Kind::Report);
    let a = parse_rat(&recs[0].payload["a"]).unwrap();
    let b = parse_rat(&recs[0].payload["b"]).unwrap();
    let c = parse_rat(&recs[0].payload["c"]).unwrap();
    assert_eq!(a + b + c, parse_rat(&"1/1".into()).unwrap());
    let t = &recs[1];
    assert_eq!(t.kind, Kind::Triad);
    assert_eq!(
        triad_of(t),
        [
            "22104703132724392891974197260485203180817980456068478",
            "45051218517398331420875516790921404601474342024364969",
            "273836695120684015976157268469007404280872671207701754",
        ]
    );
    assert_eq!(t.get_str("reduction"), Some("certified"));
    assert!(parse_int(&t.payload["w"]).is_some());
}

#[test]
fn solve_outside_the_window_is_a_domain_error() {
    let out = triads(&["--json", "solve", "--m", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let recs = records(&out);
    assert_eq!(recs[0].get_str("error"), Some("non-positive"));
}

#[test]
fn points_at_three_halves() {
    let out = triads(&["--json", "points", "--m", "3/2", "--count", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let recs = records(&out);
    let pts: Vec<_> = recs.iter().filter(|r| r.kind == Kind::Point).collect();
    assert_eq!(pts.len(), 3);
    let ps: Vec<_> = pts.iter().map(|r| r.get_str("p").unwrap()).collect();
    assert_eq!(ps[0], "1715558166961/14995372907988");
    assert!(ps[0] != ps[1] && ps[1] != ps[2] && ps[0] != ps[2]);
}

#[test]
fn identities_report() {
    let out = triads(&["--json", "identities", "--samples", "100", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let recs = records(&out);
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0].payload["all_zero"], true);
    let again = records(&triads(&["--json", "identities", "--samples", "100", "--seed", "1"]));
    assert_eq!(recs, again);
}

#[test]
fn family_check_reports_degree() {
    let out = triads(&["--json", "family-check"]);
    assert_eq!(out.status.code(), Some(0));
    let recs = records(&out);
    let r = &recs[0];
    assert_eq!(r.payload["sum_identity_holds"], true);
    assert_eq!(r.payload["discrepancy"], false);
    assert_eq!(r.get_str("cleared_degree"), Some("68"));
    assert_eq!(r.payload["cleared_polys"].as_array().unwrap().len(), 3);
}
