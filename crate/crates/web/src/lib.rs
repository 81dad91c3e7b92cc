//! Browser bindings. Every call takes strings and returns a JSON string with
//! `"ok": true` or `"ok": false, "error": ...`; exact values travel as
//! decimal strings. Only the plotting samples carry floats.

use num_traits::{Signed, ToPrimitive};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use triads_core::exactnum::{parse_integer, parse_rational, rat_int};
use triads_core::parametric::{scale_to_integer_triad, solve_for_m, Reduction};
use triads_core::verify::{verify_triad, Verification};
use triads_core::{Error, Rational};

/// Most plotting samples one call will compute.
pub const MAX_SAMPLES: u32 = 2000;

fn fail(e: impl ToString) -> String {
    json!({ "ok": false, "error": e.to_string() }).to_string()
}

fn strs<T: ToString>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(xs.into_iter().map(|x| Value::String(x.to_string())).collect())
}

pub fn verify_json(a: &str, b: &str, c: &str) -> String {
    let parsed = (|| Ok::<_, Error>((parse_integer(a.trim())?, parse_integer(b.trim())?, parse_integer(c.trim())?)))();
    let (a, b, c) = match parsed {
        Ok(v) => v,
        Err(e) => return fail(e),
    };
    match verify_triad(&a, &b, &c) {
        Err(e) => fail(e),
        Ok(Verification::Pass { triad, certificate }) => json!({
            "ok": true,
            "pass": true,
            "triad": strs(triad.entries()),
            "certificate": strs([&certificate.u, &certificate.v, &certificate.w]),
        })
        .to_string(),
        Ok(Verification::Fail { triad, stage, value }) => json!({
            "ok": true,
            "pass": false,
            "triad": strs(triad.entries()),
            "stage": stage.as_str(),
            "value": value.to_string(),
        })
        .to_string(),
    }
}

pub fn solve_json(m: &str) -> String {
    let m = match parse_rational(m.trim()) {
        Ok(m) => m,
        Err(e) => return fail(e),
    };
    let t = match solve_for_m(&m) {
        Ok(t) => t,
        Err(e) => return fail(e),
    };
    let rational = strs([&t.a, &t.b, &t.c]);
    if !t.all_positive() {
        return json!({ "ok": true, "positive": false, "m": m.to_string(), "rational": rational })
            .to_string();
    }
    match scale_to_integer_triad(&t) {
        Err(e) => fail(e),
        Ok(s) => {
            let reduced = matches!(s.reduction, Reduction::Certified);
            let c = &s.certificate;
            json!({
                "ok": true,
                "positive": true,
                "m": m.to_string(),
                "rational": rational,
                "triad": strs(s.triad.entries()),
                "certificate": strs([&c.u, &c.v, &c.w]),
                "square_reduced": reduced,
                "verified": s.triad.verify().is_pass(),
            })
            .to_string()
        }
    }
}

/// `a(m), b(m), c(m)` at `samples + 1` evenly spaced rationals in
/// `[lo, hi]`. Poles come back as nulls.
pub fn positivity_json(lo: &str, hi: &str, samples: u32) -> String {
    let (lo, hi) = match (parse_rational(lo.trim()), parse_rational(hi.trim())) {
        (Ok(lo), Ok(hi)) => (lo, hi),
        (Err(e), _) | (_, Err(e)) => return fail(e),
    };
    if lo >= hi {
        return fail("lo must be below hi");
    }
    if samples == 0 || samples > MAX_SAMPLES {
        return fail(format!("samples must be between 1 and {MAX_SAMPLES}"));
    }
    let step = (&hi - &lo) / rat_int(samples as i64);
    let mut points = Vec::with_capacity(samples as usize + 1);
    for i in 0..=samples {
        let m: Rational = &lo + &step * rat_int(i as i64);
        let entry = match solve_for_m(&m) {
            Ok(t) => {
                let f = |x: &Rational| x.to_f64();
                json!({
                    "m": m.to_f64(),
                    "abc": [f(&t.a), f(&t.b), f(&t.c)],
                    "positive": t.a.is_positive() && t.b.is_positive() && t.c.is_positive(),
                })
            }
            Err(_) => json!({ "m": m.to_f64(), "abc": null, "positive": false }),
        };
        points.push(entry);
    }
    json!({ "ok": true, "points": points }).to_string()
}

#[wasm_bindgen]
pub fn verify(a: &str, b: &str, c: &str) -> String {
    verify_json(a, b, c)
}

#[wasm_bindgen]
pub fn solve(m: &str) -> String {
    solve_json(m)
}

#[wasm_bindgen]
pub fn positivity(lo: &str, hi: &str, samples: u32) -> String {
    positivity_json(lo, hi, samples)
}
