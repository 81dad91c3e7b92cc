//! The `triads` command line.

pub mod record;

use std::io::{self, Write};
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use triads_core::curve::solutions_from_points;
use triads_core::exactnum::{parse_integer, parse_rational};
use triads_core::identities::run_identities;
use triads_core::parametric::{
    certify_family, scale_to_integer_triad, solve_for_m, Reduction, ScaledTriad,
    EXPECTED_FAMILY_DEGREE,
};
use triads_core::poly::Polynomial;
use triads_core::search::search;
use triads_core::verify::{verify_triad, Certificate, Triad, Verification};
use triads_core::{Error, Integer, Rational};

use record::{int, ints, rat, Kind, OutputRecord};

#[derive(Debug, Parser)]
#[command(name = "triads", version, about = "Triads whose sum, sum of squares and sum of cubes are all squares")]
pub struct Cli {
    /// One JSON record per line instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a triad and print its square roots.
    Verify {
        #[arg(value_parser = integer_arg, allow_negative_numbers = true)]
        a: Integer,
        #[arg(value_parser = integer_arg, allow_negative_numbers = true)]
        b: Integer,
        #[arg(value_parser = integer_arg, allow_negative_numbers = true)]
        c: Integer,
    },
    /// Every square-reduced triad with a + b + c < N.
    Search {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
        max_sum: u64,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: Option<u64>,
    },
    /// The family member at m, scaled to integers.
    Solve {
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        m: Rational,
        /// Also print the rational triple and its certificates.
        #[arg(long)]
        raw: bool,
    },
    /// Check the whole family symbolically in m.
    FamilyCheck,
    /// Solutions from multiples of the curve point at m.
    Points {
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        m: Rational,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        count: u32,
    },
    /// Evaluate the identity suite at random rational points.
    Identities {
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn integer_arg(s: &str) -> Result<Integer, String> {
    parse_integer(s).map_err(|e| e.to_string())
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

struct Out<'a> {
    json: bool,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Out<'_> {
    fn emit(&mut self, kind: Kind, payload: Value, text: impl FnOnce() -> String) -> io::Result<()> {
        if self.json {
            writeln!(self.out, "{}", OutputRecord::new(kind, payload).to_line())
        } else {
            writeln!(self.out, "{}", text())
        }
    }

    fn fail(&mut self, e: &Error) -> io::Result<i32> {
        if self.json {
            let payload = json!({ "error": e.code(), "message": e.to_string() });
            writeln!(self.out, "{}", OutputRecord::new(Kind::Error, payload).to_line())?;
        } else {
            writeln!(self.err, "error: {e}")?;
        }
        Ok(EXIT_DOMAIN)
    }
}

/// Runs one command and returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let mut o = Out { json: cli.json, out, err };
    let code = match &cli.command {
        Command::Verify { a, b, c } => cmd_verify(&mut o, a, b, c),
        Command::Search { max_sum, jobs } => cmd_search(&mut o, *max_sum, *jobs),
        Command::Solve { m, raw } => cmd_solve(&mut o, m, *raw),
        Command::FamilyCheck => cmd_family(&mut o),
        Command::Points { m, count } => cmd_points(&mut o, m, *count),
        Command::Identities { samples, seed } => cmd_identities(&mut o, *samples, *seed),
    }?;
    o.out.flush()?;
    Ok(code)
}

fn cert_payload(t: &Triad, c: &Certificate) -> Value {
    json!({ "triad": ints(t.entries()), "u": int(&c.u), "v": int(&c.v), "w": int(&c.w) })
}

fn cmd_verify(o: &mut Out, a: &Integer, b: &Integer, c: &Integer) -> io::Result<i32> {
    let v = match verify_triad(a, b, c) {
        Ok(v) => v,
        Err(e) => return o.fail(&e),
    };
    match v {
        Verification::Pass { triad, certificate: cert } => {
            o.emit(Kind::Certificate, cert_payload(&triad, &cert), || {
                format!("{triad}: certificate (u, v, w) = ({}, {}, {})", cert.u, cert.v, cert.w)
            })?;
            Ok(EXIT_OK)
        }
        Verification::Fail { triad, stage, value } => {
            let payload = json!({
                "error": "verification-failed",
                "triad": ints(triad.entries()),
                "stage": stage.as_str(),
                "value": int(&value),
            });
            o.emit(Kind::Error, payload, || {
                format!("{triad}: fails at stage {stage} ({value} is not a square)")
            })?;
            Ok(EXIT_DOMAIN)
        }
    }
}

fn cmd_search(o: &mut Out, max_sum: u64, jobs: Option<u64>) -> io::Result<i32> {
    let jobs = jobs.map_or_else(
        || std::thread::available_parallelism().map_or(1, |n| n.get()),
        |j| j as usize,
    );
    let start = Instant::now();
    let hits = match search(max_sum, jobs) {
        Ok(h) => h,
        Err(e) => return o.fail(&e),
    };
    let elapsed = start.elapsed();
    for h in &hits {
        o.emit(Kind::Hit, cert_payload(&h.triad, &h.certificate), || {
            let c = &h.certificate;
            format!("{}  u = {}, v = {}, w = {}", h.triad, c.u, c.v, c.w)
        })?;
    }
    let payload = json!({
        "count": hits.len().to_string(),
        "max_sum": max_sum.to_string(),
        "jobs": jobs.to_string(),
        "elapsed_ms": elapsed.as_millis().to_string(),
    });
    o.emit(Kind::Report, payload, || {
        format!(
            "{} triad(s) with a + b + c < {max_sum} ({jobs} jobs, {} ms)",
            hits.len(),
            elapsed.as_millis()
        )
    })?;
    Ok(EXIT_OK)
}

fn reduction_payload(r: &Reduction) -> (Value, Value) {
    match r {
        Reduction::Certified => (json!("certified"), Value::Null),
        Reduction::Partial { unresolved } => (json!("partial"), int(unresolved)),
    }
}

fn scaled_payload(m: &Rational, s: &ScaledTriad) -> Value {
    let (reduction, unresolved) = reduction_payload(&s.reduction);
    let mut p = cert_payload(&s.triad, &s.certificate);
    let obj = p.as_object_mut().expect("object");
    obj.insert("m".into(), rat(m));
    obj.insert("k".into(), int(&s.k));
    obj.insert("reduction".into(), reduction);
    if !unresolved.is_null() {
        obj.insert("unresolved".into(), unresolved);
    }
    p
}

fn cmd_solve(o: &mut Out, m: &Rational, raw: bool) -> io::Result<i32> {
    let t = match solve_for_m(m) {
        Ok(t) => t,
        Err(e) => return o.fail(&e),
    };
    if raw {
        let v = t.cert_v.as_ref().expect("solve returns a certified triple");
        let payload = json!({
            "m": rat(m),
            "a": rat(&t.a), "b": rat(&t.b), "c": rat(&t.c),
            "u": rat(&t.cert_u), "v": rat(v), "w": rat(&t.cert_w),
        });
        o.emit(Kind::Report, payload, || {
            format!(
                "rational triple at m = {m}\n  a = {}\n  b = {}\n  c = {}\n  u = {}, v = {}, w = {}",
                t.a, t.b, t.c, t.cert_u, v, t.cert_w
            )
        })?;
    }
    let s = match scale_to_integer_triad(&t) {
        Ok(s) => s,
        Err(e) => return o.fail(&e),
    };
    o.emit(Kind::Triad, scaled_payload(m, &s), || {
        let [a, b, c] = s.triad.entries();
        let cert = &s.certificate;
        let red = match &s.reduction {
            Reduction::Certified => "square-reduced".to_string(),
            Reduction::Partial { unresolved } => {
                format!("reduced by every square found; cofactor {unresolved} left unfactored")
            }
        };
        format!(
            "m = {m}\na = {a}\nb = {b}\nc = {c}\nu = {}\nv = {}\nw = {}\nk = {}\n{red}",
            cert.u, cert.v, cert.w, s.k
        )
    })?;
    Ok(EXIT_OK)
}

fn poly_coeffs(p: &Polynomial) -> Value {
    let (content, prim) = p.primitive_integer();
    json!({ "content": rat(&content), "coefficients": ints(prim.iter()) })
}

fn cmd_family(o: &mut Out) -> io::Result<i32> {
    let start = Instant::now();
    let rep = match certify_family() {
        Ok(r) => r,
        Err(e) => return o.fail(&e),
    };
    let elapsed = start.elapsed();
    let degree_ok = rep.degree_matches_expected();
    let payload = json!({
        "sum_identity_holds": rep.sum_identity_holds,
        "squares_root": rep.squares_root.render("m"),
        "cubes_root": rep.cubes_root.render("m"),
        "clearing_denominator_degree": rep.clearing_denominator.degree().unwrap_or(0).to_string(),
        "cleared_degree": rep.cleared_degree.to_string(),
        "expected_degree": EXPECTED_FAMILY_DEGREE.to_string(),
        "discrepancy": !degree_ok,
        "cleared_polys": rep.cleared_polys.iter().map(poly_coeffs).collect::<Vec<_>>(),
        "elapsed_ms": elapsed.as_millis().to_string(),
    });
    o.emit(Kind::Report, payload, || {
        let yes = |b: bool| if b { "yes" } else { "NO" };
        let deg = |p: &Polynomial| p.degree().unwrap_or(0);
        let mut s = format!(
            "a + b + c = 1: {}\n\
             a² + b² + c² is a square in Q(m): yes, root of degree {}/{}\n\
             a³ + b³ + c³ is a square in Q(m): yes, root of degree {}/{}\n\
             cleared polynomials have degree {} (expected {})",
            yes(rep.sum_identity_holds),
            deg(rep.squares_root.numer()),
            deg(rep.squares_root.denom()),
            deg(rep.cubes_root.numer()),
            deg(rep.cubes_root.denom()),
            rep.cleared_degree,
            EXPECTED_FAMILY_DEGREE,
        );
        if !degree_ok {
            s.push_str("\nDISCREPANCY: cleared degree differs from the expected value");
        }
        s.push_str(&format!("\n({} ms)", elapsed.as_millis()));
        s
    })?;
    Ok(if degree_ok && rep.sum_identity_holds { EXIT_OK } else { EXIT_DOMAIN })
}

fn cmd_points(o: &mut Out, m: &Rational, count: u32) -> io::Result<i32> {
    let rep = match solutions_from_points(m, count) {
        Ok(r) => r,
        Err(e) => return o.fail(&e),
    };
    let e = &rep.model.curve;
    let payload = json!({
        "m": rat(m),
        "base_p": rat(&rep.base.p),
        "base_y": rat(&rep.base.y),
        "shift": rat(&rep.model.shift),
        "weierstrass": {
            "a1": rat(&e.a1), "a2": rat(&e.a2), "a3": rat(&e.a3), "a4": rat(&e.a4), "a6": rat(&e.a6),
        },
        "skipped": rep.skipped.iter()
            .map(|(n, why)| json!({ "multiple": n.to_string(), "reason": why }))
            .collect::<Vec<_>>(),
    });
    o.emit(Kind::Report, payload, || {
        let mut s = format!(
            "m = {m}, base point p = {}\nWeierstrass model: a1 = {}, a2 = {}, a3 = {}, a4 = {}, a6 = {}",
            rep.base.p, e.a1, e.a2, e.a3, e.a4, e.a6
        );
        for (n, why) in &rep.skipped {
            s.push_str(&format!("\n[{n}]P skipped: {why}"));
        }
        s
    })?;
    for sol in &rep.solutions {
        let t = &sol.triple;
        let v = t.cert_v.as_ref().expect("certified");
        let payload = json!({
            "multiple": sol.multiple.to_string(),
            "p": rat(&sol.point.p),
            "y": rat(&sol.point.y),
            "a": rat(&t.a), "b": rat(&t.b), "c": rat(&t.c),
            "u": rat(&t.cert_u), "v": rat(v), "w": rat(&t.cert_w),
            "all_positive": sol.all_positive,
        });
        o.emit(Kind::Point, payload, || {
            format!(
                "[{}]P: p = {}\n  a = {}\n  b = {}\n  c = {}\n  all positive: {}",
                sol.multiple,
                sol.point.p,
                t.a,
                t.b,
                t.c,
                if sol.all_positive { "yes" } else { "no" }
            )
        })?;
    }
    Ok(EXIT_OK)
}

fn cmd_identities(o: &mut Out, samples: u64, seed: u64) -> io::Result<i32> {
    let rep = match run_identities(samples as usize, seed) {
        Ok(r) => r,
        Err(e) => return o.fail(&e),
    };
    let cases: Vec<Value> = rep
        .cases
        .iter()
        .map(|c| {
            let witness = c.witness.as_ref().map(|w| {
                json!({
                    "point": w.point.iter().map(rat).collect::<Vec<_>>(),
                    "residual": rat(&w.residual),
                })
            });
            json!({
                "name": c.name,
                "variables": c.variables,
                "samples": c.samples.to_string(),
                "redraws": c.redraws.to_string(),
                "zero": c.is_zero(),
                "witness": witness,
            })
        })
        .collect();
    let payload = json!({
        "samples": rep.samples.to_string(),
        "seed": rep.seed.to_string(),
        "all_zero": rep.all_zero(),
        "cases": cases,
    });
    o.emit(Kind::Report, payload, || {
        let mut s = format!("{} samples per case, seed {}", rep.samples, rep.seed);
        for c in &rep.cases {
            match &c.witness {
                None => s.push_str(&format!("\n{:<24} zero", c.name)),
                Some(w) => {
                    let pt: Vec<String> = w.point.iter().map(ToString::to_string).collect();
                    s.push_str(&format!(
                        "\n{:<24} NONZERO at ({}) with residual {}",
                        c.name,
                        pt.join(", "),
                        w.residual
                    ));
                }
            }
        }
        s
    })?;
    Ok(if rep.all_zero() { EXIT_OK } else { EXIT_DOMAIN })
}
