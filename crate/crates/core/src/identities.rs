//! Randomised exact identity testing.
//!
//! Each case is an expression in a few rational variables that should vanish
//! identically. It is evaluated exactly at pseudo-random points; a polynomial
//! identity of degree `d` in each variable is confirmed once it holds on more
//! than `d` generic values per variable, and the default of 100 samples is well
//! above every degree involved.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactnum::{rat_int, Integer, Rational};
use crate::parametric::{abc_from_pqu, ec1_rhs, ec2_rhs, q_of_m, ParamPoint};

/// Numerators are drawn from `[-NUM_BOUND, NUM_BOUND]`.
pub const NUM_BOUND: i64 = 999;
/// Denominators are drawn from `[1, DEN_BOUND]`.
pub const DEN_BOUND: i64 = 999;
/// Redraws allowed per sample when a point lands on an excluded locus.
pub const RETRY_CAP: u32 = 1000;

/// A residual that must vanish: `None` means the point is excluded.
type Residual = fn(&[Rational]) -> Option<Rational>;

pub struct IdentityCase {
    pub name: &'static str,
    pub variables: &'static [&'static str],
    residual: Residual,
}

impl IdentityCase {
    pub fn arity(&self) -> usize {
        self.variables.len()
    }

    /// `None` when the point is on an excluded locus.
    pub fn residual(&self, point: &[Rational]) -> Option<Rational> {
        assert_eq!(point.len(), self.arity());
        (self.residual)(point)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub point: Vec<Rational>,
    pub residual: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseReport {
    pub name: &'static str,
    pub variables: &'static [&'static str],
    pub samples: usize,
    pub redraws: u32,
    /// First sample with a nonzero residual.
    pub witness: Option<Witness>,
}

impl CaseReport {
    pub fn is_zero(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub samples: usize,
    pub seed: u64,
    pub cases: Vec<CaseReport>,
}

impl IdentityReport {
    pub fn all_zero(&self) -> bool {
        self.cases.iter().all(CaseReport::is_zero)
    }
}

fn r(n: i64) -> Rational {
    rat_int(n)
}

/// Sum of squares of the components; zero exactly when all are.
fn combine(parts: &[Rational]) -> Rational {
    parts.iter().map(|x| x * x).sum()
}

fn general_point(v: &[Rational]) -> Option<ParamPoint> {
    ParamPoint::new(v[0].clone(), v[1].clone(), v[2].clone()).ok()
}

fn cube_sum_factorization(v: &[Rational]) -> Option<Rational> {
    let (a, b, c) = (&v[0], &v[1], &v[2]);
    let s = a + b + c;
    let cubes = a * a * a + b * b * b + c * c * c;
    Some(&s * &s * &s - cubes - r(3) * (a + b) * (b + c) * (c + a))
}

fn pair_sums(v: &[Rational]) -> Option<Rational> {
    let pt = general_point(v)?;
    let (p, q, u) = (pt.p(), pt.q(), pt.u());
    let t = abc_from_pqu(&pt);
    let u3 = u * u * u;
    Some(combine(&[
        &t.a + &t.b - p * (&u3 - &t.cert_w),
        &t.b + &t.c - q * (&u3 + &t.cert_w),
        (&t.c + &t.a) * r(3) * p * q - r(1),
    ]))
}

fn sum_and_cubes(v: &[Rational]) -> Option<Rational> {
    let pt = general_point(v)?;
    let t = abc_from_pqu(&pt);
    let u = pt.u();
    Some(combine(&[
        t.sum() - u * u,
        t.sum_of_cubes() - &t.cert_w * &t.cert_w,
    ]))
}

fn quartic_consistency(v: &[Rational]) -> Option<Rational> {
    let pt = general_point(v)?;
    let (p, q, u) = (pt.p(), pt.q(), pt.u());
    let t = abc_from_pqu(&pt);
    let scale = r(3) * p * q * (p - q);
    Some(&scale * &scale * t.sum_of_squares() - ec1_rhs(p, q, u))
}

fn quartic_specialization(v: &[Rational]) -> Option<Rational> {
    let (p, m) = (&v[0], &v[1]);
    let q = q_of_m(m).ok()?;
    let d = m * m - r(8) * m + r(8);
    let d2 = &d * &d;
    Some(ec2_rhs(p, m) - r(16) * &d2 * &d2 * ec1_rhs(p, &q, &r(1)))
}

fn scaling_certificate(v: &[Rational]) -> Option<Rational> {
    let k = &v[3];
    if k.is_zero() {
        return None;
    }
    let pt = general_point(&v[..3])?;
    let t = abc_from_pqu(&pt);
    let s = t.scaled(k);
    let k2 = k * k;
    // v itself need not be rational here; compare squares instead
    Some(combine(&[
        s.sum() - &s.cert_u * &s.cert_u,
        s.sum_of_squares() - &k2 * &k2 * t.sum_of_squares(),
        s.sum_of_cubes() - &s.cert_w * &s.cert_w,
    ]))
}

/// The cases, sorted by name.
pub fn cases() -> Vec<IdentityCase> {
    let mut v = vec![
        IdentityCase {
            name: "cube-sum-factorization",
            variables: &["a", "b", "c"],
            residual: cube_sum_factorization,
        },
        IdentityCase { name: "pair-sums", variables: &["p", "q", "u"], residual: pair_sums },
        IdentityCase {
            name: "quartic-consistency",
            variables: &["p", "q", "u"],
            residual: quartic_consistency,
        },
        IdentityCase {
            name: "quartic-specialization",
            variables: &["p", "m"],
            residual: quartic_specialization,
        },
        IdentityCase {
            name: "scaling-certificate",
            variables: &["p", "q", "u", "k"],
            residual: scaling_certificate,
        },
        IdentityCase {
            name: "sum-and-cubes",
            variables: &["p", "q", "u"],
            residual: sum_and_cubes,
        },
    ];
    v.sort_by_key(|c| c.name);
    v
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    let n = rng.gen_range(-NUM_BOUND..=NUM_BOUND);
    let d = rng.gen_range(1..=DEN_BOUND);
    Rational::new(Integer::from(n), Integer::from(d))
}

/// Evaluates every case at `samples` points. Each case draws from its own
/// ChaCha stream keyed by `seed`, so the report depends only on the seed.
pub fn run_identities(samples: usize, seed: u64) -> Result<IdentityReport> {
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    let mut reports = Vec::new();
    for (stream, case) in cases().iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream as u64);
        let mut redraws = 0u32;
        let mut witness = None;
        for _ in 0..samples {
            let mut tries = 0;
            let (point, residual) = loop {
                let point: Vec<Rational> = (0..case.arity()).map(|_| random_rational(&mut rng)).collect();
                if let Some(res) = case.residual(&point) {
                    break (point, res);
                }
                tries += 1;
                redraws += 1;
                if tries >= RETRY_CAP {
                    return Err(Error::Degenerate("identity sampler hit its retry cap"));
                }
            };
            if witness.is_none() && !residual.is_zero() {
                witness = Some(Witness { point, residual: residual.abs() });
            }
        }
        reports.push(CaseReport {
            name: case.name,
            variables: case.variables,
            samples,
            redraws,
            witness,
        });
    }
    Ok(IdentityReport { samples, seed, cases: reports })
}
