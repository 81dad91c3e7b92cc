//! The parametric construction.
//!
//! Writing `a + b + c = u²` and `a³ + b³ + c³ = w²` gives
//! `3(a+b)(b+c)(c+a) = (u³ − w)(u³ + w)`, so there are rationals `p, q` with
//! `a + b = p(u³ − w)`, `b + c = q(u³ + w)`, `c + a = 1/(3pq)`. Solving for
//! `a, b, c, w` leaves only the sum-of-squares condition, a quartic in `p`.
//! Fixing `u = 1` and choosing `q` as a rational function of `m` makes the
//! quartic's leading coefficient a square, which hands over a rational point
//! `p(m)` and with it a one-parameter family of solutions.

use std::sync::OnceLock;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{
    factorize_bounded, largest_square_divisor, rat_int, rational_square_root, Integer, Rational,
};
use crate::poly::{Polynomial, RationalFunction};
use crate::verify::{Certificate, Triad};

/// Degree the cleared family polynomials are expected to have.
pub const EXPECTED_FAMILY_DEGREE: usize = 68;

/// Rho iterations spent per composite when square-reducing a scaled triad.
pub const DEFAULT_FACTOR_BUDGET: u64 = 1 << 18;

fn r(n: i64) -> Rational {
    rat_int(n)
}

/// `(p, q, u)` with `p`, `q`, `p − q` all nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamPoint {
    p: Rational,
    q: Rational,
    u: Rational,
}

impl ParamPoint {
    pub fn new(p: Rational, q: Rational, u: Rational) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::Degenerate("p = 0"));
        }
        if q.is_zero() {
            return Err(Error::Degenerate("q = 0"));
        }
        if p == q {
            return Err(Error::Degenerate("p = q"));
        }
        Ok(Self { p, q, u })
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn u(&self) -> &Rational {
        &self.u
    }
}

/// A rational solution with its square-root witnesses. `cert_v` is `None`
/// when the sum of squares is not a rational square.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalTriple {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub cert_u: Rational,
    pub cert_v: Option<Rational>,
    pub cert_w: Rational,
}

impl RationalTriple {
    pub fn sum(&self) -> Rational {
        &self.a + &self.b + &self.c
    }

    pub fn sum_of_squares(&self) -> Rational {
        &self.a * &self.a + &self.b * &self.b + &self.c * &self.c
    }

    pub fn sum_of_cubes(&self) -> Rational {
        [&self.a, &self.b, &self.c].iter().map(|x| *x * *x * *x).sum()
    }

    /// Exact check of all three certificates.
    pub fn is_certified(&self) -> bool {
        let Some(v) = &self.cert_v else {
            return false;
        };
        !v.is_negative()
            && &self.cert_u * &self.cert_u == self.sum()
            && v * v == self.sum_of_squares()
            && &self.cert_w * &self.cert_w == self.sum_of_cubes()
    }

    pub fn all_positive(&self) -> bool {
        self.a.is_positive() && self.b.is_positive() && self.c.is_positive()
    }

    /// `(k²a, k²b, k²c)` with certificates `(ku, k²v, k³w)`.
    pub fn scaled(&self, k: &Rational) -> Self {
        let k2 = k * k;
        let k3 = &k2 * k;
        Self {
            a: &self.a * &k2,
            b: &self.b * &k2,
            c: &self.c * &k2,
            cert_u: &self.cert_u * k,
            cert_v: self.cert_v.as_ref().map(|v| v * &k2),
            cert_w: &self.cert_w * &k3,
        }
    }
}

/// `q = (m² − 4m − 8) / (2(m² − 8m + 8))`.
pub fn q_of_m(m: &Rational) -> Result<Rational> {
    let den = r(2) * (m * m - r(8) * m + r(8));
    if den.is_zero() {
        return Err(Error::Pole { factor: "m^2-8m+8", m: m.clone() });
    }
    Ok((m * m - r(4) * m - r(8)) / den)
}

/// Numerator of `p(m)`, highest degree first.
const P_NUMERATOR: [i64; 17] = [
    1,
    -96,
    2688,
    -27904,
    -108288,
    6494208,
    -87138304,
    674709504,
    -3417415680,
    11595022336,
    -25774522368,
    35770073088,
    -34652291072,
    57252249600,
    -130157641728,
    154014842880,
    -63870861312,
];

const P_DEGREE8_FACTOR: [i64; 9] = [1, -36, 672, -6944, 39936, -128256, 235520, -288768, 258048];

/// The factors of the denominator of `p(m)`, with the power each appears in.
fn p_denominator_factors() -> [(&'static str, Polynomial, u32); 4] {
    [
        ("m^2-4m-8", Polynomial::from_ints_desc(&[1, -4, -8]), 1),
        ("m^2-12m+24", Polynomial::from_ints_desc(&[1, -12, 24]), 1),
        ("m^2-8m+24", Polynomial::from_ints_desc(&[1, -8, 24]), 2),
        ("m^8-36m^7+672m^6-...", Polynomial::from_ints_desc(&P_DEGREE8_FACTOR), 1),
    ]
}

/// The rational point on the `u = 1` quartic:
///
/// `p = −N(m) / (12 (m²−4m−8)(m²−12m+24)(m²−8m+24)² F₈(m))`
///
/// where `N` has degree 16 and `F₈` degree 8. This is the point obtained by
/// matching `Y = s·p² + t·p + r` against the top three coefficients of the
/// quartic, whose leading coefficient `s²` is a square.
pub fn p_of_m(m: &Rational) -> Result<Rational> {
    let mut den = r(12);
    for (name, f, e) in p_denominator_factors() {
        let v = f.eval(m);
        if v.is_zero() {
            return Err(Error::Pole { factor: name, m: m.clone() });
        }
        den *= num_traits::pow(v, e as usize);
    }
    let num = Polynomial::from_ints_desc(&P_NUMERATOR).eval(m);
    Ok(-num / den)
}

/// `a, b, c, w` from `(p, q, u)`; `v` is recovered when the sum of squares
/// is a rational square.
pub fn abc_from_pqu(pt: &ParamPoint) -> RationalTriple {
    let (p, q, u) = (&pt.p, &pt.q, &pt.u);
    let u2 = u * u;
    let u3 = &u2 * u;
    let pq = p * q;
    let p_minus_q = p - q;
    let a = -(r(6) * p * &pq * &u3 - r(3) * p * (p + q) * &u2 + r(1)) / (r(3) * p * &p_minus_q);
    let b = (r(3) * &pq * &u2 - r(1)) / (r(3) * &pq);
    let c = (r(6) * &pq * q * &u3 - r(3) * q * (p + q) * &u2 + r(1)) / (r(3) * q * &p_minus_q);
    let w = (r(3) * &pq * (p + q) * &u3 - r(6) * &pq * &u2 + r(1)) / (r(3) * &pq * &p_minus_q);
    let mut t = RationalTriple { a, b, c, cert_u: u.clone(), cert_v: None, cert_w: w };
    t.cert_v = rational_square_root(&t.sum_of_squares());
    t
}

/// Right side of `y² = …`, the sum-of-squares condition scaled by
/// `(3pq(p − q))²`, as a quartic in `p`.
pub fn ec1_rhs(p: &Rational, q: &Rational, u: &Rational) -> Rational {
    let q2 = q * q;
    let q3 = &q2 * q;
    let q4 = &q3 * q;
    let u2 = u * u;
    let u3 = &u2 * u;
    let u4 = &u3 * u;
    let p2 = p * p;
    let p3 = &p2 * p;
    let p4 = &p3 * p;
    r(9) * &q2 * &u4 * (r(8) * &q2 * &u2 - r(8) * q * u + r(3)) * p4
        - r(6) * &u2 * q * (r(12) * &q3 * &u3 - r(3) * &q2 * &u2 - r(2) * q * u + r(2)) * p3
        + (r(27) * &q4 * &u4 + r(12) * &q3 * &u3 + r(2)) * p2
        - r(2) * q * (r(6) * &q2 * &u2 + r(1)) * p
        + r(2) * q2
}

/// Coefficients `[c0, c1, c2, c3, c4]` of the `u = 1` quartic
/// `Y² = c4 p⁴ + c3 p³ + c2 p² + c1 p + c0` as polynomials in `m`.
pub fn ec2_coefficient_polys() -> [Polynomial; 5] {
    let qa = Polynomial::from_ints_desc(&[1, -4, -8]);
    let qb = Polynomial::from_ints_desc(&[1, -8, 8]);
    let qc = Polynomial::from_ints_desc(&[1, -8, 24]);
    let c = |k: i64| Polynomial::constant(r(k));
    let c4 = c(36) * qc.pow(2) * qa.pow(2);
    let c3 = c(-12)
        * &qa
        * Polynomial::from_ints_desc(&[7, -136, 1112, -5120, 14272, -19968, 1536]);
    let c2 = Polynomial::from_ints_desc(&[
        83, -1936, 18112, -90496, 291200, -705536, 1060864, -352256, 143360,
    ]);
    let c1 = c(-8) * &qb * &qa * Polynomial::from_ints_desc(&[5, -56, 160, -64, 320]);
    let c0 = c(8) * qa.pow(2) * qb.pow(2);
    [c0, c1, c2, c3, c4]
}

/// Right side of the `u = 1` quartic at `(p, m)`, evaluated directly.
pub fn ec2_rhs(p: &Rational, m: &Rational) -> Rational {
    let m2 = m * m;
    let qa = &m2 - r(4) * m - r(8);
    let qb = &m2 - r(8) * m + r(8);
    let qc = &m2 - r(8) * m + r(24);
    let horner = |cs: &[i64]| cs.iter().fold(Rational::zero(), |acc, &k| acc * m + r(k));
    let p2 = p * p;
    let p3 = &p2 * p;
    let p4 = &p3 * p;
    r(36) * &qc * &qc * &qa * &qa * p4
        - r(12) * &qa * horner(&[7, -136, 1112, -5120, 14272, -19968, 1536]) * p3
        + horner(&[83, -1936, 18112, -90496, 291200, -705536, 1060864, -352256, 143360]) * p2
        - r(8) * &qb * &qa * horner(&[5, -56, 160, -64, 320]) * p
        + r(8) * &qa * &qa * &qb * &qb
}

/// `a, b, c` at `u = 1` in their reduced form.
fn abc_at_unit_u(p: &Rational, q: &Rational) -> (Rational, Rational, Rational) {
    let pq = p * q;
    let a = -((r(6) * q - r(3)) * p * p - r(3) * &pq + r(1)) / (r(3) * p * (p - q));
    let b = (r(3) * &pq - r(1)) / (r(3) * &pq);
    let c = (r(3) * (r(2) * q - r(1)) * &pq - r(3) * q * q + r(1)) / (r(3) * q * (p - q));
    (a, b, c)
}

/// The member of the family at parameter `m`; `a + b + c = 1`.
pub fn solve_for_m(m: &Rational) -> Result<RationalTriple> {
    let q = q_of_m(m)?;
    let p = p_of_m(m)?;
    let pt = ParamPoint::new(p, q, r(1))?;
    let (a, b, c) = abc_at_unit_u(&pt.p, &pt.q);
    let generic = abc_from_pqu(&pt);
    debug_assert_eq!((&generic.a, &generic.b, &generic.c), (&a, &b, &c));
    let cert_v = rational_square_root(&generic.sum_of_squares())
        .ok_or_else(|| Error::MissingSquaresCertificate(generic.sum_of_squares()))?;
    Ok(RationalTriple { a, b, c, cert_u: r(1), cert_v: Some(cert_v), cert_w: generic.cert_w })
}

/// How far the square reduction of a scaled triad got.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduction {
    /// The gcd was fully factored; the triad is square-reduced.
    Certified,
    /// Factoring stopped on `unresolved`; the triad is reduced by every
    /// square found but may still share a square factor made of primes of
    /// `unresolved`.
    Partial { unresolved: Integer },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledTriad {
    pub triad: Triad,
    pub certificate: Certificate,
    /// Least common denominator used for the initial `k²` scaling.
    pub k: Integer,
    pub reduction: Reduction,
}

/// Scales a positive rational solution to the square-reduced integer triad,
/// using [`DEFAULT_FACTOR_BUDGET`] for the square reduction.
pub fn scale_to_integer_triad(t: &RationalTriple) -> Result<ScaledTriad> {
    scale_to_integer_triad_with_budget(t, Some(DEFAULT_FACTOR_BUDGET))
}

/// As [`scale_to_integer_triad`], with an explicit rho budget (`None` factors
/// to completion however long that takes).
pub fn scale_to_integer_triad_with_budget(
    t: &RationalTriple,
    budget: Option<u64>,
) -> Result<ScaledTriad> {
    for (x, name) in [(&t.a, "a"), (&t.b, "b"), (&t.c, "c")] {
        if !x.is_positive() {
            return Err(Error::NonPositive(name));
        }
    }
    if t.cert_v.is_none() {
        return Err(Error::MissingSquaresCertificate(t.sum_of_squares()));
    }
    let k = t.a.denom().lcm(t.b.denom()).lcm(t.c.denom());
    let kr = Rational::from_integer(k.clone());
    let raw = t.scaled(&kr);
    let g = raw.a.numer().gcd(raw.b.numer()).gcd(raw.c.numer());
    let fact = factorize_bounded(&g, budget);
    let sq = fact.square_part();
    let s = crate::exactnum::isqrt(&sq)?;
    let reduced = raw.scaled(&Rational::new(Integer::one(), s));
    let to_int = |x: &Rational| {
        debug_assert!(x.is_integer());
        x.to_integer().abs()
    };
    let triad = Triad::new(to_int(&reduced.a), to_int(&reduced.b), to_int(&reduced.c))?;
    let certificate = Certificate {
        u: to_int(&reduced.cert_u),
        v: to_int(&reduced.cert_v.expect("scaled certificate")),
        w: to_int(&reduced.cert_w),
    };
    if !certificate.checks(&triad) {
        return Err(Error::IdentityFailed("rescaled certificate".into()));
    }
    let reduction = if fact.is_complete() {
        Reduction::Certified
    } else {
        Reduction::Partial { unresolved: fact.unresolved }
    };
    Ok(ScaledTriad { triad, certificate, k, reduction })
}

/// Outcome of the symbolic check of the whole family over ℚ(m).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    pub a: RationalFunction,
    pub b: RationalFunction,
    pub c: RationalFunction,
    pub sum_identity_holds: bool,
    /// Square root of `a² + b² + c²` in ℚ(m).
    pub squares_root: RationalFunction,
    /// Square root of `a³ + b³ + c³` in ℚ(m).
    pub cubes_root: RationalFunction,
    /// Least `D(m)` with `D²a, D²b, D²c` polynomial.
    pub clearing_denominator: Polynomial,
    /// The family as integer-coefficient polynomials, scaled by a square and
    /// free of common square factors.
    pub cleared_polys: [Polynomial; 3],
    pub cleared_degree: usize,
}

impl FamilyReport {
    pub fn degree_matches_expected(&self) -> bool {
        self.cleared_degree == EXPECTED_FAMILY_DEGREE
    }
}

fn rf(num: Polynomial, den: Polynomial) -> Result<RationalFunction> {
    RationalFunction::new(num, den)
}

/// `q(m)` and `p(m)` as rational functions.
pub fn family_parameters() -> Result<(RationalFunction, RationalFunction)> {
    let q = rf(
        Polynomial::from_ints_desc(&[1, -4, -8]),
        Polynomial::from_ints_desc(&[2, -16, 16]),
    )?;
    let mut den = Polynomial::constant(r(12));
    for (_, f, e) in p_denominator_factors() {
        den = den * f.pow(e);
    }
    let p = rf(-Polynomial::from_ints_desc(&P_NUMERATOR), den)?;
    Ok((p, q))
}

/// `a(m), b(m), c(m)` as rational functions.
pub fn family_abc() -> Result<[RationalFunction; 3]> {
    static CACHE: OnceLock<[RationalFunction; 3]> = OnceLock::new();
    if let Some(v) = CACHE.get() {
        return Ok(v.clone());
    }
    let (p, q) = family_parameters()?;
    let k = |n: i64| RationalFunction::constant(r(n));
    let one = RationalFunction::one();
    let pq = p.mul(&q)?;
    let p_minus_q = p.sub(&q)?;
    let six_q_minus_3 = q.scale(&r(6)).sub(&k(3))?;
    let a_num = six_q_minus_3.mul(&p.pow(2))?.sub(&pq.scale(&r(3)))?.add(&one)?;
    let a = a_num.div(&p.mul(&p_minus_q)?.scale(&r(3)))?.neg();
    let b = pq.scale(&r(3)).sub(&one)?.div(&pq.scale(&r(3)))?;
    let two_q_minus_1 = q.scale(&r(2)).sub(&one)?;
    let c_num = two_q_minus_1
        .mul(&pq)?
        .scale(&r(3))
        .sub(&q.pow(2).scale(&r(3)))?
        .add(&one)?;
    let c = c_num.div(&q.mul(&p_minus_q)?.scale(&r(3)))?;
    let out = [a, b, c];
    let _ = CACHE.set(out.clone());
    Ok(out)
}

/// Square root of `f` with the sign fixed by a positive leading numerator
/// coefficient, or a hard error naming the failed identity.
fn require_square(f: &RationalFunction, what: &str) -> Result<RationalFunction> {
    f.sqrt().ok_or_else(|| Error::IdentityFailed(format!("{what} is not a square in Q(m)")))
}

/// Least `D` with `D² · f` polynomial, from the squarefree decomposition of
/// the denominator: each factor `g^e` contributes `g^⌈e/2⌉`.
fn half_denominator(f: &RationalFunction) -> Result<Polynomial> {
    let (_, parts) = f.denom().squarefree_factorization()?;
    Ok(parts
        .into_iter()
        .fold(Polynomial::one(), |acc, (g, e)| acc * g.pow(e.div_ceil(2))))
}

/// Scales three polynomials by a common rational square so they get integer
/// coefficients with no square dividing all of them, then removes any
/// common square polynomial factor.
fn clear_to_integers(polys: [Polynomial; 3]) -> Result<[Polynomial; 3]> {
    let mut polys = polys;
    // A square polynomial factor shared by all three comes off first.
    let common = polys[0].gcd(&polys[1])?.gcd(&polys[2])?;
    if !common.is_constant() {
        let (_, parts) = common.squarefree_factorization()?;
        let square = parts
            .into_iter()
            .fold(Polynomial::one(), |acc, (g, e)| acc * g.pow(e - e % 2));
        if !square.is_constant() {
            for p in polys.iter_mut() {
                *p = p.div_exact(&square)?;
            }
        }
    }
    let den_lcm = polys
        .iter()
        .flat_map(|p| p.coeffs())
        .fold(Integer::one(), |acc, c| acc.lcm(c.denom()));
    let lift = Rational::from_integer(&den_lcm * &den_lcm);
    let polys = polys.map(|p| p.scale(&lift));
    let content = polys
        .iter()
        .flat_map(|p| p.coeffs())
        .fold(Integer::zero(), |acc, c| acc.gcd(c.numer()));
    let square = largest_square_divisor(&content);
    let drop = Rational::new(Integer::one(), square);
    Ok(polys.map(|p| p.scale(&drop)))
}

/// Builds `a(m), b(m), c(m)` and proves over ℚ(m) that their sum is 1 and
/// that the sums of squares and of cubes are squares, then clears
/// denominators to integer polynomials.
pub fn certify_family() -> Result<FamilyReport> {
    let [a, b, c] = family_abc()?;
    let sum = a.add(&b)?.add(&c)?;
    let sum_identity_holds = sum == RationalFunction::one();
    if !sum_identity_holds {
        return Err(Error::IdentityFailed(format!("a + b + c = {sum}, expected 1")));
    }
    let squares = a.pow(2).add(&b.pow(2))?.add(&c.pow(2))?;
    let squares_root = require_square(&squares, "a^2 + b^2 + c^2")?;
    let cubes = a.pow(3).add(&b.pow(3))?.add(&c.pow(3))?;
    let cubes_root = require_square(&cubes, "a^3 + b^3 + c^3")?;

    let clearing_denominator = half_denominator(&a)?
        .lcm(&half_denominator(&b)?)?
        .lcm(&half_denominator(&c)?)?;
    let d2 = RationalFunction::from_poly(clearing_denominator.pow(2));
    let mut cleared = Vec::with_capacity(3);
    for (f, name) in [(&a, "a"), (&b, "b"), (&c, "c")] {
        let g = f.mul(&d2)?;
        if !g.is_polynomial() {
            return Err(Error::IdentityFailed(format!("D^2 * {name} is not a polynomial")));
        }
        cleared.push(g.numer().scale(&g.denom().coeff(0).recip()));
    }
    let cleared_polys = clear_to_integers(cleared.try_into().expect("three polynomials"))?;
    let cleared_degree = cleared_polys.iter().filter_map(Polynomial::degree).max().unwrap_or(0);
    Ok(FamilyReport {
        a,
        b,
        c,
        sum_identity_holds,
        squares_root,
        cubes_root,
        clearing_denominator,
        cleared_polys,
        cleared_degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn q_examples() {
        assert_eq!(q_of_m(&rat(3, 2)).unwrap(), rat(47, 14));
        assert_eq!(q_of_m(&r(0)).unwrap(), rat(-1, 2));
        assert_eq!(q_of_m(&r(4)).unwrap(), rat(1, 2));
    }

    #[test]
    fn p_at_zero() {
        // −(−63870861312) / (12 · (−8) · 24 · 24² · 258048)
        assert_eq!(p_of_m(&r(0)).unwrap(), rat(-47, 252));
    }

    #[test]
    fn p_of_m_makes_ec2_square() {
        for m in [rat(3, 2), r(0), rat(311, 200), rat(-7, 3), r(5)] {
            let p = p_of_m(&m).unwrap();
            assert!(rational_square_root(&ec2_rhs(&p, &m)).is_some(), "m = {m}");
        }
    }

    #[test]
    fn ec1_constant_terms() {
        assert_eq!(ec1_rhs(&r(0), &r(1), &r(1)), r(2));
        assert_eq!(ec1_rhs(&r(1), &r(1), &r(0)), r(2));
    }

    #[test]
    fn ec2_constant_term() {
        let m = rat(5, 7);
        let qa = &m * &m - r(4) * &m - r(8);
        let qb = &m * &m - r(8) * &m + r(8);
        assert_eq!(ec2_rhs(&r(0), &m), r(8) * &qa * &qa * &qb * &qb);
    }

    #[test]
    fn ec2_polys_agree_with_direct_evaluation() {
        let cs = ec2_coefficient_polys();
        for (p, m) in [(rat(2, 3), rat(3, 2)), (rat(-5, 11), rat(7, 4)), (r(0), r(1))] {
            let via_polys = cs
                .iter()
                .rev()
                .fold(Rational::zero(), |acc, c| acc * &p + c.eval(&m));
            assert_eq!(via_polys, ec2_rhs(&p, &m));
        }
    }

    #[test]
    fn abc_example_with_p_at_zero() {
        // q = −1/2 and p = −47/252 give 3pq = 47/168
        let pt = ParamPoint::new(rat(-47, 252), rat(-1, 2), r(1)).unwrap();
        let t = abc_from_pqu(&pt);
        assert_eq!(t.b, rat(-121, 47));
        assert_eq!(t.sum(), r(1));
        assert!(t.is_certified());
    }

    #[test]
    fn degenerate_points_rejected() {
        assert!(ParamPoint::new(r(0), r(1), r(1)).is_err());
        assert!(ParamPoint::new(r(1), r(0), r(1)).is_err());
        assert!(ParamPoint::new(r(2), r(2), r(1)).is_err());
    }

    #[test]
    fn missing_v_is_marked() {
        let pt = ParamPoint::new(r(1), r(2), r(1)).unwrap();
        let t = abc_from_pqu(&pt);
        assert_eq!(t.sum(), r(1));
        assert!(t.cert_v.is_none());
        assert!(!t.is_certified());
    }

    #[test]
    fn solve_at_zero_has_negative_entry() {
        let t = solve_for_m(&r(0)).unwrap();
        assert!(t.is_certified());
        assert!(!t.all_positive());
        assert!(t.b.is_negative());
    }

    #[test]
    fn scale_small_examples() {
        let t = RationalTriple {
            a: rat(1, 4),
            b: rat(1, 4),
            c: rat(1, 2),
            cert_u: r(1),
            cert_v: Some(rat(1, 1)),
            cert_w: r(1),
        };
        // Not a real solution, so the revalidation rejects it; the scaling
        // itself is k = 4, raw (4, 4, 8), reduced (1, 1, 2).
        assert!(scale_to_integer_triad(&t).is_err());
        let raw = Triad::from_u64(1, 1, 2).unwrap().scaled(&Integer::from(2));
        assert_eq!(raw, Triad::from_u64(4, 4, 8).unwrap());
        assert_eq!(raw.square_reduced(), Triad::from_u64(1, 1, 2).unwrap());

        let t = RationalTriple {
            a: r(108),
            b: r(124),
            c: r(129),
            cert_u: r(19),
            cert_v: Some(r(209)),
            cert_w: r(2305),
        };
        let s = scale_to_integer_triad(&t).unwrap();
        assert_eq!(s.k, Integer::one());
        assert_eq!(s.triad, Triad::from_u64(108, 124, 129).unwrap());
        assert_eq!(s.reduction, Reduction::Certified);

        let scaled = t.scaled(&rat(2, 3));
        let s = scale_to_integer_triad(&scaled).unwrap();
        assert_eq!(s.k, Integer::from(9));
        assert_eq!(s.triad, Triad::from_u64(108, 124, 129).unwrap());

        let neg = RationalTriple { a: r(-1), ..t };
        assert_eq!(scale_to_integer_triad(&neg), Err(Error::NonPositive("a")));
    }
}
