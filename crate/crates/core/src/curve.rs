//! The `u = 1` quartic at a fixed rational `m` as an elliptic curve.
//!
//! The leading coefficient of the quartic is a square `s²`, so both points
//! at infinity are rational. Sending `p ↦ 1/(p − t)` moves them to a finite
//! place where the quartic has square constant term, and the classical
//! quartic-to-cubic substitution then gives a long Weierstrass model with one
//! of the points at infinity as the identity. Multiples of the base point are
//! carried back to new values of `p`, each of which yields a new rational
//! solution.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{rat_int, rational_square_root, Rational};
use crate::parametric::{
    abc_from_pqu, ec2_coefficient_polys, p_of_m, q_of_m, ParamPoint, RationalTriple,
};

fn r(n: i64) -> Rational {
    rat_int(n)
}

/// `Y² = c4·p⁴ + c3·p³ + c2·p² + c1·p + c0`, coefficients stored ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticCurve {
    coeffs: [Rational; 5],
    lead_root: Rational,
}

impl QuarticCurve {
    /// Requires a nonzero square leading coefficient.
    pub fn new(coeffs: [Rational; 5]) -> Result<Self> {
        if coeffs[4].is_zero() {
            return Err(Error::Degenerate("leading coefficient is zero"));
        }
        let lead_root = rational_square_root(&coeffs[4])
            .ok_or(Error::Degenerate("leading coefficient is not a square"))?;
        Ok(Self { coeffs, lead_root })
    }

    pub fn coeffs(&self) -> &[Rational; 5] {
        &self.coeffs
    }

    /// Positive square root of the leading coefficient.
    pub fn lead_root(&self) -> &Rational {
        &self.lead_root
    }

    pub fn eval(&self, p: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * p + c)
    }

    pub fn contains(&self, pt: &QuarticPoint) -> bool {
        &pt.y * &pt.y == self.eval(&pt.p)
    }

    /// Coefficients of the same quartic in `p' = p − shift`.
    fn shifted(&self, shift: &Rational) -> [Rational; 5] {
        // Taylor expansion at `shift`: eᵢ = Σ_{j≥i} C(j, i) cⱼ shiftʲ⁻ⁱ
        let mut out: [Rational; 5] = Default::default();
        for (i, slot) in out.iter_mut().enumerate() {
            let mut acc = Rational::zero();
            for j in i..5 {
                let binom = r(binomial(j, i));
                acc += binom * &self.coeffs[j] * num_traits::pow(shift.clone(), j - i);
            }
            *slot = acc;
        }
        out
    }
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuarticPoint {
    pub p: Rational,
    pub y: Rational,
}

/// The `u = 1` quartic evaluated at `m`.
pub fn quartic_from_m(m: &Rational) -> Result<QuarticCurve> {
    let coeffs = ec2_coefficient_polys().map(|c| c.eval(m));
    QuarticCurve::new(coeffs)
}

/// The point `P` with `p = p(m)` and the non-negative `Y`.
pub fn base_point(m: &Rational) -> Result<QuarticPoint> {
    let p = p_of_m(m)?;
    let curve = quartic_from_m(m)?;
    let value = curve.eval(&p);
    let y = rational_square_root(&value).ok_or_else(|| {
        Error::IdentityFailed(format!("quartic at p(m) is {value}, not a square"))
    })?;
    Ok(QuarticPoint { p, y })
}

/// `y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassCurve {
    pub a1: Rational,
    pub a2: Rational,
    pub a3: Rational,
    pub a4: Rational,
    pub a6: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EcPoint {
    Infinity,
    Affine { x: Rational, y: Rational },
}

impl EcPoint {
    pub fn is_infinity(&self) -> bool {
        matches!(self, EcPoint::Infinity)
    }
}

impl fmt::Display for EcPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EcPoint::Infinity => f.write_str("O"),
            EcPoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl WeierstrassCurve {
    pub fn contains(&self, pt: &EcPoint) -> bool {
        match pt {
            EcPoint::Infinity => true,
            EcPoint::Affine { x, y } => {
                y * y + &self.a1 * x * y + &self.a3 * y
                    == x * x * x + &self.a2 * x * x + &self.a4 * x + &self.a6
            }
        }
    }

    pub fn discriminant(&self) -> Rational {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let b2 = a1 * a1 + r(4) * a2;
        let b4 = r(2) * a4 + a1 * a3;
        let b6 = a3 * a3 + r(4) * a6;
        let b8 = a1 * a1 * a6 + r(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        -(&b2 * &b2 * &b8) - r(8) * &b4 * &b4 * &b4 - r(27) * &b6 * &b6 + r(9) * &b2 * &b4 * &b6
    }

    pub fn negate(&self, pt: &EcPoint) -> EcPoint {
        match pt {
            EcPoint::Infinity => EcPoint::Infinity,
            EcPoint::Affine { x, y } => EcPoint::Affine {
                x: x.clone(),
                y: -y - &self.a1 * x - &self.a3,
            },
        }
    }

    /// Chord-and-tangent addition.
    pub fn add(&self, p1: &EcPoint, p2: &EcPoint) -> EcPoint {
        let (x1, y1, x2, y2) = match (p1, p2) {
            (EcPoint::Infinity, _) => return p2.clone(),
            (_, EcPoint::Infinity) => return p1.clone(),
            (EcPoint::Affine { x: x1, y: y1 }, EcPoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let (lambda, nu) = if x1 != x2 {
            let dx = x2 - x1;
            ((y2 - y1) / &dx, (y1 * x2 - y2 * x1) / &dx)
        } else {
            let denom = r(2) * y1 + a1 * x1 + a3;
            if denom.is_zero() || y1 + y2 + a1 * x2 + a3 == Rational::zero() {
                return EcPoint::Infinity;
            }
            let lambda = (r(3) * x1 * x1 + r(2) * a2 * x1 + a4 - a1 * y1) / &denom;
            let nu = (-(x1 * x1 * x1) + a4 * x1 + r(2) * a6 - a3 * y1) / &denom;
            (lambda, nu)
        };
        let x3 = &lambda * &lambda + a1 * &lambda - a2 - x1 - x2;
        let y3 = -(&lambda + a1) * &x3 - nu - a3;
        EcPoint::Affine { x: x3, y: y3 }
    }

    /// `[n]P` by double-and-add; negative `n` negates.
    pub fn multiple(&self, n: i64, pt: &EcPoint) -> EcPoint {
        let mut base = if n < 0 { self.negate(pt) } else { pt.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = EcPoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            base = self.add(&base, &base);
            k >>= 1;
        }
        acc
    }
}

/// A quartic together with a birational map to a Weierstrass model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassModel {
    pub quartic: QuarticCurve,
    pub curve: WeierstrassCurve,
    /// `p` is replaced by `p − shift` before inverting.
    pub shift: Rational,
    // v² = a·t⁴ + b·t³ + c·t² + d·t + root², with t = 1/(p − shift)
    b: Rational,
    c: Rational,
    d: Rational,
    root: Rational,
}

impl WeierstrassModel {
    fn new(quartic: &QuarticCurve, shift: Rational) -> Self {
        let e = quartic.shifted(&shift);
        let root = quartic.lead_root().clone();
        let [a, b, c, d] = [e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone()];
        let q2 = &root * &root;
        let a1 = &d / &root;
        let a2 = &c - &d * &d / (r(4) * &q2);
        let a3 = r(2) * &root * &b;
        let a4 = -(r(4) * &q2 * &a);
        let a6 = &a2 * &a4;
        Self {
            quartic: quartic.clone(),
            curve: WeierstrassCurve { a1, a2, a3, a4, a6 },
            shift,
            b,
            c,
            d,
            root,
        }
    }

    /// Quartic point to Weierstrass point. Undefined where `p = shift`.
    pub fn forward(&self, pt: &QuarticPoint) -> Result<EcPoint> {
        if !self.quartic.contains(pt) {
            return Err(Error::NotOnCurve);
        }
        let dp = &pt.p - &self.shift;
        if dp.is_zero() {
            return Err(Error::ExceptionalPoint("p equals the shift"));
        }
        let t = dp.recip();
        let v = &pt.y * &t * &t;
        let q = &self.root;
        let t2 = &t * &t;
        let x = (r(2) * q * (&v + q) + &self.d * &t) / &t2;
        let y = (r(4) * q * q * (&v + q) + r(2) * q * (&self.d * &t + &self.c * &t2)
            - &self.d * &self.d * &t2 / (r(2) * q))
            / (&t2 * &t);
        Ok(EcPoint::Affine { x, y })
    }

    /// Weierstrass point back to the quartic. Undefined at the identity, at
    /// points with `y = 0`, and at the image of the second point at infinity.
    pub fn backward(&self, pt: &EcPoint) -> Result<QuarticPoint> {
        let EcPoint::Affine { x, y } = pt else {
            return Err(Error::ExceptionalPoint("identity maps to a point at infinity"));
        };
        if y.is_zero() {
            return Err(Error::ExceptionalPoint("y = 0"));
        }
        let q = &self.root;
        let t = (r(2) * q * (x + &self.c) - &self.d * &self.d / (r(2) * q)) / y;
        if t.is_zero() {
            return Err(Error::ExceptionalPoint("maps to a point at infinity"));
        }
        let v = -q + &t * (&t * x - &self.d) / (r(2) * q);
        let p = t.recip() + &self.shift;
        let y_quartic = &v / (&t * &t);
        let out = QuarticPoint { p, y: y_quartic };
        debug_assert!(self.quartic.contains(&out));
        Ok(out)
    }
}

/// Builds a Weierstrass model for `curve` and the image of `pt`, shifting
/// `p` away from `pt` when the plain map is undefined there.
pub fn to_weierstrass(curve: &QuarticCurve, pt: &QuarticPoint) -> Result<(WeierstrassModel, EcPoint)> {
    if !curve.contains(pt) {
        return Err(Error::NotOnCurve);
    }
    let mut shift = Rational::zero();
    while shift == pt.p {
        shift += Rational::one();
    }
    let model = WeierstrassModel::new(curve, shift);
    let image = model.forward(pt)?;
    debug_assert!(model.curve.contains(&image));
    Ok((model, image))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSolution {
    pub multiple: u32,
    pub point: QuarticPoint,
    pub triple: RationalTriple,
    pub all_positive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointsReport {
    pub m: Rational,
    pub base: QuarticPoint,
    pub model: WeierstrassModel,
    pub solutions: Vec<PointSolution>,
    /// Multiples that could not be turned into a solution, with the reason.
    pub skipped: Vec<(u32, String)>,
}

/// `[1]P, [2]P, …, [count]P` carried back to the quartic and turned into
/// rational solutions with `q = q(m)`, `u = 1`.
pub fn solutions_from_points(m: &Rational, count: u32) -> Result<PointsReport> {
    if count == 0 {
        return Err(Error::NonPositive("count"));
    }
    let curve = quartic_from_m(m)?;
    let base = base_point(m)?;
    let q = q_of_m(m)?;
    let (model, image) = to_weierstrass(&curve, &base)?;
    let mut solutions = Vec::new();
    let mut skipped = Vec::new();
    let mut current = EcPoint::Infinity;
    for n in 1..=count {
        current = model.curve.add(&current, &image);
        let point = match model.backward(&current) {
            Ok(pt) => pt,
            Err(e) => {
                skipped.push((n, e.to_string()));
                continue;
            }
        };
        let pt = match ParamPoint::new(point.p.clone(), q.clone(), Rational::one()) {
            Ok(pt) => pt,
            Err(e) => {
                skipped.push((n, e.to_string()));
                continue;
            }
        };
        let triple = abc_from_pqu(&pt);
        if !triple.is_certified() {
            return Err(Error::MissingSquaresCertificate(triple.sum_of_squares()));
        }
        let all_positive = triple.all_positive();
        solutions.push(PointSolution { multiple: n, point, triple, all_positive });
    }
    Ok(PointsReport { m: m.clone(), base, model, solutions, skipped })
}

impl QuarticPoint {
    pub fn is_nonnegative(&self) -> bool {
        !self.y.is_negative()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::parametric::ec2_rhs;

    #[test]
    fn quartic_at_zero() {
        let c = quartic_from_m(&r(0)).unwrap();
        assert_eq!(c.coeffs()[4], r(1327104));
        assert_eq!(c.lead_root(), &r(1152));
        assert_eq!(c.coeffs()[0], r(8 * 64 * 64));
    }

    #[test]
    fn base_point_at_zero() {
        let pt = base_point(&r(0)).unwrap();
        assert_eq!(pt.p, rat(-47, 252));
        assert!(pt.is_nonnegative());
        assert_eq!(&pt.y * &pt.y, ec2_rhs(&pt.p, &r(0)));
    }

    #[test]
    fn round_trip_through_weierstrass() {
        for m in [rat(3, 2), r(0), rat(-5, 3)] {
            let c = quartic_from_m(&m).unwrap();
            let pt = base_point(&m).unwrap();
            let (model, image) = to_weierstrass(&c, &pt).unwrap();
            assert!(model.curve.contains(&image));
            assert!(!model.curve.discriminant().is_zero());
            assert_eq!(model.backward(&image).unwrap(), pt);
        }
    }

    #[test]
    fn shift_used_when_p_is_zero() {
        // Y² = p⁴ + 1 through (0, 1)
        let c = QuarticCurve::new([r(1), r(0), r(0), r(0), r(1)]).unwrap();
        let pt = QuarticPoint { p: r(0), y: r(1) };
        let (model, image) = to_weierstrass(&c, &pt).unwrap();
        assert_eq!(model.shift, r(1));
        assert_eq!(model.backward(&image).unwrap(), pt);
    }

    #[test]
    fn rejects_non_square_leading_coefficient() {
        assert!(QuarticCurve::new([r(1), r(0), r(0), r(0), r(2)]).is_err());
        assert!(QuarticCurve::new([r(1), r(0), r(0), r(0), r(0)]).is_err());
    }

    #[test]
    fn group_law_basics() {
        let m = rat(3, 2);
        let c = quartic_from_m(&m).unwrap();
        let (model, p) = to_weierstrass(&c, &base_point(&m).unwrap()).unwrap();
        let e = &model.curve;
        assert_eq!(e.add(&p, &EcPoint::Infinity), p);
        assert_eq!(e.add(&p, &e.negate(&p)), EcPoint::Infinity);
        let p2 = e.add(&p, &p);
        assert_eq!(e.add(&p2, &p), e.add(&p, &p2));
        assert_eq!(e.multiple(3, &p), e.add(&p2, &p));
        assert!(e.contains(&e.multiple(5, &p)));
        assert_eq!(e.multiple(-2, &p), e.negate(&p2));
    }

    #[test]
    fn second_multiple_is_new() {
        let m = rat(3, 2);
        let rep = solutions_from_points(&m, 2).unwrap();
        assert_eq!(rep.solutions.len(), 2);
        let p1 = &rep.solutions[0].point.p;
        let p2 = &rep.solutions[1].point.p;
        assert_eq!(p1, &p_of_m(&m).unwrap());
        assert_ne!(p1, p2);
        assert!(rational_square_root(&ec2_rhs(p2, &m)).is_some());
        for s in &rep.solutions {
            assert_eq!(s.triple.sum(), r(1));
            assert!(s.triple.is_certified());
        }
        assert!(solutions_from_points(&m, 0).is_err());
    }
}
