//! Dense univariate polynomials over ℚ and rational functions built on them.
//!
//! Products and gcds run over ℤ on primitive parts; the gcd is the primitive
//! remainder sequence, which keeps coefficient growth in check at the degrees
//! the family certification reaches (a few hundred).

mod intpoly;
mod ratfunc;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{rational_square_root, Integer, Rational};

pub use ratfunc::RationalFunction;

/// Coefficients in ascending degree; the leading coefficient is never zero,
/// so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Integer coefficients, ascending.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// Integer coefficients, highest degree first (the way formulas are
    /// usually written down).
    pub fn from_ints_desc(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs.iter().rev().map(|&c| Rational::from_integer(c.into())).collect(),
        )
    }

    pub(crate) fn from_integers(coeffs: Vec<Integer>) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(Rational::from_integer).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `s^d · self(r/s)`, an integer when `self` has integer coefficients
    /// and `d ≥ deg self`.
    pub fn eval_homogeneous(&self, r: &Integer, s: &Integer, d: usize) -> Rational {
        debug_assert!(self.degree().is_none_or(|deg| deg <= d));
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * Rational::from_integer(r.pow(i as u32) * s.pow((d - i) as u32)))
            .sum()
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(Integer::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Euclidean division over ℚ.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(dn) = self.degree().filter(|&d| d >= dd) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut quot = vec![Rational::zero(); dn - dd + 1];
        for i in (dd..=dn).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] * &lc_inv;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] -= &q * d;
            }
            quot[i - dd] = q;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Quotient of a division known to be exact.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.divrem(divisor)?;
        debug_assert!(r.is_zero(), "inexact polynomial division");
        Ok(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if self.is_zero() {
            return Ok(other.monic());
        }
        if other.is_zero() {
            return Ok(self.monic());
        }
        let (_, a) = self.primitive_integer();
        let (_, b) = other.primitive_integer();
        Ok(Self::from_integers(intpoly::gcd(a, b)).monic())
    }

    pub fn lcm(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let g = self.gcd(other)?;
        Ok((self * &other.div_exact(&g)?).monic())
    }

    /// Splits `self = content · p` with `p` primitive over ℤ and positive
    /// leading coefficient.
    pub fn primitive_integer(&self) -> (Rational, Vec<Integer>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let den_lcm = self
            .coeffs
            .iter()
            .fold(Integer::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<Integer> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let (content, prim) = intpoly::primitive(ints);
        (Rational::new(content, den_lcm), prim)
    }

    /// Square root with positive leading coefficient, if `self` is a square.
    pub fn sqrt(&self) -> Option<Self> {
        let Some(deg) = self.degree() else {
            return Some(Self::zero());
        };
        if deg % 2 == 1 {
            return None;
        }
        let n = deg / 2;
        let top = rational_square_root(&self.coeffs[deg])?;
        let twice_top = &top * Rational::from_integer(2.into());
        let mut root = vec![Rational::zero(); n + 1];
        root[n] = top;
        for k in (0..n).rev() {
            // coefficient of x^(n+k) in root², excluding the 2·root[n]·root[k] term
            let mut acc = self.coeffs[n + k].clone();
            for i in (k + 1)..n {
                acc -= &root[i] * &root[n + k - i];
            }
            root[k] = acc / &twice_top;
        }
        let root = Self::from_coeffs(root);
        (&root * &root == *self).then_some(root)
    }

    pub fn is_squarefree(&self) -> bool {
        match self.gcd(&self.derivative()) {
            Ok(g) => g.is_constant(),
            Err(_) => false,
        }
    }

    /// Yun's squarefree decomposition. Returns the leading coefficient and
    /// monic, pairwise coprime, squarefree factors with their multiplicities
    /// in increasing order, so that `self = lc · ∏ fᵢ^eᵢ`.
    pub fn squarefree_factorization(&self) -> Result<(Rational, Vec<(Self, u32)>)> {
        let lc = self.leading_coeff().ok_or(Error::ZeroDivisor)?.clone();
        let f = self.monic();
        let mut out = Vec::new();
        if f.is_constant() {
            return Ok((lc, out));
        }
        let df = f.derivative();
        let a0 = f.gcd(&df)?;
        let mut b = f.div_exact(&a0)?;
        let c = df.div_exact(&a0)?;
        let mut d = &c - &b.derivative();
        let mut i = 1u32;
        while !b.is_constant() {
            let a = b.gcd(&d)?;
            b = b.div_exact(&a)?;
            let c = d.div_exact(&a)?;
            d = &c - &b.derivative();
            if !a.is_constant() {
                out.push((a, i));
            }
            i += 1;
        }
        Ok((lc, out))
    }

    /// Renders with the given variable name, highest degree first.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}·{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let (ca, a) = self.primitive_integer();
        let (cb, b) = rhs.primitive_integer();
        let prod = intpoly::mul(&a, &b);
        let content = ca * cb;
        Polynomial::from_coeffs(
            prod.into_iter()
                .map(|c| Rational::from_integer(c) * &content)
                .collect(),
        )
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial { (&self).$m(&rhs) }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_int};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn gcd_examples() {
        let g = p(&[-1, 0, 1]).gcd(&p(&[-1, 1])).unwrap();
        assert_eq!(g, p(&[-1, 1]));
        assert!(Polynomial::zero().gcd(&Polynomial::zero()).is_err());
        assert_eq!(p(&[3, 6]).gcd(&Polynomial::zero()).unwrap(), Polynomial::from_coeffs(vec![rat(1, 2), rat_int(1)]));
    }

    #[test]
    fn eval_quadratic_factor() {
        // m² − 4m − 8 at m = 3/2
        assert_eq!(p(&[-8, -4, 1]).eval(&rat(3, 2)), rat(-47, 4));
    }

    #[test]
    fn divrem_examples() {
        let (q, r) = p(&[0, 0, 0, 1]).divrem(&p(&[0, 0, 1])).unwrap();
        assert_eq!(q, Polynomial::x());
        assert!(r.is_zero());
        let (q, r) = p(&[1, 0, 1]).divrem(&p(&[0, 2])).unwrap();
        assert_eq!(q, Polynomial::from_coeffs(vec![rat_int(0), rat(1, 2)]));
        assert_eq!(r, p(&[1]));
        assert_eq!(p(&[1]).divrem(&Polynomial::zero()), Err(Error::ZeroDivisor));
    }

    #[test]
    fn derivative_and_degree() {
        assert_eq!(p(&[5, 3, 0, 2]).derivative(), p(&[3, 0, 6]));
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(p(&[7]).degree(), Some(0));
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(p(&[1, 2, 1]).sqrt(), Some(p(&[1, 1])));
        assert_eq!(p(&[1, 0, 1]).sqrt(), None);
        assert_eq!(p(&[0, 0, 0, 0, 4]).sqrt(), Some(p(&[0, 0, 2])));
        assert_eq!(p(&[0, 0, 2]).sqrt(), None);
        assert_eq!(p(&[1, 1]).sqrt(), None);
    }

    #[test]
    fn squarefree_examples() {
        let f = &p(&[-1, 1]).pow(2) * &p(&[2, 1]);
        let (lc, parts) = f.squarefree_factorization().unwrap();
        assert_eq!(lc, rat_int(1));
        assert_eq!(parts, vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 2)]);

        let (_, parts) = p(&[0, 0, 0, 0, 0, 1]).squarefree_factorization().unwrap();
        assert_eq!(parts, vec![(Polynomial::x(), 5)]);

        let (_, parts) = p(&[-1, 0, 1]).squarefree_factorization().unwrap();
        assert_eq!(parts, vec![(p(&[-1, 0, 1]), 1)]);

        let (lc, parts) = p(&[-6, 3]).pow(3).squarefree_factorization().unwrap();
        assert_eq!(lc, rat_int(27));
        assert_eq!(parts, vec![(p(&[-2, 1]), 3)]);
    }

    #[test]
    fn render_readable() {
        assert_eq!(p(&[-8, -4, 1]).render("m"), "m^2 - 4·m - 8");
        assert_eq!(Polynomial::from_coeffs(vec![rat(1, 2), rat_int(-3)]).render("m"), "-3·m + 1/2");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn homogeneous_eval() {
        // s³·f(r/s) for f = x² − 4x − 8, r/s = 3/2, d = 3
        let v = p(&[-8, -4, 1]).eval_homogeneous(&3.into(), &2.into(), 3);
        assert_eq!(v, rat_int(2 * (9 - 24 - 32)));
    }
}
