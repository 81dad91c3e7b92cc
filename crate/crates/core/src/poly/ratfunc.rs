use std::fmt;

use num_traits::{One, Zero};

use super::Polynomial;
use crate::error::{Error, Result};
use crate::exactnum::Rational;

/// `num / den` over ℚ with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let g = num.gcd(&den)?;
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        };
        Ok(Self::from_coprime(num, den))
    }

    /// Caller guarantees the two are coprime; only the denominator is made
    /// monic.
    fn from_coprime(num: Polynomial, den: Polynomial) -> Self {
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        if lc.is_one() {
            Self { num, den }
        } else {
            let inv = lc.recip();
            Self { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        Self { num: p, den: Polynomial::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn x() -> Self {
        Self::from_poly(Polynomial::x())
    }

    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Value at `x`; a pole is reported as an error.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole { factor: "denominator", m: x.clone() });
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        // Henrici: only the common part of the denominators can cancel.
        let g = self.den.gcd(&rhs.den)?;
        if g.is_constant() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return Ok(Self::from_coprime(num, &self.den * &rhs.den));
        }
        let d1 = self.den.div_exact(&g)?;
        let d2 = rhs.den.div_exact(&g)?;
        let t = &(&self.num * &d2) + &(&rhs.num * &d1);
        if t.is_zero() {
            return Ok(Self::zero());
        }
        let g2 = t.gcd(&g)?;
        Ok(Self::from_coprime(
            t.div_exact(&g2)?,
            &d1 * (&rhs.den.div_exact(&g2)?),
        ))
    }

    pub fn neg(&self) -> Self {
        Self { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero());
        }
        let g1 = self.num.gcd(&rhs.den)?;
        let g2 = rhs.num.gcd(&self.den)?;
        let n1 = self.num.div_exact(&g1)?;
        let d2 = rhs.den.div_exact(&g1)?;
        let n2 = rhs.num.div_exact(&g2)?;
        let d1 = self.den.div_exact(&g2)?;
        Ok(Self::from_coprime(&n1 * &n2, &d1 * &d2))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        self.mul(&rhs.recip()?)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Powers of a reduced fraction stay reduced.
    pub fn pow(&self, e: u32) -> Self {
        Self::from_coprime(self.num.pow(e), self.den.pow(e))
    }

    /// `g` with `g² = self`, when `self` is a square in ℚ(x).
    ///
    /// With `num` and `den` coprime and `den` monic, `num · den` is a square
    /// exactly when each of them is; the roots are taken separately so that
    /// the result comes out already reduced.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.num.sqrt()?;
        let d = self.den.sqrt()?;
        Some(Self::from_coprime(n, d))
    }

    /// `true` when the stored form is canonical. Used by tests.
    pub fn is_canonical(&self) -> bool {
        !self.den.is_zero()
            && self.den.leading_coeff().is_some_and(One::is_one)
            && self.num.gcd(&self.den).is_ok_and(|g| g.is_constant())
    }

    pub fn render(&self, var: &str) -> String {
        if self.den.is_constant() {
            self.num.render(var)
        } else {
            format!("({}) / ({})", self.num.render(var), self.den.render(var))
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}
