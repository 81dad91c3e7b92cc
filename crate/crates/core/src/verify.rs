//! Ground truth: does a triad of positive integers have square sum, square
//! sum of squares and square sum of cubes?

use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exactnum::{largest_square_divisor, perfect_square, Integer};

/// Three positive integers, stored ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triad {
    a: Integer,
    b: Integer,
    c: Integer,
}

impl Triad {
    pub fn new(a: Integer, b: Integer, c: Integer) -> Result<Self> {
        for (x, name) in [(&a, "a"), (&b, "b"), (&c, "c")] {
            if !x.is_positive() {
                return Err(Error::NonPositive(name));
            }
        }
        let mut v = [a, b, c];
        v.sort();
        let [a, b, c] = v;
        Ok(Self { a, b, c })
    }

    pub fn from_u64(a: u64, b: u64, c: u64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into())
    }

    pub fn a(&self) -> &Integer {
        &self.a
    }

    pub fn b(&self) -> &Integer {
        &self.b
    }

    pub fn c(&self) -> &Integer {
        &self.c
    }

    pub fn entries(&self) -> [&Integer; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn sum(&self) -> Integer {
        &self.a + &self.b + &self.c
    }

    pub fn gcd(&self) -> Integer {
        self.a.gcd(&self.b).gcd(&self.c)
    }

    /// Multiplies every entry by `k²`.
    pub fn scaled(&self, k: &Integer) -> Self {
        let k2 = k * k;
        Self { a: &self.a * &k2, b: &self.b * &k2, c: &self.c * &k2 }
    }

    /// Divides out the largest square dividing all three entries.
    pub fn square_reduced(&self) -> Self {
        let s = largest_square_divisor(&self.gcd());
        if s.is_one() {
            return self.clone();
        }
        Self { a: &self.a / &s, b: &self.b / &s, c: &self.c / &s }
    }

    pub fn is_square_reduced(&self) -> bool {
        largest_square_divisor(&self.gcd()).is_one()
    }

    pub fn verify(&self) -> Verification {
        let stages = [
            (Stage::Sum, self.sum()),
            (Stage::Squares, self.entries().iter().map(|x| *x * *x).sum()),
            (Stage::Cubes, self.entries().iter().map(|x| *x * *x * *x).sum()),
        ];
        let mut roots = Vec::with_capacity(3);
        for (stage, value) in stages {
            match perfect_square(&value) {
                Some(r) => roots.push(r),
                None => {
                    return Verification::Fail { triad: self.clone(), stage, value };
                }
            }
        }
        let [u, v, w]: [Integer; 3] = roots.try_into().expect("three roots");
        Verification::Pass { triad: self.clone(), certificate: Certificate { u, v, w } }
    }
}

impl fmt::Display for Triad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.a, self.b, self.c)
    }
}

/// Square roots witnessing the three conditions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub u: Integer,
    pub v: Integer,
    pub w: Integer,
}

impl Certificate {
    pub fn checks(&self, t: &Triad) -> bool {
        let [a, b, c] = t.entries();
        &self.u * &self.u == t.sum()
            && &self.v * &self.v == a * a + b * b + c * c
            && &self.w * &self.w == a * a * a + b * b * b + c * c * c
    }

    /// Certificate of the triad scaled by `k²`.
    pub fn scaled(&self, k: &Integer) -> Self {
        Self { u: &self.u * k, v: &self.v * k * k, w: &self.w * k * k * k }
    }
}

/// Which condition failed first; checked in this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stage {
    Sum,
    Squares,
    Cubes,
}

impl Stage {
    pub fn as_str(self) -> &'static str {
        match self {
            Stage::Sum => "sum",
            Stage::Squares => "squares",
            Stage::Cubes => "cubes",
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    Pass { triad: Triad, certificate: Certificate },
    Fail { triad: Triad, stage: Stage, value: Integer },
}

impl Verification {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verification::Pass { .. })
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Verification::Pass { certificate, .. } => Some(certificate),
            Verification::Fail { .. } => None,
        }
    }
}

/// Checks `a, b, c` (any order) and returns the certificate or the first
/// failing stage with its non-square value.
pub fn verify_triad(a: &Integer, b: &Integer, c: &Integer) -> Result<Verification> {
    Ok(Triad::new(a.clone(), b.clone(), c.clone())?.verify())
}
