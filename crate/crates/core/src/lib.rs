//! Triads of positive integers whose sum, sum of squares and sum of cubes are
//! all perfect squares: verification, exhaustive search, the parametric
//! family in `m`, its symbolic certification, and new solutions from the
//! group law on the underlying elliptic curve.

pub mod curve;
pub mod error;
pub mod exactnum;
pub mod identities;
pub mod parametric;
pub mod poly;
pub mod search;
pub mod verify;

pub use error::{Error, Result};
pub use exactnum::{Integer, Rational};
