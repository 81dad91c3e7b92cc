use crate::exactnum::Rational;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{op} is undefined for negative input")]
    Negative { op: &'static str },

    #[error("{0} must be positive")]
    NonPositive(&'static str),

    #[error("factor {factor} vanishes at m = {m}")]
    Pole { factor: &'static str, m: Rational },

    #[error("degenerate parameter point: {0}")]
    Degenerate(&'static str),

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("identity failed: {0}")]
    IdentityFailed(String),

    #[error("sum of squares {0} is not a rational square")]
    MissingSquaresCertificate(Rational),

    #[error("point is not on the curve")]
    NotOnCurve,

    #[error("map undefined at this point: {0}")]
    ExceptionalPoint(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cannot parse {kind} from {input:?}")]
    Parse { kind: &'static str, input: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Negative { .. } => "negative",
            Error::NonPositive(_) => "non-positive",
            Error::Pole { .. } => "pole",
            Error::Degenerate(_) => "degenerate",
            Error::ZeroDivisor => "zero-divisor",
            Error::IdentityFailed(_) => "identity-failed",
            Error::MissingSquaresCertificate(_) => "missing-squares-certificate",
            Error::NotOnCurve => "not-on-curve",
            Error::ExceptionalPoint(_) => "exceptional-point",
            Error::InvalidArgument(_) => "invalid-argument",
            Error::Parse { .. } => "parse",
        }
    }
}
