use core::fmt;

use crate::weight::WeightKind;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Interval endpoints or weight parameters violate the weight's constraints.
    InvalidInterval {
        kind: Option<WeightKind>,
        a: f64,
        b: f64,
    },
    /// The rational weight's denominator polynomial is not positive on [-1, 1].
    NonPositiveWeight { kind: WeightKind, tau: f64 },
    /// Point must lie strictly inside the support interval.
    OutsideInterval { x: f64, a: f64, b: f64 },
    /// Polynomial degree above the configured cap.
    DegreeCap { degree: usize, cap: usize },
    /// Non-finite input coefficient.
    NonFinite,
    /// An LDL pivot came out non-positive.
    IndefiniteKernel { index: usize, pivot: f64 },
    /// Basis expansion or kernel built for a different weight than the one supplied.
    WeightMismatch,
    /// The closed-form value and the diagonalised sum disagree.
    PathMismatch { closed_form: f64, diagonal: f64 },
    /// A polynomial index outside the operation's domain.
    InvalidIndex { n: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInterval { kind, a, b } => match kind {
                Some(k) => write!(
                    f,
                    "{} requires {} (got a={}, b={})",
                    k.name(),
                    k.constraint(),
                    a,
                    b
                ),
                None => write!(f, "interval requires a < b (got a={}, b={})", a, b),
            },
            Error::NonPositiveWeight { kind, tau } => write!(
                f,
                "{} weight denominator is not positive at tau={}",
                kind.name(),
                tau
            ),
            Error::OutsideInterval { x, a, b } => {
                write!(f, "point {} is not strictly inside ({}, {})", x, a, b)
            }
            Error::DegreeCap { degree, cap } => {
                write!(f, "polynomial degree {} exceeds the cap {}", degree, cap)
            }
            Error::NonFinite => write!(f, "polynomial coefficients must be finite"),
            Error::IndefiniteKernel { index, pivot } => write!(
                f,
                "kernel matrix is not positive definite (pivot {} = {})",
                index, pivot
            ),
            Error::WeightMismatch => write!(f, "expansion and kernel belong to different weights"),
            Error::PathMismatch {
                closed_form,
                diagonal,
            } => write!(
                f,
                "closed-form variance {} disagrees with diagonal form {}",
                closed_form, diagonal
            ),
            Error::InvalidIndex { n } => write!(f, "index {} outside the operation's domain", n),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
