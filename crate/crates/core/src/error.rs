use std::fmt;

/// Errors produced by graph builders, formula evaluators and series expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A dimension below the smallest value the operation is defined for.
    DimensionTooSmall {
        what: &'static str,
        n: usize,
        min: usize,
    },
    /// A graph build refused because the vertex set grows exponentially.
    /// Pass the force flag (or call the `_forced` builder) to override.
    DimensionTooLarge { n: usize, limit: usize },
    /// A coordinate outside 1..=n.
    CoordinateOutOfRange { coord: usize, len: usize },
    /// An edge whose endpoints or orientation do not belong to the graph.
    EdgeNotInGraph,
    /// A denominator whose constant term is not ±1, so the power series
    /// coefficients need not be integers.
    NonUnitConstantTerm,
    /// A denominator with constant term zero has no power series expansion.
    ZeroConstantTerm,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionTooSmall { what, n, min } => {
                write!(
                    f,
                    "{what} is not defined for n = {n} (smallest valid n is {min})"
                )
            }
            Error::DimensionTooLarge { n, limit } => {
                write!(
                    f,
                    "n = {n} exceeds the build guard ({limit}); the graph has \
                     exponentially many vertices, use the force flag to override"
                )
            }
            Error::CoordinateOutOfRange { coord, len } => {
                write!(f, "coordinate {coord} is outside 1..={len}")
            }
            Error::EdgeNotInGraph => write!(f, "edge does not belong to the graph"),
            Error::NonUnitConstantTerm => {
                write!(
                    f,
                    "denominator constant term must be 1 or -1 for integer coefficients"
                )
            }
            Error::ZeroConstantTerm => {
                write!(
                    f,
                    "denominator constant term is zero; no power series expansion exists"
                )
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
