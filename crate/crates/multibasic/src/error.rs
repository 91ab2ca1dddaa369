//! Crate-wide error type.
//!
//! Every fallible operation in the library reports one of these variants;
//! none of them carry allocations beyond what is needed to name the
//! offending datum.

use std::fmt;

use crate::lattice::LatticeVector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands live in different variable counts.
    ArityMismatch { left: usize, right: usize },
    /// A variable index was out of range for the given arity.
    VariableIndexOutOfRange { index: usize, arity: usize },
    /// A binomial denominator factor `1 - q^a` with `a = 0` would be zero.
    ZeroExponentFactor,
    /// A denominator factor would specialize to zero under `q_i = 1`.
    VanishingDenominatorFactor { exponent: LatticeVector },
    /// A denominator factor has non-positive height under the truncation
    /// grading, so the geometric expansion does not terminate.
    ZeroHeightDenominatorFactor { exponent: LatticeVector },
    /// No points were supplied where at least one is required.
    EmptyInput,
    /// A coordinate vector has the wrong length.
    DimensionMismatch {
        index: usize,
        expected: usize,
        got: usize,
    },
    /// An input point is a convex combination of the others.
    NotAVertex { index: usize },
    /// A cone required to be pointed contains a line.
    NotPointed,
    /// Simplicial-cone generators are linearly dependent.
    DependentGenerators,
    /// An operation restricted to the nonnegative orthant met a vertex
    /// with a negative coordinate.
    NegativeOrthantViolation { vertex: usize },
    /// A linear form fails to separate two vertices.
    NonGenericLinearForm { first: usize, second: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ArityMismatch { left, right } => {
                write!(f, "arity mismatch: {left} vs {right} variables")
            }
            Error::VariableIndexOutOfRange { index, arity } => {
                write!(f, "variable index {index} out of range for arity {arity}")
            }
            Error::ZeroExponentFactor => {
                write!(
                    f,
                    "binomial factor with zero exponent vector is identically zero"
                )
            }
            Error::VanishingDenominatorFactor { exponent } => {
                write!(f, "denominator factor with exponent {exponent:?} vanishes under the requested specialization")
            }
            Error::ZeroHeightDenominatorFactor { exponent } => {
                write!(f, "denominator factor with exponent {exponent:?} has non-positive height under the truncation grading")
            }
            Error::EmptyInput => write!(f, "at least one point is required"),
            Error::DimensionMismatch {
                index,
                expected,
                got,
            } => {
                write!(
                    f,
                    "point {index} has {got} coordinates, expected {expected}"
                )
            }
            Error::NotAVertex { index } => {
                write!(
                    f,
                    "point {index} is a convex combination of the other points"
                )
            }
            Error::NotPointed => write!(f, "cone contains a line"),
            Error::DependentGenerators => write!(f, "generators are linearly dependent"),
            Error::NegativeOrthantViolation { vertex } => {
                write!(f, "vertex {vertex} has a negative coordinate")
            }
            Error::NonGenericLinearForm { first, second } => {
                write!(
                    f,
                    "linear form takes the same value on vertices {first} and {second}"
                )
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
