//! Crate-wide error type.

use num_rational::BigRational;

/// Errors shared by every module.
///
/// `PrecisionIndeterminate` and `BudgetExceeded` are ordinary outcomes of
/// finite-precision / bounded-enumeration work and carry enough data for the
/// caller to act on; the CLI maps them to dedicated exit codes.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Syntax error in an expression, place, point, or target literal.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// Violated precondition or out-of-domain argument.
    #[error("domain error: {0}")]
    Domain(String),

    /// A truncated series did not carry enough terms to decide the result.
    /// `lower_bound` is the best exponent lower bound that is known.
    #[error("precision-indeterminate: known terms vanish; exponent >= {lower_bound}")]
    PrecisionIndeterminate { lower_bound: BigRational },

    /// An enumeration hit its configured cap before finishing.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    /// A feasibility precondition failed (e.g. `beta <= 1/R`).
    #[error("infeasible: {0}")]
    Infeasible(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
