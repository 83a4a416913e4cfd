//! Crate-wide error type.
//!
//! Each variant maps to a stable one-line code (see [`Error::code`]) so that
//! command-line callers and logs can match on errors without parsing the
//! human-readable message.

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Incompatible shapes or an impossible requested dimension.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// An input contained NaN or an infinity.
    #[error("non-finite input: {0}")]
    NonFinite(String),

    /// `K + 1` does not divide the sample size.
    #[error("sample size {n} is not divisible by K + 1 = {groups}; drop {} rows first", n % groups)]
    Divisibility { n: usize, groups: usize },

    /// The test is outside its validity regime (e.g. `p >= n/2`).
    #[error("outside test regime: {0}")]
    Regime(String),

    /// A rank condition on the design failed.
    #[error("rank deficiency: {0}")]
    Rank(String),

    /// The data are numerically degenerate for the requested statistic.
    #[error("degenerate data: {0}")]
    Degenerate(String),

    /// An argument lies outside the mathematical domain of a function.
    #[error("domain error: {0}")]
    Domain(String),

    /// A numerical routine failed to produce a usable result.
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// An invalid configuration value.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// A permutation set is not closed under composition.
    #[error("permutation set not group-closed: {0}")]
    Closure(String),

    /// Malformed input file.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    /// Stable machine-readable code for this error.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Dimension(_) => "DimensionError",
            Error::NonFinite(_) => "NonFiniteInput",
            Error::Divisibility { .. } => "DivisibilityError",
            Error::Regime(_) => "RegimeError",
            Error::Rank(_) => "RankError",
            Error::Degenerate(_) => "DegenerateError",
            Error::Domain(_) => "DomainError",
            Error::Numerical(_) => "NumericalError",
            Error::Config(_) => "ConfigError",
            Error::Closure(_) => "ClosureError",
            Error::Parse { .. } => "ParseError",
        }
    }
}

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_are_stable() {
        assert_eq!(Error::Dimension("x".into()).code(), "DimensionError");
        assert_eq!(
            Error::Divisibility { n: 13, groups: 4 }.code(),
            "DivisibilityError"
        );
        assert_eq!(
            Error::Parse { line: 3, msg: "bad".into() }.code(),
            "ParseError"
        );
    }

    #[test]
    fn divisibility_message_reports_remainder() {
        let e = Error::Divisibility { n: 13, groups: 4 };
        assert!(e.to_string().contains("drop 1 rows"));
    }
}
