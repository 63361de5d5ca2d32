//! Shared error type for every numeric module.

use std::fmt;

/// Errors produced by the numeric kernels and the verification harness.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input outside the domain of the operation (pole, radius of
    /// convergence, negative argument, ...).
    Domain(String),
    /// The term budget ran out before the tail bound reached the requested
    /// tolerance. Carries the best partial result so callers can still
    /// inspect it.
    Convergence {
        value: f64,
        tail_bound: f64,
        terms_used: usize,
    },
    /// An intermediate value landed on the logarithm branch cut.
    Branch(String),
    /// Degenerate polynomial input (vanishing leading coefficient or a
    /// repeated root at a discriminant zero).
    Degenerate(String),
    /// Invalid precision configuration.
    InvalidConfig(String),
    /// Registry lookup failed.
    UnknownIdentity(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Convergence {
                value,
                tail_bound,
                terms_used,
            } => write!(
                f,
                "did not converge: best value {value:.17e} with tail bound {tail_bound:.3e} after {terms_used} terms"
            ),
            Error::Branch(msg) => write!(f, "branch error: {msg}"),
            Error::Degenerate(msg) => write!(f, "degenerate input: {msg}"),
            Error::InvalidConfig(msg) => write!(f, "invalid config: {msg}"),
            Error::UnknownIdentity(id) => write!(f, "unknown identity id: {id}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
