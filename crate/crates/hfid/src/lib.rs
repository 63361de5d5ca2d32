//! Special-function numerics with certified truncation bounds, plus a
//! batch verifier for a registry of hypergeometric / central-binomial
//! series identities.
//!
//! The crate is organized as a small stack:
//!
//! * [`numkit`] — complex arithmetic with a fixed branch convention,
//!   compensated summation, exact binomials, validated constants.
//! * [`polylog`] — the complex dilogarithm and its reflection formulas.
//! * [`series`] — term-recurrence series evaluators with analytic tail
//!   bounds.
//! * [`roots`] — cubic/quartic root extraction with Vieta certificates.
//! * [`closedform`] — closed-form right-hand sides and root-decomposition
//!   evaluators.
//! * [`quadrature`] — adaptive Gauss–Kronrod integration oracles.
//! * [`hyper`] — generic pFq partial-sum evaluation.
//! * [`harness`] — the identity registry, verification engine and report
//!   generation backing the `hfid` executable.

// Constants are shipped with more digits than f64 keeps, and domain
// guards use negated comparisons so NaN inputs fall into the error path.
#![allow(clippy::excessive_precision)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod closedform;
pub mod error;
pub mod harness;
pub mod hyper;
pub mod numkit;
pub mod polylog;
pub mod quadrature;
pub mod roots;
pub mod series;

pub use error::{Error, Result};
pub use numkit::{ComplexValue, PrecisionConfig};
