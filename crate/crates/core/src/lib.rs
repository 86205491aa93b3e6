//! Exact arithmetic for second-order linear homogeneous recurrences, the
//! determinant identities their solution sequences satisfy, and independent
//! combinatorial counting oracles over restricted words.
//!
//! The crate is organized around a small set of modules:
//!
//! - [`value`]: arbitrary-precision integers and dense integer polynomials
//!   behind the tagged [`RingValue`].
//! - [`recurrence`]: sequence windows from `a[n+1] = x*a[n] + y*a[n-1]`,
//!   the explicit binomial formula, and variable-coefficient variants.
//! - [`identity`]: exact checkers for the determinant identities
//!   (generalized d'Ocagne, Cassini-, Catalan-, Vajda-like, index
//!   reduction, the four-parameter form) plus sequence recovery.
//! - [`words`]: a constraint DSL, a counting automaton, a brute-force
//!   enumerator, and colored-tiling counts that give the sequences their
//!   combinatorial meaning.
//! - [`catalog`]: named presets (Fibonacci, Lucas, Pell, Jacobsthal,
//!   Mersenne, Chebyshev, and friends) binding recurrences to word models
//!   and identity instantiations.
//! - [`fuzz`]: the seeded randomized harness behind the CLI and the test
//!   suites.
//!
//! Everything is exact; no operation rounds or overflows.

pub mod catalog;
pub mod error;
pub mod fuzz;
pub mod identity;
pub mod recurrence;
pub mod value;
pub mod words;

pub use error::{Error, Result};
pub use identity::{Det2, IdentityName, IdentityReport};
pub use recurrence::{RecurrenceSpec, SequenceWindow, VarCoeffSpec};
pub use value::{binomial, ExactInt, IntPoly, RingValue};
pub use words::WordConstraint;
