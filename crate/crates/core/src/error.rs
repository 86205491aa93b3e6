//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Integer and polynomial operands were mixed in one operation.
    #[error("ring tag mismatch: {left} vs {right}")]
    TagMismatch {
        left: &'static str,
        right: &'static str,
    },

    /// The recurrence coefficient `y` is zero, which collapses the
    /// second-order recurrence to first order.
    #[error("degenerate coefficient: y must be nonzero")]
    DegenerateCoefficient,

    /// A variable-coefficient window does not reach an index the
    /// generation needs.
    #[error("coefficient window `{window}` has no entry at index {index}")]
    InsufficientCoefficients { window: char, index: usize },

    /// An index parameter violates the constraints stated with an identity.
    #[error("index constraint violated: {0}")]
    IndexConstraint(String),

    /// The determinant of the initial pairs is zero, so the sequence
    /// cannot be recovered from the windows.
    #[error("singular initial pair: b0*c1 - b1*c0 = 0")]
    SingularInitialPair,

    /// A division that must be exact left a remainder; the input windows
    /// are inconsistent with the recurrence.
    #[error("inexact division: input windows are inconsistent")]
    InexactDivision,

    /// Constraint DSL syntax error, with the byte offset of the offending
    /// character in the original input.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// A forbidden-factor or even-run letter is not part of the alphabet.
    #[error("letter {letter} out of range for alphabet of size {sigma}")]
    LetterOutOfRange { letter: u32, sigma: u8 },

    /// A constraint spec did not start with the mandatory alphabet clause.
    #[error("constraint must start with an `alphabet=` clause")]
    MissingAlphabet,

    /// No word model exists for the given coefficient pair.
    #[error("unsupported parameters: x={x}, y={y}")]
    UnsupportedParams { x: i64, y: i64 },

    /// Brute-force enumeration would exceed the configured cap.
    #[error("enumeration of {candidates} candidate words exceeds cap {cap}")]
    CapExceeded { candidates: String, cap: u64 },

    /// Preset lookup by an unrecognized name.
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    /// An identity evaluation referenced a witness that is not present.
    #[error("missing witness `{0}`")]
    MissingWitness(String),
}

pub type Result<T> = std::result::Result<T, Error>;
