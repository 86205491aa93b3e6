//! Argument parsing helpers and output schemas for the `recur2` binary.
//!
//! Exact values cross the command line as decimal strings: a scalar flag
//! takes either a single integer (`--x 3`) or a comma-separated ascending
//! coefficient list (`--x 0,2` meaning `2z`). Pair flags (`--b`, `--c`,
//! `--init`) take two members separated by `;`, or a plain `a,b` integer
//! pair when no `;` appears. Window flags for recovery take a comma list
//! of integers or a `;`-separated list of values. The ring is inferred:
//! any multi-coefficient list switches the whole invocation to the
//! polynomial ring, and `--ring poly` forces it for degree-0 inputs.

use serde::{Deserialize, Serialize};

use recur2_core::value::{ExactInt, IntPoly, RingValue};

/// Ring selection for an invocation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RingMode {
    #[default]
    Auto,
    Int,
    Poly,
}

/// A parsed-but-uncommitted value: the coefficient list as written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawValue(pub Vec<ExactInt>);

impl RawValue {
    /// True when the value can only live in the polynomial ring.
    pub fn needs_poly(&self) -> bool {
        self.0.len() > 1
    }

    /// Commits the raw value to a ring.
    pub fn realize(&self, poly: bool) -> RingValue {
        if poly || self.needs_poly() {
            RingValue::Poly(IntPoly::new(self.0.clone()))
        } else {
            RingValue::Int(self.0.first().cloned().unwrap_or_else(|| ExactInt::from(0)))
        }
    }
}

fn parse_decimal(token: &str) -> Result<ExactInt, String> {
    let token = token.trim();
    if token.is_empty() {
        return Err("empty integer".into());
    }
    token
        .parse::<ExactInt>()
        .map_err(|_| format!("invalid integer `{token}`"))
}

/// Parses a scalar flag: one integer or a comma-separated coefficient
/// list in ascending degree order.
pub fn parse_scalar(text: &str) -> Result<RawValue, String> {
    let coeffs = text
        .split(',')
        .map(parse_decimal)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RawValue(coeffs))
}

/// Parses a pair flag: `a;b` with arbitrary values, or `a,b` with two
/// plain integers.
pub fn parse_pair(text: &str) -> Result<(RawValue, RawValue), String> {
    if text.contains(';') {
        let parts: Vec<&str> = text.split(';').collect();
        if parts.len() != 2 {
            return Err(format!(
                "expected two `;`-separated members, found {}",
                parts.len()
            ));
        }
        Ok((parse_scalar(parts[0])?, parse_scalar(parts[1])?))
    } else {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 2 {
            return Err(format!(
                "expected `a,b` or `a;b` with two members, found {} entries",
                parts.len()
            ));
        }
        Ok((
            RawValue(vec![parse_decimal(parts[0])?]),
            RawValue(vec![parse_decimal(parts[1])?]),
        ))
    }
}

/// Parses a window flag: `;`-separated values, or a comma list of plain
/// integers.
pub fn parse_window(text: &str) -> Result<Vec<RawValue>, String> {
    if text.contains(';') {
        text.split(';').map(parse_scalar).collect()
    } else {
        text.split(',')
            .map(|t| parse_decimal(t).map(|v| RawValue(vec![v])))
            .collect()
    }
}

/// Decides the ring for an invocation from the mode flag and everything
/// the user wrote.
pub fn resolve_ring(mode: RingMode, raws: &[&RawValue]) -> Result<bool, String> {
    let needs_poly = raws.iter().any(|r| r.needs_poly());
    match mode {
        RingMode::Auto => Ok(needs_poly),
        RingMode::Poly => Ok(true),
        RingMode::Int => {
            if needs_poly {
                Err("`--ring int` conflicts with a multi-coefficient value".into())
            } else {
                Ok(false)
            }
        }
    }
}

/// JSON shapes emitted by the binary. Parsing one of these and
/// re-serializing it reproduces the bytes.
pub mod output {
    use super::*;

    #[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
    pub struct ExplicitOutput {
        pub x: RingValue,
        pub y: RingValue,
        pub n: u64,
        pub value: RingValue,
    }

    #[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
    pub struct RecoverOutput {
        pub identity: String,
        pub k: u64,
        pub m: u64,
        pub value: RingValue,
    }

    #[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
    pub struct WordsCountOutput {
        pub constraint: String,
        pub n: u64,
        pub count: String,
    }

    #[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
    pub struct WordsEnumerateOutput {
        pub constraint: String,
        pub n: u64,
        pub count: String,
        pub words: Vec<String>,
    }

    #[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
    pub struct TilingsOutput {
        pub n: u64,
        pub colors1: u64,
        pub colors2: u64,
        pub count: String,
    }

    #[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
    pub struct PresetEntry {
        pub id: String,
        pub ring: String,
        pub x: RingValue,
        pub y: RingValue,
        pub init: (RingValue, RingValue),
        #[serde(default, skip_serializing_if = "Option::is_none")]
        pub word_model: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        pub closed_form: Option<String>,
        pub note: String,
    }
}
