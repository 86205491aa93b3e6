//! Second-order linear homogeneous recurrences over a fixed ring.
//!
//! A [`RecurrenceSpec`] fixes coefficients `(x, y)` and an initial pair and
//! generates exact sequence windows via `a[n+1] = x*a[n] + y*a[n-1]`. The
//! canonical companion sequence starts from `(0, 1)`. [`explicit_term`]
//! evaluates the same canonical terms through the binomial sum
//! `a[n] = sum_k C(n-1-k, k) * x^(n-2k-1) * y^k`, giving a second,
//! independent route to every value. [`VarCoeffSpec`] generalizes the
//! coefficients to per-index windows `u`, `v`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::value::{binomial, RingValue};

/// Constant-coefficient recurrence specification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceSpec {
    x: RingValue,
    y: RingValue,
    init: (RingValue, RingValue),
}

impl RecurrenceSpec {
    /// Validates that all four values share one ring tag and that `y` is
    /// nonzero (a zero `y` degenerates to a first-order recurrence).
    pub fn new(x: RingValue, y: RingValue, init: (RingValue, RingValue)) -> Result<Self> {
        for v in [&y, &init.0, &init.1] {
            if !x.same_tag(v) {
                return Err(Error::TagMismatch {
                    left: x.tag(),
                    right: v.tag(),
                });
            }
        }
        if y.is_zero() {
            return Err(Error::DegenerateCoefficient);
        }
        Ok(RecurrenceSpec { x, y, init })
    }

    /// The canonical sequence for `(x, y)`: initial pair `(0, 1)`.
    pub fn canonical(x: RingValue, y: RingValue) -> Result<Self> {
        let init = (x.zero_like(), x.one_like());
        Self::new(x, y, init)
    }

    pub fn x(&self) -> &RingValue {
        &self.x
    }

    pub fn y(&self) -> &RingValue {
        &self.y
    }

    pub fn init(&self) -> &(RingValue, RingValue) {
        &self.init
    }
}

/// Variable-coefficient recurrence `b[n+1] = u[n]*b[n] + v[n-1]*b[n-1]`
/// with finite coefficient windows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarCoeffSpec {
    u: Vec<RingValue>,
    v: Vec<RingValue>,
    init: (RingValue, RingValue),
}

impl VarCoeffSpec {
    /// All coefficient entries and both initial values must share one tag.
    /// Window lengths are checked later, at generation time, against the
    /// indices actually requested.
    pub fn new(u: Vec<RingValue>, v: Vec<RingValue>, init: (RingValue, RingValue)) -> Result<Self> {
        let reference = &init.0;
        for value in u.iter().chain(v.iter()).chain([&init.1]) {
            if !reference.same_tag(value) {
                return Err(Error::TagMismatch {
                    left: reference.tag(),
                    right: value.tag(),
                });
            }
        }
        Ok(VarCoeffSpec { u, v, init })
    }

    /// Same coefficient windows, different initial pair.
    pub fn with_init(&self, init: (RingValue, RingValue)) -> Result<Self> {
        Self::new(self.u.clone(), self.v.clone(), init)
    }

    pub fn u(&self) -> &[RingValue] {
        &self.u
    }

    pub fn v(&self) -> &[RingValue] {
        &self.v
    }

    pub fn init(&self) -> &(RingValue, RingValue) {
        &self.init
    }

    fn u_at(&self, i: usize) -> Result<&RingValue> {
        self.u
            .get(i)
            .ok_or(Error::InsufficientCoefficients { window: 'u', index: i })
    }

    fn v_at(&self, i: usize) -> Result<&RingValue> {
        self.v
            .get(i)
            .ok_or(Error::InsufficientCoefficients { window: 'v', index: i })
    }
}

/// Contiguous run of exact sequence values for indices `lo..lo+len`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceWindow {
    pub lo: usize,
    pub values: Vec<RingValue>,
}

impl SequenceWindow {
    /// Value at the absolute sequence index `n`, if the window covers it.
    pub fn at(&self, n: usize) -> Option<&RingValue> {
        n.checked_sub(self.lo).and_then(|i| self.values.get(i))
    }

    /// Drops every value below the absolute index `from`.
    pub fn slice_from(&self, from: usize) -> SequenceWindow {
        let skip = from.saturating_sub(self.lo);
        SequenceWindow {
            lo: self.lo + skip.min(self.values.len()),
            values: self.values.iter().skip(skip).cloned().collect(),
        }
    }
}

/// Iterates the recurrence from the initial pair, producing indices
/// `0..=n_max` exactly.
pub fn generate(spec: &RecurrenceSpec, n_max: usize) -> Result<SequenceWindow> {
    if n_max < 1 {
        return Err(Error::IndexConstraint(
            "generate requires n_max >= 1".into(),
        ));
    }
    let mut values = Vec::with_capacity(n_max + 1);
    values.push(spec.init.0.clone());
    values.push(spec.init.1.clone());
    for n in 1..n_max {
        let next = spec
            .x
            .mul(&values[n])?
            .add(&spec.y.mul(&values[n - 1])?)?;
        values.push(next);
    }
    Ok(SequenceWindow { lo: 0, values })
}

/// Canonical-sequence term by the explicit binomial formula. Returns the
/// ring's zero for `n = 0` (empty sum), matching the canonical initial
/// value.
pub fn explicit_term(x: &RingValue, y: &RingValue, n: usize) -> Result<RingValue> {
    if !x.same_tag(y) {
        return Err(Error::TagMismatch {
            left: x.tag(),
            right: y.tag(),
        });
    }
    if y.is_zero() {
        return Err(Error::DegenerateCoefficient);
    }
    if n == 0 {
        return Ok(x.zero_like());
    }
    // Precompute the powers once; the term loop then only multiplies.
    let x_pows = power_table(x, n - 1);
    let y_pows = power_table(y, (n - 1) / 2);
    let mut sum = x.zero_like();
    for k in 0..=(n - 1) / 2 {
        let coeff = RingValue::Int(binomial((n - 1 - k) as u64, k as i64));
        let coeff = match x {
            RingValue::Int(_) => coeff,
            RingValue::Poly(_) => coeff.to_polynomial(),
        };
        let term = coeff
            .mul(&x_pows[n - 2 * k - 1])?
            .mul(&y_pows[k])?;
        sum = sum.add(&term)?;
    }
    Ok(sum)
}

fn power_table(base: &RingValue, up_to: usize) -> Vec<RingValue> {
    let mut pows = Vec::with_capacity(up_to + 1);
    pows.push(base.one_like());
    for i in 0..up_to {
        // Same tag throughout, so the multiplication cannot fail.
        pows.push(pows[i].mul(base).expect("same-tag power"));
    }
    pows
}

/// Iterates the variable-coefficient recurrence, producing indices
/// `0..=n_max`. Requires `u` entries through `n_max - 1` and `v` entries
/// through `n_max - 2`.
pub fn generate_var(spec: &VarCoeffSpec, n_max: usize) -> Result<SequenceWindow> {
    if n_max < 1 {
        return Err(Error::IndexConstraint(
            "generate_var requires n_max >= 1".into(),
        ));
    }
    let mut values = Vec::with_capacity(n_max + 1);
    values.push(spec.init.0.clone());
    values.push(spec.init.1.clone());
    for n in 1..n_max {
        let next = spec
            .u_at(n)?
            .mul(&values[n])?
            .add(&spec.v_at(n - 1)?.mul(&values[n - 1])?)?;
        values.push(next);
    }
    Ok(SequenceWindow { lo: 0, values })
}

/// The auxiliary sequence attached to a shift `k` of the coefficient
/// windows: `a[0] = 0`, `a[1] = 1`, `a[2] = u[k+1]`, and for `i > 2`
/// `a[i] = v[k+i-2]*a[i-2] + u[k+i-1]*a[i-1]`. Produces `len` terms.
pub fn derived_shifted(spec: &VarCoeffSpec, k: usize, len: usize) -> Result<SequenceWindow> {
    if len < 1 {
        return Err(Error::IndexConstraint(
            "derived_shifted requires len >= 1".into(),
        ));
    }
    let zero = spec.init.0.zero_like();
    let one = spec.init.0.one_like();
    let mut values = Vec::with_capacity(len);
    values.push(zero);
    if len > 1 {
        values.push(one);
    }
    if len > 2 {
        // a[2] = u[k+1] directly; v[k] would only multiply a[0] = 0.
        values.push(spec.u_at(k + 1)?.clone());
    }
    for i in 3..len {
        let next = spec
            .v_at(k + i - 2)?
            .mul(&values[i - 2])?
            .add(&spec.u_at(k + i - 1)?.mul(&values[i - 1])?)?;
        values.push(next);
    }
    Ok(SequenceWindow { lo: 0, values })
}
