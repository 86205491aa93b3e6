//! Exact checkers for the determinant identities satisfied by sequences of
//! a common second-order recurrence.
//!
//! Every checker follows one contract: it takes the coefficient pair
//! `(x, y)`, the initial pairs of the sequences the identity names, and the
//! integer index parameters; it regenerates the needed windows, reads off
//! the determinant entries as named witnesses, computes both sides exactly,
//! and returns an [`IdentityReport`] whose `holds` flag is exact equality.
//! Both sides are always evaluated from the witness map through
//! [`evaluate_from_witnesses`], so a report's witnesses are sufficient to
//! reproduce its verdict (the mutation harness relies on this).
//!
//! The identities themselves, with `(a)` the canonical `(0, 1)` sequence:
//!
//! - generalized d'Ocagne: `|b_k b_{k+m}; c_k c_{k+m}| = (-y)^k * a_m * D0`
//!   where `D0 = |b_0 b_1; c_0 c_1|`
//! - Cassini-like: the `m = 1` case, `|b_k b_{k+1}; c_k c_{k+1}| = (-y)^k * D0`
//! - index reduction: shifting both rows down by `p` multiplies the
//!   determinant by `(-y)^p`
//! - reduced d'Ocagne: `a_m * D0 = |b_0 b_m; c_0 c_m|`
//! - four-parameter: `|b_{k+p} b_{m+p}; a_{k+q} a_{m+q}| = (-y)^{k+q} * a_{m-k} * b_{p-q}`
//! - Vajda-like: `|b_{k+p} b_{k+m+p}; a_k a_{k+m}| = (-y)^k * a_m * b_p`
//! - Catalan-like: `a_n^2 - a_{n-r} * a_{n+r} = (-y)^{n-r} * a_r^2`
//! - variable-coefficient form: `|b_k b_{n+2}; c_k c_{n+2}| =
//!   (-1)^k * v_0 * v_1 ... v_{k-1} * a_{n-k+2} * D0` with `(a)` the
//!   shifted auxiliary sequence of [`derived_shifted`]

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::recurrence::{derived_shifted, generate, generate_var, RecurrenceSpec, VarCoeffSpec};
use crate::value::RingValue;

/// The determinant identities the engine can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityName {
    Docagne,
    Prop8,
    Cassini,
    IndexReduction,
    ReducedDocagne,
    FourParam,
    Vajda,
    Catalan,
}

impl IdentityName {
    pub const ALL: [IdentityName; 8] = [
        IdentityName::Docagne,
        IdentityName::Prop8,
        IdentityName::Cassini,
        IdentityName::IndexReduction,
        IdentityName::ReducedDocagne,
        IdentityName::FourParam,
        IdentityName::Vajda,
        IdentityName::Catalan,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            IdentityName::Docagne => "docagne",
            IdentityName::Prop8 => "prop8",
            IdentityName::Cassini => "cassini",
            IdentityName::IndexReduction => "index-reduction",
            IdentityName::ReducedDocagne => "reduced-docagne",
            IdentityName::FourParam => "four-param",
            IdentityName::Vajda => "vajda",
            IdentityName::Catalan => "catalan",
        }
    }
}

impl std::fmt::Display for IdentityName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// 2x2 determinant `a11*a22 - a12*a21` over one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Det2 {
    pub a11: RingValue,
    pub a12: RingValue,
    pub a21: RingValue,
    pub a22: RingValue,
}

impl Det2 {
    pub fn new(a11: RingValue, a12: RingValue, a21: RingValue, a22: RingValue) -> Self {
        Det2 { a11, a12, a21, a22 }
    }

    pub fn value(&self) -> Result<RingValue> {
        self.a11.mul(&self.a22)?.sub(&self.a12.mul(&self.a21)?)
    }
}

/// Outcome of one identity check: both exact sides, the verdict, and every
/// sequence term the checker read.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: IdentityName,
    pub params: BTreeMap<String, u64>,
    pub lhs: RingValue,
    pub rhs: RingValue,
    pub holds: bool,
    pub witnesses: BTreeMap<String, RingValue>,
}

impl IdentityReport {
    fn from_sides(
        identity: IdentityName,
        params: BTreeMap<String, u64>,
        witnesses: BTreeMap<String, RingValue>,
        sides: (RingValue, RingValue),
    ) -> Self {
        let holds = sides.0 == sides.1;
        IdentityReport {
            identity,
            params,
            lhs: sides.0,
            rhs: sides.1,
            holds,
            witnesses,
        }
    }
}

/// Witness key for the term of sequence `seq` at index `i`.
pub fn witness_key(seq: char, i: usize) -> String {
    format!("{seq}_{i}")
}

fn get(witnesses: &BTreeMap<String, RingValue>, seq: char, i: usize) -> Result<&RingValue> {
    let key = witness_key(seq, i);
    witnesses.get(&key).ok_or(Error::MissingWitness(key))
}

fn params(pairs: &[(&str, usize)]) -> BTreeMap<String, u64> {
    pairs
        .iter()
        .map(|&(name, value)| (name.to_string(), value as u64))
        .collect()
}

fn param(map: &BTreeMap<String, u64>, name: &str) -> Result<usize> {
    map.get(name)
        .map(|&v| v as usize)
        .ok_or_else(|| Error::MissingWitness(format!("parameter `{name}`")))
}

fn checked_gap(hi: usize, lo: usize, constraint: &str) -> Result<usize> {
    hi.checked_sub(lo)
        .ok_or_else(|| Error::IndexConstraint(constraint.to_string()))
}

/// `(-y)^k` in `y`'s ring.
fn neg_pow(y: &RingValue, k: usize) -> RingValue {
    y.neg().pow(k as u64)
}

/// Computes both sides of an identity from its parameter map and witness
/// map alone. The public checkers and the mutation harness share this
/// path, so a perturbed witness re-evaluates exactly as the original did.
/// `v_window` is only consulted for the variable-coefficient identity.
pub fn evaluate_from_witnesses(
    identity: IdentityName,
    y: &RingValue,
    params: &BTreeMap<String, u64>,
    witnesses: &BTreeMap<String, RingValue>,
    v_window: Option<&[RingValue]>,
) -> Result<(RingValue, RingValue)> {
    let w = witnesses;
    match identity {
        IdentityName::Docagne => {
            let (k, m) = (param(params, "k")?, param(params, "m")?);
            let lhs = det(w, 'b', k, 'b', k + m, 'c', k, 'c', k + m)?;
            let rhs = neg_pow(y, k)
                .mul(get(w, 'a', m)?)?
                .mul(&initial_det(w)?)?;
            Ok((lhs, rhs))
        }
        IdentityName::Prop8 => {
            let (k, n) = (param(params, "k")?, param(params, "n")?);
            let v = v_window.ok_or(Error::MissingWitness("v window".into()))?;
            if v.len() < k {
                return Err(Error::InsufficientCoefficients {
                    window: 'v',
                    index: v.len(),
                });
            }
            let mut factor = y.one_like();
            for v_j in v.iter().take(k) {
                factor = factor.mul(v_j)?;
            }
            if k % 2 == 1 {
                factor = factor.neg();
            }
            let gap = checked_gap(n + 2, k, "prop8 requires k <= n + 2")?;
            let lhs = det(w, 'b', k, 'b', n + 2, 'c', k, 'c', n + 2)?;
            let rhs = factor.mul(get(w, 'a', gap)?)?.mul(&initial_det(w)?)?;
            Ok((lhs, rhs))
        }
        IdentityName::Cassini => {
            let k = param(params, "k")?;
            let lhs = det(w, 'b', k, 'b', k + 1, 'c', k, 'c', k + 1)?;
            let rhs = neg_pow(y, k).mul(&initial_det(w)?)?;
            Ok((lhs, rhs))
        }
        IdentityName::IndexReduction => {
            let (k, m, p) = (
                param(params, "k")?,
                param(params, "m")?,
                param(params, "p")?,
            );
            let base = checked_gap(k, p, "index reduction requires k >= p")?;
            let lhs = det(w, 'b', k, 'b', k + m, 'c', k, 'c', k + m)?;
            let reduced = det(w, 'b', base, 'b', base + m, 'c', base, 'c', base + m)?;
            Ok((lhs, neg_pow(y, p).mul(&reduced)?))
        }
        IdentityName::ReducedDocagne => {
            let m = param(params, "m")?;
            let lhs = get(w, 'a', m)?.mul(&initial_det(w)?)?;
            let rhs = det(w, 'b', 0, 'b', m, 'c', 0, 'c', m)?;
            Ok((lhs, rhs))
        }
        IdentityName::FourParam => {
            let (k, m, p, q) = (
                param(params, "k")?,
                param(params, "m")?,
                param(params, "p")?,
                param(params, "q")?,
            );
            let m_gap = checked_gap(m, k, "four-param requires m >= k")?;
            let p_gap = checked_gap(p, q, "four-param requires p >= q")?;
            let lhs = det(w, 'b', k + p, 'b', m + p, 'a', k + q, 'a', m + q)?;
            let rhs = neg_pow(y, k + q)
                .mul(get(w, 'a', m_gap)?)?
                .mul(get(w, 'b', p_gap)?)?;
            Ok((lhs, rhs))
        }
        IdentityName::Vajda => {
            let (k, m, p) = (
                param(params, "k")?,
                param(params, "m")?,
                param(params, "p")?,
            );
            let lhs = det(w, 'b', k + p, 'b', k + m + p, 'a', k, 'a', k + m)?;
            let rhs = neg_pow(y, k)
                .mul(get(w, 'a', m)?)?
                .mul(get(w, 'b', p)?)?;
            Ok((lhs, rhs))
        }
        IdentityName::Catalan => {
            let (n, r) = (param(params, "n")?, param(params, "r")?);
            let gap = checked_gap(n, r, "catalan requires n >= r")?;
            let lhs = det(w, 'a', n, 'a', n + r, 'a', gap, 'a', n)?;
            let a_r = get(w, 'a', r)?;
            let rhs = neg_pow(y, gap).mul(&a_r.mul(a_r)?)?;
            Ok((lhs, rhs))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn det(
    w: &BTreeMap<String, RingValue>,
    s11: char,
    i11: usize,
    s12: char,
    i12: usize,
    s21: char,
    i21: usize,
    s22: char,
    i22: usize,
) -> Result<RingValue> {
    Det2::new(
        get(w, s11, i11)?.clone(),
        get(w, s12, i12)?.clone(),
        get(w, s21, i21)?.clone(),
        get(w, s22, i22)?.clone(),
    )
    .value()
}

fn initial_det(w: &BTreeMap<String, RingValue>) -> Result<RingValue> {
    det(w, 'b', 0, 'b', 1, 'c', 0, 'c', 1)
}

struct WitnessBuilder<'a> {
    map: BTreeMap<String, RingValue>,
    windows: BTreeMap<char, &'a crate::recurrence::SequenceWindow>,
}

impl<'a> WitnessBuilder<'a> {
    fn new() -> Self {
        WitnessBuilder {
            map: BTreeMap::new(),
            windows: BTreeMap::new(),
        }
    }

    fn window(mut self, seq: char, window: &'a crate::recurrence::SequenceWindow) -> Self {
        self.windows.insert(seq, window);
        self
    }

    fn read(&mut self, seq: char, i: usize) -> Result<()> {
        let window = self
            .windows
            .get(&seq)
            .ok_or_else(|| Error::MissingWitness(format!("window `{seq}`")))?;
        let value = window
            .at(i)
            .ok_or_else(|| Error::MissingWitness(witness_key(seq, i)))?;
        self.map.insert(witness_key(seq, i), value.clone());
        Ok(())
    }

    fn read_all(&mut self, entries: &[(char, usize)]) -> Result<()> {
        for &(seq, i) in entries {
            self.read(seq, i)?;
        }
        Ok(())
    }
}

fn canonical_window(
    x: &RingValue,
    y: &RingValue,
    n_max: usize,
) -> Result<crate::recurrence::SequenceWindow> {
    let spec = RecurrenceSpec::canonical(x.clone(), y.clone())?;
    generate(&spec, n_max.max(1))
}

fn named_window(
    x: &RingValue,
    y: &RingValue,
    init: &(RingValue, RingValue),
    n_max: usize,
) -> Result<crate::recurrence::SequenceWindow> {
    let spec = RecurrenceSpec::new(x.clone(), y.clone(), init.clone())?;
    generate(&spec, n_max.max(1))
}

/// Generalized d'Ocagne identity for two sequences `(b)`, `(c)` of the
/// same recurrence, with arbitrary index parameters `k`, `m`.
pub fn check_docagne_general(
    x: &RingValue,
    y: &RingValue,
    b_init: &(RingValue, RingValue),
    c_init: &(RingValue, RingValue),
    k: usize,
    m: usize,
) -> Result<IdentityReport> {
    let b = named_window(x, y, b_init, k + m)?;
    let c = named_window(x, y, c_init, k + m)?;
    let a = canonical_window(x, y, m)?;
    let mut wb = WitnessBuilder::new().window('b', &b).window('c', &c).window('a', &a);
    wb.read_all(&[
        ('b', k),
        ('b', k + m),
        ('c', k),
        ('c', k + m),
        ('b', 0),
        ('b', 1),
        ('c', 0),
        ('c', 1),
        ('a', m),
    ])?;
    let p = params(&[("k", k), ("m", m)]);
    let sides = evaluate_from_witnesses(IdentityName::Docagne, y, &p, &wb.map, None)?;
    Ok(IdentityReport::from_sides(
        IdentityName::Docagne,
        p,
        wb.map,
        sides,
    ))
}

/// Variable-coefficient determinant identity. The `coeffs` windows supply
/// `u`, `v`; `b_init` and `c_init` pick the two solution sequences. The
/// scalar factor uses the product `v_0 * v_1 * ... * v_{k-1}`, which is
/// the convention consistent with the recurrence's own indexing (see the
/// regression test pinning the `k = 1` counterexample to the shifted
/// product).
pub fn check_prop8(
    coeffs: &VarCoeffSpec,
    b_init: &(RingValue, RingValue),
    c_init: &(RingValue, RingValue),
    k: usize,
    n: usize,
) -> Result<IdentityReport> {
    if k > n + 2 {
        return Err(Error::IndexConstraint(format!(
            "prop8 requires k <= n + 2 (k = {k}, n = {n})"
        )));
    }
    let b = generate_var(&coeffs.with_init(b_init.clone())?, n + 2)?;
    let c = generate_var(&coeffs.with_init(c_init.clone())?, n + 2)?;
    let a = derived_shifted(coeffs, k, n + 3 - k)?;
    for j in 0..k {
        if coeffs.v().len() <= j {
            return Err(Error::InsufficientCoefficients { window: 'v', index: j });
        }
    }
    let mut wb = WitnessBuilder::new().window('b', &b).window('c', &c).window('a', &a);
    wb.read_all(&[
        ('b', k),
        ('b', n + 2),
        ('c', k),
        ('c', n + 2),
        ('b', 0),
        ('b', 1),
        ('c', 0),
        ('c', 1),
        ('a', n + 2 - k),
    ])?;
    let p = params(&[("k", k), ("n", n)]);
    let y_like = b_init.0.one_like();
    let sides = evaluate_from_witnesses(IdentityName::Prop8, &y_like, &p, &wb.map, Some(coeffs.v()))?;
    Ok(IdentityReport::from_sides(
        IdentityName::Prop8,
        p,
        wb.map,
        sides,
    ))
}

/// Cassini-like identity, the `m = 1` determinant with the `a_1 = 1`
/// factor folded away.
pub fn check_cassini(
    x: &RingValue,
    y: &RingValue,
    b_init: &(RingValue, RingValue),
    c_init: &(RingValue, RingValue),
    k: usize,
) -> Result<IdentityReport> {
    let b = named_window(x, y, b_init, k + 1)?;
    let c = named_window(x, y, c_init, k + 1)?;
    let mut wb = WitnessBuilder::new().window('b', &b).window('c', &c);
    wb.read_all(&[
        ('b', k),
        ('b', k + 1),
        ('c', k),
        ('c', k + 1),
        ('b', 0),
        ('b', 1),
        ('c', 0),
        ('c', 1),
    ])?;
    let p = params(&[("k", k)]);
    let sides = evaluate_from_witnesses(IdentityName::Cassini, y, &p, &wb.map, None)?;
    Ok(IdentityReport::from_sides(
        IdentityName::Cassini,
        p,
        wb.map,
        sides,
    ))
}

/// Index reduction: lowering both determinant rows by `p` multiplies the
/// value by `(-y)^p`. Requires `k >= p`.
pub fn check_index_reduction(
    x: &RingValue,
    y: &RingValue,
    b_init: &(RingValue, RingValue),
    c_init: &(RingValue, RingValue),
    k: usize,
    m: usize,
    p: usize,
) -> Result<IdentityReport> {
    if p > k {
        return Err(Error::IndexConstraint(format!(
            "index reduction requires k >= p (k = {k}, p = {p})"
        )));
    }
    let b = named_window(x, y, b_init, k + m)?;
    let c = named_window(x, y, c_init, k + m)?;
    let mut wb = WitnessBuilder::new().window('b', &b).window('c', &c);
    wb.read_all(&[
        ('b', k),
        ('b', k + m),
        ('c', k),
        ('c', k + m),
        ('b', k - p),
        ('b', k - p + m),
        ('c', k - p),
        ('c', k - p + m),
    ])?;
    let pmap = params(&[("k", k), ("m", m), ("p", p)]);
    let sides = evaluate_from_witnesses(IdentityName::IndexReduction, y, &pmap, &wb.map, None)?;
    Ok(IdentityReport::from_sides(
        IdentityName::IndexReduction,
        pmap,
        wb.map,
        sides,
    ))
}

/// Reduced d'Ocagne: `a_m * |b_0 b_1; c_0 c_1| = |b_0 b_m; c_0 c_m|`.
pub fn check_reduced_docagne(
    x: &RingValue,
    y: &RingValue,
    b_init: &(RingValue, RingValue),
    c_init: &(RingValue, RingValue),
    m: usize,
) -> Result<IdentityReport> {
    let b = named_window(x, y, b_init, m)?;
    let c = named_window(x, y, c_init, m)?;
    let a = canonical_window(x, y, m)?;
    let mut wb = WitnessBuilder::new().window('b', &b).window('c', &c).window('a', &a);
    wb.read_all(&[
        ('b', 0),
        ('b', 1),
        ('c', 0),
        ('c', 1),
        ('b', m),
        ('c', m),
        ('a', m),
    ])?;
    let p = params(&[("m", m)]);
    let sides = evaluate_from_witnesses(IdentityName::ReducedDocagne, y, &p, &wb.map, None)?;
    Ok(IdentityReport::from_sides(
        IdentityName::ReducedDocagne,
        p,
        wb.map,
        sides,
    ))
}

/// Four-parameter identity relating a named sequence `(b)` and the
/// canonical sequence `(a)`. Requires `m >= k` and `p >= q`.
pub fn check_four_param(
    x: &RingValue,
    y: &RingValue,
    b_init: &(RingValue, RingValue),
    k: usize,
    m: usize,
    p: usize,
    q: usize,
) -> Result<IdentityReport> {
    if m < k || p < q {
        return Err(Error::IndexConstraint(format!(
            "four-param requires m >= k and p >= q (k = {k}, m = {m}, p = {p}, q = {q})"
        )));
    }
    let b = named_window(x, y, b_init, m + p)?;
    let a = canonical_window(x, y, m + q)?;
    let mut wb = WitnessBuilder::new().window('b', &b).window('a', &a);
    wb.read_all(&[
        ('b', k + p),
        ('b', m + p),
        ('a', k + q),
        ('a', m + q),
        ('a', m - k),
        ('b', p - q),
    ])?;
    let pmap = params(&[("k", k), ("m", m), ("p", p), ("q", q)]);
    let sides = evaluate_from_witnesses(IdentityName::FourParam, y, &pmap, &wb.map, None)?;
    Ok(IdentityReport::from_sides(
        IdentityName::FourParam,
        pmap,
        wb.map,
        sides,
    ))
}

/// Vajda-like identity with shifts `k`, `m`, `p`.
pub fn check_vajda(
    x: &RingValue,
    y: &RingValue,
    b_init: &(RingValue, RingValue),
    k: usize,
    m: usize,
    p: usize,
) -> Result<IdentityReport> {
    let b = named_window(x, y, b_init, k + m + p)?;
    let a = canonical_window(x, y, k + m)?;
    let mut wb = WitnessBuilder::new().window('b', &b).window('a', &a);
    wb.read_all(&[
        ('b', k + p),
        ('b', k + m + p),
        ('a', k),
        ('a', k + m),
        ('a', m),
        ('b', p),
    ])?;
    let pmap = params(&[("k", k), ("m", m), ("p", p)]);
    let sides = evaluate_from_witnesses(IdentityName::Vajda, y, &pmap, &wb.map, None)?;
    Ok(IdentityReport::from_sides(
        IdentityName::Vajda,
        pmap,
        wb.map,
        sides,
    ))
}

/// Catalan-like identity on the canonical sequence. Requires `n >= r`.
pub fn check_catalan(x: &RingValue, y: &RingValue, n: usize, r: usize) -> Result<IdentityReport> {
    if r > n {
        return Err(Error::IndexConstraint(format!(
            "catalan requires n >= r (n = {n}, r = {r})"
        )));
    }
    let a = canonical_window(x, y, n + r)?;
    let mut wb = WitnessBuilder::new().window('a', &a);
    wb.read_all(&[('a', n), ('a', n - r), ('a', n + r), ('a', r)])?;
    let pmap = params(&[("n", n), ("r", r)]);
    let sides = evaluate_from_witnesses(IdentityName::Catalan, y, &pmap, &wb.map, None)?;
    Ok(IdentityReport::from_sides(
        IdentityName::Catalan,
        pmap,
        wb.map,
        sides,
    ))
}

/// Recovers the canonical term `a_m` from raw windows of two sequences,
/// using `a_m = |b_k b_{k+m}; c_k c_{k+m}| / ((-y)^k * |b_0 b_1; c_0 c_1|)`.
/// The division is checked to be exact; a nonzero remainder means the
/// windows do not satisfy the recurrence they claim to.
pub fn recover_a(
    y: &RingValue,
    b_window: &[RingValue],
    c_window: &[RingValue],
    k: usize,
    m: usize,
) -> Result<RingValue> {
    if y.is_zero() {
        return Err(Error::DegenerateCoefficient);
    }
    let need = (k + m).max(1);
    if b_window.len() <= need || c_window.len() <= need {
        return Err(Error::IndexConstraint(format!(
            "recover-a needs window entries through index {need}"
        )));
    }
    let init_det = Det2::new(
        b_window[0].clone(),
        b_window[1].clone(),
        c_window[0].clone(),
        c_window[1].clone(),
    )
    .value()?;
    if init_det.is_zero() {
        return Err(Error::SingularInitialPair);
    }
    let numerator = Det2::new(
        b_window[k].clone(),
        b_window[k + m].clone(),
        c_window[k].clone(),
        c_window[k + m].clone(),
    )
    .value()?;
    let denominator = neg_pow(y, k).mul(&init_det)?;
    exact_div(&numerator, &denominator)
}

/// Exact ring division; errors if the quotient would not be exact.
fn exact_div(numerator: &RingValue, denominator: &RingValue) -> Result<RingValue> {
    match (numerator, denominator) {
        (RingValue::Int(n), RingValue::Int(d)) => {
            if num_traits::Zero::is_zero(d) {
                return Err(Error::InexactDivision);
            }
            let q = n / d;
            if &(&q * d) == n {
                Ok(RingValue::Int(q))
            } else {
                Err(Error::InexactDivision)
            }
        }
        (RingValue::Poly(n), RingValue::Poly(d)) => poly_exact_div(n, d).map(RingValue::Poly),
        _ => Err(Error::TagMismatch {
            left: numerator.tag(),
            right: denominator.tag(),
        }),
    }
}

/// Long division over the integers; every leading-coefficient step must
/// divide exactly and the remainder must vanish.
fn poly_exact_div(
    numerator: &crate::value::IntPoly,
    denominator: &crate::value::IntPoly,
) -> Result<crate::value::IntPoly> {
    use crate::value::{ExactInt, IntPoly};
    use num_traits::Zero;

    if denominator.is_zero() {
        return Err(Error::InexactDivision);
    }
    if numerator.is_zero() {
        return Ok(IntPoly::zero());
    }
    let d_deg = denominator.degree().expect("nonzero");
    let d_lead = &denominator.coeffs()[d_deg];
    let mut rem: Vec<ExactInt> = numerator.coeffs().to_vec();
    let n_deg = rem.len() - 1;
    if n_deg < d_deg {
        return Err(Error::InexactDivision);
    }
    let mut quotient = vec![ExactInt::zero(); n_deg - d_deg + 1];
    for step in (0..quotient.len()).rev() {
        let lead = rem[step + d_deg].clone();
        if lead.is_zero() {
            continue;
        }
        let q = &lead / d_lead;
        if &q * d_lead != lead {
            return Err(Error::InexactDivision);
        }
        for (i, c) in denominator.coeffs().iter().enumerate() {
            rem[step + i] -= &q * c;
        }
        quotient[step] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(Error::InexactDivision);
    }
    Ok(IntPoly::new(quotient))
}
