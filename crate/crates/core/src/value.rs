//! Exact ring arithmetic shared by every other module: arbitrary-precision
//! signed integers and dense univariate polynomials over them, unified
//! behind the tagged [`RingValue`].
//!
//! All values are immutable and every operation is pure and exact. Mixing
//! the integer and polynomial rings in one operation is an error; an
//! integer is only ever promoted to a degree-0 polynomial explicitly.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer. Every scalar in the crate is exact;
/// there is no floating point anywhere.
pub type ExactInt = BigInt;

/// Dense univariate polynomial with integer coefficients in ascending
/// degree order.
///
/// Canonical form: the highest-degree stored coefficient is nonzero, and
/// the zero polynomial is the empty coefficient list. [`IntPoly::degree`]
/// returns `None` for the zero polynomial so that it never collides with
/// degree 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<ExactInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros so the result is canonical.
    pub fn new(mut coeffs: Vec<ExactInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| ExactInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![ExactInt::one()],
        }
    }

    /// The monomial `c * t^k` in the ring variable `t`.
    pub fn monomial(c: ExactInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![ExactInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[ExactInt] {
        &self.coeffs
    }

    /// Evaluates at an integer point by Horner's scheme.
    pub fn eval(&self, t: &ExactInt) -> ExactInt {
        let mut acc = ExactInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn pow(&self, e: u64) -> Self {
        pow_by_squaring(self.clone(), Self::one(), e, |a, b| a * b)
    }

    /// Renders with the given variable name, highest degree first.
    pub fn display_with<'a>(&'a self, var: &'a str) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, var }
    }
}

impl std::ops::Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (longer, shorter) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = longer.coeffs.clone();
        for (i, c) in shorter.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPoly::new(coeffs)
    }
}

impl std::ops::Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![ExactInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

impl std::ops::Mul for IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

/// Helper returned by [`IntPoly::display_with`].
pub struct PolyDisplay<'a> {
    poly: &'a IntPoly,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "{}", self.var)?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with("z").fmt(f)
    }
}

/// Tagged exact value: an integer or an integer-coefficient polynomial.
///
/// All operands of a single arithmetic expression must carry the same tag;
/// mixing is surfaced as [`Error::TagMismatch`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingValue {
    Int(ExactInt),
    Poly(IntPoly),
}

impl RingValue {
    pub fn int(n: i64) -> Self {
        RingValue::Int(ExactInt::from(n))
    }

    pub fn poly(coeffs: &[i64]) -> Self {
        RingValue::Poly(IntPoly::from_i64(coeffs))
    }

    pub fn tag(&self) -> &'static str {
        match self {
            RingValue::Int(_) => "integer",
            RingValue::Poly(_) => "polynomial",
        }
    }

    pub fn same_tag(&self, other: &RingValue) -> bool {
        matches!(
            (self, other),
            (RingValue::Int(_), RingValue::Int(_)) | (RingValue::Poly(_), RingValue::Poly(_))
        )
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingValue::Int(n) => n.is_zero(),
            RingValue::Poly(p) => p.is_zero(),
        }
    }

    /// Additive identity of the same ring as `self`.
    pub fn zero_like(&self) -> Self {
        match self {
            RingValue::Int(_) => RingValue::Int(ExactInt::zero()),
            RingValue::Poly(_) => RingValue::Poly(IntPoly::zero()),
        }
    }

    /// Multiplicative identity of the same ring as `self`.
    pub fn one_like(&self) -> Self {
        match self {
            RingValue::Int(_) => RingValue::Int(ExactInt::one()),
            RingValue::Poly(_) => RingValue::Poly(IntPoly::one()),
        }
    }

    /// Explicit promotion of an integer to a degree-0 polynomial. Already
    /// polynomial values pass through unchanged.
    pub fn to_polynomial(&self) -> Self {
        match self {
            RingValue::Int(n) => RingValue::Poly(IntPoly::new(vec![n.clone()])),
            RingValue::Poly(p) => RingValue::Poly(p.clone()),
        }
    }

    fn mismatch(&self, other: &RingValue) -> Error {
        Error::TagMismatch {
            left: self.tag(),
            right: other.tag(),
        }
    }

    pub fn add(&self, other: &RingValue) -> Result<RingValue> {
        match (self, other) {
            (RingValue::Int(a), RingValue::Int(b)) => Ok(RingValue::Int(a + b)),
            (RingValue::Poly(a), RingValue::Poly(b)) => Ok(RingValue::Poly(a + b)),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn sub(&self, other: &RingValue) -> Result<RingValue> {
        match (self, other) {
            (RingValue::Int(a), RingValue::Int(b)) => Ok(RingValue::Int(a - b)),
            (RingValue::Poly(a), RingValue::Poly(b)) => Ok(RingValue::Poly(a - b)),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn mul(&self, other: &RingValue) -> Result<RingValue> {
        match (self, other) {
            (RingValue::Int(a), RingValue::Int(b)) => Ok(RingValue::Int(a * b)),
            (RingValue::Poly(a), RingValue::Poly(b)) => Ok(RingValue::Poly(a * b)),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn neg(&self) -> RingValue {
        match self {
            RingValue::Int(n) => RingValue::Int(-n),
            RingValue::Poly(p) => RingValue::Poly(-p),
        }
    }

    /// Exact `e`-th power; `pow(v, 0)` is the multiplicative identity of
    /// `v`'s ring.
    pub fn pow(&self, e: u64) -> RingValue {
        match self {
            RingValue::Int(n) => RingValue::Int(pow_by_squaring(
                n.clone(),
                ExactInt::one(),
                e,
                |a, b| a * b,
            )),
            RingValue::Poly(p) => RingValue::Poly(p.pow(e)),
        }
    }

    /// Instantiates a polynomial at the integer point `t`; integers pass
    /// through unchanged.
    pub fn instantiate(&self, t: &ExactInt) -> RingValue {
        match self {
            RingValue::Int(n) => RingValue::Int(n.clone()),
            RingValue::Poly(p) => RingValue::Int(p.eval(t)),
        }
    }
}

impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingValue::Int(n) => write!(f, "{n}"),
            RingValue::Poly(p) => write!(f, "{p}"),
        }
    }
}

fn pow_by_squaring<T: Clone>(base: T, identity: T, e: u64, mul: impl Fn(&T, &T) -> T) -> T {
    let mut acc = identity;
    let mut sq = base;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &sq);
        }
        e >>= 1;
        if e > 0 {
            sq = mul(&sq, &sq);
        }
    }
    acc
}

/// Binomial coefficient `C(n, k)`, with the convention that out-of-range
/// `k` (negative or above `n`) gives zero.
pub fn binomial(n: u64, k: i64) -> ExactInt {
    if k < 0 || k as u64 > n {
        return ExactInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = ExactInt::one();
    // Multiply-then-divide keeps every intermediate an exact integer.
    for i in 1..=k {
        acc = acc * ExactInt::from(n - k + i) / ExactInt::from(i);
    }
    acc
}

// Wire format: integers as decimal strings, polynomials as arrays of
// decimal strings in ascending degree order.

impl Serialize for RingValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            RingValue::Int(n) => serializer.serialize_str(&n.to_string()),
            RingValue::Poly(p) => {
                let mut seq = serializer.serialize_seq(Some(p.coeffs().len()))?;
                for c in p.coeffs() {
                    seq.serialize_element(&c.to_string())?;
                }
                seq.end()
            }
        }
    }
}

struct RingValueVisitor;

fn parse_decimal<E: de::Error>(s: &str) -> std::result::Result<ExactInt, E> {
    s.parse::<ExactInt>()
        .map_err(|_| E::custom(format!("invalid decimal integer `{s}`")))
}

impl<'de> Visitor<'de> for RingValueVisitor {
    type Value = RingValue;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a decimal string or an array of decimal strings")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<RingValue, E> {
        Ok(RingValue::Int(parse_decimal(v)?))
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<RingValue, A::Error> {
        let mut coeffs = Vec::new();
        while let Some(s) = seq.next_element::<String>()? {
            coeffs.push(parse_decimal(&s)?);
        }
        Ok(RingValue::Poly(IntPoly::new(coeffs)))
    }
}

impl<'de> Deserialize<'de> for RingValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        deserializer.deserialize_any(RingValueVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn additive_inverse_cancels() {
        let a = RingValue::int(7);
        let b = RingValue::int(-7);
        assert_eq!(a.add(&b).unwrap(), RingValue::int(0));
    }

    #[test]
    fn poly_addition_merges_terms() {
        let a = RingValue::poly(&[0, 1]);
        let b = RingValue::poly(&[1]);
        assert_eq!(a.add(&b).unwrap(), RingValue::poly(&[1, 1]));
    }

    #[test]
    fn poly_cancellation_is_canonical_zero() {
        let a = RingValue::poly(&[1, 0, -1]);
        let b = RingValue::poly(&[-1, 0, 1]);
        let sum = a.add(&b).unwrap();
        assert_eq!(sum, RingValue::Poly(IntPoly::zero()));
        match sum {
            RingValue::Poly(p) => {
                assert!(p.coeffs().is_empty());
                assert_eq!(p.degree(), None);
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn integer_products() {
        assert_eq!(
            RingValue::int(3).mul(&RingValue::int(-2)).unwrap(),
            RingValue::int(-6)
        );
    }

    #[test]
    fn poly_products() {
        let two_z = RingValue::poly(&[0, 2]);
        assert_eq!(two_z.mul(&two_z).unwrap(), RingValue::poly(&[0, 0, 4]));
        // (2z^2 - 1)^2, expanded by hand via schoolbook convolution.
        let p = RingValue::poly(&[-1, 0, 2]);
        assert_eq!(p.mul(&p).unwrap(), RingValue::poly(&[1, 0, -4, 0, 4]));
    }

    #[test]
    fn powers() {
        assert_eq!(RingValue::int(-2).pow(3), RingValue::int(-8));
        assert_eq!(RingValue::int(5).pow(0), RingValue::int(1));
        assert_eq!(RingValue::poly(&[0, 1]).pow(2), RingValue::poly(&[0, 0, 1]));
    }

    #[test]
    fn tag_mixing_is_rejected() {
        let err = RingValue::int(1).add(&RingValue::poly(&[1])).unwrap_err();
        assert!(matches!(err, Error::TagMismatch { .. }));
    }

    #[test]
    fn explicit_promotion() {
        assert_eq!(RingValue::int(5).to_polynomial(), RingValue::poly(&[5]));
        assert_eq!(RingValue::int(0).to_polynomial(), RingValue::poly(&[]));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), ExactInt::from(6));
        assert_eq!(binomial(3, -1), ExactInt::zero());
        assert_eq!(binomial(3, 4), ExactInt::zero());
        assert_eq!(binomial(0, 0), ExactInt::one());
        // Frozen from a Pascal-triangle accumulation, rechecked below.
        assert_eq!(binomial(30, 15), ExactInt::from(155_117_520i64));
    }

    /// Pascal-triangle oracle: rebuild rows 0..=40 by additions only and
    /// compare every entry against the multiplicative implementation.
    #[test]
    fn binomial_matches_pascal_triangle() {
        let mut row = vec![ExactInt::one()];
        for n in 0..=40u64 {
            for (k, expected) in row.iter().enumerate() {
                assert_eq!(&binomial(n, k as i64), expected, "C({n},{k})");
            }
            let mut next = vec![ExactInt::one()];
            for i in 1..row.len() {
                next.push(&row[i - 1] + &row[i]);
            }
            next.push(ExactInt::one());
            row = next;
        }
    }

    #[test]
    fn display_formats() {
        assert_eq!(IntPoly::from_i64(&[-1, 0, 4]).to_string(), "4z^2 - 1");
        assert_eq!(IntPoly::from_i64(&[0, 1]).to_string(), "z");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(
            IntPoly::from_i64(&[1, -3, 0, 1]).display_with("x").to_string(),
            "x^3 - 3x + 1"
        );
        assert_eq!(RingValue::int(-12).to_string(), "-12");
    }

    #[test]
    fn serialization_shapes() {
        let int = RingValue::int(-7);
        assert_eq!(serde_json::to_string(&int).unwrap(), r#""-7""#);
        let poly = RingValue::poly(&[-1, 0, 4]);
        assert_eq!(
            serde_json::to_string(&poly).unwrap(),
            r#"["-1","0","4"]"#
        );
        for v in [int, poly] {
            let json = serde_json::to_string(&v).unwrap();
            let back: RingValue = serde_json::from_str(&json).unwrap();
            assert_eq!(back, v);
        }
    }

    fn small_int() -> impl Strategy<Value = RingValue> {
        (-50i64..=50).prop_map(RingValue::int)
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        proptest::collection::vec(-9i64..=9, 0..=7).prop_map(|c| IntPoly::from_i64(&c))
    }

    proptest! {
        #[test]
        fn int_ring_axioms(a in small_int(), b in small_int(), c in small_int()) {
            let ab_c = a.add(&b).unwrap().add(&c).unwrap();
            let a_bc = a.add(&b.add(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            let dist = a.mul(&b.add(&c).unwrap()).unwrap();
            let expanded = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(dist, expanded);
        }

        #[test]
        fn poly_ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn canonicalization_is_idempotent(coeffs in proptest::collection::vec(-9i64..=9, 0..=8),
                                          zeros in 0usize..=3) {
            let mut padded: Vec<ExactInt> = coeffs.iter().map(|&c| ExactInt::from(c)).collect();
            padded.extend(std::iter::repeat_n(ExactInt::zero(), zeros));
            let once = IntPoly::new(padded);
            prop_assert!(once.coeffs().last().is_none_or(|c| !c.is_zero()));
            let twice = IntPoly::new(once.coeffs().to_vec());
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn product_evaluation_homomorphism(
            p in proptest::collection::vec(-9i64..=9, 0..=13),
            q in proptest::collection::vec(-9i64..=9, 0..=13),
            points in proptest::collection::vec(-20i64..=20, 5),
        ) {
            let p = IntPoly::from_i64(&p);
            let q = IntPoly::from_i64(&q);
            let prod = &p * &q;
            for t in points {
                let t = ExactInt::from(t);
                prop_assert_eq!(prod.eval(&t), p.eval(&t) * q.eval(&t));
            }
        }

        #[test]
        fn pascal_rule(n in 1u64..=40, k in 0i64..=40) {
            prop_assume!(k > 0 && (k as u64) < n);
            prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}
