//! The value group `Z ⊕ Z` under the lexicographic order, its extension by
//! `∞`, and the lattice predicates used to describe value monoids.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("the zero element has no direction")]
    ZeroElement,
    #[error("basis ({0}, {1}) is not unimodular")]
    NotUnimodular(ValuePair, ValuePair),
    #[error("basis elements {0} and {1} are commensurable")]
    Commensurable(ValuePair, ValuePair),
    #[error("modulus must be positive")]
    BadModulus,
    #[error("coordinates of {0} overflow i64")]
    Overflow(ValuePair),
    #[error("cannot parse value pair {0:?}")]
    Parse(String),
}

/// Element `(a, b)` of `Z ⊕ Z`. The derived order compares `a` first, then
/// `b`, which is exactly the lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ValuePair {
    pub a: i64,
    pub b: i64,
}

impl ValuePair {
    pub const ZERO: ValuePair = ValuePair { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        ValuePair { a, b }
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    pub fn is_positive(self) -> bool {
        self > Self::ZERO
    }

    pub fn is_negative(self) -> bool {
        self < Self::ZERO
    }

    /// The determinant `a₁·b₂ − b₁·a₂`, exact for all inputs.
    pub fn det(self, other: ValuePair) -> i128 {
        self.a as i128 * other.b as i128 - self.b as i128 * other.a as i128
    }

    /// The immediate successor in `Z ⊕ Z`-lex.
    pub fn successor(self) -> ValuePair {
        ValuePair::new(self.a, self.b + 1)
    }
}

impl fmt::Display for ValuePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl FromStr for ValuePair {
    type Err = GroupError;

    /// Accepts `(a,b)` with optional whitespace.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || GroupError::Parse(s.to_owned());
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(err)?;
        let (a, b) = inner.split_once(',').ok_or_else(err)?;
        Ok(ValuePair::new(
            a.trim().parse().map_err(|_| err())?,
            b.trim().parse().map_err(|_| err())?,
        ))
    }
}

impl Add for ValuePair {
    type Output = ValuePair;
    fn add(self, rhs: ValuePair) -> ValuePair {
        ValuePair::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for ValuePair {
    type Output = ValuePair;
    fn sub(self, rhs: ValuePair) -> ValuePair {
        ValuePair::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for ValuePair {
    type Output = ValuePair;
    fn neg(self) -> ValuePair {
        ValuePair::new(-self.a, -self.b)
    }
}

impl Mul<ValuePair> for i64 {
    type Output = ValuePair;
    fn mul(self, rhs: ValuePair) -> ValuePair {
        ValuePair::new(self * rhs.a, self * rhs.b)
    }
}

/// A value pair or `∞`; `∞` is strictly above every pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtValue {
    Finite(ValuePair),
    Infinity,
}

impl ExtValue {
    pub fn finite(self) -> Option<ValuePair> {
        match self {
            ExtValue::Finite(v) => Some(v),
            ExtValue::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == ExtValue::Infinity
    }
}

impl From<ValuePair> for ExtValue {
    fn from(v: ValuePair) -> Self {
        ExtValue::Finite(v)
    }
}

impl Add for ExtValue {
    type Output = ExtValue;
    fn add(self, rhs: ExtValue) -> ExtValue {
        match (self, rhs) {
            (ExtValue::Finite(a), ExtValue::Finite(b)) => ExtValue::Finite(a + b),
            _ => ExtValue::Infinity,
        }
    }
}

impl fmt::Display for ExtValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtValue::Finite(v) => v.fmt(f),
            ExtValue::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtValue {
    type Err = GroupError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "inf" {
            Ok(ExtValue::Infinity)
        } else {
            s.parse().map(ExtValue::Finite)
        }
    }
}

pub fn lex_cmp(u: ExtValue, v: ExtValue) -> Ordering {
    u.cmp(&v)
}

/// No representation as `k·γ` with `k ≥ 2`: `gcd(|a|, |b|) = 1`.
pub fn is_indivisible(u: ValuePair) -> Result<bool, GroupError> {
    if u.is_zero() {
        return Err(GroupError::ZeroElement);
    }
    Ok(u.a.gcd(&u.b) == 1)
}

/// Linearly dependent over `Z` (equivalently over `Q`).
pub fn commensurable(u: ValuePair, v: ValuePair) -> Result<bool, GroupError> {
    if u.is_zero() || v.is_zero() {
        return Err(GroupError::ZeroElement);
    }
    Ok(u.det(v) == 0)
}

/// Integer coordinates `(s, t)` with `γ = s·α + t·β`, if they exist.
pub fn coordinates(
    gamma: ValuePair,
    alpha: ValuePair,
    beta: ValuePair,
) -> Result<Option<(i64, i64)>, GroupError> {
    let det = alpha.det(beta);
    if det == 0 {
        return Err(GroupError::Commensurable(alpha, beta));
    }
    // Cramer's rule.
    let s_num = gamma.det(beta);
    let t_num = alpha.det(gamma);
    if s_num % det != 0 || t_num % det != 0 {
        return Ok(None);
    }
    let narrow = |v: i128| i64::try_from(v).map_err(|_| GroupError::Overflow(gamma));
    Ok(Some((narrow(s_num / det)?, narrow(t_num / det)?)))
}

/// Class of `γ` modulo the subgroup `Z·(mα)`, written as `(s mod m, t)`
/// for `γ = s·α + t·β`.
///
/// For the submonoid `M = Z≥0·(mα)` the monoid relation "`m₁ + γ₁ = m₂ + γ₂`
/// for some `m₁, m₂ ∈ M`" holds exactly when `γ₁ − γ₂ ∈ M − M = Z·(mα)`, so
/// these classes are the elements of the quotient monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuotClass {
    pub s_mod_m: i64,
    pub t: i64,
}

pub fn quotient_class(
    gamma: ValuePair,
    m: i64,
    alpha: ValuePair,
    beta: ValuePair,
) -> Result<QuotClass, GroupError> {
    if m <= 0 {
        return Err(GroupError::BadModulus);
    }
    if alpha.det(beta).abs() != 1 {
        return Err(GroupError::NotUnimodular(alpha, beta));
    }
    let (s, t) = coordinates(gamma, alpha, beta)?.expect("unimodular bases span Z^2");
    Ok(QuotClass {
        s_mod_m: s.rem_euclid(m),
        t,
    })
}

/// Submonoids of `Z ⊕ Z` spanned by a basis `(α, β)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonoidMode {
    /// `{0} ∪ (Z>0·α + Z≥0·β)`
    Ex55,
    /// `Z≥0·α + Z≥0·β`
    Cone,
    /// `Z≥0·α`
    Ray,
    /// `Z·α + Z≥0·β`
    HalfLattice,
}

impl MonoidMode {
    pub fn name(self) -> &'static str {
        match self {
            MonoidMode::Ex55 => "ex55",
            MonoidMode::Cone => "cone",
            MonoidMode::Ray => "ray",
            MonoidMode::HalfLattice => "half-lattice",
        }
    }
}

impl FromStr for MonoidMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ex55" => Ok(MonoidMode::Ex55),
            "cone" => Ok(MonoidMode::Cone),
            "ray" => Ok(MonoidMode::Ray),
            "half-lattice" => Ok(MonoidMode::HalfLattice),
            other => Err(format!("unknown monoid mode {other:?}")),
        }
    }
}

pub fn monoid_member(
    gamma: ValuePair,
    alpha: ValuePair,
    beta: ValuePair,
    mode: MonoidMode,
) -> Result<bool, GroupError> {
    let Some((s, t)) = coordinates(gamma, alpha, beta)? else {
        return Ok(false);
    };
    Ok(match mode {
        MonoidMode::Ex55 => (s, t) == (0, 0) || (s > 0 && t >= 0),
        MonoidMode::Cone => s >= 0 && t >= 0,
        MonoidMode::Ray => s >= 0 && t == 0,
        MonoidMode::HalfLattice => t >= 0,
    })
}
