//! Exact scalar fields: the rationals and prime fields GF(p).

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `Q`, `QQ`, `GF(p)`, `GFp` and `Fp` (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        if t == "Q" || t == "QQ" || t == "RATIONALS" {
            return Ok(FieldSpec::Rationals);
        }
        let digits = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix("GF"))
            .or_else(|| t.strip_prefix('F'));
        match digits.and_then(|d| d.trim().parse::<u64>().ok()) {
            Some(p) => Ok(FieldSpec::Prime(p)),
            None => Err(Error::Parse(format!("unrecognised field `{s}`"))),
        }
    }
}

/// A validated field; the arithmetic context every container carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    spec: FieldSpec,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Builds a field context, rejecting non-prime moduli.
pub fn make_field(spec: FieldSpec) -> Result<Field> {
    Field::new(spec)
}

impl Field {
    pub fn new(spec: FieldSpec) -> Result<Self> {
        if let FieldSpec::Prime(p) = spec {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            if p > u32::MAX as u64 {
                return Err(Error::InvalidInput(format!("modulus {p} exceeds 2^32")));
            }
        }
        Ok(Field { spec })
    }

    pub fn rationals() -> Self {
        Field { spec: FieldSpec::Rationals }
    }

    /// GF(p); panics if `p` is not prime. Use [`Field::new`] for untrusted input.
    pub fn prime(p: u64) -> Self {
        Field::new(FieldSpec::Prime(p)).expect("modulus must be prime")
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn characteristic(&self) -> u64 {
        match self.spec {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match self.spec {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(p),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.spec {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime(p) => Scalar::Residue {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// Residue `v` of GF(p); `v` must already be canonical.
    pub fn residue(&self, v: u64) -> Scalar {
        match self.spec {
            FieldSpec::Prime(p) => {
                debug_assert!(v < p);
                Scalar::Residue { value: v, modulus: p }
            }
            FieldSpec::Rationals => self.from_i64(v as i64),
        }
    }

    /// Whether `s` lives in this field.
    pub fn owns(&self, s: &Scalar) -> bool {
        match (self.spec, s) {
            (FieldSpec::Rationals, Scalar::Rational(_)) => true,
            (FieldSpec::Prime(p), Scalar::Residue { modulus, .. }) => p == *modulus,
            _ => false,
        }
    }

    /// All elements of a prime field in canonical order, `None` over Q.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        self.modulus().map(|p| (0..p).map(|v| self.residue(v)).collect())
    }

    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        parse_scalar(self, text)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.spec.fmt(f)
    }
}

/// An exact field element.
///
/// Rationals are kept reduced with a positive denominator; residues are
/// kept in `[0, p)`. Arithmetic between scalars of different fields is a
/// programming error and panics.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::rationals(),
            Scalar::Residue { modulus, .. } => Field { spec: FieldSpec::Prime(*modulus) },
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// Residue value as an integer (prime fields only).
    pub fn residue_value(&self) -> Option<u64> {
        match self {
            Scalar::Residue { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }

    fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Residue { .. } => false,
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
fn check_same(a: u64, b: u64) {
    assert_eq!(a, b, "scalar arithmetic across different prime fields");
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) => {
                check_same(*p, *q);
                let s = a + b;
                Scalar::Residue { value: if s >= *p { s - p } else { s }, modulus: *p }
            }
            _ => panic!("scalar arithmetic across Q and GF(p)"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) => {
                check_same(*p, *q);
                Scalar::Residue { value: if a >= b { a - b } else { a + p - b }, modulus: *p }
            }
            _ => panic!("scalar arithmetic across Q and GF(p)"),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) => {
                check_same(*p, *q);
                Scalar::Residue { value: mul_mod(*a, *b, *p), modulus: *p }
            }
            _ => panic!("scalar arithmetic across Q and GF(p)"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a == b,
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) => {
                p == q && a == b
            }
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Scalar::Rational(r) => {
                0u8.hash(state);
                r.hash(state);
            }
            Scalar::Residue { value, modulus } => {
                1u8.hash(state);
                value.hash(state);
                modulus.hash(state);
            }
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but total order, used only for deterministic sorting.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) => {
                (p, a).cmp(&(q, b))
            }
            (Scalar::Rational(_), Scalar::Residue { .. }) => Ordering::Less,
            (Scalar::Residue { .. }, Scalar::Rational(_)) => Ordering::Greater,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Canonical text form; re-parses to an equal scalar.
pub fn format_scalar(s: &Scalar) -> String {
    s.to_string()
}

/// Parses `n` or `n/d` into `field`.
///
/// Residue text outside `[0, p)` is rejected rather than reduced, except
/// that `-v` is accepted as the additive inverse of `v` when `0 <= v < p`.
pub fn parse_scalar(field: &Field, text: &str) -> Result<Scalar> {
    let t = text.trim();
    let bad = || Error::Parse(format!("`{text}` is not an integer or fraction"));
    let (num_txt, den_txt) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let valid = |s: &str| {
        let digits = s.strip_prefix('-').or_else(|| s.strip_prefix('+')).unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num_txt) || den_txt.is_some_and(|d| !valid(d)) {
        return Err(bad());
    }
    let num: BigInt = num_txt.parse().map_err(|_| bad())?;
    let den: BigInt = match den_txt {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{text}`")));
    }
    match field.spec() {
        FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
        FieldSpec::Prime(p) => {
            let big_p = BigInt::from(p);
            let residue = |v: &BigInt| -> Result<Scalar> {
                if v.abs() >= big_p {
                    return Err(Error::Parse(format!(
                        "`{text}` is outside the residue range of GF({p})"
                    )));
                }
                let r: i64 = v.try_into().map_err(|_| bad())?;
                Ok(field.from_i64(r))
            };
            let n = residue(&num)?;
            let d = residue(&den)?;
            let inv = d
                .inverse()
                .ok_or_else(|| Error::Parse(format!("zero denominator in `{text}`")))?;
            Ok(n * inv)
        }
    }
}

impl Scalar {
    /// True when the canonical text form needs a leading sign.
    pub fn displays_negative(&self) -> bool {
        self.is_negative()
    }
}
