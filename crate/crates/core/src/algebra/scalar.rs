//! Elements of ℚ and of real quadratic fields ℚ(√d).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::rational::Rational;

/// The coefficient field a computation lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    /// ℚ(√d) for a square-free `d > 1`.
    Quadratic(u32),
}

impl Field {
    /// Builds ℚ(√d), rejecting radicands that are not square-free or not `> 1`.
    pub fn quadratic(d: u32) -> Option<Self> {
        if d > 1 && is_square_free(d) {
            Some(Field::Quadratic(d))
        } else {
            None
        }
    }

    pub fn radicand(self) -> u32 {
        match self {
            Field::Rationals => 0,
            Field::Quadratic(d) => d,
        }
    }

    /// Whether `x` lies in this field.
    pub fn contains(self, x: &Scalar) -> bool {
        x.radicand == 0 || x.radicand == self.radicand()
    }

    /// Smallest field containing both, if one exists.
    pub fn join(self, other: Field) -> Option<Field> {
        match (self, other) {
            (Field::Rationals, f) | (f, Field::Rationals) => Some(f),
            (Field::Quadratic(a), Field::Quadratic(b)) if a == b => Some(self),
            _ => None,
        }
    }
}

fn is_square_free(d: u32) -> bool {
    let mut p = 2u32;
    while p.saturating_mul(p) <= d {
        if d.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Quadratic(d) => write!(f, "Q(sqrt {d})"),
        }
    }
}

impl FromStr for Field {
    type Err = String;

    /// Accepts `Q`, `Q(sqrt d)`, `Q(sqrt(d))` and `Q(sqrtd)`.
    fn from_str(s: &str) -> Result<Self, String> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "Q" {
            return Ok(Field::Rationals);
        }
        let inner = compact
            .strip_prefix("Q(sqrt")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| format!("unrecognized field {s:?}"))?;
        let inner = inner
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(inner);
        let d: u32 = inner
            .parse()
            .map_err(|_| format!("unrecognized radicand in {s:?}"))?;
        Field::quadratic(d).ok_or_else(|| format!("radicand {d} must be square-free and > 1"))
    }
}

impl Serialize for Field {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An exact real number `rational + surd·√radicand`.
///
/// Canonical: `radicand == 0` exactly when `surd == 0`, so structural equality
/// and hashing coincide with numeric equality. Mixing two different nonzero
/// radicands in one operation is a logic error and panics.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    rational: Rational,
    surd: Rational,
    radicand: u32,
}

impl Scalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from(Rational::ONE)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from(Rational::from_integer(n))
    }

    pub fn frac(num: i64, den: i64) -> Self {
        Self::from(Rational::new(num, den))
    }

    /// `a + b·√d`. With `b == 0` the radicand is dropped.
    pub fn quadratic(a: Rational, b: Rational, d: u32) -> Self {
        if b.is_zero() {
            Self::from(a)
        } else {
            assert!(d > 1, "quadratic part needs a radicand > 1");
            Scalar {
                rational: a,
                surd: b,
                radicand: d,
            }
        }
    }

    /// √d as an element of ℚ(√d).
    pub fn sqrt_of(d: u32) -> Self {
        Self::quadratic(Rational::ZERO, Rational::ONE, d)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational
    }

    pub fn surd_part(&self) -> &Rational {
        &self.surd
    }

    pub fn radicand(&self) -> u32 {
        self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.radicand == 0 && self.rational.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.radicand == 0 && self.rational.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.radicand == 0
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.rational)
    }

    fn common_radicand(&self, other: &Self) -> u32 {
        match (self.radicand, other.radicand) {
            (0, d) | (d, 0) => d,
            (a, b) if a == b => a,
            (a, b) => panic!("scalars from different quadratic fields: sqrt {a} and sqrt {b}"),
        }
    }

    /// Galois conjugate `a - b√d`.
    pub fn conjugate(&self) -> Self {
        Scalar {
            rational: self.rational.clone(),
            surd: -&self.surd,
            radicand: self.radicand,
        }
    }

    /// Field norm `a² - d·b²`.
    pub fn norm(&self) -> Rational {
        if self.radicand == 0 {
            return &self.rational * &self.rational;
        }
        let d = Rational::from_integer(self.radicand as i64);
        &(&self.rational * &self.rational) - &(&d * &(&self.surd * &self.surd))
    }

    /// Sign of the real number.
    pub fn signum(&self) -> i32 {
        let (sa, sb) = (self.rational.signum(), self.surd.signum());
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let d = Rational::from_integer(self.radicand as i64);
        let a2 = &self.rational * &self.rational;
        let db2 = &d * &(&self.surd * &self.surd);
        if a2 > db2 {
            sa
        } else {
            sb
        }
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        if self.radicand == 0 {
            return Self::from(self.rational.recip());
        }
        let n = self.norm().recip();
        Scalar::quadratic(&self.rational * &n, -(&self.surd * &n), self.radicand)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Parses the exact-fraction syntax `a`, `a/b`, `br`, `a+br`, `a-b/cr`,
    /// where `r` stands for √d of `field`.
    pub fn parse_in(s: &str, field: Field) -> Result<Self, String> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err("empty scalar literal".into());
        }
        let mut rational = Rational::ZERO;
        let mut surd = Rational::ZERO;
        let mut seen_rational = false;
        let mut seen_surd = false;
        let bytes = t.as_bytes();
        let mut start = 0;
        for i in 1..=bytes.len() {
            if i < bytes.len() && !(bytes[i] == b'+' || bytes[i] == b'-') {
                continue;
            }
            let term = &t[start..i];
            start = i;
            if let Some(coef) = term.strip_suffix('r') {
                if seen_surd {
                    return Err(format!("repeated surd term in {s:?}"));
                }
                seen_surd = true;
                surd = match coef {
                    "" | "+" => Rational::ONE,
                    "-" => -Rational::ONE,
                    c => c
                        .parse()
                        .map_err(|_| format!("invalid scalar literal {s:?}"))?,
                };
            } else {
                if seen_rational {
                    return Err(format!("repeated rational term in {s:?}"));
                }
                seen_rational = true;
                rational = term
                    .parse()
                    .map_err(|_| format!("invalid scalar literal {s:?}"))?;
            }
        }
        if !surd.is_zero() {
            match field {
                Field::Rationals => return Err(format!("surd term in {s:?} but field is Q")),
                Field::Quadratic(d) => return Ok(Scalar::quadratic(rational, surd, d)),
            }
        }
        Ok(Scalar::from(rational))
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar {
            rational: r,
            surd: Rational::ZERO,
            radicand: 0,
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.radicand == 0 && rhs.radicand == 0 {
            return Scalar::from(&self.rational + &rhs.rational);
        }
        let d = self.common_radicand(rhs);
        Scalar::quadratic(&self.rational + &rhs.rational, &self.surd + &rhs.surd, d)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        if self.radicand == 0 && rhs.radicand == 0 {
            return Scalar::from(&self.rational - &rhs.rational);
        }
        let d = self.common_radicand(rhs);
        Scalar::quadratic(&self.rational - &rhs.rational, &self.surd - &rhs.surd, d)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self.radicand, rhs.radicand) {
            (0, 0) => Scalar::from(&self.rational * &rhs.rational),
            (0, d) => Scalar::quadratic(
                &self.rational * &rhs.rational,
                &self.rational * &rhs.surd,
                d,
            ),
            (d, 0) => Scalar::quadratic(
                &self.rational * &rhs.rational,
                &self.surd * &rhs.rational,
                d,
            ),
            _ => {
                let d = self.common_radicand(rhs);
                let dd = Rational::from_integer(d as i64);
                let a = &(&self.rational * &rhs.rational) + &(&dd * &(&self.surd * &rhs.surd));
                let b = &(&self.rational * &rhs.surd) + &(&self.surd * &rhs.rational);
                Scalar::quadratic(a, b, d)
            }
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        if rhs.radicand == 0 {
            assert!(!rhs.rational.is_zero(), "division by zero");
            let inv = rhs.rational.recip();
            return Scalar::quadratic(&self.rational * &inv, &self.surd * &inv, self.radicand);
        }
        self * &rhs.recip()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            rational: -&self.rational,
            surd: -&self.surd,
            radicand: self.radicand,
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordered as real numbers.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.radicand == 0 && other.radicand == 0 {
            return self.rational.cmp(&other.rational);
        }
        (self - other).signum().cmp(&0)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand == 0 {
            return write!(f, "{}", self.rational);
        }
        if !self.rational.is_zero() {
            write!(f, "{}", self.rational)?;
            if self.surd.signum() > 0 {
                write!(f, "+")?;
            }
        }
        if self.surd.is_one() {
            write!(f, "r")
        } else if (-&self.surd).is_one() {
            write!(f, "-r")
        } else {
            write!(f, "{}r", self.surd)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand == 0 {
            write!(f, "{}", self.rational)
        } else {
            write!(f, "{} (r=sqrt {})", self, self.radicand)
        }
    }
}
