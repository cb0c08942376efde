//! Integral binary quadratic forms `[a, b, c] = aX² + bXY + cY²`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{parse_error, Error, Result};

/// A binary quadratic form `aX² + bXY + cY²` with arbitrary precision coefficients.
///
/// The zero form is representable; operations that need a nonzero form reject it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuadraticForm {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

/// The value `b² − 4ac` of a form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Discriminant(pub BigInt);

impl Discriminant {
    pub fn value(&self) -> &BigInt {
        &self.0
    }

    /// Every `b² − 4ac` is congruent to 0 or 1 mod 4.
    pub fn is_admissible(&self) -> bool {
        let r = self.0.mod_floor(&BigInt::from(4));
        r.is_zero() || r == BigInt::from(1)
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

impl fmt::Display for Discriminant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl QuadraticForm {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        QuadraticForm {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn discriminant(&self) -> Discriminant {
        Discriminant(&self.b * &self.b - BigInt::from(4) * &self.a * &self.c)
    }

    /// `F(x, y) = ax² + bxy + cy²`.
    pub fn evaluate(&self, x: &BigInt, y: &BigInt) -> BigInt {
        &self.a * x * x + &self.b * x * y + &self.c * y * y
    }

    /// `gcd(a, b, c)`, always positive.
    pub fn content(&self) -> Result<BigInt> {
        if self.is_zero() {
            return Err(Error::ZeroForm);
        }
        Ok(self.a.gcd(&self.b).gcd(&self.c))
    }

    pub fn is_primitive(&self) -> Result<bool> {
        Ok(self.content()? == BigInt::from(1))
    }

    /// `Δ < 0` and `a, c > 0`.
    pub fn is_positive_definite(&self) -> bool {
        self.discriminant().is_negative() && self.a.is_positive() && self.c.is_positive()
    }

    /// Positive definite with `|b| ≤ a ≤ c`.
    pub fn is_almost_reduced(&self) -> bool {
        self.is_positive_definite() && self.b.abs() <= self.a && self.a <= self.c
    }

    /// Almost reduced, and additionally `b = a` when `|b| = a`, and `b ≥ 0` when `a = c`.
    pub fn is_reduced(&self) -> bool {
        if !self.is_almost_reduced() {
            return false;
        }
        if self.b.abs() == self.a && self.b != self.a {
            return false;
        }
        if self.a == self.c && self.b.is_negative() {
            return false;
        }
        true
    }

    /// `[a, −b, c]`, the form-level image of the reflection `z ↦ −z̄`.
    pub fn mirror(&self) -> QuadraticForm {
        QuadraticForm {
            a: self.a.clone(),
            b: -&self.b,
            c: self.c.clone(),
        }
    }

    /// Divides every coefficient by `k`. Caller guarantees divisibility.
    pub(crate) fn div_exact(&self, k: &BigInt) -> QuadraticForm {
        QuadraticForm {
            a: &self.a / k,
            b: &self.b / k,
            c: &self.c / k,
        }
    }
}

/// Free-function spellings of the form predicates.
pub fn discriminant(f: &QuadraticForm) -> Discriminant {
    f.discriminant()
}

pub fn evaluate(f: &QuadraticForm, x: &BigInt, y: &BigInt) -> BigInt {
    f.evaluate(x, y)
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.b, self.c)
    }
}

impl FromStr for QuadraticForm {
    type Err = Error;

    /// Parses the canonical `a,b,c` rendering.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(parse_error(
                "form",
                s,
                "expected three comma-separated integers",
            ));
        }
        let mut coeffs = Vec::with_capacity(3);
        for part in parts {
            let v: BigInt = part
                .trim()
                .parse()
                .map_err(|_| parse_error("form", s, format!("{part:?} is not an integer")))?;
            coeffs.push(v);
        }
        let c = coeffs.pop().unwrap();
        let b = coeffs.pop().unwrap();
        let a = coeffs.pop().unwrap();
        Ok(QuadraticForm { a, b, c })
    }
}
