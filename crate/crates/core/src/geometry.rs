//! Exact points of the upper half plane and the base-point correspondence.
//!
//! A point is stored as `(p + √D)/q` with `q > 0`, `D < 0` and the principal
//! root, so `Re z = p/q` and `|z|² = (p² − D)/q²` are exact rationals.
//!
//! Base points follow the `+b` convention: `z(F) = (b + √Δ)/(2a)`, so that
//! `F = a(X + zY)(X + z̄Y)`. The classical root `(−b + √Δ)/(2a)` is `−z̄`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{parse_error, Error, Result};
use crate::forms::QuadraticForm;
use crate::group::GroupElement;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraicPoint {
    p: BigInt,
    q: BigInt,
    d: BigInt,
}

impl AlgebraicPoint {
    /// `(p + √D)/q`; `None` unless `q > 0` and `D < 0`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>, d: impl Into<BigInt>) -> Option<Self> {
        let (p, q, d) = (p.into(), q.into(), d.into());
        if !q.is_positive() || !d.is_negative() {
            return None;
        }
        Some(Self::normalized(p, q, d))
    }

    /// Divides out common factors `k` with `k | p`, `k | q` and `k² | D`.
    ///
    /// The gcd descent below finds every such factor except square factors of
    /// a residual part whose primes divide `D` exactly as often as they divide
    /// `gcd(p, q)`; those are found by a perfect-square test and trial division
    /// by small primes. Equality never depends on how far this gets.
    fn normalized(mut p: BigInt, mut q: BigInt, mut d: BigInt) -> Self {
        let mut g = p.gcd(&q);
        loop {
            let k = g.gcd(&d);
            if k.is_one() {
                break;
            }
            let mut k2 = k.gcd(&(&d / &k));
            if k2.is_one() {
                k2 = square_root_part(&k);
                if k2.is_one() {
                    break;
                }
            }
            p /= &k2;
            q /= &k2;
            d /= &k2 * &k2;
            g /= &k2;
        }
        AlgebraicPoint { p, q, d }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }
    pub fn q(&self) -> &BigInt {
        &self.q
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn re(&self) -> BigRational {
        BigRational::new(self.p.clone(), self.q.clone())
    }

    pub fn abs_sq(&self) -> BigRational {
        BigRational::new(&self.p * &self.p - &self.d, &self.q * &self.q)
    }

    /// `(Im z)² = −D/q²`.
    pub fn im_sq(&self) -> BigRational {
        BigRational::new(-&self.d, &self.q * &self.q)
    }

    /// Equality of the denoted complex numbers, decided on the exact
    /// invariants `Re z` and `|z|²`.
    pub fn point_equals(&self, other: &AlgebraicPoint) -> bool {
        self.re() == other.re() && self.abs_sq() == other.abs_sq()
    }

    /// `−z̄`, the reflection in the imaginary axis.
    pub fn reflect(&self) -> AlgebraicPoint {
        AlgebraicPoint {
            p: -&self.p,
            q: self.q.clone(),
            d: self.d.clone(),
        }
    }

    /// `|Re z| ≤ 1/2` and `|z| ≥ 1`, closed.
    pub fn in_fundamental_domain_pi(&self) -> bool {
        let two_p = BigInt::from(2) * self.p.abs();
        two_p <= self.q && &self.p * &self.p - &self.d >= &self.q * &self.q
    }

    /// Membership in the half-region whose points are base points of reduced forms.
    pub fn in_fundamental_domain_pibar(&self) -> bool {
        form_from_point(self).0.is_reduced()
    }

    /// Approximate `(x, y)` for rendering only.
    pub fn to_f64(&self) -> (f64, f64) {
        let q = big_to_f64(&self.q);
        let x = big_to_f64(&self.p) / q;
        let y = big_to_f64(&-&self.d).sqrt() / q;
        (x, y)
    }
}

impl PartialEq for AlgebraicPoint {
    fn eq(&self, other: &Self) -> bool {
        self.point_equals(other)
    }
}

impl Eq for AlgebraicPoint {}

impl Hash for AlgebraicPoint {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.re().hash(state);
        self.abs_sq().hash(state);
    }
}

impl PartialOrd for AlgebraicPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by real part, then by `|z|²`.
impl Ord for AlgebraicPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.re()
            .cmp(&other.re())
            .then_with(|| self.abs_sq().cmp(&other.abs_sq()))
    }
}

/// Largest `m` with `m² | k` that a perfect-square test or trial division up
/// to `SMALL_PRIME_LIMIT` reveals.
fn square_root_part(k: &BigInt) -> BigInt {
    let k = k.abs();
    let root = k.sqrt();
    if &root * &root == k {
        return root;
    }
    let mut rest = k;
    let mut m = BigInt::one();
    let mut f = 2u32;
    while f < SMALL_PRIME_LIMIT {
        let fb = BigInt::from(f);
        if &fb * &fb > rest {
            break;
        }
        let mut e = 0u32;
        while rest.is_multiple_of(&fb) {
            rest /= &fb;
            e += 1;
        }
        if e >= 2 {
            m *= fb.pow(e / 2);
        }
        f += if f == 2 { 1 } else { 2 };
    }
    m
}

const SMALL_PRIME_LIMIT: u32 = 1 << 12;

fn big_to_f64(v: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    v.to_f64().unwrap_or(f64::NAN)
}

impl fmt::Display for AlgebraicPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.p, self.q, self.d)
    }
}

impl FromStr for AlgebraicPoint {
    type Err = Error;

    /// Parses `p,q,D`.
    fn from_str(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 3 {
            return Err(parse_error("point", text, "expected p,q,D"));
        }
        let nums = parts
            .iter()
            .map(|s| {
                s.trim()
                    .parse::<BigInt>()
                    .map_err(|_| parse_error("point", text, format!("{s:?} is not an integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        AlgebraicPoint::new(nums[0].clone(), nums[1].clone(), nums[2].clone())
            .ok_or_else(|| parse_error("point", text, "need q > 0 and D < 0"))
    }
}

/// `z(F) = (b + √Δ)/(2a)` for a positive definite form.
pub fn base_point(f: &QuadraticForm) -> Result<AlgebraicPoint> {
    if !f.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    Ok(AlgebraicPoint::normalized(
        f.b.clone(),
        BigInt::from(2) * &f.a,
        f.discriminant().0,
    ))
}

/// The primitive integral form `G` with `z(G) = w`, and the rational `λ` with
/// `λ·G = [1/|w|², 2 Re w/|w|², 1]`.
pub fn form_from_point(w: &AlgebraicPoint) -> (QuadraticForm, BigRational) {
    let (p, q, d) = (&w.p, &w.q, &w.d);
    let norm_num = p * p - d;
    let raw = QuadraticForm {
        a: q * q,
        b: BigInt::from(2) * p * q,
        c: norm_num.clone(),
    };
    let g = raw.content().expect("q > 0 so the form is nonzero");
    let form = raw.div_exact(&g);
    (form, BigRational::new(g, norm_num))
}

/// Möbius action: `z ↦ (rz + s)/(tz + u)` for determinant +1 and
/// `z ↦ (rz̄ + s)/(tz̄ + u)` for determinant −1. Both keep `Im > 0`.
pub fn act_on_point(g: &GroupElement, z: &AlgebraicPoint) -> AlgebraicPoint {
    let (r, s, t, u) = (g.r(), g.s(), g.t(), g.u());
    let (p, q, d) = (&z.p, &z.q, &z.d);
    // (α + r√D)/(β + t√D) times the conjugate of the denominator; the
    // coefficient of √D in the numerator is q·det, and conjugating z for
    // det −1 cancels that sign.
    let alpha = r * p + s * q;
    let beta = t * p + u * q;
    let num = &alpha * &beta - r * t * d;
    let den = &beta * &beta - t * t * d;
    let sign = den.signum();
    let den = den.abs();
    let scale = q * q * d;
    if sign.is_zero() {
        unreachable!("t z + u vanishes only for real z");
    }
    AlgebraicPoint::normalized(num * sign, den, scale)
}

pub fn in_fundamental_domain_pi(z: &AlgebraicPoint) -> bool {
    z.in_fundamental_domain_pi()
}

pub fn in_fundamental_domain_pibar(z: &AlgebraicPoint) -> bool {
    z.in_fundamental_domain_pibar()
}

pub fn point_equals(z1: &AlgebraicPoint, z2: &AlgebraicPoint) -> bool {
    z1.point_equals(z2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{generator_element, Letter};

    fn pt(p: i64, q: i64, d: i64) -> AlgebraicPoint {
        AlgebraicPoint::new(p, q, d).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn normalization_picks_smallest_denominator() {
        assert_eq!(pt(0, 2, -4), pt(0, 1, -1));
        assert_eq!(pt(2, 4, -20), pt(1, 2, -5));
        assert_eq!(pt(6, 12, -144), pt(1, 2, -4));
        assert!(pt(0, 2, -4).point_equals(&pt(0, 1, -1)));
        // residual square factor that the plain gcd descent misses
        let z = pt(4, 8, -12);
        assert_eq!(z.q(), &BigInt::from(4));
        assert_eq!(z.d(), &BigInt::from(-3));
        let big = BigInt::from(1_000_003i64);
        let w = AlgebraicPoint::new(
            big.clone() * &big,
            big.clone() * &big * 2,
            -(&big * &big) * 7,
        )
        .unwrap();
        assert_eq!(w.q(), &(big * 2));
        assert_eq!(w.d(), &BigInt::from(-7));
        assert!(AlgebraicPoint::new(1, 0, -1).is_none());
        assert!(AlgebraicPoint::new(1, 2, 3).is_none());
    }

    #[test]
    fn base_point_examples() {
        assert_eq!(
            base_point(&QuadraticForm::new(1, 0, 1)).unwrap(),
            pt(0, 2, -4)
        );
        assert_eq!(
            base_point(&QuadraticForm::new(1, 1, 1)).unwrap(),
            pt(1, 2, -3)
        );
        let z = base_point(&QuadraticForm::new(2, 2, 3)).unwrap();
        assert_eq!(z, pt(1, 2, -5));
        assert_eq!(z.re(), rat(1, 2));
        assert_eq!(z.abs_sq(), rat(3, 2));
        assert_eq!(
            base_point(&QuadraticForm::new(1, 3, 1)),
            Err(Error::NotPositiveDefinite)
        );
    }

    #[test]
    fn form_from_point_examples() {
        assert_eq!(
            form_from_point(&pt(0, 1, -1)),
            (QuadraticForm::new(1, 0, 1), rat(1, 1))
        );
        assert_eq!(
            form_from_point(&pt(1, 2, -3)),
            (QuadraticForm::new(1, 1, 1), rat(1, 1))
        );
        let w = pt(1, 2, -5);
        let (g, scale) = form_from_point(&w);
        assert_eq!(g, QuadraticForm::new(2, 2, 3));
        assert_eq!(scale, rat(1, 3));
        assert_eq!(base_point(&g).unwrap(), w);
        // λ·G is the triple [1/|w|², 2x/|w|², 1]
        let inv = w.abs_sq().recip();
        assert_eq!(BigRational::from(g.a.clone()) * &scale, inv.clone());
        assert_eq!(
            BigRational::from(g.b.clone()) * &scale,
            rat(2, 1) * w.re() * inv
        );
        assert_eq!(BigRational::from(g.c.clone()) * &scale, rat(1, 1));
    }

    #[test]
    fn fundamental_domains() {
        assert!(pt(0, 1, -1).in_fundamental_domain_pi());
        assert!(pt(1, 2, -3).in_fundamental_domain_pi());
        assert!(pt(-1, 2, -3).in_fundamental_domain_pi());
        assert!(!pt(3, 2, -1).in_fundamental_domain_pi());
        assert!(!pt(0, 2, -1).in_fundamental_domain_pi());

        assert!(pt(0, 1, -1).in_fundamental_domain_pibar());
        assert!(pt(1, 2, -3).in_fundamental_domain_pibar());
        assert!(!pt(-1, 2, -3).in_fundamental_domain_pibar());
    }

    #[test]
    fn point_action_examples() {
        let i = pt(0, 1, -1);
        let rho = pt(-1, 2, -3);
        assert_eq!(act_on_point(&generator_element(Letter::T), &i), i);
        assert_eq!(act_on_point(&generator_element(Letter::U), &rho), rho);
        assert_eq!(
            act_on_point(&generator_element(Letter::R), &pt(1, 2, -3)),
            rho
        );
        // z + 1
        let z = pt(1, 2, -5);
        assert_eq!(
            act_on_point(&GroupElement::translation(1), &z),
            pt(3, 2, -5)
        );
        // -1/z for z = 2i is i/2
        assert_eq!(
            act_on_point(&generator_element(Letter::T), &pt(0, 1, -4)),
            pt(0, 2, -1)
        );
    }

    #[test]
    fn text_format() {
        assert_eq!(pt(1, 2, -5).to_string(), "1,2,-5");
        assert_eq!("0,2,-4".parse::<AlgebraicPoint>().unwrap(), pt(0, 1, -1));
        assert!("0,-2,-4".parse::<AlgebraicPoint>().is_err());
        assert!("0,2".parse::<AlgebraicPoint>().is_err());
    }
}
