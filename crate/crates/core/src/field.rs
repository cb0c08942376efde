//! Elements `(a + √−n)/c` of the set `Q*(√−n)`: integers `a`, `c ≠ 0` with
//! `b = (a² + n)/c` integral.
//!
//! `(−a, −c, n)` denotes the complex conjugate of `(a, c, n)`. Since real
//! Möbius maps commute with conjugation, identifying the two is compatible
//! with the modular group action; elements are stored with `c > 0`, i.e. as
//! the upper half plane member of the pair.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{parse_error, Error, Result};
use crate::forms::QuadraticForm;
use crate::geometry::AlgebraicPoint;
use crate::group::{generator_element, GroupElement, Letter};
use crate::reduction::{equivalent, EquivalenceMode};

/// Default bound on breadth-first orbit exploration.
pub const DEFAULT_MAX_DEPTH: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuadFieldElement {
    n: BigInt,
    c: BigInt,
    a: BigInt,
}

impl QuadFieldElement {
    /// The element `(a + √−n)/c` if `c ≠ 0` and `c | a² + n`.
    pub fn membership(
        a: impl Into<BigInt>,
        c: impl Into<BigInt>,
        n: impl Into<BigInt>,
    ) -> Result<Option<Self>> {
        let (a, c, n) = (a.into(), c.into(), n.into());
        if !n.is_positive() {
            return Err(Error::NonPositiveN(n.to_string()));
        }
        if c.is_zero() || !(&a * &a + &n).is_multiple_of(&c) {
            return Ok(None);
        }
        let (a, c) = if c.is_negative() { (-a, -c) } else { (a, c) };
        Ok(Some(QuadFieldElement { n, c, a }))
    }

    /// As [`membership`](Self::membership), additionally requiring `gcd(a, b, c) = 1`.
    pub fn membership_primitive(
        a: impl Into<BigInt>,
        c: impl Into<BigInt>,
        n: impl Into<BigInt>,
    ) -> Result<Option<Self>> {
        Ok(Self::membership(a, c, n)?.filter(|e| e.is_primitive()))
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn n(&self) -> &BigInt {
        &self.n
    }

    /// `b = (a² + n)/c`.
    pub fn b(&self) -> BigInt {
        (&self.a * &self.a + &self.n) / &self.c
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b()).gcd(&self.c).is_one()
    }

    /// `N(α) = αᾱ = (a² + n)/c²`.
    pub fn norm(&self) -> BigRational {
        BigRational::new(&self.a * &self.a + &self.n, &self.c * &self.c)
    }

    /// `[c, −2a, b]`, of discriminant `−4n`. Its root in the upper half plane
    /// is `α` itself; any other form with that root is a rational multiple.
    pub fn element_form(&self) -> QuadraticForm {
        QuadraticForm {
            a: self.c.clone(),
            b: BigInt::from(-2) * &self.a,
            c: self.b(),
        }
    }

    /// The rational `A′` with `F = A′·[c, −2a, b]`, if `F` is such a multiple.
    pub fn form_multiplier(&self, f: &QuadraticForm) -> Option<BigRational> {
        let base = self.element_form();
        let scale = BigRational::new(f.a.clone(), base.a.clone());
        let matches = |x: &BigInt, y: &BigInt| {
            BigRational::from(y.clone()) * &scale == BigRational::from(x.clone())
        };
        (matches(&f.b, &base.b) && matches(&f.c, &base.c)).then_some(scale)
    }

    pub fn to_point(&self) -> AlgebraicPoint {
        AlgebraicPoint::new(self.a.clone(), self.c.clone(), -&self.n).expect("c > 0 and n > 0")
    }

    /// `g(α)` for `g` of determinant +1.
    pub fn act(&self, g: &GroupElement) -> Result<QuadFieldElement> {
        if g.det() != 1 {
            return Err(Error::ImproperAction);
        }
        let (r, s, t, u) = (g.r(), g.s(), g.t(), g.u());
        let (a, c) = (&self.a, &self.c);
        let b = self.b();
        // g(α) = (P + c√−n)/Q with c | P and c | Q
        let new_a = r * t * &b + (r * u + s * t) * a + s * u * c;
        let new_c = t * t * &b + BigInt::from(2) * t * u * a + u * u * c;
        let image = QuadFieldElement::membership(new_a, new_c, self.n.clone())?
            .expect("Q*(√−n) is closed under the modular group");
        Ok(image)
    }

    fn generator_images(&self) -> [QuadFieldElement; 3] {
        [Letter::T, Letter::U, Letter::V].map(|l| {
            self.act(&generator_element(l))
                .expect("generators have determinant +1")
        })
    }
}

impl fmt::Display for QuadFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}/{}", self.a, self.c, self.n)
    }
}

impl FromStr for QuadFieldElement {
    type Err = Error;

    /// Parses `a/c/n`.
    fn from_str(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split('/').collect();
        if parts.len() != 3 {
            return Err(parse_error("element", text, "expected a/c/n"));
        }
        let nums = parts
            .iter()
            .map(|s| {
                s.trim()
                    .parse::<BigInt>()
                    .map_err(|_| parse_error("element", text, format!("{s:?} is not an integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        QuadFieldElement::membership(nums[0].clone(), nums[1].clone(), nums[2].clone())?
            .ok_or_else(|| parse_error("element", text, "need c ≠ 0 dividing a² + n"))
    }
}

pub fn membership(a: i64, c: i64, n: i64) -> Result<Option<QuadFieldElement>> {
    QuadFieldElement::membership(a, c, n)
}

pub fn norm(alpha: &QuadFieldElement) -> BigRational {
    alpha.norm()
}

pub fn element_form(alpha: &QuadFieldElement) -> QuadraticForm {
    alpha.element_form()
}

pub fn act(g: &GroupElement, alpha: &QuadFieldElement) -> Result<QuadFieldElement> {
    alpha.act(g)
}

/// Breadth-first exploration of an orbit under words in `T, U, V`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitExplorer {
    pub max_depth: usize,
}

impl Default for OrbitExplorer {
    fn default() -> Self {
        OrbitExplorer {
            max_depth: DEFAULT_MAX_DEPTH,
        }
    }
}

/// Both answers to "is `β` in the orbit of `α`", side by side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub depth: usize,
    /// `β` was found among the images of `α` under words of length ≤ `depth`.
    pub reachable: bool,
    /// The associated forms are properly equivalent.
    pub forms_equivalent: bool,
    /// Reachable but the forms are inequivalent. Never expected.
    pub violation: bool,
    /// Forms equivalent but `β` lies beyond the search depth.
    pub unconfirmed: bool,
}

impl OrbitExplorer {
    pub fn new(max_depth: usize) -> Self {
        OrbitExplorer { max_depth }
    }

    /// Everything reachable from `α` by at most `depth` generators.
    pub fn explore(
        &self,
        alpha: &QuadFieldElement,
        depth: usize,
    ) -> Result<BTreeSet<QuadFieldElement>> {
        if depth > self.max_depth {
            return Err(Error::DepthExceeded {
                depth,
                max: self.max_depth,
            });
        }
        let mut seen: HashSet<QuadFieldElement> = HashSet::from([alpha.clone()]);
        let mut frontier = vec![alpha.clone()];
        for _ in 0..depth {
            if frontier.is_empty() {
                break;
            }
            let images: Vec<QuadFieldElement> = frontier
                .par_iter()
                .flat_map_iter(|e| e.generator_images())
                .collect();
            let mut next = Vec::new();
            for e in images {
                if seen.insert(e.clone()) {
                    next.push(e);
                }
            }
            frontier = next;
        }
        Ok(seen.into_iter().collect())
    }

    pub fn same_orbit_form_check(
        &self,
        alpha: &QuadFieldElement,
        beta: &QuadFieldElement,
        depth: usize,
    ) -> Result<OrbitReport> {
        if alpha.n != beta.n {
            return Err(Error::MismatchedN(alpha.n.to_string(), beta.n.to_string()));
        }
        let reachable = self.explore(alpha, depth)?.contains(beta);
        let forms_equivalent = equivalent(
            &alpha.element_form(),
            &beta.element_form(),
            EquivalenceMode::Proper,
        )?
        .is_some();
        Ok(OrbitReport {
            depth,
            reachable,
            forms_equivalent,
            violation: reachable && !forms_equivalent,
            unconfirmed: forms_equivalent && !reachable,
        })
    }
}

pub fn orbit_explore(alpha: &QuadFieldElement, depth: usize) -> Result<BTreeSet<QuadFieldElement>> {
    OrbitExplorer::default().explore(alpha, depth)
}

pub fn same_orbit_form_check(
    alpha: &QuadFieldElement,
    beta: &QuadFieldElement,
    depth: usize,
) -> Result<OrbitReport> {
    OrbitExplorer::default().same_orbit_form_check(alpha, beta, depth)
}
