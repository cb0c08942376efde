//! Enumeration of reduced and almost reduced forms of a negative discriminant.
//!
//! Any almost reduced form satisfies `4a² ≤ 4ac = b² − Δ ≤ a² − Δ`, so
//! `3a² ≤ −Δ`, which bounds the search.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::QuadraticForm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiscriminantQuery {
    delta: i64,
    primitive_only: bool,
}

impl DiscriminantQuery {
    /// Rejects `Δ ≥ 0` and `Δ ≡ 2, 3 (mod 4)`.
    pub fn new(delta: i64, primitive_only: bool) -> Result<Self> {
        if delta >= 0 || !matches!(delta.rem_euclid(4), 0 | 1) {
            return Err(Error::InvalidDiscriminant(delta.to_string()));
        }
        Ok(DiscriminantQuery {
            delta,
            primitive_only,
        })
    }

    pub fn from_bigint(delta: &BigInt, primitive_only: bool) -> Result<Self> {
        let small = delta
            .to_i64()
            .ok_or_else(|| Error::DiscriminantTooLarge(delta.to_string()))?;
        Self::new(small, primitive_only)
    }

    pub fn delta(&self) -> i64 {
        self.delta
    }

    pub fn primitive_only(&self) -> bool {
        self.primitive_only
    }

    /// Largest `a` with `3a² ≤ −Δ`.
    fn max_leading(&self) -> i64 {
        let bound = -(self.delta as i128);
        let mut a = ((bound / 3) as f64).sqrt() as i128;
        while 3 * (a + 1) * (a + 1) <= bound {
            a += 1;
        }
        while a > 0 && 3 * a * a > bound {
            a -= 1;
        }
        a as i64
    }

    fn scan(&self, keep: impl Fn(i64, i64, i64) -> bool + Sync) -> Vec<QuadraticForm> {
        let amax = self.max_leading();
        let delta = self.delta as i128;
        let parity = self.delta.rem_euclid(2);
        let mut triples: Vec<(i64, i64, i64)> = (-amax..=amax)
            .into_par_iter()
            .filter(|b| b.rem_euclid(2) == parity)
            .flat_map_iter(|b| {
                let num = (b as i128) * (b as i128) - delta;
                let lo = b.abs().max(1);
                let keep = &keep;
                (lo..=amax).filter_map(move |a| {
                    let four_a = 4 * a as i128;
                    if num % four_a != 0 {
                        return None;
                    }
                    let c = i64::try_from(num / four_a).ok()?;
                    if c < a || !keep(a, b, c) {
                        return None;
                    }
                    if self.primitive_only && a.gcd(&b).gcd(&c) != 1 {
                        return None;
                    }
                    Some((a, b, c))
                })
            })
            .collect();
        triples.sort_unstable();
        triples
            .into_iter()
            .map(|(a, b, c)| QuadraticForm::new(a, b, c))
            .collect()
    }
}

/// Reduced forms of discriminant `Δ`, sorted by `(a, b, c)`.
pub fn enumerate_reduced(q: &DiscriminantQuery) -> Vec<QuadraticForm> {
    q.scan(|a, b, c| !(b.abs() == a && b != a) && !(a == c && b < 0))
}

/// Almost reduced forms, i.e. `|b| ≤ a ≤ c` with no tie rules.
pub fn enumerate_almost_reduced(q: &DiscriminantQuery) -> Vec<QuadraticForm> {
    q.scan(|_, _, _| true)
}

/// `h(Δ)`: the number of primitive reduced forms.
pub fn class_number(delta: i64) -> Result<usize> {
    Ok(enumerate_reduced(&DiscriminantQuery::new(delta, true)?).len())
}

/// The number of almost reduced forms, counted as the query asks.
pub fn almost_reduced_count(q: &DiscriminantQuery) -> usize {
    enumerate_almost_reduced(q).len()
}
