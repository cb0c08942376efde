//! Quadratic residues, the Legendre symbol, and the residue criterion for
//! `x² + py² ~ λ(x² + py²)`.

use std::collections::BTreeSet;

use num_bigint::{BigInt, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Bases that make Miller–Rabin deterministic below 2⁶⁴.
const DETERMINISTIC_BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Random rounds above 2⁶⁴; each lets a composite through with probability
/// at most 1/4, so 40 rounds bound the error by 2⁻⁸⁰.
const RANDOM_ROUNDS: usize = 40;

/// Largest modulus for which [`quadratic_residues`] builds a table.
pub const RESIDUE_TABLE_LIMIT: u64 = 10_000_000;

/// Primality test: deterministic for `n < 2⁶⁴`, probabilistic with error below
/// 2⁻⁸⁰ beyond.
pub fn is_prime(n: &BigInt) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_negative() {
        return false;
    }
    let two = BigInt::from(2);
    if n < &two {
        return false;
    }
    for &p in DETERMINISTIC_BASES.iter() {
        let p = BigInt::from(p);
        if n == &p {
            return true;
        }
        if n.is_multiple_of(&p) {
            return false;
        }
    }
    let n_minus_one = n - 1u32;
    let mut d = n_minus_one.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    let witness = |a: &BigInt| -> bool {
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_one {
            return false;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_one {
                return false;
            }
        }
        true
    };
    let mut rng = rand::thread_rng();
    let upper = n - 2u32;
    !(0..RANDOM_ROUNDS).any(|_| witness(&rng.gen_bigint_range(&two, &upper)))
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in DETERMINISTIC_BASES.iter() {
        let p = p as u64;
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    DETERMINISTIC_BASES.iter().all(|&a| {
        let mut x = pow_mod(a as u64, d, n);
        if x == 1 || x == n - 1 {
            return true;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                return true;
            }
        }
        false
    })
}

pub fn is_odd_prime(p: &BigInt) -> bool {
    p.is_odd() && is_prime(p)
}

fn require_odd_prime(p: &BigInt) -> Result<()> {
    if is_odd_prime(p) {
        Ok(())
    } else {
        Err(Error::NotOddPrime(p.to_string()))
    }
}

/// `(λ/p)` by Euler's criterion `λ^((p−1)/2) mod p`.
pub fn legendre(lambda: &BigInt, p: &BigInt) -> Result<i8> {
    require_odd_prime(p)?;
    let residue = lambda.mod_floor(p);
    if let (Some(r), Some(m)) = (residue.to_u64(), p.to_u64()) {
        return Ok(match pow_mod(r, (m - 1) / 2, m) {
            0 => 0,
            1 => 1,
            _ => -1,
        });
    }
    if residue.is_zero() {
        return Ok(0);
    }
    let e = (p - 1u32) >> 1;
    let v = residue.modpow(&e, p);
    Ok(if v.is_one() { 1 } else { -1 })
}

/// `{r² mod p : 1 ≤ r ≤ p − 1}`.
pub fn quadratic_residues(p: u64) -> Result<BTreeSet<u64>> {
    require_odd_prime(&BigInt::from(p))?;
    if p > RESIDUE_TABLE_LIMIT {
        return Err(Error::ModulusTooLarge(p.to_string()));
    }
    Ok((1..=(p - 1) / 2).map(|r| r * r % p).collect())
}

/// Whether `p − a` is a residue, given that `a` is one. For `p ≡ 1 (mod 4)`
/// it always is and for `p ≡ 3 (mod 4)` it never is, because `(−1/p)`
/// decides it.
pub fn residue_complement_law(p: &BigInt, a: &BigInt) -> Result<bool> {
    if legendre(a, p)? != 1 {
        return Err(Error::NotQuadraticResidue(a.to_string(), p.to_string()));
    }
    let complement = legendre(&(p - a), p)? == 1;
    let predicted = p.mod_floor(&BigInt::from(4)).is_one();
    assert_eq!(
        complement, predicted,
        "complement law violated for p={p}, a={a}"
    );
    Ok(complement)
}

/// The criterion `(λ/p) = 1` for `x² + py²` being equivalent to `λx² + λpy²`.
///
/// Only necessity is derivable: an equivalence forces `r² + pt² = λ`, hence
/// `r² ≡ λ (mod p)`. For `λ < 0` no integral substitution can exist although
/// the criterion may hold; [`scaled_representation_oracle`] searches directly.
pub fn scaled_form_criterion(lambda: &BigInt, p: &BigInt) -> Result<bool> {
    Ok(legendre(lambda, p)? == 1)
}

/// Searches `0 ≤ r, t ≤ bound` for `r² + pt² = λ`, smallest `t` first.
pub fn scaled_representation_oracle(
    lambda: &BigInt,
    p: &BigInt,
    bound: u64,
) -> Option<(BigInt, BigInt)> {
    if lambda.is_negative() {
        return None;
    }
    let bound_big = BigInt::from(bound);
    for t in 0..=bound {
        let t = BigInt::from(t);
        let rest = lambda - p * &t * &t;
        if rest.is_negative() {
            break;
        }
        let r = rest.sqrt();
        if &r * &r == rest && r <= bound_big {
            return Some((r, t));
        }
        if !p.is_positive() {
            // p ≤ 0 is outside the contract; one probe is enough
            break;
        }
    }
    None
}

/// Convenience wrapper over machine integers.
pub fn legendre_i64(lambda: i64, p: i64) -> Result<i8> {
    legendre(&BigInt::from(lambda), &BigInt::from(p))
}

/// The odd primes below `limit`, by a plain sieve.
pub fn odd_primes_below(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    if n < 3 {
        return Vec::new();
    }
    let mut composite = vec![false; n];
    let mut out = Vec::new();
    for i in 2..n {
        if composite[i] {
            continue;
        }
        if i > 2 {
            out.push(i as u64);
        }
        let mut j = i * i;
        while j < n {
            composite[j] = true;
            j += i;
        }
    }
    out
}
