#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use qforms::{GeneratorWord, GroupElement, Letter, QuadraticForm};

pub fn letter() -> impl Strategy<Value = Letter> {
    prop_oneof![
        Just(Letter::R),
        Just(Letter::T),
        Just(Letter::U),
        Just(Letter::V)
    ]
}

pub fn proper_letter() -> impl Strategy<Value = Letter> {
    prop_oneof![Just(Letter::T), Just(Letter::U), Just(Letter::V)]
}

pub fn word(max_len: usize) -> impl Strategy<Value = GeneratorWord> {
    prop::collection::vec(letter(), 0..=max_len).prop_map(GeneratorWord)
}

pub fn element(max_len: usize) -> impl Strategy<Value = GroupElement> {
    word(max_len).prop_map(|w| w.to_element())
}

pub fn proper_element(max_len: usize) -> impl Strategy<Value = GroupElement> {
    prop::collection::vec(proper_letter(), 0..=max_len).prop_map(|w| GeneratorWord(w).to_element())
}

/// Positive definite forms with coefficients bounded by `bound`.
pub fn pd_form(bound: i64) -> impl Strategy<Value = QuadraticForm> {
    (1..=bound, -bound..=bound, 1..=bound)
        .prop_filter("positive definite", |&(a, b, c)| {
            (b as i128) * (b as i128) < 4 * (a as i128) * (c as i128)
        })
        .prop_map(|(a, b, c)| QuadraticForm::new(a, b, c))
}

pub fn primitive_pd_form(bound: i64) -> impl Strategy<Value = QuadraticForm> {
    pd_form(bound).prop_filter("primitive", |f| f.is_primitive().unwrap())
}

pub fn any_form(bound: i64) -> impl Strategy<Value = QuadraticForm> {
    (-bound..=bound, -bound..=bound, -bound..=bound)
        .prop_map(|(a, b, c)| QuadraticForm::new(a, b, c))
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}
