//! Gauss reduction of positive definite forms with explicit witnesses, and
//! equivalence testing built on it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::QuadraticForm;
use crate::group::{generator_element, GeneratorWord, GroupElement, Letter};

/// Outcome of [`reduce`]. `witness` acts on the original form to give `reduced`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionResult {
    pub reduced: QuadraticForm,
    pub witness: GroupElement,
    pub word: GeneratorWord,
    pub steps: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EquivalenceMode {
    /// Determinant +1 witnesses only.
    Proper,
    /// Witnesses may also have determinant −1.
    Extended,
}

struct Reducer {
    form: QuadraticForm,
    witness: GroupElement,
    letters: Vec<Letter>,
    steps: usize,
}

impl Reducer {
    /// `(1 m; 0 1)`: `[a, b, c] ↦ [a, b + 2am, am² + bm + c]`.
    fn translate(&mut self, m: BigInt) {
        let shift = GroupElement::translation(m.clone());
        self.form = shift.act_on_form(&self.form);
        self.witness = self.witness.compose(&shift);
        let pair = if m.is_negative() {
            [Letter::V, Letter::T]
        } else {
            [Letter::T, Letter::U]
        };
        let mut k = m.abs();
        while k.is_positive() {
            self.letters.extend_from_slice(&pair);
            k -= 1;
        }
        self.steps += 1;
    }

    /// `T`: `[a, b, c] ↦ [c, −b, a]`.
    fn swap(&mut self) {
        let t = generator_element(Letter::T);
        self.form = t.act_on_form(&self.form);
        self.witness = self.witness.compose(&t);
        self.letters.push(Letter::T);
        self.steps += 1;
    }
}

/// Reduces a positive definite form by translations into `−a < b ≤ a` and
/// swaps while `a > c` (or `a = c`, `b < 0`). The witness always has
/// determinant +1.
pub fn reduce(f: &QuadraticForm) -> Result<ReductionResult> {
    if !f.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    let mut st = Reducer {
        form: f.clone(),
        witness: GroupElement::identity(),
        letters: Vec::new(),
        steps: 0,
    };
    loop {
        let a = &st.form.a;
        let b = &st.form.b;
        if !(b > &-a && b <= a) {
            // largest m with b + 2am ≤ a
            let m = (a - b).div_floor(&(BigInt::from(2) * a));
            st.translate(m);
        }
        if st.form.a > st.form.c {
            st.swap();
            continue;
        }
        if st.form.a == st.form.c && st.form.b.is_negative() {
            st.swap();
        }
        break;
    }
    debug_assert!(st.form.is_reduced());
    Ok(ReductionResult {
        reduced: st.form,
        witness: st.witness,
        word: GeneratorWord(st.letters).normalized(),
        steps: st.steps,
    })
}

/// A witness `g` with `g·G = F`, if one exists in the requested mode.
pub fn equivalent(
    f: &QuadraticForm,
    g: &QuadraticForm,
    mode: EquivalenceMode,
) -> Result<Option<GroupElement>> {
    if !f.is_positive_definite() || !g.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    if f.discriminant() != g.discriminant() {
        return Ok(None);
    }
    let rf = reduce(f)?;
    let back = rf.witness.inverse();
    let rg = reduce(g)?;
    if rf.reduced == rg.reduced {
        // act(back, act(wg, G)) = act(wg·back, G)
        return Ok(Some(rg.witness.compose(&back)));
    }
    if mode == EquivalenceMode::Extended {
        let mirror = generator_element(Letter::R);
        let rm = reduce(&mirror.act_on_form(g))?;
        if rf.reduced == rm.reduced {
            return Ok(Some(mirror.compose(&rm.witness).compose(&back)));
        }
    }
    Ok(None)
}

/// Smallest positive value of `F` on nonzero integer vectors: the leading
/// coefficient of the reduced form.
pub fn minimum_represented(f: &QuadraticForm) -> Result<BigInt> {
    Ok(reduce(f)?.reduced.a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(a: i64, b: i64, c: i64) -> QuadraticForm {
        QuadraticForm::new(a, b, c)
    }

    #[test]
    fn already_reduced() {
        let r = reduce(&f(1, 1, 1)).unwrap();
        assert_eq!(r.reduced, f(1, 1, 1));
        assert!(r.witness.is_identity());
        assert_eq!(r.steps, 0);
        assert!(r.word.is_empty());
    }

    #[test]
    fn hand_run_delta_minus_19() {
        let r = reduce(&f(11, 49, 55)).unwrap();
        assert_eq!(r.reduced, f(1, 1, 5));
        assert_eq!(r.witness.act_on_form(&f(11, 49, 55)), f(1, 1, 5));
        assert_eq!(r.word.to_element(), r.witness);
        assert_eq!(r.steps, 3);
    }

    #[test]
    fn tie_rule_swap() {
        let r = reduce(&f(3, -2, 3)).unwrap();
        assert_eq!(r.reduced, f(3, 2, 3));
        assert_eq!(r.reduced.discriminant().0, BigInt::from(-32));
        let r = reduce(&f(2, -2, 3)).unwrap();
        assert_eq!(r.reduced, f(2, 2, 3));
    }

    #[test]
    fn non_primitive_forms_keep_content() {
        let r = reduce(&f(22, 98, 110)).unwrap();
        assert_eq!(r.reduced, f(2, 2, 10));
    }

    #[test]
    fn rejects_indefinite() {
        assert_eq!(reduce(&f(1, 3, 1)), Err(Error::NotPositiveDefinite));
        assert_eq!(
            equivalent(&f(1, 0, 1), &f(-1, 0, -1), EquivalenceMode::Proper),
            Err(Error::NotPositiveDefinite)
        );
        assert_eq!(
            minimum_represented(&f(-1, 0, -37)),
            Err(Error::NotPositiveDefinite)
        );
    }

    #[test]
    fn equivalence_examples() {
        use EquivalenceMode::*;
        assert_eq!(equivalent(&f(1, 0, 5), &f(2, 2, 3), Proper).unwrap(), None);
        assert_eq!(equivalent(&f(2, 1, 3), &f(2, -1, 3), Proper).unwrap(), None);
        let w = equivalent(&f(2, 1, 3), &f(2, -1, 3), Extended)
            .unwrap()
            .unwrap();
        assert_eq!(w, generator_element(Letter::R));

        let w = equivalent(&f(11, 49, 55), &f(1, 1, 5), Proper)
            .unwrap()
            .unwrap();
        assert_eq!(w.det(), 1);
        assert_eq!(w.act_on_form(&f(1, 1, 5)), f(11, 49, 55));

        // different discriminants short-circuit
        assert_eq!(
            equivalent(&f(1, 0, 1), &f(1, 1, 1), Extended).unwrap(),
            None
        );
    }

    #[test]
    fn extended_prefers_proper_witness() {
        let w = equivalent(&f(1, 0, 5), &f(6, 10, 5), EquivalenceMode::Extended)
            .unwrap()
            .unwrap();
        assert_eq!(w.det(), 1);
        assert_eq!(w.act_on_form(&f(6, 10, 5)), f(1, 0, 5));
    }

    #[test]
    fn minimum_examples() {
        assert_eq!(minimum_represented(&f(1, 0, 5)).unwrap(), BigInt::from(1));
        assert_eq!(minimum_represented(&f(2, 2, 3)).unwrap(), BigInt::from(2));
        assert_eq!(
            minimum_represented(&f(11, 49, 55)).unwrap(),
            BigInt::from(1)
        );
    }
}
