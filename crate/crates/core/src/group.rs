//! The extended modular group `PGL(2, ℤ) = ⟨R, T, U | R² = T² = U³ = (RT)² = (RU)² = 1⟩`.
//!
//! Elements are integer matrices `(r s; t u)` with determinant ±1, taken modulo
//! `±I`. Forms are acted on by the substitution
//! `F(X, Y) ↦ F(rX + sY, tX + uY)`, which gives
//!
//! ```text
//! A = ar² + brt + ct²
//! B = 2ars + b(ru + st) + 2ctu
//! C = as² + bsu + cu²
//! ```
//!
//! The substitution composes contravariantly: acting by `h` then by `g` is the
//! same as acting once by the matrix product `h·g`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{parse_error, Error, Result};
use crate::forms::QuadraticForm;

/// A generator of the presentation. `V` stands for `U²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    R,
    T,
    U,
    V,
}

impl Letter {
    pub fn from_char(ch: char) -> Result<Letter> {
        match ch {
            'R' => Ok(Letter::R),
            'T' => Ok(Letter::T),
            'U' => Ok(Letter::U),
            'V' => Ok(Letter::V),
            other => Err(Error::UnknownLetter(other)),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::R => 'R',
            Letter::T => 'T',
            Letter::U => 'U',
            Letter::V => 'V',
        }
    }

    /// `R·x·R` as a word: `RTR = T`, `RUR = TVT`, `RVR = TUT`.
    fn reflected(self) -> &'static [Letter] {
        match self {
            Letter::R => &[Letter::R],
            Letter::T => &[Letter::T],
            Letter::U => &[Letter::T, Letter::V, Letter::T],
            Letter::V => &[Letter::T, Letter::U, Letter::T],
        }
    }

    pub fn element(self) -> GroupElement {
        generator_element(self)
    }
}

/// An element of the extended modular group, stored with the canonical sign
/// `t > 0`, or `t = 0` and `u > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupElement {
    r: BigInt,
    s: BigInt,
    t: BigInt,
    u: BigInt,
}

impl GroupElement {
    /// Builds `(r s; t u)`, returning `None` unless `ru − st = ±1`.
    pub fn new(
        r: impl Into<BigInt>,
        s: impl Into<BigInt>,
        t: impl Into<BigInt>,
        u: impl Into<BigInt>,
    ) -> Option<GroupElement> {
        let (r, s, t, u) = (r.into(), s.into(), t.into(), u.into());
        let det = &r * &u - &s * &t;
        if det.abs() != BigInt::one() {
            return None;
        }
        Some(Self::canonical(r, s, t, u))
    }

    fn canonical(r: BigInt, s: BigInt, t: BigInt, u: BigInt) -> GroupElement {
        let flip = t.is_negative() || (t.is_zero() && u.is_negative());
        if flip {
            GroupElement {
                r: -r,
                s: -s,
                t: -t,
                u: -u,
            }
        } else {
            GroupElement { r, s, t, u }
        }
    }

    pub fn identity() -> GroupElement {
        Self::canonical(BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one())
    }

    /// `z ↦ z + m`, the matrix `(1 m; 0 1)`.
    pub fn translation(m: impl Into<BigInt>) -> GroupElement {
        Self::canonical(BigInt::one(), m.into(), BigInt::zero(), BigInt::one())
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }
    pub fn s(&self) -> &BigInt {
        &self.s
    }
    pub fn t(&self) -> &BigInt {
        &self.t
    }
    pub fn u(&self) -> &BigInt {
        &self.u
    }

    /// `ru − st`, either `+1` or `−1`.
    pub fn det(&self) -> i8 {
        if (&self.r * &self.u - &self.s * &self.t).is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        Self::canonical(
            &self.r * &other.r + &self.s * &other.t,
            &self.r * &other.s + &self.s * &other.u,
            &self.t * &other.r + &self.u * &other.t,
            &self.t * &other.s + &self.u * &other.u,
        )
    }

    pub fn inverse(&self) -> GroupElement {
        // adj(g) = det(g)·g⁻¹, and the sign is projectively irrelevant
        Self::canonical(self.u.clone(), -&self.s, -&self.t, self.r.clone())
    }

    pub fn pow(&self, mut k: u64) -> GroupElement {
        let mut base = self.clone();
        let mut acc = Self::identity();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        acc
    }

    /// `F(rX + sY, tX + uY)`.
    pub fn act_on_form(&self, f: &QuadraticForm) -> QuadraticForm {
        let (r, s, t, u) = (&self.r, &self.s, &self.t, &self.u);
        let (a, b, c) = (&f.a, &f.b, &f.c);
        let two = BigInt::from(2);
        QuadraticForm {
            a: a * r * r + b * r * t + c * t * t,
            b: &two * a * r * s + b * (r * u + s * t) + &two * c * t * u,
            c: a * s * s + b * s * u + c * u * u,
        }
    }

    /// The matrix `(u s; t r)`, i.e. `z ↦ (s + zu)/(r + zt)`.
    ///
    /// With base points `z(F) = (b + √Δ)/(2a)`, the base point of `g·F` is the image
    /// of `z(F)` under this transformation. It equals `R·g⁻¹·R` projectively.
    pub fn base_point_transform(&self) -> GroupElement {
        Self::canonical(
            self.u.clone(),
            self.s.clone(),
            self.t.clone(),
            self.r.clone(),
        )
    }

    /// A word in `R, T, U, V` representing this element.
    ///
    /// A determinant −1 element `g` is written as `R·(R·g)`. The determinant +1
    /// part is driven to a translation by the Euclidean descent on its bottom
    /// row, alternating translations `S^k = (TU)^k` and inversions `T`.
    pub fn to_word(&self) -> GeneratorWord {
        let mut letters = Vec::new();
        let mut cur = if self.det() < 0 {
            letters.push(Letter::R);
            generator_element(Letter::R).compose(self)
        } else {
            self.clone()
        };

        // cur · M₁ · … · Mₙ = ±S^m
        let mut moves: Vec<Move> = Vec::new();
        while !cur.t.is_zero() {
            let t_abs = cur.t.abs();
            let reduced_u = cur.u.mod_floor(&t_abs);
            let k = (&reduced_u - &cur.u) / &cur.t;
            if !k.is_zero() {
                cur = cur.compose(&GroupElement::translation(k.clone()));
                moves.push(Move::Shift(k));
            }
            cur = cur.compose(&generator_element(Letter::T));
            moves.push(Move::Invert);
        }
        // cur is ±(1 m; 0 1) in canonical sign, so u = 1
        debug_assert!(cur.u.is_one() && cur.r.is_one());
        push_shift(&mut letters, &cur.s);
        for mv in moves.into_iter().rev() {
            match mv {
                Move::Shift(k) => push_shift(&mut letters, &-k),
                Move::Invert => letters.push(Letter::T),
            }
        }
        GeneratorWord(letters).normalized()
    }
}

enum Move {
    Shift(BigInt),
    Invert,
}

/// Appends `S^m` as `(TU)^m` or `(VT)^|m|`.
fn push_shift(letters: &mut Vec<Letter>, m: &BigInt) {
    let count = m.abs();
    let mut i = BigInt::zero();
    let pair = if m.is_negative() {
        [Letter::V, Letter::T]
    } else {
        [Letter::T, Letter::U]
    };
    while i < count {
        letters.extend_from_slice(&pair);
        i += 1;
    }
}

/// The matrix of one generator.
pub fn generator_element(letter: Letter) -> GroupElement {
    let m = |r: i64, s: i64, t: i64, u: i64| {
        GroupElement::canonical(r.into(), s.into(), t.into(), u.into())
    };
    match letter {
        Letter::R => m(1, 0, 0, -1),
        Letter::T => m(0, -1, 1, 0),
        Letter::U => m(0, -1, 1, 1),
        Letter::V => m(-1, -1, 1, 0),
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{};{},{}", self.r, self.s, self.t, self.u)
    }
}

impl FromStr for GroupElement {
    type Err = Error;

    /// Parses `r,s;t,u`.
    fn from_str(text: &str) -> Result<Self> {
        let rows: Vec<&str> = text.split(';').collect();
        if rows.len() != 2 {
            return Err(parse_error(
                "matrix",
                text,
                "expected two rows separated by ';'",
            ));
        }
        let mut entries = Vec::with_capacity(4);
        for row in rows {
            let cols: Vec<&str> = row.split(',').collect();
            if cols.len() != 2 {
                return Err(parse_error("matrix", text, "expected two entries per row"));
            }
            for col in cols {
                let v: BigInt = col.trim().parse().map_err(|_| {
                    parse_error("matrix", text, format!("{col:?} is not an integer"))
                })?;
                entries.push(v);
            }
        }
        let u = entries.pop().unwrap();
        let t = entries.pop().unwrap();
        let s = entries.pop().unwrap();
        let r = entries.pop().unwrap();
        GroupElement::new(r, s, t, u)
            .ok_or_else(|| parse_error("matrix", text, "determinant must be +1 or -1"))
    }
}

/// A word over `R, T, U, V` (with `V = U²`).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorWord(pub Vec<Letter>);

impl GeneratorWord {
    pub fn empty() -> GeneratorWord {
        GeneratorWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Left-to-right product of the generator matrices.
    pub fn to_element(&self) -> GroupElement {
        self.0.iter().fold(GroupElement::identity(), |acc, l| {
            acc.compose(&generator_element(*l))
        })
    }

    pub fn concat(&self, other: &GeneratorWord) -> GeneratorWord {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        GeneratorWord(letters)
    }

    /// Rewrites to the normal form `R^e · w` with `e ∈ {0, 1}` and `w`
    /// alternating between `T` and one of `U, V`. The result denotes the same
    /// matrix.
    ///
    /// Every `R` is pulled to the front with `xR = R·(RxR)`. For the mirror
    /// `R = diag(1, −1)` the conjugates are `RTR = T` and `RUR = TVT`; note
    /// that `(RU)²` is the hyperbolic element `(1 1; 1 2)` rather than the
    /// identity, while `(RT)² = (RTU)² = 1`. What remains after moving the
    /// `R`s is reduced in the free product `C₂ * C₃`.
    pub fn normalized(&self) -> GeneratorWord {
        let mut parity = false;
        let mut moved: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in self.0.iter().rev() {
            if l == Letter::R {
                parity = !parity;
            } else if parity {
                moved.extend(l.reflected().iter().rev());
            } else {
                moved.push(l);
            }
        }
        moved.reverse();

        let mut stack: Vec<Letter> = Vec::with_capacity(moved.len() + 1);
        if parity {
            stack.push(Letter::R);
        }
        let floor = stack.len();
        for l in moved {
            let mut incoming = Some(l);
            while let Some(x) = incoming {
                match stack.last().copied().filter(|_| stack.len() > floor) {
                    None => {
                        stack.push(x);
                        incoming = None;
                    }
                    Some(top) => match combine(top, x) {
                        Combined::Keep => {
                            stack.push(x);
                            incoming = None;
                        }
                        Combined::Cancel => {
                            stack.pop();
                            incoming = None;
                        }
                        Combined::Into(y) => {
                            stack.pop();
                            incoming = Some(y);
                        }
                    },
                }
            }
        }
        GeneratorWord(stack)
    }
}

enum Combined {
    Keep,
    Cancel,
    Into(Letter),
}

fn combine(top: Letter, next: Letter) -> Combined {
    use Letter::*;
    match (top, next) {
        (T, T) | (U, V) | (V, U) => Combined::Cancel,
        (U, U) => Combined::Into(V),
        (V, V) => Combined::Into(U),
        _ => Combined::Keep,
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for GeneratorWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        text.trim()
            .chars()
            .map(Letter::from_char)
            .collect::<Result<Vec<_>>>()
            .map(GeneratorWord)
    }
}

pub fn compose(g: &GroupElement, h: &GroupElement) -> GroupElement {
    g.compose(h)
}

pub fn inverse(g: &GroupElement) -> GroupElement {
    g.inverse()
}

pub fn act_on_form(g: &GroupElement, f: &QuadraticForm) -> QuadraticForm {
    g.act_on_form(f)
}

pub fn word_to_element(w: &GeneratorWord) -> GroupElement {
    w.to_element()
}

pub fn element_to_word(g: &GroupElement) -> GeneratorWord {
    g.to_word()
}

pub fn normalize_word(w: &GeneratorWord) -> GeneratorWord {
    w.normalized()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(r: i64, s: i64, t: i64, u: i64) -> GroupElement {
        GroupElement::new(r, s, t, u).unwrap()
    }

    fn word(s: &str) -> GeneratorWord {
        s.parse().unwrap()
    }

    #[test]
    fn generators() {
        assert_eq!(generator_element(Letter::T), el(0, -1, 1, 0));
        assert_eq!(generator_element(Letter::U), el(0, -1, 1, 1));
        assert_eq!(generator_element(Letter::V), el(-1, -1, 1, 0));
        assert_eq!(generator_element(Letter::V), el(1, 1, -1, 0));
        let u = generator_element(Letter::U);
        assert_eq!(u.compose(&u), generator_element(Letter::V));
        let r = generator_element(Letter::R);
        assert_eq!(r.det(), -1);
        assert!(r.compose(&r).is_identity());
        assert_eq!(Letter::from_char('X'), Err(Error::UnknownLetter('X')));
    }

    #[test]
    fn composition_examples() {
        let t = generator_element(Letter::T);
        let u = generator_element(Letter::U);
        assert!(t.compose(&t).is_identity());
        assert_eq!(t.compose(&u), el(1, 1, 0, 1));
        let g = el(2, 1, 1, 1);
        assert_eq!(GroupElement::identity().compose(&g), g);
    }

    #[test]
    fn inverse_examples() {
        let t = generator_element(Letter::T);
        assert_eq!(t.inverse(), t);
        assert_eq!(el(1, 1, 0, 1).inverse(), el(1, -1, 0, 1));
        let r = generator_element(Letter::R);
        assert_eq!(r.inverse(), r);
        let g = el(3, 2, 4, 3);
        assert!(g.compose(&g.inverse()).is_identity());
        let h = el(2, 1, 1, 0); // det -1
        assert!(h.compose(&h.inverse()).is_identity());
    }

    #[test]
    fn form_action_examples() {
        let f = QuadraticForm::new(5, 3, 7);
        assert_eq!(GroupElement::identity().act_on_form(&f), f);
        assert_eq!(
            generator_element(Letter::T).act_on_form(&QuadraticForm::new(1, 2, 3)),
            QuadraticForm::new(3, -2, 1)
        );
        let g = QuadraticForm::new(2, 1, 3);
        assert_eq!(generator_element(Letter::R).act_on_form(&g), g.mirror());
        // sign of the representative does not matter
        let raw_neg = GroupElement {
            r: (-1).into(),
            s: 0.into(),
            t: 0.into(),
            u: 1.into(),
        };
        assert_eq!(raw_neg.act_on_form(&g), g.mirror());
    }

    #[test]
    fn word_examples() {
        assert!(word("").to_element().is_identity());
        assert_eq!(word("TU").to_element(), el(1, 1, 0, 1));
        assert!(word("RTRT").to_element().is_identity());
        assert!(word("RTURTU").to_element().is_identity());
        assert_eq!(word("RURU").to_element(), el(1, 1, 1, 2));
        assert!(word("UUU").to_element().is_identity());
    }

    #[test]
    fn element_to_word_examples() {
        assert_eq!(GroupElement::identity().to_word(), GeneratorWord::empty());
        assert_eq!(el(1, 1, 0, 1).to_word(), word("TU"));
        assert_eq!(el(1, 0, 0, -1).to_word(), word("R"));
        assert_eq!(el(1, -3, 0, 1).to_word().to_element(), el(1, -3, 0, 1));
        let g = el(7, 3, 2, 1);
        assert_eq!(g.to_word().to_element(), g);
    }

    #[test]
    fn normalization() {
        for rel in [
            "TT", "UUU", "VU", "UV", "RR", "RTRT", "TRTR", "RTURTU", "RTVRTV",
        ] {
            assert_eq!(word(rel).normalized(), GeneratorWord::empty(), "{rel}");
        }
        assert_eq!(word("UU").normalized(), word("V"));
        assert_eq!(word("TUR").normalized(), word("RVT"));
        assert_eq!(word("RURU").normalized(), word("TVTU"));
        for w in ["TUR", "RURU", "URVTRRUT", "RVRTUUR"] {
            assert_eq!(
                word(w).normalized().to_element(),
                word(w).to_element(),
                "{w}"
            );
        }
        assert_eq!(word("TTUTVVT").normalized(), word("UTUT"));
    }

    #[test]
    fn text_formats() {
        assert_eq!(el(1, 1, 0, 1).to_string(), "1,1;0,1");
        assert_eq!(
            "0,-1;1,0".parse::<GroupElement>().unwrap(),
            generator_element(Letter::T)
        );
        assert!("1,1;1,1".parse::<GroupElement>().is_err());
        assert!("1,1,0,1".parse::<GroupElement>().is_err());
        assert_eq!(word("RTUV").to_string(), "RTUV");
        assert!("RTX".parse::<GeneratorWord>().is_err());
    }

    #[test]
    fn base_point_transform_is_conjugated_inverse() {
        let r = generator_element(Letter::R);
        for g in [
            el(2, 1, 1, 1),
            el(3, 5, 1, 2),
            el(2, 1, 1, 0),
            el(0, 1, 1, 0),
        ] {
            assert_eq!(
                g.base_point_transform(),
                r.compose(&g.inverse()).compose(&r),
                "{g}"
            );
        }
    }
}
