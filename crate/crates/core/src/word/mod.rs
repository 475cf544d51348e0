//! Free group words.
//!
//! A [`Word`] is a freely reduced sequence of [`Letter`]s over the indexed
//! alphabet `x1, x2, ...`. Every constructor reduces, so two words are equal
//! as group elements exactly when they are equal as values.
//!
//! The commutator convention throughout the crate is `[a, b] = a⁻¹ b⁻¹ a b`.

mod bracket;
mod generators;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

pub use bracket::{enumerate_brackets, evaluate_bracket, left_normed, BracketArrangement};
pub use generators::{
    fat_commutator, fat_generators, symmetric_generators, symmetric_generators_fix1, GeneratorStream, SubgroupSpec,
};

/// A basis symbol `x_index^sign`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    index: u32,
    inverse: bool,
}

impl Letter {
    pub fn new(index: u32, sign: i32) -> Result<Self> {
        if index == 0 {
            return Err(invalid("generator index must be at least 1"));
        }
        match sign {
            1 => Ok(Letter { index, inverse: false }),
            -1 => Ok(Letter { index, inverse: true }),
            _ => Err(invalid(format!("sign must be +1 or -1, got {sign}"))),
        }
    }

    /// `x_index`. Panics on index 0.
    pub fn pos(index: u32) -> Self {
        assert!(index >= 1, "generator index must be at least 1");
        Letter { index, inverse: false }
    }

    /// `x_index⁻¹`. Panics on index 0.
    pub fn neg(index: u32) -> Self {
        assert!(index >= 1, "generator index must be at least 1");
        Letter { index, inverse: true }
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn sign(self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn inv(self) -> Self {
        Letter { index: self.index, inverse: !self.inverse }
    }

    fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.inverse != other.inverse
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "x{}^-1", self.index)
        } else {
            write!(f, "x{}", self.index)
        }
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

/// Freely reduces a letter sequence.
pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        match out.last() {
            Some(&top) if top.cancels(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    Word { letters: out }
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    /// The single generator `x_index`.
    pub fn generator(index: u32) -> Self {
        Word { letters: vec![Letter::pos(index)] }
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        reduce(letters)
    }

    /// Builds a word from signed indices: `3` is `x3`, `-3` is `x3⁻¹`.
    pub fn from_signed(indices: &[i32]) -> Result<Self> {
        let letters = indices.iter().map(|&i| Letter::new(i.unsigned_abs(), i.signum())).collect::<Result<Vec<_>>>()?;
        Ok(reduce(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index occurring in the word, 0 for the identity.
    pub fn max_index(&self) -> u32 {
        self.letters.iter().map(|l| l.index).max().unwrap_or(0)
    }

    pub fn multiply(&self, other: &Word) -> Word {
        // both halves are reduced, so cancellation only happens at the seam
        let mut left = self.letters.clone();
        let mut skip = 0;
        while let (Some(&a), Some(&b)) = (left.last(), other.letters.get(skip)) {
            if !a.cancels(b) {
                break;
            }
            left.pop();
            skip += 1;
        }
        left.extend_from_slice(&other.letters[skip..]);
        Word { letters: left }
    }

    pub fn invert(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    /// `by⁻¹ · self · by`.
    pub fn conjugate(&self, by: &Word) -> Word {
        by.invert().multiply(self).multiply(by)
    }

    /// `[self, other] = self⁻¹ other⁻¹ self other`.
    pub fn commutator(&self, other: &Word) -> Word {
        commutator(self, other)
    }

    pub fn pow(&self, exp: i64) -> Word {
        let base = if exp < 0 { self.invert() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..exp.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }

    /// Substitutes `images[i - 1]` for every occurrence of `x_i`.
    ///
    /// Letters whose index exceeds `images.len()` are left in place.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        let push = |l: Letter, out: &mut Vec<Letter>| match out.last() {
            Some(&top) if top.cancels(l) => {
                out.pop();
            }
            _ => out.push(l),
        };
        for &l in &self.letters {
            match images.get(l.index as usize - 1) {
                Some(img) if l.inverse => {
                    for &m in img.letters.iter().rev() {
                        push(m.inv(), &mut out);
                    }
                }
                Some(img) => {
                    for &m in &img.letters {
                        push(m, &mut out);
                    }
                }
                None => push(l, &mut out),
            }
        }
        Word { letters: out }
    }

    /// Exponent sum of `x_index`.
    pub fn exponent_sum(&self, index: u32) -> i64 {
        self.letters.iter().filter(|l| l.index == index).map(|l| l.sign() as i64).sum()
    }

    /// Renders in the `x<k>` / `x<k>^-1` grammar; the identity is the empty string.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

/// Parses whitespace-separated `x<k>` / `x<k>^-1` tokens. Index 0 is rejected.
pub fn parse_word(text: &str) -> Result<Word> {
    let mut letters = Vec::new();
    for (position, token) in text.split_whitespace().enumerate() {
        let err = |message: &str| Error::Parse { position, message: format!("{message}: `{token}`") };
        let body = token.strip_prefix('x').ok_or_else(|| err("expected a token starting with `x`"))?;
        let (digits, inverse) = match body.strip_suffix("^-1") {
            Some(d) => (d, true),
            None => (body, false),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err("malformed generator index"));
        }
        let index: u32 = digits.parse().map_err(|_| err("generator index out of range"))?;
        if index == 0 {
            return Err(err("generator index must be at least 1"));
        }
        letters.push(Letter { index, inverse });
    }
    Ok(reduce(letters))
}

/// `[a, b] = a⁻¹ b⁻¹ a b`, reduced.
pub fn commutator(a: &Word, b: &Word) -> Word {
    a.invert().multiply(&b.invert()).multiply(a).multiply(b)
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_text())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_word(&s).map_err(serde::de::Error::custom)
    }
}

/// Number of reduced words of length exactly `len` over `rank` generators.
fn reduced_word_count(rank: u32, len: usize) -> f64 {
    if len == 0 {
        1.0
    } else {
        let r = rank as f64;
        2.0 * r * (2.0 * r - 1.0).powi(len as i32 - 1)
    }
}

/// Draws a reduced word uniformly among all reduced words of length at most
/// `max_len` over `x1..x_rank`.
pub fn random_reduced_word<R: rand::Rng + ?Sized>(rng: &mut R, rank: u32, max_len: usize) -> Word {
    if rank == 0 || max_len == 0 {
        return Word::identity();
    }
    let weights: Vec<f64> = (0..=max_len).map(|l| reduced_word_count(rank, l)).collect();
    let total: f64 = weights.iter().sum();
    let mut pick = rng.gen::<f64>() * total;
    let mut len = max_len;
    for (l, w) in weights.iter().enumerate() {
        if pick < *w {
            len = l;
            break;
        }
        pick -= w;
    }
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let index = rng.gen_range(1..=rank);
        let l = Letter { index, inverse: rng.gen_bool(0.5) };
        if letters.last().is_some_and(|&top| top.cancels(l)) {
            continue;
        }
        letters.push(l);
    }
    Word { letters }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_examples() {
        let seq = [Letter::pos(1), Letter::pos(2), Letter::neg(2), Letter::pos(1)];
        assert_eq!(reduce(seq), w("x1 x1"));
        assert_eq!(reduce([]), Word::identity());
        let collapse = [Letter::pos(1), Letter::neg(1), Letter::pos(2), Letter::neg(2)];
        assert!(reduce(collapse).is_identity());
    }

    #[test]
    fn group_operations() {
        assert!(w("x1").multiply(&w("x1^-1")).is_identity());
        assert_eq!(w("x1 x2").invert(), w("x2^-1 x1^-1"));
        assert_eq!(w("x1").conjugate(&w("x2")), w("x2^-1 x1 x2"));
    }

    #[test]
    fn commutator_convention() {
        assert_eq!(commutator(&w("x1"), &w("x2")).to_text(), "x1^-1 x2^-1 x1 x2");
        assert!(commutator(&w("x1"), &w("x1")).is_identity());
        assert!(commutator(&w("x1"), &Word::identity()).is_identity());
    }

    #[test]
    fn parser_grammar() {
        assert_eq!(w("x1 x2^-1").letters(), &[Letter::pos(1), Letter::neg(2)]);
        assert_eq!(w("  "), Word::identity());
        assert!(matches!(parse_word("x0"), Err(Error::Parse { position: 0, .. })));
        assert!(matches!(parse_word("x1 y2"), Err(Error::Parse { position: 1, .. })));
        assert!(parse_word("x1^2").is_err());
        assert!(parse_word("x").is_err());
        assert_eq!(w("x12^-1 x3").to_text(), "x12^-1 x3");
    }

    #[test]
    fn letter_validation() {
        assert!(Letter::new(0, 1).is_err());
        assert!(Letter::new(1, 0).is_err());
        assert_eq!(Letter::new(4, -1).unwrap(), Letter::neg(4));
    }

    #[test]
    fn substitution_is_a_homomorphism_on_examples() {
        let images = [w("x1 x2"), w("x2^-1")];
        let u = w("x1 x2^-1 x1^-1");
        assert_eq!(u.substitute(&images), w("x1 x2 x2 x2^-1 x1^-1"));
        assert_eq!(w("x3").substitute(&images), w("x3"));
    }

    #[test]
    fn random_words_are_reduced_and_bounded() {
        let mut rng = crate::rng::seeded(9);
        for _ in 0..500 {
            let r = random_reduced_word(&mut rng, 3, 5);
            assert!(r.len() <= 5);
            assert_eq!(reduce(r.letters().iter().copied()), r);
            assert!(r.max_index() <= 3);
        }
    }

    #[test]
    fn random_word_lengths_follow_reduced_word_counts() {
        // rank 1, max_len 2: identity, x1, x1^-1, x1 x1, x1^-1 x1^-1 are equally likely
        let mut rng = crate::rng::seeded(1);
        let mut counts = [0usize; 3];
        for _ in 0..50_000 {
            counts[random_reduced_word(&mut rng, 1, 2).len()] += 1;
        }
        let expected = [10_000.0, 20_000.0, 20_000.0];
        for (c, e) in counts.iter().zip(expected) {
            assert!((*c as f64 - e).abs() < 800.0, "{counts:?}");
        }
    }
}
