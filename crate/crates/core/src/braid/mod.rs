//! Artin braids, the pure braid generators, strand deletion and Brunnian detection.
//!
//! Braid words are stored freely reduced as letter sequences; the braid
//! relations are never applied in storage. Equality of braids as group
//! elements is decided through the Artin representation
//! ([`artin_action`], [`is_trivial`]).

mod artin;
mod generators;
mod identities;
mod sample;
mod strands;

use std::fmt;

use crate::error::{invalid, Error, Result};

pub use artin::{artin_action, is_trivial, same_braid, ArtinAutomorphism};
pub use generators::{gen_a, gen_a0, gen_t, pure_generators};
pub use identities::{check_a0_forms, check_braid_relations, check_t_conjugate_to_a, check_t_equals_a, IdentityTally};
pub use sample::{read_corpus, sample_brun_generators, write_corpus, BrunSample, BrunStream, Corpus};
pub use strands::{delete_strand, is_brunnian, is_pure, permutation};

/// `σ_index^{±1}`, crossing positions `index` and `index + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    index: u32,
    inverse: bool,
}

impl Crossing {
    pub fn pos(index: u32) -> Self {
        assert!(index >= 1, "crossing index must be at least 1");
        Crossing { index, inverse: false }
    }

    pub fn neg(index: u32) -> Self {
        assert!(index >= 1, "crossing index must be at least 1");
        Crossing { index, inverse: true }
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn inv(self) -> Self {
        Crossing { index: self.index, inverse: !self.inverse }
    }

    fn cancels(self, other: Crossing) -> bool {
        self.index == other.index && self.inverse != other.inverse
    }
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "s{}^-1", self.index)
        } else {
            write!(f, "s{}", self.index)
        }
    }
}

/// A braid word on `strands` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Braid {
    strands: usize,
    word: Vec<Crossing>,
}

fn push_reduced(word: &mut Vec<Crossing>, c: Crossing) {
    match word.last() {
        Some(&top) if top.cancels(c) => {
            word.pop();
        }
        _ => word.push(c),
    }
}

impl Braid {
    pub fn identity(strands: usize) -> Self {
        Braid { strands, word: Vec::new() }
    }

    pub fn new<I: IntoIterator<Item = Crossing>>(strands: usize, crossings: I) -> Result<Self> {
        let mut word = Vec::new();
        for c in crossings {
            if c.index as usize >= strands {
                return Err(invalid(format!("{c} needs at least {} strands, have {strands}", c.index + 1)));
            }
            push_reduced(&mut word, c);
        }
        Ok(Braid { strands, word })
    }

    /// `σ_i` on `strands` strands.
    pub fn sigma(i: u32, strands: usize) -> Result<Self> {
        Braid::new(strands, [Crossing::pos(i)])
    }

    /// Builds from signed indices: `2` is `σ2`, `-2` is `σ2⁻¹`.
    pub fn from_signed(strands: usize, letters: &[i32]) -> Result<Self> {
        let crossings = letters
            .iter()
            .map(|&i| match i {
                0 => Err(invalid("crossing index must be nonzero")),
                i if i > 0 => Ok(Crossing::pos(i as u32)),
                i => Ok(Crossing::neg(i.unsigned_abs())),
            })
            .collect::<Result<Vec<_>>>()?;
        Braid::new(strands, crossings)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[Crossing] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    fn same_strands(&self, other: &Braid) {
        assert_eq!(self.strands, other.strands, "braids on different strand counts");
    }

    /// Concatenation, `self` first. Panics if the strand counts differ.
    pub fn multiply(&self, other: &Braid) -> Braid {
        self.same_strands(other);
        let mut word = self.word.clone();
        for &c in &other.word {
            push_reduced(&mut word, c);
        }
        Braid { strands: self.strands, word }
    }

    pub fn inverse(&self) -> Braid {
        Braid { strands: self.strands, word: self.word.iter().rev().map(|c| c.inv()).collect() }
    }

    /// `by⁻¹ · self · by`.
    pub fn conjugate(&self, by: &Braid) -> Braid {
        by.inverse().multiply(self).multiply(by)
    }

    /// `[self, other] = self⁻¹ other⁻¹ self other`.
    pub fn commutator(&self, other: &Braid) -> Braid {
        self.inverse().multiply(&other.inverse()).multiply(self).multiply(other)
    }

    pub fn pow(&self, exp: i64) -> Braid {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        (0..exp.unsigned_abs()).fold(Braid::identity(self.strands), |acc, _| acc.multiply(&base))
    }

    pub fn product<'a, I: IntoIterator<Item = &'a Braid>>(strands: usize, factors: I) -> Braid {
        factors.into_iter().fold(Braid::identity(strands), |acc, b| acc.multiply(b))
    }

    /// Renders in the `s<i>` / `s<i>^-1` grammar; the identity is the empty string.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Braid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Parses whitespace-separated `s<i>` / `s<i>^-1` tokens with `1 <= i < strands`.
pub fn parse_braid(text: &str, strands: usize) -> Result<Braid> {
    let mut word = Vec::new();
    for (position, token) in text.split_whitespace().enumerate() {
        let err = |message: String| Error::Parse { position, message: format!("{message}: `{token}`") };
        let body = token.strip_prefix('s').ok_or_else(|| err("expected a token starting with `s`".into()))?;
        let (digits, inverse) = match body.strip_suffix("^-1") {
            Some(d) => (d, true),
            None => (body, false),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err("malformed crossing index".into()));
        }
        let index: u32 = digits.parse().map_err(|_| err("crossing index out of range".into()))?;
        if index == 0 || index as usize >= strands {
            return Err(err(format!("crossing index must lie in 1..{strands}")));
        }
        push_reduced(&mut word, Crossing { index, inverse });
    }
    Ok(Braid { strands, word })
}

/// Smallest strand count on which every token of `text` is valid.
pub fn infer_strands(text: &str) -> Result<usize> {
    let max = text
        .split_whitespace()
        .filter_map(|t| t.strip_prefix('s'))
        .map(|t| t.trim_end_matches("^-1").parse::<usize>().unwrap_or(0))
        .max()
        .unwrap_or(0);
    // validation happens in parse_braid
    parse_braid(text, max + 1).map(|_| max + 1)
}
