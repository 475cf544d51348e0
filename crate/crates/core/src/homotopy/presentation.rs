use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::word::{commutator, Letter, Word};

/// Answer of a membership query that may fall outside the decidable class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Membership {
    Member,
    NonMember,
    /// The quotient did not reduce to a free group by eliminating generators
    /// that occur exactly once in a relator.
    UndecidedByThisTool,
}

/// A finite presentation with named generators. Words use `x_k` for the
/// `k`-th generator in `names`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    names: Vec<String>,
    relators: Vec<Word>,
    /// Generator indices of the puncture letters, in order.
    punctures: Vec<u32>,
}

fn letters(range: std::ops::RangeInclusive<u32>) -> impl DoubleEndedIterator<Item = Letter> {
    range.map(Letter::pos)
}

impl Presentation {
    pub fn new(names: Vec<String>, relators: Vec<Word>, punctures: Vec<u32>) -> Result<Self> {
        let rank = names.len() as u32;
        if let Some(r) = relators.iter().find(|r| r.max_index() > rank) {
            return Err(invalid(format!("relator {r} uses a generator beyond the {rank} named")));
        }
        if let Some(p) = punctures.iter().find(|&&p| p == 0 || p > rank) {
            return Err(invalid(format!("puncture index {p} out of range")));
        }
        Ok(Presentation { names, relators, punctures })
    }

    /// `⟨x1, …, xm | x1 ⋯ xm⟩`.
    pub fn sphere(m: u32) -> Result<Self> {
        if m < 2 {
            return Err(invalid("m must be at least 2"));
        }
        let names = (1..=m).map(|k| format!("x{k}")).collect();
        Presentation::new(names, vec![Word::from_letters(letters(1..=m))], (1..=m).collect())
    }

    /// `⟨a1, x1, …, xm | a1² = x1 ⋯ xm⟩`.
    pub fn projective_plane(m: u32) -> Result<Self> {
        if m < 2 {
            return Err(invalid("m must be at least 2"));
        }
        let names = std::iter::once("a1".to_string()).chain((1..=m).map(|k| format!("x{k}"))).collect();
        let relator = Word::from_letters([Letter::neg(1), Letter::neg(1)].into_iter().chain(letters(2..=m + 1)));
        Presentation::new(names, vec![relator], (2..=m + 1).collect())
    }

    /// `⟨a1, b1, …, ag, bg, y1, …, yt, x1, …, xm | ∏[ai, bi] = ∏ yj · ∏ xi⟩`, `g > 0` or `t > 0`.
    pub fn oriented_surface(g: u32, t: u32, m: u32) -> Result<Self> {
        if g == 0 && t == 0 {
            return Err(invalid("need g > 0 or t > 0"));
        }
        let mut names: Vec<String> = (1..=g).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect();
        names.extend((1..=t).map(|j| format!("y{j}")));
        names.extend((1..=m).map(|k| format!("x{k}")));
        let lhs = (0..g).fold(Word::identity(), |acc, i| {
            acc.multiply(&commutator(&Word::generator(2 * i + 1), &Word::generator(2 * i + 2)))
        });
        let first = 2 * g + 1;
        let rhs = Word::from_letters(letters(first..=first + t + m - 1));
        let punctures = (first + t..first + t + m).collect();
        Presentation::new(names, vec![lhs.multiply(&rhs.invert())], punctures)
    }

    /// `⟨a1, …, ah, y1, …, yt, x1, …, xm | ∏ ai² = ∏ yj · ∏ xi⟩`, `h > 1` or `t > 0`.
    pub fn nonoriented_surface(h: u32, t: u32, m: u32) -> Result<Self> {
        if h <= 1 && t == 0 {
            return Err(invalid("need h > 1 or t > 0"));
        }
        let mut names: Vec<String> = (1..=h).map(|i| format!("a{i}")).collect();
        names.extend((1..=t).map(|j| format!("y{j}")));
        names.extend((1..=m).map(|k| format!("x{k}")));
        let lhs = Word::from_letters((1..=h).flat_map(|i| [Letter::pos(i), Letter::pos(i)]));
        let first = h + 1;
        let rhs = Word::from_letters(letters(first..=first + t + m - 1));
        let punctures = (first + t..first + t + m).collect();
        Presentation::new(names, vec![lhs.multiply(&rhs.invert())], punctures)
    }

    /// The free product of two presentations on disjoint alphabets. Generator
    /// names get a `1.` / `2.` prefix; punctures are listed left factor first.
    pub fn free_product(left: &Presentation, right: &Presentation) -> Result<Self> {
        let shift = left.rank();
        let shifted: Vec<Word> = (1..=right.rank()).map(|k| Word::generator(k + shift)).collect();
        let names =
            left.names.iter().map(|n| format!("1.{n}")).chain(right.names.iter().map(|n| format!("2.{n}"))).collect();
        let relators =
            left.relators.iter().cloned().chain(right.relators.iter().map(|r| r.substitute(&shifted))).collect();
        let punctures = left.punctures.iter().copied().chain(right.punctures.iter().map(|p| p + shift)).collect();
        Presentation::new(names, relators, punctures)
    }

    pub fn rank(&self) -> u32 {
        self.names.len() as u32
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn punctures(&self) -> &[u32] {
        &self.punctures
    }

    /// Generator index of the `k`-th puncture letter, 1-based.
    pub fn puncture(&self, k: usize) -> Result<u32> {
        self.punctures
            .get(k.wrapping_sub(1))
            .copied()
            .ok_or_else(|| invalid(format!("puncture {k} out of range 1..={}", self.punctures.len())))
    }

    /// Relators rendered with generator names.
    pub fn render(&self, w: &Word) -> String {
        w.letters()
            .iter()
            .map(|l| {
                let name = &self.names[l.index() as usize - 1];
                if l.is_inverse() {
                    format!("{name}^-1")
                } else {
                    name.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Whether `w` lies in the normal closure of the generators `killed`.
    ///
    /// Passes to the quotient by killing those generators, then repeatedly
    /// solves a relator for a generator occurring in it exactly once. If every
    /// relator is consumed or becomes trivial, the quotient is free on the
    /// remaining generators and the answer is decided.
    pub fn member(&self, w: &Word, killed: &BTreeSet<u32>) -> Result<Membership> {
        if w.max_index() > self.rank() {
            return Err(invalid(format!("{w} uses a generator beyond the {} named", self.rank())));
        }
        let kill = |u: &Word| Word::from_letters(u.letters().iter().copied().filter(|l| !killed.contains(&l.index())));
        let mut word = kill(w);
        let mut relators: Vec<Word> = self.relators.iter().map(kill).filter(|r| !r.is_identity()).collect();
        while !relators.is_empty() {
            let Some((pos, y)) = relators.iter().enumerate().find_map(|(k, r)| single_occurrence(r).map(|y| (k, y)))
            else {
                return Ok(Membership::UndecidedByThisTool);
            };
            let r = relators.swap_remove(pos);
            let mut images: Vec<Word> = (1..=self.rank()).map(Word::generator).collect();
            images[y as usize - 1] = solve_for(&r, y);
            word = word.substitute(&images);
            relators = relators.iter().map(|u| u.substitute(&images)).filter(|u| !u.is_identity()).collect();
        }
        Ok(if word.is_identity() { Membership::Member } else { Membership::NonMember })
    }
}

/// Largest generator index occurring exactly once in `r`.
fn single_occurrence(r: &Word) -> Option<u32> {
    let mut counts = std::collections::BTreeMap::new();
    for l in r.letters() {
        *counts.entry(l.index()).or_insert(0usize) += 1;
    }
    counts.into_iter().rev().find(|&(_, c)| c == 1).map(|(y, _)| y)
}

/// From `r = A y^ε B = 1`, `y = (A⁻¹ B⁻¹)^ε`.
fn solve_for(r: &Word, y: u32) -> Word {
    let ls = r.letters();
    let at = ls.iter().position(|l| l.index() == y).expect("y occurs in r");
    let a = Word::from_letters(ls[..at].iter().copied());
    let b = Word::from_letters(ls[at + 1..].iter().copied());
    let value = a.invert().multiply(&b.invert());
    if ls[at].is_inverse() {
        value.invert()
    } else {
        value
    }
}
