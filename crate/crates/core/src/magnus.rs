//! Truncated Magnus expansion `x ↦ 1 + X`, `x⁻¹ ↦ 1 - X + X² - …` into
//! noncommutative integer power series.
//!
//! A word lies in the `k`-th lower central series term `γ_k` of the free group
//! exactly when its expansion has no terms of degree `1..k`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Result};
use crate::word::Word;

/// A noncommutative monomial `X_{i1} X_{i2} ⋯`, ordered by degree then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> usize {
        self.0.len()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Integer power series in noncommuting `X_i`, truncated above total degree `cutoff`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    cutoff: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl TruncatedSeries {
    pub fn zero(cutoff: usize) -> Self {
        TruncatedSeries { cutoff, terms: BTreeMap::new() }
    }

    pub fn one(cutoff: usize) -> Self {
        let mut s = Self::zero(cutoff);
        s.terms.insert(Monomial(Vec::new()), BigInt::one());
        s
    }

    /// Builds a series from explicit terms, dropping zeros and anything above the cutoff.
    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, i64)>>(cutoff: usize, terms: I) -> Self {
        let mut s = Self::zero(cutoff);
        for (mono, c) in terms {
            s.add_term(Monomial(mono), BigInt::from(c));
        }
        s
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &[u32]) -> BigInt {
        self.terms.get(&Monomial(mono.to_vec())).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial(Vec::new())).is_some_and(|c| c.is_one())
    }

    /// Smallest positive degree carrying a nonzero coefficient.
    pub fn lowest_nonconstant_degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).find(|&d| d > 0)
    }

    fn add_term(&mut self, mono: Monomial, c: BigInt) {
        if mono.degree() > self.cutoff || c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Truncated product; the result keeps the smaller of the two cutoffs.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let cutoff = self.cutoff.min(other.cutoff);
        let mut out = Self::zero(cutoff);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if a.degree() + b.degree() > cutoff {
                    // `b` iterates in increasing degree
                    break;
                }
                let mut m = a.0.clone();
                m.extend_from_slice(&b.0);
                out.add_term(Monomial(m), ca * cb);
            }
        }
        out
    }

    /// Right-multiplies by the image of a single letter.
    fn mul_letter(&self, index: u32, inverse: bool) -> TruncatedSeries {
        let mut out = Self::zero(self.cutoff);
        for (a, ca) in &self.terms {
            out.add_term(a.clone(), ca.clone());
            let mut m = a.0.clone();
            let mut sign = if inverse { -BigInt::one() } else { BigInt::one() };
            while m.len() < self.cutoff {
                m.push(index);
                out.add_term(Monomial(m.clone()), &sign * ca);
                if !inverse {
                    break;
                }
                sign = -sign;
            }
        }
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (mono, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if mono.0.is_empty() {
                write!(f, "{magnitude}")?;
                continue;
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}·")?;
            }
            for (j, x) in mono.0.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "X{x}")?;
            }
        }
        Ok(())
    }
}

/// The Magnus image of `w`, truncated above degree `cutoff`.
pub fn expand(w: &Word, cutoff: usize) -> TruncatedSeries {
    w.letters().iter().fold(TruncatedSeries::one(cutoff), |s, l| s.mul_letter(l.index(), l.is_inverse()))
}

/// Whether `w` lies in `γ_k` of the free group, `k >= 1`.
pub fn gamma_membership(w: &Word, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(invalid("lower central series terms are indexed from 1"));
    }
    if k == 1 {
        return Ok(true);
    }
    Ok(expand(w, k - 1).is_one())
}

/// Largest `k <= max_k` with `w ∈ γ_k`.
pub fn gamma_level(w: &Word, max_k: usize) -> usize {
    if max_k <= 1 {
        return max_k;
    }
    match expand(w, max_k - 1).lowest_nonconstant_degree() {
        Some(d) => d,
        None => max_k,
    }
}
