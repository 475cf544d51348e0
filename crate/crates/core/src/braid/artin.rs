use crate::word::Word;

use super::{Braid, Crossing};

/// An automorphism of the free group `F_n`, recorded by the images of `x1..xn`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArtinAutomorphism {
    images: Vec<Word>,
}

impl ArtinAutomorphism {
    pub fn identity(rank: usize) -> Self {
        ArtinAutomorphism { images: (1..=rank as u32).map(Word::generator).collect() }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Image of `x_i`, 1-based.
    pub fn image(&self, i: usize) -> &Word {
        &self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, w)| w.len() == 1 && w.letters()[0].index() as usize == k + 1 && !w.letters()[0].is_inverse())
    }

    /// Applies the automorphism to a word.
    pub fn apply(&self, w: &Word) -> Word {
        w.substitute(&self.images)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &ArtinAutomorphism) -> ArtinAutomorphism {
        ArtinAutomorphism { images: other.images.iter().map(|w| self.apply(w)).collect() }
    }

    /// Replaces the state `φ` by `φ ∘ (action of c)`.
    fn push(&mut self, c: Crossing) {
        let k = c.index() as usize - 1;
        let (a, b) = (self.images[k].clone(), self.images[k + 1].clone());
        if c.is_inverse() {
            // x_k ↦ x_{k+1}, x_{k+1} ↦ x_{k+1}⁻¹ x_k x_{k+1}
            self.images[k + 1] = a.conjugate(&b);
            self.images[k] = b;
        } else {
            // x_k ↦ x_k x_{k+1} x_k⁻¹, x_{k+1} ↦ x_k
            self.images[k] = b.conjugate(&a.invert());
            self.images[k + 1] = a;
        }
    }
}

/// The Artin representation of `b` on the free group of rank `b.strands()`.
///
/// `σ_i` acts by `x_i ↦ x_i x_{i+1} x_i⁻¹`, `x_{i+1} ↦ x_i`, fixing the other
/// generators. Words are read left to right as composition order, so
/// `artin_action(b1 · b2) = artin_action(b1) ∘ artin_action(b2)`.
pub fn artin_action(b: &Braid) -> ArtinAutomorphism {
    let mut phi = ArtinAutomorphism::identity(b.strands());
    for &c in b.word() {
        phi.push(c);
    }
    phi
}

/// Whether `b` is the trivial braid. The Artin representation is faithful.
pub fn is_trivial(b: &Braid) -> bool {
    b.is_empty() || artin_action(b).is_identity()
}

/// Whether two braid words represent the same braid.
pub fn same_braid(a: &Braid, b: &Braid) -> bool {
    a.strands() == b.strands() && artin_action(a) == artin_action(b)
}
