//! The punctured sphere group `⟨x1, …, xm | x1 x2 ⋯ xm = 1⟩`, membership in
//! normal closures of partition blocks, and certificates for the quotient
//! `(R1 ∩ ⋯ ∩ Rn) / [[R1, R2], …, Rn]_S`.
//!
//! Elements of the sphere group are stored over the free basis `x1..x_{m-1}`;
//! `x_m` is always rewritten as `(x1 ⋯ x_{m-1})⁻¹` on input.

mod certificate;
mod presentation;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::word::{Letter, SubgroupSpec, Word};

pub use certificate::{pi2_check, pi3_certificate, Pi2Report, Pi3Certificate, SamplePassCounts};
pub use presentation::{Membership, Presentation};

/// `⟨x1, …, xm | x1 ⋯ xm = 1⟩`, free of rank `m - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpherePresentation {
    m: u32,
}

impl SpherePresentation {
    pub fn new(m: u32) -> Result<Self> {
        if m < 2 {
            return Err(invalid(format!("the sphere presentation needs m >= 2, got {m}")));
        }
        Ok(SpherePresentation { m })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Rank of the free basis `x1..x_{m-1}`.
    pub fn rank(&self) -> u32 {
        self.m - 1
    }

    /// `x_index` in basis form.
    pub fn generator(&self, index: u32) -> Result<Word> {
        self.eliminate(&Word::generator(index))
    }

    /// Rewrites `x_m ↦ (x1 ⋯ x_{m-1})⁻¹` and reduces.
    pub fn eliminate(&self, w: &Word) -> Result<Word> {
        if w.max_index() > self.m {
            return Err(invalid(format!("x{} does not exist for m = {}", w.max_index(), self.m)));
        }
        let mut images: Vec<Word> = (1..self.m).map(Word::generator).collect();
        images.push(Word::from_letters((1..self.m).rev().map(Letter::neg)));
        Ok(w.substitute(&images))
    }
}

/// Disjoint nonempty blocks covering `{x1, …, xm}`, each block a set of indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    m: u32,
    blocks: Vec<BTreeSet<u32>>,
}

impl Partition {
    pub fn new(m: u32, blocks: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::with_capacity(blocks.len());
        for (k, block) in blocks.into_iter().enumerate() {
            if block.is_empty() {
                return Err(invalid(format!("block {} is empty", k + 1)));
            }
            let set: BTreeSet<u32> = block.into_iter().collect();
            for &x in &set {
                if !(1..=m).contains(&x) {
                    return Err(invalid(format!("x{x} is outside x1..x{m}")));
                }
                if !seen.insert(x) {
                    return Err(invalid(format!("x{x} lies in two blocks")));
                }
            }
            out.push(set);
        }
        if seen.len() != m as usize {
            let missing: Vec<String> = (1..=m).filter(|x| !seen.contains(x)).map(|x| format!("x{x}")).collect();
            return Err(invalid(format!("blocks do not cover {}", missing.join(", "))));
        }
        Ok(Partition { m, blocks: out })
    }

    /// `{x1}, {x2}, …, {xm}`.
    pub fn singletons(m: u32) -> Self {
        Partition { m, blocks: (1..=m).map(|x| BTreeSet::from([x])).collect() }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[BTreeSet<u32>] {
        &self.blocks
    }

    /// Each block as a subgroup spec over the basis of `pres`.
    pub fn subgroup_specs(&self, pres: &SpherePresentation) -> Result<Vec<SubgroupSpec>> {
        self.blocks
            .iter()
            .map(|b| {
                let gens = b.iter().map(|&x| pres.generator(x)).collect::<Result<Vec<_>>>()?;
                let label = b.iter().map(|x| format!("x{x}")).collect::<Vec<_>>().join(",");
                SubgroupSpec::new(format!("<<{label}>>"), gens)
            })
            .collect()
    }
}

/// Whether `w` (over the basis `x1..x_{m-1}`) lies in the normal closure of `block`.
///
/// Killing the letters of the block gives the quotient
/// `⟨survivors | ∏ survivors = 1⟩`. When `x_m` survives it absorbs the
/// relator and the quotient is free on the other survivors. Otherwise the
/// largest surviving basis letter is solved for from the relator.
pub fn member_ri(w: &Word, block: &BTreeSet<u32>, pres: &SpherePresentation) -> Result<bool> {
    if w.max_index() >= pres.m {
        return Err(invalid(format!("{w} is not in basis form for m = {}", pres.m)));
    }
    let killed = Word::from_letters(w.letters().iter().copied().filter(|l| !block.contains(&l.index())));
    if !block.contains(&pres.m) {
        return Ok(killed.is_identity());
    }
    let survivors: Vec<u32> = (1..pres.m).filter(|x| !block.contains(x)).collect();
    let Some((&top, rest)) = survivors.split_last() else {
        return Ok(true);
    };
    let mut images: Vec<Word> = (1..=top).map(Word::generator).collect();
    images[top as usize - 1] = Word::from_letters(rest.iter().rev().map(|&x| Letter::neg(x)));
    Ok(killed.substitute(&images).is_identity())
}

/// Membership in every block's normal closure.
pub fn in_intersection(w: &Word, partition: &Partition, pres: &SpherePresentation) -> Result<bool> {
    if partition.m != pres.m {
        return Err(invalid(format!("partition of x1..x{} used with m = {}", partition.m, pres.m)));
    }
    for block in &partition.blocks {
        if !member_ri(w, block, pres)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::seeded;
    use crate::word::{commutator, random_reduced_word};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn block(xs: &[u32]) -> BTreeSet<u32> {
        xs.iter().copied().collect()
    }

    #[test]
    fn elimination_examples() {
        let p3 = SpherePresentation::new(3).unwrap();
        assert_eq!(p3.eliminate(&w("x3")).unwrap(), w("x2^-1 x1^-1"));
        assert!(p3.eliminate(&w("x1 x2 x3")).unwrap().is_identity());
        assert!(p3.eliminate(&w("x4")).is_err());
        let p2 = SpherePresentation::new(2).unwrap();
        assert_eq!(p2.eliminate(&w("x2")).unwrap(), w("x1^-1"));
        assert!(SpherePresentation::new(1).is_err());
    }

    #[test]
    fn partition_conditions() {
        assert!(Partition::new(3, vec![vec![1], vec![2, 3]]).is_ok());
        assert!(Partition::new(3, vec![vec![1], vec![], vec![2, 3]]).is_err());
        assert!(Partition::new(3, vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(Partition::new(3, vec![vec![1], vec![2]]).is_err());
        assert!(Partition::new(3, vec![vec![1], vec![2, 4]]).is_err());
        assert_eq!(Partition::singletons(4).len(), 4);
    }

    #[test]
    fn membership_examples() {
        let p3 = SpherePresentation::new(3).unwrap();
        assert!(member_ri(&w("x2^-1 x1 x2"), &block(&[1]), &p3).unwrap());
        assert!(!member_ri(&w("x1"), &block(&[2]), &p3).unwrap());
        let c = commutator(&w("x1"), &w("x2"));
        assert!(member_ri(&c, &block(&[3]), &p3).unwrap());
        assert!(!member_ri(&w("x1"), &block(&[3]), &p3).unwrap());
        assert!(member_ri(&w("x2^-1 x1^-1"), &block(&[3]), &p3).unwrap());
        let parts = Partition::singletons(3);
        assert!(in_intersection(&Word::identity(), &parts, &p3).unwrap());
        assert!(!in_intersection(&w("x1"), &parts, &p3).unwrap());
        assert!(in_intersection(&c, &parts, &p3).unwrap());
        assert!(member_ri(&w("x3"), &block(&[1]), &p3).is_err());
    }

    /// Independent route: change basis to `y1 = x1 ⋯ x_{m-1}` (so `x_m = y1⁻¹`)
    /// and `y_k = x_k` for `k >= 2`, kill `y1` and the other block letters,
    /// test identity. Needs `x_m` killed and `x1` surviving.
    fn rebase_oracle(word: &Word, kill: &BTreeSet<u32>, m: u32) -> bool {
        assert!(kill.contains(&m) && !kill.contains(&1));
        // x1 = y1 y_{m-1}⁻¹ ⋯ y2⁻¹
        let mut images: Vec<Word> = (1..m).map(Word::generator).collect();
        images[0] = Word::from_letters(std::iter::once(Letter::pos(1)).chain((2..m).rev().map(Letter::neg)));
        let rebased = word.substitute(&images);
        let killed_letters: Vec<Letter> =
            rebased.letters().iter().copied().filter(|l| !(l.index() == 1 || kill.contains(&l.index()))).collect();
        Word::from_letters(killed_letters).is_identity()
    }

    #[test]
    fn agrees_with_rebase_when_last_letter_is_killed() {
        let mut rng = seeded(17);
        for m in 3..=5u32 {
            let pres = SpherePresentation::new(m).unwrap();
            let blocks = [block(&[m]), block(&[2, m]), block(&(2..=m).collect::<Vec<_>>())];
            for kill in &blocks {
                for _ in 0..300 {
                    let word = random_reduced_word(&mut rng, m - 1, 6);
                    assert_eq!(
                        member_ri(&word, kill, &pres).unwrap(),
                        rebase_oracle(&word, kill, m),
                        "{word} {kill:?}"
                    );
                }
                let c = commutator(&w("x1"), &w("x2"));
                assert_eq!(member_ri(&c, kill, &pres).unwrap(), rebase_oracle(&c, kill, m));
            }
        }
    }

    #[test]
    fn membership_is_conjugation_invariant() {
        let mut rng = seeded(3);
        let pres = SpherePresentation::new(4).unwrap();
        let parts = Partition::new(4, vec![vec![1, 3], vec![2], vec![4]]).unwrap();
        for _ in 0..500 {
            let r = random_reduced_word(&mut rng, 3, 5);
            let g = random_reduced_word(&mut rng, 3, 5);
            for b in parts.blocks() {
                assert_eq!(member_ri(&r.conjugate(&g), b, &pres).unwrap(), member_ri(&r, b, &pres).unwrap());
            }
        }
    }

    #[test]
    fn block_generators_are_members() {
        for m in 2..=6u32 {
            let pres = SpherePresentation::new(m).unwrap();
            for x in 1..=m {
                assert!(member_ri(&pres.generator(x).unwrap(), &block(&[x]), &pres).unwrap());
            }
        }
    }
}
