use crate::error::{invalid, Result};

use super::artin::is_trivial;
use super::{Braid, Crossing};

/// Where each strand ends: `perm[p]` is the starting position (1-based label)
/// of the strand that finishes at position `p + 1`.
pub fn permutation(b: &Braid) -> Vec<usize> {
    let mut at: Vec<usize> = (1..=b.strands()).collect();
    for c in b.word() {
        let k = c.index() as usize;
        at.swap(k - 1, k);
    }
    at
}

/// Whether the underlying permutation of `b` is the identity.
pub fn is_pure(b: &Braid) -> bool {
    permutation(b).iter().enumerate().all(|(p, &s)| s == p + 1)
}

/// Removes the strand that starts at position `j` (1-based).
///
/// Strands are followed through the word; crossings involving strand `j` are
/// dropped and the remaining crossings are renumbered so strand order is
/// preserved. The result has one strand fewer.
pub fn delete_strand(b: &Braid, j: usize) -> Result<Braid> {
    let n = b.strands();
    if !(1 <= j && j <= n) {
        return Err(invalid(format!("strand {j} out of range 1..={n}")));
    }
    let mut at: Vec<usize> = (1..=n).collect();
    let mut kept = Vec::with_capacity(b.len());
    for &c in b.word() {
        let k = c.index() as usize;
        let (left, right) = (at[k - 1], at[k]);
        if left != j && right != j {
            let shift = at[..k - 1].contains(&j) as usize;
            let index = (k - shift) as u32;
            kept.push(if c.is_inverse() { Crossing::neg(index) } else { Crossing::pos(index) });
        }
        at.swap(k - 1, k);
    }
    Braid::new(n - 1, kept)
}

/// Pure, and deleting any single strand leaves the trivial braid.
pub fn is_brunnian(b: &Braid) -> bool {
    is_pure(b) && (1..=b.strands()).all(|j| delete_strand(b, j).is_ok_and(|d| is_trivial(&d)))
}

#[cfg(test)]
mod tests {
    use super::super::{gen_a, gen_t, parse_braid, same_braid};
    use super::*;

    fn braid(n: usize, letters: &[i32]) -> Braid {
        Braid::from_signed(n, letters).unwrap()
    }

    #[test]
    fn purity_examples() {
        assert!(is_pure(&braid(3, &[1, -1])));
        assert!(!is_pure(&braid(3, &[1])));
        assert!(is_pure(&braid(3, &[1, 1])));
        assert_eq!(permutation(&braid(3, &[1, 2])), vec![2, 3, 1]);
    }

    #[test]
    fn deletion_examples() {
        let sq = braid(3, &[1, 1]);
        assert_eq!(delete_strand(&sq, 3).unwrap(), braid(2, &[1, 1]));
        assert!(delete_strand(&sq, 1).unwrap().is_empty());
        assert!(delete_strand(&sq, 0).is_err());
        assert!(delete_strand(&sq, 4).is_err());
        // strand 1 sits left of the σ2 crossing between strands 2 and 3
        assert_eq!(delete_strand(&braid(3, &[2, 2]), 1).unwrap(), braid(2, &[1, 1]));
        assert_eq!(delete_strand(&braid(1, &[]), 1).unwrap().strands(), 0);
    }

    #[test]
    fn t_generators_vanish_on_their_strands() {
        for n in 2..=6 {
            for i in 1..n {
                let t = gen_t(i, n).unwrap();
                assert!(is_trivial(&delete_strand(&t, n).unwrap()));
                assert!(is_trivial(&delete_strand(&t, i).unwrap()));
                if n > 2 {
                    let other = (1..n).find(|&k| k != i).unwrap();
                    assert!(!is_trivial(&delete_strand(&t, other).unwrap()));
                }
            }
        }
    }

    #[test]
    fn brunnian_examples() {
        assert!(is_brunnian(&braid(2, &[1, 1])));
        assert!(!is_brunnian(&gen_a(1, 2, 3).unwrap()));
        assert!(!is_brunnian(&braid(2, &[1])));
        assert!(is_brunnian(&Braid::identity(1)));
        let c = gen_t(1, 3).unwrap().commutator(&gen_t(2, 3).unwrap());
        assert!(is_brunnian(&c));
        assert!(!c.is_empty());
    }

    #[test]
    fn deletion_respects_products_on_examples() {
        let a = parse_braid("s1 s2 s2 s1^-1 s3 s3", 4).unwrap();
        let b = gen_a(2, 4, 4).unwrap().multiply(&gen_a(1, 3, 4).unwrap().inverse());
        for j in 1..=4 {
            let lhs = delete_strand(&a.multiply(&b), j).unwrap();
            let rhs = delete_strand(&a, j).unwrap().multiply(&delete_strand(&b, j).unwrap());
            assert!(same_braid(&lhs, &rhs));
        }
    }
}
