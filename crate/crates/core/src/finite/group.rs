use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{invalid, Error, Result};
use crate::word::Word;

use super::perm::{Permutation, MAX_DEGREE};

/// Default bound on materialised group orders.
pub const DEFAULT_ORDER_CAP: usize = 20_000;

/// Groups up to this order get a full multiplication table.
const TABLE_LIMIT: usize = 4096;

/// Element handle: position in [`PermGroup::elements`]. Index 0 is the identity.
pub type ElementId = u32;

/// A finite permutation group with every element materialised.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    generator_ids: Vec<ElementId>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, ElementId>,
    inverses: Vec<ElementId>,
    table: Option<Vec<ElementId>>,
}

/// The subgroup of `Sym(degree)` generated by `gens`, failing once more than
/// `cap` elements have been found.
pub fn closure(degree: usize, gens: &[Permutation], cap: usize) -> Result<PermGroup> {
    if degree > MAX_DEGREE {
        return Err(invalid(format!("degree {degree} exceeds {MAX_DEGREE}")));
    }
    if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
        return Err(invalid(format!("generator {g} has degree {}, expected {degree}", g.degree())));
    }
    let id = Permutation::identity(degree);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0)]);
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        head += 1;
        for g in gens {
            let y = x.then(g);
            if !index.contains_key(&y) {
                if elements.len() == cap {
                    return Err(Error::CapExceeded { cap });
                }
                index.insert(y.clone(), elements.len() as ElementId);
                elements.push(y);
            }
        }
    }
    let inverses = elements.iter().map(|e| index[&e.inverse()]).collect();
    let table = (elements.len() <= TABLE_LIMIT).then(|| {
        let mut t = Vec::with_capacity(elements.len() * elements.len());
        for a in &elements {
            for b in &elements {
                t.push(index[&a.then(b)]);
            }
        }
        t
    });
    let generator_ids = gens.iter().map(|g| index[g]).collect();
    Ok(PermGroup { degree, generators: gens.to_vec(), generator_ids, elements, index, inverses, table })
}

impl PermGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_ids(&self) -> &[ElementId] {
        &self.generator_ids
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, id: ElementId) -> &Permutation {
        &self.elements[id as usize]
    }

    pub fn id_of(&self, p: &Permutation) -> Option<ElementId> {
        self.index.get(p).copied()
    }

    pub fn identity(&self) -> ElementId {
        0
    }

    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        match &self.table {
            Some(t) => t[a as usize * self.elements.len() + b as usize],
            None => self.index[&self.elements[a as usize].then(&self.elements[b as usize])],
        }
    }

    pub fn inv(&self, a: ElementId) -> ElementId {
        self.inverses[a as usize]
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: ElementId, b: ElementId) -> ElementId {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        // a⁻¹b⁻¹ab = (ba)⁻¹(ab)
        self.mul(self.inv(ba), ab)
    }

    /// `by⁻¹ a by`.
    pub fn conjugate(&self, a: ElementId, by: ElementId) -> ElementId {
        self.mul(self.mul(self.inv(by), a), by)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generator_ids;
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Image of a free group word under `x_i ↦ images[i - 1]`.
    pub fn evaluate_word(&self, w: &Word, images: &[ElementId]) -> Result<ElementId> {
        let mut acc = self.identity();
        for l in w.letters() {
            let &x =
                images.get(l.index() as usize - 1).ok_or_else(|| invalid(format!("no image for x{}", l.index())))?;
            acc = self.mul(acc, if l.is_inverse() { self.inv(x) } else { x });
        }
        Ok(acc)
    }

    pub(crate) fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(d: usize, c: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(d, c).unwrap()
    }

    /// Closure by repeated multiplication of everything by everything, with no
    /// queue discipline: the slow oracle for [`closure`].
    fn naive_closure(degree: usize, gens: &[Permutation]) -> std::collections::BTreeSet<Permutation> {
        let mut set: std::collections::BTreeSet<Permutation> = gens.iter().cloned().collect();
        set.insert(Permutation::identity(degree));
        loop {
            let before = set.len();
            let snapshot: Vec<_> = set.iter().cloned().collect();
            for a in &snapshot {
                for b in &snapshot {
                    set.insert(a.then(b));
                }
            }
            if set.len() == before {
                return set;
            }
        }
    }

    #[test]
    fn closure_examples() {
        assert_eq!(closure(3, &[cyc(3, &[&[1, 2, 3]])], 100).unwrap().order(), 3);
        assert_eq!(closure(3, &[], 100).unwrap().order(), 1);
        let s3 = closure(3, &[cyc(3, &[&[1, 2]]), cyc(3, &[&[1, 2, 3]])], 100).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(naive_closure(3, s3.generators()).len(), 6);
    }

    #[test]
    fn cap_exceeded() {
        let gens = [cyc(5, &[&[1, 2]]), cyc(5, &[&[1, 2, 3, 4, 5]])];
        assert_eq!(closure(5, &gens, 100).unwrap_err(), Error::CapExceeded { cap: 100 });
        assert_eq!(closure(5, &gens, 120).unwrap().order(), 120);
        assert!(closure(4, &gens, 100).is_err());
    }

    #[test]
    fn closure_matches_naive_and_ignores_generator_order() {
        let gens = vec![cyc(6, &[&[1, 2], &[3, 4]]), cyc(6, &[&[2, 3, 5]]), cyc(6, &[&[4, 6]])];
        let g = closure(6, &gens, 1000).unwrap();
        let naive = naive_closure(6, &gens);
        let set: std::collections::BTreeSet<_> = g.elements().iter().cloned().collect();
        assert_eq!(set, naive);
        let mut rev = gens.clone();
        rev.reverse();
        let h = closure(6, &rev, 1000).unwrap();
        let set2: std::collections::BTreeSet<_> = h.elements().iter().cloned().collect();
        assert_eq!(set, set2);
    }

    #[test]
    fn table_and_direct_products_agree() {
        let gens = [cyc(4, &[&[1, 2]]), cyc(4, &[&[1, 2, 3, 4]])];
        let g = closure(4, &gens, 100).unwrap();
        for a in 0..g.order() as ElementId {
            for b in 0..g.order() as ElementId {
                let direct = g.element(a).then(g.element(b));
                assert_eq!(g.element(g.mul(a, b)), &direct);
                assert_eq!(g.element(g.commutator(a, b)), &g.element(a).commutator(g.element(b)));
            }
            assert_eq!(g.mul(a, g.inv(a)), g.identity());
        }
    }

    #[test]
    fn word_evaluation() {
        let gens = [cyc(3, &[&[1, 2]]), cyc(3, &[&[1, 2, 3]])];
        let g = closure(3, &gens, 10).unwrap();
        let images = g.generator_ids().to_vec();
        let w: Word = "x1 x2 x1^-1".parse().unwrap();
        let got = g.evaluate_word(&w, &images).unwrap();
        let expected = gens[0].then(&gens[1]).then(&gens[0].inverse());
        assert_eq!(g.element(got), &expected);
        assert!(g.evaluate_word(&"x3".parse().unwrap(), &images).is_err());
    }
}
