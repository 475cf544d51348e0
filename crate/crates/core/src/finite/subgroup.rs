use std::fmt;

use fixedbitset::FixedBitSet;

use super::group::{ElementId, PermGroup};

/// A subgroup of a [`PermGroup`] held as an explicit element set.
///
/// The type does not enforce normality; every constructor in this crate that
/// returns one produces a normal subgroup, and [`NormalSubgroup::is_normal`]
/// checks it directly.
#[derive(Clone)]
pub struct NormalSubgroup<'g> {
    group: &'g PermGroup,
    members: FixedBitSet,
    list: Vec<ElementId>,
    gens: Vec<ElementId>,
}

impl fmt::Debug for NormalSubgroup<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NormalSubgroup").field("order", &self.order()).field("gens", &self.gens).finish()
    }
}

impl PartialEq for NormalSubgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.group, other.group) && self.members == other.members
    }
}

impl Eq for NormalSubgroup<'_> {}

impl<'g> NormalSubgroup<'g> {
    pub fn trivial(group: &'g PermGroup) -> Self {
        Builder::new(group).finish()
    }

    pub fn whole(group: &'g PermGroup) -> Self {
        let mut b = Builder::new(group);
        for &g in group.generator_ids() {
            b.add(g);
        }
        b.finish()
    }

    pub fn group(&self) -> &'g PermGroup {
        self.group
    }

    pub fn order(&self) -> usize {
        self.list.len()
    }

    pub fn contains(&self, id: ElementId) -> bool {
        self.members.contains(id as usize)
    }

    pub fn elements(&self) -> &[ElementId] {
        &self.list
    }

    /// A generating set, as a subgroup.
    pub fn generators(&self) -> &[ElementId] {
        &self.gens
    }

    pub(crate) fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn is_trivial(&self) -> bool {
        self.list.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &NormalSubgroup<'g>) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Direct scan: closed under products and inverses, and under conjugation
    /// by every element of the parent group.
    pub fn is_normal(&self) -> bool {
        let g = self.group;
        let closed =
            self.list.iter().all(|&a| self.contains(g.inv(a)) && self.list.iter().all(|&b| self.contains(g.mul(a, b))));
        closed && (0..g.order() as ElementId).all(|c| self.list.iter().all(|&a| self.contains(g.conjugate(a, c))))
    }

    /// `self · other`.
    pub fn product(&self, other: &NormalSubgroup<'g>) -> NormalSubgroup<'g> {
        let mut b = Builder::from_subgroup(self);
        for &x in &other.gens {
            b.add(x);
        }
        b.finish()
    }

    pub fn intersection(&self, other: &NormalSubgroup<'g>) -> NormalSubgroup<'g> {
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        let mut b = Builder::new(self.group);
        for x in members.ones() {
            b.add(x as ElementId);
        }
        b.finish()
    }
}

/// Incrementally grows a subgroup one element at a time.
pub(crate) struct Builder<'g> {
    group: &'g PermGroup,
    members: FixedBitSet,
    list: Vec<ElementId>,
    gens: Vec<ElementId>,
}

impl<'g> Builder<'g> {
    pub(crate) fn new(group: &'g PermGroup) -> Self {
        let mut members = group.empty_set();
        members.insert(group.identity() as usize);
        Builder { group, members, list: vec![group.identity()], gens: Vec::new() }
    }

    pub(crate) fn from_subgroup(h: &NormalSubgroup<'g>) -> Self {
        Builder { group: h.group, members: h.members.clone(), list: h.list.clone(), gens: h.gens.clone() }
    }

    pub(crate) fn contains(&self, x: ElementId) -> bool {
        self.members.contains(x as usize)
    }

    /// Extends the subgroup to `⟨self, x⟩`. Returns whether `x` was new.
    pub(crate) fn add(&mut self, x: ElementId) -> bool {
        if self.contains(x) {
            return false;
        }
        self.gens.push(x);
        let g = self.group;
        let mut head = 0;
        while head < self.list.len() {
            let y = self.list[head];
            head += 1;
            for &s in &self.gens {
                let z = g.mul(y, s);
                if !self.members.contains(z as usize) {
                    self.members.insert(z as usize);
                    self.list.push(z);
                }
            }
        }
        true
    }

    /// Adds `x` and enough conjugates to keep the subgroup normal, assuming it
    /// was normal before.
    pub(crate) fn add_normal(&mut self, x: ElementId) {
        let g = self.group;
        let mut pending = vec![x];
        while let Some(y) = pending.pop() {
            if self.add(y) {
                pending.extend(g.generator_ids().iter().map(|&c| g.conjugate(y, c)));
            }
        }
    }

    pub(crate) fn finish(self) -> NormalSubgroup<'g> {
        NormalSubgroup { group: self.group, members: self.members, list: self.list, gens: self.gens }
    }
}

/// Smallest normal subgroup containing `seeds`.
pub fn normal_closure<'g>(group: &'g PermGroup, seeds: &[ElementId]) -> NormalSubgroup<'g> {
    let mut b = Builder::new(group);
    for &s in seeds {
        b.add_normal(s);
    }
    b.finish()
}

/// `[A, B]`: the subgroup generated by every `[a, b]`, `a ∈ A`, `b ∈ B`,
/// evaluated element by element.
pub fn commutator_subgroup<'g>(a: &NormalSubgroup<'g>, b: &NormalSubgroup<'g>) -> NormalSubgroup<'g> {
    let g = a.group;
    let mut out = Builder::new(g);
    for &x in &a.list {
        for &y in &b.list {
            out.add(g.commutator(x, y));
        }
    }
    out.finish()
}

/// `[A, B]` for normal `A`, `B` as the normal closure of `[x, y]` over
/// generators `x` of `A` and `y` of `B`. Equal to [`commutator_subgroup`];
/// cost grows with the generating sets rather than the orders.
pub fn commutator_subgroup_by_generators<'g>(a: &NormalSubgroup<'g>, b: &NormalSubgroup<'g>) -> NormalSubgroup<'g> {
    let g = a.group;
    let mut out = Builder::new(g);
    for &x in &a.gens {
        for &y in &b.gens {
            out.add_normal(g.commutator(x, y));
        }
    }
    out.finish()
}
