//! Symmetric and fat commutator subgroups of tuples of normal subgroups.

use std::collections::{BTreeSet, HashMap};

use fixedbitset::FixedBitSet;

use crate::error::{invalid, Error, Result};

use super::group::PermGroup;
use super::subgroup::{commutator_subgroup, commutator_subgroup_by_generators, NormalSubgroup};

/// Default bound on commutator evaluations in [`fat_commutator`].
pub const DEFAULT_FAT_BUDGET: u64 = 10_000_000;

fn check_parent<'g>(group: &'g PermGroup, rs: &[NormalSubgroup<'g>]) -> Result<()> {
    if rs.is_empty() {
        return Err(invalid("at least one subgroup is required"));
    }
    if rs.iter().any(|r| !std::ptr::eq(r.group(), group)) {
        return Err(invalid("all subgroups must share the parent group"));
    }
    Ok(())
}

/// Memoised element-level commutator subgroups, keyed by unordered pairs
/// since `[A, B] = [B, A]`.
struct CommutatorCache<'g> {
    known: HashMap<(FixedBitSet, FixedBitSet), NormalSubgroup<'g>>,
}

impl<'g> CommutatorCache<'g> {
    fn new() -> Self {
        CommutatorCache { known: HashMap::new() }
    }

    fn get(&mut self, a: &NormalSubgroup<'g>, b: &NormalSubgroup<'g>) -> NormalSubgroup<'g> {
        let (x, y) = (a.members().clone(), b.members().clone());
        let key = if x <= y { (x, y) } else { (y, x) };
        self.known.entry(key).or_insert_with(|| commutator_subgroup(a, b)).clone()
    }
}

/// All orderings of `0..n`, or only those keeping 0 first.
fn orderings(n: usize, fix_first: bool) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            rec(prefix, rest, out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    if fix_first {
        rec(&mut vec![0], &mut (1..n).collect(), &mut out);
    } else {
        rec(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    }
    out
}

fn left_iterated_product<'g>(
    group: &'g PermGroup,
    rs: &[NormalSubgroup<'g>],
    fix_first: bool,
) -> Result<NormalSubgroup<'g>> {
    check_parent(group, rs)?;
    if rs.len() == 1 {
        return Ok(rs[0].clone());
    }
    let mut cache = CommutatorCache::new();
    let mut total = NormalSubgroup::trivial(group);
    for order in orderings(rs.len(), fix_first) {
        let mut h = rs[order[0]].clone();
        for &k in &order[1..] {
            h = cache.get(&h, &rs[k]);
        }
        total = total.product(&h);
    }
    Ok(total)
}

/// `∏_σ [[R_σ(1), R_σ(2)], …, R_σ(n)]` over every permutation `σ`; `R_1` when `n = 1`.
///
/// Each factor is the subgroup generated by the element-level left-normed
/// commutators, built one bracket at a time.
pub fn symmetric_commutator<'g>(group: &'g PermGroup, rs: &[NormalSubgroup<'g>]) -> Result<NormalSubgroup<'g>> {
    left_iterated_product(group, rs, false)
}

/// As [`symmetric_commutator`], restricted to permutations fixing the first subgroup.
pub fn symmetric_commutator_fix1<'g>(group: &'g PermGroup, rs: &[NormalSubgroup<'g>]) -> Result<NormalSubgroup<'g>> {
    left_iterated_product(group, rs, true)
}

/// Outcome of a fat commutator computation.
#[derive(Debug, Clone)]
pub struct FatCommutator<'g> {
    pub subgroup: NormalSubgroup<'g>,
    /// Order of the subgroup generated by all weights `n..=t`, indexed by `t - n`.
    pub orders_by_weight: Vec<usize>,
    /// The last weight added nothing new.
    pub stabilized: bool,
    pub evaluations: u64,
}

/// `[[R_1, …, R_n]]`: the subgroup generated by all `β^t(g_{i1}, …, g_{it})`
/// with `n <= t <= weight_cap`, every arrangement `β^t`, every index
/// assignment covering `1..=n` and `g_j ∈ R_j`.
///
/// For a fixed arrangement and assignment those values generate the iterated
/// subgroup commutator built along the same tree, so the enumeration runs over
/// (subgroup, covered indices) pairs per weight instead of element tuples.
/// `evaluations` counts element commutators computed; exceeding `budget` fails.
pub fn fat_commutator<'g>(
    group: &'g PermGroup,
    rs: &[NormalSubgroup<'g>],
    weight_cap: usize,
    budget: u64,
) -> Result<FatCommutator<'g>> {
    check_parent(group, rs)?;
    let n = rs.len();
    if weight_cap < n {
        return Err(invalid(format!("weight cap {weight_cap} is below n = {n}")));
    }
    if n > 16 {
        return Err(invalid("at most 16 subgroups are supported"));
    }
    let full: u32 = (1u32 << n) - 1;

    let mut interned: Vec<NormalSubgroup<'g>> = Vec::new();
    let mut ids: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut intern = |h: NormalSubgroup<'g>, interned: &mut Vec<NormalSubgroup<'g>>| -> usize {
        *ids.entry(h.members().clone()).or_insert_with(|| {
            interned.push(h);
            interned.len() - 1
        })
    };
    let mut pairs: HashMap<(usize, usize), usize> = HashMap::new();
    let mut evaluations: u64 = 0;

    // states[t] = distinct (subgroup id, covered index mask) reachable at weight t
    let mut states: Vec<BTreeSet<(usize, u32)>> = vec![BTreeSet::new(); weight_cap + 1];
    for (i, r) in rs.iter().enumerate() {
        let id = intern(r.clone(), &mut interned);
        states[1].insert((id, 1 << i));
    }
    let mut total = NormalSubgroup::trivial(group);
    let mut orders_by_weight = Vec::new();
    for t in 1..=weight_cap {
        if t >= 2 {
            let mut level = BTreeSet::new();
            for a in 1..t {
                let (left, right) = (states[a].clone(), states[t - a].clone());
                for &(h, mh) in &left {
                    for &(k, mk) in &right {
                        let key = if h <= k { (h, k) } else { (k, h) };
                        let c = match pairs.get(&key) {
                            Some(&c) => c,
                            None => {
                                let (hs, ks) = (&interned[h], &interned[k]);
                                evaluations += (hs.generators().len() * ks.generators().len()) as u64;
                                if evaluations > budget {
                                    return Err(Error::BudgetExceeded { budget });
                                }
                                let sub = commutator_subgroup_by_generators(hs, ks);
                                let c = intern(sub, &mut interned);
                                pairs.insert(key, c);
                                c
                            }
                        };
                        level.insert((c, mh | mk));
                    }
                }
            }
            states[t] = level;
        }
        if t >= n {
            for &(h, mask) in &states[t] {
                if mask == full {
                    total = total.product(&interned[h]);
                }
            }
            orders_by_weight.push(total.order());
        }
    }
    let stabilized = match orders_by_weight.as_slice() {
        [.., a, b] => a == b,
        _ => false,
    };
    Ok(FatCommutator { subgroup: total, orders_by_weight, stabilized, evaluations })
}
