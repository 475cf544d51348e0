//! Pass/fail checks of subgroup identities in a materialised group.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

use super::commutators::{fat_commutator, symmetric_commutator, symmetric_commutator_fix1};
use super::group::PermGroup;
use super::subgroup::{commutator_subgroup, NormalSubgroup};

/// Fat vs. symmetric commutator subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FatSymmetricReport {
    pub fat_order: usize,
    pub symmetric_order: usize,
    pub fat_orders_by_weight: Vec<usize>,
    pub stabilized: bool,
    pub equal: bool,
    /// Equal and stabilized. A run that did not stabilize is inconclusive.
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedProductReport {
    pub symmetric_order: usize,
    pub restricted_order: usize,
    pub pass: bool,
}

/// `[AB, C]` vs. `[A, C][B, C]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributivityReport {
    pub lhs_order: usize,
    pub rhs_order: usize,
    pub pass: bool,
}

/// The three containments among `[A,[B,C]]`, `[[A,B],C]`, `[[A,C],B]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeSubgroupReport {
    pub a_bc_order: usize,
    pub ab_c_order: usize,
    pub ac_b_order: usize,
    /// `[A,[B,C]] ≤ [[A,B],C]·[[A,C],B]`, `[[A,B],C] ≤ [A,[B,C]]·[[A,C],B]`,
    /// `[[A,C],B] ≤ [A,[B,C]]·[[A,B],C]`.
    pub containments: [bool; 3],
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityReport {
    pub lhs_order: usize,
    pub rhs_order: usize,
    pub holds: bool,
}

/// Every `(I, J)` pair of the distributivity condition for a tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivitySummary {
    pub pairs_checked: usize,
    pub pairs_holding: usize,
    /// The tuple is connected: `n <= 2`, or every pair holds.
    pub connected: bool,
}

/// Fat commutator subgroup equals the symmetric one.
pub fn verify_fat_equals_symmetric<'g>(
    group: &'g PermGroup,
    rs: &[NormalSubgroup<'g>],
    weight_cap: usize,
    budget: u64,
) -> Result<FatSymmetricReport> {
    let fat = fat_commutator(group, rs, weight_cap, budget)?;
    let sym = symmetric_commutator(group, rs)?;
    let equal = fat.subgroup == sym;
    Ok(FatSymmetricReport {
        fat_order: fat.subgroup.order(),
        symmetric_order: sym.order(),
        fat_orders_by_weight: fat.orders_by_weight,
        stabilized: fat.stabilized,
        equal,
        pass: equal && fat.stabilized,
    })
}

/// The product over orderings fixing the first subgroup equals the full
/// symmetric commutator subgroup.
pub fn verify_restricted_product<'g>(
    group: &'g PermGroup,
    rs: &[NormalSubgroup<'g>],
) -> Result<RestrictedProductReport> {
    let sym = symmetric_commutator(group, rs)?;
    let restricted = symmetric_commutator_fix1(group, rs)?;
    Ok(RestrictedProductReport {
        symmetric_order: sym.order(),
        restricted_order: restricted.order(),
        pass: sym == restricted,
    })
}

pub fn verify_distributivity<'g>(
    a: &NormalSubgroup<'g>,
    b: &NormalSubgroup<'g>,
    c: &NormalSubgroup<'g>,
) -> DistributivityReport {
    let lhs = commutator_subgroup(&a.product(b), c);
    let rhs = commutator_subgroup(a, c).product(&commutator_subgroup(b, c));
    DistributivityReport { lhs_order: lhs.order(), rhs_order: rhs.order(), pass: lhs == rhs }
}

pub fn verify_three_subgroup<'g>(
    a: &NormalSubgroup<'g>,
    b: &NormalSubgroup<'g>,
    c: &NormalSubgroup<'g>,
) -> ThreeSubgroupReport {
    let a_bc = commutator_subgroup(a, &commutator_subgroup(b, c));
    let ab_c = commutator_subgroup(&commutator_subgroup(a, b), c);
    let ac_b = commutator_subgroup(&commutator_subgroup(a, c), b);
    let containments = [
        a_bc.is_subgroup_of(&ab_c.product(&ac_b)),
        ab_c.is_subgroup_of(&a_bc.product(&ac_b)),
        ac_b.is_subgroup_of(&a_bc.product(&ab_c)),
    ];
    ThreeSubgroupReport {
        a_bc_order: a_bc.order(),
        ab_c_order: ab_c.order(),
        ac_b_order: ac_b.order(),
        containments,
        pass: containments.iter().all(|&x| x),
    }
}

/// `(∩_{i∈I} R_i) · ∏_{j∈J} R_j = ∩_{i∈I} (R_i · ∏_{j∈J} R_j)`, 0-based indices.
pub fn verify_connectivity<'g>(
    group: &'g PermGroup,
    rs: &[NormalSubgroup<'g>],
    i_set: &[usize],
    j_set: &[usize],
) -> Result<ConnectivityReport> {
    if i_set.len() < 2 || j_set.is_empty() {
        return Err(invalid("need |I| >= 2 and |J| >= 1"));
    }
    if let Some(bad) = i_set.iter().chain(j_set).find(|&&k| k >= rs.len()) {
        return Err(invalid(format!("index {bad} out of range for {} subgroups", rs.len())));
    }
    let prod_j = j_set.iter().fold(NormalSubgroup::trivial(group), |acc, &j| acc.product(&rs[j]));
    let meet = i_set[1..].iter().fold(rs[i_set[0]].clone(), |acc, &i| acc.intersection(&rs[i]));
    let lhs = meet.product(&prod_j);
    let rhs =
        i_set[1..].iter().fold(rs[i_set[0]].product(&prod_j), |acc, &i| acc.intersection(&rs[i].product(&prod_j)));
    Ok(ConnectivityReport { lhs_order: lhs.order(), rhs_order: rhs.order(), holds: lhs == rhs })
}

/// Runs [`verify_connectivity`] over every `I, J ⊆ {1..n}` with `|I| >= 2`, `|J| >= 1`.
pub fn verify_connectivity_all<'g>(group: &'g PermGroup, rs: &[NormalSubgroup<'g>]) -> Result<ConnectivitySummary> {
    let n = rs.len();
    let subsets = |mask: usize| (0..n).filter(move |k| mask & (1 << k) != 0).collect::<Vec<_>>();
    let (mut checked, mut holding) = (0, 0);
    for im in 1..(1usize << n) {
        let i_set = subsets(im);
        if i_set.len() < 2 {
            continue;
        }
        for jm in 1..(1usize << n) {
            checked += 1;
            if verify_connectivity(group, rs, &i_set, &subsets(jm))?.holds {
                holding += 1;
            }
        }
    }
    Ok(ConnectivitySummary { pairs_checked: checked, pairs_holding: holding, connected: n <= 2 || holding == checked })
}
