//! Seeded random instances and the per-trial report.

use rand::seq::SliceRandom;
use rand::Rng as _;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::rng::{seeded, Rng};

use super::group::{closure, ElementId, PermGroup};
use super::perm::{Permutation, MAX_DEGREE};
use super::subgroup::{normal_closure, NormalSubgroup};
use super::verify::{
    verify_connectivity_all, verify_distributivity, verify_fat_equals_symmetric, verify_restricted_product,
    verify_three_subgroup,
};

/// Shape of the random instance distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceParams {
    pub min_degree: usize,
    pub max_degree: usize,
    /// Instances whose group exceeds this order are redrawn.
    pub max_order: usize,
    pub min_generators: usize,
    pub max_generators: usize,
    /// Each normal subgroup is the normal closure of this many random elements (inclusive range).
    pub min_seeds: usize,
    pub max_seeds: usize,
}

/// Redraw limit of [`FiniteInstance::random`].
pub const MAX_DRAWS: usize = 100_000;

impl InstanceParams {
    pub fn validate(&self) -> Result<()> {
        if self.min_degree < 2 || self.min_degree > self.max_degree || self.max_degree > MAX_DEGREE {
            return Err(invalid(format!("degree range {}..={} is not usable", self.min_degree, self.max_degree)));
        }
        if self.min_generators == 0 || self.min_generators > self.max_generators {
            return Err(invalid("generator count range is empty"));
        }
        if self.min_seeds == 0 || self.min_seeds > self.max_seeds {
            return Err(invalid("seed count range is empty"));
        }
        if self.max_order < 2 {
            return Err(invalid("max_order must be at least 2"));
        }
        Ok(())
    }
}

impl Default for InstanceParams {
    fn default() -> Self {
        InstanceParams {
            min_degree: 3,
            max_degree: 10,
            max_order: 2000,
            min_generators: 2,
            max_generators: 3,
            min_seeds: 1,
            max_seeds: 2,
        }
    }
}

/// A random permutation group with random normal subgroups.
#[derive(Debug, Clone)]
pub struct FiniteInstance {
    pub seed: u64,
    pub group: PermGroup,
    pub subgroup_seeds: Vec<Vec<ElementId>>,
}

fn random_support_permutation(rng: &mut Rng, degree: usize) -> Permutation {
    let size = rng.gen_range(2..=degree);
    let mut points: Vec<usize> = (0..degree).collect();
    points.shuffle(rng);
    let support = &points[..size];
    let mut moved = support.to_vec();
    moved.shuffle(rng);
    let mut images: Vec<u8> = (0..degree as u8).collect();
    for (&from, &to) in support.iter().zip(&moved) {
        images[from] = to as u8;
    }
    Permutation::from_raw(images)
}

impl FiniteInstance {
    /// Draws a nontrivial group within the order cap, then `subgroups` normal
    /// closures of random elements. Deterministic in `seed`. Gives up after
    /// [`MAX_DRAWS`] groups fall outside the cap.
    pub fn random(seed: u64, subgroups: usize, params: &InstanceParams) -> Result<Self> {
        params.validate()?;
        let mut rng = seeded(seed);
        let mut draws = 0;
        let group = loop {
            draws += 1;
            if draws > MAX_DRAWS {
                return Err(invalid(format!(
                    "no nontrivial group of order <= {} in {MAX_DRAWS} draws",
                    params.max_order
                )));
            }
            let degree = rng.gen_range(params.min_degree..=params.max_degree);
            let k = rng.gen_range(params.min_generators..=params.max_generators);
            let gens: Vec<Permutation> = (0..k).map(|_| random_support_permutation(&mut rng, degree)).collect();
            match closure(degree, &gens, params.max_order) {
                Ok(g) if g.order() > 1 => break g,
                Ok(_) | Err(Error::CapExceeded { .. }) => continue,
                Err(e) => unreachable!("degree and generators are consistent: {e}"),
            }
        };
        let subgroup_seeds = (0..subgroups)
            .map(|_| {
                let count = rng.gen_range(params.min_seeds..=params.max_seeds);
                (0..count).map(|_| rng.gen_range(0..group.order()) as ElementId).collect()
            })
            .collect();
        Ok(FiniteInstance { seed, group, subgroup_seeds })
    }

    pub fn subgroups(&self) -> Vec<NormalSubgroup<'_>> {
        self.subgroup_seeds.iter().map(|s| normal_closure(&self.group, s)).collect()
    }
}

/// Orders of every subgroup the trial compared.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialCardinalities {
    pub subgroups: Vec<usize>,
    pub fat: usize,
    pub fat_by_weight: Vec<usize>,
    pub symmetric: usize,
    pub symmetric_fix1: usize,
    pub distributivity_lhs: usize,
    pub distributivity_rhs: usize,
    pub three_subgroup: [usize; 3],
    pub connectivity_pairs: usize,
    pub connectivity_holding: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialChecks {
    pub fat_equals_symmetric: bool,
    pub restricted_product: bool,
    pub distributivity: bool,
    pub three_subgroup: bool,
    /// Informational: the distributivity hypothesis is not a theorem.
    pub connected: bool,
}

/// One finite trial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialReport {
    pub seed: u64,
    pub degree: usize,
    pub group_order: usize,
    pub n: usize,
    pub weight_cap: usize,
    pub cardinalities: TrialCardinalities,
    pub checks: TrialChecks,
    pub stabilized: bool,
    pub pass: bool,
}

/// Draws an instance with `max(n, 3)` normal subgroups; the identity checks on
/// tuples use the first `n`, the three-subgroup checks use the first three.
pub fn run_trial(seed: u64, n: usize, weight_cap: usize, budget: u64, params: &InstanceParams) -> Result<TrialReport> {
    let inst = FiniteInstance::random(seed, n.max(3), params)?;
    let all = inst.subgroups();
    let rs = &all[..n];
    let fat = verify_fat_equals_symmetric(&inst.group, rs, weight_cap, budget)?;
    let restricted = verify_restricted_product(&inst.group, rs)?;
    let dist = verify_distributivity(&all[0], &all[1], &all[2]);
    let hall = verify_three_subgroup(&all[0], &all[1], &all[2]);
    let conn = verify_connectivity_all(&inst.group, rs)?;
    let checks = TrialChecks {
        fat_equals_symmetric: fat.pass,
        restricted_product: restricted.pass,
        distributivity: dist.pass,
        three_subgroup: hall.pass,
        connected: conn.connected,
    };
    let pass =
        checks.fat_equals_symmetric && checks.restricted_product && checks.distributivity && checks.three_subgroup;
    Ok(TrialReport {
        seed,
        degree: inst.group.degree(),
        group_order: inst.group.order(),
        n,
        weight_cap,
        cardinalities: TrialCardinalities {
            subgroups: rs.iter().map(NormalSubgroup::order).collect(),
            fat: fat.fat_order,
            fat_by_weight: fat.fat_orders_by_weight,
            symmetric: fat.symmetric_order,
            symmetric_fix1: restricted.restricted_order,
            distributivity_lhs: dist.lhs_order,
            distributivity_rhs: dist.rhs_order,
            three_subgroup: [hall.a_bc_order, hall.ab_c_order, hall.ac_b_order],
            connectivity_pairs: conn.pairs_checked,
            connectivity_holding: conn.pairs_holding,
        },
        checks,
        stabilized: fat.stabilized,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances_respect_parameters_and_are_deterministic() {
        let params = InstanceParams::default();
        for seed in 0..20 {
            let a = FiniteInstance::random(seed, 3, &params).unwrap();
            let b = FiniteInstance::random(seed, 3, &params).unwrap();
            assert!(a.group.order() <= 2000 && a.group.order() > 1);
            assert!(a.group.degree() <= 10);
            assert_eq!(a.group.elements(), b.group.elements());
            assert_eq!(a.subgroup_seeds, b.subgroup_seeds);
            assert!(a.subgroups().iter().all(NormalSubgroup::is_normal));
        }
    }

    #[test]
    fn trial_report_is_reproducible() {
        let params = InstanceParams::default();
        let a = run_trial(5, 3, 6, 10_000_000, &params).unwrap();
        let b = run_trial(5, 3, 6, 10_000_000, &params).unwrap();
        assert_eq!(a, b);
        assert!(a.pass);
    }

    #[test]
    fn impossible_parameters_are_rejected() {
        let bad = InstanceParams { min_degree: 5, max_degree: 4, ..InstanceParams::default() };
        assert!(FiniteInstance::random(0, 3, &bad).is_err());
        let tiny = InstanceParams { max_order: 1, ..InstanceParams::default() };
        assert!(run_trial(0, 2, 4, 1000, &tiny).is_err());
    }
}
