//! Brute-force verification of commutator subgroup identities in finite
//! permutation groups, where every subgroup is an explicit element set.

mod commutators;
mod group;
mod instance;
mod perm;
mod subgroup;
mod verify;

pub use commutators::{
    fat_commutator, symmetric_commutator, symmetric_commutator_fix1, FatCommutator, DEFAULT_FAT_BUDGET,
};
pub use group::{closure, ElementId, PermGroup, DEFAULT_ORDER_CAP};
pub use instance::{
    run_trial, FiniteInstance, InstanceParams, TrialCardinalities, TrialChecks, TrialReport, MAX_DRAWS,
};
pub use perm::Permutation;
pub use subgroup::{commutator_subgroup, commutator_subgroup_by_generators, normal_closure, NormalSubgroup};
pub use verify::{
    verify_connectivity, verify_connectivity_all, verify_distributivity, verify_fat_equals_symmetric,
    verify_restricted_product, verify_three_subgroup, ConnectivityReport, ConnectivitySummary, DistributivityReport,
    FatSymmetricReport, RestrictedProductReport, ThreeSubgroupReport,
};
