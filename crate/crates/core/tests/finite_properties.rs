use commlab::finite::{
    closure, fat_commutator, normal_closure, run_trial, FiniteInstance, InstanceParams, Permutation, DEFAULT_FAT_BUDGET,
};
use commlab::word::{symmetric_generators, SubgroupSpec};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_ignores_generator_order(seed in any::<u64>()) {
        let inst = FiniteInstance::random(seed, 1, &InstanceParams::default()).unwrap();
        let mut gens = inst.group.generators().to_vec();
        gens.reverse();
        let again = closure(inst.group.degree(), &gens, 2000).unwrap();
        let mut a: Vec<Permutation> = inst.group.elements().to_vec();
        let mut b: Vec<Permutation> = again.elements().to_vec();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn normal_closures_are_conjugation_stable(seed in any::<u64>()) {
        let inst = FiniteInstance::random(seed, 2, &InstanceParams::default()).unwrap();
        let g = &inst.group;
        for r in inst.subgroups() {
            for &x in r.elements() {
                for y in 0..g.order() as u32 {
                    prop_assert!(r.contains(g.conjugate(x, y)));
                }
            }
        }
    }

    #[test]
    fn identities_hold_on_random_instances(seed in any::<u64>(), n in 2usize..=3) {
        let report = run_trial(seed, n, 2 * n, DEFAULT_FAT_BUDGET, &InstanceParams::default()).unwrap();
        prop_assert!(report.pass, "{:?}", report);
    }

    /// Send `x_i` to a seed of `R_i`; every sampled symmetric generator must land in the fat subgroup.
    #[test]
    fn symmetric_generator_images_lie_in_fat_subgroup(seed in any::<u64>(), n in 2usize..=3) {
        let inst = FiniteInstance::random(seed, n, &InstanceParams::default()).unwrap();
        let g = &inst.group;
        let images: Vec<u32> = inst.subgroup_seeds.iter().map(|s| s[0]).collect();
        let rs: Vec<_> = images.iter().map(|&x| normal_closure(g, &[x])).collect();
        let fat = fat_commutator(g, &rs, 2 * n, DEFAULT_FAT_BUDGET).unwrap();
        let specs: Vec<SubgroupSpec> = (1..=n as u32).map(SubgroupSpec::of_generator).collect();
        for w in symmetric_generators(&specs, 3, seed, 10).unwrap() {
            let x = g.evaluate_word(&w, &images).unwrap();
            prop_assert!(fat.subgroup.contains(x), "{}", w);
        }
    }
}
