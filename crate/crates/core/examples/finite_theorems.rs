//! Fat and symmetric commutator subgroups compared in random permutation groups.

use commlab::finite::{
    closure, normal_closure, run_trial, verify_fat_equals_symmetric, InstanceParams, Permutation, DEFAULT_FAT_BUDGET,
};

fn main() -> commlab::Result<()> {
    // S4 with the normal closures of a transposition, a double transposition and a 3-cycle
    let s4 =
        closure(4, &[Permutation::from_cycles(4, &[&[1, 2]])?, Permutation::from_cycles(4, &[&[1, 2, 3, 4]])?], 100)?;
    let id = |c: &[&[usize]]| s4.id_of(&Permutation::from_cycles(4, c).unwrap()).unwrap();
    let rs = [
        normal_closure(&s4, &[id(&[&[1, 2]])]),
        normal_closure(&s4, &[id(&[&[1, 2], &[3, 4]])]),
        normal_closure(&s4, &[id(&[&[1, 2, 3]])]),
    ];
    let rep = verify_fat_equals_symmetric(&s4, &rs, 6, DEFAULT_FAT_BUDGET)?;
    println!("S4: fat {} symmetric {} by weight {:?}", rep.fat_order, rep.symmetric_order, rep.fat_orders_by_weight);

    let params = InstanceParams::default();
    for seed in 0..8 {
        let t = run_trial(seed, 2 + seed as usize % 2, 6, DEFAULT_FAT_BUDGET, &params)?;
        println!(
            "seed {seed}: |G| = {:>4}, n = {}, fat = {:>4}, pass = {}, connected = {}",
            t.group_order, t.n, t.cardinalities.fat, t.pass, t.checks.connected
        );
    }
    Ok(())
}
