//! One line per acceptance criterion; exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use commlab::braid::{
    check_a0_forms, check_braid_relations, check_t_conjugate_to_a, check_t_equals_a, is_brunnian,
    sample_brun_generators,
};
use commlab::derive_seed;
use commlab::finite::{
    closure, run_trial, verify_distributivity, verify_three_subgroup, FiniteInstance, InstanceParams, NormalSubgroup,
    PermGroup, Permutation, DEFAULT_FAT_BUDGET,
};
use commlab::homotopy::{pi2_check, pi3_certificate};
use commlab::magnus::{expand, TruncatedSeries};
use commlab::word::{random_reduced_word, Word};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const SEED: u64 = 2024;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

/// Element sets built straight from permutations, without the library's subgroup machinery.
type ElementSet = BTreeSet<Permutation>;

fn generated(degree: usize, gens: impl IntoIterator<Item = Permutation>) -> ElementSet {
    let mut gens: ElementSet = gens.into_iter().filter(|g| !g.is_identity()).collect();
    gens.insert(Permutation::identity(degree));
    let gens: Vec<Permutation> = gens.into_iter().collect();
    closure(degree, &gens, usize::MAX).unwrap().elements().iter().cloned().collect()
}

fn oracle_commutator(degree: usize, a: &ElementSet, b: &ElementSet) -> ElementSet {
    generated(degree, a.iter().flat_map(|x| b.iter().map(move |y| x.commutator(y))))
}

fn oracle_product(degree: usize, a: &ElementSet, b: &ElementSet) -> ElementSet {
    generated(degree, a.iter().chain(b).cloned())
}

fn as_set(group: &PermGroup, r: &NormalSubgroup) -> ElementSet {
    r.elements().iter().map(|&id| group.element(id).clone()).collect()
}

/// `[[R_σ1, R_σ2], …, R_σn]` multiplied over every ordering.
fn oracle_symmetric(degree: usize, rs: &[ElementSet]) -> ElementSet {
    let mut total = generated(degree, []);
    for order in orderings(rs.len()) {
        let iterated = order[1..].iter().fold(rs[order[0]].clone(), |acc, &k| oracle_commutator(degree, &acc, &rs[k]));
        total = oracle_product(degree, &total, &iterated);
    }
    total
}

fn orderings(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    orderings(n - 1)
        .into_iter()
        .flat_map(|p| {
            (0..n).map(move |at| {
                let mut q = p.clone();
                q.insert(at, n - 1);
                q
            })
        })
        .collect()
}

fn finite_theorems() -> (Verdict, Verdict) {
    const TRIALS: usize = 200;
    let params = InstanceParams::default();
    let start = Instant::now();
    let reports: Vec<_> = (0..TRIALS)
        .into_par_iter()
        .map(|k| {
            let n = if k % 2 == 0 { 2 } else { 3 };
            run_trial(derive_seed(SEED, k as u64), n, 2 * n, DEFAULT_FAT_BUDGET, &params)
        })
        .collect();
    let elapsed = start.elapsed();
    let ok: Vec<_> = reports.iter().filter_map(|r| r.as_ref().ok()).collect();
    let errors = TRIALS - ok.len();

    // Recompute the symmetric side of every tenth trial from raw permutations.
    let mut oracle_mismatch = 0;
    for (k, r) in ok.iter().enumerate().filter(|(k, _)| k % 10 == 0) {
        let inst = FiniteInstance::random(r.seed, r.n.max(3), &params).unwrap();
        let rs: Vec<ElementSet> = inst.subgroups()[..r.n].iter().map(|s| as_set(&inst.group, s)).collect();
        let sym = oracle_symmetric(inst.group.degree(), &rs);
        if sym.len() != r.cardinalities.symmetric || sym.len() != r.cardinalities.fat {
            oracle_mismatch += 1;
            eprintln!("oracle mismatch at trial {k}: oracle {} vs {:?}", sym.len(), r.cardinalities);
        }
    }

    let in_time = elapsed <= Duration::from_secs(300);
    let fat = ok.iter().filter(|r| r.checks.fat_equals_symmetric && r.stabilized).count();
    let restricted = ok.iter().filter(|r| r.checks.restricted_product).count();
    let c1 = verdict(
        fat == TRIALS && oracle_mismatch == 0 && in_time,
        format!(
            "fat = symmetric in {fat}/{TRIALS} stabilized trials, {errors} errored, {oracle_mismatch} oracle mismatches, {:.1}s",
            elapsed.as_secs_f64()
        ),
    );
    let c2 = verdict(restricted == TRIALS, format!("restricted product = symmetric in {restricted}/{TRIALS} trials"));
    (c1, c2)
}

fn normal_triples() -> Verdict {
    const TRIPLES: usize = 500;
    let params = InstanceParams::default();
    let results: Vec<(bool, bool, bool)> = (0..TRIPLES)
        .into_par_iter()
        .map(|k| {
            let inst = FiniteInstance::random(derive_seed(SEED ^ 3, k as u64), 3, &params).unwrap();
            let rs = inst.subgroups();
            let dist = verify_distributivity(&rs[0], &rs[1], &rs[2]);
            let hall = verify_three_subgroup(&rs[0], &rs[1], &rs[2]);
            let oracle_agrees = k % 25 != 0 || {
                let d = inst.group.degree();
                let [a, b, c] = [0, 1, 2].map(|i| as_set(&inst.group, &rs[i]));
                let lhs = oracle_commutator(d, &oracle_product(d, &a, &b), &c);
                let rhs = oracle_product(d, &oracle_commutator(d, &a, &c), &oracle_commutator(d, &b, &c));
                lhs == rhs && lhs.len() == dist.lhs_order
            };
            (dist.pass, hall.pass, oracle_agrees)
        })
        .collect();
    let dist = results.iter().filter(|r| r.0).count();
    let hall = results.iter().filter(|r| r.1).count();
    let oracle = results.iter().filter(|r| r.2).count();
    verdict(
        dist == TRIPLES && hall == TRIPLES && oracle == TRIPLES,
        format!("[AB,C] = [A,C][B,C] in {dist}/{TRIPLES}, Hall containments in {hall}/{TRIPLES}, oracle agrees in {oracle}/{TRIPLES}"),
    )
}

fn braid_identities() -> Verdict {
    let a0 = check_a0_forms(6);
    let t = check_t_equals_a(7);
    let conj = check_t_conjugate_to_a(7);
    let rel = check_braid_relations(7);
    let mut detail = format!(
        "A0 forms {}/{}, t_i = A(i,n) {}/{}, braid relations {}/{} (t_i conjugate to A(i,n) {}/{})",
        a0.holding, a0.checked, t.holding, t.checked, rel.holding, rel.checked, conj.holding, conj.checked
    );
    if let Some(first) = t.failures.first() {
        detail.push_str(&format!("; first t failure: {first}"));
    }
    verdict(a0.all_hold() && t.all_hold() && rel.all_hold(), detail)
}

fn brunnian_inclusion() -> Verdict {
    let start = Instant::now();
    let mut total = 0;
    let mut brunnian = 0;
    for n in 3..=5 {
        let braids: Vec<_> = sample_brun_generators(n, 4, derive_seed(SEED, n as u64), 100).unwrap().collect();
        total += braids.len();
        brunnian += braids.par_iter().filter(|b| is_brunnian(b)).count();
    }
    let elapsed = start.elapsed();
    verdict(
        brunnian == 300 && total == 300 && elapsed <= Duration::from_secs(120),
        format!("{brunnian}/{total} sampled braids Brunnian, {:.2}s", elapsed.as_secs_f64()),
    )
}

fn pi2() -> Verdict {
    let r = pi2_check(SEED, 1000).unwrap();
    verdict(
        r.holds && r.in_r1 == 1000 && r.in_r2 == 1000 && r.quotient_rank == 1,
        format!(
            "R1 {}/1000, R2 {}/1000, trivial commutators {}/{}, quotient rank {}",
            r.in_r1, r.in_r2, r.trivial_commutators, r.commutator_samples, r.quotient_rank
        ),
    )
}

fn pi3() -> Verdict {
    let c = pi3_certificate(SEED, 500, 4).unwrap();
    let counts = &c.sample_pass_counts;
    verdict(
        c.holds && c.in_intersection && c.gamma_level < 3 && counts.in_intersection == 500 && counts.in_gamma3 == 500,
        format!(
            "witness {} in intersection: {}, gamma level {}; samples in intersection {}/500, in gamma3 {}/500",
            c.witness_word, c.in_intersection, c.gamma_level, counts.in_intersection, counts.in_gamma3
        ),
    )
}

fn magnus() -> Verdict {
    const PAIRS: usize = 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut hom = 0;
    let mut inv = 0;
    for k in 0..PAIRS {
        let cutoff = 1 + k % 5;
        let u = random_reduced_word(&mut rng, 3, 10);
        let v = random_reduced_word(&mut rng, 3, 10);
        hom += (expand(&u.multiply(&v), cutoff) == expand(&u, cutoff).mul(&expand(&v, cutoff))) as usize;
        inv += expand(&u.invert(), cutoff).mul(&expand(&u, cutoff)).is_one() as usize;
    }
    let bracket = "x1^-1 x2^-1 x1 x2".parse::<Word>().unwrap();
    let expected = TruncatedSeries::from_terms(2, [(vec![], 1), (vec![1, 2], 1), (vec![2, 1], -1)]);
    let exact = expand(&bracket, 2) == expected;
    verdict(
        hom == PAIRS && inv == PAIRS && exact,
        format!("homomorphism {hom}/{PAIRS}, inverse {inv}/{PAIRS}, [x1,x2] = {} at cutoff 2", expand(&bracket, 2)),
    )
}

fn main() {
    let (c1, c2) = finite_theorems();
    let verdicts = [c1, c2, normal_triples(), braid_identities(), brunnian_inclusion(), pi2(), pi3(), magnus()];
    for (k, v) in verdicts.iter().enumerate() {
        println!("{} criterion {}: {}", if v.pass { "PASS" } else { "FAIL" }, k + 1, v.detail);
    }
    let failed = verdicts.iter().filter(|v| !v.pass).count();
    println!("acceptance: {}/{} criteria pass", verdicts.len() - failed, verdicts.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
