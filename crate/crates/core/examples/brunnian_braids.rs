//! Sampling the symmetric commutator subgroup of the `t_i` and checking Brunnian-ness.

use commlab::braid::{delete_strand, gen_t, is_brunnian, is_trivial, sample_brun_generators, write_corpus, Corpus};

fn main() -> commlab::Result<()> {
    let c = gen_t(1, 3)?.commutator(&gen_t(2, 3)?);
    println!("[t1, t2] = {c}");
    for j in 1..=3 {
        println!("  delete strand {j}: trivial = {}", is_trivial(&delete_strand(&c, j)?));
    }

    for n in 3..=5 {
        let braids: Vec<_> = sample_brun_generators(n, 4, 1, 100)?.collect();
        let ok = braids.iter().filter(|b| is_brunnian(b)).count();
        println!("{n} strands: {ok}/100 Brunnian");
    }

    let corpus = Corpus { strands: 3, seed: 9, braids: sample_brun_generators(3, 1, 9, 3)?.collect() };
    print!("{}", write_corpus(&corpus));
    Ok(())
}
