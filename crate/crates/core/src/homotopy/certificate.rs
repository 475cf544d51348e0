use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::magnus::{gamma_level, gamma_membership};
use crate::rng::{derive_seed, seeded};
use crate::word::{commutator, random_reduced_word, symmetric_generators, Word};

use super::{in_intersection, member_ri, Partition, SpherePresentation};

/// Length bound of fuzzed elements.
const FUZZ_LEN: usize = 8;

/// Structure facts of the `m = 2`, `n = 2` quotient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pi2Report {
    pub m: u32,
    pub n: usize,
    pub seed: u64,
    pub samples: usize,
    /// Fuzzed elements found in `R1` and in `R2`.
    pub in_r1: usize,
    pub in_r2: usize,
    /// Sampled symmetric commutator generators and fuzzed `[w1, w2]` that reduce to the identity.
    pub commutator_samples: usize,
    pub trivial_commutators: usize,
    /// Free rank of `G`, which is the whole quotient once the facts above hold.
    pub quotient_rank: u32,
    pub holds: bool,
}

/// Checks `R1 = R2 = G` on `samples` fuzzed elements and that commutators
/// vanish, so the quotient is `G ≅ ℤ`.
pub fn pi2_check(seed: u64, samples: usize) -> Result<Pi2Report> {
    let pres = SpherePresentation::new(2)?;
    let parts = Partition::singletons(2);
    let mut rng = seeded(seed);
    let (mut in_r1, mut in_r2, mut trivial) = (0, 0, 0);
    for _ in 0..samples {
        let w = random_reduced_word(&mut rng, pres.rank(), FUZZ_LEN);
        in_r1 += member_ri(&w, &parts.blocks()[0], &pres)? as usize;
        in_r2 += member_ri(&w, &parts.blocks()[1], &pres)? as usize;
        let v = random_reduced_word(&mut rng, pres.rank(), FUZZ_LEN);
        trivial += commutator(&w, &v).is_identity() as usize;
    }
    let specs = parts.subgroup_specs(&pres)?;
    let stream = symmetric_generators(&specs, 4, derive_seed(seed, 1), samples)?.with_rank(pres.rank());
    trivial += stream.filter(Word::is_identity).count();
    let quotient_rank = pres.rank();
    let holds = in_r1 == samples && in_r2 == samples && trivial == 2 * samples && quotient_rank == 1;
    Ok(Pi2Report {
        m: 2,
        n: 2,
        seed,
        samples,
        in_r1,
        in_r2,
        commutator_samples: 2 * samples,
        trivial_commutators: trivial,
        quotient_rank,
        holds,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplePassCounts {
    pub in_intersection: usize,
    pub in_gamma3: usize,
}

/// Evidence that `(R1 ∩ R2 ∩ R3) / [[R1, R2], R3]_S` is nontrivial for `m = 3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pi3Certificate {
    pub m: u32,
    pub n: usize,
    pub partition: Vec<Vec<u32>>,
    pub witness_word: Word,
    pub in_intersection: bool,
    /// Largest `k <= 3` with the witness in `γ_k`.
    pub gamma_level: usize,
    pub seed: u64,
    pub conj_depth: usize,
    pub samples: usize,
    pub sample_pass_counts: SamplePassCounts,
    pub holds: bool,
}

/// The witness `[x1, x2]` lies in every `R_i` but not in `γ3`, while every
/// sampled symmetric commutator generator lies in both the intersection and
/// `γ3`. Since `γ3` is a subgroup containing `[[R1, R2], R3]_S`, the witness
/// is a nontrivial coset.
pub fn pi3_certificate(seed: u64, samples: usize, conj_depth: usize) -> Result<Pi3Certificate> {
    let pres = SpherePresentation::new(3)?;
    let parts = Partition::singletons(3);
    let witness = commutator(&Word::generator(1), &Word::generator(2));
    let witness_in = in_intersection(&witness, &parts, &pres)?;
    let level = gamma_level(&witness, 3);

    let specs = parts.subgroup_specs(&pres)?;
    let mut counts = SamplePassCounts { in_intersection: 0, in_gamma3: 0 };
    for w in symmetric_generators(&specs, conj_depth, seed, samples)?.with_rank(pres.rank()) {
        counts.in_intersection += in_intersection(&w, &parts, &pres)? as usize;
        counts.in_gamma3 += gamma_membership(&w, 3)? as usize;
    }
    let holds = witness_in && level < 3 && counts.in_intersection == samples && counts.in_gamma3 == samples;
    Ok(Pi3Certificate {
        m: 3,
        n: 3,
        partition: parts.blocks().iter().map(|b| b.iter().copied().collect()).collect(),
        witness_word: witness,
        in_intersection: witness_in,
        gamma_level: level,
        seed,
        conj_depth,
        samples,
        sample_pass_counts: counts,
        holds,
    })
}
