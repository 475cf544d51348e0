use rand::seq::SliceRandom;
use rand::Rng as _;

use crate::error::{invalid, Result};
use crate::rng::{seeded, Rng};

use super::bracket::{enumerate_brackets, evaluate_bracket, BracketArrangement};
use super::{random_reduced_word, Word};

/// A normal subgroup given as the normal closure of finitely many words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupSpec {
    label: String,
    generators: Vec<Word>,
}

impl SubgroupSpec {
    pub fn new(label: impl Into<String>, generators: Vec<Word>) -> Result<Self> {
        let label = label.into();
        if generators.is_empty() {
            return Err(invalid(format!("subgroup `{label}` has no generators")));
        }
        Ok(SubgroupSpec { label, generators })
    }

    /// `⟨⟨x_index⟩⟩`.
    pub fn of_generator(index: u32) -> Self {
        SubgroupSpec { label: format!("<<x{index}>>"), generators: vec![Word::generator(index)] }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn generators(&self) -> &[Word] {
        &self.generators
    }
}

/// One sampled commutator together with how it was built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutatorSample {
    pub word: Word,
    /// Arrangement the arguments were bracketed with.
    pub arrangement: BracketArrangement,
    /// 1-based subgroup index of each argument, left to right.
    pub slots: Vec<usize>,
}

#[derive(Debug, Clone)]
enum Shape {
    Symmetric { fix_first: bool, tree: BracketArrangement },
    Fat { min_weight: usize, brackets: Vec<Vec<BracketArrangement>> },
}

/// Deterministic stream of commutator generators; see [`symmetric_generators`]
/// and [`fat_generators`].
#[derive(Debug, Clone)]
pub struct GeneratorStream {
    subgroups: Vec<SubgroupSpec>,
    rank: u32,
    conj_depth: usize,
    rng: Rng,
    remaining: usize,
    shape: Shape,
}

impl GeneratorStream {
    fn new(subgroups: &[SubgroupSpec], conj_depth: usize, seed: u64, count: usize, shape: Shape) -> Self {
        let rank = subgroups.iter().flat_map(|s| s.generators.iter()).map(Word::max_index).max().unwrap_or(0).max(1);
        GeneratorStream { subgroups: subgroups.to_vec(), rank, conj_depth, rng: seeded(seed), remaining: count, shape }
    }

    /// Widens the conjugator alphabet to `x1..x_rank`. By default it is the
    /// largest index occurring among the subgroup generators.
    pub fn with_rank(mut self, rank: u32) -> Self {
        self.rank = rank.max(1);
        self
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    fn conjugated_generator(&mut self, slot: usize) -> Word {
        let gens = &self.subgroups[slot - 1].generators;
        let g = gens[self.rng.gen_range(0..gens.len())].clone();
        let by = random_reduced_word(&mut self.rng, self.rank, self.conj_depth);
        g.conjugate(&by)
    }

    /// Draws the next sample regardless of the remaining count.
    pub fn draw(&mut self) -> CommutatorSample {
        let n = self.subgroups.len();
        let (arrangement, slots) = match &self.shape {
            Shape::Symmetric { fix_first, tree } => {
                let mut slots: Vec<usize> = (1..=n).collect();
                if *fix_first {
                    slots[1..].shuffle(&mut self.rng);
                } else {
                    slots.shuffle(&mut self.rng);
                }
                (tree.clone(), slots)
            }
            Shape::Fat { min_weight, brackets } => {
                let t = self.rng.gen_range(*min_weight..min_weight + brackets.len());
                let level = &brackets[t - min_weight];
                let arrangement = level[self.rng.gen_range(0..level.len())].clone();
                let slots = surjective_assignment(&mut self.rng, t, n);
                (arrangement, slots)
            }
        };
        let args: Vec<Word> = slots.iter().map(|&s| self.conjugated_generator(s)).collect();
        let word = evaluate_bracket(&arrangement, &args).expect("arity matches by construction");
        CommutatorSample { word, arrangement, slots }
    }

    pub fn next_sample(&mut self) -> Option<CommutatorSample> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        Some(self.draw())
    }
}

impl Iterator for GeneratorStream {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        self.next_sample().map(|s| s.word)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining, Some(self.remaining))
    }
}

fn surjective_assignment(rng: &mut Rng, t: usize, n: usize) -> Vec<usize> {
    // rejection keeps the draw uniform over surjections; the fallback only
    // matters for large n where surjections are rare
    for _ in 0..10_000 {
        let slots: Vec<usize> = (0..t).map(|_| rng.gen_range(1..=n)).collect();
        if covers_all(&slots, n) {
            return slots;
        }
    }
    let mut slots: Vec<usize> = (1..=n).chain((n..t).map(|_| rng.gen_range(1..=n))).collect();
    slots.shuffle(rng);
    slots
}

fn covers_all(slots: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    for &s in slots {
        if (1..=n).contains(&s) {
            seen[s - 1] = true;
        }
    }
    seen.into_iter().all(|b| b)
}

fn require_subgroups(subgroups: &[SubgroupSpec]) -> Result<()> {
    if subgroups.is_empty() {
        return Err(invalid("at least one subgroup is required"));
    }
    Ok(())
}

/// Samples left-normed commutators `[[r_σ(1), r_σ(2)], …, r_σ(n)]` with `σ`
/// uniform in the full symmetric group and each `r` a generator of its
/// subgroup conjugated by a uniformly random reduced word of length at most
/// `conj_depth`.
pub fn symmetric_generators(
    subgroups: &[SubgroupSpec],
    conj_depth: usize,
    seed: u64,
    count: usize,
) -> Result<GeneratorStream> {
    require_subgroups(subgroups)?;
    let tree = BracketArrangement::left_normed(subgroups.len())?;
    Ok(GeneratorStream::new(subgroups, conj_depth, seed, count, Shape::Symmetric { fix_first: false, tree }))
}

/// As [`symmetric_generators`], but `σ` always keeps subgroup 1 in the first slot.
pub fn symmetric_generators_fix1(
    subgroups: &[SubgroupSpec],
    conj_depth: usize,
    seed: u64,
    count: usize,
) -> Result<GeneratorStream> {
    require_subgroups(subgroups)?;
    let tree = BracketArrangement::left_normed(subgroups.len())?;
    Ok(GeneratorStream::new(subgroups, conj_depth, seed, count, Shape::Symmetric { fix_first: true, tree }))
}

/// Samples fat commutator generators `β^t(g_{i1}, …, g_{it})` with
/// `n <= t <= max_weight`, a uniform arrangement of weight `t` and a uniform
/// index assignment covering every subgroup.
pub fn fat_generators(
    subgroups: &[SubgroupSpec],
    max_weight: usize,
    conj_depth: usize,
    seed: u64,
    count: usize,
) -> Result<GeneratorStream> {
    require_subgroups(subgroups)?;
    let n = subgroups.len();
    if max_weight < n {
        return Err(invalid(format!("max_weight {max_weight} is below the number of subgroups {n}")));
    }
    let brackets = (n..=max_weight).map(enumerate_brackets).collect::<Result<Vec<_>>>()?;
    Ok(GeneratorStream::new(subgroups, conj_depth, seed, count, Shape::Fat { min_weight: n, brackets }))
}

/// Evaluates one fat commutator generator, checking the index conditions:
/// each index lies in `1..=n` and every index in `1..=n` occurs.
///
/// `args[s]` is the element placed at argument `s`; it is expected to come
/// from subgroup `indices[s]`.
pub fn fat_commutator(arr: &BracketArrangement, indices: &[usize], n: usize, args: &[Word]) -> Result<Word> {
    if indices.len() != arr.weight() || args.len() != arr.weight() {
        return Err(invalid("indices and arguments must match the arrangement weight"));
    }
    if arr.weight() < n {
        return Err(invalid(format!("weight {} is below n = {n}", arr.weight())));
    }
    if let Some(bad) = indices.iter().find(|&&i| i == 0 || i > n) {
        return Err(invalid(format!("index {bad} outside 1..={n}")));
    }
    if !covers_all(indices, n) {
        let missing: Vec<usize> = (1..=n).filter(|i| !indices.contains(i)).collect();
        return Err(invalid(format!("indices {indices:?} miss {missing:?}")));
    }
    evaluate_bracket(arr, args)
}
