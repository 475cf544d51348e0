use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::Rng as _;

use crate::error::{invalid, Error, Result};
use crate::rng::{seeded, Rng};
use crate::word::random_reduced_word;

use super::generators::{gen_t, pure_generators};
use super::{parse_braid, Braid};

/// One sampled left-normed commutator of conjugated `t` generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrunSample {
    pub braid: Braid,
    /// `σ(1), …, σ(n-1)`: which `t_i` fills each slot.
    pub order: Vec<usize>,
    /// Exponent `±1` of each `t` before conjugation.
    pub signs: Vec<i8>,
    /// Conjugator of each slot, as a word in the `A_{i,j}` (free letter `x_k` is the `k`-th pure generator).
    pub conjugators: Vec<crate::word::Word>,
}

/// Deterministic stream of elements of the symmetric commutator subgroup of
/// the normal closures `⟨⟨t_1⟩⟩, …, ⟨⟨t_{n-1}⟩⟩` in the pure braid group.
#[derive(Debug, Clone)]
pub struct BrunStream {
    strands: usize,
    conj_depth: usize,
    ts: Vec<Braid>,
    pure: Vec<Braid>,
    rng: Rng,
    remaining: usize,
}

impl BrunStream {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn conj_depth(&self) -> usize {
        self.conj_depth
    }

    /// Draws the next sample regardless of the remaining count.
    pub fn draw(&mut self) -> BrunSample {
        let n = self.strands;
        let mut order: Vec<usize> = (1..n).collect();
        order.shuffle(&mut self.rng);
        let mut signs = Vec::with_capacity(order.len());
        let mut conjugators = Vec::with_capacity(order.len());
        let mut acc: Option<Braid> = None;
        for &i in &order {
            let sign: i8 = if self.rng.gen_bool(0.5) { 1 } else { -1 };
            let by = random_reduced_word(&mut self.rng, self.pure.len() as u32, self.conj_depth);
            let by_braid = Braid::product(
                n,
                &by.letters()
                    .iter()
                    .map(|l| {
                        let a = &self.pure[l.index() as usize - 1];
                        if l.is_inverse() {
                            a.inverse()
                        } else {
                            a.clone()
                        }
                    })
                    .collect::<Vec<_>>(),
            );
            let r = self.ts[i - 1].pow(sign as i64).conjugate(&by_braid);
            acc = Some(match acc {
                None => r,
                Some(left) => left.commutator(&r),
            });
            signs.push(sign);
            conjugators.push(by);
        }
        BrunSample { braid: acc.unwrap_or_else(|| Braid::identity(n)), order, signs, conjugators }
    }

    pub fn next_sample(&mut self) -> Option<BrunSample> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        Some(self.draw())
    }
}

impl Iterator for BrunStream {
    type Item = Braid;

    fn next(&mut self) -> Option<Braid> {
        self.next_sample().map(|s| s.braid)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining, Some(self.remaining))
    }
}

/// Samples `[[r_σ(1), r_σ(2)], …, r_σ(n-1)]` with `σ` uniform, each
/// `r_i = t_i^{±1}` conjugated by a uniformly random reduced word of length at
/// most `conj_depth` in the pure generators `A_{i,j}`.
pub fn sample_brun_generators(n: usize, conj_depth: usize, seed: u64, count: usize) -> Result<BrunStream> {
    if n < 2 {
        return Err(invalid(format!("need at least 2 strands, got {n}")));
    }
    Ok(BrunStream {
        strands: n,
        conj_depth,
        ts: (1..n).map(|i| gen_t(i, n)).collect::<Result<_>>()?,
        pure: pure_generators(n)?,
        rng: seeded(seed),
        remaining: count,
    })
}

/// A braid corpus file: a `# strands=<n> seed=<s>` header, then one braid per line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub strands: usize,
    pub seed: u64,
    pub braids: Vec<Braid>,
}

pub fn write_corpus(corpus: &Corpus) -> String {
    let mut out = format!("# strands={} seed={}\n", corpus.strands, corpus.seed);
    for b in &corpus.braids {
        let _ = writeln!(out, "{b}");
    }
    out
}

pub fn read_corpus(text: &str) -> Result<Corpus> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| invalid("empty corpus"))?;
    let field = |key: &str| -> Result<&str> {
        header
            .strip_prefix('#')
            .unwrap_or("")
            .split_whitespace()
            .find_map(|kv| kv.strip_prefix(key)?.strip_prefix('='))
            .ok_or_else(|| invalid(format!("corpus header lacks `{key}=`: `{header}`")))
    };
    let strands: usize = field("strands")?.parse().map_err(|_| invalid("bad strand count in corpus header"))?;
    let seed: u64 = field("seed")?.parse().map_err(|_| invalid("bad seed in corpus header"))?;
    let braids = lines
        .enumerate()
        .map(|(k, line)| {
            parse_braid(line, strands).map_err(|e| match e {
                Error::Parse { position, message } => {
                    Error::Parse { position, message: format!("line {}: {message}", k + 2) }
                }
                other => other,
            })
        })
        .collect::<Result<_>>()?;
    Ok(Corpus { strands, seed, braids })
}
