//! Free group words, bracket arrangements and sampled commutator generators.

use commlab::word::{
    commutator, enumerate_brackets, evaluate_bracket, fat_generators, left_normed, parse_word, symmetric_generators,
    SubgroupSpec, Word,
};

fn main() -> commlab::Result<()> {
    let a = parse_word("x1 x2 x2^-1 x3")?;
    let b = parse_word("x2")?;
    println!("reduced          {a}");
    println!("[a, b]           {}", commutator(&a, &b));
    println!("b^-1 a b         {}", a.conjugate(&b));

    let args: Vec<Word> = (1..=3).map(Word::generator).collect();
    println!("[[x1,x2],x3]     {}", left_normed(&args)?);
    for arr in enumerate_brackets(4)? {
        let four: Vec<Word> = (1..=4).map(Word::generator).collect();
        println!("{arr} length {}", evaluate_bracket(&arr, &four)?.len());
    }

    let subgroups: Vec<SubgroupSpec> = (1..=3).map(SubgroupSpec::of_generator).collect();
    println!("\nsymmetric generators of <<x1>>, <<x2>>, <<x3>>:");
    for w in symmetric_generators(&subgroups, 2, 7, 3)? {
        println!("  {w}");
    }
    println!("fat generators up to weight 4:");
    let mut stream = fat_generators(&subgroups, 4, 1, 7, 3)?;
    while let Some(s) = stream.next_sample() {
        println!("  {} {:?} -> {} letters", s.arrangement, s.slots, s.word.len());
    }
    Ok(())
}
