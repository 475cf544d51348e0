//! Truncated Magnus expansions and lower central series membership.

use commlab::magnus::{expand, gamma_level};
use commlab::word::{left_normed, Word};

fn main() -> commlab::Result<()> {
    let x: Vec<Word> = (1..=3).map(Word::generator).collect();
    let c2 = left_normed(&x[..2])?;
    println!("M([x1,x2]) to degree 2: {}", expand(&c2, 2));
    println!("M(x1^-1) to degree 3:   {}", expand(&x[0].invert(), 3));

    let c3 = left_normed(&x)?;
    for (name, w) in [("x1", &x[0]), ("[x1,x2]", &c2), ("[[x1,x2],x3]", &c3)] {
        println!("{name:<14} lies in gamma_{}", gamma_level(w, 6));
    }
    Ok(())
}
