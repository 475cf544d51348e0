//! Membership in normal closures of punctures, and the quotient certificates.

use commlab::homotopy::{
    in_intersection, member_ri, pi2_check, pi3_certificate, Membership, Partition, Presentation, SpherePresentation,
};
use commlab::word::parse_word;

fn main() -> commlab::Result<()> {
    let pres = SpherePresentation::new(3)?;
    let parts = Partition::singletons(3);
    let w = parse_word("x1^-1 x2^-1 x1 x2")?;
    for (k, block) in parts.blocks().iter().enumerate() {
        println!("[x1,x2] in R{}: {}", k + 1, member_ri(&w, block, &pres)?);
    }
    println!("in the intersection: {}", in_intersection(&w, &parts, &pres)?);

    let p2 = pi2_check(0, 1000)?;
    println!("m = 2: quotient rank {}, holds {}", p2.quotient_rank, p2.holds);
    let p3 = pi3_certificate(3, 500, 4)?;
    println!("{}", serde_json::to_string_pretty(&p3).expect("serializes"));

    let rp2 = Presentation::projective_plane(3)?;
    println!("projective plane relator: {}", rp2.render(&rp2.relators()[0]));
    let killed = [rp2.puncture(1)?].into_iter().collect();
    let answer = rp2.member(&parse_word("x2")?, &killed)?;
    assert_eq!(answer, Membership::Member);
    println!("puncture x1 lies in its own normal closure: {answer:?}");
    Ok(())
}
