//! The pure braid generators and the identities between them.

use commlab::braid::{
    artin_action, check_a0_forms, check_t_conjugate_to_a, check_t_equals_a, gen_a, gen_a0, gen_t, is_pure,
};

fn main() -> commlab::Result<()> {
    let a13 = gen_a(1, 3, 3)?;
    println!("A(1,3) = {a13}, pure = {}", is_pure(&a13));
    let t1 = gen_t(1, 3)?;
    println!("t1     = {t1}");
    for (k, img) in artin_action(&t1).images().iter().enumerate() {
        println!("  x{} -> {img}", k + 1);
    }
    let (product, sigma) = gen_a0(2, 4)?;
    println!("A(0,2) on 4 strands:\n  {product}\n  {sigma}");

    let a0 = check_a0_forms(6);
    let t = check_t_equals_a(7);
    let conj = check_t_conjugate_to_a(7);
    println!("A0 forms agree: {}/{}", a0.holding, a0.checked);
    println!("t_i = A(i,n):   {}/{}", t.holding, t.checked);
    println!("t_i ~ A(i,n):   {}/{}", conj.holding, conj.checked);
    Ok(())
}
