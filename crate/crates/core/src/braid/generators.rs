use crate::error::{invalid, Result};

use super::{Braid, Crossing};

fn check_strands(n: usize) -> Result<()> {
    if n == 0 {
        return Err(invalid("a braid needs at least one strand"));
    }
    Ok(())
}

/// `σ_{j-1} ⋯ σ_{i+1} σ_i² σ_{i+1}⁻¹ ⋯ σ_{j-1}⁻¹`, the pure generator linking strands `i` and `j`.
pub fn gen_a(i: usize, j: usize, n: usize) -> Result<Braid> {
    if !(1 <= i && i < j && j <= n) {
        return Err(invalid(format!("A({i},{j}) needs 1 <= i < j <= n, n = {n}")));
    }
    let prefix: Vec<Crossing> = (i + 1..j).rev().map(|k| Crossing::pos(k as u32)).collect();
    let core = [Crossing::pos(i as u32); 2];
    let suffix = prefix.iter().rev().map(|c| c.inv());
    Braid::new(n, prefix.iter().copied().chain(core).chain(suffix))
}

/// `σ_i σ_{i+1} ⋯ σ_{n-2} σ_{n-1}² σ_{n-2}⁻¹ ⋯ σ_i⁻¹`.
pub fn gen_t(i: usize, n: usize) -> Result<Braid> {
    if !(1 <= i && i < n) {
        return Err(invalid(format!("t_{i} needs 1 <= i <= n - 1, n = {n}")));
    }
    let prefix: Vec<Crossing> = (i..n - 1).map(|k| Crossing::pos(k as u32)).collect();
    let core = [Crossing::pos(n as u32 - 1); 2];
    let suffix = prefix.iter().rev().map(|c| c.inv());
    Braid::new(n, prefix.iter().copied().chain(core).chain(suffix))
}

/// The two expressions of `A_{0,j}`: the product of pure generators
/// `(A_{j,j+1} ⋯ A_{j,n})⁻¹ (A_{1,j} ⋯ A_{j-1,j})⁻¹`, and the σ-word
/// `(σ_j ⋯ σ_{n-2} σ_{n-1}² σ_{n-2} ⋯ σ_j)⁻¹ (σ_{j-1} ⋯ σ_2 σ_1² σ_2 ⋯ σ_{j-1})⁻¹`.
pub fn gen_a0(j: usize, n: usize) -> Result<(Braid, Braid)> {
    check_strands(n)?;
    if !(1 <= j && j <= n) {
        return Err(invalid(format!("A(0,{j}) needs 1 <= j <= n, n = {n}")));
    }
    let right = (j + 1..=n).map(|k| gen_a(j, k, n)).collect::<Result<Vec<_>>>()?;
    let left = (1..j).map(|k| gen_a(k, j, n)).collect::<Result<Vec<_>>>()?;
    let product_form = Braid::product(n, &right).inverse().multiply(&Braid::product(n, &left).inverse());

    // a palindromic block σ_a ⋯ σ_{b+1} σ_b² σ_{b+1} ⋯ σ_a over an index run
    let palindrome = |run: Vec<usize>| -> Result<Braid> {
        let Some((&last, rest)) = run.split_last() else {
            return Ok(Braid::identity(n));
        };
        let crossings =
            rest.iter().copied().chain([last, last]).chain(rest.iter().rev().copied()).map(|k| Crossing::pos(k as u32));
        Braid::new(n, crossings)
    };
    let upper = palindrome((j..n).collect())?;
    let lower = palindrome((1..j).rev().collect())?;
    let sigma_form = upper.inverse().multiply(&lower.inverse());
    Ok((product_form, sigma_form))
}

/// All `A_{i,j}`, `1 <= i < j <= n`, in lexicographic order of `(i, j)`.
pub fn pure_generators(n: usize) -> Result<Vec<Braid>> {
    check_strands(n)?;
    let mut out = Vec::new();
    for i in 1..n {
        for j in i + 1..=n {
            out.push(gen_a(i, j, n)?);
        }
    }
    Ok(out)
}
