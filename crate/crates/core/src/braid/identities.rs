use serde::{Deserialize, Serialize};

use super::artin::same_braid;
use super::generators::{gen_a, gen_a0, gen_t};
use super::Braid;

/// How many instances of an identity were checked and which ones failed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityTally {
    pub checked: usize,
    pub holding: usize,
    pub failures: Vec<String>,
}

impl IdentityTally {
    fn record(&mut self, holds: bool, label: impl FnOnce() -> String) {
        self.checked += 1;
        if holds {
            self.holding += 1;
        } else {
            self.failures.push(label());
        }
    }

    pub fn all_hold(&self) -> bool {
        self.holding == self.checked
    }
}

/// Both expressions of `A_{0,j}` agree, `1 <= j <= n <= max_n`.
pub fn check_a0_forms(max_n: usize) -> IdentityTally {
    let mut tally = IdentityTally::default();
    for n in 1..=max_n {
        for j in 1..=n {
            let (p, s) = gen_a0(j, n).expect("indices in range");
            tally.record(same_braid(&p, &s), || format!("A(0,{j}) on {n} strands"));
        }
    }
    tally
}

/// `t_i` and `A_{i,n}` as braids, `1 <= i < n <= max_n`.
pub fn check_t_equals_a(max_n: usize) -> IdentityTally {
    let mut tally = IdentityTally::default();
    for n in 2..=max_n {
        for i in 1..n {
            let holds = same_braid(&gen_t(i, n).expect("in range"), &gen_a(i, n, n).expect("in range"));
            tally.record(holds, || format!("t_{i} vs A({i},{n}) on {n} strands"));
        }
    }
    tally
}

/// `t_i = c⁻¹ A_{i,n} c` with `c = A_{i+1,n} ⋯ A_{n-1,n}`, `1 <= i < n <= max_n`.
pub fn check_t_conjugate_to_a(max_n: usize) -> IdentityTally {
    let mut tally = IdentityTally::default();
    for n in 2..=max_n {
        for i in 1..n {
            let c = Braid::product(n, &(i + 1..n).map(|k| gen_a(k, n, n).expect("in range")).collect::<Vec<_>>());
            let holds = same_braid(&gen_t(i, n).expect("in range"), &gen_a(i, n, n).expect("in range").conjugate(&c));
            tally.record(holds, || format!("t_{i} vs conjugated A({i},{n}) on {n} strands"));
        }
    }
    tally
}

/// Far commutation and the braid relation under the Artin action, `n <= max_n`.
pub fn check_braid_relations(max_n: usize) -> IdentityTally {
    let mut tally = IdentityTally::default();
    let s = |i: usize, n: usize| Braid::sigma(i as u32, n).expect("in range");
    for n in 2..=max_n {
        for i in 1..n {
            for j in i + 2..n {
                let holds = same_braid(&s(i, n).multiply(&s(j, n)), &s(j, n).multiply(&s(i, n)));
                tally.record(holds, || format!("s{i} s{j} = s{j} s{i} on {n} strands"));
            }
            if i + 1 < n {
                let lhs = Braid::product(n, &[s(i, n), s(i + 1, n), s(i, n)]);
                let rhs = Braid::product(n, &[s(i + 1, n), s(i, n), s(i + 1, n)]);
                tally.record(same_braid(&lhs, &rhs), || format!("braid relation at {i} on {n} strands"));
            }
        }
    }
    tally
}
