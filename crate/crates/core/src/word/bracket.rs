use std::fmt;

use crate::error::{invalid, Result};

use super::{commutator, Word};

/// A full binary bracketing of `weight` arguments.
///
/// Leaves carry their 1-based argument position; a well-formed arrangement of
/// weight `t` has leaves `1..=t` in left-to-right order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BracketArrangement {
    Leaf(usize),
    Node(Box<BracketArrangement>, Box<BracketArrangement>),
}

impl BracketArrangement {
    pub fn node(left: BracketArrangement, right: BracketArrangement) -> Self {
        BracketArrangement::Node(Box::new(left), Box::new(right))
    }

    pub fn weight(&self) -> usize {
        match self {
            BracketArrangement::Leaf(_) => 1,
            BracketArrangement::Node(l, r) => l.weight() + r.weight(),
        }
    }

    /// The left-normed arrangement `[[[·,·],·],…,·]`.
    pub fn left_normed(weight: usize) -> Result<Self> {
        if weight == 0 {
            return Err(invalid("bracket weight must be at least 1"));
        }
        let mut tree = BracketArrangement::Leaf(1);
        for pos in 2..=weight {
            tree = BracketArrangement::node(tree, BracketArrangement::Leaf(pos));
        }
        Ok(tree)
    }

    /// Leaf positions in left-to-right order.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            BracketArrangement::Leaf(p) => out.push(*p),
            BracketArrangement::Node(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    /// Checks that the leaves are exactly `1..=weight` in order.
    pub fn is_well_formed(&self) -> bool {
        self.leaves().into_iter().eq(1..=self.weight())
    }

    fn shifted(&self, offset: usize) -> Self {
        match self {
            BracketArrangement::Leaf(p) => BracketArrangement::Leaf(p + offset),
            BracketArrangement::Node(l, r) => BracketArrangement::node(l.shifted(offset), r.shifted(offset)),
        }
    }

    /// Evaluates with a caller-supplied binary operation; leaves are looked up in `args`.
    pub fn fold<T: Clone>(&self, args: &[T], bracket: &mut impl FnMut(&T, &T) -> T) -> T {
        match self {
            BracketArrangement::Leaf(p) => args[p - 1].clone(),
            BracketArrangement::Node(l, r) => {
                let a = l.fold(args, bracket);
                let b = r.fold(args, bracket);
                bracket(&a, &b)
            }
        }
    }
}

impl fmt::Display for BracketArrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketArrangement::Leaf(p) => write!(f, "{p}"),
            BracketArrangement::Node(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

/// All bracket arrangements of the given weight.
///
/// Ordered by left-subtree weight descending, then recursively by the left and
/// right subtrees. There are `Catalan(weight - 1)` of them.
pub fn enumerate_brackets(weight: usize) -> Result<Vec<BracketArrangement>> {
    if weight == 0 {
        return Err(invalid("bracket weight must be at least 1"));
    }
    let mut table: Vec<Vec<BracketArrangement>> = vec![Vec::new(), vec![BracketArrangement::Leaf(1)]];
    for t in 2..=weight {
        let mut level = Vec::new();
        for k in (1..t).rev() {
            for left in &table[k] {
                for right in &table[t - k] {
                    level.push(BracketArrangement::node(left.clone(), right.shifted(k)));
                }
            }
        }
        table.push(level);
    }
    Ok(table.swap_remove(weight))
}

/// Evaluates `arr` on `args` with the commutator as the bracket.
pub fn evaluate_bracket(arr: &BracketArrangement, args: &[Word]) -> Result<Word> {
    if arr.weight() != args.len() {
        return Err(invalid(format!("arrangement of weight {} applied to {} arguments", arr.weight(), args.len())));
    }
    if !arr.is_well_formed() {
        return Err(invalid(format!("arrangement {arr} does not number its leaves 1..n")));
    }
    Ok(arr.fold(args, &mut |a, b| commutator(a, b)))
}

/// `[[[a1, a2], a3], …, an]`; a single argument is returned unchanged.
pub fn left_normed(args: &[Word]) -> Result<Word> {
    let (first, rest) = args.split_first().ok_or_else(|| invalid("left-normed commutator of no arguments"))?;
    Ok(rest.iter().fold(first.clone(), |acc, w| commutator(&acc, w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use BracketArrangement::Leaf;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    /// Counts full binary bracketings by the split recursion, independently of
    /// the enumerator.
    fn bracketing_count(t: usize) -> u64 {
        if t == 1 {
            return 1;
        }
        (1..t).map(|k| bracketing_count(k) * bracketing_count(t - k)).sum()
    }

    #[test]
    fn weight_three_has_two_arrangements_in_canonical_order() {
        let all = enumerate_brackets(3).unwrap();
        let rendered: Vec<String> = all.iter().map(|a| a.to_string()).collect();
        assert_eq!(rendered, ["[[1,2],3]", "[1,[2,3]]"]);
    }

    #[test]
    fn counts_match_recursion() {
        assert_eq!(enumerate_brackets(1).unwrap(), vec![Leaf(1)]);
        assert_eq!(bracketing_count(4), 5);
        for t in 1..=8 {
            let all = enumerate_brackets(t).unwrap();
            assert_eq!(all.len() as u64, bracketing_count(t), "weight {t}");
            let distinct: std::collections::HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            assert!(all.iter().all(|a| a.is_well_formed() && a.weight() == t));
        }
        assert!(enumerate_brackets(0).is_err());
    }

    #[test]
    fn evaluation_examples() {
        let args = [w("x1"), w("x2"), w("x3")];
        let all = enumerate_brackets(3).unwrap();
        let c12 = commutator(&args[0], &args[1]);
        assert_eq!(evaluate_bracket(&all[0], &args).unwrap(), commutator(&c12, &args[2]));

        // hand expansion of [x1, [x2, x3]] = x1⁻¹ [x2,x3]⁻¹ x1 [x2,x3]
        let c23 = w("x2^-1 x3^-1 x2 x3");
        let expected = w("x1^-1").multiply(&c23.invert()).multiply(&w("x1")).multiply(&c23);
        assert_eq!(evaluate_bracket(&all[1], &args).unwrap(), expected);
        assert_eq!(evaluate_bracket(&all[1], &args).unwrap().to_text(), "x1^-1 x3^-1 x2^-1 x3 x2 x1 x2^-1 x3^-1 x2 x3");

        assert_eq!(evaluate_bracket(&Leaf(1), &[w("x1")]).unwrap(), w("x1"));
        assert!(evaluate_bracket(&all[0], &args[..2]).is_err());
        let bad = BracketArrangement::node(Leaf(2), Leaf(1));
        assert!(evaluate_bracket(&bad, &args[..2]).is_err());
    }

    #[test]
    fn left_normed_examples() {
        let (a, b, c) = (w("x1"), w("x2"), w("x3"));
        assert_eq!(left_normed(&[a.clone(), b.clone()]).unwrap(), commutator(&a, &b));
        assert_eq!(left_normed(&[a.clone(), b.clone(), c.clone()]).unwrap(), commutator(&commutator(&a, &b), &c));
        assert_eq!(left_normed(std::slice::from_ref(&a)).unwrap(), a);
        assert!(left_normed(&[]).is_err());
        let tree = BracketArrangement::left_normed(4).unwrap();
        let args = [w("x1"), w("x2 x1"), w("x3"), w("x2^-1")];
        assert_eq!(evaluate_bracket(&tree, &args).unwrap(), left_normed(&args).unwrap());
    }
}
