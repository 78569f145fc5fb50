//! Small named contexts and posets used throughout the tests and examples.

use crate::poset::Poset;
use crate::sets::{ApproximationContext, ContextFile, NamedRegion};

/// `U = {1,…,5}` partitioned as `{1,2}, {3}, {4,5}`.
pub fn fixture_a() -> ApproximationContext {
    ApproximationContext::from_names(&["1", "2", "3", "4", "5"], &[vec!["1", "2"], vec!["3"], vec!["4", "5"]])
        .expect("fixture A is well formed")
}

/// The poset `p < q`, `p < r`, with `q ∥ r` and `s` isolated.
pub fn fixture_p() -> Poset {
    Poset::from_pairs(vec!["p", "q", "r", "s"], &[(0, 1), (0, 2)]).expect("fixture P is acyclic")
}

/// Fixture P realised as regions under rough inclusion: over singleton
/// granules rough inclusion is plain inclusion, and
/// `p = {a} ⊂ q = {a,b}`, `p ⊂ r = {a,c}`, `s = {d}`.
pub fn fixture_p_context() -> ContextFile {
    let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let obj = |name: &str, members: &[&str]| NamedRegion {
        name: name.into(),
        members: s(members),
    };
    ContextFile {
        universe: s(&["a", "b", "c", "d"]),
        granules: vec![s(&["a"]), s(&["b"]), s(&["c"]), s(&["d"])],
        lower: Vec::new(),
        upper: Vec::new(),
        objects: vec![
            obj("p", &["a"]),
            obj("q", &["a", "b"]),
            obj("r", &["a", "c"]),
            obj("s", &["d"]),
        ],
    }
}

/// The six named posets: fixture P, chains of 3 and 4, a 4-antichain,
/// the diamond and the N.
pub fn named_posets() -> Vec<(&'static str, Poset)> {
    let diamond =
        Poset::from_pairs(vec!["bot", "l", "r", "top"], &[(0, 1), (0, 2), (1, 3), (2, 3)]).expect("diamond is acyclic");
    let n_poset = Poset::from_pairs(vec!["a", "b", "c", "d"], &[(0, 2), (1, 2), (1, 3)]).expect("N is acyclic");
    vec![
        ("fixture-p", fixture_p()),
        ("chain-3", Poset::chain(3)),
        ("chain-4", Poset::chain(4)),
        ("antichain-4", Poset::antichain(4)),
        ("diamond", diamond),
        ("n-poset", n_poset),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::Approximation;

    #[test]
    fn fixture_p_context_matches_poset() {
        let f = fixture_p_context();
        let ctx = f.context().unwrap();
        let regions = f.named_regions(ctx.universe()).unwrap();
        let poset = fixture_p();
        for (i, (_, a)) in regions.iter().enumerate() {
            for (j, (_, b)) in regions.iter().enumerate() {
                assert_eq!(a.is_proper_subset(b), poset.less(i, j));
            }
        }
    }
}
