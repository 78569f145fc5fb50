use crate::counting::ConflictGraph;
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::relation::Relation;

/// Largest collection enumerated by [`enumerate_maximal_antichains`].
pub const ANTICHAIN_CAP: usize = 20;

/// Every maximal conflict-free subset, each sorted, in lexicographic order.
pub fn enumerate_maximal_antichains(conflict: &ConflictGraph) -> Result<Vec<Vec<usize>>> {
    maximal_independent_sets(conflict.relation())
}

/// As [`enumerate_maximal_antichains`] over any symmetric relation.
pub fn maximal_independent_sets(r: &Relation) -> Result<Vec<Vec<usize>>> {
    let n = r.size();
    if n > ANTICHAIN_CAP {
        return Err(Error::TooLarge {
            what: "collection for antichain enumeration",
            size: n,
            cap: ANTICHAIN_CAP,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && r.holds(i, j))
                .fold(0u32, |m, j| m | 1 << j)
        })
        .collect();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let free = (0..n).all(|i| mask >> i & 1 == 0 || adj[i] & mask == 0);
        if !free {
            continue;
        }
        let maximal = (0..n).all(|i| mask >> i & 1 == 1 || adj[i] & mask != 0);
        if maximal {
            out.push((0..n).filter(|&i| mask >> i & 1 == 1).collect());
        }
    }
    out.sort();
    Ok(out)
}

/// Height levels of a strict partial order together with a longest chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MirskyCover {
    /// `levels[h]` holds the elements whose longest chain from below has `h + 1` elements.
    pub levels: Vec<Vec<usize>>,
    pub longest_chain: Vec<usize>,
}

impl MirskyCover {
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }
}

/// Covers a strict partial order by antichains, one per height level; the
/// number of levels equals the length of a longest chain.
pub fn minimum_antichain_cover(less: &Relation) -> Result<MirskyCover> {
    let n = less.size();
    if let Some(i) = less.first_reflexive_point() {
        return Err(Error::NotPartialOrder(format!("element {i} is below itself")));
    }
    if let Some((i, j, k)) = less.transitivity_violation() {
        return Err(Error::NotPartialOrder(format!("{i} < {j} < {k} but not {i} < {k}")));
    }
    if let Some((i, j)) = less.antisymmetry_violation() {
        return Err(Error::NotPartialOrder(format!("{i} < {j} and {j} < {i}")));
    }
    // height[x] = 1 + max height below x; process in order of down-set size,
    // which is a linear extension for a transitive order.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (0..n).filter(|&y| less.holds(y, x)).count());
    let mut height = vec![0usize; n];
    let mut via: Vec<Option<usize>> = vec![None; n];
    for &x in &order {
        for y in 0..n {
            if less.holds(y, x) && height[y] + 1 > height[x] {
                height[x] = height[y] + 1;
                via[x] = Some(y);
            }
        }
    }
    let levels_n = height.iter().map(|h| h + 1).max().unwrap_or(0);
    let mut levels = vec![Vec::new(); levels_n];
    for x in 0..n {
        levels[height[x]].push(x);
    }
    let mut longest_chain = Vec::new();
    let mut cur = (0..n).find(|&x| height[x] + 1 == levels_n);
    while let Some(x) = cur {
        longest_chain.push(x);
        cur = via[x];
    }
    longest_chain.reverse();
    Ok(MirskyCover { levels, longest_chain })
}

/// [`minimum_antichain_cover`] for a [`Poset`].
pub fn poset_antichain_cover(p: &Poset) -> MirskyCover {
    minimum_antichain_cover(p.less_relation()).expect("posets are strict partial orders")
}
