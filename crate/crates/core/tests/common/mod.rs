//! Corpus generators and independent reference implementations shared by the
//! integration tests and the acceptance harness. Nothing here calls the
//! library code it is used to check.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use granum::fixtures;
use granum::poset::Poset;
use granum::sets::{ApproximationContext, Granulation, Region, Universe};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The six named posets followed by 200 seeded random posets on at most ten elements.
pub fn poset_corpus() -> Vec<(String, Poset)> {
    let mut out: Vec<(String, Poset)> = fixtures::named_posets()
        .into_iter()
        .map(|(n, p)| (n.to_string(), p))
        .collect();
    let mut r = rng(0xC0FFEE);
    for i in 0..200 {
        let n = r.gen_range(1..=10);
        let density = [0.1, 0.25, 0.4, 0.6][i % 4];
        out.push((format!("random-{i}"), Poset::random(n, density, &mut r)));
    }
    out
}

pub fn context(n: usize, blocks: &[Vec<usize>]) -> ApproximationContext {
    let u = Universe::numbered(n);
    let g = Granulation::new(
        &u,
        blocks
            .iter()
            .map(|b| Region::from_indices(n, b.iter().copied()))
            .collect(),
    )
    .expect("valid granulation");
    ApproximationContext::new(u, g).expect("valid context")
}

pub fn random_partition<R: Rng>(n: usize, r: &mut R) -> Vec<Vec<usize>> {
    let k = r.gen_range(1..=n);
    let mut labels: Vec<usize> = (0..n).map(|_| r.gen_range(0..k)).collect();
    // Keep block order by first occurrence.
    let mut seen: Vec<usize> = Vec::new();
    for l in labels.iter_mut() {
        let pos = match seen.iter().position(|s| s == l) {
            Some(p) => p,
            None => {
                seen.push(*l);
                seen.len() - 1
            }
        };
        *l = pos;
    }
    let mut blocks = vec![Vec::new(); seen.len()];
    for (x, &l) in labels.iter().enumerate() {
        blocks[l].push(x);
    }
    blocks
}

/// Distinct nonempty granules, optionally forced to cover the universe.
pub fn random_granules<R: Rng>(n: usize, count: usize, cover: bool, r: &mut R) -> Vec<Vec<usize>> {
    let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
    let count = count.min((1usize << n.min(20)) - 1);
    while set.len() < count {
        let g: Vec<usize> = (0..n).filter(|_| r.gen_bool(0.4)).collect();
        if !g.is_empty() {
            set.insert(g);
        }
    }
    if cover {
        for x in 0..n {
            if !set.iter().any(|g| g.contains(&x)) {
                set.insert(vec![x]);
            }
        }
    }
    set.into_iter().collect()
}

/// Lower and upper approximation of `a` straight from the definitions,
/// granule by granule.
pub fn naive_signature(n: usize, granules: &[Vec<usize>], a: u64) -> (u64, u64) {
    let mut lower = 0u64;
    let mut upper = 0u64;
    for g in granules {
        let gm: u64 = g.iter().fold(0, |m, &x| m | 1 << x);
        if gm & !a == 0 {
            lower |= gm;
        }
        if gm & a != 0 {
            upper |= gm;
        }
    }
    let _ = n;
    (lower, upper)
}

/// Every maximal conflict-free subset, found by growing sets one element at a time.
pub fn maximal_antichains_by_search(n: usize, conflict: &dyn Fn(usize, usize) -> bool) -> BTreeSet<Vec<usize>> {
    fn grow(
        n: usize,
        conflict: &dyn Fn(usize, usize) -> bool,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut BTreeSet<Vec<usize>>,
    ) {
        let extendable = (0..n).any(|x| !cur.contains(&x) && cur.iter().all(|&y| !conflict(x, y)));
        if !extendable {
            out.insert(cur.clone());
        }
        for x in start..n {
            if cur.iter().all(|&y| !conflict(x, y)) {
                cur.push(x);
                grow(n, conflict, x + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    grow(n, conflict, 0, &mut Vec::new(), &mut out);
    out
}

pub fn is_maximal_antichain(n: usize, conflict: &dyn Fn(usize, usize) -> bool, set: &[usize]) -> bool {
    let free = set.iter().all(|&a| set.iter().all(|&b| a == b || !conflict(a, b)));
    let maximal = (0..n).all(|x| set.contains(&x) || set.iter().any(|&y| conflict(x, y)));
    free && maximal
}

/// Number of elements on a longest chain, by memoised depth-first search.
pub fn longest_chain(p: &Poset) -> usize {
    fn depth(p: &Poset, x: usize, memo: &mut HashMap<usize, usize>) -> usize {
        if let Some(&d) = memo.get(&x) {
            return d;
        }
        let d = 1
            + (0..p.size())
                .filter(|&y| p.less(x, y))
                .map(|y| depth(p, y, memo))
                .max()
                .unwrap_or(0);
        memo.insert(x, d);
        d
    }
    let mut memo = HashMap::new();
    (0..p.size()).map(|x| depth(p, x, &mut memo)).max().unwrap_or(0)
}

/// HPC restated step by step: the first element is `1_1`; an element related
/// to its predecessor gets `1_{j+1}`; one related to no earlier element gets
/// `s^{r+1}(1_j)`; one related to an earlier element but not its predecessor
/// also gets `1_{j+1}`.
pub fn straight_line_hpc(n: usize, related: &dyn Fn(usize, usize) -> bool) -> Vec<String> {
    let render = |r: usize, j: usize| match r {
        0 => format!("1_{j}"),
        1 => format!("s(1_{j})"),
        _ => format!("s^{r}(1_{j})"),
    };
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let (mut r, mut j) = (0usize, 1usize);
    out.push(render(r, j));
    for i in 1..n {
        if related(i - 1, i) {
            j += 1;
            r = 0;
        } else if (0..i).all(|k| !related(k, i)) {
            r += 1;
        } else {
            j += 1;
            r = 0;
        }
        out.push(render(r, j));
    }
    out
}

/// All set partitions of `0..n` built by inserting each element into an
/// existing block or a new one.
pub fn partitions_by_insertion(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut acc: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for x in 0..n {
        let mut next = Vec::new();
        for p in &acc {
            for b in 0..p.len() {
                let mut q = p.clone();
                q[b].push(x);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![x]);
            next.push(q);
        }
        acc = next;
    }
    acc
}

/// Whether some region has signature `(a, b)` under the partition, trying all 2^n regions.
pub fn realizable_by_definition(n: usize, blocks: &[Vec<usize>], a: u64, b: u64) -> bool {
    (0..1u64 << n).any(|x| naive_signature(n, blocks, x) == (a, b))
}

/// Second, independent decision procedure for the inverse problem.
pub fn inverse_by_insertion(n: usize, pairs: &[(u64, u64)]) -> bool {
    partitions_by_insertion(n)
        .iter()
        .any(|p| pairs.iter().all(|&(a, b)| realizable_by_definition(n, p, a, b)))
}

pub fn shuffled<R: Rng>(n: usize, r: &mut R) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(r);
    v
}
