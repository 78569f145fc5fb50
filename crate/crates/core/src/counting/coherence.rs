use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::arrangement::OrderArrangement;
use super::conflict::ConflictGraph;
use super::hpca::{is_hpca_coherent, MarkingRule};

/// Largest collection whose arrangements are searched exhaustively.
pub const EXHAUSTIVE_ARRANGEMENTS: usize = 8;

/// Outcome of an arrangement search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrangementSearch {
    pub found: Option<OrderArrangement>,
    /// Arrangements examined up to and including the witness.
    pub examined: u64,
    /// Every arrangement of the collection was examined.
    pub exhaustive: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub budget: u64,
    pub seed: u64,
    pub marking: MarkingRule,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: 40_320,
            seed: 0x5EED,
            marking: MarkingRule::default(),
        }
    }
}

/// An HPCA coherent arrangement, if one is found within the budget.
///
/// Collections of at most eight elements are searched in lexicographic
/// order; larger ones are sampled, canonical order first.
pub fn find_coherent_order(conflict: &ConflictGraph, config: SearchConfig) -> ArrangementSearch {
    search(conflict, config, true)
}

/// An arrangement under which HPCA is not coherent, if one is found.
pub fn find_incoherent_order(conflict: &ConflictGraph, config: SearchConfig) -> ArrangementSearch {
    search(conflict, config, false)
}

fn factorial(n: usize) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

fn search(conflict: &ConflictGraph, config: SearchConfig, want: bool) -> ArrangementSearch {
    let n = conflict.len();
    let hit = |a: &OrderArrangement| is_hpca_coherent(a, conflict, config.marking) == want;
    if n <= EXHAUSTIVE_ARRANGEMENTS {
        let total = factorial(n).expect("small factorial");
        let limit = total.min(config.budget);
        let found = (0..limit)
            .into_par_iter()
            .map(|r| OrderArrangement::lexicographic(n, r))
            .find_first(|a| hit(a));
        let examined = match &found {
            Some(a) => rank_of(a.sequence()) + 1,
            None => limit,
        };
        return ArrangementSearch {
            exhaustive: found.is_none() && limit == total,
            found,
            examined,
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let candidates: Vec<OrderArrangement> = (0..config.budget)
        .map(|i| {
            if i == 0 {
                OrderArrangement::canonical(n)
            } else {
                OrderArrangement::random(n, &mut rng)
            }
        })
        .collect();
    let found = candidates.par_iter().position_first(hit);
    ArrangementSearch {
        examined: found.map_or(config.budget, |i| i as u64 + 1),
        found: found.map(|i| candidates[i].clone()),
        exhaustive: false,
    }
}

/// Lexicographic rank of a permutation of `0..len`.
fn rank_of(seq: &[usize]) -> u64 {
    let n = seq.len();
    let mut rank = 0u64;
    for i in 0..n {
        let smaller = seq[i + 1..].iter().filter(|&&y| y < seq[i]).count() as u64;
        rank += smaller * factorial(n - 1 - i).expect("small factorial");
    }
    rank
}
