use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::arrangement::OrderArrangement;
use super::conflict::ConflictGraph;
use super::hpca::{greedy_pass, hpca_trace, is_hpca_coherent, MarkingRule};
use super::trace::{Algorithm, Category, CountingTrace, Pass, StopReason};
use crate::error::{Error, Result};

/// How FHCA chooses the next permutation `σ_i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PermutationStrategy {
    /// Rotate the input so its least-index uncovered element comes first.
    #[default]
    Rotation,
    /// Seeded uniformly random permutations.
    Random { seed: u64 },
}

impl fmt::Display for PermutationStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermutationStrategy::Rotation => f.write_str("rotation"),
            PermutationStrategy::Random { .. } => f.write_str("random"),
        }
    }
}

impl FromStr for PermutationStrategy {
    type Err = Error;

    /// `rotation` or `random` (seed 0x5EED; set it on the value afterwards).
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rotation" => Ok(PermutationStrategy::Rotation),
            "random" => Ok(PermutationStrategy::Random { seed: 0x5EED }),
            _ => Err(Error::Invalid(format!("unknown permutation strategy {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FhcaOutcome {
    pub trace: CountingTrace,
    /// `A_1, A_2, …` in the order found.
    pub antichains: Vec<Vec<usize>>,
    pub complete: bool,
    /// The input order was coherent and the HPCA run was returned as is.
    pub delegated: bool,
}

/// Full history based counting on antichains.
///
/// A coherent `seq` yields exactly the HPCA run. Otherwise the first HPCA
/// category of successive permutations is stored as `A_1, A_2, …` until the
/// `A_i` cover the collection or `budget` permutations have been used.
pub fn fhca_count(
    seq: &OrderArrangement,
    conflict: &ConflictGraph,
    strategy: PermutationStrategy,
    budget: usize,
    marking: MarkingRule,
) -> Result<FhcaOutcome> {
    if budget == 0 {
        return Err(Error::Invalid("FHCA needs a budget of at least one permutation".into()));
    }
    assert_eq!(seq.len(), conflict.len(), "arrangement and collection differ in size");
    if is_hpca_coherent(seq, conflict, marking) {
        let mut trace = hpca_trace(seq, conflict, marking);
        trace.algorithm = Algorithm::Fhca;
        return Ok(FhcaOutcome {
            antichains: trace.categories.iter().map(|c| c.members.clone()).collect(),
            trace,
            complete: true,
            delegated: true,
        });
    }
    fhca_permuting(seq, conflict, strategy, budget, marking)
}

/// The permuting branch of FHCA, run regardless of coherence.
pub fn fhca_permuting(
    seq: &OrderArrangement,
    conflict: &ConflictGraph,
    strategy: PermutationStrategy,
    budget: usize,
    marking: MarkingRule,
) -> Result<FhcaOutcome> {
    if budget == 0 {
        return Err(Error::Invalid("FHCA needs a budget of at least one permutation".into()));
    }
    assert_eq!(seq.len(), conflict.len(), "arrangement and collection differ in size");
    let n = seq.len();
    let mut rng = match strategy {
        PermutationStrategy::Random { seed } => Some(ChaCha8Rng::seed_from_u64(seed)),
        PermutationStrategy::Rotation => None,
    };
    let mut covered = vec![false; n];
    let mut categories: Vec<Category> = Vec::new();
    let mut passes = Vec::new();
    let mut order = seq.clone();
    let mut used = 0usize;
    let stop = loop {
        let index = categories.len() + 1;
        let out = greedy_pass(&order, &order, conflict, index, marking);
        let duplicate = categories
            .iter()
            .any(|c| c.members.len() == out.accepted.len() && c.is_within(&out.accepted));
        if !duplicate {
            for &x in &out.accepted {
                covered[x] = true;
            }
            categories.push(Category {
                index,
                members: out.accepted,
            });
        }
        passes.push(Pass {
            order: order.clone(),
            steps: out.steps,
            category: (!duplicate).then_some(index),
            discarded: duplicate,
        });
        if covered.iter().all(|&c| c) {
            break StopReason::Covered;
        }
        if used == budget {
            break StopReason::BudgetExhausted;
        }
        used += 1;
        order = match rng.as_mut() {
            None => {
                let j = seq
                    .sequence()
                    .iter()
                    .position(|&x| !covered[x])
                    .expect("an uncovered element exists")
                    + 1;
                seq.rotation(j)
            }
            Some(rng) => OrderArrangement::random(n, rng),
        };
    };
    Ok(FhcaOutcome {
        antichains: categories.iter().map(|c| c.members.clone()).collect(),
        complete: stop == StopReason::Covered,
        trace: CountingTrace {
            algorithm: Algorithm::Fhca,
            order: seq.clone(),
            passes,
            categories,
            stop,
        },
        delegated: false,
    })
}
