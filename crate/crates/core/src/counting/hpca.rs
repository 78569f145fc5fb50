use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::arrangement::OrderArrangement;
use super::conflict::ConflictGraph;
use super::label::CountLabel;
use super::trace::{Algorithm, Category, CountingTrace, Pass, Step, StopReason};
use super::verify::{verify_decomposition, AntichainDecomposition};
use crate::error::Error;

/// Which rejected elements receive a deferred marker `T_j`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MarkingRule {
    /// Every element rejected from the category under construction.
    #[default]
    EveryReject,
    /// Only a reject whose predecessor in the scan was counted into the
    /// category; a reject following a reject is passed over unlabelled.
    AfterCounted,
}

impl MarkingRule {
    pub const ALL: [MarkingRule; 2] = [MarkingRule::EveryReject, MarkingRule::AfterCounted];

    pub fn as_str(self) -> &'static str {
        match self {
            MarkingRule::EveryReject => "every-reject",
            MarkingRule::AfterCounted => "after-counted",
        }
    }
}

impl fmt::Display for MarkingRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MarkingRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        MarkingRule::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown marking rule {s:?}")))
    }
}

pub(crate) struct PassOutcome {
    pub steps: Vec<Step>,
    pub accepted: Vec<usize>,
    /// 1-based positions, in the base arrangement, of newly marked rejects.
    pub marked: Vec<usize>,
}

/// Builds one greedy category over `order`, labelling members `k_category`
/// and marking rejects with their position in `base`.
pub(crate) fn greedy_pass(
    order: &OrderArrangement,
    base: &OrderArrangement,
    conflict: &ConflictGraph,
    category: usize,
    marking: MarkingRule,
) -> PassOutcome {
    let mut steps = Vec::with_capacity(order.len());
    let mut accepted: Vec<usize> = Vec::new();
    let mut marked = Vec::new();
    let mut prev_counted = true;
    for &x in order.sequence() {
        if conflict.compatible_with(x, &accepted) {
            accepted.push(x);
            steps.push(Step {
                element: x,
                label: Some(CountLabel::Count {
                    k: accepted.len(),
                    category,
                }),
            });
            prev_counted = true;
        } else {
            let label = if marking == MarkingRule::EveryReject || prev_counted {
                let position = base.position_of(x);
                marked.push(position);
                Some(CountLabel::Deferred { position })
            } else {
                None
            };
            steps.push(Step { element: x, label });
            prev_counted = false;
        }
    }
    PassOutcome {
        steps,
        accepted,
        marked,
    }
}

/// History aware primitive counting on antichains.
///
/// Pass 1 scans `seq`; each later pass starts at the least unconsumed marker
/// `T_j` and scans the rotation `S^(j)`. A pass whose set lies inside an
/// earlier category is discarded. The run stops once the categories cover the
/// collection, or when no start point remains.
pub fn hpca_count(
    seq: &OrderArrangement,
    conflict: &ConflictGraph,
    marking: MarkingRule,
) -> (CountingTrace, AntichainDecomposition) {
    let trace = hpca_trace(seq, conflict, marking);
    let decomposition = verify_decomposition(&trace, conflict);
    (trace, decomposition)
}

pub(crate) fn hpca_trace(seq: &OrderArrangement, conflict: &ConflictGraph, marking: MarkingRule) -> CountingTrace {
    assert_eq!(seq.len(), conflict.len(), "arrangement and collection differ in size");
    let n = seq.len();
    let mut passes = Vec::new();
    let mut categories: Vec<Category> = Vec::new();
    let mut pending: BTreeSet<usize> = BTreeSet::new();
    let mut consumed: BTreeSet<usize> = BTreeSet::new();
    let mut covered = vec![false; n];
    let mut start = 1usize;
    let stop = loop {
        consumed.insert(start);
        let order = seq.rotation(start);
        let index = categories.len() + 1;
        let out = greedy_pass(&order, seq, conflict, index, marking);
        pending.extend(out.marked.iter().filter(|p| !consumed.contains(p)));
        let discarded = categories.iter().any(|c| out.accepted.iter().all(|x| c.contains(*x)));
        if !discarded {
            for &x in &out.accepted {
                covered[x] = true;
            }
            categories.push(Category {
                index,
                members: out.accepted,
            });
        }
        passes.push(Pass {
            order,
            steps: out.steps,
            category: (!discarded).then_some(index),
            discarded,
        });
        if covered.iter().all(|&c| c) {
            break StopReason::Covered;
        }
        match pending.pop_first() {
            Some(j) => start = j,
            None => break StopReason::StartPointsExhausted,
        }
    };
    CountingTrace {
        algorithm: Algorithm::Hpca,
        order: seq.clone(),
        passes,
        categories,
        stop,
    }
}

/// Whether HPCA over `seq` yields maximal antichains covering the collection.
pub fn is_hpca_coherent(seq: &OrderArrangement, conflict: &ConflictGraph, marking: MarkingRule) -> bool {
    let trace = hpca_trace(seq, conflict, marking);
    trace.is_covering()
        && trace
            .categories
            .iter()
            .all(|c| (0..conflict.len()).all(|x| c.contains(x) || !conflict.compatible_with(x, &c.members)))
}
