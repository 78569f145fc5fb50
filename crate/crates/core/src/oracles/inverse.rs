use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::sets::{IndiscernibilityRelation, Region, Universe};

/// Largest universe searched by [`inverse_rough_check`]; Bell(10) = 115975.
pub const INVERSE_CAP: usize = 10;

/// All set partitions of `0..n` as restricted growth strings, in
/// lexicographic order: `s[0] = 0` and `s[i] ≤ 1 + max(s[..i])`.
pub fn restricted_growth_strings(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut s = vec![0u8; n];
    let mut max = vec![0u8; n];
    loop {
        out.push(s.clone());
        // Rightmost position that can still grow.
        let Some(i) = (1..n).rev().find(|&i| s[i] <= max[i - 1]) else {
            return out;
        };
        s[i] += 1;
        max[i] = max[i - 1].max(s[i]);
        for k in i + 1..n {
            s[k] = 0;
            max[k] = max[i];
        }
    }
}

/// A partition realising every pair, with one region per pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionWitness {
    pub partition: IndiscernibilityRelation,
    /// `realizations[i]` has lower approximation `pairs[i].0` and upper `pairs[i].1`.
    pub realizations: Vec<Region>,
}

impl PartitionWitness {
    pub fn to_json(&self, universe: &Universe) -> Value {
        json!({
            "partition": self.partition.blocks().iter().map(|b| universe.names_of(b)).collect::<Vec<_>>(),
            "realizations": self.realizations.iter().enumerate().map(|(i, r)| json!({
                "pair": i,
                "region": universe.names_of(r),
            })).collect::<Vec<_>>(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InverseOutcome {
    Realizable(PartitionWitness),
    /// A necessary condition fails for pair `pair`.
    Filtered {
        pair: usize,
        reason: String,
    },
    /// All `examined` partitions were tried and none realises every pair.
    NoPartition {
        examined: usize,
    },
}

impl InverseOutcome {
    pub fn witness(&self) -> Option<&PartitionWitness> {
        match self {
            InverseOutcome::Realizable(w) => Some(w),
            _ => None,
        }
    }

    pub fn to_json(&self, universe: &Universe) -> Value {
        match self {
            InverseOutcome::Realizable(w) => json!({"realizable": true, "witness": w.to_json(universe)}),
            InverseOutcome::Filtered { pair, reason } => {
                json!({"realizable": false, "rejected_by": "filter", "pair": pair, "reason": reason})
            }
            InverseOutcome::NoPartition { examined } => {
                json!({"realizable": false, "rejected_by": "search", "partitions_examined": examined})
            }
        }
    }
}

/// JSON form: `{"universe": [...], "pairs": [[lower, upper], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairsFile {
    pub universe: Vec<String>,
    pub pairs: Vec<(Vec<String>, Vec<String>)>,
}

impl PairsFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            row: e.line(),
            column: None,
            message: e.to_string(),
        })
    }

    pub fn resolve(&self) -> Result<(Universe, Vec<(Region, Region)>)> {
        let u = Universe::new(self.universe.iter().cloned())?;
        let pairs = self
            .pairs
            .iter()
            .map(|(a, b)| Ok((u.region(a.iter())?, u.region(b.iter())?)))
            .collect::<Result<Vec<_>>>()?;
        Ok((u, pairs))
    }
}

/// Decides whether some partition of the universe gives each `(a, b)` a region
/// with lower approximation `a` and upper approximation `b`.
///
/// Cheap necessary conditions are tried first; then every partition is
/// searched and the first in restricted-growth order is returned.
pub fn inverse_rough_check(pairs: &[(Region, Region)], n: usize) -> Result<InverseOutcome> {
    if n > INVERSE_CAP {
        return Err(Error::TooLarge {
            what: "universe for the inverse search",
            size: n,
            cap: INVERSE_CAP,
        });
    }
    if let Some((i, _)) = pairs
        .iter()
        .enumerate()
        .find(|(_, (a, b))| a.universe_size() != n || b.universe_size() != n)
    {
        return Err(Error::UniverseMismatch(
            pairs[i].0.universe_size().max(pairs[i].1.universe_size()),
            n,
        ));
    }
    if let Some(f) = filter(pairs) {
        return Ok(f);
    }
    let all = restricted_growth_strings(n);
    let found = all.par_iter().find_map_first(|s| realize(pairs, s, n));
    Ok(match found {
        Some(w) => InverseOutcome::Realizable(w),
        None => InverseOutcome::NoPartition { examined: all.len() },
    })
}

fn filter(pairs: &[(Region, Region)]) -> Option<InverseOutcome> {
    for (i, (a, b)) in pairs.iter().enumerate() {
        if !a.is_subset(b) {
            return Some(InverseOutcome::Filtered {
                pair: i,
                reason: "lower is not inside upper".into(),
            });
        }
    }
    // A boundary block has at least two elements, so no boundary is a singleton.
    if let Some(i) = pairs.iter().position(|(a, b)| b.difference(a).len() == 1) {
        return Some(InverseOutcome::Filtered {
            pair: i,
            reason: "boundary has exactly one element".into(),
        });
    }
    None
}

fn realize(pairs: &[(Region, Region)], s: &[u8], n: usize) -> Option<PartitionWitness> {
    let k = s.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut blocks = vec![Region::empty(n); k];
    for (x, &b) in s.iter().enumerate() {
        blocks[b as usize].insert(x);
    }
    let mut realizations = Vec::with_capacity(pairs.len());
    for (a, b) in pairs {
        let mut region = a.clone();
        for block in &blocks {
            if block.is_subset(a) {
                continue;
            }
            if block.intersects(a) {
                return None;
            }
            if block.is_subset(b) {
                if block.len() < 2 {
                    return None;
                }
                region.insert(block.iter().next().expect("nonempty block"));
            } else if block.intersects(b) {
                return None;
            }
        }
        realizations.push(region);
    }
    let labels: Vec<usize> = s.iter().map(|&b| b as usize).collect();
    Some(PartitionWitness {
        partition: IndiscernibilityRelation::from_labels(&labels),
        realizations,
    })
}
