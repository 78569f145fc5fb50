use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde_json::{json, Value};

use super::arrangement::OrderArrangement;
use super::label::CountLabel;
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Hpc,
    Pca,
    Hpca,
    Fhca,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [Algorithm::Hpc, Algorithm::Pca, Algorithm::Hpca, Algorithm::Fhca];

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Hpc => "hpc",
            Algorithm::Pca => "pca",
            Algorithm::Hpca => "hpca",
            Algorithm::Fhca => "fhca",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Invalid(format!("unknown algorithm {s:?}")))
    }
}

/// Why a run ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StopReason {
    /// Single-pass procedures end once the sequence is scanned.
    Scanned,
    Covered,
    StartPointsExhausted,
    BudgetExhausted,
}

impl StopReason {
    pub fn as_str(self) -> &'static str {
        match self {
            StopReason::Scanned => "scanned",
            StopReason::Covered => "covered",
            StopReason::StartPointsExhausted => "start-points-exhausted",
            StopReason::BudgetExhausted => "budget-exhausted",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub element: usize,
    /// `None` for an element passed over without a label.
    pub label: Option<CountLabel>,
}

/// One scan of a (possibly rotated or permuted) sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pass {
    pub order: OrderArrangement,
    pub steps: Vec<Step>,
    /// Index `j` of the category this pass produced, if it was kept.
    pub category: Option<usize>,
    /// The pass built a set already contained in an earlier category.
    pub discarded: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Category {
    /// 1-based category index `j`.
    pub index: usize,
    /// Members in counting order; `members[k-1]` carries `k_j`.
    pub members: Vec<usize>,
}

impl Category {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(&x)
    }

    /// Whether every member of `self` is in `other`.
    pub fn is_within(&self, other: &[usize]) -> bool {
        self.members.iter().all(|x| other.contains(x))
    }
}

/// The labelled record of a counting run over elements `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountingTrace {
    pub algorithm: Algorithm,
    /// The input arrangement.
    pub order: OrderArrangement,
    pub passes: Vec<Pass>,
    pub categories: Vec<Category>,
    pub stop: StopReason,
}

impl CountingTrace {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Every label `x` received, pass by pass.
    pub fn labels_of(&self, x: usize) -> Vec<CountLabel> {
        self.passes
            .iter()
            .flat_map(|p| p.steps.iter())
            .filter(|s| s.element == x)
            .filter_map(|s| s.label)
            .collect()
    }

    /// Elements lying in some category.
    pub fn covered(&self) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        for c in &self.categories {
            for &x in &c.members {
                seen[x] = true;
            }
        }
        seen
    }

    pub fn is_covering(&self) -> bool {
        self.covered().into_iter().all(|b| b)
    }

    /// Label strings of the first pass, in scan order.
    pub fn label_strings(&self, pass: usize) -> Vec<String> {
        self.passes[pass]
            .steps
            .iter()
            .map(|s| s.label.map_or_else(|| "-".to_string(), |l| l.to_string()))
            .collect()
    }

    pub fn to_json(&self, names: &[String]) -> Value {
        let name = |x: &usize| names[*x].clone();
        json!({
            "algorithm": self.algorithm.as_str(),
            "order": self.order.sequence().iter().map(name).collect::<Vec<_>>(),
            "passes": self.passes.iter().map(|p| json!({
                "origin": p.order.origin().to_string(),
                "order": p.order.sequence().iter().map(name).collect::<Vec<_>>(),
                "labels": p.steps.iter().map(|s| json!([names[s.element], s.label.map(|l| l.to_string())])).collect::<Vec<_>>(),
                "category": p.category,
                "discarded": p.discarded,
            })).collect::<Vec<_>>(),
            "categories": self.categories.iter().map(|c| c.members.iter().map(name).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "stop": self.stop.as_str(),
        })
    }

    /// Plain-text rendering in the `1_1, T_2, s^2(1_1)` notation.
    pub fn render_text(&self, names: &[String]) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "algorithm: {}", self.algorithm);
        for (i, p) in self.passes.iter().enumerate() {
            let labels: Vec<String> = p
                .steps
                .iter()
                .map(|s| match s.label {
                    Some(l) => format!("{}={l}", names[s.element]),
                    None => format!("{}=-", names[s.element]),
                })
                .collect();
            let _ = write!(out, "pass {} ({}): {}", i + 1, p.order.origin(), labels.join(" "));
            match (p.category, p.discarded) {
                (Some(j), _) => {
                    let c = &self.categories[j - 1];
                    let _ = write!(out, "  => C_{j} = {}", brace(names, &c.members));
                }
                (None, true) => out.push_str("  => discarded (contained in an earlier category)"),
                (None, false) => {}
            }
            out.push('\n');
        }
        if self.algorithm == Algorithm::Hpc {
            for c in &self.categories {
                let _ = writeln!(out, "type {}: {}", c.index, brace(names, &c.members));
            }
        }
        let _ = writeln!(out, "stop: {}", self.stop.as_str());
        out
    }
}

pub(crate) fn brace(names: &[String], members: &[usize]) -> String {
    let inner: Vec<&str> = members.iter().map(|&x| names[x].as_str()).collect();
    format!("{{{}}}", inner.join(", "))
}
