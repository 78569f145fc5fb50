use serde_json::{json, Value};

use super::conflict::ConflictGraph;
use super::label::CountLabel;
use super::trace::{brace, Algorithm, CountingTrace};

/// Checks made on one category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategoryVerdict {
    pub index: usize,
    pub members: Vec<usize>,
    /// A conflicting pair inside the category, if any.
    pub conflict: Option<(usize, usize)>,
    /// An outside element conflicting with no member, if any.
    pub extender: Option<usize>,
    /// Labels of the category are exactly `1_j … (Q_j)_j`.
    pub gapless: bool,
}

impl CategoryVerdict {
    pub fn conflict_free(&self) -> bool {
        self.conflict.is_none()
    }

    /// Conflict-free with no extender.
    pub fn maximal(&self) -> bool {
        self.conflict.is_none() && self.extender.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntichainDecomposition {
    pub categories: Vec<CategoryVerdict>,
    pub coverage: bool,
    pub uncovered: Vec<usize>,
    /// `∑ Q_i`.
    pub total: usize,
    pub n: usize,
    /// Each element lies in exactly one category (checked for PCA runs).
    pub partition: Option<bool>,
    /// Coverage by maximal antichains (reported for HPCA and FHCA runs).
    pub coherent: Option<bool>,
}

impl AntichainDecomposition {
    pub fn all_maximal(&self) -> bool {
        self.categories.iter().all(CategoryVerdict::maximal)
    }

    pub fn to_json(&self, names: &[String]) -> Value {
        json!({
            "categories": self.categories.iter().map(|c| json!({
                "index": c.index,
                "members": c.members.iter().map(|&x| names[x].clone()).collect::<Vec<_>>(),
                "conflict_free": c.conflict_free(),
                "conflict": c.conflict.map(|(a, b)| [names[a].clone(), names[b].clone()]),
                "maximal": c.maximal(),
                "extender": c.extender.map(|x| names[x].clone()),
                "gapless": c.gapless,
            })).collect::<Vec<_>>(),
            "coverage": self.coverage,
            "uncovered": self.uncovered.iter().map(|&x| names[x].clone()).collect::<Vec<_>>(),
            "sum_q": self.total,
            "n": self.n,
            "partition": self.partition,
            "coherent": self.coherent,
        })
    }

    pub fn render_text(&self, names: &[String]) -> String {
        let mut lines = Vec::new();
        for c in &self.categories {
            let mut line = format!("C_{} = {}:", c.index, brace(names, &c.members));
            match c.conflict {
                Some((a, b)) => line.push_str(&format!(" not an antichain ({} vs {})", names[a], names[b])),
                None => match c.extender {
                    Some(x) => line.push_str(&format!(" not maximal (can add {})", names[x])),
                    None => line.push_str(" maximal"),
                },
            }
            lines.push(line);
        }
        lines.push(format!("coverage: {}", yes(self.coverage)));
        lines.push(format!("sum Q_i = {} (n = {})", self.total, self.n));
        if let Some(p) = self.partition {
            lines.push(format!("partition: {}", yes(p)));
        }
        if let Some(c) = self.coherent {
            lines.push(format!("coherent: {}", yes(c)));
        }
        lines.join("\n") + "\n"
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Verifies every category of an antichain-counting trace against `conflict`.
pub fn verify_decomposition(trace: &CountingTrace, conflict: &ConflictGraph) -> AntichainDecomposition {
    let n = conflict.len();
    let mut hits = vec![0usize; n];
    let categories: Vec<CategoryVerdict> = trace
        .categories
        .iter()
        .map(|c| {
            for &x in &c.members {
                hits[x] += 1;
            }
            let conflict_pair = c
                .members
                .iter()
                .enumerate()
                .flat_map(|(i, &a)| c.members[i + 1..].iter().map(move |&b| (a, b)))
                .find(|&(a, b)| conflict.conflicts(a, b));
            let extender = (0..n).find(|&x| !c.contains(x) && conflict.compatible_with(x, &c.members));
            CategoryVerdict {
                index: c.index,
                members: c.members.clone(),
                conflict: conflict_pair,
                extender,
                gapless: gapless(trace, c.index, c.members.len()),
            }
        })
        .collect();
    let uncovered: Vec<usize> = (0..n).filter(|&x| hits[x] == 0).collect();
    let coverage = uncovered.is_empty();
    let antichain_run = matches!(trace.algorithm, Algorithm::Hpca | Algorithm::Fhca);
    let coherent = antichain_run.then(|| coverage && categories.iter().all(CategoryVerdict::maximal));
    AntichainDecomposition {
        total: categories.iter().map(|c| c.members.len()).sum(),
        n,
        partition: (trace.algorithm == Algorithm::Pca).then(|| hits.iter().all(|&h| h == 1)),
        coherent,
        categories,
        coverage,
        uncovered,
    }
}

fn gapless(trace: &CountingTrace, category: usize, q: usize) -> bool {
    let mut ks: Vec<usize> = trace
        .passes
        .iter()
        .filter(|p| trace.algorithm == Algorithm::Pca || p.category == Some(category))
        .flat_map(|p| p.steps.iter())
        .filter_map(|s| match s.label {
            Some(CountLabel::Count { k, category: j }) if j == category => Some(k),
            _ => None,
        })
        .collect();
    ks.sort_unstable();
    ks == (1..=q).collect::<Vec<_>>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{pca_count, OrderArrangement};
    use crate::fixtures;
    use crate::parthood::ConflictMode;

    #[test]
    fn fixture_p_pca() {
        let g = ConflictGraph::from_poset(&fixtures::fixture_p(), ConflictMode::Comparability);
        let t = pca_count(&OrderArrangement::canonical(4), &g);
        let d = verify_decomposition(&t, &g);
        assert!(d.categories[0].maximal());
        assert!(d.categories[1].conflict_free());
        assert_eq!(d.categories[1].extender, Some(3));
        assert_eq!((d.total, d.n), (4, 4));
        assert_eq!(d.partition, Some(true));
        assert!(d.coverage);
        assert!(d.categories.iter().all(|c| c.gapless));
        assert_eq!(d.coherent, None);
    }
}
