use super::arrangement::OrderArrangement;
use super::label::CountLabel;
use super::trace::{Algorithm, Category, CountingTrace, Pass, Step, StopReason};
use crate::error::{Error, Result};
use crate::relation::Relation;

/// History based primitive counting under a symmetric indiscernibility `r`.
///
/// An element indiscernible from its predecessor, or from any earlier element,
/// opens a new type `1_{j+1}`; otherwise it is the next successor `s^{r+1}(1_j)`.
pub fn hpc_count(seq: &OrderArrangement, r: &Relation) -> Result<CountingTrace> {
    if seq.len() != r.size() {
        return Err(Error::Invalid("relation size does not match the arrangement".into()));
    }
    if let Some((i, j)) = r.first_asymmetric_pair() {
        return Err(Error::NotSymmetric(i, j));
    }
    let s = seq.sequence();
    let mut steps = Vec::with_capacity(s.len());
    let mut categories: Vec<Category> = Vec::new();
    let (mut kind, mut succ) = (0usize, 0usize);
    for (i, &x) in s.iter().enumerate() {
        if i == 0 || s[..i].iter().any(|&y| r.holds(y, x)) {
            kind += 1;
            succ = 0;
            categories.push(Category {
                index: kind,
                members: Vec::new(),
            });
        } else {
            succ += 1;
        }
        categories[kind - 1].members.push(x);
        steps.push(Step {
            element: x,
            label: Some(CountLabel::Successor { r: succ, kind }),
        });
    }
    Ok(CountingTrace {
        algorithm: Algorithm::Hpc,
        order: seq.clone(),
        passes: vec![Pass {
            order: seq.clone(),
            steps,
            category: None,
            discarded: false,
        }],
        categories,
        stop: StopReason::Scanned,
    })
}
