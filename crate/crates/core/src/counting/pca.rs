use super::arrangement::OrderArrangement;
use super::conflict::ConflictGraph;
use super::label::CountLabel;
use super::trace::{Algorithm, Category, CountingTrace, Pass, Step, StopReason};

/// Primitive counting on antichains: first-fit into the least conflict-free
/// category, opening the next category when none fits.
pub fn pca_count(seq: &OrderArrangement, conflict: &ConflictGraph) -> CountingTrace {
    assert_eq!(seq.len(), conflict.len(), "arrangement and collection differ in size");
    let mut categories: Vec<Category> = Vec::new();
    let mut steps = Vec::with_capacity(seq.len());
    for &x in seq.sequence() {
        let j = match categories.iter().position(|c| conflict.compatible_with(x, &c.members)) {
            Some(j) => j,
            None => {
                categories.push(Category {
                    index: categories.len() + 1,
                    members: Vec::new(),
                });
                categories.len() - 1
            }
        };
        categories[j].members.push(x);
        steps.push(Step {
            element: x,
            label: Some(CountLabel::Count {
                k: categories[j].members.len(),
                category: j + 1,
            }),
        });
    }
    CountingTrace {
        algorithm: Algorithm::Pca,
        order: seq.clone(),
        passes: vec![Pass {
            order: seq.clone(),
            steps,
            category: None,
            discarded: false,
        }],
        categories,
        stop: StopReason::Scanned,
    }
}
