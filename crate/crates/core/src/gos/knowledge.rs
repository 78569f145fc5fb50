use serde_json::{json, Value};

use crate::gos::GranularOperatorSpace;
use crate::sets::{Approximation, Region, Universe};

/// One stability equation `left = right` with both sides evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityCheck {
    pub equation: &'static str,
    pub holds: bool,
    pub left: Region,
    pub right: Region,
}

/// Whether a region's approximations can stand for definite knowledge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnowledgeReport {
    pub region: Region,
    pub checks: [StabilityCheck; 3],
}

impl KnowledgeReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn to_json(&self, universe: &Universe) -> Value {
        let checks: serde_json::Map<String, Value> = self
            .checks
            .iter()
            .map(|c| {
                (
                    c.equation.to_string(),
                    json!({"holds": c.holds, "left": universe.names_of(&c.left), "right": universe.names_of(&c.right)}),
                )
            })
            .collect();
        json!({"region": universe.names_of(&self.region), "checks": checks})
    }
}

/// Evaluates `A^ll = A^l`, `A^lu = A^l` and `A^uu = A^u`.
pub fn knowledge_validity_check(a: &Region, gos: &GranularOperatorSpace) -> KnowledgeReport {
    let l = gos.lower(a);
    let u = gos.upper(a);
    let ll = gos.lower(&l);
    let lu = gos.upper(&l);
    let uu = gos.upper(&u);
    let check = |equation, left: Region, right: &Region| StabilityCheck {
        equation,
        holds: &left == right,
        left,
        right: right.clone(),
    };
    KnowledgeReport {
        region: a.clone(),
        checks: [
            check("A^ll = A^l", ll, &l),
            check("A^lu = A^l", lu, &l),
            check("A^uu = A^u", uu, &u),
        ],
    }
}
