//! Approximation-based parthood predicates and an empirical auditor for
//! their order-theoretic laws.

mod audit;
mod variant;

pub use audit::{
    audit_generalized_transitivity, audit_properties, witness_is_violation, AuditBudget, Property, PropertyFinding,
    PropertyReport, Scope, Verdict, Witness,
};
pub use variant::{conflict, granule_containment, proper_part, ConflictMode, Parthood, ParthoodVariant};
