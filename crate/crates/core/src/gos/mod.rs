//! General granular operator spaces: axiom audits, rough objects, the basic
//! rough order, interval representation and knowledge-validity checks.

mod axioms;
mod knowledge;
mod quotient;
mod space;

pub use axioms::{
    audit_full_underlap, audit_lower_stability, audit_lower_within_upper, audit_wra, is_underlap_witness, AxiomConfig,
    AxiomReport, AxiomScope, AxiomWitness, UnderlapResult,
};
pub use knowledge::{knowledge_validity_check, KnowledgeReport, StabilityCheck};
pub use quotient::{
    basic_rough_order, interval_representation, rough_objects, IntervalImage, RoughClass, RoughObjectNotion,
    RoughQuotient, RoughRepresentation, QUOTIENT_CAP,
};
pub use space::{GranularOperatorSpace, Operators};
