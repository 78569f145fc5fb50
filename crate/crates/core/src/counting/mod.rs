//! The four counting procedures and their verification.

mod arrangement;
mod coherence;
mod conflict;
mod fhca;
mod hpc;
mod hpca;
mod label;
mod pca;
mod trace;
mod verify;

pub use arrangement::{OrderArrangement, Origin};
pub use coherence::{
    find_coherent_order, find_incoherent_order, ArrangementSearch, SearchConfig, EXHAUSTIVE_ARRANGEMENTS,
};
pub use conflict::ConflictGraph;
pub use fhca::{fhca_count, fhca_permuting, FhcaOutcome, PermutationStrategy};
pub use hpc::hpc_count;
pub use hpca::{hpca_count, is_hpca_coherent, MarkingRule};
pub use label::CountLabel;
pub use pca::pca_count;
pub use trace::{Algorithm, Category, CountingTrace, Pass, Step, StopReason};
pub use verify::{verify_decomposition, AntichainDecomposition, CategoryVerdict};
