//! Brute-force verifiers used to cross-check the counting and approximation code.

mod antichains;
mod inverse;
mod signatures;

pub use antichains::{
    enumerate_maximal_antichains, maximal_independent_sets, minimum_antichain_cover, poset_antichain_cover,
    MirskyCover, ANTICHAIN_CAP,
};
pub use inverse::{
    inverse_rough_check, restricted_growth_strings, InverseOutcome, PairsFile, PartitionWitness, INVERSE_CAP,
};
pub use signatures::{brute_force_signatures, SIGNATURE_CAP};
