//! Finite universes, information tables, partitions, granulations and the
//! classical lower/upper approximation operators.

mod context_file;
mod granulation;
mod table;
mod universe;

pub use context_file::{ContextFile, NamedRegion};
pub use granulation::{
    indiscernibility_partition, lower_approx, rough_equality, rough_inclusion, upper_approx, Approximation,
    ApproximationContext, Granulation, IndiscernibilityRelation, Signature,
};
pub use table::{parse_information_table, InformationTable, TableFormat};
pub use universe::{all_regions, canonical_regions, Region, Universe};
