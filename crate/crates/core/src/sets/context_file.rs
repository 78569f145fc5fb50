//! JSON context files: `{"universe": [...], "granules": [[...], ...]}`.
//!
//! Optional keys extend the same file:
//! - `"lower"` / `"upper"`: explicit operator entries `[[argument], [image]]`
//!   (consumed by [`crate::gos::GranularOperatorSpace::from_context_file`]);
//! - `"objects"`: named regions `{"name": ..., "members": [...]}` to count.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sets::{ApproximationContext, Granulation, Region, Universe};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContextFile {
    pub universe: Vec<String>,
    pub granules: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lower: Vec<(Vec<String>, Vec<String>)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub upper: Vec<(Vec<String>, Vec<String>)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub objects: Vec<NamedRegion>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedRegion {
    pub name: String,
    pub members: Vec<String>,
}

impl ContextFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            row: e.line(),
            column: None,
            message: e.to_string(),
        })
    }

    pub fn context(&self) -> Result<ApproximationContext> {
        let universe = Universe::new(self.universe.iter().cloned())?;
        let granules = self
            .granules
            .iter()
            .map(|g| universe.region(g))
            .collect::<Result<Vec<_>>>()?;
        let granulation = Granulation::new(&universe, granules)?;
        ApproximationContext::new(universe, granulation)
    }

    /// The `objects` list resolved against the universe.
    pub fn named_regions(&self, universe: &Universe) -> Result<Vec<(String, Region)>> {
        self.objects
            .iter()
            .map(|o| Ok((o.name.clone(), universe.region(&o.members)?)))
            .collect()
    }
}
