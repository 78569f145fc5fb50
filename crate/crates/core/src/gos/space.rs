use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::parthood::ParthoodVariant;
use crate::sets::{Approximation, ApproximationContext, ContextFile, Granulation, Region, Universe};

/// Where the lower and upper operators come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Operators {
    /// Granule-union formulas of the granulation.
    Granular,
    /// Explicit operator tables. Regions without an entry fall back to the
    /// granule-union formula, so both operators stay total.
    Explicit {
        lower: HashMap<Region, Region>,
        upper: HashMap<Region, Region>,
    },
}

/// A general granular operator space: universe, granulation, lower and upper
/// operators, and the parthood predicate that orders regions.
#[derive(Clone, Debug)]
pub struct GranularOperatorSpace {
    context: ApproximationContext,
    operators: Operators,
    parthood: ParthoodVariant,
}

impl GranularOperatorSpace {
    pub fn granular(context: ApproximationContext, parthood: ParthoodVariant) -> Self {
        GranularOperatorSpace {
            context,
            operators: Operators::Granular,
            parthood,
        }
    }

    pub fn explicit(
        context: ApproximationContext,
        lower: HashMap<Region, Region>,
        upper: HashMap<Region, Region>,
        parthood: ParthoodVariant,
    ) -> Result<Self> {
        let n = context.universe().size();
        for (k, v) in lower.iter().chain(upper.iter()) {
            if k.universe_size() != n || v.universe_size() != n {
                return Err(Error::UniverseMismatch(k.universe_size().max(v.universe_size()), n));
            }
        }
        Ok(GranularOperatorSpace {
            context,
            operators: Operators::Explicit { lower, upper },
            parthood,
        })
    }

    /// Builds a space from a context file; `lower`/`upper` entries switch it to explicit mode.
    pub fn from_context_file(file: &ContextFile, parthood: ParthoodVariant) -> Result<Self> {
        let context = file.context()?;
        if file.lower.is_empty() && file.upper.is_empty() {
            return Ok(Self::granular(context, parthood));
        }
        let table = |entries: &[(Vec<String>, Vec<String>)]| -> Result<HashMap<Region, Region>> {
            let u = context.universe();
            let mut map = HashMap::new();
            for (arg, image) in entries {
                let key = u.region(arg)?;
                if map.insert(key, u.region(image)?).is_some() {
                    return Err(Error::Invalid(format!("duplicate operator entry for {arg:?}")));
                }
            }
            Ok(map)
        };
        let lower = table(&file.lower)?;
        let upper = table(&file.upper)?;
        Self::explicit(context, lower, upper, parthood)
    }

    pub fn context(&self) -> &ApproximationContext {
        &self.context
    }

    pub fn operators(&self) -> &Operators {
        &self.operators
    }

    pub fn parthood(&self) -> ParthoodVariant {
        self.parthood
    }

    pub fn with_parthood(&self, parthood: ParthoodVariant) -> Self {
        GranularOperatorSpace {
            parthood,
            ..self.clone()
        }
    }

    pub fn is_explicit(&self) -> bool {
        matches!(self.operators, Operators::Explicit { .. })
    }
}

impl Approximation for GranularOperatorSpace {
    fn universe(&self) -> &Universe {
        self.context.universe()
    }

    fn granulation(&self) -> &Granulation {
        self.context.granulation()
    }

    fn lower(&self, a: &Region) -> Region {
        match &self.operators {
            Operators::Explicit { lower, .. } if lower.contains_key(a) => lower[a].clone(),
            _ => self.context.lower(a),
        }
    }

    fn upper(&self, a: &Region) -> Region {
        match &self.operators {
            Operators::Explicit { upper, .. } if upper.contains_key(a) => upper[a].clone(),
            _ => self.context.upper(a),
        }
    }
}
