use crate::error::{Error, Result};
use crate::gos::{GranularOperatorSpace, RoughQuotient};
use crate::parthood::{ConflictMode, Parthood};
use crate::poset::Poset;
use crate::relation::Relation;
use crate::sets::{Approximation, Region};

/// A named collection with an irreflexive, symmetric conflict relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictGraph {
    names: Vec<String>,
    relation: Relation,
}

impl ConflictGraph {
    pub fn new(names: Vec<String>, relation: Relation) -> Result<Self> {
        if names.len() != relation.size() {
            return Err(Error::Invalid("relation size does not match the collection".into()));
        }
        if let Some(i) = relation.first_reflexive_point() {
            return Err(Error::NotIrreflexive(i));
        }
        if let Some((i, j)) = relation.first_asymmetric_pair() {
            return Err(Error::NotSymmetric(i, j));
        }
        Ok(ConflictGraph { names, relation })
    }

    pub fn from_poset(poset: &Poset, mode: ConflictMode) -> Self {
        let n = poset.size();
        let relation = Relation::from_fn(n, |i, j| {
            i != j && mode.from_verdicts(false, poset.less(i, j), poset.less(j, i))
        });
        ConflictGraph {
            names: poset.names().to_vec(),
            relation,
        }
    }

    /// Conflicts among named regions under a parthood predicate.
    pub fn from_regions<P: Parthood, C: Approximation + ?Sized>(
        regions: &[(String, Region)],
        parthood: &P,
        ctx: &C,
        mode: ConflictMode,
    ) -> Self {
        let sigs: Vec<_> = regions.iter().map(|(_, r)| ctx.signature(r)).collect();
        let g = ctx.granulation();
        let holds = |i: usize, j: usize| parthood.holds_on(&regions[i].1, &sigs[i], &regions[j].1, &sigs[j], g);
        let relation = Relation::from_fn(regions.len(), |i, j| {
            i != j && mode.from_verdicts(regions[i].1 == regions[j].1, holds(i, j), holds(j, i))
        });
        ConflictGraph {
            names: regions.iter().map(|(n, _)| n.clone()).collect(),
            relation,
        }
    }

    /// Conflicts among rough objects under the basic rough order; each class is
    /// named by its representative.
    pub fn from_quotient(q: &RoughQuotient, gos: &GranularOperatorSpace, mode: ConflictMode) -> Self {
        let relation = Relation::from_fn(q.len(), |i, j| {
            i != j && mode.from_verdicts(false, q.order.holds(i, j), q.order.holds(j, i))
        });
        ConflictGraph {
            names: q
                .classes
                .iter()
                .map(|c| gos.universe().display(c.representative()))
                .collect(),
            relation,
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    #[inline]
    pub fn conflicts(&self, i: usize, j: usize) -> bool {
        self.relation.holds(i, j)
    }

    /// Whether `x` conflicts with no member of `set`.
    pub fn compatible_with(&self, x: usize, set: &[usize]) -> bool {
        set.iter().all(|&y| !self.conflicts(x, y))
    }
}
