use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::sets::{InformationTable, Region, Universe};

/// A finite family of nonempty granules. Granules may overlap and need not
/// cover the universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Granulation {
    universe_size: usize,
    granules: Vec<Region>,
}

impl Granulation {
    pub fn new(universe: &Universe, granules: Vec<Region>) -> Result<Self> {
        let mut seen = HashSet::new();
        for g in &granules {
            if g.universe_size() != universe.size() {
                return Err(Error::UniverseMismatch(g.universe_size(), universe.size()));
            }
            if g.is_empty() {
                return Err(Error::EmptyGranule);
            }
            if !seen.insert(g.clone()) {
                return Err(Error::DuplicateGranule(universe.names_of(g)));
            }
        }
        Ok(Granulation {
            universe_size: universe.size(),
            granules,
        })
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn granules(&self) -> &[Region] {
        &self.granules
    }

    pub fn len(&self) -> usize {
        self.granules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.granules.is_empty()
    }

    /// True when the granules are pairwise disjoint and cover the universe.
    pub fn is_partition(&self) -> bool {
        let mut acc = Region::empty(self.universe_size);
        for g in &self.granules {
            if acc.intersects(g) {
                return false;
            }
            acc.union_with(g);
        }
        acc.is_full()
    }

    /// Union of all granules contained in `a`.
    pub fn lower(&self, a: &Region) -> Region {
        let mut out = Region::empty(self.universe_size);
        for g in self.granules.iter().filter(|g| g.is_subset(a)) {
            out.union_with(g);
        }
        out
    }

    /// Union of all granules meeting `a`.
    pub fn upper(&self, a: &Region) -> Region {
        let mut out = Region::empty(self.universe_size);
        for g in self.granules.iter().filter(|g| g.intersects(a)) {
            out.union_with(g);
        }
        out
    }

    /// Whether `a` is a union of granules (the empty union included).
    pub fn is_union_of_granules(&self, a: &Region) -> bool {
        &self.lower(a) == a
    }
}

impl From<IndiscernibilityRelation> for Granulation {
    fn from(p: IndiscernibilityRelation) -> Self {
        Granulation {
            universe_size: p.universe_size,
            granules: p.blocks,
        }
    }
}

/// An equivalence relation on the universe, held as its partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndiscernibilityRelation {
    universe_size: usize,
    blocks: Vec<Region>,
}

impl IndiscernibilityRelation {
    /// Checks that blocks are nonempty, pairwise disjoint and cover the universe.
    pub fn from_blocks(universe_size: usize, blocks: Vec<Region>) -> Result<Self> {
        let mut acc = Region::empty(universe_size);
        for b in &blocks {
            if b.universe_size() != universe_size {
                return Err(Error::UniverseMismatch(b.universe_size(), universe_size));
            }
            if b.is_empty() {
                return Err(Error::EmptyGranule);
            }
            if acc.intersects(b) {
                return Err(Error::Invalid("partition blocks overlap".into()));
            }
            acc.union_with(b);
        }
        if !acc.is_full() {
            return Err(Error::Invalid("partition blocks do not cover the universe".into()));
        }
        Ok(IndiscernibilityRelation { universe_size, blocks })
    }

    /// Partition from a block label per element (e.g. a restricted growth string).
    pub fn from_labels(labels: &[usize]) -> Self {
        let n = labels.len();
        let mut by_label: BTreeMap<usize, Region> = BTreeMap::new();
        let mut order = Vec::new();
        for (x, &l) in labels.iter().enumerate() {
            by_label
                .entry(l)
                .or_insert_with(|| {
                    order.push(l);
                    Region::empty(n)
                })
                .insert(x);
        }
        IndiscernibilityRelation {
            universe_size: n,
            blocks: order.into_iter().map(|l| by_label.remove(&l).unwrap()).collect(),
        }
    }

    pub fn blocks(&self) -> &[Region] {
        &self.blocks
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    /// The block containing element `x`.
    pub fn class_of(&self, x: usize) -> &Region {
        self.blocks
            .iter()
            .find(|b| b.contains(x))
            .expect("partition covers the universe")
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.class_of(x).contains(y)
    }
}

/// Blocks of objects agreeing on every attribute in `attrs`, in order of first occurrence.
pub fn indiscernibility_partition<S: AsRef<str>>(
    table: &InformationTable,
    attrs: &[S],
) -> Result<IndiscernibilityRelation> {
    if attrs.is_empty() {
        return Err(Error::Invalid("attribute subset must be nonempty".into()));
    }
    let cols = attrs
        .iter()
        .map(|a| table.attribute_index(a.as_ref()))
        .collect::<Result<Vec<_>>>()?;
    let n = table.objects().size();
    let mut keys: BTreeMap<Vec<&str>, usize> = BTreeMap::new();
    let mut labels = Vec::with_capacity(n);
    for x in 0..n {
        let key: Vec<&str> = cols.iter().map(|&c| table.value(c, x)).collect();
        let next = keys.len();
        labels.push(*keys.entry(key).or_insert(next));
    }
    Ok(IndiscernibilityRelation::from_labels(&labels))
}

/// Lower and upper approximation of one region.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    pub lower: Region,
    pub upper: Region,
}

/// Anything that supplies lower/upper approximations over a universe with a granulation.
pub trait Approximation {
    fn universe(&self) -> &Universe;
    fn granulation(&self) -> &Granulation;
    fn lower(&self, a: &Region) -> Region;
    fn upper(&self, a: &Region) -> Region;

    fn signature(&self, a: &Region) -> Signature {
        Signature {
            lower: self.lower(a),
            upper: self.upper(a),
        }
    }

    /// `A^l = A = A^u`.
    fn is_definite(&self, a: &Region) -> bool {
        &self.lower(a) == a && &self.upper(a) == a
    }
}

/// A universe with a granulation, approximating by the granule-union formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproximationContext {
    universe: Universe,
    granulation: Granulation,
}

impl ApproximationContext {
    pub fn new(universe: Universe, granulation: Granulation) -> Result<Self> {
        if granulation.universe_size() != universe.size() {
            return Err(Error::UniverseMismatch(granulation.universe_size(), universe.size()));
        }
        Ok(ApproximationContext { universe, granulation })
    }

    /// Context whose granules are the blocks of the indiscernibility partition on `attrs`.
    pub fn from_table<S: AsRef<str>>(table: &InformationTable, attrs: &[S]) -> Result<Self> {
        let partition = indiscernibility_partition(table, attrs)?;
        Self::new(table.objects().clone(), partition.into())
    }

    /// Builds a context from element names and granules written as name lists.
    pub fn from_names<S: AsRef<str>>(elements: &[S], granules: &[Vec<S>]) -> Result<Self> {
        let universe = Universe::new(elements.iter().map(|e| e.as_ref().to_string()))?;
        let granules = granules
            .iter()
            .map(|g| universe.region(g.iter().map(AsRef::as_ref)))
            .collect::<Result<Vec<_>>>()?;
        let granulation = Granulation::new(&universe, granules)?;
        Self::new(universe, granulation)
    }
}

impl Approximation for ApproximationContext {
    fn universe(&self) -> &Universe {
        &self.universe
    }

    fn granulation(&self) -> &Granulation {
        &self.granulation
    }

    fn lower(&self, a: &Region) -> Region {
        self.granulation.lower(a)
    }

    fn upper(&self, a: &Region) -> Region {
        self.granulation.upper(a)
    }
}

pub fn lower_approx(a: &Region, g: &Granulation) -> Region {
    g.lower(a)
}

pub fn upper_approx(a: &Region, g: &Granulation) -> Region {
    g.upper(a)
}

/// `A^l ⊆ B^l` and `A^u ⊆ B^u`.
pub fn rough_inclusion(a: &Region, b: &Region, g: &Granulation) -> bool {
    g.lower(a).is_subset(&g.lower(b)) && g.upper(a).is_subset(&g.upper(b))
}

/// Equal lower and equal upper approximations.
pub fn rough_equality(a: &Region, b: &Region, g: &Granulation) -> bool {
    g.lower(a) == g.lower(b) && g.upper(a) == g.upper(b)
}
