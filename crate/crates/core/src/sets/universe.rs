use std::collections::HashMap;
use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A finite, ordered set of named objects.
///
/// Element order is fixed at construction and is the default counting order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universe {
    elements: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<I, S>(elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        if elements.is_empty() {
            return Err(Error::NoObjects);
        }
        let mut index = HashMap::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(Error::DuplicateObject(e.clone()));
            }
        }
        Ok(Universe { elements, index })
    }

    /// Universe `{1, …, n}` with elements named by their 1-based position.
    pub fn numbered(n: usize) -> Self {
        Universe::new((1..=n).map(|i| i.to_string())).expect("n >= 1")
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn name(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn empty_region(&self) -> Region {
        Region::empty(self.size())
    }

    pub fn full_region(&self) -> Region {
        Region::full(self.size())
    }

    /// Region from element names; unknown names are an error.
    pub fn region<I, S>(&self, names: I) -> Result<Region>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut r = self.empty_region();
        for name in names {
            let name = name.as_ref();
            let i = self
                .position(name)
                .ok_or_else(|| Error::UnknownElement(name.to_string()))?;
            r.insert(i);
        }
        Ok(r)
    }

    pub fn names_of(&self, r: &Region) -> Vec<String> {
        r.iter().map(|i| self.elements[i].clone()).collect()
    }

    /// `{a, b, c}` rendering with element names.
    pub fn display(&self, r: &Region) -> String {
        format!("{{{}}}", self.names_of(r).join(","))
    }

    /// Every region of the universe, in mask order. Requires `size() <= 63`.
    pub fn all_regions(&self) -> impl ExactSizeIterator<Item = Region> + '_ {
        all_regions(self.size())
    }
}

/// All `2^n` regions over `n` elements in mask order.
pub fn all_regions(n: usize) -> impl ExactSizeIterator<Item = Region> {
    assert!(n < usize::BITS as usize, "exhaustive enumeration over {n} elements");
    (0..(1usize << n)).map(move |m| Region::from_mask(n, m as u64))
}

/// All `2^n` regions over `n` elements in shortlex order.
pub fn canonical_regions(n: usize) -> Vec<Region> {
    let mut v: Vec<Region> = all_regions(n).collect();
    v.sort();
    v
}

/// A subset of a universe, stored as a characteristic bit vector.
///
/// Regions order by shortlex (cardinality, then lexicographic on element
/// positions); reports list witnesses in that order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Region(BitSet);

impl Region {
    pub fn empty(n: usize) -> Self {
        Region(BitSet::empty(n))
    }

    pub fn full(n: usize) -> Self {
        Region(BitSet::full(n))
    }

    pub fn from_mask(n: usize, mask: u64) -> Self {
        Region(BitSet::from_mask(n, mask))
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, indices: I) -> Self {
        Region(BitSet::from_indices(n, indices))
    }

    /// Size of the universe this region lives in.
    pub fn universe_size(&self) -> usize {
        self.0.len()
    }

    pub fn mask(&self) -> u64 {
        self.0.mask()
    }

    pub fn len(&self) -> usize {
        self.0.count()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe_size()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(i)
    }

    pub fn insert(&mut self, i: usize) {
        self.0.insert(i)
    }

    pub fn remove(&mut self, i: usize) {
        self.0.remove(i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter()
    }

    pub fn is_subset(&self, other: &Region) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_proper_subset(&self, other: &Region) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn intersects(&self, other: &Region) -> bool {
        self.0.intersects(&other.0)
    }

    pub fn union(&self, other: &Region) -> Region {
        Region(self.0.union(&other.0))
    }

    pub fn intersection(&self, other: &Region) -> Region {
        Region(self.0.intersection(&other.0))
    }

    pub fn difference(&self, other: &Region) -> Region {
        Region(self.0.difference(&other.0))
    }

    pub fn complement(&self) -> Region {
        Region(self.0.complement())
    }

    pub fn union_with(&mut self, other: &Region) {
        self.0.union_with(&other.0)
    }
}

impl fmt::Debug for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // 1-based, matching how small fixtures are usually written down.
        f.debug_set().entries(self.iter().map(|i| i + 1)).finish()
    }
}
