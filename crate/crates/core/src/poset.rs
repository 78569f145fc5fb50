//! Finite strict partial orders over named elements.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::relation::Relation;

/// A strict partial order (irreflexive, transitive) on named elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    less: Relation,
}

/// JSON form: `{"elements": [...], "less_than": [[a, b], ...]}`.
/// Pairs may be covers only; the transitive closure is taken.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetFile {
    pub elements: Vec<String>,
    #[serde(default)]
    pub less_than: Vec<(String, String)>,
}

impl Poset {
    /// Closes `pairs` transitively; a cycle is rejected with a witness element.
    pub fn from_pairs<S: Into<String>>(names: Vec<S>, pairs: &[(usize, usize)]) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let n = names.len();
        if let Some(&(i, j)) = pairs.iter().find(|&&(i, j)| i >= n || j >= n) {
            return Err(Error::Invalid(format!("pair ({i}, {j}) out of range for {n} elements")));
        }
        let less = Relation::from_pairs(n, pairs.iter().copied()).transitive_closure();
        if let Some(i) = less.first_reflexive_point() {
            return Err(Error::NotPartialOrder(format!("cycle through {:?}", names[i])));
        }
        Ok(Poset { names, less })
    }

    /// Checks that `less` is irreflexive and transitive.
    pub fn from_relation<S: Into<String>>(names: Vec<S>, less: Relation) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() != less.size() {
            return Err(Error::Invalid("relation size does not match element count".into()));
        }
        if let Some(i) = less.first_reflexive_point() {
            return Err(Error::NotPartialOrder(format!("{0:?} < {0:?}", names[i])));
        }
        if let Some((i, j, k)) = less.transitivity_violation() {
            return Err(Error::NotPartialOrder(format!(
                "{:?} < {:?} < {:?} but not {:?} < {:?}",
                names[i], names[j], names[k], names[i], names[k]
            )));
        }
        Ok(Poset { names, less })
    }

    pub fn from_file(file: &PosetFile) -> Result<Self> {
        let idx = |name: &str| {
            file.elements
                .iter()
                .position(|e| e == name)
                .ok_or_else(|| Error::UnknownElement(name.to_string()))
        };
        let mut seen = std::collections::HashSet::new();
        for e in &file.elements {
            if !seen.insert(e) {
                return Err(Error::DuplicateObject(e.clone()));
            }
        }
        if file.elements.is_empty() {
            return Err(Error::NoObjects);
        }
        let pairs = file
            .less_than
            .iter()
            .map(|(a, b)| Ok((idx(a)?, idx(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Poset::from_pairs(file.elements.clone(), &pairs)
    }

    pub fn to_file(&self) -> PosetFile {
        PosetFile {
            elements: self.names.clone(),
            less_than: self
                .less
                .pairs()
                .map(|(i, j)| (self.names[i].clone(), self.names[j].clone()))
                .collect(),
        }
    }

    pub fn chain(n: usize) -> Self {
        let names: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_pairs(names, &pairs).expect("chains are acyclic")
    }

    pub fn antichain(n: usize) -> Self {
        let names: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
        Poset::from_pairs(names, &[]).expect("no pairs")
    }

    /// Random order: each pair `i < j` (by index) is related with probability `density`,
    /// then closed transitively.
    pub fn random<R: Rng>(n: usize, density: f64, rng: &mut R) -> Self {
        let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(density) {
                    pairs.push((i, j));
                }
            }
        }
        Poset::from_pairs(names, &pairs).expect("index-increasing pairs are acyclic")
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.less.holds(i, j)
    }

    pub fn less_relation(&self) -> &Relation {
        &self.less
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        i != j && (self.less(i, j) || self.less(j, i))
    }

    pub fn comparability(&self) -> Relation {
        Relation::from_fn(self.size(), |i, j| self.comparable(i, j))
    }

    pub fn incomparability(&self) -> Relation {
        Relation::from_fn(self.size(), |i, j| !self.less(i, j) && !self.less(j, i))
    }
}
