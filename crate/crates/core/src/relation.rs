//! Square boolean relations over `0..size`.

use std::fmt;

use crate::bitset::BitSet;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    rows: Vec<BitSet>,
}

impl Relation {
    pub fn empty(size: usize) -> Self {
        Relation {
            rows: vec![BitSet::empty(size); size],
        }
    }

    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        Relation {
            rows: (0..size)
                .map(|i| BitSet::from_indices(size, (0..size).filter(|&j| f(i, j))))
                .collect(),
        }
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(size: usize, pairs: I) -> Self {
        let mut r = Self::empty(size);
        for (i, j) in pairs {
            r.set(i, j);
        }
        r
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn holds(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn set(&mut self, i: usize, j: usize) {
        self.rows[i].insert(j)
    }

    pub fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[i].iter()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size()).flat_map(move |i| self.successors(i).map(move |j| (i, j)))
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(BitSet::is_empty)
    }

    pub fn transpose(&self) -> Relation {
        let n = self.size();
        let mut t = Relation::empty(n);
        for (i, j) in self.pairs() {
            t.set(j, i);
        }
        t
    }

    /// `i R j` or `j R i`, off the diagonal.
    pub fn symmetric_closure_irreflexive(&self) -> Relation {
        Relation::from_fn(self.size(), |i, j| i != j && (self.holds(i, j) || self.holds(j, i)))
    }

    /// Transitive closure (Warshall).
    pub fn transitive_closure(&self) -> Relation {
        let mut rows = self.rows.clone();
        for k in 0..rows.len() {
            let rk = rows[k].clone();
            for row in rows.iter_mut() {
                if row.contains(k) {
                    row.union_with(&rk);
                }
            }
        }
        Relation { rows }
    }

    pub fn first_asymmetric_pair(&self) -> Option<(usize, usize)> {
        self.pairs().find(|&(i, j)| !self.holds(j, i))
    }

    pub fn first_reflexive_point(&self) -> Option<usize> {
        (0..self.size()).find(|&i| self.holds(i, i))
    }

    pub fn reflexivity_violation(&self) -> Option<usize> {
        (0..self.size()).find(|&i| !self.holds(i, i))
    }

    /// First `(i, j, k)` with `i R j`, `j R k` but not `i R k`.
    pub fn transitivity_violation(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.size() {
            for j in self.successors(i) {
                if let Some(k) = self.rows[j].difference(&self.rows[i]).first() {
                    return Some((i, j, k));
                }
            }
        }
        None
    }

    /// First `i ≠ j` related both ways.
    pub fn antisymmetry_violation(&self) -> Option<(usize, usize)> {
        self.pairs().find(|&(i, j)| i < j && self.holds(j, i))
    }

    /// An element related to every element.
    pub fn bottom(&self) -> Option<usize> {
        (0..self.size()).find(|&i| self.rows[i].count() == self.size())
    }

    /// An element every element is related to.
    pub fn top(&self) -> Option<usize> {
        (0..self.size()).find(|&j| (0..self.size()).all(|i| self.holds(i, j)))
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.pairs()).finish()
    }
}
