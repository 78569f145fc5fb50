use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// How an arrangement was obtained from the canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    Canonical,
    /// `S^(j) = (x_j, …, x_n, x_1, …, x_{j−1})`, `j` 1-based.
    Rotation(usize),
    /// An explicit permutation `σ`.
    Permutation,
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::Canonical => f.write_str("canonical"),
            Origin::Rotation(j) => write!(f, "rotation({j})"),
            Origin::Permutation => f.write_str("permutation"),
        }
    }
}

/// A bijective arrangement of the counted collection `0..len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderArrangement {
    sequence: Vec<usize>,
    origin: Origin,
}

impl OrderArrangement {
    pub fn canonical(len: usize) -> Self {
        OrderArrangement {
            sequence: (0..len).collect(),
            origin: Origin::Canonical,
        }
    }

    /// Checks that `sequence` is a permutation of `0..sequence.len()`.
    pub fn permutation(sequence: Vec<usize>) -> Result<Self> {
        let n = sequence.len();
        let mut seen = vec![false; n];
        for &x in &sequence {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Invalid(format!("{sequence:?} is not a permutation of 0..{n}")));
            }
        }
        let origin = if sequence.iter().enumerate().all(|(i, &x)| i == x) {
            Origin::Canonical
        } else {
            Origin::Permutation
        };
        Ok(OrderArrangement { sequence, origin })
    }

    pub fn random<R: Rng>(len: usize, rng: &mut R) -> Self {
        let mut sequence: Vec<usize> = (0..len).collect();
        sequence.shuffle(rng);
        OrderArrangement {
            sequence,
            origin: Origin::Permutation,
        }
    }

    /// The `rank`-th permutation of `0..len` in lexicographic order.
    pub fn lexicographic(len: usize, mut rank: u64) -> Self {
        let mut pool: Vec<usize> = (0..len).collect();
        let mut fact: Vec<u64> = vec![1; len.max(1)];
        for i in 1..len {
            fact[i] = fact[i - 1] * i as u64;
        }
        let mut sequence = Vec::with_capacity(len);
        for i in (0..len).rev() {
            let q = (rank / fact[i]) as usize;
            rank %= fact[i];
            sequence.push(pool.remove(q));
        }
        let mut a = OrderArrangement::permutation(sequence).expect("unranked permutations are bijective");
        if a.origin == Origin::Permutation {
            a.origin = Origin::Permutation;
        }
        a
    }

    /// `S^(j)` of this arrangement, `j` 1-based.
    pub fn rotation(&self, j: usize) -> Self {
        assert!(j >= 1 && j <= self.len(), "rotation index {j} out of range");
        let mut sequence = self.sequence[j - 1..].to_vec();
        sequence.extend_from_slice(&self.sequence[..j - 1]);
        OrderArrangement {
            sequence,
            origin: if j == 1 {
                self.origin.clone()
            } else {
                Origin::Rotation(j)
            },
        }
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// 1-based position of element `x`.
    pub fn position_of(&self, x: usize) -> usize {
        self.sequence
            .iter()
            .position(|&y| y == x)
            .expect("element in arrangement")
            + 1
    }

    /// Element at 1-based position `j`.
    pub fn at(&self, j: usize) -> usize {
        self.sequence[j - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_matches_definition() {
        let base = OrderArrangement::permutation(vec![3, 1, 0, 2]).unwrap();
        let r = base.rotation(3);
        assert_eq!(r.sequence(), &[0, 2, 3, 1]);
        assert_eq!(r.origin(), &Origin::Rotation(3));
        assert_eq!(base.rotation(1).sequence(), base.sequence());
    }

    #[test]
    fn lexicographic_unranking() {
        let all: Vec<Vec<usize>> = (0..6)
            .map(|r| OrderArrangement::lexicographic(3, r).sequence().to_vec())
            .collect();
        assert_eq!(
            all,
            vec![
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0]
            ]
        );
        assert_eq!(OrderArrangement::lexicographic(3, 0).origin(), &Origin::Canonical);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(OrderArrangement::permutation(vec![0, 0]).is_err());
        assert!(OrderArrangement::permutation(vec![1, 2]).is_err());
    }
}
