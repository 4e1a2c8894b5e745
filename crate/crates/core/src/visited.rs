//! Membership sets over permutation ranks: a dense bitset when `n!` is
//! small enough, a hash set otherwise.

use std::collections::HashSet;

use crate::perm::{factorial, Permutation};

#[derive(Clone, Debug)]
pub enum VisitedSet {
    Dense { words: Vec<u64>, len: usize },
    Hashed(HashSet<u64>),
}

impl VisitedSet {
    /// Dense iff `n <= dense_max_n`.
    pub fn for_degree(n: usize, dense_max_n: usize) -> Self {
        match factorial(n) {
            Ok(total) if n <= dense_max_n => VisitedSet::Dense {
                words: vec![0; (total as usize).div_ceil(64)],
                len: 0,
            },
            _ => VisitedSet::Hashed(HashSet::new()),
        }
    }

    /// Returns true if the rank was not present.
    #[inline]
    pub fn insert(&mut self, rank: u64) -> bool {
        match self {
            VisitedSet::Dense { words, len } => {
                let (w, b) = ((rank / 64) as usize, rank % 64);
                let fresh = words[w] & (1 << b) == 0;
                words[w] |= 1 << b;
                *len += fresh as usize;
                fresh
            }
            VisitedSet::Hashed(set) => set.insert(rank),
        }
    }

    #[inline]
    pub fn contains(&self, rank: u64) -> bool {
        match self {
            VisitedSet::Dense { words, .. } => words
                .get((rank / 64) as usize)
                .is_some_and(|w| w & (1 << (rank % 64)) != 0),
            VisitedSet::Hashed(set) => set.contains(&rank),
        }
    }

    #[inline]
    pub fn insert_perm(&mut self, p: &Permutation) -> bool {
        self.insert(p.rank())
    }

    #[inline]
    pub fn contains_perm(&self, p: &Permutation) -> bool {
        self.contains(p.rank())
    }

    pub fn len(&self) -> usize {
        match self {
            VisitedSet::Dense { len, .. } => *len,
            VisitedSet::Hashed(set) => set.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
