//! Generator sets of transpositions (and explicit involutions) defining
//! Cayley graphs on `Sym_n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GeneratorKind {
    /// Every `t_{i,j}`, `i < j`.
    #[serde(rename = "T")]
    AllTranspositions,
    /// Bubble-sort swaps `t_{i,i+1}`.
    #[serde(rename = "t")]
    Adjacent,
    /// Star swaps `t_{1,i}`.
    #[serde(rename = "st")]
    Prefix,
    #[serde(rename = "explicit")]
    Explicit,
}

impl GeneratorKind {
    pub const NAMED: [GeneratorKind; 3] = [
        GeneratorKind::AllTranspositions,
        GeneratorKind::Adjacent,
        GeneratorKind::Prefix,
    ];

    pub fn short_name(&self) -> &'static str {
        match self {
            GeneratorKind::AllTranspositions => "T",
            GeneratorKind::Adjacent => "t",
            GeneratorKind::Prefix => "st",
            GeneratorKind::Explicit => "explicit",
        }
    }

    pub fn graph_name(&self) -> &'static str {
        match self {
            GeneratorKind::AllTranspositions => "transposition graph",
            GeneratorKind::Adjacent => "bubble-sort graph",
            GeneratorKind::Prefix => "star graph",
            GeneratorKind::Explicit => "explicit Cayley graph",
        }
    }

    pub(crate) fn code(&self) -> u8 {
        match self {
            GeneratorKind::AllTranspositions => 0,
            GeneratorKind::Adjacent => 1,
            GeneratorKind::Prefix => 2,
            GeneratorKind::Explicit => 3,
        }
    }

    pub(crate) fn from_code(code: u8) -> Option<Self> {
        match code {
            0 => Some(GeneratorKind::AllTranspositions),
            1 => Some(GeneratorKind::Adjacent),
            2 => Some(GeneratorKind::Prefix),
            3 => Some(GeneratorKind::Explicit),
            _ => None,
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "T" | "all" | "transpositions" => Ok(GeneratorKind::AllTranspositions),
            "t" | "adjacent" | "bubble" | "bubble-sort" => Ok(GeneratorKind::Adjacent),
            "st" | "prefix" | "star" => Ok(GeneratorKind::Prefix),
            _ => Err(Error::Domain(format!("unknown generator set {s:?}"))),
        }
    }
}

/// A symmetric generating set `S` of `Sym_n` made of involutions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    kind: GeneratorKind,
    n: usize,
    elements: Vec<Permutation>,
    /// 0-based position pairs when every element is a transposition.
    swaps: Option<Vec<(usize, usize)>>,
}

impl GeneratorSet {
    pub fn new(kind: GeneratorKind, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("{kind} needs n >= 2, got {n}")));
        }
        let swaps: Vec<(usize, usize)> = match kind {
            GeneratorKind::AllTranspositions => (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect(),
            GeneratorKind::Adjacent => (0..n - 1).map(|i| (i, i + 1)).collect(),
            GeneratorKind::Prefix => (1..n).map(|i| (0, i)).collect(),
            GeneratorKind::Explicit => {
                return Err(Error::Domain("use GeneratorSet::explicit".into()));
            }
        };
        let id = Permutation::identity(n)?;
        let elements = swaps.iter().map(|&(i, j)| id.swap_positions(i, j)).collect();
        Ok(Self {
            kind,
            n,
            elements,
            swaps: Some(swaps),
        })
    }

    pub fn all_transpositions(n: usize) -> Result<Self> {
        Self::new(GeneratorKind::AllTranspositions, n)
    }

    pub fn adjacent(n: usize) -> Result<Self> {
        Self::new(GeneratorKind::Adjacent, n)
    }

    pub fn prefix(n: usize) -> Result<Self> {
        Self::new(GeneratorKind::Prefix, n)
    }

    /// An explicit list of involutions. Duplicates are dropped; the identity
    /// and non-involutions are rejected.
    pub fn explicit(elements: Vec<Permutation>) -> Result<Self> {
        let n = elements
            .first()
            .map(Permutation::degree)
            .ok_or_else(|| Error::Domain("empty generator set".into()))?;
        let mut uniq: Vec<Permutation> = Vec::with_capacity(elements.len());
        for g in elements {
            if g.degree() != n {
                return Err(Error::DegreeMismatch {
                    left: n,
                    right: g.degree(),
                });
            }
            if g.is_identity() {
                return Err(Error::Domain("identity in generator set".into()));
            }
            if !g.compose_unchecked(&g).is_identity() {
                return Err(Error::Domain(format!("{g} is not an involution")));
            }
            if !uniq.contains(&g) {
                uniq.push(g);
            }
        }
        let swaps = uniq
            .iter()
            .map(|g| {
                let moved: Vec<usize> = (0..n).filter(|&k| g.images()[k] as usize != k).collect();
                (moved.len() == 2).then(|| (moved[0], moved[1]))
            })
            .collect::<Option<Vec<_>>>();
        Ok(Self {
            kind: GeneratorKind::Explicit,
            n,
            elements: uniq,
            swaps,
        })
    }

    pub fn kind(&self) -> GeneratorKind {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Valency `|S|`.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }

    /// `p · s_idx`.
    #[inline]
    pub fn apply(&self, p: &Permutation, idx: usize) -> Permutation {
        match &self.swaps {
            Some(sw) => {
                let (i, j) = sw[idx];
                p.swap_positions(i, j)
            }
            None => p.compose_unchecked(&self.elements[idx]),
        }
    }

    pub fn neighbors(&self, p: &Permutation) -> Vec<Permutation> {
        (0..self.len()).map(|idx| self.apply(p, idx)).collect()
    }

    /// `S` is closed under conjugation by all of `Sym_n`, so each conjugacy
    /// class is an orbit of graph automorphisms fixing the identity.
    pub fn is_conjugation_closed(&self) -> bool {
        match self.kind {
            GeneratorKind::AllTranspositions => true,
            GeneratorKind::Adjacent | GeneratorKind::Prefix => self.n <= 2,
            GeneratorKind::Explicit => {
                let types: Vec<_> = self.elements.iter().map(|g| g.cycle_type()).collect();
                let mut total = 0u64;
                let mut distinct = types.clone();
                distinct.sort();
                distinct.dedup();
                for t in &distinct {
                    match t.class_size() {
                        Ok(size) => total += size,
                        Err(_) => return false,
                    }
                }
                total == self.len() as u64
            }
        }
    }
}
