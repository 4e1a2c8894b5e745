//! Permutations of `{1, .., n}` in one-line notation.
//!
//! Symbols are 1-based at every boundary (parsing, display, accessors that
//! say so) and stored 0-based internally. Composition follows the
//! right-action convention: `p.compose(&q)` maps `k` to `p(q(k))`, so
//! multiplying by a transposition on the right swaps two *positions*.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cycle_type::CycleType;
use crate::error::{Error, Result};

/// Largest supported degree. `20!` is the largest factorial that fits in a `u64`.
pub const MAX_DEGREE: usize = 20;

/// `n!` with overflow checking.
pub fn factorial(n: usize) -> Result<u64> {
    (2..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k).ok_or(Error::Overflow("factorial")))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    len: u8,
    map: [u8; MAX_DEGREE],
}

impl Permutation {
    pub fn identity(n: usize) -> Result<Self> {
        check_degree(n)?;
        let mut map = [0u8; MAX_DEGREE];
        for (i, slot) in map.iter_mut().enumerate().take(n) {
            *slot = i as u8;
        }
        Ok(Self { len: n as u8, map })
    }

    /// Builds from 1-based one-line notation.
    pub fn from_one_line(symbols: &[usize]) -> Result<Self> {
        let n = symbols.len();
        check_degree(n)?;
        let mut map = [0u8; MAX_DEGREE];
        let mut seen = [false; MAX_DEGREE];
        for (i, &s) in symbols.iter().enumerate() {
            if s == 0 || s > n {
                return Err(Error::InvalidPermutation(format!("symbol {s} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[s - 1], true) {
                return Err(Error::InvalidPermutation(format!("symbol {s} repeated")));
            }
            map[i] = (s - 1) as u8;
        }
        Ok(Self { len: n as u8, map })
    }

    /// Builds from 0-based images. Used by internal generators that already
    /// hold a valid arrangement.
    pub fn from_zero_based(images: &[u8]) -> Result<Self> {
        let n = images.len();
        check_degree(n)?;
        let mut map = [0u8; MAX_DEGREE];
        let mut seen = [false; MAX_DEGREE];
        for (i, &s) in images.iter().enumerate() {
            let s = s as usize;
            if s >= n || std::mem::replace(&mut seen[s], true) {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            map[i] = s as u8;
        }
        Ok(Self { len: n as u8, map })
    }

    /// The transposition `t_{i,j}` (1-based positions).
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        Transposition::new(n, i, j)?.to_permutation()
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.len as usize
    }

    /// 0-based images `π(k) - 1` for `k = 1..=n`.
    #[inline]
    pub fn images(&self) -> &[u8] {
        &self.map[..self.len as usize]
    }

    /// `π(k)` with 1-based `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.map[k - 1] as usize + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images().iter().map(|&s| s as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images().iter().enumerate().all(|(i, &s)| i == s as usize)
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.len != other.len {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    /// `compose` without the degree check, for hot loops over a single graph.
    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        let mut map = [0u8; MAX_DEGREE];
        for (k, slot) in map.iter_mut().enumerate().take(self.len as usize) {
            *slot = self.map[other.map[k] as usize];
        }
        Self { len: self.len, map }
    }

    /// Right multiplication by `t_{i,j}` with 0-based positions.
    #[inline]
    pub(crate) fn swap_positions(&self, i: usize, j: usize) -> Self {
        let mut out = *self;
        out.map.swap(i, j);
        out
    }

    pub fn inverse(&self) -> Self {
        let mut map = [0u8; MAX_DEGREE];
        for (k, &img) in self.images().iter().enumerate() {
            map[img as usize] = k as u8;
        }
        Self { len: self.len, map }
    }

    /// Disjoint cycles (0-based symbols), each starting at its smallest
    /// element, ordered by that element. Fixed points are 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<u8>> {
        let n = self.degree();
        let mut seen = [false; MAX_DEGREE];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k as u8);
                k = self.map[k] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.degree();
        let mut seen = [false; MAX_DEGREE];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.map[k] as usize;
            }
        }
        count
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut counts = vec![0u32; self.degree()];
        for c in self.cycles() {
            counts[c.len() - 1] += 1;
        }
        CycleType::from_counts(counts).expect("cycle lengths of a permutation sum to its degree")
    }

    /// 0 for even, 1 for odd.
    pub fn parity(&self) -> usize {
        (self.degree() - self.cycle_count()) % 2
    }

    /// Lexicographic rank via the Lehmer code; the identity has rank 0.
    pub fn rank(&self) -> u64 {
        let n = self.degree();
        let mut rank = 0u64;
        let mut used: u32 = 0;
        for i in 0..n {
            let s = self.map[i] as u32;
            let smaller_unused = s - (used & ((1u32 << s) - 1)).count_ones();
            used |= 1 << s;
            rank = rank * (n - i) as u64 + smaller_unused as u64;
        }
        rank
    }

    pub fn unrank(n: usize, rank: u64) -> Result<Self> {
        check_degree(n)?;
        if rank >= factorial(n)? {
            return Err(Error::RankOutOfRange { n, rank });
        }
        let mut digits = [0u8; MAX_DEGREE];
        let mut r = rank;
        for i in (0..n).rev() {
            let base = (n - i) as u64;
            digits[i] = (r % base) as u8;
            r /= base;
        }
        let mut available: Vec<u8> = (0..n as u8).collect();
        let mut map = [0u8; MAX_DEGREE];
        for i in 0..n {
            map[i] = available.remove(digits[i] as usize);
        }
        Ok(Self { len: n as u8, map })
    }

    /// All of `Sym_n` in rank order.
    pub fn all(n: usize) -> Result<impl Iterator<Item = Permutation>> {
        let total = factorial(n)?;
        Ok((0..total).map(move |r| Permutation::unrank(n, r).expect("rank below n!")))
    }
}

/// Distance in the all-transpositions graph: `n` minus the number of cycles
/// of `p⁻¹q`.
pub fn min_transposition_distance(p: &Permutation, q: &Permutation) -> Result<usize> {
    let diff = p.inverse().compose(q)?;
    Ok(diff.degree() - diff.cycle_count())
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DEGREE {
        Err(Error::DegreeOutOfRange(n))
    } else {
        Ok(())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, s) in self.images().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", *s as usize + 1)?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses `[2,3,1]`. Whitespace around symbols is tolerated.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidPermutation(format!("expected [..], got {s:?}")))?;
        if inner.trim().is_empty() {
            return Err(Error::InvalidPermutation("empty".into()));
        }
        let symbols = inner
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::InvalidPermutation(format!("bad symbol {tok:?}")));
                }
                tok.parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad symbol {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_one_line(&symbols)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `t_{i,j}` with 1-based positions `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transposition {
    n: u8,
    i: u8,
    j: u8,
}

impl Transposition {
    pub fn new(n: usize, i: usize, j: usize) -> Result<Self> {
        check_degree(n)?;
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        if i == 0 || j > n || i == j {
            return Err(Error::InvalidPermutation(format!("t_{{{i},{j}}} invalid for n={n}")));
        }
        Ok(Self {
            n: n as u8,
            i: i as u8,
            j: j as u8,
        })
    }

    pub fn positions(&self) -> (usize, usize) {
        (self.i as usize, self.j as usize)
    }

    pub fn degree(&self) -> usize {
        self.n as usize
    }

    pub fn to_permutation(&self) -> Result<Permutation> {
        let id = Permutation::identity(self.degree())?;
        Ok(id.swap_positions(self.i as usize - 1, self.j as usize - 1))
    }

    /// `p · t_{i,j}`: swaps positions `i` and `j` of `p`.
    pub fn apply_right(&self, p: &Permutation) -> Result<Permutation> {
        if p.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                left: p.degree(),
                right: self.degree(),
            });
        }
        Ok(p.swap_positions(self.i as usize - 1, self.j as usize - 1))
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.i, self.j)
    }
}

impl Serialize for Transposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
