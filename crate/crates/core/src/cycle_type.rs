//! Cycle types `1^{h_1} 2^{h_2} .. n^{h_n}` and the conjugacy classes of
//! `Sym_n` they index.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{CheckedMul, One};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::{factorial, Permutation, MAX_DEGREE};

/// Largest degree for which whole classes are materialized.
pub const CLASS_ENUM_MAX_DEGREE: usize = 10;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    /// `counts[j - 1] = h_j`; length equals the degree.
    counts: Vec<u32>,
}

impl CycleType {
    /// `counts[j - 1]` is the number of `j`-cycles. Trailing entries may be
    /// omitted; the degree is `Σ j·h_j`.
    pub fn from_counts(mut counts: Vec<u32>) -> Result<Self> {
        let n: usize = counts.iter().enumerate().map(|(i, &h)| (i + 1) * h as usize).sum();
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::MalformedCycleType(format!("degree {n}")));
        }
        counts.resize(n, 0);
        Ok(Self { counts })
    }

    /// Cycle type from a list of cycle lengths, e.g. `[3, 1, 1]` for `1^2 3^1`.
    pub fn from_lengths(lengths: &[usize]) -> Result<Self> {
        let n: usize = lengths.iter().sum();
        if lengths.contains(&0) || n == 0 || n > MAX_DEGREE {
            return Err(Error::MalformedCycleType(format!("{lengths:?}")));
        }
        let mut counts = vec![0u32; n];
        for &l in lengths {
            counts[l - 1] += 1;
        }
        Ok(Self { counts })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_lengths(&vec![1; n])
    }

    pub fn degree(&self) -> usize {
        self.counts.len()
    }

    /// `h_j` for 1-based `j`; zero outside `1..=n`.
    pub fn count(&self, j: usize) -> u32 {
        j.checked_sub(1).and_then(|i| self.counts.get(i)).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn cycle_count(&self) -> usize {
        self.counts.iter().map(|&h| h as usize).sum()
    }

    /// Fewest transpositions whose product has this type: `n - Σ h_j`.
    pub fn transposition_length(&self) -> usize {
        self.degree() - self.cycle_count()
    }

    /// `Σ j²·h_j`.
    pub fn sum_of_squares(&self) -> u64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &h)| ((i + 1) * (i + 1)) as u64 * h as u64)
            .sum()
    }

    /// Cycle lengths in non-increasing order.
    pub fn lengths(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.cycle_count());
        for (i, &h) in self.counts.iter().enumerate().rev() {
            out.extend(std::iter::repeat_n(i + 1, h as usize));
        }
        out
    }

    /// `n! / Π_j (j^{h_j} h_j!)`.
    pub fn class_size(&self) -> Result<u64> {
        let mut denom = 1u64;
        for (i, &h) in self.counts.iter().enumerate() {
            let j = (i + 1) as u64;
            for _ in 0..h {
                denom = denom.checked_mul(j).ok_or(Error::Overflow("class size"))?;
            }
            denom = denom
                .checked_mul(factorial(h as usize)?)
                .ok_or(Error::Overflow("class size"))?;
        }
        Ok(factorial(self.degree())? / denom)
    }

    /// A fixed member of the class: consecutive runs of symbols, longest
    /// cycles first, e.g. `(1 2 3)(4 5)` for `2^1 3^1`.
    pub fn representative(&self) -> Permutation {
        let mut images = Vec::with_capacity(self.degree());
        let mut start = 0u8;
        for len in self.lengths() {
            let len = len as u8;
            for k in 0..len {
                images.push(start + (k + 1) % len);
            }
            start += len;
        }
        Permutation::from_zero_based(&images).expect("representative is a permutation")
    }

    /// Every permutation of this cycle type, each exactly once.
    ///
    /// Cycles are generated canonically: the smallest unused symbol opens a
    /// new cycle of some length still available, and the remaining slots of
    /// that cycle range over ordered choices of unused symbols.
    pub fn enumerate_class(&self) -> Result<Vec<Permutation>> {
        let n = self.degree();
        if n > CLASS_ENUM_MAX_DEGREE {
            return Err(Error::Capacity {
                what: "class enumeration degree",
                needed: n as u64,
                limit: CLASS_ENUM_MAX_DEGREE as u64,
            });
        }
        let mut out = Vec::with_capacity(self.class_size()? as usize);
        let mut images = vec![u8::MAX; n];
        let mut remaining = self.counts.clone();
        let mut used = vec![false; n];
        enumerate_rec(&mut images, &mut used, &mut remaining, &mut out);
        Ok(out)
    }

    /// All cycle types of degree `n` (integer partitions), ordered by
    /// transposition length and then by cycle lengths.
    pub fn all(n: usize) -> Result<Vec<CycleType>> {
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange(n));
        }
        let mut out = Vec::new();
        let mut current = Vec::new();
        partitions(n, n, &mut current, &mut out);
        let mut types: Vec<_> = out
            .into_iter()
            .map(|p| CycleType::from_lengths(&p).expect("partition of n"))
            .collect();
        types.sort_by_key(|t| (t.transposition_length(), t.lengths()));
        Ok(types)
    }

    /// Cycle types whose members lie at transposition distance `i` from the
    /// identity.
    pub fn with_transposition_length(n: usize, i: usize) -> Result<Vec<CycleType>> {
        Ok(Self::all(n)?
            .into_iter()
            .filter(|t| t.transposition_length() == i)
            .collect())
    }

    /// Number of ordered factorizations into `i = n - Σ h_j` transpositions:
    /// `i! · Π_j (j^{j-2} / (j-1)!)^{h_j}`, in exact rational arithmetic.
    pub fn denes_count(&self) -> Result<DenesCount> {
        let i = self.transposition_length();
        if i == 0 {
            return Ok(DenesCount {
                count: 1,
                degenerate: true,
            });
        }
        let overflow = || Error::Overflow("factorization count");
        let mut acc = Ratio::<u128>::from_integer(u128::from(factorial(i)?));
        for (idx, &h) in self.counts.iter().enumerate() {
            let j = (idx + 1) as u32;
            // j^{j-2} is 1/1 for j = 1.
            let num: u128 = if j >= 2 {
                (j as u128).checked_pow(j - 2).ok_or_else(overflow)?
            } else {
                1
            };
            let den = u128::from(factorial(idx)?);
            let term = Ratio::new(num, den);
            let mut power = Ratio::<u128>::one();
            for _ in 0..h {
                power = power.checked_mul(&term).ok_or_else(overflow)?;
            }
            acc = acc.checked_mul(&power).ok_or_else(overflow)?;
        }
        if !acc.is_integer() {
            return Err(Error::Domain(format!("non-integral factorization count {acc}")));
        }
        Ok(DenesCount {
            count: acc.to_integer(),
            degenerate: false,
        })
    }
}

/// Ordered minimal transposition factorization count. `degenerate` marks the
/// identity, whose empty product is counted once by convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DenesCount {
    pub count: u128,
    pub degenerate: bool,
}

fn partitions(n: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(current.clone());
        return;
    }
    for part in (1..=max_part.min(n)).rev() {
        current.push(part);
        partitions(n - part, part, current, out);
        current.pop();
    }
}

fn enumerate_rec(images: &mut [u8], used: &mut [bool], remaining: &mut [u32], out: &mut Vec<Permutation>) {
    let Some(start) = used.iter().position(|u| !u) else {
        out.push(Permutation::from_zero_based(images).expect("complete arrangement"));
        return;
    };
    for len in 1..=remaining.len() {
        if remaining[len - 1] == 0 {
            continue;
        }
        remaining[len - 1] -= 1;
        used[start] = true;
        let mut cycle = vec![start as u8];
        fill_cycle(images, used, remaining, out, &mut cycle, len);
        used[start] = false;
        remaining[len - 1] += 1;
    }
}

fn fill_cycle(
    images: &mut [u8],
    used: &mut [bool],
    remaining: &mut [u32],
    out: &mut Vec<Permutation>,
    cycle: &mut Vec<u8>,
    len: usize,
) {
    if cycle.len() == len {
        for w in 0..len {
            images[cycle[w] as usize] = cycle[(w + 1) % len];
        }
        enumerate_rec(images, used, remaining, out);
        return;
    }
    let first = cycle[0] as usize;
    for next in first + 1..used.len() {
        if used[next] {
            continue;
        }
        used[next] = true;
        cycle.push(next as u8);
        fill_cycle(images, used, remaining, out, cycle, len);
        cycle.pop();
        used[next] = false;
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &h) in self.counts.iter().enumerate() {
            if h == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{}^{}", i + 1, h)?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType({self})")
    }
}

impl FromStr for CycleType {
    type Err = Error;

    /// Parses whitespace-separated `j^h` tokens. Zero counts are accepted;
    /// a repeated length is rejected.
    fn from_str(s: &str) -> Result<Self> {
        let mut counts: Vec<u32> = Vec::new();
        let mut seen = Vec::new();
        for tok in s.split_whitespace() {
            let (j, h) = tok
                .split_once('^')
                .ok_or_else(|| Error::MalformedCycleType(format!("token {tok:?}")))?;
            let parse = |t: &str| -> Result<usize> {
                if t.is_empty() || t.len() > 3 || !t.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::MalformedCycleType(format!("token {tok:?}")));
                }
                Ok(t.parse().expect("short digit string"))
            };
            let (j, h) = (parse(j)?, parse(h)?);
            if j == 0 || j > MAX_DEGREE || h > MAX_DEGREE {
                return Err(Error::MalformedCycleType(format!("token {tok:?}")));
            }
            if seen.contains(&j) {
                return Err(Error::MalformedCycleType(format!("length {j} repeated")));
            }
            seen.push(j);
            if counts.len() < j {
                counts.resize(j, 0);
            }
            counts[j - 1] = h as u32;
        }
        CycleType::from_counts(counts)
    }
}

impl Serialize for CycleType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CycleType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(s: &str) -> CycleType {
        s.parse().unwrap()
    }

    #[test]
    fn class_sizes() {
        assert_eq!(ct("1^2 2^1").class_size().unwrap(), 6);
        assert_eq!(ct("1^0 3^1").class_size().unwrap(), 2);
        assert_eq!(ct("2^2").class_size().unwrap(), 3);
    }

    #[test]
    fn enumerate_small_classes() {
        assert_eq!(
            ct("1^5").enumerate_class().unwrap(),
            vec![Permutation::identity(5).unwrap()]
        );
        let mut transpositions = ct("1^1 2^1").enumerate_class().unwrap();
        transpositions.sort();
        let mut expected: Vec<Permutation> = ["[2,1,3]", "[1,3,2]", "[3,2,1]"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        expected.sort();
        assert_eq!(transpositions, expected);
        assert_eq!(ct("2^2").enumerate_class().unwrap().len(), 3);
        assert!(matches!(ct("1^11").enumerate_class(), Err(Error::Capacity { .. })));
    }

    #[test]
    fn denes_examples() {
        assert_eq!(ct("1^2 3^1").denes_count().unwrap().count, 3);
        assert_eq!(ct("1^3 2^1").denes_count().unwrap().count, 1);
        assert_eq!(ct("4^1").denes_count().unwrap().count, 16);
        let id = ct("1^4").denes_count().unwrap();
        assert!(id.degenerate);
        assert_eq!(id.count, 1);
        // A 20-cycle has 20^18 factorizations, beyond u64.
        assert_eq!(ct("20^1").denes_count().unwrap().count, 20u128.pow(18));
    }

    #[test]
    fn text_format() {
        assert_eq!(ct("1^0 3^1").to_string(), "3^1");
        assert_eq!(ct(" 3^1   1^2 ").to_string(), "1^2 3^1");
        for bad in [
            "", "1^0", "2", "^1", "1^", "1^1 1^1", "0^2", "a^1", "1^-1", "21^1", "1^21",
        ] {
            assert!(bad.parse::<CycleType>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn representative_has_type() {
        for n in 1..=8 {
            for t in CycleType::all(n).unwrap() {
                assert_eq!(t.representative().cycle_type(), t);
            }
        }
    }

    #[test]
    fn partition_counts() {
        let p: Vec<usize> = (1..=10).map(|n| CycleType::all(n).unwrap().len()).collect();
        assert_eq!(p, [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }
}
