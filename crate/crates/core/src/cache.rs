//! Binary sphere/ball cache files.
//!
//! Layout, all integers little-endian:
//!
//! ```text
//! magic    4 bytes  "PRBC"
//! version  u16      1
//! n        u8
//! kind     u8       0 = T, 1 = t, 2 = st
//! radius   u8
//! reserved u8       0
//! sizes    (radius + 1) × u64   sphere sizes
//! ranks    Σ sizes × u64        Lehmer ranks, sphere by sphere
//! ```

use crate::error::{Error, Result};
use crate::generators::GeneratorKind;
use crate::perm::{factorial, Permutation, MAX_DEGREE};

pub const MAGIC: &[u8; 4] = b"PRBC";
pub const VERSION: u16 = 1;
const HEADER_LEN: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodedBall {
    pub kind: GeneratorKind,
    pub n: usize,
    pub radius: usize,
    pub spheres: Vec<Vec<u64>>,
}

pub fn file_name(kind: GeneratorKind, n: usize, radius: usize) -> String {
    format!("ball-{}-n{n}-r{radius}.bin", kind.short_name())
}

pub fn encode(kind: GeneratorKind, n: usize, radius: usize, spheres: &[Vec<Permutation>]) -> Vec<u8> {
    let total: usize = spheres.iter().map(Vec::len).sum();
    let mut out = Vec::with_capacity(HEADER_LEN + 8 * (spheres.len() + total));
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&VERSION.to_le_bytes());
    out.push(n as u8);
    out.push(kind.code());
    out.push(radius as u8);
    out.push(0);
    for s in spheres {
        out.extend_from_slice(&(s.len() as u64).to_le_bytes());
    }
    for p in spheres.iter().flatten() {
        out.extend_from_slice(&p.rank().to_le_bytes());
    }
    out
}

pub fn decode(bytes: &[u8]) -> Result<DecodedBall> {
    let bad = |msg: &str| Error::Cache(msg.to_string());
    if bytes.len() < HEADER_LEN {
        return Err(bad("truncated header"));
    }
    if &bytes[..4] != MAGIC {
        return Err(bad("bad magic"));
    }
    let version = u16::from_le_bytes([bytes[4], bytes[5]]);
    if version != VERSION {
        return Err(Error::Cache(format!("unsupported version {version}")));
    }
    let n = bytes[6] as usize;
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::Cache(format!("degree {n}")));
    }
    let kind = GeneratorKind::from_code(bytes[7])
        .filter(|k| *k != GeneratorKind::Explicit)
        .ok_or_else(|| bad("unknown generator kind"))?;
    let radius = bytes[8] as usize;
    if bytes[9] != 0 {
        return Err(bad("reserved byte set"));
    }
    let body = &bytes[HEADER_LEN..];
    if !body.len().is_multiple_of(8) {
        return Err(bad("body not a whole number of words"));
    }
    let mut words = body
        .chunks_exact(8)
        .map(|c| u64::from_le_bytes(c.try_into().expect("8-byte chunk")));
    let limit = factorial(n)?;
    let mut sizes = Vec::with_capacity(radius + 1);
    let mut total: u64 = 0;
    for _ in 0..=radius {
        let s = words.next().ok_or_else(|| bad("missing sphere sizes"))?;
        total = total.checked_add(s).ok_or_else(|| bad("sphere sizes overflow"))?;
        if total > limit {
            return Err(bad("more members than n!"));
        }
        sizes.push(s as usize);
    }
    if words.len() as u64 != total {
        return Err(Error::Cache(format!("expected {total} ranks, found {}", words.len())));
    }
    let mut spheres = Vec::with_capacity(sizes.len());
    for size in sizes {
        let mut sphere = Vec::with_capacity(size);
        for _ in 0..size {
            let r = words.next().expect("length checked");
            if r >= limit {
                return Err(Error::Cache(format!("rank {r} out of range")));
            }
            sphere.push(r);
        }
        spheres.push(sphere);
    }
    Ok(DecodedBall {
        kind,
        n,
        radius,
        spheres,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::CayleyGraph;

    #[test]
    fn round_trip() {
        let g = CayleyGraph::named(GeneratorKind::Prefix, 5).unwrap();
        let ball = g.identity_ball(3).unwrap();
        let bytes = encode(g.kind(), 5, 3, ball.spheres());
        let decoded = decode(&bytes).unwrap();
        assert_eq!(decoded.kind, GeneratorKind::Prefix);
        assert_eq!((decoded.n, decoded.radius), (5, 3));
        let ranks: Vec<Vec<u64>> = ball
            .spheres()
            .iter()
            .map(|s| s.iter().map(Permutation::rank).collect())
            .collect();
        assert_eq!(decoded.spheres, ranks);
    }

    #[test]
    fn rejects_corruption() {
        let g = CayleyGraph::named(GeneratorKind::AllTranspositions, 4).unwrap();
        let bytes = encode(g.kind(), 4, 1, g.identity_ball(1).unwrap().spheres());
        assert!(decode(&bytes[..bytes.len() - 1]).is_err());
        assert!(decode(&bytes[..5]).is_err());
        let mut bad_magic = bytes.clone();
        bad_magic[0] = b'X';
        assert!(decode(&bad_magic).is_err());
        let mut bad_rank = bytes.clone();
        let last = bad_rank.len() - 8;
        bad_rank[last..].copy_from_slice(&24u64.to_le_bytes());
        assert!(decode(&bad_rank).is_err());
        let mut extra = bytes;
        extra.extend_from_slice(&0u64.to_le_bytes());
        assert!(decode(&extra).is_err());
    }
}
