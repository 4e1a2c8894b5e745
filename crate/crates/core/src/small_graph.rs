//! Explicit simple graphs on a few thousand vertices: Hamming, Johnson and
//! complete multipartite builders plus an edge-list reader. Everything here
//! is computed over all vertex pairs, with no symmetry assumed.

use std::collections::{BTreeMap, VecDeque};

use rayon::prelude::*;

use crate::cayley::{DistanceRegularity, IrregularityWitness, NsValue, Witness};
use crate::error::{Error, Result};
use crate::graph::{self, intersect_sorted, Graph};

/// `s -> (largest intersection, first pair attaining it)`.
type BestBySphere = BTreeMap<usize, (u64, (usize, usize))>;

pub const MAX_VERTICES: usize = 50_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallGraph {
    name: String,
    adj: Vec<Vec<usize>>,
}

impl Graph for SmallGraph {
    type Vertex = usize;

    fn neighbors(&self, v: &usize) -> Vec<usize> {
        self.adj[*v].clone()
    }
}

impl SmallGraph {
    /// Builds from an edge list on vertices `0..v`. Loops and repeated edges
    /// are rejected.
    pub fn from_edges(name: impl Into<String>, v: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if v == 0 || v > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "small graph vertices",
                needed: v as u64,
                limit: MAX_VERTICES as u64,
            });
        }
        let mut adj = vec![Vec::new(); v];
        for &(a, b) in edges {
            if a >= v || b >= v {
                return Err(Error::Domain(format!("edge {a}-{b} outside 0..{v}")));
            }
            if a == b {
                return Err(Error::NotSimple(format!("loop at {a}")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for (x, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::NotSimple(format!("repeated edge at {x}")));
            }
        }
        Ok(Self { name: name.into(), adj })
    }

    /// Parses one `u v` pair per line (0-based). Blank lines and `#`
    /// comments are skipped. The vertex count is one more than the largest
    /// index.
    pub fn parse_edge_list(name: impl Into<String>, text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        let mut max = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse { line: idx + 1, msg };
            let mut toks = line.split_whitespace();
            let mut vertex = || -> Result<usize> {
                let tok = toks.next().ok_or_else(|| err("expected two vertices".into()))?;
                if !tok.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(err(format!("bad vertex {tok:?}")));
                }
                let v: usize = tok.parse().map_err(|_| err(format!("bad vertex {tok:?}")))?;
                if v >= MAX_VERTICES {
                    return Err(err(format!("vertex {v} beyond {MAX_VERTICES}")));
                }
                Ok(v)
            };
            let (a, b) = (vertex()?, vertex()?);
            if toks.next().is_some() {
                return Err(err("trailing tokens".into()));
            }
            max = Some(max.unwrap_or(0).max(a).max(b));
            edges.push((a, b));
        }
        let v = max.map(|m| m + 1).ok_or(Error::Parse {
            line: 0,
            msg: "no edges".into(),
        })?;
        Self::from_edges(name, v, &edges)
    }

    /// `L_n(q)`: words of length `n` over `q` symbols, adjacent when they
    /// differ in one coordinate.
    pub fn hamming(n: usize, q: usize) -> Result<Self> {
        if n == 0 || q < 2 {
            return Err(Error::Domain(format!("hamming n={n} q={q}")));
        }
        let v = (q as u64)
            .checked_pow(n as u32)
            .filter(|&v| v <= MAX_VERTICES as u64)
            .ok_or(Error::Capacity {
                what: "small graph vertices",
                needed: u64::MAX,
                limit: MAX_VERTICES as u64,
            })? as usize;
        let mut edges = Vec::new();
        for x in 0..v {
            let mut place = 1;
            for _ in 0..n {
                let digit = (x / place) % q;
                for other in digit + 1..q {
                    edges.push((x, x + (other - digit) * place));
                }
                place *= q;
            }
        }
        Self::from_edges(format!("L_{n}({q})"), v, &edges)
    }

    /// `J_e^n`: `e`-subsets of an `n`-set, adjacent when they share `e - 1`
    /// elements.
    pub fn johnson(n: usize, e: usize) -> Result<Self> {
        if n < 2 || e == 0 || e >= n || n > 20 {
            return Err(Error::Domain(format!("johnson n={n} e={e}")));
        }
        let sets: Vec<u32> = (0u32..1 << n).filter(|m| m.count_ones() as usize == e).collect();
        if sets.len() > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "small graph vertices",
                needed: sets.len() as u64,
                limit: MAX_VERTICES as u64,
            });
        }
        let mut edges = Vec::new();
        for (i, a) in sets.iter().enumerate() {
            for (j, b) in sets.iter().enumerate().skip(i + 1) {
                if (a & b).count_ones() as usize == e - 1 {
                    edges.push((i, j));
                }
            }
        }
        Self::from_edges(format!("J_{e}^{n}"), sets.len(), &edges)
    }

    /// The lattice graph `L_2(q)`.
    pub fn lattice(q: usize) -> Result<Self> {
        Self::hamming(2, q)
    }

    /// The triangular graph `T(n) = J_2^n`.
    pub fn triangular(n: usize) -> Result<Self> {
        Self::johnson(n, 2)
    }

    /// `K^{(t)}_m`: `t` parts of `m` vertices, edges between different parts.
    pub fn complete_multipartite(t: usize, m: usize) -> Result<Self> {
        if t < 2 || m == 0 {
            return Err(Error::Domain(format!("multipartite t={t} m={m}")));
        }
        let v = t * m;
        let mut edges = Vec::new();
        for a in 0..v {
            for b in a + 1..v {
                if a / m != b / m {
                    edges.push((a, b));
                }
            }
        }
        Self::from_edges(format!("K^({t})_{m}"), v, &edges)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Common valency if the graph is regular.
    pub fn valency(&self) -> Option<usize> {
        let k = self.adj[0].len();
        self.adj.iter().all(|l| l.len() == k).then_some(k)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, l)| l.iter().filter(move |&&b| b > a).map(move |&b| (a, b)))
    }

    /// Distances from `source`; `usize::MAX` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.adj.len()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        !self.distances_from(0).contains(&usize::MAX)
    }

    pub fn diameter(&self) -> Result<usize> {
        let ecc: Vec<usize> = (0..self.adj.len())
            .into_par_iter()
            .map(|x| self.distances_from(x).into_iter().max().unwrap_or(0))
            .collect();
        let d = ecc.into_iter().max().unwrap_or(0);
        if d == usize::MAX {
            Err(Error::Disconnected)
        } else {
            Ok(d)
        }
    }

    fn common(&self, x: usize, y: usize) -> usize {
        intersect_sorted(&self.adj[x], &self.adj[y]).len()
    }

    /// Largest number of triangles over an edge.
    pub fn lambda(&self) -> u64 {
        self.edges().map(|(a, b)| self.common(a, b) as u64).max().unwrap_or(0)
    }

    /// Largest number of common neighbours of two vertices at distance 2.
    pub fn mu(&self) -> u64 {
        (0..self.adj.len())
            .map(|x| {
                let dist = self.distances_from(x);
                (0..self.adj.len())
                    .filter(|&y| dist[y] == 2)
                    .map(|y| self.common(x, y) as u64)
                    .max()
                    .unwrap_or(0)
            })
            .max()
            .unwrap_or(0)
    }

    /// Sorted members of `B_r(x)`.
    fn ball(&self, x: usize, r: usize) -> Vec<usize> {
        let dist = self.distances_from(x);
        (0..self.adj.len()).filter(|&y| dist[y] <= r).collect()
    }

    /// `N_s(Γ, r)` for `s = 1..=2r` over all pairs at distance `s`.
    pub fn n_s_values(&self, r: usize) -> Result<Vec<(usize, Option<NsValue>)>> {
        if r == 0 {
            return Err(Error::Domain("radius must be positive".into()));
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let v = self.adj.len();
        let balls: Vec<Vec<usize>> = (0..v).into_par_iter().map(|x| self.ball(x, r)).collect();
        let per_source: Vec<BestBySphere> = (0..v)
            .into_par_iter()
            .map(|x| {
                let dist = self.distances_from(x);
                let mut best: BestBySphere = BTreeMap::new();
                for y in x + 1..v {
                    let s = dist[y];
                    if s == 0 || s > 2 * r {
                        continue;
                    }
                    let size = intersect_sorted(&balls[x], &balls[y]).len() as u64;
                    let entry = best.entry(s).or_insert((size, (x, y)));
                    if size > entry.0 {
                        *entry = (size, (x, y));
                    }
                }
                best
            })
            .collect();
        let mut merged: BestBySphere = BTreeMap::new();
        for best in per_source {
            for (s, (val, pair)) in best {
                let entry = merged.entry(s).or_insert((val, pair));
                if val > entry.0 {
                    *entry = (val, pair);
                }
            }
        }
        Ok((1..=2 * r)
            .map(|s| {
                let value = merged.get(&s).map(|&(value, (a, b))| NsValue {
                    s,
                    value,
                    witnesses: vec![Witness::Pair(a, b)],
                });
                (s, value)
            })
            .collect())
    }

    /// `N(Γ, r)`.
    pub fn n_value(&self, r: usize) -> Result<u64> {
        Ok(self
            .n_s_values(r)?
            .into_iter()
            .filter_map(|(_, v)| v.map(|v| v.value))
            .max()
            .unwrap_or(0))
    }

    /// Whether `c_i(x,y)` and `b_i(x,y)` depend only on `d(x,y) = i`.
    pub fn distance_regularity(&self) -> Result<DistanceRegularity<usize>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut seen: BTreeMap<usize, ((usize, usize), usize, usize)> = BTreeMap::new();
        for x in 0..self.adj.len() {
            let dist = self.distances_from(x);
            for y in 0..self.adj.len() {
                let i = dist[y];
                let c = self.adj[y].iter().filter(|&&z| dist[z] + 1 == i).count();
                let b = self.adj[y].iter().filter(|&&z| dist[z] == i + 1).count();
                match seen.get(&i) {
                    None => {
                        seen.insert(i, ((x, y), c, b));
                    }
                    Some(&(pair, c0, b0)) if (c0, b0) != (c, b) => {
                        return Ok(DistanceRegularity::Irregular(IrregularityWitness {
                            distance: i,
                            first: pair,
                            first_cb: (c0, b0),
                            second: (x, y),
                            second_cb: (c, b),
                        }));
                    }
                    Some(_) => {}
                }
            }
        }
        let d = *seen.keys().max().unwrap_or(&0);
        Ok(DistanceRegularity::Regular {
            b: (0..d).map(|i| seen[&i].2).collect(),
            c: (1..=d).map(|i| seen[&i].1).collect(),
        })
    }

    /// Whether any simple cycle of exactly `len` edges exists.
    pub fn has_cycle(&self, len: usize) -> bool {
        (0..self.adj.len()).any(|x| graph::has_cycle_through(self, x, len))
    }

    pub fn complete_bipartite_count(&self, p: usize, q: usize, at: usize) -> u64 {
        graph::complete_bipartite_count(self, p, q, at)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_parameters() {
        let l = SmallGraph::lattice(3).unwrap();
        assert_eq!((l.vertex_count(), l.valency(), l.lambda(), l.mu()), (9, Some(4), 1, 2));
        let t = SmallGraph::triangular(5).unwrap();
        assert_eq!((t.vertex_count(), t.valency(), t.lambda(), t.mu()), (10, Some(6), 3, 4));
        let k = SmallGraph::complete_multipartite(3, 2).unwrap();
        assert_eq!((k.vertex_count(), k.valency(), k.lambda(), k.mu()), (6, Some(4), 2, 4));
        let h = SmallGraph::hamming(3, 2).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count(), h.diameter().unwrap()), (8, 12, 3));
    }

    #[test]
    fn n_values_of_named_graphs() {
        assert_eq!(SmallGraph::lattice(3).unwrap().n_value(1).unwrap(), 3);
        assert_eq!(SmallGraph::triangular(5).unwrap().n_value(1).unwrap(), 5);
        assert_eq!(SmallGraph::hamming(3, 2).unwrap().n_value(1).unwrap(), 2);
    }

    #[test]
    fn distance_regular_families() {
        assert!(SmallGraph::hamming(3, 2)
            .unwrap()
            .distance_regularity()
            .unwrap()
            .is_regular());
        assert!(SmallGraph::johnson(5, 2)
            .unwrap()
            .distance_regularity()
            .unwrap()
            .is_regular());
        // A path on three vertices: the endpoints and the middle disagree on b_0.
        let path = SmallGraph::from_edges("P3", 3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!path.distance_regularity().unwrap().is_regular());
    }

    #[test]
    fn edge_list_parsing() {
        let g = SmallGraph::parse_edge_list("c4", "# square\n0 1\n1 2\n\n2 3 # last\n3 0\n").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 4));
        assert!(g.has_cycle(4));
        assert!(!g.has_cycle(3));
        match SmallGraph::parse_edge_list("x", "0 1\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            SmallGraph::parse_edge_list("x", "0 0\n"),
            Err(Error::NotSimple(_))
        ));
        assert!(matches!(
            SmallGraph::parse_edge_list("x", "0 1\n1 0\n"),
            Err(Error::NotSimple(_))
        ));
        assert!(SmallGraph::parse_edge_list("x", "0 1 2\n").is_err());
        assert!(SmallGraph::parse_edge_list("x", "").is_err());
    }

    #[test]
    fn disconnected_rejected() {
        let g = SmallGraph::from_edges("2K2", 4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.n_value(1), Err(Error::Disconnected));
    }
}
