//! Metric engine for Cayley graphs `Cay(Sym_n, S)`.
//!
//! Vertex-transitivity is used throughout: balls and spheres are built around
//! the identity `e` and translated, and maxima over vertex pairs fix `x = e`.
//! For the all-transpositions set the maximization over `y` is further
//! reduced to one representative per conjugacy class, since conjugation
//! preserves `S` and fixes `e`. No such reduction is taken for the
//! bubble-sort or star sets.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::path::PathBuf;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::cache;
use crate::cycle_type::CycleType;
use crate::error::{Error, Result};
use crate::generators::{GeneratorKind, GeneratorSet};
use crate::graph::{self, Graph};
use crate::perm::{factorial, Permutation};
use crate::visited::VisitedSet;

/// Capacity budgets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Largest ball (in vertices) any single expansion may hold.
    pub max_ball: usize,
    /// Largest degree for which whole-graph BFS is allowed.
    pub whole_graph_max_n: usize,
    /// Visited sets are dense bitsets up to this degree.
    pub dense_max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_ball: 5_000_000,
            whole_graph_max_n: 8,
            dense_max_n: 8,
        }
    }
}

impl Graph for GeneratorSet {
    type Vertex = Permutation;

    fn neighbors(&self, v: &Permutation) -> Vec<Permutation> {
        GeneratorSet::neighbors(self, v)
    }
}

/// `B_r(center)` with its spheres in breadth-first order.
#[derive(Clone, Debug)]
pub struct MetricBall {
    kind: GeneratorKind,
    n: usize,
    center: Permutation,
    radius: usize,
    spheres: Vec<Vec<Permutation>>,
    members: VisitedSet,
}

impl MetricBall {
    pub fn center(&self) -> &Permutation {
        &self.center
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> GeneratorKind {
        self.kind
    }

    /// `spheres()[i]` is `S_i(center)` for `i = 0..=radius`.
    pub fn spheres(&self) -> &[Vec<Permutation>] {
        &self.spheres
    }

    pub fn len(&self) -> usize {
        self.spheres.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.n && self.members.contains_perm(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.spheres.iter().flatten()
    }
}

/// What attains a maximum: a conjugacy class (all-transpositions graphs), a
/// vertex `y` paired with the identity, or an explicit vertex pair of a
/// small graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Class(CycleType),
    Vertex(Permutation),
    Pair(usize, usize),
}

/// `N_s(Γ, r)` together with every `y ∈ S_s(e)` (or class) attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NsValue {
    pub s: usize,
    pub value: u64,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NValue {
    pub r: usize,
    pub value: u64,
    /// Every `s` whose `N_s` attains the maximum.
    pub attained: Vec<NsValue>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaMu {
    pub lambda: u64,
    pub mu: u64,
    /// Smallest element of `S² \ (S ∪ {e})` with `mu` factorizations.
    pub mu_witness: Option<Permutation>,
}

/// Neighbour counts of a vertex at distance `i` from the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LocalParams {
    pub i: usize,
    pub c: usize,
    pub a: usize,
    pub b: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrregularityWitness<V> {
    pub distance: usize,
    pub first: (V, V),
    pub first_cb: (usize, usize),
    pub second: (V, V),
    pub second_cb: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceRegularity<V> {
    /// Intersection array `{b_0, .., b_{d-1}; c_1, .., c_d}`.
    Regular {
        b: Vec<usize>,
        c: Vec<usize>,
    },
    Irregular(IrregularityWitness<V>),
}

impl<V> DistanceRegularity<V> {
    pub fn is_regular(&self) -> bool {
        matches!(self, DistanceRegularity::Regular { .. })
    }
}

/// Distances from the identity to every vertex, indexed by rank.
#[derive(Clone, Debug)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<u8>,
}

impl DistanceTable {
    pub fn distance(&self, p: &Permutation) -> usize {
        self.dist[p.rank() as usize] as usize
    }

    pub fn eccentricity(&self) -> usize {
        self.dist.iter().copied().max().unwrap_or(0) as usize
    }

    pub fn sphere_sizes(&self) -> Vec<u64> {
        let mut sizes = vec![0u64; self.eccentricity() + 1];
        for &d in &self.dist {
            sizes[d as usize] += 1;
        }
        sizes
    }

    pub fn degree(&self) -> usize {
        self.n
    }
}

/// A Cayley graph on `Sym_n` with memoized identity balls.
#[derive(Debug)]
pub struct CayleyGraph {
    gens: GeneratorSet,
    limits: Limits,
    cache_dir: Option<PathBuf>,
    balls: Mutex<HashMap<usize, Arc<MetricBall>>>,
    table: OnceLock<Arc<DistanceTable>>,
}

impl CayleyGraph {
    pub fn new(gens: GeneratorSet) -> Self {
        Self::with_limits(gens, Limits::default())
    }

    pub fn with_limits(gens: GeneratorSet, limits: Limits) -> Self {
        Self {
            gens,
            limits,
            cache_dir: None,
            balls: Mutex::new(HashMap::new()),
            table: OnceLock::new(),
        }
    }

    pub fn named(kind: GeneratorKind, n: usize) -> Result<Self> {
        Ok(Self::new(GeneratorSet::new(kind, n)?))
    }

    /// Persist identity balls of the named generator sets under `dir`.
    pub fn with_cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.cache_dir = Some(dir.into());
        self
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn kind(&self) -> GeneratorKind {
        self.gens.kind()
    }

    pub fn degree(&self) -> usize {
        self.gens.degree()
    }

    pub fn valency(&self) -> usize {
        self.gens.len()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree()).expect("degree validated by generator set")
    }

    fn check_degree(&self, p: &Permutation) -> Result<()> {
        if p.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: p.degree(),
            });
        }
        Ok(())
    }

    /// `B_r(center)` by breadth-first expansion.
    pub fn ball(&self, center: &Permutation, r: usize) -> Result<MetricBall> {
        self.check_degree(center)?;
        if center.is_identity() {
            return Ok((*self.identity_ball(r)?).clone());
        }
        self.expand(center, r)
    }

    fn expand(&self, center: &Permutation, r: usize) -> Result<MetricBall> {
        let n = self.degree();
        let mut members = VisitedSet::for_degree(n, self.limits.dense_max_n);
        members.insert_perm(center);
        let mut spheres = vec![vec![*center]];
        for _ in 0..r {
            let mut next = Vec::new();
            for p in spheres.last().expect("nonempty") {
                for idx in 0..self.gens.len() {
                    let q = self.gens.apply(p, idx);
                    if members.insert_perm(&q) {
                        next.push(q);
                    }
                }
                if members.len() > self.limits.max_ball {
                    return Err(Error::Capacity {
                        what: "ball size",
                        needed: members.len() as u64,
                        limit: self.limits.max_ball as u64,
                    });
                }
            }
            spheres.push(next);
        }
        Ok(MetricBall {
            kind: self.kind(),
            n,
            center: *center,
            radius: r,
            spheres,
            members,
        })
    }

    /// Memoized `B_r(e)`, read from and written to the cache directory when
    /// one is configured.
    pub fn identity_ball(&self, r: usize) -> Result<Arc<MetricBall>> {
        if let Some(b) = self.balls.lock().expect("ball memo poisoned").get(&r) {
            return Ok(Arc::clone(b));
        }
        let ball = match self.load_cached(r) {
            Some(b) => b,
            None => {
                let b = self.expand(&self.identity(), r)?;
                self.store_cached(&b);
                b
            }
        };
        let ball = Arc::new(ball);
        self.balls
            .lock()
            .expect("ball memo poisoned")
            .insert(r, Arc::clone(&ball));
        Ok(ball)
    }

    fn cache_path(&self, r: usize) -> Option<PathBuf> {
        let dir = self.cache_dir.as_ref()?;
        if self.kind() == GeneratorKind::Explicit {
            return None;
        }
        Some(dir.join(cache::file_name(self.kind(), self.degree(), r)))
    }

    fn load_cached(&self, r: usize) -> Option<MetricBall> {
        let path = self.cache_path(r)?;
        let bytes = std::fs::read(path).ok()?;
        let decoded = cache::decode(&bytes).ok()?;
        if decoded.kind != self.kind() || decoded.n != self.degree() || decoded.radius != r {
            return None;
        }
        let mut members = VisitedSet::for_degree(self.degree(), self.limits.dense_max_n);
        let mut spheres = Vec::with_capacity(decoded.spheres.len());
        for sphere in &decoded.spheres {
            let mut out = Vec::with_capacity(sphere.len());
            for &rank in sphere {
                let p = Permutation::unrank(self.degree(), rank).ok()?;
                if !members.insert(rank) {
                    return None;
                }
                out.push(p);
            }
            spheres.push(out);
        }
        if spheres.first().map(|s| s.as_slice()) != Some(&[self.identity()][..]) {
            return None;
        }
        Some(MetricBall {
            kind: self.kind(),
            n: self.degree(),
            center: self.identity(),
            radius: r,
            spheres,
            members,
        })
    }

    fn store_cached(&self, ball: &MetricBall) {
        let Some(path) = self.cache_path(ball.radius) else {
            return;
        };
        let bytes = cache::encode(ball.kind, ball.n, ball.radius, ball.spheres());
        if let Some(parent) = path.parent() {
            let _ = std::fs::create_dir_all(parent);
        }
        // The cache only saves recomputation; a failed write is harmless.
        let _ = std::fs::write(path, bytes);
    }

    /// `d(x, y) <= r`, via membership of `x⁻¹y` in `B_r(e)`.
    pub fn within(&self, x: &Permutation, y: &Permutation, r: usize) -> Result<bool> {
        self.check_degree(x)?;
        self.check_degree(y)?;
        let ball = self.identity_ball(r)?;
        Ok(ball.contains(&x.inverse().compose_unchecked(y)))
    }

    /// Shortest-path distance by bidirectional breadth-first search.
    pub fn distance(&self, x: &Permutation, y: &Permutation) -> Result<usize> {
        self.check_degree(x)?;
        self.check_degree(y)?;
        let target = x.inverse().compose_unchecked(y);
        if target.is_identity() {
            return Ok(0);
        }
        let mut fwd: HashMap<Permutation, usize> = HashMap::from([(self.identity(), 0)]);
        let mut bwd: HashMap<Permutation, usize> = HashMap::from([(target, 0)]);
        let mut fwd_frontier = vec![self.identity()];
        let mut bwd_frontier = vec![target];
        loop {
            if fwd_frontier.is_empty() || bwd_frontier.is_empty() {
                return Err(Error::Unreachable);
            }
            let forward = fwd_frontier.len() <= bwd_frontier.len();
            let (this, other, frontier) = if forward {
                (&mut fwd, &bwd, &mut fwd_frontier)
            } else {
                (&mut bwd, &fwd, &mut bwd_frontier)
            };
            let mut best: Option<usize> = None;
            let mut next = Vec::new();
            for p in frontier.iter() {
                let d = this[p] + 1;
                for idx in 0..self.gens.len() {
                    let q = self.gens.apply(p, idx);
                    if this.contains_key(&q) {
                        continue;
                    }
                    this.insert(q, d);
                    if let Some(&od) = other.get(&q) {
                        best = Some(best.map_or(d + od, |b: usize| b.min(d + od)));
                    }
                    next.push(q);
                }
            }
            if let Some(b) = best {
                return Ok(b);
            }
            *frontier = next;
            if fwd.len() + bwd.len() > self.limits.max_ball {
                return Err(Error::Capacity {
                    what: "distance search",
                    needed: (fwd.len() + bwd.len()) as u64,
                    limit: self.limits.max_ball as u64,
                });
            }
        }
    }

    /// `|b1 ∩ b2|`.
    pub fn intersection_size(b1: &MetricBall, b2: &MetricBall) -> Result<usize> {
        if b1.kind != b2.kind || b1.n != b2.n {
            return Err(Error::Domain("balls from different graphs".into()));
        }
        Ok(b1.iter().filter(|p| b2.contains(p)).count())
    }

    /// `|B_r(e) ∩ B_r(y)|`.
    pub fn identity_overlap(&self, y: &Permutation, r: usize) -> Result<u64> {
        self.check_degree(y)?;
        let ball = self.identity_ball(r)?;
        Ok(overlap_count(&ball, y))
    }

    /// `N_s(Γ, r)` for every `s = 1..=2r`. Entries are `None` when `S_s(e)`
    /// is empty.
    pub fn n_s_values(&self, r: usize) -> Result<Vec<(usize, Option<NsValue>)>> {
        if r == 0 {
            return Err(Error::Domain("radius must be positive".into()));
        }
        let outer = self.identity_ball(2 * r)?;
        let inner = self.identity_ball(r)?;
        let reduce = self.gens.is_conjugation_closed();
        let mut out = Vec::with_capacity(2 * r);
        for s in 1..=2 * r {
            let sphere = &outer.spheres()[s];
            if sphere.is_empty() {
                out.push((s, None));
                continue;
            }
            let candidates: Vec<(Permutation, Option<CycleType>)> = if reduce {
                let mut seen = HashSet::new();
                sphere
                    .iter()
                    .filter_map(|y| {
                        let t = y.cycle_type();
                        seen.insert(t.clone()).then_some((*y, Some(t)))
                    })
                    .collect()
            } else {
                sphere.iter().map(|y| (*y, None)).collect()
            };
            let counts: Vec<u64> = candidates.par_iter().map(|(y, _)| overlap_count(&inner, y)).collect();
            let value = counts.iter().copied().max().expect("nonempty sphere");
            let mut witnesses: Vec<Witness> = candidates
                .into_iter()
                .zip(&counts)
                .filter(|(_, &c)| c == value)
                .map(|((y, t), _)| match t {
                    Some(t) => Witness::Class(t),
                    None => Witness::Vertex(y),
                })
                .collect();
            witnesses.sort();
            out.push((s, Some(NsValue { s, value, witnesses })));
        }
        Ok(out)
    }

    pub fn n_s_value(&self, r: usize, s: usize) -> Result<Option<NsValue>> {
        if s == 0 || s > 2 * r {
            return Err(Error::Domain(format!("s={s} outside 1..={}", 2 * r)));
        }
        Ok(self.n_s_values(r)?.swap_remove(s - 1).1)
    }

    /// `N(Γ, r) = max_s N_s(Γ, r)`.
    pub fn n_value(&self, r: usize) -> Result<NValue> {
        let values: Vec<NsValue> = self.n_s_values(r)?.into_iter().filter_map(|(_, v)| v).collect();
        let value = values.iter().map(|v| v.value).max().unwrap_or(0);
        Ok(NValue {
            r,
            value,
            attained: values.into_iter().filter(|v| v.value == value).collect(),
        })
    }

    /// `λ` and `μ` from products of two generators.
    pub fn lambda_mu(&self) -> LambdaMu {
        let s = self.gens.elements();
        let mut counts: HashMap<Permutation, u64> = HashMap::new();
        for a in s {
            for b in s {
                *counts.entry(a.compose_unchecked(b)).or_default() += 1;
            }
        }
        let lambda = s.iter().map(|g| counts.get(g).copied().unwrap_or(0)).max().unwrap_or(0);
        let mut mu = 0;
        let mut mu_witness = None;
        let mut entries: Vec<_> = counts
            .into_iter()
            .filter(|(p, _)| !p.is_identity() && !self.gens.contains(p))
            .collect();
        entries.sort();
        for (p, c) in entries {
            if c > mu {
                mu = c;
                mu_witness = Some(p);
            }
        }
        LambdaMu { lambda, mu, mu_witness }
    }

    /// `S_i` as `Sⁱ \ (Sⁱ⁻¹ ∪ .. ∪ S⁰)`, computed by closing products of
    /// generators rather than by graph search.
    pub fn product_sphere(&self, i: usize) -> Result<HashSet<Permutation>> {
        let mut earlier: HashSet<Permutation> = HashSet::new();
        let mut power: HashSet<Permutation> = HashSet::from([self.identity()]);
        for _ in 0..i {
            earlier.extend(power.iter().copied());
            let mut next = HashSet::new();
            for p in &power {
                for g in self.gens.elements() {
                    next.insert(p.compose_unchecked(g));
                }
            }
            if next.len() > self.limits.max_ball {
                return Err(Error::Capacity {
                    what: "generator power",
                    needed: next.len() as u64,
                    limit: self.limits.max_ball as u64,
                });
            }
            power = next;
        }
        Ok(power.into_iter().filter(|p| !earlier.contains(p)).collect())
    }

    fn check_whole_graph(&self) -> Result<()> {
        if self.degree() > self.limits.whole_graph_max_n {
            return Err(Error::Capacity {
                what: "whole-graph degree",
                needed: self.degree() as u64,
                limit: self.limits.whole_graph_max_n as u64,
            });
        }
        Ok(())
    }

    /// Whole-graph BFS from the identity.
    pub fn distance_table(&self) -> Result<Arc<DistanceTable>> {
        if let Some(t) = self.table.get() {
            return Ok(Arc::clone(t));
        }
        self.check_whole_graph()?;
        let n = self.degree();
        let total = factorial(n)? as usize;
        let mut dist = vec![u8::MAX; total];
        let e = self.identity();
        dist[0] = 0;
        let mut frontier = vec![e];
        let mut level = 0u8;
        while !frontier.is_empty() {
            level += 1;
            let mut next = Vec::new();
            for p in &frontier {
                for idx in 0..self.gens.len() {
                    let q = self.gens.apply(p, idx);
                    let slot = &mut dist[q.rank() as usize];
                    if *slot == u8::MAX {
                        *slot = level;
                        next.push(q);
                    }
                }
            }
            frontier = next;
        }
        if dist.contains(&u8::MAX) {
            return Err(Error::Disconnected);
        }
        let table = Arc::new(DistanceTable { n, dist });
        Ok(Arc::clone(self.table.get_or_init(|| table)))
    }

    /// Diameter, equal to the eccentricity of `e` by vertex-transitivity.
    pub fn diameter(&self) -> Result<usize> {
        Ok(self.distance_table()?.eccentricity())
    }

    /// Whether `S` generates `Sym_n`.
    pub fn generates_symmetric_group(&self) -> Result<bool> {
        match self.distance_table() {
            Ok(_) => Ok(true),
            Err(Error::Disconnected) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// `(c_i, a_i, b_i)` of `pi` relative to the identity.
    pub fn local_params(&self, pi: &Permutation) -> Result<LocalParams> {
        self.check_degree(pi)?;
        let dist = |p: &Permutation| -> Result<usize> {
            if self.degree() <= self.limits.whole_graph_max_n {
                Ok(self.distance_table()?.distance(p))
            } else {
                self.distance(&self.identity(), p)
            }
        };
        let i = dist(pi)?;
        let mut params = LocalParams { i, c: 0, a: 0, b: 0 };
        for w in self.gens.neighbors(pi) {
            let d = dist(&w)?;
            if d + 1 == i {
                params.c += 1;
            } else if d == i {
                params.a += 1;
            } else {
                params.b += 1;
            }
        }
        Ok(params)
    }

    /// Checks whether `c_i` and `b_i` depend only on `i`.
    pub fn distance_regularity(&self) -> Result<DistanceRegularity<Permutation>> {
        let table = self.distance_table()?;
        let e = self.identity();
        let mut seen: BTreeMap<usize, (Permutation, usize, usize)> = BTreeMap::new();
        for y in Permutation::all(self.degree())? {
            let i = table.distance(&y);
            let (mut c, mut b) = (0, 0);
            for w in self.gens.neighbors(&y) {
                let d = table.distance(&w);
                if d + 1 == i {
                    c += 1;
                } else if d == i + 1 {
                    b += 1;
                }
            }
            match seen.get(&i) {
                None => {
                    seen.insert(i, (y, c, b));
                }
                Some(&(y0, c0, b0)) if (c0, b0) != (c, b) => {
                    return Ok(DistanceRegularity::Irregular(IrregularityWitness {
                        distance: i,
                        first: (e, y0),
                        first_cb: (c0, b0),
                        second: (e, y),
                        second_cb: (c, b),
                    }));
                }
                Some(_) => {}
            }
        }
        let d = table.eccentricity();
        Ok(DistanceRegularity::Regular {
            b: (0..d).map(|i| seen[&i].2).collect(),
            c: (1..=d).map(|i| seen[&i].1).collect(),
        })
    }

    /// For each requested length, whether the graph has a cycle of it.
    pub fn cycle_lengths_present(&self, lengths: &[usize]) -> Result<BTreeMap<usize, bool>> {
        self.check_whole_graph()?;
        let e = self.identity();
        Ok(lengths
            .iter()
            .map(|&len| (len, graph::has_cycle_through(&self.gens, e, len)))
            .collect())
    }

    /// Number of `K_{p,q}` subgraphs through `at`.
    pub fn complete_bipartite_count(&self, p: usize, q: usize, at: &Permutation) -> Result<u64> {
        self.check_degree(at)?;
        if p > 4 || q > 4 {
            return Err(Error::Domain(format!("K_{{{p},{q}}} larger than K_{{4,4}}")));
        }
        Ok(graph::complete_bipartite_count(&self.gens, p, q, *at))
    }
}

fn overlap_count(inner: &MetricBall, y: &Permutation) -> u64 {
    let y_inv = y.inverse();
    inner
        .iter()
        .filter(|z| inner.contains(&y_inv.compose_unchecked(z)))
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(kind: GeneratorKind, n: usize) -> CayleyGraph {
        CayleyGraph::named(kind, n).unwrap()
    }

    #[test]
    fn ball_sizes() {
        let g = graph(GeneratorKind::AllTranspositions, 4);
        let e = g.identity();
        assert_eq!(g.ball(&e, 0).unwrap().len(), 1);
        assert_eq!(g.ball(&e, 1).unwrap().len(), 7);
        assert_eq!(g.ball(&e, 2).unwrap().len(), 1 + 6 + 11);
        let far: Permutation = "[4,3,2,1]".parse().unwrap();
        let b = g.ball(&far, 1).unwrap();
        assert!(b.contains(&far));
        assert_eq!(b.len(), 7);
    }

    #[test]
    fn distances() {
        let g = graph(GeneratorKind::Adjacent, 6);
        let e = g.identity();
        assert_eq!(g.distance(&e, &e).unwrap(), 0);
        let s: Permutation = "[2,1,3,4,5,6]".parse().unwrap();
        assert_eq!(g.distance(&e, &s).unwrap(), 1);
        let rev: Permutation = "[6,5,4,3,2,1]".parse().unwrap();
        assert_eq!(g.distance(&e, &rev).unwrap(), 15);
        assert_eq!(g.distance(&rev, &e).unwrap(), 15);
    }

    #[test]
    fn unreachable_with_degenerate_generators() {
        let t: Permutation = "[2,1,3]".parse().unwrap();
        let g = CayleyGraph::new(GeneratorSet::explicit(vec![t]).unwrap());
        let c: Permutation = "[1,3,2]".parse().unwrap();
        assert_eq!(g.distance(&g.identity(), &c), Err(Error::Unreachable));
        assert!(!g.generates_symmetric_group().unwrap());
    }

    #[test]
    fn intersections() {
        let g = graph(GeneratorKind::AllTranspositions, 5);
        let e = g.identity();
        let b = g.ball(&e, 1).unwrap();
        assert_eq!(CayleyGraph::intersection_size(&b, &b).unwrap(), b.len());
        let three: Permutation = "[2,3,1,4,5]".parse().unwrap();
        let b3 = g.ball(&three, 1).unwrap();
        assert_eq!(CayleyGraph::intersection_size(&b, &b3).unwrap(), 3);
        let far: Permutation = "[2,3,4,5,1]".parse().unwrap();
        let bf = g.ball(&far, 1).unwrap();
        assert_eq!(CayleyGraph::intersection_size(&b, &bf).unwrap(), 0);
        let other = graph(GeneratorKind::Adjacent, 5);
        let bo = other.ball(&e, 1).unwrap();
        assert!(CayleyGraph::intersection_size(&b, &bo).is_err());
    }

    #[test]
    fn lambda_mu_values() {
        for n in 3..=7 {
            let lm = graph(GeneratorKind::AllTranspositions, n).lambda_mu();
            assert_eq!((lm.lambda, lm.mu), (0, 3));
            let lm = graph(GeneratorKind::Adjacent, n).lambda_mu();
            assert_eq!((lm.lambda, lm.mu), (0, if n >= 4 { 2 } else { 1 }));
        }
        for n in 4..=7 {
            let lm = graph(GeneratorKind::Prefix, n).lambda_mu();
            assert_eq!((lm.lambda, lm.mu), (0, 1));
        }
    }

    #[test]
    fn small_n_values() {
        let g = graph(GeneratorKind::AllTranspositions, 5);
        assert_eq!(g.n_s_value(2, 4).unwrap().unwrap().value, 20);
        assert_eq!(g.n_value(2).unwrap().value, 27);
        let g = graph(GeneratorKind::AllTranspositions, 4);
        assert_eq!(g.n_s_value(2, 3).unwrap().unwrap().value, 12);
        assert!(g.n_s_value(2, 4).unwrap().is_none(), "S_4 is empty in Sym_4(T)");
    }

    #[test]
    fn local_params_of_transposition() {
        for n in 3..=6 {
            let g = graph(GeneratorKind::AllTranspositions, n);
            let t = Permutation::transposition(n, 1, 2).unwrap();
            let lp = g.local_params(&t).unwrap();
            assert_eq!((lp.c, lp.a, lp.b), (1, 0, (n * n - n - 2) / 2));
        }
    }

    #[test]
    fn diameters() {
        assert_eq!(graph(GeneratorKind::AllTranspositions, 5).diameter().unwrap(), 4);
        assert_eq!(graph(GeneratorKind::Adjacent, 5).diameter().unwrap(), 10);
        assert_eq!(graph(GeneratorKind::Prefix, 5).diameter().unwrap(), 6);
        let big = graph(GeneratorKind::Adjacent, 9);
        assert!(matches!(big.diameter(), Err(Error::Capacity { .. })));
    }

    #[test]
    fn cycles_and_bipartite_subgraphs() {
        let st5 = graph(GeneratorKind::Prefix, 5);
        let found = st5.cycle_lengths_present(&[3, 4, 5, 6, 7]).unwrap();
        assert_eq!(
            found.values().copied().collect::<Vec<_>>(),
            [false, false, false, true, false]
        );
        let t4 = graph(GeneratorKind::AllTranspositions, 4);
        assert!(t4.cycle_lengths_present(&[4]).unwrap()[&4]);
        let e5 = Permutation::identity(5).unwrap();
        let t5 = graph(GeneratorKind::AllTranspositions, 5);
        assert_eq!(t5.complete_bipartite_count(3, 3, &e5).unwrap(), 10);
        assert_eq!(t5.complete_bipartite_count(2, 4, &e5).unwrap(), 0);
        let b5 = graph(GeneratorKind::Adjacent, 5);
        assert_eq!(b5.complete_bipartite_count(2, 2, &e5).unwrap(), 3);
        assert_eq!(b5.complete_bipartite_count(2, 3, &e5).unwrap(), 0);
    }

    #[test]
    fn not_distance_regular() {
        for kind in GeneratorKind::NAMED {
            let g = graph(kind, 4);
            assert!(!g.distance_regularity().unwrap().is_regular(), "{kind}");
        }
        // Sym_3 with star generators is a hexagon, which is distance-regular.
        assert!(graph(GeneratorKind::Prefix, 3)
            .distance_regularity()
            .unwrap()
            .is_regular());
    }
}
