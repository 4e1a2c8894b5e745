//! A minimal adjacency trait and the local searches shared by Cayley graphs
//! and explicit small graphs.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;

pub trait Graph {
    type Vertex: Copy + Eq + Hash + Ord + Debug;

    fn neighbors(&self, v: &Self::Vertex) -> Vec<Self::Vertex>;
}

/// Distances from `source` up to `max_depth`.
pub fn bfs_distances<G: Graph>(g: &G, source: G::Vertex, max_depth: usize) -> HashMap<G::Vertex, usize> {
    let mut dist = HashMap::from([(source, 0)]);
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        if d == max_depth {
            continue;
        }
        for w in g.neighbors(&v) {
            if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(w) {
                e.insert(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Whether some simple cycle of exactly `len` edges passes through `start`.
pub fn has_cycle_through<G: Graph>(g: &G, start: G::Vertex, len: usize) -> bool {
    if len < 3 {
        return false;
    }
    // A vertex on such a cycle is within len/2 of start.
    let dist = bfs_distances(g, start, len / 2);
    let mut on_path = HashSet::from([start]);
    cycle_dfs(g, start, start, 0, len, &dist, &mut on_path)
}

fn cycle_dfs<G: Graph>(
    g: &G,
    start: G::Vertex,
    v: G::Vertex,
    edges: usize,
    len: usize,
    dist: &HashMap<G::Vertex, usize>,
    on_path: &mut HashSet<G::Vertex>,
) -> bool {
    let nbrs = g.neighbors(&v);
    if edges == len - 1 {
        return nbrs.contains(&start);
    }
    for w in nbrs {
        if on_path.contains(&w) {
            continue;
        }
        match dist.get(&w) {
            Some(&d) if d < len - edges => {}
            _ => continue,
        }
        on_path.insert(w);
        let found = cycle_dfs(g, start, w, edges + 1, len, dist, on_path);
        on_path.remove(&w);
        if found {
            return true;
        }
    }
    false
}

/// Number of (not necessarily induced) `K_{p,q}` subgraphs containing `at`.
pub fn complete_bipartite_count<G: Graph>(g: &G, p: usize, q: usize, at: G::Vertex) -> u64 {
    if p == 0 || q == 0 {
        return 0;
    }
    let mut total = count_with_side(g, at, p, q);
    if p != q {
        total += count_with_side(g, at, q, p);
    }
    total
}

/// Sets `A ∋ at` of size `a` together with `b`-subsets of their common
/// neighbourhood.
fn count_with_side<G: Graph>(g: &G, at: G::Vertex, a: usize, b: usize) -> u64 {
    let mut base = g.neighbors(&at);
    base.sort();
    base.dedup();
    if a == 1 {
        return binomial(base.len(), b);
    }
    let mut shared: HashMap<G::Vertex, usize> = HashMap::new();
    for u in &base {
        for w in g.neighbors(u) {
            if w != at {
                *shared.entry(w).or_default() += 1;
            }
        }
    }
    let mut candidates: Vec<G::Vertex> = shared.into_iter().filter(|&(_, c)| c >= b).map(|(w, _)| w).collect();
    candidates.sort();
    let nbr_sets: Vec<Vec<G::Vertex>> = candidates
        .iter()
        .map(|w| {
            let mut ns = g.neighbors(w);
            ns.sort();
            ns.dedup();
            ns
        })
        .collect();
    let mut total = 0;
    choose_rec(&nbr_sets, 0, a - 1, &base, b, &mut total);
    total
}

fn choose_rec<V: Ord + Copy>(nbr_sets: &[Vec<V>], from: usize, left: usize, common: &[V], b: usize, total: &mut u64) {
    if common.len() < b {
        return;
    }
    if left == 0 {
        *total += binomial(common.len(), b);
        return;
    }
    for idx in from..nbr_sets.len() {
        let next = intersect_sorted(common, &nbr_sets[idx]);
        choose_rec(nbr_sets, idx + 1, left - 1, &next, b, total);
    }
}

pub(crate) fn intersect_sorted<V: Ord + Copy>(a: &[V], b: &[V]) -> Vec<V> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Cycle(usize);

    impl Graph for Cycle {
        type Vertex = usize;
        fn neighbors(&self, v: &usize) -> Vec<usize> {
            vec![(v + 1) % self.0, (v + self.0 - 1) % self.0]
        }
    }

    struct Complete(usize);

    impl Graph for Complete {
        type Vertex = usize;
        fn neighbors(&self, v: &usize) -> Vec<usize> {
            (0..self.0).filter(|w| w != v).collect()
        }
    }

    #[test]
    fn cycles_in_a_cycle() {
        let c6 = Cycle(6);
        for len in 3..=8 {
            assert_eq!(has_cycle_through(&c6, 0, len), len == 6, "len {len}");
        }
    }

    #[test]
    fn cycles_in_complete_graph() {
        let k5 = Complete(5);
        for len in 3..=5 {
            assert!(has_cycle_through(&k5, 2, len));
        }
        assert!(!has_cycle_through(&k5, 2, 6));
    }

    #[test]
    fn bipartite_counts_in_complete_graph() {
        // K_{2,2} through a vertex of K_4: 3 four-cycles.
        assert_eq!(complete_bipartite_count(&Complete(4), 2, 2, 0), 3);
        // K_{1,2} through a vertex of K_4: as centre C(3,2)=3, as leaf 3*2=6.
        assert_eq!(complete_bipartite_count(&Complete(4), 1, 2, 0), 9);
        assert_eq!(complete_bipartite_count(&Cycle(6), 2, 2, 0), 0);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 3), 10);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(20, 10), 184_756);
    }
}
