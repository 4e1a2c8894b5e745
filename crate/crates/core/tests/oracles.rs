//! Brute-force oracles over plain `Vec<usize>` permutations, checked
//! against the library. Nothing here calls into the search engine to
//! produce an expected value.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use permrecon::cayley::Witness;
use permrecon::closed_forms::transposition_local_params;
use permrecon::reconstruct::{self, ChannelSpec, ErrorCount, ExperimentConfig, Mode, Status};
use permrecon::{min_transposition_distance, CayleyGraph, CycleType, GeneratorKind, Permutation};
use proptest::prelude::*;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Perm = Vec<usize>;

const KINDS: [GeneratorKind; 3] = [
    GeneratorKind::AllTranspositions,
    GeneratorKind::Adjacent,
    GeneratorKind::Prefix,
];

fn swaps(kind: GeneratorKind, n: usize) -> Vec<(usize, usize)> {
    match kind {
        GeneratorKind::AllTranspositions => (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect(),
        GeneratorKind::Adjacent => (0..n - 1).map(|i| (i, i + 1)).collect(),
        GeneratorKind::Prefix => (1..n).map(|i| (0, i)).collect(),
        GeneratorKind::Explicit => unreachable!(),
    }
}

fn all_perms(n: usize) -> Vec<Perm> {
    fn rec(prefix: &mut Perm, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Right multiplication by a position swap.
fn swapped(p: &Perm, (i, j): (usize, usize)) -> Perm {
    let mut q = p.clone();
    q.swap(i, j);
    q
}

/// Plain BFS distances from `src`, up to `limit`.
fn bfs(src: &Perm, gens: &[(usize, usize)], limit: usize) -> HashMap<Perm, usize> {
    let mut dist = HashMap::from([(src.clone(), 0)]);
    let mut queue = VecDeque::from([src.clone()]);
    while let Some(p) = queue.pop_front() {
        let d = dist[&p];
        if d == limit {
            continue;
        }
        for &g in gens {
            let q = swapped(&p, g);
            if !dist.contains_key(&q) {
                dist.insert(q.clone(), d + 1);
                queue.push_back(q);
            }
        }
    }
    dist
}

fn ball(src: &Perm, gens: &[(usize, usize)], r: usize) -> HashSet<Perm> {
    bfs(src, gens, r).into_keys().collect()
}

fn cycle_lengths(p: &Perm) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        let mut len = 0;
        let mut k = s;
        while !seen[k] {
            seen[k] = true;
            k = p[k];
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn lib(p: &Perm) -> Permutation {
    let images: Vec<u8> = p.iter().map(|&v| v as u8).collect();
    Permutation::from_zero_based(&images).unwrap()
}

fn plain(p: &Permutation) -> Perm {
    p.images().iter().map(|&v| v as usize).collect()
}

fn identity(n: usize) -> Perm {
    (0..n).collect()
}

fn graph(kind: GeneratorKind, n: usize) -> CayleyGraph {
    CayleyGraph::named(kind, n).unwrap()
}

#[test]
fn distances_match_plain_bfs() {
    for kind in KINDS {
        for n in 3..=5 {
            let g = graph(kind, n);
            let gens = swaps(kind, n);
            let dist = bfs(&identity(n), &gens, usize::MAX);
            assert_eq!(dist.len() as u64, (1..=n as u64).product::<u64>());
            let table = g.distance_table().unwrap();
            for (p, &d) in &dist {
                assert_eq!(table.distance(&lib(p)), d, "{kind} {p:?}");
            }
            // Arbitrary pairs through the bidirectional search.
            let perms = all_perms(n);
            for x in perms.iter().step_by(7) {
                let from_x = bfs(x, &gens, usize::MAX);
                for y in perms.iter().step_by(5) {
                    assert_eq!(g.distance(&lib(x), &lib(y)).unwrap(), from_x[y]);
                }
            }
        }
    }
}

#[test]
fn transposition_distance_is_degree_minus_cycles() {
    for n in 2..=6 {
        let dist = bfs(&identity(n), &swaps(GeneratorKind::AllTranspositions, n), usize::MAX);
        for (p, &d) in &dist {
            assert_eq!(d, n - cycle_lengths(p).len());
            let e = Permutation::identity(n).unwrap();
            assert_eq!(min_transposition_distance(&e, &lib(p)).unwrap(), d);
        }
    }
}

#[test]
fn class_enumeration_matches_filtering() {
    for n in 1..=6 {
        let mut by_type: BTreeMap<Vec<usize>, Vec<Perm>> = BTreeMap::new();
        for p in all_perms(n) {
            by_type.entry(cycle_lengths(&p)).or_default().push(p);
        }
        let types = CycleType::all(n).unwrap();
        assert_eq!(types.len(), by_type.len());
        for ct in types {
            let mut got: Vec<Perm> = ct.enumerate_class().unwrap().iter().map(plain).collect();
            got.sort();
            let mut want = by_type[&ct.lengths()].clone();
            want.sort();
            assert_eq!(got, want, "{ct}");
            assert_eq!(ct.class_size().unwrap(), want.len() as u64);
        }
    }
}

/// Every ordered word of `len` transpositions, multiplied out.
fn words(n: usize, len: usize) -> HashMap<Perm, u128> {
    let gens = swaps(GeneratorKind::AllTranspositions, n);
    let mut out = HashMap::new();
    let mut stack: Vec<(Perm, usize)> = vec![(identity(n), 0)];
    while let Some((p, depth)) = stack.pop() {
        if depth == len {
            *out.entry(p).or_default() += 1;
            continue;
        }
        for &g in &gens {
            stack.push((swapped(&p, g), depth + 1));
        }
    }
    out
}

#[test]
fn factorization_counts_match_word_enumeration() {
    for n in 2..=5 {
        for ct in CycleType::all(n).unwrap() {
            let d = ct.transposition_length();
            let rep = plain(&ct.representative());
            let count = words(n, d).get(&rep).copied().unwrap_or(0);
            assert_eq!(ct.denes_count().unwrap().count, count, "{ct}");
            assert_eq!(
                permrecon::factorization::count_minimal_factorizations(&ct.representative()).unwrap(),
                count
            );
        }
    }
}

#[test]
fn product_spheres_match_bfs_spheres() {
    for kind in KINDS {
        let n = 5;
        let g = graph(kind, n);
        let dist = bfs(&identity(n), &swaps(kind, n), 4);
        for i in 0..=4 {
            let want: HashSet<Perm> = dist.iter().filter(|(_, &d)| d == i).map(|(p, _)| p.clone()).collect();
            let got: HashSet<Perm> = g.product_sphere(i).unwrap().iter().map(plain).collect();
            assert_eq!(got, want, "{kind} i={i}");
        }
    }
}

/// `(λ, μ)` from common neighbourhoods over all vertex pairs.
fn lambda_mu_by_neighbourhoods(kind: GeneratorKind, n: usize) -> (usize, usize) {
    let gens = swaps(kind, n);
    let nbrs = |p: &Perm| -> HashSet<Perm> { gens.iter().map(|&g| swapped(p, g)).collect() };
    let (mut lambda, mut mu) = (0, 0);
    for x in all_perms(n) {
        let nx = nbrs(&x);
        for (y, d) in bfs(&x, &gens, 2) {
            let common = nx.intersection(&nbrs(&y)).count();
            match d {
                1 => lambda = lambda.max(common),
                2 => mu = mu.max(common),
                _ => {}
            }
        }
    }
    (lambda, mu)
}

#[test]
fn lambda_mu_match_neighbourhoods() {
    for kind in KINDS {
        for n in 3..=5 {
            let lm = graph(kind, n).lambda_mu();
            assert_eq!(
                (lm.lambda as usize, lm.mu as usize),
                lambda_mu_by_neighbourhoods(kind, n),
                "{kind} n={n}"
            );
        }
    }
}

/// `N_s(Γ, r)` from all pairs `(e, y)` with plain balls.
fn plain_n_s(kind: GeneratorKind, n: usize, r: usize) -> BTreeMap<usize, usize> {
    let gens = swaps(kind, n);
    let e = identity(n);
    let be = ball(&e, &gens, r);
    let mut out = BTreeMap::new();
    for (y, s) in bfs(&e, &gens, 2 * r) {
        if s == 0 {
            continue;
        }
        let size = ball(&y, &gens, r).intersection(&be).count();
        let v = out.entry(s).or_insert(0);
        *v = size.max(*v);
    }
    out
}

#[test]
fn n_s_values_match_plain_balls() {
    for kind in KINDS {
        for n in 3..=5 {
            for r in 1..=2 {
                let g = graph(kind, n);
                let got: BTreeMap<usize, usize> = g
                    .n_s_values(r)
                    .unwrap()
                    .into_iter()
                    .filter_map(|(s, v)| v.map(|v| (s, v.value as usize)))
                    .collect();
                assert_eq!(got, plain_n_s(kind, n, r), "{kind} n={n} r={r}");
            }
        }
    }
}

#[test]
fn transposition_witness_classes_attain_their_value() {
    let g = graph(GeneratorKind::AllTranspositions, 5);
    let gens = swaps(GeneratorKind::AllTranspositions, 5);
    let be = ball(&identity(5), &gens, 2);
    for (_, v) in g.n_s_values(2).unwrap() {
        let v = v.unwrap();
        for w in &v.witnesses {
            let Witness::Class(ct) = w else { panic!("{w:?}") };
            for y in ct.enumerate_class().unwrap() {
                let size = ball(&plain(&y), &gens, 2).intersection(&be).count();
                assert_eq!(size as u64, v.value);
            }
        }
    }
}

#[test]
fn local_params_follow_cycle_type_exhaustively() {
    for n in 3..=6 {
        let gens = swaps(GeneratorKind::AllTranspositions, n);
        let dist = bfs(&identity(n), &gens, usize::MAX);
        for (p, &i) in &dist {
            if i == 0 {
                continue;
            }
            let (mut c, mut a, mut b) = (0, 0, 0);
            for &g in &gens {
                match dist[&swapped(p, g)] {
                    d if d + 1 == i => c += 1,
                    d if d == i => a += 1,
                    _ => b += 1,
                }
            }
            let (fc, fb) = transposition_local_params(&lib(p).cycle_type()).unwrap();
            assert_eq!((c as u64, a, b as u64), (fc, 0, fb), "{p:?}");
        }
    }
}

#[test]
fn class_distance_profile_depends_only_on_class() {
    let n = 5;
    let gens = swaps(GeneratorKind::AllTranspositions, n);
    let perms = all_perms(n);
    let mut seen: HashMap<(Vec<usize>, Vec<usize>), Vec<usize>> = HashMap::new();
    for pi in &perms {
        let dist = bfs(pi, &gens, usize::MAX);
        let mut per_class: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for (sigma, d) in &dist {
            per_class.entry(cycle_lengths(sigma)).or_insert_with(|| vec![0; n])[*d] += 1;
        }
        for (class, profile) in per_class {
            let key = (cycle_lengths(pi), class);
            let first = seen.entry(key).or_insert_with(|| profile.clone());
            assert_eq!(*first, profile);
        }
    }
}

#[test]
fn every_threshold_sized_subset_reconstructs_uniquely() {
    let cases = [
        (GeneratorKind::AllTranspositions, 3, 1),
        (GeneratorKind::AllTranspositions, 4, 1),
        (GeneratorKind::AllTranspositions, 4, 2),
        (GeneratorKind::Adjacent, 3, 1),
        (GeneratorKind::Adjacent, 4, 1),
        (GeneratorKind::Adjacent, 4, 2),
        (GeneratorKind::Prefix, 4, 1),
        (GeneratorKind::Prefix, 4, 2),
    ];
    for (kind, n, r) in cases {
        let g = graph(kind, n);
        let threshold = plain_n_s(kind, n, r).values().copied().max().unwrap();
        let x = all_perms(n)[n + 1].clone();
        let members: Vec<Perm> = ball(&x, &swaps(kind, n), r).into_iter().collect();
        let k = threshold + 1;
        let mut subsets = 0;
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let pats: Vec<Permutation> = idx.iter().map(|&i| lib(&members[i])).collect();
            let res = reconstruct::reconstruct(&g, &pats, r).unwrap();
            assert_eq!(res.candidates, vec![lib(&x)], "{kind} n={n} r={r}");
            subsets += 1;
            // Next k-combination of 0..members.len().
            let m = members.len();
            let Some(pos) = (0..k).rev().find(|&p| idx[p] < m - k + p) else {
                break;
            };
            idx[pos] += 1;
            for q in pos + 1..k {
                idx[q] = idx[q - 1] + 1;
            }
        }
        assert!(subsets >= 1);
    }
}

#[test]
fn random_threshold_subsets_reconstruct_uniquely() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for kind in KINDS {
        for n in 5..=6 {
            for r in 1..=2 {
                let gens = swaps(kind, n);
                let threshold = plain_n_s(kind, n, r).values().copied().max().unwrap();
                let e = identity(n);
                let members: Vec<Perm> = ball(&e, &gens, r).into_iter().collect();
                let balls: Vec<HashSet<Perm>> = members.iter().map(|p| ball(p, &gens, r)).collect();
                let trials = if kind == GeneratorKind::AllTranspositions && n == 6 && r == 2 {
                    20_000
                } else {
                    100_000
                };
                for _ in 0..trials {
                    let chosen: Vec<usize> = (0..members.len())
                        .collect::<Vec<_>>()
                        .choose_multiple(&mut rng, threshold + 1)
                        .copied()
                        .collect();
                    let mut cand: HashSet<&Perm> = balls[chosen[0]].iter().collect();
                    for &c in &chosen[1..] {
                        cand.retain(|p| balls[c].contains(*p));
                    }
                    assert_eq!(cand.len(), 1, "{kind} n={n} r={r}");
                    assert!(cand.contains(&e));
                }
            }
        }
    }
}

#[test]
fn maximal_intersection_is_ambiguous() {
    for kind in KINDS {
        for n in 4..=6 {
            if kind == GeneratorKind::Prefix && n < 4 {
                continue;
            }
            for r in 1..=2 {
                let g = graph(kind, n);
                let gens = swaps(kind, n);
                let x = all_perms(n)[3].clone();
                let (other, pats) = reconstruct::ambiguity_witness(&g, &lib(&x), r).unwrap();
                let threshold = plain_n_s(kind, n, r).values().copied().max().unwrap();
                assert_eq!(pats.len(), threshold, "{kind} n={n} r={r}");
                let bx = ball(&x, &gens, r);
                let bo = ball(&plain(&other), &gens, r);
                for p in &pats {
                    assert!(bx.contains(&plain(p)) && bo.contains(&plain(p)));
                }
                let res = reconstruct::reconstruct(&g, &pats, r).unwrap();
                assert_eq!(res.status, Status::Ambiguous);
            }
        }
    }
}

#[test]
fn experiments_are_deterministic_across_thread_counts() {
    let g = graph(GeneratorKind::Adjacent, 5);
    let config = ExperimentConfig {
        r: 2,
        trials: 200,
        seed: 99,
        m: 9,
        mode: Mode::Honest,
        error_count: ErrorCount::UniformUpTo,
    };
    let parallel = reconstruct::run_experiment(&g, config).unwrap();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let serial = pool.install(|| reconstruct::run_experiment(&g, config).unwrap());
    assert_eq!(parallel.to_jsonl(), serial.to_jsonl());
    assert_eq!(parallel.unique_rate, 1.0);
    assert!(parallel.sound);
}

#[test]
fn cache_does_not_change_results() {
    let dir = tempfile::tempdir().unwrap();
    for kind in KINDS {
        let plain_graph = graph(kind, 6);
        let cached = graph(kind, 6).with_cache_dir(dir.path());
        let reloaded = graph(kind, 6).with_cache_dir(dir.path());
        let want = plain_graph.n_s_values(2).unwrap();
        assert_eq!(cached.n_s_values(2).unwrap(), want);
        assert_eq!(reloaded.n_s_values(2).unwrap(), want);
    }
    assert!(std::fs::read_dir(dir.path()).unwrap().count() >= 6);
}

fn perm_strategy(max_n: usize) -> impl Strategy<Value = Perm> {
    (1..=max_n).prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
}

fn pair_strategy(n: usize) -> impl Strategy<Value = (Perm, Perm)> {
    let one = || Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
    (one(), one())
}

proptest! {
    #[test]
    fn rank_round_trips(p in perm_strategy(12)) {
        let q = lib(&p);
        prop_assert_eq!(Permutation::unrank(p.len(), q.rank()).unwrap(), q);
        prop_assert!(q.rank() < (1..=p.len() as u64).product::<u64>());
    }

    #[test]
    fn text_round_trips(p in perm_strategy(20)) {
        let q = lib(&p);
        prop_assert_eq!(q.to_string().parse::<Permutation>().unwrap(), q);
        prop_assert_eq!(q.cycle_type().to_string().parse::<CycleType>().unwrap(), q.cycle_type());
    }

    #[test]
    fn compose_matches_plain((a, b) in pair_strategy(9)) {
        let want: Perm = b.iter().map(|&k| a[k]).collect();
        let (x, y) = (lib(&a), lib(&b));
        prop_assert_eq!(plain(&x.compose(&y).unwrap()), want);
        prop_assert!(x.compose(&x.inverse()).unwrap().is_identity());
        prop_assert_eq!(x.cycle_type().lengths(), cycle_lengths(&a));
    }

    #[test]
    fn overlaps_are_translation_invariant((a, b) in pair_strategy(5), r in 1usize..=2, k in 0usize..3) {
        let kind = KINDS[k];
        let gens = swaps(kind, 5);
        let direct = ball(&a, &gens, r).intersection(&ball(&b, &gens, r)).count();
        let g = graph(kind, 5);
        let (x, y) = (lib(&a), lib(&b));
        let translated = g.identity_overlap(&x.inverse().compose(&y).unwrap(), r).unwrap();
        prop_assert_eq!(direct as u64, translated);
    }

    #[test]
    fn extra_patterns_never_add_candidates(seed in any::<u64>(), k in 0usize..3, m in 1usize..8) {
        let kind = KINDS[k];
        let g = graph(kind, 5);
        let spec = ChannelSpec::new(2, seed);
        let mut rng = spec.rng(0);
        let mut x: Perm = identity(5);
        x.shuffle(&mut rng);
        let pats = reconstruct::generate_patterns(&g, &lib(&x), &spec, m + 1, &mut rng).unwrap();
        let fewer = reconstruct::reconstruct(&g, &pats[..m], 2).unwrap();
        let more = reconstruct::reconstruct(&g, &pats, 2).unwrap();
        prop_assert!(more.candidates.iter().all(|c| fewer.candidates.contains(c)));
        prop_assert!(more.candidates.contains(&lib(&x)));
    }
}
