//! A transposition-error channel and the ball-intersection reconstructor.
//!
//! A source permutation `x` is sent through the channel several times; each
//! output is `x` multiplied on the right by at most `r` generators. Given
//! distinct outputs, the candidates for `x` are the vertices within distance
//! `r` of every output. `N(Γ, r) + 1` distinct outputs always leave exactly
//! one candidate.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cayley::{CayleyGraph, Witness};
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Distinctness {
    RequireDistinct,
    AllowRepeats,
}

/// How many generator applications a single transmission suffers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ErrorCount {
    /// Uniform on `0..=r`.
    UniformUpTo,
    /// Exactly `r` applications (the walk may still end closer than `r`).
    Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChannelSpec {
    pub max_errors: usize,
    pub seed: u64,
    pub distinctness: Distinctness,
    pub error_count: ErrorCount,
}

impl ChannelSpec {
    pub fn new(max_errors: usize, seed: u64) -> Self {
        Self {
            max_errors,
            seed,
            distinctness: Distinctness::RequireDistinct,
            error_count: ErrorCount::UniformUpTo,
        }
    }

    /// ChaCha8 seeded with `seed`, on stream `index`. Independent streams
    /// make parallel and serial runs draw identical values.
    pub fn rng(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }
}

/// One transmission of `x`.
pub fn distort<R: Rng>(g: &CayleyGraph, x: &Permutation, spec: &ChannelSpec, rng: &mut R) -> Permutation {
    let j = match spec.error_count {
        ErrorCount::UniformUpTo => rng.random_range(0..=spec.max_errors),
        ErrorCount::Exact => spec.max_errors,
    };
    let k = g.valency();
    (0..j).fold(*x, |p, _| g.generators().apply(&p, rng.random_range(0..k)))
}

/// `m` channel outputs of `x`, all inside `B_r(x)`.
///
/// Under [`Distinctness::RequireDistinct`] outputs are drawn by rejection;
/// if rejection stalls the remainder is filled from a shuffled enumeration
/// of the ball.
pub fn generate_patterns<R: Rng>(
    g: &CayleyGraph,
    x: &Permutation,
    spec: &ChannelSpec,
    m: usize,
    rng: &mut R,
) -> Result<Vec<Permutation>> {
    let r = spec.max_errors;
    let mut out = Vec::with_capacity(m);
    match spec.distinctness {
        Distinctness::AllowRepeats => {
            for _ in 0..m {
                out.push(distort(g, x, spec, rng));
            }
        }
        Distinctness::RequireDistinct => {
            let ball_size = g.identity_ball(r)?.len();
            if m > ball_size {
                return Err(Error::Domain(format!(
                    "{m} distinct patterns requested but B_{r} has {ball_size} vertices"
                )));
            }
            let mut seen = HashSet::with_capacity(m);
            let budget = 16 * m + 64;
            let mut attempts = 0;
            while out.len() < m && attempts < budget {
                attempts += 1;
                let p = distort(g, x, spec, rng);
                if seen.insert(p) {
                    out.push(p);
                }
            }
            if out.len() < m {
                let mut rest: Vec<Permutation> = g.ball(x, r)?.iter().copied().filter(|p| !seen.contains(p)).collect();
                rest.sort();
                rest.shuffle(rng);
                out.extend(rest.into_iter().take(m - out.len()));
            }
        }
    }
    for p in &out {
        debug_assert!(g.within(x, p, r).unwrap_or(false));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Unique,
    Ambiguous,
    Inconsistent,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Unique => "unique",
            Status::Ambiguous => "ambiguous",
            Status::Inconsistent => "inconsistent",
        })
    }
}

impl Status {
    fn from_count(c: usize) -> Self {
        match c {
            0 => Status::Inconsistent,
            1 => Status::Unique,
            _ => Status::Ambiguous,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReconstructionResult {
    pub status: Status,
    /// Sorted.
    pub candidates: Vec<Permutation>,
    pub patterns_used: usize,
}

/// Candidate-set sizes after each prefix of `patterns`.
fn candidates_by_prefix(g: &CayleyGraph, patterns: &[Permutation], r: usize) -> Result<(Vec<Permutation>, Vec<usize>)> {
    let first = patterns.first().ok_or_else(|| Error::Domain("no patterns".into()))?;
    for p in patterns {
        if p.degree() != g.degree() {
            return Err(Error::DegreeMismatch {
                left: g.degree(),
                right: p.degree(),
            });
        }
    }
    // Every ball of radius r has the same size, so the first is as small as any.
    let mut candidates: Vec<Permutation> = g.ball(first, r)?.iter().copied().collect();
    let mut sizes = vec![candidates.len()];
    for p in &patterns[1..] {
        let mut kept = Vec::with_capacity(candidates.len());
        for c in candidates {
            if g.within(&c, p, r)? {
                kept.push(c);
            }
        }
        candidates = kept;
        sizes.push(candidates.len());
    }
    candidates.sort();
    Ok((candidates, sizes))
}

/// `∩_i B_r(patterns[i])`.
pub fn reconstruct(g: &CayleyGraph, patterns: &[Permutation], r: usize) -> Result<ReconstructionResult> {
    let (candidates, _) = candidates_by_prefix(g, patterns, r)?;
    Ok(ReconstructionResult {
        status: Status::from_count(candidates.len()),
        candidates,
        patterns_used: patterns.len(),
    })
}

/// Parses one permutation per line; blank lines and `#` comments are
/// skipped.
pub fn parse_patterns(text: &str) -> Result<Vec<Permutation>> {
    let mut out: Vec<Permutation> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let p: Permutation = line.parse().map_err(|e: Error| Error::Parse {
            line: idx + 1,
            msg: e.to_string(),
        })?;
        if let Some(first) = out.first() {
            if first.degree() != p.degree() {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("degree {} differs from {}", p.degree(), first.degree()),
                });
            }
        }
        out.push(p);
    }
    if out.is_empty() {
        return Err(Error::Parse {
            line: 0,
            msg: "no patterns".into(),
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Random sources, channel-generated patterns.
    Honest,
    /// Patterns are the whole intersection `B_r(x) ∩ B_r(y)` for a pair
    /// attaining `N(Γ, r)`.
    Adversarial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExperimentConfig {
    pub r: usize,
    pub trials: u64,
    pub seed: u64,
    /// Patterns per trial (honest mode).
    pub m: usize,
    pub mode: Mode,
    pub error_count: ErrorCount,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialRecord {
    pub trial: u64,
    pub source: Permutation,
    pub patterns: Vec<Permutation>,
    pub status: Status,
    pub candidate_count: usize,
    pub source_found: bool,
    /// Shortest prefix of `patterns` that already pins the source down.
    pub min_unique_m: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentSummary {
    pub n: usize,
    pub generator_kind: String,
    pub config: ExperimentConfig,
    pub unique: u64,
    pub ambiguous: u64,
    pub inconsistent: u64,
    pub unique_rate: f64,
    /// The source was among the candidates in every trial.
    pub sound: bool,
    pub min_unique_m_histogram: BTreeMap<usize, u64>,
    #[serde(skip)]
    pub records: Vec<TrialRecord>,
}

impl ExperimentSummary {
    /// One JSON object per trial.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("record serializes"));
            out.push('\n');
        }
        out
    }
}

fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Permutation {
    let mut images: Vec<u8> = (0..n as u8).collect();
    images.shuffle(rng);
    Permutation::from_zero_based(&images).expect("shuffle of 0..n")
}

/// A pair `(e, y)` attaining `N(Γ, r)`.
pub fn maximal_pair(g: &CayleyGraph, r: usize) -> Result<Permutation> {
    let nv = g.n_value(r)?;
    let witness = nv
        .attained
        .first()
        .and_then(|v| v.witnesses.first())
        .ok_or_else(|| Error::Domain("graph has a single vertex".into()))?;
    match witness {
        Witness::Class(t) => Ok(t.representative()),
        Witness::Vertex(y) => Ok(*y),
        Witness::Pair(..) => Err(Error::Domain("pair witness on a Cayley graph".into())),
    }
}

/// `N(Γ, r)` distinct patterns that fit in two balls at once:
/// `B_r(x) ∩ B_r(x·y)` for the maximal pair `(e, y)`.
pub fn ambiguity_witness(g: &CayleyGraph, x: &Permutation, r: usize) -> Result<(Permutation, Vec<Permutation>)> {
    let y = maximal_pair(g, r)?;
    let other = x.compose(&y)?;
    let ball = g.ball(x, r)?;
    let mut patterns = Vec::new();
    for p in ball.iter() {
        if g.within(&other, p, r)? {
            patterns.push(*p);
        }
    }
    Ok((other, patterns))
}

pub fn run_experiment(g: &CayleyGraph, config: ExperimentConfig) -> Result<ExperimentSummary> {
    let spec = ChannelSpec {
        max_errors: config.r,
        seed: config.seed,
        distinctness: Distinctness::RequireDistinct,
        error_count: config.error_count,
    };
    let n = g.degree();
    // Warm shared state before fanning out.
    g.identity_ball(config.r)?;
    let adversary = match config.mode {
        Mode::Adversarial => Some(maximal_pair(g, config.r)?),
        Mode::Honest => None,
    };
    let records: Vec<TrialRecord> = (0..config.trials)
        .into_par_iter()
        .map(|trial| -> Result<TrialRecord> {
            let mut rng = spec.rng(trial);
            let source = random_permutation(n, &mut rng);
            let patterns = match adversary {
                None => generate_patterns(g, &source, &spec, config.m, &mut rng)?,
                Some(y) => {
                    let other = source.compose_unchecked(&y);
                    let mut pats = Vec::new();
                    for p in g.ball(&source, config.r)?.iter() {
                        if g.within(&other, p, config.r)? {
                            pats.push(*p);
                        }
                    }
                    pats
                }
            };
            let (candidates, sizes) = candidates_by_prefix(g, &patterns, config.r)?;
            Ok(TrialRecord {
                trial,
                source,
                status: Status::from_count(candidates.len()),
                candidate_count: candidates.len(),
                source_found: candidates.binary_search(&source).is_ok(),
                min_unique_m: sizes.iter().position(|&s| s == 1).map(|i| i + 1),
                patterns,
            })
        })
        .collect::<Result<_>>()?;
    let count = |s: Status| records.iter().filter(|r| r.status == s).count() as u64;
    let mut histogram = BTreeMap::new();
    for r in &records {
        if let Some(m) = r.min_unique_m {
            *histogram.entry(m).or_default() += 1;
        }
    }
    let unique = count(Status::Unique);
    Ok(ExperimentSummary {
        n,
        generator_kind: g.kind().short_name().to_string(),
        config,
        unique,
        ambiguous: count(Status::Ambiguous),
        inconsistent: count(Status::Inconsistent),
        unique_rate: if config.trials == 0 {
            0.0
        } else {
            unique as f64 / config.trials as f64
        },
        sound: records.iter().all(|r| r.source_found),
        min_unique_m_histogram: histogram,
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::GeneratorKind;

    fn t(n: usize) -> CayleyGraph {
        CayleyGraph::named(GeneratorKind::AllTranspositions, n).unwrap()
    }

    #[test]
    fn zero_errors_is_identity_channel() {
        let g = t(5);
        let spec = ChannelSpec::new(0, 1);
        let x: Permutation = "[3,1,4,2,5]".parse().unwrap();
        let mut rng = spec.rng(0);
        for _ in 0..20 {
            assert_eq!(distort(&g, &x, &spec, &mut rng), x);
        }
    }

    #[test]
    fn seeded_channel_is_deterministic() {
        let g = t(6);
        let spec = ChannelSpec::new(2, 42);
        let x: Permutation = "[2,4,6,1,3,5]".parse().unwrap();
        let a = generate_patterns(&g, &x, &spec, 30, &mut spec.rng(3)).unwrap();
        let b = generate_patterns(&g, &x, &spec, 30, &mut spec.rng(3)).unwrap();
        assert_eq!(a, b);
        let c = generate_patterns(&g, &x, &spec, 30, &mut spec.rng(4)).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn full_ball_when_m_equals_ball_size() {
        let g = t(4);
        let spec = ChannelSpec::new(1, 9);
        let x: Permutation = "[3,1,4,2]".parse().unwrap();
        let mut pats = generate_patterns(&g, &x, &spec, 7, &mut spec.rng(0)).unwrap();
        pats.sort();
        let mut ball: Vec<_> = g.ball(&x, 1).unwrap().iter().copied().collect();
        ball.sort();
        assert_eq!(pats, ball);
        assert!(generate_patterns(&g, &x, &spec, 8, &mut spec.rng(0)).is_err());
    }

    #[test]
    fn four_neighbours_reconstruct_uniquely() {
        let g = t(4);
        let spec = ChannelSpec::new(1, 5);
        let x: Permutation = "[3,1,4,2]".parse().unwrap();
        for trial in 0..50 {
            let pats = generate_patterns(&g, &x, &spec, 4, &mut spec.rng(trial)).unwrap();
            let res = reconstruct(&g, &pats, 1).unwrap();
            assert_eq!(res.status, Status::Unique);
            assert_eq!(res.candidates, vec![x]);
        }
    }

    #[test]
    fn three_cycle_witness_is_ambiguous() {
        let g = t(5);
        let x: Permutation = "[2,5,3,1,4]".parse().unwrap();
        let (other, pats) = ambiguity_witness(&g, &x, 1).unwrap();
        assert_eq!(pats.len(), 3);
        assert_eq!(other.inverse().compose(&x).unwrap().cycle_type().to_string(), "1^2 3^1");
        let res = reconstruct(&g, &pats, 1).unwrap();
        assert_eq!(res.status, Status::Ambiguous);
        assert!(res.candidates.contains(&x) && res.candidates.contains(&other));
    }

    #[test]
    fn single_pattern_and_inconsistent_sets() {
        let g = t(4);
        let x: Permutation = "[1,2,3,4]".parse().unwrap();
        let res = reconstruct(&g, &[x], 1).unwrap();
        assert_eq!((res.status, res.candidates.len()), (Status::Ambiguous, 7));
        let far: Permutation = "[2,3,4,1]".parse().unwrap();
        let res = reconstruct(&g, &[x, far], 1).unwrap();
        assert_eq!(res.status, Status::Inconsistent);
        assert!(reconstruct(&g, &[], 1).is_err());
    }

    #[test]
    fn pattern_file() {
        let pats = parse_patterns("# patterns\n[1,2,3]\n\n[2,1,3] # one swap\n").unwrap();
        assert_eq!(pats.len(), 2);
        match parse_patterns("[1,2,3]\n[1,2]\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        match parse_patterns("[1,2,3]\n[1,2,2]\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse_patterns("\n# nothing\n").is_err());
    }

    #[test]
    fn adversarial_mode_never_unique() {
        let g = CayleyGraph::named(GeneratorKind::Adjacent, 5).unwrap();
        let summary = run_experiment(
            &g,
            ExperimentConfig {
                r: 2,
                trials: 20,
                seed: 1,
                m: 0,
                mode: Mode::Adversarial,
                error_count: ErrorCount::UniformUpTo,
            },
        )
        .unwrap();
        assert_eq!(summary.unique, 0);
        assert!(summary.sound);
        assert!(summary.records.iter().all(|r| r.patterns.len() == 8));
    }
}
