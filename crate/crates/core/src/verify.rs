//! A registry of published claims, each checked against exhaustive search.
//!
//! Every claim has a stable id such as `transposition.n1` or
//! `star.diameter`; a suite emits one [`Row`] per (claim, instance).
//! Instances above the configured degree are not generated, and capacity
//! overruns become skipped rows instead of failures.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::cayley::{CayleyGraph, Limits};
use crate::closed_forms::{self, binomial, BoundReport, Direction};
use crate::cycle_type::CycleType;
use crate::error::{Error, Result};
use crate::generators::{GeneratorKind, GeneratorSet};
use crate::perm::Permutation;
use crate::reconstruct::{self, ErrorCount, ExperimentConfig, Mode, Status};
use crate::small_graph::SmallGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    NValues,
    LambdaMu,
    LocalParams,
    Factorizations,
    Classes,
    Diameters,
    Structure,
    DistanceRegularity,
    ClosedForms,
    Bounds,
    Reconstruction,
    All,
}

impl Suite {
    pub const CONCRETE: [Suite; 11] = [
        Suite::NValues,
        Suite::LambdaMu,
        Suite::LocalParams,
        Suite::Factorizations,
        Suite::Classes,
        Suite::Diameters,
        Suite::Structure,
        Suite::DistanceRegularity,
        Suite::ClosedForms,
        Suite::Bounds,
        Suite::Reconstruction,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::NValues => "n-values",
            Suite::LambdaMu => "lambda-mu",
            Suite::LocalParams => "local-params",
            Suite::Factorizations => "factorizations",
            Suite::Classes => "classes",
            Suite::Diameters => "diameters",
            Suite::Structure => "structure",
            Suite::DistanceRegularity => "distance-regularity",
            Suite::ClosedForms => "closed-forms",
            Suite::Bounds => "bounds",
            Suite::Reconstruction => "reconstruction",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::CONCRETE
            .iter()
            .chain(std::iter::once(&Suite::All))
            .find(|suite| suite.name() == s)
            .copied()
            .ok_or_else(|| Error::Domain(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub id: String,
    pub statement: String,
    pub instance: String,
    pub expected: String,
    pub measured: String,
    pub verdict: Verdict,
    /// Why a row was skipped, or extra context for a failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub rows: Vec<Row>,
}

impl VerifyReport {
    pub fn count(&self, v: Verdict) -> usize {
        self.rows.iter().filter(|r| r.verdict == v).count()
    }

    /// No row failed. Skipped rows do not count against success.
    pub fn passed(&self) -> bool {
        self.count(Verdict::Fail) == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| r.verdict == Verdict::Fail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyOptions {
    /// Largest degree of `Sym_n` instances to generate.
    pub max_n: usize,
    /// Trials per reconstruction experiment.
    pub trials: u64,
    pub seed: u64,
    #[serde(skip)]
    pub limits: Limits,
    pub cache_dir: Option<PathBuf>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            max_n: 7,
            trials: 1000,
            seed: 0,
            limits: Limits::default(),
            cache_dir: None,
        }
    }
}

pub fn family(kind: GeneratorKind) -> &'static str {
    match kind {
        GeneratorKind::AllTranspositions => "transposition",
        GeneratorKind::Adjacent => "bubble-sort",
        GeneratorKind::Prefix => "star",
        GeneratorKind::Explicit => "explicit",
    }
}

const FAMILIES: [GeneratorKind; 3] = [
    GeneratorKind::AllTranspositions,
    GeneratorKind::Adjacent,
    GeneratorKind::Prefix,
];

struct Ctx<'a> {
    opts: &'a VerifyOptions,
    graphs: HashMap<(GeneratorKind, usize), Arc<CayleyGraph>>,
    rows: Vec<Row>,
}

impl<'a> Ctx<'a> {
    fn graph(&mut self, kind: GeneratorKind, n: usize) -> Result<Arc<CayleyGraph>> {
        if let Some(g) = self.graphs.get(&(kind, n)) {
            return Ok(Arc::clone(g));
        }
        let mut g = CayleyGraph::with_limits(GeneratorSet::new(kind, n)?, self.opts.limits);
        if let Some(dir) = &self.opts.cache_dir {
            g = g.with_cache_dir(dir);
        }
        let g = Arc::new(g);
        self.graphs.insert((kind, n), Arc::clone(&g));
        Ok(g)
    }

    fn degrees(&self, lo: usize, hi: usize) -> std::ops::RangeInclusive<usize> {
        lo..=hi.min(self.opts.max_n)
    }

    /// Records `expected == measured`; capacity errors skip the row.
    fn check<T: fmt::Display + PartialEq>(
        &mut self,
        id: impl Into<String>,
        statement: impl Into<String>,
        instance: impl Into<String>,
        expected: T,
        measured: Result<T>,
    ) {
        let (measured, verdict, note) = match measured {
            Ok(m) => {
                let v = if m == expected { Verdict::Pass } else { Verdict::Fail };
                (m.to_string(), v, None)
            }
            Err(e @ Error::Capacity { .. }) => ("-".into(), Verdict::Skipped, Some(e.to_string())),
            Err(e) => ("-".into(), Verdict::Fail, Some(e.to_string())),
        };
        self.rows.push(Row {
            id: id.into(),
            statement: statement.into(),
            instance: instance.into(),
            expected: expected.to_string(),
            measured,
            verdict,
            note,
        });
    }

    fn push_bound(&mut self, id: &str, statement: &str, instance: String, b: Result<BoundReport>, want_attained: bool) {
        match b {
            Ok(b) => {
                let ok = b.satisfied && (!want_attained || b.attained);
                let rel = match b.direction {
                    Direction::Upper => "<=",
                    Direction::Lower => ">=",
                };
                let eq = if want_attained { "=" } else { rel };
                self.rows.push(Row {
                    id: id.into(),
                    statement: statement.into(),
                    instance,
                    expected: format!("{eq} {}", b.bound_value),
                    measured: format!("{}{}", b.measured, if b.attained { " (attained)" } else { "" }),
                    verdict: if ok { Verdict::Pass } else { Verdict::Fail },
                    note: None,
                });
            }
            Err(e) => self.check(id, statement, instance, "bound".to_string(), Err(e)),
        }
    }

    fn skip(&mut self, id: &str, statement: &str, instance: String, reason: impl Into<String>) {
        self.rows.push(Row {
            id: id.into(),
            statement: statement.into(),
            instance,
            expected: "-".into(),
            measured: "-".into(),
            verdict: Verdict::Skipped,
            note: Some(reason.into()),
        });
    }
}

fn inst(n: usize) -> String {
    format!("n={n}")
}

fn inst_r(n: usize, r: usize) -> String {
    format!("n={n} r={r}")
}

#[derive(PartialEq)]
struct Pair(u64, u64);

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

fn n_value(g: &CayleyGraph, r: usize) -> Result<u64> {
    Ok(g.n_value(r)?.value)
}

fn n_s_table(g: &CayleyGraph, r: usize) -> Result<BTreeMap<usize, u64>> {
    Ok(g.n_s_values(r)?
        .into_iter()
        .filter_map(|(s, v)| v.map(|v| (s, v.value)))
        .collect())
}

fn n_values(ctx: &mut Ctx) -> Result<()> {
    let t = GeneratorKind::AllTranspositions;
    for n in ctx.degrees(3, 7) {
        let g = ctx.graph(t, n)?;
        ctx.check("transposition.n1", "N(Sym_n(T),1) = 3", inst(n), 3, n_value(&g, 1));
    }
    for n in ctx.degrees(3, 6) {
        let g = ctx.graph(t, n)?;
        let expected = closed_forms::transposition_n(n, 2)?;
        ctx.check(
            "transposition.n2",
            "N(Sym_n(T),2) = 3(n-2)(n+1)/2",
            inst(n),
            expected,
            n_value(&g, 2),
        );
        let measured = n_s_table(&g, 2);
        for (s, claim) in closed_forms::transposition_ns_table(n) {
            if let Some(v) = claim.value() {
                let m = measured.clone().map(|t| t.get(&s).copied().unwrap_or(0));
                ctx.check(format!("transposition.n-s.{s}"), ns_statement(t, s), inst(n), v, m);
            }
        }
    }
    for kind in [GeneratorKind::Adjacent, GeneratorKind::Prefix] {
        let fam = family(kind);
        let lo = if kind == GeneratorKind::Adjacent { 3 } else { 4 };
        for n in ctx.degrees(lo, 7) {
            let g = ctx.graph(kind, n)?;
            for r in 1..=2 {
                let expected = closed_forms::bubble_star_n(kind, n, r)?
                    .value()
                    .expect("within claimed range");
                let statement = if r == 1 {
                    format!("N(Sym_n({}),1) = 2", kind.short_name())
                } else {
                    format!("N(Sym_n({}),2) = 2(n-1)", kind.short_name())
                };
                ctx.check(format!("{fam}.n{r}"), statement, inst(n), expected, n_value(&g, r));
            }
            let measured = n_s_table(&g, 2);
            for (s, claim) in closed_forms::bubble_star_ns_table(kind, n)? {
                if let Some(v) = claim.value() {
                    let m = measured.clone().map(|t| t.get(&s).copied().unwrap_or(0));
                    ctx.check(format!("{fam}.n-s.{s}"), ns_statement(kind, s), inst(n), v, m);
                }
            }
        }
    }
    Ok(())
}

fn ns_statement(kind: GeneratorKind, s: usize) -> String {
    let k = kind.short_name();
    let rhs = match (kind, s) {
        (GeneratorKind::AllTranspositions, 1) => "n(n-1)",
        (GeneratorKind::AllTranspositions, 2) => "3(n-2)(n+1)/2",
        (GeneratorKind::AllTranspositions, 3) => "12",
        (GeneratorKind::AllTranspositions, _) => "20",
        (GeneratorKind::Adjacent, 1 | 2) | (GeneratorKind::Prefix, 1 | 2) => "2(n-1)",
        (GeneratorKind::Adjacent, 3) => "2",
        _ => "4",
    };
    format!("N_{s}(Sym_n({k}),2) = {rhs}")
}

fn lambda_mu(ctx: &mut Ctx) -> Result<()> {
    for kind in FAMILIES {
        let fam = family(kind);
        let lo = if kind == GeneratorKind::Prefix { 4 } else { 3 };
        for n in ctx.degrees(lo, 8) {
            let g = ctx.graph(kind, n)?;
            let (l, m) = closed_forms::lambda_mu_claim(kind, n)?
                .value()
                .expect("within claimed range");
            let lm = g.lambda_mu();
            ctx.check(
                format!("{fam}.lambda-mu"),
                format!(
                    "(λ, μ) of Sym_n({}) from generator products = ({l}, {m})",
                    kind.short_name()
                ),
                inst(n),
                Pair(l, m),
                Ok(Pair(lm.lambda, lm.mu)),
            );
            ctx.check(
                format!("{fam}.n1-from-lambda-mu"),
                "N(Γ,1) = max(λ+2, μ)",
                inst(n),
                (lm.lambda + 2).max(lm.mu),
                n_value(&g, 1),
            );
        }
    }
    Ok(())
}

fn local_params(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.degrees(3, 6) {
        let g = ctx.graph(GeneratorKind::AllTranspositions, n)?;
        let all: Vec<Permutation> = Permutation::all(n)?.collect();
        let measured = (|| -> Result<String> {
            let mut agree = 0;
            for p in &all {
                let lp = g.local_params(p)?;
                let (c, b) = closed_forms::transposition_local_params(&p.cycle_type())?;
                if p.is_identity() || (lp.c as u64, lp.a, lp.b as u64) == (c, 0, b) {
                    agree += 1;
                } else {
                    return Ok(format!("{p}: (c,a,b)=({},{},{}) vs ({c},0,{b})", lp.c, lp.a, lp.b));
                }
            }
            Ok(format!("{agree}/{} agree", all.len()))
        })();
        ctx.check(
            "transposition.local-params",
            "c_i = (Σj²h_j - n)/2, a_i = 0, b_i = (n² - Σj²h_j)/2 for every vertex",
            inst(n),
            format!("{0}/{0} agree", all.len()),
            measured,
        );
    }
    Ok(())
}

/// Counts ordered words of `d(p)` transpositions multiplying to each `p`,
/// by extending all words one letter at a time.
fn word_counts(n: usize) -> Result<HashMap<Permutation, u128>> {
    let gens = GeneratorSet::all_transpositions(n)?;
    let mut result: HashMap<Permutation, u128> = HashMap::new();
    let mut layer: HashMap<Permutation, u128> = HashMap::from([(Permutation::identity(n)?, 1)]);
    for len in 0..n {
        for (p, &c) in &layer {
            if n - p.cycle_count() == len {
                result.insert(*p, c);
            }
        }
        let mut next: HashMap<Permutation, u128> = HashMap::new();
        for (p, &c) in &layer {
            for idx in 0..gens.len() {
                *next.entry(gens.apply(p, idx)).or_default() += c;
            }
        }
        layer = next;
    }
    Ok(result)
}

fn factorizations(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.degrees(3, 5) {
        let counts = word_counts(n)?;
        for ct in CycleType::all(n)? {
            let expected = ct.denes_count()?.count;
            let measured = counts.get(&ct.representative()).copied().unwrap_or(0);
            ctx.check(
                "factorization.count",
                "minimal transposition factorizations = i!·Π(j^(j-2)/(j-1)!)^h_j",
                format!("n={n} class={ct}"),
                expected,
                Ok(measured),
            );
        }
    }
    Ok(())
}

fn classes(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.degrees(3, 7) {
        let mut histogram: HashMap<CycleType, u64> = HashMap::new();
        for p in Permutation::all(n)? {
            *histogram.entry(p.cycle_type()).or_default() += 1;
        }
        for ct in CycleType::all(n)? {
            ctx.check(
                "class.size",
                "class size = n!/Π(j^h_j h_j!)",
                format!("n={n} class={ct}"),
                ct.class_size()?,
                Ok(histogram.get(&ct).copied().unwrap_or(0)),
            );
        }
    }
    for n in ctx.degrees(3, 6) {
        let g = ctx.graph(GeneratorKind::AllTranspositions, n)?;
        let spheres = g.distance_table().map(|t| t.sphere_sizes());
        for i in 1..n {
            let expected: u64 = CycleType::with_transposition_length(n, i)?
                .iter()
                .map(|ct| ct.class_size())
                .sum::<Result<u64>>()?;
            ctx.check(
                "transposition.sphere-classes",
                "S_i(e) is the union of the classes with n-i cycles",
                format!("n={n} i={i}"),
                expected,
                spheres.clone().map(|s| s.get(i).copied().unwrap_or(0)),
            );
        }
        let profile = class_profile_constant(&g);
        ctx.check(
            "transposition.class-distance-profile",
            "how many members of a class lie at each distance from π depends only on π's class",
            inst(n),
            "constant".to_string(),
            profile,
        );
    }
    Ok(())
}

fn class_profile_constant(g: &CayleyGraph) -> Result<String> {
    let table = g.distance_table()?;
    let n = g.degree();
    let all: Vec<Permutation> = Permutation::all(n)?.collect();
    let mut seen: HashMap<(CycleType, CycleType), (Permutation, Vec<u64>)> = HashMap::new();
    for pi in &all {
        let inv = pi.inverse();
        let mut per_class: HashMap<CycleType, Vec<u64>> = HashMap::new();
        for sigma in &all {
            let d = table.distance(&inv.compose(sigma)?);
            let v = per_class.entry(sigma.cycle_type()).or_insert_with(|| vec![0; n]);
            v[d] += 1;
        }
        for (class, profile) in per_class {
            match seen.get(&(pi.cycle_type(), class.clone())) {
                Some((first, p0)) if *p0 != profile => {
                    return Ok(format!("{first} and {pi} disagree on class {class}"));
                }
                Some(_) => {}
                None => {
                    seen.insert((pi.cycle_type(), class), (*pi, profile));
                }
            }
        }
    }
    Ok("constant".into())
}

fn diameters(ctx: &mut Ctx) -> Result<()> {
    for kind in FAMILIES {
        let statement = match kind {
            GeneratorKind::AllTranspositions => "diam Sym_n(T) = n-1",
            GeneratorKind::Adjacent => "diam Sym_n(t) = C(n,2)",
            _ => "diam Sym_n(st) = ⌊3(n-1)/2⌋",
        };
        for n in ctx.degrees(3, 7) {
            let g = ctx.graph(kind, n)?;
            let expected = closed_forms::diameter_claim(kind, n)?.value().expect("n >= 3");
            ctx.check(
                format!("{}.diameter", family(kind)),
                statement,
                inst(n),
                expected,
                g.diameter().map(|d| d as u64),
            );
        }
    }
    Ok(())
}

fn structure(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.degrees(3, 5) {
        let g = ctx.graph(GeneratorKind::AllTranspositions, n)?;
        let e = g.identity();
        ctx.check(
            "transposition.no-k24",
            "no K_{2,4} through any vertex of Sym_n(T)",
            inst(n),
            0,
            g.complete_bipartite_count(2, 4, &e),
        );
        ctx.check(
            "transposition.k33",
            "every vertex of Sym_n(T) lies on C(n,3) copies of K_{3,3}",
            inst(n),
            binomial(n as u64, 3)?,
            g.complete_bipartite_count(3, 3, &e),
        );
        let b = ctx.graph(GeneratorKind::Adjacent, n)?;
        ctx.check(
            "bubble-sort.no-k23",
            "no K_{2,3} in Sym_n(t)",
            inst(n),
            0,
            b.complete_bipartite_count(2, 3, &e),
        );
        if n >= 4 {
            ctx.check(
                "bubble-sort.k22",
                "every vertex of Sym_n(t) lies on C(n-2,2) copies of K_{2,2}",
                inst(n),
                binomial(n as u64 - 2, 2)?,
                b.complete_bipartite_count(2, 2, &e),
            );
        }
        let s = ctx.graph(GeneratorKind::Prefix, n)?;
        let found = s.cycle_lengths_present(&[3, 4, 5, 7]).map(|m| {
            let present: Vec<String> = m.iter().filter(|(_, &p)| p).map(|(l, _)| l.to_string()).collect();
            if present.is_empty() {
                "none".to_string()
            } else {
                present.join(",")
            }
        });
        ctx.check(
            "star.no-short-cycles",
            "Sym_n(st) has no cycles of length 3, 4, 5 or 7",
            inst(n),
            "none".to_string(),
            found,
        );
    }
    Ok(())
}

fn regularity_label<V>(r: Result<crate::cayley::DistanceRegularity<V>>) -> Result<String> {
    r.map(|d| {
        if d.is_regular() {
            "distance-regular".to_string()
        } else {
            "not distance-regular".to_string()
        }
    })
}

fn distance_regularity(ctx: &mut Ctx) -> Result<()> {
    for kind in FAMILIES {
        // Only the all-transpositions statement names a range starting at 3.
        let lo = if kind == GeneratorKind::AllTranspositions { 3 } else { 4 };
        for n in ctx.degrees(lo, 6) {
            let g = ctx.graph(kind, n)?;
            ctx.check(
                format!("{}.not-distance-regular", family(kind)),
                format!("Sym_n({}) is not distance-regular", kind.short_name()),
                inst(n),
                "not distance-regular".to_string(),
                regularity_label(g.distance_regularity()),
            );
        }
    }
    let cases = [
        ("lattice.distance-regular", SmallGraph::hamming(3, 2)?),
        ("johnson.distance-regular", SmallGraph::johnson(5, 2)?),
    ];
    for (id, sg) in cases {
        ctx.check(
            id,
            format!("{} is distance-regular", sg.name()),
            sg.name().to_string(),
            "distance-regular".to_string(),
            regularity_label(sg.distance_regularity()),
        );
    }
    Ok(())
}

fn closed_form_graphs() -> Result<Vec<(String, SmallGraph)>> {
    let mut out = Vec::new();
    for n in 2..=4 {
        for q in 2..=3 {
            out.push(("hamming".to_string(), SmallGraph::hamming(n, q)?));
        }
    }
    for n in 2..=8 {
        for e in 1..n {
            out.push(("johnson".to_string(), SmallGraph::johnson(n, e)?));
        }
    }
    Ok(out)
}

fn closed_forms_suite(ctx: &mut Ctx) -> Result<()> {
    for n in 2..=4u64 {
        for q in 2..=3u64 {
            let sg = SmallGraph::hamming(n as usize, q as usize)?;
            for r in 1..=2u64 {
                ctx.check(
                    "hamming.n",
                    "N(L_n(q),r) = q Σ_{i<r} C(n-1,i)(q-1)^i",
                    format!("{} r={r}", sg.name()),
                    closed_forms::hamming_n(n, q, r)?,
                    sg.n_value(r as usize),
                );
            }
        }
    }
    for n in 2..=8u64 {
        for e in 1..n {
            let sg = SmallGraph::johnson(n as usize, e as usize)?;
            for r in 1..=2u64 {
                let expected = closed_forms::johnson_n(n, e, r);
                let label = format!("{} r={r}", sg.name());
                let statement = "N(J_e^n,r) = n Σ_{i<r} C(e-1,i)C(n-e-1,i)/(i+1)";
                match expected {
                    Ok(v) => ctx.check("johnson.n", statement, label, v, sg.n_value(r as usize)),
                    Err(err) => ctx.check("johnson.n", statement, label, 0, Err::<u64, _>(err)),
                }
            }
        }
    }
    for q in 2..=5u64 {
        let sg = SmallGraph::lattice(q as usize)?;
        ctx.check("lattice.n1", "N(L_2(q),1) = q", sg.name().to_string(), q, sg.n_value(1));
        ctx.check(
            "lattice.n2",
            "N(L_2(q),2) = q²",
            sg.name().to_string(),
            q * q,
            sg.n_value(2),
        );
    }
    for n in 4..=8u64 {
        let sg = SmallGraph::triangular(n as usize)?;
        let name = format!("T({n})");
        ctx.check("triangular.n1", "N(T(n),1) = n", name.clone(), n, sg.n_value(1));
        ctx.check(
            "triangular.n2",
            "N(T(n),2) = n(n-1)/2",
            name,
            n * (n - 1) / 2,
            sg.n_value(2),
        );
    }
    for (_, sg) in closed_form_graphs()? {
        ctx.check(
            "n1-from-lambda-mu",
            "N(Γ,1) = max(λ+2, μ)",
            sg.name().to_string(),
            (sg.lambda() + 2).max(sg.mu()),
            sg.n_value(1),
        );
    }
    Ok(())
}

struct Measured {
    name: String,
    v: u64,
    k: u64,
    lambda: u64,
    mu: u64,
    n1: u64,
    n1_2: Option<u64>,
    n2_2: Option<u64>,
    triangle: bool,
    pentagon: bool,
}

fn measure_cayley(g: &CayleyGraph) -> Result<Measured> {
    let lm = g.lambda_mu();
    let table = n_s_table(g, 2)?;
    let odd = g.cycle_lengths_present(&[3, 5])?;
    Ok(Measured {
        name: format!("Sym_{}({})", g.degree(), g.kind().short_name()),
        v: crate::perm::factorial(g.degree())?,
        k: g.valency() as u64,
        lambda: lm.lambda,
        mu: lm.mu,
        n1: n_value(g, 1)?,
        n1_2: table.get(&1).copied(),
        n2_2: table.get(&2).copied(),
        triangle: odd[&3],
        pentagon: odd[&5],
    })
}

fn measure_small(sg: &SmallGraph) -> Result<Option<Measured>> {
    let Some(k) = sg.valency() else {
        return Ok(None);
    };
    let table: BTreeMap<usize, u64> = sg
        .n_s_values(2)?
        .into_iter()
        .filter_map(|(s, v)| v.map(|v| (s, v.value)))
        .collect();
    Ok(Some(Measured {
        name: sg.name().to_string(),
        v: sg.vertex_count() as u64,
        k: k as u64,
        lambda: sg.lambda(),
        mu: sg.mu(),
        n1: sg.n_value(1)?,
        n1_2: table.get(&1).copied(),
        n2_2: table.get(&2).copied(),
        triangle: sg.has_cycle(3),
        pentagon: sg.has_cycle(5),
    }))
}

const UPPER: &str = "N(Γ,1) <= (v+λ)/2";
const LOWER: &str = "N_2(Γ,2) >= μ(k-1-3/4(μ-1)(N(Γ,1)-2))+2";
const COR2: &str = "no triangles or pentagons, μ >= 2, k >= 1+3/4(μ-1)μ imply N_2(Γ,2) >= N_1(Γ,2)";

fn bound_rows(ctx: &mut Ctx, m: &Measured, lower: bool) {
    if closed_forms::upper_bound_n1(m.v, m.k, m.lambda).is_ok() {
        let b = closed_forms::upper_bound_n1(m.v, m.k, m.lambda)
            .map(|b| BoundReport::new(&m.name, UPPER, Direction::Upper, b, m.n1));
        ctx.push_bound("upper-bound.n1", UPPER, m.name.clone(), b, false);
    } else {
        ctx.skip(
            "upper-bound.n1",
            UPPER,
            m.name.clone(),
            "needs 2 <= k <= v-2 and λ <= k-2",
        );
    }
    if lower {
        match m.n2_2 {
            Some(n2) => {
                let b = closed_forms::lower_bound_n2(m.k, m.mu, m.n1)
                    .map(|b| BoundReport::new(&m.name, LOWER, Direction::Lower, b, n2));
                ctx.push_bound("lower-bound.n2", LOWER, m.name.clone(), b, false);
            }
            None => ctx.skip("lower-bound.n2", LOWER, m.name.clone(), "diameter below 2"),
        }
    }
    let c = closed_forms::n2_dominance_check(
        m.k,
        m.mu,
        m.triangle,
        m.pentagon,
        m.n1_2.unwrap_or(0),
        m.n2_2.unwrap_or(0),
    );
    match c.holds {
        Some(h) => ctx.check(
            "n2-dominates-n1",
            COR2,
            m.name.clone(),
            "N_2 >= N_1".to_string(),
            Ok(if h { "N_2 >= N_1" } else { "N_2 < N_1" }.to_string()),
        ),
        None => ctx.skip("n2-dominates-n1", COR2, m.name.clone(), "premises do not hold"),
    }
}

fn bounds(ctx: &mut Ctx) -> Result<()> {
    for kind in FAMILIES {
        for n in ctx.degrees(3, 7) {
            let g = ctx.graph(kind, n)?;
            match measure_cayley(&g) {
                Ok(m) => bound_rows(ctx, &m, true),
                Err(e @ Error::Capacity { .. }) => {
                    ctx.skip("bounds", "bounds on N(Γ,1) and N_2(Γ,2)", inst(n), e.to_string())
                }
                Err(e) => return Err(e),
            }
        }
    }
    for n in ctx.degrees(4, 7) {
        let g = ctx.graph(GeneratorKind::Adjacent, n)?;
        let m = measure_cayley(&g)?;
        let b = closed_forms::lower_bound_n2(m.k, m.mu, m.n1)
            .map(|b| BoundReport::new(&m.name, LOWER, Direction::Lower, b, m.n2_2.expect("diameter >= 2")));
        ctx.push_bound(
            "bubble-sort.lower-bound-attained",
            "μ = 2 and N(Γ,1) = 2 give N_2(Sym_n(t),2) = 2k exactly",
            inst(n),
            b,
            true,
        );
    }
    for (_, sg) in closed_form_graphs()? {
        if let Some(m) = measure_small(&sg)? {
            bound_rows(ctx, &m, false);
        }
    }
    for t in 2..=3 {
        for part in 2..=3 {
            let sg = SmallGraph::complete_multipartite(t, part)?;
            let m = measure_small(&sg)?.expect("regular");
            let b = closed_forms::upper_bound_n1(m.v, m.k, m.lambda)
                .map(|b| BoundReport::new(&m.name, UPPER, Direction::Upper, b, m.n1));
            ctx.push_bound(
                "upper-bound.attained-multipartite",
                "K^(t)_m attains N(Γ,1) = (v+λ)/2",
                m.name.clone(),
                b,
                true,
            );
        }
    }
    Ok(())
}

fn reconstruction(ctx: &mut Ctx) -> Result<()> {
    let n = 5;
    if ctx.opts.max_n < n {
        return Ok(());
    }
    for kind in FAMILIES {
        let g = ctx.graph(kind, n)?;
        let fam = family(kind);
        for r in 1..=2 {
            let threshold = n_value(&g, r)?;
            let config = ExperimentConfig {
                r,
                trials: ctx.opts.trials,
                seed: ctx.opts.seed,
                m: threshold as usize + 1,
                mode: Mode::Honest,
                error_count: ErrorCount::UniformUpTo,
            };
            let measured = reconstruct::run_experiment(&g, config).map(|s| {
                format!(
                    "unique-rate {}{}",
                    s.unique_rate,
                    if s.sound { "" } else { ", source lost" }
                )
            });
            ctx.check(
                format!("{fam}.reconstruction"),
                "N(Γ,r)+1 distinct patterns always reconstruct the source",
                format!("n={n} r={r} m={} trials={}", threshold + 1, ctx.opts.trials),
                "unique-rate 1".to_string(),
                measured,
            );
            let x: Permutation = "[3,5,1,4,2]".parse()?;
            let measured = reconstruct::ambiguity_witness(&g, &x, r).and_then(|(_, pats)| {
                let res = reconstruct::reconstruct(&g, &pats, r)?;
                let ambiguous = res.status == Status::Ambiguous;
                Ok(format!(
                    "{} patterns, {}",
                    pats.len(),
                    if ambiguous { "ambiguous" } else { "not ambiguous" }
                ))
            });
            ctx.check(
                format!("{fam}.ambiguity-witness"),
                "some N(Γ,r) distinct patterns leave two candidates",
                inst_r(n, r),
                format!("{threshold} patterns, ambiguous"),
                measured,
            );
        }
    }
    Ok(())
}

/// Runs one suite (or all of them) and collects the rows in a fixed order.
pub fn run(suite: Suite, opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut ctx = Ctx {
        opts,
        graphs: HashMap::new(),
        rows: Vec::new(),
    };
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::CONCRETE.to_vec()
    } else {
        vec![suite]
    };
    for s in suites {
        match s {
            Suite::NValues => n_values(&mut ctx)?,
            Suite::LambdaMu => lambda_mu(&mut ctx)?,
            Suite::LocalParams => local_params(&mut ctx)?,
            Suite::Factorizations => factorizations(&mut ctx)?,
            Suite::Classes => classes(&mut ctx)?,
            Suite::Diameters => diameters(&mut ctx)?,
            Suite::Structure => structure(&mut ctx)?,
            Suite::DistanceRegularity => distance_regularity(&mut ctx)?,
            Suite::ClosedForms => closed_forms_suite(&mut ctx)?,
            Suite::Bounds => bounds(&mut ctx)?,
            Suite::Reconstruction => reconstruction(&mut ctx)?,
            Suite::All => unreachable!("expanded above"),
        }
    }
    Ok(VerifyReport { rows: ctx.rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(max_n: usize) -> VerifyOptions {
        VerifyOptions {
            max_n,
            trials: 50,
            ..VerifyOptions::default()
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::CONCRETE.iter().chain([Suite::All].iter()) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), *s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn diameters_pass() {
        let rep = run(Suite::Diameters, &opts(6)).unwrap();
        assert_eq!(rep.rows.len(), 12);
        assert!(rep.passed(), "{:?}", rep.failures().collect::<Vec<_>>());
    }

    #[test]
    fn capacity_is_skipped() {
        let o = VerifyOptions {
            limits: Limits {
                whole_graph_max_n: 4,
                ..Limits::default()
            },
            ..opts(5)
        };
        let rep = run(Suite::Diameters, &o).unwrap();
        assert_eq!(rep.count(Verdict::Skipped), 3);
        assert!(rep.passed());
    }

    #[test]
    fn factorization_rows_include_small_cycles() {
        let rep = run(Suite::Factorizations, &opts(4)).unwrap();
        assert!(rep.passed());
        let four = rep.rows.iter().find(|r| r.instance == "n=4 class=4^1").unwrap();
        assert_eq!(four.measured, "16");
    }
}
