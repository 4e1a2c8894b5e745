use std::collections::BTreeMap;
use std::io::Read;
use std::path::Path;

use permrecon::closed_forms::transposition_local_params;
use permrecon::factorization::{count_minimal_factorizations, minimal_factorizations};
use permrecon::perm::MAX_DEGREE;
use permrecon::reconstruct::{self as rc, ErrorCount, ExperimentConfig, Mode, Status};
use permrecon::report::{cayley_report, small_graph_report};
use permrecon::verify::{self, Suite, VerifyOptions};
use permrecon::{CayleyGraph, CycleType, GeneratorKind, GeneratorSet, GraphReport, Permutation, SmallGraph};
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{Degrees, FileConfig, Kinds, Settings};
use crate::output::Outcome;
use crate::{
    ClassesArgs, CliError, FactorizationArgs, GraphImportArgs, ProbeArgs, ReconstructArgs, ReportArgs, SimulateArgs,
    VerifyArgs, EXIT_AMBIGUOUS, EXIT_FAILURE, EXIT_OK,
};

type Result<T> = std::result::Result<T, CliError>;

pub struct Context {
    pub settings: Settings,
    pub file: FileConfig,
}

impl Context {
    fn graph(&self, kind: GeneratorKind, n: usize) -> Result<CayleyGraph> {
        let g = CayleyGraph::with_limits(GeneratorSet::new(kind, n)?, self.settings.limits());
        Ok(match &self.settings.cache_dir {
            Some(dir) => g.with_cache_dir(dir),
            None => g,
        })
    }

    fn config(&self, command: &str, params: impl Serialize) -> Value {
        json!({ "command": command, "settings": self.settings, "params": params })
    }

    fn kinds(&self, flag: &Option<Kinds>) -> Vec<GeneratorKind> {
        flag.clone()
            .or_else(|| self.file.graph.clone())
            .map(|k| k.0)
            .unwrap_or_else(|| vec![GeneratorKind::AllTranspositions])
    }

    fn single_kind(&self, flag: &Option<Kinds>) -> Result<GeneratorKind> {
        match self.kinds(flag).as_slice() {
            [k] => Ok(*k),
            _ => Err(CliError::Usage("exactly one --graph is required".into())),
        }
    }

    fn degrees(&self, flag: &Option<Degrees>) -> Result<Vec<usize>> {
        let d = flag
            .clone()
            .or_else(|| self.file.n.clone())
            .ok_or_else(|| CliError::Usage("--n is required".into()))?;
        if let Some(bad) = d.0.iter().find(|&&n| !(2..=MAX_DEGREE).contains(&n)) {
            return Err(CliError::Usage(format!("degree {bad} outside 2..={MAX_DEGREE}")));
        }
        Ok(d.0)
    }

    fn single_degree(&self, flag: &Option<Degrees>) -> Result<usize> {
        match self.degrees(flag)?.as_slice() {
            [n] => Ok(*n),
            _ => Err(CliError::Usage("exactly one --n is required".into())),
        }
    }

    fn radius(&self, flag: Option<usize>, default: usize) -> Result<usize> {
        let r = flag.or(self.file.r).unwrap_or(default);
        if r == 0 {
            return Err(CliError::Usage("--r must be positive".into()));
        }
        Ok(r)
    }
}

fn read_input(path: &Path) -> Result<String> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(permrecon::Error::from)?;
    } else {
        text = std::fs::read_to_string(path).map_err(permrecon::Error::from)?;
    }
    Ok(text)
}

fn pairs<T: ToString>(m: &BTreeMap<usize, T>) -> String {
    m.iter()
        .map(|(k, v)| format!("{k}:{}", v.to_string()))
        .collect::<Vec<_>>()
        .join(";")
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

const REPORT_HEADER: [&str; 10] = [
    "generator_kind",
    "n",
    "v",
    "k",
    "lambda",
    "mu",
    "diameter",
    "r",
    "n_r",
    "n_s",
];

fn report_row(rep: &GraphReport) -> Vec<String> {
    let n_s: BTreeMap<usize, String> = rep.n_s.iter().map(|(s, v)| (*s, opt(v))).collect();
    vec![
        rep.generator_kind.clone(),
        opt(&rep.n),
        rep.v.to_string(),
        opt(&rep.k),
        rep.lambda.to_string(),
        rep.mu.to_string(),
        opt(&rep.diameter),
        rep.r.to_string(),
        pairs(&rep.n_r),
        pairs(&n_s),
    ]
}

pub fn report(ctx: &Context, a: &ReportArgs) -> Result<Outcome> {
    let kinds = ctx.kinds(&a.graph);
    let degrees = ctx.degrees(&a.n)?;
    let r = ctx.radius(a.r, 1)?;
    let mut reports = Vec::new();
    for &kind in &kinds {
        for &n in &degrees {
            reports.push(cayley_report(&ctx.graph(kind, n)?, r)?);
        }
    }
    Ok(Outcome {
        config: ctx.config(
            "report",
            json!({ "graph": Kinds(kinds), "n": Degrees(degrees), "r": r }),
        ),
        result: serde_json::to_value(&reports).expect("reports serialize"),
        header: REPORT_HEADER.to_vec(),
        rows: reports.iter().map(report_row).collect(),
        summary: String::new(),
        code: EXIT_OK,
    })
}

pub fn verify(ctx: &Context, a: &VerifyArgs) -> Result<Outcome> {
    let suite: Suite = a
        .suite
        .parse()
        .map_err(|e: permrecon::Error| CliError::Usage(e.to_string()))?;
    let max_n = a.max_n.or(ctx.file.max_n).unwrap_or(7);
    if !(3..=MAX_DEGREE).contains(&max_n) {
        return Err(CliError::Usage(format!("--max-n must lie in 3..={MAX_DEGREE}")));
    }
    let opts = VerifyOptions {
        max_n,
        trials: a.trials.or(ctx.file.trials).unwrap_or(1000),
        seed: a.seed.or(ctx.file.seed).unwrap_or(0),
        limits: ctx.settings.limits(),
        cache_dir: ctx.settings.cache_dir.clone(),
    };
    let rep = verify::run(suite, &opts)?;
    let summary = format!(
        "{} passed, {} failed, {} skipped",
        rep.count(verify::Verdict::Pass),
        rep.count(verify::Verdict::Fail),
        rep.count(verify::Verdict::Skipped)
    );
    Ok(Outcome {
        config: ctx.config(
            "verify",
            json!({ "suite": suite, "max_n": opts.max_n, "trials": opts.trials, "seed": opts.seed }),
        ),
        result: serde_json::to_value(&rep).expect("rows serialize"),
        header: vec!["id", "instance", "expected", "measured", "verdict", "note"],
        rows: rep
            .rows
            .iter()
            .map(|r| {
                vec![
                    r.id.clone(),
                    r.instance.clone(),
                    r.expected.clone(),
                    r.measured.clone(),
                    r.verdict.to_string(),
                    opt(&r.note),
                ]
            })
            .collect(),
        summary,
        code: if rep.passed() { EXIT_OK } else { EXIT_FAILURE },
    })
}

pub fn reconstruct(ctx: &Context, a: &ReconstructArgs) -> Result<Outcome> {
    let kind = ctx.single_kind(&a.graph)?;
    let r = ctx.radius(a.r, 1)?;
    let patterns = rc::parse_patterns(&read_input(&a.patterns)?)?;
    let n = patterns[0].degree();
    let g = ctx.graph(kind, n)?;
    let res = rc::reconstruct(&g, &patterns, r)?;
    let code = match res.status {
        Status::Unique => EXIT_OK,
        Status::Ambiguous => EXIT_AMBIGUOUS,
        Status::Inconsistent => EXIT_FAILURE,
    };
    let candidates: Vec<String> = res.candidates.iter().map(Permutation::to_string).collect();
    Ok(Outcome {
        config: ctx.config(
            "reconstruct",
            json!({ "graph": kind, "r": r, "patterns": a.patterns, "n": n }),
        ),
        result: serde_json::to_value(&res).expect("result serializes"),
        header: vec!["candidate"],
        rows: candidates.iter().map(|c| vec![c.clone()]).collect(),
        summary: format!(
            "status: {}\npatterns used: {}\ncandidates: {}",
            res.status,
            res.patterns_used,
            candidates.len()
        ),
        code,
    })
}

pub fn simulate(ctx: &Context, a: &SimulateArgs) -> Result<Outcome> {
    let kind = ctx.single_kind(&a.graph)?;
    let n = ctx.single_degree(&a.n)?;
    let r = ctx.radius(a.r, 1)?;
    let g = ctx.graph(kind, n)?;
    let threshold = g.n_value(r)?.value as usize;
    let mode = if a.adversarial { Mode::Adversarial } else { Mode::Honest };
    let config = ExperimentConfig {
        r,
        trials: a.trials.or(ctx.file.trials).unwrap_or(1000),
        seed: a.seed.or(ctx.file.seed).unwrap_or(0),
        m: match mode {
            Mode::Honest => a.m.unwrap_or(threshold + 1),
            Mode::Adversarial => threshold,
        },
        mode,
        error_count: if a.exact_errors {
            ErrorCount::Exact
        } else {
            ErrorCount::UniformUpTo
        },
    };
    if mode == Mode::Honest && config.m == 0 {
        return Err(CliError::Usage("--m must be positive".into()));
    }
    let summary = rc::run_experiment(&g, config)?;
    if let Some(path) = &a.transcript {
        std::fs::write(path, summary.to_jsonl()).map_err(permrecon::Error::from)?;
    }
    let guaranteed = mode == Mode::Honest && config.m > threshold;
    let code = if !summary.sound || (guaranteed && summary.unique_rate < 1.0) {
        EXIT_FAILURE
    } else {
        EXIT_OK
    };
    let mut result = serde_json::to_value(&summary).expect("summary serializes");
    result["threshold"] = json!(threshold);
    let mode_name = match mode {
        Mode::Honest => "honest",
        Mode::Adversarial => "adversarial",
    };
    Ok(Outcome {
        config: ctx.config(
            "simulate",
            json!({
                "graph": kind, "n": n, "r": r, "trials": config.trials, "seed": config.seed,
                "m": config.m, "mode": mode, "error_count": config.error_count,
                "transcript": a.transcript,
            }),
        ),
        result,
        header: vec![
            "graph",
            "n",
            "r",
            "m",
            "trials",
            "seed",
            "mode",
            "unique",
            "ambiguous",
            "inconsistent",
            "unique_rate",
            "sound",
        ],
        rows: vec![vec![
            kind.short_name().to_string(),
            n.to_string(),
            r.to_string(),
            config.m.to_string(),
            config.trials.to_string(),
            config.seed.to_string(),
            mode_name.to_string(),
            summary.unique.to_string(),
            summary.ambiguous.to_string(),
            summary.inconsistent.to_string(),
            summary.unique_rate.to_string(),
            summary.sound.to_string(),
        ]],
        summary: format!("threshold N(Γ,{r}) + 1 = {}", threshold + 1),
        code,
    })
}

/// Above this degree the memoized enumeration may visit too many states.
const ENUMERATION_MAX_DEGREE: usize = 10;

pub fn factorizations(ctx: &Context, a: &FactorizationArgs) -> Result<Outcome> {
    let usage = |e: permrecon::Error| CliError::Usage(e.to_string());
    let p: Permutation = match (&a.perm, &a.class) {
        (Some(p), _) => p.parse().map_err(usage)?,
        (None, Some(c)) => c.parse::<CycleType>().map_err(usage)?.representative(),
        (None, None) => return Err(CliError::Usage("--perm or --class is required".into())),
    };
    let ct = p.cycle_type();
    let formula = ct.denes_count()?.count;
    let enumerated = if p.degree() <= ENUMERATION_MAX_DEGREE {
        Some(count_minimal_factorizations(&p)?)
    } else {
        None
    };
    let listed: Vec<Vec<String>> = match a.list {
        Some(limit) => minimal_factorizations(&p, limit)?
            .iter()
            .map(|f| f.iter().map(ToString::to_string).collect())
            .collect(),
        None => Vec::new(),
    };
    let code = match enumerated {
        Some(c) if c != formula => EXIT_FAILURE,
        _ => EXIT_OK,
    };
    Ok(Outcome {
        config: ctx.config(
            "factorizations",
            json!({ "perm": a.perm, "class": a.class, "list": a.list }),
        ),
        result: json!({
            "permutation": p,
            "cycle_type": ct,
            "length": ct.transposition_length(),
            "formula_count": formula.to_string(),
            "enumerated_count": enumerated.map(|c| c.to_string()),
            "factorizations": listed,
        }),
        header: vec!["index", "factors"],
        rows: listed
            .iter()
            .enumerate()
            .map(|(i, f)| vec![(i + 1).to_string(), f.join(" ")])
            .collect(),
        summary: format!(
            "{p} of type {ct}: {formula} minimal factorizations (enumerated: {})",
            enumerated.map(|c| c.to_string()).unwrap_or_else(|| "skipped".into())
        ),
        code,
    })
}

pub fn classes(ctx: &Context, a: &ClassesArgs) -> Result<Outcome> {
    let degrees = ctx.degrees(&a.n)?;
    let mut entries = Vec::new();
    let mut rows = Vec::new();
    for &n in &degrees {
        for ct in CycleType::all(n)? {
            let size = ct.class_size()?;
            let count = ct.denes_count()?.count;
            let (c, b) = transposition_local_params(&ct)?;
            rows.push(vec![
                n.to_string(),
                ct.to_string(),
                ct.transposition_length().to_string(),
                size.to_string(),
                count.to_string(),
                c.to_string(),
                b.to_string(),
            ]);
            entries.push(json!({
                "n": n, "class": ct, "distance": ct.transposition_length(), "size": size,
                "factorizations": count.to_string(), "c": c, "a": 0, "b": b,
            }));
        }
    }
    Ok(Outcome {
        config: ctx.config("classes", json!({ "n": Degrees(degrees) })),
        result: Value::Array(entries),
        header: vec!["n", "class", "distance", "size", "factorizations", "c", "b"],
        rows,
        summary: String::new(),
        code: EXIT_OK,
    })
}

pub fn probe(ctx: &Context, a: &ProbeArgs) -> Result<Outcome> {
    let degrees = ctx.degrees(&a.n)?;
    let r = ctx.radius(a.r, 2)?;
    let mut reports = Vec::new();
    for &n in &degrees {
        let g = ctx.graph(GeneratorKind::AllTranspositions, n)?;
        reports.push(permrecon::probe::probe(&g, r)?);
    }
    let rows = reports
        .iter()
        .map(|p| {
            let s: Vec<String> = p.attained.iter().map(|v| v.s.to_string()).collect();
            let classes: Vec<String> = p
                .attained
                .iter()
                .flat_map(|v| v.witnesses.iter())
                .map(|w| match w {
                    permrecon::cayley::Witness::Class(c) => c.to_string(),
                    other => format!("{other:?}"),
                })
                .collect();
            vec![
                "probe".to_string(),
                p.n.to_string(),
                p.r.to_string(),
                p.value.to_string(),
                s.join(";"),
                classes.join(";"),
                p.three_cycle_overlap.to_string(),
                p.three_cycle_attains.to_string(),
                p.n2_at_radius_2.to_string(),
                p.n2_at_radius_r.to_string(),
            ]
        })
        .collect();
    Ok(Outcome {
        config: ctx.config("probe-conjecture", json!({ "n": Degrees(degrees), "r": r })),
        result: serde_json::to_value(&reports).expect("probe serializes"),
        header: vec![
            "label",
            "n",
            "r",
            "value",
            "attaining_s",
            "attaining_classes",
            "three_cycle_overlap",
            "three_cycle_attains",
            "n2_at_radius_2",
            "n2_at_radius_r",
        ],
        rows,
        summary: "probe output: observations only, nothing is asserted".into(),
        code: EXIT_OK,
    })
}

pub fn graph_import(ctx: &Context, a: &GraphImportArgs) -> Result<Outcome> {
    let r = ctx.radius(a.r, 1)?;
    let name = a.name.clone().unwrap_or_else(|| {
        a.edges
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .filter(|s| s != "-")
            .unwrap_or_else(|| "imported".into())
    });
    let sg = SmallGraph::parse_edge_list(name.clone(), &read_input(&a.edges)?)?;
    let rep = small_graph_report(&sg, r)?;
    Ok(Outcome {
        config: ctx.config("graph-import", json!({ "edges": a.edges, "name": name, "r": r })),
        result: serde_json::to_value([&rep]).expect("report serializes"),
        header: REPORT_HEADER.to_vec(),
        rows: vec![report_row(&rep)],
        summary: String::new(),
        code: EXIT_OK,
    })
}
