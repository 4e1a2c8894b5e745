//! `GraphReport`: the computed parameters of one graph instance, serialized
//! as a stable JSON document.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cayley::{CayleyGraph, NsValue};
use crate::error::{Error, Result};
use crate::perm::factorial;
use crate::small_graph::SmallGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphReport {
    /// Degree of the symmetric group; absent for explicit small graphs.
    pub n: Option<usize>,
    pub generator_kind: String,
    pub v: u64,
    /// Valency; absent when the graph is not regular.
    pub k: Option<u64>,
    pub lambda: u64,
    pub mu: u64,
    /// Absent when whole-graph search is over budget.
    pub diameter: Option<usize>,
    /// Radius at which `n_s` is reported.
    pub r: usize,
    /// `s -> N_s(Γ, r)`; null when no pair lies at distance `s`.
    pub n_s: BTreeMap<usize, Option<u64>>,
    /// `r' -> N(Γ, r')` for `r' = 1..=r`.
    pub n_r: BTreeMap<usize, u64>,
    /// `r' -> every N_s entry attaining N(Γ, r')`.
    pub witnesses: BTreeMap<usize, Vec<NsValue>>,
}

impl GraphReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// `N(Γ,1) = max(λ + 2, μ)`.
    pub fn n1_consistent(&self) -> Option<bool> {
        self.n_r.get(&1).map(|&n1| n1 == (self.lambda + 2).max(self.mu))
    }
}

fn check_radius(r: usize) -> Result<()> {
    if r == 0 {
        Err(Error::Domain("radius must be positive".into()))
    } else {
        Ok(())
    }
}

fn split(values: Vec<(usize, Option<NsValue>)>) -> (BTreeMap<usize, Option<u64>>, u64, Vec<NsValue>) {
    let n_s = values.iter().map(|(s, v)| (*s, v.as_ref().map(|v| v.value))).collect();
    let best = values
        .iter()
        .filter_map(|(_, v)| v.as_ref().map(|v| v.value))
        .max()
        .unwrap_or(0);
    let attaining = values
        .into_iter()
        .filter_map(|(_, v)| v)
        .filter(|v| v.value == best)
        .collect();
    (n_s, best, attaining)
}

pub fn cayley_report(g: &CayleyGraph, r: usize) -> Result<GraphReport> {
    check_radius(r)?;
    let lm = g.lambda_mu();
    let diameter = match g.diameter() {
        Ok(d) => Some(d),
        Err(Error::Capacity { .. }) => None,
        Err(e) => return Err(e),
    };
    let mut n_r = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    let mut n_s = BTreeMap::new();
    for radius in 1..=r {
        let (table, best, attaining) = split(g.n_s_values(radius)?);
        n_r.insert(radius, best);
        witnesses.insert(radius, attaining);
        if radius == r {
            n_s = table;
        }
    }
    Ok(GraphReport {
        n: Some(g.degree()),
        generator_kind: g.kind().short_name().to_string(),
        v: factorial(g.degree())?,
        k: Some(g.valency() as u64),
        lambda: lm.lambda,
        mu: lm.mu,
        diameter,
        r,
        n_s,
        n_r,
        witnesses,
    })
}

pub fn small_graph_report(sg: &SmallGraph, r: usize) -> Result<GraphReport> {
    check_radius(r)?;
    if !sg.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut n_r = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    let mut n_s = BTreeMap::new();
    for radius in 1..=r {
        let (table, best, attaining) = split(sg.n_s_values(radius)?);
        n_r.insert(radius, best);
        witnesses.insert(radius, attaining);
        if radius == r {
            n_s = table;
        }
    }
    Ok(GraphReport {
        n: None,
        generator_kind: format!("graph:{}", sg.name()),
        v: sg.vertex_count() as u64,
        k: sg.valency().map(|k| k as u64),
        lambda: sg.lambda(),
        mu: sg.mu(),
        diameter: Some(sg.diameter()?),
        r,
        n_s,
        n_r,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::GeneratorKind;

    #[test]
    fn transposition_report_json() {
        let g = CayleyGraph::named(GeneratorKind::AllTranspositions, 4).unwrap();
        let rep = cayley_report(&g, 2).unwrap();
        assert_eq!(rep.n_r, BTreeMap::from([(1, 3), (2, 15)]));
        assert_eq!(rep.n_s[&4], None);
        assert_eq!(rep.n1_consistent(), Some(true));
        let json: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
        for key in [
            "n",
            "generator_kind",
            "v",
            "k",
            "lambda",
            "mu",
            "diameter",
            "n_s",
            "n_r",
            "witnesses",
        ] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
        assert_eq!(json["n_r"]["2"], 15);
        assert_eq!(json["n_s"]["4"], serde_json::Value::Null);
        assert_eq!(json["generator_kind"], "T");
        assert_eq!(json["witnesses"]["2"][0]["witnesses"][0]["class"], "1^1 3^1");
    }

    #[test]
    fn multipartite_report() {
        let sg = SmallGraph::complete_multipartite(2, 2).unwrap();
        let rep = small_graph_report(&sg, 1).unwrap();
        assert_eq!((rep.v, rep.k, rep.lambda, rep.mu), (4, Some(2), 0, 2));
        assert_eq!(rep.n_r[&1], 2);
    }
}
