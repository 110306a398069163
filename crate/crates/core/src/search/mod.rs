//! Exhaustive extremal searches over small graphs, candidate showdowns for
//! the large-order constructions, and theorem verification drivers.

mod enumerate;
mod showdown;
mod verify;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use enumerate::{enumerate_filtered, enumerate_graphs, CACHED_LEVELS, ENUMERATION_CAP};
pub use showdown::{candidate_showdown, ShowdownEntry, ShowdownReport};
pub use verify::{verify_theorem, CheckLine, TheoremTag, VerifyParams, VerifyReport};

use crate::certificate::{config_hash, Certificate, RunnerUp, SCHEMA_VERSION};
use crate::error::{domain, Error, Result};
use crate::families::{beta, binom2};
use crate::graph::{is_majorized_by, Graph};
use crate::graph6;
use crate::minors::{contains_minor, has_st_property, MinorPattern};
use crate::spectral::{compare_with_enclosures, rho, RootInterval};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Connectivity {
    Connected,
    Any,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pruning {
    None,
    /// Drops connected graphs above the proven edge caps before any minor test.
    EdgeBound,
    /// Keeps only graphs whose degree sequence is not strictly majorized by another
    /// feasible one with the same size. Heuristic, recorded in the certificate.
    MajorizationHeuristic,
}

/// The family a search ranges over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constraint {
    KstMinorFree { s: usize, t: usize },
    K1tMinorFree { t: usize },
    StProperty { s: usize, t: usize },
    PatternFree(MinorPattern),
}

impl Constraint {
    pub fn validate(&self) -> Result<()> {
        match self {
            Constraint::KstMinorFree { s, t } if *s == 0 || *t == 0 => domain("K_{s,t} needs s, t >= 1"),
            Constraint::K1tMinorFree { t } if *t == 0 => domain("K_{1,t} needs t >= 1"),
            Constraint::StProperty { s, t } if *s < 2 || s > t => domain(format!("(s,t)-property needs 2 <= s <= t, got s={s}, t={t}")),
            Constraint::PatternFree(p) => p.validate(),
            _ => Ok(()),
        }
    }

    pub fn holds(&self, g: &Graph) -> Result<bool> {
        match self {
            Constraint::KstMinorFree { s, t } => Ok(!contains_minor(g, &MinorPattern::Biclique(*s, *t))?),
            Constraint::K1tMinorFree { t } => Ok(!contains_minor(g, &MinorPattern::Star(*t))?),
            Constraint::StProperty { s, t } => has_st_property(g, *s, *t),
            Constraint::PatternFree(p) => Ok(!contains_minor(g, p)?),
        }
    }

    /// Proven edge cap for connected members of order `n`, when one applies.
    pub fn edge_cap(&self, n: usize) -> Option<usize> {
        match *self {
            Constraint::K1tMinorFree { t } if t >= 3 && n >= t + 2 => Some(binom2(t) + n - t),
            Constraint::StProperty { s, t } if n == t + 1 => Some(binom2(t) + beta(s, t) - 1),
            Constraint::StProperty { s, t } if n == t + 2 && beta(s, t) <= 2 => Some(binom2(t) + 2),
            _ => None,
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::KstMinorFree { s, t } => write!(f, "kst-minor-free:s={s},t={t}"),
            Constraint::K1tMinorFree { t } => write!(f, "k1t-minor-free:t={t}"),
            Constraint::StProperty { s, t } => write!(f, "st-property:s={s},t={t}"),
            Constraint::PatternFree(p) => write!(f, "pattern-free:{p}"),
        }
    }
}

impl FromStr for Constraint {
    type Err = Error;

    fn from_str(text: &str) -> Result<Constraint> {
        let bad = || Error::Domain(format!("unrecognised constraint `{text}`"));
        let (kind, rest) = text.split_once(':').ok_or_else(bad)?;
        if kind == "pattern-free" {
            return Ok(Constraint::PatternFree(rest.parse()?));
        }
        let get = |key: &str| -> Result<usize> {
            rest.split(',')
                .filter_map(|kv| kv.split_once('='))
                .find(|(k, _)| k.trim() == key)
                .ok_or_else(bad)?
                .1
                .trim()
                .parse()
                .map_err(|_| bad())
        };
        let c = match kind {
            "kst-minor-free" => Constraint::KstMinorFree { s: get("s")?, t: get("t")? },
            "k1t-minor-free" => Constraint::K1tMinorFree { t: get("t")? },
            "st-property" => Constraint::StProperty { s: get("s")?, t: get("t")? },
            _ => return Err(bad()),
        };
        c.validate()?;
        Ok(c)
    }
}

impl Serialize for Constraint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Constraint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Constraint, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSpec {
    pub n: usize,
    pub connectivity: Connectivity,
    pub constraint: Constraint,
    pub pruning: Pruning,
}

impl SearchSpec {
    pub fn new(n: usize, connectivity: Connectivity, constraint: Constraint) -> SearchSpec {
        SearchSpec { n, connectivity, constraint, pruning: Pruning::None }
    }

    pub fn with_pruning(mut self, pruning: Pruning) -> SearchSpec {
        self.pruning = pruning;
        self
    }
}

/// Graphs tied for the maximum spectral radius among `idx`, with a certified gap to the rest.
struct Ranking {
    top: Vec<usize>,
    /// Certified lower bound on the gap from the top to every other index; `None` if `idx` is all top.
    gap: Option<f64>,
}

/// Exact arg-max over `idx` by spectral radius.
fn rank(graphs: &[Graph], rhos: &[RootInterval], idx: &[usize]) -> Result<Ranking> {
    let Some(&first) = idx.iter().max_by(|&&a, &&b| rhos[a].lo.total_cmp(&rhos[b].lo).then(b.cmp(&a))) else {
        return Ok(Ranking { top: Vec::new(), gap: None });
    };
    let mut top = vec![first];
    let mut gaps: Vec<(usize, f64)> = Vec::new();
    let order: Vec<usize> = idx.iter().copied().filter(|&i| i != first).collect();
    for i in order {
        let pivot = top[0];
        if rhos[i].hi < rhos[pivot].lo {
            continue;
        }
        let c = compare_with_enclosures(&graphs[i], &rhos[i], &graphs[pivot], &rhos[pivot])?;
        match c.ordering {
            Ordering::Less => gaps.push((i, c.gap_lower_bound)),
            Ordering::Equal => top.push(i),
            Ordering::Greater => {
                gaps.extend(top.iter().map(|&j| (j, c.gap_lower_bound)));
                top = vec![i];
            }
        }
    }
    // a gap recorded against an earlier pivot is still a valid lower bound against a larger one
    let pivot = top[0];
    let mut gap = f64::INFINITY;
    let mut any = false;
    for &i in idx {
        if top.contains(&i) {
            continue;
        }
        any = true;
        let g = match gaps.iter().find(|(j, _)| *j == i) {
            Some(&(_, g)) => g,
            None => (rhos[pivot].lo - rhos[i].hi).next_down(),
        };
        gap = gap.min(g);
    }
    Ok(Ranking { top, gap: any.then_some(gap.max(0.0)) })
}

/// Degree-sequence dominance filter within each edge count.
fn majorization_filter(graphs: Vec<Graph>) -> Vec<Graph> {
    let seqs: Vec<Vec<usize>> = graphs.iter().map(|g| g.degree_sequence().into_vec()).collect();
    let sizes: Vec<usize> = graphs.iter().map(Graph::edge_count).collect();
    let keep: Vec<bool> = (0..graphs.len())
        .into_par_iter()
        .map(|i| {
            !(0..graphs.len()).any(|j| {
                sizes[j] == sizes[i] && seqs[j] != seqs[i] && is_majorized_by(&seqs[i], &seqs[j]).unwrap_or(false)
            })
        })
        .collect();
    graphs.into_iter().zip(keep).filter_map(|(g, k)| k.then_some(g)).collect()
}

/// Spectral-radius maximizers over every isomorphism class allowed by `spec`.
///
/// Ties are co-winners. Uniqueness is claimed only with a positive certified
/// gap to every other feasible class. The result does not depend on the
/// number of worker threads.
pub fn search_extremal(spec: &SearchSpec) -> Result<Certificate> {
    spec.constraint.validate()?;
    let connected = spec.connectivity == Connectivity::Connected;
    let cap = match spec.pruning {
        Pruning::EdgeBound => spec.constraint.edge_cap(spec.n),
        _ => None,
    };
    let failure = std::sync::Mutex::new(None);
    let (examined, mut feasible) = enumerate_filtered(spec.n, connected, |g| {
        if let Some(c) = cap {
            if connected && g.edge_count() > c {
                return false;
            }
        }
        spec.constraint.holds(g).unwrap_or_else(|e| {
            *failure.lock().unwrap() = Some(e);
            false
        })
    })?;
    if let Some(e) = failure.into_inner().unwrap() {
        return Err(e);
    }
    let heuristic = spec.pruning == Pruning::MajorizationHeuristic;
    let feasible_count = feasible.len();
    if heuristic {
        feasible = majorization_filter(feasible);
    }
    let rhos: Vec<RootInterval> = feasible.par_iter().map(rho).collect::<Result<_>>()?;
    let all: Vec<usize> = (0..feasible.len()).collect();
    let ranking = rank(&feasible, &rhos, &all)?;
    let mut co: Vec<(String, usize)> = ranking.top.iter().map(|&i| (graph6::encode(&feasible[i]), i)).collect();
    co.sort();
    let rest: Vec<usize> = all.iter().copied().filter(|i| !ranking.top.contains(i)).collect();
    let runner_up = if rest.is_empty() {
        None
    } else {
        let r = rank(&feasible, &rhos, &rest)?;
        let best = r.top.iter().map(|&i| (graph6::encode(&feasible[i]), i)).min().unwrap();
        Some(RunnerUp { graph6: best.0, rho: rhos[best.1], gap_lower_bound: ranking.gap.unwrap_or(0.0) })
    };
    let unique = co.len() == 1 && runner_up.as_ref().is_none_or(|r| r.gap_lower_bound > 0.0);
    Ok(Certificate {
        schema: SCHEMA_VERSION,
        spec: spec.clone(),
        examined,
        feasible: feasible_count,
        winner: co.first().map(|c| c.0.clone()),
        rho: co.first().map(|c| rhos[c.1]),
        co_winners: co.into_iter().map(|c| c.0).collect(),
        runner_up,
        unique,
        heuristic,
        config_hash: config_hash(spec),
    })
}
