//! Ranking the candidate constructions for `K_{s,t}`-minor-free graphs at a given order.
//!
//! Every candidate is `K_{s-1} ∇ R` for a residual graph `R` of order
//! `n-s+1 = pt+q`. The menu holds the four case constructions whenever they
//! can be built at `(n,s,t)`, and for `q = 2` also every `(p-1)K_t ∪
//! complement(H_{a,b,c})`, the other order-`(t+2)` components with
//! `C(t,2)+2` edges. Candidates are deduplicated by the isomorphism classes of
//! their components and kept only if the join is `K_{s,t}`-minor-free.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::families::{beta, build_family, clique_split, extremal_case, ExtremalCase, FamilySpec};
use crate::graph::{canonical_code, disjoint_union, join, CanonicalCode, Graph};
use crate::minors::dominated_join_check;
use crate::spectral::{compare_with_enclosures, rho, RootInterval};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShowdownEntry {
    pub label: String,
    /// Set for candidates that have a family text form.
    pub spec: Option<String>,
    pub case: Option<ExtremalCase>,
    pub designated: bool,
    pub minor_free: bool,
    pub order: usize,
    pub size: usize,
    pub rho: RootInterval,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShowdownReport {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub p: usize,
    pub q: usize,
    pub beta: usize,
    pub designated_case: ExtremalCase,
    /// Minor-free candidates, largest spectral radius first.
    pub ranked: Vec<ShowdownEntry>,
    /// Candidates dropped because the join has a `K_{s,t}` minor.
    pub rejected: Vec<ShowdownEntry>,
    /// Only one minor-free candidate exists.
    pub uncontested: bool,
    pub designated_first: bool,
    /// The first entry beats the second by a certified positive gap.
    pub strict: bool,
    /// Certified lower bound on `ρ(first) − ρ(second)`.
    pub gap_lower_bound: Option<f64>,
    /// Certified lower bound on `ρ(best other) − ρ(designated)` when the designated one is not first.
    pub deficit_lower_bound: Option<f64>,
}

impl ShowdownReport {
    /// Designated construction strictly first with at least `min_gap` to the runner-up.
    pub fn designated_wins(&self, min_gap: f64) -> bool {
        self.designated_first && (self.uncontested || (self.strict && self.gap_lower_bound.is_some_and(|g| g >= min_gap)))
    }
}

struct Candidate {
    label: String,
    spec: Option<FamilySpec>,
    case: Option<ExtremalCase>,
    residual: Vec<Graph>,
}

fn cliques(k: usize, t: usize) -> Vec<Graph> {
    vec![Graph::complete(t); k]
}

fn menu(n: usize, s: usize, t: usize, p: usize, q: usize) -> Result<Vec<Candidate>> {
    let b = beta(s, t);
    let k = s - 1;
    let mut out = Vec::new();
    out.push(Candidate {
        label: format!("K_{k} ∇ ({p}K_{t} ∪ K_{q})"),
        spec: Some(FamilySpec::TaitGraph { n, s, t }),
        case: Some(ExtremalCase::CliquePacking),
        residual: {
            let mut r = cliques(p, t);
            r.push(Graph::complete(q));
            r
        },
    });
    if q == 2 && t == 8 && p >= 1 {
        let mut r = cliques(p - 1, t);
        r.push(build_family(&FamilySpec::PetersenComplement)?);
        out.push(Candidate {
            label: format!("K_{k} ∇ ({}K_{t} ∪ complement(Petersen))", p - 1),
            spec: None,
            case: Some(ExtremalCase::PetersenComplement),
            residual: r,
        });
    }
    if b >= 2 && q == 2 && p >= 1 {
        let mut r = cliques(p - 1, t);
        r.push(build_family(&FamilySpec::SubdividedComplement { s, t })?);
        out.push(Candidate {
            label: format!("K_{k} ∇ ({}K_{t} ∪ S¹(complement(H_{{{s},{t}}})))", p - 1),
            spec: None,
            case: Some(ExtremalCase::SubdividedComplement),
            residual: r,
        });
    }
    if b >= 2 && p >= q {
        let mut r = cliques(p - q, t);
        r.extend(std::iter::repeat_n(build_family(&FamilySpec::StarForestComplement { s, t })?, q));
        out.push(Candidate {
            label: format!("K_{k} ∇ ({}K_{t} ∪ {q}·complement(H_{{{s},{t}}}))", p - q),
            spec: None,
            case: Some(ExtremalCase::StarForestComplements),
            residual: r,
        });
    }
    if q == 2 && p >= 1 && t >= 3 {
        for a in 0..=t - 3 {
            for bb in 1..=t - 1 - a {
                let c = t - 1 - a - bb;
                if c < bb {
                    continue;
                }
                let mut r = cliques(p - 1, t);
                r.push(build_family(&FamilySpec::HabcComplement { a, b: bb, c })?);
                out.push(Candidate {
                    label: format!("K_{k} ∇ ({}K_{t} ∪ complement(H_{{{a},{bb},{c}}}))", p - 1),
                    spec: None,
                    case: None,
                    residual: r,
                });
            }
        }
    }
    Ok(out)
}

fn signature(parts: &[Graph]) -> Result<Vec<CanonicalCode>> {
    let mut v = parts.iter().map(canonical_code).collect::<Result<Vec<_>>>()?;
    v.sort();
    Ok(v)
}

/// Builds, filters and ranks the candidate menu at `(n, s, t)`.
pub fn candidate_showdown(n: usize, s: usize, t: usize) -> Result<ShowdownReport> {
    if s < 2 || s > t {
        return domain(format!("showdown needs 2 <= s <= t, got s={s}, t={t}"));
    }
    let designated_case = extremal_case(n, s, t)?;
    let (p, q) = clique_split(n, s, t)?;
    let mut seen: Vec<Vec<CanonicalCode>> = Vec::new();
    let mut cands = Vec::new();
    // the designated construction goes first so it keeps its label under deduplication
    let mut all = menu(n, s, t, p, q)?;
    all.sort_by_key(|c| c.case != Some(designated_case));
    for c in all {
        let sig = signature(&c.residual)?;
        if !seen.contains(&sig) {
            seen.push(sig);
            cands.push(c);
        }
    }
    if cands.is_empty() {
        return domain(format!("no candidate constructible at n={n}, s={s}, t={t}"));
    }
    let built: Vec<(Candidate, Graph, bool, RootInterval)> = cands
        .into_par_iter()
        .map(|c| {
            let r = disjoint_union(&c.residual)?;
            let free = dominated_join_check(&r, s, t)?;
            let g = join(&Graph::complete(s - 1), &r)?;
            let iv = rho(&g)?;
            Ok((c, g, free, iv))
        })
        .collect::<Result<_>>()?;
    let mut ranked = Vec::new();
    let mut rejected = Vec::new();
    for (c, g, free, iv) in built {
        let entry = ShowdownEntry {
            label: c.label,
            spec: c.spec.map(|s| s.to_string()),
            case: c.case,
            designated: c.case == Some(designated_case),
            minor_free: free,
            order: g.order(),
            size: g.edge_count(),
            rho: iv,
        };
        if free {
            ranked.push((entry, g));
        } else {
            rejected.push(entry);
        }
    }
    ranked.sort_by(|a, b| b.0.rho.mid().total_cmp(&a.0.rho.mid()));
    let mut strict = ranked.len() == 1;
    let mut gap = None;
    if ranked.len() >= 2 {
        match compare_with_enclosures(&ranked[0].1, &ranked[0].0.rho, &ranked[1].1, &ranked[1].0.rho) {
            Ok(c) => {
                if c.ordering == Ordering::Less {
                    ranked.swap(0, 1);
                }
                strict = c.ordering != Ordering::Equal && c.gap_lower_bound > 0.0;
                gap = Some(c.gap_lower_bound);
            }
            Err(Error::Precision(_)) => {}
            Err(e) => return Err(e),
        }
    }
    let designated_first = ranked.first().is_some_and(|e| e.0.designated);
    let mut deficit = None;
    if !designated_first {
        if let Some(d) = ranked.iter().position(|e| e.0.designated) {
            if let Ok(c) = compare_with_enclosures(&ranked[0].1, &ranked[0].0.rho, &ranked[d].1, &ranked[d].0.rho) {
                if c.ordering == Ordering::Greater {
                    deficit = Some(c.gap_lower_bound);
                }
            }
        }
    }
    Ok(ShowdownReport {
        n,
        s,
        t,
        p,
        q,
        beta: beta(s, t),
        designated_case,
        uncontested: ranked.len() == 1,
        ranked: ranked.into_iter().map(|e| e.0).collect(),
        rejected,
        designated_first,
        strict,
        gap_lower_bound: gap,
        deficit_lower_bound: deficit,
    })
}
