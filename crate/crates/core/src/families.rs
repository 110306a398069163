//! Named extremal constructions with closed-form metadata.
//!
//! Labelling convention: a dominating clique (if any) comes first, then the
//! remaining components in the order they are listed in the variant's
//! description. Stars list their centre before their leaves.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::graph::{complement, disjoint_union, join, subdivide_min_edge, Graph};

/// Identifier of a parametric construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `H_{s,t}`: `β−1` copies of `K_{1,s}` and one `K_{1,α}`, order `t+1`.
    StarForest { s: usize, t: usize },
    StarForestComplement { s: usize, t: usize },
    /// The complement of `H_{s,t}` with one minimum-degree-sum edge subdivided once.
    SubdividedComplement { s: usize, t: usize },
    Petersen,
    PetersenComplement,
    /// Hub `w`, cut pair `u1,u2` and independent sets `A,B,C`;
    /// edges `w u1`, `w–A`, `w–B`, `u1–A`, `u1–C`, `u2–B`, `u2–C`.
    Habc { a: usize, b: usize, c: usize },
    HabcComplement { a: usize, b: usize, c: usize },
    /// Double star `w1 w2` with leaf sets `A`, `B`, cut pair `u1,u2` and set `C`;
    /// edges `w1 w2`, `w1 u1`, `w2 u1`, `w1–A`, `w2–B`, `u2–A`, `u2–B`, `u1–C`, `u2–C`.
    HprimeAbc { a: usize, b: usize, c: usize },
    /// `K_{s−1} ∇ (pK_t ∪ K_q)` with `n−s+1 = pt+q`, `1 ≤ q ≤ t`.
    TaitGraph { n: usize, s: usize, t: usize },
    /// The conjectured extremal `K_{s,t}`-minor-free graph, see [`extremal_case`].
    MinorFreeExtremal { n: usize, s: usize, t: usize },
    /// `S^{n−t}(K_t)`.
    SubdividedClique { n: usize, t: usize },
    /// `K_{t+1}` minus a perfect matching, `t` odd.
    MatchingDeletedClique { t: usize },
    CliqueMinusEdge { t: usize },
    /// Complement of `H_{1,t}`: a `K_{1,2}` or `K_2` plus a matching, complemented.
    H1tComplement { t: usize },
}

/// Which construction [`FamilySpec::MinorFreeExtremal`] resolves to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtremalCase {
    /// `K_{s−1} ∇ ((p−1)K_t ∪ complement(Petersen))` when `q = 2`, `t = 8`, `β = 1`.
    PetersenComplement,
    /// `K_{s−1} ∇ ((p−1)K_t ∪ S¹(complement(H_{s,t})))` when `q = β = 2`.
    SubdividedComplement,
    /// `K_{s−1} ∇ ((p−q)K_t ∪ q·complement(H_{s,t}))` when `q ≤ 2(β−1)`.
    StarForestComplements,
    /// `K_{s−1} ∇ (pK_t ∪ K_q)` otherwise.
    CliquePacking,
}

/// Closed-form order, size and degree sequence of a construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMetadata {
    pub order: usize,
    pub size: usize,
    /// Non-increasing.
    pub degree_sequence: Vec<usize>,
}

pub(crate) fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `β = ⌊(t+1)/(s+1)⌋`.
pub fn beta(s: usize, t: usize) -> usize {
    (t + 1) / (s + 1)
}

/// `α = t − (β−1)(s+1)`, the leaf count of the last star of `H_{s,t}`.
pub fn alpha(s: usize, t: usize) -> usize {
    t - (beta(s, t) - 1) * (s + 1)
}

/// `γ = min(s, ⌊(t+1)/2⌋)`.
pub fn gamma(s: usize, t: usize) -> usize {
    s.min((t + 1) / 2)
}

/// Splits `n − s + 1 = pt + q` with `1 ≤ q ≤ t`.
pub fn clique_split(n: usize, s: usize, t: usize) -> Result<(usize, usize)> {
    if t == 0 || n + 1 < s + 1 {
        return domain(format!("need n >= s and t >= 1 (n={n}, s={s}, t={t})"));
    }
    let m = n + 1 - s;
    let p = (m - 1) / t;
    Ok((p, m - p * t))
}

fn check_st(s: usize, t: usize) -> Result<()> {
    if s < 2 || s > t {
        return domain(format!("requires 2 <= s <= t (s={s}, t={t})"));
    }
    Ok(())
}

fn check_beta2(s: usize, t: usize) -> Result<()> {
    check_st(s, t)?;
    if beta(s, t) < 2 {
        return domain(format!(
            "requires beta = floor((t+1)/(s+1)) >= 2, got beta = {} (s={s}, t={t})",
            beta(s, t)
        ));
    }
    Ok(())
}

/// Resolves the case of the extremal map for `(n, s, t)`.
pub fn extremal_case(n: usize, s: usize, t: usize) -> Result<ExtremalCase> {
    check_st(s, t)?;
    let (p, q) = clique_split(n, s, t)?;
    let b = beta(s, t);
    let case = if q == 2 && t == 8 && b == 1 {
        ExtremalCase::PetersenComplement
    } else if q == 2 && b == 2 {
        ExtremalCase::SubdividedComplement
    } else if q <= 2 * (b.saturating_sub(1)) {
        ExtremalCase::StarForestComplements
    } else {
        ExtremalCase::CliquePacking
    };
    let need = match case {
        ExtremalCase::PetersenComplement | ExtremalCase::SubdividedComplement => 1,
        ExtremalCase::StarForestComplements => q,
        ExtremalCase::CliquePacking => 0,
    };
    if p < need {
        return domain(format!("case {case:?} needs p >= {need}, but n-s+1 = {p}*{t}+{q}"));
    }
    Ok(case)
}

fn star_forest(s: usize, t: usize) -> Graph {
    let b = beta(s, t);
    let mut parts = vec![Graph::star(s); b - 1];
    parts.push(Graph::star(alpha(s, t)));
    disjoint_union(&parts).expect("star forest fits")
}

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, &edges).expect("valid edges")
}

fn habc(a: usize, b: usize, c: usize) -> Graph {
    let (w, u1, u2) = (0, 1, 2);
    let a0 = 3;
    let b0 = a0 + a;
    let c0 = b0 + b;
    let mut g = Graph::empty(c0 + c);
    g.add_edge(w, u1);
    for x in a0..b0 {
        g.add_edge(w, x);
        g.add_edge(u1, x);
    }
    for x in b0..c0 {
        g.add_edge(w, x);
        g.add_edge(u2, x);
    }
    for x in c0..c0 + c {
        g.add_edge(u1, x);
        g.add_edge(u2, x);
    }
    g
}

fn hprime(a: usize, b: usize, c: usize) -> Graph {
    let (w1, w2, u1, u2) = (0, 1, 2, 3);
    let a0 = 4;
    let b0 = a0 + a;
    let c0 = b0 + b;
    let mut g = Graph::empty(c0 + c);
    g.add_edge(w1, w2);
    g.add_edge(w1, u1);
    g.add_edge(w2, u1);
    for x in a0..b0 {
        g.add_edge(w1, x);
        g.add_edge(u2, x);
    }
    for x in b0..c0 {
        g.add_edge(w2, x);
        g.add_edge(u2, x);
    }
    for x in c0..c0 + c {
        g.add_edge(u1, x);
        g.add_edge(u2, x);
    }
    g
}

fn check_habc(a: usize, b: usize, c: usize) -> Result<()> {
    if b == 0 || c == 0 {
        return domain(format!("requires b, c >= 1 (a={a}, b={b}, c={c})"));
    }
    Ok(())
}

fn dominated(clique: usize, parts: &[Graph]) -> Result<Graph> {
    join(&Graph::complete(clique), &disjoint_union(parts)?)
}

impl FamilySpec {
    /// Checks parameter domains without building anything.
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::StarForest { s, t } => check_st(s, t),
            FamilySpec::StarForestComplement { s, t } | FamilySpec::SubdividedComplement { s, t } => {
                check_beta2(s, t)
            }
            FamilySpec::Petersen | FamilySpec::PetersenComplement => Ok(()),
            FamilySpec::Habc { a, b, c } | FamilySpec::HabcComplement { a, b, c } => check_habc(a, b, c),
            FamilySpec::HprimeAbc { a, b, c } => {
                if a == 0 || b == 0 || c == 0 {
                    return domain(format!("requires a, b, c >= 1 (a={a}, b={b}, c={c})"));
                }
                Ok(())
            }
            FamilySpec::TaitGraph { n, s, t } => {
                check_st(s, t)?;
                clique_split(n, s, t).map(|_| ())
            }
            FamilySpec::MinorFreeExtremal { n, s, t } => extremal_case(n, s, t).map(|_| ()),
            FamilySpec::SubdividedClique { n, t } => {
                if t < 2 || n < t {
                    return domain(format!("requires 2 <= t <= n (n={n}, t={t})"));
                }
                Ok(())
            }
            FamilySpec::MatchingDeletedClique { t } => {
                if t % 2 == 0 {
                    return domain(format!("requires t odd so that (t+1)/2 independent edges exist (t={t})"));
                }
                Ok(())
            }
            FamilySpec::CliqueMinusEdge { t } => {
                if t < 2 {
                    return domain(format!("requires t >= 2 (t={t})"));
                }
                Ok(())
            }
            FamilySpec::H1tComplement { t } => {
                if t < 2 {
                    return domain(format!("requires t >= 2 (t={t})"));
                }
                Ok(())
            }
        }
    }

    /// `(s, t)` the construction is associated with, if any.
    pub fn st(&self) -> Option<(usize, usize)> {
        match *self {
            FamilySpec::StarForest { s, t }
            | FamilySpec::StarForestComplement { s, t }
            | FamilySpec::SubdividedComplement { s, t }
            | FamilySpec::TaitGraph { s, t, .. }
            | FamilySpec::MinorFreeExtremal { s, t, .. } => Some((s, t)),
            _ => None,
        }
    }
}

/// Builds the construction named by `spec`.
pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    match *spec {
        FamilySpec::StarForest { s, t } => Ok(star_forest(s, t)),
        FamilySpec::StarForestComplement { s, t } => Ok(complement(&star_forest(s, t))),
        FamilySpec::SubdividedComplement { s, t } => subdivide_min_edge(&complement(&star_forest(s, t)), 1),
        FamilySpec::Petersen => Ok(petersen()),
        FamilySpec::PetersenComplement => Ok(complement(&petersen())),
        FamilySpec::Habc { a, b, c } => Ok(habc(a, b, c)),
        FamilySpec::HabcComplement { a, b, c } => Ok(complement(&habc(a, b, c))),
        FamilySpec::HprimeAbc { a, b, c } => Ok(hprime(a, b, c)),
        FamilySpec::TaitGraph { n, s, t } => {
            let (p, q) = clique_split(n, s, t)?;
            let mut parts = vec![Graph::complete(t); p];
            parts.push(Graph::complete(q));
            dominated(s - 1, &parts)
        }
        FamilySpec::MinorFreeExtremal { n, s, t } => {
            let (p, q) = clique_split(n, s, t)?;
            let mut parts: Vec<Graph>;
            match extremal_case(n, s, t)? {
                ExtremalCase::PetersenComplement => {
                    parts = vec![Graph::complete(t); p - 1];
                    parts.push(complement(&petersen()));
                }
                ExtremalCase::SubdividedComplement => {
                    parts = vec![Graph::complete(t); p - 1];
                    parts.push(build_family(&FamilySpec::SubdividedComplement { s, t })?);
                }
                ExtremalCase::StarForestComplements => {
                    parts = vec![Graph::complete(t); p - q];
                    parts.extend(std::iter::repeat_n(complement(&star_forest(s, t)), q));
                }
                ExtremalCase::CliquePacking => {
                    parts = vec![Graph::complete(t); p];
                    parts.push(Graph::complete(q));
                }
            }
            dominated(s - 1, &parts)
        }
        FamilySpec::SubdividedClique { n, t } => subdivide_min_edge(&Graph::complete(t), n - t),
        FamilySpec::MatchingDeletedClique { t } => {
            let mut g = Graph::complete(t + 1);
            for i in (0..t + 1).step_by(2) {
                g.remove_edge(i, i + 1);
            }
            Ok(g)
        }
        FamilySpec::CliqueMinusEdge { t } => {
            let mut g = Graph::complete(t);
            g.remove_edge(0, 1);
            Ok(g)
        }
        FamilySpec::H1tComplement { t } => Ok(complement(&star_forest(1, t))),
    }
}

fn meta(order: usize, mut degrees: Vec<usize>) -> FamilyMetadata {
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let size = degrees.iter().sum::<usize>() / 2;
    FamilyMetadata { order, size, degree_sequence: degrees }
}

fn repeat(value: usize, times: usize) -> impl Iterator<Item = usize> {
    std::iter::repeat_n(value, times)
}

fn star_forest_degrees(s: usize, t: usize) -> Vec<usize> {
    let b = beta(s, t);
    repeat(s, b - 1).chain([alpha(s, t)]).chain(repeat(1, t + 1 - b)).collect()
}

fn complement_degrees(order: usize, degrees: &[usize]) -> Vec<usize> {
    degrees.iter().map(|d| order - 1 - d).collect()
}

fn clique_degrees(k: usize) -> Vec<usize> {
    vec![k.saturating_sub(1); k]
}

/// Degrees of `K_k ∇ (parts)`, given the parts' degree lists.
fn dominated_degrees(k: usize, parts: &[Vec<usize>]) -> (usize, Vec<usize>) {
    let rest: usize = parts.iter().map(Vec::len).sum();
    let n = k + rest;
    let mut out = vec![n.saturating_sub(1); k];
    for p in parts {
        out.extend(p.iter().map(|d| d + k));
    }
    (n, out)
}

fn habc_degrees(a: usize, b: usize, c: usize) -> Vec<usize> {
    [1 + a + b, 1 + a + c, b + c].into_iter().chain(repeat(2, a + b + c)).collect()
}

/// Closed-form predictions for `build_family(spec)`, derived without building the graph.
pub fn family_metadata(spec: &FamilySpec) -> Result<FamilyMetadata> {
    spec.validate()?;
    let m = match *spec {
        FamilySpec::StarForest { s, t } => meta(t + 1, star_forest_degrees(s, t)),
        FamilySpec::StarForestComplement { s, t } => {
            meta(t + 1, complement_degrees(t + 1, &star_forest_degrees(s, t)))
        }
        FamilySpec::SubdividedComplement { .. } => {
            let (s, t) = spec.st().expect("has (s,t)");
            let mut d = complement_degrees(t + 1, &star_forest_degrees(s, t));
            d.push(2);
            meta(t + 2, d)
        }
        FamilySpec::Petersen => meta(10, vec![3; 10]),
        FamilySpec::PetersenComplement => meta(10, vec![6; 10]),
        FamilySpec::Habc { a, b, c } => meta(a + b + c + 3, habc_degrees(a, b, c)),
        FamilySpec::HabcComplement { a, b, c } => {
            let n = a + b + c + 3;
            meta(n, complement_degrees(n, &habc_degrees(a, b, c)))
        }
        FamilySpec::HprimeAbc { a, b, c } => {
            let d = [2 + a, 2 + b, 2 + c, a + b + c].into_iter().chain(repeat(2, a + b + c)).collect();
            meta(a + b + c + 4, d)
        }
        FamilySpec::TaitGraph { n, s, t } => {
            let (p, q) = clique_split(n, s, t)?;
            let mut parts = vec![clique_degrees(t); p];
            parts.push(clique_degrees(q));
            let (order, d) = dominated_degrees(s - 1, &parts);
            meta(order, d)
        }
        FamilySpec::MinorFreeExtremal { n, s, t } => {
            let (p, q) = clique_split(n, s, t)?;
            let mut parts;
            match extremal_case(n, s, t)? {
                ExtremalCase::PetersenComplement => {
                    parts = vec![clique_degrees(t); p - 1];
                    parts.push(vec![6; 10]);
                }
                ExtremalCase::SubdividedComplement => {
                    parts = vec![clique_degrees(t); p - 1];
                    parts.push(family_metadata(&FamilySpec::SubdividedComplement { s, t })?.degree_sequence);
                }
                ExtremalCase::StarForestComplements => {
                    parts = vec![clique_degrees(t); p - q];
                    let h = complement_degrees(t + 1, &star_forest_degrees(s, t));
                    parts.extend(std::iter::repeat_n(h, q));
                }
                ExtremalCase::CliquePacking => {
                    parts = vec![clique_degrees(t); p];
                    parts.push(clique_degrees(q));
                }
            }
            let (order, d) = dominated_degrees(s - 1, &parts);
            meta(order, d)
        }
        FamilySpec::SubdividedClique { n, t } => {
            let d = if n == t {
                clique_degrees(t)
            } else {
                repeat(t - 1, t).chain(repeat(2, n - t)).collect()
            };
            meta(n, d)
        }
        FamilySpec::MatchingDeletedClique { t } => meta(t + 1, vec![t - 1; t + 1]),
        FamilySpec::CliqueMinusEdge { t } => meta(t, repeat(t - 1, t - 2).chain(repeat(t - 2, 2)).collect()),
        FamilySpec::H1tComplement { t } => meta(t + 1, complement_degrees(t + 1, &star_forest_degrees(1, t))),
    };
    Ok(m)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::StarForest { s, t } => write!(f, "star-forest:s={s},t={t}"),
            FamilySpec::StarForestComplement { s, t } => write!(f, "star-forest-complement:s={s},t={t}"),
            FamilySpec::SubdividedComplement { s, t } => write!(f, "subdivided-complement:s={s},t={t}"),
            FamilySpec::Petersen => write!(f, "petersen"),
            FamilySpec::PetersenComplement => write!(f, "petersen-complement"),
            FamilySpec::Habc { a, b, c } => write!(f, "habc:a={a},b={b},c={c}"),
            FamilySpec::HabcComplement { a, b, c } => write!(f, "habc-complement:a={a},b={b},c={c}"),
            FamilySpec::HprimeAbc { a, b, c } => write!(f, "hprime:a={a},b={b},c={c}"),
            FamilySpec::TaitGraph { n, s, t } => write!(f, "tait:n={n},s={s},t={t}"),
            FamilySpec::MinorFreeExtremal { n, s, t } => write!(f, "extremal:n={n},s={s},t={t}"),
            FamilySpec::SubdividedClique { n, t } => write!(f, "subdivided-clique:n={n},t={t}"),
            FamilySpec::MatchingDeletedClique { t } => write!(f, "matching-deleted-clique:t={t}"),
            FamilySpec::CliqueMinusEdge { t } => write!(f, "clique-minus-edge:t={t}"),
            FamilySpec::H1tComplement { t } => write!(f, "h1t-complement:t={t}"),
        }
    }
}

fn parse_failure(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses the text form produced by `Display`, e.g. `tait:n=22,s=5,t=8`.
    fn from_str(text: &str) -> Result<FamilySpec> {
        let (name, args) = text.split_once(':').unwrap_or((text, ""));
        let mut params: Vec<(&str, usize)> = Vec::new();
        let mut offset = name.len() + 1;
        if !args.is_empty() {
            for item in args.split(',') {
                let (key, value) = item
                    .split_once('=')
                    .ok_or_else(|| parse_failure(offset, format!("expected key=value, found {item:?}")))?;
                let value: usize = value
                    .trim()
                    .parse()
                    .map_err(|_| parse_failure(offset + key.len() + 1, format!("invalid integer {value:?}")))?;
                params.push((key.trim(), value));
                offset += item.len() + 1;
            }
        }
        let expected: &[&str] = match name {
            "petersen" | "petersen-complement" => &[],
            "star-forest" | "star-forest-complement" | "subdivided-complement" => &["s", "t"],
            "habc" | "habc-complement" | "hprime" => &["a", "b", "c"],
            "tait" | "extremal" => &["n", "s", "t"],
            "subdivided-clique" => &["n", "t"],
            "matching-deleted-clique" | "clique-minus-edge" | "h1t-complement" => &["t"],
            _ => return Err(parse_failure(0, format!("unknown family {name:?}"))),
        };
        let get = |key: &str| -> Result<usize> {
            params
                .iter()
                .find(|(k, _)| *k == key)
                .map(|&(_, v)| v)
                .ok_or_else(|| parse_failure(name.len(), format!("missing parameter {key} for {name}")))
        };
        if let Some((k, _)) = params.iter().find(|(k, _)| !expected.contains(k)) {
            return Err(parse_failure(name.len(), format!("unexpected parameter {k} for {name}")));
        }
        let spec = match name {
            "petersen" => FamilySpec::Petersen,
            "petersen-complement" => FamilySpec::PetersenComplement,
            "star-forest" => FamilySpec::StarForest { s: get("s")?, t: get("t")? },
            "star-forest-complement" => FamilySpec::StarForestComplement { s: get("s")?, t: get("t")? },
            "subdivided-complement" => FamilySpec::SubdividedComplement { s: get("s")?, t: get("t")? },
            "habc" => FamilySpec::Habc { a: get("a")?, b: get("b")?, c: get("c")? },
            "habc-complement" => FamilySpec::HabcComplement { a: get("a")?, b: get("b")?, c: get("c")? },
            "hprime" => FamilySpec::HprimeAbc { a: get("a")?, b: get("b")?, c: get("c")? },
            "tait" => FamilySpec::TaitGraph { n: get("n")?, s: get("s")?, t: get("t")? },
            "extremal" => FamilySpec::MinorFreeExtremal { n: get("n")?, s: get("s")?, t: get("t")? },
            "subdivided-clique" => FamilySpec::SubdividedClique { n: get("n")?, t: get("t")? },
            "matching-deleted-clique" => FamilySpec::MatchingDeletedClique { t: get("t")? },
            "clique-minus-edge" => FamilySpec::CliqueMinusEdge { t: get("t")? },
            "h1t-complement" => FamilySpec::H1tComplement { t: get("t")? },
            _ => unreachable!("name checked above"),
        };
        Ok(spec)
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FamilySpec {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// A representative set of valid specs with small parameters.
pub fn sample_specs() -> Vec<FamilySpec> {
    let mut out = vec![FamilySpec::Petersen, FamilySpec::PetersenComplement];
    for t in 2..=9 {
        for s in 2..=t {
            out.push(FamilySpec::StarForest { s, t });
            if beta(s, t) >= 2 {
                out.push(FamilySpec::StarForestComplement { s, t });
                out.push(FamilySpec::SubdividedComplement { s, t });
            }
            for n in s + t..s + 3 * t {
                out.push(FamilySpec::TaitGraph { n, s, t });
                if extremal_case(n, s, t).is_ok() {
                    out.push(FamilySpec::MinorFreeExtremal { n, s, t });
                }
            }
        }
        out.push(FamilySpec::CliqueMinusEdge { t });
        out.push(FamilySpec::H1tComplement { t });
        if t % 2 == 1 {
            out.push(FamilySpec::MatchingDeletedClique { t });
        }
        for n in t..t + 6 {
            out.push(FamilySpec::SubdividedClique { n, t });
        }
    }
    for a in 0..4 {
        for b in 1..4 {
            for c in 1..4 {
                out.push(FamilySpec::Habc { a, b, c });
                out.push(FamilySpec::HabcComplement { a, b, c });
                if a >= 1 {
                    out.push(FamilySpec::HprimeAbc { a, b, c });
                }
            }
        }
    }
    out
}
