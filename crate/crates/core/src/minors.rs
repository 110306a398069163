//! Minor containment with branch-set witnesses, the `(s,t)`-property and the
//! dominated-join reduction.
//!
//! All searches run on bitset rows. A connected pattern is looked for one
//! component at a time, so large general-tier graphs are fine as long as each
//! component fits the fast tier.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{capacity, domain, Error, Result};
use crate::families::gamma;
use crate::graph::{bit, complement, low_bits, set_neighborhood, Bits, Graph, FAST_CAPACITY};
use crate::graph6;

/// Largest host order accepted by the brute-force oracle.
pub const BRUTEFORCE_CAPACITY: usize = 8;

/// Target of a minor query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinorPattern {
    Explicit(Graph),
    /// `K_{1,t}`.
    Star(usize),
    /// `K_{a,b}`.
    Biclique(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorMode {
    Fast,
    Bruteforce,
}

impl MinorPattern {
    pub fn validate(&self) -> Result<()> {
        match *self {
            MinorPattern::Star(t) if t == 0 => domain("star pattern needs t >= 1"),
            MinorPattern::Biclique(a, b) if a == 0 || b == 0 => domain("biclique pattern needs a, b >= 1"),
            MinorPattern::Explicit(ref h) if h.order() > FAST_CAPACITY => {
                capacity(format!("pattern order {} exceeds {FAST_CAPACITY}", h.order()))
            }
            _ => Ok(()),
        }
    }

    /// The pattern as a graph. Stars have centre 0; bicliques have parts `0..a` and `a..a+b`.
    pub fn graph(&self) -> Graph {
        match self {
            MinorPattern::Explicit(h) => h.clone(),
            MinorPattern::Star(t) => Graph::star(*t),
            MinorPattern::Biclique(a, b) => Graph::complete_bipartite(*a, *b),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            MinorPattern::Explicit(h) => h.order(),
            MinorPattern::Star(t) => t + 1,
            MinorPattern::Biclique(a, b) => a + b,
        }
    }
}

impl fmt::Display for MinorPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinorPattern::Explicit(h) => write!(f, "graph:{}", graph6::encode(h)),
            MinorPattern::Star(t) => write!(f, "star:{t}"),
            MinorPattern::Biclique(a, b) => write!(f, "biclique:{a},{b}"),
        }
    }
}

impl FromStr for MinorPattern {
    type Err = Error;

    /// Accepts `star:t`, `biclique:a,b` and `graph:<graph6>`.
    fn from_str(s: &str) -> Result<MinorPattern> {
        let bad = || Error::Domain(format!("unrecognised pattern `{s}` (expected star:t, biclique:a,b or graph:<graph6>)"));
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        let num = |x: &str| x.trim().parse::<usize>().map_err(|_| bad());
        let p = match kind.trim() {
            "star" => MinorPattern::Star(num(rest)?),
            "biclique" => {
                let (a, b) = rest.split_once(',').ok_or_else(bad)?;
                MinorPattern::Biclique(num(a)?, num(b)?)
            }
            "graph" | "g6" => MinorPattern::Explicit(graph6::decode(rest.trim())?),
            _ => return Err(bad()),
        };
        p.validate()?;
        Ok(p)
    }
}

/// Branch sets of a minor model, indexed by pattern vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchModel {
    sets: Vec<Vec<usize>>,
}

impl BranchModel {
    pub fn new(mut sets: Vec<Vec<usize>>) -> BranchModel {
        for s in &mut sets {
            s.sort_unstable();
        }
        BranchModel { sets }
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    /// Checks disjointness, connectivity of each set and one host edge per pattern edge.
    pub fn is_valid(&self, g: &Graph, pattern: &Graph) -> bool {
        if self.sets.len() != pattern.order() {
            return false;
        }
        let mut owner = vec![usize::MAX; g.order()];
        for (i, set) in self.sets.iter().enumerate() {
            if set.is_empty() {
                return false;
            }
            for &v in set {
                if v >= g.order() || owner[v] != usize::MAX {
                    return false;
                }
                owner[v] = i;
            }
            if !g.induced_subgraph(set).is_connected() {
                return false;
            }
        }
        pattern.edges().into_iter().all(|(p, q)| {
            self.sets[p]
                .iter()
                .any(|&v| g.neighbors(v).any(|w| owner[w] == q))
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("branch model serializes")
    }
}

impl Serialize for BranchModel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.sets.len()))?;
        for (i, set) in self.sets.iter().enumerate() {
            m.serialize_entry(&i.to_string(), set)?;
        }
        m.end()
    }
}

/// Decides whether `g` has `pattern` as a minor and returns a minimized witness.
///
/// `Fast` needs every component (or, for a disconnected pattern, the whole
/// graph) in the fast tier. `Bruteforce` tries every assignment of host
/// vertices to pattern vertices and needs `n <= 8`.
pub fn has_minor(g: &Graph, pattern: &MinorPattern, mode: MinorMode) -> Result<Option<BranchModel>> {
    pattern.validate()?;
    let h = pattern.graph();
    let hrows = h.fast_rows()?.to_vec();
    if h.order() == 0 {
        return Ok(Some(BranchModel::new(Vec::new())));
    }
    if mode == MinorMode::Bruteforce && g.order() > BRUTEFORCE_CAPACITY {
        return capacity(format!("brute-force minor search is limited to n <= {BRUTEFORCE_CAPACITY}"));
    }
    if h.order() > g.order() || h.edge_count() > g.edge_count() {
        return Ok(None);
    }
    match mode {
        MinorMode::Bruteforce => {
            let rows = g.fast_rows()?;
            Ok(bruteforce(rows, &hrows).map(|m| to_model(&m, None)))
        }
        MinorMode::Fast => {
            if !h.is_connected() {
                let rows = g.fast_rows()?;
                return Ok(general_model(rows, &hrows).map(|m| to_model(&minimize(rows, &hrows, m), None)));
            }
            let comps = g.component_vertex_sets();
            if comps.len() == 1 {
                let rows = g.fast_rows()?;
                return Ok(fast_search(rows, pattern, &hrows).map(|m| to_model(&minimize(rows, &hrows, m), None)));
            }
            for comp in comps {
                if comp.len() < h.order() {
                    continue;
                }
                if comp.len() > FAST_CAPACITY {
                    return capacity(format!("component of order {} exceeds the fast tier", comp.len()));
                }
                let sub = g.induced_subgraph(&comp);
                let rows = sub.fast_rows()?;
                if let Some(m) = fast_search(rows, pattern, &hrows) {
                    return Ok(Some(to_model(&minimize(rows, &hrows, m), Some(&comp))));
                }
            }
            Ok(None)
        }
    }
}

/// Boolean form of [`has_minor`] in fast mode.
pub fn contains_minor(g: &Graph, pattern: &MinorPattern) -> Result<bool> {
    Ok(has_minor(g, pattern, MinorMode::Fast)?.is_some())
}

fn to_model(masks: &[u64], labels: Option<&[usize]>) -> BranchModel {
    BranchModel::new(
        masks
            .iter()
            .map(|&m| Bits(m).map(|v| labels.map_or(v, |l| l[v])).collect())
            .collect(),
    )
}

fn fast_search(rows: &[u64], pattern: &MinorPattern, hrows: &[u64]) -> Option<Vec<u64>> {
    match *pattern {
        MinorPattern::Star(t) => star_model(rows, t),
        MinorPattern::Biclique(a, b) => {
            let (lo, hi) = (a.min(b), a.max(b));
            let mut m = if lo == 1 { star_model(rows, hi)? } else { biclique_model(rows, lo, hi)? };
            if a > b {
                m.rotate_left(lo);
            }
            Some(m)
        }
        MinorPattern::Explicit(_) => general_model(rows, hrows),
    }
}

/// Calls `f` on every connected subset of `allowed` whose smallest vertex is
/// `root`, with at most `max_size` vertices. Each set is visited once.
/// `f` decides whether to stop, to skip supersets of the set, or to go on.
/// Returns `false` iff the walk was stopped.
fn connected_sets_from<F>(rows: &[u64], root: usize, allowed: u64, max_size: usize, f: &mut F) -> bool
where
    F: FnMut(u64) -> Visit,
{
    if max_size == 0 || allowed & bit(root) == 0 {
        return true;
    }
    let allowed = allowed & !low_bits(root);
    fn rec<F: FnMut(u64) -> Visit>(rows: &[u64], set: u64, ext: u64, excl: u64, allowed: u64, left: usize, f: &mut F) -> bool {
        match f(set) {
            Visit::Stop => return false,
            Visit::Prune => return true,
            Visit::Continue => {}
        }
        if left == 0 {
            return true;
        }
        let mut ext = ext;
        let mut excl = excl;
        while ext != 0 {
            let u = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let fresh = rows[u] & allowed & !(set | excl | ext | bit(u));
            if !rec(rows, set | bit(u), ext | fresh, excl, allowed, left - 1, f) {
                return false;
            }
            excl |= bit(u);
        }
        true
    }
    rec(rows, bit(root), rows[root] & allowed, 0, allowed, max_size - 1, f)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Visit {
    Continue,
    /// Keep going, but do not grow this set.
    Prune,
    Stop,
}

/// `K_{1,t}`: some connected `S` with `|N(S)| >= t`; the leaves can be single vertices of `N(S)`.
fn star_model(rows: &[u64], t: usize) -> Option<Vec<u64>> {
    let n = rows.len();
    if t + 1 > n {
        return None;
    }
    let with_leaves = |s: u64| {
        let mut m = vec![s];
        m.extend(Bits(set_neighborhood(rows, s)).take(t).map(bit));
        m
    };
    if let Some(v) = (0..n).find(|&v| rows[v].count_ones() as usize >= t) {
        return Some(with_leaves(bit(v)));
    }
    let all = low_bits(n);
    let mut found = None;
    for root in 0..n {
        let done = !connected_sets_from(rows, root, all, n - t, &mut |s| {
            if set_neighborhood(rows, s).count_ones() as usize >= t {
                found = Some(s);
                Visit::Stop
            } else {
                Visit::Continue
            }
        });
        if done {
            break;
        }
    }
    found.map(with_leaves)
}

/// `K_{a,b}` with `2 <= a <= b`: search the `a` small-side sets, then pack the large side exactly.
fn biclique_model(rows: &[u64], a: usize, b: usize) -> Option<Vec<u64>> {
    let n = rows.len();
    if a + b > n {
        return None;
    }
    let mut chosen = Vec::with_capacity(a);
    small_side(rows, a, b, &mut chosen, 0, 0)
}

fn small_side(rows: &[u64], a: usize, b: usize, chosen: &mut Vec<u64>, used: u64, from: usize) -> Option<Vec<u64>> {
    let n = rows.len();
    let all = low_bits(n);
    if chosen.len() == a {
        let rest = all & !used;
        let big = if a == 2 {
            menger_sets(rows, chosen[0], chosen[1], rest, b)
        } else {
            pack_large_side(rows, chosen, rest, b)
        }?;
        let mut m = chosen.clone();
        m.extend(big);
        return Some(m);
    }
    let later = a - chosen.len() - 1;
    let budget = n.saturating_sub(b + used.count_ones() as usize + later);
    if budget == 0 {
        return None;
    }
    for root in from..n {
        if used & bit(root) != 0 {
            continue;
        }
        let mut result = None;
        connected_sets_from(rows, root, all & !used, budget, &mut |s| {
            if (set_neighborhood(rows, s) & !used).count_ones() < b as u32 {
                return Visit::Continue;
            }
            chosen.push(s);
            result = small_side(rows, a, b, chosen, used | s, root + 1);
            chosen.pop();
            if result.is_some() {
                Visit::Stop
            } else {
                Visit::Continue
            }
        });
        if result.is_some() {
            return result;
        }
    }
    None
}

/// Up to `b` vertex-disjoint paths inside `rest` from `N(x)` to `N(y)`, as vertex sets.
fn menger_sets(rows: &[u64], x: u64, y: u64, rest: u64, b: usize) -> Option<Vec<u64>> {
    let nx = set_neighborhood(rows, x) & rest;
    let ny = set_neighborhood(rows, y) & rest;
    if (nx.count_ones() as usize) < b || (ny.count_ones() as usize) < b {
        return None;
    }
    // node 2v = in(v), 2v+1 = out(v), then source and sink
    let n = rows.len();
    let (src, snk) = (2 * n, 2 * n + 1);
    let size = 2 * n + 2;
    let mut cap = vec![vec![0i8; size]; size];
    for v in Bits(rest) {
        cap[2 * v][2 * v + 1] = 1;
        for w in Bits(rows[v] & rest) {
            cap[2 * v + 1][2 * w] = 1;
        }
    }
    for v in Bits(nx) {
        cap[src][2 * v] = 1;
    }
    for v in Bits(ny) {
        cap[2 * v + 1][snk] = 1;
    }
    let orig = cap.clone();
    let mut flow = 0;
    while flow < b {
        let mut prev = vec![usize::MAX; size];
        prev[src] = src;
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            if u == snk {
                break;
            }
            for w in 0..size {
                if cap[u][w] > 0 && prev[w] == usize::MAX {
                    prev[w] = u;
                    queue.push_back(w);
                }
            }
        }
        if prev[snk] == usize::MAX {
            return None;
        }
        let mut w = snk;
        while w != src {
            let u = prev[w];
            cap[u][w] -= 1;
            cap[w][u] += 1;
            w = u;
        }
        flow += 1;
    }
    // positive flow on an original arc: orig - residual
    let mut used = vec![vec![0i8; size]; size];
    for u in 0..size {
        for w in 0..size {
            if orig[u][w] > 0 && cap[u][w] < orig[u][w] {
                used[u][w] = 1;
            }
        }
    }
    let mut sets = Vec::with_capacity(b);
    for _ in 0..b {
        let mut set = 0u64;
        let mut u = src;
        while u != snk {
            let w = (0..size).find(|&w| used[u][w] > 0)?;
            used[u][w] = 0;
            if w < 2 * n {
                set |= bit(w / 2);
            }
            u = w;
        }
        sets.push(set);
    }
    Some(sets)
}

/// Exact packing of `b` disjoint connected sets in `rest`, each touching every chosen set.
fn pack_large_side(rows: &[u64], chosen: &[u64], rest: u64, b: usize) -> Option<Vec<u64>> {
    let nbs: Vec<u64> = chosen.iter().map(|&s| set_neighborhood(rows, s) & rest).collect();
    if nbs.iter().any(|m| (m.count_ones() as usize) < b) {
        return None;
    }
    let touches = |s: u64| nbs.iter().all(|&m| m & s != 0);
    let room = (rest.count_ones() as usize).saturating_sub(b - 1);
    let mut family = Vec::new();
    for root in Bits(rest) {
        connected_sets_from(rows, root, rest, room, &mut |s| {
            if touches(s) {
                family.push(s);
                Visit::Prune
            } else {
                Visit::Continue
            }
        });
    }
    family.sort_by_key(|s| (s.count_ones(), *s));
    let mut minimal: Vec<u64> = Vec::new();
    for s in family {
        if minimal.iter().all(|&k| k & !s != 0) {
            minimal.push(s);
        }
    }
    minimal.sort_unstable_by_key(|s| (s.trailing_zeros(), s.count_ones()));
    fn pick(family: &[u64], from: usize, used: u64, need: usize, out: &mut Vec<u64>) -> bool {
        if need == 0 {
            return true;
        }
        for i in from..family.len() {
            if family.len() - i < need {
                return false;
            }
            if family[i] & used == 0 {
                out.push(family[i]);
                if pick(family, i + 1, used | family[i], need - 1, out) {
                    return true;
                }
                out.pop();
            }
        }
        false
    }
    let mut out = Vec::with_capacity(b);
    pick(&minimal, 0, 0, b, &mut out).then_some(out)
}

/// Branch-and-bound over connected branch sets for an arbitrary pattern.
fn general_model(rows: &[u64], hrows: &[u64]) -> Option<Vec<u64>> {
    let k = hrows.len();
    let n = rows.len();
    if k > n {
        return None;
    }
    // most constrained first: many already-placed neighbours, then high degree
    let mut order: Vec<usize> = Vec::with_capacity(k);
    let mut placed = 0u64;
    while order.len() < k {
        let p = (0..k)
            .filter(|&p| placed & bit(p) == 0)
            .max_by_key(|&p| ((hrows[p] & placed).count_ones(), hrows[p].count_ones(), std::cmp::Reverse(p)))
            .unwrap();
        order.push(p);
        placed |= bit(p);
    }
    let mut sets = vec![0u64; k];
    if assign(rows, hrows, &order, 0, 0, &mut sets) {
        Some(sets)
    } else {
        None
    }
}

fn assign(rows: &[u64], hrows: &[u64], order: &[usize], depth: usize, used: u64, sets: &mut [u64]) -> bool {
    let k = order.len();
    if depth == k {
        return true;
    }
    let n = rows.len();
    let p = order[depth];
    let placed: u64 = order[..depth].iter().fold(0, |m, &q| m | bit(q));
    let free = low_bits(n) & !used;
    let remaining = k - depth - 1;
    let budget = (free.count_ones() as usize).saturating_sub(remaining);
    let open_nbrs = (hrows[p] & !placed).count_ones();
    let placed_nbrs: Vec<usize> = Bits(hrows[p] & placed).collect();
    let mut ok = false;
    for root in Bits(free) {
        connected_sets_from(rows, root, free, budget, &mut |s| {
            let nb = set_neighborhood(rows, s);
            if placed_nbrs.iter().any(|&q| nb & sets[q] == 0) {
                return Visit::Continue;
            }
            if (nb & free & !s).count_ones() < open_nbrs {
                return Visit::Continue;
            }
            sets[p] = s;
            if assign(rows, hrows, order, depth + 1, used | s, sets) {
                ok = true;
                return Visit::Stop;
            }
            sets[p] = 0;
            Visit::Continue
        });
        if ok {
            return true;
        }
    }
    false
}

/// Every map from host vertices to pattern vertices or "unused", checked at the leaves.
fn bruteforce(rows: &[u64], hrows: &[u64]) -> Option<Vec<u64>> {
    let mut sets = vec![0u64; hrows.len()];
    fn rec(rows: &[u64], hrows: &[u64], v: usize, sets: &mut Vec<u64>) -> bool {
        let n = rows.len();
        let empty = sets.iter().filter(|&&s| s == 0).count();
        if n - v < empty {
            return false;
        }
        if v == n {
            return model_ok(rows, hrows, sets);
        }
        // label sets.len() leaves v unused
        for i in 0..=sets.len() {
            if i < sets.len() {
                sets[i] |= bit(v);
            }
            if rec(rows, hrows, v + 1, sets) {
                return true;
            }
            if i < sets.len() {
                sets[i] &= !bit(v);
            }
        }
        false
    }
    rec(rows, hrows, 0, &mut sets).then_some(sets)
}

fn model_ok(rows: &[u64], hrows: &[u64], sets: &[u64]) -> bool {
    use crate::graph::is_connected_set;
    sets.iter().all(|&s| is_connected_set(rows, s))
        && (0..hrows.len()).all(|p| {
            let nb = set_neighborhood(rows, sets[p]);
            Bits(hrows[p] & !low_bits(p + 1)).all(|q| nb & sets[q] != 0)
        })
}

/// Shrinks branch sets one vertex at a time while the model stays valid.
fn minimize(rows: &[u64], hrows: &[u64], mut sets: Vec<u64>) -> Vec<u64> {
    loop {
        let mut changed = false;
        for i in 0..sets.len() {
            for v in Bits(sets[i]) {
                let before = sets[i];
                sets[i] &= !bit(v);
                if model_ok(rows, hrows, &sets) {
                    changed = true;
                } else {
                    sets[i] = before;
                }
            }
        }
        if !changed {
            return sets;
        }
    }
}

/// How [`has_st_property_with`] decides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StMethod {
    /// Complement-component criterion at order `t+1`, direct search otherwise.
    Auto,
    /// `K_{a,t+1-a}`-minor search for every `a` in `1..=gamma`.
    Direct,
    /// Every component of the complement has at least `gamma+1` vertices. Order must be `t+1`.
    ComplementComponents,
}

fn check_st(s: usize, t: usize) -> Result<()> {
    if s < 2 || s > t {
        return domain(format!("(s,t)-property needs 2 <= s <= t, got s={s}, t={t}"));
    }
    Ok(())
}

/// `K_{a,b}`-minor-freeness for all `a+b = t+1`, `1 <= a <= min(s, (t+1)/2)`.
pub fn has_st_property(g: &Graph, s: usize, t: usize) -> Result<bool> {
    has_st_property_with(g, s, t, StMethod::Auto)
}

pub fn has_st_property_with(g: &Graph, s: usize, t: usize, method: StMethod) -> Result<bool> {
    check_st(s, t)?;
    match method {
        StMethod::Auto if g.order() == t + 1 => complement_criterion(g, s, t),
        StMethod::ComplementComponents => {
            if g.order() != t + 1 {
                return domain(format!("complement criterion needs order t+1 = {}, got {}", t + 1, g.order()));
            }
            complement_criterion(g, s, t)
        }
        _ => Ok(st_property_violation(g, s, t)?.is_none()),
    }
}

fn complement_criterion(g: &Graph, s: usize, t: usize) -> Result<bool> {
    let need = gamma(s, t) + 1;
    Ok(complement(g).component_vertex_sets().iter().all(|c| c.len() >= need))
}

/// The first violated biclique, as `(a, witness)` with the witness in `g`'s labels.
pub fn st_property_violation(g: &Graph, s: usize, t: usize) -> Result<Option<(usize, BranchModel)>> {
    check_st(s, t)?;
    for a in 1..=gamma(s, t) {
        if let Some(m) = has_minor(g, &MinorPattern::Biclique(a, t + 1 - a), MinorMode::Fast)? {
            return Ok(Some((a, m)));
        }
    }
    Ok(None)
}

/// Verdict on `K_{s,t}`-minor-freeness of `K_{s-1} ∇ r`, decided through the `(s,t)`-property of `r`.
pub fn dominated_join_check(r: &Graph, s: usize, t: usize) -> Result<bool> {
    check_st(s, t)?;
    has_st_property_with(r, s, t, StMethod::Direct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_family, FamilySpec};
    use crate::graph::{disjoint_union, join};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    fn petersen() -> Graph {
        build_family(&FamilySpec::Petersen).unwrap()
    }

    #[test]
    fn small_examples() {
        let star4 = MinorPattern::Star(4);
        assert!(has_minor(&Graph::complete(4), &star4, MinorMode::Fast).unwrap().is_none());
        assert!(has_minor(&Graph::cycle(9), &MinorPattern::Star(3), MinorMode::Fast).unwrap().is_none());
        let k5 = Graph::complete(5);
        let m = has_minor(&k5, &MinorPattern::Biclique(2, 3), MinorMode::Fast).unwrap().unwrap();
        assert!(m.sets().iter().all(|s| s.len() == 1));
        assert!(m.is_valid(&k5, &Graph::complete_bipartite(2, 3)));
    }

    #[test]
    fn petersen_star_minors_match_bruteforce_over_connected_sets() {
        // oracle: max |N(S)| over every connected vertex subset
        let g = petersen();
        let rows = g.rows().unwrap();
        let mut best = 0;
        for mask in 1u64..(1 << 10) {
            if crate::graph::is_connected_set(rows, mask) {
                best = best.max(set_neighborhood(rows, mask).count_ones());
            }
        }
        assert_eq!(best, 6);
        for t in 1..=8 {
            let got = has_minor(&g, &MinorPattern::Star(t), MinorMode::Fast).unwrap();
            assert_eq!(got.is_some(), t <= best as usize, "t={t}");
            if let Some(m) = got {
                assert!(m.is_valid(&g, &Graph::star(t)));
            }
        }
    }

    #[test]
    fn witness_json_shape() {
        let m = has_minor(&Graph::complete(4), &MinorPattern::Star(3), MinorMode::Fast).unwrap().unwrap();
        let v = m.to_json();
        assert_eq!(v["0"], serde_json::json!([0]));
        assert_eq!(v.as_object().unwrap().len(), 4);
    }

    #[test]
    fn fast_agrees_with_bruteforce_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let patterns = [
            MinorPattern::Star(3),
            MinorPattern::Biclique(2, 3),
            MinorPattern::Biclique(3, 2),
            MinorPattern::Biclique(3, 3),
            MinorPattern::Explicit(Graph::complete(4)),
            MinorPattern::Explicit(disjoint_union(&[Graph::path(3), Graph::complete(2)]).unwrap()),
        ];
        for _ in 0..120 {
            let n = rng.gen_range(1..=7);
            let p = rng.gen_range(0.2..0.8);
            let g = random_graph(&mut rng, n, p);
            for pat in &patterns {
                let fast = has_minor(&g, pat, MinorMode::Fast).unwrap();
                let slow = has_minor(&g, pat, MinorMode::Bruteforce).unwrap();
                assert_eq!(fast.is_some(), slow.is_some(), "{pat} on {}", graph6::encode(&g));
                if let Some(m) = fast {
                    assert!(m.is_valid(&g, &pat.graph()));
                }
                if let Some(m) = slow {
                    assert!(m.is_valid(&g, &pat.graph()));
                }
            }
        }
    }

    #[test]
    fn minors_are_monotone_under_edge_addition() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let n = rng.gen_range(4..=8);
            let g = random_graph(&mut rng, n, 0.35);
            let non_edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| !g.has_edge(u, v))
                .collect();
            if non_edges.is_empty() {
                continue;
            }
            let (u, v) = non_edges[rng.gen_range(0..non_edges.len())];
            let mut h = g.clone();
            h.add_edge(u, v);
            for pat in [MinorPattern::Star(4), MinorPattern::Biclique(2, 3), MinorPattern::Biclique(3, 3)] {
                if contains_minor(&g, &pat).unwrap() {
                    assert!(contains_minor(&h, &pat).unwrap());
                }
            }
        }
    }

    #[test]
    fn st_property_examples() {
        let kt_k2 = disjoint_union(&[Graph::complete(5), Graph::complete(2)]).unwrap();
        assert!(has_st_property(&kt_k2, 2, 5).unwrap());
        let sfc = build_family(&FamilySpec::StarForestComplement { s: 2, t: 5 }).unwrap();
        assert!(has_st_property(&sfc, 2, 5).unwrap());
        assert!(has_st_property_with(&sfc, 2, 5, StMethod::Direct).unwrap());
        assert!(!has_st_property(&Graph::complete(6), 2, 5).unwrap());
        assert!(has_st_property(&Graph::complete(6), 1, 5).is_err());
        let pc = build_family(&FamilySpec::PetersenComplement).unwrap();
        for s in 4..=8 {
            assert!(has_st_property(&pc, s, 8).unwrap(), "s={s}");
        }
    }

    #[test]
    fn dominated_join_examples() {
        let r = disjoint_union(&[Graph::complete(3), Graph::complete(3), Graph::complete(3), Graph::complete(1)]).unwrap();
        assert!(dominated_join_check(&r, 2, 3).unwrap());
        assert!(!dominated_join_check(&Graph::complete(4), 2, 3).unwrap());
        let c4 = Graph::cycle(4);
        let joined = join(&Graph::complete(1), &c4).unwrap();
        let brute = has_minor(&joined, &MinorPattern::Biclique(2, 3), MinorMode::Bruteforce).unwrap().is_some();
        assert_eq!(dominated_join_check(&c4, 2, 3).unwrap(), !brute);
    }

    #[test]
    fn dominated_join_matches_direct_search_on_small_parts() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..60 {
            let n = rng.gen_range(3..=6);
            let r = random_graph(&mut rng, n, 0.5);
            for (s, t) in [(2, 3), (2, 4), (3, 3)] {
                let joined = join(&Graph::complete(s - 1), &r).unwrap();
                let free = !contains_minor(&joined, &MinorPattern::Biclique(s, t)).unwrap();
                assert_eq!(dominated_join_check(&r, s, t).unwrap(), free, "s={s} t={t} r={}", graph6::encode(&r));
            }
        }
    }

    #[test]
    fn pattern_text_round_trip() {
        for p in [MinorPattern::Star(3), MinorPattern::Biclique(2, 4), MinorPattern::Explicit(Graph::cycle(5))] {
            assert_eq!(p.to_string().parse::<MinorPattern>().unwrap(), p);
        }
        assert!("star:0".parse::<MinorPattern>().is_err());
        assert!("wheel:3".parse::<MinorPattern>().is_err());
    }

    #[test]
    fn disconnected_hosts_use_a_single_component() {
        let g = disjoint_union(&[Graph::path(4), Graph::complete(5)]).unwrap();
        let m = has_minor(&g, &MinorPattern::Biclique(2, 3), MinorMode::Fast).unwrap().unwrap();
        assert!(m.sets().iter().flatten().all(|&v| v >= 4));
        assert!(m.is_valid(&g, &Graph::complete_bipartite(2, 3)));
    }
}
