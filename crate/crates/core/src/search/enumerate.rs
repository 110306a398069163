//! Isomorph-free generation by canonical augmentation.
//!
//! A graph on `n` vertices is produced from its canonical parent: the graph
//! obtained by deleting a canonically chosen vertex. Every `(n-1)`-vertex
//! representative is extended by one vertex over all neighbourhood masks; a
//! child is kept only when the added vertex could be the canonical deletion,
//! and duplicates among the children of one parent are merged by canonical
//! code. Each isomorphism class then has exactly one parent class and appears
//! once.

use std::collections::HashSet;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::error::{capacity, Result};
use crate::graph::{bit, canonical_code, canonical_form, Bits, Graph};
use crate::graph6;

/// Largest order [`enumerate_graphs`] accepts.
pub const ENUMERATION_CAP: usize = 10;
/// Levels up to this order are kept in memory after the first request.
pub const CACHED_LEVELS: usize = 9;

fn cache() -> &'static Mutex<Vec<Option<Arc<Vec<Graph>>>>> {
    static CACHE: OnceLock<Mutex<Vec<Option<Arc<Vec<Graph>>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![None; CACHED_LEVELS + 1]))
}

/// One canonical representative per isomorphism class on `n <= 9` vertices, in generation order.
fn level(n: usize) -> Arc<Vec<Graph>> {
    debug_assert!(n <= CACHED_LEVELS);
    if let Some(l) = cache().lock().unwrap()[n].clone() {
        return l;
    }
    let built = if n == 0 {
        vec![Graph::empty(0)]
    } else {
        let parents = level(n - 1);
        parents.par_iter().flat_map_iter(children).collect()
    };
    let built = Arc::new(built);
    cache().lock().unwrap()[n] = Some(built.clone());
    built
}

/// Vertex-invariant used to narrow the canonical deletion candidates: degree, then neighbour degree sum.
fn invariant(rows: &[u64], v: usize) -> (u32, u32) {
    let s = Bits(rows[v]).map(|w| rows[w].count_ones()).sum();
    (rows[v].count_ones(), s)
}

/// Canonical children of a canonical parent, as canonical graphs.
fn children(parent: &Graph) -> Vec<Graph> {
    let m = parent.order();
    let prow = parent.rows().expect("enumeration stays in the fast tier");
    let parent_code = graph6::encode(parent);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut rows = vec![0u64; m + 1];
    for mask in 0u64..(1u64 << m) {
        for v in 0..m {
            rows[v] = prow[v] | if mask & bit(v) != 0 { bit(m) } else { 0 };
        }
        rows[m] = mask;
        let inv: Vec<(u32, u32)> = (0..=m).map(|v| invariant(&rows, v)).collect();
        let top = *inv.iter().max().unwrap();
        if inv[m] != top {
            continue;
        }
        let cands: Vec<usize> = (0..=m).filter(|&v| inv[v] == top).collect();
        let g = Graph::from_rows(rows.clone());
        let form = canonical_form(&g).expect("fast tier");
        if cands.len() > 1 {
            let w = *form.order.iter().rev().find(|v| cands.contains(v)).unwrap();
            if w != m {
                let code = canonical_code(&g.remove_vertex(w)).expect("fast tier");
                if code.as_str() != parent_code {
                    continue;
                }
            }
        }
        let code = form.code();
        if seen.insert(code) {
            out.push(form.graph);
        }
    }
    out
}

/// One graph per isomorphism class on `n` vertices (optionally connected only), deterministic order.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    let (_, v) = enumerate_filtered(n, connected_only, |_| true)?;
    Ok(v)
}

/// Number of classes examined and the ones that pass `keep`, in enumeration order.
pub fn enumerate_filtered<F>(n: usize, connected_only: bool, keep: F) -> Result<(usize, Vec<Graph>)>
where
    F: Fn(&Graph) -> bool + Sync,
{
    if n > ENUMERATION_CAP {
        return capacity(format!("enumeration is capped at n = {ENUMERATION_CAP}, got {n}"));
    }
    let conn = |g: &Graph| !connected_only || g.is_connected();
    if n <= CACHED_LEVELS {
        let all = level(n);
        let examined = all.iter().filter(|g| conn(g)).count();
        let kept = all.par_iter().filter(|g| conn(g) && keep(g)).cloned().collect();
        return Ok((examined, kept));
    }
    let parents = level(n - 1);
    let per_parent: Vec<(usize, Vec<Graph>)> = parents
        .par_iter()
        .map(|p| {
            let kids: Vec<Graph> = children(p).into_iter().filter(|g| conn(g)).collect();
            let count = kids.len();
            (count, kids.into_iter().filter(|g| keep(g)).collect())
        })
        .collect();
    let examined = per_parent.iter().map(|(c, _)| c).sum();
    Ok((examined, per_parent.into_iter().flat_map(|(_, k)| k).collect()))
}
