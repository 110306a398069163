//! Simple undirected graphs and structural operators.
//!
//! A [`Graph`] on at most [`FAST_CAPACITY`] vertices stores one `u64`
//! neighbour mask per vertex; larger graphs (up to [`GENERAL_CAPACITY`]) use
//! sorted adjacency lists. The tier is a function of the order alone, so two
//! graphs with the same labelled edge set always compare equal.

mod canon;
mod degree;

pub use canon::{are_isomorphic, canonical_code, canonical_form, CanonicalCode, CanonicalForm};
pub use degree::{is_majorized_by, is_weakly_majorized_by, DegreeSequence};

use crate::error::{capacity, domain, Result};

/// Largest order stored in the bitset tier.
pub const FAST_CAPACITY: usize = 64;
/// Largest order supported at all.
pub const GENERAL_CAPACITY: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tier {
    Fast,
    General,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Adjacency {
    Bits(Vec<u64>),
    Lists(Vec<Vec<u32>>),
}

/// An undirected simple graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Adjacency,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

pub enum Neighbors<'a> {
    Bits(Bits),
    List(std::slice::Iter<'a, u32>),
}

impl Iterator for Neighbors<'_> {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        match self {
            Neighbors::Bits(b) => b.next(),
            Neighbors::List(it) => it.next().map(|&v| v as usize),
        }
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// # Panics
    /// If `n` exceeds [`GENERAL_CAPACITY`]; use [`Graph::try_empty`] to get an error instead.
    pub fn empty(n: usize) -> Graph {
        Graph::try_empty(n).expect("graph order exceeds capacity")
    }

    pub fn try_empty(n: usize) -> Result<Graph> {
        if n > GENERAL_CAPACITY {
            return capacity(format!("order {n} exceeds the supported maximum {GENERAL_CAPACITY}"));
        }
        let adj = if n <= FAST_CAPACITY {
            Adjacency::Bits(vec![0; n])
        } else {
            Adjacency::Lists(vec![Vec::new(); n])
        };
        Ok(Graph { n, adj })
    }

    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::try_empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return domain(format!("edge ({u},{v}) out of range for order {n}"));
            }
            if u == v {
                return domain(format!("self-loop at vertex {u}"));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a fast-tier graph from neighbour masks. Masks must be symmetric and loop-free.
    pub(crate) fn from_rows(rows: Vec<u64>) -> Graph {
        debug_assert!(rows.len() <= FAST_CAPACITY);
        debug_assert!((0..rows.len()).all(|v| rows[v] & bit(v) == 0));
        Graph { n: rows.len(), adj: Adjacency::Bits(rows) }
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Cycle `C_n`; for `n < 3` this is the path on `n` vertices.
    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    /// Star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn tier(&self) -> Tier {
        match self.adj {
            Adjacency::Bits(_) => Tier::Fast,
            Adjacency::Lists(_) => Tier::General,
        }
    }

    /// Neighbour masks, available for fast-tier graphs only.
    #[inline]
    pub fn rows(&self) -> Option<&[u64]> {
        match &self.adj {
            Adjacency::Bits(r) => Some(r),
            Adjacency::Lists(_) => None,
        }
    }

    pub(crate) fn fast_rows(&self) -> Result<&[u64]> {
        self.rows().ok_or_else(|| {
            crate::Error::Capacity(format!(
                "operation needs the bitset tier (order <= {FAST_CAPACITY}), got order {}",
                self.n
            ))
        })
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match &self.adj {
            Adjacency::Bits(r) => r[u] & bit(v) != 0,
            Adjacency::Lists(l) => l[u].binary_search(&(v as u32)).is_ok(),
        }
    }

    /// Adds the edge `uv`; adding an existing edge is a no-op.
    ///
    /// # Panics
    /// On a self-loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at vertex {u}");
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        match &mut self.adj {
            Adjacency::Bits(r) => {
                r[u] |= bit(v);
                r[v] |= bit(u);
            }
            Adjacency::Lists(l) => {
                if let Err(i) = l[u].binary_search(&(v as u32)) {
                    l[u].insert(i, v as u32);
                }
                if let Err(i) = l[v].binary_search(&(u as u32)) {
                    l[v].insert(i, u as u32);
                }
            }
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        match &mut self.adj {
            Adjacency::Bits(r) => {
                r[u] &= !bit(v);
                r[v] &= !bit(u);
            }
            Adjacency::Lists(l) => {
                if let Ok(i) = l[u].binary_search(&(v as u32)) {
                    l[u].remove(i);
                }
                if let Ok(i) = l[v].binary_search(&(u as u32)) {
                    l[v].remove(i);
                }
            }
        }
    }

    pub fn neighbors(&self, u: usize) -> Neighbors<'_> {
        match &self.adj {
            Adjacency::Bits(r) => Neighbors::Bits(Bits(r[u])),
            Adjacency::Lists(l) => Neighbors::List(l[u].iter()),
        }
    }

    pub fn degree(&self, u: usize) -> usize {
        match &self.adj {
            Adjacency::Bits(r) => r[u].count_ones() as usize,
            Adjacency::Lists(l) => l[u].len(),
        }
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Induced subgraph on `vertices`, relabelled `0..k` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut h = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.neighbors(v) {
                let j = pos[w];
                if j != usize::MAX && i < j {
                    h.add_edge(i, j);
                }
            }
        }
        h
    }

    /// Graph with vertex `v` renamed to `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut h = Graph::empty(self.n);
        for (u, v) in self.edges() {
            h.add_edge(perm[u], perm[v]);
        }
        h
    }

    /// Graph with vertex `v` removed; later vertices shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&w| w != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
    pub fn component_vertex_sets(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Connected components as induced subgraphs, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Graph> {
        self.component_vertex_sets()
            .iter()
            .map(|c| self.induced_subgraph(c))
            .collect()
    }

    /// True iff the graph has exactly one component (the null graph is not connected).
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        if let Some(rows) = self.rows() {
            return component_of(rows, 0, low_bits(self.n)) == low_bits(self.n);
        }
        self.component_vertex_sets().len() == 1
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.degrees())
    }

    /// Returns `g - vw + uw`, requiring `vw` present, `uw` absent and `u != w`.
    pub fn rotate_edge(&self, u: usize, v: usize, w: usize) -> Result<Graph> {
        rotate_edge(self, u, v, w)
    }
}

/// Vertices reachable from `start` inside `allowed` (which must contain `start`).
#[inline]
pub(crate) fn component_of(rows: &[u64], start: usize, allowed: u64) -> u64 {
    let mut seen = bit(start);
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in Bits(frontier) {
            next |= rows[v];
        }
        next &= allowed & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// True iff `set` is non-empty and induces a connected subgraph.
#[inline]
pub(crate) fn is_connected_set(rows: &[u64], set: u64) -> bool {
    set != 0 && component_of(rows, set.trailing_zeros() as usize, set) == set
}

/// Open neighbourhood of a vertex set.
#[inline]
pub(crate) fn set_neighborhood(rows: &[u64], set: u64) -> u64 {
    let mut nb = 0;
    for v in Bits(set) {
        nb |= rows[v];
    }
    nb & !set
}

/// Complement: same vertices, `uv` an edge iff `u != v` and `uv` is not an edge of `g`.
pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    if let Some(rows) = g.rows() {
        let all = low_bits(n);
        return Graph::from_rows((0..n).map(|v| !rows[v] & all & !bit(v)).collect());
    }
    let mut h = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                h.add_edge(u, v);
            }
        }
    }
    h
}

/// Disjoint union, vertices of later parts shifted past earlier ones.
pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
    let total: usize = parts.iter().map(Graph::order).sum();
    let mut g = Graph::try_empty(total)?;
    let mut offset = 0;
    for part in parts {
        for (u, v) in part.edges() {
            g.add_edge(u + offset, v + offset);
        }
        offset += part.order();
    }
    Ok(g)
}

/// Join: disjoint union of `g1` and `g2` plus every edge between them.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let mut g = disjoint_union(&[g1.clone(), g2.clone()])?;
    let a = g1.order();
    for u in 0..a {
        for v in 0..g2.order() {
            g.add_edge(u, a + v);
        }
    }
    Ok(g)
}

/// Edge `uv` (with `u < v`) minimising `d(u) + d(v)`, ties broken lexicographically.
pub fn min_degree_sum_edge(g: &Graph) -> Option<(usize, usize)> {
    g.edges()
        .into_iter()
        .min_by_key(|&(u, v)| (g.degree(u) + g.degree(v), u, v))
}

/// `S^k(g)`: replaces the minimum-degree-sum edge `uv` by a path `u, n, n+1, .., n+k-1, v`.
pub fn subdivide_min_edge(g: &Graph, k: usize) -> Result<Graph> {
    let Some((u, v)) = min_degree_sum_edge(g) else {
        return domain("cannot subdivide an edge of an edgeless graph");
    };
    let n = g.order();
    let mut h = disjoint_union(&[g.clone(), Graph::try_empty(k)?])?;
    if k == 0 {
        return Ok(h);
    }
    h.remove_edge(u, v);
    let mut prev = u;
    for x in n..n + k {
        h.add_edge(prev, x);
        prev = x;
    }
    h.add_edge(prev, v);
    Ok(h)
}

/// Moves the edge `vw` to `uw`.
pub fn rotate_edge(g: &Graph, u: usize, v: usize, w: usize) -> Result<Graph> {
    let n = g.order();
    if u >= n || v >= n || w >= n {
        return domain(format!("rotation ({u},{v},{w}) out of range for order {n}"));
    }
    if u == w {
        return domain("rotation requires u != w");
    }
    if !g.has_edge(v, w) {
        return domain(format!("rotation requires edge {v}{w}"));
    }
    if g.has_edge(u, w) {
        return domain(format!("rotation requires non-edge {u}{w}"));
    }
    let mut h = g.clone();
    h.remove_edge(v, w);
    h.add_edge(u, w);
    Ok(h)
}
