//! Canonical labelling by individualisation and refinement.
//!
//! The search keeps the lexicographically largest relabelled adjacency matrix
//! over all leaves of the refinement tree. Automorphisms discovered at leaves
//! prune the tree in two ways: jumping back to the level where the current path
//! left the first or best path, and skipping children that lie in an orbit of
//! the pointwise stabiliser of the current prefix.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use super::{bit, Bits, Graph};
use crate::error::Result;
use crate::graph6;

/// Isomorphism-class identifier: the graph6 encoding of the canonical relabelling.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A canonical relabelling of a graph.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    /// The relabelled graph; isomorphic inputs give identical graphs.
    pub graph: Graph,
    /// `order[i]` is the input vertex placed at position `i`.
    pub order: Vec<usize>,
}

impl CanonicalForm {
    pub fn code(&self) -> CanonicalCode {
        CanonicalCode(graph6::encode(&self.graph).into_bytes())
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let rows = g.fast_rows()?;
    let n = rows.len();
    if n == 0 {
        return Ok(CanonicalForm { graph: Graph::empty(0), order: Vec::new() });
    }
    let mut s = Search { rows, n, first: None, best: None, autos: Vec::new() };
    let all = super::low_bits(n);
    let root = refine(rows, vec![all], VecDeque::from([all]));
    s.run(root, &mut Vec::new());
    let best = s.best.expect("search visits at least one leaf");
    Ok(CanonicalForm { graph: Graph::from_rows(best.rows), order: best.lab })
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    Ok(canonical_form(g)?.code())
}

/// Isomorphism test; both graphs must be in the bitset tier.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        // still enforce the capacity contract
        g.fast_rows()?;
        h.fast_rows()?;
        return Ok(false);
    }
    if g.degree_sequence() != h.degree_sequence() {
        g.fast_rows()?;
        h.fast_rows()?;
        return Ok(false);
    }
    Ok(canonical_code(g)? == canonical_code(h)?)
}

struct Leaf {
    lab: Vec<usize>,
    rows: Vec<u64>,
    path: Vec<usize>,
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Permutation mapping `from[i]` to `to[i]`.
fn mapping(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut g = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        g[a] = b;
    }
    g
}

impl Search<'_> {
    /// Returns `Some(level)` to unwind to the node whose prefix has length `level`.
    fn run(&mut self, cells: Vec<u64>, prefix: &mut Vec<usize>) -> Option<usize> {
        if cells.len() == self.n {
            return self.leaf(&cells, prefix);
        }
        let target = (0..cells.len())
            .filter(|&i| cells[i].count_ones() > 1)
            .min_by_key(|&i| (cells[i].count_ones(), i))
            .expect("non-discrete partition has a non-singleton cell");
        let mut explored: Vec<usize> = Vec::new();
        let mut seen_autos = usize::MAX;
        let mut orbit = Vec::new();
        for v in Bits(cells[target]) {
            if !explored.is_empty() {
                if seen_autos != self.autos.len() {
                    orbit = self.stabiliser_orbits(prefix);
                    seen_autos = self.autos.len();
                }
                if explored.iter().any(|&w| orbit[w] == orbit[v]) {
                    continue;
                }
            }
            let child = individualize(self.rows, &cells, target, v);
            prefix.push(v);
            let jump = self.run(child, prefix);
            prefix.pop();
            explored.push(v);
            if let Some(level) = jump {
                if level < prefix.len() {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], prefix: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = vec![0usize; self.n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let rows: Vec<u64> = lab
            .iter()
            .map(|&v| Bits(self.rows[v]).fold(0u64, |acc, w| acc | bit(pos[w])))
            .collect();
        let Some(first) = &self.first else {
            let leaf = Leaf { lab, rows, path: prefix.to_vec() };
            self.best = Some(Leaf { lab: leaf.lab.clone(), rows: leaf.rows.clone(), path: leaf.path.clone() });
            self.first = Some(leaf);
            return None;
        };
        if first.rows == rows {
            self.autos.push(mapping(&first.lab, &lab));
            return Some(common_prefix(&first.path, prefix));
        }
        let best = self.best.as_ref().expect("best is set with first");
        match rows.cmp(&best.rows) {
            Ordering::Greater => {
                self.best = Some(Leaf { lab, rows, path: prefix.to_vec() });
                None
            }
            Ordering::Equal => {
                self.autos.push(mapping(&best.lab, &lab));
                Some(common_prefix(&best.path, prefix))
            }
            Ordering::Less => None,
        }
    }

    /// Orbit representatives under the stored automorphisms that fix `prefix` pointwise.
    fn stabiliser_orbits(&self, prefix: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gamma in &self.autos {
            if prefix.iter().any(|&v| gamma[v] != v) {
                continue;
            }
            for (x, &y) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..self.n).map(|x| find(&mut parent, x)).collect()
    }
}

fn individualize(rows: &[u64], cells: &[u64], target: usize, v: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(cells.len() + 1);
    out.extend_from_slice(&cells[..target]);
    out.push(bit(v));
    out.push(cells[target] & !bit(v));
    out.extend_from_slice(&cells[target + 1..]);
    refine(rows, out, VecDeque::from([bit(v)]))
}

/// Equitable refinement: splits cells by neighbour count into each splitter,
/// fragments ordered by increasing count and queued as new splitters.
fn refine(rows: &[u64], mut cells: Vec<u64>, mut queue: VecDeque<u64>) -> Vec<u64> {
    let n = rows.len();
    let mut counts: Vec<(u32, usize)> = Vec::with_capacity(n);
    while let Some(w) = queue.pop_front() {
        if cells.len() == n {
            break;
        }
        let mut i = 0;
        while i < cells.len() {
            let cell = cells[i];
            if cell & (cell - 1) == 0 {
                i += 1;
                continue;
            }
            counts.clear();
            counts.extend(Bits(cell).map(|v| ((rows[v] & w).count_ones(), v)));
            let first = counts[0].0;
            if counts.iter().all(|&(c, _)| c == first) {
                i += 1;
                continue;
            }
            counts.sort_unstable();
            let mut fragments: Vec<u64> = Vec::new();
            let mut cur = 0u64;
            let mut cur_count = counts[0].0;
            for &(c, v) in counts.iter() {
                if c != cur_count {
                    fragments.push(cur);
                    cur = 0;
                    cur_count = c;
                }
                cur |= bit(v);
            }
            fragments.push(cur);
            let k = fragments.len();
            queue.extend(fragments.iter().copied());
            cells.splice(i..=i, fragments);
            i += k;
        }
    }
    cells
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complement, disjoint_union, join};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut p: Vec<usize> = (0..n).collect();
        fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if k <= 1 {
                out.push(p.clone());
                return;
            }
            for i in 0..k {
                heap(k - 1, p, out);
                if k % 2 == 0 {
                    p.swap(i, k - 1);
                } else {
                    p.swap(0, k - 1);
                }
            }
        }
        heap(n, &mut p, &mut out);
        out
    }

    /// Maximum relabelled row vector over all permutations.
    fn brute_canon(g: &Graph, perms: &[Vec<usize>]) -> Vec<u64> {
        let rows = g.rows().unwrap();
        perms
            .iter()
            .map(|p| {
                let mut r = vec![0u64; rows.len()];
                for (v, &row) in rows.iter().enumerate() {
                    r[p[v]] = Bits(row).fold(0, |a, w| a | bit(p[w]));
                }
                r
            })
            .max()
            .unwrap()
    }

    fn labeled(n: usize, mask: u64) -> Graph {
        let mut g = Graph::empty(n);
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                if mask >> k & 1 == 1 {
                    g.add_edge(u, v);
                }
                k += 1;
            }
        }
        g
    }

    fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            for u in 0..v {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    #[test]
    fn relabelings_of_c4_agree() {
        let a = Graph::cycle(4);
        let b = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_code(&a).unwrap(), canonical_code(&b).unwrap());
        assert_ne!(canonical_code(&Graph::complete(3)).unwrap(), canonical_code(&Graph::path(3)).unwrap());
    }

    #[test]
    fn general_tier_is_rejected() {
        assert!(matches!(canonical_code(&Graph::empty(65)), Err(crate::Error::Capacity(_))));
    }

    #[test]
    fn class_counts_match_brute_force_up_to_six() {
        let expected = [1usize, 1, 2, 4, 11, 34, 156];
        for n in 0..=6usize {
            let perms = permutations(n);
            let m = n * n.saturating_sub(1) / 2;
            let mut codes = HashSet::new();
            let mut brute = HashSet::new();
            let mut pairs = std::collections::HashMap::new();
            for mask in 0..1u64 << m {
                let g = labeled(n, mask);
                let c = canonical_code(&g).unwrap();
                let b = brute_canon(&g, &perms);
                // the two invariants must induce the same partition of labelled graphs
                let prev = pairs.insert(c.clone(), b.clone());
                if let Some(prev) = prev {
                    assert_eq!(prev, b, "code collision for non-isomorphic graphs at n={n}");
                }
                codes.insert(c);
                brute.insert(b);
            }
            assert_eq!(codes.len(), brute.len());
            assert_eq!(codes.len(), expected[n], "n={n}");
        }
    }

    #[test]
    fn seven_vertex_codes_agree_with_permutation_search() {
        let perms = permutations(7);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut sample = Vec::new();
        for _ in 0..150 {
            let p = rng.gen_range(0.2..0.8);
            let g = random_graph(&mut rng, 7, p);
            let mut p: Vec<usize> = (0..7).collect();
            p.shuffle(&mut rng);
            sample.push(g.relabel(&p));
            sample.push(g);
        }
        let data: Vec<_> = sample
            .iter()
            .map(|g| (canonical_code(g).unwrap(), brute_canon(g, &perms)))
            .collect();
        for (i, a) in data.iter().enumerate() {
            for b in &data[i + 1..] {
                assert_eq!(a.0 == b.0, a.1 == b.1);
            }
        }
    }

    #[test]
    fn canonical_graph_is_the_relabelled_input() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(1..14);
            let g = random_graph(&mut rng, n, 0.4);
            let cf = canonical_form(&g).unwrap();
            let mut pos = vec![0; n];
            for (i, &v) in cf.order.iter().enumerate() {
                pos[v] = i;
            }
            assert_eq!(g.relabel(&pos), cf.graph);
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rng);
            assert_eq!(canonical_form(&g.relabel(&p)).unwrap().graph, cf.graph);
        }
    }

    #[test]
    fn symmetric_graphs_finish_quickly() {
        for g in [
            Graph::complete(64),
            Graph::empty(64),
            Graph::cycle(64),
            disjoint_union(&vec![Graph::complete(8); 8]).unwrap(),
            join(&Graph::complete(4), &disjoint_union(&vec![Graph::complete(8); 2]).unwrap()).unwrap(),
            complement(&disjoint_union(&vec![Graph::cycle(5); 6]).unwrap()),
        ] {
            let cf = canonical_form(&g).unwrap();
            assert_eq!(cf.graph.edge_count(), g.edge_count());
        }
        let k33 = Graph::complete_bipartite(3, 3);
        let prism = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(!are_isomorphic(&k33, &prism).unwrap());
    }
}
