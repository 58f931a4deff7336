//! Undirected simple graphs on vertices `0..n` with packed bit-row
//! adjacency, plus the vertex-set type shared by every other module.
//!
//! The representation contract: `rows` holds `n` rows of `words_per_row`
//! 64-bit words each, bit `v` of row `u` set iff `uv` is an edge. The
//! diagonal is always clear and rows are symmetric. Padding bits past `n`
//! are always zero, which lets set operations work word-at-a-time without
//! masking on every step.

use crate::error::Error;

const WORD_BITS: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// A subset of the vertices `0..n` of some graph, stored as a bitset.
///
/// Iteration order is always ascending vertex index, so any structure
/// built by iterating a `VertexSet` is deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    /// The empty subset of a universe of `n` vertices.
    pub fn empty(n: usize) -> Self {
        VertexSet { n, words: vec![0; words_for(n)] }
    }

    /// The full universe `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for w in 0..words_for(n) {
            s.words[w] = !0u64;
        }
        s.clear_padding();
        s
    }

    /// Builds a set from vertex indices. Panics on an index outside the
    /// universe; the callers that take untrusted indices validate first.
    pub fn from_members<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Self {
        let mut s = Self::empty(n);
        for v in members {
            s.insert(v);
        }
        s
    }

    fn clear_padding(&mut self) {
        let used = self.n % WORD_BITS;
        if used != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << used) - 1;
            }
        }
        if self.n == 0 {
            self.words.clear();
        }
    }

    /// Size of the universe this set lives in (not the member count).
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} outside universe 0..{}", self.n);
        self.words[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.words[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
        }
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * WORD_BITS + b)
            })
        })
    }

    /// Members collected into a vector, ascending.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        assert_eq!(self.n, other.n, "universe mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        assert_eq!(self.n, other.n, "universe mismatch");
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        assert_eq!(self.n, other.n, "universe mismatch");
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// The result of taking an induced subgraph: the subgraph itself plus the
/// bijection between its compact indices and the original vertices.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `to_original[i]` is the original index of subgraph vertex `i`;
    /// ascending, so it doubles as the sorted member list of the subset.
    pub to_original: Vec<usize>,
}

impl InducedSubgraph {
    /// Maps an original vertex back to its subgraph index, if it is in the
    /// subgraph.
    pub fn to_sub(&self, original: usize) -> Option<usize> {
        self.to_original.binary_search(&original).ok()
    }
}

/// An undirected simple graph with bit-row adjacency.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words_per_row: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let w = words_for(n);
        Graph { n, words_per_row: w, rows: vec![0; n * w] }
    }

    /// Builds a graph from an explicit edge list. Rejects endpoints outside
    /// `0..n` and self-loops; duplicate edges are harmless.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Input(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words_per_row + v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
        self.rows[v * self.words_per_row + u / WORD_BITS] |= 1u64 << (u % WORD_BITS);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words_per_row + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// The adjacency row of `v` as packed words (padding bits clear).
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words_per_row..(v + 1) * self.words_per_row]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// All edges as `(u, v)` with `u < v`, ascending lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(v);
        row.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * WORD_BITS + b)
            })
        })
    }

    /// Neighborhood of `v` as a `VertexSet`.
    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet { n: self.n, words: self.row(v).to_vec() }
    }

    /// The complement graph: same vertices, exactly the missing edges.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for v in 0..self.n {
            let src = self.row(v);
            let dst = &mut g.rows[v * g.words_per_row..(v + 1) * g.words_per_row];
            for (d, s) in dst.iter_mut().zip(src) {
                *d = !s;
            }
            // clear the diagonal bit and the padding past n
            dst[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
            let used = self.n % WORD_BITS;
            if used != 0 {
                *dst.last_mut().expect("n > 0 here") &= (1u64 << used) - 1;
            }
        }
        g
    }

    /// The subgraph induced by `s`, with the index bijection. Errors if `s`
    /// belongs to a different universe than this graph.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<InducedSubgraph, Error> {
        if s.universe() != self.n {
            return Err(Error::Input(format!(
                "vertex set over universe {} used with a graph on {} vertices",
                s.universe(),
                self.n
            )));
        }
        let to_original = s.to_vec();
        let mut g = Graph::empty(to_original.len());
        for (i, &u) in to_original.iter().enumerate() {
            for (j, &v) in to_original.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(InducedSubgraph { graph: g, to_original })
    }

    /// Connected components, each a `VertexSet`, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(self.n);
            let mut queue = vec![start];
            comp.insert(start);
            seen.insert(start);
            while let Some(v) = queue.pop() {
                for u in self.neighbors(v) {
                    if !seen.contains(u) {
                        seen.insert(u);
                        comp.insert(u);
                        queue.push(u);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Components of the complement ("co-components"), ordered by smallest
    /// member.
    pub fn co_components(&self) -> Vec<VertexSet> {
        self.complement().connected_components()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// True iff every pair inside `s` is adjacent.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        assert_eq!(s.universe(), self.n, "universe mismatch");
        let members = s.to_vec();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff no pair inside `s` is adjacent.
    pub fn is_stable_set(&self, s: &VertexSet) -> bool {
        assert_eq!(s.universe(), self.n, "universe mismatch");
        let members = s.to_vec();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Vertices with degrees, sorted by nonincreasing degree; equal degrees
    /// break ties by ascending vertex index. This exact order is the greedy
    /// coloring order, so it is part of the output contract.
    pub fn degree_sequence(&self) -> Vec<(usize, usize)> {
        let mut seq: Vec<(usize, usize)> = (0..self.n).map(|v| (v, self.degree(v))).collect();
        seq.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        seq
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
