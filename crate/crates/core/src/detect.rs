//! Induced-subgraph detection for the five fixed patterns the solver and
//! the recognizers care about, with re-checkable witnesses.
//!
//! Detection enumerates ordered vertex tuples in role order, pruning with
//! word-parallel candidate sets, and returns the lexicographically least
//! valid tuple, so witnesses are deterministic. The house is searched as a
//! P5 in the complement (they are complements of each other), keeping one
//! code path for both.

use crate::error::Error;
use crate::graph::{Graph, VertexSet};

/// The patterns this module can find. Role order fixes the meaning of each
/// witness position:
///
/// * `P5`, `C5` — path / cycle order;
/// * `Bull` — (a, b, c, d, e) where a-b-c-d is the path and e is the horn
///   adjacent to b and c;
/// * `House` — P5 order of the complement;
/// * `Triangle` — any order (all pairs adjacent).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    P5,
    C5,
    Bull,
    House,
    Triangle,
}

impl Pattern {
    /// Number of vertices in the pattern.
    pub fn size(self) -> usize {
        match self {
            Pattern::Triangle => 3,
            _ => 5,
        }
    }

    /// Edges of the pattern between role positions, normalized `(i, j)`
    /// with `i < j`. A witness is valid iff its vertices induce exactly
    /// this edge set.
    pub fn edges(self) -> &'static [(usize, usize)] {
        match self {
            Pattern::P5 => &[(0, 1), (1, 2), (2, 3), (3, 4)],
            Pattern::C5 => &[(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)],
            Pattern::Bull => &[(0, 1), (1, 2), (1, 4), (2, 3), (2, 4)],
            // complement of the P5 edge set on the same role order
            Pattern::House => &[(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4)],
            Pattern::Triangle => &[(0, 1), (0, 2), (1, 2)],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Pattern::P5 => "P5",
            Pattern::C5 => "C5",
            Pattern::Bull => "bull",
            Pattern::House => "house",
            Pattern::Triangle => "triangle",
        }
    }

    /// Parses the `name()` form back; used by the CLI and report loaders.
    pub fn from_name(s: &str) -> Result<Pattern, Error> {
        match s {
            "P5" => Ok(Pattern::P5),
            "C5" => Ok(Pattern::C5),
            "bull" => Ok(Pattern::Bull),
            "house" => Ok(Pattern::House),
            "triangle" => Ok(Pattern::Triangle),
            other => Err(Error::Input(format!("unknown pattern name {other:?}"))),
        }
    }
}

/// A located induced pattern: `vertices[i]` plays role `i` of the pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub pattern: Pattern,
    pub vertices: Vec<usize>,
}

impl Witness {
    /// Re-checks the witness against `g` from scratch: distinct in-range
    /// vertices whose induced edge set is exactly the pattern's.
    pub fn verify(&self, g: &Graph) -> bool {
        let k = self.pattern.size();
        if self.vertices.len() != k {
            return false;
        }
        if self.vertices.iter().any(|&v| v >= g.n()) {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                if self.vertices[i] == self.vertices[j] {
                    return false;
                }
                let required = self.pattern.edges().contains(&(i, j));
                if g.has_edge(self.vertices[i], self.vertices[j]) != required {
                    return false;
                }
            }
        }
        true
    }
}

/// Role-order adjacency of a pattern as a dense matrix.
struct Shape {
    k: usize,
    adj: [[bool; 5]; 5],
}

impl Shape {
    fn of(pattern: Pattern) -> Shape {
        let mut adj = [[false; 5]; 5];
        for &(i, j) in pattern.edges() {
            adj[i][j] = true;
            adj[j][i] = true;
        }
        Shape { k: pattern.size(), adj }
    }
}

/// Finds the lexicographically least induced copy of `pattern` in `g` (in
/// role order), or `None` if the graph contains none.
pub fn find_induced(g: &Graph, pattern: Pattern) -> Option<Witness> {
    if let Pattern::House = pattern {
        // a house in g is exactly a P5 in the complement, same vertices
        let w = find_induced(&g.complement(), Pattern::P5)?;
        let witness = Witness { pattern: Pattern::House, vertices: w.vertices };
        debug_assert!(witness.verify(g), "house witness failed re-verification");
        return Some(witness);
    }
    let shape = Shape::of(pattern);
    if g.n() < shape.k {
        return None;
    }
    let n_words = g.n().div_ceil(64);
    let full = VertexSet::full(g.n());
    let mut bufs = vec![vec![0u64; n_words]; shape.k];
    let mut chosen = Vec::with_capacity(shape.k);
    if dfs(g, &shape, 0, &mut chosen, &mut bufs, full.words()) {
        let witness = Witness { pattern, vertices: chosen };
        debug_assert!(witness.verify(g), "witness failed re-verification");
        Some(witness)
    } else {
        None
    }
}

/// Depth-first tuple search. At each depth the candidate set is the
/// word-wise intersection of neighbor rows (role edge) and complement rows
/// (role non-edge) of the prefix, so a prefix that cannot extend dies in
/// O(n/64) words. Ascending iteration makes the first hit lex-least.
fn dfs(
    g: &Graph,
    shape: &Shape,
    depth: usize,
    chosen: &mut Vec<usize>,
    bufs: &mut [Vec<u64>],
    full: &[u64],
) -> bool {
    if depth == shape.k {
        return true;
    }
    let (cand, rest) = bufs.split_first_mut().expect("one buffer per depth");
    cand.copy_from_slice(full);
    for (i, &u) in chosen.iter().enumerate() {
        let row = g.row(u);
        if shape.adj[i][depth] {
            for (c, r) in cand.iter_mut().zip(row) {
                *c &= r;
            }
        } else {
            for (c, r) in cand.iter_mut().zip(row) {
                *c &= !r;
            }
            // the row trick leaves u itself in; non-adjacency must not
            cand[u / 64] &= !(1u64 << (u % 64));
        }
    }
    for (wi, &word) in cand.iter().enumerate() {
        let mut bits = word;
        while bits != 0 {
            let v = wi * 64 + bits.trailing_zeros() as usize;
            bits &= bits - 1;
            chosen.push(v);
            if dfs(g, shape, depth + 1, chosen, rest, full) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Tests `g` against a list of forbidden patterns, in list order. Returns
/// `(true, None)` when none occur, otherwise `(false, witness)` for the
/// first pattern found.
pub fn is_class_member(g: &Graph, forbidden: &[Pattern]) -> (bool, Option<Witness>) {
    for &p in forbidden {
        if let Some(w) = find_induced(g, p) {
            return (false, Some(w));
        }
    }
    (true, None)
}
