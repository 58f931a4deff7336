//! Small brute-force baselines, independent of the production code paths.
//!
//! Everything here recomputes its answer from first principles — subset
//! dynamic programs over bitmasks, or plain enumeration — and shares no
//! algorithmic ideas with the solver, the blossom matching, the modular
//! decomposition, or the pattern detector. That independence is the
//! point: agreement between the two routes is evidence, not tautology.
//!
//! Each oracle enforces a hard size cap and reports `Error::SizeCap`
//! above it.

use crate::error::Error;
use crate::graph::{Graph, VertexSet};
use crate::modules::check_universe;
use crate::solver::{CliquePartition, ColorPartition};

/// Cap for the exponential chromatic / cover / matching programs.
pub const SUBSET_DP_CAP: usize = 16;
/// Cap for whole-powerset module enumeration.
pub const MODULE_CAP: usize = 12;
/// Cap for subset-and-permutation induced-subgraph search.
pub const INDUCED_CAP: usize = 16;

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.row(v)[0]).collect()
}

fn check_cap(n: usize, cap: usize) -> Result<(), Error> {
    if n > cap {
        Err(Error::SizeCap { n, cap })
    } else {
        Ok(())
    }
}

/// Exact chromatic number and an optimal coloring by dynamic programming
/// over vertex subsets: a best coloring of `S` spends one color on an
/// independent subset containing the lowest vertex of `S` and recurses on
/// the rest. Handles any graph with at most [`SUBSET_DP_CAP`] vertices.
pub fn brute_chromatic(g: &Graph) -> Result<(usize, ColorPartition), Error> {
    let n = g.n();
    check_cap(n, SUBSET_DP_CAP)?;
    if n == 0 {
        return Ok((0, ColorPartition::from_colors(Vec::new())?));
    }
    let adj = adjacency_masks(g);
    let size = 1usize << n;

    // independence of every subset, from the subset minus its lowest bit
    let mut independent = vec![false; size];
    independent[0] = true;
    for s in 1..size {
        let v = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        independent[s] = independent[rest] && adj[v] & s as u64 == 0;
    }

    let mut best = vec![u8::MAX; size];
    let mut choice = vec![0usize; size];
    best[0] = 0;
    for s in 1..size {
        let vbit = s & s.wrapping_neg();
        let mut t = s;
        loop {
            if t & vbit != 0 && independent[t] {
                let cand = 1 + best[s ^ t];
                if cand < best[s] {
                    best[s] = cand;
                    choice[s] = t;
                }
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & s;
        }
    }

    let chi = best[size - 1] as usize;
    let mut colors = vec![0usize; n];
    let mut s = size - 1;
    let mut c = 0;
    while s != 0 {
        c += 1;
        let class = choice[s];
        let mut bits = class;
        while bits != 0 {
            colors[bits.trailing_zeros() as usize] = c;
            bits &= bits - 1;
        }
        s ^= class;
    }
    debug_assert_eq!(c, chi, "reconstruction must spend exactly chi colors");
    Ok((chi, ColorPartition::from_colors(colors)?))
}

/// Exact minimum clique cover via the complement: color classes of the
/// complement are cliques of the graph. Same cap as [`brute_chromatic`].
pub fn brute_clique_cover(g: &Graph) -> Result<(usize, CliquePartition), Error> {
    let (cc, coloring) = brute_chromatic(&g.complement())?;
    let cover = CliquePartition::from_parts(g.n(), coloring.classes())?;
    Ok((cc, cover))
}

/// Maximum matching size by subset dynamic programming: the lowest vertex
/// of `S` is either left exposed or matched to one of its neighbors in
/// `S`. Handles any graph with at most [`SUBSET_DP_CAP`] vertices.
pub fn brute_matching(g: &Graph) -> Result<usize, Error> {
    let n = g.n();
    check_cap(n, SUBSET_DP_CAP)?;
    if n == 0 {
        return Ok(0);
    }
    let adj = adjacency_masks(g);
    let size = 1usize << n;
    let mut best = vec![0u8; size];
    for s in 1..size {
        let v = s.trailing_zeros() as usize;
        let vbit = 1usize << v;
        let mut b = best[s ^ vbit];
        let mut nbrs = adj[v] as usize & s;
        while nbrs != 0 {
            let ubit = nbrs & nbrs.wrapping_neg();
            b = b.max(1 + best[s ^ vbit ^ ubit]);
            nbrs ^= ubit;
        }
        best[s] = b;
    }
    Ok(best[size - 1] as usize)
}

/// One module found by exhaustive enumeration.
#[derive(Clone, Debug)]
pub struct ModuleEntry {
    pub set: VertexSet,
    /// No other module partially overlaps this one.
    pub strong: bool,
}

/// Every nonempty module of a graph, found by testing all `2^n` subsets.
#[derive(Clone, Debug)]
pub struct ModuleCatalog {
    n: usize,
    entries: Vec<ModuleEntry>,
}

impl ModuleCatalog {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[ModuleEntry] {
        &self.entries
    }

    /// The maximal proper strong modules, sorted by smallest member. For
    /// any graph on at least two vertices these partition the vertices.
    pub fn quasi_maximal(&self) -> Vec<VertexSet> {
        let full_len = self.n;
        let proper_strong: Vec<&VertexSet> = self
            .entries
            .iter()
            .filter(|e| e.strong && e.set.len() < full_len)
            .map(|e| &e.set)
            .collect();
        let mut out: Vec<VertexSet> = proper_strong
            .iter()
            .filter(|s| {
                !proper_strong
                    .iter()
                    .any(|t| t.len() > s.len() && s.is_subset_of(t))
            })
            .map(|s| (*s).clone())
            .collect();
        out.sort_by_key(|s| s.first().expect("modules are nonempty"));
        out
    }
}

/// Enumerates every nonempty module (homogeneous set) of a graph with at
/// most [`MODULE_CAP`] vertices and flags the strong ones — those no
/// other module partially overlaps.
pub fn brute_all_modules(g: &Graph) -> Result<ModuleCatalog, Error> {
    let n = g.n();
    check_cap(n, MODULE_CAP)?;
    let adj = adjacency_masks(g);
    let full = if n == 0 { 0u64 } else { u64::MAX >> (64 - n) };
    let mut masks: Vec<u64> = Vec::new();
    for mask in 1..=full {
        let mut outside = full & !mask;
        let mut is_module = true;
        while outside != 0 {
            let v = outside.trailing_zeros() as usize;
            let hits = adj[v] & mask;
            if hits != 0 && hits != mask {
                is_module = false;
                break;
            }
            outside &= outside - 1;
        }
        if is_module {
            masks.push(mask);
        }
    }
    let entries = masks
        .iter()
        .map(|&m| {
            let strong = !masks
                .iter()
                .any(|&o| o & m != 0 && o & !m != 0 && m & !o != 0);
            ModuleEntry {
                set: VertexSet::from_members(n, (0..n).filter(|&v| m >> v & 1 == 1)),
                strong,
            }
        })
        .collect();
    Ok(ModuleCatalog { n, entries })
}

/// Checks whether `set` is a module by definition, without enumeration:
/// every outside vertex is adjacent to all of the set or none of it.
pub fn is_module(g: &Graph, set: &VertexSet) -> Result<bool, Error> {
    check_universe(g, set)?;
    if set.is_empty() {
        return Err(Error::Input("the empty set is not a module".into()));
    }
    let members = set.to_vec();
    for v in 0..g.n() {
        if set.contains(v) {
            continue;
        }
        let hits = members.iter().filter(|&&u| g.has_edge(v, u)).count();
        if hits != 0 && hits != members.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches for an induced copy of a pattern by brute force: every vertex
/// subset of the right size, filtered by degree multiset, then every role
/// assignment within the subset. Returns the lexicographically least
/// subset that hosts a copy, sorted ascending — an unordered answer, in
/// contrast to the detector's role-ordered witnesses. Caps at
/// [`INDUCED_CAP`] vertices.
pub fn brute_contains_induced(
    g: &Graph,
    pattern: crate::detect::Pattern,
) -> Result<Option<Vec<usize>>, Error> {
    let n = g.n();
    check_cap(n, INDUCED_CAP)?;
    let k = pattern.size();
    if n < k {
        return Ok(None);
    }
    let edges = pattern.edges();
    let mut pattern_degrees = vec![0usize; k];
    for &(i, j) in edges {
        pattern_degrees[i] += 1;
        pattern_degrees[j] += 1;
    }
    let mut want = pattern_degrees.clone();
    want.sort_unstable();

    let search = InducedSearch {
        g,
        k,
        want,
        edges,
        pattern_degrees,
    };
    let mut subset = vec![0usize; k];
    Ok(search.subsets(0, 0, &mut subset))
}

/// Shared context of the subset-and-permutation pattern search.
struct InducedSearch<'a> {
    g: &'a Graph,
    k: usize,
    /// sorted degree multiset of the pattern
    want: Vec<usize>,
    edges: &'a [(usize, usize)],
    pattern_degrees: Vec<usize>,
}

impl InducedSearch<'_> {
    /// Enumerates k-subsets in lexicographic order; on each full subset,
    /// filters by degree multiset and then tries role assignments.
    fn subsets(&self, lo: usize, depth: usize, subset: &mut Vec<usize>) -> Option<Vec<usize>> {
        let g = self.g;
        if depth == self.k {
            let mut have: Vec<usize> = subset
                .iter()
                .map(|&u| subset.iter().filter(|&&v| v != u && g.has_edge(u, v)).count())
                .collect();
            have.sort_unstable();
            if have != self.want {
                return None;
            }
            let mut assign = vec![usize::MAX; self.k];
            let mut taken = vec![false; self.k];
            if self.place(0, subset, &mut assign, &mut taken) {
                return Some(subset.clone());
            }
            return None;
        }
        for v in lo..g.n() {
            if g.n() - v < self.k - depth {
                break;
            }
            subset[depth] = v;
            if let Some(found) = self.subsets(v + 1, depth + 1, subset) {
                return Some(found);
            }
        }
        None
    }

    /// Assigns subset vertices to pattern roles one at a time, pruning on
    /// within-subset degree and on edges to already-placed roles.
    fn place(&self, role: usize, subset: &[usize], assign: &mut [usize], taken: &mut [bool]) -> bool {
        if role == self.k {
            return true;
        }
        let g = self.g;
        for (idx, &v) in subset.iter().enumerate() {
            if taken[idx] {
                continue;
            }
            let in_subset_degree = subset
                .iter()
                .filter(|&&u| u != v && g.has_edge(u, v))
                .count();
            if in_subset_degree != self.pattern_degrees[role] {
                continue;
            }
            let consistent = (0..role).all(|r| {
                let wants_edge = self.edges.contains(&(r.min(role), r.max(role)));
                g.has_edge(assign[r], v) == wants_edge
            });
            if !consistent {
                continue;
            }
            assign[role] = v;
            taken[idx] = true;
            if self.place(role + 1, subset, assign, taken) {
                return true;
            }
            taken[idx] = false;
        }
        false
    }
}
