//! Homogeneous sets and the quasi-maximal module partition.
//!
//! A set `S` is homogeneous when every vertex outside `S` is adjacent to
//! all of `S` or to none of it. The solver's reduction step needs the
//! quasi-maximal modules: the maximal proper sets in the nested family of
//! overlap-free homogeneous sets. They partition the vertices and come in
//! three shapes — connected components when the graph is disconnected,
//! co-components when the complement is, and otherwise the unions of all
//! proper minimal homogeneous supersets of vertex pairs.

use crate::error::Error;
use crate::graph::{Graph, VertexSet};

/// Which of the three structural cases produced the partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    Components,
    CoComponents,
    MaximalProper,
}

/// A partition of the vertex set into quasi-maximal modules.
#[derive(Clone, Debug)]
pub struct ModulePartition {
    pub kind: ModuleKind,
    pub parts: Vec<VertexSet>,
}

pub(crate) fn check_universe(g: &Graph, s: &VertexSet) -> Result<(), Error> {
    if s.universe() != g.n() {
        return Err(Error::Input(format!(
            "vertex set over universe {} used with a graph on {} vertices",
            s.universe(),
            g.n()
        )));
    }
    Ok(())
}

/// True iff every vertex outside `s` is complete or anticomplete to `s`.
/// The empty set is rejected: neither answer would be meaningful to the
/// decomposition, so asking is treated as a caller bug.
pub fn is_homogeneous(g: &Graph, s: &VertexSet) -> Result<bool, Error> {
    check_universe(g, s)?;
    if s.is_empty() {
        return Err(Error::Input("homogeneity of the empty set is undefined".into()));
    }
    let size = s.len();
    for v in 0..g.n() {
        if s.contains(v) {
            continue;
        }
        let hits: usize = g
            .row(v)
            .iter()
            .zip(s.words())
            .map(|(r, w)| (r & w).count_ones() as usize)
            .sum();
        if hits != 0 && hits != size {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Splitter-closure of a seed set: repeatedly absorbs any outside vertex
/// with both a neighbor and a non-neighbor inside. The result is the
/// unique smallest homogeneous set containing the seed (any homogeneous
/// superset must contain every vertex the closure adds), so processing
/// order cannot change it.
fn closure(g: &Graph, seed: &VertexSet) -> VertexSet {
    let n = g.n();
    let mut s = seed.clone();
    let mut size = s.len();
    // cnt[v] = number of members of s adjacent to v, kept incrementally
    let mut cnt = vec![0usize; n];
    for u in s.iter() {
        for w in g.neighbors(u) {
            cnt[w] += 1;
        }
    }
    loop {
        let mut grew = false;
        for v in 0..n {
            if s.contains(v) {
                continue;
            }
            if cnt[v] != 0 && cnt[v] != size {
                s.insert(v);
                size += 1;
                for w in g.neighbors(v) {
                    cnt[w] += 1;
                }
                grew = true;
            }
        }
        if !grew {
            return s;
        }
    }
}

/// The smallest homogeneous set containing `seed`; may be the whole vertex
/// set. Seeds of fewer than two vertices are rejected — singletons are
/// trivially homogeneous and the closure would say nothing.
pub fn smallest_module_containing(g: &Graph, seed: &VertexSet) -> Result<VertexSet, Error> {
    check_universe(g, seed)?;
    if seed.len() < 2 {
        return Err(Error::Input(format!(
            "closure seeds need at least two vertices, got {}",
            seed.len()
        )));
    }
    Ok(closure(g, seed))
}

/// The quasi-maximal module partition of `g`. Needs `n >= 2`: a single
/// vertex has no proper decomposition.
///
/// In the doubly-connected case the part containing `u` is `{u}` together
/// with every proper closure of a pair `{u, v}`. Two sound shortcuts keep
/// this near quadratic instead of quartic: a `v` already absorbed into the
/// growing part is skipped (its closure is a subset of any homogeneous set
/// containing `u` and `v`, and the union built so far is one), and a `u`
/// already covered by an earlier part is skipped (the parts partition the
/// vertices, so its part is already known).
pub fn quasi_maximal_modules(g: &Graph) -> Result<ModulePartition, Error> {
    let n = g.n();
    if n < 2 {
        return Err(Error::Input(format!(
            "module partition needs at least two vertices, got {n}"
        )));
    }
    let comps = g.connected_components();
    if comps.len() > 1 {
        return Ok(ModulePartition { kind: ModuleKind::Components, parts: comps });
    }
    let cocomps = g.co_components();
    if cocomps.len() > 1 {
        return Ok(ModulePartition { kind: ModuleKind::CoComponents, parts: cocomps });
    }
    let mut covered = VertexSet::empty(n);
    let mut parts = Vec::new();
    for u in 0..n {
        if covered.contains(u) {
            continue;
        }
        let mut part = VertexSet::from_members(n, [u]);
        for v in 0..n {
            if v == u || part.contains(v) {
                continue;
            }
            let cl = closure(g, &VertexSet::from_members(n, [u, v]));
            if cl.len() < n {
                part.union_with(&cl);
            }
        }
        covered.union_with(&part);
        parts.push(part);
    }
    debug_assert_eq!(parts.iter().map(VertexSet::len).sum::<usize>(), n);
    Ok(ModulePartition { kind: ModuleKind::MaximalProper, parts })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    fn p4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    /// C5 with vertex 0 duplicated: vertex 5 gets 0's neighborhood and no
    /// edge to 0.
    fn c5_with_twin() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 1), (5, 4)]).unwrap()
    }

    #[test]
    fn cycle_edges_are_not_homogeneous_but_twins_are() {
        let g = c5();
        assert!(!is_homogeneous(&g, &VertexSet::from_members(5, [0, 1])).unwrap());
        assert!(is_homogeneous(&g, &VertexSet::from_members(5, [2])).unwrap());
        assert!(is_homogeneous(&g, &VertexSet::full(5)).unwrap());
        let t = c5_with_twin();
        assert!(is_homogeneous(&t, &VertexSet::from_members(6, [0, 5])).unwrap());
    }

    #[test]
    fn homogeneity_of_the_empty_set_is_an_input_error() {
        let err = is_homogeneous(&c5(), &VertexSet::empty(5)).unwrap_err();
        assert!(matches!(err, Error::Input(_)));
    }

    #[test]
    fn path_endpoints_close_to_the_whole_graph() {
        let got = smallest_module_containing(&p4(), &VertexSet::from_members(4, [0, 3])).unwrap();
        assert_eq!(got, VertexSet::full(4));
    }

    #[test]
    fn twins_close_to_themselves() {
        let g = c5_with_twin();
        let got = smallest_module_containing(&g, &VertexSet::from_members(6, [0, 5])).unwrap();
        assert_eq!(got.to_vec(), vec![0, 5]);
    }

    #[test]
    fn closure_seeds_need_two_vertices() {
        let err =
            smallest_module_containing(&p4(), &VertexSet::from_members(4, [1])).unwrap_err();
        assert!(matches!(err, Error::Input(_)));
    }

    #[test]
    fn disconnected_graphs_decompose_into_components() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 3)]).unwrap();
        let mp = quasi_maximal_modules(&g).unwrap();
        assert_eq!(mp.kind, ModuleKind::Components);
        let parts: Vec<Vec<usize>> = mp.parts.iter().map(VertexSet::to_vec).collect();
        assert_eq!(parts, vec![vec![0, 1], vec![2, 3], vec![4]]);
    }

    #[test]
    fn complete_multipartite_graphs_decompose_into_co_components() {
        // K_{2,3}: complement is K2 + K3
        let g = Graph::from_edges(
            5,
            &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        )
        .unwrap();
        let mp = quasi_maximal_modules(&g).unwrap();
        assert_eq!(mp.kind, ModuleKind::CoComponents);
        let parts: Vec<Vec<usize>> = mp.parts.iter().map(VertexSet::to_vec).collect();
        assert_eq!(parts, vec![vec![0, 1], vec![2, 3, 4]]);
    }

    #[test]
    fn twin_pair_is_the_only_fat_part_of_the_twinned_cycle() {
        let mp = quasi_maximal_modules(&c5_with_twin()).unwrap();
        assert_eq!(mp.kind, ModuleKind::MaximalProper);
        let parts: Vec<Vec<usize>> = mp.parts.iter().map(VertexSet::to_vec).collect();
        assert_eq!(parts, vec![vec![0, 5], vec![1], vec![2], vec![3], vec![4]]);
    }

    #[test]
    fn prime_paths_split_into_singletons() {
        let mp = quasi_maximal_modules(&p4()).unwrap();
        assert_eq!(mp.kind, ModuleKind::MaximalProper);
        assert!(mp.parts.iter().all(|p| p.len() == 1));
        assert_eq!(mp.parts.len(), 4);
    }

    #[test]
    fn tiny_graphs_have_no_decomposition() {
        assert!(matches!(
            quasi_maximal_modules(&Graph::empty(1)).unwrap_err(),
            Error::Input(_)
        ));
        assert!(matches!(
            quasi_maximal_modules(&Graph::empty(0)).unwrap_err(),
            Error::Input(_)
        ));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn graph_strategy() -> impl Strategy<Value = Graph> {
            (2usize..=9).prop_flat_map(|n| {
                let bits = n * (n - 1) / 2;
                (Just(n), 0u64..1u64 << bits).prop_map(|(n, mask)| {
                    let pairs: Vec<(usize, usize)> =
                        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
                    let edges: Vec<_> = pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &e)| e)
                        .collect();
                    Graph::from_edges(n, &edges).unwrap()
                })
            })
        }

        proptest! {
            // Property: the module partition really partitions the vertex
            // set and each part is homogeneous, whatever kind fired.
            #[test]
            fn parts_partition_and_are_homogeneous(g in graph_strategy()) {
                let mp = quasi_maximal_modules(&g).unwrap();
                let mut seen = VertexSet::empty(g.n());
                for part in &mp.parts {
                    prop_assert!(!part.is_empty());
                    prop_assert!(!seen.intersects(part), "parts overlap");
                    seen.union_with(part);
                    prop_assert!(is_homogeneous(&g, part).unwrap(), "part {part:?} not homogeneous");
                }
                prop_assert_eq!(seen.len(), g.n(), "parts must cover every vertex");
            }

            // Property: pair closures are homogeneous and contain their seed.
            #[test]
            fn closures_are_homogeneous_supersets(g in graph_strategy(), a in 0usize..9, b in 0usize..9) {
                prop_assume!(a < g.n() && b < g.n() && a != b);
                let seed = VertexSet::from_members(g.n(), [a, b]);
                let cl = smallest_module_containing(&g, &seed).unwrap();
                prop_assert!(seed.is_subset_of(&cl));
                prop_assert!(is_homogeneous(&g, &cl).unwrap());
            }
        }
    }
}
