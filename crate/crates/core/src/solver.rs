//! The exact cover engine and its coloring dual.
//!
//! `clique_cover` partitions a graph with no induced bull or house into a
//! minimum number of cliques; `chromatic_coloring` colors a graph with no
//! induced P5 or bull optimally by covering its complement (the two
//! classes are complements of each other: the bull is self-complementary
//! and the house is the complement of the P5).
//!
//! Every recursion node picks the first applicable of five cases:
//!
//! 1. **greedy** — no induced P5 and no induced C5: nonincreasing-degree
//!    greedy coloring is optimal on this class and the class is closed
//!    under complement, so the complement's greedy color classes are a
//!    minimum clique cover.
//! 2. **matching** — triangle-free: cliques have at most two vertices, so
//!    a minimum cover is a maximum matching plus singletons.
//! 3. **components** — disconnected: cover each component separately.
//! 4. **co_components** — complement disconnected: co-components are
//!    pairwise complete, so the j-th cliques of their covers merge; the
//!    answer is the maximum count over co-components.
//! 5. **module_reduction** — both connected: cover each non-stable
//!    quasi-maximal module recursively, stand in a stable set of that many
//!    vertices for it, solve the strictly smaller quotient, then expand
//!    each stand-in back to its clique. For class members that exhaust the
//!    other cases such a module always exists.
//!
//! Each node appends a `TraceNode`, and the recursion touches O(n) nodes
//! in total because it only ever recurses into modules and quotients.

use std::collections::BTreeMap;

use crate::detect::{find_induced, is_class_member, Pattern};
use crate::error::Error;
use crate::graph::{Graph, InducedSubgraph, VertexSet};
use crate::matching::maximum_matching;
use crate::modules::{quasi_maximal_modules, ModuleKind};

/// A partition of the vertices of an `n`-vertex graph into cliques.
#[derive(Clone, Debug)]
pub struct CliquePartition {
    n: usize,
    parts: Vec<VertexSet>,
}

impl CliquePartition {
    /// Builds a partition after checking that the parts are nonempty,
    /// disjoint, over the right universe, and cover every vertex. Whether
    /// each part is a clique depends on a graph; `verify_cover` checks
    /// that.
    pub fn from_parts(n: usize, parts: Vec<VertexSet>) -> Result<Self, Error> {
        let mut seen = VertexSet::empty(n);
        for (i, part) in parts.iter().enumerate() {
            if part.universe() != n {
                return Err(Error::Input(format!(
                    "part {i} is over universe {}, expected {n}",
                    part.universe()
                )));
            }
            if part.is_empty() {
                return Err(Error::Input(format!("part {i} is empty")));
            }
            if seen.intersects(part) {
                return Err(Error::Input(format!("part {i} overlaps an earlier part")));
            }
            seen.union_with(part);
        }
        if seen.len() != n {
            return Err(Error::Input(format!(
                "parts cover {} of {n} vertices",
                seen.len()
            )));
        }
        Ok(CliquePartition { n, parts })
    }

    /// Internal constructor for partitions correct by construction.
    pub(crate) fn from_parts_unchecked(n: usize, parts: Vec<VertexSet>) -> Self {
        debug_assert!(Self::from_parts(n, parts.clone()).is_ok());
        CliquePartition { n, parts }
    }

    /// Universe size (vertex count of the covered graph).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of cliques in the cover.
    pub fn size(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }
}

/// A proper coloring: `colors[v]` is in `1..=k` and every color up to the
/// maximum is used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorPartition {
    colors: Vec<usize>,
}

impl ColorPartition {
    /// Builds a coloring after checking the color range is the contiguous
    /// `1..=k` with every color used. Properness depends on a graph;
    /// `verify_coloring` checks that.
    pub fn from_colors(colors: Vec<usize>) -> Result<Self, Error> {
        let k = colors.iter().copied().max().unwrap_or(0);
        let mut used = vec![false; k + 1];
        for (v, &c) in colors.iter().enumerate() {
            if c == 0 || c > k {
                return Err(Error::Input(format!(
                    "vertex {v} has color {c}, outside 1..={k}"
                )));
            }
            used[c] = true;
        }
        if let Some(c) = (1..=k).find(|&c| !used[c]) {
            return Err(Error::Input(format!("color {c} of 1..={k} is never used")));
        }
        Ok(ColorPartition { colors })
    }

    pub(crate) fn from_colors_unchecked(colors: Vec<usize>) -> Self {
        debug_assert!(Self::from_colors(colors.clone()).is_ok());
        ColorPartition { colors }
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    /// Number of colors used (0 only for the empty graph).
    pub fn num_colors(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// The color of `v`, in `1..=num_colors()`.
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Color classes in color order: entry `j` holds the vertices colored
    /// `j + 1`.
    pub fn classes(&self) -> Vec<VertexSet> {
        let n = self.colors.len();
        let mut out = vec![VertexSet::empty(n); self.num_colors()];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c - 1].insert(v);
        }
        out
    }
}

/// Which of the five cases fired at a recursion node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Step {
    Greedy,
    Matching,
    Components,
    CoComponents,
    ModuleReduction,
}

impl Step {
    pub fn name(self) -> &'static str {
        match self {
            Step::Greedy => "greedy",
            Step::Matching => "matching",
            Step::Components => "components",
            Step::CoComponents => "co_components",
            Step::ModuleReduction => "module_reduction",
        }
    }
}

/// One recursion node of a solve.
#[derive(Clone, Debug)]
pub struct TraceNode {
    pub step: Step,
    /// Vertex count of this node's (sub)graph.
    pub n: usize,
    /// The partition that drove recursion, in this node's local vertex
    /// ids: components, co-components, or quasi-maximal modules. Leaf
    /// steps carry `None`.
    pub parts: Option<Vec<Vec<usize>>>,
    /// Vertex counts of the child subproblems, in `children` order. For
    /// module reduction the last entry is the reduced quotient graph.
    pub subproblem_sizes: Vec<usize>,
    /// Indices into `SolveTrace::nodes` of the child nodes.
    pub children: Vec<usize>,
}

/// The dispatch tree of a solve. Nodes are stored in postorder, so the
/// root is the last node.
#[derive(Clone, Debug, Default)]
pub struct SolveTrace {
    pub nodes: Vec<TraceNode>,
}

impl SolveTrace {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn root(&self) -> Option<&TraceNode> {
        self.nodes.last()
    }

    /// How many times each step fired, keyed by `Step::name`.
    pub fn step_counts(&self) -> BTreeMap<&'static str, usize> {
        let mut out = BTreeMap::new();
        for node in &self.nodes {
            *out.entry(node.step.name()).or_insert(0) += 1;
        }
        out
    }

    fn push_leaf(&mut self, step: Step, n: usize) -> usize {
        self.nodes.push(TraceNode {
            step,
            n,
            parts: None,
            subproblem_sizes: Vec::new(),
            children: Vec::new(),
        });
        self.nodes.len() - 1
    }
}

/// Greedy coloring in nonincreasing-degree order (ties by ascending
/// index): each vertex takes the smallest color absent from its colored
/// neighborhood. Works on any graph; optimal on graphs with no induced
/// C5, P5, or house.
pub fn greedy_degree_coloring(g: &Graph) -> ColorPartition {
    let n = g.n();
    let mut colors = vec![0usize; n];
    let mut used = vec![0usize; n + 2]; // epoch-stamped to avoid clearing
    for (epoch, &(v, _)) in g.degree_sequence().iter().enumerate() {
        let stamp = epoch + 1;
        for u in g.neighbors(v) {
            used[colors[u]] = stamp;
        }
        colors[v] = (1..).find(|&c| used[c] != stamp).expect("n+1 colors suffice");
    }
    ColorPartition::from_colors_unchecked(colors)
}

/// Minimum coloring for graphs with no induced C5, P5, or house, where
/// the degree-greedy order is optimal. With `strict` the class membership
/// is checked first and a violation is reported with its witness.
pub fn min_coloring_c5_p5_house_free(g: &Graph, strict: bool) -> Result<ColorPartition, Error> {
    if strict {
        if let (false, Some(witness)) =
            is_class_member(g, &[Pattern::C5, Pattern::P5, Pattern::House])
        {
            return Err(Error::ClassViolation {
                class: "(C5,P5,house)-free".into(),
                witness,
            });
        }
    }
    Ok(greedy_degree_coloring(g))
}

/// Case 1 core: cover by the complement's greedy color classes.
fn cover_from_complement_greedy(g: &Graph) -> CliquePartition {
    let coloring = greedy_degree_coloring(&g.complement());
    CliquePartition::from_parts_unchecked(g.n(), coloring.classes())
}

/// Case 2 core: matched pairs become 2-cliques (in ascending edge order),
/// exposed vertices follow as singletons; `n - |matching|` cliques total.
fn cover_from_matching(g: &Graph) -> CliquePartition {
    let n = g.n();
    let m = maximum_matching(g);
    let mut parts: Vec<VertexSet> = m
        .edges()
        .into_iter()
        .map(|(u, v)| VertexSet::from_members(n, [u, v]))
        .collect();
    for v in 0..n {
        if m.mate(v).is_none() {
            parts.push(VertexSet::from_members(n, [v]));
        }
    }
    CliquePartition::from_parts_unchecked(n, parts)
}

/// Case 3: per-component covers concatenated, in component order.
fn cover_components(
    g: &Graph,
    comps: Vec<VertexSet>,
    trace: &mut SolveTrace,
) -> Result<(CliquePartition, usize), Error> {
    let n = g.n();
    let mut parts = Vec::new();
    let mut children = Vec::new();
    let mut sizes = Vec::new();
    for comp in &comps {
        let sub = g.induced_subgraph(comp)?;
        let (cover, child) = dispatch(&sub.graph, trace)?;
        sizes.push(sub.graph.n());
        children.push(child);
        for part in cover.parts() {
            parts.push(map_back(n, part, &sub));
        }
    }
    let id = trace.nodes.len();
    trace.nodes.push(TraceNode {
        step: Step::Components,
        n,
        parts: Some(comps.iter().map(VertexSet::to_vec).collect()),
        subproblem_sizes: sizes,
        children,
    });
    Ok((CliquePartition::from_parts_unchecked(n, parts), id))
}

/// Case 4: co-components are pairwise complete, so their covers merge
/// edge-on: the j-th cliques union into one clique, and the total is the
/// maximum co-component count.
fn cover_co_components(
    g: &Graph,
    cocomps: Vec<VertexSet>,
    trace: &mut SolveTrace,
) -> Result<(CliquePartition, usize), Error> {
    let n = g.n();
    let mut covers: Vec<Vec<VertexSet>> = Vec::new();
    let mut children = Vec::new();
    let mut sizes = Vec::new();
    for cocomp in &cocomps {
        let sub = g.induced_subgraph(cocomp)?;
        let (cover, child) = dispatch(&sub.graph, trace)?;
        sizes.push(sub.graph.n());
        children.push(child);
        covers.push(cover.parts().iter().map(|p| map_back(n, p, &sub)).collect());
    }
    let total = covers.iter().map(Vec::len).max().unwrap_or(0);
    let mut parts = Vec::with_capacity(total);
    for j in 0..total {
        let mut q = VertexSet::empty(n);
        for cover in &covers {
            if let Some(p) = cover.get(j) {
                q.union_with(p);
            }
        }
        parts.push(q);
    }
    let id = trace.nodes.len();
    trace.nodes.push(TraceNode {
        step: Step::CoComponents,
        n,
        parts: Some(cocomps.iter().map(VertexSet::to_vec).collect()),
        subproblem_sizes: sizes,
        children,
    });
    Ok((CliquePartition::from_parts_unchecked(n, parts), id))
}

/// Translates a part of a subgraph cover back into host-graph vertices.
fn map_back(n: usize, part: &VertexSet, sub: &InducedSubgraph) -> VertexSet {
    VertexSet::from_members(n, part.iter().map(|v| sub.to_original[v]))
}

/// Where a vertex of the reduced quotient graph came from.
enum Origin {
    Survivor(usize),
    Inserted { module: usize, clique: usize },
}

/// Case 5 core. Covers every non-stable quasi-maximal module, replaces
/// each by a stable set of one vertex per clique of its cover (same
/// outside neighborhood), solves the strictly smaller quotient through
/// the full dispatch, and expands each stand-in vertex back into its
/// clique.
fn cover_module_reduction_inner(
    g: &Graph,
    trace: &mut SolveTrace,
) -> Result<(CliquePartition, usize), Error> {
    let n = g.n();
    let mp = quasi_maximal_modules(g)?;
    debug_assert_eq!(mp.kind, ModuleKind::MaximalProper);

    struct Replacement {
        members: VertexSet,
        sub: InducedSubgraph,
        cover: CliquePartition,
        first_reduced_id: usize,
    }

    let mut replacements: Vec<Replacement> = Vec::new();
    let mut children = Vec::new();
    let mut sizes = Vec::new();
    let mut replaced = VertexSet::empty(n);
    for part in &mp.parts {
        if g.is_stable_set(part) {
            continue;
        }
        let sub = g.induced_subgraph(part)?;
        let (cover, child) = dispatch(&sub.graph, trace)?;
        sizes.push(sub.graph.n());
        children.push(child);
        replaced.union_with(part);
        replacements.push(Replacement {
            members: part.clone(),
            sub,
            cover,
            first_reduced_id: 0,
        });
    }

    if replacements.is_empty() {
        // The structure theorem promises a non-stable module once the
        // other four cases have failed — unless the graph was never in
        // the class to begin with.
        return match is_class_member(g, &[Pattern::Bull, Pattern::House]) {
            (false, Some(witness)) => Err(Error::ClassViolation {
                class: "(bull,house)-free".into(),
                witness,
            }),
            _ => Err(Error::Internal(
                "every quasi-maximal module is stable on an instance that \
                 exhausted the other cases"
                    .into(),
            )),
        };
    }

    // Quotient layout: survivors first in ascending original order, then
    // one block of stand-ins per replaced module, in module order.
    let survivors: Vec<usize> = (0..n).filter(|&v| !replaced.contains(v)).collect();
    let mut origins: Vec<Origin> = survivors.iter().map(|&v| Origin::Survivor(v)).collect();
    for (mi, repl) in replacements.iter_mut().enumerate() {
        repl.first_reduced_id = origins.len();
        for j in 0..repl.cover.size() {
            origins.push(Origin::Inserted { module: mi, clique: j });
        }
    }
    let reduced_n = origins.len();
    debug_assert!(reduced_n < n, "each replaced module shrinks the graph");

    let mut reduced = Graph::empty(reduced_n);
    let module_rep = |mi: usize| {
        replacements[mi]
            .members
            .first()
            .expect("non-stable modules are nonempty")
    };
    for a in 0..reduced_n {
        for b in a + 1..reduced_n {
            let adjacent = match (&origins[a], &origins[b]) {
                (Origin::Survivor(u), Origin::Survivor(v)) => g.has_edge(*u, *v),
                (Origin::Survivor(u), Origin::Inserted { module, .. })
                | (Origin::Inserted { module, .. }, Origin::Survivor(u)) => {
                    // modules are homogeneous: one representative decides
                    g.has_edge(*u, module_rep(*module))
                }
                (
                    Origin::Inserted { module: m1, .. },
                    Origin::Inserted { module: m2, .. },
                ) => m1 != m2 && g.has_edge(module_rep(*m1), module_rep(*m2)),
            };
            if adjacent {
                reduced.add_edge(a, b);
            }
        }
    }

    let (reduced_cover, reduced_child) = dispatch(&reduced, trace)?;
    sizes.push(reduced_n);
    children.push(reduced_child);

    let mut parts = Vec::with_capacity(reduced_cover.size());
    for q in reduced_cover.parts() {
        let mut part = VertexSet::empty(n);
        for rv in q.iter() {
            match &origins[rv] {
                Origin::Survivor(orig) => part.insert(*orig),
                Origin::Inserted { module, clique } => {
                    let repl = &replacements[*module];
                    for u in repl.cover.parts()[*clique].iter() {
                        part.insert(repl.sub.to_original[u]);
                    }
                }
            }
        }
        parts.push(part);
    }

    let id = trace.nodes.len();
    trace.nodes.push(TraceNode {
        step: Step::ModuleReduction,
        n,
        parts: Some(mp.parts.iter().map(VertexSet::to_vec).collect()),
        subproblem_sizes: sizes,
        children,
    });
    Ok((CliquePartition::from_parts_unchecked(n, parts), id))
}

/// One recursion node: the five cases in fixed order, first hit wins.
fn dispatch(g: &Graph, trace: &mut SolveTrace) -> Result<(CliquePartition, usize), Error> {
    let n = g.n();
    if find_induced(g, Pattern::P5).is_none() && find_induced(g, Pattern::C5).is_none() {
        let cover = cover_from_complement_greedy(g);
        let id = trace.push_leaf(Step::Greedy, n);
        return Ok((cover, id));
    }
    if find_induced(g, Pattern::Triangle).is_none() {
        let cover = cover_from_matching(g);
        let id = trace.push_leaf(Step::Matching, n);
        return Ok((cover, id));
    }
    let comps = g.connected_components();
    if comps.len() > 1 {
        return cover_components(g, comps, trace);
    }
    let cocomps = g.co_components();
    if cocomps.len() > 1 {
        return cover_co_components(g, cocomps, trace);
    }
    cover_module_reduction_inner(g, trace)
}

/// Exact minimum clique cover of a graph with no induced bull and no
/// induced house. Class membership is checked first; violations carry a
/// re-checkable witness. The trace records every recursion node (at most
/// `2n` of them).
pub fn clique_cover(g: &Graph) -> Result<(CliquePartition, SolveTrace), Error> {
    if let (false, Some(witness)) = is_class_member(g, &[Pattern::Bull, Pattern::House]) {
        return Err(Error::ClassViolation {
            class: "(bull,house)-free".into(),
            witness,
        });
    }
    let mut trace = SolveTrace::default();
    if g.n() == 0 {
        return Ok((CliquePartition::from_parts_unchecked(0, Vec::new()), trace));
    }
    let (cover, _) = dispatch(g, &mut trace)?;
    debug_assert!(verify_cover(g, &cover).is_ok());
    debug_assert!(trace.node_count() <= 2 * g.n());
    Ok((cover, trace))
}

/// Exact minimum coloring of a graph with no induced P5 and no induced
/// bull: a coloring of `g` is a clique cover of its complement, and the
/// complement is exactly a bull/house-free graph.
pub fn chromatic_coloring(g: &Graph) -> Result<(ColorPartition, SolveTrace), Error> {
    if let (false, Some(witness)) = is_class_member(g, &[Pattern::P5, Pattern::Bull]) {
        return Err(Error::ClassViolation {
            class: "(P5,bull)-free".into(),
            witness,
        });
    }
    let mut trace = SolveTrace::default();
    if g.n() == 0 {
        return Ok((ColorPartition::from_colors_unchecked(Vec::new()), trace));
    }
    let (cover, _) = dispatch(&g.complement(), &mut trace)?;
    let mut colors = vec![0usize; g.n()];
    for (j, part) in cover.parts().iter().enumerate() {
        for v in part.iter() {
            colors[v] = j + 1;
        }
    }
    let coloring = ColorPartition::from_colors_unchecked(colors);
    debug_assert!(verify_coloring(g, &coloring).is_ok());
    debug_assert!(trace.node_count() <= 2 * g.n());
    Ok((coloring, trace))
}

/// Case 1 as a standalone entry point: checks that the graph has no
/// induced P5, C5, bull, or house, then covers by the complement's greedy
/// color classes.
pub fn cover_via_greedy(g: &Graph) -> Result<CliquePartition, Error> {
    if let (false, Some(witness)) =
        is_class_member(g, &[Pattern::P5, Pattern::C5, Pattern::Bull, Pattern::House])
    {
        return Err(Error::ClassViolation {
            class: "(P5,C5,bull,house)-free".into(),
            witness,
        });
    }
    Ok(cover_from_complement_greedy(g))
}

/// Case 2 as a standalone entry point: checks triangle-freeness, then
/// covers with a maximum matching plus singletons.
pub fn cover_via_matching(g: &Graph) -> Result<CliquePartition, Error> {
    if let Some(witness) = find_induced(g, Pattern::Triangle) {
        return Err(Error::ClassViolation {
            class: "triangle-free".into(),
            witness,
        });
    }
    Ok(cover_from_matching(g))
}

/// Case 3 as a standalone entry point; the graph must be disconnected.
pub fn cover_via_components(g: &Graph) -> Result<CliquePartition, Error> {
    let comps = g.connected_components();
    if comps.len() < 2 {
        return Err(Error::Input(
            "component-wise cover needs a disconnected graph".into(),
        ));
    }
    let mut trace = SolveTrace::default();
    Ok(cover_components(g, comps, &mut trace)?.0)
}

/// Case 4 as a standalone entry point; the complement must be
/// disconnected.
pub fn cover_via_co_components(g: &Graph) -> Result<CliquePartition, Error> {
    let cocomps = g.co_components();
    if cocomps.len() < 2 {
        return Err(Error::Input(
            "co-component-wise cover needs a disconnected complement".into(),
        ));
    }
    let mut trace = SolveTrace::default();
    Ok(cover_co_components(g, cocomps, &mut trace)?.0)
}

/// Case 5 as a standalone entry point: both the graph and its complement
/// must be connected and some quasi-maximal module must be non-stable.
/// When every module is stable the graph either contains a bull or house
/// (reported with a witness) or this reduction simply does not apply.
pub fn cover_via_module_reduction(g: &Graph) -> Result<CliquePartition, Error> {
    if !g.is_connected() {
        return Err(Error::Input(
            "module reduction needs a connected graph".into(),
        ));
    }
    if g.co_components().len() > 1 {
        return Err(Error::Input(
            "module reduction needs a connected complement".into(),
        ));
    }
    let mp = quasi_maximal_modules(g)?;
    if mp.parts.iter().all(|part| g.is_stable_set(part)) {
        return match is_class_member(g, &[Pattern::Bull, Pattern::House]) {
            (false, Some(witness)) => Err(Error::ClassViolation {
                class: "(bull,house)-free".into(),
                witness,
            }),
            _ => Err(Error::Input(
                "every quasi-maximal module is stable; module reduction does not apply"
                    .into(),
            )),
        };
    }
    let mut trace = SolveTrace::default();
    Ok(cover_module_reduction_inner(g, &mut trace)?.0)
}

/// Checks a clique cover against a graph: right universe, a genuine
/// partition, every part a clique. The reason string on failure names the
/// first offending part or pair (vertex ids are 0-based).
pub fn verify_cover(g: &Graph, cover: &CliquePartition) -> Result<(), String> {
    if cover.n() != g.n() {
        return Err(format!(
            "cover is over {} vertices but the graph has {}",
            cover.n(),
            g.n()
        ));
    }
    verify_cover_parts(g, cover.parts())
}

/// The same check on bare vertex sets, so candidate covers that would not
/// even construct as a `CliquePartition` still get a reason instead of an
/// error.
pub fn verify_cover_parts(g: &Graph, parts: &[VertexSet]) -> Result<(), String> {
    let mut seen = VertexSet::empty(g.n());
    for (i, part) in parts.iter().enumerate() {
        if part.universe() != g.n() {
            return Err(format!(
                "part {i} is over universe {}, expected {}",
                part.universe(),
                g.n()
            ));
        }
        if part.is_empty() {
            return Err(format!("part {i} is empty"));
        }
        if seen.intersects(part) {
            return Err(format!("part {i} overlaps an earlier part"));
        }
        seen.union_with(part);
        let members = part.to_vec();
        for (a, &u) in members.iter().enumerate() {
            for &v in &members[a + 1..] {
                if !g.has_edge(u, v) {
                    return Err(format!(
                        "part {i} is not a clique: vertices {u} and {v} are not adjacent"
                    ));
                }
            }
        }
    }
    if seen.len() != g.n() {
        let missing = (0..g.n()).find(|&v| !seen.contains(v)).expect("some vertex missing");
        return Err(format!("vertex {missing} is not covered by any part"));
    }
    Ok(())
}

/// Checks a coloring against a graph: right length, contiguous colors
/// `1..=k` all used, endpoints of every edge colored differently. The
/// reason string on failure names the first offense (vertex ids 0-based).
pub fn verify_coloring(g: &Graph, coloring: &ColorPartition) -> Result<(), String> {
    verify_coloring_values(g, coloring.colors())
}

/// The same check on a bare color array, so candidate colorings that
/// would not construct as a `ColorPartition` still get a reason.
pub fn verify_coloring_values(g: &Graph, colors: &[usize]) -> Result<(), String> {
    if colors.len() != g.n() {
        return Err(format!(
            "coloring has {} entries but the graph has {} vertices",
            colors.len(),
            g.n()
        ));
    }
    let k = colors.iter().copied().max().unwrap_or(0);
    let mut used = vec![false; k + 1];
    for (v, &c) in colors.iter().enumerate() {
        if c == 0 {
            return Err(format!("vertex {v} has color 0, colors start at 1"));
        }
        used[c] = true;
    }
    if let Some(c) = (1..=k).find(|&c| !used[c]) {
        return Err(format!("color {c} of 1..={k} is never used"));
    }
    for (u, v) in g.edges() {
        if colors[u] == colors[v] {
            return Err(format!(
                "adjacent vertices {u} and {v} both have color {}",
                colors[u]
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_chromatic, brute_clique_cover};

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn bull() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)]).unwrap()
    }

    fn house() -> Graph {
        Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4)]).unwrap()
    }

    /// C5 plus vertex 5 as a true twin of vertex 0 (adjacent to 0, 1, 4):
    /// the smallest fixture whose dispatch reaches module reduction.
    fn c5_true_twin() -> Graph {
        Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 1), (5, 4)],
        )
        .unwrap()
    }

    fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        (0u64..1 << pairs.len()).map(move |mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    }

    #[test]
    fn greedy_two_colors_a_path() {
        let coloring = greedy_degree_coloring(&path(4));
        assert_eq!(coloring.num_colors(), 2);
        assert!(verify_coloring(&path(4), &coloring).is_ok());
    }

    #[test]
    fn greedy_is_exact_on_a_near_clique() {
        // K4 minus the edge 2-3: chromatic number 3
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(brute_chromatic(&g).unwrap().0, 3);
        assert_eq!(greedy_degree_coloring(&g).num_colors(), 3);
    }

    #[test]
    fn greedy_is_exact_on_complete_tripartite() {
        // K_{2,2,2} with parts {0,1}, {2,3}, {4,5}
        let mut edges = Vec::new();
        for u in 0..6usize {
            for v in u + 1..6 {
                if u / 2 != v / 2 {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(6, &edges).unwrap();
        assert_eq!(brute_chromatic(&g).unwrap().0, 3);
        let coloring = min_coloring_c5_p5_house_free(&g, true).unwrap();
        assert_eq!(coloring.num_colors(), 3);
        assert!(verify_coloring(&g, &coloring).is_ok());
    }

    #[test]
    fn strict_greedy_coloring_rejects_a_five_cycle() {
        let err = min_coloring_c5_p5_house_free(&cycle(5), true).unwrap_err();
        match err {
            Error::ClassViolation { class, witness } => {
                assert_eq!(class, "(C5,P5,house)-free");
                assert!(witness.verify(&cycle(5)));
            }
            other => panic!("expected a class violation, got {other:?}"),
        }
        assert!(min_coloring_c5_p5_house_free(&cycle(5), false).is_ok());
    }

    #[test]
    fn matching_cover_of_a_five_cycle_has_three_cliques() {
        assert_eq!(brute_clique_cover(&cycle(5)).unwrap().0, 3);
        let cover = cover_via_matching(&cycle(5)).unwrap();
        assert_eq!(cover.size(), 3);
        assert!(verify_cover(&cycle(5), &cover).is_ok());
    }

    #[test]
    fn matching_cover_obeys_the_size_law_on_petersen() {
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, i + 5)));
        edges.extend((0..5).map(|i| (i + 5, (i + 2) % 5 + 5)));
        let g = Graph::from_edges(10, &edges).unwrap();
        assert_eq!(brute_clique_cover(&g).unwrap().0, 5);
        let cover = cover_via_matching(&g).unwrap();
        // 10 vertices minus a perfect matching of 5 edges
        assert_eq!(cover.size(), 5);
        assert!(verify_cover(&g, &cover).is_ok());
    }

    #[test]
    fn matching_cover_rejects_triangles_with_a_witness() {
        let g = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        match cover_via_matching(&g).unwrap_err() {
            Error::ClassViolation { class, witness } => {
                assert_eq!(class, "triangle-free");
                assert_eq!(witness.pattern, Pattern::Triangle);
                assert!(witness.verify(&g));
            }
            other => panic!("expected a class violation, got {other:?}"),
        }
    }

    #[test]
    fn component_cover_concatenates_the_pieces() {
        // two disjoint triangles
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]).unwrap();
        assert_eq!(brute_clique_cover(&g).unwrap().0, 2);
        let cover = cover_via_components(&g).unwrap();
        assert_eq!(cover.size(), 2);
        assert!(verify_cover(&g, &cover).is_ok());
        assert!(matches!(
            cover_via_components(&cycle(4)),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn co_component_cover_pads_the_shorter_side() {
        // join of P4 (0-1-2-3) and K2 (4-5): covers of sizes 2 and 1 merge
        // into 2 cliques
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (4, 5)];
        for u in 0..4 {
            for v in 4..6 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edges(6, &edges).unwrap();
        assert_eq!(brute_clique_cover(&g).unwrap().0, 2);
        let cover = cover_via_co_components(&g).unwrap();
        assert_eq!(cover.size(), 2);
        assert!(verify_cover(&g, &cover).is_ok());
        assert!(matches!(
            cover_via_co_components(&path(4)),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn module_reduction_solves_the_twinned_five_cycle() {
        let g = c5_true_twin();
        assert_eq!(brute_clique_cover(&g).unwrap().0, 3);
        let cover = cover_via_module_reduction(&g).unwrap();
        assert_eq!(cover.size(), 3);
        assert!(verify_cover(&g, &cover).is_ok());
    }

    #[test]
    fn module_reduction_does_not_apply_to_a_prime_cycle() {
        // C5 is in class and doubly connected, but all its quasi-maximal
        // modules are singletons
        assert!(matches!(
            cover_via_module_reduction(&cycle(5)),
            Err(Error::Input(_))
        ));
        // on a doubly-connected graph with a bull the same entry point
        // reports the class violation instead
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)];
        edges.push((0, 5));
        edges.push((3, 5));
        let g = Graph::from_edges(6, &edges).unwrap();
        if g.is_connected() && g.co_components().len() == 1 {
            match cover_via_module_reduction(&g) {
                Err(Error::ClassViolation { witness, .. }) => assert!(witness.verify(&g)),
                other => panic!("expected a class violation, got {other:?}"),
            }
        }
    }

    #[test]
    fn full_solve_traces_the_twinned_five_cycle() {
        let (cover, trace) = clique_cover(&c5_true_twin()).unwrap();
        assert_eq!(cover.size(), 3);
        assert!(trace.node_count() <= 12, "bound is twice the vertex count");
        let counts = trace.step_counts();
        assert_eq!(counts.get("module_reduction"), Some(&1));
        // the twin pair is covered by the greedy case, the reduced C5 by
        // the matching case
        assert_eq!(counts.get("greedy"), Some(&1));
        assert_eq!(counts.get("matching"), Some(&1));
        let root = trace.root().unwrap();
        assert_eq!(root.step, Step::ModuleReduction);
        assert_eq!(root.n, 6);
        assert_eq!(root.subproblem_sizes, vec![2, 5]);
        assert_eq!(
            root.parts,
            Some(vec![vec![0, 5], vec![1], vec![2], vec![3], vec![4]])
        );
    }

    #[test]
    fn false_twins_route_through_the_matching_case_instead() {
        // C5 with a false twin of 0 stays triangle-free
        let g = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 1), (5, 4)],
        )
        .unwrap();
        assert_eq!(brute_clique_cover(&g).unwrap().0, 3);
        let (cover, trace) = clique_cover(&g).unwrap();
        assert_eq!(cover.size(), 3);
        assert_eq!(trace.node_count(), 1);
        assert_eq!(trace.root().unwrap().step, Step::Matching);
    }

    #[test]
    fn cover_rejects_the_bull_and_the_house_with_witnesses() {
        for (g, pattern) in [(bull(), Pattern::Bull), (house(), Pattern::House)] {
            match clique_cover(&g).unwrap_err() {
                Error::ClassViolation { class, witness } => {
                    assert_eq!(class, "(bull,house)-free");
                    assert_eq!(witness.pattern, pattern);
                    assert!(witness.verify(&g));
                }
                other => panic!("expected a class violation, got {other:?}"),
            }
        }
    }

    #[test]
    fn trivial_inputs_solve_without_recursion() {
        let (cover, trace) = clique_cover(&Graph::empty(0)).unwrap();
        assert_eq!(cover.size(), 0);
        assert_eq!(trace.node_count(), 0);
        let (cover, _) = clique_cover(&Graph::empty(1)).unwrap();
        assert_eq!(cover.size(), 1);
        let (coloring, _) = chromatic_coloring(&Graph::empty(0)).unwrap();
        assert_eq!(coloring.num_colors(), 0);
    }

    #[test]
    fn coloring_rejects_a_path_on_five_vertices() {
        match chromatic_coloring(&path(5)).unwrap_err() {
            Error::ClassViolation { class, witness } => {
                assert_eq!(class, "(P5,bull)-free");
                assert_eq!(witness.pattern, Pattern::P5);
            }
            other => panic!("expected a class violation, got {other:?}"),
        }
    }

    #[test]
    fn coloring_matches_the_oracle_on_small_fixtures() {
        // C5 needs 3 colors; P4 needs 2
        let (coloring, _) = chromatic_coloring(&cycle(5)).unwrap();
        assert_eq!(brute_chromatic(&cycle(5)).unwrap().0, 3);
        assert_eq!(coloring.num_colors(), 3);
        assert!(verify_coloring(&cycle(5), &coloring).is_ok());
        let (coloring, _) = chromatic_coloring(&path(4)).unwrap();
        assert_eq!(coloring.num_colors(), 2);
    }

    #[test]
    fn solver_matches_the_oracle_on_every_small_class_member() {
        for n in 0..=6usize {
            for g in all_graphs(n) {
                let (in_cover_class, _) =
                    is_class_member(&g, &[Pattern::Bull, Pattern::House]);
                if in_cover_class {
                    let (cover, trace) = clique_cover(&g).unwrap();
                    let (cc, _) = brute_clique_cover(&g).unwrap();
                    assert_eq!(cover.size(), cc, "cover size off on {g:?}");
                    assert!(verify_cover(&g, &cover).is_ok(), "invalid cover on {g:?}");
                    assert!(trace.node_count() <= 2 * n.max(1), "trace blew up on {g:?}");
                    // the complement is exactly a coloring-class member
                    let co = g.complement();
                    let (coloring, _) = chromatic_coloring(&co).unwrap();
                    let (chi, _) = brute_chromatic(&co).unwrap();
                    assert_eq!(coloring.num_colors(), chi, "coloring off on {co:?}");
                    assert!(verify_coloring(&co, &coloring).is_ok());
                }
            }
        }
    }

    #[test]
    fn cover_verifier_pinpoints_defects() {
        let g = cycle(4);
        let not_clique = CliquePartition::from_parts(
            4,
            vec![
                VertexSet::from_members(4, [0, 2]),
                VertexSet::from_members(4, [1, 3]),
            ],
        )
        .unwrap();
        let reason = verify_cover(&g, &not_clique).unwrap_err();
        assert!(reason.contains("not a clique"), "got: {reason}");

        assert!(matches!(
            CliquePartition::from_parts(
                4,
                vec![VertexSet::from_members(4, [0, 1]), VertexSet::from_members(4, [1, 2])],
            ),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            CliquePartition::from_parts(4, vec![VertexSet::from_members(4, [0, 1])]),
            Err(Error::Input(_))
        ));

        let wrong_universe =
            CliquePartition::from_parts(3, vec![VertexSet::from_members(3, [0, 1, 2])]).unwrap();
        assert!(verify_cover(&g, &wrong_universe).is_err());
    }

    #[test]
    fn coloring_verifier_pinpoints_defects() {
        let g = path(3);
        assert!(matches!(ColorPartition::from_colors(vec![1, 3, 1]), Err(Error::Input(_))));
        assert!(matches!(ColorPartition::from_colors(vec![0, 1, 2]), Err(Error::Input(_))));
        let improper = ColorPartition::from_colors(vec![1, 1, 2]).unwrap();
        let reason = verify_coloring(&g, &improper).unwrap_err();
        assert!(reason.contains("adjacent vertices 0 and 1"), "got: {reason}");
        let short = ColorPartition::from_colors(vec![1, 2]).unwrap();
        assert!(verify_coloring(&g, &short).is_err());
    }
}
