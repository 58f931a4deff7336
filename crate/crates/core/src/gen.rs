//! Seeded generators for bull-free, house-free instances.
//!
//! Three methods, all reproducible from a `u64` seed:
//!
//! - **rejection**: sample G(n, p) until the pattern detector accepts;
//!   only practical for small n, and gives up after a fixed budget.
//! - **substitution**: grow a graph by repeatedly substituting a small
//!   base graph for a random vertex. The forbidden patterns are prime, so
//!   an induced copy in the composite would lie inside the inserted copy
//!   or project to the host — substitution therefore keeps the class, and
//!   it reaches any requested size exactly.
//! - **duplication_chain**: start from a base graph and repeatedly add a
//!   true or false twin of a random vertex (the two-vertex special case
//!   of substitution).
//!
//! Every generated graph is re-certified by the detector before it is
//! returned; a failure there is an internal error, not an input error.

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::detect::{is_class_member, Pattern};
use crate::error::Error;
use crate::graph::Graph;

/// How many G(n, p) samples the rejection method tries before giving up.
pub const REJECTION_BUDGET: usize = 10_000;

/// The small seed graphs available to the structured generators. All of
/// them avoid the bull and the house.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum BaseGraph {
    K1,
    K2,
    K3,
    K4,
    S2,
    S3,
    S4,
    P3,
    P4,
    C5,
}

impl BaseGraph {
    pub const ALL: [BaseGraph; 10] = [
        BaseGraph::K1,
        BaseGraph::K2,
        BaseGraph::K3,
        BaseGraph::K4,
        BaseGraph::S2,
        BaseGraph::S3,
        BaseGraph::S4,
        BaseGraph::P3,
        BaseGraph::P4,
        BaseGraph::C5,
    ];

    pub fn size(self) -> usize {
        match self {
            BaseGraph::K1 => 1,
            BaseGraph::K2 | BaseGraph::S2 => 2,
            BaseGraph::K3 | BaseGraph::S3 | BaseGraph::P3 => 3,
            BaseGraph::K4 | BaseGraph::S4 | BaseGraph::P4 => 4,
            BaseGraph::C5 => 5,
        }
    }

    pub fn graph(self) -> Graph {
        let n = self.size();
        let edges: Vec<(usize, usize)> = match self {
            BaseGraph::K1 | BaseGraph::S2 | BaseGraph::S3 | BaseGraph::S4 => Vec::new(),
            BaseGraph::K2 | BaseGraph::K3 | BaseGraph::K4 => (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect(),
            BaseGraph::P3 | BaseGraph::P4 => (0..n - 1).map(|i| (i, i + 1)).collect(),
            BaseGraph::C5 => (0..n).map(|i| (i, (i + 1) % n)).collect(),
        };
        Graph::from_edges(n, &edges).expect("base graphs are well-formed")
    }
}

/// One reproducible generation request.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GenRecipe {
    pub seed: u64,
    #[serde(flatten)]
    pub method: GenMethod,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum GenMethod {
    Rejection { n: usize, edge_prob: f64 },
    Substitution { target_n: usize, max_inner: usize },
    DuplicationChain { base: BaseGraph, length: usize },
}

/// Replaces vertex `v` of `host` by the whole of `inner`: vertices of
/// `host` other than `v` come first in their original order, the vertices
/// of `inner` follow, and every inner vertex inherits `v`'s outside
/// neighborhood. The inserted copy is a module of the result.
pub fn substitute(host: &Graph, v: usize, inner: &Graph) -> Result<Graph, Error> {
    if v >= host.n() {
        return Err(Error::Input(format!(
            "substitution point {v} out of range for a host on {} vertices",
            host.n()
        )));
    }
    if inner.n() == 0 {
        return Err(Error::Input(
            "substituting an empty graph would delete the vertex".into(),
        ));
    }
    let survives = |u: usize| if u < v { u } else { u - 1 };
    let inner_base = host.n() - 1;
    let mut edges = Vec::new();
    for (a, b) in host.edges() {
        if a != v && b != v {
            edges.push((survives(a), survives(b)));
        }
    }
    for u in host.neighbors(v) {
        for w in 0..inner.n() {
            edges.push((survives(u), inner_base + w));
        }
    }
    for (a, b) in inner.edges() {
        edges.push((inner_base + a, inner_base + b));
    }
    let out = Graph::from_edges(inner_base + inner.n(), &edges)?;
    #[cfg(debug_assertions)]
    if inner.n() >= 2 {
        let copy = crate::graph::VertexSet::from_members(
            out.n(),
            inner_base..inner_base + inner.n(),
        );
        debug_assert!(
            crate::modules::is_homogeneous(&out, &copy).unwrap(),
            "the inserted copy must be a module"
        );
    }
    Ok(out)
}

/// Appends a twin of `v` as the new highest-numbered vertex: same
/// neighborhood as `v`, plus `v` itself when `true_twin` is set.
pub fn duplicate_vertex(g: &Graph, v: usize, true_twin: bool) -> Result<Graph, Error> {
    if v >= g.n() {
        return Err(Error::Input(format!(
            "duplication point {v} out of range for a graph on {} vertices",
            g.n()
        )));
    }
    let n = g.n();
    let mut edges = g.edges();
    for u in g.neighbors(v) {
        edges.push((u, n));
    }
    if true_twin {
        edges.push((v, n));
    }
    Graph::from_edges(n + 1, &edges)
}

fn certify(g: Graph) -> Result<Graph, Error> {
    match is_class_member(&g, &[Pattern::Bull, Pattern::House]) {
        (true, _) => Ok(g),
        (false, witness) => Err(Error::Internal(format!(
            "generator produced an out-of-class graph with induced {:?}",
            witness.map(|w| (w.pattern.name(), w.vertices))
        ))),
    }
}

fn gen_rejection(rng: &mut ChaCha8Rng, n: usize, edge_prob: f64) -> Result<Graph, Error> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(Error::Input(format!(
            "edge probability {edge_prob} is outside [0, 1]"
        )));
    }
    for _ in 0..REJECTION_BUDGET {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(edge_prob) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges)?;
        if let (true, _) = is_class_member(&g, &[Pattern::Bull, Pattern::House]) {
            return Ok(g);
        }
    }
    Err(Error::Input(format!(
        "rejection sampling found no bull-free, house-free graph in \
         {REJECTION_BUDGET} samples at n = {n}, p = {edge_prob}; lower n or \
         move p toward 0 or 1"
    )))
}

fn gen_substitution(
    rng: &mut ChaCha8Rng,
    target_n: usize,
    max_inner: usize,
) -> Result<Graph, Error> {
    if target_n == 0 {
        return Err(Error::Input("substitution needs a target of at least 1".into()));
    }
    if !(2..=5).contains(&max_inner) {
        return Err(Error::Input(format!(
            "max_inner must be between 2 and 5, got {max_inner}"
        )));
    }
    let pick = |rng: &mut ChaCha8Rng, lo: usize, hi: usize| {
        let options: Vec<BaseGraph> = BaseGraph::ALL
            .iter()
            .copied()
            .filter(|b| (lo..=hi).contains(&b.size()))
            .collect();
        options[rng.random_range(0..options.len())]
    };
    let mut g = pick(rng, 1, max_inner.min(target_n)).graph();
    while g.n() < target_n {
        let v = rng.random_range(0..g.n());
        // a base of size s grows the graph by s - 1, so cap by the gap
        let gap = target_n - g.n();
        let inner = pick(rng, 2, max_inner.min(gap + 1));
        g = substitute(&g, v, &inner.graph())?;
    }
    Ok(g)
}

fn gen_duplication_chain(
    rng: &mut ChaCha8Rng,
    base: BaseGraph,
    length: usize,
) -> Result<Graph, Error> {
    let mut g = base.graph();
    for _ in 0..length {
        let v = rng.random_range(0..g.n());
        let true_twin = rng.random_bool(0.5);
        g = duplicate_vertex(&g, v, true_twin)?;
    }
    Ok(g)
}

/// Runs a recipe to completion: seeds the stream cipher RNG, applies the
/// method, and re-certifies the result against the detector.
pub fn generate(recipe: &GenRecipe) -> Result<Graph, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(recipe.seed);
    let g = match recipe.method {
        GenMethod::Rejection { n, edge_prob } => gen_rejection(&mut rng, n, edge_prob)?,
        GenMethod::Substitution { target_n, max_inner } => {
            gen_substitution(&mut rng, target_n, max_inner)?
        }
        GenMethod::DuplicationChain { base, length } => {
            gen_duplication_chain(&mut rng, base, length)?
        }
    };
    certify(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;
    use crate::modules::is_homogeneous;

    #[test]
    fn every_base_graph_is_in_class_and_sized_right() {
        for base in BaseGraph::ALL {
            let g = base.graph();
            assert_eq!(g.n(), base.size(), "{base:?} size");
            let (ok, _) = is_class_member(&g, &[Pattern::Bull, Pattern::House]);
            assert!(ok, "{base:?} must avoid the bull and the house");
        }
    }

    #[test]
    fn substituting_an_edge_into_a_cycle() {
        let c5 = BaseGraph::C5.graph();
        let got = substitute(&c5, 0, &BaseGraph::K2.graph()).unwrap();
        // survivors 1..4 renumber to 0..3, the pair lands on 4 and 5
        let want = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 3), (0, 4), (0, 5), (3, 4), (3, 5), (4, 5)],
        )
        .unwrap();
        assert_eq!(got.edges(), want.edges());
        assert!(is_homogeneous(&got, &VertexSet::from_members(6, [4, 5])).unwrap());
    }

    #[test]
    fn substitution_rejects_bad_arguments() {
        let c5 = BaseGraph::C5.graph();
        assert!(matches!(
            substitute(&c5, 9, &BaseGraph::K2.graph()),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            substitute(&c5, 0, &Graph::empty(0)),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn twins_attach_to_the_right_neighborhoods() {
        let p3 = BaseGraph::P3.graph();
        let true_twin = duplicate_vertex(&p3, 1, true).unwrap();
        assert_eq!(true_twin.edges(), vec![(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let false_twin = duplicate_vertex(&p3, 1, false).unwrap();
        assert_eq!(false_twin.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert!(matches!(duplicate_vertex(&p3, 3, true), Err(Error::Input(_))));
    }

    #[test]
    fn recipes_replay_byte_for_byte() {
        let recipes = [
            GenRecipe {
                seed: 11,
                method: GenMethod::Rejection { n: 8, edge_prob: 0.25 },
            },
            GenRecipe {
                seed: 12,
                method: GenMethod::Substitution { target_n: 33, max_inner: 4 },
            },
            GenRecipe {
                seed: 13,
                method: GenMethod::DuplicationChain { base: BaseGraph::C5, length: 20 },
            },
        ];
        for recipe in &recipes {
            let a = generate(recipe).unwrap();
            let b = generate(recipe).unwrap();
            assert_eq!(a.n(), b.n(), "replay size for {recipe:?}");
            assert_eq!(a.edges(), b.edges(), "replay edges for {recipe:?}");
        }
    }

    #[test]
    fn substitution_lands_exactly_on_target() {
        for target in 1..=40 {
            let recipe = GenRecipe {
                seed: 1000 + target as u64,
                method: GenMethod::Substitution { target_n: target, max_inner: 5 },
            };
            let g = generate(&recipe).unwrap();
            assert_eq!(g.n(), target, "seed {}", recipe.seed);
        }
    }

    #[test]
    fn duplication_chain_grows_one_vertex_per_step() {
        let recipe = GenRecipe {
            seed: 5,
            method: GenMethod::DuplicationChain { base: BaseGraph::K1, length: 5 },
        };
        let g = generate(&recipe).unwrap();
        assert_eq!(g.n(), 6);
        let (ok, _) = is_class_member(&g, &[Pattern::Bull, Pattern::House]);
        assert!(ok);
    }

    #[test]
    fn rejection_gives_up_gracefully_on_hopeless_parameters() {
        // at n = 30, p = 1/2 essentially every sample has a bull
        let recipe = GenRecipe {
            seed: 0,
            method: GenMethod::Rejection { n: 30, edge_prob: 0.5 },
        };
        match generate(&recipe) {
            Err(Error::Input(message)) => assert!(message.contains("rejection")),
            other => panic!("expected the budget to run out, got {other:?}"),
        }
    }

    #[test]
    fn invalid_recipes_are_input_errors() {
        let bad = [
            GenMethod::Rejection { n: 5, edge_prob: 1.5 },
            GenMethod::Substitution { target_n: 0, max_inner: 3 },
            GenMethod::Substitution { target_n: 10, max_inner: 1 },
            GenMethod::Substitution { target_n: 10, max_inner: 6 },
        ];
        for method in bad {
            let recipe = GenRecipe { seed: 1, method };
            assert!(matches!(generate(&recipe), Err(Error::Input(_))), "{recipe:?}");
        }
    }

    #[test]
    fn recipes_round_trip_through_json() {
        let text = r#"{"seed":7,"type":"substitution","target_n":100,"max_inner":4}"#;
        let recipe: GenRecipe = serde_json::from_str(text).unwrap();
        assert!(matches!(
            recipe.method,
            GenMethod::Substitution { target_n: 100, max_inner: 4 }
        ));
        let back = serde_json::to_string(&recipe).unwrap();
        let reparsed: GenRecipe = serde_json::from_str(&back).unwrap();
        assert_eq!(reparsed.seed, 7);
        let chain = GenRecipe {
            seed: 3,
            method: GenMethod::DuplicationChain { base: BaseGraph::P4, length: 9 },
        };
        let text = serde_json::to_string(&chain).unwrap();
        assert!(text.contains("duplication_chain"), "got: {text}");
        assert!(text.contains("\"p4\""), "got: {text}");
    }
}
