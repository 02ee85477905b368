//! Reproducible test corpora: ADE graphs, catalog instantiations, cyclic
//! quotient chains and seeded random negative definite trees.
//!
//! The seed can be overridden with `SINGGRAPH_SEED`; it only affects which
//! graphs are generated, never the report of a given graph.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::{AdeType, ConfigClass};
use crate::generate::{gen_ade, gen_catalog, gen_cyclic};
use crate::graph::DualGraph;

pub const DEFAULT_SEED: u64 = 0x5eed_2002;

/// `SINGGRAPH_SEED` if set and parseable, otherwise `default`.
pub fn seed_from_env(default: u64) -> u64 {
    std::env::var("SINGGRAPH_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(default)
}

/// Every ADE graph with at most `max_vertices` vertices.
pub fn ade_graphs(max_vertices: usize) -> Vec<DualGraph> {
    let mut types = Vec::new();
    for m in 1..=max_vertices {
        types.push(AdeType::A(m));
        if m >= 4 {
            types.push(AdeType::D(m));
        }
    }
    types.extend(
        [AdeType::E6, AdeType::E7, AdeType::E8]
            .into_iter()
            .filter(|t| t.vertex_count() <= max_vertices),
    );
    types
        .into_iter()
        .map(|t| gen_ade(t).expect("valid ADE type"))
        .collect()
}

/// Catalog rows with at least one attachment, instantiated with every
/// attachment weight equal to `weight`, keeping those with at most
/// `max_vertices` vertices in total.
pub fn catalog_instances(max_vertices: usize, weight: i64) -> Vec<(ConfigClass, DualGraph)> {
    ConfigClass::enumerate(max_vertices)
        .into_iter()
        .filter(|c| c.n() > 0 && c.shape().vertex_count() + c.n() <= max_vertices)
        .map(|c| {
            let g = gen_catalog(c, &vec![weight; c.n()]).expect("enumerated rows are valid");
            (c, g)
        })
        .collect()
}

/// Chains of all cyclic quotients `1/n(1, q)` with `n <= max_n`.
pub fn cyclic_chains(max_n: u64) -> Vec<DualGraph> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for q in 1..n {
            if let Ok(g) = gen_cyclic(n, q) {
                out.push(g);
            }
        }
    }
    out
}

/// Parameters for random trees.
#[derive(Debug, Clone, Copy)]
pub struct TreeParams {
    pub min_vertices: usize,
    pub max_vertices: usize,
    /// Probability that a vertex is a -2-curve.
    pub p_minus_two: f64,
    /// Other weights are drawn uniformly from `-max_weight..=-3`.
    pub max_weight: i64,
}

impl Default for TreeParams {
    fn default() -> Self {
        TreeParams {
            min_vertices: 1,
            max_vertices: 8,
            p_minus_two: 0.6,
            max_weight: 6,
        }
    }
}

/// One random weighted tree: each new vertex attaches to a uniformly chosen
/// earlier one. Not necessarily negative definite.
pub fn random_tree<R: Rng>(rng: &mut R, p: &TreeParams) -> DualGraph {
    let n = rng.gen_range(p.min_vertices..=p.max_vertices);
    let weights: Vec<i64> = (0..n)
        .map(|_| {
            if rng.gen_bool(p.p_minus_two) {
                -2
            } else {
                -rng.gen_range(3..=p.max_weight.max(3))
            }
        })
        .collect();
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    DualGraph::from_weights(&weights, &edges).expect("random trees are valid")
}

/// `count` negative definite random trees, generated from `seed`.
pub fn random_negative_definite_trees(seed: u64, count: usize, p: &TreeParams) -> Vec<DualGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let g = random_tree(&mut rng, p);
        if g.is_negative_definite() {
            out.push(g);
        }
    }
    out
}

/// Random permutation of `0..n`, for relabeling tests.
pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
