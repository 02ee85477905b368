//! Graph generators: chains, cyclic quotient singularities and catalog
//! instantiations.

use num_integer::Integer;

use crate::catalog::{AdeType, ConfigClass};
use crate::error::{Error, Result};
use crate::graph::{DualGraph, VertexId};

/// Path graph with the given self-intersections, ids `v0, v1, ...`.
pub fn gen_chain(weights: &[i64]) -> Result<DualGraph> {
    let edges: Vec<(usize, usize)> = (1..weights.len()).map(|i| (i - 1, i)).collect();
    DualGraph::from_weights(weights, &edges)
}

/// Negative (Hirzebruch-Jung) continued fraction
/// `n/q = a_1 - 1/(a_2 - 1/(...))` with every `a_i >= 2`.
pub fn hj_continued_fraction(n: u64, q: u64) -> Result<Vec<u64>> {
    if q == 0 || n <= q || n.gcd(&q) != 1 {
        return Err(Error::InvalidParameters(format!(
            "cyclic quotient needs n > q >= 1 coprime, got n={n}, q={q}"
        )));
    }
    let (mut num, mut den) = (n, q);
    let mut out = Vec::new();
    while den != 0 {
        let a = num.div_ceil(den);
        out.push(a);
        (num, den) = (den, a * den - num);
    }
    Ok(out)
}

/// Resolution chain of the cyclic quotient singularity `1/n (1, q)`.
pub fn gen_cyclic(n: u64, q: u64) -> Result<DualGraph> {
    let weights: Vec<i64> = hj_continued_fraction(n, q)?
        .into_iter()
        .map(|a| -(a as i64))
        .collect();
    gen_chain(&weights)
}

/// Whole ADE graph with all weights -2 (vertex ids `v0, ...` in the local
/// layout of [`AdeType::edges`]).
pub fn gen_ade(t: AdeType) -> Result<DualGraph> {
    if !t.is_valid() {
        return Err(Error::InvalidParameters(format!("{t} is not an ADE type")));
    }
    DualGraph::from_weights(&vec![-2; t.vertex_count()], &t.edges())
}

/// Instantiates a catalog row: its -2-core (ids `c0, c1, ...` in layout
/// order) plus one fresh leaf `x0, x1, ...` per attachment edge, carrying
/// the given weights in attachment order.
///
/// The result is only a candidate: whether it is rational with an almost
/// reduced fundamental cycle depends on the weights and must be checked.
pub fn gen_catalog(class: ConfigClass, attachment_weights: &[i64]) -> Result<DualGraph> {
    let t = class.template()?;
    if attachment_weights.len() != t.n() {
        return Err(Error::InvalidParameters(format!(
            "{class} has {} attachment edges, got {} weights",
            t.n(),
            attachment_weights.len()
        )));
    }
    if let Some(w) = attachment_weights.iter().find(|&&w| w > -3) {
        return Err(Error::InvalidParameters(format!(
            "attachment weight {w} must be at most -3"
        )));
    }
    let m = t.shape.vertex_count();
    let mut vertices: Vec<(VertexId, i64)> =
        (0..m).map(|i| (VertexId(format!("c{i}")), -2)).collect();
    let mut edges: Vec<(VertexId, VertexId)> = t
        .shape
        .edges()
        .into_iter()
        .map(|(a, b)| (vertices[a].0.clone(), vertices[b].0.clone()))
        .collect();
    let anchors = (0..m).flat_map(|i| std::iter::repeat_n(i, t.attachments[i]));
    for (j, (anchor, &w)) in anchors.zip(attachment_weights).enumerate() {
        let leaf = VertexId(format!("x{j}"));
        edges.push((vertices[anchor].0.clone(), leaf.clone()));
        vertices.push((leaf, w));
    }
    DualGraph::new(vertices, edges)
}
