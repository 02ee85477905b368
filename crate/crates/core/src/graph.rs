//! Resolution dual graphs and the intersection form on cycles.
//!
//! A [`DualGraph`] has one vertex per exceptional curve `E_i`, weighted by
//! its self-intersection, and one edge per transverse intersection point.
//! Every curve is assumed to be a smooth rational curve, so genus is not
//! stored. Edges are simple (`E_i . E_j` is 0 or 1) and all weights are at
//! most -2, i.e. the resolution is minimal.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, ValidationReason};
use crate::lattice;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub String);

impl VertexId {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId(s.to_owned())
    }
}

impl From<String> for VertexId {
    fn from(s: String) -> Self {
        VertexId(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: VertexId,
    /// Self-intersection `E_i . E_i`.
    pub sq: i64,
}

/// Validated dual graph. Vertices keep their input order; that order is the
/// index space for [`Cycle`]s and all per-vertex vectors in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    vertices: Vec<Vertex>,
    /// Edges as index pairs with `a < b`, sorted.
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    index: HashMap<VertexId, usize>,
}

impl DualGraph {
    /// Builds and validates a graph from ids, weights and id pairs.
    pub fn new<I, E>(vertices: I, edges: E) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, i64)>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let vertices: Vec<Vertex> = vertices
            .into_iter()
            .map(|(id, sq)| Vertex { id, sq })
            .collect();
        if vertices.is_empty() {
            return Err(Error::validation(
                ValidationReason::Empty,
                "graph has no vertices",
            ));
        }
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.id.clone(), i).is_some() {
                return Err(Error::validation(
                    ValidationReason::DuplicateId,
                    format!("vertex id {:?} appears twice", v.id.0),
                ));
            }
        }
        for v in &vertices {
            if v.sq > -2 {
                return Err(Error::validation(
                    ValidationReason::WeightAboveMinusTwo,
                    format!("vertex {:?} has self-intersection {}", v.id.0, v.sq),
                ));
            }
        }
        let mut pairs = Vec::new();
        for (a, b) in edges {
            let lookup = |id: &VertexId| {
                index.get(id).copied().ok_or_else(|| {
                    Error::validation(
                        ValidationReason::UnknownVertex,
                        format!("edge refers to unknown vertex {:?}", id.0),
                    )
                })
            };
            let (ia, ib) = (lookup(&a)?, lookup(&b)?);
            if ia == ib {
                return Err(Error::validation(
                    ValidationReason::SelfLoop,
                    format!("self-loop at {:?}", a.0),
                ));
            }
            pairs.push((ia.min(ib), ia.max(ib)));
        }
        Self::from_parts(vertices, pairs, index)
    }

    /// Builds a graph from weights and index pairs, naming vertices `v0, v1, ...`.
    pub fn from_weights(weights: &[i64], edges: &[(usize, usize)]) -> Result<Self> {
        let ids = (0..weights.len()).map(|i| VertexId(format!("v{i}")));
        let named: Vec<(VertexId, i64)> = ids.zip(weights.iter().copied()).collect();
        let e: Vec<(VertexId, VertexId)> = edges
            .iter()
            .map(|&(a, b)| {
                let id = |i: usize| {
                    named
                        .get(i)
                        .map(|(id, _)| id.clone())
                        .unwrap_or_else(|| VertexId(format!("v{i}")))
                };
                (id(a), id(b))
            })
            .collect();
        Self::new(named.clone(), e)
    }

    fn from_parts(
        vertices: Vec<Vertex>,
        mut pairs: Vec<(usize, usize)>,
        index: HashMap<VertexId, usize>,
    ) -> Result<Self> {
        let n = vertices.len();
        pairs.sort_unstable();
        if let Some(w) = pairs.windows(2).find(|w| w[0] == w[1]) {
            let (a, b) = w[0];
            return Err(Error::validation(
                ValidationReason::DuplicateEdge,
                format!(
                    "edge {:?}-{:?} listed twice",
                    vertices[a].id.0, vertices[b].id.0
                ),
            ));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in &pairs {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        let g = DualGraph {
            vertices,
            edges: pairs,
            adjacency,
            index,
        };
        if g.component_count() != 1 {
            return Err(Error::validation(
                ValidationReason::Disconnected,
                "graph is not connected",
            ));
        }
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Vertex {
        &self.vertices[i]
    }

    pub fn id(&self, i: usize) -> &VertexId {
        &self.vertices[i].id
    }

    pub fn sq(&self, i: usize) -> i64 {
        self.vertices[i].sq
    }

    pub fn index_of(&self, id: &VertexId) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn weights(&self) -> Vec<i64> {
        self.vertices.iter().map(|v| v.sq).collect()
    }

    /// First Betti number of the graph (0 for trees).
    pub fn cycle_rank(&self) -> usize {
        self.edges.len() + 1 - self.len()
    }

    pub fn is_tree(&self) -> bool {
        self.cycle_rank() == 0
    }

    fn component_count(&self) -> usize {
        components(self.len(), |i| self.adjacency[i].iter().copied(), |_| true).len()
    }

    /// Connected components of the subgraph induced on the vertices for which
    /// `keep` holds, each sorted by index, ordered by smallest index.
    pub fn induced_components(&self, keep: impl Fn(usize) -> bool) -> Vec<Vec<usize>> {
        components(self.len(), |i| self.adjacency[i].iter().copied(), keep)
    }

    /// Induced subgraph on `subset`, keeping weights and ids. Vertex order
    /// follows `subset`. Fails with `Disconnected` if `subset` does not induce
    /// a connected graph.
    pub fn induced(&self, subset: &[usize]) -> Result<DualGraph> {
        let mut local = vec![usize::MAX; self.len()];
        for (k, &i) in subset.iter().enumerate() {
            local[i] = k;
        }
        let vertices: Vec<Vertex> = subset.iter().map(|&i| self.vertices[i].clone()).collect();
        let index = vertices
            .iter()
            .enumerate()
            .map(|(k, v)| (v.id.clone(), k))
            .collect();
        let pairs = self
            .edges
            .iter()
            .filter(|&&(a, b)| local[a] != usize::MAX && local[b] != usize::MAX)
            .map(|&(a, b)| {
                let (x, y) = (local[a], local[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        if vertices.is_empty() {
            return Err(Error::validation(ValidationReason::Empty, "empty subgraph"));
        }
        Self::from_parts(vertices, pairs, index)
    }

    /// Same graph with vertex `i` renamed to `names[i]` and vertices listed in
    /// the order given by `order` (a permutation of indices).
    pub fn relabeled(&self, order: &[usize], names: &[VertexId]) -> Result<DualGraph> {
        let vertices = order
            .iter()
            .map(|&i| (names[i].clone(), self.sq(i)))
            .collect::<Vec<_>>();
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| (names[a].clone(), names[b].clone()));
        DualGraph::new(vertices, edges)
    }

    /// `E_i . E_j` for all pairs.
    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.len();
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = self.sq(i);
        }
        for &(a, b) in &self.edges {
            m[a][b] = 1;
            m[b][a] = 1;
        }
        m
    }

    /// Exact Sylvester test on the intersection matrix.
    pub fn is_negative_definite(&self) -> bool {
        lattice::is_negative_definite(&self.intersection_matrix())
    }

    pub fn adjunction(&self) -> AdjunctionData {
        AdjunctionData {
            k: self.vertices.iter().map(|v| -v.sq - 2).collect(),
        }
    }

    fn check_domain(&self, c: &Cycle) -> Result<()> {
        if c.len() != self.len() {
            return Err(Error::DomainMismatch {
                cycle: c.len(),
                graph: self.len(),
            });
        }
        Ok(())
    }

    /// `c . E_i` for a single vertex.
    pub fn pairing_with_vertex(&self, c: &Cycle, i: usize) -> i64 {
        self.sq(i) * c[i] + self.adjacency[i].iter().map(|&j| c[j]).sum::<i64>()
    }

    /// The intersection form `c1 . c2`.
    pub fn pairing(&self, c1: &Cycle, c2: &Cycle) -> Result<i64> {
        self.check_domain(c1)?;
        self.check_domain(c2)?;
        Ok((0..self.len())
            .map(|i| c1[i] * self.pairing_with_vertex(c2, i))
            .sum())
    }

    /// `K . c`, using adjunction `K . E_i = -E_i^2 - 2` for rational curves.
    pub fn canonical_pairing(&self, c: &Cycle) -> Result<i64> {
        self.check_domain(c)?;
        Ok(self.adjunction().pair(c))
    }
}

fn components<N, I>(n: usize, neighbors: N, keep: impl Fn(usize) -> bool) -> Vec<Vec<usize>>
where
    N: Fn(usize) -> I,
    I: Iterator<Item = usize>,
{
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] || !keep(start) {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in neighbors(v) {
                if !seen[w] && keep(w) {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// The pairings `K . E_i` of the canonical divisor with each curve. The
/// canonical divisor itself (a rational cycle) is never materialised.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjunctionData {
    pub k: Vec<i64>,
}

impl AdjunctionData {
    pub fn pair(&self, c: &Cycle) -> i64 {
        self.k.iter().zip(c.iter()).map(|(k, r)| k * r).sum()
    }
}

/// Integer cycle `sum r_i E_i`, indexed by the vertex order of its graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle(Vec<i64>);

impl Cycle {
    pub fn new(multiplicities: Vec<i64>) -> Self {
        Cycle(multiplicities)
    }

    pub fn zero(n: usize) -> Self {
        Cycle(vec![0; n])
    }

    /// The reduced exceptional cycle `E` (all multiplicities 1).
    pub fn reduced(n: usize) -> Self {
        Cycle(vec![1; n])
    }

    pub fn indicator(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Cycle(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, i64> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn is_reduced(&self) -> bool {
        self.0.iter().all(|&r| r == 1)
    }

    pub fn max(&self) -> i64 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Restriction to a subset of indices, in the given order.
    pub fn restrict(&self, subset: &[usize]) -> Cycle {
        Cycle(subset.iter().map(|&i| self.0[i]).collect())
    }

    pub(crate) fn bump(&mut self, i: usize) {
        self.0[i] += 1;
    }
}

impl std::ops::Index<usize> for Cycle {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &Cycle {
    type Output = Cycle;
    fn add(self, rhs: &Cycle) -> Cycle {
        assert_eq!(self.len(), rhs.len(), "cycle domains differ");
        Cycle(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Cycle {
    type Output = Cycle;
    fn sub(self, rhs: &Cycle) -> Cycle {
        assert_eq!(self.len(), rhs.len(), "cycle domains differ");
        Cycle(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexDoc {
    id: String,
    sq: i64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    vertices: Vec<VertexDoc>,
    edges: Vec<(String, String)>,
}

/// Parses the JSON graph format:
///
/// ```json
/// { "vertices": [ {"id": "a", "sq": -2}, ... ], "edges": [ ["a", "b"], ... ] }
/// ```
pub fn parse_graph(text: &str) -> Result<DualGraph> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    DualGraph::new(
        doc.vertices.into_iter().map(|v| (VertexId(v.id), v.sq)),
        doc.edges
            .into_iter()
            .map(|(a, b)| (VertexId(a), VertexId(b))),
    )
}

impl Serialize for DualGraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_doc().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DualGraph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let doc = GraphDoc::deserialize(deserializer)?;
        DualGraph::new(
            doc.vertices.into_iter().map(|v| (VertexId(v.id), v.sq)),
            doc.edges
                .into_iter()
                .map(|(a, b)| (VertexId(a), VertexId(b))),
        )
        .map_err(serde::de::Error::custom)
    }
}

impl DualGraph {
    fn to_doc(&self) -> GraphDoc {
        let mut edges: Vec<(String, String)> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (self.id(a).0.clone(), self.id(b).0.clone());
                if x <= y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect();
        edges.sort();
        GraphDoc {
            vertices: self
                .vertices
                .iter()
                .map(|v| VertexDoc {
                    id: v.id.0.clone(),
                    sq: v.sq,
                })
                .collect(),
            edges,
        }
    }

    /// Canonical JSON: vertices in input order, edges sorted lexicographically
    /// with the smaller id first in each pair.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_doc()).expect("graph serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reason(e: Error) -> ValidationReason {
        match e {
            Error::Validation { reason, .. } => reason,
            other => panic!("expected validation error, got {other:?}"),
        }
    }

    #[test]
    fn parses_single_vertex() {
        let g = parse_graph(r#"{"vertices":[{"id":"v","sq":-2}],"edges":[]}"#).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g.sq(0), -2);
    }

    #[test]
    fn rejects_duplicate_edge() {
        let e = parse_graph(
            r#"{"vertices":[{"id":"a","sq":-2},{"id":"b","sq":-2}],"edges":[["a","b"],["a","b"]]}"#,
        )
        .unwrap_err();
        assert_eq!(reason(e), ValidationReason::DuplicateEdge);
        let e = parse_graph(
            r#"{"vertices":[{"id":"a","sq":-2},{"id":"b","sq":-2}],"edges":[["a","b"],["b","a"]]}"#,
        )
        .unwrap_err();
        assert_eq!(reason(e), ValidationReason::DuplicateEdge);
    }

    #[test]
    fn rejects_minus_one_curve() {
        let e = parse_graph(r#"{"vertices":[{"id":"a","sq":-1}],"edges":[]}"#).unwrap_err();
        assert_eq!(reason(e), ValidationReason::WeightAboveMinusTwo);
    }

    #[test]
    fn rejects_other_violations() {
        let cases = [
            (
                r#"{"vertices":[{"id":"a","sq":-2}],"edges":[["a","a"]]}"#,
                ValidationReason::SelfLoop,
            ),
            (
                r#"{"vertices":[{"id":"a","sq":-2},{"id":"b","sq":-3}],"edges":[]}"#,
                ValidationReason::Disconnected,
            ),
            (
                r#"{"vertices":[{"id":"a","sq":-2},{"id":"a","sq":-3}],"edges":[]}"#,
                ValidationReason::DuplicateId,
            ),
            (
                r#"{"vertices":[{"id":"a","sq":-2}],"edges":[["a","z"]]}"#,
                ValidationReason::UnknownVertex,
            ),
            (r#"{"vertices":[],"edges":[]}"#, ValidationReason::Empty),
        ];
        for (text, want) in cases {
            assert_eq!(reason(parse_graph(text).unwrap_err()), want, "{text}");
        }
    }

    #[test]
    fn schema_errors() {
        for text in [
            "not json",
            r#"{"vertices":[{"id":"a","sq":-2}]}"#,
            r#"{"vertices":[{"id":"a","sq":-2,"genus":0}],"edges":[]}"#,
            r#"{"vertices":[{"id":"a","sq":-2.5}],"edges":[]}"#,
            r#"{"vertices":[{"id":"a","sq":-2}],"edges":[],"extra":1}"#,
            r#"{"vertices":[{"id":"a","sq":-2}],"edges":[["a"]]}"#,
        ] {
            assert!(matches!(parse_graph(text), Err(Error::Schema(_))), "{text}");
        }
    }

    #[test]
    fn intersection_matrices() {
        let a2 = DualGraph::from_weights(&[-2, -2], &[(0, 1)]).unwrap();
        assert_eq!(a2.intersection_matrix(), vec![vec![-2, 1], vec![1, -2]]);
        let single = DualGraph::from_weights(&[-4], &[]).unwrap();
        assert_eq!(single.intersection_matrix(), vec![vec![-4]]);
        let d4 = DualGraph::from_weights(&[-2; 4], &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            d4.intersection_matrix(),
            vec![
                vec![-2, 1, 1, 1],
                vec![1, -2, 0, 0],
                vec![1, 0, -2, 0],
                vec![1, 0, 0, -2],
            ]
        );
    }

    #[test]
    fn negative_definiteness() {
        assert!(DualGraph::from_weights(&[-2, -2], &[(0, 1)])
            .unwrap()
            .is_negative_definite());
        let triangle = DualGraph::from_weights(&[-2; 3], &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!triangle.is_negative_definite());
        let affine_d4 =
            DualGraph::from_weights(&[-2; 5], &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(!affine_d4.is_negative_definite());
    }

    #[test]
    fn pairings() {
        let single = DualGraph::from_weights(&[-4], &[]).unwrap();
        let e = Cycle::reduced(1);
        assert_eq!(single.pairing(&e, &e).unwrap(), -4);
        assert_eq!(single.canonical_pairing(&e).unwrap(), 2);

        let d4 = DualGraph::from_weights(&[-2; 4], &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let z = Cycle::new(vec![2, 1, 1, 1]);
        let zz = d4.pairing(&z, &z).unwrap();
        assert_eq!(zz, -2);
        let via_rows: i64 = (0..4).map(|i| z[i] * d4.pairing_with_vertex(&z, i)).sum();
        assert_eq!(zz, via_rows);
        assert_eq!(d4.pairing(&Cycle::zero(4), &z).unwrap(), 0);
        assert_eq!(d4.canonical_pairing(&z).unwrap(), 0);

        let chain = DualGraph::from_weights(&[-2, -3], &[(0, 1)]).unwrap();
        assert_eq!(chain.canonical_pairing(&Cycle::reduced(2)).unwrap(), 1);
    }

    #[test]
    fn domain_mismatch() {
        let g = DualGraph::from_weights(&[-3, -2], &[(0, 1)]).unwrap();
        let e = Cycle::reduced(3);
        assert!(matches!(
            g.pairing(&e, &Cycle::reduced(2)),
            Err(Error::DomainMismatch { .. })
        ));
        assert!(matches!(
            g.canonical_pairing(&e),
            Err(Error::DomainMismatch { .. })
        ));
    }

    #[test]
    fn serializer_sorts_edges() {
        let g = parse_graph(
            r#"{"vertices":[{"id":"b","sq":-2},{"id":"a","sq":-3},{"id":"c","sq":-2}],
                "edges":[["c","a"],["b","a"]]}"#,
        )
        .unwrap();
        let out = g.to_json();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["edges"], serde_json::json!([["a", "b"], ["a", "c"]]));
        assert_eq!(v["vertices"][0]["id"], "b");
        assert_eq!(parse_graph(&out).unwrap(), g);
    }
}
