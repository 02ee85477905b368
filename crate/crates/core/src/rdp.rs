//! Decomposition of a dual graph into RDP configurations: maximal connected
//! -2-subgraphs together with the edges leaving them.

use crate::catalog::{AdeType, ConfigClass};
use crate::cycles::{self, IntersectionProfile};
use crate::error::{Error, Result};
use crate::graph::{Cycle, DualGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RdpConfiguration {
    /// Core vertices, sorted by index.
    pub core: Vec<usize>,
    /// `(core vertex, outside vertex)` pairs, sorted.
    pub attached_edges: Vec<(usize, usize)>,
    /// Core vertices with `Z . E_i < 0`, sorted.
    pub black: Vec<usize>,
    /// Multiplicity of `Z` at the black vertex, or 1 without one.
    pub s: i64,
    pub class: Option<ConfigClass>,
}

impl RdpConfiguration {
    pub fn n(&self) -> usize {
        self.attached_edges.len()
    }

    pub fn black_vertex(&self) -> Option<usize> {
        match self.black.as_slice() {
            [b] => Some(*b),
            _ => None,
        }
    }

    /// Outside vertices adjacent to the core, sorted and deduplicated.
    pub fn adjacent_outside(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.attached_edges.iter().map(|&(_, o)| o).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// One configuration per connected component of the -2-curves.
///
/// `z` must be the fundamental cycle of the rational graph `g`. A core with
/// several black vertices is only accepted when it is a whole `A_m` graph
/// (both ends of an `A_m` meet `Z` negatively).
pub fn extract_configurations(g: &DualGraph, z: &Cycle) -> Result<Vec<RdpConfiguration>> {
    if !g.is_tree() || cycles::arithmetic_genus(g, z)? != 0 {
        return Err(Error::NotRational);
    }
    let profile = cycles::intersection_profile(g, z)?;
    extract_with_profile(g, z, &profile)
}

pub(crate) fn extract_with_profile(
    g: &DualGraph,
    z: &Cycle,
    profile: &IntersectionProfile,
) -> Result<Vec<RdpConfiguration>> {
    let mut out = Vec::new();
    for core in g.induced_components(|i| g.sq(i) == -2) {
        let mut attached_edges = Vec::new();
        for &v in &core {
            for &w in g.neighbors(v) {
                if g.sq(w) != -2 {
                    attached_edges.push((v, w));
                }
            }
        }
        let black: Vec<usize> = core.iter().copied().filter(|&v| profile.is_black(v)).collect();
        if black.len() > 1 {
            let whole_chain =
                attached_edges.is_empty() && core.iter().all(|&v| g.degree(v) <= 2);
            if !whole_chain {
                return Err(Error::MultipleBlackVertices {
                    core: g.id(core[0]).to_string(),
                    count: black.len(),
                });
            }
        }
        let s = black.iter().map(|&b| z[b]).max().unwrap_or(1);
        out.push(RdpConfiguration {
            core,
            attached_edges,
            black,
            s,
            class: None,
        });
    }
    Ok(out)
}

/// Matches a configuration against the catalog: recognise the ADE shape of
/// the core, then compare multiplicities, attachment counts and black
/// vertices with every admissible row under every layout of the core.
pub fn classify(config: &RdpConfiguration, g: &DualGraph, z: &Cycle) -> Result<ConfigClass> {
    let not_found = || Error::NotInCatalog(g.id(config.core[0]).to_string());
    let core = &config.core;
    let mut local = vec![usize::MAX; g.len()];
    for (k, &v) in core.iter().enumerate() {
        local[v] = k;
    }
    let adjacency: Vec<Vec<usize>> = core
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| local[w] != usize::MAX)
                .map(|&w| local[w])
                .collect()
        })
        .collect();
    let shape = AdeType::recognize(&adjacency).ok_or_else(not_found)?;

    let mult: Vec<i64> = core.iter().map(|&v| z[v]).collect();
    let mut attachments = vec![0usize; core.len()];
    for &(v, _) in &config.attached_edges {
        attachments[local[v]] += 1;
    }
    let mut is_black = vec![false; core.len()];
    for &b in &config.black {
        is_black[local[b]] = true;
    }

    let layouts = shape.layouts(&adjacency);
    for class in ConfigClass::candidates(shape, config.n()) {
        let t = class.template()?;
        let fits = layouts.iter().any(|layout| {
            (0..layout.len()).all(|i| {
                let a = layout[i];
                mult[a] == t.mult[i]
                    && attachments[a] == t.attachments[i]
                    && is_black[a] == t.black.contains(&i)
            })
        });
        if fits {
            return Ok(class);
        }
    }
    Err(not_found())
}

/// `s` of a configuration.
pub fn black_weight(config: &RdpConfiguration) -> i64 {
    config.s
}

/// Extracts and classifies every configuration.
pub fn classified_configurations(g: &DualGraph, z: &Cycle) -> Result<Vec<RdpConfiguration>> {
    let mut configs = extract_configurations(g, z)?;
    for c in &mut configs {
        c.class = Some(classify(c, g, z)?);
    }
    Ok(configs)
}

/// The two sides of `h^1 = (Z - E).(K - Z) = sum (s_i - 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct H1A {
    pub value: i64,
    /// `(Z - E).(K - Z)`, computed from the intersection form.
    pub pairing: i64,
}

/// Sums `s - 1` over the configurations and checks it against
/// `(Z - E).(K - Z) = K.(Z - E) - (Z - E).Z`.
pub fn h1_a(g: &DualGraph, z: &Cycle, configs: &[RdpConfiguration]) -> Result<H1A> {
    let sum: i64 = configs.iter().map(|c| black_weight(c) - 1).sum();
    let excess = z - &Cycle::reduced(g.len());
    let pairing = g.canonical_pairing(&excess)? - g.pairing(&excess, z)?;
    if pairing != sum {
        return Err(Error::IdentityViolation { pairing, sum });
    }
    Ok(H1A {
        value: sum,
        pairing,
    })
}
