//! Tjurina contraction and the blowdown tower.
//!
//! The blowup of a rational singularity is obtained from the minimal
//! resolution by contracting the curves with `Z . E_i = 0`. Each connected
//! set of contracted curves is the resolution graph of a singular point of
//! the blowup, which is again rational, so the construction can be repeated.
//! Rational double points (embedding dimension 3) terminate a branch; their
//! Tjurina number is the vertex count of the ADE graph (a standard fact, not
//! computed here).

use crate::analysis::{analyze_graph, Analysis};
use crate::catalog::AdeType;
use crate::cycles;
use crate::error::{Error, Result};
use crate::graph::{Cycle, DualGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fiber {
    /// Vertices of the parent graph, sorted.
    pub vertices: Vec<usize>,
    /// Induced subgraph with inherited weights and ids.
    pub graph: DualGraph,
}

impl Fiber {
    /// All weights -2: the fiber is a rational double point of the blowup.
    pub fn is_rdp(&self) -> bool {
        self.graph.vertices().iter().all(|v| v.sq == -2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowdownStep {
    pub contracted: Vec<usize>,
    /// Connected components of the contracted set, ordered by smallest
    /// vertex index.
    pub fibers: Vec<Fiber>,
    pub surviving: Vec<usize>,
}

/// Contracts every curve with `Z . E_i = 0`.
pub fn tjurina_contract(g: &DualGraph, z: &Cycle) -> Result<BlowdownStep> {
    if !g.is_tree() || cycles::arithmetic_genus(g, z)? != 0 {
        return Err(Error::NotRational);
    }
    let profile = cycles::intersection_profile(g, z)?;
    Ok(contract_with_profile(g, &profile.values))
}

pub(crate) fn contract_with_profile(g: &DualGraph, profile: &[i64]) -> BlowdownStep {
    let (contracted, surviving): (Vec<usize>, Vec<usize>) =
        (0..g.len()).partition(|&i| profile[i] == 0);
    let fibers = g
        .induced_components(|i| profile[i] == 0)
        .into_iter()
        .map(|vertices| {
            let graph = g
                .induced(&vertices)
                .expect("components induce connected subgraphs");
            Fiber { vertices, graph }
        })
        .collect();
    BlowdownStep {
        contracted,
        fibers,
        surviving,
    }
}

#[derive(Debug, Clone)]
pub enum FiberKind {
    /// Rational double point: terminal.
    Rdp { name: AdeType, tau: usize },
    /// Embedding dimension at least 4; its own fibers appear on the next level.
    Singular(Box<Analysis>),
}

#[derive(Debug, Clone)]
pub struct TowerFiber {
    pub graph: DualGraph,
    /// Index of the parent fiber on the previous level.
    pub parent: Option<usize>,
    pub kind: FiberKind,
}

impl TowerFiber {
    /// True for a singular fiber whose blowup is smooth (nothing contracted).
    pub fn blowup_is_smooth(&self) -> bool {
        match &self.kind {
            FiberKind::Rdp { .. } => false,
            FiberKind::Singular(a) => a.step.fibers.is_empty(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct TowerLevel {
    pub level: usize,
    pub fibers: Vec<TowerFiber>,
}

#[derive(Debug, Clone)]
pub struct BlowdownTower {
    pub levels: Vec<TowerLevel>,
}

impl BlowdownTower {
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn fibers(&self) -> impl Iterator<Item = &TowerFiber> {
        self.levels.iter().flat_map(|l| l.fibers.iter())
    }
}

fn classify_fiber(graph: DualGraph, parent: Option<usize>) -> Result<TowerFiber> {
    let analysis = analyze_graph(&graph)?;
    let inv = analysis.cycle.invariants;
    if !inv.rational {
        return Err(Error::NotRational);
    }
    let kind = if inv.e == 3 {
        let adjacency: Vec<Vec<usize>> = (0..graph.len())
            .map(|i| graph.neighbors(i).to_vec())
            .collect();
        let all_minus_two = graph.vertices().iter().all(|v| v.sq == -2);
        let name = AdeType::recognize(&adjacency)
            .filter(|_| all_minus_two)
            .ok_or_else(|| Error::NotInCatalog(graph.id(0).to_string()))?;
        FiberKind::Rdp {
            name,
            tau: graph.len(),
        }
    } else {
        FiberKind::Singular(Box::new(analysis))
    };
    Ok(TowerFiber {
        graph,
        parent,
        kind,
    })
}

/// Repeats Tjurina contraction on every non-RDP fiber until only rational
/// double points (or smooth blowups) remain. Level 0 holds `g` itself.
///
/// Fibers on one level are analysed in parallel; the result does not depend
/// on scheduling.
pub fn blowdown_tower(g: &DualGraph) -> Result<BlowdownTower> {
    let root = classify_fiber(g.clone(), None)?;
    let mut levels = vec![TowerLevel {
        level: 0,
        fibers: vec![root],
    }];
    loop {
        let last = levels.last().expect("at least one level");
        let pending: Vec<(usize, DualGraph)> = last
            .fibers
            .iter()
            .enumerate()
            .filter_map(|(i, f)| match &f.kind {
                FiberKind::Singular(a) => Some(
                    a.step
                        .fibers
                        .iter()
                        .map(move |fib| (i, fib.graph.clone()))
                        .collect::<Vec<_>>(),
                ),
                FiberKind::Rdp { .. } => None,
            })
            .flatten()
            .collect();
        if pending.is_empty() {
            break;
        }
        let next: Vec<TowerFiber> = pending
            .into_iter()
            .map(|(parent, graph)| classify_fiber(graph, Some(parent)))
            .collect::<Result<_>>()?;
        let level = levels.len();
        levels.push(TowerLevel {
            level,
            fibers: next,
        });
    }
    Ok(BlowdownTower { levels })
}
