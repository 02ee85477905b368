//! Fundamental cycle, rationality and the scalar invariants derived from it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Cycle, DualGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComputingStep {
    pub cycle: Cycle,
    /// Vertex incremented to get the next cycle; `None` on the final step.
    pub chosen: Option<usize>,
    /// `Z_k . E_chosen` (0 on the final step).
    pub excess: i64,
}

/// Laufer's computing sequence `Z_0 = E, Z_1, ..., Z_k = Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComputingSequence {
    pub steps: Vec<ComputingStep>,
    /// Cycle rank of the graph; the sequence starts at `E`, whose arithmetic
    /// genus equals this number, so the unit-excess test is only meaningful
    /// when it is zero.
    pub cycle_rank: usize,
}

impl ComputingSequence {
    pub fn final_cycle(&self) -> &Cycle {
        &self.steps.last().expect("sequence is never empty").cycle
    }

    pub fn into_final(mut self) -> Cycle {
        self.steps.pop().expect("sequence is never empty").cycle
    }

    /// Excesses of the non-final steps.
    pub fn excesses(&self) -> impl Iterator<Item = i64> + '_ {
        self.steps.iter().filter(|s| s.chosen.is_some()).map(|s| s.excess)
    }
}

/// Computes the fundamental cycle by Laufer's algorithm: start from `E` and,
/// while some `Z . E_i > 0`, add `E_i` for the lowest such index.
pub fn fundamental_cycle(g: &DualGraph) -> Result<ComputingSequence> {
    if !g.is_negative_definite() {
        return Err(Error::NotNegativeDefinite);
    }
    let n = g.len();
    let mut z = Cycle::reduced(n);
    let mut steps = Vec::new();
    loop {
        let next = (0..n)
            .map(|i| (i, g.pairing_with_vertex(&z, i)))
            .find(|&(_, ex)| ex > 0);
        match next {
            Some((i, excess)) => {
                steps.push(ComputingStep {
                    cycle: z.clone(),
                    chosen: Some(i),
                    excess,
                });
                z.bump(i);
            }
            None => {
                steps.push(ComputingStep {
                    cycle: z,
                    chosen: None,
                    excess: 0,
                });
                break;
            }
        }
    }
    Ok(ComputingSequence {
        steps,
        cycle_rank: g.cycle_rank(),
    })
}

/// Laufer's criterion: every increment of the computing sequence has excess
/// exactly 1, and the graph is a tree (so that `p_a(E) = 0`).
pub fn is_rational_laufer(seq: &ComputingSequence) -> bool {
    seq.cycle_rank == 0 && seq.excesses().all(|ex| ex == 1)
}

/// `p_a(c) = 1 + (c.c + K.c) / 2`.
pub fn arithmetic_genus(g: &DualGraph, c: &Cycle) -> Result<i64> {
    let twice = g.pairing(c, c)? + g.canonical_pairing(c)?;
    if twice % 2 != 0 {
        return Err(Error::Parity(twice));
    }
    Ok(1 + twice / 2)
}

/// Artin's criterion `p_a(Z) = 0`.
pub fn is_rational_artin(g: &DualGraph) -> Result<bool> {
    let z = fundamental_cycle(g)?.into_final();
    Ok(arithmetic_genus(g, &z)? == 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScalarInvariants {
    /// Embedding dimension `-Z^2 + 1`.
    pub e: i64,
    /// Multiplicity `e - 1`.
    pub mult: i64,
    /// `Z^2`.
    #[serde(rename = "z_squared")]
    pub z_self: i64,
    /// Arithmetic genus of `Z`.
    #[serde(rename = "p_a")]
    pub pa_z: i64,
    pub rational: bool,
    pub almost_reduced: bool,
}

/// Fundamental cycle together with its invariants, so callers do not rerun
/// Laufer's algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleData {
    pub sequence: ComputingSequence,
    pub invariants: ScalarInvariants,
}

impl CycleData {
    pub fn z(&self) -> &Cycle {
        self.sequence.final_cycle()
    }
}

pub fn analyze(g: &DualGraph) -> Result<CycleData> {
    let sequence = fundamental_cycle(g)?;
    let z = sequence.final_cycle();
    let z_self = g.pairing(z, z)?;
    let pa_z = arithmetic_genus(g, z)?;
    let laufer = is_rational_laufer(&sequence);
    let artin = pa_z == 0;
    if laufer != artin {
        return Err(Error::CriterionDisagreement { laufer, artin });
    }
    let almost_reduced = (0..g.len()).all(|i| g.sq(i) == -2 || z[i] == 1);
    let e = -z_self + 1;
    Ok(CycleData {
        invariants: ScalarInvariants {
            e,
            mult: e - 1,
            z_self,
            pa_z,
            rational: laufer,
            almost_reduced,
        },
        sequence,
    })
}

pub fn scalar_invariants(g: &DualGraph) -> Result<ScalarInvariants> {
    analyze(g).map(|d| d.invariants)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Shade {
    /// `Z . E_i = 0`: contracted by the blowup.
    White,
    /// `Z . E_i < 0`.
    Black,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionProfile {
    pub values: Vec<i64>,
}

impl IntersectionProfile {
    pub fn shade(&self, i: usize) -> Shade {
        if self.values[i] == 0 {
            Shade::White
        } else {
            Shade::Black
        }
    }

    pub fn is_black(&self, i: usize) -> bool {
        self.shade(i) == Shade::Black
    }

    pub fn is_white(&self, i: usize) -> bool {
        self.shade(i) == Shade::White
    }
}

/// `Z . E_i` for every vertex.
pub fn intersection_profile(g: &DualGraph, z: &Cycle) -> Result<IntersectionProfile> {
    if z.len() != g.len() {
        return Err(Error::DomainMismatch {
            cycle: z.len(),
            graph: g.len(),
        });
    }
    let values = (0..g.len()).map(|i| g.pairing_with_vertex(z, i)).collect();
    Ok(IntersectionProfile { values })
}
