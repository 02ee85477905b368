//! Full invariant computation for one graph.

use crate::blowdown::{contract_with_profile, BlowdownStep};
use crate::correction::{self, CorrectionInterval, DimensionIncrements};
use crate::cycles::{self, CycleData, IntersectionProfile};
use crate::error::{Error, Result, Severity};
use crate::graph::DualGraph;
use crate::rdp::{self, RdpConfiguration, H1A};

/// A field that is only defined on part of the rational class. The error
/// carries the reason (always a domain error, never an internal one).
pub type Gated<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone)]
pub struct Analysis {
    pub cycle: CycleData,
    pub profile: IntersectionProfile,
    /// Classified configurations; needs an almost reduced fundamental cycle.
    pub configs: Gated<Vec<RdpConfiguration>>,
    pub h1a: Gated<H1A>,
    /// Needs `e >= 4` and an almost reduced fundamental cycle.
    pub correction: Gated<CorrectionInterval>,
    pub increments: Gated<DimensionIncrements>,
    pub step: BlowdownStep,
}

/// Runs the pipeline on a negative definite rational graph.
///
/// Fails with `NotNegativeDefinite` or `NotRational` outside that class, and
/// with an internal error if any self-check (criterion agreement, catalog
/// totality, the `h^1` identity) breaks.
pub fn analyze_graph(g: &DualGraph) -> Result<Analysis> {
    let cycle = cycles::analyze(g)?;
    let inv = cycle.invariants;
    if !inv.rational {
        return Err(Error::NotRational);
    }
    let z = cycle.z();
    let profile = cycles::intersection_profile(g, z)?;

    let configs = if inv.almost_reduced {
        let mut configs = rdp::extract_with_profile(g, z, &profile)?;
        for c in &mut configs {
            c.class = Some(rdp::classify(c, g, z)?);
        }
        Ok(configs)
    } else {
        Err(Error::NotAlmostReduced)
    };
    let h1a = match &configs {
        Ok(c) => Ok(rdp::h1_a(g, z, c)?),
        Err(e) => Err(e.clone()),
    };
    let correction = if inv.e < 4 {
        Err(Error::EmbeddingDimensionTooSmall(inv.e))
    } else {
        match &configs {
            Ok(c) => gate(correction::correction_term(&inv, &profile, c))?,
            Err(e) => Err(e.clone()),
        }
    };
    let increments = match &correction {
        Ok(c) => gate(correction::increments(&inv, c))?,
        Err(e) => Err(e.clone()),
    };
    let step = contract_with_profile(g, &profile.values);
    Ok(Analysis {
        cycle,
        profile,
        configs,
        h1a,
        correction,
        increments,
        step,
    })
}

/// Keeps domain errors as the gated value and propagates internal ones.
fn gate<T>(r: Result<T>) -> Result<Gated<T>> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(e) if e.severity() == Severity::Domain => Ok(Err(e)),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cone_over_rational_normal_curve() {
        let g = DualGraph::from_weights(&[-4], &[]).unwrap();
        let a = analyze_graph(&g).unwrap();
        assert_eq!(a.cycle.invariants.e, 5);
        let c = a.correction.unwrap();
        assert_eq!((c.lo, c.hi), (0, 0));
        let d = a.increments.unwrap();
        assert_eq!((d.dt1.point(), d.dt2.point()), (Some(1), Some(3)));
    }

    #[test]
    fn rdp_has_no_correction() {
        let g = DualGraph::from_weights(&[-2; 5], &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let a = analyze_graph(&g).unwrap();
        assert_eq!(a.cycle.invariants.e, 3);
        assert_eq!(a.correction.unwrap_err().code(), "embedding_dimension_below_4");
        assert!(a.increments.is_err());
        assert!(a.configs.is_ok());
    }

    #[test]
    fn not_almost_reduced_is_gated() {
        let g = DualGraph::from_weights(
            &[-2, -3, -2, -2, -2, -2],
            &[(0, 1), (1, 2), (2, 3), (1, 4), (1, 5)],
        )
        .unwrap();
        let a = analyze_graph(&g).unwrap();
        assert!(a.cycle.invariants.e >= 4);
        assert_eq!(a.configs.unwrap_err(), Error::NotAlmostReduced);
        assert_eq!(a.correction.unwrap_err(), Error::NotAlmostReduced);
    }
}
