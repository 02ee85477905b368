//! Bounds for the correction term `c(X)` and the resulting increments
//! `dim T^1_X - dim T^1_{X^}` and `dim T^2_X - dim T^2_{X^}`.
//!
//! Only 3-A configurations contribute. Each one adds 1 to the upper bound,
//! and also to the lower bound when all of its adjacent non-(-2) curves meet
//! `Z` negatively. When some adjacent curve meets `Z` in zero the
//! contribution is undecided and the interval stays open.

use serde::Serialize;

use crate::cycles::{IntersectionProfile, ScalarInvariants};
use crate::error::{Error, Result};
use crate::rdp::RdpConfiguration;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Position of the configuration in the configuration list.
    pub config: usize,
    /// Whether it also counts toward the lower bound.
    pub counts_in_lo: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrectionInterval {
    pub lo: i64,
    pub hi: i64,
    pub witnesses: Vec<Witness>,
}

impl CorrectionInterval {
    pub fn exact(&self) -> bool {
        self.lo == self.hi
    }
}

/// Closed integer interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
}

impl Interval {
    pub fn point(&self) -> Option<i64> {
        (self.lo == self.hi).then_some(self.lo)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DimensionIncrements {
    #[serde(rename = "dT1")]
    pub dt1: Interval,
    #[serde(rename = "dT2")]
    pub dt2: Interval,
}

fn check_preconditions(inv: &ScalarInvariants) -> Result<()> {
    if !inv.rational {
        return Err(Error::NotRational);
    }
    if inv.e < 4 {
        return Err(Error::EmbeddingDimensionTooSmall(inv.e));
    }
    if !inv.almost_reduced {
        return Err(Error::NotAlmostReduced);
    }
    Ok(())
}

/// `[lo, hi]` for `c(X)` from classified configurations.
pub fn correction_term(
    inv: &ScalarInvariants,
    profile: &IntersectionProfile,
    configs: &[RdpConfiguration],
) -> Result<CorrectionInterval> {
    check_preconditions(inv)?;
    let mut witnesses = Vec::new();
    for (i, c) in configs.iter().enumerate() {
        let class = c
            .class
            .ok_or_else(|| Error::InvalidParameters("configuration is not classified".into()))?;
        if class.is_three_a() {
            let counts_in_lo = c.adjacent_outside().iter().all(|&v| profile.is_black(v));
            witnesses.push(Witness {
                config: i,
                counts_in_lo,
            });
        }
    }
    let hi = witnesses.len() as i64;
    let lo = witnesses.iter().filter(|w| w.counts_in_lo).count() as i64;
    Ok(CorrectionInterval { lo, hi, witnesses })
}

/// `dT1 = (e - 4) + c` and `dT2 = (e - 2)(e - 4) + c`.
pub fn increments(inv: &ScalarInvariants, c: &CorrectionInterval) -> Result<DimensionIncrements> {
    let e = inv.e;
    if e < 4 {
        return Err(Error::EmbeddingDimensionTooSmall(e));
    }
    let t1 = e - 4;
    let t2 = (e - 2) * (e - 4);
    Ok(DimensionIncrements {
        dt1: Interval {
            lo: t1 + c.lo,
            hi: t1 + c.hi,
        },
        dt2: Interval {
            lo: t2 + c.lo,
            hi: t2 + c.hi,
        },
    })
}
