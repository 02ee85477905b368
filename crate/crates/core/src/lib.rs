//! Invariants of rational surface singularities computed from the weighted
//! dual graph of the minimal resolution.
//!
//! The pipeline is: parse and validate a [`DualGraph`], compute the
//! fundamental cycle with Laufer's algorithm, decide rationality, extract
//! and classify the configurations of rational double points left on the
//! blowup, bound the correction term, and follow the Tjurina contraction
//! down to rational double points.
//!
//! ```
//! use singgraph::{analyze_graph, DualGraph};
//!
//! let g = DualGraph::from_weights(&[-4], &[]).unwrap();
//! let a = analyze_graph(&g).unwrap();
//! assert_eq!(a.cycle.invariants.e, 5);
//! let d = a.increments.unwrap();
//! assert_eq!((d.dt1.point(), d.dt2.point()), (Some(1), Some(3)));
//! ```

pub mod analysis;
pub mod blowdown;
pub mod catalog;
pub mod corpus;
pub mod correction;
pub mod cycles;
pub mod dot;
pub mod error;
pub mod generate;
pub mod graph;
pub mod lattice;
pub mod par;
pub mod rdp;
pub mod report;

pub use analysis::{analyze_graph, Analysis};
pub use blowdown::{blowdown_tower, tjurina_contract, BlowdownStep, BlowdownTower};
pub use catalog::{AdeType, ConfigClass};
pub use correction::{correction_term, increments, CorrectionInterval, DimensionIncrements};
pub use cycles::{fundamental_cycle, intersection_profile, scalar_invariants, ScalarInvariants};
pub use error::{Error, Result, Severity, ValidationReason};
pub use graph::{parse_graph, Cycle, DualGraph, Vertex, VertexId};
pub use rdp::{classify, extract_configurations, RdpConfiguration};
