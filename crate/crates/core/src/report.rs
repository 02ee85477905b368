//! Report assembly: JSON and plain-text renderings of an [`Analysis`].
//!
//! Output is byte-stable. Maps keyed by vertex id follow the vertex order of
//! the input graph, and nothing depends on hashing or scheduling.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::analysis::{analyze_graph, Analysis};
use crate::blowdown::{blowdown_tower, BlowdownStep, BlowdownTower, FiberKind};
use crate::catalog::AdeType;
use crate::correction::Interval;
use crate::cycles::{ScalarInvariants, Shade};
use crate::error::{Error, Result};
use crate::graph::{Cycle, DualGraph, VertexId};
use crate::par;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// `{"id": value, ...}` in graph vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap<T>(pub Vec<(VertexId, T)>);

impl<T: Serialize> Serialize for VertexMap<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k.as_str(), v)?;
        }
        map.end()
    }
}

impl<T: Clone> VertexMap<T> {
    fn from_values(g: &DualGraph, values: &[T]) -> Self {
        VertexMap(
            (0..g.len())
                .map(|i| (g.id(i).clone(), values[i].clone()))
                .collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProfileEntry {
    pub value: i64,
    pub shade: Shade,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigReport {
    pub core: Vec<VertexId>,
    pub n: usize,
    /// Full class with parameters, e.g. `ThreeA(q=2,m=1)`.
    pub class: String,
    pub tag: &'static str,
    pub symbol: String,
    pub ade: String,
    pub q: Option<usize>,
    pub k: Option<usize>,
    pub s: i64,
    pub black: Vec<VertexId>,
    /// `[core id, outside id]` per attachment edge.
    pub attached: Vec<(VertexId, VertexId)>,
    /// Contribution to the correction interval, when that is defined.
    pub c_contribution: Option<Interval>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct H1AReport {
    /// `sum (s_i - 1)` over the configurations.
    pub value: i64,
    /// `(Z - E).(K - Z)` from the intersection form.
    pub pairing: i64,
    pub identity_holds: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CReport {
    pub lo: i64,
    pub hi: i64,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RdpReport {
    pub name: String,
    pub tau: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepReport {
    pub contracted: Vec<VertexId>,
    pub surviving: Vec<VertexId>,
    pub fibers: Vec<Vec<VertexId>>,
    pub fiber_rdp: Vec<Option<String>>,
}

/// Everything computed for one graph, without provenance fields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportBody {
    pub invariants: ScalarInvariants,
    pub z: VertexMap<i64>,
    pub profile: VertexMap<ProfileEntry>,
    /// Set when the graph is itself a rational double point (`e = 3`).
    pub rdp: Option<RdpReport>,
    pub configurations: Option<Vec<ConfigReport>>,
    #[serde(rename = "h1_A")]
    pub h1_a: Option<H1AReport>,
    pub c: Option<CReport>,
    #[serde(rename = "dT1")]
    pub dt1: Option<Interval>,
    #[serde(rename = "dT2")]
    pub dt2: Option<Interval>,
    /// Error code for every field above that is null.
    pub reasons: BTreeMap<&'static str, &'static str>,
    pub blowdown: StepReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum FiberPayload {
    Report { report: Box<ReportBody> },
    Rdp { rdp: String, tau: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    pub graph: DualGraph,
    pub parent: Option<usize>,
    #[serde(flatten)]
    pub payload: FiberPayload,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelReport {
    pub level: usize,
    pub fibers: Vec<FiberReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub version: &'static str,
    /// SHA-256 of the input bytes (or of the canonical graph JSON).
    pub input_sha256: String,
    pub graph: DualGraph,
    #[serde(flatten)]
    pub body: ReportBody,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tower: Option<Vec<LevelReport>>,
}

fn ids(g: &DualGraph, v: &[usize]) -> Vec<VertexId> {
    v.iter().map(|&i| g.id(i).clone()).collect()
}

fn rdp_name(g: &DualGraph) -> Option<AdeType> {
    if !g.vertices().iter().all(|v| v.sq == -2) {
        return None;
    }
    let adjacency: Vec<Vec<usize>> = (0..g.len()).map(|i| g.neighbors(i).to_vec()).collect();
    AdeType::recognize(&adjacency)
}

fn step_report(g: &DualGraph, step: &BlowdownStep) -> StepReport {
    StepReport {
        contracted: ids(g, &step.contracted),
        surviving: ids(g, &step.surviving),
        fibers: step.fibers.iter().map(|f| ids(g, &f.vertices)).collect(),
        fiber_rdp: step
            .fibers
            .iter()
            .map(|f| rdp_name(&f.graph).map(|t| t.to_string()))
            .collect(),
    }
}

impl ReportBody {
    pub fn from_analysis(g: &DualGraph, a: &Analysis) -> Self {
        let inv = a.cycle.invariants;
        let z: &Cycle = a.cycle.z();
        let mut reasons = BTreeMap::new();

        let profile = VertexMap(
            (0..g.len())
                .map(|i| {
                    let entry = ProfileEntry {
                        value: a.profile.values[i],
                        shade: a.profile.shade(i),
                    };
                    (g.id(i).clone(), entry)
                })
                .collect(),
        );

        let rdp = if inv.e == 3 {
            rdp_name(g).map(|t| RdpReport {
                name: t.to_string(),
                tau: g.len(),
            })
        } else {
            None
        };

        let configurations = match &a.configs {
            Ok(configs) => Some(
                configs
                    .iter()
                    .enumerate()
                    .map(|(idx, c)| {
                        let class = c.class.expect("analysis classifies every configuration");
                        let c_contribution = a.correction.as_ref().ok().map(|corr| {
                            match corr.witnesses.iter().find(|w| w.config == idx) {
                                Some(w) => Interval {
                                    lo: w.counts_in_lo as i64,
                                    hi: 1,
                                },
                                None => Interval { lo: 0, hi: 0 },
                            }
                        });
                        ConfigReport {
                            core: ids(g, &c.core),
                            n: c.n(),
                            class: class.to_string(),
                            tag: class.tag(),
                            symbol: class.symbol(),
                            ade: class.shape().to_string(),
                            q: class.q(),
                            k: class.k(),
                            s: c.s,
                            black: ids(g, &c.black),
                            attached: c
                                .attached_edges
                                .iter()
                                .map(|&(a, b)| (g.id(a).clone(), g.id(b).clone()))
                                .collect(),
                            c_contribution,
                        }
                    })
                    .collect(),
            ),
            Err(e) => {
                reasons.insert("configurations", e.code());
                None
            }
        };

        let h1_a = match &a.h1a {
            Ok(h) => Some(H1AReport {
                value: h.value,
                pairing: h.pairing,
                identity_holds: h.value == h.pairing,
            }),
            Err(e) => {
                reasons.insert("h1_A", e.code());
                None
            }
        };

        let c = match &a.correction {
            Ok(c) => Some(CReport {
                lo: c.lo,
                hi: c.hi,
                exact: c.exact(),
            }),
            Err(e) => {
                reasons.insert("c", e.code());
                None
            }
        };

        let (dt1, dt2) = match &a.increments {
            Ok(d) => (Some(d.dt1), Some(d.dt2)),
            Err(e) => {
                reasons.insert("dT1", e.code());
                reasons.insert("dT2", e.code());
                (None, None)
            }
        };

        ReportBody {
            invariants: inv,
            z: VertexMap::from_values(g, z.as_slice()),
            profile,
            rdp,
            configurations,
            h1_a,
            c,
            dt1,
            dt2,
            reasons,
            blowdown: step_report(g, &a.step),
        }
    }
}

fn tower_report(t: &BlowdownTower) -> Vec<LevelReport> {
    t.levels
        .iter()
        .map(|level| LevelReport {
            level: level.level,
            fibers: level
                .fibers
                .iter()
                .map(|f| FiberReport {
                    graph: f.graph.clone(),
                    parent: f.parent,
                    payload: match &f.kind {
                        FiberKind::Rdp { name, tau } => FiberPayload::Rdp {
                            rdp: name.to_string(),
                            tau: *tau,
                        },
                        FiberKind::Singular(a) => FiberPayload::Report {
                            report: Box::new(ReportBody::from_analysis(&f.graph, a)),
                        },
                    },
                })
                .collect(),
        })
        .collect()
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReportOptions {
    pub tower: bool,
}

impl InvariantReport {
    /// Builds the report. `input` is the raw document the graph came from;
    /// without it the digest covers the canonical graph JSON.
    pub fn build(g: &DualGraph, opts: ReportOptions, input: Option<&[u8]>) -> Result<Self> {
        let analysis = analyze_graph(g)?;
        let tower = if opts.tower {
            Some(tower_report(&blowdown_tower(g)?))
        } else {
            None
        };
        let input_sha256 = match input {
            Some(bytes) => sha256_hex(bytes),
            None => sha256_hex(g.to_json().as_bytes()),
        };
        Ok(InvariantReport {
            version: VERSION,
            input_sha256,
            graph: g.clone(),
            body: ReportBody::from_analysis(g, &analysis),
            tower,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        render_text(self)
    }
}

/// Reports for many graphs, in parallel when the `parallel` feature is on.
pub fn batch_reports(graphs: &[DualGraph], opts: ReportOptions) -> Vec<Result<InvariantReport>> {
    par::map(graphs, |g| InvariantReport::build(g, opts, None))
}

/// Sequential counterpart of [`batch_reports`].
pub fn batch_reports_seq(
    graphs: &[DualGraph],
    opts: ReportOptions,
) -> Vec<Result<InvariantReport>> {
    par::seq_map(graphs, |g| InvariantReport::build(g, opts, None))
}

fn interval(i: &Option<Interval>) -> String {
    match i {
        Some(Interval { lo, hi }) if lo == hi => lo.to_string(),
        Some(Interval { lo, hi }) => format!("[{lo}, {hi}]"),
        None => "-".to_owned(),
    }
}

fn join(v: &[VertexId]) -> String {
    v.iter().map(VertexId::as_str).collect::<Vec<_>>().join(" ")
}

fn render_text(r: &InvariantReport) -> String {
    let b = &r.body;
    let inv = &b.invariants;
    let mut out = String::new();
    let reason = |key: &str| b.reasons.get(key).copied().unwrap_or("-");
    let _ = writeln!(out, "singgraph {}  sha256 {}", r.version, r.input_sha256);
    let _ = writeln!(
        out,
        "vertices {}  edges {}",
        r.graph.len(),
        r.graph.edges().len()
    );
    let _ = writeln!(out);
    let _ = writeln!(out, "{:<12} {:>6} {:>6} {:>8}  shade", "vertex", "E^2", "Z", "Z.E");
    for (i, v) in r.graph.vertices().iter().enumerate() {
        let p = &b.profile.0[i].1;
        let shade = match p.shade {
            Shade::White => "white",
            Shade::Black => "black",
        };
        let _ = writeln!(
            out,
            "{:<12} {:>6} {:>6} {:>8}  {}",
            v.id.as_str(),
            v.sq,
            b.z.0[i].1,
            p.value,
            shade
        );
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "e              {}", inv.e);
    let _ = writeln!(out, "multiplicity   {}", inv.mult);
    let _ = writeln!(out, "Z^2            {}", inv.z_self);
    let _ = writeln!(out, "p_a(Z)         {}", inv.pa_z);
    let _ = writeln!(out, "rational       {}", inv.rational);
    let _ = writeln!(out, "almost reduced {}", inv.almost_reduced);
    if let Some(rdp) = &b.rdp {
        let _ = writeln!(out, "rdp            {} (tau {})", rdp.name, rdp.tau);
    }
    let _ = writeln!(out);
    match &b.configurations {
        Some(configs) if configs.is_empty() => {
            let _ = writeln!(out, "configurations none");
        }
        Some(configs) => {
            let _ = writeln!(out, "configurations");
            for c in configs {
                let _ = writeln!(
                    out,
                    "  {:<12} n={} s={} black [{}] core [{}]",
                    c.symbol,
                    c.n,
                    c.s,
                    join(&c.black),
                    join(&c.core)
                );
            }
        }
        None => {
            let _ = writeln!(out, "configurations - ({})", reason("configurations"));
        }
    }
    match &b.h1_a {
        Some(h) => {
            let _ = writeln!(out, "h1_A           {} (pairing {})", h.value, h.pairing);
        }
        None => {
            let _ = writeln!(out, "h1_A           - ({})", reason("h1_A"));
        }
    }
    match &b.c {
        Some(c) if c.exact => {
            let _ = writeln!(out, "c              {}", c.lo);
        }
        Some(c) => {
            let _ = writeln!(out, "c              [{}, {}]", c.lo, c.hi);
        }
        None => {
            let _ = writeln!(out, "c              - ({})", reason("c"));
        }
    }
    let _ = writeln!(out, "dT1            {}", interval(&b.dt1));
    let _ = writeln!(out, "dT2            {}", interval(&b.dt2));
    let _ = writeln!(out);
    let _ = writeln!(out, "contracted     [{}]", join(&b.blowdown.contracted));
    for (f, name) in b.blowdown.fibers.iter().zip(&b.blowdown.fiber_rdp) {
        let _ = writeln!(
            out,
            "  fiber [{}] {}",
            join(f),
            name.as_deref().unwrap_or("singular")
        );
    }
    if let Some(levels) = &r.tower {
        let _ = writeln!(out);
        let _ = writeln!(out, "tower");
        for level in levels {
            for (i, f) in level.fibers.iter().enumerate() {
                let ids: Vec<VertexId> = f.graph.vertices().iter().map(|v| v.id.clone()).collect();
                let what = match &f.payload {
                    FiberPayload::Rdp { rdp, tau } => format!("{rdp} tau={tau}"),
                    FiberPayload::Report { report } => {
                        let e = report.invariants.e;
                        match (&report.c, report.blowdown.fibers.is_empty()) {
                            (Some(c), true) if c.exact => format!("e={e} c={} smooth blowup", c.lo),
                            (Some(c), false) if c.exact => format!("e={e} c={}", c.lo),
                            (Some(c), _) => format!("e={e} c=[{}, {}]", c.lo, c.hi),
                            (None, _) => format!("e={e} c=- ({})", report.reasons.get("c").copied().unwrap_or("-")),
                        }
                    }
                };
                let parent = f.parent.map(|p| format!(" <- {p}")).unwrap_or_default();
                let _ = writeln!(
                    out,
                    "  {}.{} [{}] {}{}",
                    level.level,
                    i,
                    join(&ids),
                    what,
                    parent
                );
            }
        }
    }
    out
}

/// First failing check among negative definiteness, rationality and
/// almost-reducedness.
pub fn check_graph(g: &DualGraph) -> Result<(), Error> {
    let data = crate::cycles::analyze(g)?;
    if !data.invariants.rational {
        return Err(Error::NotRational);
    }
    if !data.invariants.almost_reduced {
        return Err(Error::NotAlmostReduced);
    }
    Ok(())
}
