//! The catalog of rational double point configurations.
//!
//! Each class is a parameterised family of -2-cores (ADE trees) with
//! attachment edges, a multiplicity label for every core vertex and a set of
//! black vertices (those meeting the fundamental cycle non-trivially). A
//! class is expanded into a concrete [`Template`] laid out in a fixed local
//! vertex order per ADE shape:
//!
//! * `A_m`: the chain `0 - 1 - ... - (m-1)`.
//! * `D_m`: the long arm `0 - ... - (m-3)` ending at the branch vertex
//!   `m-3`, then the two short arms `m-2` and `m-1`, both adjacent to the
//!   branch.
//! * `E_m`: the arm of length two `0 - 1`, the branch `2`, the long arm
//!   `3 - ... - (m-2)` and the short arm `m-1` adjacent to the branch.
//!
//! For the A families the core is a chain: an ascending run, a plateau of
//! multiplicity `q` whose first vertex carries an attachment and whose last
//! vertex is black, and a descending run. The families differ only in where
//! the runs start and which chain ends carry extra attachments.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AdeType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl AdeType {
    pub fn vertex_count(self) -> usize {
        match self {
            AdeType::A(m) | AdeType::D(m) => m,
            AdeType::E6 => 6,
            AdeType::E7 => 7,
            AdeType::E8 => 8,
        }
    }

    pub fn is_valid(self) -> bool {
        match self {
            AdeType::A(m) => m >= 1,
            AdeType::D(m) => m >= 4,
            _ => true,
        }
    }

    /// Edges of the shape in the local layout described in the module docs.
    pub fn edges(self) -> Vec<(usize, usize)> {
        let m = self.vertex_count();
        match self {
            AdeType::A(_) => (1..m).map(|i| (i - 1, i)).collect(),
            AdeType::D(_) => {
                let mut e: Vec<_> = (1..=m - 3).map(|i| (i - 1, i)).collect();
                e.push((m - 3, m - 2));
                e.push((m - 3, m - 1));
                e
            }
            AdeType::E6 | AdeType::E7 | AdeType::E8 => {
                let mut e: Vec<_> = (1..=m - 2).map(|i| (i - 1, i)).collect();
                e.push((2, m - 1));
                e
            }
        }
    }

    /// Recognises an ADE tree from its adjacency lists.
    pub fn recognize(adjacency: &[Vec<usize>]) -> Option<AdeType> {
        let m = adjacency.len();
        let edge_count: usize = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        if m == 0 || edge_count + 1 != m {
            return None;
        }
        let branches: Vec<usize> = (0..m).filter(|&v| adjacency[v].len() >= 3).collect();
        match branches.as_slice() {
            [] => Some(AdeType::A(m)),
            [b] if adjacency[*b].len() == 3 => {
                let mut arms: Vec<usize> = arms(adjacency, *b).iter().map(Vec::len).collect();
                arms.sort_unstable();
                match arms.as_slice() {
                    [1, 1, c] => Some(AdeType::D(c + 3)),
                    [1, 2, 2] => Some(AdeType::E6),
                    [1, 2, 3] => Some(AdeType::E7),
                    [1, 2, 4] => Some(AdeType::E8),
                    _ => None,
                }
            }
            _ => None,
        }
    }

    /// Every bijection `local -> actual` that maps the local layout of this
    /// shape onto a tree with the given adjacency lists. These are the
    /// automorphisms of the shape, transported to the tree.
    pub fn layouts(self, adjacency: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let m = adjacency.len();
        match self {
            AdeType::A(_) => {
                if m == 1 {
                    return vec![vec![0]];
                }
                let start = (0..m).find(|&v| adjacency[v].len() == 1).expect("chain end");
                let forward = walk_chain(adjacency, start);
                let mut backward = forward.clone();
                backward.reverse();
                vec![forward, backward]
            }
            AdeType::D(_) => {
                let b = (0..m).find(|&v| adjacency[v].len() == 3).expect("branch");
                let arms = arms(adjacency, b);
                let mut out = Vec::new();
                for long in 0..3 {
                    if arms[long].len() != m - 3 {
                        continue;
                    }
                    let shorts: Vec<usize> = (0..3).filter(|&i| i != long).collect();
                    for (s1, s2) in [(shorts[0], shorts[1]), (shorts[1], shorts[0])] {
                        let mut order: Vec<usize> = arms[long].iter().rev().copied().collect();
                        order.push(b);
                        order.push(arms[s1][0]);
                        order.push(arms[s2][0]);
                        out.push(order);
                    }
                }
                out
            }
            AdeType::E6 | AdeType::E7 | AdeType::E8 => {
                let b = (0..m).find(|&v| adjacency[v].len() == 3).expect("branch");
                let arms = arms(adjacency, b);
                let long_len = m - 4;
                let mut out = Vec::new();
                for mid in 0..3 {
                    for long in 0..3 {
                        if mid == long {
                            continue;
                        }
                        let short = 3 - mid - long;
                        if arms[mid].len() != 2
                            || arms[long].len() != long_len
                            || arms[short].len() != 1
                        {
                            continue;
                        }
                        let mut order: Vec<usize> = arms[mid].iter().rev().copied().collect();
                        order.push(b);
                        order.extend(arms[long].iter().copied());
                        order.push(arms[short][0]);
                        out.push(order);
                    }
                }
                out
            }
        }
    }
}

fn walk_chain(adjacency: &[Vec<usize>], start: usize) -> Vec<usize> {
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = adjacency[cur].iter().find(|&&w| w != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

/// Arms leaving `branch`, each listed from the branch outward.
fn arms(adjacency: &[Vec<usize>], branch: usize) -> Vec<Vec<usize>> {
    adjacency[branch]
        .iter()
        .map(|&first| {
            let mut arm = vec![first];
            let mut prev = branch;
            let mut cur = first;
            while let Some(&next) = adjacency[cur].iter().find(|&&w| w != prev) {
                arm.push(next);
                prev = cur;
                cur = next;
            }
            arm
        })
        .collect()
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeType::A(m) => write!(f, "A{m}"),
            AdeType::D(m) => write!(f, "D{m}"),
            AdeType::E6 => f.write_str("E6"),
            AdeType::E7 => f.write_str("E7"),
            AdeType::E8 => f.write_str("E8"),
        }
    }
}

impl FromStr for AdeType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameters(format!("not an ADE type: {s:?}"));
        let s = s.trim();
        let t = match s {
            "E6" => AdeType::E6,
            "E7" => AdeType::E7,
            "E8" => AdeType::E8,
            _ if s.len() > 1 => {
                let m: usize = s[1..].parse().map_err(|_| bad())?;
                match &s[..1] {
                    "A" => AdeType::A(m),
                    "D" => AdeType::D(m),
                    _ => return Err(bad()),
                }
            }
            _ => return Err(bad()),
        };
        if !t.is_valid() {
            return Err(bad());
        }
        Ok(t)
    }
}

/// A row of the configuration catalog with its parameters.
///
/// For the A families `m` is the number of core vertices and `q` the plateau
/// multiplicity. For the D families `k` is the index used in the row's name:
/// `D_{2k}` or `D_{2k+1}` for the even/odd rows, and the vertex count itself
/// for `OneDI`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConfigClass {
    /// No attachments: the whole graph is a rational double point.
    Zero(AdeType),
    OneA { q: usize, m: usize },
    TwoAL { q: usize, m: usize },
    TwoAR { q: usize, m: usize },
    TwoAS { m: usize },
    ThreeA { q: usize, m: usize },
    TwoDEven { k: usize },
    TwoDOdd { k: usize },
    OneDI { k: usize },
    OneDIIEven { k: usize },
    OneDIIOdd { k: usize },
    OneE6,
    OneE7,
}

/// Expanded catalog row in local layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Template {
    pub shape: AdeType,
    /// Fundamental-cycle multiplicity of each core vertex.
    pub mult: Vec<i64>,
    /// Number of attachment edges at each core vertex.
    pub attachments: Vec<usize>,
    /// Black vertices, sorted.
    pub black: Vec<usize>,
}

impl Template {
    pub fn n(&self) -> usize {
        self.attachments.iter().sum()
    }

    /// `s`: multiplicity at the black vertex, or 1 if there is none. The
    /// zero configurations of type `A_m` have two black ends of multiplicity
    /// one.
    pub fn black_weight(&self) -> i64 {
        self.black.iter().map(|&b| self.mult[b]).max().unwrap_or(1)
    }
}

/// Chain template: `ascent ++ [q; plateau] ++ descent`, with one attachment
/// at the plateau start, the plateau end black, and optional extra
/// attachments at the two chain ends.
fn chain_template(
    ascent: Vec<i64>,
    q: i64,
    plateau: usize,
    descent: Vec<i64>,
    left_end: bool,
    right_end: bool,
) -> Template {
    let start = ascent.len();
    let mut mult = ascent;
    mult.extend(std::iter::repeat_n(q, plateau));
    mult.extend(descent);
    let m = mult.len();
    let mut attachments = vec![0; m];
    attachments[start] += 1;
    if left_end {
        attachments[0] += 1;
    }
    if right_end {
        attachments[m - 1] += 1;
    }
    Template {
        shape: AdeType::A(m),
        mult,
        attachments,
        black: vec![start + plateau - 1],
    }
}

fn run(from: usize, to: usize) -> Vec<i64> {
    (from..=to).map(|x| x as i64).collect()
}

/// `hi, hi - 1, ..., lo`.
fn desc(lo: usize, hi: usize) -> Vec<i64> {
    let mut v = run(lo, hi);
    v.reverse();
    v
}

/// Plateau length of an A-family row, if the parameters are admissible.
fn plateau(m: usize, ascent: usize, descent: usize) -> Option<usize> {
    m.checked_sub(ascent + descent).filter(|&p| p >= 1)
}

impl ConfigClass {
    /// Number of attachment edges of the row.
    pub fn n(&self) -> usize {
        match self {
            ConfigClass::Zero(_) => 0,
            ConfigClass::OneA { .. }
            | ConfigClass::OneDI { .. }
            | ConfigClass::OneDIIEven { .. }
            | ConfigClass::OneDIIOdd { .. }
            | ConfigClass::OneE6
            | ConfigClass::OneE7 => 1,
            ConfigClass::TwoAL { .. }
            | ConfigClass::TwoAR { .. }
            | ConfigClass::TwoAS { .. }
            | ConfigClass::TwoDEven { .. }
            | ConfigClass::TwoDOdd { .. } => 2,
            ConfigClass::ThreeA { .. } => 3,
        }
    }

    pub fn is_three_a(&self) -> bool {
        matches!(self, ConfigClass::ThreeA { .. })
    }

    pub fn q(&self) -> Option<usize> {
        match *self {
            ConfigClass::OneA { q, .. }
            | ConfigClass::TwoAL { q, .. }
            | ConfigClass::TwoAR { q, .. }
            | ConfigClass::ThreeA { q, .. } => Some(q),
            _ => None,
        }
    }

    pub fn k(&self) -> Option<usize> {
        match *self {
            ConfigClass::TwoDEven { k }
            | ConfigClass::TwoDOdd { k }
            | ConfigClass::OneDI { k }
            | ConfigClass::OneDIIEven { k }
            | ConfigClass::OneDIIOdd { k } => Some(k),
            _ => None,
        }
    }

    pub fn shape(&self) -> AdeType {
        match *self {
            ConfigClass::Zero(t) => t,
            ConfigClass::OneA { m, .. }
            | ConfigClass::TwoAL { m, .. }
            | ConfigClass::TwoAR { m, .. }
            | ConfigClass::TwoAS { m }
            | ConfigClass::ThreeA { m, .. } => AdeType::A(m),
            ConfigClass::TwoDEven { k } | ConfigClass::OneDIIEven { k } => AdeType::D(2 * k),
            ConfigClass::TwoDOdd { k } | ConfigClass::OneDIIOdd { k } => AdeType::D(2 * k + 1),
            ConfigClass::OneDI { k } => AdeType::D(k),
            ConfigClass::OneE6 => AdeType::E6,
            ConfigClass::OneE7 => AdeType::E7,
        }
    }

    /// Variant name, used as the `class` field of reports.
    pub fn tag(&self) -> &'static str {
        match self {
            ConfigClass::Zero(_) => "Zero",
            ConfigClass::OneA { .. } => "OneA",
            ConfigClass::TwoAL { .. } => "TwoAL",
            ConfigClass::TwoAR { .. } => "TwoAR",
            ConfigClass::TwoAS { .. } => "TwoAS",
            ConfigClass::ThreeA { .. } => "ThreeA",
            ConfigClass::TwoDEven { .. } => "TwoDEven",
            ConfigClass::TwoDOdd { .. } => "TwoDOdd",
            ConfigClass::OneDI { .. } => "OneDI",
            ConfigClass::OneDIIEven { .. } => "OneDIIEven",
            ConfigClass::OneDIIOdd { .. } => "OneDIIOdd",
            ConfigClass::OneE6 => "OneE6",
            ConfigClass::OneE7 => "OneE7",
        }
    }

    /// Conventional symbol such as `3-A^2_5` or `1-D^II_7`.
    pub fn symbol(&self) -> String {
        match *self {
            ConfigClass::Zero(t) => format!("0-{t}"),
            ConfigClass::OneA { q, m } => format!("1-A^{q}_{m}"),
            ConfigClass::TwoAL { q, m } => format!("2-AL^{q}_{m}"),
            ConfigClass::TwoAR { q, m } => format!("2-AR^{q}_{m}"),
            ConfigClass::TwoAS { m } => format!("2-AS_{m}"),
            ConfigClass::ThreeA { q, m } => format!("3-A^{q}_{m}"),
            ConfigClass::TwoDEven { k } => format!("2-D_{}", 2 * k),
            ConfigClass::TwoDOdd { k } => format!("2-D_{}", 2 * k + 1),
            ConfigClass::OneDI { k } => format!("1-D^I_{k}"),
            ConfigClass::OneDIIEven { k } => format!("1-D^II_{}", 2 * k),
            ConfigClass::OneDIIOdd { k } => format!("1-D^II_{}", 2 * k + 1),
            ConfigClass::OneE6 => "1-E_6".to_owned(),
            ConfigClass::OneE7 => "1-E_7".to_owned(),
        }
    }

    /// Expands the row into its template, or fails if the parameters are
    /// outside the row's range.
    ///
    /// Parameter ranges are canonical: `TwoAR` with a one-vertex plateau is
    /// the mirror image of `TwoAL` and is only reachable as `TwoAL`, and
    /// `OneDIIEven` starts at `k = 3` because `k = 2` coincides with
    /// `OneDI { k: 4 }`.
    pub fn template(&self) -> Result<Template> {
        let bad = || Error::InvalidParameters(format!("{self} is outside its catalog row"));
        let t = match *self {
            ConfigClass::Zero(t) => {
                if !t.is_valid() {
                    return Err(bad());
                }
                zero_template(t)
            }
            ConfigClass::OneA { q, m } => {
                if q < 1 {
                    return Err(bad());
                }
                let p = plateau(m, q - 1, q - 1).ok_or_else(bad)?;
                chain_template(run(1, q - 1), q as i64, p, desc(1, q - 1), false, false)
            }
            ConfigClass::TwoAL { q, m } => {
                if q < 2 {
                    return Err(bad());
                }
                let p = plateau(m, q - 1, q - 2).ok_or_else(bad)?;
                chain_template(run(1, q - 1), q as i64, p, desc(2, q - 1), false, true)
            }
            ConfigClass::TwoAR { q, m } => {
                if q < 2 {
                    return Err(bad());
                }
                let p = plateau(m, q - 2, q - 1).filter(|&p| p >= 2).ok_or_else(bad)?;
                chain_template(run(2, q - 1), q as i64, p, desc(1, q - 1), true, false)
            }
            ConfigClass::ThreeA { q, m } => {
                if q < 2 {
                    return Err(bad());
                }
                let p = plateau(m, q - 2, q - 2).ok_or_else(bad)?;
                chain_template(run(2, q - 1), q as i64, p, desc(2, q - 1), true, true)
            }
            ConfigClass::TwoAS { m } => {
                if m < 1 {
                    return Err(bad());
                }
                let mut attachments = vec![0; m];
                attachments[0] += 1;
                attachments[m - 1] += 1;
                Template {
                    shape: AdeType::A(m),
                    mult: vec![1; m],
                    attachments,
                    black: vec![],
                }
            }
            ConfigClass::OneDI { k } => {
                if k < 4 {
                    return Err(bad());
                }
                let mut mult = vec![2; k - 2];
                mult.extend([1, 1]);
                d_template(k, mult, [1, 0, 0], 0)
            }
            ConfigClass::TwoDEven { k } => {
                if k < 2 {
                    return Err(bad());
                }
                let m = 2 * k;
                let mut mult = run(2, 2 * k - 1);
                mult.extend([k as i64, k as i64]);
                d_template(m, mult, [1, 1, 0], m - 1)
            }
            ConfigClass::TwoDOdd { k } => {
                if k < 2 {
                    return Err(bad());
                }
                let m = 2 * k + 1;
                let mut mult = run(2, 2 * k);
                mult.extend([k as i64, k as i64 + 1]);
                d_template(m, mult, [1, 0, 1], m - 1)
            }
            ConfigClass::OneDIIEven { k } => {
                if k < 3 {
                    return Err(bad());
                }
                let m = 2 * k;
                let mut mult = run(1, 2 * k - 2);
                mult.extend([k as i64 - 1, k as i64]);
                d_template(m, mult, [0, 0, 1], m - 1)
            }
            ConfigClass::OneDIIOdd { k } => {
                if k < 2 {
                    return Err(bad());
                }
                let m = 2 * k + 1;
                let mut mult = run(1, 2 * k - 1);
                mult.extend([k as i64, k as i64]);
                d_template(m, mult, [0, 0, 1], m - 2)
            }
            ConfigClass::OneE6 => Template {
                shape: AdeType::E6,
                mult: vec![2, 3, 4, 3, 2, 2],
                attachments: vec![1, 0, 0, 0, 0, 0],
                black: vec![4],
            },
            ConfigClass::OneE7 => Template {
                shape: AdeType::E7,
                mult: vec![2, 4, 6, 5, 4, 3, 3],
                attachments: vec![0, 0, 0, 0, 0, 1, 0],
                black: vec![5],
            },
        };
        Ok(t)
    }

    /// All admissible rows with the given core shape and attachment count,
    /// in matching priority order.
    pub fn candidates(shape: AdeType, n: usize) -> Vec<ConfigClass> {
        let mut out = Vec::new();
        if n == 0 {
            out.push(ConfigClass::Zero(shape));
            return out;
        }
        let m = shape.vertex_count();
        match (shape, n) {
            (AdeType::A(_), 1) => out.extend((1..=m).map(|q| ConfigClass::OneA { q, m })),
            (AdeType::A(_), 2) => {
                out.push(ConfigClass::TwoAS { m });
                out.extend((2..=m + 1).map(|q| ConfigClass::TwoAL { q, m }));
                out.extend((2..=m + 1).map(|q| ConfigClass::TwoAR { q, m }));
            }
            (AdeType::A(_), 3) => out.extend((2..=m + 2).map(|q| ConfigClass::ThreeA { q, m })),
            (AdeType::D(_), 1) => {
                out.push(ConfigClass::OneDI { k: m });
                if m.is_multiple_of(2) {
                    out.push(ConfigClass::OneDIIEven { k: m / 2 });
                } else {
                    out.push(ConfigClass::OneDIIOdd { k: m / 2 });
                }
            }
            (AdeType::D(_), 2) => {
                if m.is_multiple_of(2) {
                    out.push(ConfigClass::TwoDEven { k: m / 2 });
                } else {
                    out.push(ConfigClass::TwoDOdd { k: m / 2 });
                }
            }
            (AdeType::E6, 1) => out.push(ConfigClass::OneE6),
            (AdeType::E7, 1) => out.push(ConfigClass::OneE7),
            _ => {}
        }
        out.retain(|c| c.template().is_ok());
        out
    }

    /// Every admissible row whose core has at most `max_core` vertices.
    pub fn enumerate(max_core: usize) -> Vec<ConfigClass> {
        let mut shapes = Vec::new();
        for m in 1..=max_core {
            shapes.push(AdeType::A(m));
            if m >= 4 {
                shapes.push(AdeType::D(m));
            }
        }
        for t in [AdeType::E6, AdeType::E7, AdeType::E8] {
            if t.vertex_count() <= max_core {
                shapes.push(t);
            }
        }
        let mut out = Vec::new();
        for shape in shapes {
            for n in 0..=3 {
                out.extend(ConfigClass::candidates(shape, n));
            }
        }
        out
    }
}

fn d_template(m: usize, mult: Vec<i64>, att: [usize; 3], black: usize) -> Template {
    debug_assert_eq!(mult.len(), m);
    let mut attachments = vec![0; m];
    attachments[0] = att[0];
    attachments[m - 2] = att[1];
    attachments[m - 1] = att[2];
    Template {
        shape: AdeType::D(m),
        mult,
        attachments,
        black: vec![black],
    }
}

/// Fundamental cycle of the rational double point itself, with its black
/// vertices.
fn zero_template(t: AdeType) -> Template {
    let m = t.vertex_count();
    let (mult, black) = match t {
        AdeType::A(_) => {
            let black = if m == 1 { vec![0] } else { vec![0, m - 1] };
            (vec![1; m], black)
        }
        AdeType::D(_) => {
            let mut mult = vec![1];
            mult.extend(std::iter::repeat_n(2, m - 3));
            mult.extend([1, 1]);
            (mult, vec![1])
        }
        AdeType::E6 => (vec![1, 2, 3, 2, 1, 2], vec![5]),
        AdeType::E7 => (vec![2, 3, 4, 3, 2, 1, 2], vec![0]),
        AdeType::E8 => (vec![2, 4, 6, 5, 4, 3, 2, 3], vec![6]),
    };
    Template {
        shape: t,
        mult,
        attachments: vec![0; m],
        black,
    }
}

impl fmt::Display for ConfigClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ConfigClass::Zero(t) => write!(f, "Zero({t})"),
            ConfigClass::OneA { q, m }
            | ConfigClass::TwoAL { q, m }
            | ConfigClass::TwoAR { q, m }
            | ConfigClass::ThreeA { q, m } => write!(f, "{}(q={q},m={m})", self.tag()),
            ConfigClass::TwoAS { m } => write!(f, "TwoAS(m={m})"),
            ConfigClass::TwoDEven { k }
            | ConfigClass::TwoDOdd { k }
            | ConfigClass::OneDI { k }
            | ConfigClass::OneDIIEven { k }
            | ConfigClass::OneDIIOdd { k } => write!(f, "{}(k={k})", self.tag()),
            ConfigClass::OneE6 | ConfigClass::OneE7 => f.write_str(self.tag()),
        }
    }
}

impl FromStr for ConfigClass {
    type Err = Error;

    /// Parses the `Display` form, e.g. `ThreeA(q=2,m=1)`, `OneE6`, `Zero(D4)`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (name, args) = match s.find('(') {
            Some(open) if s.ends_with(')') => (&s[..open], &s[open + 1..s.len() - 1]),
            Some(_) => return Err(Error::UnknownClass(s.clone())),
            None => (s.as_str(), ""),
        };
        if name == "Zero" {
            return Ok(ConfigClass::Zero(args.parse()?));
        }
        let mut q = None;
        let mut m = None;
        let mut k = None;
        for part in args.split(',').filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameters(format!("expected key=value, got {part:?}")))?;
            let value: usize = value
                .parse()
                .map_err(|_| Error::InvalidParameters(format!("bad value in {part:?}")))?;
            let slot = match key {
                "q" => &mut q,
                "m" => &mut m,
                "k" => &mut k,
                _ => return Err(Error::InvalidParameters(format!("unknown parameter {key:?}"))),
            };
            *slot = Some(value);
        }
        let need = |v: Option<usize>, key: &str| {
            v.ok_or_else(|| Error::InvalidParameters(format!("{name} needs {key}=")))
        };
        let class = match name {
            "OneA" => ConfigClass::OneA { q: need(q, "q")?, m: need(m, "m")? },
            "TwoAL" => ConfigClass::TwoAL { q: need(q, "q")?, m: need(m, "m")? },
            "TwoAR" => ConfigClass::TwoAR { q: need(q, "q")?, m: need(m, "m")? },
            "ThreeA" => ConfigClass::ThreeA { q: need(q, "q")?, m: need(m, "m")? },
            "TwoAS" => ConfigClass::TwoAS { m: need(m, "m")? },
            "TwoDEven" => ConfigClass::TwoDEven { k: need(k, "k")? },
            "TwoDOdd" => ConfigClass::TwoDOdd { k: need(k, "k")? },
            "OneDI" => ConfigClass::OneDI { k: need(k, "k")? },
            "OneDIIEven" => ConfigClass::OneDIIEven { k: need(k, "k")? },
            "OneDIIOdd" => ConfigClass::OneDIIOdd { k: need(k, "k")? },
            "OneE6" => ConfigClass::OneE6,
            "OneE7" => ConfigClass::OneE7,
            _ => return Err(Error::UnknownClass(name.to_owned())),
        };
        Ok(class)
    }
}
