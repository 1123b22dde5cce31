//! Colorings, per-vertex color signatures, properness, and the eight
//! distinguishing conditions.
//!
//! For a coloring `f` and vertex `u`:
//!
//! * `C(f,u)`: colors of the edges incident to `u`;
//! * `C⟨f,u⟩`: colors of the neighbours of `u`, plus `f(u)`;
//! * `C[f,u]`: `C(f,u)` plus `f(u)`;
//! * `N₂[f,u]`: `C(f,u) ∪ C⟨f,u⟩`.
//!
//! Conditions C1, C3, C5, C7 require the respective sets to differ on every
//! pair of distinct vertices; C2, C4, C6, C8 only on the endpoints of every
//! edge.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub type Color = u32;

/// Colors are `1..=MAX_COLOR`; sets of them fit in a `u128`.
pub const MAX_COLOR: Color = 127;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSet(u128);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn from_bits(bits: u128) -> Self {
        ColorSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn single(c: Color) -> Self {
        ColorSet(1u128 << c)
    }

    pub fn insert(&mut self, c: Color) {
        self.0 |= 1u128 << c;
    }

    pub fn contains(self, c: Color) -> bool {
        c <= MAX_COLOR && self.0 & (1u128 << c) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub fn difference(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        (1..=MAX_COLOR).filter(move |&c| self.0 & (1u128 << c) != 0)
    }

    pub fn min(self) -> Option<Color> {
        (self.0 != 0).then(|| self.0.trailing_zeros())
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for ColorSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ColorSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let colors = Vec::<Color>::deserialize(d)?;
        if let Some(&bad) = colors.iter().find(|&&c| c == 0 || c > MAX_COLOR) {
            return Err(serde::de::Error::custom(format!("color {bad} out of range")));
        }
        Ok(colors.into_iter().collect())
    }
}

/// Which elements a coloring assigns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Total,
    EdgeOnly,
    VertexOnly,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Total => "total",
            Mode::EdgeOnly => "edge_only",
            Mode::VertexOnly => "vertex_only",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "total" => Ok(Mode::Total),
            "edge" | "edge_only" => Ok(Mode::EdgeOnly),
            "vertex" | "vertex_only" => Ok(Mode::VertexOnly),
            _ => Err(Error::Constraint(format!("unknown mode {s:?}"))),
        }
    }
}

/// The four per-vertex color sets a condition can compare.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignatureKind {
    Edge,
    VertexClosed,
    EdgeClosed,
    N2,
}

impl SignatureKind {
    pub const ALL: [SignatureKind; 4] = [
        SignatureKind::Edge,
        SignatureKind::VertexClosed,
        SignatureKind::EdgeClosed,
        SignatureKind::N2,
    ];

    pub fn index(self) -> usize {
        self as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Condition {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
}

impl Condition {
    pub const ALL: [Condition; 8] = [
        Condition::C1,
        Condition::C2,
        Condition::C3,
        Condition::C4,
        Condition::C5,
        Condition::C6,
        Condition::C7,
        Condition::C8,
    ];

    /// 1-based number.
    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }

    pub fn signature(self) -> SignatureKind {
        match self {
            Condition::C1 | Condition::C2 => SignatureKind::Edge,
            Condition::C3 | Condition::C4 => SignatureKind::VertexClosed,
            Condition::C5 | Condition::C6 => SignatureKind::EdgeClosed,
            Condition::C7 | Condition::C8 => SignatureKind::N2,
        }
    }

    /// True for the conditions ranging over all vertex pairs.
    pub fn all_pairs(self) -> bool {
        (self as u8).is_multiple_of(2)
    }

    /// The all-pairs condition implying this one (itself if already
    /// all-pairs).
    pub fn all_pairs_counterpart(self) -> Condition {
        Condition::ALL[(self as usize) & !1]
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", self.number())
    }
}

impl FromStr for Condition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let digits = t.strip_prefix(['C', 'c']).unwrap_or(t);
        match digits.parse::<usize>() {
            Ok(i @ 1..=8) => Ok(Condition::ALL[i - 1]),
            _ => Err(Error::Constraint(format!("unknown condition {s:?}"))),
        }
    }
}

/// A subset of C1..C8 together with the coloring mode it applies to.
///
/// Edge-only sets may contain only C1 and C2; vertex-only sets are empty.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConstraintSet {
    bits: u8,
    mode: Mode,
}

impl ConstraintSet {
    pub fn new(mode: Mode, conditions: impl IntoIterator<Item = Condition>) -> Result<Self> {
        let bits = conditions.into_iter().fold(0u8, |b, c| b | c.bit());
        let allowed = match mode {
            Mode::Total => 0xff,
            Mode::EdgeOnly => Condition::C1.bit() | Condition::C2.bit(),
            Mode::VertexOnly => 0,
        };
        if bits & !allowed != 0 {
            return Err(Error::Constraint(format!(
                "{mode} colorings cannot carry {}",
                ConstraintSet { bits: bits & !allowed, mode: Mode::Total }.condition_list()
            )));
        }
        Ok(ConstraintSet { bits, mode })
    }

    pub fn total(conditions: &[Condition]) -> Self {
        Self::new(Mode::Total, conditions.iter().copied()).unwrap()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn contains(&self, c: Condition) -> bool {
        self.bits & c.bit() != 0
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn conditions(&self) -> Vec<Condition> {
        Condition::ALL.into_iter().filter(|&c| self.contains(c)).collect()
    }

    /// Same mode and every condition of `self` in `other`.
    pub fn is_subset_of(&self, other: &ConstraintSet) -> bool {
        self.mode == other.mode && self.bits & !other.bits == 0
    }

    pub fn needs_signature(&self, kind: SignatureKind) -> bool {
        self.conditions().iter().any(|c| c.signature() == kind)
    }

    /// Number of the bit pattern, for enumerating all subsets in tests.
    pub fn from_bits(mode: Mode, bits: u8) -> Result<Self> {
        Self::new(
            mode,
            Condition::ALL.into_iter().filter(|c| bits & c.bit() != 0),
        )
    }

    pub fn bits(&self) -> u8 {
        self.bits
    }

    fn condition_list(&self) -> String {
        let names: Vec<String> = self.conditions().iter().map(ToString::to_string).collect();
        format!("{{{}}}", names.join(","))
    }
}

impl fmt::Debug for ConstraintSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ConstraintSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.mode, self.condition_list())
    }
}

impl Serialize for ConstraintSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw {
            mode: Mode,
            conditions: Vec<Condition>,
        }
        Raw {
            mode: self.mode,
            conditions: self.conditions(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ConstraintSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            mode: Mode,
            conditions: Vec<Condition>,
        }
        let raw = Raw::deserialize(d)?;
        ConstraintSet::new(raw.mode, raw.conditions).map_err(serde::de::Error::custom)
    }
}

/// The named chromatic-number variants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Preset {
    /// χ″₍ₛ₎: total, C1.
    EVdtc,
    /// χ″₍ₐₛ₎: total, C2.
    EAvdtc,
    /// χ″⟨ₛ⟩: total, C3.
    VVdtc,
    /// χ″⟨ₐₛ⟩: total, C4.
    VAvdtc,
    /// χ″ₛ: total, C5.
    Vdtc,
    /// χ″ₐₛ: total, C6.
    Avdtc,
    /// χ″₂ₛ: total, C7.
    Mu,
    /// χ″₂ₐₛ: total, C8.
    MuE,
    /// χ″₍₈₎: total, C1..C8.
    All8,
    /// χ″₍₆₎: total, all but C3 and C4.
    Six,
    /// χ″₍₄₎ₐₛ: total, C2, C4, C6, C8.
    FourAs,
    /// χ″₍₃₎ₐₛ: total, C2, C6, C8.
    ThreeAs,
    /// χ: proper vertex coloring.
    Chi,
    /// χ′: proper edge coloring.
    ChiEdge,
    /// χ″: proper total coloring.
    ChiTotal,
    /// χ′ₛ: vertex-distinguishing edge coloring.
    ChiS,
    /// χ′ₐₛ: adjacent-vertex-distinguishing edge coloring.
    ChiAs,
}

impl Preset {
    pub const ALL: [Preset; 17] = [
        Preset::EVdtc,
        Preset::EAvdtc,
        Preset::VVdtc,
        Preset::VAvdtc,
        Preset::Vdtc,
        Preset::Avdtc,
        Preset::Mu,
        Preset::MuE,
        Preset::All8,
        Preset::Six,
        Preset::FourAs,
        Preset::ThreeAs,
        Preset::Chi,
        Preset::ChiEdge,
        Preset::ChiTotal,
        Preset::ChiS,
        Preset::ChiAs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::EVdtc => "e_vdtc",
            Preset::EAvdtc => "e_avdtc",
            Preset::VVdtc => "v_vdtc",
            Preset::VAvdtc => "v_avdtc",
            Preset::Vdtc => "vdtc",
            Preset::Avdtc => "avdtc",
            Preset::Mu => "mu",
            Preset::MuE => "mu_e",
            Preset::All8 => "all8",
            Preset::Six => "six",
            Preset::FourAs => "four_as",
            Preset::ThreeAs => "three_as",
            Preset::Chi => "chi",
            Preset::ChiEdge => "chi_edge",
            Preset::ChiTotal => "chi_total",
            Preset::ChiS => "chi_s",
            Preset::ChiAs => "chi_as",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Preset::EVdtc => "χ″₍ₛ₎",
            Preset::EAvdtc => "χ″₍ₐₛ₎",
            Preset::VVdtc => "χ″⟨ₛ⟩",
            Preset::VAvdtc => "χ″⟨ₐₛ⟩",
            Preset::Vdtc => "χ″ₛ",
            Preset::Avdtc => "χ″ₐₛ",
            Preset::Mu => "χ″₂ₛ",
            Preset::MuE => "χ″₂ₐₛ",
            Preset::All8 => "χ″₍₈₎",
            Preset::Six => "χ″₍₆₎",
            Preset::FourAs => "χ″₍₄₎ₐₛ",
            Preset::ThreeAs => "χ″₍₃₎ₐₛ",
            Preset::Chi => "χ",
            Preset::ChiEdge => "χ′",
            Preset::ChiTotal => "χ″",
            Preset::ChiS => "χ′ₛ",
            Preset::ChiAs => "χ′ₐₛ",
        }
    }

    pub fn constraint_set(self) -> ConstraintSet {
        use Condition::*;
        let (mode, conds): (Mode, &[Condition]) = match self {
            Preset::EVdtc => (Mode::Total, &[C1]),
            Preset::EAvdtc => (Mode::Total, &[C2]),
            Preset::VVdtc => (Mode::Total, &[C3]),
            Preset::VAvdtc => (Mode::Total, &[C4]),
            Preset::Vdtc => (Mode::Total, &[C5]),
            Preset::Avdtc => (Mode::Total, &[C6]),
            Preset::Mu => (Mode::Total, &[C7]),
            Preset::MuE => (Mode::Total, &[C8]),
            Preset::All8 => (Mode::Total, &[C1, C2, C3, C4, C5, C6, C7, C8]),
            Preset::Six => (Mode::Total, &[C1, C2, C5, C6, C7, C8]),
            Preset::FourAs => (Mode::Total, &[C2, C4, C6, C8]),
            Preset::ThreeAs => (Mode::Total, &[C2, C6, C8]),
            Preset::Chi => (Mode::VertexOnly, &[]),
            Preset::ChiEdge => (Mode::EdgeOnly, &[]),
            Preset::ChiTotal => (Mode::Total, &[]),
            Preset::ChiS => (Mode::EdgeOnly, &[C1]),
            Preset::ChiAs => (Mode::EdgeOnly, &[C2]),
        };
        ConstraintSet::new(mode, conds.iter().copied()).expect("presets are valid")
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == key)
            .ok_or_else(|| Error::Constraint(format!("unknown preset {s:?}")))
    }
}

/// Colors for the vertices and/or edges of a graph, with palette size `k`.
///
/// An edge-only coloring has no vertex colors and a vertex-only coloring no
/// edge colors. Every color lies in `1..=k`; properness is not enforced.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColoring")]
pub struct TotalColoring {
    k: Color,
    vertex_colors: Vec<Color>,
    edge_colors: Vec<Color>,
}

#[derive(Deserialize)]
struct RawColoring {
    k: Color,
    #[serde(default)]
    vertex_colors: Vec<Color>,
    #[serde(default)]
    edge_colors: Vec<Color>,
}

impl TryFrom<RawColoring> for TotalColoring {
    type Error = Error;

    fn try_from(raw: RawColoring) -> Result<Self> {
        TotalColoring::new(raw.k, raw.vertex_colors, raw.edge_colors)
    }
}

impl TotalColoring {
    pub fn new(k: Color, vertex_colors: Vec<Color>, edge_colors: Vec<Color>) -> Result<Self> {
        if k > MAX_COLOR {
            return Err(Error::Coloring(format!("palette {k} exceeds {MAX_COLOR}")));
        }
        for (what, colors) in [("vertex", &vertex_colors), ("edge", &edge_colors)] {
            if let Some((i, &c)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
                return Err(Error::Coloring(format!(
                    "{what} {i} has color {c}, outside 1..={k}"
                )));
            }
        }
        Ok(TotalColoring {
            k,
            vertex_colors,
            edge_colors,
        })
    }

    /// Palette size fitted to the largest color used.
    pub fn tight(vertex_colors: Vec<Color>, edge_colors: Vec<Color>) -> Result<Self> {
        let k = vertex_colors
            .iter()
            .chain(&edge_colors)
            .copied()
            .max()
            .unwrap_or(0);
        Self::new(k, vertex_colors, edge_colors)
    }

    pub fn k(&self) -> Color {
        self.k
    }

    pub fn vertex_colors(&self) -> &[Color] {
        &self.vertex_colors
    }

    pub fn edge_colors(&self) -> &[Color] {
        &self.edge_colors
    }

    pub fn vertex(&self, u: usize) -> Color {
        self.vertex_colors[u]
    }

    pub fn edge(&self, e: usize) -> Color {
        self.edge_colors[e]
    }

    /// Largest color actually used.
    pub fn max_color(&self) -> Color {
        self.vertex_colors
            .iter()
            .chain(&self.edge_colors)
            .copied()
            .max()
            .unwrap_or(0)
    }

    pub fn with_palette(&self, k: Color) -> Result<Self> {
        Self::new(k, self.vertex_colors.clone(), self.edge_colors.clone())
    }

    /// Checks the array lengths against `g` for `mode`.
    pub fn check_shape(&self, g: &Graph, mode: Mode) -> Result<()> {
        let (nv, ne) = match mode {
            Mode::Total => (g.n(), g.q()),
            Mode::EdgeOnly => (0, g.q()),
            Mode::VertexOnly => (g.n(), 0),
        };
        if self.vertex_colors.len() != nv || self.edge_colors.len() != ne {
            return Err(Error::Coloring(format!(
                "{mode} coloring of a graph with {} vertices and {} edges needs {nv} vertex \
                 and {ne} edge colors, got {} and {}",
                g.n(),
                g.q(),
                self.vertex_colors.len(),
                self.edge_colors.len()
            )));
        }
        Ok(())
    }

    fn has_vertices(&self) -> bool {
        !self.vertex_colors.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColorSignature {
    pub c_edge: ColorSet,
    pub c_vertex_closed: ColorSet,
    pub c_edge_closed: ColorSet,
    pub n2: ColorSet,
}

impl ColorSignature {
    pub fn get(&self, kind: SignatureKind) -> ColorSet {
        match kind {
            SignatureKind::Edge => self.c_edge,
            SignatureKind::VertexClosed => self.c_vertex_closed,
            SignatureKind::EdgeClosed => self.c_edge_closed,
            SignatureKind::N2 => self.n2,
        }
    }
}

fn signature_unchecked(g: &Graph, f: &TotalColoring, u: usize) -> ColorSignature {
    let c_edge: ColorSet = if f.edge_colors.is_empty() {
        ColorSet::EMPTY
    } else {
        g.incident_edges(u).iter().map(|&e| f.edge(e)).collect()
    };
    let (own, around) = if f.has_vertices() {
        (
            ColorSet::single(f.vertex(u)),
            g.neighbors(u).iter().map(|&w| f.vertex(w)).collect(),
        )
    } else {
        (ColorSet::EMPTY, ColorSet::EMPTY)
    };
    let c_vertex_closed = around.union(own);
    ColorSignature {
        c_edge,
        c_vertex_closed,
        c_edge_closed: c_edge.union(own),
        n2: c_edge.union(c_vertex_closed),
    }
}

pub fn color_signature(g: &Graph, f: &TotalColoring, u: usize) -> Result<ColorSignature> {
    if u >= g.n() {
        return Err(Error::Precondition(format!("vertex {u} out of range")));
    }
    let shape_ok = (f.vertex_colors.is_empty() || f.vertex_colors.len() == g.n())
        && (f.edge_colors.is_empty() || f.edge_colors.len() == g.q());
    if !shape_ok {
        return Err(Error::Coloring("coloring does not match the graph".into()));
    }
    Ok(signature_unchecked(g, f, u))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Element {
    Vertex(usize),
    Edge(usize),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "vertex {v}"),
            Element::Edge(e) => write!(f, "edge {e}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Shape {
        detail: String,
    },
    /// Two adjacent or incident elements share a color.
    Improper {
        a: Element,
        b: Element,
        color: Color,
    },
    /// A distinguishing condition fails on the pair `(u, v)`.
    Condition {
        condition: Condition,
        u: usize,
        v: usize,
        signature: ColorSet,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape { detail } => write!(f, "shape: {detail}"),
            Violation::Improper { a, b, color } => write!(f, "{a} and {b} both colored {color}"),
            Violation::Condition {
                condition,
                u,
                v,
                signature,
            } => write!(
                f,
                "{condition} fails: vertices {u} and {v} share {:?} set {signature}",
                condition.signature()
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl Verdict {
    fn from_violations(violations: Vec<Violation>) -> Self {
        Verdict {
            ok: violations.is_empty(),
            violations,
        }
    }

    pub fn improper(&self) -> impl Iterator<Item = &Violation> {
        self.violations
            .iter()
            .filter(|v| matches!(v, Violation::Improper { .. }))
    }

    pub fn failed_conditions(&self) -> Vec<Condition> {
        let mut out: Vec<Condition> = self
            .violations
            .iter()
            .filter_map(|v| match v {
                Violation::Condition { condition, .. } => Some(*condition),
                _ => None,
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

fn properness_violations(g: &Graph, f: &TotalColoring, mode: Mode) -> Vec<Violation> {
    let mut out = Vec::new();
    let vertices = mode != Mode::EdgeOnly;
    let edges = mode != Mode::VertexOnly;
    if vertices {
        for &(a, b) in g.edges() {
            if f.vertex(a) == f.vertex(b) {
                out.push(Violation::Improper {
                    a: Element::Vertex(a),
                    b: Element::Vertex(b),
                    color: f.vertex(a),
                });
            }
        }
    }
    if vertices && edges {
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            for end in [a, b] {
                if f.edge(e) == f.vertex(end) {
                    out.push(Violation::Improper {
                        a: Element::Vertex(end),
                        b: Element::Edge(e),
                        color: f.edge(e),
                    });
                }
            }
        }
    }
    if edges {
        for u in 0..g.n() {
            let inc = g.incident_edges(u);
            for (i, &e1) in inc.iter().enumerate() {
                for &e2 in &inc[i + 1..] {
                    if f.edge(e1) == f.edge(e2) {
                        out.push(Violation::Improper {
                            a: Element::Edge(e1),
                            b: Element::Edge(e2),
                            color: f.edge(e1),
                        });
                    }
                }
            }
        }
    }
    out
}

/// Properness check in the given mode.
pub fn is_proper(g: &Graph, f: &TotalColoring, mode: Mode) -> Verdict {
    if let Err(e) = f.check_shape(g, mode) {
        return Verdict::from_violations(vec![Violation::Shape {
            detail: e.to_string(),
        }]);
    }
    Verdict::from_violations(properness_violations(g, f, mode))
}

pub fn is_proper_total(g: &Graph, f: &TotalColoring) -> Verdict {
    is_proper(g, f, Mode::Total)
}

/// Properness in `cs`'s mode plus every condition of `cs`. All violations
/// are reported, not only the first.
pub fn satisfies(g: &Graph, f: &TotalColoring, cs: &ConstraintSet) -> Verdict {
    if let Err(e) = f.check_shape(g, cs.mode()) {
        return Verdict::from_violations(vec![Violation::Shape {
            detail: e.to_string(),
        }]);
    }
    let mut violations = properness_violations(g, f, cs.mode());
    let conditions = cs.conditions();
    if !conditions.is_empty() {
        let sigs: Vec<ColorSignature> = (0..g.n()).map(|u| signature_unchecked(g, f, u)).collect();
        for c in conditions {
            let kind = c.signature();
            if c.all_pairs() {
                for u in 0..g.n() {
                    for v in u + 1..g.n() {
                        if sigs[u].get(kind) == sigs[v].get(kind) {
                            violations.push(Violation::Condition {
                                condition: c,
                                u,
                                v,
                                signature: sigs[u].get(kind),
                            });
                        }
                    }
                }
            } else {
                for &(u, v) in g.edges() {
                    if sigs[u].get(kind) == sigs[v].get(kind) {
                        violations.push(Violation::Condition {
                            condition: c,
                            u,
                            v,
                            signature: sigs[u].get(kind),
                        });
                    }
                }
            }
        }
    }
    Verdict::from_violations(violations)
}

/// Maps every color `c` to `perm[c - 1]`; `perm` must be a bijection on
/// `1..=k`.
pub fn relabel_colors(f: &TotalColoring, perm: &[Color]) -> Result<TotalColoring> {
    let k = f.k as usize;
    if perm.len() != k {
        return Err(Error::Coloring(format!(
            "permutation has {} entries, palette is {k}",
            perm.len()
        )));
    }
    let image: ColorSet = perm.iter().copied().filter(|&c| c >= 1 && c <= f.k).collect();
    if image.len() != k || perm.iter().any(|&c| c == 0 || c > f.k) {
        return Err(Error::Coloring("color map is not a bijection".into()));
    }
    let map = |c: &Color| perm[*c as usize - 1];
    TotalColoring::new(
        f.k,
        f.vertex_colors.iter().map(map).collect(),
        f.edge_colors.iter().map(map).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, FamilyKind};

    /// C5 with vertices u1..u5 -> 0..4; edge u_i u_{i+1} colored i, vertex
    /// colors 4, 5, 1, 2, 3. Canonical edge order is 01, 04, 12, 23, 34.
    pub(crate) fn table_fixture() -> (Graph, TotalColoring) {
        let g = family(FamilyKind::Cycle, &[5]).unwrap();
        let f = TotalColoring::new(5, vec![4, 5, 1, 2, 3], vec![1, 5, 2, 3, 4]).unwrap();
        (g, f)
    }

    fn set(colors: &[Color]) -> ColorSet {
        colors.iter().copied().collect()
    }

    #[test]
    fn table_rows() {
        let (g, f) = table_fixture();
        let u1 = color_signature(&g, &f, 0).unwrap();
        assert_eq!(u1.c_edge, set(&[1, 5]));
        assert_eq!(u1.c_vertex_closed, set(&[3, 4, 5]));
        assert_eq!(u1.c_edge_closed, set(&[1, 4, 5]));
        assert_eq!(u1.n2, set(&[1, 3, 4, 5]));
        let u3 = color_signature(&g, &f, 2).unwrap();
        assert_eq!(u3.c_edge, set(&[2, 3]));
        assert_eq!(u3.c_vertex_closed, set(&[1, 2, 5]));
        assert_eq!(u3.c_edge_closed, set(&[1, 2, 3]));
        assert_eq!(u3.n2, set(&[1, 2, 3, 5]));
        assert!(color_signature(&g, &f, 5).is_err());
    }

    #[test]
    fn isolated_vertex_signature() {
        let g = Graph::new(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let f = TotalColoring::new(6, vec![1, 2, 3, 4], vec![4, 5, 6]).unwrap();
        let s = color_signature(&g, &f, 3).unwrap();
        assert!(s.c_edge.is_empty());
        assert_eq!(s.c_vertex_closed, set(&[4]));
        assert_eq!(s.n2, set(&[4]));
    }

    #[test]
    fn properness() {
        let (g, f) = table_fixture();
        assert!(is_proper_total(&g, &f).ok);

        let mono = TotalColoring::new(1, vec![1; 5], vec![1; 5]).unwrap();
        let verdict = is_proper_total(&g, &mono);
        assert!(!verdict.ok);
        for e in 0..5 {
            assert!(verdict.violations.iter().any(|v| matches!(
                v,
                Violation::Improper { b: Element::Edge(x), .. } if *x == e
            )));
        }

        let k2 = family(FamilyKind::Path, &[2]).unwrap();
        let clash = TotalColoring::new(3, vec![1, 2], vec![2]).unwrap();
        let verdict = is_proper_total(&k2, &clash);
        assert_eq!(
            verdict.violations,
            vec![Violation::Improper {
                a: Element::Vertex(1),
                b: Element::Edge(0),
                color: 2
            }]
        );
    }

    #[test]
    fn table_fixture_satisfies_all_eight() {
        let (g, f) = table_fixture();
        let verdict = satisfies(&g, &f, &Preset::All8.constraint_set());
        assert!(verdict.ok, "{:?}", verdict.violations);
    }

    #[test]
    fn path_three_fixture() {
        // P3 = 0-1-2, edges 01 -> 1, 12 -> 2; vertices 2, 3, 1
        let g = family(FamilyKind::Path, &[3]).unwrap();
        let f = TotalColoring::new(3, vec![2, 3, 1], vec![1, 2]).unwrap();
        assert!(satisfies(&g, &f, &ConstraintSet::total(&[Condition::C6])).ok);
        let verdict = satisfies(&g, &f, &ConstraintSet::total(&[Condition::C8]));
        assert!(!verdict.ok);
        assert_eq!(verdict.failed_conditions(), vec![Condition::C8]);
    }

    #[test]
    fn adjacent_twins_violate_c4() {
        let k3 = family(FamilyKind::Complete, &[3]).unwrap();
        let f = TotalColoring::new(6, vec![1, 2, 3], vec![4, 5, 6]).unwrap();
        let verdict = satisfies(&k3, &f, &ConstraintSet::total(&[Condition::C4]));
        assert!(!verdict.ok);
    }

    #[test]
    fn relabelling() {
        let (g, f) = table_fixture();
        assert_eq!(relabel_colors(&f, &[1, 2, 3, 4, 5]).unwrap(), f);
        let swapped = relabel_colors(&f, &[2, 1, 3, 4, 5]).unwrap();
        assert!(satisfies(&g, &swapped, &Preset::All8.constraint_set()).ok);
        assert!(relabel_colors(&f, &[1, 1, 3, 4, 5]).is_err());
        assert!(relabel_colors(&f, &[1, 2, 3, 4]).is_err());
        assert!(relabel_colors(&f, &[1, 2, 3, 4, 6]).is_err());
    }

    #[test]
    fn constraint_set_rules() {
        assert!(ConstraintSet::new(Mode::EdgeOnly, [Condition::C5]).is_err());
        assert!(ConstraintSet::new(Mode::VertexOnly, [Condition::C1]).is_err());
        assert!(ConstraintSet::new(Mode::EdgeOnly, [Condition::C1, Condition::C2]).is_ok());
        let six = Preset::Six.constraint_set();
        assert!(!six.contains(Condition::C3) && !six.contains(Condition::C4));
        assert!(Preset::ThreeAs.constraint_set().is_subset_of(&Preset::FourAs.constraint_set()));
        assert_eq!("c7".parse::<Condition>().unwrap(), Condition::C7);
        assert_eq!("mu_e".parse::<Preset>().unwrap(), Preset::MuE);
        assert_eq!(Condition::C4.all_pairs_counterpart(), Condition::C3);
    }

    #[test]
    fn coloring_rejects_out_of_palette_colors() {
        assert!(TotalColoring::new(3, vec![0, 1], vec![]).is_err());
        assert!(TotalColoring::new(3, vec![4], vec![]).is_err());
        let json = r#"{"k": 2, "vertex_colors": [1, 0], "edge_colors": []}"#;
        assert!(serde_json::from_str::<TotalColoring>(json).is_err());
    }

    #[test]
    fn json_round_trip() {
        let (_, f) = table_fixture();
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(
            text,
            r#"{"k":5,"vertex_colors":[4,5,1,2,3],"edge_colors":[1,5,2,3,4]}"#
        );
        assert_eq!(serde_json::from_str::<TotalColoring>(&text).unwrap(), f);
    }
}
