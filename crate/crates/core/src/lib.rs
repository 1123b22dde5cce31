//! Exact computation of distinguishing proper total colorings of small
//! graphs, with explicit constructions and a bound-checking harness.

pub mod coloring;
pub mod construct;
pub mod error;
pub mod graph;
pub mod harness;
pub mod solver;

pub use coloring::{
    color_signature, is_proper, is_proper_total, relabel_colors, satisfies, Color, ColorSet,
    ColorSignature, Condition, ConstraintSet, Element, Mode, Preset, SignatureKind, TotalColoring,
    Verdict, Violation, MAX_COLOR,
};
pub use error::{Error, Result};
pub use graph::Graph;
