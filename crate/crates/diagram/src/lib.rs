//! Framed oriented tangle diagrams built from layered slices, with
//! formal linear combinations, classical symmetries, strand tracing,
//! and braid/PD ingestion.
//!
//! Two conventions used throughout, stated once here: tensor factors
//! read left to right in word order (the first factor's letters come
//! first), while strand positions count 1..n from the RIGHT end of a
//! word. Every slice carries the right-to-left position of the
//! rightmost strand it touches.

pub mod braid;
pub mod diagram;
pub mod dsl;
pub mod gen;
pub mod letter;
pub mod morphism;
pub mod moves;
pub mod pd;
pub mod slice;
pub mod symmetry;
pub mod trace;

pub use braid::from_braid;
pub use diagram::{Diagram, DiagramError};
pub use dsl::{parse_dsl, print_dsl};
pub use letter::{Letter, Word};
pub use morphism::Morphism;
pub use pd::{from_pd, parse_pd, pd_signs, PdCode};
pub use slice::{cross_kind, under_side, Side, Slice, SliceKind};
pub use symmetry::{apply_symmetry, apply_to_diagram, Symmetry};
pub use trace::{components, trace, CrossingEvent, Endpoint, StrandPath, Trace};
