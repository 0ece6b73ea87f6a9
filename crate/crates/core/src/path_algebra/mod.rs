//! Quiver presentations, their text format, and finite-dimensional quotients
//! `KQ/I` with a normal-form basis.

mod parse;
mod path;
mod presentation;
mod table;

pub use parse::{parse_element, parse_presentation};
pub use path::{Arrow, ArrowId, FreeElement, Path, Quiver, VertexId};
pub use presentation::{QuiverPresentation, HECKE_PRESET, HECKE_PRESET_SOURCE};
pub use table::{AlgebraElement, AlgebraTable};
