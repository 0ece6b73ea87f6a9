//! Exact linear algebra over the rationals and prime fields.

mod field;
mod map;
pub mod sparse;
mod span;

pub use field::{Field, FieldSpec, FieldVisitor, PrimeField, Rationals};
pub(crate) use map::Echelon;
pub use map::LinearMap;
pub use span::Span;
pub use sparse::SparseVec;
