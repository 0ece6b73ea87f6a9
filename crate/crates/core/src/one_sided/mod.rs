//! Right modules over the algebra, their minimal projective resolutions and
//! the generator sets that describe the resolution of `A / rad A`.

mod gsz;
mod module;
mod resolution;

pub use gsz::{gsz_complex, gsz_sets, recursion_cell, verify_gsz, CellReading, GszDegreeReport, GszElement, GszLabel, GszSet, LambdaTerm};
pub use module::RightModule;
pub use resolution::{minimal_resolution, ExtTable, OneSidedDegree, OneSidedResolution};
