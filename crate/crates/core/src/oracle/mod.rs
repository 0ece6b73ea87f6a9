//! Ground truth for the bimodule computations: a minimal resolution of `A`
//! over the enveloping algebra, found by plain linear algebra with no
//! knowledge of the explicit differentials.

mod enveloping;
mod resolution;

pub use enveloping::{EnvelopingAlgebra, RegularBimodule};
pub use resolution::{hh_dims_oracle, OracleDegree, OracleHomComplex, OracleResolution, DEFAULT_DIM_LIMIT};

/// Default top degree for oracle runs.
pub const DEFAULT_ORACLE_DEGREE: usize = 10;
