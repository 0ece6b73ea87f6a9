//! Exact computation of a minimal projective bimodule resolution of the tame
//! Hecke block algebra `A = KQ/I` (quiver `eps` at 1, `alpha: 1 -> 2`,
//! `beta: 2 -> 1`; relations `eps*alpha = beta*eps = 0`, `(alpha*beta)^2 = eps^2`)
//! and of its Hochschild cohomology dimensions, checked against a generic
//! resolution over the enveloping algebra.

pub mod bimodule;
pub mod error;
pub mod expected;
pub mod linalg;
pub mod one_sided;
pub mod oracle;
pub mod path_algebra;
pub mod report;

pub use error::{Error, Result};
