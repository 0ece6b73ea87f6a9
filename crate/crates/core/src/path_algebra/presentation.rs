use serde::{Deserialize, Serialize};

use super::path::{Arrow, FreeElement, Path, Quiver};
use crate::error::{Error, Result};

/// Name of the bundled presentation of the tame Hecke block algebra.
pub const HECKE_PRESET: &str = "hecke_s4_qm1";

/// Source text of the bundled preset: a loop `eps` at 1, `alpha: 1 -> 2`,
/// `beta: 2 -> 1`, with `eps*alpha = beta*eps = 0` and `(alpha*beta)^2 = eps^2`.
pub const HECKE_PRESET_SOURCE: &str = "\
# Basic algebra of the Hecke algebra H_q(S_4) at q = -1.
vertices: 1 2
arrow: eps: 1 -> 1
arrow: alpha: 1 -> 2
arrow: beta: 2 -> 1
relation: eps*alpha
relation: beta*eps
relation: alpha*beta*alpha*beta - eps*eps
";

/// Quiver together with uniform relations generating the ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverPresentation {
    pub quiver: Quiver,
    pub relations: Vec<FreeElement>,
}

impl QuiverPresentation {
    pub fn new(quiver: Quiver, relations: Vec<FreeElement>) -> Result<Self> {
        for a in &quiver.arrows {
            if a.source >= quiver.vertices.len() || a.target >= quiver.vertices.len() {
                return Err(Error::Presentation(format!("arrow {} has an undeclared endpoint", a.name)));
            }
        }
        for (k, r) in relations.iter().enumerate() {
            if r.is_zero() {
                return Err(Error::Presentation(format!("relation {} is zero", k + 1)));
            }
            if r.uniform_endpoints().is_none() {
                return Err(Error::Presentation(format!("relation {} is not uniform", k + 1)));
            }
        }
        Ok(QuiverPresentation { quiver, relations })
    }

    /// Looks up a bundled preset by name.
    pub fn preset(name: &str) -> Result<Self> {
        match name {
            HECKE_PRESET => super::parse::parse_presentation(HECKE_PRESET_SOURCE),
            other => Err(Error::Presentation(format!("unknown preset '{other}'"))),
        }
    }

    pub fn hecke() -> Self {
        Self::preset(HECKE_PRESET).expect("bundled preset parses")
    }

    /// One-vertex quiver with a single loop `x` and relation `x^n`.
    pub fn truncated_polynomial(n: usize) -> Self {
        let quiver = Quiver {
            vertices: vec!["1".into()],
            arrows: vec![Arrow {
                name: "x".into(),
                source: 0,
                target: 0,
            }],
        };
        let rel = FreeElement::from_path(Path {
            source: 0,
            target: 0,
            arrows: vec![0; n],
        });
        QuiverPresentation::new(quiver, vec![rel]).expect("valid presentation")
    }

    /// Renders the presentation in the text format accepted by the parser.
    pub fn to_source(&self) -> String {
        let q = &self.quiver;
        let mut out = format!("vertices: {}\n", q.vertices.join(" "));
        for a in &q.arrows {
            out.push_str(&format!(
                "arrow: {}: {} -> {}\n",
                a.name, q.vertices[a.source], q.vertices[a.target]
            ));
        }
        for r in &self.relations {
            let terms: Vec<String> = r
                .terms
                .iter()
                .map(|(p, c)| {
                    let word = if p.is_trivial() {
                        format!("e({})", q.vertices[p.source])
                    } else {
                        p.arrows.iter().map(|a| q.arrows[*a].name.as_str()).collect::<Vec<_>>().join("*")
                    };
                    format!("{c}*{word}")
                })
                .collect();
            out.push_str(&format!("relation: {}\n", terms.join(" + ")));
        }
        out
    }
}
