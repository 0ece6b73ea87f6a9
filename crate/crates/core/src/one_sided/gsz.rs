//! The recursively defined uniform generator sets `G_n` that encode a minimal
//! right resolution of `A / rad A` for the Hecke algebra.
//!
//! Each element `x` of `G_n` is stored as `x = sum_p p·lambda_p` over
//! `p in G_{n-1}`, with every `lambda_p` a signed role word, together with its
//! expansion in the free path algebra.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::module::FreeLayout;
use super::resolution::{ExtTable, OneSidedDegree, OneSidedResolution};
use crate::bimodule::{resolution_term, HeckeRoles, SummandKind};
use crate::error::{Error, Result};
use crate::linalg::{sparse, Field, LinearMap};
use crate::path_algebra::{AlgebraTable, FreeElement, Path, Quiver, VertexId};

/// `g^r`, `f^12`, `f^21` or `f^22`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GszLabel {
    G(usize),
    F12,
    F21,
    F22,
}

impl GszLabel {
    /// The bimodule summand that carries the same index.
    pub fn summand(&self) -> SummandKind {
        match *self {
            GszLabel::G(r) => SummandKind::A(r),
            GszLabel::F12 => SummandKind::B,
            GszLabel::F21 => SummandKind::C,
            GszLabel::F22 => SummandKind::D,
        }
    }

    pub fn from_summand(s: SummandKind) -> Self {
        match s {
            SummandKind::A(r) => GszLabel::G(r),
            SummandKind::B => GszLabel::F12,
            SummandKind::C => GszLabel::F21,
            SummandKind::D => GszLabel::F22,
        }
    }

    /// Source and target, as 1-based Hecke vertex labels.
    pub fn vertex_pair(&self) -> (usize, usize) {
        self.summand().vertex_pair()
    }
}

impl fmt::Display for GszLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GszLabel::G(r) => write!(f, "g^{r}"),
            GszLabel::F12 => write!(f, "f^12"),
            GszLabel::F21 => write!(f, "f^21"),
            GszLabel::F22 => write!(f, "f^22"),
        }
    }
}

/// Which part of the recursion produced an element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CellReading {
    /// `g^1_0 = e_1`, `f^22_0 = e_2`.
    Base,
    /// A case the recursion states directly.
    Stated,
    /// A cell the recursion leaves open; the note says how it was filled.
    Extended(&'static str),
}

/// `coeff * p·word`, with `p` a label of the previous degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaTerm {
    pub previous: GszLabel,
    pub coeff: i64,
    pub word: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GszElement {
    pub label: GszLabel,
    pub lambda: Vec<LambdaTerm>,
    pub expanded: FreeElement,
    pub reading: CellReading,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GszSet {
    pub degree: usize,
    pub elements: Vec<GszElement>,
}

impl GszSet {
    pub fn get(&self, label: GszLabel) -> Option<&GszElement> {
        self.elements.iter().find(|e| e.label == label)
    }
}

fn lt(previous: GszLabel, coeff: i64, word: &'static str) -> LambdaTerm {
    LambdaTerm { previous, coeff, word }
}

/// The recursion cell for `label` in degree `n >= 1`.
pub fn recursion_cell(n: usize, label: GszLabel) -> Result<(Vec<LambdaTerm>, CellReading)> {
    use GszLabel::*;
    let (k, i) = (n / 4, n % 4);
    let undefined = || Error::UndefinedGenerator {
        label: label.to_string(),
        degree: n,
    };
    if n == 0 || !resolution_term(n).contains(&label.summand()) {
        return Err(undefined());
    }
    let stated = CellReading::Stated;
    let cell = match label {
        G(r) if i == 3 && r == 2 * k + 2 => {
            let reading = if k > 0 {
                stated
            } else {
                CellReading::Extended("k > 0 formula applied at k = 0")
            };
            (vec![lt(G(2 * k + 1), 1, "ab")], reading)
        }
        G(r) if r == 2 * k + 1 => {
            let head = if k == 0 { G(1) } else { G(2 * k) };
            match i {
                1 if k == 0 => (vec![lt(G(1), 1, "e")], stated),
                0 | 1 => (vec![lt(head, 1, "e")], stated),
                _ => (vec![lt(head, 1, "e"), lt(F12, -1, "bab")], stated),
            }
        }
        G(r) if i == 0 && r == 2 * k => (vec![lt(G(2 * k - 1), 1, "ab")], stated),
        G(1) => (vec![lt(G(1), 1, "e"), lt(G(2), -1, "ab")], stated),
        G(r) if r % 2 == 1 => (vec![lt(G(r - 1), 1, "e"), lt(G(r + 1), -1, "ab")], stated),
        G(r) => {
            let reading = if r < 2 * k || i == 2 {
                stated
            } else {
                CellReading::Extended("even-r formula applied at r = 2k")
            };
            (vec![lt(G(r + 1), 1, "e"), lt(G(r - 1), 1, "ab")], reading)
        }
        F12 => (vec![lt(G(2 * k + 1), 1, "a")], stated),
        F21 if i == 1 => (vec![lt(F22, 1, "b")], stated),
        F21 => (vec![lt(F21, 1, "e")], stated),
        F22 if i == 0 => (vec![lt(F22, 1, "baba")], stated),
        F22 => (vec![lt(F21, 1, "a")], stated),
    };
    Ok(cell)
}

/// `G_0, ..., G_max` for the Hecke presentation.
pub fn gsz_sets(quiver: &Quiver, max_degree: usize) -> Result<Vec<GszSet>> {
    let roles = HeckeRoles::detect(quiver)?;
    let base = GszSet {
        degree: 0,
        elements: vec![
            GszElement {
                label: GszLabel::G(1),
                lambda: Vec::new(),
                expanded: FreeElement::from_path(Path::trivial(roles.v1)),
                reading: CellReading::Base,
            },
            GszElement {
                label: GszLabel::F22,
                lambda: Vec::new(),
                expanded: FreeElement::from_path(Path::trivial(roles.v2)),
                reading: CellReading::Base,
            },
        ],
    };
    let mut sets = vec![base];
    for n in 1..=max_degree {
        let previous = &sets[n - 1];
        let elements = resolution_term(n)
            .into_iter()
            .map(|s| {
                let label = GszLabel::from_summand(s);
                let (lambda, reading) = recursion_cell(n, label)?;
                let mut expanded = FreeElement::zero();
                for term in &lambda {
                    let p = previous.get(term.previous).ok_or_else(|| Error::UndefinedGenerator {
                        label: term.previous.to_string(),
                        degree: n - 1,
                    })?;
                    let start = word_start(&roles, term.previous);
                    let word = FreeElement::from_path(roles.word(quiver, term.word, start));
                    expanded.add_scaled(&p.expanded.mul(&word), term.coeff);
                }
                Ok(GszElement {
                    label,
                    lambda,
                    expanded,
                    reading,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        sets.push(GszSet { degree: n, elements });
    }
    Ok(sets)
}

fn hecke_vertex(roles: &HeckeRoles, v: usize) -> VertexId {
    if v == 1 {
        roles.v1
    } else {
        roles.v2
    }
}

/// `lambda_p` starts where `p` ends.
fn word_start(roles: &HeckeRoles, p: GszLabel) -> VertexId {
    hecke_vertex(roles, p.vertex_pair().1)
}

/// The complex `P_n = ⊕_{x in G_n} t(x)A` with `d_n(t(x)a) = sum_p lambda_p·a`,
/// augmented onto `A / rad A`.
pub fn gsz_complex<F: Field>(algebra: &AlgebraTable<F>, sets: &[GszSet]) -> Result<OneSidedResolution<F>> {
    let roles = HeckeRoles::detect(algebra.quiver())?;
    let f = algebra.field();
    let vertices_of = |set: &GszSet| -> Vec<VertexId> { set.elements.iter().map(|x| hecke_vertex(&roles, x.label.vertex_pair().1)).collect() };
    let mut degrees = Vec::with_capacity(sets.len());
    for (n, set) in sets.iter().enumerate() {
        let vertices = vertices_of(set);
        let layout = FreeLayout::new(algebra, &vertices);
        let map = if n == 0 {
            let columns = (0..layout.dim)
                .map(|k| {
                    let (t, b) = layout.decode(k);
                    if b == algebra.idempotent(vertices[t]) {
                        vec![(vertices[t], f.one())]
                    } else {
                        Vec::new()
                    }
                })
                .collect();
            LinearMap::from_columns(f.clone(), algebra.num_vertices(), columns)
        } else {
            let previous = &sets[n - 1];
            let target = FreeLayout::new(algebra, &vertices_of(previous));
            let columns = (0..layout.dim)
                .map(|k| {
                    let (t, b) = layout.decode(k);
                    let mut acc = Vec::new();
                    for term in &set.elements[t].lambda {
                        let p = previous.elements.iter().position(|e| e.label == term.previous).expect("previous label exists");
                        let start = word_start(&roles, term.previous);
                        let word = algebra.reduce_path(&roles.word(algebra.quiver(), term.word, start));
                        let value = algebra.mul_vec(&word, &[(b, f.one())]);
                        acc = sparse::axpy(f, &f.from_i64(term.coeff), &target.embed(p, &value), &acc);
                    }
                    acc
                })
                .collect();
            LinearMap::from_columns(f.clone(), target.dim, columns)
        };
        degrees.push(OneSidedDegree { vertices, map });
    }
    Ok(OneSidedResolution {
        degrees,
        module_dim: algebra.num_vertices(),
    })
}

/// Per-degree outcome of checking the sets against the resolution property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GszDegreeReport {
    pub n: usize,
    /// Every element is uniform with the endpoints its label names.
    pub uniform: bool,
    pub complex_ok: bool,
    pub exact_ok: bool,
    pub minimal_ok: bool,
    /// Number of elements from `i` to `j` equals `dim Ext^n(S_i, S_j)`.
    pub multiplicities_ok: bool,
    /// Labels filled by an extended reading in this degree.
    pub extended: Vec<String>,
}

impl GszDegreeReport {
    pub fn passed(&self) -> bool {
        self.uniform && self.complex_ok && self.exact_ok && self.minimal_ok && self.multiplicities_ok
    }
}

pub fn verify_gsz<F: Field>(algebra: &AlgebraTable<F>, max_degree: usize) -> Result<Vec<GszDegreeReport>> {
    let roles = HeckeRoles::detect(algebra.quiver())?;
    let sets = gsz_sets(algebra.quiver(), max_degree)?;
    let complex = gsz_complex(algebra, &sets)?;
    let ext = ExtTable::compute(algebra, max_degree)?;
    let reports = sets
        .iter()
        .enumerate()
        .map(|(n, set)| {
            let uniform = set.elements.iter().all(|x| {
                let (i, j) = x.label.vertex_pair();
                x.expanded.uniform_endpoints() == Some((hecke_vertex(&roles, i), hecke_vertex(&roles, j)))
            });
            let multiplicities_ok = [(1, 1), (1, 2), (2, 1), (2, 2)].iter().all(|&(i, j)| {
                let count = set.elements.iter().filter(|x| x.label.vertex_pair() == (i, j)).count();
                ext.ext_dim(hecke_vertex(&roles, i), hecke_vertex(&roles, j), n).ok() == Some(count)
            });
            GszDegreeReport {
                n,
                uniform,
                complex_ok: n == 0 || complex.complex_at(n),
                exact_ok: complex.exact_at(n),
                minimal_ok: n == 0 || complex.minimal_at(algebra, n),
                multiplicities_ok,
                extended: set
                    .elements
                    .iter()
                    .filter_map(|x| match x.reading {
                        CellReading::Extended(note) => Some(format!("{}_{n}: {note}", x.label)),
                        _ => None,
                    })
                    .collect(),
            }
        })
        .collect();
    Ok(reports)
}
