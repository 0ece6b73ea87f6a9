use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub type VertexId = usize;
pub type ArrowId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_id(&self, name: &str) -> Option<ArrowId> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// All paths of length `< max_len`, in path order.
    pub fn paths_shorter_than(&self, max_len: usize) -> Vec<Path> {
        let mut out: Vec<Path> = Vec::new();
        if max_len == 0 {
            return out;
        }
        let mut layer: Vec<Path> = (0..self.vertices.len()).map(Path::trivial).collect();
        while !layer.is_empty() {
            out.extend(layer.iter().cloned());
            if layer[0].len() + 1 >= max_len {
                break;
            }
            let mut next = Vec::new();
            for p in &layer {
                for (id, a) in self.arrows.iter().enumerate() {
                    if a.source == p.target {
                        next.push(p.extended(id, a.target));
                    }
                }
            }
            layer = next;
        }
        out.sort();
        out
    }

    /// Renders a path as `*`-joined arrow names with repeated arrows written as powers.
    pub fn format_path(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            return format!("e{}", self.vertices[p.source]);
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < p.arrows.len() {
            let mut j = i;
            while j + 1 < p.arrows.len() && p.arrows[j + 1] == p.arrows[i] {
                j += 1;
            }
            let name = &self.arrows[p.arrows[i]].name;
            if j > i {
                parts.push(format!("{name}^{}", j - i + 1));
            } else {
                parts.push(name.clone());
            }
            i = j + 1;
        }
        parts.join("*")
    }
}

/// A path in the quiver, read left to right. Trivial paths have no arrows and
/// equal source and target.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Path {
    pub source: VertexId,
    pub target: VertexId,
    pub arrows: Vec<ArrowId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn arrow(quiver: &Quiver, id: ArrowId) -> Self {
        let a = &quiver.arrows[id];
        Path {
            source: a.source,
            target: a.target,
            arrows: vec![id],
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    fn extended(&self, arrow: ArrowId, target: VertexId) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.push(arrow);
        Path {
            source: self.source,
            target,
            arrows,
        }
    }

    /// Concatenation `self` then `other`, if composable.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            source: self.source,
            target: other.target,
            arrows,
        })
    }
}

impl Ord for Path {
    /// Length first, then the arrow word lexicographically by declaration
    /// index, then the vertex (only relevant for trivial paths).
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of the path algebra over the integers (mapped into the working
/// field on reduction). Terms with zero coefficient are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeElement {
    pub terms: BTreeMap<Path, i64>,
}

impl FreeElement {
    pub fn zero() -> Self {
        FreeElement::default()
    }

    pub fn from_path(p: Path) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(p, 1);
        FreeElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, p: Path, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(p.clone()).or_insert(0);
        *e = e.checked_add(c).expect("coefficient overflow");
        if *e == 0 {
            self.terms.remove(&p);
        }
    }

    pub fn add_scaled(&mut self, other: &FreeElement, c: i64) {
        for (p, v) in &other.terms {
            self.add_term(p.clone(), v.checked_mul(c).expect("coefficient overflow"));
        }
    }

    /// Product in the free path algebra; non-composable pairs vanish.
    pub fn mul(&self, other: &FreeElement) -> FreeElement {
        let mut out = FreeElement::zero();
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                if let Some(pq) = p.concat(q) {
                    out.add_term(pq, a.checked_mul(*b).expect("coefficient overflow"));
                }
            }
        }
        out
    }

    /// `(source, target)` if every term shares one source and one target.
    pub fn uniform_endpoints(&self) -> Option<(VertexId, VertexId)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let ends = (first.source, first.target);
        it.all(|p| (p.source, p.target) == ends).then_some(ends)
    }

    pub fn min_len(&self) -> Option<usize> {
        self.terms.keys().map(Path::len).min()
    }

    /// Decomposition `x = sum e_i x e_j` into uniform pieces, ordered by
    /// `(source, target)`.
    pub fn uniform_components(&self) -> Vec<FreeElement> {
        let mut parts: BTreeMap<(VertexId, VertexId), FreeElement> = BTreeMap::new();
        for (p, c) in &self.terms {
            parts.entry((p.source, p.target)).or_default().add_term(p.clone(), *c);
        }
        parts.into_values().collect()
    }

    pub fn format(&self, quiver: &Quiver) -> String {
        format_terms(self.terms.iter().map(|(p, c)| (quiver.format_path(p), c.to_string())))
    }
}

/// Joins `(monomial, coefficient)` pairs into `a - 2*b + c` form.
pub(crate) fn format_terms<I: IntoIterator<Item = (String, String)>>(terms: I) -> String {
    let mut out = String::new();
    for (mono, coeff) in terms {
        let (neg, mag) = match coeff.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, coeff),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag != "1" {
            out.push_str(&mag);
            out.push('*');
        }
        out.push_str(&mono);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
