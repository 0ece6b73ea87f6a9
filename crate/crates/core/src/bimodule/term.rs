use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::path_algebra::{AlgebraTable, Path, Quiver, VertexId};

/// Identifies the vertices and arrows of the Hecke quiver inside an arbitrary
/// presentation with the same shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HeckeRoles {
    pub v1: VertexId,
    pub v2: VertexId,
    pub eps: usize,
    pub alpha: usize,
    pub beta: usize,
}

impl HeckeRoles {
    pub fn detect(quiver: &Quiver) -> Result<Self> {
        if quiver.vertices.len() != 2 || quiver.arrows.len() != 3 {
            return Err(Error::UnsupportedQuiver(format!(
                "found {} vertices and {} arrows",
                quiver.vertices.len(),
                quiver.arrows.len()
            )));
        }
        let loops: Vec<usize> = (0..3).filter(|&a| quiver.arrows[a].source == quiver.arrows[a].target).collect();
        let [eps] = loops[..] else {
            return Err(Error::UnsupportedQuiver("expected exactly one loop".into()));
        };
        let v1 = quiver.arrows[eps].source;
        let v2 = 1 - v1;
        let find = |s, t| {
            (0..3)
                .find(|&a| quiver.arrows[a].source == s && quiver.arrows[a].target == t)
                .ok_or_else(|| Error::UnsupportedQuiver("missing arrow between the two vertices".into()))
        };
        Ok(HeckeRoles {
            v1,
            v2,
            eps,
            alpha: find(v1, v2)?,
            beta: find(v2, v1)?,
        })
    }

    /// Builds a path from a role word: `e` = eps, `a` = alpha, `b` = beta.
    pub fn word(&self, quiver: &Quiver, word: &str, start: VertexId) -> Path {
        let mut p = Path::trivial(start);
        for ch in word.chars() {
            let id = match ch {
                'e' => self.eps,
                'a' => self.alpha,
                'b' => self.beta,
                other => panic!("unknown role letter {other}"),
            };
            p = p.concat(&Path::arrow(quiver, id)).expect("role words are composable");
        }
        p
    }
}

/// Kind of an indecomposable summand `P_ij = Ae_i ⊗ e_jA` of a resolution term.
/// `A(r)` is the `r`-th copy of `P_11`; `B`, `C`, `D` are `P_12`, `P_21`, `P_22`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SummandKind {
    A(usize),
    B,
    C,
    D,
}

impl SummandKind {
    /// `(i, j)` as 1-based vertex labels of the Hecke quiver.
    pub fn vertex_pair(&self) -> (usize, usize) {
        match self {
            SummandKind::A(_) => (1, 1),
            SummandKind::B => (1, 2),
            SummandKind::C => (2, 1),
            SummandKind::D => (2, 2),
        }
    }

    pub fn vertices(&self, roles: &HeckeRoles) -> (VertexId, VertexId) {
        let pick = |v: usize| if v == 1 { roles.v1 } else { roles.v2 };
        let (i, j) = self.vertex_pair();
        (pick(i), pick(j))
    }
}

impl fmt::Display for SummandKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SummandKind::A(r) => write!(f, "a^{r}"),
            SummandKind::B => write!(f, "b"),
            SummandKind::C => write!(f, "c"),
            SummandKind::D => write!(f, "d"),
        }
    }
}

/// A summand together with the degree it lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SummandLabel {
    pub degree: usize,
    pub kind: SummandKind,
}

impl fmt::Display for SummandLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.kind, self.degree)
    }
}

/// Summands of the degree-`n` term:
/// `4k: P11^(2k+1) + P22`, `4k+1, 4k+2: P11^(2k+1) + P12 + P21`, `4k+3: P11^(2k+2) + P22`.
pub fn resolution_term(n: usize) -> Vec<SummandKind> {
    let (k, i) = (n / 4, n % 4);
    let copies = if i == 3 { 2 * k + 2 } else { 2 * k + 1 };
    let mut out: Vec<SummandKind> = (1..=copies).map(SummandKind::A).collect();
    match i {
        0 | 3 => out.push(SummandKind::D),
        _ => {
            out.push(SummandKind::B);
            out.push(SummandKind::C);
        }
    }
    out
}

/// Multiplicity of `P_ij` (1-based vertex labels) in a summand list.
pub fn multiplicity(summands: &[SummandKind], i: usize, j: usize) -> usize {
    summands.iter().filter(|s| s.vertex_pair() == (i, j)).count()
}

/// A direct sum of projective bimodules with its tensor basis: triples
/// `(left path ending at i, summand, right path starting at j)`.
#[derive(Clone, Debug)]
pub struct BimoduleProjective {
    pub degree: usize,
    pub summands: Vec<SummandKind>,
    offsets: Vec<usize>,
    /// Per summand: algebra basis indices of `Ae_i` and `e_jA`.
    lefts: Vec<Vec<usize>>,
    rights: Vec<Vec<usize>>,
    dim: usize,
}

impl BimoduleProjective {
    pub fn new<F: Field>(algebra: &AlgebraTable<F>, roles: &HeckeRoles, degree: usize, summands: Vec<SummandKind>) -> Self {
        let mut offsets = Vec::with_capacity(summands.len());
        let mut lefts = Vec::new();
        let mut rights = Vec::new();
        let mut dim = 0;
        for s in &summands {
            let (i, j) = s.vertices(roles);
            let l = algebra.ending_at(i);
            let r = algebra.starting_at(j);
            offsets.push(dim);
            dim += l.len() * r.len();
            lefts.push(l);
            rights.push(r);
        }
        BimoduleProjective {
            degree,
            summands,
            offsets,
            lefts,
            rights,
            dim,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn position(&self, kind: SummandKind) -> Option<usize> {
        self.summands.iter().position(|s| *s == kind)
    }

    /// Index of the tensor `left ⊗ right` in summand `s` (algebra basis indices).
    pub fn index(&self, s: usize, left: usize, right: usize) -> Option<usize> {
        let l = self.lefts[s].iter().position(|&x| x == left)?;
        let r = self.rights[s].iter().position(|&x| x == right)?;
        Some(self.offsets[s] + l * self.rights[s].len() + r)
    }

    /// Inverse of [`Self::index`]: `(summand, left, right)`.
    pub fn triple(&self, index: usize) -> (usize, usize, usize) {
        let s = self.offsets.partition_point(|&o| o <= index) - 1;
        let local = index - self.offsets[s];
        let width = self.rights[s].len();
        (s, self.lefts[s][local / width], self.rights[s][local % width])
    }

    pub fn lefts(&self, s: usize) -> &[usize] {
        &self.lefts[s]
    }

    pub fn rights(&self, s: usize) -> &[usize] {
        &self.rights[s]
    }

    pub fn summand_dim(&self, s: usize) -> usize {
        self.lefts[s].len() * self.rights[s].len()
    }

    pub fn labels<F: Field>(&self, algebra: &AlgebraTable<F>) -> Vec<String> {
        (0..self.dim)
            .map(|k| {
                let (s, l, r) = self.triple(k);
                format!("{} ({}|{})", self.summands[s], algebra.format_basis(l), algebra.format_basis(r))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rationals;
    use crate::path_algebra::QuiverPresentation;

    #[test]
    fn terms_follow_the_four_periodic_pattern() {
        use SummandKind::*;
        assert_eq!(resolution_term(0), vec![A(1), D]);
        assert_eq!(resolution_term(3), vec![A(1), A(2), D]);
        assert_eq!(resolution_term(5), vec![A(1), A(2), A(3), B, C]);
        assert_eq!(multiplicity(&resolution_term(7), 1, 1), 4);
        assert_eq!(multiplicity(&resolution_term(4), 1, 2), 0);
    }

    #[test]
    fn tensor_dimensions() {
        let a = AlgebraTable::build(&QuiverPresentation::hecke(), Rationals).unwrap();
        let roles = HeckeRoles::detect(a.quiver()).unwrap();
        let dims: Vec<usize> = [SummandKind::A(1), SummandKind::B, SummandKind::C, SummandKind::D]
            .into_iter()
            .map(|s| BimoduleProjective::new(&a, &roles, 0, vec![s]).dim())
            .collect();
        assert_eq!(dims, [36, 30, 30, 25]);
        let expected = [(0, 61), (3, 97), (5, 168)];
        for (n, d) in expected {
            assert_eq!(BimoduleProjective::new(&a, &roles, n, resolution_term(n)).dim(), d);
        }
        let r5 = BimoduleProjective::new(&a, &roles, 5, resolution_term(5));
        for k in 0..r5.dim() {
            let (s, l, r) = r5.triple(k);
            assert_eq!(r5.index(s, l, r), Some(k));
        }
    }

    #[test]
    fn roles_rejects_other_quivers() {
        let q = QuiverPresentation::truncated_polynomial(3);
        assert!(HeckeRoles::detect(&q.quiver).is_err());
    }
}
