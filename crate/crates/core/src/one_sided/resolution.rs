use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::module::{FreeLayout, RightModule};
use crate::error::{Error, Result};
use crate::linalg::{Field, LinearMap, Span, SparseVec};
use crate::path_algebra::{AlgebraTable, VertexId};

/// Degree-`n` data of a minimal projective resolution `P_n -> P_{n-1}`.
#[derive(Clone, Debug)]
pub struct OneSidedDegree<F: Field> {
    /// `P_n = ⊕ e_v A`, one vertex per summand.
    pub vertices: Vec<VertexId>,
    /// `d_n: P_n -> P_{n-1}`; for `n = 0` the augmentation onto the module.
    pub map: LinearMap<F>,
}

#[derive(Clone, Debug)]
pub struct OneSidedResolution<F: Field> {
    pub degrees: Vec<OneSidedDegree<F>>,
    /// Dimension of the module being resolved.
    pub module_dim: usize,
}

impl<F: Field> OneSidedResolution<F> {
    pub fn max_degree(&self) -> usize {
        self.degrees.len() - 1
    }

    /// Number of summands `e_v A` in `P_n`.
    pub fn multiplicity(&self, n: usize, v: VertexId) -> usize {
        self.degrees[n].vertices.iter().filter(|&&w| w == v).count()
    }

    /// `d_{n-1} ∘ d_n = 0` (for `n = 1` the augmentation after `d_1`).
    pub fn complex_at(&self, n: usize) -> bool {
        self.degrees[n - 1].map.compose(&self.degrees[n].map).expect("composable").is_zero()
    }

    /// At `n = 0`, the augmentation is onto; otherwise `ker d_{n-1} = im d_n`.
    pub fn exact_at(&self, n: usize) -> bool {
        if n == 0 {
            return self.degrees[0].map.rank() == self.module_dim;
        }
        let previous = &self.degrees[n - 1].map;
        previous.domain_dim() - previous.rank() == self.degrees[n].map.rank()
    }

    /// `d_n(P_n) ⊆ P_{n-1}·rad`: no image has a component on a summand generator `e_v`.
    pub fn minimal_at(&self, algebra: &AlgebraTable<F>, n: usize) -> bool {
        let layout = FreeLayout::new(algebra, &self.degrees[n - 1].vertices);
        self.degrees[n].map.columns().iter().all(|c| {
            c.iter().all(|(row, _)| {
                let (_, b) = layout.decode(*row);
                !algebra.basis()[b].is_trivial()
            })
        })
    }

    pub fn is_complex(&self) -> bool {
        (1..self.degrees.len()).all(|n| self.complex_at(n))
    }

    pub fn is_exact(&self) -> bool {
        (0..self.degrees.len()).all(|n| self.exact_at(n))
    }
}

/// Minimal resolution by iterated projective covers: the top of a module `M`
/// is `M / M·rad`, the cover sends `e_v` to a lift of each top basis vector,
/// and the syzygy is the kernel.
pub fn minimal_resolution<F: Field>(algebra: &AlgebraTable<F>, module: &RightModule<F>, max_degree: usize) -> Result<OneSidedResolution<F>> {
    let f = algebra.field();
    let mut ambient = module.clone();
    let mut sub: Vec<SparseVec<F::Elem>> = (0..module.dim()).map(|k| vec![(k, f.one())]).collect();
    let mut degrees = Vec::with_capacity(max_degree + 1);
    for _ in 0..=max_degree {
        let generators = top_generators(algebra, &ambient, &sub);
        let vertices: Vec<VertexId> = generators.iter().map(|(v, _)| *v).collect();
        let layout = FreeLayout::new(algebra, &vertices);
        let columns = (0..layout.dim)
            .map(|k| {
                let (t, b) = layout.decode(k);
                ambient.act(&generators[t].1, b)
            })
            .collect();
        let map = LinearMap::from_columns(f.clone(), ambient.dim(), columns);
        sub = map.kernel_basis();
        ambient = RightModule::projective(algebra, &vertices)?;
        degrees.push(OneSidedDegree { vertices, map });
    }
    Ok(OneSidedResolution {
        degrees,
        module_dim: module.dim(),
    })
}

/// Vertex-homogeneous vectors of the submodule spanned by `sub` that lift a basis of its top.
fn top_generators<F: Field>(algebra: &AlgebraTable<F>, ambient: &RightModule<F>, sub: &[SparseVec<F::Elem>]) -> Vec<(VertexId, SparseVec<F::Elem>)> {
    let mut span = Span::new(algebra.field().clone());
    for m in sub {
        for x in algebra.radical_basis() {
            span.insert(&ambient.act(m, x));
        }
    }
    let mut out = Vec::new();
    for v in 0..algebra.num_vertices() {
        let e = algebra.idempotent(v);
        for m in sub {
            let w = ambient.act(m, e);
            if span.insert(&w) {
                out.push((v, w));
            }
        }
    }
    out
}

/// `dim Ext^n(S_i, S_j)` for all vertex pairs, read off minimal resolutions of the simples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtTable {
    pub max_degree: usize,
    /// `(i, j) -> [dim Ext^0, ..., dim Ext^max]`, 0-based vertex ids.
    pub dims: BTreeMap<(VertexId, VertexId), Vec<usize>>,
}

impl ExtTable {
    pub fn compute<F: Field>(algebra: &AlgebraTable<F>, max_degree: usize) -> Result<Self> {
        let m = algebra.num_vertices();
        let mut dims = BTreeMap::new();
        for i in 0..m {
            let res = minimal_resolution(algebra, &RightModule::simple(algebra, i)?, max_degree)?;
            for j in 0..m {
                dims.insert((i, j), (0..=max_degree).map(|n| res.multiplicity(n, j)).collect());
            }
        }
        Ok(ExtTable { max_degree, dims })
    }

    pub fn ext_dim(&self, i: VertexId, j: VertexId, n: usize) -> Result<usize> {
        if n > self.max_degree {
            return Err(Error::DegreeOutOfRange {
                requested: n,
                max: self.max_degree,
            });
        }
        self.dims
            .get(&(i, j))
            .map(|d| d[n])
            .ok_or_else(|| Error::UnknownVertex(format!("({i}, {j})")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{PrimeField, Rationals};
    use crate::path_algebra::QuiverPresentation;

    #[test]
    fn simple_one_starts_with_arrows() {
        let a = AlgebraTable::build(&QuiverPresentation::hecke(), Rationals).unwrap();
        let r = minimal_resolution(&a, &RightModule::simple(&a, 0).unwrap(), 6).unwrap();
        assert_eq!(r.degrees[0].vertices, [0]);
        assert_eq!(r.degrees[1].vertices, [0, 1]);
        assert!(r.is_complex());
        assert!(r.is_exact());
    }

    #[test]
    fn projectives_have_no_syzygy() {
        let a = AlgebraTable::build(&QuiverPresentation::hecke(), Rationals).unwrap();
        let r = minimal_resolution(&a, &RightModule::projective(&a, &[0]).unwrap(), 3).unwrap();
        assert_eq!(r.degrees[0].vertices, [0]);
        assert!(r.degrees[1..].iter().all(|d| d.vertices.is_empty()));
    }

    #[test]
    fn ext_small_values() {
        let a = AlgebraTable::build(&QuiverPresentation::hecke(), PrimeField::new(3).unwrap()).unwrap();
        let t = ExtTable::compute(&a, 8).unwrap();
        assert_eq!(t.ext_dim(0, 0, 3).unwrap(), 2);
        assert_eq!(t.ext_dim(1, 1, 1).unwrap(), 0);
        assert_eq!(t.ext_dim(0, 1, 1).unwrap(), 1);
        assert_eq!(t.ext_dim(0, 0, 7).unwrap(), 4);
        assert!(t.ext_dim(0, 0, 9).is_err());
    }
}
