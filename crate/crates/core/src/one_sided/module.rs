use crate::error::{Error, Result};
use crate::linalg::{sparse, Field, LinearMap, SparseVec};
use crate::path_algebra::{AlgebraTable, VertexId};

/// A finite-dimensional right module, given by the action of every algebra
/// basis element: `action[x]` sends the coordinate vector of `m` to `m·x`.
#[derive(Clone, Debug)]
pub struct RightModule<F: Field> {
    dim: usize,
    action: Vec<LinearMap<F>>,
}

impl<F: Field> RightModule<F> {
    pub fn new(algebra: &AlgebraTable<F>, dim: usize, action: Vec<LinearMap<F>>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                found: action.len(),
            });
        }
        if let Some(m) = action.iter().find(|m| m.domain_dim() != dim || m.codomain_dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: m.domain_dim().max(m.codomain_dim()),
            });
        }
        Ok(RightModule { dim, action })
    }

    /// The simple module `S_i`.
    pub fn simple(algebra: &AlgebraTable<F>, i: VertexId) -> Result<Self> {
        if i >= algebra.num_vertices() {
            return Err(Error::UnknownVertex(i.to_string()));
        }
        let f = algebra.field();
        let e = algebra.idempotent(i);
        let action = (0..algebra.dim())
            .map(|x| {
                if x == e {
                    LinearMap::identity(f.clone(), 1)
                } else {
                    LinearMap::zero(f.clone(), 1, 1)
                }
            })
            .collect();
        Self::new(algebra, 1, action)
    }

    /// The direct sum of modules.
    pub fn direct_sum(algebra: &AlgebraTable<F>, parts: &[RightModule<F>]) -> Result<Self> {
        let f = algebra.field();
        let dim = parts.iter().map(|p| p.dim).sum();
        let action = (0..algebra.dim())
            .map(|x| {
                let mut columns = Vec::with_capacity(dim);
                let mut offset = 0;
                for p in parts {
                    for c in p.action[x].columns() {
                        columns.push(c.iter().map(|(r, v)| (r + offset, v.clone())).collect());
                    }
                    offset += p.dim;
                }
                LinearMap::from_columns(f.clone(), dim, columns)
            })
            .collect();
        Self::new(algebra, dim, action)
    }

    /// `A / rad A = S_1 ⊕ ... ⊕ S_m`.
    pub fn top_of_algebra(algebra: &AlgebraTable<F>) -> Result<Self> {
        let simples = (0..algebra.num_vertices())
            .map(|v| Self::simple(algebra, v))
            .collect::<Result<Vec<_>>>()?;
        Self::direct_sum(algebra, &simples)
    }

    /// The free module `e_{v_1}A ⊕ ... ⊕ e_{v_r}A`.
    pub fn projective(algebra: &AlgebraTable<F>, vertices: &[VertexId]) -> Result<Self> {
        let layout = FreeLayout::new(algebra, vertices);
        let f = algebra.field();
        let action = (0..algebra.dim())
            .map(|x| {
                let columns = (0..layout.dim)
                    .map(|k| {
                        let (t, b) = layout.decode(k);
                        layout.embed(t, algebra.mul_basis(b, x))
                    })
                    .collect();
                LinearMap::from_columns(f.clone(), layout.dim, columns)
            })
            .collect();
        Self::new(algebra, layout.dim, action)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, x: usize) -> &LinearMap<F> {
        &self.action[x]
    }

    /// `m·x` for an algebra basis element `x`.
    pub fn act(&self, m: &[(usize, F::Elem)], x: usize) -> SparseVec<F::Elem> {
        self.action[x].apply(m)
    }

    /// `m·a` for an arbitrary algebra element.
    pub fn act_vec(&self, field: &F, m: &[(usize, F::Elem)], a: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        let mut out = Vec::new();
        for (x, c) in a {
            out = sparse::axpy(field, c, &self.act(m, *x), &out);
        }
        out
    }

    /// Checks `(m·x)·y = m·(xy)` on all basis pairs and that the unit acts as the identity.
    pub fn check_action(&self, algebra: &AlgebraTable<F>) -> bool {
        let f = algebra.field();
        for x in 0..algebra.dim() {
            for y in 0..algebra.dim() {
                let lhs = self.action[y].compose(&self.action[x]).expect("square maps");
                for k in 0..self.dim {
                    let m = [(k, f.one())];
                    if lhs.apply(&m) != self.act_vec(f, &m, algebra.mul_basis(x, y)) {
                        return false;
                    }
                }
            }
        }
        (0..self.dim).all(|k| {
            let m = [(k, f.one())];
            self.act_vec(f, &m, &algebra.unit().coeffs) == m.to_vec()
        })
    }
}

/// Coordinates of `e_{v_1}A ⊕ ... ⊕ e_{v_r}A`: pairs `(summand, basis path starting at v_t)`.
#[derive(Clone, Debug)]
pub(crate) struct FreeLayout {
    offsets: Vec<usize>,
    bases: Vec<Vec<usize>>,
    /// For every summand, algebra basis index -> local position.
    positions: Vec<Vec<Option<usize>>>,
    pub dim: usize,
}

impl FreeLayout {
    pub fn new<F: Field>(algebra: &AlgebraTable<F>, vertices: &[VertexId]) -> Self {
        let mut offsets = Vec::new();
        let mut bases = Vec::new();
        let mut positions = Vec::new();
        let mut dim = 0;
        for &v in vertices {
            let basis = algebra.starting_at(v);
            let mut pos = vec![None; algebra.dim()];
            for (k, &b) in basis.iter().enumerate() {
                pos[b] = Some(k);
            }
            offsets.push(dim);
            dim += basis.len();
            bases.push(basis);
            positions.push(pos);
        }
        FreeLayout {
            offsets,
            bases,
            positions,
            dim,
        }
    }

    pub fn decode(&self, k: usize) -> (usize, usize) {
        let t = self.offsets.partition_point(|&o| o <= k) - 1;
        (t, self.bases[t][k - self.offsets[t]])
    }

    /// Places an algebra element lying in `e_{v_t}A` into summand `t`.
    pub fn embed<E: Clone>(&self, t: usize, x: &[(usize, E)]) -> SparseVec<E> {
        x.iter()
            .map(|(b, c)| {
                let local = self.positions[t][*b].expect("element lies in e_vA");
                (self.offsets[t] + local, c.clone())
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{PrimeField, Rationals};
    use crate::path_algebra::{Path, QuiverPresentation};

    #[test]
    fn simples_and_projectives_are_modules() {
        let a = AlgebraTable::build(&QuiverPresentation::hecke(), Rationals).unwrap();
        let s1 = RightModule::simple(&a, 0).unwrap();
        assert_eq!(s1.dim(), 1);
        assert!(s1.check_action(&a));
        let eps = a.index_of(&Path::arrow(a.quiver(), a.quiver().arrow_id("eps").unwrap())).unwrap();
        assert!(s1.action(eps).is_zero());
        assert!(RightModule::simple(&a, 5).is_err());
        let p = RightModule::projective(&a, &[0, 1]).unwrap();
        assert_eq!(p.dim(), 11);
        assert!(p.check_action(&a));
        let f2 = AlgebraTable::build(&QuiverPresentation::hecke(), PrimeField::new(2).unwrap()).unwrap();
        assert!(RightModule::top_of_algebra(&f2).unwrap().check_action(&f2));
    }
}
