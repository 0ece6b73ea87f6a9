use crate::linalg::{sparse, Field, SparseVec};
use crate::path_algebra::{AlgebraTable, VertexId};

/// `A^e = A^op ⊗ A` as a bare multiplication table on basis pairs `(a, b)`,
/// with `(a ⊗ b)(a' ⊗ b') = (a'a) ⊗ (bb')`. Right `A^e`-modules are
/// `A`-bimodules via `m·(a ⊗ b) = a·m·b`.
#[derive(Clone, Debug)]
pub struct EnvelopingAlgebra<F: Field> {
    algebra: AlgebraTable<F>,
    n: usize,
    table: Vec<Vec<SparseVec<F::Elem>>>,
}

impl<F: Field> EnvelopingAlgebra<F> {
    pub fn new(algebra: &AlgebraTable<F>) -> Self {
        let n = algebra.dim();
        let f = algebra.field();
        let table = (0..n * n)
            .map(|p| {
                let (a, b) = (p / n, p % n);
                (0..n * n)
                    .map(|q| {
                        let (a2, b2) = (q / n, q % n);
                        let left = algebra.mul_basis(a2, a);
                        let right = algebra.mul_basis(b, b2);
                        let mut entries = Vec::with_capacity(left.len() * right.len());
                        for (x, c) in left {
                            for (y, d) in right {
                                entries.push((x * n + y, f.mul(c, d)));
                            }
                        }
                        sparse::from_entries(f, entries)
                    })
                    .collect()
            })
            .collect();
        EnvelopingAlgebra {
            algebra: algebra.clone(),
            n,
            table,
        }
    }

    pub fn algebra(&self) -> &AlgebraTable<F> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.n * self.n
    }

    pub fn pair(&self, a: usize, b: usize) -> usize {
        a * self.n + b
    }

    pub fn split(&self, p: usize) -> (usize, usize) {
        (p / self.n, p % self.n)
    }

    pub fn mul_basis(&self, p: usize, q: usize) -> &[(usize, F::Elem)] {
        &self.table[p][q]
    }

    pub fn idempotent(&self, i: VertexId, j: VertexId) -> usize {
        self.pair(self.algebra.idempotent(i), self.algebra.idempotent(j))
    }

    pub fn unit(&self) -> SparseVec<F::Elem> {
        let f = self.algebra.field();
        let m = self.algebra.num_vertices();
        let entries = (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).map(|(i, j)| (self.idempotent(i, j), f.one())).collect();
        sparse::from_entries(f, entries)
    }

    /// Basis pairs of `(e_i ⊗ e_j)A^e`: `a` ends at `i`, `b` starts at `j`.
    pub fn projective_basis(&self, i: VertexId, j: VertexId) -> Vec<usize> {
        let e = self.idempotent(i, j);
        (0..self.dim()).filter(|&p| self.table[e][p] == [(p, self.algebra.field().one())]).collect()
    }

    /// Generators of the radical as a right ideal: `arrow ⊗ 1` and `1 ⊗ arrow`,
    /// spread over idempotents so that each is a single basis pair.
    pub fn radical_generators(&self) -> Vec<usize> {
        let a = &self.algebra;
        let arrows: Vec<usize> = a.radical_basis().into_iter().filter(|&x| a.basis()[x].len() == 1).collect();
        let idempotents: Vec<usize> = (0..a.num_vertices()).map(|v| a.idempotent(v)).collect();
        let mut out = Vec::new();
        for &x in &arrows {
            for &e in &idempotents {
                out.push(self.pair(x, e));
                out.push(self.pair(e, x));
            }
        }
        out
    }

    /// All `e_i ⊗ e_j` and the radical generators; they generate `A^e` as an algebra.
    pub fn algebra_generators(&self) -> Vec<usize> {
        let m = self.algebra.num_vertices();
        let mut out: Vec<usize> = (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).map(|(i, j)| self.idempotent(i, j)).collect();
        out.extend(self.radical_generators());
        out
    }

    pub fn check_associative(&self) -> bool {
        let f = self.algebra.field();
        let d = self.dim();
        (0..d).all(|p| {
            (0..d).all(|q| {
                (0..d).all(|r| {
                    let mut left = Vec::new();
                    for (s, c) in &self.table[p][q] {
                        left = sparse::axpy(f, c, &self.table[*s][r], &left);
                    }
                    let mut right = Vec::new();
                    for (s, c) in &self.table[q][r] {
                        right = sparse::axpy(f, c, &self.table[p][*s], &right);
                    }
                    left == right
                })
            })
        })
    }
}

/// `A` as a right `A^e`-module.
#[derive(Clone, Debug)]
pub struct RegularBimodule<'a, F: Field> {
    env: &'a EnvelopingAlgebra<F>,
}

impl<'a, F: Field> RegularBimodule<'a, F> {
    pub fn new(env: &'a EnvelopingAlgebra<F>) -> Self {
        RegularBimodule { env }
    }

    pub fn dim(&self) -> usize {
        self.env.algebra().dim()
    }

    /// `x·(a ⊗ b) = a·x·b`.
    pub fn act(&self, x: &[(usize, F::Elem)], p: usize) -> SparseVec<F::Elem> {
        let a = self.env.algebra();
        let (l, r) = self.env.split(p);
        let lx = a.mul_vec(&[(l, a.field().one())], x);
        a.mul_vec(&lx, &[(r, a.field().one())])
    }

    /// `(x·p)·q = x·(pq)` on every basis triple.
    pub fn check_action(&self) -> bool {
        let f = self.env.algebra().field();
        let d = self.env.dim();
        (0..self.dim()).all(|x| {
            let m = [(x, f.one())];
            (0..d).all(|p| {
                let mp = self.act(&m, p);
                (0..d).all(|q| {
                    let lhs = self.act(&mp, q);
                    let mut rhs = Vec::new();
                    for (s, c) in self.env.mul_basis(p, q) {
                        rhs = sparse::axpy(f, c, &self.act(&m, *s), &rhs);
                    }
                    lhs == rhs
                })
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{PrimeField, Rationals};
    use crate::path_algebra::{Path, QuiverPresentation};

    #[test]
    fn dimensions_and_projectives() {
        let a = AlgebraTable::build(&QuiverPresentation::hecke(), Rationals).unwrap();
        let env = EnvelopingAlgebra::new(&a);
        assert_eq!(env.dim(), 121);
        let dims: Vec<usize> = [(0, 0), (0, 1), (1, 0), (1, 1)].iter().map(|&(i, j)| env.projective_basis(i, j).len()).collect();
        assert_eq!(dims, [36, 30, 30, 25]);
        let f = a.field();
        let unit = env.unit();
        for p in 0..env.dim() {
            let mut prod = Vec::new();
            for (u, c) in &unit {
                prod = sparse::axpy(f, c, env.mul_basis(*u, p), &prod);
            }
            assert_eq!(prod, vec![(p, f.one())]);
        }
    }

    #[test]
    fn op_twist_and_action() {
        let a = AlgebraTable::build(&QuiverPresentation::hecke(), PrimeField::new(3).unwrap()).unwrap();
        let env = EnvelopingAlgebra::new(&a);
        let q = a.quiver();
        let idx = |name: &str| a.index_of(&Path::arrow(q, q.arrow_id(name).unwrap())).unwrap();
        let (alpha, beta) = (idx("alpha"), idx("beta"));
        let e1 = a.idempotent(0);
        let beta_alpha = Path::arrow(q, q.arrow_id("beta").unwrap()).concat(&Path::arrow(q, q.arrow_id("alpha").unwrap())).unwrap();
        // (alpha ⊗ e1)(beta ⊗ e1) = (beta·alpha) ⊗ e1.
        let expected = vec![(env.pair(a.index_of(&beta_alpha).unwrap(), e1), a.field().one())];
        assert_eq!(env.mul_basis(env.pair(alpha, e1), env.pair(beta, e1)), expected);
        let m = RegularBimodule::new(&env);
        let one = a.unit().coeffs;
        for x in 0..a.dim() {
            for y in 0..a.dim() {
                let mut via = Vec::new();
                for (u, c) in &one {
                    via = sparse::axpy(a.field(), c, &m.act(&[(x, a.field().one())], env.pair(y, *u)), &via);
                }
                assert_eq!(via, a.mul_basis(y, x).to_vec());
            }
        }
    }

    #[test]
    fn regular_bimodule_is_a_module() {
        let a = AlgebraTable::build(&QuiverPresentation::hecke(), PrimeField::new(2).unwrap()).unwrap();
        let env = EnvelopingAlgebra::new(&a);
        assert!(RegularBimodule::new(&env).check_action());
    }
}
