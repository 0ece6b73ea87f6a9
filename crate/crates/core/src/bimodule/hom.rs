use rayon::prelude::*;

use super::resolution::ExplicitResolution;
use super::term::{resolution_term, HeckeRoles};
use crate::error::{Error, Result};
use crate::linalg::{sparse, Field, LinearMap};
use crate::path_algebra::AlgebraTable;

/// `dim Hom_{A^e}(R_n, A) = sum over summands P_ij of dim e_iAe_j`.
pub fn hom_dim<F: Field>(algebra: &AlgebraTable<F>, roles: &HeckeRoles, n: usize) -> usize {
    resolution_term(n)
        .iter()
        .map(|s| {
            let (i, j) = s.vertices(roles);
            algebra.slice(i, j).len()
        })
        .sum()
}

/// The cochain complex `Hom_{A^e}(R_•, A)`. A cochain assigns to each
/// summand generator `e_i ⊗ e_j` an element of `e_iAe_j`.
#[derive(Clone, Debug)]
pub struct HomComplex<F: Field> {
    /// `dims[n] = dim Hom(R_n, A)`.
    pub dims: Vec<usize>,
    /// `maps[n - 1]` is `Hom(delta_n, A): Hom(R_{n-1}, A) -> Hom(R_n, A)`.
    pub maps: Vec<LinearMap<F>>,
    ranks: Vec<usize>,
}

impl<F: Field> HomComplex<F> {
    pub fn new(res: &ExplicitResolution<F>) -> Self {
        let algebra = res.algebra();
        let roles = res.roles();
        let top = res.max_degree();
        let dims = (0..=top).map(|n| hom_dim(algebra, roles, n)).collect();
        let maps: Vec<LinearMap<F>> = (1..=top).into_par_iter().map(|n| induced_map(res, n)).collect();
        let ranks = maps.par_iter().map(|m| m.rank()).collect();
        HomComplex { dims, maps, ranks }
    }

    pub fn max_degree(&self) -> usize {
        self.dims.len() - 1
    }

    /// Rank of `Hom(delta_n, A)`; zero for `n = 0`.
    pub fn rank(&self, n: usize) -> usize {
        if n == 0 {
            0
        } else {
            self.ranks[n - 1]
        }
    }

    fn check(&self, n: usize) -> Result<()> {
        if n + 1 > self.max_degree() {
            return Err(Error::DegreeOutOfRange {
                requested: n + 1,
                max: self.max_degree(),
            });
        }
        Ok(())
    }

    /// `dim Hom_{A^e}(Omega^n(A), A) = dim ker Hom(delta_{n+1}, A)`.
    pub fn hom_omega_dim(&self, n: usize) -> Result<usize> {
        self.check(n)?;
        Ok(self.dims[n] - self.rank(n + 1))
    }

    /// `dim HH^n(A)` as cohomology of the cochain complex.
    pub fn hh_dim(&self, n: usize) -> Result<usize> {
        Ok(self.hom_omega_dim(n)? - self.rank(n))
    }
}

/// Basis coordinates of `Hom(R_n, A)`: `(summand, algebra basis index)`.
fn hom_basis<F: Field>(res: &ExplicitResolution<F>, n: usize) -> Vec<(usize, usize)> {
    let algebra = res.algebra();
    let term = &res.slices()[n].term;
    let mut out = Vec::new();
    for (s, kind) in term.summands.iter().enumerate() {
        let (i, j) = kind.vertices(res.roles());
        out.extend(algebra.slice(i, j).into_iter().map(|u| (s, u)));
    }
    out
}

/// `gamma -> gamma ∘ delta_n`, evaluated on the generators of `R_n`.
fn induced_map<F: Field>(res: &ExplicitResolution<F>, n: usize) -> LinearMap<F> {
    let algebra = res.algebra();
    let f = algebra.field();
    let source = hom_basis(res, n - 1);
    let target = hom_basis(res, n);
    let previous = &res.slices()[n - 1].term;
    let images = &res.slices()[n].images;
    let columns = source
        .iter()
        .map(|&(s, u)| {
            let mut entries = Vec::new();
            for (t, (_, img)) in images.iter().enumerate() {
                for (idx, c) in &img.coeffs {
                    let (s2, a, b) = previous.triple(*idx);
                    if s2 != s {
                        continue;
                    }
                    let au = algebra.mul_basis(a, u);
                    let value = algebra.mul_vec(au, &[(b, f.one())]);
                    for (w, x) in value {
                        let row = target.iter().position(|&(t2, w2)| t2 == t && w2 == w).expect("value lies in e_iAe_j");
                        entries.push((row, f.mul(c, &x)));
                    }
                }
            }
            sparse::from_entries(f, entries)
        })
        .collect();
    LinearMap::from_columns(f.clone(), target.len(), columns)
}
