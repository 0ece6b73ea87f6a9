use std::collections::{BTreeMap, BTreeSet};

use super::field::Field;
use super::sparse::{self, SparseVec};
use crate::error::Error;

/// An exact matrix `codomain_dim x domain_dim`, stored as sparse columns
/// (column `c` is the image of the `c`-th domain basis vector).
#[derive(Clone, Debug)]
pub struct LinearMap<F: Field> {
    field: F,
    domain_dim: usize,
    codomain_dim: usize,
    columns: Vec<SparseVec<F::Elem>>,
    pub domain_labels: Option<Vec<String>>,
    pub codomain_labels: Option<Vec<String>>,
}

impl<F: Field> LinearMap<F> {
    pub fn zero(field: F, codomain_dim: usize, domain_dim: usize) -> Self {
        LinearMap {
            field,
            domain_dim,
            codomain_dim,
            columns: vec![Vec::new(); domain_dim],
            domain_labels: None,
            codomain_labels: None,
        }
    }

    pub fn identity(field: F, dim: usize) -> Self {
        let one = field.one();
        let columns = (0..dim).map(|i| vec![(i, one.clone())]).collect();
        LinearMap {
            field,
            domain_dim: dim,
            codomain_dim: dim,
            columns,
            domain_labels: None,
            codomain_labels: None,
        }
    }

    /// Columns must be sorted sparse vectors with indices below `codomain_dim`.
    pub fn from_columns(field: F, codomain_dim: usize, columns: Vec<SparseVec<F::Elem>>) -> Self {
        debug_assert!(columns
            .iter()
            .all(|c| c.iter().all(|(i, _)| *i < codomain_dim) && c.windows(2).all(|w| w[0].0 < w[1].0)));
        LinearMap {
            field,
            domain_dim: columns.len(),
            codomain_dim,
            columns,
            domain_labels: None,
            codomain_labels: None,
        }
    }

    /// Builds a map from a dense row-major matrix with `domain_dim` columns.
    pub fn from_rows(field: F, domain_dim: usize, rows: &[Vec<F::Elem>]) -> Self {
        let mut columns = vec![Vec::new(); domain_dim];
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), domain_dim, "ragged matrix");
            for (c, v) in row.iter().enumerate() {
                if !field.is_zero(v) {
                    columns[c].push((r, v.clone()));
                }
            }
        }
        LinearMap::from_columns(field, rows.len(), columns)
    }

    pub fn with_labels(mut self, domain: Vec<String>, codomain: Vec<String>) -> Self {
        assert_eq!(domain.len(), self.domain_dim);
        assert_eq!(codomain.len(), self.codomain_dim);
        self.domain_labels = Some(domain);
        self.codomain_labels = Some(codomain);
        self
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn domain_dim(&self) -> usize {
        self.domain_dim
    }

    pub fn codomain_dim(&self) -> usize {
        self.codomain_dim
    }

    pub fn column(&self, c: usize) -> &[(usize, F::Elem)] {
        &self.columns[c]
    }

    pub fn columns(&self) -> &[SparseVec<F::Elem>] {
        &self.columns
    }

    pub fn entry(&self, row: usize, col: usize) -> F::Elem {
        sparse::get(&self.field, &self.columns[col], row)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }

    pub fn rows(&self) -> Vec<SparseVec<F::Elem>> {
        let mut rows = vec![Vec::new(); self.codomain_dim];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                rows[*r].push((c, v.clone()));
            }
        }
        rows
    }

    pub fn transpose(&self) -> Self {
        LinearMap::from_columns(self.field.clone(), self.domain_dim, self.rows())
    }

    pub fn apply(&self, v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        let mut acc = Vec::new();
        for (c, a) in v {
            acc = sparse::axpy(&self.field, a, &self.columns[*c], &acc);
        }
        acc
    }

    /// Rank over the field, by forward elimination with deterministic pivots.
    pub fn rank(&self) -> usize {
        // rank(M) = rank(M^T): eliminate the stored columns directly.
        Echelon::forward(&self.field, self.columns.clone()).rank()
    }

    /// Basis of the null space, one vector per non-pivot column of the reduced
    /// row echelon form.
    pub fn kernel_basis(&self) -> Vec<SparseVec<F::Elem>> {
        let ech = Echelon::reduced(&self.field, self.rows());
        let basis = ech.null_space(&self.field, self.domain_dim);
        assert_eq!(ech.rank() + basis.len(), self.domain_dim, "rank-nullity violated");
        basis
    }

    pub fn kernel_dim(&self) -> usize {
        self.domain_dim - self.rank()
    }

    /// Dense version of [`Self::kernel_basis`].
    pub fn kernel_basis_dense(&self) -> Vec<Vec<F::Elem>> {
        self.kernel_basis()
            .iter()
            .map(|v| sparse::to_dense(&self.field, v, self.domain_dim))
            .collect()
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &LinearMap<F>) -> Result<LinearMap<F>, Error> {
        if g.codomain_dim != self.domain_dim {
            return Err(Error::DimensionMismatch {
                expected: self.domain_dim,
                found: g.codomain_dim,
            });
        }
        let columns = g.columns.iter().map(|col| self.apply(col)).collect();
        let mut out = LinearMap::from_columns(self.field.clone(), self.codomain_dim, columns);
        out.domain_labels = g.domain_labels.clone();
        out.codomain_labels = self.codomain_labels.clone();
        Ok(out)
    }

    /// A solution `x` of `self * x = b`, if one exists.
    pub fn solve(&self, b: &[(usize, F::Elem)]) -> Option<SparseVec<F::Elem>> {
        let mut rows = self.rows();
        let rhs = self.domain_dim;
        for (r, v) in b {
            rows[*r].push((rhs, v.clone()));
        }
        let ech = Echelon::reduced(&self.field, rows);
        if ech.pivots.contains(&rhs) {
            return None;
        }
        let x = ech
            .pivots
            .iter()
            .zip(&ech.rows)
            .filter_map(|(p, row)| {
                let v = sparse::get(&self.field, row, rhs);
                (!self.field.is_zero(&v)).then_some((*p, v))
            })
            .collect();
        Some(x)
    }
}

/// Row echelon form produced by Gaussian elimination. Pivot for column `c` is
/// the lowest-index remaining row whose leading entry sits in column `c`.
pub(crate) struct Echelon<E> {
    /// Normalized pivot rows (leading coefficient 1), in increasing pivot order.
    pub rows: Vec<SparseVec<E>>,
    pub pivots: Vec<usize>,
}

impl<E: Clone> Echelon<E> {
    pub fn forward<F: Field<Elem = E>>(field: &F, rows: Vec<SparseVec<E>>) -> Self {
        let mut queue: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut store: Vec<SparseVec<E>> = rows;
        for (i, r) in store.iter().enumerate() {
            if let Some((c, _)) = r.first() {
                queue.insert((*c, i));
            }
        }
        let mut pivot_rows = Vec::new();
        let mut pivots = Vec::new();
        while let Some((col, idx)) = queue.pop_first() {
            let mut pivot = std::mem::take(&mut store[idx]);
            let inv = field.inv(&pivot[0].1);
            pivot = sparse::scale(field, &inv, &pivot);
            while let Some(&(c, j)) = queue.first() {
                if c != col {
                    break;
                }
                queue.pop_first();
                let factor = field.neg(&store[j][0].1);
                let reduced = sparse::axpy(field, &factor, &pivot, &store[j]);
                if let Some((lead, _)) = reduced.first() {
                    queue.insert((*lead, j));
                }
                store[j] = reduced;
            }
            pivots.push(col);
            pivot_rows.push(pivot);
        }
        Echelon {
            rows: pivot_rows,
            pivots,
        }
    }

    pub fn reduced<F: Field<Elem = E>>(field: &F, rows: Vec<SparseVec<E>>) -> Self {
        let mut ech = Self::forward(field, rows);
        for k in (0..ech.rows.len()).rev() {
            let col = ech.pivots[k];
            let (head, tail) = ech.rows.split_at_mut(k);
            let pivot = &tail[0];
            for row in head.iter_mut() {
                let v = sparse::get(field, row, col);
                if !field.is_zero(&v) {
                    *row = sparse::axpy(field, &field.neg(&v), pivot, row);
                }
            }
        }
        ech
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Null space of a matrix in reduced row echelon form with `ncols` columns.
    pub fn null_space<F: Field<Elem = E>>(&self, field: &F, ncols: usize) -> Vec<SparseVec<E>> {
        let pivot_set: BTreeSet<usize> = self.pivots.iter().copied().collect();
        let mut by_free: BTreeMap<usize, Vec<(usize, E)>> = BTreeMap::new();
        for (p, row) in self.pivots.iter().zip(&self.rows) {
            for (c, v) in row.iter().skip(1) {
                by_free.entry(*c).or_default().push((*p, field.neg(v)));
            }
        }
        (0..ncols)
            .filter(|c| !pivot_set.contains(c))
            .map(|f| {
                let mut entries = by_free.remove(&f).unwrap_or_default();
                entries.push((f, field.one()));
                sparse::from_entries(field, entries)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{PrimeField, Rationals};

    fn q_rows(rows: &[&[i64]]) -> LinearMap<Rationals> {
        let q = Rationals;
        let dense: Vec<Vec<_>> = rows.iter().map(|r| r.iter().map(|v| q.from_i64(*v)).collect()).collect();
        LinearMap::from_rows(q, rows[0].len(), &dense)
    }

    #[test]
    fn zero_and_identity_ranks() {
        assert_eq!(LinearMap::zero(Rationals, 3, 3).rank(), 0);
        assert_eq!(LinearMap::identity(Rationals, 5).rank(), 5);
        assert!(LinearMap::identity(Rationals, 5).kernel_basis().is_empty());
        assert_eq!(LinearMap::zero(Rationals, 2, 4).kernel_basis().len(), 4);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = q_rows(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        assert_eq!(m.rank(), 2);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(m.apply(v).is_empty());
        }
    }

    #[test]
    fn rank_depends_on_characteristic() {
        let f2 = PrimeField::new(2).unwrap();
        let rows = vec![vec![1, 1], vec![1, f2.from_i64(-1)]];
        assert_eq!(LinearMap::from_rows(f2, 2, &rows).rank(), 1);
        assert_eq!(q_rows(&[&[1, 1], &[1, -1]]).rank(), 2);
    }

    #[test]
    fn compose_checks_dimensions() {
        let m = q_rows(&[&[1, 2], &[3, 4], &[5, 6]]);
        let id = LinearMap::identity(Rationals, 3);
        let c = id.compose(&m).unwrap();
        assert_eq!(c.rows(), m.rows());
        assert!(m.compose(&m).is_err());
        let z = LinearMap::zero(Rationals, 4, 3).compose(&m).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn solve_finds_preimage() {
        let q = Rationals;
        let m = q_rows(&[&[2, 0], &[0, 3]]);
        let x = m.solve(&[(0, q.from_i64(1)), (1, q.from_i64(1))]).unwrap();
        assert_eq!(m.apply(&x), vec![(0, q.from_i64(1)), (1, q.from_i64(1))]);
        let singular = q_rows(&[&[1, 1], &[1, 1]]);
        assert!(singular.solve(&[(0, q.from_i64(1))]).is_none());
    }
}
