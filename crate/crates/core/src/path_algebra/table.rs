use std::collections::HashMap;

use super::path::{format_terms, FreeElement, Path, Quiver, VertexId};
use super::presentation::QuiverPresentation;
use crate::error::{Error, Result};
use crate::linalg::{sparse, Echelon, Field, LinearMap, SparseVec};

/// Element of the quotient algebra: sparse coefficients on the normal-form basis.
#[derive(Clone, Debug)]
pub struct AlgebraElement<F: Field> {
    pub coeffs: SparseVec<F::Elem>,
}

impl<F: Field> PartialEq for AlgebraElement<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<F: Field> AlgebraElement<F> {
    pub fn zero() -> Self {
        AlgebraElement { coeffs: Vec::new() }
    }

    pub fn basis(field: &F, index: usize) -> Self {
        AlgebraElement {
            coeffs: vec![(index, field.one())],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Finite-dimensional quotient `KQ/I` with a normal-form basis and a full
/// multiplication table.
#[derive(Clone, Debug)]
pub struct AlgebraTable<F: Field> {
    field: F,
    presentation: QuiverPresentation,
    basis: Vec<Path>,
    /// Normal form of every path of length `< radical_degree`.
    normal_forms: HashMap<Path, SparseVec<F::Elem>>,
    /// `mult[a][b]` is the normal form of `basis[a] * basis[b]`.
    mult: Vec<Vec<SparseVec<F::Elem>>>,
    radical_degree: usize,
}

/// Quotient of paths of length `< n` by the ideal plus `J^n`.
struct Truncation<F: Field> {
    basis: Vec<Path>,
    normal_forms: HashMap<Path, SparseVec<F::Elem>>,
}

fn truncate<F: Field>(field: &F, p: &QuiverPresentation, n: usize) -> Truncation<F> {
    let quiver = &p.quiver;
    let paths = quiver.paths_shorter_than(n);
    // Columns are indexed in decreasing path order so that elimination pivots
    // on leading (largest) paths and the surviving columns are the smallest ones.
    let col_of: HashMap<&Path, usize> = paths.iter().rev().enumerate().map(|(c, q)| (q, c)).collect();

    let mut generators: Vec<SparseVec<F::Elem>> = Vec::new();
    for rel in &p.relations {
        let (s, t) = rel.uniform_endpoints().expect("relations are uniform");
        let min_len = rel.min_len().unwrap_or(0);
        let lefts: Vec<&Path> = paths.iter().filter(|u| u.target == s).collect();
        let rights: Vec<&Path> = paths.iter().filter(|w| w.source == t).collect();
        for u in &lefts {
            for w in &rights {
                if u.len() + w.len() + min_len >= n {
                    continue;
                }
                let mut entries = Vec::new();
                for (path, c) in &rel.terms {
                    let full = u.concat(path).and_then(|x| x.concat(w)).expect("composable");
                    if let Some(col) = col_of.get(&full) {
                        entries.push((*col, field.from_i64(*c)));
                    }
                }
                let v = sparse::from_entries(field, entries);
                if !v.is_empty() {
                    generators.push(v);
                }
            }
        }
    }

    let ech = Echelon::reduced(field, generators);
    let rev: Vec<&Path> = paths.iter().rev().collect();
    let mut pivot_row = HashMap::new();
    for (k, c) in ech.pivots.iter().enumerate() {
        pivot_row.insert(*c, k);
    }
    let mut basis: Vec<Path> = paths.iter().filter(|q| !pivot_row.contains_key(&col_of[q])).cloned().collect();
    basis.sort();
    let basis_index: HashMap<&Path, usize> = basis.iter().enumerate().map(|(i, q)| (q, i)).collect();

    let mut normal_forms = HashMap::new();
    for q in &paths {
        let c = col_of[q];
        let nf = match pivot_row.get(&c) {
            None => vec![(basis_index[q], field.one())],
            Some(&k) => {
                let entries = ech.rows[k]
                    .iter()
                    .skip(1)
                    .map(|(col, v)| (basis_index[rev[*col]], field.neg(v)))
                    .collect();
                sparse::from_entries(field, entries)
            }
        };
        normal_forms.insert(q.clone(), nf);
    }
    Truncation { basis, normal_forms }
}

impl<F: Field> AlgebraTable<F> {
    /// Builds the quotient by increasing the truncation length until the
    /// dimension stabilizes; that length is the radical degree.
    pub fn build(presentation: &QuiverPresentation, field: F) -> Result<Self> {
        for (k, rel) in presentation.relations.iter().enumerate() {
            if rel.min_len().unwrap_or(0) < 2 {
                return Err(Error::Presentation(format!(
                    "relation {} has a term of length < 2; the ideal is not admissible",
                    k + 1
                )));
            }
        }
        let q = &presentation.quiver;
        let bound = 2 * (q.arrows.len() + presentation.relations.len() + 4);
        let mut prev = truncate(&field, presentation, 1);
        for n in 1..=bound {
            let next = truncate(&field, presentation, n + 1);
            if next.basis.len() == prev.basis.len() {
                return Ok(Self::from_truncation(presentation.clone(), field, prev, n));
            }
            prev = next;
        }
        Err(Error::NotFiniteDimensional { bound })
    }

    fn from_truncation(presentation: QuiverPresentation, field: F, t: Truncation<F>, radical_degree: usize) -> Self {
        let dim = t.basis.len();
        let mut mult = vec![vec![Vec::new(); dim]; dim];
        for (a, pa) in t.basis.iter().enumerate() {
            for (b, pb) in t.basis.iter().enumerate() {
                if let Some(pq) = pa.concat(pb) {
                    if let Some(nf) = t.normal_forms.get(&pq) {
                        mult[a][b] = nf.clone();
                    }
                }
            }
        }
        let table = AlgebraTable {
            field,
            presentation,
            basis: t.basis,
            normal_forms: t.normal_forms,
            mult,
            radical_degree,
        };
        debug_assert!(table.check_associative());
        table
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn presentation(&self) -> &QuiverPresentation {
        &self.presentation
    }

    pub fn quiver(&self) -> &Quiver {
        &self.presentation.quiver
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn radical_degree(&self) -> usize {
        self.radical_degree
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver().vertices.len()
    }

    pub fn index_of(&self, p: &Path) -> Option<usize> {
        self.basis.iter().position(|q| q == p)
    }

    /// Basis index of the trivial path at `v`.
    pub fn idempotent(&self, v: VertexId) -> usize {
        self.index_of(&Path::trivial(v)).expect("trivial paths survive in an admissible quotient")
    }

    /// Basis indices of the radical (non-trivial paths).
    pub fn radical_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.basis[i].is_trivial()).collect()
    }

    /// Product of two basis elements, in normal form.
    pub fn mul_basis(&self, a: usize, b: usize) -> &[(usize, F::Elem)] {
        &self.mult[a][b]
    }

    pub fn multiply(&self, x: &AlgebraElement<F>, y: &AlgebraElement<F>) -> AlgebraElement<F> {
        AlgebraElement {
            coeffs: self.mul_vec(&x.coeffs, &y.coeffs),
        }
    }

    pub fn mul_vec(&self, x: &[(usize, F::Elem)], y: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        let f = &self.field;
        let mut acc = Vec::new();
        for (a, ca) in x {
            for (b, cb) in y {
                let prod = &self.mult[*a][*b];
                if !prod.is_empty() {
                    acc = sparse::axpy(f, &f.mul(ca, cb), prod, &acc);
                }
            }
        }
        acc
    }

    /// Normal form of a single path.
    pub fn reduce_path(&self, p: &Path) -> SparseVec<F::Elem> {
        self.normal_forms.get(p).cloned().unwrap_or_default()
    }

    /// Image of a free element under `KQ -> A`.
    pub fn reduce(&self, x: &FreeElement) -> AlgebraElement<F> {
        let f = &self.field;
        let mut acc = Vec::new();
        for (p, c) in &x.terms {
            let nf = self.reduce_path(p);
            if !nf.is_empty() {
                acc = sparse::axpy(f, &f.from_i64(*c), &nf, &acc);
            }
        }
        AlgebraElement { coeffs: acc }
    }

    pub fn element(&self, p: &Path) -> AlgebraElement<F> {
        AlgebraElement {
            coeffs: self.reduce_path(p),
        }
    }

    pub fn unit(&self) -> AlgebraElement<F> {
        let entries = (0..self.num_vertices()).map(|v| (self.idempotent(v), self.field.one())).collect();
        AlgebraElement {
            coeffs: sparse::from_entries(&self.field, entries),
        }
    }

    /// Basis indices of `e_i A e_j`.
    pub fn slice(&self, i: VertexId, j: VertexId) -> Vec<usize> {
        (0..self.dim())
            .filter(|&b| self.basis[b].source == i && self.basis[b].target == j)
            .collect()
    }

    /// Basis indices of `A e_i` (paths ending at `i`).
    pub fn ending_at(&self, i: VertexId) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.basis[b].target == i).collect()
    }

    /// Basis indices of `e_j A` (paths starting at `j`).
    pub fn starting_at(&self, j: VertexId) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.basis[b].source == j).collect()
    }

    /// `dim e_i A e_j` for all vertex pairs.
    pub fn slice_dims(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        (0..n).map(|i| (0..n).map(|j| self.slice(i, j).len()).collect()).collect()
    }

    /// Exhaustive associativity check on basis triples.
    pub fn check_associative(&self) -> bool {
        let d = self.dim();
        for a in 0..d {
            for b in 0..d {
                let ab = &self.mult[a][b];
                for c in 0..d {
                    let left = self.mul_vec(ab, &[(c, self.field.one())]);
                    let right = self.mul_vec(&[(a, self.field.one())], &self.mult[b][c]);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Checks that `sum e_i` is a two-sided identity.
    pub fn check_unit(&self) -> bool {
        let unit = self.unit();
        (0..self.dim()).all(|b| {
            let x = AlgebraElement::basis(&self.field, b);
            self.multiply(&unit, &x) == x && self.multiply(&x, &unit) == x
        })
    }

    /// Basis of the center, computed as the kernel of `z -> (zb - bz)_b` and
    /// returned in reduced echelon form.
    pub fn center(&self) -> Vec<AlgebraElement<F>> {
        let d = self.dim();
        let f = &self.field;
        let columns = (0..d)
            .map(|z| {
                let mut entries = Vec::new();
                for b in 0..d {
                    for (c, v) in &self.mult[z][b] {
                        entries.push((b * d + c, v.clone()));
                    }
                    for (c, v) in &self.mult[b][z] {
                        entries.push((b * d + c, f.neg(v)));
                    }
                }
                sparse::from_entries(f, entries)
            })
            .collect();
        let commutator = LinearMap::from_columns(f.clone(), d * d, columns);
        let kernel = commutator.kernel_basis();
        Echelon::reduced(f, kernel)
            .rows
            .into_iter()
            .map(|coeffs| AlgebraElement { coeffs })
            .collect()
    }

    pub fn format_element(&self, x: &AlgebraElement<F>) -> String {
        self.format_vec(&x.coeffs)
    }

    pub fn format_vec(&self, x: &[(usize, F::Elem)]) -> String {
        format_terms(x.iter().map(|(i, c)| (self.quiver().format_path(&self.basis[*i]), c.to_string())))
    }

    pub fn format_basis(&self, i: usize) -> String {
        self.quiver().format_path(&self.basis[i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{PrimeField, Rationals};
    use crate::path_algebra::parse::{parse_element, parse_presentation};

    fn hecke() -> AlgebraTable<Rationals> {
        AlgebraTable::build(&QuiverPresentation::hecke(), Rationals).unwrap()
    }

    fn elem(a: &AlgebraTable<Rationals>, s: &str) -> AlgebraElement<Rationals> {
        a.reduce(&parse_element(a.quiver(), s, 0).unwrap())
    }

    #[test]
    fn hecke_basis_and_slices() {
        let a = hecke();
        assert_eq!(a.dim(), 11);
        assert_eq!(a.radical_degree(), 5);
        let names: Vec<String> = (0..a.dim()).map(|i| a.format_basis(i)).collect();
        assert_eq!(
            names,
            [
                "e1",
                "e2",
                "eps",
                "alpha",
                "beta",
                "eps^2",
                "alpha*beta",
                "beta*alpha",
                "alpha*beta*alpha",
                "beta*alpha*beta",
                "beta*alpha*beta*alpha"
            ]
        );
        assert_eq!(a.slice_dims(), vec![vec![4, 2], vec![2, 3]]);
        assert_eq!(a.starting_at(0).len(), 6);
        assert_eq!(a.starting_at(1).len(), 5);
        assert!(a.check_associative());
        assert!(a.check_unit());
    }

    #[test]
    fn hecke_relations_hold() {
        let a = hecke();
        assert!(a.multiply(&elem(&a, "eps"), &elem(&a, "alpha")).is_zero());
        assert_eq!(a.multiply(&elem(&a, "alpha*beta"), &elem(&a, "alpha*beta")), elem(&a, "eps^2"));
        assert_eq!(a.multiply(&elem(&a, "e(1)"), &elem(&a, "eps")), elem(&a, "eps"));
        assert_eq!(elem(&a, "alpha*beta*alpha*beta"), elem(&a, "eps^2"));
        assert!(elem(&a, "beta*alpha*beta*alpha*beta").is_zero());
        assert!(elem(&a, "eps^3").is_zero());
        assert_eq!(a.format_element(&elem(&a, "e(1)")), "e1");
    }

    #[test]
    fn hecke_center() {
        let a = hecke();
        let z: Vec<String> = a.center().iter().map(|x| a.format_element(x)).collect();
        assert_eq!(z, ["e1 + e2", "eps", "eps^2", "alpha*beta + beta*alpha", "beta*alpha*beta*alpha"]);
        let f2 = AlgebraTable::build(&QuiverPresentation::hecke(), PrimeField::new(2).unwrap()).unwrap();
        assert_eq!(f2.center().len(), 5);
    }

    #[test]
    fn base_field_and_truncated_polynomial() {
        let k = AlgebraTable::build(&parse_presentation("vertices: 1\n").unwrap(), Rationals).unwrap();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.format_basis(0), "e1");
        let t = AlgebraTable::build(&QuiverPresentation::truncated_polynomial(4), Rationals).unwrap();
        assert_eq!(t.dim(), 4);
        assert_eq!(t.center().len(), 4);
    }

    #[test]
    fn infinite_dimensional_quotient_is_rejected() {
        let src = "vertices: 1\narrow: x: 1 -> 1\n";
        let p = parse_presentation(src).unwrap();
        assert!(matches!(AlgebraTable::build(&p, Rationals), Err(Error::NotFiniteDimensional { .. })));
        let bad = parse_presentation("vertices: 1\narrow: x: 1 -> 1\nrelation: x - x*x\n").unwrap();
        assert!(matches!(AlgebraTable::build(&bad, Rationals), Err(Error::Presentation(_))));
    }
}
