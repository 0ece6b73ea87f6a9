use std::collections::BTreeMap;

use super::field::Field;
use super::sparse::{self, SparseVec};

/// Incrementally maintained echelon basis of a subspace.
#[derive(Clone, Debug)]
pub struct Span<F: Field> {
    field: F,
    /// leading column -> row normalized to leading coefficient 1
    pivots: BTreeMap<usize, SparseVec<F::Elem>>,
}

impl<F: Field> Span<F> {
    pub fn new(field: F) -> Self {
        Span {
            field,
            pivots: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Remainder of `v` after reduction against the current basis.
    pub fn reduce(&self, v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        let mut v = v.to_vec();
        let mut start = 0;
        while start < v.len() {
            let (lead, coeff) = v[start].clone();
            match self.pivots.get(&lead) {
                Some(row) => {
                    v = sparse::axpy(&self.field, &self.field.neg(&coeff), row, &v);
                    start = v.partition_point(|e| e.0 < lead);
                }
                None => start += 1,
            }
        }
        v
    }

    pub fn contains(&self, v: &[(usize, F::Elem)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[(usize, F::Elem)]) -> bool {
        let r = self.reduce(v);
        match r.first() {
            None => false,
            Some((lead, coeff)) => {
                let lead = *lead;
                let inv = self.field.inv(coeff);
                self.pivots.insert(lead, sparse::scale(&self.field, &inv, &r));
                true
            }
        }
    }

    pub fn basis(&self) -> impl Iterator<Item = &SparseVec<F::Elem>> {
        self.pivots.values()
    }
}
