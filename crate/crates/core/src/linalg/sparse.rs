use super::field::Field;

/// Sparse vector: `(index, value)` pairs with strictly increasing indices and
/// no stored zeros.
pub type SparseVec<E> = Vec<(usize, E)>;

/// Returns `y + a * x`.
pub fn axpy<F: Field>(field: &F, a: &F::Elem, x: &[(usize, F::Elem)], y: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let xi = x.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let yj = y.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if xi < yj {
            let v = field.mul(a, &x[i].1);
            if !field.is_zero(&v) {
                out.push((xi, v));
            }
            i += 1;
        } else if yj < xi {
            out.push(y[j].clone());
            j += 1;
        } else {
            let v = field.add(&y[j].1, &field.mul(a, &x[i].1));
            if !field.is_zero(&v) {
                out.push((xi, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale<F: Field>(field: &F, a: &F::Elem, x: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
    if field.is_zero(a) {
        return Vec::new();
    }
    x.iter().map(|(i, v)| (*i, field.mul(a, v))).collect()
}

pub fn get<F: Field>(field: &F, x: &[(usize, F::Elem)], index: usize) -> F::Elem {
    match x.binary_search_by_key(&index, |e| e.0) {
        Ok(pos) => x[pos].1.clone(),
        Err(_) => field.zero(),
    }
}

/// Builds a sparse vector from unsorted entries, summing duplicates.
pub fn from_entries<F: Field>(field: &F, mut entries: Vec<(usize, F::Elem)>) -> SparseVec<F::Elem> {
    entries.sort_by_key(|e| e.0);
    let mut out: SparseVec<F::Elem> = Vec::with_capacity(entries.len());
    for (i, v) in entries {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 = field.add(&last.1, &v),
            _ => out.push((i, v)),
        }
    }
    out.retain(|(_, v)| !field.is_zero(v));
    out
}

pub fn to_dense<F: Field>(field: &F, x: &[(usize, F::Elem)], len: usize) -> Vec<F::Elem> {
    let mut out = vec![field.zero(); len];
    for (i, v) in x {
        out[*i] = v.clone();
    }
    out
}

pub fn from_dense<F: Field>(field: &F, x: &[F::Elem]) -> SparseVec<F::Elem> {
    x.iter()
        .enumerate()
        .filter(|(_, v)| !field.is_zero(v))
        .map(|(i, v)| (i, v.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::PrimeField;

    #[test]
    fn axpy_cancels_entries() {
        let f = PrimeField::new(5).unwrap();
        let x = vec![(0, 1), (3, 2)];
        let y = vec![(0, 4), (2, 1)];
        assert_eq!(axpy(&f, &1, &x, &y), vec![(2, 1), (3, 2)]);
        assert_eq!(from_entries(&f, vec![(2, 3), (0, 1), (2, 2)]), vec![(0, 1)]);
    }
}
