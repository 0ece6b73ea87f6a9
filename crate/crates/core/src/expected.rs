//! Closed-form dimensions for the Hecke algebra, as functions of `n = 4k + i`.
//! `None` marks degrees for which no closed form is stated.

fn split(n: usize) -> (usize, usize) {
    (n / 4, n % 4)
}

/// `dim Ext^n(S_i, S_j)` with 1-based vertex labels; independent of the field.
pub fn ext_dim(i: usize, j: usize, n: usize) -> usize {
    let (k, l) = split(n);
    match (i, j) {
        (1, 1) if l == 3 => 2 * k + 2,
        (1, 1) => 2 * k + 1,
        (2, 2) => usize::from(l == 0 || l == 3),
        _ => usize::from(l == 1 || l == 2),
    }
}

/// `dim Hom_{A^e}(R_n, A)`: `8k+7, 8k+8, 8k+8, 8k+11`.
pub fn hom_dim(n: usize) -> usize {
    let (k, i) = split(n);
    8 * k + [7, 8, 8, 11][i]
}

/// `dim Hom_{A^e}(Omega^n(A), A)`.
pub fn hom_omega_dim(n: usize, char_two: bool) -> Option<usize> {
    let (k, i) = split(n);
    if !char_two {
        return Some(5 * k + [5, 5, 6, 6][i]);
    }
    match i {
        1 if k == 0 => Some(6),
        _ => Some(5 * k + [5, 8, 6, 9][i]),
    }
}

/// `dim HH^n(A)`.
pub fn hh_dim(n: usize, char_two: bool) -> Option<usize> {
    let (k, i) = split(n);
    if n == 0 {
        return Some(5);
    }
    if !char_two {
        return Some(2 * k + [3, 3, 3, 4][i]);
    }
    match (i, k) {
        (1, 0) => Some(4),
        (0, _) | (2, 1..) | (3, 1..) | (1, 2..) => Some(2 * k + [6, 6, 6, 7][i]),
        _ => None,
    }
}

/// Center basis in path notation.
pub const CENTER_BASIS: [&str; 5] = ["e1 + e2", "eps", "eps^2", "alpha*beta + beta*alpha", "beta*alpha*beta*alpha"];
