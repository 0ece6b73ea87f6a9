//! Generator images of the bimodule differentials, transcribed branch by branch.
//!
//! A term `(c, L, s, R)` stands for `c * L·s·R` where `s` is the generator
//! `e_i ⊗ e_j` of a summand of the previous term and `L`, `R` are role words
//! (`e` = eps, `a` = alpha, `b` = beta).

use serde::{Deserialize, Serialize};

use super::term::{resolution_term, SummandKind};
use crate::error::{Error, Result};

use SummandKind::{A, B, C, D};

/// The case of the differential a generator image was taken from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Branch {
    /// `a^1_1`
    FirstDegree,
    /// `a^1_2`
    SecondDegree,
    /// `a^1_3`
    ThirdDegreeFirst,
    /// `a^2_3`
    ThirdDegreeSecond,
    /// `n = 4k, 4k+2`, `r = 1`
    EvenFirst,
    /// `n = 4k, 4k+2`, `1 < r < 2k`, `r` even
    EvenMiddleEven,
    /// `n = 4k, 4k+2`, `1 < r < 2k`, `r` odd
    EvenMiddleOdd,
    /// `n = 4k`, `r = 2k`
    ZeroSecondLast,
    /// `n = 4k`, `r = 2k+1`
    ZeroLast,
    /// `n = 4k+2`, `r = 2k`
    TwoSecondLast,
    /// `n = 4k+2`, `r = 2k+1`
    TwoLast,
    /// `n = 4k+1, 4k+3`, `r = 1`
    OddFirst,
    /// `n = 4k+1, 4k+3`, `r = 2`
    OddSecond,
    /// `n = 4k+1, 4k+3`, `2 < r <= 2k`, `r` odd
    OddMiddleOdd,
    /// `n = 4k+1, 4k+3`, `2 < r <= 2k`, `r` even
    OddMiddleEven,
    /// `n = 4k+1`, `r = 2k+1`
    OneLast,
    /// `n = 4k+3`, `r = 2k+1`
    ThreeSecondLast,
    /// `n = 4k+3`, `r = 2k+2`
    ThreeLast,
    /// `d_{4k}`
    D0,
    /// `b_{4k+1}`
    B1,
    /// `c_{4k+1}`
    C1,
    /// `b_{4k+2}`
    B2,
    /// `c_{4k+2}`
    C2,
    /// `d_{4k+3}`
    D3,
}

impl Branch {
    pub const ALL: [Branch; 24] = [
        Branch::FirstDegree,
        Branch::SecondDegree,
        Branch::ThirdDegreeFirst,
        Branch::ThirdDegreeSecond,
        Branch::EvenFirst,
        Branch::EvenMiddleEven,
        Branch::EvenMiddleOdd,
        Branch::ZeroSecondLast,
        Branch::ZeroLast,
        Branch::TwoSecondLast,
        Branch::TwoLast,
        Branch::OddFirst,
        Branch::OddSecond,
        Branch::OddMiddleOdd,
        Branch::OddMiddleEven,
        Branch::OneLast,
        Branch::ThreeSecondLast,
        Branch::ThreeLast,
        Branch::D0,
        Branch::B1,
        Branch::C1,
        Branch::B2,
        Branch::C2,
        Branch::D3,
    ];

    /// Lowest degree whose differential uses this branch.
    pub fn first_degree(&self) -> usize {
        (1..64)
            .find(|&n| resolution_term(n).iter().any(|s| select_branch(n, *s) == *self))
            .expect("every branch is used")
    }
}

/// One summand `coeff * left·target·right` of a generator image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: i64,
    pub left: &'static str,
    pub target: SummandKind,
    pub right: &'static str,
}

fn t(coeff: i64, left: &'static str, target: SummandKind, right: &'static str) -> Term {
    Term {
        coeff,
        left,
        target,
        right,
    }
}

/// How to read the reference to `a^0_0` in the image of `c_1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundaryReading {
    /// Use the unique `P_11` generator `a^1_0`.
    #[default]
    FirstCopy,
    /// Drop the term.
    Zero,
}

/// Perturbations and readings applied when assembling the differentials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DifferentialOptions {
    pub boundary: BoundaryReading,
    /// `(branch, term index)` pairs whose sign is flipped wherever the branch is used.
    pub sign_flips: Vec<(Branch, usize)>,
}

/// The branch that defines the image of generator `s` of the degree-`n` term.
pub fn select_branch(n: usize, s: SummandKind) -> Branch {
    let (k, i) = (n / 4, n % 4);
    match s {
        A(r) => match n {
            1 => Branch::FirstDegree,
            2 => Branch::SecondDegree,
            3 if r == 1 => Branch::ThirdDegreeFirst,
            3 => Branch::ThirdDegreeSecond,
            _ if i == 0 || i == 2 => {
                if r == 1 {
                    Branch::EvenFirst
                } else if r == 2 * k {
                    if i == 0 {
                        Branch::ZeroSecondLast
                    } else {
                        Branch::TwoSecondLast
                    }
                } else if r == 2 * k + 1 {
                    if i == 0 {
                        Branch::ZeroLast
                    } else {
                        Branch::TwoLast
                    }
                } else if r % 2 == 0 {
                    Branch::EvenMiddleEven
                } else {
                    Branch::EvenMiddleOdd
                }
            }
            _ => {
                if r == 1 {
                    Branch::OddFirst
                } else if r == 2 {
                    Branch::OddSecond
                } else if r == 2 * k + 1 {
                    if i == 1 {
                        Branch::OneLast
                    } else {
                        Branch::ThreeSecondLast
                    }
                } else if r == 2 * k + 2 {
                    Branch::ThreeLast
                } else if r % 2 == 1 {
                    Branch::OddMiddleOdd
                } else {
                    Branch::OddMiddleEven
                }
            }
        },
        D if i == 0 => Branch::D0,
        D => Branch::D3,
        B if i == 1 => Branch::B1,
        B => Branch::B2,
        C if i == 1 => Branch::C1,
        C => Branch::C2,
    }
}

/// Literal terms of a branch for generator `s` in degree `n`, before any
/// boundary reading or validation.
fn branch_terms(branch: Branch, n: usize, s: SummandKind, boundary: BoundaryReading) -> Vec<Term> {
    let k = n / 4;
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    let r = match s {
        A(r) => r,
        _ => 0,
    };
    match branch {
        Branch::FirstDegree => vec![t(1, "", A(1), "e"), t(-1, "e", A(1), "")],
        Branch::SecondDegree => vec![
            t(1, "", A(1), "e"),
            t(-1, "", B, "bab"),
            t(1, "e", A(1), ""),
            t(-1, "aba", C, ""),
            t(-1, "ab", B, "b"),
            t(-1, "a", C, "ab"),
        ],
        Branch::ThirdDegreeFirst => vec![
            t(1, "", A(1), "e"),
            t(-1, "", B, "bab"),
            t(-1, "e", A(1), ""),
            t(1, "aba", C, ""),
        ],
        Branch::ThirdDegreeSecond => vec![
            t(1, "", A(1), "ab"),
            t(-1, "ab", A(1), ""),
            t(-1, "e", B, "b"),
            t(1, "a", C, "e"),
        ],
        Branch::EvenFirst => vec![
            t(1, "", A(1), "e"),
            t(-1, "", A(2), "ab"),
            t(1, "e", A(1), ""),
            t(-1, "ab", A(2), ""),
        ],
        Branch::EvenMiddleEven => vec![
            t(1, "", A(r + 1), "e"),
            t(1, "", A(r - 1), "ab"),
            t(1, "e", A(r), ""),
            t(-1, "ab", A(r + 2), ""),
        ],
        Branch::EvenMiddleOdd => vec![
            t(1, "", A(r - 1), "e"),
            t(-1, "", A(r + 1), "ab"),
            t(1, "e", A(r), ""),
            t(1, "ab", A(r - 2), ""),
        ],
        Branch::ZeroSecondLast => vec![
            t(1, "", A(r - 1), "ab"),
            t(1, "e", A(r), ""),
            t(sign, "aba", D, "b"),
        ],
        Branch::ZeroLast => vec![
            t(1, "", A(r - 1), "e"),
            t(1, "ab", A(r - 2), ""),
            t(sign, "a", D, "bab"),
        ],
        Branch::TwoSecondLast => vec![
            t(1, "", A(r + 1), "e"),
            t(1, "", A(r - 1), "ab"),
            t(1, "e", A(r), ""),
            t(-sign, "aba", C, ""),
            t(-1, "ab", B, "b"),
        ],
        Branch::TwoLast => vec![
            t(1, "", A(r - 1), "e"),
            t(1, "e", A(r), ""),
            t(1, "ab", A(r - 2), ""),
            t(-1, "", B, "bab"),
            t(-sign, "a", C, "ab"),
        ],
        Branch::OddFirst => vec![
            t(1, "", A(1), "e"),
            t(-1, "", A(2), "ab"),
            t(-1, "e", A(1), ""),
            t(1, "ab", A(3), ""),
        ],
        Branch::OddSecond => vec![
            t(1, "", A(3), "e"),
            t(1, "", A(1), "ab"),
            t(-1, "e", A(2), ""),
            t(-1, "ab", A(1), ""),
        ],
        Branch::OddMiddleOdd => vec![
            t(1, "", A(r - 1), "e"),
            t(-1, "", A(r + 1), "ab"),
            t(-1, "e", A(r), ""),
            t(1, "ab", A(r + 2), ""),
        ],
        Branch::OddMiddleEven => vec![
            t(1, "", A(r + 1), "e"),
            t(1, "", A(r - 1), "ab"),
            t(-1, "e", A(r), ""),
            t(-1, "ab", A(r - 2), ""),
        ],
        Branch::OneLast => vec![t(1, "", A(r - 1), "e"), t(-1, "e", A(r), "")],
        Branch::ThreeSecondLast => vec![
            t(1, "", A(r - 1), "e"),
            t(-1, "", B, "bab"),
            t(-1, "e", A(r), ""),
            t(sign, "aba", C, ""),
        ],
        Branch::ThreeLast => vec![
            t(1, "", A(r - 1), "ab"),
            t(-1, "ab", A(r - 2), ""),
            t(sign, "a", C, "e"),
            t(-1, "e", B, "b"),
        ],
        Branch::D0 => vec![
            t(1, "", D, "baba"),
            t(1, "baba", D, ""),
            t(sign, "b", A(2 * k - 1), "a"),
        ],
        Branch::B1 => vec![t(1, "", A(2 * k + 1), "a"), t(-sign, "a", D, "")],
        Branch::C1 => {
            // At k = 0 the P_11 reference has superscript 0.
            let copy = if k == 0 {
                match boundary {
                    BoundaryReading::FirstCopy => A(1),
                    BoundaryReading::Zero => return vec![t(1, "", D, "b")],
                }
            } else {
                A(2 * k)
            };
            vec![t(1, "", D, "b"), t(-sign, "b", copy, "")]
        }
        Branch::B2 => vec![t(1, "", A(2 * k + 1), "a"), t(1, "e", B, "")],
        Branch::C2 => vec![t(1, "", C, "e"), t(sign, "b", A(2 * k + 1), "")],
        Branch::D3 => vec![t(1, "", C, "a"), t(-sign, "b", B, "")],
    }
}

/// Generator image of `s` in degree `n >= 1`, validated against the summands
/// of the degree `n - 1` term.
pub fn generator_image(n: usize, s: SummandKind, opts: &DifferentialOptions) -> Result<(Branch, Vec<Term>)> {
    assert!(n >= 1, "degree 0 maps by multiplication");
    let term = resolution_term(n);
    if !term.contains(&s) {
        return Err(Error::UndefinedGenerator {
            label: s.to_string(),
            degree: n,
        });
    }
    let branch = select_branch(n, s);
    let mut terms = branch_terms(branch, n, s, opts.boundary);
    for &(b, idx) in &opts.sign_flips {
        if b == branch {
            if let Some(term) = terms.get_mut(idx) {
                term.coeff = -term.coeff;
            }
        }
    }
    let previous = resolution_term(n - 1);
    for term in &terms {
        let exists = match term.target {
            A(0) => false,
            other => previous.contains(&other),
        };
        if !exists {
            return Err(Error::UndefinedGenerator {
                label: format!("{}_{}", term.target, n - 1),
                degree: n,
            });
        }
    }
    Ok((branch, terms))
}

/// Number of terms of a branch (as used in its first degree).
pub fn branch_len(branch: Branch) -> usize {
    let n = branch.first_degree();
    let s = *resolution_term(n)
        .iter()
        .find(|s| select_branch(n, **s) == branch)
        .expect("branch used in its first degree");
    branch_terms(branch, n, s, BoundaryReading::FirstCopy).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_generator_has_a_valid_image() {
        let opts = DifferentialOptions::default();
        for n in 1..=40 {
            for s in resolution_term(n) {
                generator_image(n, s, &opts).unwrap_or_else(|e| panic!("n = {n}, {s}: {e}"));
            }
        }
    }

    #[test]
    fn small_degree_images() {
        let opts = DifferentialOptions::default();
        let (b, terms) = generator_image(1, A(1), &opts).unwrap();
        assert_eq!(b, Branch::FirstDegree);
        assert_eq!(terms, vec![t(1, "", A(1), "e"), t(-1, "e", A(1), "")]);
        // d_{4k+3} -> c·alpha + (-1)^{k+1} beta·b, at k = 1
        let (_, d7) = generator_image(7, D, &opts).unwrap();
        assert_eq!(d7, vec![t(1, "", C, "a"), t(1, "b", B, "")]);
        let (_, d3) = generator_image(3, D, &opts).unwrap();
        assert_eq!(d3, vec![t(1, "", C, "a"), t(-1, "b", B, "")]);
    }

    #[test]
    fn boundary_reading_controls_c1() {
        let (_, first) = generator_image(1, C, &DifferentialOptions::default()).unwrap();
        assert_eq!(first[1].target, A(1));
        let zero = DifferentialOptions {
            boundary: BoundaryReading::Zero,
            ..Default::default()
        };
        assert_eq!(generator_image(1, C, &zero).unwrap().1.len(), 1);
    }

    #[test]
    fn branch_first_degrees() {
        assert_eq!(Branch::FirstDegree.first_degree(), 1);
        assert_eq!(Branch::EvenFirst.first_degree(), 4);
        assert_eq!(Branch::EvenMiddleEven.first_degree(), 8);
        assert_eq!(Branch::EvenMiddleOdd.first_degree(), 8);
        assert_eq!(Branch::OddMiddleOdd.first_degree(), 9);
        assert_eq!(Branch::OddMiddleEven.first_degree(), 9);
        assert_eq!(Branch::C1.first_degree(), 1);
        assert_eq!(Branch::D0.first_degree(), 4);
    }

    #[test]
    fn flips_negate_one_term() {
        let opts = DifferentialOptions {
            sign_flips: vec![(Branch::D3, 1)],
            ..Default::default()
        };
        let (_, d3) = generator_image(3, D, &opts).unwrap();
        assert_eq!(d3[1].coeff, 1);
    }
}
