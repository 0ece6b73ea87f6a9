use serde::{Deserialize, Serialize};

use super::resolution::ExplicitResolution;
use super::term::multiplicity;
use crate::linalg::{sparse, Field, SparseVec};
use crate::one_sided::{recursion_cell, ExtTable, GszLabel};

/// Outcome of one structural check at one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCheck {
    pub n: usize,
    pub ok: bool,
    pub detail: String,
}

/// `delta_{n-1} ∘ delta_n = 0` for `1 ≤ n ≤ max`.
pub fn verify_complex<F: Field>(res: &ExplicitResolution<F>) -> Vec<DegreeCheck> {
    let slices = res.slices();
    (1..slices.len())
        .map(|n| {
            let composite = slices[n - 1].delta.compose(&slices[n].delta).expect("consecutive differentials compose");
            let nnz = composite.nnz();
            DegreeCheck {
                n,
                ok: nnz == 0,
                detail: if nnz == 0 {
                    "composite vanishes".into()
                } else {
                    format!("composite has {nnz} nonzero entries")
                },
            }
        })
        .collect()
}

/// Exactness at `R_{n-1}` for `1 ≤ n ≤ max` (`ker delta_{n-1} = im delta_n`), and
/// surjectivity of `delta_0` reported at `n = 0`.
pub fn verify_exactness<F: Field>(res: &ExplicitResolution<F>) -> Vec<DegreeCheck> {
    let slices = res.slices();
    let dim_a = res.algebra().dim();
    let mut out = vec![DegreeCheck {
        n: 0,
        ok: slices[0].rank == dim_a,
        detail: format!("rank delta_0 = {}, dim A = {dim_a}", slices[0].rank),
    }];
    for n in 1..slices.len() {
        let kernel = slices[n - 1].kernel_dim();
        let image = slices[n].rank;
        out.push(DegreeCheck {
            n,
            ok: kernel == image,
            detail: format!("dim ker delta_{} = {kernel}, rank delta_{n} = {image}", n - 1),
        });
    }
    out
}

/// Every generator image has zero coefficient on each `e_i ⊗ e_j`, so
/// `delta_n(R_n)` lies in the radical of `R_{n-1}`.
pub fn verify_minimality<F: Field>(res: &ExplicitResolution<F>) -> Vec<DegreeCheck> {
    let algebra = res.algebra();
    let slices = res.slices();
    let trivial = |x: usize| algebra.basis()[x].is_trivial();
    (1..slices.len())
        .map(|n| {
            let previous = &slices[n - 1].term;
            let offending: Vec<String> = slices[n]
                .images
                .iter()
                .enumerate()
                .filter(|(_, (_, img))| {
                    img.coeffs.iter().any(|(idx, _)| {
                        let (_, a, b) = previous.triple(*idx);
                        trivial(a) && trivial(b)
                    })
                })
                .map(|(s, _)| slices[n].term.summands[s].to_string())
                .collect();
            DegreeCheck {
                n,
                ok: offending.is_empty(),
                detail: if offending.is_empty() {
                    "image in radical".into()
                } else {
                    format!("top coefficient in image of {}", offending.join(", "))
                },
            }
        })
        .collect()
}

/// Happel's criterion: `P_ij` occurs in `R_n` exactly `dim Ext^n(S_i, S_j)` times.
pub fn verify_multiplicities<F: Field>(res: &ExplicitResolution<F>, ext: &ExtTable) -> Vec<DegreeCheck> {
    let roles = res.roles();
    let vertex = |v: usize| if v == 1 { roles.v1 } else { roles.v2 };
    res.slices()
        .iter()
        .filter(|s| s.n <= ext.max_degree)
        .map(|slice| {
            let mismatches: Vec<String> = [(1, 1), (1, 2), (2, 1), (2, 2)]
                .iter()
                .filter_map(|&(i, j)| {
                    let mult = multiplicity(&slice.term.summands, i, j);
                    let ext_dim = ext.ext_dim(vertex(i), vertex(j), slice.n).ok()?;
                    (mult != ext_dim).then(|| format!("P_{i}{j}: {mult} vs Ext {ext_dim}"))
                })
                .collect();
            DegreeCheck {
                n: slice.n,
                ok: mismatches.is_empty(),
                detail: if mismatches.is_empty() {
                    "multiplicities equal Ext dimensions".into()
                } else {
                    mismatches.join("; ")
                },
            }
        })
        .collect()
}

/// Applies `A/rad A ⊗_A -` to each `delta_n`, keeping the tensors whose left
/// factor is an idempotent, and compares with the one-sided differential of
/// the generator-set recursion: the `(p, x)` entry must equal `lambda_p` in `A`.
pub fn compare_with_simples<F: Field>(res: &ExplicitResolution<F>, max_degree: usize) -> Vec<DegreeCheck> {
    let algebra = res.algebra();
    let f = algebra.field();
    let roles = res.roles();
    let slices = res.slices();
    let top = slices.len().min(max_degree + 1);
    (1..top)
        .map(|n| {
            let previous = &slices[n - 1].term;
            let mut mismatches = Vec::new();
            for (t, (_, image)) in slices[n].images.iter().enumerate() {
                let label = GszLabel::from_summand(slices[n].term.summands[t]);
                let lambda = match recursion_cell(n, label) {
                    Ok((lambda, _)) => lambda,
                    Err(e) => {
                        mismatches.push(e.to_string());
                        continue;
                    }
                };
                let mut reduced: Vec<SparseVec<F::Elem>> = vec![Vec::new(); previous.summands.len()];
                for (idx, c) in &image.coeffs {
                    let (s, a, b) = previous.triple(*idx);
                    if algebra.basis()[a].is_trivial() {
                        reduced[s] = sparse::axpy(f, c, &[(b, f.one())], &reduced[s]);
                    }
                }
                let mut expected: Vec<SparseVec<F::Elem>> = vec![Vec::new(); previous.summands.len()];
                for term in &lambda {
                    let Some(s) = previous.position(term.previous.summand()) else {
                        mismatches.push(format!("{} missing in degree {}", term.previous, n - 1));
                        continue;
                    };
                    let (_, j) = term.previous.summand().vertices(roles);
                    let word = algebra.reduce_path(&roles.word(algebra.quiver(), term.word, j));
                    expected[s] = sparse::axpy(f, &f.from_i64(term.coeff), &word, &expected[s]);
                }
                for s in 0..previous.summands.len() {
                    if reduced[s] != expected[s] {
                        mismatches.push(format!(
                            "({}, {}): {} vs {}",
                            previous.summands[s],
                            slices[n].term.summands[t],
                            algebra.format_vec(&reduced[s]),
                            algebra.format_vec(&expected[s])
                        ));
                    }
                }
            }
            DegreeCheck {
                n,
                ok: mismatches.is_empty(),
                detail: if mismatches.is_empty() {
                    "top of delta equals the one-sided differential".into()
                } else {
                    mismatches.join("; ")
                },
            }
        })
        .collect()
}
