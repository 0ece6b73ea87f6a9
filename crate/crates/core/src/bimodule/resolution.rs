use rayon::prelude::*;

use super::differential::{generator_image, Branch, DifferentialOptions, Term};
use super::term::{resolution_term, BimoduleProjective, HeckeRoles, SummandKind};
use crate::error::{Error, Result};
use crate::linalg::{sparse, Field, LinearMap, SparseVec};
use crate::path_algebra::AlgebraTable;

/// Element of a [`BimoduleProjective`], as coefficients on its tensor basis.
#[derive(Clone, Debug)]
pub struct BimoduleElement<F: Field> {
    pub coeffs: SparseVec<F::Elem>,
}

impl<F: Field> BimoduleElement<F> {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Degree-`n` data: the term, the differential out of it and its rank.
#[derive(Clone, Debug)]
pub struct ResolutionSlice<F: Field> {
    pub n: usize,
    pub term: BimoduleProjective,
    /// `R_n -> R_{n-1}`, or the multiplication map `R_0 -> A` when `n = 0`.
    pub delta: LinearMap<F>,
    /// Branch and expanded image of each generator (empty for `n = 0`).
    pub images: Vec<(Branch, BimoduleElement<F>)>,
    pub rank: usize,
}

impl<F: Field> ResolutionSlice<F> {
    pub fn kernel_dim(&self) -> usize {
        self.delta.domain_dim() - self.rank
    }
}

/// The explicit bimodule resolution, assembled through a fixed degree.
#[derive(Clone, Debug)]
pub struct ExplicitResolution<F: Field> {
    algebra: AlgebraTable<F>,
    roles: HeckeRoles,
    options: DifferentialOptions,
    slices: Vec<ResolutionSlice<F>>,
}

/// Generator images of one degree, tagged with the branch that produced them.
type GeneratorImages<F> = Vec<(Branch, BimoduleElement<F>)>;
/// `(summand, left, right, coefficient)` of a tensor in the previous term.
type Entry<F> = (usize, usize, usize, <F as Field>::Elem);

impl<F: Field> ExplicitResolution<F> {
    pub fn new(algebra: AlgebraTable<F>, max_degree: usize) -> Result<Self> {
        Self::with_options(algebra, max_degree, DifferentialOptions::default())
    }

    pub fn with_options(algebra: AlgebraTable<F>, max_degree: usize, options: DifferentialOptions) -> Result<Self> {
        let roles = HeckeRoles::detect(algebra.quiver())?;
        let terms: Vec<BimoduleProjective> = (0..=max_degree)
            .map(|n| BimoduleProjective::new(&algebra, &roles, n, resolution_term(n)))
            .collect();
        let built: Vec<(LinearMap<F>, GeneratorImages<F>)> = (0..=max_degree)
            .into_par_iter()
            .map(|n| {
                if n == 0 {
                    Ok((multiplication_map(&algebra, &terms[0]), Vec::new()))
                } else {
                    let images = generator_images(&algebra, &roles, &options, &terms[n], &terms[n - 1])?;
                    let delta = differential_matrix(&algebra, &terms[n], &terms[n - 1], &images);
                    Ok((delta, images))
                }
            })
            .collect::<Result<_>>()?;
        let slices = built
            .into_par_iter()
            .zip(terms.into_par_iter())
            .map(|((delta, images), term)| {
                let rank = delta.rank();
                ResolutionSlice {
                    n: term.degree,
                    term,
                    delta,
                    images,
                    rank,
                }
            })
            .collect();
        Ok(ExplicitResolution {
            algebra,
            roles,
            options,
            slices,
        })
    }

    pub fn algebra(&self) -> &AlgebraTable<F> {
        &self.algebra
    }

    pub fn roles(&self) -> &HeckeRoles {
        &self.roles
    }

    pub fn options(&self) -> &DifferentialOptions {
        &self.options
    }

    pub fn max_degree(&self) -> usize {
        self.slices.len() - 1
    }

    pub fn slice(&self, n: usize) -> Result<&ResolutionSlice<F>> {
        self.slices.get(n).ok_or(Error::DegreeOutOfRange {
            requested: n,
            max: self.max_degree(),
        })
    }

    pub fn slices(&self) -> &[ResolutionSlice<F>] {
        &self.slices
    }

    /// `delta_n` as a linear map.
    pub fn differential(&self, n: usize) -> Result<&LinearMap<F>> {
        Ok(&self.slice(n)?.delta)
    }
}

/// `R_0 -> A`, `p ⊗ q -> pq`.
fn multiplication_map<F: Field>(algebra: &AlgebraTable<F>, r0: &BimoduleProjective) -> LinearMap<F> {
    let columns = (0..r0.dim())
        .map(|k| {
            let (_, p, q) = r0.triple(k);
            algebra.mul_basis(p, q).to_vec()
        })
        .collect();
    LinearMap::from_columns(algebra.field().clone(), algebra.dim(), columns)
}

fn expand_terms<F: Field>(
    algebra: &AlgebraTable<F>,
    roles: &HeckeRoles,
    source: SummandKind,
    terms: &[Term],
    target: &BimoduleProjective,
) -> Result<BimoduleElement<F>> {
    let f = algebra.field();
    let quiver = algebra.quiver();
    let (si, sj) = source.vertices(roles);
    let mut entries = Vec::new();
    for term in terms {
        let t = target
            .position(term.target)
            .ok_or_else(|| Error::UndefinedGenerator {
                label: term.target.to_string(),
                degree: target.degree,
            })?;
        let (ti, tj) = term.target.vertices(roles);
        let left = roles.word(quiver, term.left, si);
        let right = roles.word(quiver, term.right, tj);
        if left.target != ti || right.target != sj {
            return Err(Error::UndefinedGenerator {
                label: format!("{} (endpoints do not match)", term.target),
                degree: target.degree + 1,
            });
        }
        let coeff = f.from_i64(term.coeff);
        for (a, x) in algebra.reduce_path(&left) {
            for (b, y) in algebra.reduce_path(&right) {
                let idx = target.index(t, a, b).expect("tensor in range");
                entries.push((idx, f.mul(&coeff, &f.mul(&x, &y))));
            }
        }
    }
    Ok(BimoduleElement {
        coeffs: sparse::from_entries(f, entries),
    })
}

fn generator_images<F: Field>(
    algebra: &AlgebraTable<F>,
    roles: &HeckeRoles,
    options: &DifferentialOptions,
    term: &BimoduleProjective,
    previous: &BimoduleProjective,
) -> Result<Vec<(Branch, BimoduleElement<F>)>> {
    term.summands
        .iter()
        .map(|&s| {
            let (branch, terms) = generator_image(term.degree, s, options)?;
            Ok((branch, expand_terms(algebra, roles, s, &terms, previous)?))
        })
        .collect()
}

/// Matrix of `p·s·q -> p·image(s)·q` on the tensor bases.
fn differential_matrix<F: Field>(
    algebra: &AlgebraTable<F>,
    term: &BimoduleProjective,
    previous: &BimoduleProjective,
    images: &[(Branch, BimoduleElement<F>)],
) -> LinearMap<F> {
    let f = algebra.field();
    let decoded: Vec<Vec<Entry<F>>> = images
        .iter()
        .map(|(_, img)| {
            img.coeffs
                .iter()
                .map(|(idx, c)| {
                    let (t, a, b) = previous.triple(*idx);
                    (t, a, b, c.clone())
                })
                .collect()
        })
        .collect();
    let columns = (0..term.dim())
        .map(|k| {
            let (s, p, q) = term.triple(k);
            let mut entries = Vec::new();
            for (t, a, b, c) in &decoded[s] {
                let left = algebra.mul_basis(p, *a);
                if left.is_empty() {
                    continue;
                }
                let right = algebra.mul_basis(*b, q);
                for (a2, x) in left {
                    for (b2, y) in right {
                        let idx = previous.index(*t, *a2, *b2).expect("tensor in range");
                        entries.push((idx, f.mul(c, &f.mul(x, y))));
                    }
                }
            }
            sparse::from_entries(f, entries)
        })
        .collect();
    LinearMap::from_columns(f.clone(), previous.dim(), columns)
}
