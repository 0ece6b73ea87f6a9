use std::collections::BTreeMap;

use super::enveloping::{EnvelopingAlgebra, RegularBimodule};
use crate::error::{Error, Result};
use crate::linalg::{sparse, Field, LinearMap, Span, SparseVec};
use crate::path_algebra::VertexId;

/// Largest module dimension the oracle will handle before giving up.
pub const DEFAULT_DIM_LIMIT: usize = 4000;

/// `⊕_t (e_{i_t} ⊗ e_{j_t}) A^e`, with basis `(t, pair)`.
#[derive(Clone, Debug)]
struct FreeEnvModule {
    summands: Vec<(VertexId, VertexId)>,
    offsets: Vec<usize>,
    bases: Vec<Vec<usize>>,
    /// `positions[t][pair]` is the local index of `pair` in summand `t`.
    positions: Vec<BTreeMap<usize, usize>>,
    dim: usize,
}

impl FreeEnvModule {
    fn new<F: Field>(env: &EnvelopingAlgebra<F>, summands: Vec<(VertexId, VertexId)>) -> Self {
        let mut offsets = Vec::new();
        let mut bases = Vec::new();
        let mut positions = Vec::new();
        let mut dim = 0;
        for &(i, j) in &summands {
            let basis = env.projective_basis(i, j);
            offsets.push(dim);
            dim += basis.len();
            positions.push(basis.iter().enumerate().map(|(k, &p)| (p, k)).collect());
            bases.push(basis);
        }
        FreeEnvModule {
            summands,
            offsets,
            bases,
            positions,
            dim,
        }
    }

    fn decode(&self, k: usize) -> (usize, usize) {
        let t = self.offsets.partition_point(|&o| o <= k) - 1;
        (t, self.bases[t][k - self.offsets[t]])
    }

    fn act<F: Field>(&self, env: &EnvelopingAlgebra<F>, m: &[(usize, F::Elem)], q: usize) -> SparseVec<F::Elem> {
        let f = env.algebra().field();
        let mut entries = Vec::new();
        for (k, c) in m {
            let (t, p) = self.decode(*k);
            for (r, d) in env.mul_basis(p, q) {
                entries.push((self.offsets[t] + self.positions[t][r], f.mul(c, d)));
            }
        }
        sparse::from_entries(f, entries)
    }
}

/// The module currently being covered: either `A` itself or a submodule of a free module.
enum Ambient<'a, F: Field> {
    Regular(RegularBimodule<'a, F>),
    Free(FreeEnvModule),
}

impl<F: Field> Ambient<'_, F> {
    fn dim(&self) -> usize {
        match self {
            Ambient::Regular(m) => m.dim(),
            Ambient::Free(m) => m.dim,
        }
    }

    fn act(&self, env: &EnvelopingAlgebra<F>, m: &[(usize, F::Elem)], q: usize) -> SparseVec<F::Elem> {
        match self {
            Ambient::Regular(r) => r.act(m, q),
            Ambient::Free(p) => p.act(env, m, q),
        }
    }
}

/// One degree of the generic resolution.
#[derive(Clone, Debug)]
pub struct OracleDegree<F: Field> {
    /// Vertex pair `(i, j)` of each summand `(e_i ⊗ e_j)A^e`.
    pub summands: Vec<(VertexId, VertexId)>,
    /// Image of each summand generator in the previous term (in `A` for degree 0).
    pub generator_images: Vec<SparseVec<F::Elem>>,
    /// Cover map `P_n -> P_{n-1}` (or onto `A`).
    pub map: LinearMap<F>,
    /// The kernel of `map` has no component on a summand generator.
    pub kernel_in_radical: bool,
}

/// A minimal projective resolution of `A` over `A^e`, computed from scratch.
#[derive(Clone, Debug)]
pub struct OracleResolution<F: Field> {
    env: EnvelopingAlgebra<F>,
    pub degrees: Vec<OracleDegree<F>>,
}

impl<F: Field> OracleResolution<F> {
    pub fn compute(env: EnvelopingAlgebra<F>, max_degree: usize) -> Result<Self> {
        Self::compute_with_limit(env, max_degree, DEFAULT_DIM_LIMIT)
    }

    pub fn compute_with_limit(env: EnvelopingAlgebra<F>, max_degree: usize, limit: usize) -> Result<Self> {
        let f = env.algebra().field().clone();
        let mut degrees = Vec::with_capacity(max_degree + 1);
        {
            let mut ambient = Ambient::Regular(RegularBimodule::new(&env));
            let mut sub: Vec<SparseVec<F::Elem>> = (0..ambient.dim()).map(|k| vec![(k, f.one())]).collect();
            for _ in 0..=max_degree {
                let generators = top_generators(&env, &ambient, &sub);
                let summands: Vec<(VertexId, VertexId)> = generators.iter().map(|(ij, _)| *ij).collect();
                let free = FreeEnvModule::new(&env, summands.clone());
                if free.dim > limit {
                    return Err(Error::ResourceLimit { dim: free.dim, limit });
                }
                let columns = (0..free.dim)
                    .map(|k| {
                        let (t, p) = free.decode(k);
                        ambient.act(&env, &generators[t].1, p)
                    })
                    .collect();
                let map = LinearMap::from_columns(f.clone(), ambient.dim(), columns);
                sub = map.kernel_basis();
                let kernel_in_radical = sub.iter().all(|v| {
                    v.iter().all(|(k, _)| {
                        let (t, p) = free.decode(*k);
                        let (i, j) = free.summands[t];
                        p != env.idempotent(i, j)
                    })
                });
                degrees.push(OracleDegree {
                    summands,
                    generator_images: generators.into_iter().map(|(_, g)| g).collect(),
                    map,
                    kernel_in_radical,
                });
                ambient = Ambient::Free(free);
            }
        }
        Ok(OracleResolution { env, degrees })
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.len() - 1
    }

    /// Multiplicity of `(e_i ⊗ e_j)A^e` in degree `n`, keyed by 0-based vertex pairs.
    pub fn multiplicities(&self, n: usize) -> BTreeMap<(VertexId, VertexId), usize> {
        let mut out = BTreeMap::new();
        for ij in &self.degrees[n].summands {
            *out.entry(*ij).or_insert(0) += 1;
        }
        out
    }

    /// The Hom cochain complex: `Hom_{A^e}((e_i ⊗ e_j)A^e, A) = e_iAe_j`.
    pub fn hom_complex(&self) -> OracleHomComplex {
        let a = self.env.algebra();
        let basis_of = |n: usize| -> Vec<(usize, usize)> {
            let mut out = Vec::new();
            for (t, &(i, j)) in self.degrees[n].summands.iter().enumerate() {
                out.extend(a.slice(i, j).into_iter().map(|u| (t, u)));
            }
            out
        };
        let dims: Vec<usize> = (0..self.degrees.len()).map(|n| basis_of(n).len()).collect();
        let ranks = (1..self.degrees.len())
            .map(|n| {
                let source = basis_of(n - 1);
                let target: BTreeMap<(usize, usize), usize> = basis_of(n).into_iter().enumerate().map(|(k, x)| (x, k)).collect();
                let previous = FreeEnvModule::new(&self.env, self.degrees[n - 1].summands.clone());
                let f = a.field();
                let columns = source
                    .iter()
                    .map(|&(s, u)| {
                        let mut entries = Vec::new();
                        for (t, image) in self.degrees[n].generator_images.iter().enumerate() {
                            for (k, c) in image {
                                let (s2, p) = previous.decode(*k);
                                if s2 != s {
                                    continue;
                                }
                                let (l, r) = self.env.split(p);
                                let value = a.mul_vec(&a.mul_vec(&[(l, f.one())], &[(u, f.one())]), &[(r, f.one())]);
                                for (w, x) in value {
                                    entries.push((target[&(t, w)], f.mul(c, &x)));
                                }
                            }
                        }
                        sparse::from_entries(f, entries)
                    })
                    .collect();
                LinearMap::from_columns(f.clone(), target.len(), columns).rank()
            })
            .collect();
        OracleHomComplex { dims, ranks }
    }
}

/// A generator of the current module and the vertex pair it lives over.
type Generator<F> = ((VertexId, VertexId), SparseVec<<F as Field>::Elem>);

/// Generators of a submodule spanned by `sub` modulo its radical, one vertex pair at a time.
fn top_generators<F: Field>(
    env: &EnvelopingAlgebra<F>,
    ambient: &Ambient<'_, F>,
    sub: &[SparseVec<F::Elem>],
) -> Vec<Generator<F>> {
    let f = env.algebra().field();
    let generators = env.algebra_generators();
    // M·rad = (M·g)A^e over the radical generators g: close the seed under A^e.
    let mut span = Span::new(f.clone());
    let mut queue: Vec<SparseVec<F::Elem>> = Vec::new();
    for m in sub {
        for &g in &env.radical_generators() {
            let v = ambient.act(env, m, g);
            if span.insert(&v) {
                queue.push(v);
            }
        }
    }
    while let Some(v) = queue.pop() {
        for &g in &generators {
            let w = ambient.act(env, &v, g);
            if span.insert(&w) {
                queue.push(w);
            }
        }
    }
    let m = env.algebra().num_vertices();
    let mut out = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let e = env.idempotent(i, j);
            for v in sub {
                let w = ambient.act(env, v, e);
                if span.insert(&w) {
                    out.push(((i, j), w));
                }
            }
        }
    }
    out
}

/// Dimensions and ranks of `Hom_{A^e}(P_•, A)` for the generic resolution.
#[derive(Clone, Debug)]
pub struct OracleHomComplex {
    pub dims: Vec<usize>,
    /// `ranks[n - 1]` is the rank of the map induced by `P_n -> P_{n-1}`.
    ranks: Vec<usize>,
}

impl OracleHomComplex {
    pub fn hh_dim(&self, n: usize) -> Result<usize> {
        let max = self.dims.len() - 1;
        if n + 1 > max {
            return Err(Error::DegreeOutOfRange { requested: n + 1, max });
        }
        let incoming = if n == 0 { 0 } else { self.ranks[n - 1] };
        Ok(self.dims[n] - self.ranks[n] - incoming)
    }
}

/// `dim HH^n(A)` for `0 <= n <= max_degree`, computed without the explicit resolution.
pub fn hh_dims_oracle<F: Field>(env: EnvelopingAlgebra<F>, max_degree: usize) -> Result<Vec<usize>> {
    let res = OracleResolution::compute(env, max_degree + 1)?;
    let hom = res.hom_complex();
    (0..=max_degree).map(|n| hom.hh_dim(n)).collect()
}
