//! Degree filtrations of cyclic modules, associated graded modules and
//! fusion products of Kac modules.
//!
//! `F(n)` is the span of `U(g[t])[≤ n]·v`. Since `g(0)` and `g(1)` generate
//! `g[t]`, `F(n) = F(n-1) + U(g(0))·g(1)·F(n-1)`, so each level is built from
//! `x(1)` applied to the rows added at the previous level, followed by the
//! `g(0)`-closure.
//!
//! All levels live in one echelon basis, inserted level by level. A row added
//! at level `n` is reduced against every earlier row, so it has zeros at the
//! pivots of `F(n-1)`. The graded piece `Gr[n]` is indexed by the pivots of the
//! level-`n` rows, and the coordinate of a class is its entry at that pivot
//! after reduction modulo `F(n-1)`.

use std::collections::VecDeque;
use std::sync::OnceLock;

use serde::Serialize;

use crate::algebra::{Gen, Parity, Weight};
use crate::characters::{char_of, FormalCharacter, GradedCharacter};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::exactla::{EchelonBasis, SparseMatrix, SparseVec, Subspace, Q};
use crate::pbw::{cg, CurrentGen, Element};
use crate::repcore::{evaluation, kac_b2, tensor, CyclicModule, FiniteModule, Poly};

const ROOT_VECTORS: [Gen; 6] = [Gen::X1, Gen::X2, Gen::X3, Gen::Y1, Gen::Y2, Gen::Y3];

/// A cyclic module with its degree filtration and associated graded module.
///
/// Vectors of the graded module are `SparseVec`s over the graded basis, which
/// is ordered by degree and then by pivot column.
#[derive(Debug)]
pub struct GradedRealization {
    base: CyclicModule,
    basis: EchelonBasis,
    level_start: Vec<usize>,
    gr_index: Vec<usize>,
    gr_pivot: Vec<usize>,
    gr_level: Vec<u32>,
    reps: Vec<OnceLock<Vec<SparseVec>>>,
    factors: usize,
}

/// Builds the degree filtration of `m` at its cyclic vector.
pub fn filtrate(m: &CyclicModule) -> Result<GradedRealization> {
    filtrate_with_factors(m, 1)
}

fn filtrate_with_factors(m: &CyclicModule, factors: usize) -> Result<GradedRealization> {
    let module = &m.module;
    let dim = module.dim();
    let mut basis = EchelonBasis::new(dim);
    let mut level_start = vec![0];
    let mut seeds = vec![m.cyclic.clone()];
    let homogeneous = module.weight_of(&m.cyclic).is_some();
    while basis.dim() < dim {
        let start = basis.dim();
        let mut queue = VecDeque::new();
        for s in &seeds {
            if let Some(r) = basis.insert(s) {
                queue.push_back(r);
            }
        }
        closure_under_degree_zero(module, &mut basis, &mut queue, homogeneous);
        if basis.dim() == start {
            return Err(Error::NotCyclic { span: start, dim });
        }
        level_start.push(basis.dim());
        seeds = (start..basis.dim())
            .flat_map(|r| Gen::ALL.into_iter().map(move |g| (g, r)))
            .map(|(g, r)| module.apply(cg(g, 1), basis.row(r)))
            .collect();
    }
    if dim == 0 {
        level_start.push(0);
    }
    let levels = level_start.len() - 1;
    let mut order: Vec<(u32, usize)> = Vec::with_capacity(dim);
    for n in 0..levels {
        let mut pivots: Vec<usize> = (level_start[n]..level_start[n + 1]).map(|r| basis.pivot(r)).collect();
        pivots.sort_unstable();
        order.extend(pivots.into_iter().map(|p| (n as u32, p)));
    }
    let mut gr_index = vec![usize::MAX; dim];
    for (k, (_, p)) in order.iter().enumerate() {
        gr_index[*p] = k;
    }
    Ok(GradedRealization {
        base: m.clone(),
        basis,
        level_start,
        gr_index,
        gr_pivot: order.iter().map(|o| o.1).collect(),
        gr_level: order.iter().map(|o| o.0).collect(),
        reps: (0..levels).map(|_| OnceLock::new()).collect(),
        factors,
    })
}

fn closure_under_degree_zero(module: &FiniteModule, basis: &mut EchelonBasis, queue: &mut VecDeque<usize>, homogeneous: bool) {
    let gens: &[Gen] = if homogeneous { &ROOT_VECTORS } else { &Gen::ALL };
    while let Some(r) = queue.pop_front() {
        for &g in gens {
            let w = module.apply(cg(g, 0), basis.row(r));
            if let Some(k) = basis.insert(&w) {
                queue.push_back(k);
            }
        }
    }
}

impl GradedRealization {
    pub fn base(&self) -> &CyclicModule {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    /// Number of tensor factors the realization was fused from (1 for a plain filtration).
    pub fn factor_count(&self) -> usize {
        self.factors
    }

    /// Top degree `G` with `Gr[G] ≠ 0`.
    pub fn top_degree(&self) -> u32 {
        (self.level_start.len() - 2) as u32
    }

    /// `dim F(n) - dim F(n-1)` for `n = 0..=G`.
    pub fn graded_dims(&self) -> Vec<usize> {
        self.level_start.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// `dim F(n)`; the full dimension beyond the top degree.
    pub fn filtration_dim(&self, n: u32) -> usize {
        let n = (n as usize + 1).min(self.level_start.len() - 1);
        self.level_start[n]
    }

    /// Basis of `F(n)` as a canonical subspace.
    pub fn filtration_subspace(&self, n: u32) -> Subspace {
        Subspace::span(self.dim(), &self.basis.rows()[..self.filtration_dim(n)])
    }

    /// Whether `v ∈ F(n)`; `F(-1) = 0`.
    pub fn in_filtration(&self, v: &SparseVec, n: i64) -> bool {
        if n < 0 {
            return v.is_zero();
        }
        self.basis.reduce_prefix(v, self.filtration_dim(n as u32)).is_zero()
    }

    /// Range of graded-basis indices spanning `Gr[n]`.
    pub fn level_range(&self, n: u32) -> std::ops::Range<usize> {
        let n = n as usize;
        if n + 1 >= self.level_start.len() {
            return self.dim()..self.dim();
        }
        self.level_start[n]..self.level_start[n + 1]
    }

    pub fn degree_of(&self, k: usize) -> u32 {
        self.gr_level[k]
    }

    pub fn gr_weight(&self, k: usize) -> &Weight {
        &self.base.module.weights()[self.gr_pivot[k]]
    }

    pub fn gr_parity(&self, k: usize) -> Parity {
        self.base.module.parities()[self.gr_pivot[k]]
    }

    /// Class of `v ∈ F(n)` in `Gr[n]`, or `None` if `v ∉ F(n)`.
    pub fn gr_coords(&self, v: &SparseVec, n: u32) -> Option<SparseVec> {
        if n > self.top_degree() {
            return self.in_filtration(v, n as i64 - 1).then(SparseVec::new);
        }
        let r = self.basis.reduce_prefix(v, self.level_start[n as usize]);
        if !self.basis.reduce_prefix(&r, self.level_start[n as usize + 1]).is_zero() {
            return None;
        }
        Some(self.read_level(&r, n))
    }

    /// Entries of a vector reduced modulo `F(n-1)` at the pivots of level `n`.
    fn read_level(&self, r: &SparseVec, n: u32) -> SparseVec {
        let range = self.level_range(n);
        SparseVec::from_pairs(
            r.entries()
                .iter()
                .filter_map(|(i, c)| {
                    let k = self.gr_index[*i];
                    range.contains(&k).then(|| (k, c.clone()))
                })
                .collect(),
        )
    }

    /// Canonical representatives of the basis of `Gr[n]`: the level-`n` rows in
    /// reduced echelon form among themselves.
    pub fn representatives(&self, n: u32) -> &[SparseVec] {
        self.reps[n as usize].get_or_init(|| {
            let (a, b) = (self.level_start[n as usize], self.level_start[n as usize + 1]);
            let mut e = EchelonBasis::new(self.dim());
            for r in a..b {
                e.insert(self.basis.row(r));
            }
            Subspace::from_echelon(&e).basis().to_vec()
        })
    }

    /// Representative in the base module of a homogeneous graded vector of degree `n`.
    pub fn lift(&self, w: &SparseVec, n: u32) -> SparseVec {
        let range = self.level_range(n);
        let reps = if range.is_empty() { &[][..] } else { self.representatives(n) };
        let mut out = SparseVec::new();
        for (k, c) in w.entries() {
            if range.contains(k) {
                out.axpy(c, &reps[k - range.start]);
            }
        }
        out
    }

    /// Splits a graded vector into its homogeneous components.
    pub fn components(&self, w: &SparseVec) -> Vec<(u32, SparseVec)> {
        let mut out: Vec<(u32, Vec<(usize, Q)>)> = Vec::new();
        for (k, c) in w.entries() {
            let d = self.gr_level[*k];
            match out.last_mut() {
                Some((e, v)) if *e == d => v.push((*k, c.clone())),
                _ => out.push((d, vec![(*k, c.clone())])),
            }
        }
        out.into_iter().map(|(d, v)| (d, SparseVec::from_pairs(v))).collect()
    }

    /// Action of `x(a)` on the associated graded module.
    pub fn apply_gr(&self, x: CurrentGen, w: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (n, part) in self.components(w) {
            let target = n + x.degree;
            if target > self.top_degree() {
                continue;
            }
            let image = self.base.module.apply(x, &self.lift(&part, n));
            let r = self.basis.reduce_prefix(&image, self.level_start[target as usize]);
            out.axpy(&Q::one(), &self.read_level(&r, target));
        }
        out
    }

    /// Action of an enveloping-algebra element on the graded module (words act right to left).
    pub fn apply_gr_element(&self, e: &Element, w: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (word, c) in e.terms() {
            let mut v = w.clone();
            for g in word.iter().rev() {
                if v.is_zero() {
                    break;
                }
                v = self.apply_gr(*g, &v);
            }
            out.axpy(c, &v);
        }
        out
    }

    /// Matrix of `x(a)` on the graded module.
    pub fn gr_matrix(&self, x: CurrentGen) -> SparseMatrix {
        let cols = (0..self.dim()).map(|k| self.apply_gr(x, &SparseVec::unit(k))).collect();
        SparseMatrix::from_columns(self.dim(), cols)
    }

    /// Image of the cyclic vector in `Gr[0]`.
    pub fn gr_cyclic(&self) -> SparseVec {
        self.gr_coords(&self.base.cyclic, 0).expect("the cyclic vector spans F(0) under g(0)")
    }

    /// Span of `U(g[t])·w` inside the graded module, computed with graded operators.
    pub fn gr_closure_dim(&self, w: &SparseVec) -> usize {
        let mut e = EchelonBasis::new(self.dim());
        let mut queue = VecDeque::new();
        if let Some(r) = e.insert(w) {
            queue.push_back(r);
        }
        let top = self.top_degree();
        while let Some(r) = queue.pop_front() {
            for g in Gen::ALL {
                for a in 0..=top.min(1) {
                    let v = self.apply_gr(cg(g, a), e.row(r));
                    if let Some(k) = e.insert(&v) {
                        queue.push_back(k);
                    }
                }
            }
        }
        e.dim()
    }

    pub fn graded_character(&self) -> GradedCharacter {
        let mut out = GradedCharacter::default();
        for k in 0..self.dim() {
            out.add_term(self.gr_weight(k).clone(), self.gr_level[k], 1);
        }
        out
    }

    pub fn character(&self) -> FormalCharacter {
        char_of(&self.base.module)
    }

    /// The associated graded module as a module in its own right, with `t^{G+1}` acting as zero.
    pub fn as_module(&self) -> CyclicModule {
        let top = self.top_degree();
        let tables = (0..=top).map(|j| std::array::from_fn(|k| self.gr_matrix(cg(Gen::ALL[k], j)))).collect();
        let labels = (0..self.dim())
            .map(|k| format!("[{}] {}", self.gr_level[k], self.base.module.labels()[self.gr_pivot[k]]))
            .collect();
        let weights = (0..self.dim()).map(|k| self.gr_weight(k).clone()).collect();
        let parities = (0..self.dim()).map(|k| self.gr_parity(k)).collect();
        let module = FiniteModule::new(labels, weights, parities, Poly::monomial(top as usize + 1), tables)
            .expect("graded tables have matching shapes");
        CyclicModule::new(module, self.gr_cyclic())
    }

    pub fn summary_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Summary {
            dim: usize,
            factors: usize,
            top_degree: u32,
            graded_dims: Vec<usize>,
            graded_character: serde_json::Value,
        }
        serde_json::to_value(Summary {
            dim: self.dim(),
            factors: self.factors,
            top_degree: self.top_degree(),
            graded_dims: self.graded_dims(),
            graded_character: self.graded_character().to_json(),
        })
        .expect("summary serializes")
    }
}

/// One factor `K(κ, m)^z` of a fusion product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FusionFactor {
    pub kappa: Q,
    pub size: u32,
    pub z: Q,
}

/// Factors of a fusion product of Kac modules, with pairwise-distinct points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FusionSpec {
    factors: Vec<FusionFactor>,
}

impl FusionSpec {
    pub fn new(factors: Vec<FusionFactor>) -> Result<FusionSpec> {
        if factors.is_empty() {
            return Err(Error::InvalidParameter("a fusion product needs at least one factor".into()));
        }
        if let Some(f) = factors.iter().find(|f| f.size == 0) {
            return Err(Error::InvalidParameter(format!("factor at z = {} has size 0", f.z)));
        }
        for (i, a) in factors.iter().enumerate() {
            if factors[..i].iter().any(|b| b.z == a.z) {
                return Err(Error::RepeatedParameter);
            }
        }
        Ok(FusionSpec { factors })
    }

    /// Factors of the given sizes with `z_i = i`, `κ_0 = λ1` and `κ_i = 0` otherwise,
    /// unless points or `κ`'s are supplied.
    pub fn from_sizes(lambda1: &Q, sizes: &[u32], z: Option<&[Q]>, kappa: Option<&[Q]>) -> Result<FusionSpec> {
        let n = sizes.len();
        let z: Vec<Q> = match z {
            Some(z) if z.len() != n => {
                return Err(Error::InvalidParameter(format!("expected {n} fusion points, got {}", z.len())))
            }
            Some(z) => z.to_vec(),
            None => (0..n as i64).map(Q::from_int).collect(),
        };
        let kappa: Vec<Q> = match kappa {
            Some(k) if k.len() != n => return Err(Error::InvalidParameter(format!("expected {n} values of κ, got {}", k.len()))),
            Some(k) => {
                let total: Q = k.iter().cloned().sum();
                if &total != lambda1 {
                    return Err(Error::InvalidParameter(format!("κ values sum to {total}, expected λ1 = {lambda1}")));
                }
                k.to_vec()
            }
            None => (0..n).map(|i| if i == 0 { lambda1.clone() } else { Q::zero() }).collect(),
        };
        FusionSpec::new(
            sizes.iter().zip(z).zip(kappa).map(|((&size, z), kappa)| FusionFactor { kappa, size, z }).collect(),
        )
    }

    /// `V(λ1, ξ)`: one factor per part of `ξ`.
    pub fn for_partition(lambda1: &Q, xi: &Partition, z: Option<&[Q]>, kappa: Option<&[Q]>) -> Result<FusionSpec> {
        if xi.is_empty() {
            return Err(Error::InvalidParameter("the empty partition has no fusion factors".into()));
        }
        FusionSpec::from_sizes(lambda1, xi.parts(), z, kappa)
    }

    /// Graded local Weyl module: `λ2` factors of size 1.
    pub fn weyl(lambda: &Weight) -> Result<FusionSpec> {
        let l2 = crate::algebra::check_dominant(lambda)?;
        FusionSpec::from_sizes(&lambda.h1, &vec![1; l2 as usize], None, None)
    }

    /// `D(ℓ, λ)`: `q-1` factors of size `ℓ` and one of size `m`, `λ2 = (q-1)ℓ + m`, `0 < m ≤ ℓ`.
    pub fn demazure(ell: u32, lambda: &Weight) -> Result<FusionSpec> {
        let l2 = crate::algebra::check_dominant(lambda)?;
        if ell == 0 {
            return Err(Error::InvalidParameter("ℓ must be positive".into()));
        }
        let q = l2.div_ceil(ell);
        let m = l2 - (q - 1) * ell;
        let mut sizes = vec![ell; q as usize - 1];
        sizes.push(m);
        FusionSpec::from_sizes(&lambda.h1, &sizes, None, None)
    }

    /// `W(λ, N)` for `N < λ2`: `N - m` factors of size `q` and `m` of size `q + 1`,
    /// `λ2 = qN + m`. For `N ≥ λ2` this is the Weyl module.
    pub fn truncated(n: u32, lambda: &Weight) -> Result<FusionSpec> {
        let l2 = crate::algebra::check_dominant(lambda)?;
        if n == 0 {
            return Err(Error::InvalidParameter("N must be positive".into()));
        }
        if n >= l2 {
            return FusionSpec::weyl(lambda);
        }
        let (q, m) = (l2 / n, l2 % n);
        let mut sizes = vec![q + 1; m as usize];
        sizes.extend(std::iter::repeat_n(q, (n - m) as usize));
        FusionSpec::from_sizes(&lambda.h1, &sizes, None, None)
    }

    pub fn factors(&self) -> &[FusionFactor] {
        &self.factors
    }

    /// Highest weight `(Σκ_i, Σm_i)` of the fused cyclic vector.
    pub fn highest_weight(&self) -> Weight {
        let h1: Q = self.factors.iter().map(|f| f.kappa.clone()).sum();
        let h2: u32 = self.factors.iter().map(|f| f.size).sum();
        Weight::new(h1, h2 as i64)
    }

    /// Tensor product of the evaluation modules, before filtering.
    pub fn tensor_module(&self) -> Result<CyclicModule> {
        let parts = self
            .factors
            .iter()
            .map(|f| Ok(evaluation(&kac_b2(&Weight::new(f.kappa.clone(), f.size as i64))?, &f.z)))
            .collect::<Result<Vec<_>>>()?;
        tensor(&parts)
    }
}

/// Fusion product `K(κ_1, m_1)^{z_1} * … * K(κ_n, m_n)^{z_n}`.
pub fn fuse(spec: &FusionSpec) -> Result<GradedRealization> {
    filtrate_with_factors(&spec.tensor_module()?, spec.factors.len())
}

/// Filtration of an arbitrary cyclic module, recording how many evaluation
/// points it was built from.
pub fn filtrate_fused(m: &CyclicModule, factors: usize) -> Result<GradedRealization> {
    filtrate_with_factors(m, factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcore::trivial_module;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    fn spec(fs: &[(i64, u32, i64)]) -> FusionSpec {
        FusionSpec::new(fs.iter().map(|&(k, m, z)| FusionFactor { kappa: q(k), size: m, z: q(z) }).collect()).unwrap()
    }

    #[test]
    fn single_factor_is_concentrated_in_degree_zero() {
        let g = fuse(&spec(&[(2, 3, 5)])).unwrap();
        assert_eq!(g.graded_dims(), vec![12]);
        assert_eq!(g.top_degree(), 0);
        assert!(g.apply_gr(cg(Gen::Y2, 1), &g.gr_cyclic()).is_zero());
    }

    #[test]
    fn two_factor_products() {
        let g = fuse(&spec(&[(1, 1, 0), (2, 1, 1)])).unwrap();
        assert_eq!(g.graded_dims().iter().sum::<usize>(), 16);
        let h = g.base().module.apply(cg(Gen::H1, 1), &g.base().cyclic);
        assert!(g.in_filtration(&h, 0));
        let g = fuse(&spec(&[(1, 2, 0), (0, 1, 1)])).unwrap();
        assert_eq!(g.dim(), 32);
        assert_eq!(g.graded_dims().iter().sum::<usize>(), 32);
    }

    #[test]
    fn graded_characters() {
        let t = filtrate(&trivial_module()).unwrap();
        let c = t.graded_character();
        assert_eq!(c.terms().collect::<Vec<_>>(), vec![(&Weight::zero(), 0, 1)]);
        let g = fuse(&spec(&[(3, 1, 0)])).unwrap();
        let expect = crate::characters::exterior_character().shifted(&Weight::new(3, 0));
        assert_eq!(g.graded_character().forget_degree(), expect);
        let a = fuse(&FusionSpec::for_partition(&q(1), &Partition::new(vec![2, 1]).unwrap(), None, None).unwrap()).unwrap();
        let z = [Q::new(1, 2), q(-3)];
        let k = [q(-1), q(2)];
        let b = fuse(&FusionSpec::for_partition(&q(1), &Partition::new(vec![2, 1]).unwrap(), Some(&z), Some(&k)).unwrap()).unwrap();
        assert_eq!(a.graded_character(), b.graded_character());
        assert_eq!(a.graded_character().forget_degree(), a.character());
    }

    #[test]
    fn filtration_is_compatible_with_degrees() {
        let g = fuse(&spec(&[(0, 1, 0), (0, 1, 1), (1, 1, 2)])).unwrap();
        assert_eq!(g.dim(), 64);
        let top = g.top_degree();
        for n in 0..=top {
            let sub = g.filtration_subspace(n);
            for v in sub.basis() {
                for x in Gen::ALL {
                    for a in 0..=3u32 {
                        let w = g.base().module.apply(cg(x, a), v);
                        assert!(g.in_filtration(&w, (n + a) as i64), "{x}({a}) F({n})");
                    }
                }
            }
        }
        for x in Gen::ALL {
            for s in 3..6 {
                assert!(g.apply_gr(cg(x, s), &g.gr_cyclic()).is_zero());
            }
        }
        assert_eq!(g.gr_closure_dim(&g.gr_cyclic()), 64);
    }

    #[test]
    fn graded_module_is_a_representation() {
        let g = fuse(&spec(&[(1, 1, 0), (0, 1, 2)])).unwrap();
        let m = g.as_module();
        m.module.check_representation(g.top_degree() + 1).unwrap();
        assert_eq!(char_of(&m.module), g.character());
        let again = filtrate(&m).unwrap();
        assert_eq!(again.graded_character(), g.graded_character());
    }

    #[test]
    fn representatives_are_canonical() {
        let g = fuse(&spec(&[(0, 1, 0), (0, 1, 1)])).unwrap();
        for n in 0..=g.top_degree() {
            let range = g.level_range(n);
            for (i, r) in g.representatives(n).iter().enumerate() {
                assert_eq!(g.gr_coords(r, n).unwrap(), SparseVec::unit(range.start + i));
            }
        }
    }

    #[test]
    fn spec_validation() {
        assert!(matches!(
            FusionSpec::new(vec![
                FusionFactor { kappa: q(0), size: 1, z: q(1) },
                FusionFactor { kappa: q(0), size: 1, z: q(1) }
            ]),
            Err(Error::RepeatedParameter)
        ));
        assert!(FusionSpec::new(vec![]).is_err());
        assert!(FusionSpec::from_sizes(&q(1), &[1, 1], None, Some(&[q(0), q(0)])).is_err());
        let d = FusionSpec::demazure(2, &Weight::new(1, 5)).unwrap();
        assert_eq!(d.factors().iter().map(|f| f.size).collect::<Vec<_>>(), vec![2, 2, 1]);
        let t = FusionSpec::truncated(2, &Weight::new(1, 5)).unwrap();
        assert_eq!(t.factors().iter().map(|f| f.size).collect::<Vec<_>>(), vec![3, 2]);
        assert_eq!(FusionSpec::truncated(7, &Weight::new(1, 5)).unwrap(), FusionSpec::weyl(&Weight::new(1, 5)).unwrap());
        assert_eq!(t.highest_weight(), Weight::new(1, 5));
    }

    #[test]
    fn non_cyclic_input_is_rejected() {
        let k = kac_b2(&Weight::new(2, 2)).unwrap();
        let sing = crate::repcore::singular_vectors(&k.module, &crate::repcore::b2_raising());
        let (_, sub) = sing.by_weight.iter().find(|(w, _)| *w != Weight::new(2, 2)).unwrap();
        let m = CyclicModule { module: k.module.clone(), cyclic: sub.basis()[0].clone() };
        assert!(matches!(filtrate(&m), Err(Error::NotCyclic { .. })));
    }
}
