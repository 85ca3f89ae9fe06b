use std::collections::BTreeMap;

use crate::algebra::{Borel, Gen, Weight};
use crate::error::{Error, Result};
use crate::exactla::{RationalMatrix, SparseVec, Subspace};
use crate::pbw::{cg, CurrentGen};

use super::module::{CyclicModule, FiniteModule};

/// Basis of the vectors supported on `space` that every operator kills.
pub(crate) fn joint_kernel_in(m: &FiniteModule, ops: &[CurrentGen], space: &[usize]) -> Vec<SparseVec> {
    if space.is_empty() {
        return Vec::new();
    }
    let mut row_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut entries = Vec::new();
    for (k, op) in ops.iter().enumerate() {
        let a = m.action(*op);
        for (j, &col) in space.iter().enumerate() {
            for (i, c) in a.column(col).entries() {
                let next = row_of.len();
                let r = *row_of.entry((k, *i)).or_insert(next);
                entries.push((r, j, c.clone()));
            }
        }
    }
    let mut dense = RationalMatrix::zeros(row_of.len(), space.len());
    for (r, j, c) in entries {
        dense.set(r, j, c);
    }
    dense
        .nullspace()
        .into_iter()
        .map(|v| SparseVec::from_pairs(v.into_iter().enumerate().map(|(j, c)| (space[j], c)).collect()))
        .collect()
}

/// Joint kernel of a set of operators, split by weight.
#[derive(Clone, Debug)]
pub struct SingularVectors {
    pub by_weight: Vec<(Weight, Subspace)>,
}

impl SingularVectors {
    pub fn dim(&self) -> usize {
        self.by_weight.iter().map(|(_, s)| s.dim()).sum()
    }

    pub fn weights(&self) -> Vec<Weight> {
        self.by_weight.iter().flat_map(|(w, s)| std::iter::repeat_n(w.clone(), s.dim())).collect()
    }
}

pub fn singular_vectors(m: &FiniteModule, raising: &[CurrentGen]) -> SingularVectors {
    let mut by_weight = Vec::new();
    for w in m.distinct_weights() {
        let space = m.weight_space(&w);
        let kernel = joint_kernel_in(m, raising, &space);
        if !kernel.is_empty() {
            by_weight.push((w, Subspace::span(m.dim(), &kernel)));
        }
    }
    SingularVectors { by_weight }
}

/// Raising operators of `b(2)` in degree 0.
pub fn b2_raising() -> Vec<CurrentGen> {
    Borel::B2.raising().into_iter().map(|g| cg(g, 0)).collect()
}

/// Irreducibility of a `b(2)` highest-weight module via its singular vectors.
pub fn is_irreducible(m: &CyclicModule) -> Result<bool> {
    let raising = b2_raising();
    if raising.iter().any(|x| !m.module.apply(*x, &m.cyclic).is_zero()) {
        return Err(Error::InvalidParameter("cyclic vector is not a highest-weight vector for b(2)".into()));
    }
    let sing = singular_vectors(&m.module, &raising);
    Ok(sing.dim() == 1)
}

/// gl(2) highest weights of the g0-summands: weights of a basis of `ker x2(0)`.
pub fn g0_decompose(m: &FiniteModule) -> Vec<Weight> {
    let mut out = singular_vectors(m, &[cg(Gen::X2, 0)]).weights();
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Dimension of the gl(2) irreducible with highest weight `w`.
pub fn gl2_dim(w: &Weight) -> usize {
    w.h2_int().map(|n| n as usize + 1).unwrap_or(0)
}

/// `Σ (λ2 + 1)` over a g0-decomposition.
pub fn g0_total_dim(ws: &[Weight]) -> usize {
    ws.iter().map(gl2_dim).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcore::{irreducible_gl2, kac_b2, kac_induced, trivial_module};

    fn w(a: i64, b: i64) -> Weight {
        Weight::new(a, b)
    }

    fn sorted(mut v: Vec<Weight>) -> Vec<Weight> {
        v.sort_by(|a, b| b.cmp(a));
        v
    }

    #[test]
    fn singular_vector_counts() {
        assert_eq!(singular_vectors(&trivial_module().module, &b2_raising()).dim(), 1);
        assert_eq!(singular_vectors(&kac_b2(&w(3, 2)).unwrap().module, &b2_raising()).dim(), 1);
        assert!(singular_vectors(&kac_b2(&w(2, 2)).unwrap().module, &b2_raising()).dim() >= 2);
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&kac_b2(&w(3, 2)).unwrap()).unwrap());
        assert!(!is_irreducible(&kac_b2(&w(0, 2)).unwrap()).unwrap());
        assert!(is_irreducible(&kac_b2(&w(0, 0)).unwrap()).unwrap());
        let mut k = kac_b2(&w(3, 2)).unwrap();
        k.cyclic = SparseVec::unit(k.dim() - 1);
        assert!(is_irreducible(&k).is_err());
    }

    #[test]
    fn g0_decompositions() {
        let k = kac_induced(Borel::B1, &w(3, 1)).unwrap();
        assert_eq!(g0_decompose(&k.module), sorted(vec![w(3, 1), w(2, 1), w(3, 2), w(2, 0)]));
        let k = kac_induced(Borel::B1, &w(3, 0)).unwrap();
        assert_eq!(g0_decompose(&k.module), sorted(vec![w(3, 0), w(2, 0), w(3, 1)]));
        let k = kac_induced(Borel::B3, &w(0, 0)).unwrap();
        assert!(g0_decompose(&k.module).contains(&w(0, 0)));
        let l = irreducible_gl2(&crate::exactla::Q::from_int(3), &crate::exactla::Q::from_int(2)).unwrap();
        assert_eq!(g0_decompose(&l.module), vec![w(3, 2)]);
        let k = kac_b2(&w(5, 3)).unwrap();
        let d = g0_decompose(&k.module);
        assert_eq!(d, sorted(vec![w(5, 2), w(4, 2), w(5, 3), w(4, 1)]));
        assert_eq!(g0_total_dim(&d), k.dim());
    }
}
