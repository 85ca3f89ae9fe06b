use std::collections::VecDeque;

use super::dense::RationalMatrix;
use super::rational::Q;
use super::sparse::{LinearOp, SparseVec};

const NO_ROW: u32 = u32::MAX;

/// Incrementally built echelon basis.
///
/// Rows are never modified once inserted, so a row inserted while building
/// a filtration stays inside the filtration step it was added to. Each row
/// has leading entry 1 at its pivot.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    ambient: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
    pivot_row: Vec<u32>,
}

impl EchelonBasis {
    pub fn new(ambient: usize) -> EchelonBasis {
        EchelonBasis { ambient, rows: Vec::new(), pivots: Vec::new(), pivot_row: vec![NO_ROW; ambient] }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn row(&self, k: usize) -> &SparseVec {
        &self.rows[k]
    }

    pub fn pivot(&self, k: usize) -> usize {
        self.pivots[k]
    }

    /// Row index owning pivot column `col`, if any.
    pub fn row_of_pivot(&self, col: usize) -> Option<usize> {
        match self.pivot_row[col] {
            NO_ROW => None,
            r => Some(r as usize),
        }
    }

    fn eliminate(&self, v: &SparseVec, bound: usize, mut record: impl FnMut(usize, Q)) -> SparseVec {
        let mut v = v.clone();
        let mut pos = 0;
        while pos < v.nnz() {
            let (i, c) = v.entries()[pos].clone();
            match self.pivot_row[i] {
                r if r == NO_ROW || r as usize >= bound => pos += 1,
                r => {
                    v.axpy(&-&c, &self.rows[r as usize]);
                    record(r as usize, c);
                }
            }
        }
        v
    }

    /// Remainder of `v` after elimination against the basis.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.eliminate(v, self.rows.len(), |_, _| {})
    }

    /// Remainder of `v` after elimination against the first `bound` rows only.
    ///
    /// Those rows form an echelon basis of their own span, so the result is
    /// zero exactly when `v` lies in that span.
    pub fn reduce_prefix(&self, v: &SparseVec, bound: usize) -> SparseVec {
        self.eliminate(v, bound, |_, _| {})
    }

    /// Coordinates of `v` in the row basis, or `None` if `v` is outside the span.
    pub fn expand(&self, v: &SparseVec) -> Option<Vec<(usize, Q)>> {
        let mut coeffs = Vec::new();
        let rem = self.eliminate(v, self.rows.len(), |r, c| coeffs.push((r, c)));
        rem.is_zero().then_some(coeffs)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` if it is independent; returns the new row index.
    pub fn insert(&mut self, v: &SparseVec) -> Option<usize> {
        let rem = self.reduce(v);
        let (p, _) = rem.leading()?.clone();
        let row = rem.normalized();
        self.pivot_row[p] = self.rows.len() as u32;
        self.pivots.push(p);
        self.rows.push(row);
        Some(self.rows.len() - 1)
    }
}

/// Subspace of `Q^n` held as a canonical reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<SparseVec>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Vec::new() }
    }

    pub fn full(ambient: usize) -> Subspace {
        Subspace { ambient, basis: (0..ambient).map(SparseVec::unit).collect() }
    }

    pub fn span<'a>(ambient: usize, vs: impl IntoIterator<Item = &'a SparseVec>) -> Subspace {
        let mut e = EchelonBasis::new(ambient);
        for v in vs {
            e.insert(v);
        }
        Subspace::from_echelon(&e)
    }

    pub fn from_echelon(e: &EchelonBasis) -> Subspace {
        let mut order: Vec<usize> = (0..e.dim()).collect();
        order.sort_by_key(|&k| std::cmp::Reverse(e.pivot(k)));
        let mut reduced = EchelonBasis::new(e.ambient());
        let mut basis: Vec<(usize, SparseVec)> = Vec::with_capacity(e.dim());
        for k in order {
            // Rows with larger pivots are already fully reduced.
            let row = reduced.reduce_keep_leading(e.row(k), e.pivot(k));
            reduced.pivot_row[e.pivot(k)] = reduced.rows.len() as u32;
            reduced.pivots.push(e.pivot(k));
            reduced.rows.push(row.clone());
            basis.push((e.pivot(k), row));
        }
        basis.sort_by_key(|b| b.0);
        Subspace { ambient: e.ambient(), basis: basis.into_iter().map(|b| b.1).collect() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().map(|b| b.leading().unwrap().0).collect()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        let mut v = v.clone();
        for b in &self.basis {
            let p = b.leading().unwrap().0;
            let c = v.get(p);
            if !c.is_zero() {
                v.axpy(&-c, b);
            }
        }
        v.is_zero()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Subspace::span(self.ambient, self.basis.iter().chain(&other.basis))
    }

    pub fn to_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_rows(self.basis.iter().map(|b| b.to_dense(self.ambient)).collect())
    }
}

impl EchelonBasis {
    /// Clears entries at existing pivots other than `lead` (full back substitution).
    fn reduce_keep_leading(&self, v: &SparseVec, lead: usize) -> SparseVec {
        let mut v = v.clone();
        let cols: Vec<usize> = v.support().filter(|&i| i != lead && self.pivot_row[i] != NO_ROW).collect();
        for i in cols {
            let c = v.get(i);
            if !c.is_zero() {
                v.axpy(&-c, &self.rows[self.pivot_row[i] as usize]);
            }
        }
        v
    }
}

/// Smallest subspace containing `v` and stable under every operator.
pub fn closure(v: &SparseVec, ambient: usize, ops: &[&dyn LinearOp]) -> Subspace {
    let mut e = EchelonBasis::new(ambient);
    let mut queue = VecDeque::new();
    if e.insert(v).is_some() {
        queue.push_back(v.clone());
    }
    while let Some(u) = queue.pop_front() {
        for op in ops {
            let w = op.apply(&u);
            if e.insert(&w).is_some() {
                queue.push_back(w);
            }
        }
    }
    Subspace::from_echelon(&e)
}

/// Rank of a family of sparse vectors.
pub fn rank_of<'a>(ambient: usize, vs: impl IntoIterator<Item = &'a SparseVec>) -> usize {
    let mut e = EchelonBasis::new(ambient);
    vs.into_iter().filter(|v| e.insert(v).is_some()).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::SparseMatrix;
    use proptest::prelude::*;

    fn vecs(raw: &[i64], n: usize) -> Vec<SparseVec> {
        raw.chunks(n).map(|c| SparseVec::from_dense(&c.iter().map(|&x| Q::from_int(x)).collect::<Vec<_>>())).collect()
    }

    #[test]
    fn closure_of_shift_operator() {
        // Nilpotent shift e_i -> e_{i+1} on Q^4.
        let m = RationalMatrix::from_fn(4, 4, |i, j| if i == j + 1 { Q::one() } else { Q::zero() });
        let s = SparseMatrix::from_dense(&m);
        assert_eq!(closure(&SparseVec::unit(0), 4, &[&s]).dim(), 4);
        assert_eq!(closure(&SparseVec::unit(2), 4, &[&s]).dim(), 2);
    }

    proptest! {
        #[test]
        fn echelon_and_dense_rank_agree(raw in proptest::collection::vec(-2i64..=2, 30)) {
            let vs = vecs(&raw, 6);
            let dense = RationalMatrix::from_rows(vs.iter().map(|v| v.to_dense(6)).collect());
            let (r, _) = dense.rref();
            let sub = Subspace::span(6, &vs);
            prop_assert_eq!(sub.dim(), dense.rank());
            let canon: Vec<Vec<Q>> = (0..sub.dim()).map(|i| r.row(i).to_vec()).collect();
            prop_assert_eq!(sub.to_matrix(), RationalMatrix::from_rows(canon));
            for v in &vs {
                prop_assert!(sub.contains(v));
            }
        }

        #[test]
        fn expansion_reconstructs(raw in proptest::collection::vec(-3i64..=3, 24)) {
            let vs = vecs(&raw, 6);
            let mut e = EchelonBasis::new(6);
            for v in &vs[..3] {
                e.insert(v);
            }
            for v in &vs {
                match e.expand(v) {
                    Some(coeffs) => {
                        let mut back = SparseVec::new();
                        for (k, c) in coeffs {
                            back.axpy(&c, e.row(k));
                        }
                        prop_assert_eq!(&back, v);
                    }
                    None => prop_assert!(!e.contains(v)),
                }
            }
        }
    }
}
