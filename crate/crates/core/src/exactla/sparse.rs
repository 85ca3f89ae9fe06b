//! Sparse vectors and column-major sparse matrices over `Q`.

use serde::Serialize;

use super::dense::RationalMatrix;
use super::rational::Q;

/// Sparse vector: entries sorted by index, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct SparseVec {
    entries: Vec<(usize, Q)>,
}

impl SparseVec {
    pub fn new() -> SparseVec {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize) -> SparseVec {
        SparseVec { entries: vec![(i, Q::one())] }
    }

    /// Builds from arbitrary `(index, value)` pairs, summing duplicates.
    pub fn from_pairs(mut pairs: Vec<(usize, Q)>) -> SparseVec {
        pairs.sort_by_key(|p| p.0);
        let mut entries: Vec<(usize, Q)> = Vec::with_capacity(pairs.len());
        for (i, c) in pairs {
            match entries.last_mut() {
                Some((j, d)) if *j == i => *d += &c,
                _ => entries.push((i, c)),
            }
        }
        entries.retain(|(_, c)| !c.is_zero());
        SparseVec { entries }
    }

    pub fn from_dense(v: &[Q]) -> SparseVec {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, n: usize) -> Vec<Q> {
        let mut out = vec![Q::zero(); n];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Q)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> Q {
        match self.entries.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    pub fn leading(&self) -> Option<&(usize, Q)> {
        self.entries.first()
    }

    pub fn scale(&mut self, c: &Q) {
        if c.is_zero() {
            self.entries.clear();
            return;
        }
        for (_, v) in &mut self.entries {
            *v = &*v * c;
        }
    }

    pub fn scaled(&self, c: &Q) -> SparseVec {
        let mut out = self.clone();
        out.scale(c);
        out
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Q, other: &SparseVec) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, _)), Some((j, _))) if i == j => {
                    let (i, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = &x + &(c * y);
                    if !s.is_zero() {
                        out.push((i, s));
                    }
                }
                (Some((i, _)), Some((j, _))) if i < j => out.push(a.next().unwrap()),
                (Some(_), Some(_)) | (None, Some(_)) => {
                    let (j, y) = b.next().unwrap();
                    out.push((*j, c * y));
                }
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, None) => break,
            }
        }
        self.entries = out;
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.axpy(&Q::one(), other);
        out
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.axpy(&-Q::one(), other);
        out
    }

    /// Indices that carry a nonzero entry.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|e| e.0)
    }

    /// Rescales so the leading entry is 1.
    pub fn normalized(&self) -> SparseVec {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scaled(&c.recip()),
        }
    }
}

/// Anything that maps sparse vectors linearly.
pub trait LinearOp {
    fn apply(&self, v: &SparseVec) -> SparseVec;
}

/// Column-major sparse matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> SparseMatrix {
        SparseMatrix { rows, cols: vec![SparseVec::new(); cols] }
    }

    pub fn identity(n: usize) -> SparseMatrix {
        SparseMatrix { rows: n, cols: (0..n).map(SparseVec::unit).collect() }
    }

    pub fn from_columns(rows: usize, cols: Vec<SparseVec>) -> SparseMatrix {
        debug_assert!(cols.iter().all(|c| c.entries.last().is_none_or(|e| e.0 < rows)));
        SparseMatrix { rows, cols }
    }

    pub fn from_dense(m: &RationalMatrix) -> SparseMatrix {
        let cols = (0..m.cols())
            .map(|j| SparseVec::from_dense(&(0..m.rows()).map(|i| m.get(i, j).clone()).collect::<Vec<_>>()))
            .collect();
        SparseMatrix { rows: m.rows(), cols }
    }

    pub fn to_dense(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.rows, self.cols.len());
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col.entries() {
                m.set(*i, j, c.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.cols[j].get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_zero)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(SparseVec::nnz).sum()
    }

    pub fn scaled(&self, c: &Q) -> SparseMatrix {
        SparseMatrix { rows: self.rows, cols: self.cols.iter().map(|col| col.scaled(c)).collect() }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Q, other: &SparseMatrix) {
        assert_eq!((self.rows, self.cols.len()), (other.rows, other.cols.len()));
        for (a, b) in self.cols.iter_mut().zip(&other.cols) {
            a.axpy(c, b);
        }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut out = self.clone();
        out.axpy(&Q::one(), other);
        out
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut out = self.clone();
        out.axpy(&-Q::one(), other);
        out
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols.len(), other.rows);
        SparseMatrix { rows: self.rows, cols: other.cols.iter().map(|c| self.apply(c)).collect() }
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut pairs: Vec<Vec<(usize, Q)>> = vec![Vec::new(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col.entries() {
                pairs[*i].push((j, c.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols.len(),
            cols: pairs.into_iter().map(|p| SparseVec { entries: p }).collect(),
        }
    }
}

impl LinearOp for SparseMatrix {
    fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut pairs = Vec::new();
        for (j, c) in v.entries() {
            for (i, a) in self.cols[*j].entries() {
                pairs.push((*i, c * a));
            }
        }
        SparseVec::from_pairs(pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_dense() -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-3i64..=3, 12)
    }

    fn matrix(rows: usize, cols: usize, v: &[i64]) -> RationalMatrix {
        RationalMatrix::from_fn(rows, cols, |i, j| Q::from_int(v[i * cols + j]))
    }

    #[test]
    fn axpy_cancels() {
        let a = SparseVec::from_pairs(vec![(0, Q::one()), (3, Q::from_int(2))]);
        let mut b = a.clone();
        b.axpy(&-Q::one(), &a);
        assert!(b.is_zero());
    }

    proptest! {
        #[test]
        fn sparse_product_matches_dense(x in small_dense(), y in small_dense()) {
            let a = matrix(3, 4, &x);
            let b = matrix(4, 3, &y);
            let sa = SparseMatrix::from_dense(&a);
            let sb = SparseMatrix::from_dense(&b);
            prop_assert_eq!(sa.mul(&sb).to_dense(), a.mul(&b));
            prop_assert_eq!(sa.transpose().to_dense(), a.transpose());
        }
    }
}
