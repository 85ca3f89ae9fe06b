//! Exact linear algebra over the rationals.

mod dense;
mod rational;
mod sparse;
mod subspace;

pub use dense::RationalMatrix;
pub use rational::{ParseQError, Q};
pub use sparse::{LinearOp, SparseMatrix, SparseVec};
pub use subspace::{closure, rank_of, EchelonBasis, Subspace};

/// Nullspace of a dense matrix as a canonical subspace.
pub fn nullspace(m: &RationalMatrix) -> Subspace {
    let vs: Vec<SparseVec> = m.nullspace().iter().map(|v| SparseVec::from_dense(v)).collect();
    Subspace::span(m.cols(), &vs)
}

/// Reduced row echelon form and rank.
pub fn rref(m: &RationalMatrix) -> (RationalMatrix, usize) {
    let (r, piv) = m.rref();
    (r, piv.len())
}
