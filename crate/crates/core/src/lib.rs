//! Exact computations with finite-dimensional modules for the current
//! superalgebra sl(1|2)[t].
//!
//! The crate builds Kac modules, evaluation modules and their fusion
//! products with exact rational arithmetic, filters them by `t`-degree,
//! and checks defining relations of graded Weyl, Chari-Venkatesh,
//! Demazure-type and truncated Weyl modules against the resulting
//! graded modules.

pub mod algebra;
pub mod characters;
pub mod combinatorics;
pub mod error;
pub mod exactla;
pub mod fusion;
pub mod pbw;
pub mod presentations;
pub mod repcore;
pub mod suites;

pub use error::{Error, Result};
