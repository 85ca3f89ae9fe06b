//! Concrete finite-dimensional modules: gl(2) irreducibles, Kac modules,
//! evaluation, tensor and shifted modules, and singular-vector analysis.

mod analysis;
mod constructions;
mod kac;
mod module;

pub use analysis::{b2_raising, g0_decompose, g0_total_dim, gl2_dim, is_irreducible, singular_vectors, SingularVectors};
pub use constructions::{evaluation, shift, tensor};
pub use kac::{irreducible_gl2, kac_b2, kac_b2_via, kac_induced, trivial_module, KacRoute};
pub use module::{CyclicModule, FiniteModule, Poly};
