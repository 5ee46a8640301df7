//! Exact computations with finite-dimensional pre-Lie algebras.
//!
//! The crate covers structure-constant algebras and their modules, the
//! pre-Lie cochain complex and its cohomology, crossed modules and crossed
//! module extensions together with the 3-cocycle they determine, the
//! conversions from Lie, Rota-Baxter Lie and dendriform crossed modules, and
//! a degree-truncated free pre-Lie algebra on labeled rooted trees.
//!
//! Everything is generic over [`Field`]; the `*Q` aliases below fix the
//! scalars to exact rationals, which is what the rest of the tooling uses.

pub mod algebra;
pub mod catalog;
pub mod cochain;
pub mod error;
pub mod free;
pub mod functors;
pub mod linalg;
pub mod scalar;
pub mod xmod;

pub use error::{Error, Result};
pub use scalar::Field;

/// Arbitrary precision rationals.
pub type Q = num_rational::BigRational;

pub type MatrixQ = linalg::Matrix<Q>;
pub type SubspaceQ = linalg::Subspace<Q>;
pub type PreLieAlgebraQ = algebra::PreLieAlgebra<Q>;
pub type LieAlgebraQ = algebra::LieAlgebra<Q>;
pub type RepresentationQ = algebra::Representation<Q>;
pub type CochainQ = cochain::Cochain<Q>;
pub type CrossedModuleQ = xmod::CrossedModule<Q>;
pub type ExtensionQ = xmod::Extension<Q>;
pub type TreePolyQ = free::TreePoly<Q>;
