//! Exact computations with finite-dimensional commutative algebras over ℚ:
//! Jordan identity checks, invariants, second cohomology, the catalog of
//! three-dimensional Jordan algebras and their degenerations.

pub mod algebra;
pub mod catalog;
pub mod cohomology;
pub mod deformation;
pub mod error;
pub mod exactla;

pub use algebra::{Algebra, Subspace};
pub use error::{Error, Result};
pub use exactla::{RatMatrix, RatVec, Rational, RationalFunction, Signature, UniPoly};
