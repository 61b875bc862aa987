//! Exact-arithmetic toolkit for finite-dimensional algebras given by
//! structure constants, specialized to commutative nilalgebras satisfying
//! the Jacobi identity, with a Groebner-basis pipeline that rebuilds the
//! dimension-5 associative classification from polynomial ideals.

pub mod algebra;
pub mod brute;
pub mod catalog;
pub mod error;
pub mod field;
pub mod fileformat;
pub mod fingerprint;
pub mod groebner;
pub mod identity;
pub mod matrix;
pub mod morphism;
pub mod normalize5;
pub mod powers;
pub mod subspace;

pub use algebra::{Algebra, Symmetrize};
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use fingerprint::{fingerprint, Fingerprint};
pub use identity::{IdentityCheck, IdentityExpr, ProductTree};
pub use matrix::Matrix;
pub use morphism::LinearMap;
pub use subspace::Subspace;
