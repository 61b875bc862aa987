//! Exact multivariate polynomial arithmetic, Buchberger's algorithm under
//! the lex order, and conversion of zero-dimensional ideals into
//! structure-constant algebras by forgetting the unit.

pub mod buchberger;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod quotient;

pub use buchberger::{buchberger, reduce, s_polynomial, GroebnerBasis};
pub use monomial::{Monomial, VarList};
pub use parse::{infer_vars, parse_ideal, parse_polynomial};
pub use poly::Polynomial;
pub use quotient::{maximal_ideal_algebra, quotient_algebra, standard_monomials, QuotientAlgebra};
