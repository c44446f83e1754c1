//! Free Lie superalgebras: monomials, dimension counts and truncations.

pub mod counting;
pub mod monomial;
pub mod truncated;

pub use counting::{degree_dims, dim_multidegree, mobius, multidegree_parity, multidegrees, super_witt, witt, DegreeDims};
pub use monomial::{generate_monomials, GradedAlphabet, Monomial};
pub use truncated::{FreeBasisElement, TruncatedFreeAlgebra};
