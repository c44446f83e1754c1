//! Exact computations with finite-dimensional Lie superalgebras over the
//! rationals: structure constants, named families, truncated free Lie
//! superalgebras, and the Schur multiplier, exterior product and exterior
//! center of a pair `(L, I)`.

pub mod algebra;
pub mod error;
pub mod expr;
pub mod families;
pub mod formulas;
pub mod freesuper;
pub mod json;
pub mod linalg;
pub mod pairs;
pub mod report;
pub mod scalar;
pub mod subspace;
pub mod superdim;

pub use algebra::{AlgebraBuilder, CentralProductReport, Element, LieSuperalgebra, Quotient, Violation};
pub use error::{Error, Result};
pub use scalar::Scalar;
pub use subspace::{GradedIdeal, Subspace};
pub use superdim::{Parity, SuperDim};
