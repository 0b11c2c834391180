//! Exact scalars, linear algebra, bilinear forms and polynomials.

mod form;
mod matrix;
mod poly;
mod rational;
mod scalar;
mod subspace;
mod univariate;

pub use form::{is_regular, BilinearSpace};
pub use matrix::{Matrix, Vector};
pub use poly::{Monomial, Polynomial};
pub use rational::{ParseRationalError, Rational};
pub use scalar::{Field, Scalar};
pub use subspace::{kernel, subspace_leq, Subspace};
pub use univariate::UniPoly;
