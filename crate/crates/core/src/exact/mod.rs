//! Exact arithmetic layer: binomials, integer polynomials in one variable,
//! Hessenberg-Toeplitz matrices and count vectors.

mod binomial;
mod matrix;
mod poly;

pub use binomial::{binomial, binomial_generalized, pow2};
pub use matrix::{poly_determinant_charpoly, CountVector, HTMatrix};
pub use poly::IntPolynomial;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
