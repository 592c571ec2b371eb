//! Production matrices for plane graphs on point sets in convex position.
//!
//! Graph classes (k-angulations, geometric graphs, connected graphs,
//! non-crossing partitions and the relation matrix built from connected
//! counts) are encoded as upper Hessenberg-Toeplitz matrices. Iterating
//! `v^{i+1} = A v^i` counts the graphs by root degree. The crate also
//! evaluates the closed-form entry formulas, computes characteristic
//! polynomials three independent ways, builds eigenvectors from them and
//! checks everything against brute-force enumeration at small sizes.

pub mod cli;
pub mod closed_form;
pub mod error;
pub mod exact;
pub mod oracle;
pub mod production;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{BigInt, BigRational, CountVector, HTMatrix, IntPolynomial};
pub use production::{GraphClass, GraphClassSpec};
