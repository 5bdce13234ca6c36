//! Exact dense linear algebra and the moment (Vandermonde) systems built on it.

mod matrix;
mod vandermonde;

pub use matrix::{Matrix, Rref};
pub use vandermonde::{
    check_distinct, k_space, lagrange_weights, moment_matrix, same_span, vandermonde_nullspace,
    KSpace, VandermondeSystem,
};
