//! Homogeneous forms in two or three variables over an exact field, the tuple
//! calculus on them, partial polarizations, and conic/line geometry.

pub mod conic;
mod form;
mod monomial;
mod parse;
mod polarization;
mod tuple;

pub use conic::{
    conic_matrix, conic_rank, lift_from_line, line_basis, line_tangent_to_conic, point_off_line,
    restrict, BinaryQuadratic, Tangency,
};
pub use form::HomogeneousForm;
pub use monomial::Monomial;
pub use polarization::{polarization_matrix, PolarizationMatrix};
pub use tuple::FormTuple;
