//! Exact construction, verification and classification of Waring
//! decompositions of plane quartics of the form `x^2 q`.
//!
//! All algorithms are generic over an exact field implementing [`Scalar`]; the
//! aliases below fix the field to arbitrary-precision rationals.

pub mod engine;
pub mod error;
pub mod forms;
pub mod linalg;
pub mod poly;
pub mod scalar;

pub use error::{Error, Result};
pub use num_traits::{One, Signed, Zero};
pub use scalar::{parse_scalar, Scalar};

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;

pub type Form = forms::HomogeneousForm<Rational>;
pub type Tuple = forms::FormTuple<Rational>;
pub type RationalMatrix = linalg::Matrix<Rational>;
pub type Decomposition = engine::WaringDecomposition<Rational>;
pub type Instance = engine::CoordinateInstance<Rational>;
pub type Certificate = engine::TangencyCertificate<Rational>;
pub type Report = engine::AnalysisReport<Rational>;
