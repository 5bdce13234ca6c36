//! Waring decompositions of double-line quartics and the checks built on them.

mod analyze;
mod certificate;
mod claim;
mod decomposition;
pub mod generate;
mod invariant;
mod kernel;
pub mod suite;

pub use analyze::{analyze, AnalysisReport};
pub use certificate::{check_hypotheses, tangency_certificate, TangencyCertificate};
pub use claim::{six_term_claim_check, two_value_witness_check, ClaimReport, TwoValueReport, CLAIM_VARS};
pub use decomposition::{
    double_line_division, extract_cofactor, is_double_line, CoordinateInstance, DoubleLineQuartic, Term,
    WaringDecomposition, QUARTIC,
};
pub use generate::{generate_six_term_family, generate_tangent_instance, tangent_instance_from};
pub use invariant::{
    f_invariant, restricted_quadratic, vandermonde_product, verify_identity_perturbed,
    verify_identity_specialized, IdentityInstance, PARAM_NAMES,
};
pub use kernel::{apolar_eval, pairwise_independent, phi_apply, phi_kernel, phi_matrix, psi_apply, KernelBasis};
