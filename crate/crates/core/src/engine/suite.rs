//! Single randomized trials, deterministic in `(seed, index)`, for the batch
//! checks.

use rand::Rng;

use super::certificate::{tangency_certificate, TangencyCertificate};
use super::claim::{six_term_claim_check, two_value_witness_check};
use super::decomposition::CoordinateInstance;
use super::generate::{
    generate_six_term_family, generate_tangent_instance, random_distinct_nodes, sample_alpha, trial_rng,
};
use super::invariant::f_invariant;
use crate::error::Result;
use crate::forms::{line_tangent_to_conic, restrict, BinaryQuadratic, HomogeneousForm};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremTrial<T: Scalar> {
    pub index: u64,
    pub instance: CoordinateInstance<T>,
    pub q: HomogeneousForm<T>,
    /// Draws needed to find an `alpha` without zero entries.
    pub alpha_draws: usize,
    pub f_zero: bool,
    /// Discriminant test on `q|_{x2=0}`; `None` when `q = 0`.
    pub tangent: Option<bool>,
    pub certificate: Option<TangencyCertificate<T>>,
    /// Certificate `Q` equals the restriction of `q`.
    pub q_matches: bool,
    pub error: Option<String>,
}

impl<T: Scalar> TheoremTrial<T> {
    pub fn q_zero(&self) -> bool {
        self.q.is_zero()
    }

    /// A degenerate `q = 0` member passes vacuously.
    pub fn passed(&self) -> bool {
        self.error.is_none()
            && (self.q_zero()
                || self.f_zero
                    && self.tangent == Some(true)
                    && self.certificate.is_some()
                    && self.q_matches)
    }
}

/// Random nodes in `[-range, range]` (denominators up to 3), random integer
/// `beta` coordinates in the same range, and the seven-term pipeline.
pub fn theorem_trial<T: Scalar>(seed: u64, index: u64, range: i64) -> Result<TheoremTrial<T>> {
    let mut rng = trial_rng(seed, index);
    let h: Vec<T> = random_distinct_nodes(&mut rng, 7, range)?;
    let free = [0, 1, 2].map(|_| T::int(rng.random_range(-range..=range)));
    let alpha_seed: u64 = rng.random();
    let (_, alpha_draws) = sample_alpha(&h, alpha_seed)?;
    let (instance, dl) = generate_tangent_instance(&h, &free, alpha_seed)?;

    let mut trial = TheoremTrial {
        index,
        f_zero: f_invariant(&instance).is_zero(),
        instance,
        q: dl.q.clone(),
        alpha_draws,
        tangent: None,
        certificate: None,
        q_matches: false,
        error: None,
    };
    if dl.q.is_zero() {
        return Ok(trial);
    }
    trial.tangent = Some(line_tangent_to_conic(&dl.x, &dl.q)?.tangent);
    match tangency_certificate(&trial.instance.to_decomposition(), &dl.x) {
        Ok(cert) => {
            trial.q_matches =
                cert.q_restricted == BinaryQuadratic::from_form(&restrict(&dl.q, &dl.x)?)?;
            trial.certificate = Some(cert);
        }
        Err(e) => trial.error = Some(e.to_string()),
    }
    Ok(trial)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimTrial<T: Scalar> {
    pub index: u64,
    pub h: Vec<T>,
    pub quartic_zero: bool,
    pub translation_family: bool,
    /// The pair of `h` values of the generated two-value family.
    pub family_pair: (T, T),
    pub family_applicable: bool,
    pub error: Option<String>,
}

impl<T: Scalar> ClaimTrial<T> {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.quartic_zero && self.translation_family && self.family_applicable
    }
}

/// Random distinct six nodes for the vanishing claim, and a random two-value
/// family for the witness check.
pub fn claim_trial<T: Scalar>(seed: u64, index: u64, range: i64) -> Result<ClaimTrial<T>> {
    let mut rng = trial_rng(seed, index);
    let h: Vec<T> = random_distinct_nodes(&mut rng, 6, range)?;
    let pair: Vec<T> = random_distinct_nodes(&mut rng, 2, range)?;
    let family_seed: u64 = rng.random();
    let claim = six_term_claim_check(&h)?;
    let mut trial = ClaimTrial {
        index,
        quartic_zero: claim.identically_zero(),
        translation_family: claim.translation_family,
        h,
        family_pair: (pair[0].clone(), pair[1].clone()),
        family_applicable: false,
        error: None,
    };
    let family = generate_six_term_family(trial.family_pair.clone(), family_seed)?;
    match two_value_witness_check(&family) {
        Ok(r) => trial.family_applicable = r.applicable,
        Err(e) => trial.error = Some(e.to_string()),
    }
    Ok(trial)
}
