//! Six-term decompositions of `x2^2 q`: with distinct `h` the quartic
//! vanishes, and a nondegenerate non-tangent `q` forces two triples of equal
//! `h` values.

use num_traits::Zero;

use super::decomposition::{extract_cofactor, zero_alpha, CoordinateInstance, QUARTIC};
use crate::error::{Error, Result};
use crate::forms::{conic_rank, line_tangent_to_conic, HomogeneousForm};
use crate::linalg::{check_distinct, k_space, same_span, vandermonde_nullspace, VandermondeSystem};
use crate::poly::Poly;
use crate::scalar::Scalar;

pub const CLAIM_NODES: usize = 6;
pub const CLAIM_VARS: [&str; 5] = ["x0", "x1", "x2", "r0", "r1"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimReport<T: Scalar> {
    pub h: Vec<T>,
    /// Generator of the moment-4 annihilator.
    pub alpha: Vec<T>,
    /// Basis of the solutions `k`.
    pub k_basis: Vec<Vec<T>>,
    /// `sum_i alpha_i (x0 + h_i x1 + (r0 k1_i + r1 k2_i) x2)^4`.
    pub quartic: Poly<T>,
    /// The `k`-space equals `span{(1, ..., 1), h}`.
    pub translation_family: bool,
}

impl<T: Scalar> ClaimReport<T> {
    pub fn identically_zero(&self) -> bool {
        self.quartic.is_zero()
    }

    pub fn passed(&self) -> bool {
        self.identically_zero() && self.translation_family
    }
}

pub fn six_term_claim_check<T: Scalar>(h: &[T]) -> Result<ClaimReport<T>> {
    if h.len() != CLAIM_NODES {
        return Err(Error::LengthMismatch { left: CLAIM_NODES, right: h.len() });
    }
    check_distinct(h)?;
    let alphas = vandermonde_nullspace(&VandermondeSystem::new(h.to_vec(), 4))?;
    let [alpha] = <[Vec<T>; 1]>::try_from(alphas).map_err(|v| {
        Error::TheoremViolation(format!("moment-4 annihilator has dimension {}", v.len()))
    })?;
    if let Some(i) = zero_alpha(&alpha) {
        return Err(Error::TheoremViolation(format!("alpha[{i}] vanishes")));
    }
    let ks = k_space(h, &alpha, 3)?;
    if ks.dim() != 2 {
        return Err(Error::TheoremViolation(format!("k-space has dimension {}", ks.dim())));
    }

    let nv = CLAIM_VARS.len();
    let x2 = Poly::var(nv, 2);
    let mut quartic = Poly::zero(nv);
    for i in 0..h.len() {
        let k = Poly::linear(nv, &[(3, ks.basis[0][i].clone()), (4, ks.basis[1][i].clone())]);
        let l = Poly::linear(nv, &[(0, T::one()), (1, h[i].clone())]).add(&k.mul(&x2));
        quartic = quartic.add(&l.pow(QUARTIC).scale(&alpha[i]));
    }

    let translations = vec![vec![T::one(); h.len()], h.to_vec()];
    let translation_family = same_span(&ks.basis, &translations);
    Ok(ClaimReport { h: h.to_vec(), alpha, k_basis: ks.basis, quartic, translation_family })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoValueReport<T: Scalar> {
    pub q: HomogeneousForm<T>,
    pub conic_rank: usize,
    /// `None` when `q = 0`.
    pub tangent: Option<bool>,
    /// Whether `q` is nondegenerate and not tangent, so the claim applies.
    pub applicable: bool,
    /// Distinct `h` values with multiplicities, in order of first appearance.
    pub groups: Vec<(T, usize)>,
}

pub fn two_value_witness_check<T: Scalar>(inst: &CoordinateInstance<T>) -> Result<TwoValueReport<T>> {
    if inst.len() != CLAIM_NODES {
        return Err(Error::Precondition(format!(
            "expected {CLAIM_NODES} terms, found {}",
            inst.len()
        )));
    }
    let x2 = HomogeneousForm::var(3, 2);
    let q = extract_cofactor(&inst.value(), &x2).map_err(|e| Error::Precondition(e.to_string()))?;
    let rank = conic_rank(&q)?;
    let tangent = if q.is_zero() { None } else { Some(line_tangent_to_conic(&x2, &q)?.tangent) };
    let applicable = rank == 3 && tangent == Some(false);

    let mut groups: Vec<(T, usize)> = Vec::new();
    for hi in &inst.h {
        match groups.iter_mut().find(|(v, _)| v == hi) {
            Some((_, c)) => *c += 1,
            None => groups.push((hi.clone(), 1)),
        }
    }
    if applicable {
        if groups.len() != 2 || groups.iter().any(|&(_, c)| c != 3) {
            let shape: Vec<String> = groups.iter().map(|(v, c)| format!("{v} x{c}")).collect();
            return Err(Error::TheoremViolation(format!(
                "nondegenerate non-tangent q with h multiset {}",
                shape.join(", ")
            )));
        }
        if let Some(i) = inst.alpha.iter().position(Zero::is_zero) {
            return Err(Error::TheoremViolation(format!("alpha[{i}] vanishes")));
        }
    }
    Ok(TwoValueReport { q, conic_rank: rank, tangent, applicable, groups })
}
