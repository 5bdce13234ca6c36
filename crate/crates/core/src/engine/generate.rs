//! Seeded generators of six- and seven-term solutions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::decomposition::{zero_alpha, CoordinateInstance, DoubleLineQuartic};
use crate::error::{Error, Result};
use crate::forms::{conic_rank, HomogeneousForm};
use crate::linalg::{check_distinct, moment_matrix, vandermonde_nullspace, VandermondeSystem};
use crate::scalar::Scalar;

pub const MAX_ATTEMPTS: usize = 1000;
/// Seed producing the reference instance of [`generate_six_term_family`].
pub const CANONICAL_SEED: u64 = 0;
const ALPHA_RANGE: i64 = 9;

/// Independent stream for trial `index` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// `n / d` with `n` in `[-range, range]` and `d` in `1..=3`.
pub fn random_rational<T: Scalar>(rng: &mut impl Rng, range: i64) -> T {
    T::ratio(rng.random_range(-range..=range), rng.random_range(1..=3))
}

pub fn random_distinct_nodes<T: Scalar>(rng: &mut impl Rng, n: usize, range: i64) -> Result<Vec<T>> {
    for _ in 0..MAX_ATTEMPTS {
        let mut nodes: Vec<T> = Vec::with_capacity(n);
        for _ in 0..n {
            let h = random_rational(rng, range);
            if !nodes.contains(&h) {
                nodes.push(h);
            }
        }
        if nodes.len() == n {
            return Ok(nodes);
        }
    }
    Err(Error::GenerationFailure {
        attempts: MAX_ATTEMPTS,
        reason: format!("could not draw {n} distinct nodes with range {range}"),
    })
}

/// Six terms `x0 + h x1 + k x2` on two values of `h`, three terms each with
/// `k = (0, c, -c)` and weights `(2 lambda, -lambda, -lambda)`. The value is
/// `-2 x2^2 sum lambda c^2 (6 (x0 + h x1)^2 + c^2 x2^2)`.
pub fn generate_six_term_family<T: Scalar>(h_pair: (T, T), seed: u64) -> Result<CoordinateInstance<T>> {
    let (h0, h1) = h_pair;
    if h0 == h1 {
        return Err(Error::InvalidInput(format!("h values must differ, both are {h0}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=MAX_ATTEMPTS {
        let params: [(i64, i64); 2] = if seed == CANONICAL_SEED && attempt == 1 {
            [(1, 1), (1, 1)]
        } else {
            [0, 1].map(|_| {
                let c = rng.random_range(1..=4);
                let lambda = rng.random_range(1..=4) * if rng.random_bool(0.5) { 1 } else { -1 };
                (c, lambda)
            })
        };
        let mut h = Vec::new();
        let mut k = Vec::new();
        let mut alpha = Vec::new();
        for (hv, (c, lambda)) in [h0.clone(), h1.clone()].into_iter().zip(params) {
            h.extend([hv.clone(), hv.clone(), hv]);
            k.extend([T::zero(), T::int(c), T::int(-c)]);
            alpha.extend([T::int(2 * lambda), T::int(-lambda), T::int(-lambda)]);
        }
        let inst = CoordinateInstance::new(h, k, alpha)?;
        let q = super::decomposition::extract_cofactor(&inst.value(), &HomogeneousForm::var(3, 2))?;
        if conic_rank(&q)? == 3 {
            return Ok(inst);
        }
    }
    Err(Error::GenerationFailure {
        attempts: MAX_ATTEMPTS,
        reason: "no nondegenerate conic found".into(),
    })
}

/// Random `alpha = s a1 + t a2` in the moment-4 annihilator of `h` with no
/// zero entry. Returns the vector and the number of draws used.
pub fn sample_alpha<T: Scalar>(h: &[T], seed: u64) -> Result<(Vec<T>, usize)> {
    check_distinct(h)?;
    let basis = vandermonde_nullspace(&VandermondeSystem::new(h.to_vec(), 4))?;
    if basis.len() != 2 {
        return Err(Error::InvalidInput(format!(
            "expected 7 nodes (2-dimensional annihilator), found {}",
            h.len()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=MAX_ATTEMPTS {
        let s = rng.random_range(-ALPHA_RANGE..=ALPHA_RANGE);
        let t = rng.random_range(-ALPHA_RANGE..=ALPHA_RANGE);
        if s == 0 && t == 0 {
            continue;
        }
        let alpha: Vec<T> = basis[0]
            .iter()
            .zip(&basis[1])
            .map(|(a, b)| T::int(s) * a.clone() + T::int(t) * b.clone())
            .collect();
        if zero_alpha(&alpha).is_none() {
            return Ok((alpha, attempt));
        }
    }
    Err(Error::GenerationFailure {
        attempts: MAX_ATTEMPTS,
        reason: "every sampled alpha had a zero entry".into(),
    })
}

/// A seven-term solution with `alpha` sampled from `seed` and
/// `beta = sum_j free_params[j] b_j` over the moment-3 annihilator.
pub fn generate_tangent_instance<T: Scalar>(
    h: &[T],
    free_params: &[T; 3],
    seed: u64,
) -> Result<(CoordinateInstance<T>, DoubleLineQuartic<T>)> {
    let (alpha, _) = sample_alpha(h, seed)?;
    let basis = vandermonde_nullspace(&VandermondeSystem::new(h.to_vec(), 3))?;
    let mut beta = vec![T::zero(); h.len()];
    for (c, b) in free_params.iter().zip(&basis) {
        for (bi, x) in beta.iter_mut().zip(b) {
            *bi = bi.clone() + c.clone() * x.clone();
        }
    }
    tangent_instance_from(h, &alpha, &beta)
}

/// The instance `k = beta / alpha` for given moment annihilators, and its
/// value as `x2^2 q`.
pub fn tangent_instance_from<T: Scalar>(
    h: &[T],
    alpha: &[T],
    beta: &[T],
) -> Result<(CoordinateInstance<T>, DoubleLineQuartic<T>)> {
    if alpha.len() != h.len() || beta.len() != h.len() {
        return Err(Error::LengthMismatch { left: h.len(), right: alpha.len().max(beta.len()) });
    }
    check_distinct(h)?;
    if let Some(index) = zero_alpha(alpha) {
        return Err(Error::ZeroAlpha { index });
    }
    let annihilates = |v: &[T], m: i32| {
        moment_matrix(h, None, m).mul_vec(v).map(|r| r.iter().all(|x| x.is_zero()))
    };
    if !annihilates(alpha, 4)? {
        return Err(Error::InvalidInput("alpha does not annihilate moments up to 4".into()));
    }
    if !annihilates(beta, 3)? {
        return Err(Error::InvalidInput("beta does not annihilate moments up to 3".into()));
    }
    let k = beta.iter().zip(alpha).map(|(b, a)| b.clone() / a.clone()).collect();
    let inst = CoordinateInstance::new(h.to_vec(), k, alpha.to_vec())?;
    let quartic = DoubleLineQuartic::from_quartic(inst.value(), HomogeneousForm::var(3, 2))
        .map_err(|e| Error::TheoremViolation(format!("moment solution is not x2^2 q: {e}")))?;
    Ok((inst, quartic))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::line_tangent_to_conic;
    use crate::{Form, Rational};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::int(x)).collect()
    }

    #[test]
    fn canonical_family_is_the_example() {
        let inst = generate_six_term_family((Rational::int(0), Rational::int(1)), CANONICAL_SEED).unwrap();
        assert_eq!(inst.h, ints(&[0, 0, 0, 1, 1, 1]));
        assert_eq!(inst.k, ints(&[0, 1, -1, 0, 1, -1]));
        assert_eq!(inst.alpha, ints(&[2, -1, -1, 2, -1, -1]));
    }

    #[test]
    fn family_values() {
        for seed in 1..20 {
            let inst = generate_six_term_family((Rational::int(0), Rational::int(2)), seed).unwrap();
            let q = crate::engine::extract_cofactor(&inst.value(), &Form::var(3, 2)).unwrap();
            assert_eq!(conic_rank(&q).unwrap(), 3);
            assert_eq!(generate_six_term_family((Rational::int(0), Rational::int(2)), seed).unwrap(), inst);
        }
        assert!(matches!(
            generate_six_term_family((Rational::int(1), Rational::int(1)), 0),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn reference_tangent_instance() {
        let (inst, dl) = tangent_instance_from(
            &ints(&[0, 1, 2, 3, 4, 5, 6]),
            &ints(&[2, -11, 25, -30, 20, -7, 1]),
            &ints(&[1, -4, 6, -4, 1, 0, 0]),
        )
        .unwrap();
        assert_eq!(inst.value(), dl.target);
        let t = line_tangent_to_conic(&dl.x, &dl.q).unwrap();
        assert!(t.tangent);
    }

    #[test]
    fn zero_beta_gives_zero_q() {
        let h = ints(&[0, 1, 2, 3, 4, 5, 6]);
        let (_, dl) = generate_tangent_instance(&h, &[Rational::int(0), Rational::int(0), Rational::int(0)], 5).unwrap();
        assert!(dl.q.is_zero());
    }

    #[test]
    fn generator_is_deterministic_and_validates() {
        let h = ints(&[0, 1, 2, 3, 4, 5, 6]);
        let p = [Rational::int(1), Rational::int(-2), Rational::int(3)];
        assert_eq!(generate_tangent_instance(&h, &p, 9).unwrap(), generate_tangent_instance(&h, &p, 9).unwrap());
        let bad = ints(&[0, 1, 2, 3, 4, 5, 5]);
        assert!(matches!(generate_tangent_instance(&bad, &p, 9), Err(Error::DegenerateNodes { .. })));
        assert!(tangent_instance_from(&h, &ints(&[1; 7]), &ints(&[0; 7])).is_err());
    }

    #[test]
    fn node_sampling() {
        let mut rng = trial_rng(3, 0);
        let nodes: Vec<Rational> = random_distinct_nodes(&mut rng, 7, 6).unwrap();
        assert!(check_distinct(&nodes).is_ok());
        let mut rng = trial_rng(3, 0);
        assert!(random_distinct_nodes::<Rational>(&mut rng, 2, 0).is_err());
    }
}
