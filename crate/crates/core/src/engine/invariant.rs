//! The tangency invariant
//! `f = (sum alpha k^2 h)^2 - (sum alpha k^2)(sum alpha k^2 h^2)`
//! and its symbolic check on slices of fixed nodes `h`.

use super::decomposition::CoordinateInstance;
use crate::error::{Error, Result};
use crate::forms::{BinaryQuadratic, FormTuple, HomogeneousForm};
use crate::linalg::{check_distinct, vandermonde_nullspace, VandermondeSystem};
use crate::poly::Poly;
use crate::scalar::{powu, Scalar};

/// `A_e = sum_i alpha_i k_i^2 h_i^e` for `e = 0, 1, 2`.
fn weighted_moments<T: Scalar>(inst: &CoordinateInstance<T>) -> [T; 3] {
    let mut m = [T::zero(), T::zero(), T::zero()];
    for i in 0..inst.len() {
        let w = inst.alpha[i].clone() * inst.k[i].clone() * inst.k[i].clone();
        for (e, acc) in m.iter_mut().enumerate() {
            *acc = acc.clone() + w.clone() * powu(&inst.h[i], e as u32);
        }
    }
    m
}

pub fn f_invariant<T: Scalar>(inst: &CoordinateInstance<T>) -> T {
    let [a0, a1, a2] = weighted_moments(inst);
    a1.clone() * a1 - a0 * a2
}

/// `6 sum_i alpha_i k_i^2 (y0 + h_i y1)^2`, built through form tuples. For a
/// solution of the moment system this is the restriction of `q` to `x2 = 0`,
/// and its discriminant is `144 f`.
pub fn restricted_quadratic<T: Scalar>(inst: &CoordinateInstance<T>) -> Result<BinaryQuadratic<T>> {
    let lines = inst
        .h
        .iter()
        .map(|h| HomogeneousForm::linear(&[T::one(), h.clone()]))
        .collect::<Result<Vec<_>>>()?;
    let weights: Vec<T> = (0..inst.len())
        .map(|i| T::int(6) * inst.alpha[i].clone() * inst.k[i].clone() * inst.k[i].clone())
        .collect();
    let form = if lines.is_empty() {
        HomogeneousForm::zero(2, 2)
    } else {
        FormTuple::from_scalars(2, &weights).dot(&FormTuple::new(lines)?.pow(2))?
    };
    BinaryQuadratic::from_form(&form)
}

/// `g = prod_{j > i} (h_i - h_j)`.
pub fn vandermonde_product<T: Scalar>(h: &[T]) -> T {
    let mut g = T::one();
    for i in 0..h.len() {
        for j in i + 1..h.len() {
            g = g * (h[i].clone() - h[j].clone());
        }
    }
    g
}

pub const IDENTITY_NODES: usize = 7;
pub const PARAM_NAMES: [&str; 5] = ["s", "t", "u1", "u2", "u3"];

/// Outcome of the symbolic check on one slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityInstance<T: Scalar> {
    pub h: Vec<T>,
    /// `N(s, t, u1, u2, u3)`: the cleared numerator `f * prod alpha_i^2`
    /// (plus `prod alpha_i^2` when perturbed).
    pub f_value: Poly<T>,
    pub g_value: T,
    /// Dimensions of the alpha- and beta-parameter spaces.
    pub alpha_dim: usize,
    pub beta_dim: usize,
    /// Term products formed while expanding `N`, before like terms merge.
    pub raw_products: usize,
    pub perturbed: bool,
}

impl<T: Scalar> IdentityInstance<T> {
    pub fn is_zero(&self) -> bool {
        self.f_value.is_zero()
    }

    pub fn residue(&self) -> String {
        self.f_value.display_with(&PARAM_NAMES).to_string()
    }
}

/// Symbolic check on the slice of fixed nodes `h`: with
/// `alpha = s a1 + t a2` (moment-4 annihilator) and
/// `beta = u1 b1 + u2 b2 + u3 b3` (moment-3 annihilator), and
/// `alpha_i k_i^2 = beta_i^2 / alpha_i`, expands `f * prod alpha_i^2`.
pub fn verify_identity_specialized<T: Scalar>(h: &[T]) -> Result<IdentityInstance<T>> {
    identity_numerator(h, false)
}

/// Negative control: the same pipeline applied to `f + 1`.
pub fn verify_identity_perturbed<T: Scalar>(h: &[T]) -> Result<IdentityInstance<T>> {
    identity_numerator(h, true)
}

fn identity_numerator<T: Scalar>(h: &[T], perturbed: bool) -> Result<IdentityInstance<T>> {
    if h.len() != IDENTITY_NODES {
        return Err(Error::LengthMismatch { left: IDENTITY_NODES, right: h.len() });
    }
    check_distinct(h)?;
    let n = h.len();
    let a = vandermonde_nullspace(&VandermondeSystem::new(h.to_vec(), 4))?;
    let b = vandermonde_nullspace(&VandermondeSystem::new(h.to_vec(), 3))?;
    let nv = 2 + b.len();

    let alpha: Vec<Poly<T>> = (0..n)
        .map(|i| Poly::linear(nv, &[(0, a[0][i].clone()), (1, a[1][i].clone())]))
        .collect();
    let beta: Vec<Poly<T>> = (0..n)
        .map(|i| {
            let coeffs: Vec<(usize, T)> =
                b.iter().enumerate().map(|(j, bj)| (2 + j, bj[i].clone())).collect();
            Poly::linear(nv, &coeffs)
        })
        .collect();

    let mut raw = 0;
    let mut mul = |x: &Poly<T>, y: &Poly<T>| {
        let (p, c) = x.mul_counting(y);
        raw += c;
        p
    };

    // P_i = prod_{j != i} alpha_j, so alpha_i k_i^2 prod_j alpha_j = beta_i^2 P_i.
    let mut cleared = Vec::with_capacity(n);
    for (i, b) in beta.iter().enumerate() {
        let mut p = Poly::constant(nv, T::one());
        for (j, aj) in alpha.iter().enumerate() {
            if j != i {
                p = mul(&p, aj);
            }
        }
        let bb = mul(b, b);
        cleared.push(mul(&bb, &p));
    }
    let moments: Vec<Poly<T>> = (0..3u32)
        .map(|e| {
            cleared.iter().zip(h).fold(Poly::zero(nv), |acc, (c, hi)| {
                acc.add(&c.scale(&powu(hi, e)))
            })
        })
        .collect();
    let mut numerator = mul(&moments[1], &moments[1]).sub(&mul(&moments[0], &moments[2]));
    if perturbed {
        let prod = alpha.iter().fold(Poly::constant(nv, T::one()), |acc, aj| mul(&acc, aj));
        numerator = numerator.add(&mul(&prod, &prod));
    }

    let g_value = vandermonde_product(h);
    debug_assert!(!g_value.is_zero());
    Ok(IdentityInstance {
        h: h.to_vec(),
        f_value: numerator,
        g_value,
        alpha_dim: a.len(),
        beta_dim: b.len(),
        raw_products: raw,
        perturbed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::{Instance, Rational};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::int(x)).collect()
    }

    fn padded(h: &[i64], k: &[i64], alpha: &[i64]) -> Instance {
        let pad = |v: &[i64]| {
            let mut out = ints(v);
            out.resize(7, Rational::zero());
            out
        };
        let mut hh = ints(h);
        hh.extend((hh.len()..7).map(|i| Rational::int(10 + i as i64)));
        Instance::new(hh, pad(k), pad(alpha)).unwrap()
    }

    #[test]
    fn f_on_reference_solution() {
        let alpha = ints(&[2, -11, 25, -30, 20, -7, 1]);
        let beta = ints(&[1, -4, 6, -4, 1, 0, 0]);
        let k = beta.iter().zip(&alpha).map(|(b, a)| b / a).collect();
        let inst = Instance::new(ints(&[0, 1, 2, 3, 4, 5, 6]), k, alpha).unwrap();
        assert!(f_invariant(&inst).is_zero());
    }

    #[test]
    fn f_direct_values() {
        let zero_k = Instance::new(ints(&[0, 1, 2, 3, 4, 5, 6]), ints(&[0; 7]), ints(&[3, 1, 4, 1, 5, 9, 2])).unwrap();
        assert!(f_invariant(&zero_k).is_zero());
        // A single weighted point is always degenerate.
        assert!(f_invariant(&padded(&[0], &[1], &[1])).is_zero());
        assert!(f_invariant(&padded(&[1], &[1], &[1])).is_zero());
        // (1 + 2)^2 - 2 (1 + 4) = -1
        assert_eq!(f_invariant(&padded(&[1, 2], &[1, 1], &[1, 1])), Rational::int(-1));
    }

    #[test]
    fn bridge_on_nonsolution() {
        let inst = padded(&[1, 2, -3], &[1, 2, 1], &[1, -1, 5]);
        let quad = restricted_quadratic(&inst).unwrap();
        assert_eq!(quad.discriminant(), f_invariant(&inst) * Rational::int(144));
    }

    #[test]
    fn vandermonde_product_values() {
        assert_eq!(vandermonde_product(&ints(&[0, 1, 2])), Rational::int(-2));
        assert!(vandermonde_product(&ints(&[1, 2, 1])).is_zero());
        assert_eq!(vandermonde_product::<Rational>(&[]), Rational::int(1));
    }

    #[test]
    fn identity_on_consecutive_nodes() {
        let h = ints(&[0, 1, 2, 3, 4, 5, 6]);
        let res = verify_identity_specialized(&h).unwrap();
        assert!(res.is_zero(), "{}", res.residue());
        assert_eq!((res.alpha_dim, res.beta_dim), (2, 3));
        assert!(res.raw_products > 0);
        assert!(!res.g_value.is_zero());

        let neg = verify_identity_perturbed(&h).unwrap();
        assert!(!neg.is_zero());
        // The residue involves s and t only.
        assert!(neg.f_value.terms().all(|(e, _)| e[2..].iter().all(|&x| x == 0)));
    }

    #[test]
    fn identity_rejects_bad_nodes() {
        let err = verify_identity_specialized(&ints(&[0, 1, 2, 3, 4, 5, 5])).unwrap_err();
        assert!(matches!(err, Error::DegenerateNodes { first: 5, second: 6, .. }));
        assert!(verify_identity_specialized(&ints(&[0, 1, 2])).is_err());
    }
}
