//! Constructive tangency certificates for seven-term decompositions of `x^2 q`.
//!
//! Given `sum_i alpha_i l_i^4 = x^2 q` where the seven lines `l_i = 0` meet
//! `x = 0` in seven distinct points, the construction produces:
//!
//! * `a`, a generator of `ker phi_5` (all entries nonzero);
//! * `w in W` with `a_i L_i(w) = alpha_i`, i.e. `a = alpha / L(w)`;
//! * `v` with `x(v) = 1` and the scalars `l(v)`;
//! * `b in S^2 W` with `l(v) L(w) = L(b)` entrywise;
//! * `Q = 6 sum_i alpha_i l_i(v)^2 L_i^2`, which equals `q|_W`,
//!
//! and `w` spans the kernel of the polarization of `Q`, so `x = 0` touches
//! `q = 0` at `[w]`. With all `alpha_i = 1` this is exactly the pure case.

use num_traits::Zero;

use super::decomposition::{double_line_division, zero_alpha, WaringDecomposition};
use super::kernel::{apolar_eval, pairwise_independent, phi_apply, phi_kernel};
use crate::error::{Error, Result};
use crate::forms::{
    lift_from_line, point_off_line, restrict, BinaryQuadratic, FormTuple, HomogeneousForm,
    Monomial,
};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

pub const TERMS: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangencyCertificate<T: Scalar> {
    pub line: HomogeneousForm<T>,
    pub alpha: Vec<T>,
    /// The restrictions `L_i = l_i|_W` in the coordinates of `line_basis`.
    pub restricted: FormTuple<T>,
    pub a: Vec<T>,
    pub w: [T; 2],
    pub v: Vec<T>,
    pub lv: Vec<T>,
    /// `b in S^2 W`, as a binary quadratic whose coefficients are its
    /// monomial coordinates.
    pub b: HomogeneousForm<T>,
    pub q_restricted: BinaryQuadratic<T>,
    /// `[w]`, normalized.
    pub tangency_point: [T; 2],
    pub tangency_point_in_plane: Vec<T>,
}

fn violation(msg: impl Into<String>) -> Error {
    Error::TheoremViolation(msg.into())
}

/// Checks the hypotheses under which a certificate exists. Returns the cofactor
/// `q` and the restricted forms on success.
pub fn check_hypotheses<T: Scalar>(
    dec: &WaringDecomposition<T>,
    x: &HomogeneousForm<T>,
) -> Result<(HomogeneousForm<T>, FormTuple<T>)> {
    if dec.len() != TERMS {
        return Err(Error::Precondition(format!(
            "expected {TERMS} terms, found {}",
            dec.len()
        )));
    }
    if let Some(i) = zero_alpha(&dec.alphas()) {
        return Err(Error::Precondition(format!("coefficient of term {i} is zero")));
    }
    let (q, rem) = double_line_division(&dec.value(), x)?;
    if !rem.is_zero() {
        return Err(Error::Precondition(format!(
            "value is not divisible by the square of the line (remainder {rem})"
        )));
    }
    if q.is_zero() {
        return Err(Error::Precondition("value is zero, so q = 0".into()));
    }
    let restricted = FormTuple::new(
        dec.linear_forms().iter().map(|l| restrict(l, x)).collect::<Result<Vec<_>>>()?,
    )?;
    if let Some((i, j)) = pairwise_independent(&restricted)? {
        let msg = if i == j {
            format!("line {i} coincides with x = 0")
        } else {
            format!("lines {i} and {j} meet x = 0 in the same point")
        };
        return Err(Error::Precondition(msg));
    }
    Ok((q, restricted))
}

pub fn tangency_certificate<T: Scalar>(
    dec: &WaringDecomposition<T>,
    x: &HomogeneousForm<T>,
) -> Result<TangencyCertificate<T>> {
    let (q, restricted) = check_hypotheses(dec, x)?;
    let alpha = dec.alphas();
    let coeffs: Vec<Vec<T>> =
        restricted.entries().iter().map(|l| l.linear_coeffs()).collect::<Result<_>>()?;

    // (1) generator of ker phi_5
    let k5 = phi_kernel(&restricted, 5)?;
    if k5.dim() != 1 {
        return Err(violation(format!("ker phi_5 has dimension {}", k5.dim())));
    }
    let a = k5.basis[0].clone();
    if let Some(i) = a.iter().position(Zero::is_zero) {
        return Err(violation(format!("generator of ker phi_5 vanishes at {i}")));
    }

    // (2) w with L_i(w) = alpha_i / a_i for every i
    let lw_target: Vec<T> = alpha.iter().zip(&a).map(|(al, ai)| al.clone() / ai.clone()).collect();
    let w = solve_exact(&coeffs, &lw_target)
        .ok_or_else(|| violation("alpha is not in the image of psi_(a,1,4)"))?;
    let w = [w[0].clone(), w[1].clone()];

    // (3) v with x(v) = 1 and l(v)
    let v = point_off_line(x)?;
    let lv: Vec<T> =
        dec.linear_forms().iter().map(|l| l.evaluate(&v)).collect::<Result<_>>()?;

    // (4) b in S^2 W with L(b) = l(v) L(w)
    let quad_monos = Monomial::all(2, 2);
    let rows: Vec<Vec<T>> = coeffs
        .iter()
        .map(|c| {
            quad_monos
                .iter()
                .map(|m| {
                    m.exps()
                        .iter()
                        .zip(c)
                        .fold(T::one(), |acc, (&e, ci)| acc * num_traits::pow(ci.clone(), e as usize))
                })
                .collect()
        })
        .collect();
    let lw: Vec<T> = coeffs
        .iter()
        .map(|c| c[0].clone() * w[0].clone() + c[1].clone() * w[1].clone())
        .collect();
    let rhs: Vec<T> = lv.iter().zip(&lw).map(|(x, y)| x.clone() * y.clone()).collect();
    let b_coords =
        solve_exact(&rows, &rhs).ok_or_else(|| violation("l(v) L(w) is not of the form L(b)"))?;
    let b = HomogeneousForm::from_terms(2, 2, quad_monos.into_iter().zip(b_coords))?;

    // (5) Q = 6 sum_i alpha_i l_i(v)^2 L_i^2
    let weights: Vec<T> = alpha
        .iter()
        .zip(&lv)
        .map(|(al, l)| T::int(6) * al.clone() * l.clone() * l.clone())
        .collect();
    let q_form = FormTuple::from_scalars(2, &weights).dot(&restricted.pow(2))?;
    let q_restricted = BinaryQuadratic::from_form(&q_form)?;

    // (6) [w] is the tangency point
    let mut point = vec![w[0].clone(), w[1].clone()];
    T::normalize_direction(&mut point);
    let tangency_point = [point[0].clone(), point[1].clone()];
    let tangency_point_in_plane = lift_from_line(x, &tangency_point)?;

    let cert = TangencyCertificate {
        line: x.clone(),
        alpha,
        restricted,
        a,
        w,
        v,
        lv,
        b,
        q_restricted,
        tangency_point,
        tangency_point_in_plane,
    };
    cert.verify()?;
    let expected = BinaryQuadratic::from_form(&restrict(&q, x)?)?;
    if cert.q_restricted != expected {
        return Err(violation(format!(
            "Q = {} differs from q|_W = {}",
            cert.q_restricted.to_form(),
            expected.to_form()
        )));
    }
    Ok(cert)
}

/// Unique-or-any exact solution of a consistent overdetermined system.
fn solve_exact<T: Scalar>(rows: &[Vec<T>], rhs: &[T]) -> Option<Vec<T>> {
    let cols = rows.first()?.len();
    let m = Matrix::from_rows(cols, rows.to_vec()).ok()?;
    m.solve(rhs).ok().flatten()
}

impl<T: Scalar> TangencyCertificate<T> {
    /// Re-checks every witness relation from scratch.
    pub fn verify(&self) -> Result<()> {
        let n = self.restricted.len();
        if phi_apply(&self.a, &self.restricted, 5)?.num_terms() != 0 {
            return Err(violation("a . L^5 does not vanish"));
        }
        if self.a.iter().any(Zero::is_zero) {
            return Err(violation("a has a zero entry"));
        }
        let entries = self.restricted.entries();
        let lw: Vec<T> = entries
            .iter()
            .map(|l| l.evaluate(&self.w))
            .collect::<Result<_>>()?;
        // a L(w) = alpha, in particular (1, ..., 1) for a pure decomposition.
        for (i, ((a, l), alpha)) in self.a.iter().zip(&lw).zip(&self.alpha).enumerate() {
            if a.clone() * l.clone() != *alpha {
                return Err(violation(format!("a_{i} L_{i}(w) != alpha_{i}")));
            }
        }
        for i in 0..n {
            if self.lv[i].clone() * lw[i].clone() != apolar_eval(&entries[i], &self.b)? {
                return Err(violation(format!("l_{i}(v) L_{i}(w) != L_{i}(b)")));
            }
        }
        if !self.line.evaluate(&self.v)?.is_one() {
            return Err(violation("x(v) != 1"));
        }
        let basis = [[T::one(), T::zero()], [T::zero(), T::one()]];
        for u in &basis {
            if !self.q_restricted.polar(&self.w, u).is_zero() {
                return Err(violation("w is not in the kernel of the polarization of Q"));
            }
        }
        if !self.q_restricted.discriminant().is_zero() {
            return Err(violation("Q has nonzero discriminant"));
        }
        Ok(())
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::generate::tangent_instance_from;
    use crate::forms::line_tangent_to_conic;
    use crate::{Form, Rational};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::int(x)).collect()
    }

    #[test]
    fn certificate_on_reference_instance() {
        let (inst, dl) = tangent_instance_from(
            &ints(&[0, 1, 2, 3, 4, 5, 6]),
            &ints(&[2, -11, 25, -30, 20, -7, 1]),
            &ints(&[1, -4, 6, -4, 1, 0, 0]),
        )
        .unwrap();
        assert!(!dl.q.is_zero());
        let cert = tangency_certificate(&inst.to_decomposition(), &Form::var(3, 2)).unwrap();
        let independent = line_tangent_to_conic(&dl.x, &dl.q).unwrap();
        assert!(independent.tangent);
        assert_eq!(independent.point, Some(cert.tangency_point.clone()));
        assert_eq!(cert.q_restricted, independent.restriction);
    }

    #[test]
    fn preconditions() {
        let x2 = Form::var(3, 2);
        // Sum of fourth powers free of x2: not divisible by x2^2.
        let h = ints(&[0, 0, 1, 2, 3, 4, 5]);
        let dec = crate::Instance::new(h, ints(&[0; 7]), ints(&[1; 7])).unwrap();
        let err = tangency_certificate(&dec.to_decomposition(), &x2).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)), "{err}");

        // beta = 0 gives q = 0.
        let (inst, dl) = tangent_instance_from(
            &ints(&[0, 1, 2, 3, 4, 5, 6]),
            &ints(&[2, -11, 25, -30, 20, -7, 1]),
            &ints(&[0; 7]),
        )
        .unwrap();
        assert!(dl.q.is_zero());
        let err = tangency_certificate(&inst.to_decomposition(), &x2).unwrap_err();
        assert_eq!(err, Error::Precondition("value is zero, so q = 0".into()));

        let six = crate::Instance::new(ints(&[0; 6]), ints(&[0; 6]), ints(&[1; 6])).unwrap();
        assert!(matches!(
            tangency_certificate(&six.to_decomposition(), &x2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn tampered_certificate_fails_verification() {
        let (inst, _) = tangent_instance_from(
            &ints(&[0, 1, 2, 3, 4, 5, 6]),
            &ints(&[2, -11, 25, -30, 20, -7, 1]),
            &ints(&[1, -4, 6, -4, 1, 0, 0]),
        )
        .unwrap();
        let cert = tangency_certificate(&inst.to_decomposition(), &Form::var(3, 2)).unwrap();
        let mut bad = cert.clone();
        bad.w[0] = bad.w[0].clone() + Rational::int(1);
        assert!(matches!(bad.verify(), Err(Error::TheoremViolation(_))));
        let mut bad = cert;
        bad.a[3] = bad.a[3].clone() * Rational::int(2);
        assert!(bad.verify().is_err());
    }
}
