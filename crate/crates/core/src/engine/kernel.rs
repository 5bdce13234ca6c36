//! The maps `phi_d : K^n -> S^d W*, a -> a . L^d` and
//! `psi_(a,delta,d) : S^delta W -> ker phi_d, t -> a L(t)`.

use crate::error::{Error, Result};
use crate::forms::{FormTuple, HomogeneousForm, Monomial};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Basis of `ker phi_d` for a tuple of binary linear forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelBasis<T: Scalar> {
    pub degree: u32,
    pub forms: FormTuple<T>,
    pub basis: Vec<Vec<T>>,
}

impl<T: Scalar> KernelBasis<T> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn check_binary_linear<T: Scalar>(forms: &FormTuple<T>) -> Result<()> {
    for f in forms.entries() {
        if f.num_vars() != 2 {
            return Err(Error::VarCountMismatch { left: 2, right: f.num_vars() });
        }
        if f.degree() != 1 {
            return Err(Error::DegreeMismatch { left: 1, right: f.degree() });
        }
    }
    Ok(())
}

/// Matrix of `phi_d`: one row per degree-`d` binary monomial, one column per
/// entry of the tuple, holding the coefficients of `L_i^d`.
pub fn phi_matrix<T: Scalar>(forms: &FormTuple<T>, d: u32) -> Result<Matrix<T>> {
    check_binary_linear(forms)?;
    let monos = Monomial::all(2, d);
    let mut m = Matrix::zeros(monos.len(), forms.len());
    for (col, l) in forms.entries().iter().enumerate() {
        let p = l.pow(d);
        for (row, mono) in monos.iter().enumerate() {
            m.set(row, col, p.coeff(mono));
        }
    }
    Ok(m)
}

pub fn phi_kernel<T: Scalar>(forms: &FormTuple<T>, d: u32) -> Result<KernelBasis<T>> {
    let basis = phi_matrix(forms, d)?.nullspace();
    Ok(KernelBasis { degree: d, forms: forms.clone(), basis })
}

/// `a . L^d` as a binary form.
pub fn phi_apply<T: Scalar>(a: &[T], forms: &FormTuple<T>, d: u32) -> Result<HomogeneousForm<T>> {
    check_binary_linear(forms)?;
    FormTuple::from_scalars(2, a).dot(&forms.pow(d))
}

/// `L(t)`: evaluation of `t in S^delta W` on the linear form `L`, i.e.
/// `sum_beta t_beta c^beta` where `L = c_0 y0 + c_1 y1`. For `t = u^delta`
/// this is `L(u)^delta`.
pub fn apolar_eval<T: Scalar>(l: &HomogeneousForm<T>, t: &HomogeneousForm<T>) -> Result<T> {
    if l.num_vars() != t.num_vars() {
        return Err(Error::VarCountMismatch { left: l.num_vars(), right: t.num_vars() });
    }
    t.evaluate(&l.linear_coeffs()?)
}

/// `psi(t) = (a_i L_i(t))_i`.
pub fn psi_apply<T: Scalar>(
    a: &[T],
    forms: &FormTuple<T>,
    t: &HomogeneousForm<T>,
) -> Result<Vec<T>> {
    if a.len() != forms.len() {
        return Err(Error::LengthMismatch { left: forms.len(), right: a.len() });
    }
    check_binary_linear(forms)?;
    forms
        .entries()
        .iter()
        .zip(a)
        .map(|(l, ai)| Ok(ai.clone() * apolar_eval(l, t)?))
        .collect()
}

/// Whether no two entries of a tuple of binary linear forms are proportional
/// (and none vanishes): the points `[L_i]` are distinct.
pub fn pairwise_independent<T: Scalar>(forms: &FormTuple<T>) -> Result<Option<(usize, usize)>> {
    check_binary_linear(forms)?;
    let coeffs: Vec<Vec<T>> =
        forms.entries().iter().map(|l| l.linear_coeffs()).collect::<Result<_>>()?;
    for (i, c) in coeffs.iter().enumerate() {
        if c.iter().all(|x| x.is_zero()) {
            return Ok(Some((i, i)));
        }
    }
    for i in 0..coeffs.len() {
        for j in i + 1..coeffs.len() {
            let det = coeffs[i][0].clone() * coeffs[j][1].clone()
                - coeffs[i][1].clone() * coeffs[j][0].clone();
            if det.is_zero() {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::scalar::powu;
    use crate::{Form, Rational};

    fn q(n: i64) -> Rational {
        Rational::int(n)
    }

    fn nodes_forms(h: &[i64]) -> FormTuple<Rational> {
        FormTuple::new(h.iter().map(|&hi| Form::linear(&[q(1), q(hi)]).unwrap()).collect())
            .unwrap()
    }

    #[test]
    fn phi_kernel_on_consecutive_nodes() {
        let forms = nodes_forms(&[0, 1, 2, 3, 4, 5, 6]);
        let k5 = phi_kernel(&forms, 5).unwrap();
        assert_eq!(k5.basis, vec![[1, -6, 15, -20, 15, -6, 1].map(q).to_vec()]);
        assert!(phi_apply(&k5.basis[0], &forms, 5).unwrap().is_zero());
        assert_eq!(phi_kernel(&forms, 6).unwrap().dim(), 0);
        for d in 0..=6 {
            assert_eq!(phi_kernel(&forms, d).unwrap().dim(), 6 - d as usize);
        }
    }

    #[test]
    fn phi_single_form_injective() {
        let forms = FormTuple::new(vec![Form::var(2, 0)]).unwrap();
        assert_eq!(phi_kernel(&forms, 0).unwrap().dim(), 0);
    }

    #[test]
    fn psi_maps_down_one_kernel() {
        let h = [0, 1, 2, 3, 4, 5, 6];
        let forms = nodes_forms(&h);
        let k4 = phi_kernel(&forms, 4).unwrap();
        let a: Vec<Rational> = k4.basis[0]
            .iter()
            .zip(&k4.basis[1])
            .map(|(x, y)| x * q(3) - y * q(2))
            .collect();
        let u = Form::linear(&[q(2), q(-5)]).unwrap();
        let out = psi_apply(&a, &forms, &u).unwrap();
        // Moment-sum oracle: sum_i out_i h_i^d = 0 for d <= 3.
        for d in 0..=3 {
            let s: Rational = out.iter().zip(&h).map(|(o, &hi)| o * powu(&q(hi), d)).sum();
            assert!(s.is_zero(), "moment {d}");
        }
        assert!(psi_apply(&a, &forms, &Form::zero(2, 1)).unwrap().iter().all(|x| x.is_zero()));
    }

    #[test]
    fn apolar_eval_on_powers() {
        let l = Form::linear(&[q(2), q(3)]).unwrap();
        let u = [q(1), q(-1)];
        let t = Form::linear(&u).unwrap().pow(3);
        assert_eq!(apolar_eval(&l, &t).unwrap(), powu(&q(2 - 3), 3));
    }

    #[test]
    fn detects_proportional_pairs() {
        let forms = FormTuple::new(vec![
            Form::linear(&[q(1), q(2)]).unwrap(),
            Form::linear(&[q(1), q(3)]).unwrap(),
            Form::linear(&[q(-2), q(-4)]).unwrap(),
        ])
        .unwrap();
        assert_eq!(pairwise_independent(&forms).unwrap(), Some((0, 2)));
        assert_eq!(pairwise_independent(&nodes_forms(&[0, 1, 2])).unwrap(), None);
    }
}
