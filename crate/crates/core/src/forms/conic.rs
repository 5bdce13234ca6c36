//! Lines, restriction to a line, and conic/line tangency.

use num_traits::Zero;

use super::form::last_nonzero;
use super::{HomogeneousForm, Monomial};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Basis `(w0, w1)` of `W = ker x` in ambient coordinates.
///
/// With `j` the largest index where `x` has a nonzero coefficient, the basis is
/// `e_i - (c_i / c_j) e_j` for the two indices `i != j`, in increasing order.
/// For `x = x2` this is `(e0, e1)`, so restriction is `x2 := 0`.
pub fn line_basis<T: Scalar>(x: &HomogeneousForm<T>) -> Result<[Vec<T>; 2]> {
    let c = line_coeffs(x)?;
    let j = last_nonzero(x).ok_or(Error::InvalidLine)?;
    let mut basis = (0..3).filter(|&i| i != j).map(|i| {
        let mut w = vec![T::zero(); 3];
        w[i] = T::one();
        w[j] = -(c[i].clone() / c[j].clone());
        w
    });
    Ok([basis.next().expect("two indices"), basis.next().expect("two indices")])
}

/// The point `v = e_j / c_j` with `x(v) = 1`, `j` as in [`line_basis`].
pub fn point_off_line<T: Scalar>(x: &HomogeneousForm<T>) -> Result<Vec<T>> {
    let c = line_coeffs(x)?;
    let j = last_nonzero(x).ok_or(Error::InvalidLine)?;
    let mut v = vec![T::zero(); 3];
    v[j] = T::one() / c[j].clone();
    Ok(v)
}

fn line_coeffs<T: Scalar>(x: &HomogeneousForm<T>) -> Result<Vec<T>> {
    if x.num_vars() != 3 {
        return Err(Error::VarCountMismatch { left: 3, right: x.num_vars() });
    }
    let c = x.linear_coeffs()?;
    if c.iter().all(Zero::is_zero) {
        return Err(Error::InvalidLine);
    }
    Ok(c)
}

/// Maps `W`-coordinates `(y0, y1)` to the ambient point `y0 w0 + y1 w1`.
pub fn lift_from_line<T: Scalar>(x: &HomogeneousForm<T>, y: &[T; 2]) -> Result<Vec<T>> {
    let [w0, w1] = line_basis(x)?;
    Ok((0..3).map(|i| y[0].clone() * w0[i].clone() + y[1].clone() * w1[i].clone()).collect())
}

/// Restriction of a ternary form to `W = ker x`, as a binary form in the
/// coordinates of [`line_basis`].
pub fn restrict<T: Scalar>(f: &HomogeneousForm<T>, x: &HomogeneousForm<T>) -> Result<HomogeneousForm<T>> {
    if f.num_vars() != 3 {
        return Err(Error::VarCountMismatch { left: 3, right: f.num_vars() });
    }
    let [w0, w1] = line_basis(x)?;
    let images: Vec<HomogeneousForm<T>> = (0..3)
        .map(|i| HomogeneousForm::linear(&[w0[i].clone(), w1[i].clone()]))
        .collect::<Result<_>>()?;
    f.compose_linear(&images)
}

/// `Q = a y0^2 + b y0 y1 + c y1^2` on the plane `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryQuadratic<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Scalar> BinaryQuadratic<T> {
    pub fn from_form(q: &HomogeneousForm<T>) -> Result<Self> {
        if q.num_vars() != 2 {
            return Err(Error::VarCountMismatch { left: 2, right: q.num_vars() });
        }
        if q.degree() != 2 {
            return Err(Error::DegreeMismatch { left: 2, right: q.degree() });
        }
        Ok(BinaryQuadratic {
            a: q.coeff(&Monomial::new(vec![2, 0])),
            b: q.coeff(&Monomial::new(vec![1, 1])),
            c: q.coeff(&Monomial::new(vec![0, 2])),
        })
    }

    pub fn to_form(&self) -> HomogeneousForm<T> {
        HomogeneousForm::from_terms(
            2,
            2,
            [
                (Monomial::new(vec![2, 0]), self.a.clone()),
                (Monomial::new(vec![1, 1]), self.b.clone()),
                (Monomial::new(vec![0, 2]), self.c.clone()),
            ],
        )
        .expect("binary quadratic monomials")
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    /// `b^2 - 4ac`.
    pub fn discriminant(&self) -> T {
        self.b.clone() * self.b.clone() - T::int(4) * self.a.clone() * self.c.clone()
    }

    /// The symmetric bilinear form `Qbar` with `Qbar(u, u) = Q(u)`.
    pub fn polar(&self, w: &[T; 2], u: &[T; 2]) -> T {
        let half_b = self.b.clone() / T::int(2);
        self.a.clone() * w[0].clone() * u[0].clone()
            + half_b * (w[0].clone() * u[1].clone() + w[1].clone() * u[0].clone())
            + self.c.clone() * w[1].clone() * u[1].clone()
    }

    /// Generator of `ker Qbar` when it is one-dimensional (discriminant zero,
    /// `Q != 0`), normalized to primitive integers with positive leading entry.
    pub fn kernel_point(&self) -> Option<[T; 2]> {
        if self.is_zero() || !self.discriminant().is_zero() {
            return None;
        }
        let mut w = if self.a.is_zero() {
            vec![T::one(), T::zero()]
        } else {
            vec![-self.b.clone(), T::int(2) * self.a.clone()]
        };
        T::normalize_direction(&mut w);
        Some([w[0].clone(), w[1].clone()])
    }
}

/// Symmetric 3x3 matrix of a ternary quadratic form.
pub fn conic_matrix<T: Scalar>(q: &HomogeneousForm<T>) -> Result<Matrix<T>> {
    if q.num_vars() != 3 {
        return Err(Error::VarCountMismatch { left: 3, right: q.num_vars() });
    }
    if q.degree() != 2 {
        return Err(Error::DegreeMismatch { left: 2, right: q.degree() });
    }
    let mut m = Matrix::zeros(3, 3);
    let two = T::int(2);
    for i in 0..3 {
        for j in 0..3 {
            let mut e = vec![0; 3];
            e[i] += 1;
            e[j] += 1;
            let c = q.coeff(&Monomial::new(e));
            m.set(i, j, if i == j { c } else { c / two.clone() });
        }
    }
    Ok(m)
}

/// Rank of the conic's symmetric matrix; 3 means nondegenerate.
pub fn conic_rank<T: Scalar>(q: &HomogeneousForm<T>) -> Result<usize> {
    Ok(conic_matrix(q)?.rank())
}

/// Outcome of [`line_tangent_to_conic`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tangency<T: Scalar> {
    pub tangent: bool,
    /// The restriction `Q = q|_W`.
    pub restriction: BinaryQuadratic<T>,
    /// Tangency point in `W`-coordinates; absent when not tangent or when the
    /// line lies on the conic.
    pub point: Option<[T; 2]>,
    /// The same point in ambient coordinates.
    pub point_in_plane: Option<Vec<T>>,
}

/// Whether the line `x = 0` is (possibly improperly) tangent to `q = 0`,
/// i.e. whether `q|_W` has zero discriminant.
pub fn line_tangent_to_conic<T: Scalar>(
    x: &HomogeneousForm<T>,
    q: &HomogeneousForm<T>,
) -> Result<Tangency<T>> {
    line_coeffs(x)?;
    if q.is_zero() {
        return Err(Error::InvalidInput("the zero form does not define a conic".into()));
    }
    let restriction = BinaryQuadratic::from_form(&restrict(q, x)?)?;
    let tangent = restriction.discriminant().is_zero();
    let point = restriction.kernel_point();
    let point_in_plane = point.as_ref().map(|p| lift_from_line(x, p)).transpose()?;
    Ok(Tangency { tangent, restriction, point, point_in_plane })
}
