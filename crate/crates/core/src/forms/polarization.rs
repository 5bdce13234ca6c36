use super::{HomogeneousForm, Monomial};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{multinomial, Scalar};

/// Matrix of the partial polarization `S^delta V -> S^(d - delta) V*` of a
/// degree-`d` form (the catalecticant), in graded-lex monomial bases.
///
/// Scaling: the column of `e^beta` is `(d - delta)! / d!` times the
/// `beta`-th partial derivative of `f`. With this choice a power `l^d` sends
/// `t` to `l(t) * l^(d - delta)`, where `l(t) = sum_beta t_beta c^beta` for
/// `l = sum_i c_i x_i`; in particular `f_(d,0)(v^d) = f(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizationMatrix<T: Scalar> {
    pub num_vars: usize,
    pub source_degree: u32,
    pub target_degree: u32,
    /// Degree-`(d - delta)` monomials indexing the rows.
    pub rows: Vec<Monomial>,
    /// Degree-`delta` monomials indexing the columns.
    pub cols: Vec<Monomial>,
    pub matrix: Matrix<T>,
}

pub fn polarization_matrix<T: Scalar>(
    f: &HomogeneousForm<T>,
    delta: u32,
) -> Result<PolarizationMatrix<T>> {
    let d = f.degree();
    if delta > d {
        return Err(Error::Structure {
            expected: format!("polarization degree in 0..={d}"),
            got: delta.to_string(),
        });
    }
    let nv = f.num_vars();
    let rows = Monomial::all(nv, d - delta);
    let cols = Monomial::all(nv, delta);
    let mut matrix = Matrix::zeros(rows.len(), cols.len());
    for (r, gamma) in rows.iter().enumerate() {
        let row_weight: T = multinomial(gamma.exps());
        for (c, beta) in cols.iter().enumerate() {
            let alpha = gamma.mul(beta);
            let coeff = f.coeff(&alpha);
            if coeff.is_zero() {
                continue;
            }
            let w = row_weight.clone() / multinomial::<T>(alpha.exps());
            matrix.set(r, c, coeff * w);
        }
    }
    Ok(PolarizationMatrix { num_vars: nv, source_degree: delta, target_degree: d - delta, rows, cols, matrix })
}

impl<T: Scalar> PolarizationMatrix<T> {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Applies the map to `t in S^delta V`, whose monomial coordinates are read
    /// off the coefficients of `t` viewed as a form.
    pub fn apply(&self, t: &HomogeneousForm<T>) -> Result<HomogeneousForm<T>> {
        if t.num_vars() != self.num_vars {
            return Err(Error::VarCountMismatch { left: self.num_vars, right: t.num_vars() });
        }
        if t.degree() != self.source_degree {
            return Err(Error::DegreeMismatch { left: self.source_degree, right: t.degree() });
        }
        let coords: Vec<T> = self.cols.iter().map(|m| t.coeff(m)).collect();
        let image = self.matrix.mul_vec(&coords)?;
        HomogeneousForm::from_terms(self.num_vars, self.target_degree, self.rows.iter().cloned().zip(image))
    }
}

impl<T: Scalar> HomogeneousForm<T> {
    /// `sum_i v_i * d f / d x_i`.
    pub fn directional_derivative(&self, v: &[T]) -> Result<Self> {
        if v.len() != self.num_vars() {
            return Err(Error::LengthMismatch { left: self.num_vars(), right: v.len() });
        }
        let mut out = Self::zero(self.num_vars(), self.degree().saturating_sub(1));
        for (m, c) in self.terms() {
            for (i, vi) in v.iter().enumerate() {
                let e = m.exps()[i];
                if e == 0 || vi.is_zero() {
                    continue;
                }
                let dm = m.div(&Monomial::var(self.num_vars(), i)).expect("x_i divides");
                let term = Self::from_terms(
                    self.num_vars(),
                    out.degree(),
                    [(dm, c.clone() * T::int(i64::from(e)) * vi.clone())],
                )?;
                out = out.add(&term)?;
            }
        }
        Ok(out)
    }

    /// Full polarization `fbar(v_1, ..., v_d)`: the symmetric multilinear form
    /// with `fbar(v, ..., v) = f(v)`.
    pub fn polar(&self, vectors: &[Vec<T>]) -> Result<T> {
        if vectors.len() != self.degree() as usize {
            return Err(Error::LengthMismatch { left: self.degree() as usize, right: vectors.len() });
        }
        let mut g = self.clone();
        let mut factorial = T::one();
        for (i, v) in vectors.iter().enumerate() {
            g = g.directional_derivative(v)?;
            factorial = factorial * T::int(i as i64 + 1);
        }
        let value = g.coeff(&Monomial::one(self.num_vars()));
        Ok(value / factorial)
    }
}
