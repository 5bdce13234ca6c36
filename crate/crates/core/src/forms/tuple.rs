use super::HomogeneousForm;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An n-tuple of forms sharing variable count and degree, with the entrywise
/// (Hadamard) ring structure and the dot pairing `f . g = sum_i f_i g_i`.
///
/// Scalar vectors are the degree-0 tuples, so `1 . l^4` is a Waring sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormTuple<T: Scalar> {
    entries: Vec<HomogeneousForm<T>>,
}

impl<T: Scalar> FormTuple<T> {
    pub fn new(entries: Vec<HomogeneousForm<T>>) -> Result<Self> {
        if let Some(first) = entries.first() {
            for f in &entries[1..] {
                if f.num_vars() != first.num_vars() {
                    return Err(Error::VarCountMismatch {
                        left: first.num_vars(),
                        right: f.num_vars(),
                    });
                }
                if f.degree() != first.degree() {
                    return Err(Error::DegreeMismatch { left: first.degree(), right: f.degree() });
                }
            }
        }
        Ok(FormTuple { entries })
    }

    /// Degree-0 tuple holding the given scalars.
    pub fn from_scalars(num_vars: usize, values: &[T]) -> Self {
        FormTuple {
            entries: values
                .iter()
                .map(|v| HomogeneousForm::constant(num_vars, v.clone()))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[HomogeneousForm<T>] {
        &self.entries
    }

    pub fn num_vars(&self) -> Option<usize> {
        self.entries.first().map(HomogeneousForm::num_vars)
    }

    pub fn degree(&self) -> Option<u32> {
        self.entries.first().map(HomogeneousForm::degree)
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        Ok(())
    }

    /// Entrywise product.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(f, g)| f.mul(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(FormTuple { entries })
    }

    /// Sum of entrywise products. The empty dot product has no shape and is
    /// rejected.
    pub fn dot(&self, other: &Self) -> Result<HomogeneousForm<T>> {
        self.check_len(other)?;
        let mut products = self.entries.iter().zip(&other.entries).map(|(f, g)| f.mul(g));
        let first = products.next().ok_or_else(|| Error::Structure {
            expected: "a nonempty tuple".into(),
            got: "an empty tuple".into(),
        })??;
        products.try_fold(first, |acc, p| acc.add(&p?))
    }

    /// Entrywise power.
    pub fn pow(&self, d: u32) -> Self {
        FormTuple { entries: self.entries.iter().map(|f| f.pow(d)).collect() }
    }

    /// Entrywise evaluation at a point.
    pub fn evaluate(&self, point: &[T]) -> Result<Vec<T>> {
        self.entries.iter().map(|f| f.evaluate(point)).collect()
    }

    /// Entrywise substitution by linear forms; see
    /// [`HomogeneousForm::compose_linear`].
    pub fn compose_linear(&self, images: &[HomogeneousForm<T>]) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|f| f.compose_linear(images))
            .collect::<Result<Vec<_>>>()?;
        Ok(FormTuple { entries })
    }
}
