use num_traits::Zero;

use crate::error::{Error, Result};
use crate::forms::HomogeneousForm;
use crate::scalar::Scalar;

/// One summand `alpha * l^4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term<T: Scalar> {
    pub alpha: T,
    pub linear: HomogeneousForm<T>,
}

/// A weighted sum of fourth powers of ternary linear forms.
///
/// Coefficients are kept explicit rather than absorbed into the linear forms,
/// since fourth roots need not exist over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WaringDecomposition<T: Scalar> {
    terms: Vec<Term<T>>,
}

pub const QUARTIC: u32 = 4;

impl<T: Scalar> WaringDecomposition<T> {
    pub fn new(terms: Vec<Term<T>>) -> Result<Self> {
        for t in &terms {
            if t.linear.num_vars() != 3 {
                return Err(Error::VarCountMismatch { left: 3, right: t.linear.num_vars() });
            }
            if t.linear.degree() != 1 {
                return Err(Error::DegreeMismatch { left: 1, right: t.linear.degree() });
            }
        }
        Ok(WaringDecomposition { terms })
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (T, HomogeneousForm<T>)>) -> Result<Self> {
        Self::new(pairs.into_iter().map(|(alpha, linear)| Term { alpha, linear }).collect())
    }

    pub fn terms(&self) -> &[Term<T>] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Every coefficient equals 1.
    pub fn is_pure(&self) -> bool {
        self.terms.iter().all(|t| t.alpha.is_one())
    }

    pub fn alphas(&self) -> Vec<T> {
        self.terms.iter().map(|t| t.alpha.clone()).collect()
    }

    pub fn linear_forms(&self) -> Vec<HomogeneousForm<T>> {
        self.terms.iter().map(|t| t.linear.clone()).collect()
    }

    /// `sum_i alpha_i l_i^4`.
    pub fn value(&self) -> HomogeneousForm<T> {
        self.terms.iter().fold(HomogeneousForm::zero(3, QUARTIC), |acc, t| {
            acc.add(&t.linear.pow(QUARTIC).scale(&t.alpha)).expect("quartics in 3 variables")
        })
    }
}

/// The coordinate shape `l_i = x0 + h_i x1 + k_i x2` with weights `alpha_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateInstance<T> {
    pub h: Vec<T>,
    pub k: Vec<T>,
    pub alpha: Vec<T>,
}

impl<T: Scalar> CoordinateInstance<T> {
    pub fn new(h: Vec<T>, k: Vec<T>, alpha: Vec<T>) -> Result<Self> {
        if h.len() != k.len() {
            return Err(Error::LengthMismatch { left: h.len(), right: k.len() });
        }
        if h.len() != alpha.len() {
            return Err(Error::LengthMismatch { left: h.len(), right: alpha.len() });
        }
        Ok(CoordinateInstance { h, k, alpha })
    }

    pub fn len(&self) -> usize {
        self.h.len()
    }

    pub fn is_empty(&self) -> bool {
        self.h.is_empty()
    }

    pub fn linear_form(&self, i: usize) -> HomogeneousForm<T> {
        HomogeneousForm::linear(&[T::one(), self.h[i].clone(), self.k[i].clone()])
            .expect("three coefficients")
    }

    pub fn to_decomposition(&self) -> WaringDecomposition<T> {
        WaringDecomposition {
            terms: (0..self.len())
                .map(|i| Term { alpha: self.alpha[i].clone(), linear: self.linear_form(i) })
                .collect(),
        }
    }

    /// Inverse of [`to_decomposition`](Self::to_decomposition); every linear
    /// form must have `x0`-coefficient 1.
    pub fn from_decomposition(dec: &WaringDecomposition<T>) -> Result<Self> {
        let mut inst = CoordinateInstance { h: Vec::new(), k: Vec::new(), alpha: Vec::new() };
        for (i, t) in dec.terms.iter().enumerate() {
            let c = t.linear.linear_coeffs()?;
            if !c[0].is_one() {
                return Err(Error::InvalidInput(format!(
                    "term {i}: x0-coefficient is {}, expected 1",
                    c[0]
                )));
            }
            inst.h.push(c[1].clone());
            inst.k.push(c[2].clone());
            inst.alpha.push(t.alpha.clone());
        }
        Ok(inst)
    }

    pub fn value(&self) -> HomogeneousForm<T> {
        self.to_decomposition().value()
    }
}

/// A quartic `x^2 q` with its factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleLineQuartic<T: Scalar> {
    pub x: HomogeneousForm<T>,
    pub q: HomogeneousForm<T>,
    pub target: HomogeneousForm<T>,
}

impl<T: Scalar> DoubleLineQuartic<T> {
    pub fn new(x: HomogeneousForm<T>, q: HomogeneousForm<T>) -> Result<Self> {
        if x.degree() != 1 {
            return Err(Error::DegreeMismatch { left: 1, right: x.degree() });
        }
        if q.degree() != 2 {
            return Err(Error::DegreeMismatch { left: 2, right: q.degree() });
        }
        let target = x.pow(2).mul(&q)?;
        Ok(DoubleLineQuartic { x, q, target })
    }

    /// Factors `target` as `x^2 q`.
    pub fn from_quartic(target: HomogeneousForm<T>, x: HomogeneousForm<T>) -> Result<Self> {
        let q = extract_cofactor(&target, &x)?;
        Ok(DoubleLineQuartic { x, q, target })
    }
}

/// Writes `f = x^2 q + r` with `r = x r1 + r0`, where `r0, r1` are free of the
/// last variable present in `x`. Returns `(q, r)`.
pub fn double_line_division<T: Scalar>(
    f: &HomogeneousForm<T>,
    x: &HomogeneousForm<T>,
) -> Result<(HomogeneousForm<T>, HomogeneousForm<T>)> {
    if f.degree() < 2 {
        return Err(Error::Structure {
            expected: "a form of degree at least 2".into(),
            got: format!("degree {}", f.degree()),
        });
    }
    let (q1, r0) = f.div_rem_linear(x)?;
    let (q, r1) = q1.div_rem_linear(x)?;
    let rem = x.mul(&r1)?.add(&r0)?;
    Ok((q, rem))
}

/// The exact cofactor `q` with `f = x^2 q`.
pub fn extract_cofactor<T: Scalar>(
    f: &HomogeneousForm<T>,
    x: &HomogeneousForm<T>,
) -> Result<HomogeneousForm<T>> {
    let (q, rem) = double_line_division(f, x)?;
    if rem.is_zero() {
        Ok(q)
    } else {
        Err(Error::NotDoubleLine { remainder: rem.to_string() })
    }
}

/// Whether `x^2` divides `f`, without building the error.
pub fn is_double_line<T: Scalar>(f: &HomogeneousForm<T>, x: &HomogeneousForm<T>) -> Result<bool> {
    Ok(double_line_division(f, x)?.1.is_zero())
}

pub(crate) fn zero_alpha<T: Scalar>(alpha: &[T]) -> Option<usize> {
    alpha.iter().position(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Decomposition, Form, Instance, Rational};

    fn q(n: i64) -> Rational {
        Rational::int(n)
    }

    fn parse(s: &str) -> Form {
        Form::parse(s, 3).unwrap()
    }

    pub(crate) fn example_instance() -> Instance {
        Instance::new(
            [0, 0, 0, 1, 1, 1].map(q).to_vec(),
            [0, 1, -1, 0, 1, -1].map(q).to_vec(),
            [2, -1, -1, 2, -1, -1].map(q).to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn example_value() {
        // -4 (6 x0^2 + 6 x0 x1 + 3 x1^2 + x2^2) x2^2
        let direct = parse("6*x0^2 + 6*x0*x1 + 3*x1^2 + x2^2")
            .mul(&parse("x2^2"))
            .unwrap()
            .scale(&q(-4));
        assert_eq!(example_instance().value(), direct);
    }

    #[test]
    fn trivial_values() {
        let one = Decomposition::from_pairs([(q(1), parse("x0"))]).unwrap();
        assert_eq!(one.value(), parse("x0^4"));
        assert!(one.is_pure());
        let cancel = Decomposition::from_pairs([(q(1), parse("x0")), (q(-1), parse("x0"))]).unwrap();
        assert!(cancel.value().is_zero());
        assert!(!cancel.is_pure());
        assert!(Decomposition::from_pairs([(q(1), parse("x0^2"))]).is_err());
    }

    #[test]
    fn cofactor_examples() {
        let x2 = Form::var(3, 2);
        let f = example_instance().value();
        assert_eq!(
            extract_cofactor(&f, &x2).unwrap(),
            parse("6*x0^2 + 6*x0*x1 + 3*x1^2 + x2^2").scale(&q(-4))
        );
        let err = extract_cofactor(&parse("x0^4"), &x2).unwrap_err();
        assert_eq!(err, Error::NotDoubleLine { remainder: "x0^4".into() });
        assert_eq!(extract_cofactor(&parse("x2^4"), &x2).unwrap(), parse("x2^2"));
        // Single factor of x2 leaves an x2-linear remainder.
        let err = extract_cofactor(&parse("x0^3*x2 + x2^4"), &x2).unwrap_err();
        assert_eq!(err, Error::NotDoubleLine { remainder: "x0^3*x2".into() });
    }

    #[test]
    fn cofactor_along_oblique_line() {
        let x = parse("x0 + 2*x1 - x2");
        let conic = parse("x0*x1 - 3*x2^2 + x1^2");
        let dl = DoubleLineQuartic::new(x.clone(), conic.clone()).unwrap();
        assert_eq!(extract_cofactor(&dl.target, &x).unwrap(), conic);
    }

    #[test]
    fn coordinate_round_trip() {
        let inst = example_instance();
        let dec = inst.to_decomposition();
        assert_eq!(Instance::from_decomposition(&dec).unwrap(), inst);
        let bad = Decomposition::from_pairs([(q(1), parse("2*x0 + x1"))]).unwrap();
        assert!(Instance::from_decomposition(&bad).is_err());
    }
}
