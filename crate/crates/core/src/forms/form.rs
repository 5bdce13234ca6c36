use std::collections::BTreeMap;
use std::fmt;

use super::Monomial;
use crate::error::{Error, Result};
use crate::scalar::{multinomial, powu, Scalar};

/// A homogeneous polynomial in 2 or 3 variables.
///
/// Stored sparsely: only nonzero coefficients are kept, so two forms are equal
/// exactly when their term maps are equal.
#[derive(Clone, PartialEq, Eq)]
pub struct HomogeneousForm<T> {
    num_vars: usize,
    degree: u32,
    terms: BTreeMap<Monomial, T>,
}

fn check_vars(n: usize) -> Result<()> {
    if n == 2 || n == 3 {
        Ok(())
    } else {
        Err(Error::Structure { expected: "2 or 3 variables".into(), got: n.to_string() })
    }
}

impl<T: Scalar> HomogeneousForm<T> {
    pub fn zero(num_vars: usize, degree: u32) -> Self {
        HomogeneousForm { num_vars, degree, terms: BTreeMap::new() }
    }

    pub fn constant(num_vars: usize, value: T) -> Self {
        let mut f = Self::zero(num_vars, 0);
        f.insert(Monomial::one(num_vars), value);
        f
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, T::one())
    }

    /// The coordinate form `x_index`.
    pub fn var(num_vars: usize, index: usize) -> Self {
        let mut f = Self::zero(num_vars, 1);
        f.insert(Monomial::var(num_vars, index), T::one());
        f
    }

    /// `sum_i coeffs[i] * x_i`.
    pub fn linear(coeffs: &[T]) -> Result<Self> {
        check_vars(coeffs.len())?;
        let mut f = Self::zero(coeffs.len(), 1);
        for (i, c) in coeffs.iter().enumerate() {
            f.insert(Monomial::var(coeffs.len(), i), c.clone());
        }
        Ok(f)
    }

    /// Builds a form from `(monomial, coefficient)` pairs, merging repeats.
    pub fn from_terms(
        num_vars: usize,
        degree: u32,
        terms: impl IntoIterator<Item = (Monomial, T)>,
    ) -> Result<Self> {
        check_vars(num_vars)?;
        let mut f = Self::zero(num_vars, degree);
        for (m, c) in terms {
            if m.num_vars() != num_vars {
                return Err(Error::VarCountMismatch { left: num_vars, right: m.num_vars() });
            }
            if m.degree() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: m.degree() });
            }
            f.add_term(m, c);
        }
        Ok(f)
    }

    fn insert(&mut self, m: Monomial, c: T) {
        if !c.is_zero() {
            self.terms.insert(m, c);
        }
    }

    fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing = existing.clone() + c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> T {
        self.terms.get(m).cloned().unwrap_or_else(T::zero)
    }

    /// Coefficient vector against [`Monomial::all`] for this form's shape.
    pub fn coeff_vector(&self) -> Vec<T> {
        Monomial::all(self.num_vars, self.degree).iter().map(|m| self.coeff(m)).collect()
    }

    /// Coefficient of `x_i` in a linear form.
    pub fn linear_coeff(&self, i: usize) -> T {
        self.coeff(&Monomial::var(self.num_vars, i))
    }

    /// Coefficients of a linear form, one per variable.
    pub fn linear_coeffs(&self) -> Result<Vec<T>> {
        if self.degree != 1 {
            return Err(Error::DegreeMismatch { left: 1, right: self.degree });
        }
        Ok((0..self.num_vars).map(|i| self.linear_coeff(i)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::VarCountMismatch { left: self.num_vars, right: other.num_vars });
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-T::one())
    }

    pub fn scale(&self, s: &T) -> Self {
        let mut out = Self::zero(self.num_vars, self.degree);
        if s.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c.clone() * s.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.num_vars != other.num_vars {
            return Err(Error::VarCountMismatch { left: self.num_vars, right: other.num_vars });
        }
        let mut out = Self::zero(self.num_vars, self.degree + other.degree);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    /// Exact `d`-th power.
    ///
    /// Linear forms are expanded directly with multinomial coefficients; other
    /// forms go through binary powering.
    pub fn pow(&self, d: u32) -> Self {
        if self.degree == 1 {
            return self.pow_linear(d);
        }
        let mut result = Self::one(self.num_vars);
        let mut base = self.clone();
        let mut e = d;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same variable count");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same variable count");
            }
        }
        result
    }

    fn pow_linear(&self, d: u32) -> Self {
        let c: Vec<T> = (0..self.num_vars).map(|i| self.linear_coeff(i)).collect();
        let terms = Monomial::all(self.num_vars, d).into_iter().map(|m| {
            let coeff = m
                .exps()
                .iter()
                .zip(&c)
                .fold(multinomial::<T>(m.exps()), |acc, (&e, ci)| acc * powu(ci, e));
            (m, coeff)
        });
        let mut out = Self::zero(self.num_vars, d);
        for (m, coeff) in terms {
            out.insert(m, coeff);
        }
        out
    }

    /// Value at a point of the ambient space.
    pub fn evaluate(&self, point: &[T]) -> Result<T> {
        if point.len() != self.num_vars {
            return Err(Error::LengthMismatch { left: self.num_vars, right: point.len() });
        }
        Ok(self.terms.iter().fold(T::zero(), |acc, (m, c)| {
            acc + m
                .exps()
                .iter()
                .zip(point)
                .fold(c.clone(), |p, (&e, x)| p * powu(x, e))
        }))
    }

    /// Substitutes `x_i := images[i]`, where every image is a linear form in
    /// a (possibly different) common set of variables.
    pub fn compose_linear(&self, images: &[HomogeneousForm<T>]) -> Result<Self> {
        if images.len() != self.num_vars {
            return Err(Error::LengthMismatch { left: self.num_vars, right: images.len() });
        }
        let target_vars = images.first().map_or(self.num_vars, |g| g.num_vars);
        for g in images {
            if g.degree != 1 {
                return Err(Error::DegreeMismatch { left: 1, right: g.degree });
            }
            if g.num_vars != target_vars {
                return Err(Error::VarCountMismatch { left: target_vars, right: g.num_vars });
            }
        }
        let max_exp = self.degree as usize;
        let powers: Vec<Vec<Self>> = images
            .iter()
            .map(|g| (0..=max_exp).map(|e| g.pow(e as u32)).collect())
            .collect();
        let mut out = Self::zero(target_vars, self.degree);
        for (m, c) in &self.terms {
            let mut prod = Self::constant(target_vars, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    prod = prod.mul(&powers[i][e as usize])?;
                }
            }
            out = out.add(&prod)?;
        }
        Ok(out)
    }

    /// Division with remainder by a nonzero linear form `x`.
    ///
    /// Let `j` be the largest index with a nonzero coefficient in `x`. Returns
    /// `(quot, rem)` with `self = x * quot + rem` and `rem` free of `x_j`.
    pub fn div_rem_linear(&self, x: &Self) -> Result<(Self, Self)> {
        if x.degree != 1 {
            return Err(Error::DegreeMismatch { left: 1, right: x.degree });
        }
        if x.num_vars != self.num_vars {
            return Err(Error::VarCountMismatch { left: self.num_vars, right: x.num_vars });
        }
        let j = last_nonzero(x).ok_or(Error::InvalidLine)?;
        let cj = x.linear_coeff(j);
        let xj = Monomial::var(self.num_vars, j);
        let mut rem = self.clone();
        let mut quot = Self::zero(self.num_vars, self.degree.saturating_sub(1));
        // Highest x_j power first; each step lowers it for the touched term.
        loop {
            let next = rem
                .terms
                .iter()
                .filter(|(m, _)| m.exps()[j] > 0)
                .max_by_key(|(m, _)| m.exps()[j])
                .map(|(m, c)| (m.clone(), c.clone()));
            let Some((m, c)) = next else { break };
            let qm = m.div(&xj).expect("x_j divides the monomial");
            let qc = c / cj.clone();
            let mut step = Self::zero(self.num_vars, quot.degree);
            step.insert(qm, qc);
            rem = rem.sub(&x.mul(&step)?)?;
            quot = quot.add(&step)?;
        }
        Ok((quot, rem))
    }
}

/// Largest index with a nonzero coefficient in a linear form.
pub(crate) fn last_nonzero<T: Scalar>(x: &HomogeneousForm<T>) -> Option<usize> {
    (0..x.num_vars).rev().find(|&i| !x.linear_coeff(i).is_zero())
}

impl<T: Scalar> fmt::Debug for HomogeneousForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form[{}v,d{}]({})", self.num_vars, self.degree, self)
    }
}

/// Canonical text: terms leading-first, `p/q*x0^2*x1` style, ` + ` / ` - `
/// separators, `0` for the zero form.
impl<T: Scalar> fmt::Display for HomogeneousForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let is_const = m.degree() == 0;
            if is_const {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Form, Rational};

    fn q(n: i64) -> Rational {
        Rational::int(n)
    }

    fn x(i: usize) -> Form {
        Form::var(3, i)
    }

    fn parse(s: &str) -> Form {
        Form::parse(s, 3).unwrap()
    }

    #[test]
    fn add_examples() {
        let x04 = x(0).pow(4);
        assert!(x04.add(&x04.neg()).unwrap().is_zero());
        assert_eq!(x04.add(&x04.neg()).unwrap().degree(), 4);
        let a = parse("x0^2*x2^2");
        let b = parse("3*x0^2*x2^2");
        assert_eq!(a.add(&b).unwrap(), parse("4*x0^2*x2^2"));
        let s = parse("x0^4 + x1^4").add(&parse("x2^4")).unwrap();
        assert_eq!(s.to_string(), "x0^4 + x1^4 + x2^4");
    }

    #[test]
    fn add_rejects_mismatch() {
        assert!(matches!(x(0).add(&x(0).pow(2)), Err(Error::DegreeMismatch { .. })));
        assert!(matches!(x(0).add(&Form::var(2, 0)), Err(Error::VarCountMismatch { .. })));
        assert!(matches!(x(0).mul(&Form::var(2, 0)), Err(Error::VarCountMismatch { .. })));
    }

    #[test]
    fn mul_examples() {
        let conic = parse("6*x0^2 + 6*x0*x1 + 3*x1^2 + x2^2");
        let prod = x(2).pow(2).mul(&conic).unwrap();
        assert_eq!(prod, parse("6*x0^2*x2^2 + 6*x0*x1*x2^2 + 3*x1^2*x2^2 + x2^4"));
        assert_eq!(Form::one(3).mul(&conic).unwrap(), conic);
        assert_eq!(x(0).mul(&x(1)).unwrap().to_string(), "x0*x1");
    }

    #[test]
    fn pow_examples() {
        let l = parse("x0 + x2");
        assert_eq!(l.pow(4), parse("x0^4 + 4*x0^3*x2 + 6*x0^2*x2^2 + 4*x0*x2^3 + x2^4"));
        assert_eq!(x(0).pow(4).to_string(), "x0^4");
        assert_eq!(
            parse("x0 + x1 + x2").pow(2),
            parse("x0^2 + x1^2 + x2^2 + 2*x0*x1 + 2*x0*x2 + 2*x1*x2")
        );
        assert_eq!(parse("x0 + x1").pow(0), Form::one(3));
    }

    #[test]
    fn evaluate_examples() {
        let f = parse("x0^2*x2^2");
        assert_eq!(f.evaluate(&[q(1), q(0), q(2)]).unwrap(), q(4));
        // 6 - 6 + 3 by substitution.
        let g = Form::parse("6*x0^2 + 6*x0*x1 + 3*x1^2", 2).unwrap();
        assert_eq!(g.evaluate(&[q(1), q(-1)]).unwrap(), q(3));
        assert_eq!(Form::zero(3, 4).evaluate(&[q(5), q(7), q(-1)]).unwrap(), q(0));
        assert!(f.evaluate(&[q(1)]).is_err());
    }

    #[test]
    fn division_by_line() {
        let f = parse("x0^2*x2 + 2*x1*x2^2 + x1^3");
        let (quot, rem) = f.div_rem_linear(&x(2)).unwrap();
        assert_eq!(quot, parse("x0^2 + 2*x1*x2"));
        assert_eq!(rem, parse("x1^3"));

        let line = parse("x0 - x1 + 2*x2");
        let g = line.mul(&parse("x0^2 - x1*x2")).unwrap();
        let (quot, rem) = g.div_rem_linear(&line).unwrap();
        assert!(rem.is_zero());
        assert_eq!(quot, parse("x0^2 - x1*x2"));
        assert!(matches!(g.div_rem_linear(&Form::zero(3, 1)), Err(Error::InvalidLine)));
    }

    #[test]
    fn display_signs_and_fractions() {
        let f = Form::from_terms(
            3,
            2,
            [
                (Monomial::new(vec![0, 2, 0]), Rational::ratio(1, 2)),
                (Monomial::new(vec![2, 0, 0]), q(-1)),
                (Monomial::new(vec![0, 0, 2]), q(-3)),
            ],
        )
        .unwrap();
        assert_eq!(f.to_string(), "-x0^2 + 1/2*x1^2 - 3*x2^2");
        assert_eq!(Form::constant(3, q(-5)).to_string(), "-5");
        assert_eq!(Form::zero(3, 2).to_string(), "0");
    }
}
