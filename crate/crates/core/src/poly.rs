//! Sparse multivariate polynomials over an exact field, used for the symbolic
//! zero checks. Not necessarily homogeneous; any number of variables.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Poly<T> {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, T>,
}

impl<T: Scalar> Poly<T> {
    pub fn zero(num_vars: usize) -> Self {
        Poly { num_vars, terms: BTreeMap::new() }
    }

    pub fn constant(num_vars: usize, c: T) -> Self {
        let mut p = Self::zero(num_vars);
        p.add_term(vec![0; num_vars], c);
        p
    }

    pub fn var(num_vars: usize, index: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[index] = 1;
        let mut p = Self::zero(num_vars);
        p.add_term(e, T::one());
        p
    }

    /// `sum_i coeffs[i] * vars[i]` in a `num_vars`-variable ring.
    pub fn linear(num_vars: usize, coeffs: &[(usize, T)]) -> Self {
        let mut p = Self::zero(num_vars);
        for (i, c) in coeffs {
            let mut e = vec![0; num_vars];
            e[*i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &T)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    fn add_term(&mut self, e: Vec<u32>, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                *x = x.clone() + c;
                if x.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-T::one()))
    }

    pub fn scale(&self, s: &T) -> Self {
        if s.is_zero() {
            return Self::zero(self.num_vars);
        }
        Poly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.clone() * s.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_counting(other).0
    }

    /// Product together with the number of raw term products formed before
    /// like terms were merged.
    pub fn mul_counting(&self, other: &Self) -> (Self, usize) {
        assert_eq!(self.num_vars, other.num_vars, "variable count mismatch");
        let mut out = Self::zero(self.num_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        (out, self.terms.len() * other.terms.len())
    }

    pub fn pow(&self, d: u32) -> Self {
        (0..d).fold(Self::constant(self.num_vars, T::one()), |acc, _| acc.mul(self))
    }

    /// Value at a point.
    pub fn evaluate(&self, point: &[T]) -> T {
        assert_eq!(point.len(), self.num_vars, "point dimension mismatch");
        self.terms.iter().fold(T::zero(), |acc, (e, c)| {
            acc + e
                .iter()
                .zip(point)
                .fold(c.clone(), |p, (&k, x)| p * num_traits::pow(x.clone(), k as usize))
        })
    }

    /// Renders with the given variable names.
    pub fn display_with<'a>(&'a self, names: &'a [&'a str]) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, names }
    }
}

struct PolyDisplay<'a, T> {
    poly: &'a Poly<T>,
    names: &'a [&'a str],
}

impl<T: Scalar> fmt::Display for PolyDisplay<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        // Highest exponents first.
        for (idx, (e, c)) in self.poly.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match idx {
                0 if c.is_negative() => f.write_str("-")?,
                0 => {}
                _ => write!(f, " {sign} ")?,
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    let name = self.names.get(i).copied().unwrap_or("?");
                    if k == 1 { name.to_string() } else { format!("{name}^{k}") }
                })
                .collect();
            let abs = c.abs();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.num_vars).map(|i| format!("z{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let shown = self.display_with(&refs).to_string();
        f.write_str(&shown)
    }
}
