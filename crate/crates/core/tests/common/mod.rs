#![allow(dead_code)]

use proptest::prelude::*;
use waring_core::forms::Monomial;
use waring_core::{Form, Rational, Scalar};

pub fn rational(range: i64) -> impl Strategy<Value = Rational> {
    (-range..=range, 1i64..=4).prop_map(|(n, d)| Rational::ratio(n, d))
}

pub fn nonzero_rational(range: i64) -> impl Strategy<Value = Rational> {
    rational(range).prop_filter("nonzero", |x| *x != Rational::int(0))
}

pub fn form(num_vars: usize, degree: u32) -> impl Strategy<Value = Form> {
    let monos = Monomial::all(num_vars, degree);
    prop::collection::vec(rational(5), monos.len()).prop_map(move |coeffs| {
        Form::from_terms(num_vars, degree, monos.clone().into_iter().zip(coeffs)).unwrap()
    })
}

pub fn linear(num_vars: usize) -> impl Strategy<Value = Form> {
    form(num_vars, 1).prop_filter("nonzero line", |l| !l.is_zero())
}

/// Distinct rational nodes with numerators in `[-range, range]`.
pub fn distinct_nodes(n: usize, range: i64) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(range), n).prop_filter("distinct nodes", |h| {
        (0..h.len()).all(|i| (i + 1..h.len()).all(|j| h[i] != h[j]))
    })
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::int(x)).collect()
}

/// 3x3 determinant by cofactor expansion, independent of the elimination code.
pub fn det3(m: &[Vec<Rational>]) -> Rational {
    let c = |i: usize, j: usize| &m[i][j];
    c(0, 0) * (c(1, 1) * c(2, 2) - c(1, 2) * c(2, 1)) - c(0, 1) * (c(1, 0) * c(2, 2) - c(1, 2) * c(2, 0))
        + c(0, 2) * (c(1, 0) * c(2, 1) - c(1, 1) * c(2, 0))
}

/// Substitution `x_i := sum_j m[i][j] x_j`.
pub fn change_coordinates(f: &Form, m: &[Vec<Rational>]) -> Form {
    let images: Vec<Form> = m.iter().map(|row| Form::linear(row).unwrap()).collect();
    f.compose_linear(&images).unwrap()
}

pub fn invertible_3x3() -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec(rational(4), 3), 3)
        .prop_filter("invertible", |m| det3(m) != Rational::int(0))
}
