mod common;

use common::*;
use proptest::prelude::*;
use waring_core::linalg::{
    k_space, lagrange_weights, same_span, vandermonde_nullspace, Matrix, VandermondeSystem,
};
use waring_core::{Rational, Scalar};

fn matrix(max_dim: usize) -> impl Strategy<Value = Matrix<Rational>> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        // Mostly small integers with zeros, so rank deficiency is common.
        prop::collection::vec(prop_oneof![3 => Just(Rational::int(0)), 5 => rational(3)], r * c)
            .prop_map(move |data| Matrix::new(r, c, data).unwrap())
    })
}

fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    same_span(&[a.to_vec()], &[b.to_vec()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn nullspace_vectors_are_annihilated(m in matrix(6)) {
        let basis = m.nullspace();
        prop_assert_eq!(basis.len() + m.rank(), m.cols());
        for v in &basis {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| *x == Rational::int(0)));
        }
    }

    #[test]
    fn closed_form_generator(h in prop_oneof![distinct_nodes(6, 12), distinct_nodes(7, 12)]) {
        let n = h.len() as i32;
        let basis = vandermonde_nullspace(&VandermondeSystem::new(h.clone(), n - 2)).unwrap();
        prop_assert_eq!(basis.len(), 1);
        prop_assert!(proportional(&basis[0], &lagrange_weights(&h).unwrap()));
    }

    #[test]
    fn seven_node_dimension_law(h in distinct_nodes(7, 12)) {
        for d in 0..=5 {
            let basis = vandermonde_nullspace(&VandermondeSystem::new(h.clone(), d)).unwrap();
            prop_assert_eq!(basis.len() as i32, 6 - d);
        }
        let generator = &vandermonde_nullspace(&VandermondeSystem::new(h, 5)).unwrap()[0];
        prop_assert!(generator.iter().all(|x| *x != Rational::int(0)));
    }

    #[test]
    fn translation_family(h in distinct_nodes(6, 12)) {
        let alpha = vandermonde_nullspace(&VandermondeSystem::new(h.clone(), 4)).unwrap().remove(0);
        let ks = k_space(&h, &alpha, 3).unwrap();
        prop_assert!(same_span(&ks.basis, &[vec![Rational::int(1); 6], h]));
    }
}

#[test]
fn solve_consistent_and_inconsistent() {
    let m = Matrix::from_rows(2, vec![ints(&[1, 2]), ints(&[2, 4]), ints(&[0, 1])]).unwrap();
    assert_eq!(m.solve(&ints(&[5, 10, 2])).unwrap(), Some(ints(&[1, 2])));
    assert_eq!(m.solve(&ints(&[5, 11, 2])).unwrap(), None);
    assert_eq!(Matrix::<Rational>::identity(3).determinant().unwrap(), Rational::int(1));
}
