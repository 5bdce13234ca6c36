mod common;

use common::*;
use proptest::prelude::*;
use waring_core::engine::suite::{claim_trial, theorem_trial};
use waring_core::engine::{
    extract_cofactor, f_invariant, phi_apply, phi_kernel, restricted_quadratic,
    tangency_certificate, tangent_instance_from,
};
use waring_core::forms::{line_tangent_to_conic, restrict, BinaryQuadratic, FormTuple};
use waring_core::linalg::{vandermonde_nullspace, VandermondeSystem};
use waring_core::{Form, Instance, Rational, Scalar, Zero};

fn instance(n: usize) -> impl Strategy<Value = Instance> {
    (
        prop::collection::vec(rational(6), n),
        prop::collection::vec(rational(6), n),
        prop::collection::vec(rational(6), n),
    )
        .prop_map(|(h, k, a)| Instance::new(h, k, a).unwrap())
}

fn binary_lines(h: &[Rational]) -> FormTuple<Rational> {
    FormTuple::new(h.iter().map(|x| Form::linear(&[Rational::int(1), x.clone()]).unwrap()).collect())
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Building `x2^2 q` from a known `q` and a decomposition-free route, then
    /// dividing back, recovers `q`.
    #[test]
    fn cofactor_round_trip(inst in instance(7), q in form(3, 2)) {
        let dec = inst.to_decomposition();
        prop_assert_eq!(Instance::from_decomposition(&dec).unwrap(), inst.clone());
        let x2 = Form::var(3, 2);
        let target = x2.pow(2).mul(&q).unwrap();
        prop_assert_eq!(extract_cofactor(&target, &x2).unwrap(), q);
        // The instance's own value divides exactly iff the low x2-part vanishes.
        let value = inst.value();
        let low = restrict(&value, &x2).unwrap();
        if !low.is_zero() {
            prop_assert!(extract_cofactor(&value, &x2).is_err());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn discriminant_bridge(inst in instance(7)) {
        let quad = restricted_quadratic(&inst).unwrap();
        prop_assert_eq!(quad.discriminant(), f_invariant(&inst) * Rational::int(144));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn kernel_dimension_law(h in distinct_nodes(7, 12)) {
        let forms = binary_lines(&h);
        for d in 0..=6u32 {
            let k = phi_kernel(&forms, d).unwrap();
            prop_assert_eq!(k.dim(), 6 - d as usize);
            for a in &k.basis {
                prop_assert!(phi_apply(a, &forms, d).unwrap().is_zero());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    /// Seven-term solutions built directly from annihilator coordinates.
    #[test]
    fn proposition_on_random_solutions(
        h in distinct_nodes(7, 8),
        s in -5i64..=5,
        t in -5i64..=5,
        u in prop::collection::vec(-4i64..=4, 3),
    ) {
        let a = vandermonde_nullspace(&VandermondeSystem::new(h.clone(), 4)).unwrap();
        let b = vandermonde_nullspace(&VandermondeSystem::new(h.clone(), 3)).unwrap();
        let alpha: Vec<Rational> = (0..7)
            .map(|i| Rational::int(s) * &a[0][i] + Rational::int(t) * &a[1][i])
            .collect();
        prop_assume!(alpha.iter().all(|x| *x != Rational::int(0)));
        let beta: Vec<Rational> = (0..7)
            .map(|i| (0..3).map(|j| Rational::int(u[j]) * &b[j][i]).sum())
            .collect();
        let (inst, dl) = tangent_instance_from(&h, &alpha, &beta).unwrap();
        prop_assert!(f_invariant(&inst).is_zero());
        if dl.q.is_zero() {
            return Ok(());
        }
        let t = line_tangent_to_conic(&dl.x, &dl.q).unwrap();
        prop_assert!(t.tangent);
        let cert = tangency_certificate(&inst.to_decomposition(), &dl.x).unwrap();
        cert.verify().unwrap();
        let expected = BinaryQuadratic::from_form(&restrict(&dl.q, &dl.x).unwrap()).unwrap();
        prop_assert_eq!(&cert.q_restricted, &expected);
        for u in [[Rational::int(1), Rational::int(0)], [Rational::int(0), Rational::int(1)]] {
            prop_assert!(cert.q_restricted.polar(&cert.w, &u).is_zero());
        }
    }
}

#[test]
fn seeded_trials_pass() {
    for i in 0..10 {
        let t = theorem_trial::<Rational>(2024, i, 6).unwrap();
        assert!(t.passed(), "theorem trial {i}: {t:?}");
        let c = claim_trial::<Rational>(2024, i, 6).unwrap();
        assert!(c.passed(), "claim trial {i}: {c:?}");
    }
}

#[test]
fn certificate_weights_reproduce_alpha() {
    let h = ints(&[0, 1, 2, 3, 4, 5, 6]);
    let (inst, dl) = tangent_instance_from(
        &h,
        &ints(&[2, -11, 25, -30, 20, -7, 1]),
        &ints(&[1, -4, 6, -4, 1, 0, 0]),
    )
    .unwrap();
    let cert = tangency_certificate(&inst.to_decomposition(), &dl.x).unwrap();
    for i in 0..7 {
        let lw = cert.restricted.entries()[i].evaluate(&cert.w).unwrap();
        assert_eq!(&cert.a[i] * lw, inst.alpha[i]);
    }
}
