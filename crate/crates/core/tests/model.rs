use lyness_core::model::{
    alpha_of_u, equilibrium, eval_delta, exact_equilibrium, lyapunov_g, lyness_invariance_check,
    lyness_orbit, orbit_period, step_map, DeltaPoint, ParamsPQ, SymbolicModel, Which,
};
use lyness_core::rational::to_f64;
use lyness_core::{BigRational, Error, Poly};
use proptest::prelude::*;

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn i(n: i64) -> BigRational {
    r(n, 1)
}

fn p(text: &str) -> Poly {
    text.parse().unwrap()
}

fn model() -> &'static SymbolicModel {
    use std::sync::OnceLock;
    static MODEL: OnceLock<SymbolicModel> = OnceLock::new();
    MODEL.get_or_init(|| SymbolicModel::build().unwrap())
}

/// `g(s) - g(T^n s)` by direct iteration, independent of the symbolic model.
fn direct_delta(n: usize, pt: &DeltaPoint) -> BigRational {
    let (mut x, mut y) = (pt.x.clone(), pt.y.clone());
    for _ in 0..n {
        (x, y) = step_map(&x, &y, &pt.u, &pt.cap_a);
    }
    lyapunov_g(&pt.x, &pt.y, &pt.u) - lyapunov_g(&x, &y, &pt.u)
}

#[test]
fn equilibrium_examples() {
    let eq = equilibrium(&ParamsPQ::from_ints(4, 1).unwrap());
    assert_eq!(eq.xbar, 2.0);
    let eq = equilibrium(&ParamsPQ::from_ints(20, 4).unwrap());
    assert!((eq.xbar - (3.0 + 89f64.sqrt()) / 2.0).abs() < 1e-12);
    assert!((eq.xbar - 6.216991).abs() < 1e-6);
    let eq = equilibrium(&ParamsPQ::from_ints(2, 1).unwrap());
    assert!((eq.xbar - 2f64.sqrt()).abs() < 1e-15);
}

#[test]
fn exact_equilibrium_has_zero_residual() {
    for (pp, q) in [(4, 1), (20, 4), (2, 1), (3, 7)] {
        let params = ParamsPQ::from_ints(pp, q).unwrap();
        assert!(exact_equilibrium(&params).residual(&params).is_zero());
    }
}

#[test]
fn nonpositive_parameters_are_rejected() {
    assert!(matches!(ParamsPQ::new(i(0), i(1)), Err(Error::Domain(_))));
    assert!(matches!(ParamsPQ::new(i(1), i(-2)), Err(Error::Domain(_))));
}

#[test]
fn change_of_variables_examples() {
    let t = ParamsPQ::from_ints(20, 4).unwrap().to_alpha_a();
    assert_eq!((t.alpha.clone(), t.cap_a.clone()), (r(5, 4), r(1, 4)));
    assert_eq!(t.to_pq(), ParamsPQ::from_ints(20, 4).unwrap());
    let t = ParamsPQ::from_ints(4, 1).unwrap().to_alpha_a();
    assert_eq!((t.alpha, t.cap_a), (i(4), i(1)));
    let t = ParamsPQ::from_ints(2, 1).unwrap().to_alpha_a();
    assert_eq!((t.alpha, t.cap_a), (i(2), i(1)));
}

#[test]
fn alpha_of_u_examples() {
    assert_eq!(alpha_of_u(&i(2), &i(1)), i(4));
    assert_eq!(alpha_of_u(&i(1), &r(3, 7)), r(3, 7));
    let u = (3.0 + 89f64.sqrt()) / 8.0;
    assert!((alpha_of_u(&u, &0.25) - 1.25).abs() < 1e-12);
}

#[test]
fn g_and_map_examples() {
    assert_eq!(lyapunov_g(&i(1), &i(1), &i(2)), i(16));
    assert_eq!(step_map(&i(1), &i(3), &i(2), &i(1)), (i(3), r(7, 2)));

    let m = model();
    let at = |f: &lyness_core::RationalFn, x, y, u, a| {
        f.eval(&[("x", i(x)), ("y", i(y)), ("u", i(u)), ("A", i(a))])
            .unwrap()
    };
    assert_eq!(at(m.g(), 1, 1, 2, 1), i(16));
    assert_eq!(at(&m.map()[0], 1, 3, 2, 1), i(3));
    assert_eq!(at(&m.map()[1], 1, 3, 2, 1), r(7, 2));
}

#[test]
fn map_fixes_the_equilibrium_symbolically() {
    let fixed = lyness_core::Bindings::new()
        .bind("x", p("u"))
        .bind("y", p("u"));
    for component in model().map() {
        let image = component.substitute(&fixed).unwrap();
        assert!(image.equivalent(&p("u").into()));
    }
}

#[test]
fn delta_oracles() {
    let m = model();
    let d1 = eval_delta(m, Which::One, &DeltaPoint::from_ints(1, 3, 2, 1)).unwrap();
    assert_eq!(d1, r(10, 7));
    assert_eq!(i(16) - r(102, 7), r(10, 7));
    let d1 = eval_delta(m, Which::One, &DeltaPoint::from_ints(3, 1, 2, 1)).unwrap();
    assert_eq!(d1, r(7, 10));
    let d2 = eval_delta(m, Which::Two, &DeltaPoint::from_ints(3, 3, 2, 1)).unwrap();
    assert_eq!(d2, r(9265, 23184));
    let d2 = eval_delta(m, Which::Two, &DeltaPoint::from_ints(1, 1, 2, 1)).unwrap();
    assert_eq!(d2, r(471, 260));
    assert_eq!(i(16) - r(3689, 260), r(471, 260));
    let seg = DeltaPoint::from_ints(2, 1, 2, 1);
    let d2 = eval_delta(m, Which::Two, &seg).unwrap();
    assert_eq!(d2, direct_delta(2, &seg));
    assert!(d2 > i(0));
}

#[test]
fn deltas_vanish_at_the_equilibrium() {
    for (u, a) in [(r(3, 2), r(1, 5)), (i(2), i(1)), (r(7, 3), i(4))] {
        let pt = DeltaPoint::new(u.clone(), u.clone(), u, a);
        assert_eq!(eval_delta(model(), Which::One, &pt).unwrap(), i(0));
        assert_eq!(eval_delta(model(), Which::Two, &pt).unwrap(), i(0));
    }
}

#[test]
fn delta_domain_is_checked() {
    let err = eval_delta(model(), Which::One, &DeltaPoint::from_ints(1, 1, 1, 1)).unwrap_err();
    assert!(matches!(err, Error::Domain(_)));
    let err = eval_delta(model(), Which::Two, &DeltaPoint::from_ints(0, 1, 2, 1)).unwrap_err();
    assert!(matches!(err, Error::Domain(_)));
}

#[test]
fn delta1_matches_its_factored_form() {
    assert!(model()
        .delta1()
        .equivalent(&SymbolicModel::delta1_closed_form()));
}

#[test]
fn delta2_denominator_is_the_six_factor_product() {
    let displayed = p("x (A + x) y (A + y) (-u + A u + u^2 + y) \
         (-u + A^2 u + u^2 + A u^2 - u x + A u x + u^2 x + y)");
    assert_eq!(model().delta2().den().clone(), displayed);
    assert!(model().delta2().equivalent(model().delta2_composed()));
    assert!(model().delta2_denominator_is_reduced().unwrap());
}

#[test]
fn delta2_numerator_boundary_terms() {
    let n = model().delta2_numerator();
    for (coeff, factors) in [
        (-1, &[("A", 2), ("u", 3)][..]),
        (1, &[("A", 3), ("u", 3)]),
        (1, &[("A", 4), ("u", 3)]),
        (-1, &[("A", 5), ("u", 3)]),
        (2, &[("A", 2), ("u", 1), ("x", 2), ("y", 4)]),
        (1, &[("A", 1), ("u", 1), ("x", 3), ("y", 4)]),
        (1, &[("A", 1), ("y", 5)]),
    ] {
        assert_eq!(n.coefficient_of(factors), i(coeff), "{factors:?}");
    }
    assert_eq!(n.monomial_count(), 277);
}

#[test]
fn shifted_numerator_leading_terms() {
    let shift = lyness_core::Bindings::new()
        .bind("x", p("x0 + u"))
        .bind("y", p("y0 + u"));
    let num = model().delta2_numerator().substitute(&shift).unwrap();
    let num = num.num();
    for (coeff, factors) in [
        (1, &[("A", 1), ("u", 4), ("x0", 2)][..]),
        (1, &[("A", 1), ("u", 5), ("x0", 2)]),
        (2, &[("A", 1), ("u", 6), ("x0", 2)]),
        (2, &[("A", 1), ("u", 7), ("x0", 2)]),
        (2, &[("A", 1), ("u", 3), ("x0", 3)]),
        (-1, &[("A", 1), ("u", 4), ("x0", 3)]),
    ] {
        assert_eq!(num.coefficient_of(factors), i(coeff), "{factors:?}");
    }
    assert_eq!(num.monomial_count(), 233);
}

#[test]
fn lyness_invariance_examples() {
    let orbit = lyness_orbit(&i(1), (&i(1), &i(1)), 20);
    assert!(lyness_invariance_check(&i(1), (&i(1), &i(1)), 20));
    assert_eq!(orbit_period(&orbit), Some(5));
    assert_eq!(&orbit[..7], &[i(1), i(1), i(2), i(3), i(2), i(1), i(1)]);

    let orbit = lyness_orbit(&i(2), (&i(2), &i(2)), 30);
    assert!(orbit.iter().all(|z| *z == i(2)));
    assert!(lyness_invariance_check(&i(2), (&i(2), &i(2)), 30));

    assert!(lyness_invariance_check(&i(2), (&i(1), &i(3)), 50));
    assert_eq!(lyness_core::model::invariant(&i(3), &i(1), &i(2)), i(16));
}

fn rational_above(lo: i64) -> impl Strategy<Value = BigRational> {
    (1i64..=60, 1i64..=12).prop_map(move |(n, d)| i(lo) + r(n, d))
}

fn positive() -> impl Strategy<Value = BigRational> {
    (1i64..=60, 1i64..=12).prop_map(|(n, d)| r(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn eval_delta_agrees_with_direct_iteration(
        x in positive(), y in positive(), u in rational_above(1), a in positive(),
    ) {
        let pt = DeltaPoint::new(x, y, u, a);
        prop_assert_eq!(eval_delta(model(), Which::One, &pt).unwrap(), direct_delta(1, &pt));
        prop_assert_eq!(eval_delta(model(), Which::Two, &pt).unwrap(), direct_delta(2, &pt));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn parameter_transforms_are_consistent(pp in 1e-2f64..1e3, q in 1e-2f64..1e3) {
        let params = ParamsPQ::from_f64(pp, q).unwrap();
        let eq = equilibrium(&params);
        let alpha = alpha_of_u(&eq.ybar, &(1.0 / q));
        prop_assert!((alpha - pp / (q * q)).abs() <= 1e-10 * (pp / (q * q)));
        prop_assert!(eq.residual(&params).abs() <= 1e-12 * (1.0 + eq.xbar * eq.xbar));
        let t = params.to_alpha_a();
        prop_assert_eq!(t.to_pq(), params.clone());
        prop_assert!((to_f64(&t.alpha) - pp / (q * q)).abs() <= 1e-12 * (pp / (q * q)));
    }

    #[test]
    fn u_above_one_iff_q_below_p(pp in 1i64..40, q in 1i64..40, d in 1i64..5) {
        let params = ParamsPQ::new(r(pp, d), r(q, d)).unwrap();
        let ybar = exact_equilibrium(&params).ybar;
        let one = lyness_core::model::QuadraticSurd::rational(i(1));
        prop_assert_eq!(ybar > one, params.q_less_than_p());
        if pp == q {
            prop_assert_eq!(ybar.as_rational(), Some(&i(1)));
        }
    }
}
