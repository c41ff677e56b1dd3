use lyness_core::poly::{Bindings, Poly, RationalFn};
use lyness_core::{BigRational, Error};
use proptest::prelude::*;

fn p(text: &str) -> Poly {
    text.parse().unwrap()
}

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

const VARS: [&str; 4] = ["x", "y", "u", "A"];

/// Up to six terms over four variables, total degree at most four.
fn small_poly() -> impl Strategy<Value = Poly> {
    let term = (-5i64..=5, 1i64..=3, prop::array::uniform4(0u32..=2)).prop_filter_map(
        "degree <= 4",
        |(n, d, e)| {
            (e.iter().sum::<u32>() <= 4).then(|| {
                let factors: Vec<(&str, u32)> = VARS.iter().copied().zip(e).collect();
                Poly::term(r(n, d), &factors)
            })
        },
    );
    prop::collection::vec(term, 0..6).prop_map(|ts| ts.into_iter().fold(Poly::zero(), |a, t| a + t))
}

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=7).prop_map(|(n, d)| r(n, d))
}

fn positive_rational() -> impl Strategy<Value = BigRational> {
    (1i64..=20, 1i64..=7).prop_map(|(n, d)| r(n, d))
}

/// Bindings for `x` and `y` by polynomials in `t`, `k`.
fn bindings() -> impl Strategy<Value = Bindings> {
    let target = (-3i64..=3, -3i64..=3, -2i64..=2)
        .prop_map(|(a, b, c)| p(&format!("{a} + ({b}) t + ({c}) k t")));
    (target.clone(), target).prop_map(|(bx, by)| Bindings::new().bind("x", bx).bind("y", by))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Poly::zero());
        prop_assert_eq!(&a * &Poly::one(), a.clone());
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(a in small_poly(), b in small_poly(), s in bindings()) {
        let sa = a.substitute(&s).unwrap();
        let sb = b.substitute(&s).unwrap();
        prop_assert!((&a * &b).substitute(&s).unwrap().equivalent(&(&sa * &sb)));
        prop_assert!((&a + &b).substitute(&s).unwrap().equivalent(&(&sa + &sb)));
    }

    #[test]
    fn substitution_commutes_with_evaluation(
        a in small_poly(),
        w in positive_rational(),
        y in small_rational(),
        u in small_rational(),
        cap_a in small_rational(),
    ) {
        // x -> u w / (w + 1) keeps a rational denominator in play
        let s = Bindings::new().bind(
            "x",
            RationalFn::new(p("u w"), p("w + 1")).unwrap(),
        );
        let point = [("w", w.clone()), ("y", y.clone()), ("u", u.clone()), ("A", cap_a.clone())];
        let lhs = a.substitute(&s).unwrap().eval(&point).unwrap();
        let x = &u * &w / (&w + BigRational::from_integer(1.into()));
        let rhs = a.eval(&[("x", x), ("y", y), ("u", u), ("A", cap_a)]).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn canonical_text_round_trips(a in small_poly()) {
        let text = a.to_text();
        let back: Poly = text.parse().unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_text(), text);
    }
}

#[test]
fn arithmetic_examples() {
    assert_eq!((p("1 + t") * p("1 + t")).to_text(), "1 + 2*t + t^2");
    assert_eq!(p("1 + t").pow(3).to_text(), "1 + 3*t + 3*t^2 + t^3");
    assert_eq!(p("x").pow(0), Poly::one());
    assert_eq!(p("x + y").pow(2), p("x^2 + 2 x y + y^2"));
    assert_eq!(p("x - y") * p("x + y"), p("x^2 - y^2"));
    let f = p("3 x^2 y - 1/2 A");
    assert_eq!(&f + &Poly::zero(), f);
}

#[test]
fn substitution_examples() {
    let shift = Bindings::new()
        .bind("x", p("x0 + u"))
        .bind("y", p("y0 + u"));
    let out = p("x y").substitute(&shift).unwrap();
    assert!(out.den().is_constant());
    assert_eq!(out.num().clone(), p("x0 y0 + u x0 + u y0 + u^2"));

    let moebius = RationalFn::new(p("u w"), p("w + 1")).unwrap();
    let out = p("x")
        .substitute(&Bindings::new().bind("x", moebius.clone()))
        .unwrap();
    assert!(out.equivalent(&moebius));

    let inv = RationalFn::new(Poly::one(), p("x")).unwrap();
    let err = inv
        .substitute(&Bindings::new().bind("x", Poly::zero()))
        .unwrap_err();
    assert_eq!(err, Error::DenominatorVanishes);
    assert_eq!(err.to_string(), "denominator vanishes identically");
}

#[test]
fn min_coefficient_examples() {
    let (c, m) = p("1 + t").pow(3).min_coefficient().unwrap();
    assert_eq!(c, r(1, 1));
    assert!(m.is_one());

    let f = p("t^2 - t");
    let (c, m) = f.min_coefficient().unwrap();
    assert_eq!((c, m.to_text(f.vars())), (r(-1, 1), "t".to_string()));

    let f = p("2 A k^2 + 8 A^2 k^2");
    let (c, m) = f.min_coefficient().unwrap();
    assert_eq!((c, m.to_text(f.vars())), (r(2, 1), "A*k^2".to_string()));

    let err = Poly::zero().min_coefficient().unwrap_err();
    assert_eq!(err.to_string(), "empty polynomial");
}

#[test]
fn min_coefficient_ties_go_to_the_graded_lex_smallest() {
    let f = p("-1 x^2 - y - 1");
    let (_, m) = f.min_coefficient().unwrap();
    assert!(m.is_one());
}

#[test]
fn monomial_count_examples() {
    assert_eq!(Poly::zero().monomial_count(), 0);
    assert_eq!(p("1 + t").pow(3).monomial_count(), 4);
}

#[test]
fn rational_function_equality_is_cross_multiplied() {
    let a = RationalFn::new(p("x"), p("y")).unwrap();
    let b = RationalFn::new(p("x u"), p("y u")).unwrap();
    let c = RationalFn::new(p("y"), p("x")).unwrap();
    assert!(a.equivalent(&b));
    assert!(!a.equivalent(&c));
}

#[test]
fn serialization_is_graded_lex_with_explicit_signs() {
    let f = p("-A^5 u^3 + A^4 u^3 + A^3 u^3 - A^2 u^3");
    assert_eq!(f.to_text(), "-A^2*u^3 + A^3*u^3 + A^4*u^3 - A^5*u^3");
    assert_eq!(f.to_text(), f.clone().to_text());
}
