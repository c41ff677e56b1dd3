use alloc::format;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::{Bindings, Poly, RationalFn};
use crate::{Error, Result};

/// Factors of `g - g∘T` read off its closed form:
/// `A (u - u^2 + u x - y)(u - A u - u^2 + A x + x^2 - y)(1 + y)`
/// over `x (A + x) y (-u + A u + u^2 + y)`.
const DELTA1_LINE: &str = "u - u^2 + u x - y";
const DELTA1_PARABOLA: &str = "u - A u - u^2 + A x + x^2 - y";
const DELTA1_PREFACTOR: &str = "A (1 + y)";
const DELTA1_DENOMINATOR: &str = "x (A + x) y (-u + A u + u^2 + y)";

/// Factors of the reduced denominator of `g - g∘T∘T`, each monic and linear
/// in `x` or `y`, paired with the root that annihilates it.
const DELTA2_DENOMINATOR: [(&str, &str, &str); 6] = [
    ("x", "x", "0"),
    ("A + x", "x", "-A"),
    ("y", "y", "0"),
    ("A + y", "y", "-A"),
    ("-u + A u + u^2 + y", "y", "u - A u - u^2"),
    (
        "-u + A^2 u + u^2 + A u^2 - u x + A u x + u^2 x + y",
        "y",
        "u - A^2 u - u^2 - A u^2 + u x - A u x - u^2 x",
    ),
];

fn poly(text: &str) -> Poly {
    text.parse().expect("built-in polynomial literal")
}

/// Which descent expression: `g - g∘T` or `g - g∘T∘T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    One,
    Two,
}

/// Exact point `(x, y, u, A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaPoint {
    pub x: BigRational,
    pub y: BigRational,
    pub u: BigRational,
    pub cap_a: BigRational,
}

impl DeltaPoint {
    pub fn new(x: BigRational, y: BigRational, u: BigRational, cap_a: BigRational) -> Self {
        DeltaPoint { x, y, u, cap_a }
    }

    pub fn from_ints(x: i64, y: i64, u: i64, cap_a: i64) -> Self {
        let r = |v: i64| BigRational::from_integer(v.into());
        DeltaPoint::new(r(x), r(y), r(u), r(cap_a))
    }

    pub fn assignment(&self) -> [(&'static str, BigRational); 4] {
        [
            ("x", self.x.clone()),
            ("y", self.y.clone()),
            ("u", self.u.clone()),
            ("A", self.cap_a.clone()),
        ]
    }
}

/// `g`, `T` and both descent expressions as exact rational functions of
/// `x, y, u, A`.
#[derive(Clone, Debug)]
pub struct SymbolicModel {
    g: RationalFn,
    map: [RationalFn; 2],
    delta1: RationalFn,
    delta2_composed: RationalFn,
    delta2: RationalFn,
}

impl SymbolicModel {
    /// Builds every object by exact composition and checks the internal
    /// identities (fixed point of `T`, exact reduction of `g - g∘T∘T`).
    pub fn build() -> Result<Self> {
        let x = Poly::var("x");
        let y = Poly::var("y");
        let u = Poly::var("u");
        let cap_a = Poly::var("A");
        let one = Poly::one();

        let alpha_tilde = &u * &u - &u;
        let g = RationalFn::new(
            (&one + &x) * (&one + &y) * (&alpha_tilde + &x + &y),
            &x * &y,
        )?;

        let alpha = &u * &u + (&cap_a - &one) * &u;
        let second = RationalFn::new(&alpha + &y, &cap_a + &x)?;
        let map = [RationalFn::from_poly(y.clone()), second];

        let step = Self::map_bindings_of(&map);
        let g_t = g.substitute(&step)?;
        let g_tt = g_t.substitute(&step)?;
        let delta1 = &g - &g_t;
        let delta2_composed = &g - &g_tt;

        let fixed = Bindings::new().bind("x", u.clone()).bind("y", u.clone());
        for component in &map {
            if !component
                .substitute(&fixed)?
                .equivalent(&RationalFn::from_poly(u.clone()))
            {
                return Err(Error::Inconsistent("T(u, u) != (u, u)".into()));
            }
        }

        let denominator = delta2_denominator();
        let numerator = (delta2_composed.num() * &denominator)
            .div_exact(delta2_composed.den())
            .map_err(|_| {
                Error::Inconsistent(
                    "g - g∘T∘T does not reduce over the expected denominator".into(),
                )
            })?;
        let delta2 = RationalFn::new(numerator, denominator)?;

        Ok(SymbolicModel {
            g,
            map,
            delta1,
            delta2_composed,
            delta2,
        })
    }

    fn map_bindings_of(map: &[RationalFn; 2]) -> Bindings {
        Bindings::new()
            .bind("x", map[0].clone())
            .bind("y", map[1].clone())
    }

    /// `(1 + x)(1 + y)(u^2 - u + x + y) / (x y)`.
    pub fn g(&self) -> &RationalFn {
        &self.g
    }

    pub fn map(&self) -> &[RationalFn; 2] {
        &self.map
    }

    /// `x -> T_1(x, y)`, `y -> T_2(x, y)`.
    pub fn map_bindings(&self) -> Bindings {
        Self::map_bindings_of(&self.map)
    }

    /// `g - g∘T` as produced by composition (not reduced).
    pub fn delta1(&self) -> &RationalFn {
        &self.delta1
    }

    /// `g - g∘T∘T` over its reduced six-factor denominator.
    pub fn delta2(&self) -> &RationalFn {
        &self.delta2
    }

    /// `g - g∘T∘T` exactly as the two substitutions produced it.
    pub fn delta2_composed(&self) -> &RationalFn {
        &self.delta2_composed
    }

    pub fn delta(&self, which: Which) -> &RationalFn {
        match which {
            Which::One => &self.delta1,
            Which::Two => &self.delta2,
        }
    }

    /// Numerator of the reduced `g - g∘T∘T`.
    pub fn delta2_numerator(&self) -> &Poly {
        self.delta2.num()
    }

    /// Whether no denominator factor divides the numerator, i.e. the
    /// six-factor denominator is already in lowest terms.
    ///
    /// Each factor is monic and linear in one variable, so it divides the
    /// numerator exactly when the numerator vanishes at its root.
    pub fn delta2_denominator_is_reduced(&self) -> Result<bool> {
        for (_, var, root) in DELTA2_DENOMINATOR {
            let at_root = self
                .delta2
                .num()
                .substitute(&Bindings::new().bind(var, poly(root)))?;
            if at_root.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn delta1_closed_form() -> RationalFn {
        let num = poly(DELTA1_PREFACTOR) * poly(DELTA1_LINE) * poly(DELTA1_PARABOLA);
        RationalFn::new(num, poly(DELTA1_DENOMINATOR)).expect("nonzero denominator")
    }

    /// The line factor `u - u^2 + u x - y` and the parabola factor
    /// `u - A u - u^2 + A x + x^2 - y` of `g - g∘T`.
    pub fn delta1_factors() -> (Poly, Poly) {
        (poly(DELTA1_LINE), poly(DELTA1_PARABOLA))
    }

    pub fn delta1_prefactor() -> Poly {
        poly(DELTA1_PREFACTOR)
    }

    pub fn delta1_denominator() -> Poly {
        poly(DELTA1_DENOMINATOR)
    }

    pub fn delta2_denominator_factors() -> Vec<Poly> {
        DELTA2_DENOMINATOR.iter().map(|(f, _, _)| poly(f)).collect()
    }
}

/// Product of the six reduced-denominator factors of `g - g∘T∘T`.
pub fn delta2_denominator() -> Poly {
    SymbolicModel::delta2_denominator_factors()
        .into_iter()
        .fold(Poly::one(), |acc, f| acc * f)
}

/// Exact value of `g - g∘T` or `g - g∘T∘T` at a point with `x, y, A > 0`
/// and `u > 1`.
pub fn eval_delta(model: &SymbolicModel, which: Which, point: &DeltaPoint) -> Result<BigRational> {
    if !point.x.is_positive() || !point.y.is_positive() || !point.cap_a.is_positive() {
        return Err(Error::domain("x, y and A must be positive"));
    }
    if point.u <= BigRational::one() {
        return Err(Error::domain(format!("u must exceed 1, got {}", point.u)));
    }
    let value = model.delta(which).eval(&point.assignment())?;
    debug_assert!(
        !value.is_zero() || point.x == point.u || point.y != point.u || which == Which::Two
    );
    Ok(value)
}
