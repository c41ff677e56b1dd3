use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use super::{Monomial, Poly};
use crate::{Error, Result};

/// Quotient of two polynomials. Never reduced by a gcd; equality is decided
/// by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFn {
    num: Poly,
    den: Poly,
}

/// Simultaneous substitution `variable -> expression`, keyed by name.
#[derive(Clone, Debug, Default)]
pub struct Bindings {
    map: BTreeMap<String, RationalFn>,
}

impl Bindings {
    pub fn new() -> Self {
        Bindings::default()
    }

    pub fn bind(mut self, name: &str, value: impl Into<RationalFn>) -> Self {
        self.map.insert(name.to_string(), value.into());
        self
    }

    pub fn get(&self, name: &str) -> Option<&RationalFn> {
        self.map.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &RationalFn)> {
        self.map.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Bindings equivalent to applying `self` and then `then`.
    ///
    /// Variables bound only by `then` keep their binding from `then`.
    pub fn then(&self, then: &Bindings) -> Result<Bindings> {
        let mut out = Bindings::new();
        for (name, value) in &self.map {
            out.map.insert(name.clone(), value.substitute(then)?);
        }
        for (name, value) in &then.map {
            out.map.entry(name.clone()).or_insert_with(|| value.clone());
        }
        Ok(out)
    }

    /// `x -> x0 + u, y -> y0 + u` style text, in name order.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (i, (name, value)) in self.map.iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            s.push_str(name);
            s.push_str(" -> ");
            s.push_str(&value.to_text());
        }
        s
    }
}

impl RationalFn {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        Ok(RationalFn { num, den })
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFn {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn var(name: &str) -> Self {
        RationalFn::from_poly(Poly::var(name))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn into_parts(self) -> (Poly, Poly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<RationalFn> {
        RationalFn::new(self.den.clone(), self.num.clone())
    }

    /// `a/b == c/d` iff `a*d - c*b` is the zero polynomial.
    pub fn equivalent(&self, other: &RationalFn) -> bool {
        self.cross_difference(other).is_zero()
    }

    /// `self.num * other.den - other.num * self.den`.
    pub fn cross_difference(&self, other: &RationalFn) -> Poly {
        &self.num * &other.den - &other.num * &self.den
    }

    /// Applies `bindings` to numerator and denominator and recombines over a
    /// single cleared denominator.
    pub fn substitute(&self, bindings: &Bindings) -> Result<RationalFn> {
        let top = substitute_homogenized(&self.num, bindings);
        let bottom = substitute_homogenized(&self.den, bindings);
        if bottom.cleared.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        // top = N' / prod(d_v^a_v), bottom = D' / prod(d_v^b_v)
        // => N' * prod(d_v^(b_v - a_v)) / D', moving negative powers across.
        let mut num = top.cleared;
        let mut den = bottom.cleared;
        for (v, a) in &top.den_powers {
            let b = bottom.den_powers.get(v).copied().unwrap_or(0);
            if *a > b {
                den = &den * &top.binding_dens[v].pow(a - b);
            }
        }
        for (v, b) in &bottom.den_powers {
            let a = top.den_powers.get(v).copied().unwrap_or(0);
            if *b > a {
                num = &num * &bottom.binding_dens[v].pow(b - a);
            }
        }
        RationalFn::new(num, den)
    }

    pub fn eval(&self, point: &[(&str, BigRational)]) -> Result<BigRational> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(Error::EvaluationPole);
        }
        Ok(self.num.eval(point)? / d)
    }

    pub fn eval_f64(&self, point: &[(&str, f64)]) -> Result<f64> {
        let d = self.den.eval_f64(point)?;
        if d == 0.0 {
            return Err(Error::EvaluationPole);
        }
        Ok(self.num.eval_f64(point)? / d)
    }

    pub fn to_text(&self) -> String {
        if self.den == Poly::one() {
            return self.num.to_text();
        }
        alloc::format!("({})/({})", self.num.to_text(), self.den.to_text())
    }
}

impl Poly {
    /// Substitutes `bindings` simultaneously. The result's denominator is the
    /// product of binding denominators raised to the degrees they clear.
    pub fn substitute(&self, bindings: &Bindings) -> Result<RationalFn> {
        let h = substitute_homogenized(self, bindings);
        let den = h
            .den_powers
            .iter()
            .fold(Poly::one(), |acc, (v, e)| acc * h.binding_dens[v].pow(*e));
        RationalFn::new(h.cleared, den)
    }
}

struct Homogenized {
    cleared: Poly,
    den_powers: BTreeMap<String, u32>,
    binding_dens: BTreeMap<String, Poly>,
}

/// `p(b_1, ..., b_k)` written as `cleared / prod_v den_v^{deg_v(p)}`.
///
/// Terms are grouped by their exponents in the bound variables so each power
/// product is built once.
fn substitute_homogenized(p: &Poly, bindings: &Bindings) -> Homogenized {
    struct Bound<'a> {
        id: u16,
        name: &'a str,
        degree: u32,
        num_powers: Vec<Poly>,
        den_powers: Vec<Poly>,
    }

    let mut bound: Vec<Bound> = Vec::new();
    for (name, value) in bindings.iter() {
        let Some(id) = p.vars().id(name) else {
            continue;
        };
        let degree = p.degree_in_id(id);
        if degree == 0 {
            continue;
        }
        let powers = |base: &Poly| {
            let mut v = alloc::vec![Poly::one()];
            for i in 1..=degree as usize {
                let next = &v[i - 1] * base;
                v.push(next);
            }
            v
        };
        let den_is_one = value.den() == &Poly::one();
        bound.push(Bound {
            id,
            name,
            degree,
            num_powers: powers(value.num()),
            den_powers: if den_is_one {
                Vec::new()
            } else {
                powers(value.den())
            },
        });
    }

    let is_bound = |id: u16| bound.iter().any(|b| b.id == id);
    let mut groups: BTreeMap<Vec<u32>, BTreeMap<Monomial, BigRational>> = BTreeMap::new();
    for (m, c) in p.terms() {
        let (inside, outside) = m.split(is_bound);
        let key: Vec<u32> = bound.iter().map(|b| inside.exponent(b.id)).collect();
        groups.entry(key).or_default().insert(outside, c.clone());
    }

    let mut cleared = Poly::zero();
    for (key, rest) in groups {
        let mut product = Poly::from_parts(p.vars().clone(), rest);
        for (b, &e) in bound.iter().zip(&key) {
            product = &product * &b.num_powers[e as usize];
            if !b.den_powers.is_empty() {
                product = &product * &b.den_powers[(b.degree - e) as usize];
            }
        }
        cleared = &cleared + &product;
    }

    let mut den_powers = BTreeMap::new();
    let mut binding_dens = BTreeMap::new();
    for b in &bound {
        if !b.den_powers.is_empty() {
            den_powers.insert(b.name.to_string(), b.degree);
            binding_dens.insert(b.name.to_string(), b.den_powers[1].clone());
        }
    }
    Homogenized {
        cleared,
        den_powers,
        binding_dens,
    }
}

impl From<Poly> for RationalFn {
    fn from(p: Poly) -> Self {
        RationalFn::from_poly(p)
    }
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        self.equivalent(other)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        -&self
    }
}

fn add_rf(a: &RationalFn, b: &RationalFn, negate: bool) -> RationalFn {
    let rhs = if negate { -&b.num } else { b.num.clone() };
    if a.den == b.den {
        return RationalFn {
            num: &a.num + &rhs,
            den: a.den.clone(),
        };
    }
    RationalFn {
        num: &a.num * &b.den + &rhs * &a.den,
        den: &a.den * &b.den,
    }
}

impl Add<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        add_rf(self, rhs, false)
    }
}

impl Sub<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        add_rf(self, rhs, true)
    }
}

impl Mul<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

/// Panics if `rhs` is the zero function; use [`RationalFn::recip`] to handle that case.
impl Div<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn div(self, rhs: &RationalFn) -> RationalFn {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RationalFn {
            num: &self.num * &rhs.den,
            den: &self.den * &rhs.num,
        }
    }
}

macro_rules! owned_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait<RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $method(self, rhs: RationalFn) -> RationalFn {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $method(self, rhs: &RationalFn) -> RationalFn {
                (&self).$method(rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul, Div div);
