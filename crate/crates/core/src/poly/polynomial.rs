use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Monomial, VarTable};
use crate::{Error, Result};

/// Sparse polynomial with [`BigRational`] coefficients.
///
/// No stored coefficient is zero, so structural equality of the term maps is
/// polynomial equality.
#[derive(Clone, Debug, Default)]
pub struct Poly {
    vars: VarTable,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Poly {
            vars: VarTable::canonical(),
            terms,
        }
    }

    pub fn int(c: i64) -> Self {
        Poly::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn var(name: &str) -> Self {
        let vars = VarTable::containing(name);
        let id = vars.id(name).expect("table built for this name");
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(id, 1), BigRational::one());
        Poly { vars, terms }
    }

    /// `coeff * name1^e1 * name2^e2 * ...`
    pub fn term(coeff: BigRational, factors: &[(&str, u32)]) -> Self {
        factors
            .iter()
            .fold(Poly::constant(coeff), |acc, &(name, e)| {
                acc * Poly::var(name).pow(e)
            })
    }

    pub(crate) fn from_parts(vars: VarTable, terms: BTreeMap<Monomial, BigRational>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Poly { vars, terms }
    }

    pub fn vars(&self) -> &VarTable {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            Some(BigRational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    /// Number of nonzero terms.
    pub fn monomial_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of the monomial given by names, e.g. `[("A", 1), ("k", 2)]`.
    pub fn coefficient_of(&self, factors: &[(&str, u32)]) -> BigRational {
        let mut pairs = Vec::with_capacity(factors.len());
        for &(name, e) in factors {
            match self.vars.id(name) {
                Some(id) => pairs.push((id, e)),
                None if e == 0 => {}
                None => return BigRational::zero(),
            }
        }
        self.coefficient(&Monomial::from_pairs(pairs))
    }

    /// Names of the variables that actually occur.
    pub fn variables(&self) -> Vec<&str> {
        let mut ids: Vec<u16> = self
            .terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|&(id, _)| id))
            .collect();
        ids.sort_unstable();
        ids.dedup();
        ids.into_iter().map(|id| self.vars.name(id)).collect()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        match self.vars.id(name) {
            Some(id) => self.degree_in_id(id),
            None => 0,
        }
    }

    pub(crate) fn degree_in_id(&self, id: u16) -> u32 {
        self.terms.keys().map(|m| m.exponent(id)).max().unwrap_or(0)
    }

    /// Re-expresses `self` over `table`, with `map` sending old ids to new.
    pub(crate) fn relabel(&self, table: &VarTable, map: &[u16]) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.remap(map), c.clone()))
            .collect();
        Poly {
            vars: table.clone(),
            terms,
        }
    }

    /// Both operands over one table.
    pub(crate) fn aligned(&self, other: &Poly) -> (Poly, Poly) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let (table, ma, mb) = self.vars.merge(&other.vars);
        (self.relabel(&table, &ma), other.relabel(&table, &mb))
    }

    fn with_aligned<R>(&self, other: &Poly, f: impl FnOnce(&Poly, &Poly) -> R) -> R {
        if self.vars == other.vars {
            f(self, other)
        } else {
            let (a, b) = self.aligned(other);
            f(&a, &b)
        }
    }

    fn add_scaled_into(terms: &mut BTreeMap<Monomial, BigRational>, m: Monomial, c: BigRational) {
        match terms.entry(m) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_impl(&self, other: &Poly, negate: bool) -> Poly {
        self.with_aligned(other, |a, b| {
            let mut terms = a.terms.clone();
            for (m, c) in &b.terms {
                let c = if negate { -c.clone() } else { c.clone() };
                Poly::add_scaled_into(&mut terms, m.clone(), c);
            }
            Poly {
                vars: a.vars.clone(),
                terms,
            }
        })
    }

    fn mul_impl(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        self.with_aligned(other, |a, b| {
            let mut terms = BTreeMap::new();
            for (ma, ca) in &a.terms {
                for (mb, cb) in &b.terms {
                    Poly::add_scaled_into(&mut terms, ma.mul(mb), ca * cb);
                }
            }
            Poly {
                vars: a.vars.clone(),
                terms,
            }
        })
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Smallest coefficient and the graded-lex-first monomial attaining it.
    pub fn min_coefficient(&self) -> Result<(BigRational, Monomial)> {
        let mut best: Option<(&Monomial, &BigRational)> = None;
        for (m, c) in &self.terms {
            if best.is_none_or(|(_, b)| c < b) {
                best = Some((m, c));
            }
        }
        best.map(|(m, c)| (c.clone(), m.clone()))
            .ok_or(Error::EmptyPolynomial)
    }

    pub fn all_coefficients_positive(&self) -> bool {
        self.terms.values().all(Signed::is_positive)
    }

    pub fn all_coefficients_integer(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    /// The terms that survive setting `name` to zero.
    pub fn at_zero(&self, name: &str) -> Poly {
        let Some(id) = self.vars.id(name) else {
            return self.clone();
        };
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(id) == 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Exact value at a point. Every occurring variable must be given.
    pub fn eval(&self, point: &[(&str, BigRational)]) -> Result<BigRational> {
        let mut values: Vec<Option<&BigRational>> = alloc::vec![None; self.vars.len()];
        for (name, value) in point {
            if let Some(id) = self.vars.id(name) {
                values[id as usize] = Some(value);
            }
        }
        let mut powers: Vec<Vec<BigRational>> = alloc::vec![Vec::new(); self.vars.len()];
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for &(id, e) in m.factors() {
                let base = values[id as usize]
                    .ok_or_else(|| Error::UnboundVariable(self.vars.name(id).to_string()))?;
                let cache = &mut powers[id as usize];
                if cache.is_empty() {
                    cache.push(BigRational::one());
                }
                while cache.len() <= e as usize {
                    let next = cache.last().expect("nonempty") * base;
                    cache.push(next);
                }
                term *= &cache[e as usize];
            }
            total += term;
        }
        Ok(total)
    }

    /// Floating-point value at a point, for plotting and quick numeric checks.
    pub fn eval_f64(&self, point: &[(&str, f64)]) -> Result<f64> {
        let mut values: Vec<Option<f64>> = alloc::vec![None; self.vars.len()];
        for &(name, value) in point {
            if let Some(id) = self.vars.id(name) {
                values[id as usize] = Some(value);
            }
        }
        let mut total = 0.0;
        for (m, c) in &self.terms {
            let mut term = crate::rational::to_f64(c);
            for &(id, e) in m.factors() {
                let base = values[id as usize]
                    .ok_or_else(|| Error::UnboundVariable(self.vars.name(id).to_string()))?;
                for _ in 0..e {
                    term *= base;
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Quotient of an exact division; fails if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        if divisor.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        self.with_aligned(divisor, |a, d| {
            let (lead_m, lead_c) = d.terms.iter().next_back().expect("nonzero divisor");
            let mut rem = a.terms.clone();
            let mut quotient = BTreeMap::new();
            while let Some((m, c)) = rem.iter().next_back() {
                if !lead_m.divides(m) {
                    return Err(Error::InexactDivision);
                }
                let qm = m.div(lead_m);
                let qc = c / lead_c;
                // The leading terms cancel exactly below.
                for (dm, dc) in &d.terms {
                    Poly::add_scaled_into(&mut rem, qm.mul(dm), -(&qc * dc));
                }
                quotient.insert(qm, qc);
            }
            Ok(Poly {
                vars: a.vars.clone(),
                terms: quotient,
            })
        })
    }

    /// Canonical text: ascending graded-lex, explicit signs,
    /// e.g. `-A^2*u^3 + A^3*u^3`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let magnitude = c.abs();
            if m.is_one() {
                out.push_str(&magnitude.to_string());
            } else {
                if !magnitude.is_one() {
                    out.push_str(&magnitude.to_string());
                    out.push('*');
                }
                out.push_str(&m.to_text(&self.vars));
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.with_aligned(other, |a, b| a.terms == b.terms)
    }
}

impl Eq for Poly {}

impl From<BigRational> for Poly {
    fn from(c: BigRational) -> Self {
        Poly::constant(c)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                let f: fn(&Poly, &Poly) -> Poly = $body;
                f(self, rhs)
            }
        }
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn binomial_square() {
        let one_t = p("1 + t");
        assert_eq!(&one_t * &one_t, p("1 + 2t + t^2"));
    }

    #[test]
    fn additive_identity() {
        let f = p("3x^2 y - 1/2 u + 7");
        assert_eq!(&f + &Poly::zero(), f);
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(p("x - y") * p("x + y"), p("x^2 - y^2"));
    }

    #[test]
    fn powers() {
        assert_eq!(p("1 + t").pow(3), p("1 + 3t + 3t^2 + t^3"));
        assert_eq!(p("x").pow(0), Poly::one());
        assert_eq!(p("x + y").pow(2), p("x^2 + 2x y + y^2"));
    }

    #[test]
    fn min_coefficient_examples() {
        let (c, m) = p("1 + t").pow(3).min_coefficient().unwrap();
        assert_eq!(c, r(1, 1));
        assert!(m.is_one());

        let f = p("t^2 - t");
        let (c, m) = f.min_coefficient().unwrap();
        assert_eq!(c, r(-1, 1));
        assert_eq!(m.to_text(f.vars()), "t");

        let f = p("2A k^2 + 8A^2 k^2");
        let (c, m) = f.min_coefficient().unwrap();
        assert_eq!(c, r(2, 1));
        assert_eq!(m.to_text(f.vars()), "A*k^2");

        assert_eq!(Poly::zero().min_coefficient(), Err(Error::EmptyPolynomial));
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(Poly::zero().monomial_count(), 0);
        assert_eq!(p("1 + t").pow(3).monomial_count(), 4);
    }

    #[test]
    fn exact_division() {
        let a = p("x^2 - y^2");
        assert_eq!(a.div_exact(&p("x - y")).unwrap(), p("x + y"));
        assert_eq!(a.div_exact(&p("x + 1")), Err(Error::InexactDivision));
        let prod = p("1 + u x + A y^2") * p("3 - w");
        assert_eq!(prod.div_exact(&p("3 - w")).unwrap(), p("1 + u x + A y^2"));
    }

    #[test]
    fn evaluation() {
        let f = p("x^2 y - 3/2 u");
        let v = f
            .eval(&[("x", r(2, 1)), ("y", r(1, 3)), ("u", r(2, 1))])
            .unwrap();
        assert_eq!(v, r(4, 3) - r(3, 1));
        assert_eq!(
            f.eval(&[("x", r(1, 1))]),
            Err(Error::UnboundVariable("u".into()))
        );
    }

    #[test]
    fn text_is_graded_and_signed() {
        let f = p("A^3 u^3 - A^2 u^3");
        assert_eq!(f.to_text(), "-A^2*u^3 + A^3*u^3");
        assert_eq!(p("-1/2 + x").to_text(), "-1/2 + x");
        assert_eq!(Poly::zero().to_text(), "0");
    }

    #[test]
    fn tables_merge_by_name() {
        let f = p("alpha + x");
        let g = p("beta - x");
        let s = &f + &g;
        assert_eq!(s.to_text(), "beta + alpha");
        assert_eq!(s.variables(), ["alpha", "beta"]);
    }

    #[test]
    fn degrees() {
        let f = p("x^3 y + u^2 A^4");
        assert_eq!(f.total_degree(), 6);
        assert_eq!(f.degree_in("x"), 3);
        assert_eq!(f.degree_in("nope"), 0);
        assert_eq!(f.at_zero("x"), p("u^2 A^4"));
    }
}
