use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::rational::to_f64;

/// `a + b * sqrt(d)` with rational `a, b` and integer `d >= 0`.
///
/// When `d` is a perfect square the root is folded into `a`, so a surd with
/// `b != 0` is irrational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticSurd {
    a: BigRational,
    b: BigRational,
    d: BigInt,
}

impl QuadraticSurd {
    pub fn rational(a: BigRational) -> Self {
        QuadraticSurd {
            a,
            b: BigRational::zero(),
            d: BigInt::zero(),
        }
    }

    pub fn new(a: BigRational, b: BigRational, d: BigInt) -> Self {
        assert!(!d.is_negative(), "negative radicand");
        if b.is_zero() || d.is_zero() {
            return QuadraticSurd::rational(a);
        }
        let root = d.sqrt();
        if &root * &root == d {
            return QuadraticSurd::rational(a + b * BigRational::from_integer(root));
        }
        QuadraticSurd { a, b, d }
    }

    /// Principal square root of a nonnegative rational.
    pub fn sqrt(r: &BigRational) -> Self {
        assert!(!r.is_negative(), "square root of a negative rational");
        // sqrt(n/m) = sqrt(n m) / m
        let d = r.numer() * r.denom();
        let b = BigRational::new(BigInt::one(), r.denom().clone());
        QuadraticSurd::new(BigRational::zero(), b, d)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn irrational_part(&self) -> (&BigRational, &BigInt) {
        (&self.b, &self.d)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.b.is_zero().then_some(&self.a)
    }

    pub fn to_f64(&self) -> f64 {
        if self.b.is_zero() {
            return to_f64(&self.a);
        }
        let root = libm::sqrt(to_f64(&BigRational::from_integer(self.d.clone())));
        to_f64(&self.a) + to_f64(&self.b) * root
    }

    fn radicand_with(&self, other: &QuadraticSurd) -> BigInt {
        match (self.b.is_zero(), other.b.is_zero()) {
            (true, _) => other.d.clone(),
            (_, true) => self.d.clone(),
            _ => {
                assert_eq!(self.d, other.d, "surds over different radicands");
                self.d.clone()
            }
        }
    }

    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (s, t) if s == t => s,
            _ => {
                // Opposite signs: compare a^2 with b^2 d.
                let a2 = &self.a * &self.a;
                let b2d = &self.b * &self.b * BigRational::from_integer(self.d.clone());
                if a2 > b2d {
                    sa
                } else if a2 < b2d {
                    sb
                } else {
                    Ordering::Equal
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Multiplicative inverse via the conjugate; `None` for zero.
    pub fn recip(&self) -> Option<QuadraticSurd> {
        if self.is_zero() {
            return None;
        }
        let norm =
            &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(self.d.clone());
        Some(QuadraticSurd::new(
            &self.a / &norm,
            -(&self.b / &norm),
            self.d.clone(),
        ))
    }

    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        (self - &QuadraticSurd::rational(r.clone())).signum()
    }
}

impl Add for &QuadraticSurd {
    type Output = QuadraticSurd;
    fn add(self, rhs: &QuadraticSurd) -> QuadraticSurd {
        let d = self.radicand_with(rhs);
        QuadraticSurd::new(&self.a + &rhs.a, &self.b + &rhs.b, d)
    }
}

impl Sub for &QuadraticSurd {
    type Output = QuadraticSurd;
    fn sub(self, rhs: &QuadraticSurd) -> QuadraticSurd {
        self + &(-rhs)
    }
}

impl Neg for &QuadraticSurd {
    type Output = QuadraticSurd;
    fn neg(self) -> QuadraticSurd {
        QuadraticSurd {
            a: -self.a.clone(),
            b: -self.b.clone(),
            d: self.d.clone(),
        }
    }
}

impl Mul for &QuadraticSurd {
    type Output = QuadraticSurd;
    fn mul(self, rhs: &QuadraticSurd) -> QuadraticSurd {
        let d = self.radicand_with(rhs);
        let dr = BigRational::from_integer(d.clone());
        QuadraticSurd::new(
            &self.a * &rhs.a + &self.b * &rhs.b * dr,
            &self.a * &rhs.b + &self.b * &rhs.a,
            d,
        )
    }
}

impl PartialOrd for QuadraticSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some((self - other).signum())
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + ({})*sqrt({})", self.a, self.b, self.d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn perfect_squares_fold() {
        assert_eq!(QuadraticSurd::sqrt(&r(9, 4)).as_rational(), Some(&r(3, 2)));
        assert!(QuadraticSurd::sqrt(&r(2, 1)).as_rational().is_none());
    }

    #[test]
    fn sign_of_mixed_terms() {
        // 3 - sqrt(8) > 0 and 2 - sqrt(5) < 0
        let s = |a: i64, b: i64, d: i64| QuadraticSurd::new(r(a, 1), r(b, 1), d.into());
        assert_eq!(s(3, -1, 8).signum(), Ordering::Greater);
        assert_eq!(s(2, -1, 5).signum(), Ordering::Less);
        assert_eq!(s(-3, 1, 8).signum(), Ordering::Less);
        assert_eq!(s(-2, 1, 5).signum(), Ordering::Greater);
    }

    #[test]
    fn sqrt2_squared_is_two() {
        let s = QuadraticSurd::sqrt(&r(2, 1));
        assert_eq!((&s * &s).as_rational(), Some(&r(2, 1)));
        let inv = s.recip().unwrap();
        assert_eq!((&s * &inv).as_rational(), Some(&r(1, 1)));
        assert!((s.to_f64() - core::f64::consts::SQRT_2).abs() < 1e-15);
    }
}
