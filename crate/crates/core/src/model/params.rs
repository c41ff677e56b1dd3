use num_rational::BigRational;
use num_traits::{Num, Signed};

use crate::rational::{from_f64, to_f64};
use crate::{Error, Result};

/// Parameters `p, q > 0` of `x[n+1] = (p + q x[n]) / (1 + x[n-1])`.
///
/// Stored exactly; floats are converted without rounding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamsPQ {
    p: BigRational,
    q: BigRational,
}

impl ParamsPQ {
    pub fn new(p: BigRational, q: BigRational) -> Result<Self> {
        if !p.is_positive() || !q.is_positive() {
            return Err(Error::domain("p and q must be positive"));
        }
        Ok(ParamsPQ { p, q })
    }

    pub fn from_f64(p: f64, q: f64) -> Result<Self> {
        match (from_f64(p), from_f64(q)) {
            (Some(p), Some(q)) => ParamsPQ::new(p, q),
            _ => Err(Error::domain("p and q must be finite")),
        }
    }

    pub fn from_ints(p: i64, q: i64) -> Result<Self> {
        ParamsPQ::new(
            BigRational::from_integer(p.into()),
            BigRational::from_integer(q.into()),
        )
    }

    pub fn p(&self) -> &BigRational {
        &self.p
    }

    pub fn q(&self) -> &BigRational {
        &self.q
    }

    pub fn p_f64(&self) -> f64 {
        to_f64(&self.p)
    }

    pub fn q_f64(&self) -> f64 {
        to_f64(&self.q)
    }

    /// `A = 1/q`, `alpha = p A^2`; with `x = q y` the recurrence becomes
    /// `y[n+1] = (alpha + y[n]) / (A + y[n-1])`.
    pub fn to_alpha_a(&self) -> ParamsAlphaA {
        let cap_a = self.q.recip();
        let alpha = &self.p * &cap_a * &cap_a;
        ParamsAlphaA { alpha, cap_a }
    }

    /// The transformed equilibrium exceeds 1 exactly in this regime.
    pub fn q_less_than_p(&self) -> bool {
        self.q < self.p
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamsAlphaA {
    pub alpha: BigRational,
    pub cap_a: BigRational,
}

impl ParamsAlphaA {
    pub fn new(alpha: BigRational, cap_a: BigRational) -> Result<Self> {
        if !alpha.is_positive() || !cap_a.is_positive() {
            return Err(Error::domain("alpha and A must be positive"));
        }
        Ok(ParamsAlphaA { alpha, cap_a })
    }

    pub fn to_pq(&self) -> ParamsPQ {
        ParamsPQ {
            p: &self.alpha / (&self.cap_a * &self.cap_a),
            q: self.cap_a.recip(),
        }
    }
}

/// `u^2 + (A - 1) u`: the `alpha` whose transformed equilibrium is `u`.
pub fn alpha_of_u<T: Num + Clone>(u: &T, cap_a: &T) -> T {
    u.clone() * u.clone() + (cap_a.clone() - T::one()) * u.clone()
}
