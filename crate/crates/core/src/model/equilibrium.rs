use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{ParamsPQ, QuadraticSurd};

/// Positive equilibrium in floating point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EquilibriumInfo {
    /// Fixed point of the original recurrence.
    pub xbar: f64,
    /// `u = xbar / q`, the fixed point after the change of variables.
    pub ybar: f64,
    /// `u^2 - u`: the Lyness parameter sharing the equilibrium `u`.
    pub alpha_tilde: f64,
}

impl EquilibriumInfo {
    /// `xbar (1 + xbar) - p - q xbar`.
    pub fn residual(&self, params: &ParamsPQ) -> f64 {
        self.xbar * (1.0 + self.xbar) - params.p_f64() - params.q_f64() * self.xbar
    }
}

/// Positive equilibrium in `Q(sqrt(D))`, `D = (q-1)^2 + 4p`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactEquilibrium {
    pub xbar: QuadraticSurd,
    pub ybar: QuadraticSurd,
    pub alpha_tilde: QuadraticSurd,
}

impl ExactEquilibrium {
    /// `xbar (1 + xbar) - p - q xbar`, identically zero.
    pub fn residual(&self, params: &ParamsPQ) -> QuadraticSurd {
        let one = QuadraticSurd::rational(BigRational::one());
        let p = QuadraticSurd::rational(params.p().clone());
        let q = QuadraticSurd::rational(params.q().clone());
        let lhs = &self.xbar * &(&one + &self.xbar);
        &(&lhs - &p) - &(&q * &self.xbar)
    }
}

pub fn equilibrium(params: &ParamsPQ) -> EquilibriumInfo {
    let (p, q) = (params.p_f64(), params.q_f64());
    let b = q - 1.0;
    let root = libm::sqrt(b * b + 4.0 * p);
    // Rationalised form when b < 0 avoids cancelling b against the root.
    let xbar = if b >= 0.0 {
        0.5 * (b + root)
    } else {
        2.0 * p / (root - b)
    };
    let ybar = xbar / q;
    EquilibriumInfo {
        xbar,
        ybar,
        alpha_tilde: ybar * ybar - ybar,
    }
}

pub fn exact_equilibrium(params: &ParamsPQ) -> ExactEquilibrium {
    let one = BigRational::one();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let b = params.q() - &one;
    let disc = &b * &b + BigRational::from_integer(BigInt::from(4)) * params.p();
    let root = QuadraticSurd::sqrt(&disc);
    let xbar = &QuadraticSurd::rational(&b * &half) + &(&root * &QuadraticSurd::rational(half));
    let ybar = &xbar * &QuadraticSurd::rational(params.q().recip());
    let alpha_tilde = &(&ybar * &ybar) - &ybar;
    ExactEquilibrium {
        xbar,
        ybar,
        alpha_tilde,
    }
}
