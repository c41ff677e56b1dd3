use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::model::{equilibrium, invariant, ParamsPQ};
use crate::rational::to_f64;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Float,
    /// Exact rational iteration. Numerators roughly grow by a third in bit
    /// length per step, so keep `max_iters` in the tens.
    Exact,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimOptions {
    pub mode: Mode,
    pub tol: f64,
    pub max_iters: u64,
}

impl Default for SimOptions {
    fn default() -> Self {
        SimOptions {
            mode: Mode::Float,
            tol: 1e-9,
            max_iters: 1_000_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Converged,
    MaxItersExceeded,
    /// A float state overflowed; says nothing about the true orbit.
    DivergedNonfinite,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Converged => "converged",
            Verdict::MaxItersExceeded => "max-iters-exceeded",
            Verdict::DivergedNonfinite => "diverged-nonfinite",
        }
    }
}

/// `(n, x[n-1], x[n])`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrbitState {
    pub n: u64,
    pub prev: f64,
    pub curr: f64,
}

#[derive(Clone, Debug)]
pub struct OrbitTrace {
    pub states: Vec<OrbitState>,
    /// `g(y[n-1], y[n])` with `y = x / q` and `alpha_tilde = u^2 - u`.
    pub g_values: Vec<f64>,
    pub verdict: Verdict,
    pub iters_to_tol: Option<u64>,
    pub xbar: f64,
    /// `x[-1], x[0], ..., x[N]` in exact mode.
    pub exact: Option<Vec<BigRational>>,
}

impl OrbitTrace {
    pub fn last(&self) -> &OrbitState {
        self.states.last().expect("trace holds the seed")
    }
}

/// Iterates from `(x[-1], x[0])` until both coordinates are within `tol`
/// of the equilibrium or `max_iters` steps have run.
pub fn simulate(
    params: &ParamsPQ,
    seed: (&BigRational, &BigRational),
    opts: SimOptions,
) -> Result<OrbitTrace> {
    if !seed.0.is_positive() || !seed.1.is_positive() {
        return Err(Error::domain("seed must be positive"));
    }
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(Error::domain("tolerance must be positive"));
    }
    let eq = equilibrium(params);
    let q = params.q_f64();
    let alpha_tilde = eq.alpha_tilde;
    let g = |prev: f64, curr: f64| invariant(&(prev / q), &(curr / q), &alpha_tilde);
    let near = |prev: f64, curr: f64| {
        (prev - eq.xbar).abs() < opts.tol && (curr - eq.xbar).abs() < opts.tol
    };

    let mut trace = OrbitTrace {
        states: Vec::new(),
        g_values: Vec::new(),
        verdict: Verdict::MaxItersExceeded,
        iters_to_tol: None,
        xbar: eq.xbar,
        exact: None,
    };
    let record = |trace: &mut OrbitTrace, n: u64, prev: f64, curr: f64| -> bool {
        trace.states.push(OrbitState { n, prev, curr });
        trace.g_values.push(g(prev, curr));
        if near(prev, curr) {
            trace.verdict = Verdict::Converged;
            trace.iters_to_tol = Some(n);
            return true;
        }
        false
    };

    match opts.mode {
        Mode::Float => {
            let (p, q) = (params.p_f64(), params.q_f64());
            let (mut prev, mut curr) = (to_f64(seed.0), to_f64(seed.1));
            if record(&mut trace, 0, prev, curr) {
                return Ok(trace);
            }
            for n in 1..=opts.max_iters {
                let next = (p + q * curr) / (1.0 + prev);
                if !next.is_finite() {
                    trace.verdict = Verdict::DivergedNonfinite;
                    return Ok(trace);
                }
                (prev, curr) = (curr, next);
                if record(&mut trace, n, prev, curr) {
                    return Ok(trace);
                }
            }
        }
        Mode::Exact => {
            let one = BigRational::one();
            let mut xs = alloc::vec![seed.0.clone(), seed.1.clone()];
            let converged = record(&mut trace, 0, to_f64(seed.0), to_f64(seed.1));
            if !converged {
                for n in 1..=opts.max_iters {
                    let len = xs.len();
                    let next = (params.p() + params.q() * &xs[len - 1]) / (&one + &xs[len - 2]);
                    if !next.is_positive() {
                        return Err(Error::Inconsistent(
                            "exact iterate left the positive axis".into(),
                        ));
                    }
                    let (prev, curr) = (to_f64(&xs[len - 1]), to_f64(&next));
                    xs.push(next);
                    if record(&mut trace, n, prev, curr) {
                        break;
                    }
                }
            }
            trace.exact = Some(xs);
        }
    }
    Ok(trace)
}
