use num_rational::BigRational;

use super::OrbitTrace;
use crate::model::{equilibrium, ParamsPQ};
use crate::rational::to_f64;
use crate::{Error, Result};

/// Absolute slack allowed when comparing `g` values.
pub const DESCENT_SLACK: f64 = 1e-12;

/// First state at which neither `T` nor `T∘T` lowers `g`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DescentViolation {
    pub n: u64,
    pub x: f64,
    pub y: f64,
    pub delta1: f64,
    pub delta2: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DescentOutcome {
    pub checked: u64,
    pub violation: Option<DescentViolation>,
}

impl DescentOutcome {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// `(g - g∘T, g - g∘T∘T)` at `(x, y)` in floating point.
///
/// Both are evaluated from the factored form of `g - g∘T` in deviations from
/// `(u, u)`, so they stay accurate where `g` itself is flat.
pub fn descent_deltas(x: f64, y: f64, u: f64, cap_a: f64) -> (f64, f64) {
    let alpha = u * u + (cap_a - 1.0) * u;
    let delta1 = |x: f64, y: f64, dx: f64, dy: f64| -> (f64, f64) {
        let f1 = u * dx - dy;
        let f2 = dx * (cap_a + x + u) - dy;
        let d = cap_a * f1 * f2 * (1.0 + y) / (x * (cap_a + x) * y * (alpha + y));
        // deviation of the second coordinate of T(x, y)
        (d, -f1 / (cap_a + x))
    };
    let (dx, dy) = (x - u, y - u);
    let (d1, dy_next) = delta1(x, y, dx, dy);
    let (d1_next, _) = delta1(y, u + dy_next, dy, dy_next);
    (d1, d1 + d1_next)
}

/// Checks `min(g(T s), g(T T s)) < g(s) + DESCENT_SLACK` for every state of
/// a float orbit in the transformed coordinates `y = x / q`.
pub fn descent_along(params: &ParamsPQ, trace: &OrbitTrace) -> Result<DescentOutcome> {
    let (u, cap_a) = transformed(params)?;
    let q = params.q_f64();
    let mut checked = 0;
    for s in &trace.states {
        let (x, y) = (s.prev / q, s.curr / q);
        checked += 1;
        if let Some(v) = violation(s.n, x, y, u, cap_a) {
            return Ok(DescentOutcome {
                checked,
                violation: Some(v),
            });
        }
    }
    Ok(DescentOutcome {
        checked,
        violation: None,
    })
}

/// Runs `steps` float iterations from `seed` and checks descent at each
/// state.
pub fn lyapunov_descent_check(
    params: &ParamsPQ,
    seed: (&BigRational, &BigRational),
    steps: u64,
) -> Result<DescentOutcome> {
    let (u, cap_a) = transformed(params)?;
    if to_f64(seed.0) <= 0.0 || to_f64(seed.1) <= 0.0 {
        return Err(Error::domain("seed must be positive"));
    }
    let q = params.q_f64();
    let alpha = u * u + (cap_a - 1.0) * u;
    let (mut x, mut y) = (to_f64(seed.0) / q, to_f64(seed.1) / q);
    for n in 0..=steps {
        if let Some(v) = violation(n, x, y, u, cap_a) {
            return Ok(DescentOutcome {
                checked: n + 1,
                violation: Some(v),
            });
        }
        (x, y) = (y, (alpha + y) / (cap_a + x));
    }
    Ok(DescentOutcome {
        checked: steps + 1,
        violation: None,
    })
}

fn transformed(params: &ParamsPQ) -> Result<(f64, f64)> {
    if !params.q_less_than_p() {
        return Err(Error::domain("descent needs q < p"));
    }
    Ok((equilibrium(params).ybar, 1.0 / params.q_f64()))
}

fn violation(n: u64, x: f64, y: f64, u: f64, cap_a: f64) -> Option<DescentViolation> {
    if x == u && y == u {
        return None;
    }
    let (delta1, delta2) = descent_deltas(x, y, u, cap_a);
    if delta1 > -DESCENT_SLACK || delta2 > -DESCENT_SLACK {
        return None;
    }
    Some(DescentViolation {
        n,
        x,
        y,
        delta1,
        delta2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::lyapunov_g;

    #[test]
    fn deltas_match_direct_differences() {
        let (x, y, u, a) = (1.0, 3.0, 2.0, 1.0);
        let (d1, d2) = descent_deltas(x, y, u, a);
        assert!((d1 - 10.0 / 7.0).abs() < 1e-12);
        let alpha = u * u + (a - 1.0) * u;
        let t = |x: f64, y: f64| (y, (alpha + y) / (a + x));
        let (x1, y1) = t(x, y);
        let (x2, y2) = t(x1, y1);
        let g0 = lyapunov_g(&x, &y, &u);
        assert!((d2 - (g0 - lyapunov_g(&x2, &y2, &u))).abs() < 1e-12);
    }

    #[test]
    fn equilibrium_is_not_a_violation() {
        assert_eq!(violation(0, 2.0, 2.0, 2.0, 1.0), None);
    }
}
