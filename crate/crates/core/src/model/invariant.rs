use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{Num, Zero};

/// `(1 + x)(1 + y)(alpha_tilde + x + y) / (x y)`, constant along orbits of
/// `z[n+1] = (alpha_tilde + z[n]) / z[n-1]`.
pub fn invariant<T: Num + Clone>(x: &T, y: &T, alpha_tilde: &T) -> T {
    let one = T::one();
    (one.clone() + x.clone()) * (one + y.clone()) * (alpha_tilde.clone() + x.clone() + y.clone())
        / (x.clone() * y.clone())
}

/// The invariant with `alpha_tilde = u^2 - u`, used as a Lyapunov candidate.
pub fn lyapunov_g<T: Num + Clone>(x: &T, y: &T, u: &T) -> T {
    let alpha_tilde = u.clone() * u.clone() - u.clone();
    invariant(x, y, &alpha_tilde)
}

/// `T(x, y) = (y, (u^2 + (A - 1) u + y) / (A + x))`.
pub fn step_map<T: Num + Clone>(x: &T, y: &T, u: &T, cap_a: &T) -> (T, T) {
    let alpha = super::alpha_of_u(u, cap_a);
    let next = (alpha + y.clone()) / (cap_a.clone() + x.clone());
    (y.clone(), next)
}

/// `[z[-1], z[0], z[1], ..., z[steps]]` for the Lyness recurrence.
pub fn lyness_orbit(
    alpha_tilde: &BigRational,
    seed: (&BigRational, &BigRational),
    steps: usize,
) -> Vec<BigRational> {
    let mut orbit = Vec::with_capacity(steps + 2);
    orbit.push(seed.0.clone());
    orbit.push(seed.1.clone());
    for n in 0..steps {
        let next = (alpha_tilde + &orbit[n + 1]) / &orbit[n];
        orbit.push(next);
    }
    orbit
}

/// Whether `g(z[n+1], z[n]) == g(z[0], z[-1])` exactly for every step.
pub fn lyness_invariance_check(
    alpha_tilde: &BigRational,
    seed: (&BigRational, &BigRational),
    steps: usize,
) -> bool {
    if seed.0 <= &BigRational::zero() || seed.1 <= &BigRational::zero() {
        return false;
    }
    let orbit = lyness_orbit(alpha_tilde, seed, steps);
    let start = invariant(&orbit[1], &orbit[0], alpha_tilde);
    orbit
        .windows(2)
        .all(|w| invariant(&w[1], &w[0], alpha_tilde) == start)
}

/// Smallest `p >= 1` with `(z[p-1], z[p]) == (z[-1], z[0])`, if seen in the orbit.
pub fn orbit_period(orbit: &[BigRational]) -> Option<usize> {
    (1..orbit.len().saturating_sub(1)).find(|&p| orbit[p] == orbit[0] && orbit[p + 1] == orbit[1])
}
