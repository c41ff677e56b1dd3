use crate::model::{equilibrium, ParamsPQ};

/// Linearization of `y[n+1] = (alpha + y[n]) / (A + y[n-1])` at `(u, u)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Stability {
    pub spectral_radius: f64,
    pub stable: bool,
    /// Whether the characteristic roots are a complex-conjugate pair.
    pub complex: bool,
}

pub fn local_stability(params: &ParamsPQ) -> Stability {
    local_stability_ua(equilibrium(params).ybar, 1.0 / params.q_f64())
}

/// Roots of `l^2 - l/(A + u) + u/(A + u)`.
pub fn local_stability_ua(u: f64, cap_a: f64) -> Stability {
    let b = 1.0 / (cap_a + u);
    let c = u / (cap_a + u);
    let disc = b * b - 4.0 * c;
    let (spectral_radius, complex) = if disc < 0.0 {
        (libm::sqrt(c), true)
    } else {
        let root = libm::sqrt(disc);
        (
            ((b + root) / 2.0).abs().max(((b - root) / 2.0).abs()),
            false,
        )
    };
    Stability {
        spectral_radius,
        stable: spectral_radius < 1.0,
        complex,
    }
}
