//! Parameters, equilibria, the Lyness invariant and the symbolic objects
//! built from it.

mod equilibrium;
mod invariant;
mod params;
mod surd;
mod symbolic;

pub use equilibrium::{equilibrium, exact_equilibrium, EquilibriumInfo, ExactEquilibrium};
pub use invariant::{
    invariant, lyapunov_g, lyness_invariance_check, lyness_orbit, orbit_period, step_map,
};
pub use params::{alpha_of_u, ParamsAlphaA, ParamsPQ};
pub use surd::QuadraticSurd;
pub use symbolic::{delta2_denominator, eval_delta, DeltaPoint, SymbolicModel, Which};
