//! Orbits of `x[n+1] = (p + q x[n]) / (1 + x[n-1])`, descent of the Lyapunov
//! candidate along them, linear stability and the classical parameter
//! regions.

mod descent;
mod grid;
mod orbit;
mod regions;
mod stability;

pub use descent::{
    descent_along, descent_deltas, lyapunov_descent_check, DescentOutcome, DescentViolation,
    DESCENT_SLACK,
};
pub use grid::{g_grid, GGrid, GridPoint, Window};
pub use orbit::{simulate, Mode, OrbitState, OrbitTrace, SimOptions, Verdict};
pub use regions::{classify_regions, Region, RegionCoverage, RegionTest};
pub use stability::{local_stability, local_stability_ua, Stability};
