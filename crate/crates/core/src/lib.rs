//! Exact algebra and orbit machinery for the second-order rational recurrence
//!
//! ```text
//! x[n+1] = (p + q x[n]) / (1 + x[n-1]),   p, q > 0
//! ```
//!
//! The crate is `no_std` (it needs `alloc`). It is organised bottom-up:
//!
//! * [`poly`]: sparse multivariate polynomials and rational functions over
//!   arbitrary-precision rationals, with simultaneous substitution.
//! * [`model`]: parameter transforms, equilibria, the Lyness invariant `g`,
//!   the map `T` and the descent expressions `g - g∘T`, `g - g∘T∘T`.
//! * [`certify`]: the coefficient-sign certificates showing that `g` decreases
//!   within one or two steps of `T` everywhere off the equilibrium when `u > 1`.
//! * [`dynamics`]: floating and exact orbit simulation, descent monitoring,
//!   local stability, parameter-region labels and invariant grids.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod certify;
pub mod dynamics;
mod error;
pub mod model;
pub mod poly;
pub mod rational;

pub use error::{Error, Result};
pub use num_rational::BigRational;
pub use poly::{Bindings, Monomial, Poly, RationalFn};
