//! Sparse multivariate polynomials over exact rationals.
//!
//! Variables are named. Every [`Poly`] carries a [`VarTable`] whose first ten
//! slots are the fixed names `x, y, u, A, t, k, x0, y0, w, v`; any other name
//! is appended in alphabetical order. Operands with different tables are
//! merged by name.
//!
//! Terms are kept in graded lexicographic order: total degree first, then the
//! dense exponent vector compared slot by slot. All textual output follows that
//! order, so serialisation is deterministic.

mod monomial;
mod parse;
mod polynomial;
mod ratfn;
mod vars;

pub use monomial::Monomial;
pub use polynomial::Poly;
pub use ratfn::{Bindings, RationalFn};
pub use vars::{VarTable, CANONICAL_VARS};
