//! Exact algebra of binomial and toric ideals.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure
//! computation: monomial and binomial arithmetic, term orders, a Buchberger
//! engine specialised to pure-difference binomials, integer lattices and
//! their toric ideals, Graver bases through Lawrence liftings, exhaustive
//! enumeration of reduced Gröbner bases over a sign-cell arrangement, the
//! robustness checks built on top of those, and graded Betti numbers of
//! monomial ideals.
//!
//! File formats, JSON reports and the command line live in the companion
//! `robusta` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod betti;
pub mod binomial;
pub mod error;
pub mod fan;
pub mod feasibility;
pub mod graver;
pub mod groebner;
pub mod hnf;
pub mod ideal;
pub mod lattice;
pub mod linalg;
pub mod monomial;
pub mod order;
pub mod robustness;
pub mod text;

pub use betti::{BettiTable, MonomialIdeal};
pub use binomial::Binomial;
pub use error::{Error, Result};
pub use fan::{FanEnumeration, SignCell};
pub use graver::GraverBasis;
pub use groebner::{Budget, GroebnerBasis};
pub use ideal::BinomialIdeal;
pub use lattice::{Grading, IntegerMatrix, Lattice};
pub use monomial::{Monomial, VariableContext};
pub use order::TermOrder;
pub use robustness::RobustnessReport;
