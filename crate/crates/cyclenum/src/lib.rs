//! Exact enumeration of monic polynomials over finite fields, weighted by
//! the multiplicities of their irreducible factors.
//!
//! The engine has three independent routes to every count and insists they
//! agree:
//!
//! - closed-form polynomials in `q` for the structured weight families,
//! - a truncated power-series evaluation of the weighted product formula,
//! - a brute-force oracle that enumerates and factors every tuple.
//!
//! See the `examples/` directory for runnable tours of each capability, and
//! [`verify`] for the machine-checkable agreement suites.

pub mod counting;
pub mod error;
pub mod exact;
pub mod ffpoly;
pub mod numtheory;
pub mod series;
pub mod stats;
pub mod table;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
