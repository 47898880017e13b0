//! Conway and Alexander polynomials of two-bridge knots and links.
//!
//! Two-bridge links are parametrized by continued-fraction forms; their
//! Conway polynomials satisfy a three-term recursion and expand
//! nonnegatively in a basis of Fibonacci polynomials. The crate computes
//! both polynomial families exactly, runs a sieve of necessary conditions
//! that can rule a polynomial out, and enumerates small forms to check the
//! conditions exhaustively.

pub mod alexander;
pub mod binomial;
pub mod cli;
pub mod conway;
pub mod enumerate;
pub mod error;
pub mod fibonacci;
pub mod obstructions;
pub mod poly;
pub mod verdict;

pub use alexander::{
    alexander_sieve, alexander_to_conway, conway_to_alexander, fukuhara_inverse,
    link_conway_to_hosokawa, AlexPoly,
};
pub use conway::{monomial_set, TwoBridgeForm};
pub use enumerate::{
    canonical_key, census, forms_up_to, fraction_of, CensusConfig, CensusReport, Fraction,
};
pub use error::{Error, ParseError, Result};
pub use fibonacci::{fib, from_fib_basis, to_fib_basis, FibBasisRep};
pub use obstructions::{mod2_index, sieve};
pub use poly::{determinant, Parity, ZPoly};
pub use verdict::{Outcome, SieveReport, TestKind, TestName, Verdict, Witness};
