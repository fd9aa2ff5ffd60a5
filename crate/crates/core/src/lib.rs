//! Exact Schur polynomials over fields of arbitrary characteristic.
//!
//! The crate builds `S_c = V_c / V_(0..n-1)` from generalized Vandermonde
//! determinants, checks the structural identities of these polynomials
//! (the `C_k` factor calculus, single-variable expansions, min/max parts),
//! and decides irreducibility over finite fields with an exhaustive divisor
//! search that is independent of any theory about the input.
//!
//! Modules:
//! - [`field`]: GF(p), GF(p^m) and the rationals behind one context type.
//! - [`mpoly`]: sparse multivariate polynomials with exact division.
//! - [`schur`]: exponent sequences, determinants, Schur polynomials, `C_k`.
//! - [`structure`]: verifiers for the expansion and min/max-part identities.
//! - [`irred`]: irreducibility oracle, hypothesis predicate, surveys.
//! - [`cli`]: the `schurforge` command-line front end.

pub mod cli;
pub mod error;
pub mod field;
pub mod irred;
pub mod mpoly;
pub mod schur;
pub mod structure;
mod upoly;

pub use error::{Error, Result};
pub use field::{FieldCtx, FieldElement, FieldKind};
pub use mpoly::{Exponents, MPoly, MonomialAssociate};
pub use schur::{ExponentSequence, Partition};

/// Library version embedded in every report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
