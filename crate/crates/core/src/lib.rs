//! Exact verification of telescoping harmonic-number identities.
//!
//! The seed sum `sum C(x+k,k)/C(y+k,k)` telescopes; differentiating it in
//! `x` and `y` yields sums weighted by harmonic numbers. This crate
//! evaluates every catalogued identity in exact rational arithmetic, sweeps
//! parameter grids comparing both sides, and replays the differentiation
//! with hyper-dual numbers to rebuild each theorem from the seed.

pub mod catalogue;
pub mod cli;
pub mod engine;
pub mod error;
pub mod exact;
pub mod special;
pub mod telescope;

pub use catalogue::{catalogue, IdentityRecord, ParamAssignment};
pub use engine::{verify, verify_all, DerivationReport, Execution, ParamGrid, VerificationReport};
pub use error::{Error, Result};
pub use exact::{HyperDual, Rational};
