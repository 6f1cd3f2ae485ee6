//! Additive secret sharing over GF(q) and multi-party protocols for the
//! determinant of a shared polynomial matrix, run on a deterministic
//! simulator that meters rounds, bits, triples and field operations.

pub mod algebra;
pub mod cli;
pub mod cost_model;
pub mod determinant;
pub mod engine;
pub mod error;
pub mod protocols;
pub mod sharing;
pub mod triples;

pub use error::{Error, LeakSignal, Result};
