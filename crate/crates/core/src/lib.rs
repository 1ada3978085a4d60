//! Exact slope computations for trigonal and fourgonal fibrations.

pub mod bounds;
pub mod chern;
pub mod chow;
pub mod error;
pub mod grr;
pub mod ratcalc;
pub mod slope;
pub mod verify;

pub use error::{Error, Result};
