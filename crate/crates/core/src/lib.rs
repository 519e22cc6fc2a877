//! Exact ideal theory for semigroup rings `A[Γ]`.

pub mod coeff;
pub mod demos;
pub mod error;
pub mod graded;
pub mod ideals;
pub mod lab;
pub mod oracle;
pub mod report;
pub mod sampling;
pub mod semigroup;
pub mod suites;

pub use error::{Error, Result};
