//! Exact arithmetic for special symplectic representations: their covariants,
//! Lagrangian decompositions, the associated graded Lie algebras and the
//! charts of the decomposition geometry.

pub mod error;
pub mod field;
pub mod api;
pub mod charts;
pub mod constructions;
pub mod decomposition;
pub mod faulkner;
pub mod linalg;
pub mod selftest;

pub use error::{Error, Result};
pub mod ssr;
