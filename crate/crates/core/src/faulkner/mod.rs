//! Faulkner ternary products and the graded Lie algebras built from them.

pub mod lie;
pub mod ternary;

pub use lie::{
    build_lie_algebra, graded_piece, recover_ssr, round_trip, simplicity_check, GradedLieAlgebra,
    JacobiReport, RoundTrip, SimplicityReport,
};
pub use ternary::{ternary_from_ssr, verify_ternary_axioms, TernaryProduct, TernaryReport};
