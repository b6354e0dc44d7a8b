//! Special symplectic representations: the data, their covariants and checks.

pub mod data;
pub mod geometry;
pub mod identities;
pub mod verify;

pub use data::{ConstructionTag, SsrData, SCHEMA_VERSION};
pub use geometry::{
    check_polarizations, coisotropy_check, covariant_report, moment_tilde, orbit_geometry,
    q_vanishing_test, CoisotropyResult, CovariantReport, OrbitGeometry,
};
pub use identities::{
    classical_eisenstein, covariant_identities, eisenstein_syzygy, minimal_polynomial_mu,
    ClassicalSyzygy, IdentityReport, MinPolyResult, SyzygyResult,
};
pub use verify::{m_structure_constants, verify_ssr, VerificationReport};
