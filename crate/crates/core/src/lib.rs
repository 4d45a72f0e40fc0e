//! Spectral toolkit for the (1+1)-dimensional Dirac equation with a
//! position-dependent mass in complexified Lorentz scalar interactions.
//!
//! The Dirac operator with composite mass `M(x) = m(x) + S(x)` squares into
//! two Schrödinger-like partner operators `-∂² + M² ∓ M'` (superpotential
//! `W = -M`). The crate evaluates three exactly solvable non-Hermitian models
//! ([`model`]), their closed-form spectra ([`analytic`]), and certifies those
//! spectra with a finite-difference discretization ([`discretize`]) and a
//! self-contained complex eigensolver ([`eigen`]). [`verify`] compares the two
//! and [`suite`] bundles the acceptance checks.

pub mod analytic;
pub mod discretize;
pub mod eigen;
mod error;
pub mod model;
pub mod oracle;
pub mod suite;
pub mod verify;

pub use analytic::{AnalyticLevel, CrossingBranch, CrossingPair, LevelIndex};
pub use discretize::{BlockDiracOperator, Grid, TridiagonalOperator};
pub use eigen::{BandMatrix, DenseMatrix, EigenConfig, LinearOperator, Spectrum};
pub use error::{Error, Result};
pub use model::{BranchLabel, ModelSpec, OscillatorParams, QuasiParity, ScarfParams};
pub use num_complex::Complex64;
pub use verify::{Comparison, MatchResult, ReportStatus, VerificationReport};

/// Engine version recorded in every emitted artifact.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
