//! Boosting algorithms for linear regression, viewed and verified as
//! subgradient descent.
//!
//! The crate has three layers:
//!
//! * **Engines** ([`boosters`], [`subgrad`]): five deterministic boosting
//!   iteration engines over standardized design matrices, plus a generic
//!   subgradient-descent engine over achievable residuals that reproduces
//!   each of them step for step under matching step sizes.
//! * **Oracles** ([`oracles`], [`spectral`]): exact least squares via the
//!   spectral pseudoinverse, an independent l1-constrained solver with a
//!   duality-gap certificate, and the spectral constants every guarantee is
//!   built from.
//! * **Guarantees** ([`guarantees`], [`check`]): closed-form per-iteration
//!   convergence and shrinkage bounds, and checkers that confront every
//!   bound with observed traces.
//!
//! Data handling (standardization, the equicorrelated Gaussian generator,
//! CSV I/O) lives in [`model`] and [`io`].

// Parameter validation uses `!(x > 0.0)` deliberately: the negation also
// rejects NaN, which `x <= 0.0` would silently accept.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod boosters;
pub mod check;
pub mod error;
pub mod guarantees;
pub mod io;
mod linalg;
pub mod model;
pub mod oracles;
mod rng;
pub mod spectral;
pub mod subgrad;

pub use boosters::{AlgorithmConfig, BoostTrace, TraceMode, Variant};
pub use error::{Error, Result};
pub use model::{standardize, RawDataset, StandardizedProblem, SyntheticSpec};
pub use oracles::{DualCertificate, LassoSolution, LeastSquaresSolution};
pub use spectral::SpectralSummary;

#[doc(hidden)]
pub use rng::GaussianSource;
