//! Consistent Bayesian inference from multiple synthetic data sets.
//!
//! A data provider releases `m` synthetic data sets drawn from a posterior
//! predictive (optionally conditioned on a differentially private summary).
//! An analyst fits their downstream posterior to each data set separately and
//! mixes the results. This crate implements the full pipeline:
//!
//! * [`dist`] / [`grid`] — parametric distributions, grid densities and the
//!   total-variation / KL machinery used to compare posteriors;
//! * [`conjugate`] — exact conjugate updates for the three univariate
//!   Gaussian model variants (known variance, unknown mean and variance,
//!   known mean) and their posterior-predictive samplers;
//! * [`mixing`] — synthetic-collection generation, posterior mixing, and the
//!   variance / mean correction rules for `n* ≈ n` and uncongenial known
//!   means;
//! * [`dp`] — the Gaussian mechanism and analytic `(ε, δ) → σ` calibration;
//! * [`maxent`] — a noise-aware maximum-entropy generator over a fully
//!   enumerable discrete domain with marginal queries;
//! * [`exact`] — the Metropolis-within-Gibbs baseline that samples
//!   `p(s, θ | s̃)` and reconstructs data sets from counts;
//! * [`logreg`] — Bayesian logistic regression fitted per data set via a
//!   Newton/Laplace approximation.
//!
//! All numeric code is generic over the scalar type through [`Scalar`]
//! (implemented for `f32` and `f64`); the aliases at the crate root pin the
//! default `f64` precision used by the experiment harness.

pub mod conjugate;
pub mod dist;
pub mod dp;
mod error;
pub mod exact;
pub mod grid;
pub mod hmc;
pub mod linalg;
pub mod logreg;
pub mod maxent;
pub mod mixing;
pub mod rng;
mod scalar;
pub mod special;

pub use error::{Error, Result};
pub use rng::RngStream;
pub use scalar::Scalar;

/// Default scalar precision for the experiment harness.
pub type Real = f64;

/// `f64` aliases of the generic core types.
pub type GaussianDist = dist::Gaussian<Real>;
pub type ScaledInvChiSqDist = dist::ScaledInvChiSq<Real>;
pub type StudentTDist = dist::StudentT<Real>;
pub type GridDensity64 = grid::GridDensity<Real>;
pub type Marginal64 = dist::Marginal<Real>;
pub type DataSummary64 = conjugate::DataSummary<Real>;
pub type MixturePosterior64 = mixing::MixturePosterior<Real>;
pub type PrivacyParams64 = dp::PrivacyParams<Real>;
pub type PrivateSummary64 = dp::PrivateSummary<Real>;
