//! Sequential Monte Carlo inference for hidden semi-Markov models.
//!
//! The library implements the full stack needed for exact (Monte Carlo error
//! only) Bayesian inference on regime-switching time series:
//!
//! - [`model`] — model families (HSMM with Negative Binomial or Poisson
//!   durations, HMM, AR(1)), priors, constrained/unconstrained parameter
//!   transforms and the generative simulator.
//! - [`oracle`] — exact likelihood and latent-posterior computation on small
//!   instances, used as ground truth by the test suite.
//! - [`filter`] — bootstrap particle filter and conditional particle filter
//!   with ancestor sampling, with ESS-adaptive systematic resampling, online
//!   extension and forecasting.
//! - [`mcmc`] — Metropolis-Hastings and Hamiltonian Monte Carlo kernels on
//!   unconstrained parameter space with a leapfrog integrator and
//!   dual-averaging step-size adaptation.
//! - [`pmcmc`] — Particle Metropolis-Hastings and Particle Gibbs with
//!   ancestor sampling, composing the filter and MCMC kernels into joint
//!   samplers for parameters and latent trajectories.
//! - [`smc2`] — the SMC² driver: a population of parameter particles, each
//!   owning a particle filter, data-tempered through the series with
//!   ESS-triggered PMCMC rejuvenation; produces posterior snapshots,
//!   predictive likelihoods, Bayes-factor curves and regime clusterings.
//! - [`diagnostics`] — summary tables (mean, MCSE, SD, split-Rhat, weighted
//!   quantiles) and PACF.

pub mod diagnostics;
pub mod dist;
pub mod filter;
pub mod math;
pub mod mcmc;
pub mod model;
pub mod oracle;
pub mod pmcmc;
pub mod rng;
pub mod smc2;

pub use model::{DurationParams, Latent, ModelFamily, ModelSpec, PriorSpec, Theta};
