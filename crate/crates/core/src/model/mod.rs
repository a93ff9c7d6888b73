//! Model families, parameters, priors, transforms and the generative
//! simulator for regime-switching time series.

mod dynamics;
mod prior;
mod spec;
mod theta;
mod transform;

pub use dynamics::{
    initial_latent, log_duration_pmf, log_obs_density, obs_mean, sample_duration, sample_obs,
    sample_transition, simulate, step_latent, trans_prob, SimOutput,
};
pub use prior::{log_prior, sample_prior, PriorSpec, ScalarPrior};
pub use spec::{ModelError, ModelFamily, ModelSpec};
pub use theta::{DurationParams, Latent, Theta};
pub use transform::{ParamLayout, UnconstrainedTheta};
