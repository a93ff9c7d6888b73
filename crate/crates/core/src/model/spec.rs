use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("invalid model spec: {0}")]
    InvalidSpec(String),
    #[error("invalid parameter value: {0}")]
    InvalidTheta(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("state index {state} out of range for {k} states")]
    InvalidState { state: usize, k: usize },
}

/// Model family of the observation/latent pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelFamily {
    /// Hidden semi-Markov model, Negative Binomial durations.
    HsmmNegBin,
    /// Hidden semi-Markov model, Poisson durations.
    HsmmPoisson,
    /// Hidden Markov model (implicit geometric durations).
    Hmm,
    /// Plain AR(1) observation model, no latent state.
    Ar1,
}

/// Declarative description of a model: family, state count, whether the
/// per-state observation mean carries an AR(1) term.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelSpec {
    pub family: ModelFamily,
    /// Number of latent states (1 for `Ar1`).
    pub k: usize,
    /// AR(1) term in the observation mean.
    pub obs_ar: bool,
    /// Duration truncation for the exact oracles; never used by the
    /// production filters.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_max: Option<u32>,
}

impl ModelSpec {
    pub fn new(family: ModelFamily, k: usize, obs_ar: bool) -> Self {
        Self {
            family,
            k,
            obs_ar,
            d_max: None,
        }
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        match self.family {
            ModelFamily::Ar1 => {
                if self.k != 1 {
                    return Err(ModelError::InvalidSpec(format!(
                        "AR(1) model requires k = 1, got {}",
                        self.k
                    )));
                }
            }
            _ => {
                if self.k < 2 {
                    return Err(ModelError::InvalidSpec(format!(
                        "{:?} requires k >= 2, got {}",
                        self.family, self.k
                    )));
                }
            }
        }
        Ok(())
    }

    /// Explicit duration variable present (HSMM families).
    pub fn has_duration(&self) -> bool {
        matches!(self.family, ModelFamily::HsmmNegBin | ModelFamily::HsmmPoisson)
    }

    /// Any latent state at all.
    pub fn has_latent(&self) -> bool {
        !matches!(self.family, ModelFamily::Ar1)
    }

    /// Length of one transition row: the K−1 other states for HSMMs
    /// (self-persistence is owned by the duration law), the full K-simplex
    /// for the HMM, nothing for AR(1).
    pub fn trans_row_len(&self) -> usize {
        match self.family {
            ModelFamily::HsmmNegBin | ModelFamily::HsmmPoisson => self.k - 1,
            ModelFamily::Hmm => self.k,
            ModelFamily::Ar1 => 0,
        }
    }

    /// Destination state for `row_idx`-th entry of `from`'s transition row.
    pub fn trans_dest(&self, from: usize, row_idx: usize) -> usize {
        match self.family {
            ModelFamily::Hmm => row_idx,
            _ => {
                if row_idx < from {
                    row_idx
                } else {
                    row_idx + 1
                }
            }
        }
    }
}
