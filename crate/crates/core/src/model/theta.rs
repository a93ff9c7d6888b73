use super::spec::{ModelError, ModelFamily, ModelSpec};
use serde::{Deserialize, Serialize};

const SIMPLEX_TOL: f64 = 1e-12;

/// Per-state duration parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DurationParams {
    NegBin { r: Vec<f64>, p: Vec<f64> },
    Poisson { lambda: Vec<f64> },
    /// HMM / AR(1): no explicit duration law.
    None,
}

/// Continuous model parameters in natural (constrained) coordinates.
///
/// `trans` holds one probability simplex per state: over the K−1 *other*
/// states for the HSMM families (self-transitions carry probability zero by
/// construction), over all K states for the HMM, and is empty for AR(1).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Theta {
    pub mu: Vec<f64>,
    pub sigma: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<Vec<f64>>,
    pub dur: DurationParams,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub trans: Vec<Vec<f64>>,
}

impl Theta {
    pub fn validate(&self, spec: &ModelSpec) -> Result<(), ModelError> {
        let k = spec.k;
        if self.mu.len() != k || self.sigma.len() != k {
            return Err(ModelError::DimensionMismatch(format!(
                "mu/sigma must have {k} entries, got {}/{}",
                self.mu.len(),
                self.sigma.len()
            )));
        }
        if self.sigma.iter().any(|&s| !(s > 0.0)) {
            return Err(ModelError::InvalidTheta("sigma must be strictly positive".into()));
        }
        match (&self.w, spec.obs_ar) {
            (Some(w), true) => {
                if w.len() != k {
                    return Err(ModelError::DimensionMismatch(format!(
                        "w must have {k} entries, got {}",
                        w.len()
                    )));
                }
                if w.iter().any(|&x| x <= -1.0 || x >= 1.0) {
                    return Err(ModelError::InvalidTheta("w must lie in (-1, 1)".into()));
                }
            }
            (None, false) => {}
            (Some(_), false) => {
                return Err(ModelError::DimensionMismatch("w present but obs_ar = false".into()))
            }
            (None, true) => {
                return Err(ModelError::DimensionMismatch("obs_ar = true but w missing".into()))
            }
        }
        match (&self.dur, spec.family) {
            (DurationParams::NegBin { r, p }, ModelFamily::HsmmNegBin) => {
                if r.len() != k || p.len() != k {
                    return Err(ModelError::DimensionMismatch("duration parameter length".into()));
                }
                if r.iter().any(|&x| !(x > 0.0)) {
                    return Err(ModelError::InvalidTheta("r must be > 0".into()));
                }
                if p.iter().any(|&x| x <= 0.0 || x >= 1.0) {
                    return Err(ModelError::InvalidTheta("p must lie in (0, 1)".into()));
                }
            }
            (DurationParams::Poisson { lambda }, ModelFamily::HsmmPoisson) => {
                if lambda.len() != k {
                    return Err(ModelError::DimensionMismatch("duration parameter length".into()));
                }
                if lambda.iter().any(|&x| !(x > 0.0)) {
                    return Err(ModelError::InvalidTheta("lambda must be > 0".into()));
                }
            }
            (DurationParams::None, ModelFamily::Hmm | ModelFamily::Ar1) => {}
            _ => {
                return Err(ModelError::DimensionMismatch(
                    "duration family does not match model family".into(),
                ))
            }
        }
        let row_len = spec.trans_row_len();
        if row_len == 0 {
            if !self.trans.is_empty() {
                return Err(ModelError::DimensionMismatch("AR(1) has no transition rows".into()));
            }
        } else {
            if self.trans.len() != k {
                return Err(ModelError::DimensionMismatch(format!(
                    "expected {k} transition rows, got {}",
                    self.trans.len()
                )));
            }
            for (i, row) in self.trans.iter().enumerate() {
                if row.len() != row_len {
                    return Err(ModelError::DimensionMismatch(format!(
                        "transition row {i} must have {row_len} entries, got {}",
                        row.len()
                    )));
                }
                if row.iter().any(|&x| x < 0.0) {
                    return Err(ModelError::InvalidTheta(format!(
                        "transition row {i} has a negative entry"
                    )));
                }
                let total: f64 = row.iter().sum();
                if (total - 1.0).abs() > SIMPLEX_TOL {
                    return Err(ModelError::InvalidTheta(format!(
                        "transition row {i} sums to {total}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// One latent point: state index and remaining duration.
///
/// `dur = 0` means the chain switches state at the next step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Latent {
    pub state: usize,
    pub dur: u32,
}

impl Latent {
    pub fn new(state: usize, dur: u32) -> Self {
        Self { state, dur }
    }
}
