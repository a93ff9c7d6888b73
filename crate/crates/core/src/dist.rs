//! Log-densities, samplers and score functions for the distribution families
//! used by the model catalog: truncated normal, Beta, Dirichlet, Negative
//! Binomial and Poisson.
//!
//! Duration distributions follow the convention that a drawn value `d` counts
//! *additional* steps beyond the first, so `d = 0` means the state lasts
//! exactly one observation.

use crate::math::{inv_normal_cdf, ln_normal_cdf_diff, normal_cdf, LN_2PI};
use rand::Rng;
use rand_distr::{Distribution, Gamma, Poisson};
use statrs::function::gamma::{digamma, ln_gamma};

/// Normal log-density.
#[inline]
pub fn ln_normal_pdf(x: f64, mean: f64, sd: f64) -> f64 {
    let z = (x - mean) / sd;
    -0.5 * z * z - sd.ln() - 0.5 * LN_2PI
}

/// Truncated normal on (lo, hi); density renormalized over the interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncNormal {
    pub lo: f64,
    pub hi: f64,
    pub mean: f64,
    pub sd: f64,
}

impl TruncNormal {
    pub fn new(lo: f64, hi: f64, mean: f64, sd: f64) -> Self {
        assert!(lo < hi, "truncation requires lo < hi");
        assert!(sd > 0.0);
        Self { lo, hi, mean, sd }
    }

    fn ln_mass(&self) -> f64 {
        let a = (self.lo - self.mean) / self.sd;
        let b = (self.hi - self.mean) / self.sd;
        if self.lo == f64::NEG_INFINITY && self.hi == f64::INFINITY {
            0.0
        } else if self.lo == f64::NEG_INFINITY {
            crate::math::ln_normal_cdf(b)
        } else if self.hi == f64::INFINITY {
            crate::math::ln_normal_cdf(-a)
        } else {
            ln_normal_cdf_diff(a, b)
        }
    }

    pub fn ln_pdf(&self, x: f64) -> f64 {
        if x <= self.lo || x >= self.hi {
            return f64::NEG_INFINITY;
        }
        ln_normal_pdf(x, self.mean, self.sd) - self.ln_mass()
    }

    /// d/dx of the log density (the truncation constant drops out).
    pub fn score(&self, x: f64) -> f64 {
        -(x - self.mean) / (self.sd * self.sd)
    }

    /// Inverse-CDF sampler. The CDF interval is evaluated in whichever tail
    /// keeps the difference well conditioned.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let a = ((self.lo - self.mean) / self.sd).max(-1e10);
        let b = ((self.hi - self.mean) / self.sd).min(1e10);
        let u: f64 = rng.gen_range(f64::EPSILON..1.0 - f64::EPSILON);
        let z = if b <= 0.0 {
            // both bounds in the lower tail: work with Φ(−·) for precision
            let fa = normal_cdf(-a);
            let fb = normal_cdf(-b);
            -inv_normal_cdf((fb + (1.0 - u) * (fa - fb)).clamp(f64::MIN_POSITIVE, 1.0 - 1e-16))
        } else if a >= 0.0 {
            let fa = normal_cdf(a);
            let fb = normal_cdf(b);
            inv_normal_cdf((fa + u * (fb - fa)).clamp(f64::MIN_POSITIVE, 1.0 - 1e-16))
        } else {
            let fa = normal_cdf(a);
            let fb = normal_cdf(b);
            inv_normal_cdf((fa + u * (fb - fa)).clamp(f64::MIN_POSITIVE, 1.0 - 1e-16))
        };
        (self.mean + self.sd * z).clamp(
            if self.lo.is_finite() { self.lo + f64::MIN_POSITIVE } else { self.lo },
            if self.hi.is_finite() { self.hi - f64::MIN_POSITIVE } else { self.hi },
        )
    }
}

/// Beta log-density on (0, 1).
pub fn ln_beta_pdf(x: f64, alpha: f64, beta: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return f64::NEG_INFINITY;
    }
    (alpha - 1.0) * x.ln() + (beta - 1.0) * (1.0 - x).ln() + ln_gamma(alpha + beta)
        - ln_gamma(alpha)
        - ln_gamma(beta)
}

/// d/dx log Beta(x; α, β).
pub fn beta_score(x: f64, alpha: f64, beta: f64) -> f64 {
    (alpha - 1.0) / x - (beta - 1.0) / (1.0 - x)
}

pub fn sample_beta<R: Rng + ?Sized>(rng: &mut R, alpha: f64, beta: f64) -> f64 {
    let d = rand_distr::Beta::new(alpha, beta).expect("valid beta parameters");
    d.sample(rng).clamp(1e-12, 1.0 - 1e-12)
}

/// Dirichlet log-density over a simplex of matching length.
pub fn ln_dirichlet_pdf(x: &[f64], alpha: &[f64]) -> f64 {
    debug_assert_eq!(x.len(), alpha.len());
    let mut lp = ln_gamma(alpha.iter().sum());
    for (&xi, &ai) in x.iter().zip(alpha) {
        if xi <= 0.0 || xi >= 1.0 {
            return f64::NEG_INFINITY;
        }
        lp += (ai - 1.0) * xi.ln() - ln_gamma(ai);
    }
    lp
}

pub fn sample_dirichlet<R: Rng + ?Sized>(rng: &mut R, alpha: &[f64]) -> Vec<f64> {
    let mut draws: Vec<f64> = alpha
        .iter()
        .map(|&a| Gamma::new(a, 1.0).expect("valid gamma shape").sample(rng).max(1e-300))
        .collect();
    let total: f64 = draws.iter().sum();
    for d in draws.iter_mut() {
        *d = (*d / total).clamp(1e-12, 1.0 - 1e-12);
    }
    // re-normalize after clamping
    let total: f64 = draws.iter().sum();
    for d in draws.iter_mut() {
        *d /= total;
    }
    draws
}

/// Negative Binomial pmf over d = 0, 1, 2, …:
/// pmf(d) = Γ(d+r)/(Γ(r)·d!) · p^r · (1−p)^d, mean r(1−p)/p, real r > 0.
pub fn ln_neg_bin_pmf(d: u32, r: f64, p: f64) -> f64 {
    if r <= 0.0 || p <= 0.0 || p >= 1.0 {
        return f64::NEG_INFINITY;
    }
    let df = d as f64;
    ln_gamma(df + r) - ln_gamma(r) - ln_gamma(df + 1.0) + r * p.ln() + df * (1.0 - p).ln()
}

/// (∂/∂r, ∂/∂p) of the Negative Binomial log-pmf.
pub fn neg_bin_score(d: u32, r: f64, p: f64) -> (f64, f64) {
    let df = d as f64;
    let dr = digamma(df + r) - digamma(r) + p.ln();
    let dp = r / p - df / (1.0 - p);
    (dr, dp)
}

/// Gamma–Poisson mixture draw from the Negative Binomial above.
pub fn sample_neg_bin<R: Rng + ?Sized>(rng: &mut R, r: f64, p: f64) -> u32 {
    let scale = (1.0 - p) / p;
    let lambda = Gamma::new(r, scale).expect("valid gamma").sample(rng);
    sample_poisson_u32(rng, lambda)
}

/// Poisson pmf over d = 0, 1, 2, …
pub fn ln_poisson_pmf(d: u32, lambda: f64) -> f64 {
    if lambda <= 0.0 {
        return f64::NEG_INFINITY;
    }
    let df = d as f64;
    -lambda + df * lambda.ln() - ln_gamma(df + 1.0)
}

/// ∂/∂λ of the Poisson log-pmf.
pub fn poisson_score(d: u32, lambda: f64) -> f64 {
    d as f64 / lambda - 1.0
}

pub fn sample_poisson_u32<R: Rng + ?Sized>(rng: &mut R, lambda: f64) -> u32 {
    if lambda <= 1e-12 {
        return 0;
    }
    let draw = Poisson::new(lambda).expect("valid poisson rate").sample(rng);
    if draw >= u32::MAX as f64 {
        u32::MAX
    } else {
        draw as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::StreamRng;

    #[test]
    fn neg_bin_pmf_geometric_special_case() {
        // NegBin(r=1, p=0.5) at d=0 is log(0.5)
        assert!((ln_neg_bin_pmf(0, 1.0, 0.5) - 0.5f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn poisson_pmf_at_zero() {
        assert!((ln_poisson_pmf(0, 1.0) + 1.0).abs() < 1e-14);
    }

    #[test]
    fn neg_bin_pmf_matches_log_gamma_series() {
        // independently coded evaluation via the binomial-series recursion
        let (r, p) = (10.0, 0.3);
        let mut pmf = p.powf(r); // d = 0 term
        for d in 1..=5u32 {
            pmf *= (d as f64 - 1.0 + r) / d as f64 * (1.0 - p);
        }
        assert!((ln_neg_bin_pmf(5, r, p) - pmf.ln()).abs() < 1e-12);
    }

    #[test]
    fn duration_pmfs_sum_to_one() {
        for (r, p) in [(1.0, 0.5), (10.0, 0.3), (0.7, 0.8)] {
            let mean = r * (1.0 - p) / p;
            let horizon = (10.0 * mean).ceil().max(20.0) as u32;
            let total: f64 = (0..=horizon).map(|d| ln_neg_bin_pmf(d, r, p).exp()).sum();
            assert!(total >= 0.999, "NegBin({r},{p}) partial sum {total}");
        }
        for lambda in [0.5, 1.0, 23.0] {
            let horizon = (10.0 * lambda).ceil().max(20.0) as u32;
            let total: f64 = (0..=horizon).map(|d| ln_poisson_pmf(d, lambda).exp()).sum();
            assert!(total >= 0.999, "Poisson({lambda}) partial sum {total}");
        }
    }

    #[test]
    fn neg_bin_sample_mean_matches_formula() {
        let mut rng = StreamRng::new(7).rng();
        let (r, p) = (10.0, 0.3);
        let n = 40_000;
        let mean: f64 = (0..n).map(|_| sample_neg_bin(&mut rng, r, p) as f64).sum::<f64>() / n as f64;
        let expect = r * (1.0 - p) / p;
        let sd = (r * (1.0 - p) / (p * p)).sqrt();
        assert!((mean - expect).abs() < 4.0 * sd / (n as f64).sqrt(), "{mean} vs {expect}");
    }

    #[test]
    fn trunc_normal_density_normalizes() {
        // numeric quadrature over the support
        let d = TruncNormal::new(0.0, 10.0, 2.0, 1e5);
        let n = 20_000;
        let h = 10.0 / n as f64;
        let total: f64 = (0..n).map(|i| d.ln_pdf((i as f64 + 0.5) * h).exp() * h).sum();
        assert!((total - 1.0).abs() < 1e-6, "mass {total}");
    }

    #[test]
    fn trunc_normal_support_and_sampling() {
        let d = TruncNormal::new(0.0, 100.0, 2.0, 1e5);
        assert_eq!(d.ln_pdf(-1.0), f64::NEG_INFINITY);
        let mut rng = StreamRng::new(3).rng();
        for _ in 0..10_000 {
            let x = d.sample(&mut rng);
            assert!(x > 0.0 && x < 100.0);
        }
        // near-flat conditional: sample mean ≈ interval midpoint
        let flat = TruncNormal::new(0.0, 1.0, 0.5, 1e5);
        let m: f64 = (0..20_000).map(|_| flat.sample(&mut rng)).sum::<f64>() / 20_000.0;
        assert!((m - 0.5).abs() < 0.01, "{m}");
    }

    #[test]
    fn trunc_normal_deep_tail_sampling_stays_in_bounds() {
        let d = TruncNormal::new(-100.0, 0.0, 50.0, 4.0);
        let mut rng = StreamRng::new(9).rng();
        for _ in 0..2_000 {
            let x = d.sample(&mut rng);
            assert!((-100.0..=0.0).contains(&x), "{x}");
        }
    }

    #[test]
    fn beta_uniform_case() {
        assert!(ln_beta_pdf(0.3, 1.0, 1.0).abs() < 1e-14);
        let mut rng = StreamRng::new(5).rng();
        let n = 10_000;
        let mean: f64 = (0..n).map(|_| sample_beta(&mut rng, 1.0, 1.0)).sum::<f64>() / n as f64;
        assert!((mean - 0.5).abs() < 0.02);
    }

    #[test]
    fn dirichlet_density_and_sampling() {
        let alpha = [2.0, 2.0];
        // Dirichlet(2,2) on (x, 1−x) is Beta(2,2) in x
        let x = [0.3, 0.7];
        assert!((ln_dirichlet_pdf(&x, &alpha) - ln_beta_pdf(0.3, 2.0, 2.0)).abs() < 1e-12);
        let mut rng = StreamRng::new(11).rng();
        let draw = sample_dirichlet(&mut rng, &[3.0, 3.0, 3.0]);
        assert!((draw.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn scores_match_finite_differences() {
        let h = 1e-6;
        let tn = TruncNormal::new(0.0, 10.0, 2.0, 3.0);
        let fd = (tn.ln_pdf(1.5 + h) - tn.ln_pdf(1.5 - h)) / (2.0 * h);
        assert!((tn.score(1.5) - fd).abs() < 1e-6);

        let fd = (ln_beta_pdf(0.4 + h, 2.0, 5.0) - ln_beta_pdf(0.4 - h, 2.0, 5.0)) / (2.0 * h);
        assert!((beta_score(0.4, 2.0, 5.0) - fd).abs() < 1e-5);

        let (r, p) = (4.0, 0.35);
        let (dr, dp) = neg_bin_score(6, r, p);
        let fd_r = (ln_neg_bin_pmf(6, r + h, p) - ln_neg_bin_pmf(6, r - h, p)) / (2.0 * h);
        let fd_p = (ln_neg_bin_pmf(6, r, p + h) - ln_neg_bin_pmf(6, r, p - h)) / (2.0 * h);
        assert!((dr - fd_r).abs() < 1e-5);
        assert!((dp - fd_p).abs() < 1e-5);

        let fd = (ln_poisson_pmf(3, 2.0 + h) - ln_poisson_pmf(3, 2.0 - h)) / (2.0 * h);
        assert!((poisson_score(3, 2.0) - fd).abs() < 1e-5);
    }
}
