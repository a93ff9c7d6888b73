//! Numerical helpers shared across the crate: log-space accumulation,
//! standard-normal CDF machinery and a small Cholesky factorization.

use statrs::function::erf;

pub const LN_2PI: f64 = 1.8378770664093453;

/// log(Σ exp(x_i)) with the usual max shift; −∞ for an empty or all-(−∞) input.
pub fn logsumexp(xs: &[f64]) -> f64 {
    let m = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if !m.is_finite() {
        return m;
    }
    let s: f64 = xs.iter().map(|&x| (x - m).exp()).sum();
    m + s.ln()
}

/// log(1 − exp(x)) for x < 0, stable near both ends.
pub fn log1mexp(x: f64) -> f64 {
    debug_assert!(x <= 0.0);
    if x > -std::f64::consts::LN_2 {
        (-x.exp_m1()).ln()
    } else {
        (-x.exp()).ln_1p()
    }
}

/// Normalize log-weights in place to linear weights summing to one.
/// Returns the logsumexp of the input.
pub fn normalize_log_weights(logw: &[f64], out: &mut [f64]) -> f64 {
    let lse = logsumexp(logw);
    if !lse.is_finite() {
        for o in out.iter_mut() {
            *o = 0.0;
        }
        return lse;
    }
    for (o, &lw) in out.iter_mut().zip(logw) {
        *o = (lw - lse).exp();
    }
    lse
}

/// Standard normal CDF.
pub fn normal_cdf(z: f64) -> f64 {
    0.5 * erf::erfc(-z / std::f64::consts::SQRT_2)
}

/// log Φ(z), using an asymptotic Mills-ratio expansion deep in the lower tail
/// where erfc underflows.
pub fn ln_normal_cdf(z: f64) -> f64 {
    if z > -10.0 {
        normal_cdf(z).ln()
    } else {
        // ln φ(z) − ln(−z) + ln(1 − 1/z² + 3/z⁴ − 15/z⁶ + 105/z⁸)
        let zi = 1.0 / (z * z);
        let series = 1.0 - zi * (1.0 - zi * (3.0 - zi * (15.0 - 105.0 * zi)));
        -0.5 * z * z - 0.5 * LN_2PI - (-z).ln() + series.ln()
    }
}

/// log(Φ(b) − Φ(a)) for a < b, computed without catastrophic cancellation.
///
/// Both bounds in one tail are handled via log-CDF differences; bounds
/// straddling zero use erf directly (no cancellation there since the two
/// halves add).
pub fn ln_normal_cdf_diff(a: f64, b: f64) -> f64 {
    debug_assert!(a < b);
    if b <= 0.0 {
        let lb = ln_normal_cdf(b);
        let la = ln_normal_cdf(a);
        lb + log1mexp(la - lb)
    } else if a >= 0.0 {
        ln_normal_cdf_diff(-b, -a)
    } else {
        let s = std::f64::consts::SQRT_2;
        (0.5 * (erf::erf(b / s) - erf::erf(a / s))).ln()
    }
}

/// Standard normal quantile function (inverse CDF).
///
/// Acklam's rational approximation refined with one Halley step; relative
/// error below 1e-14 over (0, 1).
pub fn inv_normal_cdf(p: f64) -> f64 {
    assert!(p > 0.0 && p < 1.0, "quantile argument must be in (0,1)");
    const A: [f64; 6] = [
        -3.969683028665376e+01,
        2.209460984245205e+02,
        -2.759285104469687e+02,
        1.383577518672690e+02,
        -3.066479806614716e+01,
        2.506628277459239e+00,
    ];
    const B: [f64; 5] = [
        -5.447609879822406e+01,
        1.615858368580409e+02,
        -1.556989798598866e+02,
        6.680131188771972e+01,
        -1.328068155288572e+01,
    ];
    const C: [f64; 6] = [
        -7.784894002430293e-03,
        -3.223964580411365e-01,
        -2.400758277161838e+00,
        -2.549732539343734e+00,
        4.374664141464968e+00,
        2.938163982698783e+00,
    ];
    const D: [f64; 4] = [
        7.784695709041462e-03,
        3.224671290700398e-01,
        2.445134137142996e+00,
        3.754408661907416e+00,
    ];
    let p_low = 0.02425;
    let x = if p < p_low {
        let q = (-2.0 * p.ln()).sqrt();
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    } else if p <= 1.0 - p_low {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    } else {
        let q = (-2.0 * (1.0 - p).ln()).sqrt();
        -(((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    };
    // One Halley refinement against the exact CDF.
    let e = normal_cdf(x) - p;
    let u = e * (0.5 * LN_2PI + 0.5 * x * x).exp();
    x - u / (1.0 + x * u / 2.0)
}

/// In-place lower Cholesky factor of a symmetric positive-definite matrix
/// (row-major, n×n). Adds `jitter` to the diagonal if a pivot fails, retrying
/// with a growing jitter up to a few times. Returns the factor L with the
/// strict upper triangle zeroed, or None if the matrix cannot be factored.
pub fn cholesky(mat: &[f64], n: usize) -> Option<Vec<f64>> {
    let mut jitter = 0.0;
    for attempt in 0..6 {
        if attempt > 0 {
            let mean_diag: f64 = (0..n).map(|i| mat[i * n + i]).sum::<f64>() / n as f64;
            jitter = mean_diag.abs().max(1e-300) * 1e-10 * 10f64.powi(attempt);
        }
        if let Some(l) = try_cholesky(mat, n, jitter) {
            return Some(l);
        }
    }
    None
}

fn try_cholesky(mat: &[f64], n: usize, jitter: f64) -> Option<Vec<f64>> {
    let mut l = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..=i {
            let mut s = mat[i * n + j];
            if i == j {
                s += jitter;
            }
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            if i == j {
                if s <= 0.0 || !s.is_finite() {
                    return None;
                }
                l[i * n + i] = s.sqrt();
            } else {
                l[i * n + j] = s / l[j * n + j];
            }
        }
    }
    Some(l)
}
