//! Principal eigenpair computation and eigenvalue-derived bounds.
//!
//! The solver is power iteration on `A + I`; the identity shift makes the
//! iteration matrix primitive so bipartite graphs (stars, complete
//! tripartite graphs) cannot oscillate. Eigenvectors are unchanged by the
//! shift and the returned eigenvalue and residual are measured on `A`
//! itself.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("principal eigenpair requires a connected graph")]
    Disconnected,
    #[error("power iteration did not converge: residual {residual:e} after {iterations} iterations")]
    NoConvergence { residual: f64, iterations: usize },
    #[error("sigma/tau require lambda > 2, got {0}")]
    LambdaNotAboveTwo(f64),
    #[error("kite spectral bounds require m >= 2 and s >= 3, got m={m}, s={s}")]
    KiteParamsOutOfRange { m: usize, s: usize },
}

/// Principal eigenvalue and positive unit eigenvector of a connected graph.
#[derive(Debug, Clone)]
pub struct EigenPair {
    pub lambda: f64,
    /// Entries are strictly positive and `||x||_2 = 1`.
    pub x: Vec<f64>,
    /// Max-norm of `A x - lambda x` at the returned iterate; at most
    /// `tol * max(1, lambda)` on success.
    pub residual: f64,
    pub iterations: usize,
}

impl EigenPair {
    /// Indices of the greatest and least eigenvector entries,
    /// lowest index winning ties.
    pub fn extreme_indices(&self) -> (usize, usize) {
        let mut imax = 0;
        let mut imin = 0;
        for (i, &v) in self.x.iter().enumerate() {
            if v > self.x[imax] {
                imax = i;
            }
            if v < self.x[imin] {
                imin = i;
            }
        }
        (imax, imin)
    }
}

/// `sigma = (lambda + sqrt(lambda^2 - 4))/2` and its inverse.
#[derive(Debug, Clone, Copy)]
pub struct SigmaTau {
    pub sigma: f64,
    pub tau: f64,
}

impl SigmaTau {
    pub fn from_lambda(lambda: f64) -> Result<SigmaTau, SpectralError> {
        if lambda.is_nan() || lambda <= 2.0 {
            return Err(SpectralError::LambdaNotAboveTwo(lambda));
        }
        let sigma = (lambda + (lambda * lambda - 4.0).sqrt()) / 2.0;
        Ok(SigmaTau {
            sigma,
            tau: 1.0 / sigma,
        })
    }
}

/// Default residual tolerance on `A`.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Default iteration budget: `10 * n * ceil(ln(1/tol))`, floored at 10000.
pub fn default_max_iter(n: usize) -> usize {
    let per_digit = (1.0 / DEFAULT_TOL).ln().ceil() as usize;
    (10 * n * per_digit).max(10_000)
}

/// Power iteration for the principal eigenpair of a connected graph.
///
/// Starts from the normalized all-ones vector (nonzero Perron component,
/// reproducible iteration counts) and stops once the max-norm residual on
/// `A` drops to `tol * max(1, lambda)`. The scaling keeps the stopping test
/// meaningful at large orders, where the matrix-vector product itself
/// carries rounding of order `n * eps * lambda` and an absolute target
/// can sit below what f64 arithmetic can reach. Non-convergence within
/// `max_iter` is an error carrying the last residual.
pub fn principal_eigenpair(
    g: &Graph,
    tol: f64,
    max_iter: usize,
) -> Result<EigenPair, SpectralError> {
    if !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    let n = g.vertex_count();
    let mut v = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0f64; n];
    let mut residual = f64::INFINITY;
    for iter in 1..=max_iter {
        for (i, yi) in y.iter_mut().enumerate() {
            *yi = g.neighbors(i).iter().map(|&w| v[w as usize]).sum();
        }
        // v is unit, so the Rayleigh quotient is a plain dot product.
        let rayleigh: f64 = v.iter().zip(&y).map(|(a, b)| a * b).sum();
        residual = v
            .iter()
            .zip(&y)
            .map(|(&vi, &yi)| (yi - rayleigh * vi).abs())
            .fold(0.0, f64::max);
        if residual <= tol * rayleigh.max(1.0) {
            return Ok(EigenPair {
                lambda: rayleigh,
                x: v,
                residual,
                iterations: iter,
            });
        }
        // One shifted step: w = (A + I) v, renormalized.
        let mut norm_sq = 0.0;
        for (yi, &vi) in y.iter_mut().zip(&v) {
            *yi += vi;
            norm_sq += *yi * *yi;
        }
        let norm = norm_sq.sqrt();
        for (vi, &yi) in v.iter_mut().zip(&y) {
            *vi = yi / norm;
        }
    }
    Err(SpectralError::NoConvergence {
        residual,
        iterations: max_iter,
    })
}

/// Convenience wrapper using the default tolerance and iteration budget.
pub fn principal_eigenpair_default(g: &Graph) -> Result<EigenPair, SpectralError> {
    principal_eigenpair(g, DEFAULT_TOL, default_max_iter(g.vertex_count()))
}

/// Max-norm of `A x - lambda x` for an arbitrary candidate eigenvector.
pub fn eigen_residual(g: &Graph, x: &[f64], lambda: f64) -> f64 {
    (0..g.vertex_count())
        .map(|i| {
            let ax: f64 = g.neighbors(i).iter().map(|&w| x[w as usize]).sum();
            (ax - lambda * x[i]).abs()
        })
        .fold(0.0, f64::max)
}

/// Principal ratio `gamma = x_max / x_min >= 1`.
pub fn principal_ratio(e: &EigenPair) -> f64 {
    let max = e.x.iter().copied().fold(f64::MIN, f64::max);
    let min = e.x.iter().copied().fold(f64::MAX, f64::min);
    max / min
}

/// Upper bound `(sigma^{d+1} - tau^{d+1}) / (sigma - tau)` on the principal
/// ratio, where `d` is the distance from an `x_max` vertex to an `x_min`
/// vertex. Requires `lambda > 2`.
pub fn pendant_path_gamma_bound(lambda: f64, d: usize) -> Result<f64, SpectralError> {
    let st = SigmaTau::from_lambda(lambda)?;
    let k = (d + 1) as i32;
    Ok((st.sigma.powi(k) - st.tau.powi(k)) / (st.sigma - st.tau))
}

/// Open interval known to contain the kite spectral radius:
/// `(s - 1 + 1/(s(s-1)), s - 1 + 1/(s-1)^2)` for `m >= 2`, `s >= 3`.
pub fn kite_spectral_radius_bounds(m: usize, s: usize) -> Result<(f64, f64), SpectralError> {
    if m < 2 || s < 3 {
        return Err(SpectralError::KiteParamsOutOfRange { m, s });
    }
    let sf = s as f64;
    Ok((
        sf - 1.0 + 1.0 / (sf * (sf - 1.0)),
        sf - 1.0 + 1.0 / ((sf - 1.0) * (sf - 1.0)),
    ))
}
