//! Dispersion statistics: the squared coefficient of variation of the
//! principal eigenvector (`c_e`) and of the degree vector (`c_d`), the
//! indicator `Gamma = (c_e - c_d)/gamma^2`, their upper bounds, and the
//! Cartesian-product composition laws.
//!
//! Degree statistics are exact rationals; eigenvector statistics are
//! floating point with explicit tolerances.

use crate::graph::{DegreeMultiset, Graph};
use crate::spectral::{self, EigenPair, SpectralError};
use crate::Rational;
use num::{BigInt, One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DispersionError {
    #[error("coefficient of variation requires a nonempty vector")]
    EmptyVector,
    #[error("coefficient of variation requires strictly positive entries, got {0}")]
    NonpositiveEntry(f64),
    #[error("degree statistics require minimum degree >= 1")]
    IsolatedVertex,
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// Squared coefficient of variation `(sigma/mu)^2` of a positive vector;
/// equal to `n ||x||_2^2 / ||x||_1^2 - 1` and invariant under scaling.
///
/// Computed as variance over squared mean (two passes), which keeps the
/// result accurate even when the entries are nearly constant.
pub fn cv_squared(x: &[f64]) -> Result<f64, DispersionError> {
    if x.is_empty() {
        return Err(DispersionError::EmptyVector);
    }
    for &v in x {
        if v.is_nan() || v <= 0.0 {
            return Err(DispersionError::NonpositiveEntry(v));
        }
    }
    let n = x.len() as f64;
    let mean = x.iter().sum::<f64>() / n;
    let var = x.iter().map(|&v| (v - mean) * (v - mean)).sum::<f64>() / n;
    Ok(var / (mean * mean))
}

/// `cv_squared` over `(value, multiplicity)` pairs, for closed-form
/// eigenvectors given in multiset notation.
pub fn cv_squared_weighted(entries: &[(f64, u64)]) -> Result<f64, DispersionError> {
    let total: u64 = entries.iter().map(|&(_, m)| m).sum();
    if total == 0 {
        return Err(DispersionError::EmptyVector);
    }
    for &(v, _) in entries {
        if v.is_nan() || v <= 0.0 {
            return Err(DispersionError::NonpositiveEntry(v));
        }
    }
    let n = total as f64;
    let mean = entries.iter().map(|&(v, m)| v * m as f64).sum::<f64>() / n;
    let var = entries
        .iter()
        .map(|&(v, m)| (v - mean) * (v - mean) * m as f64)
        .sum::<f64>()
        / n;
    Ok(var / (mean * mean))
}

/// `c_e`: squared coefficient of variation of the principal eigenvector.
pub fn c_e(g: &Graph) -> Result<f64, DispersionError> {
    let e = spectral::principal_eigenpair_default(g)?;
    c_e_of_eigenpair(&e)
}

pub fn c_e_of_eigenpair(e: &EigenPair) -> Result<f64, DispersionError> {
    cv_squared(&e.x)
}

/// Exact `c_d = n ||d||_2^2 / ||d||_1^2 - 1` of a degree multiset.
pub fn cd_of_multiset(d: &DegreeMultiset) -> Result<Rational, DispersionError> {
    if d.is_empty() || d.entries()[0].0 == 0 {
        return Err(DispersionError::IsolatedVertex);
    }
    let n = BigInt::from(d.len());
    let l1 = d.l1();
    let num = n * d.l2_squared();
    Ok(Rational::new(num, &l1 * &l1) - Rational::one())
}

/// `c_d`: squared coefficient of variation of the degree vector,
/// in exact rational arithmetic. Rejects graphs with isolated vertices.
pub fn c_d(g: &Graph) -> Result<Rational, DispersionError> {
    cd_of_multiset(&g.degree_multiset())
}

/// `Gamma = (c_e - c_d) / gamma^2`.
pub fn gamma_indicator(g: &Graph) -> Result<f64, DispersionError> {
    Ok(dispersion_report_default(g)?.gamma_indicator)
}

/// Eigenvalue bound on `c_e`: `n/(lambda + 1) - 1`.
pub fn ce_lambda_bound(g: &Graph) -> Result<f64, DispersionError> {
    let e = spectral::principal_eigenpair_default(g)?;
    Ok(ce_lambda_bound_of(g.vertex_count(), e.lambda))
}

pub fn ce_lambda_bound_of(n: usize, lambda: f64) -> f64 {
    n as f64 / (lambda + 1.0) - 1.0
}

/// Average-degree bound on `c_d`: `Delta / d_bar - 1`, exact.
pub fn cd_avgdeg_bound(g: &Graph) -> Result<Rational, DispersionError> {
    if g.min_degree() == 0 {
        return Err(DispersionError::IsolatedVertex);
    }
    let delta_n = BigInt::from(g.max_degree()) * BigInt::from(g.vertex_count());
    let two_e = BigInt::from(2 * g.edge_count());
    Ok(Rational::new(delta_n, two_e) - Rational::one())
}

/// 1-norm of the k-fold multiset sum: `k |A|^{k-1} ||A||_1`.
///
/// Requires `k >= 1`.
pub fn ksum_l1(a: &DegreeMultiset, k: u32) -> BigInt {
    assert!(k >= 1, "multiset sum requires k >= 1");
    let size = BigInt::from(a.len());
    BigInt::from(k) * size.pow(k - 1) * a.l1()
}

/// Squared 2-norm of the k-fold multiset sum:
/// `k |A|^{k-2} (|A| ||A||_2^2 + (k-1) ||A||_1^2)`.
///
/// Requires `k >= 1`; for `k = 1` the `|A|^{-1}` cancellation is taken
/// exactly and the value is `||A||_2^2`.
pub fn ksum_l2sq(a: &DegreeMultiset, k: u32) -> BigInt {
    assert!(k >= 1, "multiset sum requires k >= 1");
    if k == 1 {
        return a.l2_squared();
    }
    let size = BigInt::from(a.len());
    let l1 = a.l1();
    BigInt::from(k) * size.pow(k - 2) * (&size * a.l2_squared() + BigInt::from(k - 1) * &l1 * &l1)
}

/// Composition law for `c_e` under the Cartesian product:
/// `c_e(A [] B) = (1 + c_e(A))(1 + c_e(B)) - 1`.
pub fn ce_product(ce_a: f64, ce_b: f64) -> f64 {
    (1.0 + ce_a) * (1.0 + ce_b) - 1.0
}

/// Composition law for `c_d` under Cartesian powers:
/// `c_d(G^{[]k}) = c_d(G)/k`, exact. Requires `k >= 1`.
pub fn cd_power(cd_g: &Rational, k: u32) -> Rational {
    assert!(k >= 1, "cartesian power requires k >= 1");
    cd_g / Rational::from(BigInt::from(k))
}

/// Slack of each upper bound against the statistic it caps;
/// all four are nonnegative (up to float tolerance) on valid inputs.
#[derive(Debug, Clone, Copy)]
pub struct BoundSlacks {
    /// `(gamma^2 - 1) - c_e`
    pub gamma_sq_vs_c_e: f64,
    /// `(gamma^2 - 1) - c_d`
    pub gamma_sq_vs_c_d: f64,
    /// `(n/(lambda+1) - 1) - c_e`
    pub lambda_vs_c_e: f64,
    /// `(Delta/d_bar - 1) - c_d`
    pub avg_deg_vs_c_d: f64,
}

/// All dispersion statistics of one connected graph.
#[derive(Debug, Clone)]
pub struct DispersionReport {
    pub gamma: f64,
    pub gamma_sq_minus_1: f64,
    pub c_e: f64,
    pub c_d: Rational,
    /// `(c_e - c_d) / gamma^2`
    pub gamma_indicator: f64,
    pub slacks: BoundSlacks,
}

impl DispersionReport {
    pub fn c_d_f64(&self) -> f64 {
        self.c_d.to_f64().expect("finite rational")
    }
}

/// Computes the full report from one eigenpair solve plus exact degree
/// arithmetic.
pub fn dispersion_report(
    g: &Graph,
    tol: f64,
    max_iter: usize,
) -> Result<DispersionReport, DispersionError> {
    let e = spectral::principal_eigenpair(g, tol, max_iter)?;
    dispersion_report_of(g, &e)
}

pub fn dispersion_report_default(g: &Graph) -> Result<DispersionReport, DispersionError> {
    let e = spectral::principal_eigenpair_default(g)?;
    dispersion_report_of(g, &e)
}

/// Report from a precomputed eigenpair of `g`.
pub fn dispersion_report_of(g: &Graph, e: &EigenPair) -> Result<DispersionReport, DispersionError> {
    let gamma = spectral::principal_ratio(e);
    let gamma_sq_minus_1 = gamma * gamma - 1.0;
    let c_e = cv_squared(&e.x)?;
    let c_d = c_d(g)?;
    let c_d_f = c_d.to_f64().expect("finite rational");
    let lambda_bound = ce_lambda_bound_of(g.vertex_count(), e.lambda);
    let avg_deg_bound = cd_avgdeg_bound(g)?;
    let slacks = BoundSlacks {
        gamma_sq_vs_c_e: gamma_sq_minus_1 - c_e,
        gamma_sq_vs_c_d: gamma_sq_minus_1 - c_d_f,
        lambda_vs_c_e: lambda_bound - c_e,
        avg_deg_vs_c_d: avg_deg_bound.to_f64().expect("finite rational") - c_d_f,
    };
    Ok(DispersionReport {
        gamma,
        gamma_sq_minus_1,
        c_e,
        gamma_indicator: (c_e - c_d_f) / (gamma * gamma),
        c_d,
        slacks,
    })
}

/// `c_d == 0` test helper: true iff the graph is regular.
pub fn is_regular(g: &Graph) -> bool {
    g.max_degree() == g.min_degree()
}

#[allow(clippy::useless_conversion)]
pub fn rational_from_ints(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Brute-force oracle for the k-fold multiset sum norms: enumerates all
/// `|A|^k` tuples. Exponential; intended for small multisets only.
pub fn ksum_brute_force(a: &DegreeMultiset, k: u32) -> (BigInt, BigInt) {
    assert!(k >= 1, "multiset sum requires k >= 1");
    let values = a.expand();
    let mut l1 = BigInt::zero();
    let mut l2 = BigInt::zero();
    let mut idx = vec![0usize; k as usize];
    loop {
        let s: u64 = idx.iter().map(|&i| values[i]).sum();
        l1 += BigInt::from(s);
        l2 += BigInt::from(s) * BigInt::from(s);
        // Odometer increment over the k-fold index space.
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return (l1, l2);
            }
            idx[pos] += 1;
            if idx[pos] < values.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}
