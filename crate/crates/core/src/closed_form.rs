//! Analytic eigenvector entries, statistics, and limits for each family.
//!
//! Every family here admits closed forms for the principal eigenvector (up
//! to the kite's spectral radius, which is only bracketed and is therefore
//! taken from the numeric solver). These are the oracle against which the
//! numeric path is cross-validated, and vice versa.

use crate::dispersion::{self, cv_squared, cv_squared_weighted, DispersionError};
use crate::families::{self, FamilyError, FamilySpec};
use crate::graph::DegreeMultiset;
use crate::spectral::{self, SigmaTau, SpectralError};
use crate::Rational;
use num::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ClosedFormError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Dispersion(#[from] DispersionError),
    #[error("ratio parameter k must be positive, got {0}")]
    NonpositiveK(f64),
}

/// Closed-form statistics of one family member.
#[derive(Debug, Clone)]
pub struct FamilyStats {
    pub spec: FamilySpec,
    pub gamma: f64,
    pub c_e: f64,
    pub c_d: Rational,
    /// Closed-form eigenvalue where one exists; the kite eigenvalue is
    /// numeric (the spectral radius is only bracketed).
    pub lambda: Option<f64>,
}

/// A limit that may be finite, diverge, or simply not be stated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LimitValue {
    Finite(f64),
    Infinite,
    NotStated,
}

impl LimitValue {
    pub fn finite(&self) -> Option<f64> {
        match self {
            LimitValue::Finite(v) => Some(*v),
            _ => None,
        }
    }
}

/// One row of the limits table: the limiting values of `gamma^2 - 1`,
/// `c_e`, and `c_d` for a family, with the ratio parameter where one
/// applies.
#[derive(Debug, Clone)]
pub struct LimitRecord {
    pub family: &'static str,
    pub k: Option<f64>,
    pub gamma_sq_minus_1: LimitValue,
    pub c_e: LimitValue,
    pub c_d: LimitValue,
}

fn cd_exact(pairs: &[(u64, u64)]) -> Rational {
    dispersion::cd_of_multiset(&DegreeMultiset::new(pairs)).expect("positive degrees")
}

/// `K_n - K_2`: eigenvector `((a, n-2), (1, 2))` with
/// `a = ((n-3) + sqrt(n^2 + 2n - 7)) / (2(n-2))`, `gamma = a`,
/// `lambda = (n-2) a`. The two removed-edge endpoints carry the small
/// entry 1; the remaining `n - 2` vertices carry `a > 1`.
pub fn complete_minus_edge_stats(n: usize) -> Result<FamilyStats, ClosedFormError> {
    if n <= 2 {
        return Err(FamilyError::MinusEdgeTooSmall(n).into());
    }
    let nf = n as f64;
    let a = (nf - 3.0 + (nf * nf + 2.0 * nf - 7.0).sqrt()) / (2.0 * (nf - 2.0));
    let c_e = cv_squared_weighted(&[(a, n as u64 - 2), (1.0, 2)])?;
    let c_d = cd_exact(&[(n as u64 - 1, n as u64 - 2), (n as u64 - 2, 2)]);
    Ok(FamilyStats {
        spec: FamilySpec::CompleteMinusEdge { n },
        gamma: a,
        c_e,
        c_d,
        lambda: Some((nf - 2.0) * a),
    })
}

pub fn complete_minus_edge_limits() -> LimitRecord {
    LimitRecord {
        family: "K_n-K_2",
        k: None,
        gamma_sq_minus_1: LimitValue::Finite(0.0),
        c_e: LimitValue::Finite(0.0),
        c_d: LimitValue::Finite(0.0),
    }
}

/// `K_{1,n,n}`: eigenvector `((1, 1), (b, 2n))` with apex entry 1 and
/// `b = (n + sqrt(n^2 + 8n)) / (4n) <= 1`, so `gamma = 1/b`;
/// `lambda = 2nb`.
pub fn tripartite_stats(n: usize) -> Result<FamilyStats, ClosedFormError> {
    if n == 0 {
        return Err(FamilyError::TripartiteZero.into());
    }
    let nf = n as f64;
    let b = (nf + (nf * nf + 8.0 * nf).sqrt()) / (4.0 * nf);
    // For this eigenvector ||x||_2^2 = 1 + 2nb^2 and ||x||_1^2 = (1 + 2nb)^2.
    let l2 = 1.0 + 2.0 * nf * b * b;
    let l1 = 1.0 + 2.0 * nf * b;
    let c_e = (2.0 * nf + 1.0) * l2 / (l1 * l1) - 1.0;
    let c_d = cd_exact(&[(2 * n as u64, 1), (n as u64 + 1, 2 * n as u64)]);
    Ok(FamilyStats {
        spec: FamilySpec::CompleteTripartite1nn { n },
        gamma: 1.0 / b,
        c_e,
        c_d,
        lambda: Some(2.0 * nf * b),
    })
}

pub fn tripartite_limits() -> LimitRecord {
    LimitRecord {
        family: "K_{1,n,n}",
        k: None,
        gamma_sq_minus_1: LimitValue::Finite(3.0),
        c_e: LimitValue::Finite(0.0),
        c_d: LimitValue::Finite(0.0),
    }
}

/// Principal eigenvector of `S(n,m)` normalized to `x_max = 1`: clique
/// entries 1, independent entries `b = (1 - n + sqrt((n-1)^2 + 4nm))/(2m)`.
pub fn split_eigvec(n: usize, m: usize) -> (f64, f64) {
    let (nf, mf) = (n as f64, m as f64);
    let b = (1.0 - nf + ((nf - 1.0) * (nf - 1.0) + 4.0 * nf * mf).sqrt()) / (2.0 * mf);
    (1.0, b)
}

/// `S(n,m)` statistics in closed form:
/// `gamma = 1/b`, `c_e = (b-1)^2 (nm^2 + n^2 m) / ((n+m)(n+mb)^2)`,
/// `c_d = (m-1)^2 (nm^2 + n^2 m) / ((n+m)(n^2 + 2nm - n)^2)` exactly.
pub fn split_stats(n: usize, m: usize) -> Result<FamilyStats, ClosedFormError> {
    if n == 0 || m == 0 {
        return Err(FamilyError::SplitParams { n, m }.into());
    }
    let (_, b) = split_eigvec(n, m);
    let (nf, mf) = (n as f64, m as f64);
    let c_e = (b - 1.0) * (b - 1.0) * (nf * mf * mf + nf * nf * mf)
        / ((nf + mf) * (nf + mf * b) * (nf + mf * b));
    let (nb, mb) = (BigInt::from(n), BigInt::from(m));
    let num = (&mb - 1) * (&mb - 1) * (&nb * &mb * &mb + &nb * &nb * &mb);
    let inner = &nb * &nb + BigInt::from(2) * &nb * &mb - &nb;
    let den = (&nb + &mb) * (&inner * &inner);
    let lambda = (nf - 1.0 + ((nf - 1.0) * (nf - 1.0) + 4.0 * nf * mf).sqrt()) / 2.0;
    Ok(FamilyStats {
        spec: FamilySpec::CompleteSplit { n, m },
        gamma: 1.0 / b,
        c_e,
        c_d: Rational::new(num, den),
        lambda: Some(lambda),
    })
}

/// Limits of `S(n, kn)` as `n` grows, for a fixed ratio `k > 0`:
/// `gamma -> (sqrt(4k+1)+1)/2`, with closed-form `c_e` and `c_d` limits.
pub fn split_limits(k: f64) -> Result<LimitRecord, ClosedFormError> {
    if k.is_nan() || k <= 0.0 {
        return Err(ClosedFormError::NonpositiveK(k));
    }
    let root = (4.0 * k + 1.0).sqrt();
    let gamma = (root + 1.0) / 2.0;
    let c_e = k * ((root - 1.0) / k - 2.0) * ((root - 1.0) / k - 2.0) / ((root + 1.0) * (root + 1.0));
    let c_d = k * k * k / ((2.0 * k + 1.0) * (2.0 * k + 1.0));
    Ok(LimitRecord {
        family: "S(n,kn)",
        k: Some(k),
        gamma_sq_minus_1: LimitValue::Finite(gamma * gamma - 1.0),
        c_e: LimitValue::Finite(c_e),
        c_d: LimitValue::Finite(c_d),
    })
}

/// Limiting principal ratio of `S(n, kn)`.
pub fn split_gamma_limit(k: f64) -> f64 {
    ((4.0 * k + 1.0).sqrt() + 1.0) / 2.0
}

/// `(sigma^k - tau^k) / (sigma - tau)`.
fn chebyshev_like(st: SigmaTau, k: u32) -> f64 {
    (st.sigma.powi(k as i32) - st.tau.powi(k as i32)) / (st.sigma - st.tau)
}

/// Principal eigenvector of the kite `P_m K_s` expressed through its
/// spectral radius, normalized to `x_1 = 1`: path entries
/// `x_k = (sigma^k - tau^k)/(sigma - tau)` for `1 <= k <= m`, and the
/// `s - 1` free clique entries all `(sigma^{m+1} - tau^{m+1}) /
/// ((s-1)(sigma - tau))`. Entry order matches `families::kite`.
pub fn kite_eigvec(m: usize, s: usize, lambda: f64) -> Result<Vec<f64>, ClosedFormError> {
    let st = SigmaTau::from_lambda(lambda)?;
    let mut x = Vec::with_capacity(m + s - 1);
    for k in 1..=m {
        x.push(chebyshev_like(st, k as u32));
    }
    let clique = chebyshev_like(st, m as u32 + 1) / (s as f64 - 1.0);
    for _ in 0..s - 1 {
        x.push(clique);
    }
    Ok(x)
}

/// Kite statistics: `gamma = (sigma^m - tau^m)/(sigma - tau)` with the
/// numeric spectral radius, `c_e` from the closed-form eigenvector, and
/// exact `c_d` from the degree multiset `((1,1),(2,m-2),(s-1,s-1),(s,1))`.
pub fn kite_stats(m: usize, s: usize) -> Result<FamilyStats, ClosedFormError> {
    if m == 0 || s < 3 {
        return Err(FamilyError::KiteParams { m, s }.into());
    }
    if m == 1 {
        // Degenerate path: the kite is K_s itself.
        return Ok(FamilyStats {
            spec: FamilySpec::Kite { m, s },
            gamma: 1.0,
            c_e: 0.0,
            c_d: Rational::from(BigInt::from(0)),
            lambda: Some(s as f64 - 1.0),
        });
    }
    let g = families::kite(m, s)?;
    let lambda = spectral::principal_eigenpair_default(&g)?.lambda;
    let x = kite_eigvec(m, s, lambda)?;
    let st = SigmaTau::from_lambda(lambda)?;
    let c_d = cd_exact(&[
        (1, 1),
        (2, m as u64 - 2),
        (s as u64 - 1, s as u64 - 1),
        (s as u64, 1),
    ]);
    Ok(FamilyStats {
        spec: FamilySpec::Kite { m, s },
        gamma: chebyshev_like(st, m as u32),
        c_e: cv_squared(&x)?,
        c_d,
        lambda: None,
    })
}

/// Table row for `P_2 K_{n-1}`: the ratio diverges while both dispersion
/// statistics vanish.
pub fn pendant_clique_limits() -> LimitRecord {
    LimitRecord {
        family: "P_2K_{n-1}",
        k: None,
        gamma_sq_minus_1: LimitValue::Infinite,
        c_e: LimitValue::Finite(0.0),
        c_d: LimitValue::Finite(0.0),
    }
}

/// `lim c_d(P_n G_n^r) = ((r-2)/(r+2))^2`.
pub fn regular_kite_cd_limit(r: usize) -> f64 {
    let rf = r as f64;
    ((rf - 2.0) / (rf + 2.0)) * ((rf - 2.0) / (rf + 2.0))
}

/// Exact `c_d` of `P_m G_n^r` from its degree multiset, without building
/// the graph.
pub fn regular_kite_cd(m: usize, n: usize, r: usize) -> Result<Rational, ClosedFormError> {
    if m < 2 || r < 2 || r >= n || !(r * n).is_multiple_of(2) {
        return Err(FamilyError::RegularKiteParams { m, n, r }.into());
    }
    Ok(cd_exact(&[
        (1, 1),
        (2, m as u64 - 2),
        (r as u64, n as u64 - 1),
        (r as u64 + 1, 1),
    ]))
}

pub fn regular_kite_limits(r: usize) -> LimitRecord {
    LimitRecord {
        family: "P_nG_n^r",
        k: Some(r as f64),
        gamma_sq_minus_1: LimitValue::Infinite,
        c_e: LimitValue::NotStated,
        c_d: LimitValue::Finite(regular_kite_cd_limit(r)),
    }
}

/// `K_{1,n}`: `gamma = lambda = sqrt(n)`,
/// `c_e = 2(n+1)/(sqrt(n)+1)^2 - 1`, and exact
/// `c_d = (n^3 + 2n^2 + n)/(4n^2) - 1`.
pub fn star_stats(n: usize) -> Result<FamilyStats, ClosedFormError> {
    if n == 0 {
        return Err(FamilyError::StarZero.into());
    }
    let nf = n as f64;
    let root = nf.sqrt();
    let c_e = 2.0 * (nf + 1.0) / ((root + 1.0) * (root + 1.0)) - 1.0;
    let nb = BigInt::from(n);
    let num = &nb * &nb * &nb + BigInt::from(2) * &nb * &nb + &nb;
    let den = BigInt::from(4) * &nb * &nb;
    let c_d = Rational::new(num, den) - Rational::from(BigInt::from(1));
    Ok(FamilyStats {
        spec: FamilySpec::Star { n },
        gamma: root,
        c_e,
        c_d,
        lambda: Some(root),
    })
}

pub fn star_limits() -> LimitRecord {
    LimitRecord {
        family: "K_{1,n}",
        k: None,
        gamma_sq_minus_1: LimitValue::Infinite,
        c_e: LimitValue::Finite(1.0),
        c_d: LimitValue::Infinite,
    }
}

pub fn cartesian_power_limits() -> LimitRecord {
    LimitRecord {
        family: "G^[]k",
        k: None,
        gamma_sq_minus_1: LimitValue::Infinite,
        c_e: LimitValue::Infinite,
        c_d: LimitValue::Finite(0.0),
    }
}

/// All seven rows of the limits table, with the split row at ratio `k`
/// and the regular-kite row at degree `r`.
pub fn table1_report_at(k: f64, r: usize) -> Result<Vec<LimitRecord>, ClosedFormError> {
    Ok(vec![
        complete_minus_edge_limits(),
        tripartite_limits(),
        split_limits(k)?,
        pendant_clique_limits(),
        regular_kite_limits(r),
        star_limits(),
        cartesian_power_limits(),
    ])
}

/// The limits table at the defaults `k = 1`, `r = 4`.
pub fn table1_report() -> Vec<LimitRecord> {
    table1_report_at(1.0, 4).expect("k = 1 is valid")
}
