//! Watts-Strogatz clustering and transitivity, with the complete split
//! graph closed forms.
//!
//! Everything here is rational in integer parameters, so the module works
//! in exact arithmetic and the closed-form comparisons are strict
//! equalities.

use crate::graph::Graph;
use crate::Rational;
use num::{BigInt, One, Zero};

/// Local coefficients, their average, and global transitivity of a graph.
#[derive(Debug, Clone)]
pub struct ClusteringReport {
    /// Per-vertex `C_i = 2 t_i / (d_i (d_i - 1))`; `None` where `d_i <= 1`.
    pub local: Vec<Option<Rational>>,
    /// Mean over all `n` vertices, counting undefined vertices as 0.
    pub average: Rational,
    /// `3 * triangles / paths-of-length-2`; `None` when no vertex has
    /// degree two or more.
    pub transitivity: Option<Rational>,
    pub triangle_count: u64,
    /// Number of vertices with degree <= 1 (excluded from `local`).
    pub undefined_count: usize,
}

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

/// `C_v = 2 t_v / (d_v (d_v - 1))` exactly; `None` when `deg(v) <= 1`.
pub fn local_clustering(g: &Graph, v: usize) -> Option<Rational> {
    let d = g.degree(v) as u64;
    if d <= 1 {
        return None;
    }
    Some(Rational::new(
        big(2 * g.triangles_at(v)),
        big(d) * big(d - 1),
    ))
}

/// Average clustering `(1/n) sum_i C_i`, with undefined vertices
/// contributing 0 while staying in the divisor.
pub fn average_clustering(g: &Graph) -> Rational {
    let sum: Rational = (0..g.vertex_count())
        .filter_map(|v| local_clustering(g, v))
        .sum();
    sum / Rational::from(BigInt::from(g.vertex_count()))
}

/// Transitivity `3 * (# triangles) / sum_i C(d_i, 2)` exactly; `None`
/// when the graph has no path of length two.
pub fn transitivity(g: &Graph) -> Option<Rational> {
    let paths2: BigInt = g
        .degrees()
        .iter()
        .map(|&d| big(d as u64) * big(d.saturating_sub(1) as u64))
        .sum::<BigInt>()
        / 2;
    if paths2.is_zero() {
        return None;
    }
    Some(Rational::new(big(3 * g.triangle_count()), paths2))
}

/// Full clustering report for one graph.
pub fn clustering_report(g: &Graph) -> ClusteringReport {
    let local: Vec<Option<Rational>> = (0..g.vertex_count())
        .map(|v| local_clustering(g, v))
        .collect();
    let undefined_count = local.iter().filter(|c| c.is_none()).count();
    ClusteringReport {
        average: average_clustering(g),
        transitivity: transitivity(g),
        triangle_count: g.triangle_count(),
        undefined_count,
        local,
    }
}

/// Closed-form `(average, transitivity)` of `S(n,m)`:
/// clique vertices have
/// `C_u = ((n-1)(n-2) + 2(n-1)m) / ((n+m-1)(n+m-2))`, independent
/// vertices have `C_v = 1`, and
/// `T = ((n-1)(n-2)n + 3(n-1)nm) / ((n+m-1)(n+m-2)n + (n-1)nm)`.
/// `n = 1` is the star: average 0 and transitivity 0.
pub fn split_clustering_closed_form(n: u64, m: u64) -> (Rational, Rational) {
    assert!(n >= 1 && m >= 1, "split graph requires n, m >= 1");
    if n == 1 {
        return (Rational::zero(), Rational::zero());
    }
    let c_u = Rational::new(
        big(n - 1) * big(n - 2) + big(2) * big(n - 1) * big(m),
        big(n + m - 1) * big(n + m - 2),
    );
    let average = (Rational::from(big(m)) + Rational::from(big(n)) * c_u)
        / Rational::from(big(n + m));
    let t = Rational::new(
        big(n - 1) * big(n - 2) * big(n) + big(3) * big(n - 1) * big(n) * big(m),
        big(n + m - 1) * big(n + m - 2) * big(n) + big(n - 1) * big(n) * big(m),
    );
    (average, t)
}

/// Triangle count of `S(n,m)`: `C(n,3) + C(n,2) m`.
pub fn split_triangle_count(n: u64, m: u64) -> BigInt {
    big(n) * big(n.saturating_sub(1)) * big(n.saturating_sub(2)) / big(6)
        + big(n) * big(n.saturating_sub(1)) / big(2) * big(m)
}

/// Inner limits of the split clustering statistics for fixed ratio `k`:
/// `lim_n average(S(n,kn)) = (k^3 + 2k^2 + 3k + 1)/(k^3 + 3k^2 + 3k + 1)`
/// and `lim_n T(S(n,kn)) = (3k + 1)/(k^2 + 3k + 1)`. As `k` grows these
/// approach the double-limit pair `(1, 0)`.
pub fn split_divergence_limits(k: u64) -> (Rational, Rational) {
    assert!(k >= 1, "ratio parameter must be at least 1");
    let kb = big(k);
    let avg = Rational::new(
        &kb * &kb * &kb + big(2) * &kb * &kb + big(3) * &kb + big(1),
        &kb * &kb * &kb + big(3) * &kb * &kb + big(3) * &kb + big(1),
    );
    let t = Rational::new(big(3) * &kb + big(1), &kb * &kb + big(3) * &kb + big(1));
    (avg, t)
}

/// The double limit of `(average, transitivity)` as `n` then `k` grow.
pub fn split_divergence_double_limit() -> (Rational, Rational) {
    (Rational::one(), Rational::zero())
}
