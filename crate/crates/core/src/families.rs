//! Constructors for the parameterized graph families under study.
//!
//! Vertex labelings are fixed so eigenvector entries can be asserted
//! positionally: special vertices (removed-edge endpoints, apex, clique,
//! path) always come first.

use crate::graph::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("complete graph minus an edge requires n > 2, got {0}")]
    MinusEdgeTooSmall(usize),
    #[error("complete tripartite K_{{1,n,n}} requires n >= 1")]
    TripartiteZero,
    #[error("complete split graph requires n >= 1 and m >= 1, got n={n}, m={m}")]
    SplitParams { n: usize, m: usize },
    #[error("kite requires m >= 1 and s >= 3, got m={m}, s={s}")]
    KiteParams { m: usize, s: usize },
    #[error("regular kite requires m >= 1 and 2 <= r < n with r*n even, got m={m}, n={n}, r={r}")]
    RegularKiteParams { m: usize, n: usize, r: usize },
    #[error("star requires n >= 1")]
    StarZero,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Tagged description of a family member; `realize` turns it into a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// `K_n - K_2`: complete graph with the edge {0,1} removed.
    CompleteMinusEdge { n: usize },
    /// `K_{1,n,n}`: apex plus two clouds of size n.
    CompleteTripartite1nn { n: usize },
    /// `S(n,m)`: clique of size n joined to an independent set of size m.
    CompleteSplit { n: usize, m: usize },
    /// `P_m K_s`: path of m vertices ending in a clique of size s.
    Kite { m: usize, s: usize },
    /// `P_m G_n^r`: path of m vertices ending in an r-regular circulant head.
    RegularKite { m: usize, n: usize, r: usize },
    /// `K_{1,n}`: star with n rays.
    Star { n: usize },
    /// `base^{[]k}`: iterated Cartesian product.
    CartesianPower { base: Box<FamilySpec>, k: usize },
}

/// `K_n` minus the edge between vertices 0 and 1, for `n > 2`.
pub fn complete_minus_edge(n: usize) -> Result<Graph, FamilyError> {
    if n <= 2 {
        return Err(FamilyError::MinusEdgeTooSmall(n));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2 - 1);
    for u in 0..n {
        for v in u + 1..n {
            if (u, v) != (0, 1) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::build(n, &edges)?)
}

/// `K_{1,n,n}`: vertex 0 is the apex, cloud A is `1..=n`, cloud B the rest.
pub fn complete_tripartite_1nn(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::TripartiteZero);
    }
    let mut edges = Vec::with_capacity(2 * n + n * n);
    for v in 1..=2 * n {
        edges.push((0, v));
    }
    for a in 1..=n {
        for b in n + 1..=2 * n {
            edges.push((a, b));
        }
    }
    Ok(Graph::build(2 * n + 1, &edges)?)
}

/// `S(n,m)`: vertices `0..n` form the clique, `n..n+m` the independent set.
pub fn complete_split(n: usize, m: usize) -> Result<Graph, FamilyError> {
    if n == 0 || m == 0 {
        return Err(FamilyError::SplitParams { n, m });
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2 + n * m);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    for u in 0..n {
        for v in n..n + m {
            edges.push((u, v));
        }
    }
    Ok(Graph::build(n + m, &edges)?)
}

/// `P_m K_s`: path vertices `0..m`, with vertex `m-1` identified with one
/// clique vertex; the rest of the clique is `m..m+s-1`. `m = 1` is `K_s`.
pub fn kite(m: usize, s: usize) -> Result<Graph, FamilyError> {
    if m == 0 || s < 3 {
        return Err(FamilyError::KiteParams { m, s });
    }
    let total = m + s - 1;
    let mut edges = Vec::with_capacity(m - 1 + s * (s - 1) / 2);
    for i in 0..m - 1 {
        edges.push((i, i + 1));
    }
    // Clique on {m-1} and the s-1 head vertices.
    let clique: Vec<usize> = std::iter::once(m - 1).chain(m..total).collect();
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            edges.push((u, v));
        }
    }
    Ok(Graph::build(total, &edges)?)
}

/// Offsets of the r-regular circulant on n vertices:
/// `1..=r/2`, plus `n/2` when r is odd (which forces n even).
fn circulant_offsets(n: usize, r: usize) -> Vec<usize> {
    let mut offsets: Vec<usize> = (1..=r / 2).collect();
    if r % 2 == 1 {
        offsets.push(n / 2);
    }
    offsets
}

/// `P_m G_n^r` with the head realized as a circulant graph; path vertices
/// `0..m`, head vertex `j` at index `m - 1 + j` (head vertex 0 is the
/// identified path endpoint). `m = 1` is the head itself.
pub fn regular_kite(m: usize, n: usize, r: usize) -> Result<Graph, FamilyError> {
    if m == 0 || r < 2 || r >= n || !(r * n).is_multiple_of(2) {
        return Err(FamilyError::RegularKiteParams { m, n, r });
    }
    let total = m + n - 1;
    let mut edges = Vec::new();
    for i in 0..m - 1 {
        edges.push((i, i + 1));
    }
    let head = |j: usize| m - 1 + j;
    for j in 0..n {
        for &o in &circulant_offsets(n, r) {
            edges.push((head(j), head((j + o) % n)));
        }
    }
    Ok(Graph::build(total, &edges)?)
}

/// `K_{1,n}`: center vertex 0 with n rays.
pub fn star(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::StarZero);
    }
    let edges: Vec<(usize, usize)> = (1..=n).map(|v| (0, v)).collect();
    Ok(Graph::build(n + 1, &edges)?)
}

/// Dispatches a `FamilySpec` to its constructor.
pub fn realize(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    match spec {
        FamilySpec::CompleteMinusEdge { n } => complete_minus_edge(*n),
        FamilySpec::CompleteTripartite1nn { n } => complete_tripartite_1nn(*n),
        FamilySpec::CompleteSplit { n, m } => complete_split(*n, *m),
        FamilySpec::Kite { m, s } => kite(*m, *s),
        FamilySpec::RegularKite { m, n, r } => regular_kite(*m, *n, *r),
        FamilySpec::Star { n } => star(*n),
        FamilySpec::CartesianPower { base, k } => {
            let g = realize(base)?;
            Ok(g.cartesian_power(*k)?)
        }
    }
}
