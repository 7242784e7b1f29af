//! Immutable simple undirected graphs with degree caches, connectivity,
//! triangle counts, and Cartesian products.

use num::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {index} out of range for a graph on {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("cartesian power requires k >= 1")]
    EmptyProduct,
}

/// Packed adjacency rows; one bit per vertex pair.
#[derive(Debug, Clone, PartialEq, Eq)]
struct BitMatrix {
    words_per_row: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(64);
        BitMatrix {
            words_per_row,
            words: vec![0; words_per_row * n],
        }
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize) {
        self.words[i * self.words_per_row + j / 64] |= 1 << (j % 64);
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> bool {
        self.words[i * self.words_per_row + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    fn row(&self, i: usize) -> &[u64] {
        &self.words[i * self.words_per_row..(i + 1) * self.words_per_row]
    }
}

/// Immutable simple undirected graph.
///
/// Stores both per-vertex neighbor lists and a packed bit matrix; the bit
/// matrix makes triangle counting a row-AND-popcount. All operations are
/// pure, so values can be shared freely across threads.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
    bits: BitMatrix,
    degrees: Vec<u32>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    ///
    /// Duplicate edges are collapsed; self-loops and out-of-range endpoints
    /// are rejected.
    pub fn build(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut edges: Vec<(u32, u32)> = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { index: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { index: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            edges.push((a as u32, b as u32));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_clean_edges(n, edges))
    }

    /// `edges` must be sorted, deduplicated pairs with `u < v < n`.
    fn from_clean_edges(n: usize, edges: Vec<(u32, u32)>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        let mut bits = BitMatrix::new(n);
        let mut degrees = vec![0u32; n];
        for &(u, v) in &edges {
            let (u, v) = (u as usize, v as usize);
            adj[u].push(v as u32);
            adj[v].push(u as u32);
            bits.set(u, v);
            bits.set(v, u);
            degrees[u] += 1;
            degrees[v] += 1;
        }
        Graph {
            n,
            edges,
            adj,
            bits,
            degrees,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v] as usize
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits.get(u, v)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0) as usize
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0) as usize
    }

    /// True iff a traversal from vertex 0 reaches all vertices.
    /// A one-vertex graph is connected.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                let w = w as usize;
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// BFS distance between two vertices, `None` if unreachable.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        if u == v {
            return Some(0);
        }
        let mut dist = vec![usize::MAX; self.n];
        dist[u] = 0;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(w) = queue.pop_front() {
            for &x in &self.adj[w] {
                let x = x as usize;
                if dist[x] == usize::MAX {
                    dist[x] = dist[w] + 1;
                    if x == v {
                        return Some(dist[x]);
                    }
                    queue.push_back(x);
                }
            }
        }
        None
    }

    /// Number of edges among the neighbors of `v`, i.e. triangles through `v`.
    pub fn triangles_at(&self, v: usize) -> u64 {
        let row_v = self.bits.row(v);
        let mut twice = 0u64;
        for &u in &self.adj[v] {
            let row_u = self.bits.row(u as usize);
            twice += row_v
                .iter()
                .zip(row_u)
                .map(|(a, b)| (a & b).count_ones() as u64)
                .sum::<u64>();
        }
        twice / 2
    }

    /// Total triangle count: `(1/3) * sum_v triangles_at(v)`.
    pub fn triangle_count(&self) -> u64 {
        (0..self.n).map(|v| self.triangles_at(v)).sum::<u64>() / 3
    }

    /// Cartesian product; vertex `(i, j)` maps to index `i * other.n + j`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let nb = other.n;
        let mut edges = Vec::with_capacity(self.edges.len() * nb + other.edges.len() * self.n);
        for &(u, v) in &self.edges {
            for j in 0..nb as u32 {
                edges.push((u * nb as u32 + j, v * nb as u32 + j));
            }
        }
        for &(u, v) in &other.edges {
            for i in 0..self.n as u32 {
                edges.push((i * nb as u32 + u, i * nb as u32 + v));
            }
        }
        edges.sort_unstable();
        Graph::from_clean_edges(self.n * nb, edges)
    }

    /// Iterated Cartesian product; `k = 1` returns a clone of `self`.
    pub fn cartesian_power(&self, k: usize) -> Result<Graph, GraphError> {
        if k == 0 {
            return Err(GraphError::EmptyProduct);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.cartesian_product(self);
        }
        Ok(acc)
    }

    /// Degree values collapsed into a `(value, multiplicity)` multiset.
    pub fn degree_multiset(&self) -> DegreeMultiset {
        DegreeMultiset::from_values(self.degrees.iter().map(|&d| d as u64))
    }
}

/// Multiset of positive integers as `(value, multiplicity)` pairs,
/// normalized to strictly increasing values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeMultiset {
    entries: Vec<(u64, u64)>,
}

impl DegreeMultiset {
    /// Normalizes arbitrary `(value, multiplicity)` pairs: merges repeated
    /// values, drops zero multiplicities, sorts by value.
    pub fn new(pairs: &[(u64, u64)]) -> DegreeMultiset {
        let mut entries: Vec<(u64, u64)> = pairs.iter().copied().filter(|&(_, m)| m > 0).collect();
        entries.sort_unstable();
        let mut merged: Vec<(u64, u64)> = Vec::with_capacity(entries.len());
        for (v, m) in entries {
            match merged.last_mut() {
                Some((lv, lm)) if *lv == v => *lm += m,
                _ => merged.push((v, m)),
            }
        }
        DegreeMultiset { entries: merged }
    }

    pub fn from_values<I: IntoIterator<Item = u64>>(values: I) -> DegreeMultiset {
        let pairs: Vec<(u64, u64)> = values.into_iter().map(|v| (v, 1)).collect();
        DegreeMultiset::new(&pairs)
    }

    pub fn entries(&self) -> &[(u64, u64)] {
        &self.entries
    }

    /// Total element count (sum of multiplicities).
    pub fn len(&self) -> u64 {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of elements.
    pub fn l1(&self) -> BigInt {
        self.entries
            .iter()
            .map(|&(v, m)| BigInt::from(v) * BigInt::from(m))
            .sum()
    }

    /// Sum of squared elements.
    pub fn l2_squared(&self) -> BigInt {
        self.entries
            .iter()
            .map(|&(v, m)| BigInt::from(v) * BigInt::from(v) * BigInt::from(m))
            .sum()
    }

    /// Expands to one value per element, ascending.
    pub fn expand(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for &(v, m) in &self.entries {
            for _ in 0..m {
                out.push(v);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::build(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::build(n, &edges).unwrap()
    }

    fn star(rays: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..=rays).map(|i| (0, i)).collect();
        Graph::build(rays + 1, &edges).unwrap()
    }

    #[test]
    fn build_k2_and_k3() {
        let k2 = Graph::build(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.degrees(), &[1, 1]);
        let k3 = Graph::build(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.degrees(), &[2, 2, 2]);
    }

    #[test]
    fn build_dedups_edges() {
        let p4 = Graph::build(4, &[(0, 1), (0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.edge_count(), 3);
        assert_eq!(p4.degrees(), &[1, 2, 2, 1]);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            Graph::build(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { index: 3, n: 3 })
        );
        assert_eq!(Graph::build(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::build(0, &[]), Err(GraphError::Empty));
    }

    #[test]
    fn connectivity() {
        assert!(complete(3).is_connected());
        assert!(star(5).is_connected());
        assert!(Graph::build(1, &[]).unwrap().is_connected());
        let two_edges = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
    }

    #[test]
    fn triangles() {
        let k4 = complete(4);
        for v in 0..4 {
            assert_eq!(k4.triangles_at(v), 3);
        }
        assert_eq!(k4.triangle_count(), 4);
        assert_eq!(star(5).triangles_at(0), 0);
        // S(2,2): clique {0,1}, independent {2,3} joined to the clique.
        let s22 = Graph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(s22.triangles_at(0), 2);
    }

    #[test]
    fn triangles_match_brute_force() {
        // Deterministic LCG-driven random graphs on up to 8 vertices.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for n in 2..=8usize {
            for _ in 0..20 {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if next() % 2 == 0 {
                            edges.push((u, v));
                        }
                    }
                }
                let g = Graph::build(n, &edges).unwrap();
                for v in 0..n {
                    let mut brute = 0u64;
                    for a in 0..n {
                        for b in a + 1..n {
                            if g.has_edge(v, a) && g.has_edge(v, b) && g.has_edge(a, b) {
                                brute += 1;
                            }
                        }
                    }
                    assert_eq!(g.triangles_at(v), brute);
                }
            }
        }
    }

    #[test]
    fn handshake() {
        for g in [complete(6), path(5), star(7)] {
            let total: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
            assert_eq!(total, 2 * g.edge_count());
        }
    }

    #[test]
    fn product_k2_k2_is_c4() {
        let k2 = complete(2);
        let c4 = k2.cartesian_product(&k2);
        assert_eq!(c4.vertex_count(), 4);
        assert_eq!(c4.edge_count(), 4);
        assert!(c4.degrees().iter().all(|&d| d == 2));
        assert!(c4.is_connected());
    }

    #[test]
    fn product_grid() {
        let g = path(2).cartesian_product(&path(3));
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 7);
    }

    #[test]
    fn product_degree_law() {
        let a = star(3);
        let b = path(4);
        let p = a.cartesian_product(&b);
        for i in 0..a.vertex_count() {
            for j in 0..b.vertex_count() {
                assert_eq!(p.degree(i * b.vertex_count() + j), a.degree(i) + b.degree(j));
            }
        }
    }

    #[test]
    fn product_commutes_under_transposition() {
        let a = star(3);
        let b = path(3);
        let ab = a.cartesian_product(&b);
        let ba = b.cartesian_product(&a);
        // Relabel (i,j) -> (j,i) explicitly and compare edge sets.
        let na = a.vertex_count() as u32;
        let nb = b.vertex_count() as u32;
        let mut relabeled: Vec<(u32, u32)> = ab
            .edges()
            .iter()
            .map(|&(x, y)| {
                let (xi, xj) = (x / nb, x % nb);
                let (yi, yj) = (y / nb, y % nb);
                let x2 = xj * na + xi;
                let y2 = yj * na + yi;
                if x2 < y2 {
                    (x2, y2)
                } else {
                    (y2, x2)
                }
            })
            .collect();
        relabeled.sort_unstable();
        assert_eq!(relabeled, ba.edges());
    }

    #[test]
    fn power_cube() {
        let q3 = complete(2).cartesian_power(3).unwrap();
        assert_eq!(q3.vertex_count(), 8);
        assert_eq!(q3.edge_count(), 12);
        let p3sq = path(3).cartesian_power(2).unwrap();
        assert_eq!(p3sq.vertex_count(), 9);
        assert_eq!(p3sq.edge_count(), 12);
        let g = star(2);
        assert_eq!(g.cartesian_power(1).unwrap(), g);
        assert_eq!(g.cartesian_power(0), Err(GraphError::EmptyProduct));
    }

    #[test]
    fn multiset_normalization() {
        let m = DegreeMultiset::new(&[(3, 2), (1, 1), (3, 1), (2, 0)]);
        assert_eq!(m.entries(), &[(1, 1), (3, 3)]);
        assert_eq!(m.len(), 4);
        assert_eq!(m.l1(), BigInt::from(10));
        assert_eq!(m.l2_squared(), BigInt::from(28));
        assert_eq!(m.expand(), vec![1, 3, 3, 3]);
    }
}
