//! Undirected simple graphs with dense bit-vector adjacency rows.
//!
//! Vertices are `0..n`. Each vertex owns a row of `ceil(n/64)` words; bit `v`
//! of row `u` is set iff `uv` is an edge. Rows make neighbourhood
//! intersection (the hot operation everywhere in this crate) a word-parallel
//! AND. Graphs are immutable after construction; derived graphs (complement,
//! induced subgraph) are built fresh.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Linear index of an unordered vertex pair, see [`VertexPair::index`].
pub type PairIndex = u64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    OutOfRange { vertex: u32, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(u32, u32),
    #[error("duplicate vertex {0} in selection")]
    DuplicateVertex(u32),
    #[error("common_neighbors requires a non-empty query set")]
    EmptyQuerySet,
    #[error("pair index {index} out of range for n = {n}")]
    IndexOutOfRange { index: PairIndex, n: u32 },
}

/// An unordered pair of distinct vertices, stored with `a < b`.
///
/// Pairs double as the vertices of the square graph `T1`: a pair that is a
/// non-edge of the base graph is a `T1` vertex, and the two non-edges of an
/// induced 4-cycle are its diagonals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexPair {
    a: u32,
    b: u32,
}

impl VertexPair {
    /// Builds a pair from two distinct vertices, normalizing the order.
    pub fn new(u: u32, v: u32) -> Result<Self, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(VertexPair {
            a: u.min(v),
            b: u.max(v),
        })
    }

    #[inline]
    pub fn a(self) -> u32 {
        self.a
    }

    #[inline]
    pub fn b(self) -> u32 {
        self.b
    }

    /// Lexicographic linear index of the pair among all pairs on `n`
    /// vertices: `(0,1) -> 0`, ..., `(n-2, n-1) -> C(n,2) - 1`.
    #[inline]
    pub fn index(self, n: u32) -> PairIndex {
        debug_assert!(self.b < n);
        let (a, b, n) = (self.a as u64, self.b as u64, n as u64);
        a * n - a * (a + 1) / 2 + (b - a - 1)
    }

    /// Checked variant of [`VertexPair::index`].
    pub fn checked_index(self, n: u32) -> Result<PairIndex, GraphError> {
        if self.b >= n {
            return Err(GraphError::OutOfRange {
                vertex: self.b,
                n: n as usize,
            });
        }
        Ok(self.index(n))
    }

    /// Inverse of [`VertexPair::index`].
    pub fn from_index(n: u32, index: PairIndex) -> Result<Self, GraphError> {
        let total = pair_count(n as usize);
        if index >= total {
            return Err(GraphError::IndexOutOfRange { index, n });
        }
        let nn = n as u64;
        // Solve a*n - a(a+1)/2 <= index for the largest such a. The float
        // estimate can be off by one near word boundaries; correct it.
        let est = {
            let disc = ((2 * nn - 1) as f64).powi(2) - 8.0 * index as f64;
            (((2 * nn - 1) as f64 - disc.max(0.0).sqrt()) / 2.0) as u64
        };
        let mut a = est.min(nn - 2);
        let base = |a: u64| a * nn - a * (a + 1) / 2;
        while base(a) > index {
            a -= 1;
        }
        while a + 1 <= nn - 2 && base(a + 1) <= index {
            a += 1;
        }
        let b = a + 1 + (index - base(a));
        Ok(VertexPair {
            a: a as u32,
            b: b as u32,
        })
    }
}

/// `C(n, 2)` as a `u64`.
#[inline]
pub fn pair_count(n: usize) -> u64 {
    let n = n as u64;
    n * n.saturating_sub(1) / 2
}

/// Immutable undirected simple graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    m: u64,
}

impl Graph {
    /// Builds a graph from an explicit edge list.
    ///
    /// Edges may be given in either orientation; duplicates (in any
    /// orientation), self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            let p = VertexPair::new(u, v)?;
            if p.b() as usize >= n {
                return Err(GraphError::OutOfRange {
                    vertex: p.b(),
                    n,
                });
            }
            if g.has_edge(p.a(), p.b()) {
                return Err(GraphError::DuplicateEdge(p.a(), p.b()));
            }
            g.set_edge(p.a(), p.b());
        }
        g.m = edges.len() as u64;
        Ok(g)
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        Graph {
            n,
            words,
            adj: vec![0u64; n * words],
            m: 0,
        }
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        Graph::empty(n).complement()
    }

    pub(crate) fn set_edge(&mut self, u: u32, v: u32) {
        let (u, v) = (u as usize, v as usize);
        self.adj[u * self.words + v / 64] |= 1u64 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1u64 << (u % 64);
    }

    pub(crate) fn finish_edge_count(&mut self) {
        self.m = self.adj.iter().map(|w| w.count_ones() as u64).sum::<u64>() / 2;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    #[inline]
    pub fn m(&self) -> u64 {
        self.m
    }

    /// Number of non-edges, i.e. vertices of the square graph `T1`.
    #[inline]
    pub fn non_edge_count(&self) -> u64 {
        pair_count(self.n) - self.m
    }

    #[inline]
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        debug_assert!((u as usize) < self.n && (v as usize) < self.n);
        self.adj[u as usize * self.words + v as usize / 64] >> (v % 64) & 1 == 1
    }

    /// Adjacency row of `u` as a bit vector of `ceil(n/64)` words.
    #[inline]
    pub fn row(&self, u: u32) -> &[u64] {
        let u = u as usize;
        &self.adj[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    pub fn words_per_row(&self) -> usize {
        self.words
    }

    pub fn degree(&self, u: u32) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Complement graph: `uv` is an edge iff it is not one here.
    pub fn complement(&self) -> Graph {
        let mut out = Graph::empty(self.n);
        for u in 0..self.n {
            let src = &self.adj[u * self.words..(u + 1) * self.words];
            let dst = &mut out.adj[u * self.words..(u + 1) * self.words];
            for w in 0..self.words {
                dst[w] = !src[w];
            }
            // clear the self-loop bit and the tail beyond n
            dst[u / 64] &= !(1u64 << (u % 64));
            let tail = self.n % 64;
            if tail != 0 {
                dst[self.words - 1] &= (1u64 << tail) - 1;
            }
        }
        out.m = pair_count(self.n) - self.m;
        out
    }

    /// Bit vector of the vertices adjacent to every vertex of `s`
    /// (members of `s` excluded).
    pub fn common_neighbors(&self, s: &[u32]) -> Result<Vec<u64>, GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptyQuerySet);
        }
        for &v in s {
            if v as usize >= self.n {
                return Err(GraphError::OutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        let mut acc = self.row(s[0]).to_vec();
        for &v in &s[1..] {
            for (a, r) in acc.iter_mut().zip(self.row(v)) {
                *a &= r;
            }
        }
        for &v in s {
            acc[v as usize / 64] &= !(1u64 << (v % 64));
        }
        Ok(acc)
    }

    /// Intersects the rows of `a` and `b` into `out`, clearing the bits of
    /// `a` and `b` themselves. Hot path of the square scan.
    #[inline]
    pub(crate) fn common_neighbors_pair_into(&self, a: u32, b: u32, out: &mut [u64]) {
        let ra = self.row(a);
        let rb = self.row(b);
        for w in 0..self.words {
            out[w] = ra[w] & rb[w];
        }
        out[a as usize / 64] &= !(1u64 << (a % 64));
        out[b as usize / 64] &= !(1u64 << (b % 64));
    }

    /// All non-edges, sorted by pair index.
    pub fn non_edges(&self) -> Vec<VertexPair> {
        let mut out = Vec::with_capacity(self.non_edge_count() as usize);
        for a in 0..self.n as u32 {
            for b in a + 1..self.n as u32 {
                if !self.has_edge(a, b) {
                    out.push(VertexPair { a, b });
                }
            }
        }
        out
    }

    /// All edges, sorted by pair index.
    pub fn edges(&self) -> Vec<VertexPair> {
        let mut out = Vec::with_capacity(self.m as usize);
        for a in 0..self.n as u32 {
            for b in a + 1..self.n as u32 {
                if self.has_edge(a, b) {
                    out.push(VertexPair { a, b });
                }
            }
        }
        out
    }

    /// Subgraph induced by `s`, plus the map from new ids back to `s[i]`.
    pub fn induced_subgraph(&self, s: &[u32]) -> Result<(Graph, Vec<u32>), GraphError> {
        let mut seen = vec![false; self.n];
        for &v in s {
            if v as usize >= self.n {
                return Err(GraphError::OutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
            if seen[v as usize] {
                return Err(GraphError::DuplicateVertex(v));
            }
            seen[v as usize] = true;
        }
        let mut g = Graph::empty(s.len());
        let mut m = 0u64;
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                if self.has_edge(s[i], s[j]) {
                    g.set_edge(i as u32, j as u32);
                    m += 1;
                }
            }
        }
        g.m = m;
        Ok((g, s.to_vec()))
    }

    /// Number of edges with both endpoints in `verts`.
    pub fn edge_count_within(&self, verts: &[u32]) -> u64 {
        let mut mask = vec![0u64; self.words];
        for &v in verts {
            mask[v as usize / 64] |= 1u64 << (v % 64);
        }
        let mut twice = 0u64;
        for &v in verts {
            let row = self.row(v);
            twice += row
                .iter()
                .zip(&mask)
                .map(|(r, m)| (r & m).count_ones() as u64)
                .sum::<u64>();
        }
        twice / 2
    }

    /// Vertices with no neighbours at all.
    pub fn isolated_vertex_count(&self) -> usize {
        (0..self.n as u32)
            .filter(|&u| self.row(u).iter().all(|&w| w == 0))
            .count()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.m)
    }
}

/// Iterates over the set bits of a bit vector.
pub fn bits_of(words: &[u64]) -> impl Iterator<Item = u32> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let tz = w.trailing_zeros();
                w &= w - 1;
                Some(wi as u32 * 64 + tz)
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: u32) -> Graph {
        let edges: Vec<(u32, u32)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n as usize, &edges).unwrap()
    }

    #[test]
    fn new_graph_four_cycle() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(g.m(), 4);
        assert!(g.has_edge(0, 1) && g.has_edge(3, 0));
        assert!(!g.has_edge(0, 2) && !g.has_edge(1, 3));
    }

    #[test]
    fn new_graph_empty() {
        let g = Graph::new(3, &[]).unwrap();
        assert_eq!(g.m(), 0);
    }

    #[test]
    fn new_graph_rejects_self_loop() {
        assert_eq!(
            Graph::new(4, &[(0, 1), (2, 2)]).unwrap_err(),
            GraphError::SelfLoop(2)
        );
    }

    #[test]
    fn new_graph_rejects_duplicates_and_range() {
        assert_eq!(
            Graph::new(4, &[(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
        assert!(matches!(
            Graph::new(4, &[(0, 4)]).unwrap_err(),
            GraphError::OutOfRange { vertex: 4, .. }
        ));
    }

    #[test]
    fn complement_of_empty_is_complete() {
        let g = Graph::empty(5).complement();
        assert_eq!(g.m(), 10);
        for a in 0..5u32 {
            for b in a + 1..5 {
                assert!(g.has_edge(a, b));
            }
        }
    }

    #[test]
    fn complement_of_four_cycle_is_perfect_matching() {
        let c = cycle(4).complement();
        assert_eq!(c.m(), 2);
        assert!(c.has_edge(0, 2) && c.has_edge(1, 3));
    }

    #[test]
    fn common_neighbors_complete_bipartite() {
        // parts {0,1} and {2,3,4}
        let g = Graph::new(
            5,
            &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        )
        .unwrap();
        let cn = g.common_neighbors(&[0, 1]).unwrap();
        assert_eq!(bits_of(&cn).collect::<Vec<_>>(), vec![2, 3, 4]);
    }

    #[test]
    fn common_neighbors_empty_graph_and_errors() {
        let g = Graph::empty(6);
        let cn = g.common_neighbors(&[2]).unwrap();
        assert_eq!(bits_of(&cn).count(), 0);
        assert_eq!(
            g.common_neighbors(&[]).unwrap_err(),
            GraphError::EmptyQuerySet
        );
    }

    #[test]
    fn common_neighbors_four_cycle() {
        let g = cycle(4);
        let cn = g.common_neighbors(&[0, 2]).unwrap();
        assert_eq!(bits_of(&cn).collect::<Vec<_>>(), vec![1, 3]);
    }

    #[test]
    fn non_edges_basic() {
        assert!(Graph::complete(4).non_edges().is_empty());
        let ne = cycle(4).non_edges();
        assert_eq!(ne.len(), 2);
        assert_eq!((ne[0].a(), ne[0].b()), (0, 2));
        assert_eq!((ne[1].a(), ne[1].b()), (1, 3));
        assert_eq!(cycle(5).non_edges().len(), 5);
    }

    #[test]
    fn induced_subgraph_cases() {
        let g = cycle(5);
        let all: Vec<u32> = (0..5).collect();
        let (h, _) = g.induced_subgraph(&all).unwrap();
        assert_eq!(h.m(), g.m());

        let k5 = Graph::complete(5);
        let (tri, map) = k5.induced_subgraph(&[4, 1, 2]).unwrap();
        assert_eq!(tri.m(), 3);
        assert_eq!(map, vec![4, 1, 2]);

        let (path, _) = g.induced_subgraph(&[0, 1, 2, 3]).unwrap();
        assert_eq!(path.m(), 3);
        assert!(path.has_edge(0, 1) && path.has_edge(1, 2) && path.has_edge(2, 3));
        assert!(!path.has_edge(0, 3));

        assert_eq!(
            g.induced_subgraph(&[0, 0]).unwrap_err(),
            GraphError::DuplicateVertex(0)
        );
        assert!(g.induced_subgraph(&[9]).is_err());
    }

    #[test]
    fn pair_index_examples() {
        let p = |a, b| VertexPair::new(a, b).unwrap();
        assert_eq!(p(0, 1).index(10), 0);
        assert_eq!(p(8, 9).index(10), pair_count(10) - 1);
        assert_eq!(p(1, 3).index(5), 5);
    }

    #[test]
    fn pair_index_round_trips_for_all_small_n() {
        for n in 2..=64u32 {
            let mut expect = 0u64;
            for a in 0..n {
                for b in a + 1..n {
                    let p = VertexPair::new(a, b).unwrap();
                    assert_eq!(p.index(n), expect);
                    assert_eq!(VertexPair::from_index(n, expect).unwrap(), p);
                    expect += 1;
                }
            }
            assert!(VertexPair::from_index(n, expect).is_err());
        }
    }

    #[test]
    fn edge_count_within_counts_induced_edges() {
        let g = cycle(5);
        assert_eq!(g.edge_count_within(&[0, 1, 2, 3]), 3);
        assert_eq!(g.edge_count_within(&[0, 2]), 0);
    }
}
