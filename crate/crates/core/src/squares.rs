//! Induced squares and the two square graphs.
//!
//! An induced square is a 4-set of vertices inducing exactly a 4-cycle: two
//! disjoint non-adjacent pairs (the diagonals) with all four cross pairs
//! edges. `T1` is the graph on the non-edges of the base graph, two being
//! adjacent iff their union induces a square; `S` is the line graph of `T1`,
//! i.e. the graph on the squares themselves, adjacent iff they share a
//! diagonal.
//!
//! Enumeration walks the non-edges `f = {a, b}` and scans the common
//! neighbourhood `N(a) ∩ N(b)` for non-adjacent pairs; the total cost is
//! `Σ_f C(|N(a) ∩ N(b)|, 2)` over non-edges `f`, which in practice is
//! dominated by the word-parallel row intersections.

use crate::graph::{bits_of, pair_count, Graph, PairIndex, VertexPair};
use thiserror::Error;

pub const BRUTE_FORCE_MAX_N: usize = 64;

/// Default guard on materialized `T1` edge lists (the experiments keep
/// component analysis scan-based precisely to avoid this allocation).
pub const DEFAULT_T1_EDGE_CAP: usize = 200_000_000;

/// Default guard on explicit square lists.
pub const DEFAULT_SQUARE_CAP: usize = 100_000_000;

#[derive(Debug, Error, PartialEq)]
pub enum SquareError {
    #[error("brute-force enumeration limited to n <= {max}, got n = {n}")]
    TooLarge { n: usize, max: usize },
    #[error("pair ({0}, {1}) is an edge, not a T1 vertex")]
    NotANonEdge(u32, u32),
    #[error("T1 edge count exceeds cap of {cap}")]
    EdgeCapExceeded { cap: usize },
    #[error("square count exceeds cap of {cap}")]
    SquareCapExceeded { cap: usize },
}

/// A canonical induced square: identified by its diagonal pair, with
/// `diag1` before `diag2` in pair-index order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InducedSquare {
    diag1: VertexPair,
    diag2: VertexPair,
}

impl InducedSquare {
    pub(crate) fn from_diagonals(d1: VertexPair, d2: VertexPair) -> Self {
        debug_assert!(d1 < d2);
        InducedSquare {
            diag1: d1,
            diag2: d2,
        }
    }

    pub fn diag1(&self) -> VertexPair {
        self.diag1
    }

    pub fn diag2(&self) -> VertexPair {
        self.diag2
    }

    /// The four vertices in ascending order.
    pub fn vertices(&self) -> [u32; 4] {
        let mut v = [
            self.diag1.a(),
            self.diag1.b(),
            self.diag2.a(),
            self.diag2.b(),
        ];
        v.sort_unstable();
        v
    }

    pub fn contains_vertex(&self, v: u32) -> bool {
        self.vertices().contains(&v)
    }

    /// Number of vertices shared with another square.
    pub fn shared_vertices(&self, other: &InducedSquare) -> usize {
        let a = self.vertices();
        other.vertices().iter().filter(|v| a.contains(v)).count()
    }
}

/// Visits every induced square exactly once as `(f, f')` with
/// `index(f) < index(f')`. Non-edges `f` are visited in pair-index order
/// and, for fixed `f`, partners in lexicographic order, so collected output
/// is already canonically sorted.
pub(crate) fn scan_squares<F: FnMut(VertexPair, VertexPair)>(g: &Graph, mut visit: F) {
    let n = g.n() as u32;
    let mut cn = vec![0u64; g.words_per_row()];
    let mut members: Vec<u32> = Vec::with_capacity(n as usize);
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            g.common_neighbors_pair_into(a, b, &mut cn);
            members.clear();
            members.extend(bits_of(&cn));
            if members.len() < 2 {
                continue;
            }
            let f = VertexPair::new(a, b).unwrap();
            for (i, &c) in members.iter().enumerate() {
                for &d in &members[i + 1..] {
                    if g.has_edge(c, d) {
                        continue;
                    }
                    // dedup: count the square only from its smaller diagonal
                    if c > a || (c == a && d > b) {
                        visit(f, VertexPair::new(c, d).unwrap());
                    }
                }
            }
        }
    }
}

/// Every induced square, canonically ordered by diagonal pair.
pub fn enumerate_squares(g: &Graph) -> Vec<InducedSquare> {
    let mut out = Vec::new();
    scan_squares(g, |f, f2| out.push(InducedSquare::from_diagonals(f, f2)));
    out
}

/// Number of induced squares without materializing them.
pub fn count_squares(g: &Graph) -> u64 {
    let mut count = 0u64;
    scan_squares(g, |_, _| count += 1);
    count
}

/// Independent oracle: tests the induced-4-cycle condition on every 4-set.
/// Guarded to `n <= 64` since the scan is `O(n^4)`.
pub fn enumerate_squares_bruteforce(g: &Graph) -> Result<Vec<InducedSquare>, SquareError> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(SquareError::TooLarge {
            n,
            max: BRUTE_FORCE_MAX_N,
        });
    }
    let n = n as u32;
    let mut out = Vec::new();
    for p in 0..n {
        for q in p + 1..n {
            for r in q + 1..n {
                for s in r + 1..n {
                    if let Some(sq) = square_on_four(g, [p, q, r, s]) {
                        out.push(sq);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// If the 4-set induces a square, returns it in canonical form.
fn square_on_four(g: &Graph, v: [u32; 4]) -> Option<InducedSquare> {
    // an induced square has exactly two non-edges among the six pairs,
    // and they are disjoint
    let mut non: Vec<(u32, u32)> = Vec::with_capacity(3);
    for i in 0..4 {
        for j in i + 1..4 {
            if !g.has_edge(v[i], v[j]) {
                if non.len() == 2 {
                    return None;
                }
                non.push((v[i], v[j]));
            }
        }
    }
    if non.len() != 2 {
        return None;
    }
    let (x, y) = (non[0], non[1]);
    if x.0 == y.0 || x.0 == y.1 || x.1 == y.0 || x.1 == y.1 {
        return None;
    }
    let d1 = VertexPair::new(x.0, x.1).unwrap();
    let d2 = VertexPair::new(y.0, y.1).unwrap();
    let n = g.n() as u32;
    Some(if d1.index(n) < d2.index(n) {
        InducedSquare::from_diagonals(d1, d2)
    } else {
        InducedSquare::from_diagonals(d2, d1)
    })
}

/// `T1` neighbours of the non-edge `f`: all non-edges `f'` such that
/// `f ∪ f'` induces a square.
pub fn t1_neighbors(g: &Graph, f: VertexPair) -> Result<Vec<VertexPair>, SquareError> {
    if g.has_edge(f.a(), f.b()) {
        return Err(SquareError::NotANonEdge(f.a(), f.b()));
    }
    let mut cn = vec![0u64; g.words_per_row()];
    g.common_neighbors_pair_into(f.a(), f.b(), &mut cn);
    let members: Vec<u32> = bits_of(&cn).collect();
    let mut out = Vec::new();
    for (i, &c) in members.iter().enumerate() {
        for &d in &members[i + 1..] {
            if !g.has_edge(c, d) {
                out.push(VertexPair::new(c, d).unwrap());
            }
        }
    }
    Ok(out)
}

/// The square graph `T1` over a base graph: vertices are the non-edges,
/// indexed densely in pair-index order.
#[derive(Debug)]
pub struct T1View<'g> {
    base: &'g Graph,
    non_edges: Vec<VertexPair>,
    /// pair index -> dense T1 vertex id, u32::MAX where the pair is an edge
    index_of: Vec<u32>,
    adjacency: Option<Vec<Vec<u32>>>,
    num_edges: u64,
}

impl<'g> T1View<'g> {
    pub fn num_vertices(&self) -> usize {
        self.non_edges.len()
    }

    /// The non-edge behind dense id `i`.
    pub fn non_edge(&self, i: u32) -> VertexPair {
        self.non_edges[i as usize]
    }

    pub fn non_edges(&self) -> &[VertexPair] {
        &self.non_edges
    }

    /// Dense id of a non-edge, if it is one.
    pub fn index_of(&self, p: VertexPair) -> Option<u32> {
        let idx = self.index_of[p.index(self.base.n() as u32) as usize];
        (idx != u32::MAX).then_some(idx)
    }

    /// Total number of `T1` edges (available on materialized views).
    pub fn num_edges(&self) -> Option<u64> {
        self.adjacency.as_ref().map(|_| self.num_edges)
    }

    pub fn is_materialized(&self) -> bool {
        self.adjacency.is_some()
    }

    /// Neighbour ids of vertex `i`: a slice view when materialized,
    /// otherwise computed on demand.
    pub fn neighbors(&self, i: u32) -> Vec<u32> {
        match &self.adjacency {
            Some(adj) => adj[i as usize].clone(),
            None => t1_neighbors(self.base, self.non_edge(i))
                .expect("stored pair is a non-edge")
                .into_iter()
                .map(|p| self.index_of(p).expect("square partner is a non-edge"))
                .collect(),
        }
    }

    pub fn degree(&self, i: u32) -> usize {
        match &self.adjacency {
            Some(adj) => adj[i as usize].len(),
            None => self.neighbors(i).len(),
        }
    }
}

pub fn build_t1(g: &Graph, materialize: bool) -> Result<T1View<'_>, SquareError> {
    build_t1_with_cap(g, materialize, DEFAULT_T1_EDGE_CAP)
}

/// Builds the `T1` view; with `materialize` the full adjacency lists are
/// stored, guarded by `edge_cap`.
pub fn build_t1_with_cap(
    g: &Graph,
    materialize: bool,
    edge_cap: usize,
) -> Result<T1View<'_>, SquareError> {
    let n = g.n() as u32;
    let mut index_of = vec![u32::MAX; pair_count(g.n()) as usize];
    let non_edges = g.non_edges();
    for (i, p) in non_edges.iter().enumerate() {
        index_of[p.index(n) as usize] = i as u32;
    }
    let mut view = T1View {
        base: g,
        non_edges,
        index_of,
        adjacency: None,
        num_edges: 0,
    };
    if materialize {
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); view.non_edges.len()];
        let mut count = 0usize;
        let mut overflow = false;
        scan_squares(g, |f, f2| {
            if overflow {
                return;
            }
            count += 1;
            if count > edge_cap {
                overflow = true;
                return;
            }
            let i = view.index_of[f.index(n) as usize];
            let j = view.index_of[f2.index(n) as usize];
            adj[i as usize].push(j);
            adj[j as usize].push(i);
        });
        if overflow {
            return Err(SquareError::EdgeCapExceeded { cap: edge_cap });
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        view.num_edges = count as u64;
        view.adjacency = Some(adj);
    }
    Ok(view)
}

/// The square graph `S`: one vertex per induced square, edges between
/// squares sharing a diagonal. This is the line graph of `T1`.
#[derive(Debug)]
pub struct SGraph {
    pub squares: Vec<InducedSquare>,
    /// index pairs `(i, j)` with `i < j`, sorted
    pub edges: Vec<(u32, u32)>,
}

impl SGraph {
    pub fn num_vertices(&self) -> usize {
        self.squares.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }
}

pub fn build_s(g: &Graph) -> Result<SGraph, SquareError> {
    build_s_with_cap(g, DEFAULT_SQUARE_CAP)
}

pub fn build_s_with_cap(g: &Graph, square_cap: usize) -> Result<SGraph, SquareError> {
    let squares = enumerate_squares(g);
    if squares.len() > square_cap {
        return Err(SquareError::SquareCapExceeded { cap: square_cap });
    }
    let n = g.n() as u32;
    // bucket squares by diagonal; each unordered square pair shares at most
    // one diagonal, so no dedup is needed
    let mut by_diag: std::collections::HashMap<PairIndex, Vec<u32>> =
        std::collections::HashMap::new();
    for (i, sq) in squares.iter().enumerate() {
        by_diag
            .entry(sq.diag1().index(n))
            .or_default()
            .push(i as u32);
        by_diag
            .entry(sq.diag2().index(n))
            .or_default()
            .push(i as u32);
    }
    let mut edges = Vec::new();
    for bucket in by_diag.values() {
        for (i, &x) in bucket.iter().enumerate() {
            for &y in &bucket[i + 1..] {
                edges.push((x.min(y), x.max(y)));
            }
        }
    }
    edges.sort_unstable();
    Ok(SGraph { squares, edges })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: u32) -> Graph {
        Graph::new(
            n as usize,
            &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>(),
        )
        .unwrap()
    }

    fn complete_bipartite(a: u32, b: u32) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::new((a + b) as usize, &edges).unwrap()
    }

    #[test]
    fn four_cycle_has_one_square() {
        let sq = enumerate_squares(&cycle(4));
        assert_eq!(sq.len(), 1);
        assert_eq!((sq[0].diag1().a(), sq[0].diag1().b()), (0, 2));
        assert_eq!((sq[0].diag2().a(), sq[0].diag2().b()), (1, 3));
        assert_eq!(sq[0].vertices(), [0, 1, 2, 3]);
    }

    #[test]
    fn k4_and_c5_have_no_squares() {
        assert!(enumerate_squares(&Graph::complete(4)).is_empty());
        assert!(enumerate_squares(&cycle(5)).is_empty());
    }

    #[test]
    fn k23_has_three_squares() {
        assert_eq!(enumerate_squares(&complete_bipartite(2, 3)).len(), 3);
    }

    #[test]
    fn brute_force_agrees_on_named_cases() {
        for g in [cycle(4), Graph::complete(4), complete_bipartite(2, 3)] {
            assert_eq!(
                enumerate_squares(&g),
                enumerate_squares_bruteforce(&g).unwrap()
            );
        }
        assert!(enumerate_squares_bruteforce(&Graph::empty(10))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn brute_force_guard() {
        assert_eq!(
            enumerate_squares_bruteforce(&Graph::empty(65)).unwrap_err(),
            SquareError::TooLarge { n: 65, max: 64 }
        );
    }

    #[test]
    fn t1_neighbors_cases() {
        let c4 = cycle(4);
        let f = VertexPair::new(0, 2).unwrap();
        assert_eq!(
            t1_neighbors(&c4, f).unwrap(),
            vec![VertexPair::new(1, 3).unwrap()]
        );

        let k23 = complete_bipartite(2, 3);
        let xs = VertexPair::new(0, 1).unwrap();
        assert_eq!(t1_neighbors(&k23, xs).unwrap().len(), 3);

        let c5 = cycle(5);
        for f in c5.non_edges() {
            assert!(t1_neighbors(&c5, f).unwrap().is_empty());
        }

        assert_eq!(
            t1_neighbors(&c4, VertexPair::new(0, 1).unwrap()).unwrap_err(),
            SquareError::NotANonEdge(0, 1)
        );
    }

    #[test]
    fn t1_of_k24_is_a_star() {
        let g = complete_bipartite(2, 4);
        let t1 = build_t1(&g, true).unwrap();
        assert_eq!(t1.num_vertices(), 7);
        assert_eq!(t1.num_edges(), Some(6));
        let center = t1.index_of(VertexPair::new(0, 1).unwrap()).unwrap();
        assert_eq!(t1.degree(center), 6);
        for i in 0..7 {
            if i != center {
                assert_eq!(t1.neighbors(i), vec![center]);
            }
        }
    }

    #[test]
    fn t1_of_empty_graph_is_edgeless() {
        let g = Graph::empty(6);
        let t1 = build_t1(&g, true).unwrap();
        assert_eq!(t1.num_vertices(), 15);
        assert_eq!(t1.num_edges(), Some(0));
    }

    #[test]
    fn t1_of_four_cycle() {
        let c4 = cycle(4);
        let t1 = build_t1(&c4, true).unwrap();
        assert_eq!(t1.num_vertices(), 2);
        assert_eq!(t1.num_edges(), Some(1));
    }

    #[test]
    fn t1_edge_cap_is_enforced() {
        let g = complete_bipartite(2, 4);
        assert_eq!(
            build_t1_with_cap(&g, true, 5).unwrap_err(),
            SquareError::EdgeCapExceeded { cap: 5 }
        );
    }

    #[test]
    fn on_demand_neighbors_match_materialized() {
        let g = complete_bipartite(3, 3);
        let lazy = build_t1(&g, false).unwrap();
        let full = build_t1(&g, true).unwrap();
        for i in 0..lazy.num_vertices() as u32 {
            let mut a = lazy.neighbors(i);
            a.sort_unstable();
            assert_eq!(a, full.neighbors(i));
        }
    }

    #[test]
    fn s_graph_cases() {
        let s = build_s(&cycle(4)).unwrap();
        assert_eq!((s.num_vertices(), s.num_edges()), (1, 0));

        // all three squares of K_{2,3} share the diagonal {0,1}
        let s = build_s(&complete_bipartite(2, 3)).unwrap();
        assert_eq!((s.num_vertices(), s.num_edges()), (3, 3));

        // two vertex-disjoint 4-cycles
        let g = Graph::new(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 3),
                (4, 5),
                (5, 6),
                (6, 7),
                (4, 7),
            ],
        )
        .unwrap();
        let s = build_s(&g).unwrap();
        assert_eq!((s.num_vertices(), s.num_edges()), (2, 0));
    }

    #[test]
    fn s_square_cap_is_enforced() {
        assert_eq!(
            build_s_with_cap(&complete_bipartite(2, 3), 2).unwrap_err(),
            SquareError::SquareCapExceeded { cap: 2 }
        );
    }
}
