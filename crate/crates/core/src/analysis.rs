//! Component analysis of the square graph `T1`.
//!
//! The decomposition never materializes `T1` edges: a single square scan
//! feeds a union-find over non-edge ids, so memory stays linear in the
//! number of non-edges even where `T1` has tens of millions of edges.

use crate::graph::{bits_of, pair_count, Graph, VertexPair};
use crate::squares::{
    build_t1_with_cap, enumerate_squares, scan_squares, InducedSquare, SquareError, T1View,
};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum AnalysisError {
    #[error("graph is complete: T1 has no vertices, connectivity is undefined")]
    CompleteGraph,
    #[error("T1 vertex count {found} exceeds cap of {cap}")]
    CapExceeded { found: usize, cap: usize },
    #[error(transparent)]
    Square(#[from] SquareError),
}

struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
    }
}

/// Result of the union-find pass over the non-edges of a graph.
///
/// Components are numbered `0..num_components()` in order of their smallest
/// non-edge (by pair index), so ids are stable across runs. Isolated
/// non-edges count as components of size one.
pub struct ComponentDecomposition {
    non_edges: Vec<VertexPair>,
    labels: Vec<u32>,
    component_sizes: Vec<u32>,
    /// sorted vertex set per component, only stored for non-trivial ones
    supports: Vec<Option<Vec<u32>>>,
    square_count: u64,
    largest: usize,
    second_largest: usize,
    isolated_count: usize,
    n: usize,
}

impl ComponentDecomposition {
    pub fn num_non_edges(&self) -> usize {
        self.non_edges.len()
    }

    pub fn non_edges(&self) -> &[VertexPair] {
        &self.non_edges
    }

    /// Component id of the `i`-th non-edge (pair-index order).
    pub fn label(&self, i: usize) -> u32 {
        self.labels[i]
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn num_components(&self) -> usize {
        self.component_sizes.len()
    }

    pub fn component_size(&self, id: u32) -> usize {
        self.component_sizes[id as usize] as usize
    }

    pub fn num_nontrivial(&self) -> usize {
        self.component_sizes.iter().filter(|&&s| s > 1).count()
    }

    /// Vertices covered by the non-edges of a non-trivial component.
    pub fn support(&self, id: u32) -> Option<&[u32]> {
        self.supports[id as usize].as_deref()
    }

    /// Ids of non-trivial components whose support is all of `V`.
    pub fn full_support_components(&self) -> Vec<u32> {
        (0..self.num_components() as u32)
            .filter(|&id| self.support(id).is_some_and(|s| s.len() == self.n))
            .collect()
    }

    /// Number of induced squares seen by the scan.
    pub fn square_count(&self) -> u64 {
        self.square_count
    }

    /// Size of the largest component (isolated vertices count as size 1).
    pub fn largest(&self) -> usize {
        self.largest
    }

    /// Size of the second-largest component, 0 if there are fewer than two.
    pub fn second_largest(&self) -> usize {
        self.second_largest
    }

    /// Non-edges lying in no induced square.
    pub fn isolated_count(&self) -> usize {
        self.isolated_count
    }

    /// Sizes of non-trivial components, descending.
    pub fn nontrivial_sizes(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .component_sizes
            .iter()
            .filter(|&&s| s > 1)
            .map(|&s| s as usize)
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// Whether `T1` is connected. Errors on complete base graphs, where
    /// `T1` is empty; a single-vertex `T1` counts as connected.
    pub fn t1_connected(&self) -> Result<bool, AnalysisError> {
        if self.non_edges.is_empty() {
            return Err(AnalysisError::CompleteGraph);
        }
        Ok(self.num_components() == 1)
    }

    /// Whether `S` (the line graph of `T1`) is connected: at most one
    /// component of `T1` may be non-trivial. Graphs with at most one
    /// square are vacuously connected and flagged as such.
    pub fn s_connected(&self) -> SConnectivity {
        SConnectivity {
            connected: self.num_nontrivial() <= 1,
            vacuous: self.square_count <= 1,
        }
    }
}

/// `S`-connectivity verdict with a degeneracy marker.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SConnectivity {
    pub connected: bool,
    /// set when the graph has 0 or 1 squares, so connectivity is vacuous
    pub vacuous: bool,
}

/// Union-find decomposition of `T1` driven by the square scan.
pub fn t1_components(g: &Graph) -> ComponentDecomposition {
    let n = g.n() as u32;
    let non_edges = g.non_edges();
    let num = non_edges.len();
    let mut dense = vec![u32::MAX; pair_count(g.n()) as usize];
    for (i, p) in non_edges.iter().enumerate() {
        dense[p.index(n) as usize] = i as u32;
    }
    let mut uf = UnionFind::new(num);
    let mut square_count = 0u64;
    scan_squares(g, |f, f2| {
        square_count += 1;
        uf.union(
            dense[f.index(n) as usize],
            dense[f2.index(n) as usize],
        );
    });
    drop(dense);

    // compact component ids in order of first appearance
    let mut labels = vec![0u32; num];
    let mut id_of_root: Vec<u32> = vec![u32::MAX; num];
    let mut component_sizes: Vec<u32> = Vec::new();
    for i in 0..num {
        let root = uf.find(i as u32) as usize;
        if id_of_root[root] == u32::MAX {
            id_of_root[root] = component_sizes.len() as u32;
            component_sizes.push(0);
        }
        labels[i] = id_of_root[root];
        component_sizes[labels[i] as usize] += 1;
    }

    let mut support_bits: Vec<Option<Vec<u64>>> =
        vec![None; component_sizes.len()];
    for (i, p) in non_edges.iter().enumerate() {
        let id = labels[i] as usize;
        if component_sizes[id] <= 1 {
            continue;
        }
        let bits = support_bits[id]
            .get_or_insert_with(|| vec![0u64; (g.n()).div_ceil(64)]);
        bits[p.a() as usize / 64] |= 1u64 << (p.a() % 64);
        bits[p.b() as usize / 64] |= 1u64 << (p.b() % 64);
    }
    let supports: Vec<Option<Vec<u32>>> = support_bits
        .into_iter()
        .map(|o| o.map(|bits| bits_of(&bits).collect()))
        .collect();

    let mut largest = 0usize;
    let mut second = 0usize;
    for &s in &component_sizes {
        let s = s as usize;
        if s > largest {
            second = largest;
            largest = s;
        } else if s > second {
            second = s;
        }
    }
    let isolated_count = component_sizes.iter().filter(|&&s| s == 1).count();

    let d = ComponentDecomposition {
        non_edges,
        labels,
        component_sizes,
        supports,
        square_count,
        largest,
        second_largest: second,
        isolated_count,
        n: g.n(),
    };
    // structural facts about square components, checked on every build
    for id in 0..d.num_components() as u32 {
        if let Some(supp) = d.support(id) {
            assert!(supp.len() >= 4, "non-trivial component with support < 4");
            assert!(
                d.component_size(id) >= supp.len().div_ceil(2),
                "component smaller than half its support"
            );
        }
    }
    d
}

pub fn is_t1_connected(g: &Graph) -> Result<bool, AnalysisError> {
    t1_components(g).t1_connected()
}

pub fn is_s_connected(g: &Graph) -> SConnectivity {
    t1_components(g).s_connected()
}

pub fn second_largest_component_size(d: &ComponentDecomposition) -> usize {
    d.second_largest()
}

pub const DEFAULT_T1_VERTEX_CAP: usize = 40_000;

/// Whether every pair of `T1` vertices is adjacent or shares a `T1`
/// neighbour. Works on bit rows of the materialized `T1` adjacency with
/// early exit; errors on complete base graphs.
pub fn t1_diameter_at_most_two(g: &Graph) -> Result<bool, AnalysisError> {
    t1_diameter_at_most_two_with_cap(g, DEFAULT_T1_VERTEX_CAP)
}

pub fn t1_diameter_at_most_two_with_cap(
    g: &Graph,
    vertex_cap: usize,
) -> Result<bool, AnalysisError> {
    let n = g.n() as u32;
    let non_edges = g.non_edges();
    let nv = non_edges.len();
    if nv == 0 {
        return Err(AnalysisError::CompleteGraph);
    }
    if nv > vertex_cap {
        return Err(AnalysisError::CapExceeded {
            found: nv,
            cap: vertex_cap,
        });
    }
    let words = nv.div_ceil(64);
    let mut rows = vec![0u64; nv * words];
    let mut dense = vec![u32::MAX; pair_count(g.n()) as usize];
    for (i, p) in non_edges.iter().enumerate() {
        dense[p.index(n) as usize] = i as u32;
    }
    scan_squares(g, |f, f2| {
        let i = dense[f.index(n) as usize] as usize;
        let j = dense[f2.index(n) as usize] as usize;
        rows[i * words + j / 64] |= 1u64 << (j % 64);
        rows[j * words + i / 64] |= 1u64 << (i % 64);
    });
    for i in 0..nv {
        let ri = &rows[i * words..(i + 1) * words];
        for j in i + 1..nv {
            if ri[j / 64] >> (j % 64) & 1 == 1 {
                continue;
            }
            let rj = &rows[j * words..(j + 1) * words];
            if !ri.iter().zip(rj).any(|(a, b)| a & b != 0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Exact `T1` diameter, `Infinite` when disconnected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(u32),
    Infinite,
}

/// All-sources BFS over a materialized `T1`. Guarded by a vertex cap since
/// the cost is quadratic-plus in the number of non-edges.
pub fn t1_diameter(g: &Graph, vertex_cap: usize) -> Result<Diameter, AnalysisError> {
    let nv = g.non_edge_count() as usize;
    if nv > vertex_cap {
        return Err(AnalysisError::CapExceeded {
            found: nv,
            cap: vertex_cap,
        });
    }
    let t1 = build_t1_with_cap(g, true, crate::squares::DEFAULT_T1_EDGE_CAP)?;
    if t1.num_vertices() <= 1 {
        return Ok(Diameter::Finite(0));
    }
    let n = t1.num_vertices();
    let mut best = 0u32;
    let mut dist = vec![u32::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for src in 0..n as u32 {
        dist.iter_mut().for_each(|d| *d = u32::MAX);
        dist[src as usize] = 0;
        queue.clear();
        queue.push_back(src);
        let mut reached = 1usize;
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            for v in t1.neighbors(u) {
                if dist[v as usize] == u32::MAX {
                    dist[v as usize] = du + 1;
                    best = best.max(du + 1);
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        if reached < n {
            return Ok(Diameter::Infinite);
        }
    }
    Ok(Diameter::Finite(best))
}

/// Bonded test, definitional route: some other square shares exactly three
/// vertices with `sq`.
pub fn is_bonded_definition(sq: &InducedSquare, all_squares: &[InducedSquare]) -> bool {
    all_squares
        .iter()
        .any(|other| other != sq && sq.shared_vertices(other) == 3)
}

/// Bonded test, vertex route: some vertex outside the square is adjacent to
/// both endpoints of exactly one of the two diagonals.
pub fn is_bonded_characterization(g: &Graph, sq: &InducedSquare) -> bool {
    let w1 = g
        .common_neighbors(&[sq.diag1().a(), sq.diag1().b()])
        .expect("diagonal endpoints are in range");
    let w2 = g
        .common_neighbors(&[sq.diag2().a(), sq.diag2().b()])
        .expect("diagonal endpoints are in range");
    let mut any = 0u64;
    let verts = sq.vertices();
    for (wi, (a, b)) in w1.iter().zip(&w2).enumerate() {
        let mut x = a ^ b;
        for &v in &verts {
            if v as usize / 64 == wi {
                x &= !(1u64 << (v % 64));
            }
        }
        any |= x;
        if any != 0 {
            return true;
        }
    }
    false
}

/// Per-graph bonded-square summary.
#[derive(Debug)]
pub struct BondedReport {
    pub total_squares: u64,
    pub non_bonded: Vec<InducedSquare>,
    /// set when the graph has no squares at all, making `all_bonded` vacuous
    pub vacuous: bool,
}

impl BondedReport {
    pub fn all_bonded(&self) -> bool {
        self.non_bonded.is_empty()
    }
}

/// Applies the vertex characterization to every square.
pub fn bonded_report(g: &Graph) -> BondedReport {
    let squares = enumerate_squares(g);
    let non_bonded = squares
        .iter()
        .filter(|sq| !is_bonded_characterization(g, sq))
        .copied()
        .collect::<Vec<_>>();
    BondedReport {
        total_squares: squares.len() as u64,
        non_bonded,
        vacuous: squares.is_empty(),
    }
}

/// Counts non-bonded squares without materializing the square list.
pub fn count_non_bonded(g: &Graph) -> u64 {
    let mut count = 0u64;
    scan_squares(g, |f, f2| {
        let sq = InducedSquare::from_diagonals(f, f2);
        if !is_bonded_characterization(g, &sq) {
            count += 1;
        }
    });
    count
}

/// Checks `e(G[supp(C)]) >= 2 |supp(C)| - 4` for every non-trivial
/// component; returns the ids of violating components (expected empty).
pub fn check_extremal_bound(g: &Graph, d: &ComponentDecomposition) -> Vec<u32> {
    let mut violations = Vec::new();
    for id in 0..d.num_components() as u32 {
        if let Some(supp) = d.support(id) {
            let edges = g.edge_count_within(supp);
            if edges < 2 * supp.len() as u64 - 4 {
                violations.push(id);
            }
        }
    }
    violations
}

/// Counts non-edges whose endpoints have no common neighbour at all.
///
/// Such non-edges are isolated in `T1` for the strongest possible reason;
/// their count is the statistic behind
/// [`crate::experiments::expected_isolated_t1`].
pub fn count_nonedges_without_common_neighbor(g: &Graph) -> u64 {
    let n = g.n() as u32;
    let mut cn = vec![0u64; g.words_per_row()];
    let mut count = 0u64;
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            g.common_neighbors_pair_into(a, b, &mut cn);
            if cn.iter().all(|&w| w == 0) {
                count += 1;
            }
        }
    }
    count
}

/// Independent component oracle: BFS over a materialized `T1` view.
/// Returns per-non-edge labels numbered in order of first appearance, the
/// same convention as [`t1_components`], so label vectors compare equal.
pub fn bfs_t1_components(t1: &T1View<'_>) -> Vec<u32> {
    let n = t1.num_vertices();
    let mut labels = vec![u32::MAX; n];
    let mut next = 0u32;
    let mut queue = std::collections::VecDeque::new();
    for start in 0..n as u32 {
        if labels[start as usize] != u32::MAX {
            continue;
        }
        labels[start as usize] = next;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for v in t1.neighbors(u) {
                if labels[v as usize] == u32::MAX {
                    labels[v as usize] = next;
                    queue.push_back(v);
                }
            }
        }
        next += 1;
    }
    labels
}

/// Stable JSON summary of one graph's square-graph analysis.
#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub n: usize,
    pub m: u64,
    pub num_squares: u64,
    pub num_components: usize,
    pub num_nontrivial: usize,
    pub largest: usize,
    pub second_largest: usize,
    pub isolated_count: usize,
    pub full_support_component_ids: Vec<u32>,
    pub t1_connected: bool,
    pub s_connected: bool,
    pub all_bonded: bool,
    pub non_bonded_count: u64,
    pub extremal_violations: Vec<u32>,
}

pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Runs the full analysis bundle. Complete graphs report `T1` as vacuously
/// connected (there is nothing to disconnect). Both passes are scans, so
/// memory stays linear in the number of non-edges.
pub fn analyze(g: &Graph) -> AnalysisReport {
    let d = t1_components(g);
    let non_bonded = count_non_bonded(g);
    AnalysisReport {
        schema_version: REPORT_SCHEMA_VERSION,
        n: g.n(),
        m: g.m(),
        num_squares: d.square_count(),
        num_components: d.num_components(),
        num_nontrivial: d.num_nontrivial(),
        largest: d.largest(),
        second_largest: d.second_largest(),
        isolated_count: d.isolated_count(),
        full_support_component_ids: d.full_support_components(),
        t1_connected: d.t1_connected().unwrap_or(true),
        s_connected: d.s_connected().connected,
        all_bonded: non_bonded == 0,
        non_bonded_count: non_bonded,
        extremal_violations: check_extremal_bound(g, &d),
    }
}
