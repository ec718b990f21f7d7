//! Randomized cross-validation of the fast paths against independent
//! oracles. One failing instance is enough to fail the whole suite; the
//! offending graph is returned in edge-list form so it can be replayed
//! through `analyze`.
//!
//! Checks per instance:
//! - fast square enumeration vs the `O(n^4)` brute-force scan,
//! - union-find components vs BFS over the materialized `T1`,
//! - bonded-by-definition vs the outside-vertex characterization,
//! - the line-graph edge count law `|E(S)| = sum_v C(deg_T1(v), 2)`,
//! - neighbour symmetry and the handshake sum `sum_f deg(f) = 2 #squares`.

use crate::analysis::{
    bfs_t1_components, is_bonded_characterization, is_bonded_definition, t1_components,
};
use crate::edgelist::graph_to_string;
use crate::graph::{Graph, VertexPair};
use crate::sampler::{derive_trial_seed, sample_gnp, splitmix64};
use crate::squares::{
    build_t1, enumerate_squares, enumerate_squares_bruteforce, t1_neighbors,
};
use std::collections::BTreeSet;

#[derive(Debug, Clone)]
pub struct OracleConfig {
    pub n_max: usize,
    pub trials: u64,
    pub master_seed: u64,
}

/// Counters from a clean run.
#[derive(Debug, Default, Clone, Copy)]
pub struct OracleStats {
    pub instances: u64,
    pub squares_checked: u64,
    pub largest_instance: usize,
}

/// A failed check, carrying everything needed to reproduce it.
#[derive(Debug)]
pub struct OracleFailure {
    pub trial: u64,
    pub check: &'static str,
    pub detail: String,
    /// the instance in edge-list format
    pub edge_list: String,
}

impl std::fmt::Display for OracleFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "trial {}: check '{}' failed: {}",
            self.trial, self.check, self.detail
        )?;
        writeln!(f, "instance:")?;
        write!(f, "{}", self.edge_list)
    }
}

/// Deterministic instance parameters for a trial: `n` uniform-ish in
/// `[2, n_max]`, `p` cycling through `{0.1, ..., 0.9}`.
pub fn instance_params(config: &OracleConfig, trial: u64) -> (usize, f64) {
    let mut s = config.master_seed ^ trial.wrapping_mul(0x0123_4567_89AB_CDEF);
    let n = 2 + (splitmix64(&mut s) % (config.n_max as u64 - 1)) as usize;
    let p = (trial % 9 + 1) as f64 / 10.0;
    (n, p)
}

pub fn run_oracle_suite(config: &OracleConfig) -> Result<OracleStats, Box<OracleFailure>> {
    let mut stats = OracleStats::default();
    for trial in 0..config.trials {
        let (n, p) = instance_params(config, trial);
        let g = sample_gnp(n, p, derive_trial_seed(config.master_seed, trial))
            .expect("p is in range");
        check_instance(&g, trial)?;
        stats.instances += 1;
        stats.largest_instance = stats.largest_instance.max(n);
        stats.squares_checked += t1_components(&g).square_count();
    }
    Ok(stats)
}

fn fail(g: &Graph, trial: u64, check: &'static str, detail: String) -> Box<OracleFailure> {
    Box::new(OracleFailure {
        trial,
        check,
        detail,
        edge_list: graph_to_string(g),
    })
}

/// Runs every oracle check on one graph.
pub fn check_instance(g: &Graph, trial: u64) -> Result<(), Box<OracleFailure>> {
    let fast = enumerate_squares(g);
    let brute = enumerate_squares_bruteforce(g).expect("oracle instances stay under the guard");
    if fast != brute {
        return Err(fail(
            g,
            trial,
            "square-enumeration",
            format!("fast found {} squares, brute force {}", fast.len(), brute.len()),
        ));
    }

    let decomposition = t1_components(g);
    let t1 = build_t1(g, true).expect("oracle instances stay under the cap");
    let bfs = bfs_t1_components(&t1);
    if decomposition.labels() != bfs.as_slice() {
        return Err(fail(
            g,
            trial,
            "component-labels",
            "union-find and BFS labels disagree".into(),
        ));
    }

    for sq in &fast {
        let by_def = is_bonded_definition(sq, &fast);
        let by_char = is_bonded_characterization(g, sq);
        if by_def != by_char {
            return Err(fail(
                g,
                trial,
                "bonded-equivalence",
                format!(
                    "square {:?}: definition says {}, characterization says {}",
                    sq.vertices(),
                    by_def,
                    by_char
                ),
            ));
        }
    }

    let s = crate::squares::build_s(g).expect("oracle instances stay under the cap");
    let handshake: u64 = (0..t1.num_vertices() as u32)
        .map(|i| t1.degree(i) as u64)
        .sum();
    if handshake != 2 * fast.len() as u64 {
        return Err(fail(
            g,
            trial,
            "degree-handshake",
            format!("degree sum {} vs 2 * {} squares", handshake, fast.len()),
        ));
    }
    let line_law: u64 = (0..t1.num_vertices() as u32)
        .map(|i| {
            let d = t1.degree(i) as u64;
            d * d.saturating_sub(1) / 2
        })
        .sum();
    if line_law != s.num_edges() as u64 {
        return Err(fail(
            g,
            trial,
            "line-graph-law",
            format!("sum C(deg,2) = {} vs |E(S)| = {}", line_law, s.num_edges()),
        ));
    }

    let neighbor_sets: Vec<BTreeSet<VertexPair>> = t1
        .non_edges()
        .iter()
        .map(|&f| {
            t1_neighbors(g, f)
                .expect("non-edge by construction")
                .into_iter()
                .collect()
        })
        .collect();
    for (i, f) in t1.non_edges().iter().enumerate() {
        for f2 in &neighbor_sets[i] {
            let j = t1.index_of(*f2).expect("neighbours are non-edges") as usize;
            if !neighbor_sets[j].contains(f) {
                return Err(fail(
                    g,
                    trial,
                    "neighbor-symmetry",
                    format!("{f:?} lists {f2:?} but not conversely"),
                ));
            }
        }
    }
    Ok(())
}
