//! Monte Carlo harness over `G(n, p)` plus the closed-form expectation
//! calculators used as regression targets.
//!
//! Every trial is a pure function of `(master seed, trial index)`; trials
//! run concurrently and the collected records are ordered by
//! `(p, trial)`, so sweep output is byte-identical across reruns and
//! worker counts.

use crate::analysis::{
    count_non_bonded, t1_components, t1_diameter, t1_diameter_at_most_two_with_cap,
    AnalysisError, Diameter,
};
use crate::graph::pair_count;
use crate::sampler::{derive_trial_seed, sample_gnp, SampleError};
use crate::squares::DEFAULT_T1_EDGE_CAP;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("threshold probability {p} outside [0, 1] (c = {c}, n = {n})")]
    OutOfRange { c: f64, n: usize, p: f64 },
    #[error("invalid experiment configuration: {0}")]
    InvalidConfig(String),
    #[error("bisection bracket invalid: freq({c_low}) = {f_low}, freq({c_high}) = {f_high}, need f_low < 1/2 < f_high")]
    BracketInvalid {
        c_low: f64,
        c_high: f64,
        f_low: f64,
        f_high: f64,
    },
    #[error(transparent)]
    Sample(#[from] SampleError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

/// Expected number of non-edges whose endpoints share no common neighbour:
/// `C(n,2) (1-p) (1-p^2)^(n-2)`, evaluated in log space.
///
/// Each such non-edge is an isolated `T1` vertex (it cannot lie in any
/// square), which makes this the classic obstruction count for `T1`
/// connectivity. Note it undercounts all isolated `T1` vertices: a
/// non-edge whose common neighbourhood is a non-empty clique is also
/// square-free but not counted here.
pub fn expected_isolated_t1(n: usize, p: f64) -> f64 {
    assert!(n >= 2, "needs at least two vertices");
    if p >= 1.0 {
        return 0.0;
    }
    if p == 0.0 {
        return pair_count(n) as f64;
    }
    let ln = (pair_count(n) as f64).ln() + (-p).ln_1p() + (n as f64 - 2.0) * (-p * p).ln_1p();
    ln.exp()
}

/// Expected number of induced squares sharing no three vertices with any
/// other square: `C(n,4) 3 p^4 (1-p)^2 (1 - 2p^2(1-p^2))^(n-4)`, evaluated
/// in log space. The per-outside-vertex factor is exact, so the Monte
/// Carlo mean tracks this formula directly.
pub fn expected_nonbonded_squares(n: usize, p: f64) -> f64 {
    assert!(n >= 4, "needs at least four vertices");
    if p <= 0.0 || p >= 1.0 {
        return 0.0;
    }
    let nf = n as f64;
    let ln_c4 = nf.ln() + (nf - 1.0).ln() + (nf - 2.0).ln() + (nf - 3.0).ln() - 24f64.ln();
    let p2 = p * p;
    let ln = ln_c4
        + 3f64.ln()
        + 4.0 * p.ln()
        + 2.0 * (-p).ln_1p()
        + (nf - 4.0) * (-2.0 * p2 * (1.0 - p2)).ln_1p();
    ln.exp()
}

/// Edge probability at scaling constant `c`: `c * sqrt(ln n / n)`
/// (natural log). Errors when the result leaves `[0, 1]`.
pub fn threshold_p(c: f64, n: usize) -> Result<f64, ExperimentError> {
    let p = c * ((n as f64).ln() / n as f64).sqrt();
    if !(0.0..=1.0).contains(&p) {
        return Err(ExperimentError::OutOfRange { c, n, p });
    }
    Ok(p)
}

/// Per-trial measurements. Names match the CSV columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Metric {
    NumSquares,
    Largest,
    SecondLargest,
    Isolated,
    T1Connected,
    SConnected,
    NonBonded,
    DiamLe2,
    T1Diameter,
}

impl Metric {
    pub const ALL: [Metric; 9] = [
        Metric::NumSquares,
        Metric::Largest,
        Metric::SecondLargest,
        Metric::Isolated,
        Metric::T1Connected,
        Metric::SConnected,
        Metric::NonBonded,
        Metric::DiamLe2,
        Metric::T1Diameter,
    ];

    /// Metrics with a column in the raw CSV schema, in column order.
    pub const CSV_ORDER: [Metric; 8] = [
        Metric::NumSquares,
        Metric::Largest,
        Metric::SecondLargest,
        Metric::Isolated,
        Metric::T1Connected,
        Metric::SConnected,
        Metric::NonBonded,
        Metric::DiamLe2,
    ];

    pub fn csv_name(self) -> &'static str {
        match self {
            Metric::NumSquares => "num_squares",
            Metric::Largest => "largest",
            Metric::SecondLargest => "second_largest",
            Metric::Isolated => "isolated",
            Metric::T1Connected => "t1_connected",
            Metric::SConnected => "s_connected",
            Metric::NonBonded => "non_bonded",
            Metric::DiamLe2 => "diam_le2",
            Metric::T1Diameter => "t1_diameter",
        }
    }

    pub fn parse(name: &str) -> Option<Metric> {
        Metric::ALL.into_iter().find(|m| m.csv_name() == name)
    }

    pub fn is_boolean(self) -> bool {
        matches!(
            self,
            Metric::T1Connected | Metric::SConnected | Metric::DiamLe2
        )
    }

    fn needs_decomposition(self) -> bool {
        matches!(
            self,
            Metric::NumSquares
                | Metric::Largest
                | Metric::SecondLargest
                | Metric::Isolated
                | Metric::T1Connected
                | Metric::SConnected
        )
    }
}

pub type MetricSet = BTreeSet<Metric>;

pub fn decomposition_metrics() -> MetricSet {
    [
        Metric::NumSquares,
        Metric::Largest,
        Metric::SecondLargest,
        Metric::Isolated,
        Metric::T1Connected,
        Metric::SConnected,
    ]
    .into_iter()
    .collect()
}

/// Size guards applied inside trials.
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    /// maximum number of T1 vertices for the diameter metrics
    pub t1_vertex_cap: usize,
    /// maximum number of materialized T1 edges
    pub t1_edge_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            t1_vertex_cap: crate::analysis::DEFAULT_T1_VERTEX_CAP,
            t1_edge_cap: DEFAULT_T1_EDGE_CAP,
        }
    }
}

/// One observation. Unmeasured metrics stay `None` and serialize as empty
/// CSV cells / JSON nulls. `seed` is the master seed; together with
/// `trial` it pins the exact graph.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct TrialRecord {
    pub n: usize,
    pub p: f64,
    pub c: Option<f64>,
    pub trial: u64,
    pub seed: u64,
    pub num_edges: u64,
    pub num_non_edges: u64,
    pub num_squares: Option<u64>,
    pub num_components: Option<usize>,
    pub num_nontrivial: Option<usize>,
    pub largest: Option<usize>,
    pub second_largest: Option<usize>,
    pub isolated: Option<usize>,
    pub t1_connected: Option<bool>,
    pub s_connected: Option<bool>,
    pub non_bonded: Option<u64>,
    pub diam_le2: Option<bool>,
    /// exact T1 diameter; -1 encodes a disconnected T1. No CSV column.
    pub t1_diameter: Option<i64>,
}

/// Samples one graph and computes the requested metrics.
pub fn run_trial(
    n: usize,
    p: f64,
    c: Option<f64>,
    master_seed: u64,
    trial: u64,
    metrics: &MetricSet,
    caps: Caps,
) -> Result<TrialRecord, ExperimentError> {
    let g = sample_gnp(n, p, derive_trial_seed(master_seed, trial))?;
    let mut rec = TrialRecord {
        n,
        p,
        c,
        trial,
        seed: master_seed,
        num_edges: g.m(),
        num_non_edges: g.non_edge_count(),
        num_squares: None,
        num_components: None,
        num_nontrivial: None,
        largest: None,
        second_largest: None,
        isolated: None,
        t1_connected: None,
        s_connected: None,
        non_bonded: None,
        diam_le2: None,
        t1_diameter: None,
    };
    if metrics.iter().any(|m| m.needs_decomposition()) {
        let d = t1_components(&g);
        rec.num_components = Some(d.num_components());
        rec.num_nontrivial = Some(d.num_nontrivial());
        if metrics.contains(&Metric::NumSquares) {
            rec.num_squares = Some(d.square_count());
        }
        if metrics.contains(&Metric::Largest) {
            rec.largest = Some(d.largest());
        }
        if metrics.contains(&Metric::SecondLargest) {
            rec.second_largest = Some(d.second_largest());
        }
        if metrics.contains(&Metric::Isolated) {
            rec.isolated = Some(d.isolated_count());
        }
        if metrics.contains(&Metric::T1Connected) {
            // a complete sample has an empty T1; record it as vacuously
            // connected rather than aborting the sweep
            rec.t1_connected = Some(d.t1_connected().unwrap_or(true));
        }
        if metrics.contains(&Metric::SConnected) {
            rec.s_connected = Some(d.s_connected().connected);
        }
    }
    if metrics.contains(&Metric::NonBonded) {
        rec.non_bonded = Some(count_non_bonded(&g));
    }
    if metrics.contains(&Metric::DiamLe2) {
        match t1_diameter_at_most_two_with_cap(&g, caps.t1_vertex_cap) {
            Ok(v) => rec.diam_le2 = Some(v),
            Err(AnalysisError::CompleteGraph) => rec.diam_le2 = Some(true),
            Err(e) => return Err(e.into()),
        }
    }
    if metrics.contains(&Metric::T1Diameter) {
        match t1_diameter(&g, caps.t1_vertex_cap) {
            Ok(Diameter::Finite(d)) => rec.t1_diameter = Some(d as i64),
            Ok(Diameter::Infinite) => rec.t1_diameter = Some(-1),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(rec)
}

/// Edge-probability grid of a sweep: explicit values, or scaling constants
/// with `p = c sqrt(ln n / n)`.
#[derive(Debug, Clone)]
pub enum PSpec {
    Explicit(Vec<f64>),
    Scaled(Vec<f64>),
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub n: usize,
    pub p_spec: PSpec,
    pub trials: u64,
    pub master_seed: u64,
    pub metrics: MetricSet,
    pub caps: Caps,
    pub keep_raw: bool,
}

/// Per-`p` aggregate: frequencies for boolean metrics, mean and sample
/// standard deviation for numeric ones.
#[derive(Debug, Clone)]
pub struct AggregateRow {
    pub n: usize,
    pub p: f64,
    pub c: Option<f64>,
    pub trials: u64,
    pub freqs: Vec<(Metric, f64)>,
    pub means: Vec<(Metric, f64, f64)>,
}

impl AggregateRow {
    pub fn freq(&self, m: Metric) -> Option<f64> {
        self.freqs.iter().find(|(k, _)| *k == m).map(|(_, v)| *v)
    }

    pub fn mean(&self, m: Metric) -> Option<f64> {
        self.means
            .iter()
            .find(|(k, _, _)| *k == m)
            .map(|(_, v, _)| *v)
    }
}

#[derive(Debug)]
pub struct SweepTable {
    pub config_metrics: MetricSet,
    pub aggregates: Vec<AggregateRow>,
    /// retained only when the config asks for it
    pub raw: Vec<TrialRecord>,
}

fn numeric_value(rec: &TrialRecord, m: Metric) -> Option<f64> {
    match m {
        Metric::NumSquares => rec.num_squares.map(|v| v as f64),
        Metric::Largest => rec.largest.map(|v| v as f64),
        Metric::SecondLargest => rec.second_largest.map(|v| v as f64),
        Metric::Isolated => rec.isolated.map(|v| v as f64),
        Metric::NonBonded => rec.non_bonded.map(|v| v as f64),
        Metric::T1Diameter => rec.t1_diameter.filter(|&v| v >= 0).map(|v| v as f64),
        _ => None,
    }
}

fn boolean_value(rec: &TrialRecord, m: Metric) -> Option<bool> {
    match m {
        Metric::T1Connected => rec.t1_connected,
        Metric::SConnected => rec.s_connected,
        Metric::DiamLe2 => rec.diam_le2,
        _ => None,
    }
}

/// Full factorial over the probability grid and trial indices.
///
/// Trials execute in parallel; aggregation is a fold over the untouched
/// per-trial records in `(p, trial)` order, so the result does not depend
/// on scheduling.
pub fn sweep(config: &SweepConfig) -> Result<SweepTable, ExperimentError> {
    if config.trials == 0 {
        return Err(ExperimentError::InvalidConfig("trials must be >= 1".into()));
    }
    let ps: Vec<(f64, Option<f64>)> = match &config.p_spec {
        PSpec::Explicit(ps) => {
            for &p in ps {
                if !(0.0..=1.0).contains(&p) {
                    return Err(ExperimentError::InvalidConfig(format!(
                        "p = {p} outside [0, 1]"
                    )));
                }
            }
            ps.iter().map(|&p| (p, None)).collect()
        }
        PSpec::Scaled(cs) => cs
            .iter()
            .map(|&c| threshold_p(c, config.n).map(|p| (p, Some(c))))
            .collect::<Result<_, _>>()?,
    };
    if ps.is_empty() {
        return Err(ExperimentError::InvalidConfig(
            "probability grid is empty".into(),
        ));
    }

    let jobs: Vec<(usize, u64)> = (0..ps.len())
        .flat_map(|pi| (0..config.trials).map(move |t| (pi, t)))
        .collect();
    let records: Vec<TrialRecord> = jobs
        .par_iter()
        .map(|&(pi, t)| {
            let (p, c) = ps[pi];
            run_trial(
                config.n,
                p,
                c,
                config.master_seed,
                t,
                &config.metrics,
                config.caps,
            )
        })
        .collect::<Result<_, _>>()?;

    let mut aggregates = Vec::with_capacity(ps.len());
    for (pi, &(p, c)) in ps.iter().enumerate() {
        let rows = &records[pi * config.trials as usize..(pi + 1) * config.trials as usize];
        let mut freqs = Vec::new();
        let mut means = Vec::new();
        for &m in config.metrics.iter() {
            if m.is_boolean() {
                let hits = rows
                    .iter()
                    .filter(|r| boolean_value(r, m) == Some(true))
                    .count();
                freqs.push((m, hits as f64 / rows.len() as f64));
            } else {
                let vals: Vec<f64> = rows.iter().filter_map(|r| numeric_value(r, m)).collect();
                if vals.is_empty() {
                    continue;
                }
                let mean = vals.iter().sum::<f64>() / vals.len() as f64;
                let sd = if vals.len() < 2 {
                    0.0
                } else {
                    (vals.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>()
                        / (vals.len() as f64 - 1.0))
                        .sqrt()
                };
                means.push((m, mean, sd));
            }
        }
        aggregates.push(AggregateRow {
            n: config.n,
            p,
            c,
            trials: config.trials,
            freqs,
            means,
        });
    }
    Ok(SweepTable {
        config_metrics: config.metrics.clone(),
        aggregates,
        raw: if config.keep_raw { records } else { Vec::new() },
    })
}

pub const CSV_SCHEMA_VERSION: u32 = 1;

const RAW_HEADER: &str = "n,p,c,trial,seed,num_edges,num_non_edges,num_squares,num_components,num_nontrivial,largest,second_largest,isolated,t1_connected,s_connected,non_bonded,diam_le2";

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Raw per-trial CSV in the fixed column schema.
pub fn raw_csv(records: &[TrialRecord]) -> String {
    let mut out = String::from(RAW_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.n,
            r.p,
            opt(r.c),
            r.trial,
            r.seed,
            r.num_edges,
            r.num_non_edges,
            opt(r.num_squares),
            opt(r.num_components),
            opt(r.num_nontrivial),
            opt(r.largest),
            opt(r.second_largest),
            opt(r.isolated),
            opt(r.t1_connected),
            opt(r.s_connected),
            opt(r.non_bonded),
            opt(r.diam_le2),
        ));
    }
    out
}

/// Aggregate CSV: `n,p,c,trials` then `<metric>_freq` or
/// `<metric>_mean,<metric>_sd` per requested metric, in raw-schema order.
pub fn aggregate_csv(table: &SweepTable) -> String {
    let cols: Vec<Metric> = Metric::CSV_ORDER
        .into_iter()
        .filter(|m| table.config_metrics.contains(m))
        .collect();
    let mut header = String::from("n,p,c,trials");
    for m in &cols {
        if m.is_boolean() {
            header.push_str(&format!(",{}_freq", m.csv_name()));
        } else {
            header.push_str(&format!(",{0}_mean,{0}_sd", m.csv_name()));
        }
    }
    let mut out = header;
    out.push('\n');
    for row in &table.aggregates {
        out.push_str(&format!("{},{},{},{}", row.n, row.p, opt(row.c), row.trials));
        for m in &cols {
            if m.is_boolean() {
                out.push_str(&format!(",{}", row.freq(*m).unwrap_or(f64::NAN)));
            } else {
                let (mean, sd) = row
                    .means
                    .iter()
                    .find(|(k, _, _)| k == m)
                    .map(|(_, mean, sd)| (*mean, *sd))
                    .unwrap_or((f64::NAN, f64::NAN));
                out.push_str(&format!(",{mean},{sd}"));
            }
        }
        out.push('\n');
    }
    out
}

/// JSON mirror of the raw records: same field names as the CSV columns.
pub fn raw_json(records: &[TrialRecord]) -> String {
    let doc = serde_json::json!({
        "schema_version": CSV_SCHEMA_VERSION,
        "records": records,
    });
    serde_json::to_string_pretty(&doc).expect("records serialize")
}

/// JSON mirror of the aggregate table: same field names as the CSV columns.
pub fn aggregate_json(table: &SweepTable) -> String {
    let rows: Vec<serde_json::Value> = table
        .aggregates
        .iter()
        .map(|row| {
            let mut map = serde_json::Map::new();
            map.insert("n".into(), row.n.into());
            map.insert("p".into(), row.p.into());
            map.insert(
                "c".into(),
                row.c.map(serde_json::Value::from).unwrap_or(serde_json::Value::Null),
            );
            map.insert("trials".into(), row.trials.into());
            for (m, f) in &row.freqs {
                map.insert(format!("{}_freq", m.csv_name()), (*f).into());
            }
            for (m, mean, sd) in &row.means {
                map.insert(format!("{}_mean", m.csv_name()), (*mean).into());
                map.insert(format!("{}_sd", m.csv_name()), (*sd).into());
            }
            serde_json::Value::Object(map)
        })
        .collect();
    let doc = serde_json::json!({
        "schema_version": CSV_SCHEMA_VERSION,
        "rows": rows,
    });
    serde_json::to_string_pretty(&doc).expect("rows serialize")
}

/// Empirical frequency of a boolean metric at scaling constant `c`.
pub fn metric_frequency(
    n: usize,
    metric: Metric,
    c: f64,
    trials: u64,
    master_seed: u64,
    caps: Caps,
) -> Result<f64, ExperimentError> {
    let p = threshold_p(c, n)?;
    let metrics: MetricSet = [metric].into_iter().collect();
    let hits: Vec<bool> = (0..trials)
        .into_par_iter()
        .map(|t| {
            run_trial(n, p, Some(c), master_seed, t, &metrics, caps)
                .map(|r| boolean_value(&r, metric) == Some(true))
        })
        .collect::<Result<_, _>>()?;
    Ok(hits.iter().filter(|&&b| b).count() as f64 / trials as f64)
}

/// Bisects the scaling constant until the interval where the empirical
/// frequency of a boolean metric crosses 1/2 has width at most
/// `half_width`; returns the midpoint.
///
/// The same `(master_seed, trial)` streams are reused at every evaluated
/// `c` (common random numbers), so the estimate is deterministic.
pub fn estimate_crossing(
    n: usize,
    metric: Metric,
    c_low: f64,
    c_high: f64,
    trials: u64,
    master_seed: u64,
    half_width: f64,
) -> Result<f64, ExperimentError> {
    if !metric.is_boolean() {
        return Err(ExperimentError::InvalidConfig(format!(
            "metric {} is not boolean",
            metric.csv_name()
        )));
    }
    if !(c_low < c_high) || half_width <= 0.0 || trials == 0 {
        return Err(ExperimentError::InvalidConfig(
            "need c_low < c_high, half_width > 0, trials >= 1".into(),
        ));
    }
    let caps = Caps::default();
    let f_low = metric_frequency(n, metric, c_low, trials, master_seed, caps)?;
    let f_high = metric_frequency(n, metric, c_high, trials, master_seed, caps)?;
    if !(f_low < 0.5 && 0.5 < f_high) {
        return Err(ExperimentError::BracketInvalid {
            c_low,
            c_high,
            f_low,
            f_high,
        });
    }
    let (mut lo, mut hi) = (c_low, c_high);
    while hi - lo > half_width {
        let mid = (lo + hi) / 2.0;
        let f = metric_frequency(n, metric, mid, trials, master_seed, caps)?;
        if f < 0.5 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi) / 2.0)
}

/// Ready-made sweep configurations with their sizing arithmetic.
pub mod presets {
    use super::*;

    fn config(n: usize, p_spec: PSpec, trials: u64, metrics: MetricSet) -> SweepConfig {
        SweepConfig {
            n,
            p_spec,
            trials,
            master_seed: 1,
            metrics,
            caps: Caps::default(),
            keep_raw: true,
        }
    }

    /// Regression for [`expected_isolated_t1`]: at `n = 500`,
    /// `p = 0.1115` the formula gives about `2.18e2` no-common-neighbour
    /// non-edges per graph, large enough that a 100-trial mean
    /// concentrates within a few percent.
    pub fn isolated_obstruction_regression() -> SweepConfig {
        config(
            500,
            PSpec::Explicit(vec![0.1115]),
            100,
            decomposition_metrics(),
        )
    }

    /// Regression for [`expected_nonbonded_squares`]: at `n = 300`,
    /// `p = 0.15` the expectation is about `0.6` per graph, so a
    /// 300-trial mean has standard error well under the 25% band.
    pub fn non_bonded_regression() -> SweepConfig {
        let mut metrics = decomposition_metrics();
        metrics.insert(Metric::NonBonded);
        config(300, PSpec::Explicit(vec![0.15]), 300, metrics)
    }

    /// S-connectivity trend across the scaling window `c in [0.6, 1.6]`
    /// at `n = 1024`: the expected count of squares sharing no vertex
    /// triple with another square drops from ~1.5e3 at `c = 0.7` to
    /// ~3e-5 at `c = 1.4`, so the connected frequency swings from near 0
    /// to near 1 inside the window.
    pub fn s_connectivity_trend() -> SweepConfig {
        let cs: Vec<f64> = (6..=16).map(|i| i as f64 / 10.0).collect();
        config(1024, PSpec::Scaled(cs), 200, decomposition_metrics())
    }

    /// The window where `S` is connected while `T1` is not: at `n = 4096`,
    /// `c = 1.25` the expected no-common-neighbour count is ~18 (so `T1`
    /// is essentially always disconnected) while small non-trivial
    /// components have expectation ~2e-3 (so `S` is essentially always
    /// connected).
    pub fn connectivity_gap() -> SweepConfig {
        config(4096, PSpec::Scaled(vec![1.25]), 50, decomposition_metrics())
    }

    /// Dense regime where every pair of `T1` vertices shares a neighbour:
    /// at `n = 200`, `p = 0.7` a pair of non-edges has ~`n p^4 = 48`
    /// common base neighbours and the chance that those induce no further
    /// non-edge is below `p^C(48,2) ~ 1e-168`, so diameter two should
    /// hold in essentially every trial.
    pub fn diameter_two_regime() -> SweepConfig {
        let mut metrics = MetricSet::new();
        metrics.insert(Metric::DiamLe2);
        config(200, PSpec::Explicit(vec![0.7]), 20, metrics)
    }

    /// One giant component and nothing mid-sized: at `n = 2048`,
    /// `p = 0.07` the giant holds nearly all ~1.9e6 non-edges while
    /// non-trivial stragglers are rare isolated squares of size 2.
    pub fn giant_second_component() -> SweepConfig {
        config(2048, PSpec::Explicit(vec![0.07]), 50, decomposition_metrics())
    }

    /// Near-complete regime `1 - p = c / n^2`: at `n = 512`, `c = 4` the
    /// graph misses ~2 edges on average, so `T1` has a couple of vertices
    /// and is vacuously well behaved; exercises the complete-graph
    /// markers.
    pub fn near_complete_regime() -> SweepConfig {
        let n = 512usize;
        let p = 1.0 - 4.0 / (n as f64 * n as f64);
        config(n, PSpec::Explicit(vec![p]), 50, decomposition_metrics())
    }

    /// Exploratory: second-largest component size just above the giant's
    /// emergence, `p = 0.75 / sqrt(n)` across an `n` grid. No acceptance
    /// thresholds are attached; the interesting output is how
    /// `second_largest` grows with `n`.
    pub fn second_component_scaling(n: usize) -> SweepConfig {
        let p = 0.75 / (n as f64).sqrt();
        config(n, PSpec::Explicit(vec![p]), 50, decomposition_metrics())
    }

    /// Exploratory: exact `T1` diameter in the window
    /// `p = n^(-1/2 + 1/(2k))`, where neighbourhood growth suggests the
    /// diameter should sit near `k`. Sized small so the all-sources BFS
    /// stays tractable.
    pub fn t1_diameter_growth(k: u32) -> SweepConfig {
        let n = 256usize;
        let p = (n as f64).powf(-0.5 + 1.0 / (2.0 * k as f64));
        let mut metrics = MetricSet::new();
        metrics.insert(Metric::T1Diameter);
        config(n, PSpec::Explicit(vec![p]), 10, metrics)
    }
}
