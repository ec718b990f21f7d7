//! Square-graph toolkit.
//!
//! Given a graph, its square graph `T1` has the non-edges as vertices, two
//! adjacent when their union induces a 4-cycle; the companion graph `S` is
//! the line graph of `T1`, with the induced squares themselves as vertices.
//! This crate builds both views, decomposes `T1` into components with
//! supports, checks the combinatorial invariants those components obey,
//! constructs the explicit graph families with multiple full-support
//! components, and drives seeded Monte Carlo sweeps that locate the
//! connectivity transitions of random graphs at desk scale.

pub mod analysis;
pub mod constructions;
pub mod edgelist;
pub mod experiments;
pub mod graph;
pub mod oracle;
pub mod sampler;
pub mod squares;

pub use analysis::{
    analyze, bonded_report, is_s_connected, is_t1_connected, t1_components, AnalysisReport,
    ComponentDecomposition,
};
pub use graph::{Graph, GraphError, PairIndex, VertexPair};
pub use sampler::{derive_trial_seed, sample_gnp, SamplerSeed};
pub use squares::{build_s, build_t1, enumerate_squares, InducedSquare};
