//! critgraph: a toolkit for edge-critical graphs under minimum vertex
//! cover. It constructs and verifies critical graphs, catalogs critical
//! circulants, grows graphs by criticality-preserving extensions with
//! maintained optimal covers, and generates benchmark instances whose
//! minimum vertex cover is known by construction.

pub mod alpha;
pub mod bench;
pub mod circulant;
pub mod criticality;
pub mod dimacs;
pub mod extensions;
pub mod generator;
pub mod graph;
pub mod greedy;
pub mod rng;
pub mod solver;

pub use criticality::{is_critical, CritStatus, CriticalityVerdict};
pub use extensions::TrackedGraph;
pub use generator::{generate_hard, EdgeTarget, GeneratorConfig, InstanceBundle};
pub use graph::{Graph, GraphError, StructureReport};
pub use solver::{is_cover, mvc, mvc_constrained, SolveBudget, SolveResult, SolveStatus};
