//! Exact invariants, obstruction mining, and verification suites for
//! hereditary Nordhaus-Gaddum graph classes.
//!
//! The central quantity is the defect `n + 1 - chi - theta` of a graph.
//! A graph is in the class a-NG when its defect is at most `a`, and in
//! a-HNG when every induced subgraph's defect is at most `a`. This crate
//! provides exact solvers for the underlying invariants, enumeration of
//! small graphs, mining of minimal forbidden induced subgraphs, structure
//! analyzers for the class with hereditary defect at most one, and the
//! verification suites exercised by the `hng` CLI.

pub mod canon;
pub mod enumerate;
pub mod graph;
pub mod invariants;
pub mod membership;
pub mod mine;
pub mod report;
pub mod structure;

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("order {0} exceeds the 32-vertex cap")]
    OrderCapExceeded(usize),
    #[error("vertex index {0} out of range")]
    InvalidVertex(usize),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("malformed graph6 input: {0}")]
    MalformedGraph6(String),
    #[error("corrupt catalog: {0}")]
    CorruptCatalog(String),
    #[error("order {0} outside the supported range {1}")]
    OrderOutOfRange(usize, &'static str),
    #[error("graph has too many edges ({0}) for line graph construction")]
    TooManyEdges(usize),
    #[error("graph is not in the required class: {0}")]
    NotInClass(String),
    #[error("type {0:#07b} is not allowed in family {1}")]
    InvalidTypeForFamily(u8, &'static str),
    #[error("missing obstruction set: {0}")]
    MissingObstructionSet(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
