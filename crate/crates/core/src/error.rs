use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} does not exist")]
    UnknownVertex(VertexId),
    #[error("edge {0} does not exist")]
    UnknownEdge(EdgeId),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {vertex} has degree {degree}, expected {expected}")]
    BadDegree {
        vertex: VertexId,
        degree: usize,
        expected: usize,
    },
    #[error("edge {0} is a loop")]
    Loop(EdgeId),
    #[error("edge set was built for a graph with {expected} edges, found {found}")]
    HostMismatch { expected: usize, found: usize },
    #[error("edges {0} and {1} share a vertex")]
    NotAMatching(EdgeId, EdgeId),
    #[error("vertex {0} is not covered by the matching")]
    NotPerfect(VertexId),
    #[error("vertex {vertex} has degree {degree} in the edge set, expected 0 or 2")]
    NotCycleUnion { vertex: VertexId, degree: usize },
    #[error("parameter out of range: {0}")]
    InvalidParameter(String),
    #[error("invalid dot product specification: {0}")]
    InvalidDotSpec(String),
    #[error("matchings are not disjoint (edge {0} in both)")]
    NotDisjoint(EdgeId),
    #[error("{0} is not a subset of the perfect matching")]
    NotSubset(&'static str),
    #[error("perfect matchings {0:?} share edge {1}, so they are not an FR-triple")]
    NonEmptyIntersection([usize; 3], EdgeId),
    #[error("the split-and-suppressed graph of {0} is not 3-edge-colourable")]
    NotColourable(&'static str),
    #[error("at vertex {0} the partner matching pairs only one side of a split edge")]
    PartnerMismatch(VertexId),
    #[error("FR-triples are not compatible")]
    Incompatible,
    #[error("coloring is not proper at vertex {0}")]
    ImproperColoring(VertexId),
    #[error("cycle is not a bichromatic cycle of the two colours: {0}")]
    NotBichromaticCycle(String),
    #[error("graph is not 3-edge-colourable")]
    ClassTwo,
    #[error("2-factor of colours ({0}, {1}) is a Hamiltonian cycle")]
    HamiltonianFactor(u8, u8),
    #[error("graph is not regular of degree {0}")]
    NotRegular(usize),
    #[error("2-factor is not made of chordless 5-cycles: {0}")]
    NotC5Factor(String),
    #[error("malformed F-family: {0}")]
    MalformedFamily(String),
    #[error("F-family does not verify: {0}")]
    FamilyInvalid(String),
    #[error("no per-cycle choice yields a Fulkerson covering on cycle {cycle}")]
    NoCycleAssignment { cycle: usize },
    #[error("dot product precondition failed: {0}")]
    DotPrecondition(String),
    #[error("pipeline step {step} failed: {source}")]
    Step {
        step: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("search budget exhausted")]
    BudgetExhausted,
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
