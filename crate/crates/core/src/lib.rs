//! Perfect matchings, Fulkerson coverings, FR-triples and F-families on
//! bridgeless cubic multigraphs.
//!
//! Every search is deterministic and budgeted; a search that runs out of
//! budget reports [`SearchOutcome::Unknown`] rather than claiming absence.

pub mod budget;
pub mod edgeset;
pub mod error;
pub mod ffamily;
pub mod fulkerson;
pub mod generators;
pub mod graph;
pub mod matchcolor;

pub use budget::{Budget, SearchOutcome, BUDGET_ENV, DEFAULT_BUDGET};
pub use edgeset::{EdgeSet, Matching};
pub use error::{Error, Result};
pub use ffamily::FFamily;
pub use fulkerson::{FRTriple, FulkersonCovering, Strategy, TPartition};
pub use generators::{DotProduct, DotProductSpec, NamedVertexMap};
pub use graph::{CubicGraph, Cycle, CycleSet, EdgeId, MultiGraph, VertexId};
pub use matchcolor::{EdgeColoring, PerfectMatching, SuppressedGraph};
