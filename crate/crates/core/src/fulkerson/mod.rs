//! FR-triples, their T-partitions, compatible pairs, Fulkerson coverings and
//! proper coverings.

mod cycles;
mod exact;
mod lift;
mod proper;
mod search;
mod types;

pub use cycles::CycleSearchLimits;
pub use lift::fr_triple_from_matchings;
pub use proper::{is_bi_hamiltonian, proper_covering_from_witness, BiHamiltonicity, Witness};
pub use search::{
    enumerate_fulkerson_coverings, find_fr_triple, find_fr_triple_with, find_fulkerson_covering,
    find_fulkerson_covering_with, find_proper_covering, Strategy,
};
pub use types::{
    are_compatible, covering_from_compatible, is_proper, t_partition, verify_covering, CoverageReport, FRTriple,
    FulkersonCovering, TPartition,
};
