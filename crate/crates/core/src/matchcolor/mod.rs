//! Perfect matchings, edge colourings, splitting/suppression and the
//! 5-cycle shrink.

mod coloring;
mod gstar;
mod matching;
mod suppress;

pub use coloring::{
    bichromatic_factor, color_search, enumerate_three_edge_colorings, kempe_exchange, three_edge_colorable,
    three_edge_coloring, three_edge_coloring_within, EdgeColoring, Walk,
};
pub use gstar::{find_c5_two_factor, five_edge_coloring, five_edge_coloring_within, shrink_to_gstar, GStar};
pub use matching::{
    enumerate_perfect_matchings, find_perfect_matching, is_m_balanced, two_factor_cycles, MatchingEnumeration,
    PerfectMatching, DEFAULT_PM_LIMIT,
};
pub use suppress::{split_and_suppress, split_and_suppress_paired, SuppressedComponent, SuppressedGraph};
