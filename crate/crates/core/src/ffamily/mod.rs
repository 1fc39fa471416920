//! F-families: verification, the covering they induce, search, and the
//! constructions that produce them (dot products and 5-cycle 2-factors).

mod c5;
mod dot;
mod family;
mod search;

pub use c5::{covering_from_c5_structure, C5Outcome};
pub use dot::{
    dot_preserve_type1, dot_preserve_type2, first_type1_spec, first_type2_spec, iterate_dot_sequence,
    two_odd_cycle_matching, BaseGraph, DotSequence, DotStep, Preservation,
};
pub use family::{
    covering_from_ffamily, derive_n, family_with_derived_n, verify_ffamily, Condition, FFamily, FamilyReport,
    Violation, MEMBER_NAMES,
};
pub use search::find_ffamily;
