//! Shared fixtures for the benchmarks.

use fulkerson_core::generators;
use fulkerson_core::CubicGraph;

/// Snarks of increasing size that every search can handle.
pub fn snarks() -> Vec<(&'static str, CubicGraph)> {
    vec![
        ("petersen", generators::petersen()),
        ("J5", generators::flower_snark(5).expect("valid k")),
        ("J7", generators::flower_snark(7).expect("valid k")),
        ("G3", generators::goldberg(3).expect("valid k")),
        ("G5", generators::goldberg(5).expect("valid k")),
    ]
}
