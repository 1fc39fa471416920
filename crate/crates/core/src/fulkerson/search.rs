use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::budget::{Budget, SearchOutcome};
use crate::edgeset::Matching;
use crate::error::{Error, Result};
use crate::graph::CubicGraph;
use crate::matchcolor::{
    enumerate_perfect_matchings, split_and_suppress_paired, three_edge_colorable, three_edge_coloring_within,
    PerfectMatching, DEFAULT_PM_LIMIT,
};

use super::cycles::{search_cycle_systems, CycleSearchLimits};
use super::exact::ExactCover;
use super::lift::lift;
use super::types::{covering_from_compatible, verify_covering, FRTriple, FulkersonCovering};

/// How [`find_fulkerson_covering`] looks for a covering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Take each colour class of a 3-edge-colouring twice. Reports
    /// `NotFound` on graphs that are not 3-edge-colourable.
    Color,
    /// Exact multiset cover over all perfect matchings.
    Exact2Cover,
    /// Cycle systems `(A1, A2)` with both split graphs 3-edge-colourable,
    /// lifted to two compatible FR-triples.
    A1A2,
    /// `Color`, then `Exact2Cover`, then `A1A2` if the matchings could not
    /// all be enumerated.
    Auto,
}

impl Strategy {
    pub const NAMES: [&'static str; 4] = ["color", "exact2cover", "a1a2", "auto"];
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "color" | "colour" => Ok(Strategy::Color),
            "exact2cover" | "exact" => Ok(Strategy::Exact2Cover),
            "a1a2" => Ok(Strategy::A1A2),
            "auto" => Ok(Strategy::Auto),
            other => Err(Error::InvalidParameter(format!(
                "unknown strategy {other:?}; expected one of {}",
                Strategy::NAMES.join(", ")
            ))),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Strategy::Color => "color",
            Strategy::Exact2Cover => "exact2cover",
            Strategy::A1A2 => "a1a2",
            Strategy::Auto => "auto",
        };
        f.write_str(name)
    }
}

fn verified(g: &CubicGraph, f: FulkersonCovering) -> SearchOutcome<FulkersonCovering> {
    match verify_covering(g, &f) {
        Ok(r) if r.is_valid() => SearchOutcome::Found(f),
        _ => panic!("search produced an invalid covering: {f:?}"),
    }
}

fn by_color(g: &CubicGraph, budget: &Budget) -> SearchOutcome<FulkersonCovering> {
    three_edge_coloring_within(g, budget).map(|c| {
        let cl: Vec<PerfectMatching> = c
            .classes()
            .into_iter()
            .map(|s| PerfectMatching::new(g, s).expect("colour classes of a cubic graph"))
            .collect();
        FulkersonCovering::new(vec![
            cl[0].clone(),
            cl[0].clone(),
            cl[1].clone(),
            cl[1].clone(),
            cl[2].clone(),
            cl[2].clone(),
        ])
        .expect("six matchings")
    })
}

fn by_exact_cover(g: &CubicGraph, budget: &Budget, distinct: bool) -> SearchOutcome<FulkersonCovering> {
    let e = enumerate_perfect_matchings(g, Some(DEFAULT_PM_LIMIT));
    let r = ExactCover::new(g.edge_count(), &e.matchings, distinct, budget).first();
    let r = match r {
        SearchOutcome::NotFound if e.truncated => SearchOutcome::Unknown,
        other => other,
    };
    r.map(|ids| FulkersonCovering::new(ids.into_iter().map(|i| e.matchings[i].clone()).collect()).expect("six"))
}

fn by_cycle_systems(g: &CubicGraph, limits: CycleSearchLimits, budget: &Budget) -> SearchOutcome<FulkersonCovering> {
    let accept = |a1: &Matching, a2: &Matching| -> Option<FulkersonCovering> {
        let s1 = split_and_suppress_paired(g, a1, a2).ok()?;
        let c1 = three_edge_colorable(&s1)?;
        let s2 = split_and_suppress_paired(g, a2, a1).ok()?;
        let c2 = three_edge_colorable(&s2)?;
        let t = lift(g, a1, a2, &s1, &c1).ok()?;
        let u = lift(g, a2, a1, &s2, &c2).ok()?;
        covering_from_compatible(g, &t, &u).ok()
    };
    search_cycle_systems(g, limits, true, budget, &accept)
}

/// Search for a Fulkerson covering. The result is always verified.
pub fn find_fulkerson_covering(
    g: &CubicGraph,
    strategy: Strategy,
    budget: &Budget,
) -> SearchOutcome<FulkersonCovering> {
    find_fulkerson_covering_with(g, strategy, budget, CycleSearchLimits::default())
}

pub fn find_fulkerson_covering_with(
    g: &CubicGraph,
    strategy: Strategy,
    budget: &Budget,
    limits: CycleSearchLimits,
) -> SearchOutcome<FulkersonCovering> {
    let r = match strategy {
        Strategy::Color => by_color(g, budget),
        Strategy::Exact2Cover => by_exact_cover(g, budget, false),
        Strategy::A1A2 => by_cycle_systems(g, limits, budget),
        Strategy::Auto => match by_color(g, budget) {
            SearchOutcome::Found(f) => SearchOutcome::Found(f),
            _ => match by_exact_cover(g, budget, false) {
                SearchOutcome::Unknown if !budget.is_exhausted() => by_cycle_systems(g, limits, budget),
                other => other,
            },
        },
    };
    match r {
        SearchOutcome::Found(f) => verified(g, f),
        other => other,
    }
}

/// Every Fulkerson covering (each multiset once, matchings sorted) up to
/// `limit`. The flag reports whether the enumeration was complete.
pub fn enumerate_fulkerson_coverings(g: &CubicGraph, limit: usize, budget: &Budget) -> (Vec<FulkersonCovering>, bool) {
    let e = enumerate_perfect_matchings(g, Some(DEFAULT_PM_LIMIT));
    let (sols, complete) = ExactCover::new(g.edge_count(), &e.matchings, false, budget).all(limit);
    let out = sols
        .into_iter()
        .map(|ids| FulkersonCovering::new(ids.into_iter().map(|i| e.matchings[i].clone()).collect()).expect("six"))
        .collect();
    (out, complete && !e.truncated)
}

/// A covering by six pairwise distinct perfect matchings, by exhaustive
/// search over the perfect matchings. `NotFound` proves none exists.
pub fn find_proper_covering(g: &CubicGraph, budget: &Budget) -> SearchOutcome<FulkersonCovering> {
    match by_exact_cover(g, budget, true) {
        SearchOutcome::Found(f) => verified(g, f),
        other => other,
    }
}

/// First FR-triple of pairwise distinct matchings in lexicographic order of
/// their indices among the sorted perfect matchings. If the matchings cannot
/// all be enumerated, falls back to cycle systems `(A1, A2)` with the graph
/// split along `A1` 3-edge-colourable.
pub fn find_fr_triple(g: &CubicGraph, budget: &Budget) -> SearchOutcome<FRTriple> {
    find_fr_triple_with(g, budget, DEFAULT_PM_LIMIT, CycleSearchLimits::default())
}

pub fn find_fr_triple_with(
    g: &CubicGraph,
    budget: &Budget,
    pm_limit: usize,
    limits: CycleSearchLimits,
) -> SearchOutcome<FRTriple> {
    let e = enumerate_perfect_matchings(g, Some(pm_limit));
    let pms = &e.matchings;
    let n = pms.len();
    let found = (0..n).into_par_iter().find_map_first(|i| {
        for j in i + 1..n {
            if !budget.tick() {
                return None;
            }
            let ij = pms[i].intersection(&pms[j]).expect("same host");
            if let Some(k) = (j + 1..n).find(|&k| ij.is_disjoint(&pms[k])) {
                return Some(FRTriple::new(pms[i].clone(), pms[j].clone(), pms[k].clone()).expect("checked"));
            }
        }
        None
    });
    if let Some(t) = found {
        return SearchOutcome::Found(t);
    }
    if budget.is_exhausted() {
        return SearchOutcome::Unknown;
    }
    if !e.truncated {
        return SearchOutcome::NotFound;
    }
    let accept = |a1: &Matching, a2: &Matching| -> Option<FRTriple> {
        let s = split_and_suppress_paired(g, a1, a2).ok()?;
        let c = three_edge_colorable(&s)?;
        lift(g, a1, a2, &s, &c).ok()
    };
    search_cycle_systems(g, limits, false, budget, &accept)
}
