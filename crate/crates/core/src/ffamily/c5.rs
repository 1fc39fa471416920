use crate::budget::{Budget, SearchOutcome};
use crate::edgeset::{EdgeSet, Matching};
use crate::error::{Error, Result};
use crate::fulkerson::FulkersonCovering;
use crate::graph::CubicGraph;
use crate::matchcolor::{find_c5_two_factor, five_edge_coloring_within, shrink_to_gstar, GStar};

use super::family::{covering_from_ffamily, family_with_derived_n, FFamily};

#[derive(Clone, Debug)]
pub enum C5Outcome {
    Covering {
        gstar: GStar,
        family: FFamily,
        covering: FulkersonCovering,
    },
    /// No 2-factor of chordless 5-cycles.
    NoC5Factor,
    /// `G*` has no 5-edge-colouring (or has a loop).
    GStarNotColourable(GStar),
    /// The colouring search ran out of budget.
    Unknown(GStar),
}

impl C5Outcome {
    pub fn covering(&self) -> Option<&FulkersonCovering> {
        match self {
            C5Outcome::Covering { covering, .. } => Some(covering),
            _ => None,
        }
    }
}

/// Shrink a 2-factor of chordless 5-cycles, 5-edge-colour `G*`, and turn the
/// first four colour classes into an F-family for the complementary perfect
/// matching.
pub fn covering_from_c5_structure(g: &CubicGraph, budget: &Budget) -> Result<C5Outcome> {
    let Some((m, cycles)) = find_c5_two_factor(g) else {
        return Ok(C5Outcome::NoC5Factor);
    };
    let gstar = shrink_to_gstar(g, &m, &cycles)?;
    let coloring = match five_edge_coloring_within(&gstar.graph, budget)? {
        SearchOutcome::Found(c) => c,
        SearchOutcome::NotFound => return Ok(C5Outcome::GStarNotColourable(gstar)),
        SearchOutcome::Unknown => return Ok(C5Outcome::Unknown(gstar)),
    };
    let ecount = g.edge_count();
    let mut classes = vec![EdgeSet::empty(ecount); 4];
    for (se, &orig) in gstar.edge_origin.iter().enumerate() {
        let c = coloring.color(se) as usize;
        if c < 4 {
            classes[c].insert(orig);
        }
    }
    let mut members = Vec::with_capacity(4);
    for s in classes {
        members.push(Matching::new(g, s)?);
    }
    let members: [Matching; 4] = members.try_into().expect("four classes");
    let family = family_with_derived_n(g, m, members)?
        .ok_or_else(|| Error::Invariant("colour classes of G* do not give an F-family".into()))?;
    let covering = covering_from_ffamily(g, &family)?;
    Ok(C5Outcome::Covering {
        gstar,
        family,
        covering,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::matchcolor::enumerate_perfect_matchings;

    #[test]
    fn petersen_reproduces_its_covering() {
        let p = generators::petersen();
        let out = covering_from_c5_structure(&p, &Budget::unlimited()).unwrap();
        let C5Outcome::Covering { gstar, covering, .. } = out else {
            panic!("Petersen has a C5 2-factor with 5-colourable G*");
        };
        assert_eq!(gstar.graph.vertex_count(), 2);
        let mut all = enumerate_perfect_matchings(&p, None).matchings;
        all.sort();
        assert_eq!(covering.sorted().matchings(), &all[..]);
    }

    #[test]
    fn ten_vertex_example() {
        let g = generators::ten_vertex_c5_example();
        let out = covering_from_c5_structure(&g, &Budget::unlimited()).unwrap();
        assert!(out.covering().is_some());
    }

    #[test]
    fn k4_has_no_factor() {
        assert!(matches!(
            covering_from_c5_structure(&generators::k4(), &Budget::unlimited()).unwrap(),
            C5Outcome::NoC5Factor
        ));
    }
}
