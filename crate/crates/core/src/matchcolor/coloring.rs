use crate::budget::{Budget, SearchOutcome};
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{CubicGraph, Cycle, CycleSet, EdgeId, MultiGraph};

use super::suppress::SuppressedGraph;

const UNCOLORED: u8 = u8::MAX;

/// A proper edge colouring with colours `0..palette`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeColoring {
    colors: Vec<u8>,
    palette: u8,
}

impl EdgeColoring {
    pub fn new(g: &MultiGraph, colors: Vec<u8>, palette: u8) -> Result<Self> {
        if colors.len() != g.edge_count() {
            return Err(Error::HostMismatch {
                expected: g.edge_count(),
                found: colors.len(),
            });
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= palette) {
            return Err(Error::InvalidParameter(format!("colour {c} outside palette {palette}")));
        }
        for v in 0..g.vertex_count() {
            let mut seen = 0u32;
            for &e in g.incident(v) {
                let bit = 1 << colors[e];
                if seen & bit != 0 {
                    return Err(Error::ImproperColoring(v));
                }
                seen |= bit;
            }
        }
        Ok(EdgeColoring { colors, palette })
    }

    pub fn palette(&self) -> u8 {
        self.palette
    }

    pub fn color(&self, e: EdgeId) -> u8 {
        self.colors[e]
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.colors
    }

    pub fn class(&self, c: u8) -> EdgeSet {
        EdgeSet::from_ids(
            self.colors.len(),
            self.colors.iter().enumerate().filter(|(_, &x)| x == c).map(|(e, _)| e),
        )
        .expect("ids in range")
    }

    pub fn classes(&self) -> Vec<EdgeSet> {
        (0..self.palette).map(|c| self.class(c)).collect()
    }

    /// Representative of the colour-permutation orbit in which colours appear
    /// in increasing order of first use (the lexicographically smallest one).
    pub fn canonical(&self) -> EdgeColoring {
        let mut map = vec![UNCOLORED; self.palette as usize];
        let mut next = 0u8;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if map[c as usize] == UNCOLORED {
                    map[c as usize] = next;
                    next += 1;
                }
                map[c as usize]
            })
            .collect();
        EdgeColoring {
            colors,
            palette: self.palette,
        }
    }
}

/// How a colouring search ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Walk {
    /// The whole space was explored.
    Complete,
    /// The visitor asked to stop.
    Stopped,
    /// The budget ran out.
    OutOfBudget,
}

struct ColorSearch<'a> {
    g: &'a MultiGraph,
    full: u32,
    used: Vec<u32>,
    colors: Vec<u8>,
    budget: &'a Budget,
}

impl ColorSearch<'_> {
    fn options(&self, e: EdgeId) -> u32 {
        let (u, v) = self.g.endpoints(e);
        self.full & !(self.used[u] | self.used[v])
    }

    fn set(&mut self, e: EdgeId, c: u8) {
        let (u, v) = self.g.endpoints(e);
        self.colors[e] = c;
        self.used[u] |= 1 << c;
        self.used[v] |= 1 << c;
    }

    fn unset(&mut self, e: EdgeId) {
        let (u, v) = self.g.endpoints(e);
        let c = self.colors[e];
        self.colors[e] = UNCOLORED;
        self.used[u] &= !(1 << c);
        self.used[v] &= !(1 << c);
    }

    fn run(&mut self, left: usize, visit: &mut dyn FnMut(&[u8]) -> bool) -> Walk {
        if !self.budget.tick() {
            return Walk::OutOfBudget;
        }
        if left == 0 {
            return if visit(&self.colors) {
                Walk::Complete
            } else {
                Walk::Stopped
            };
        }
        // most constrained uncoloured edge, lowest id on ties
        let mut best = (u32::MAX, 0, 0);
        for e in 0..self.colors.len() {
            if self.colors[e] != UNCOLORED {
                continue;
            }
            let opts = self.options(e);
            let k = opts.count_ones();
            if k == 0 {
                return Walk::Complete;
            }
            if k < best.0 {
                best = (k, e, opts);
                if k == 1 {
                    break;
                }
            }
        }
        let (_, e, mut opts) = best;
        while opts != 0 {
            let c = opts.trailing_zeros() as u8;
            opts &= opts - 1;
            self.set(e, c);
            let r = self.run(left - 1, visit);
            self.unset(e);
            if r != Walk::Complete {
                return r;
            }
        }
        Walk::Complete
    }
}

/// Backtracking over proper `k`-edge-colourings of a loopless multigraph.
///
/// The edges at vertex 0 are fixed to colours `0, 1, ..` in incidence order,
/// so each colour-permutation orbit is visited at most once, and exactly once
/// when vertex 0 has degree `k`. The visitor returns `false` to stop.
pub fn color_search(g: &MultiGraph, k: u8, budget: &Budget, visit: &mut dyn FnMut(&[u8]) -> bool) -> Result<Walk> {
    if !(1..=8).contains(&k) {
        return Err(Error::InvalidParameter(format!("palette size {k}")));
    }
    if let Some((e, _, _)) = g.edges().find(|&(_, u, v)| u == v) {
        return Err(Error::Loop(e));
    }
    let mut s = ColorSearch {
        g,
        full: (1u32 << k) - 1,
        used: vec![0; g.vertex_count()],
        colors: vec![UNCOLORED; g.edge_count()],
        budget,
    };
    let mut left = g.edge_count();
    if g.vertex_count() > 0 {
        if g.incident(0).len() > k as usize {
            return Ok(Walk::Complete);
        }
        for (c, &e) in g.incident(0).iter().enumerate() {
            s.set(e, c as u8);
            left -= 1;
        }
    }
    Ok(s.run(left, visit))
}

fn first_coloring(g: &MultiGraph, k: u8, budget: &Budget) -> SearchOutcome<EdgeColoring> {
    let mut found = None;
    let walk = match color_search(g, k, budget, &mut |c| {
        found = Some(c.to_vec());
        false
    }) {
        Ok(w) => w,
        Err(_) => return SearchOutcome::NotFound,
    };
    match (found, walk) {
        (Some(colors), _) => SearchOutcome::Found(EdgeColoring { colors, palette: k }),
        (None, Walk::OutOfBudget) => SearchOutcome::Unknown,
        (None, _) => SearchOutcome::NotFound,
    }
}

pub(crate) fn k_edge_coloring(g: &MultiGraph, k: u8, budget: &Budget) -> SearchOutcome<EdgeColoring> {
    first_coloring(g, k, budget)
}

/// A proper 3-edge-colouring, if one exists.
pub fn three_edge_coloring(g: &CubicGraph) -> Option<EdgeColoring> {
    three_edge_coloring_within(g, &Budget::unlimited()).found()
}

pub fn three_edge_coloring_within(g: &CubicGraph, budget: &Budget) -> SearchOutcome<EdgeColoring> {
    first_coloring(g, 3, budget)
}

/// Per-component colourings of a suppressed graph, or `None` when some
/// cubic component is not 3-edge-colourable. Vertexless loops are ignored.
pub fn three_edge_colorable(s: &SuppressedGraph) -> Option<Vec<EdgeColoring>> {
    s.components
        .iter()
        .map(|c| {
            if c.graph.has_loop() {
                None
            } else {
                first_coloring(&c.graph, 3, &Budget::unlimited()).found()
            }
        })
        .collect()
}

/// All proper 3-edge-colourings up to permutation of the colours, each in
/// canonical form, sorted.
pub fn enumerate_three_edge_colorings(g: &CubicGraph) -> Vec<EdgeColoring> {
    let mut out = Vec::new();
    color_search(g, 3, &Budget::unlimited(), &mut |c| {
        out.push(
            EdgeColoring {
                colors: c.to_vec(),
                palette: 3,
            }
            .canonical(),
        );
        true
    })
    .expect("cubic graphs are loopless");
    out.sort();
    out
}

/// The cycles formed by the edges coloured `x` or `y`.
pub fn bichromatic_factor(g: &MultiGraph, c: &EdgeColoring, x: u8, y: u8) -> Result<CycleSet> {
    let set = c.class(x).union(&c.class(y))?;
    g.cycle_decomposition(&set)
}

/// Swap colours `x` and `y` on the edges of `cycle`, which must be a cycle
/// of the `(x, y)` 2-factor.
pub fn kempe_exchange(g: &MultiGraph, c: &EdgeColoring, x: u8, y: u8, cycle: &Cycle) -> Result<EdgeColoring> {
    if x == y || x >= c.palette || y >= c.palette {
        return Err(Error::InvalidParameter(format!("colours {x}, {y}")));
    }
    let factor = bichromatic_factor(g, c, x, y)?;
    let mut target: Vec<EdgeId> = cycle.edges.clone();
    target.sort_unstable();
    let matches = factor.iter().any(|f| {
        let mut es = f.edges.clone();
        es.sort_unstable();
        es == target
    });
    if !matches {
        return Err(Error::NotBichromaticCycle(format!("{:?}", cycle.vertices)));
    }
    let mut colors = c.colors.clone();
    for &e in &cycle.edges {
        colors[e] = if colors[e] == x { y } else { x };
    }
    Ok(EdgeColoring {
        colors,
        palette: c.palette,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::matchcolor::enumerate_perfect_matchings;

    /// Oracle: try every assignment of 3 colours to all edges.
    fn brute_force_count(g: &MultiGraph) -> usize {
        let m = g.edge_count() as u32;
        (0..3usize.pow(m))
            .filter(|&code| {
                let mut x = code;
                let colors: Vec<u8> = (0..m)
                    .map(|_| {
                        let c = (x % 3) as u8;
                        x /= 3;
                        c
                    })
                    .collect();
                EdgeColoring::new(g, colors, 3).is_ok()
            })
            .count()
    }

    fn assert_classes_are_pms(g: &CubicGraph, c: &EdgeColoring) {
        let pms = enumerate_perfect_matchings(g, None).matchings;
        for class in c.classes() {
            assert!(pms.iter().any(|p| p.edges() == &class), "class {class:?} is not a PM");
        }
    }

    #[test]
    fn decisions_on_named_graphs() {
        assert!(three_edge_coloring(&generators::k33()).is_some());
        assert!(three_edge_coloring(&generators::cube_q3()).is_some());
        assert!(three_edge_coloring(&generators::k4()).is_some());
        assert!(three_edge_coloring(&generators::petersen()).is_none());
        assert!(three_edge_coloring(&generators::flower_snark(5).unwrap()).is_none());
        assert!(three_edge_coloring(&generators::flower_snark(3).unwrap()).is_none());
    }

    #[test]
    fn goldberg_is_class_two() {
        assert!(three_edge_coloring(&generators::goldberg(3).unwrap()).is_none());
        assert!(three_edge_coloring(&generators::goldberg(5).unwrap()).is_none());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for g in [
            generators::k4(),
            generators::theta(),
            generators::k33(),
            generators::cube_q3(),
        ] {
            let all = enumerate_three_edge_colorings(&g);
            assert_eq!(all.len() * 6, brute_force_count(&g), "{g:?}");
            for c in &all {
                assert_eq!(c, &c.canonical());
                assert_classes_are_pms(&g, c);
            }
        }
        assert_eq!(enumerate_three_edge_colorings(&generators::k4()).len(), 1);
        assert_eq!(enumerate_three_edge_colorings(&generators::theta()).len(), 1);
    }

    #[test]
    fn budget_gives_unknown() {
        let p = generators::petersen();
        assert_eq!(three_edge_coloring_within(&p, &Budget::new(3)), SearchOutcome::Unknown);
    }

    #[test]
    fn kempe_is_an_involution_and_stays_proper() {
        let q = generators::cube_q3();
        // dimension colouring: edges 4d..4d+4 get colour d
        let dim = EdgeColoring::new(&q, (0..12).map(|e| (e / 4) as u8).collect(), 3).unwrap();
        let factor = bichromatic_factor(&q, &dim, 0, 1).unwrap();
        assert_eq!(factor.len(), 2);
        let c = &factor.cycles[0];
        let once = kempe_exchange(&q, &dim, 0, 1, c).unwrap();
        assert_ne!(once, dim);
        assert!(EdgeColoring::new(&q, once.as_slice().to_vec(), 3).is_ok());
        let sizes = |c: &EdgeColoring| c.classes().iter().map(EdgeSet::len).collect::<Vec<_>>();
        assert_eq!(sizes(&once), sizes(&dim));
        assert_eq!(kempe_exchange(&q, &once, 0, 1, c).unwrap(), dim);
    }

    #[test]
    fn kempe_on_k4_swaps_globally() {
        let k4 = generators::k4();
        let c = three_edge_coloring(&k4).unwrap();
        let factor = bichromatic_factor(&k4, &c, 0, 1).unwrap();
        assert_eq!(factor.len(), 1);
        let swapped = kempe_exchange(&k4, &c, 0, 1, &factor.cycles[0]).unwrap();
        let relabelled: Vec<u8> = c.as_slice().iter().map(|&x| [1, 0, 2][x as usize]).collect();
        assert_eq!(swapped.as_slice(), &relabelled[..]);
    }

    #[test]
    fn kempe_rejects_foreign_cycles() {
        let q = generators::cube_q3();
        let dim = EdgeColoring::new(&q, (0..12).map(|e| (e / 4) as u8).collect(), 3).unwrap();
        let other = bichromatic_factor(&q, &dim, 1, 2).unwrap();
        assert!(kempe_exchange(&q, &dim, 0, 1, &other.cycles[0]).is_err());
    }

    #[test]
    fn improper_colourings_are_rejected() {
        let k4 = generators::k4();
        assert_eq!(EdgeColoring::new(&k4, vec![0; 6], 3), Err(Error::ImproperColoring(0)));
    }
}
