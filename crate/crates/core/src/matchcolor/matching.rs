use std::fmt;
use std::ops::Deref;

use crate::budget::Budget;
use crate::edgeset::{EdgeSet, Matching};
use crate::error::{Error, Result};
use crate::graph::{CubicGraph, CycleSet, EdgeId, MultiGraph, VertexId};

/// Enumeration cutoff used when the caller does not give one.
pub const DEFAULT_PM_LIMIT: usize = 1_000_000;

/// A matching that saturates every vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PerfectMatching(Matching);

impl PerfectMatching {
    pub fn new(g: &MultiGraph, set: EdgeSet) -> Result<Self> {
        let m = Matching::new(g, set)?;
        if 2 * m.len() != g.vertex_count() {
            let mut covered = vec![false; g.vertex_count()];
            for e in m.iter() {
                let (u, v) = g.endpoints(e);
                covered[u] = true;
                covered[v] = true;
            }
            let v = covered.iter().position(|c| !c).unwrap_or(0);
            return Err(Error::NotPerfect(v));
        }
        Ok(PerfectMatching(m))
    }

    pub fn from_ids(g: &MultiGraph, ids: impl IntoIterator<Item = EdgeId>) -> Result<Self> {
        Self::new(g, EdgeSet::from_ids(g.edge_count(), ids)?)
    }

    pub(crate) fn new_unchecked(set: EdgeSet) -> Self {
        PerfectMatching(Matching::new_unchecked(set))
    }

    pub fn matching(&self) -> &Matching {
        &self.0
    }
}

impl Deref for PerfectMatching {
    type Target = Matching;

    fn deref(&self) -> &Matching {
        &self.0
    }
}

impl fmt::Debug for PerfectMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PM{:?}", self.0.edges())
    }
}

/// Result of [`enumerate_perfect_matchings`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingEnumeration {
    /// Sorted lexicographically by edge ids.
    pub matchings: Vec<PerfectMatching>,
    /// Set when the search stopped at the limit with more matchings left.
    pub truncated: bool,
}

struct PmSearch<'a> {
    g: &'a MultiGraph,
    allowed: &'a EdgeSet,
    covered: Vec<bool>,
    chosen: Vec<EdgeId>,
    budget: &'a Budget,
    out_of_budget: bool,
}

impl PmSearch<'_> {
    fn has_option(&self, x: VertexId) -> bool {
        self.g.incident(x).iter().any(|&e| {
            let y = self.g.other_end(e, x);
            y != x && !self.covered[y] && self.allowed.contains(e)
        })
    }

    /// Returns `false` when the visitor asked to stop or the budget ran out.
    fn run(&mut self, from: VertexId, visit: &mut dyn FnMut(&[EdgeId]) -> bool) -> bool {
        if !self.budget.tick() {
            self.out_of_budget = true;
            return false;
        }
        let n = self.g.vertex_count();
        let Some(v) = (from..n).find(|&v| !self.covered[v]) else {
            return visit(&self.chosen);
        };
        let mut options: Vec<EdgeId> = self
            .g
            .incident(v)
            .iter()
            .copied()
            .filter(|&e| {
                let w = self.g.other_end(e, v);
                w != v && !self.covered[w] && self.allowed.contains(e)
            })
            .collect();
        options.sort_unstable();
        options.dedup();
        for e in options {
            let w = self.g.other_end(e, v);
            self.covered[v] = true;
            self.covered[w] = true;
            let feasible = [v, w].iter().all(|&x| {
                self.g
                    .incident(x)
                    .iter()
                    .map(|&f| self.g.other_end(f, x))
                    .all(|y| self.covered[y] || self.has_option(y))
            });
            let keep_going = if feasible {
                self.chosen.push(e);
                let r = self.run(v + 1, visit);
                self.chosen.pop();
                r
            } else {
                true
            };
            self.covered[v] = false;
            self.covered[w] = false;
            if !keep_going {
                return false;
            }
        }
        true
    }
}

/// Depth-first search over perfect matchings using only `allowed` edges and
/// extending the vertices already in `pre`. Returns `false` if the budget ran
/// out before the search finished or the visitor stopped it.
pub(crate) fn search_perfect_matchings(
    g: &MultiGraph,
    allowed: &EdgeSet,
    pre: &[EdgeId],
    budget: &Budget,
    visit: &mut dyn FnMut(&[EdgeId]) -> bool,
) -> (bool, bool) {
    let mut s = PmSearch {
        g,
        allowed,
        covered: vec![false; g.vertex_count()],
        chosen: pre.to_vec(),
        budget,
        out_of_budget: false,
    };
    for &e in pre {
        let (u, v) = g.endpoints(e);
        s.covered[u] = true;
        s.covered[v] = true;
    }
    let finished = s.run(0, visit);
    (finished, s.out_of_budget)
}

/// All perfect matchings of `g`, sorted lexicographically by edge ids.
///
/// With a limit, at most `limit` matchings are returned and `truncated`
/// reports whether more exist. A graph with an odd number of vertices has
/// none.
pub fn enumerate_perfect_matchings(g: &MultiGraph, limit: Option<usize>) -> MatchingEnumeration {
    let limit = limit.unwrap_or(DEFAULT_PM_LIMIT);
    let mut matchings = Vec::new();
    let mut truncated = false;
    if g.vertex_count().is_multiple_of(2) {
        let all = g.all_edges();
        let m = g.edge_count();
        search_perfect_matchings(g, &all, &[], &Budget::unlimited(), &mut |chosen| {
            if matchings.len() == limit {
                truncated = true;
                return false;
            }
            let set = EdgeSet::from_ids(m, chosen.iter().copied()).expect("edge ids in range");
            matchings.push(PerfectMatching::new_unchecked(set));
            true
        });
    }
    matchings.sort();
    MatchingEnumeration { matchings, truncated }
}

/// Some perfect matching containing `include` and avoiding `exclude`.
pub fn find_perfect_matching(g: &MultiGraph, include: &Matching, exclude: &EdgeSet) -> Result<Option<PerfectMatching>> {
    let include = Matching::new(g, include.edges().clone())?;
    if exclude.universe() != g.edge_count() {
        return Err(Error::HostMismatch {
            expected: g.edge_count(),
            found: exclude.universe(),
        });
    }
    if let Some(e) = include.first_common(exclude) {
        return Err(Error::NotDisjoint(e));
    }
    let allowed = exclude.complement();
    let mut found = None;
    search_perfect_matchings(g, &allowed, &include.to_vec(), &Budget::unlimited(), &mut |chosen| {
        let set = EdgeSet::from_ids(g.edge_count(), chosen.iter().copied()).expect("edge ids in range");
        found = Some(PerfectMatching::new_unchecked(set));
        false
    });
    Ok(found)
}

/// Whether `a` equals `m ∩ m'` for some perfect matching `m'`.
pub fn is_m_balanced(g: &MultiGraph, m: &PerfectMatching, a: &Matching) -> Result<bool> {
    if !a.is_subset(m) {
        return Err(Error::NotSubset("the balanced candidate"));
    }
    let exclude = m.difference(a)?;
    Ok(find_perfect_matching(g, a, &exclude)?.is_some())
}

/// The cycles of `G \ M`.
pub fn two_factor_cycles(g: &CubicGraph, m: &PerfectMatching) -> Result<CycleSet> {
    g.cycle_decomposition(&m.complement())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use proptest::prelude::*;

    /// Independent oracle: every subset of n/2 edges that is a matching.
    fn brute_force_pms(g: &MultiGraph) -> Vec<Vec<EdgeId>> {
        let m = g.edge_count();
        let k = g.vertex_count() / 2;
        let mut out = Vec::new();
        let mut combo: Vec<usize> = (0..k).collect();
        if k > m {
            return out;
        }
        loop {
            let mut seen = vec![false; g.vertex_count()];
            let ok = combo.iter().all(|&e| {
                let (u, v) = g.endpoints(e);
                let fresh = u != v && !seen[u] && !seen[v];
                seen[u] = true;
                seen[v] = true;
                fresh
            });
            if ok {
                out.push(combo.clone());
            }
            if !crate::graph::next_combination(&mut combo, m) {
                break;
            }
        }
        out
    }

    fn ids(e: &MatchingEnumeration) -> Vec<Vec<EdgeId>> {
        e.matchings.iter().map(|p| p.to_vec()).collect()
    }

    #[test]
    fn counts_on_named_graphs() {
        assert_eq!(
            enumerate_perfect_matchings(&generators::petersen(), None)
                .matchings
                .len(),
            6
        );
        assert_eq!(enumerate_perfect_matchings(&generators::k4(), None).matchings.len(), 3);
        assert_eq!(
            enumerate_perfect_matchings(&generators::theta(), None).matchings.len(),
            3
        );
        assert_eq!(enumerate_perfect_matchings(&generators::k33(), None).matchings.len(), 6);
        assert_eq!(
            enumerate_perfect_matchings(&generators::cube_q3(), None)
                .matchings
                .len(),
            9
        );
    }

    #[test]
    fn agrees_with_brute_force() {
        for g in [
            generators::petersen(),
            generators::flower_snark(3).unwrap(),
            generators::cube_q3(),
            generators::doubled_matching_cycle(8).unwrap(),
            generators::ten_vertex_c5_example(),
        ] {
            let e = enumerate_perfect_matchings(&g, None);
            assert!(!e.truncated);
            assert_eq!(ids(&e), brute_force_pms(&g));
        }
    }

    #[test]
    fn odd_order_has_none() {
        let g = MultiGraph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(enumerate_perfect_matchings(&g, None).matchings.is_empty());
    }

    #[test]
    fn truncation_is_flagged() {
        let g = generators::petersen();
        let e = enumerate_perfect_matchings(&g, Some(4));
        assert!(e.truncated);
        assert_eq!(e.matchings.len(), 4);
        let e = enumerate_perfect_matchings(&g, Some(6));
        assert!(!e.truncated);
        assert_eq!(e.matchings.len(), 6);
    }

    #[test]
    fn find_with_constraints() {
        let p = generators::petersen();
        for e in 0..15 {
            let inc = Matching::from_ids(&p, [e]).unwrap();
            let pm = find_perfect_matching(&p, &inc, &EdgeSet::empty(15)).unwrap().unwrap();
            assert!(pm.contains(e));
        }
        let k4 = generators::k4();
        // edge 0 = 01; disjoint from it only 23 (edge 5)
        let inc = Matching::from_ids(&k4, [0]).unwrap();
        let exc = EdgeSet::from_ids(6, [5]).unwrap();
        assert_eq!(find_perfect_matching(&k4, &inc, &exc).unwrap(), None);
        let full = enumerate_perfect_matchings(&p, None).matchings[2].clone();
        let got = find_perfect_matching(&p, &full, &EdgeSet::empty(15)).unwrap().unwrap();
        assert_eq!(got, full);
        let bad = EdgeSet::from_ids(15, [0, 1]).unwrap();
        assert!(find_perfect_matching(&p, &Matching::new_unchecked(bad), &EdgeSet::empty(15)).is_err());
    }

    #[test]
    fn petersen_balanced_subsets() {
        let p = generators::petersen();
        let pms = enumerate_perfect_matchings(&p, None).matchings;
        // pairwise intersections of distinct matchings are single edges
        for (i, a) in pms.iter().enumerate() {
            for b in &pms[i + 1..] {
                assert_eq!(a.intersection(b).unwrap().len(), 1);
            }
        }
        let m = &pms[0];
        assert!(is_m_balanced(&p, m, m).unwrap());
        for e in m.iter() {
            let a = Matching::from_ids(&p, [e]).unwrap();
            assert!(is_m_balanced(&p, m, &a).unwrap());
        }
        let two: Vec<_> = m.iter().take(2).collect();
        let a = Matching::from_ids(&p, two).unwrap();
        assert!(!is_m_balanced(&p, m, &a).unwrap());
        let outside = Matching::from_ids(&p, [m.complement().iter().next().unwrap()]).unwrap();
        assert!(is_m_balanced(&p, m, &outside).is_err());
    }

    #[test]
    fn two_factors() {
        let p = generators::petersen();
        for pm in enumerate_perfect_matchings(&p, None).matchings {
            let cs = two_factor_cycles(&p, &pm).unwrap();
            assert_eq!(cs.iter().map(|c| c.len()).collect::<Vec<_>>(), vec![5, 5]);
        }
        let k4 = generators::k4();
        let pm = PerfectMatching::from_ids(&k4, [0, 5]).unwrap();
        assert_eq!(two_factor_cycles(&k4, &pm).unwrap().cycles[0].len(), 4);
        let t = generators::ten_vertex_c5_example();
        let m = PerfectMatching::from_ids(&t, 10..15).unwrap();
        let cs = two_factor_cycles(&t, &m).unwrap();
        assert_eq!(cs.cycles[0].vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!(cs.cycles[1].vertices, vec![5, 6, 7, 8, 9]);
    }

    #[test]
    fn not_perfect_is_reported() {
        let p = generators::petersen();
        assert_eq!(PerfectMatching::from_ids(&p, [10, 11]), Err(Error::NotPerfect(2)));
    }

    proptest! {
        // balanced subsets of a PM are exactly the intersections with other PMs
        #[test]
        fn balanced_iff_some_intersection(pick in 0usize..9, mask in 0u32..16) {
            let g = generators::cube_q3();
            let pms = enumerate_perfect_matchings(&g, None).matchings;
            let m = &pms[pick];
            let members: Vec<EdgeId> = m.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e).collect();
            let a = Matching::from_ids(&g, members).unwrap();
            let oracle = pms.iter().any(|q| &m.intersection(q).unwrap() == a.edges());
            prop_assert_eq!(is_m_balanced(&g, m, &a).unwrap(), oracle);
        }
    }
}
