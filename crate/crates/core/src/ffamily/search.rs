use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;

use crate::budget::{Budget, SearchOutcome};
use crate::edgeset::{EdgeSet, Matching};
use crate::graph::{CubicGraph, CycleSet, EdgeId};
use crate::matchcolor::{enumerate_perfect_matchings, two_factor_cycles, PerfectMatching, DEFAULT_PM_LIMIT};

use super::family::{check_cycle, family_with_derived_n, FFamily};

/// Search for an F-family, for the given perfect matching or, if none is
/// given, for every perfect matching in sorted order. Members are labelled
/// in order of first use, so each family is found once up to renaming.
/// `NotFound` is only reported after an exhaustive search.
pub fn find_ffamily(g: &CubicGraph, m: Option<&PerfectMatching>, budget: &Budget) -> SearchOutcome<FFamily> {
    let (pms, truncated) = match m {
        Some(m) => (vec![m.clone()], false),
        None => {
            let e = enumerate_perfect_matchings(g, Some(DEFAULT_PM_LIMIT));
            (e.matchings, e.truncated)
        }
    };
    let out_of_budget = AtomicBool::new(false);
    let found = pms.par_iter().find_map_first(|m| match family_for(g, m, budget) {
        SearchOutcome::Found(f) => Some(f),
        SearchOutcome::Unknown => {
            out_of_budget.store(true, Ordering::Relaxed);
            None
        }
        SearchOutcome::NotFound => None,
    });
    match found {
        Some(f) => SearchOutcome::Found(f),
        None if truncated || out_of_budget.load(Ordering::Relaxed) => SearchOutcome::Unknown,
        None => SearchOutcome::NotFound,
    }
}

struct LabelSearch<'a> {
    g: &'a CubicGraph,
    cycles: CycleSet,
    /// Matching edges in the order they are labelled.
    order: Vec<EdgeId>,
    /// Order index of the matching edge at each vertex.
    slot: Vec<usize>,
    /// Cycles of the two ends of each ordered edge.
    touches: Vec<[usize; 2]>,
    /// Order index after which each cycle is fully labelled.
    last: Vec<usize>,
    odd: Vec<bool>,
    budget: &'a Budget,
}

struct State {
    labels: Vec<Option<usize>>,
    count: Vec<[u8; 4]>,
    used: usize,
}

fn family_for(g: &CubicGraph, m: &PerfectMatching, budget: &Budget) -> SearchOutcome<FFamily> {
    let cycles = two_factor_cycles(g, m).expect("complement of a perfect matching is a 2-factor");
    let at = cycles.locate(g.vertex_count());
    let mut order = Vec::new();
    let mut seen = EdgeSet::empty(g.edge_count());
    for c in cycles.iter() {
        for &v in &c.vertices {
            let e = g
                .incident(v)
                .iter()
                .copied()
                .find(|&e| m.contains(e))
                .expect("perfect matching");
            if !seen.contains(e) {
                seen.insert(e);
                order.push(e);
            }
        }
    }
    let touches: Vec<[usize; 2]> = order
        .iter()
        .map(|&e| {
            let (u, v) = g.endpoints(e);
            [at[u].expect("on a cycle").0, at[v].expect("on a cycle").0]
        })
        .collect();
    let mut last = vec![0; cycles.len()];
    for (i, t) in touches.iter().enumerate() {
        for &c in t {
            last[c] = last[c].max(i);
        }
    }
    let odd = cycles.iter().map(|c| c.is_odd()).collect();
    let mut slot = vec![0; g.vertex_count()];
    for (i, &e) in order.iter().enumerate() {
        let (u, v) = g.endpoints(e);
        slot[u] = i;
        slot[v] = i;
    }
    let s = LabelSearch {
        g,
        cycles,
        order,
        slot,
        touches,
        last,
        odd,
        budget,
    };
    let mut st = State {
        labels: vec![None; s.order.len()],
        count: vec![[0; 4]; s.cycles.len()],
        used: 0,
    };
    let mut found = None;
    match s.run(0, &mut st, m, &mut found) {
        Err(()) => SearchOutcome::Unknown,
        Ok(()) => match found {
            Some(f) => SearchOutcome::Found(f),
            None => SearchOutcome::NotFound,
        },
    }
}

impl LabelSearch<'_> {
    fn partial_ok(&self, st: &State, c: usize) -> bool {
        let k = st.count[c];
        let total: u8 = k.iter().sum();
        if total > 4 {
            return false;
        }
        if self.odd[c] {
            return k.iter().all(|&x| x <= 1);
        }
        let distinct = k.iter().filter(|&&x| x > 0).count();
        distinct <= 2 && (distinct < 2 || k.iter().all(|&x| x <= 2))
    }

    fn complete_ok(&self, st: &State, c: usize) -> bool {
        let cycle = &self.cycles.cycles[c];
        check_cycle(cycle, |v| st.labels[self.slot[v]]).is_ok()
    }

    fn run(&self, i: usize, st: &mut State, m: &PerfectMatching, found: &mut Option<FFamily>) -> Result<(), ()> {
        if !self.budget.tick() {
            return Err(());
        }
        if i == self.order.len() {
            if st.used < 4 {
                return Ok(());
            }
            let ecount = self.g.edge_count();
            let members: [Matching; 4] = std::array::from_fn(|x| {
                let ids = self
                    .order
                    .iter()
                    .zip(&st.labels)
                    .filter(|(_, l)| **l == Some(x))
                    .map(|(e, _)| *e);
                Matching::new(self.g, EdgeSet::from_ids(ecount, ids).expect("in range")).expect("sub-matching")
            });
            *found = family_with_derived_n(self.g, m.clone(), members).ok().flatten();
            return Ok(());
        }
        let choices = std::iter::once(None).chain((0..(st.used + 1).min(4)).map(Some));
        for l in choices {
            st.labels[i] = l;
            let prev_used = st.used;
            if let Some(x) = l {
                for &c in &self.touches[i] {
                    st.count[c][x] += 1;
                }
                st.used = st.used.max(x + 1);
            }
            let mut ok = l.is_none() || self.touches[i].iter().all(|&c| self.partial_ok(st, c));
            if ok {
                ok = self.touches[i]
                    .iter()
                    .all(|&c| self.last[c] != i || self.complete_ok(st, c));
            }
            if ok {
                self.run(i + 1, st, m, found)?;
            }
            if let Some(x) = l {
                for &c in &self.touches[i] {
                    st.count[c][x] -= 1;
                }
            }
            st.used = prev_used;
            st.labels[i] = None;
            if found.is_some() {
                return Ok(());
            }
        }
        Ok(())
    }
}
