//! Six perfect matchings covering every edge exactly twice, as an exact
//! multiset cover over the matching/edge incidence matrix.

use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;

use crate::budget::{Budget, SearchOutcome};
use crate::graph::EdgeId;
use crate::matchcolor::PerfectMatching;

/// A branch: one or two matchings covering the chosen edge.
type Branch = (usize, Option<usize>);

pub(crate) struct ExactCover<'a> {
    pms: &'a [PerfectMatching],
    pm_edges: Vec<Vec<EdgeId>>,
    by_edge: Vec<Vec<usize>>,
    /// Forbid repeating a matching.
    distinct: bool,
    budget: &'a Budget,
}

#[derive(Clone)]
struct State {
    cover: Vec<u8>,
    count: Vec<u8>,
    chosen: Vec<usize>,
}

enum Flow {
    Continue,
    Stop,
    OutOfBudget,
}

impl<'a> ExactCover<'a> {
    pub(crate) fn new(universe: usize, pms: &'a [PerfectMatching], distinct: bool, budget: &'a Budget) -> Self {
        let pm_edges: Vec<Vec<EdgeId>> = pms.iter().map(|p| p.to_vec()).collect();
        let mut by_edge = vec![Vec::new(); universe];
        for (i, es) in pm_edges.iter().enumerate() {
            for &e in es {
                by_edge[e].push(i);
            }
        }
        ExactCover {
            pms,
            pm_edges,
            by_edge,
            distinct,
            budget,
        }
    }

    fn fits(&self, st: &State, p: usize, times: u8) -> bool {
        if self.distinct && (st.count[p] > 0 || times > 1) {
            return false;
        }
        self.pm_edges[p].iter().all(|&e| st.cover[e] + times <= 2)
    }

    fn fits_pair(&self, st: &State, p: usize, q: usize) -> bool {
        if !self.fits(st, p, 1) || !self.fits(st, q, 1) {
            return false;
        }
        // shared edges must still have room for both
        let (a, b) = (&self.pms[p], &self.pms[q]);
        a.iter().filter(|&e| b.contains(e)).all(|e| st.cover[e] == 0)
    }

    /// Branches at the most constrained edge; `None` when everything is covered.
    fn branches(&self, st: &State) -> Option<Vec<Branch>> {
        let mut best: Option<(usize, Vec<Branch>)> = None;
        for e in 0..st.cover.len() {
            let need = 2 - st.cover[e];
            if need == 0 {
                continue;
            }
            let cands: Vec<usize> = self.by_edge[e]
                .iter()
                .copied()
                .filter(|&p| self.fits(st, p, 1))
                .collect();
            let mut list = Vec::new();
            if need == 1 {
                list.extend(cands.iter().map(|&p| (p, None)));
            } else {
                for (i, &p) in cands.iter().enumerate() {
                    if self.fits(st, p, 2) {
                        list.push((p, Some(p)));
                    }
                    for &q in &cands[i + 1..] {
                        if self.fits_pair(st, p, q) {
                            list.push((p, Some(q)));
                        }
                    }
                }
            }
            if best.as_ref().is_none_or(|(k, _)| list.len() < *k) {
                let done = list.len() <= 1;
                best = Some((list.len(), list));
                if done {
                    break;
                }
            }
        }
        best.map(|(_, l)| l)
    }

    fn apply(&self, st: &mut State, b: Branch, sign: bool) {
        for p in std::iter::once(b.0).chain(b.1) {
            for &e in &self.pm_edges[p] {
                if sign {
                    st.cover[e] += 1;
                } else {
                    st.cover[e] -= 1;
                }
            }
            if sign {
                st.count[p] += 1;
                st.chosen.push(p);
            } else {
                st.count[p] -= 1;
                st.chosen.pop();
            }
        }
    }

    fn run(&self, st: &mut State, visit: &mut dyn FnMut(&[usize]) -> bool) -> Flow {
        if !self.budget.tick() {
            return Flow::OutOfBudget;
        }
        let Some(list) = self.branches(st) else {
            let mut sol = st.chosen.clone();
            sol.sort_unstable();
            return if visit(&sol) { Flow::Continue } else { Flow::Stop };
        };
        for b in list {
            self.apply(st, b, true);
            let r = self.run(st, visit);
            self.apply(st, b, false);
            match r {
                Flow::Continue => {}
                other => return other,
            }
        }
        Flow::Continue
    }

    fn root(&self) -> State {
        State {
            cover: vec![0; self.by_edge.len()],
            count: vec![0; self.pms.len()],
            chosen: Vec::new(),
        }
    }

    /// First solution in canonical branch order; root branches run in
    /// parallel without changing which solution is reported.
    pub(crate) fn first(&self) -> SearchOutcome<Vec<usize>> {
        let root = self.root();
        let Some(list) = self.branches(&root) else {
            return SearchOutcome::Found(Vec::new());
        };
        let out_of_budget = AtomicBool::new(false);
        let found = list.par_iter().find_map_first(|&b| {
            let mut st = root.clone();
            self.apply(&mut st, b, true);
            let mut found = None;
            if let Flow::OutOfBudget = self.run(&mut st, &mut |sol| {
                found = Some(sol.to_vec());
                false
            }) {
                out_of_budget.store(true, Ordering::Relaxed);
            }
            found
        });
        match found {
            Some(s) => SearchOutcome::Found(s),
            None if out_of_budget.load(Ordering::Relaxed) => SearchOutcome::Unknown,
            None => SearchOutcome::NotFound,
        }
    }

    /// Every solution (each multiset once), up to `limit`. The flag reports
    /// whether the enumeration finished.
    pub(crate) fn all(&self, limit: usize) -> (Vec<Vec<usize>>, bool) {
        let mut st = self.root();
        let mut out = Vec::new();
        let flow = self.run(&mut st, &mut |sol| {
            out.push(sol.to_vec());
            out.len() < limit
        });
        (out, matches!(flow, Flow::Continue))
    }
}
