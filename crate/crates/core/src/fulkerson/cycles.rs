//! Search over pairs `(A1, A2)` of disjoint matchings whose union is a set
//! of disjoint even cycles, alternating between the two matchings.

use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;

use crate::budget::{Budget, SearchOutcome};
use crate::edgeset::{EdgeSet, Matching};
use crate::graph::{CubicGraph, EdgeId, MultiGraph, VertexId};

/// Limits of the cycle-system search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleSearchLimits {
    /// Longest cycle considered.
    pub max_cycle_len: usize,
    /// Most cycles in one system.
    pub max_cycles: usize,
}

impl CycleSearchLimits {
    /// Every even cycle and every system size: the search is exhaustive.
    pub fn exhaustive(g: &MultiGraph) -> Self {
        CycleSearchLimits {
            max_cycle_len: g.vertex_count(),
            max_cycles: g.vertex_count() / 2,
        }
    }

    fn is_exhaustive(&self, g: &MultiGraph) -> bool {
        self.max_cycle_len >= g.vertex_count() && 2 * self.max_cycles >= g.vertex_count()
    }
}

impl Default for CycleSearchLimits {
    fn default() -> Self {
        CycleSearchLimits {
            max_cycle_len: 10,
            max_cycles: 8,
        }
    }
}

#[derive(Clone, Debug)]
struct EvenCycle {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

/// Simple even cycles of length at most `max_len`, shortest first, each
/// listed once (starting at its lowest vertex, first edge id below last).
fn even_cycles(g: &MultiGraph, max_len: usize, budget: &Budget) -> Option<Vec<EvenCycle>> {
    let mut out = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    for s in 0..g.vertex_count() {
        let mut vs = vec![s];
        let mut es = Vec::new();
        on_path[s] = true;
        if !grow(g, s, max_len, &mut vs, &mut es, &mut on_path, &mut out, budget) {
            return None;
        }
        on_path[s] = false;
    }
    out.sort_by(|a, b| a.edges.len().cmp(&b.edges.len()).then_with(|| a.edges.cmp(&b.edges)));
    Some(out)
}

#[allow(clippy::too_many_arguments)]
fn grow(
    g: &MultiGraph,
    s: VertexId,
    max_len: usize,
    vs: &mut Vec<VertexId>,
    es: &mut Vec<EdgeId>,
    on_path: &mut [bool],
    out: &mut Vec<EvenCycle>,
    budget: &Budget,
) -> bool {
    if !budget.tick() {
        return false;
    }
    let last = *vs.last().expect("starts at s");
    for &e in g.incident(last) {
        if es.last() == Some(&e) {
            continue;
        }
        let w = g.other_end(e, last);
        if w == s {
            let len = es.len() + 1;
            if len >= 2 && len.is_multiple_of(2) && es[0] < e {
                let mut edges = es.clone();
                edges.push(e);
                out.push(EvenCycle {
                    vertices: vs.clone(),
                    edges,
                });
            }
            continue;
        }
        if w < s || on_path[w] || es.len() + 2 > max_len {
            continue;
        }
        on_path[w] = true;
        vs.push(w);
        es.push(e);
        let ok = grow(g, s, max_len, vs, es, on_path, out, budget);
        es.pop();
        vs.pop();
        on_path[w] = false;
        if !ok {
            return false;
        }
    }
    true
}

/// First system (in canonical order: fewer cycles first, then by cycle
/// index) whose pair `(A1, A2)` satisfies `accept`. The first cycle's
/// alternation is fixed when `symmetric` is set, since swapping every
/// alternation swaps `A1` and `A2`.
pub(crate) fn search_cycle_systems<T: Send>(
    g: &CubicGraph,
    limits: CycleSearchLimits,
    symmetric: bool,
    budget: &Budget,
    accept: &(dyn Fn(&Matching, &Matching) -> Option<T> + Sync),
) -> SearchOutcome<T> {
    let Some(cycles) = even_cycles(g, limits.max_cycle_len, budget) else {
        return SearchOutcome::Unknown;
    };
    let m = g.edge_count();
    let empty = Matching::empty(g);
    if let Some(t) = accept(&empty, &empty) {
        return SearchOutcome::Found(t);
    }
    let out_of_budget = AtomicBool::new(false);
    for depth in 1..=limits.max_cycles {
        let found = (0..cycles.len()).into_par_iter().find_map_first(|first| {
            let mut used = vec![false; g.vertex_count()];
            for &v in &cycles[first].vertices {
                used[v] = true;
            }
            let mut chosen = vec![first];
            let mut sys = SystemSearch {
                cycles: &cycles,
                used,
                depth,
                symmetric,
                universe: m,
                budget,
                accept,
            };
            let r = sys.extend(&mut chosen);
            if matches!(r, Err(())) {
                out_of_budget.store(true, Ordering::Relaxed);
            }
            r.ok().flatten()
        });
        if let Some(t) = found {
            return SearchOutcome::Found(t);
        }
        if out_of_budget.load(Ordering::Relaxed) {
            return SearchOutcome::Unknown;
        }
    }
    if limits.is_exhaustive(g) {
        SearchOutcome::NotFound
    } else {
        SearchOutcome::Unknown
    }
}

struct SystemSearch<'a, T> {
    cycles: &'a [EvenCycle],
    used: Vec<bool>,
    depth: usize,
    symmetric: bool,
    universe: usize,
    budget: &'a Budget,
    accept: &'a (dyn Fn(&Matching, &Matching) -> Option<T> + Sync),
}

impl<T> SystemSearch<'_, T> {
    /// `Err` when the budget runs out.
    fn extend(&mut self, chosen: &mut Vec<usize>) -> Result<Option<T>, ()> {
        if !self.budget.tick() {
            return Err(());
        }
        if chosen.len() == self.depth {
            return self.try_alternations(chosen);
        }
        let start = chosen.last().map_or(0, |&c| c + 1);
        for i in start..self.cycles.len() {
            if self.cycles[i].vertices.iter().any(|&v| self.used[v]) {
                continue;
            }
            for &v in &self.cycles[i].vertices {
                self.used[v] = true;
            }
            chosen.push(i);
            let r = self.extend(chosen);
            chosen.pop();
            for &v in &self.cycles[i].vertices {
                self.used[v] = false;
            }
            if !matches!(r, Ok(None)) {
                return r;
            }
        }
        Ok(None)
    }

    fn try_alternations(&self, chosen: &[usize]) -> Result<Option<T>, ()> {
        let k = chosen.len();
        let free = if self.symmetric { k - 1 } else { k };
        for mask in 0u64..(1u64 << free) {
            if !self.budget.tick() {
                return Err(());
            }
            let mut a1 = EdgeSet::empty(self.universe);
            let mut a2 = EdgeSet::empty(self.universe);
            for (j, &c) in chosen.iter().enumerate() {
                let bit = if self.symmetric {
                    j > 0 && mask >> (j - 1) & 1 == 1
                } else {
                    mask >> j & 1 == 1
                };
                for (pos, &e) in self.cycles[c].edges.iter().enumerate() {
                    if (pos % 2 == 0) != bit {
                        a1.insert(e);
                    } else {
                        a2.insert(e);
                    }
                }
            }
            let (a1, a2) = (Matching::new_unchecked(a1), Matching::new_unchecked(a2));
            if let Some(t) = (self.accept)(&a1, &a2) {
                return Ok(Some(t));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn cycle_counts() {
        let k4 = generators::k4();
        // K4 has three 4-cycles and no other even cycles
        let cs = even_cycles(&k4, 4, &Budget::unlimited()).unwrap();
        assert_eq!(cs.len(), 3);
        let theta = generators::theta();
        let cs = even_cycles(&theta, 2, &Budget::unlimited()).unwrap();
        assert_eq!(cs.len(), 3);
        let p = generators::petersen();
        let cs = even_cycles(&p, 10, &Budget::unlimited()).unwrap();
        // the Petersen graph has 10 six-cycles, 15 eight-cycles, no 4- or 10-cycles
        assert_eq!(cs.iter().filter(|c| c.edges.len() == 6).count(), 10);
        assert_eq!(cs.iter().filter(|c| c.edges.len() == 8).count(), 15);
        assert_eq!(cs.len(), 25);
    }
}
