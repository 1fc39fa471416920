use crate::edgeset::{EdgeSet, Matching};
use crate::error::{Error, Result};
use crate::graph::CubicGraph;
use crate::matchcolor::{
    split_and_suppress_paired, three_edge_colorable, EdgeColoring, PerfectMatching, SuppressedGraph,
};

use super::types::{t_partition, FRTriple};

/// Validate that `a1`, `a2` are disjoint matchings whose union is a set of
/// disjoint cycles.
pub(crate) fn check_cycle_pair(g: &CubicGraph, a1: &Matching, a2: &Matching) -> Result<()> {
    Matching::new(g, a1.edges().clone())?;
    Matching::new(g, a2.edges().clone())?;
    if let Some(e) = a1.first_common(a2) {
        return Err(Error::NotDisjoint(e));
    }
    g.cycle_decomposition(&a1.union(a2)?)?;
    Ok(())
}

/// Build an FR-triple with `T2 = a1` and `T0 = a2` from a 3-edge-colouring
/// of the graph obtained by splitting `a1` (paired along `a2`).
///
/// Every edge of a suppressed edge's chain takes that edge's colour; chains
/// closing into vertexless loops take colour 0, except the loops made of
/// `a2` edges, which stay uncovered. Each `a1` edge joins the two colour
/// classes missing from its neighbouring chain.
pub fn fr_triple_from_matchings(g: &CubicGraph, a1: &Matching, a2: &Matching) -> Result<FRTriple> {
    check_cycle_pair(g, a1, a2)?;
    let s = split_and_suppress_paired(g, a1, a2)?;
    let colorings = three_edge_colorable(&s).ok_or(Error::NotColourable("A1"))?;
    lift(g, a1, a2, &s, &colorings)
}

pub(crate) fn lift(
    g: &CubicGraph,
    a1: &Matching,
    a2: &Matching,
    s: &SuppressedGraph,
    colorings: &[EdgeColoring],
) -> Result<FRTriple> {
    let m = g.edge_count();
    let mut color: Vec<Option<u8>> = vec![None; m];
    for (comp, coloring) in s.components.iter().zip(colorings) {
        for (i, chain) in comp.edge_chains.iter().enumerate() {
            for &e in chain {
                color[e] = Some(coloring.color(i));
            }
        }
    }
    for chain in &s.loops {
        if chain.iter().all(|&e| a2.contains(e)) {
            continue;
        }
        if chain.iter().any(|&e| a2.contains(e)) {
            return Err(Error::Invariant("a vertexless loop mixes A2 and other edges".into()));
        }
        for &e in chain {
            color[e] = Some(0);
        }
    }
    let mut classes = [EdgeSet::empty(m), EdgeSet::empty(m), EdgeSet::empty(m)];
    for (e, c) in color.iter().enumerate() {
        if let Some(c) = c {
            classes[*c as usize].insert(e);
        }
    }
    for ab in a1.iter() {
        let (a, _) = g.endpoints(ab);
        let third = g
            .incident(a)
            .iter()
            .copied()
            .find(|&e| e != ab && !a2.contains(e))
            .ok_or_else(|| Error::Invariant(format!("no third edge at vertex {a}")))?;
        let c = color[third].ok_or_else(|| Error::Invariant(format!("edge {third} left uncoloured")))?;
        for (k, class) in classes.iter_mut().enumerate() {
            if k as u8 != c {
                class.insert(ab);
            }
        }
    }
    let [c0, c1, c2] = classes;
    let pm =
        |set: EdgeSet| PerfectMatching::new(g, set).map_err(|e| Error::Invariant(format!("lifted colour class: {e}")));
    let triple = FRTriple::new(pm(c0)?, pm(c1)?, pm(c2)?)?;
    let p = t_partition(g, &triple)?;
    if &p.t2 != a1.edges() || &p.t0 != a2.edges() {
        return Err(Error::Invariant("lifted triple has the wrong T-partition".into()));
    }
    Ok(triple)
}
