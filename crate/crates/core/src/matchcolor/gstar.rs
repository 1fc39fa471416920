use crate::budget::{Budget, SearchOutcome};
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{CubicGraph, CycleSet, EdgeId, MultiGraph, VertexId};

use super::coloring::{k_edge_coloring, EdgeColoring};
use super::matching::PerfectMatching;

/// The multigraph obtained by shrinking each 5-cycle of a 2-factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GStar {
    pub graph: MultiGraph,
    /// G* vertex of each original vertex.
    pub vertex_of: Vec<VertexId>,
    /// Original matching edge behind each G* edge.
    pub edge_origin: Vec<EdgeId>,
}

/// Induced 5-cycles with exactly five edges inside, as `(vertices, edges)`
/// starting at the lowest vertex.
fn chordless_five_cycles(g: &MultiGraph) -> Vec<(Vec<VertexId>, Vec<EdgeId>)> {
    let mut out = Vec::new();
    for s in 0..g.vertex_count() {
        let mut path = vec![s];
        let mut edges = Vec::new();
        extend(g, s, &mut path, &mut edges, &mut out);
    }
    out
}

fn extend(
    g: &MultiGraph,
    s: VertexId,
    path: &mut Vec<VertexId>,
    edges: &mut Vec<EdgeId>,
    out: &mut Vec<(Vec<VertexId>, Vec<EdgeId>)>,
) {
    let last = *path.last().expect("path starts at s");
    let mut inc = g.incident(last).to_vec();
    inc.sort_unstable();
    for e in inc {
        let w = g.other_end(e, last);
        if path.len() == 5 {
            if w == s && path[1] < path[4] {
                edges.push(e);
                if induced_edges(g, path) == 5 {
                    out.push((path.clone(), edges.clone()));
                }
                edges.pop();
            }
            continue;
        }
        if w <= s || path.contains(&w) {
            continue;
        }
        path.push(w);
        edges.push(e);
        extend(g, s, path, edges, out);
        path.pop();
        edges.pop();
    }
}

fn induced_edges(g: &MultiGraph, vs: &[VertexId]) -> usize {
    vs.iter()
        .flat_map(|&v| g.incident(v).iter().map(move |&e| (e, v)))
        .filter(|&(e, v)| {
            let w = g.other_end(e, v);
            v < w && vs.contains(&w)
        })
        .count()
}

/// A perfect matching whose complement is a union of chordless 5-cycles.
pub fn find_c5_two_factor(g: &CubicGraph) -> Option<(PerfectMatching, CycleSet)> {
    let n = g.vertex_count();
    if n == 0 || !n.is_multiple_of(5) {
        return None;
    }
    let cycles = chordless_five_cycles(g);
    let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, (vs, _)) in cycles.iter().enumerate() {
        for &v in vs {
            by_vertex[v].push(i);
        }
    }
    let mut covered = vec![false; n];
    let mut chosen = Vec::new();
    if !cover(&cycles, &by_vertex, &mut covered, &mut chosen) {
        return None;
    }
    let factor = EdgeSet::from_ids(g.edge_count(), chosen.iter().flat_map(|&i| cycles[i].1.iter().copied()))
        .expect("ids in range");
    let m = PerfectMatching::new(g, factor.complement()).expect("complement of a 2-factor");
    let cs = g.cycle_decomposition(&factor).expect("2-factor");
    Some((m, cs))
}

fn cover(
    cycles: &[(Vec<VertexId>, Vec<EdgeId>)],
    by_vertex: &[Vec<usize>],
    covered: &mut [bool],
    chosen: &mut Vec<usize>,
) -> bool {
    let Some(v) = covered.iter().position(|c| !c) else {
        return true;
    };
    for &i in &by_vertex[v] {
        if cycles[i].0.iter().any(|&w| covered[w]) {
            continue;
        }
        for &w in &cycles[i].0 {
            covered[w] = true;
        }
        chosen.push(i);
        if cover(cycles, by_vertex, covered, chosen) {
            return true;
        }
        chosen.pop();
        for &w in &cycles[i].0 {
            covered[w] = false;
        }
    }
    false
}

/// Shrink every cycle of `cs` (which must be the chordless 5-cycles of
/// `G \ m`) to a vertex. G* edges follow the ids of the matching edges.
pub fn shrink_to_gstar(g: &CubicGraph, m: &PerfectMatching, cs: &CycleSet) -> Result<GStar> {
    let mut vertex_of = vec![usize::MAX; g.vertex_count()];
    let mut factor = EdgeSet::empty(g.edge_count());
    for (i, c) in cs.iter().enumerate() {
        if c.len() != 5 {
            return Err(Error::NotC5Factor(format!("cycle {i} has length {}", c.len())));
        }
        if induced_edges(g, &c.vertices) != 5 {
            return Err(Error::NotC5Factor(format!("cycle {i} has a chord")));
        }
        for &v in &c.vertices {
            if vertex_of[v] != usize::MAX {
                return Err(Error::NotC5Factor(format!("vertex {v} lies on two cycles")));
            }
            vertex_of[v] = i;
        }
        for &e in &c.edges {
            factor.insert(e);
        }
    }
    if factor != m.complement() {
        return Err(Error::NotC5Factor(
            "cycles are not the complement of the matching".into(),
        ));
    }
    let mut graph = MultiGraph::new(cs.len());
    let mut edge_origin = Vec::with_capacity(m.len());
    for e in m.iter() {
        let (u, v) = g.endpoints(e);
        graph.add_edge(vertex_of[u], vertex_of[v])?;
        edge_origin.push(e);
    }
    Ok(GStar {
        graph,
        vertex_of,
        edge_origin,
    })
}

/// A proper 5-edge-colouring of a 5-regular multigraph, if one exists.
pub fn five_edge_coloring(gstar: &MultiGraph) -> Result<Option<EdgeColoring>> {
    Ok(five_edge_coloring_within(gstar, &Budget::unlimited())?.found())
}

pub fn five_edge_coloring_within(gstar: &MultiGraph, budget: &Budget) -> Result<SearchOutcome<EdgeColoring>> {
    if !gstar.is_regular(5) {
        return Err(Error::NotRegular(5));
    }
    if gstar.has_loop() {
        return Ok(SearchOutcome::NotFound);
    }
    Ok(k_edge_coloring(gstar, 5, budget))
}
