use std::collections::HashMap;

use crate::edgeset::{EdgeSet, Matching};
use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeId, MultiGraph, VertexId};

/// One connected component of a split-and-suppressed graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuppressedComponent {
    /// Cubic, but may carry loops at a vertex (which rule out colouring).
    pub graph: MultiGraph,
    /// Original vertex of each component vertex.
    pub vertex_origin: Vec<VertexId>,
    /// Original edges absorbed by each component edge, in walk order.
    pub edge_chains: Vec<Vec<EdgeId>>,
}

impl SuppressedComponent {
    /// The component as a cubic graph, failing if it carries a loop.
    pub fn cubic(&self) -> Result<CubicGraph> {
        CubicGraph::new(self.graph.clone())
    }
}

/// The graph obtained by splitting a matching and suppressing every
/// degree-2 vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuppressedGraph {
    pub components: Vec<SuppressedComponent>,
    pub loop_count: usize,
    /// Original edges forming each vertexless loop.
    pub loops: Vec<Vec<EdgeId>>,
}

/// Split every edge of `a` and suppress the degree-2 vertices.
///
/// Splitting `ab` deletes it and joins the two other edges at `a` to the two
/// other edges at `b`: lower id to lower id, higher to higher.
pub fn split_and_suppress(g: &CubicGraph, a: &Matching) -> Result<SuppressedGraph> {
    split_impl(g, a, None)
}

/// As [`split_and_suppress`], but at each split edge `ab` the edges of
/// `partner` at `a` and `b` are joined to each other, and so are the two
/// remaining edges. Either both ends of a split edge meet `partner` or
/// neither does.
pub fn split_and_suppress_paired(g: &CubicGraph, a: &Matching, partner: &Matching) -> Result<SuppressedGraph> {
    split_impl(g, a, Some(partner))
}

fn split_impl(g: &CubicGraph, a: &Matching, partner: Option<&Matching>) -> Result<SuppressedGraph> {
    let a = Matching::new(g, a.edges().clone())?;
    if let Some(p) = partner {
        let p = Matching::new(g, p.edges().clone())?;
        if let Some(e) = a.first_common(&p) {
            return Err(Error::NotDisjoint(e));
        }
    }
    let n = g.vertex_count();
    let mut split = vec![false; n];
    for e in a.iter() {
        let (u, v) = g.endpoints(e);
        split[u] = true;
        split[v] = true;
    }
    // continuation: arriving at a split vertex along an edge, leave along
    // the paired edge from the far side of the split edge
    let mut next: HashMap<(EdgeId, VertexId), (EdgeId, VertexId)> = HashMap::new();
    for ab in a.iter() {
        let (x, y) = g.endpoints(ab);
        let rest = |v: VertexId| -> Vec<EdgeId> {
            let mut r: Vec<EdgeId> = g.incident(v).iter().copied().filter(|&e| e != ab).collect();
            r.sort_unstable();
            r
        };
        let (mut rx, mut ry) = (rest(x), rest(y));
        if let Some(p) = partner {
            let order = |r: &mut Vec<EdgeId>, v: VertexId| -> Result<bool> {
                match r.iter().filter(|&&e| p.contains(e)).count() {
                    0 => Ok(false),
                    1 => {
                        r.sort_by_key(|&e| !p.contains(e));
                        Ok(true)
                    }
                    _ => Err(Error::PartnerMismatch(v)),
                }
            };
            let (hx, hy) = (order(&mut rx, x)?, order(&mut ry, y)?);
            if hx != hy {
                return Err(Error::PartnerMismatch(if hx { y } else { x }));
            }
        }
        for i in 0..2 {
            next.insert((rx[i], x), (ry[i], y));
            next.insert((ry[i], y), (rx[i], x));
        }
    }

    let mut used: HashMap<(EdgeId, VertexId), ()> = HashMap::new();
    let kept: Vec<VertexId> = (0..n).filter(|&v| !split[v]).collect();
    let mut new_id = vec![usize::MAX; n];
    for (i, &v) in kept.iter().enumerate() {
        new_id[v] = i;
    }
    // walk from a half-edge until a kept vertex is reached
    let walk = |start: EdgeId, from: VertexId, used: &mut HashMap<(EdgeId, VertexId), ()>| {
        let mut chain = vec![start];
        let mut e = start;
        used.insert((e, from), ());
        let mut at = g.other_end(e, from);
        loop {
            used.insert((e, at), ());
            if !split[at] {
                return (chain, Some(at));
            }
            let (e2, from2) = next[&(e, at)];
            if used.contains_key(&(e2, from2)) {
                return (chain, None);
            }
            used.insert((e2, from2), ());
            chain.push(e2);
            e = e2;
            at = g.other_end(e2, from2);
        }
    };

    let mut paths = Vec::new();
    for &v in &kept {
        let mut inc: Vec<EdgeId> = g.incident(v).to_vec();
        inc.sort_unstable();
        for e in inc {
            if used.contains_key(&(e, v)) {
                continue;
            }
            let (chain, end) = walk(e, v, &mut used);
            let end = end.expect("a path leaving a kept vertex ends at one");
            paths.push((chain, new_id[v], new_id[end]));
        }
    }
    // suppressed edges in order of their lowest original edge
    paths.sort_by_key(|(chain, _, _)| chain.iter().copied().min());
    let mut whole = MultiGraph::new(kept.len());
    let mut chains = Vec::with_capacity(paths.len());
    for (chain, u, v) in paths {
        whole.add_edge(u, v)?;
        chains.push(chain);
    }
    let mut loops = Vec::new();
    for (e, x, _) in g.edges() {
        if a.contains(e) || used.contains_key(&(e, x)) {
            continue;
        }
        let (chain, end) = walk(e, x, &mut used);
        debug_assert!(end.is_none());
        loops.push(chain);
    }

    let comp = whole.components();
    let count = comp.iter().copied().max().map_or(0, |c| c + 1);
    let mut components: Vec<SuppressedComponent> = (0..count)
        .map(|_| SuppressedComponent {
            graph: MultiGraph::new(0),
            vertex_origin: Vec::new(),
            edge_chains: Vec::new(),
        })
        .collect();
    let mut local = vec![0; kept.len()];
    for (i, &c) in comp.iter().enumerate() {
        local[i] = components[c].vertex_origin.len();
        components[c].vertex_origin.push(kept[i]);
    }
    for c in &mut components {
        c.graph = MultiGraph::new(c.vertex_origin.len());
    }
    for (e, u, v) in whole.edges() {
        let c = &mut components[comp[u]];
        c.graph.add_edge(local[u], local[v])?;
        c.edge_chains.push(chains[e].clone());
    }
    Ok(SuppressedGraph {
        components,
        loop_count: loops.len(),
        loops,
    })
}

impl SuppressedGraph {
    /// All original edges that survive in some component or loop.
    pub fn surviving_edges(&self, universe: usize) -> EdgeSet {
        let ids = self
            .components
            .iter()
            .flat_map(|c| c.edge_chains.iter().flatten())
            .chain(self.loops.iter().flatten())
            .copied();
        EdgeSet::from_ids(universe, ids).expect("chains hold original ids")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::matchcolor::three_edge_colorable;

    #[test]
    fn empty_split_is_identity() {
        for g in [generators::petersen(), generators::k4(), generators::theta()] {
            let s = split_and_suppress(&g, &Matching::empty(&g)).unwrap();
            assert_eq!(s.loop_count, 0);
            assert_eq!(s.components.len(), 1);
            let c = &s.components[0];
            assert_eq!(c.vertex_origin, (0..g.vertex_count()).collect::<Vec<_>>());
            assert_eq!(c.graph.edge_count(), g.edge_count());
            for (i, (e, u, v)) in g.edges().enumerate() {
                assert_eq!(c.edge_chains[i], vec![e]);
                let (x, y) = c.graph.endpoints(i);
                assert!((x, y) == (u, v) || (y, x) == (u, v));
            }
        }
    }

    #[test]
    fn doubled_four_cycle() {
        // v0..v3 cycle, edges 0:01 1:12 2:23 3:30, copies 4:01 5:23
        let g = generators::doubled_matching_cycle(4).unwrap();
        // splitting one copy of a doubled edge: the other copy closes on
        // itself, and v2, v3 keep a theta
        let s = split_and_suppress(&g, &Matching::from_ids(&g, [4]).unwrap()).unwrap();
        assert_eq!(s.components.len(), 1);
        assert_eq!(s.components[0].vertex_origin, vec![2, 3]);
        assert_eq!(s.components[0].graph.edge_count(), 3);
        assert_eq!(s.loop_count, 1);
        assert_eq!(s.loops, vec![vec![0]]);
        // splitting one copy of each doubled edge leaves only a closed cycle
        let s = split_and_suppress(&g, &Matching::from_ids(&g, [4, 5]).unwrap()).unwrap();
        assert!(s.components.is_empty());
        assert!(s.loop_count >= 1);
        let mut all: Vec<EdgeId> = s.loops.iter().flatten().copied().collect();
        all.sort_unstable();
        assert_eq!(all, vec![0, 1, 2, 3]);
    }

    #[test]
    fn every_surviving_edge_has_a_home() {
        let p = generators::petersen();
        let pm = crate::matchcolor::enumerate_perfect_matchings(&p, None).matchings[0].clone();
        let s = split_and_suppress(&p, &pm).unwrap();
        // splitting a whole perfect matching leaves only loops
        assert!(s.components.is_empty());
        assert_eq!(s.surviving_edges(15), pm.complement());
        let one = Matching::from_ids(&p, [pm.iter().next().unwrap()]).unwrap();
        let s = split_and_suppress(&p, &one).unwrap();
        assert_eq!(s.components.len(), 1);
        assert_eq!(s.components[0].graph.vertex_count(), 8);
        assert!(s.components[0].graph.is_regular(3));
        assert_eq!(s.surviving_edges(15), one.complement());
    }

    #[test]
    fn vacuous_colourability() {
        let s = SuppressedGraph {
            components: Vec::new(),
            loop_count: 5,
            loops: vec![Vec::new(); 5],
        };
        assert!(three_edge_colorable(&s).is_some());
        let k4 = generators::k4();
        assert!(three_edge_colorable(&split_and_suppress(&k4, &Matching::empty(&k4)).unwrap()).is_some());
        let p = generators::petersen();
        assert!(three_edge_colorable(&split_and_suppress(&p, &Matching::empty(&p)).unwrap()).is_none());
    }

    #[test]
    fn partner_must_meet_both_ends() {
        let p = generators::petersen();
        // split spoke 10 (0-5); partner outer edge 0 (0-1) only at vertex 0
        let a = Matching::from_ids(&p, [10]).unwrap();
        let partner = Matching::from_ids(&p, [0]).unwrap();
        assert!(matches!(
            split_and_suppress_paired(&p, &a, &partner),
            Err(Error::PartnerMismatch(5))
        ));
        assert!(split_and_suppress(&p, &Matching::new_unchecked(EdgeSet::from_ids(15, [0, 1]).unwrap())).is_err());
    }
}
