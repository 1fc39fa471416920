//! Multigraphs with edge identity, and the structural predicates the rest of
//! the crate relies on.
//!
//! Edges are identified by their dense id, never by their endpoint pair:
//! parallel edges are routine (suppression creates them) and a matching may
//! contain one copy of a doubled edge but not the other.

use std::ops::Deref;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<EdgeId>>,
}

impl MultiGraph {
    pub fn new(vertex_count: usize) -> Self {
        MultiGraph {
            edges: Vec::new(),
            adj: vec![Vec::new(); vertex_count],
        }
    }

    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        let mut g = Self::new(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Append an edge and return its id. A loop is listed twice in the
    /// adjacency of its vertex.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        for x in [u, v] {
            if x >= self.adj.len() {
                return Err(Error::UnknownVertex(x));
            }
        }
        let id = self.edges.len();
        self.edges.push((u, v));
        self.adj[u].push(id);
        self.adj[v].push(id);
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    #[inline]
    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Incident edge ids of `v`, in insertion order.
    #[inline]
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.adj[v]
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.edges.iter().enumerate().map(|(i, &(u, v))| (i, u, v))
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.adj.get(v).map(Vec::len).ok_or(Error::UnknownVertex(v))
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|a| a.len() == d)
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.edge_count())
    }

    /// Connected component index of every vertex, numbered by lowest vertex.
    pub fn components(&self) -> Vec<usize> {
        self.components_without(&EdgeSet::empty(self.edge_count()))
    }

    fn components_without(&self, removed: &EdgeSet) -> Vec<usize> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &e in &self.adj[v] {
                    if removed.contains(e) {
                        continue;
                    }
                    let w = self.other_end(e, v);
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    /// All cut edges, in increasing id order.
    pub fn bridges(&self) -> Vec<EdgeId> {
        let n = self.vertex_count();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut time = 0;
        let mut out = Vec::new();
        // (vertex, edge used to enter it, next adjacency index)
        let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            stack.push((root, None, 0));
            while let Some(&mut (v, parent_edge, ref mut idx)) = stack.last_mut() {
                if *idx < self.adj[v].len() {
                    let e = self.adj[v][*idx];
                    *idx += 1;
                    if Some(e) == parent_edge {
                        continue;
                    }
                    let w = self.other_end(e, v);
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, Some(e), 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let (Some(e), Some(&(p, _, _))) = (parent_edge, stack.last()) {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            out.push(e);
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// `true` iff the graph has no cut edge. Parallel edges are never bridges.
    pub fn is_bridgeless(&self) -> Result<bool> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.bridges().is_empty())
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut side = vec![u8::MAX; n];
        let mut stack = Vec::new();
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &e in &self.adj[v] {
                    let w = self.other_end(e, v);
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        stack.push(w);
                    } else if side[w] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Split an edge set in which every vertex has degree 0 or 2 into its
    /// cycles. Cycles are ordered by lowest vertex; each starts at its lowest
    /// vertex and leaves towards the lower-numbered neighbour.
    pub fn cycle_decomposition(&self, s: &EdgeSet) -> Result<CycleSet> {
        if s.universe() != self.edge_count() {
            return Err(Error::HostMismatch {
                expected: self.edge_count(),
                found: s.universe(),
            });
        }
        let n = self.vertex_count();
        let mut inc: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
        for e in s.iter() {
            let (u, v) = self.endpoints(e);
            if u == v {
                return Err(Error::Loop(e));
            }
            inc[u].push(e);
            inc[v].push(e);
        }
        for (v, list) in inc.iter().enumerate() {
            if !list.is_empty() && list.len() != 2 {
                return Err(Error::NotCycleUnion {
                    vertex: v,
                    degree: list.len(),
                });
            }
        }
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] || inc[start].is_empty() {
                continue;
            }
            let (e0, e1) = (inc[start][0], inc[start][1]);
            let key = |e: EdgeId| (self.other_end(e, start), e);
            let first = if key(e0) <= key(e1) { e0 } else { e1 };
            let mut vertices = vec![start];
            let mut edges = vec![first];
            seen[start] = true;
            let mut prev_edge = first;
            let mut cur = self.other_end(first, start);
            while cur != start {
                seen[cur] = true;
                vertices.push(cur);
                let next = if inc[cur][0] == prev_edge {
                    inc[cur][1]
                } else {
                    inc[cur][0]
                };
                edges.push(next);
                prev_edge = next;
                cur = self.other_end(next, cur);
            }
            cycles.push(Cycle { vertices, edges });
        }
        Ok(CycleSet { cycles })
    }
}

/// A closed walk with distinct edges: `edges[i]` joins `vertices[i]` and
/// `vertices[(i + 1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.len() % 2 == 1
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }
}

/// Vertex-disjoint cycles.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CycleSet {
    pub cycles: Vec<Cycle>,
}

impl CycleSet {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Cycle> {
        self.cycles.iter()
    }

    pub fn odd_count(&self) -> usize {
        self.cycles.iter().filter(|c| c.is_odd()).count()
    }

    /// For every vertex, `(cycle index, position)` if it lies on a cycle.
    pub fn locate(&self, vertex_count: usize) -> Vec<Option<(usize, usize)>> {
        let mut at = vec![None; vertex_count];
        for (ci, c) in self.cycles.iter().enumerate() {
            for (pos, &v) in c.vertices.iter().enumerate() {
                at[v] = Some((ci, pos));
            }
        }
        at
    }
}

/// A loopless multigraph in which every vertex has degree three.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicGraph(MultiGraph);

impl CubicGraph {
    pub fn new(g: MultiGraph) -> Result<Self> {
        for (e, u, v) in g.edges() {
            if u == v {
                return Err(Error::Loop(e));
            }
        }
        for v in 0..g.vertex_count() {
            let d = g.incident(v).len();
            if d != 3 {
                return Err(Error::BadDegree {
                    vertex: v,
                    degree: d,
                    expected: 3,
                });
            }
        }
        Ok(CubicGraph(g))
    }

    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        Self::new(MultiGraph::from_edges(vertex_count, edges)?)
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.0
    }

    pub fn into_graph(self) -> MultiGraph {
        self.0
    }

    /// `true` iff no edge cut with fewer than `k` edges leaves two sides
    /// that both contain a cycle. Decided by enumerating every edge subset
    /// of size below `k`.
    pub fn cyclic_edge_connectivity_at_least(&self, k: usize) -> Result<bool> {
        if !(1..=6).contains(&k) {
            return Err(Error::InvalidParameter(format!(
                "cyclic connectivity bound {k} outside 1..=6"
            )));
        }
        Ok(self.cyclic_cut_below(k).is_none())
    }

    /// A smallest cyclic edge cut with fewer than `k` edges, if any.
    pub fn cyclic_cut_below(&self, k: usize) -> Option<Vec<EdgeId>> {
        let m = self.edge_count();
        let mut removed = EdgeSet::empty(m);
        for size in 0..k.min(m + 1) {
            let mut combo: Vec<usize> = (0..size).collect();
            loop {
                for &e in &combo {
                    removed.insert(e);
                }
                let cyclic = self.cyclic_components_without(&removed);
                for &e in &combo {
                    removed.remove(e);
                }
                if cyclic >= 2 {
                    return Some(combo);
                }
                if !next_combination(&mut combo, m) {
                    break;
                }
            }
        }
        None
    }

    /// Number of components of `G - removed` that contain a cycle.
    fn cyclic_components_without(&self, removed: &EdgeSet) -> usize {
        let comp = self.0.components_without(removed);
        let count = comp.iter().copied().max().map_or(0, |c| c + 1);
        let mut vertices = vec![0usize; count];
        let mut edges = vec![0usize; count];
        for &c in &comp {
            vertices[c] += 1;
        }
        for (e, u, _) in self.0.edges() {
            if !removed.contains(e) {
                edges[comp[u]] += 1;
            }
        }
        (0..count).filter(|&c| edges[c] >= vertices[c]).count()
    }
}

/// Advance `combo` (strictly increasing indices below `n`) to the next
/// combination in lexicographic order.
pub(crate) fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

impl Deref for CubicGraph {
    type Target = MultiGraph;

    fn deref(&self) -> &MultiGraph {
        &self.0
    }
}

impl AsRef<MultiGraph> for CubicGraph {
    fn as_ref(&self) -> &MultiGraph {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn naive_bridgeless(g: &MultiGraph) -> bool {
        (0..g.edge_count()).all(|e| {
            let removed = EdgeSet::from_ids(g.edge_count(), [e]).unwrap();
            g.components_without(&removed).iter().all(|&c| c == 0)
        })
    }

    fn two_triangles_and_bridge() -> MultiGraph {
        MultiGraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]).unwrap()
    }

    #[test]
    fn degrees() {
        let theta = generators::theta();
        assert_eq!(theta.degree(0).unwrap(), 3);
        assert_eq!(theta.degree(1).unwrap(), 3);
        let p = generators::petersen();
        assert!((0..10).all(|v| p.degree(v).unwrap() == 3));
        let star = MultiGraph::from_edges(2, (0..5).map(|_| (0, 1))).unwrap();
        assert_eq!(star.degree(1).unwrap(), 5);
        assert_eq!(p.degree(10), Err(Error::UnknownVertex(10)));
        let mut looped = MultiGraph::new(1);
        looped.add_edge(0, 0).unwrap();
        assert_eq!(looped.degree(0).unwrap(), 2);
    }

    #[test]
    fn bridges() {
        assert!(generators::k4().is_bridgeless().unwrap());
        let g = two_triangles_and_bridge();
        assert_eq!(g.bridges(), vec![6]);
        assert!(!g.is_bridgeless().unwrap());
        assert!(generators::flower_snark(5).unwrap().is_bridgeless().unwrap());
        let split = MultiGraph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(split.is_bridgeless(), Err(Error::Disconnected));
        // parallel edges protect each other
        assert!(generators::theta().is_bridgeless().unwrap());
    }

    #[test]
    fn bridge_finder_matches_naive_oracle() {
        let mut graphs: Vec<MultiGraph> = vec![
            generators::k4().into_graph(),
            generators::k33().into_graph(),
            generators::petersen().into_graph(),
            generators::theta().into_graph(),
            generators::cube_q3().into_graph(),
            generators::flower_snark(3).unwrap().into_graph(),
            generators::doubled_matching_cycle(8).unwrap().into_graph(),
            generators::ten_vertex_c5_example().into_graph(),
            two_triangles_and_bridge(),
        ];
        // a cubic graph with a bridge: two K4-minus-an-edge blocks
        graphs.push(
            MultiGraph::from_edges(
                8,
                [
                    (0, 1),
                    (0, 2),
                    (1, 2),
                    (1, 3),
                    (2, 3),
                    (4, 5),
                    (4, 6),
                    (5, 6),
                    (5, 7),
                    (6, 7),
                    (0, 4),
                    (3, 7),
                ],
            )
            .unwrap(),
        );
        for g in &graphs {
            assert_eq!(g.bridges().is_empty(), naive_bridgeless(g), "{g:?}");
        }
    }

    #[test]
    fn cyclic_connectivity_examples() {
        let p = generators::petersen();
        assert!(p.cyclic_edge_connectivity_at_least(4).unwrap());
        assert!(p.cyclic_edge_connectivity_at_least(5).unwrap());
        assert!(!p.cyclic_edge_connectivity_at_least(6).unwrap());
        let j3 = generators::flower_snark(3).unwrap();
        assert!(!j3.cyclic_edge_connectivity_at_least(4).unwrap());
        assert!(generators::theta().cyclic_edge_connectivity_at_least(1).unwrap());
        assert!(p.cyclic_edge_connectivity_at_least(0).is_err());
        assert!(p.cyclic_edge_connectivity_at_least(7).is_err());
    }

    #[test]
    fn cyclic_connectivity_is_monotone() {
        for g in [
            generators::petersen(),
            generators::cube_q3(),
            generators::k33(),
            generators::flower_snark(3).unwrap(),
            generators::ten_vertex_c5_example(),
        ] {
            let values: Vec<bool> = (1..=6)
                .map(|k| g.cyclic_edge_connectivity_at_least(k).unwrap())
                .collect();
            assert!(values.windows(2).all(|w| w[0] >= w[1]), "{values:?}");
        }
    }

    #[test]
    fn bipartite() {
        let star = MultiGraph::from_edges(2, (0..5).map(|_| (0, 1))).unwrap();
        assert!(star.is_bipartite());
        assert!(!generators::k4().is_bipartite());
        assert!(generators::k33().is_bipartite());
    }

    #[test]
    fn cycle_decomposition_examples() {
        let c6 = MultiGraph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let cs = c6.cycle_decomposition(&c6.all_edges()).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs.cycles[0].vertices, vec![0, 1, 2, 3, 4, 5]);

        let p = generators::petersen();
        // spokes are a perfect matching
        let spokes = EdgeSet::from_ids(15, 10..15).unwrap();
        let cs = p.cycle_decomposition(&spokes.complement()).unwrap();
        assert_eq!(cs.len(), 2);
        assert!(cs.iter().all(|c| c.len() == 5));
        let covered: usize = cs.iter().map(Cycle::len).sum();
        assert_eq!(covered, 10);

        assert!(matches!(
            p.cycle_decomposition(&spokes),
            Err(Error::NotCycleUnion { vertex: 0, degree: 1 })
        ));
    }

    #[test]
    fn combinations_enumerate_in_order() {
        let mut c = vec![0, 1];
        let mut all = vec![c.clone()];
        while next_combination(&mut c, 4) {
            all.push(c.clone());
        }
        assert_eq!(
            all,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
    }
}
