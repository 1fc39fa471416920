//! Named cubic graphs and the dot product.
//!
//! Vertex numbering is fixed per family and documented on each constructor,
//! so that certificates stay meaningful across runs.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeId, MultiGraph, VertexId};

/// Structured name of a vertex: family, role tag and block index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexLabel {
    pub family: &'static str,
    pub role: String,
    pub index: Option<usize>,
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some(i) => write!(f, "{}{}", self.role, i),
            None => write!(f, "{}", self.role),
        }
    }
}

/// Bijection between vertex labels and vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NamedVertexMap {
    labels: Vec<VertexLabel>,
}

impl NamedVertexMap {
    fn push(&mut self, family: &'static str, role: &str, index: Option<usize>) {
        self.labels.push(VertexLabel {
            family,
            role: role.to_string(),
            index,
        });
    }

    pub fn label(&self, v: VertexId) -> &VertexLabel {
        &self.labels[v]
    }

    pub fn id(&self, role: &str, index: Option<usize>) -> Option<VertexId> {
        self.labels.iter().position(|l| l.role == role && l.index == index)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

fn cubic(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> CubicGraph {
    CubicGraph::from_edges(n, edges).expect("generator produces a cubic graph")
}

/// Outer 5-cycle on 0..5 (edges 0..5), inner pentagram on 5..10 with
/// `5+i ~ 5+(i+2)%5` (edges 5..10), spokes `i ~ i+5` (edges 10..15).
pub fn petersen() -> CubicGraph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    cubic(10, outer.chain(inner).chain(spokes))
}

fn odd_at_least_three(k: usize, what: &str) -> Result<()> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("{what} needs an odd k >= 3, got {k}")));
    }
    Ok(())
}

/// Flower snark `J_k` for odd `k >= 3`.
///
/// `x_i = i`, `y_i = k+i`, `z_i = 2k+i`, `t_i = 3k+i`. Edges: the k-cycle on
/// the `x_i`, the 2k-cycle `y_0 .. y_{k-1} z_0 .. z_{k-1} y_0`, then the claws
/// `t_i x_i, t_i y_i, t_i z_i`.
pub fn flower_snark(k: usize) -> Result<CubicGraph> {
    flower_snark_named(k).map(|(g, _)| g)
}

pub fn flower_snark_named(k: usize) -> Result<(CubicGraph, NamedVertexMap)> {
    odd_at_least_three(k, "flower snark")?;
    let (x, y, z, t) = (0, k, 2 * k, 3 * k);
    let mut edges = Vec::with_capacity(6 * k);
    edges.extend((0..k).map(|i| (x + i, x + (i + 1) % k)));
    edges.extend((0..k - 1).map(|i| (y + i, y + i + 1)));
    edges.push((y + k - 1, z));
    edges.extend((0..k - 1).map(|i| (z + i, z + i + 1)));
    edges.push((z + k - 1, y));
    for i in 0..k {
        edges.push((t + i, x + i));
        edges.push((t + i, y + i));
        edges.push((t + i, z + i));
    }
    let mut names = NamedVertexMap::default();
    for role in ["x", "y", "z", "t"] {
        for i in 0..k {
            names.push("flower", role, Some(i));
        }
    }
    Ok((cubic(4 * k, edges), names))
}

/// Goldberg graph `G_k` for odd `k >= 3`, on `8k` vertices.
///
/// Block `i` occupies ids `8i..8i+8` named `a_i..h_i`. Inside a block `a` is
/// the hub vertex and `b..h` form the Petersen graph with a 2-path removed:
/// `ab, bg, bh, ce, cg, eh, dh, df, fg`. Blocks are joined by the hub cycle
/// `a_i a_{i+1}` and by `e_i c_{i+1}`, `f_i d_{i+1}`.
pub fn goldberg(k: usize) -> Result<CubicGraph> {
    goldberg_named(k).map(|(g, _)| g)
}

pub fn goldberg_named(k: usize) -> Result<(CubicGraph, NamedVertexMap)> {
    odd_at_least_three(k, "Goldberg graph")?;
    const ROLES: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];
    let v = |i: usize, r: usize| 8 * (i % k) + r;
    let (a, b, c, d, e, f, g, h) = (0, 1, 2, 3, 4, 5, 6, 7);
    let mut edges = Vec::with_capacity(12 * k);
    for i in 0..k {
        for (p, q) in [(a, b), (b, g), (b, h), (c, e), (c, g), (e, h), (d, h), (d, f), (f, g)] {
            edges.push((v(i, p), v(i, q)));
        }
    }
    for i in 0..k {
        edges.push((v(i, a), v(i + 1, a)));
        edges.push((v(i, e), v(i + 1, c)));
        edges.push((v(i, f), v(i + 1, d)));
    }
    let mut names = NamedVertexMap::default();
    for i in 0..k {
        for role in ROLES {
            names.push("goldberg", role, Some(i));
        }
    }
    Ok((cubic(8 * k, edges), names))
}

/// Two vertices joined by three parallel edges.
pub fn theta() -> CubicGraph {
    cubic(2, [(0, 1), (0, 1), (0, 1)])
}

pub fn k4() -> CubicGraph {
    cubic(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

/// Sides `{0,1,2}` and `{3,4,5}`; edge `3i+j` joins `i` and `3+j`.
pub fn k33() -> CubicGraph {
    cubic(6, (0..3).flat_map(|i| (0..3).map(move |j| (i, 3 + j))))
}

/// The 3-cube on `0..8`; edges `4d..4d+4` flip bit `d`.
pub fn cube_q3() -> CubicGraph {
    let mut edges = Vec::with_capacity(12);
    for bit in [1, 2, 4] {
        for v in 0..8 {
            if v & bit == 0 {
                edges.push((v, v | bit));
            }
        }
    }
    cubic(8, edges)
}

/// The cycle `v_0 .. v_{m-1}` with the edges `v_{2i} v_{2i+1}` doubled.
/// Cycle edges come first (`i` joins `v_i v_{i+1}`), then the extra copies.
pub fn doubled_matching_cycle(m: usize) -> Result<CubicGraph> {
    if m < 4 || m % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "doubled matching cycle needs an even length >= 4, got {m}"
        )));
    }
    let cycle = (0..m).map(|i| (i, (i + 1) % m));
    let copies = (0..m / 2).map(|i| (2 * i, 2 * i + 1));
    Ok(cubic(m, cycle.chain(copies)))
}

/// Two 5-cycles `abcde` (ids 0..5) and `12345` (ids 5..10) with the cross
/// edges `a2, b4, c3, d5, e1` (edge ids 10..15, in that order).
pub fn ten_vertex_c5_example() -> CubicGraph {
    ten_vertex_c5_example_named().0
}

pub fn ten_vertex_c5_example_named() -> (CubicGraph, NamedVertexMap) {
    let letters = |c: char| (c as u8 - b'a') as usize;
    let digits = |d: usize| 4 + d;
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend((0..5).map(|i| (5 + i, 5 + (i + 1) % 5)));
    for (c, d) in [('a', 2), ('b', 4), ('c', 3), ('d', 5), ('e', 1)] {
        edges.push((letters(c), digits(d)));
    }
    let mut names = NamedVertexMap::default();
    for r in ["a", "b", "c", "d", "e", "1", "2", "3", "4", "5"] {
        names.push("c5pair", r, None);
    }
    (cubic(10, edges), names)
}

/// Parameters of `G1 . G2`: edges `e1 = u1v1`, `e2 = u2v2` of `G1` and
/// `e3 = x1x2` of `G2`. `u`/`v` follow the stored endpoint order of the edge.
/// `y1, y2` are the other neighbours of `x1` ordered by incident edge id, and
/// `swap_y` exchanges them; likewise `z1, z2` for `x2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DotProductSpec {
    pub e1: EdgeId,
    pub e2: EdgeId,
    pub e3: EdgeId,
    pub swap_y: bool,
    pub swap_z: bool,
}

impl DotProductSpec {
    pub fn new(e1: EdgeId, e2: EdgeId, e3: EdgeId) -> Self {
        DotProductSpec {
            e1,
            e2,
            e3,
            swap_y: false,
            swap_z: false,
        }
    }

    /// Every valid spec, in lexicographic order of `(e1, e2, e3, swap_y, swap_z)`
    /// with `e1 < e2`.
    pub fn enumerate(g1: &MultiGraph, g2: &MultiGraph) -> Vec<DotProductSpec> {
        let mut out = Vec::new();
        for e1 in 0..g1.edge_count() {
            for e2 in e1 + 1..g1.edge_count() {
                for e3 in 0..g2.edge_count() {
                    for swap_y in [false, true] {
                        for swap_z in [false, true] {
                            let s = DotProductSpec {
                                e1,
                                e2,
                                e3,
                                swap_y,
                                swap_z,
                            };
                            if s.validate(g1, g2).is_ok() {
                                out.push(s);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn validate(&self, g1: &MultiGraph, g2: &MultiGraph) -> Result<()> {
        self.resolve(g1, g2).map(|_| ())
    }

    fn resolve(&self, g1: &MultiGraph, g2: &MultiGraph) -> Result<Resolved> {
        let bad = |m: String| Err(Error::InvalidDotSpec(m));
        if self.e1 >= g1.edge_count() || self.e2 >= g1.edge_count() {
            return bad(format!("e1/e2 ({}, {}) not edges of G1", self.e1, self.e2));
        }
        if self.e1 == self.e2 {
            return bad("e1 equals e2".into());
        }
        let (u1, v1) = g1.endpoints(self.e1);
        let (u2, v2) = g1.endpoints(self.e2);
        if u1 == v1 || u2 == v2 {
            return bad("e1/e2 is a loop".into());
        }
        if [u1, v1].iter().any(|x| *x == u2 || *x == v2) {
            return bad(format!("e1 = {} and e2 = {} are adjacent", self.e1, self.e2));
        }
        if self.e3 >= g2.edge_count() {
            return bad(format!("e3 = {} not an edge of G2", self.e3));
        }
        let (x1, x2) = g2.endpoints(self.e3);
        if x1 == x2 {
            return bad("e3 is a loop".into());
        }
        let others = |x: VertexId, partner: VertexId, swap: bool| -> Result<[VertexId; 2]> {
            let rest: Vec<EdgeId> = g2.incident(x).iter().copied().filter(|&e| e != self.e3).collect();
            if rest.len() != 2 {
                return Err(Error::InvalidDotSpec(format!("vertex {x} of G2 is not cubic")));
            }
            let (a, b) = (g2.other_end(rest[0], x), g2.other_end(rest[1], x));
            if a == partner || b == partner || a == x || b == x {
                return Err(Error::InvalidDotSpec(format!(
                    "e3 = {} lies on a parallel pair or loop",
                    self.e3
                )));
            }
            if a == b {
                return Err(Error::InvalidDotSpec(format!(
                    "vertex {x} of G2 has a repeated neighbour"
                )));
            }
            Ok(if swap { [b, a] } else { [a, b] })
        };
        let ys = others(x1, x2, self.swap_y)?;
        let zs = others(x2, x1, self.swap_z)?;
        Ok(Resolved {
            u1,
            v1,
            u2,
            v2,
            x1,
            x2,
            ys,
            zs,
        })
    }
}

struct Resolved {
    u1: VertexId,
    v1: VertexId,
    u2: VertexId,
    v2: VertexId,
    x1: VertexId,
    x2: VertexId,
    ys: [VertexId; 2],
    zs: [VertexId; 2],
}

/// Where an edge of a dot product came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeOrigin {
    First(EdgeId),
    Second(EdgeId),
    /// One of `u1y1, v1y2, u2z1, v2z2`, by index.
    Joining(usize),
}

/// `G1 . G2` together with its provenance maps.
#[derive(Clone, Debug)]
pub struct DotProduct {
    pub graph: CubicGraph,
    pub origin: Vec<EdgeOrigin>,
    /// Image of each `G1` edge (`None` for `e1`, `e2`).
    pub first_edges: Vec<Option<EdgeId>>,
    /// Image of each `G2` edge (`None` for the five edges at `x1`, `x2`).
    pub second_edges: Vec<Option<EdgeId>>,
    /// Image of each `G2` vertex (`None` for `x1`, `x2`). `G1` vertices keep their ids.
    pub second_vertices: Vec<Option<VertexId>>,
}

/// Isaacs' dot product: `G1 - {e1, e2}` plus `G2 - {x1, x2}` plus the edges
/// `u1y1, v1y2, u2z1, v2z2`.
///
/// `G1` vertices keep their ids; the surviving `G2` vertices follow in order.
/// Surviving `G1` edges come first, then surviving `G2` edges, then the four
/// joining edges.
pub fn dot_product(g1: &CubicGraph, g2: &CubicGraph, spec: &DotProductSpec) -> Result<DotProduct> {
    let r = spec.resolve(g1, g2)?;
    let n1 = g1.vertex_count();
    let mut second_vertices = vec![None; g2.vertex_count()];
    let mut next = n1;
    for (v, slot) in second_vertices.iter_mut().enumerate() {
        if v != r.x1 && v != r.x2 {
            *slot = Some(next);
            next += 1;
        }
    }
    let mut g = MultiGraph::new(next);
    let mut origin = Vec::with_capacity(g1.edge_count() + g2.edge_count() - 1);
    let mut first_edges = vec![None; g1.edge_count()];
    for (e, u, v) in g1.edges() {
        if e != spec.e1 && e != spec.e2 {
            first_edges[e] = Some(g.add_edge(u, v)?);
            origin.push(EdgeOrigin::First(e));
        }
    }
    let mut second_edges = vec![None; g2.edge_count()];
    for (e, u, v) in g2.edges() {
        if let (Some(a), Some(b)) = (second_vertices[u], second_vertices[v]) {
            second_edges[e] = Some(g.add_edge(a, b)?);
            origin.push(EdgeOrigin::Second(e));
        }
    }
    let map2 = |v: VertexId| second_vertices[v].expect("neighbour of x1/x2 survives");
    let joins = [
        (r.u1, map2(r.ys[0])),
        (r.v1, map2(r.ys[1])),
        (r.u2, map2(r.zs[0])),
        (r.v2, map2(r.zs[1])),
    ];
    for (i, (a, b)) in joins.into_iter().enumerate() {
        g.add_edge(a, b)?;
        origin.push(EdgeOrigin::Joining(i));
    }
    Ok(DotProduct {
        graph: CubicGraph::new(g)?,
        origin,
        first_edges,
        second_edges,
        second_vertices,
    })
}

/// Simultaneous dot products along a perfect matching of a base graph.
///
/// Every base vertex disappears. For each base matching edge `x_i y_i` the
/// piece `i` loses its two edges `(u1 v1, u2 v2)`; `u1, v1` take over the two
/// other edges of `x_i` (by increasing edge id) and `u2, v2` those of `y_i`.
/// Piece vertices are laid out consecutively. Returns the graph and, for each
/// piece, the offset of its vertices.
pub fn dot_along_matching(
    base: &CubicGraph,
    base_matching: &[EdgeId],
    pieces: &[(CubicGraph, EdgeId, EdgeId)],
) -> Result<(CubicGraph, Vec<usize>)> {
    if base_matching.len() != pieces.len() || 2 * pieces.len() != base.vertex_count() {
        return Err(Error::InvalidParameter(
            "need one piece per edge of a perfect matching of the base".into(),
        ));
    }
    let mut offsets = Vec::with_capacity(pieces.len());
    let mut total = 0;
    for (p, e1, e2) in pieces {
        let spec = DotProductSpec::new(*e1, *e2, 0);
        // only the G1 half of the DotProductSpec matters here
        spec.resolve(p, &petersen())?;
        offsets.push(total);
        total += p.vertex_count();
    }
    // semi-edge endpoint in H for (base vertex, base edge)
    let mut port: Vec<Vec<(EdgeId, VertexId)>> = vec![Vec::new(); base.vertex_count()];
    let mut in_matching = vec![false; base.edge_count()];
    for (i, &me) in base_matching.iter().enumerate() {
        if me >= base.edge_count() || in_matching[me] {
            return Err(Error::InvalidParameter(format!("bad base matching edge {me}")));
        }
        in_matching[me] = true;
        let (x, y) = base.endpoints(me);
        let (p, e1, e2) = &pieces[i];
        let (u1, v1) = p.endpoints(*e1);
        let (u2, v2) = p.endpoints(*e2);
        let off = offsets[i];
        for (end, (a, b)) in [(x, (u1, v1)), (y, (u2, v2))] {
            if !port[end].is_empty() {
                return Err(Error::InvalidParameter("base matching is not a matching".into()));
            }
            let mut rest: Vec<EdgeId> = base.incident(end).iter().copied().filter(|&e| e != me).collect();
            rest.sort_unstable();
            port[end] = vec![(rest[0], off + a), (rest[1], off + b)];
        }
    }
    let mut g = MultiGraph::new(total);
    for (i, (p, e1, e2)) in pieces.iter().enumerate() {
        for (e, u, v) in p.edges() {
            if e != *e1 && e != *e2 {
                g.add_edge(offsets[i] + u, offsets[i] + v)?;
            }
        }
    }
    for (e, u, v) in base.edges() {
        if in_matching[e] {
            continue;
        }
        let find = |x: VertexId| {
            port[x]
                .iter()
                .find(|(pe, _)| *pe == e)
                .map(|&(_, h)| h)
                .ok_or_else(|| Error::InvalidParameter("base matching is not perfect".into()))
        };
        g.add_edge(find(u)?, find(v)?)?;
    }
    Ok((CubicGraph::new(g)?, offsets))
}

/// The 50-vertex graph obtained from the Petersen graph by dotting a Petersen
/// copy into every spoke. Each copy loses its spokes `0~5` and `1~6`, so the
/// union of the copies' outer and inner 5-cycles is a 2-factor of the result.
pub fn petersen_c5_cluster() -> CubicGraph {
    let base = petersen();
    let spokes: Vec<EdgeId> = (10..15).collect();
    let pieces: Vec<_> = (0..5).map(|_| (petersen(), 10, 11)).collect();
    dot_along_matching(&base, &spokes, &pieces)
        .expect("fixed construction is valid")
        .0
}
