use std::fmt;
use std::str::FromStr;

use crate::budget::Budget;
use crate::edgeset::{EdgeSet, Matching};
use crate::error::{Error, Result};
use crate::fulkerson::FulkersonCovering;
use crate::generators::{self, dot_product, DotProduct, DotProductSpec};
use crate::graph::{CubicGraph, CycleSet, EdgeId, MultiGraph};
use crate::matchcolor::{enumerate_perfect_matchings, two_factor_cycles, PerfectMatching};

use super::family::{covering_from_ffamily, verify_ffamily, FFamily};
use super::search::find_ffamily;

fn precondition(msg: impl Into<String>) -> Error {
    Error::DotPrecondition(msg.into())
}

/// Index of the cycle containing edge `e`.
fn cycle_of_edge(cs: &CycleSet, e: EdgeId) -> Option<usize> {
    cs.iter().position(|c| c.edges.contains(&e))
}

/// The two odd cycles of `G \ M`, if that is all there is.
fn two_odd_cycles(g: &CubicGraph, m: &PerfectMatching) -> Result<CycleSet> {
    let cs = two_factor_cycles(g, m)?;
    if cs.len() != 2 || cs.odd_count() != 2 {
        return Err(precondition(format!(
            "G \\ M must be exactly two odd cycles, found {} cycles ({} odd)",
            cs.len(),
            cs.odd_count()
        )));
    }
    Ok(cs)
}

/// Whether `e` of `M` joins two distinct odd cycles of `G \ M`.
fn joins_odd_cycles(g: &MultiGraph, cs: &CycleSet, e: EdgeId) -> bool {
    let at = cs.locate(g.vertex_count());
    let (u, v) = g.endpoints(e);
    match (at[u], at[v]) {
        (Some((a, _)), Some((b, _))) => a != b && cs.cycles[a].is_odd() && cs.cycles[b].is_odd(),
        _ => false,
    }
}

fn map_set(g: &MultiGraph, set: &EdgeSet, image: &[Option<EdgeId>]) -> Result<EdgeSet> {
    let mut out = EdgeSet::empty(g.edge_count());
    for e in set.iter() {
        let f = image[e].ok_or_else(|| Error::Invariant(format!("edge {e} does not survive the dot product")))?;
        out.insert(f);
    }
    Ok(out)
}

/// Transport a family carried by one side of a dot product, with the other
/// side contributing `other_m`. Edges that do not survive are dropped.
fn transport(
    d: &DotProduct,
    fam: &FFamily,
    fam_image: &[Option<EdgeId>],
    other_m: &EdgeSet,
    other_image: &[Option<EdgeId>],
) -> Result<FFamily> {
    let g = d.graph.graph();
    let mut m = EdgeSet::empty(g.edge_count());
    for (set, image) in [(fam.m().edges(), fam_image), (other_m, other_image)] {
        // e3 and its neighbours vanish; only e3 may be a matching edge
        for e in set.iter().filter_map(|e| image[e]) {
            m.insert(e);
        }
    }
    let members = [0, 1, 2, 3].map(|i| map_set(g, fam.members()[i].edges(), fam_image));
    let members: [Matching; 4] = {
        let mut out = Vec::with_capacity(4);
        for s in members {
            out.push(Matching::new(g, s?)?);
        }
        out.try_into().expect("four members")
    };
    let n = Matching::new(g, map_set(g, fam.n().edges(), fam_image)?)?;
    let m = PerfectMatching::new(g, m).map_err(|e| Error::Invariant(format!("transported matching: {e}")))?;
    let out = FFamily::new(g, m, members, n)?;
    let report = verify_ffamily(&d.graph, &out)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::FamilyInvalid(format!("transported family: {v}")));
    }
    Ok(out)
}

/// `G1 . G2` where `G2` carries the family. `G1 \ M1` must be two odd
/// cycles with `spec.e1` on one and `spec.e2` on the other; `spec.e3` must
/// be an edge of `M2` outside the family joining two odd cycles of
/// `G2 \ M2`. The family is kept, with `M = M1 ∪ M2 - e3`.
pub fn dot_preserve_type1(
    g1: &CubicGraph,
    m1: &PerfectMatching,
    g2: &CubicGraph,
    fam2: &FFamily,
    spec: &DotProductSpec,
) -> Result<(CubicGraph, FFamily)> {
    let cs1 = two_odd_cycles(g1, m1)?;
    match (cycle_of_edge(&cs1, spec.e1), cycle_of_edge(&cs1, spec.e2)) {
        (Some(a), Some(b)) if a != b => {}
        _ => return Err(precondition("e1 and e2 must lie on different cycles of G1 \\ M1")),
    }
    let report = verify_ffamily(g2, fam2)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::FamilyInvalid(v.to_string()));
    }
    let xy = spec.e3;
    if !fam2.m().contains(xy) {
        return Err(precondition(format!("e3 = {xy} is not in M2")));
    }
    if let Some(x) = fam2.member_of(xy) {
        return Err(precondition(format!(
            "e3 = {xy} belongs to member {}",
            super::MEMBER_NAMES[x]
        )));
    }
    if !joins_odd_cycles(g2, &report.cycles, xy) {
        return Err(precondition(format!(
            "e3 = {xy} does not join two odd cycles of G2 \\ M2"
        )));
    }
    let d = dot_product(g1, g2, spec)?;
    let fam = transport(&d, fam2, &d.second_edges, m1.edges(), &d.first_edges)?;
    Ok((d.graph, fam))
}

/// `G1 . G2` where `G1` carries the family. `spec.e1`, `spec.e2` must be
/// edges outside `M1` and `N`; `G2 \ M2` must be two odd cycles joined by
/// `spec.e3 ∈ M2`. The family is kept, with `M = M1 ∪ M2 - e3`.
pub fn dot_preserve_type2(
    g1: &CubicGraph,
    fam1: &FFamily,
    g2: &CubicGraph,
    m2: &PerfectMatching,
    spec: &DotProductSpec,
) -> Result<(CubicGraph, FFamily)> {
    let report = verify_ffamily(g1, fam1)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::FamilyInvalid(v.to_string()));
    }
    for e in [spec.e1, spec.e2] {
        if e >= g1.edge_count() {
            return Err(Error::UnknownEdge(e));
        }
        if fam1.m().contains(e) {
            return Err(precondition(format!("edge {e} of G1 is in M1")));
        }
        if fam1.n().contains(e) {
            return Err(precondition(format!("edge {e} of G1 is in N")));
        }
    }
    let cs2 = two_odd_cycles(g2, m2)?;
    if spec.e3 >= g2.edge_count() || !m2.contains(spec.e3) {
        return Err(precondition(format!("e3 = {} is not in M2", spec.e3)));
    }
    if !joins_odd_cycles(g2, &cs2, spec.e3) {
        return Err(precondition(format!(
            "e3 = {} does not join the two odd cycles",
            spec.e3
        )));
    }
    let d = dot_product(g1, g2, spec)?;
    let fam = transport(&d, fam1, &d.first_edges, m2.edges(), &d.second_edges)?;
    Ok((d.graph, fam))
}

/// First perfect matching (in sorted order) whose complement is two odd cycles.
pub fn two_odd_cycle_matching(g: &CubicGraph) -> Option<PerfectMatching> {
    enumerate_perfect_matchings(g, None)
        .matchings
        .into_iter()
        .find(|m| two_odd_cycles(g, m).is_ok())
}

/// First spec (lexicographic, no swaps) satisfying the type 1 preconditions.
pub fn first_type1_spec(
    g1: &CubicGraph,
    m1: &PerfectMatching,
    g2: &CubicGraph,
    fam2: &FFamily,
) -> Option<DotProductSpec> {
    let cs1 = two_odd_cycles(g1, m1).ok()?;
    let cs2 = two_factor_cycles(g2, fam2.m()).ok()?;
    let e3 = fam2
        .m()
        .iter()
        .find(|&e| fam2.member_of(e).is_none() && joins_odd_cycles(g2, &cs2, e))?;
    let (c, c2) = (&cs1.cycles[0], &cs1.cycles[1]);
    let mut e1s = c.edges.clone();
    e1s.sort_unstable();
    let mut e2s = c2.edges.clone();
    e2s.sort_unstable();
    for &a in &e1s {
        for &b in &e2s {
            let (e1, e2) = (a.min(b), a.max(b));
            let s = DotProductSpec::new(e1, e2, e3);
            if s.validate(g1, g2).is_ok() {
                return Some(s);
            }
        }
    }
    None
}

/// First spec (lexicographic, no swaps) satisfying the type 2 preconditions.
pub fn first_type2_spec(
    g1: &CubicGraph,
    fam1: &FFamily,
    g2: &CubicGraph,
    m2: &PerfectMatching,
) -> Option<DotProductSpec> {
    let cs2 = two_odd_cycles(g2, m2).ok()?;
    let e3 = m2.iter().find(|&e| joins_odd_cycles(g2, &cs2, e))?;
    let free: Vec<EdgeId> = (0..g1.edge_count())
        .filter(|&e| !fam1.m().contains(e) && !fam1.n().contains(e))
        .collect();
    for (i, &e1) in free.iter().enumerate() {
        for &e2 in &free[i + 1..] {
            let s = DotProductSpec::new(e1, e2, e3);
            if s.validate(g1, g2).is_ok() {
                return Some(s);
            }
        }
    }
    None
}

/// A graph used in an iterated dot product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseGraph {
    Petersen,
    /// The flower snark `J_k`, odd `k >= 5`.
    Flower(usize),
}

impl BaseGraph {
    pub fn build(self) -> Result<CubicGraph> {
        match self {
            BaseGraph::Petersen => Ok(generators::petersen()),
            BaseGraph::Flower(k) if k >= 5 => generators::flower_snark(k),
            BaseGraph::Flower(k) => Err(Error::InvalidParameter(format!(
                "flower snark J_{k} cannot be used in a dot-product sequence (need odd k >= 5)"
            ))),
        }
    }
}

impl FromStr for BaseGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        if s == "petersen" {
            return Ok(BaseGraph::Petersen);
        }
        let k = s
            .strip_prefix("flower")
            .or_else(|| s.strip_prefix('j'))
            .map(|r| r.trim_start_matches([':', ' ', '_']))
            .and_then(|r| r.parse::<usize>().ok())
            .ok_or_else(|| Error::InvalidParameter(format!("unknown graph {s:?}")))?;
        Ok(BaseGraph::Flower(k))
    }
}

impl fmt::Display for BaseGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseGraph::Petersen => f.write_str("petersen"),
            BaseGraph::Flower(k) => write!(f, "flower{k}"),
        }
    }
}

/// Which side of the product carries the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Preservation {
    /// `G . G_{n-1}`: the accumulated graph is the second factor.
    Type1,
    /// `G_{n-1} . G`: the accumulated graph is the first factor.
    Type2,
}

/// One step of an iterated dot product. Without a spec the first valid one
/// is used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DotStep {
    pub graph: BaseGraph,
    pub op: Preservation,
    pub spec: Option<DotProductSpec>,
}

#[derive(Clone, Debug)]
pub struct DotSequence {
    /// `(G_i, family)` for `i = 0 ..= n`.
    pub stages: Vec<(CubicGraph, FFamily)>,
    /// Spec used at each step.
    pub specs: Vec<DotProductSpec>,
    pub covering: FulkersonCovering,
}

impl DotSequence {
    pub fn graph(&self) -> &CubicGraph {
        &self.stages.last().expect("at least G_0").0
    }

    pub fn family(&self) -> &FFamily {
        &self.stages.last().expect("at least G_0").1
    }
}

/// `G_0 = base` with a searched family, then `G_i` from `G_{i-1}` by each
/// step in turn. Each intermediate family is verified; the final covering
/// comes from the family.
pub fn iterate_dot_sequence(base: BaseGraph, steps: &[DotStep], budget: &Budget) -> Result<DotSequence> {
    let g0 = base.build()?;
    let fam0 = find_ffamily(&g0, None, budget)
        .found()
        .ok_or_else(|| Error::FamilyInvalid(format!("no F-family found for {base}")))?;
    let mut stages = vec![(g0, fam0)];
    let mut specs = Vec::new();
    for (i, step) in steps.iter().enumerate() {
        let wrap = |e: Error| Error::Step {
            step: i + 1,
            source: Box::new(e),
        };
        let (g, fam) = stages.last().expect("nonempty");
        let h = step.graph.build().map_err(wrap)?;
        let hm = two_odd_cycle_matching(&h).ok_or_else(|| {
            wrap(precondition(format!(
                "{} has no matching leaving two odd cycles",
                step.graph
            )))
        })?;
        let (next, spec) = match step.op {
            Preservation::Type1 => {
                let spec = match step.spec {
                    Some(s) => s,
                    None => first_type1_spec(&h, &hm, g, fam).ok_or_else(|| wrap(precondition("no valid spec")))?,
                };
                (dot_preserve_type1(&h, &hm, g, fam, &spec).map_err(wrap)?, spec)
            }
            Preservation::Type2 => {
                let spec = match step.spec {
                    Some(s) => s,
                    None => first_type2_spec(g, fam, &h, &hm).ok_or_else(|| wrap(precondition("no valid spec")))?,
                };
                (dot_preserve_type2(g, fam, &h, &hm, &spec).map_err(wrap)?, spec)
            }
        };
        stages.push(next);
        specs.push(spec);
    }
    let (g, fam) = stages.last().expect("nonempty");
    let covering = covering_from_ffamily(g, fam)?;
    Ok(DotSequence {
        stages,
        specs,
        covering,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fulkerson::{is_proper, verify_covering};
    use crate::matchcolor::three_edge_coloring;

    fn petersen_family() -> (CubicGraph, FFamily) {
        let p = generators::petersen();
        let f = find_ffamily(&p, None, &Budget::unlimited()).found().unwrap();
        (p, f)
    }

    #[test]
    fn type1_petersen_petersen() {
        let (p, fam) = petersen_family();
        let m1 = two_odd_cycle_matching(&p).unwrap();
        let spec = first_type1_spec(&p, &m1, &p, &fam).unwrap();
        let (g, f) = dot_preserve_type1(&p, &m1, &p, &fam, &spec).unwrap();
        assert_eq!(g.vertex_count(), 18);
        assert!(g.is_bridgeless().unwrap());
        assert!(three_edge_coloring(&g).is_none());
        assert!(verify_ffamily(&g, &f).unwrap().is_valid());
    }

    #[test]
    fn type2_petersen_petersen() {
        let (p, fam) = petersen_family();
        let m2 = two_odd_cycle_matching(&p).unwrap();
        let spec = first_type2_spec(&p, &fam, &p, &m2).unwrap();
        let (g, f) = dot_preserve_type2(&p, &fam, &p, &m2, &spec).unwrap();
        assert_eq!(g.vertex_count(), 18);
        assert!(verify_ffamily(&g, &f).unwrap().is_valid());
    }

    #[test]
    fn preconditions() {
        let (p, fam) = petersen_family();
        let m1 = two_odd_cycle_matching(&p).unwrap();
        let spec = first_type1_spec(&p, &m1, &p, &fam).unwrap();
        // e3 inside member A
        let a = fam.members()[0].iter().next().unwrap();
        let bad = DotProductSpec { e3: a, ..spec };
        assert!(matches!(
            dot_preserve_type1(&p, &m1, &p, &fam, &bad),
            Err(Error::DotPrecondition(_))
        ));
        // e1 in N for type 2
        let m2 = m1.clone();
        let s2 = first_type2_spec(&p, &fam, &p, &m2).unwrap();
        let in_n = fam.n().iter().next().unwrap();
        let bad = DotProductSpec { e1: in_n, ..s2 };
        assert!(matches!(
            dot_preserve_type2(&p, &fam, &p, &m2, &bad),
            Err(Error::DotPrecondition(_))
        ));
        // e3 outside M2
        let off = (0..15).find(|&e| !m2.contains(e)).unwrap();
        let bad = DotProductSpec { e3: off, ..s2 };
        assert!(matches!(
            dot_preserve_type2(&p, &fam, &p, &m2, &bad),
            Err(Error::DotPrecondition(_))
        ));
        // a matching leaving a single cycle
        let q = generators::cube_q3();
        let mq = enumerate_perfect_matchings(&q, None).matchings[0].clone();
        assert!(matches!(
            dot_preserve_type1(&q, &mq, &p, &fam, &spec),
            Err(Error::DotPrecondition(_))
        ));
    }

    #[test]
    fn sequences() {
        let s0 = iterate_dot_sequence(BaseGraph::Petersen, &[], &Budget::unlimited()).unwrap();
        assert_eq!(s0.graph().vertex_count(), 10);
        let step = |op| DotStep {
            graph: BaseGraph::Petersen,
            op,
            spec: None,
        };
        let s2 = iterate_dot_sequence(
            BaseGraph::Petersen,
            &[step(Preservation::Type1), step(Preservation::Type2)],
            &Budget::unlimited(),
        )
        .unwrap();
        assert_eq!(
            s2.stages.iter().map(|(g, _)| g.vertex_count()).collect::<Vec<_>>(),
            vec![10, 18, 26]
        );
        assert!(verify_covering(s2.graph(), &s2.covering).unwrap().is_valid());
        assert!(is_proper(&s2.covering));
    }

    #[test]
    fn base_graph_names() {
        for (s, b) in [
            ("petersen", BaseGraph::Petersen),
            ("flower5", BaseGraph::Flower(5)),
            ("J7", BaseGraph::Flower(7)),
        ] {
            assert_eq!(s.parse::<BaseGraph>().unwrap(), b);
        }
        assert_eq!(BaseGraph::Flower(5).to_string(), "flower5");
        assert!(BaseGraph::Flower(3).build().is_err());
        assert!("goldberg5".parse::<BaseGraph>().is_err());
    }
}
