use std::fmt;

use crate::edgeset::{EdgeSet, Matching};
use crate::error::{Error, Result};
use crate::fulkerson::{is_proper, verify_covering, FulkersonCovering};
use crate::graph::{CubicGraph, Cycle, CycleSet, EdgeId, MultiGraph, VertexId};
use crate::matchcolor::{is_m_balanced, two_factor_cycles, PerfectMatching};

pub const MEMBER_NAMES: [char; 4] = ['A', 'B', 'C', 'D'];

/// Four pairwise disjoint nonempty sub-matchings `A, B, C, D` of a perfect
/// matching `M`, together with the set `N` of cycle edges pairing up the
/// family-incident vertices on each cycle of `G \ M`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FFamily {
    m: PerfectMatching,
    members: [Matching; 4],
    n: Matching,
}

impl FFamily {
    /// Checks the shape only: containment, disjointness, nonempty members,
    /// `N` a matching outside `M`. The family conditions are checked by
    /// [`verify_ffamily`].
    pub fn new(g: &MultiGraph, m: PerfectMatching, members: [Matching; 4], n: Matching) -> Result<Self> {
        let m = PerfectMatching::new(g, m.edges().clone())?;
        let n = Matching::new(g, n.edges().clone())?;
        for (i, x) in members.iter().enumerate() {
            let x = Matching::new(g, x.edges().clone())?;
            if x.is_empty() {
                return Err(Error::MalformedFamily(format!("member {} is empty", MEMBER_NAMES[i])));
            }
            if !x.is_subset(&m) {
                return Err(Error::MalformedFamily(format!(
                    "member {} is not contained in M",
                    MEMBER_NAMES[i]
                )));
            }
        }
        for i in 0..4 {
            for j in i + 1..4 {
                if let Some(e) = members[i].first_common(&members[j]) {
                    return Err(Error::MalformedFamily(format!(
                        "members {} and {} share edge {e}",
                        MEMBER_NAMES[i], MEMBER_NAMES[j]
                    )));
                }
            }
        }
        if let Some(e) = n.first_common(&m) {
            return Err(Error::MalformedFamily(format!("N contains matching edge {e}")));
        }
        Ok(FFamily { m, members, n })
    }

    pub fn m(&self) -> &PerfectMatching {
        &self.m
    }

    pub fn members(&self) -> &[Matching; 4] {
        &self.members
    }

    pub fn n(&self) -> &Matching {
        &self.n
    }

    /// Member index of a matching edge, if it belongs to the family.
    pub fn member_of(&self, e: EdgeId) -> Option<usize> {
        self.members.iter().position(|x| x.contains(e))
    }

    /// `M` minus every member.
    pub fn free_edges(&self) -> EdgeSet {
        let mut s = self.m.edges().clone();
        for x in &self.members {
            for e in x.iter() {
                s.remove(e);
            }
        }
        s
    }
}

/// Which family condition a cycle breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// A member is not `M`-balanced.
    Balanced,
    /// Odd cycles carry exactly one end of each member.
    OddCycle,
    /// Even cycles carry no ends, or four in the shape `XXYY` or `XXXX`.
    EvenCycle,
    /// The four ends pair up along cycle edges, and `N` is such a pairing.
    Pairing,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// The cycle of `G \ M`, or `None` for a global failure.
    pub cycle: Option<usize>,
    pub condition: Condition,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.cycle {
            Some(c) => write!(f, "cycle {c}: {:?}: {}", self.condition, self.detail),
            None => write!(f, "{:?}: {}", self.condition, self.detail),
        }
    }
}

/// Outcome of [`verify_ffamily`]: the cycles of `G \ M` and the first
/// violated condition on each failing cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    pub cycles: CycleSet,
    pub violations: Vec<Violation>,
}

impl FamilyReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Member label of every vertex: the member containing its matching edge.
pub(crate) fn vertex_labels(g: &MultiGraph, members: &[Matching; 4]) -> Vec<Option<usize>> {
    let mut label = vec![None; g.vertex_count()];
    for (i, x) in members.iter().enumerate() {
        for e in x.iter() {
            let (u, v) = g.endpoints(e);
            label[u] = Some(i);
            label[v] = Some(i);
        }
    }
    label
}

/// Check one cycle of `G \ M` given the vertex labels. On success returns
/// every valid pairing `N` on this cycle (each a sorted pair of cycle edges),
/// in lexicographic order; the list is `[[]]` for a cycle without ends.
pub(crate) fn check_cycle(
    c: &Cycle,
    label: impl Fn(VertexId) -> Option<usize>,
) -> std::result::Result<Vec<Vec<EdgeId>>, (Condition, String)> {
    let len = c.len();
    let ends: Vec<(usize, usize)> = c
        .vertices
        .iter()
        .enumerate()
        .filter_map(|(p, &v)| label(v).map(|x| (p, x)))
        .collect();
    let mut count = [0usize; 4];
    for &(_, x) in &ends {
        count[x] += 1;
    }
    if c.is_odd() {
        if count != [1, 1, 1, 1] {
            return Err((
                Condition::OddCycle,
                format!("member ends per member {count:?}, expected one each"),
            ));
        }
    } else {
        if ends.is_empty() {
            return Ok(vec![Vec::new()]);
        }
        let mut shape: Vec<usize> = count.iter().copied().filter(|&k| k > 0).collect();
        shape.sort_unstable();
        if shape != [2, 2] && shape != [4] {
            return Err((
                Condition::EvenCycle,
                format!("member ends per member {count:?}, expected XXYY or XXXX"),
            ));
        }
    }
    // consecutive ends of one member must enclose an even number of vertices
    for (x, name) in MEMBER_NAMES.iter().enumerate() {
        let ps: Vec<usize> = ends.iter().filter(|&&(_, y)| y == x).map(|&(p, _)| p).collect();
        for (i, &p) in ps.iter().enumerate() {
            let q = ps[(i + 1) % ps.len()];
            let between = (q + len - p - 1) % len;
            if between % 2 == 1 {
                return Err((
                    Condition::Balanced,
                    format!("member {name} has an odd gap after position {p}"),
                ));
            }
        }
    }
    let is_end = |p: usize| ends.iter().any(|&(q, _)| q == p);
    // cycle edge i joins positions i and i + 1
    let cands: Vec<usize> = (0..len).filter(|&i| is_end(i) && is_end((i + 1) % len)).collect();
    let mut options = Vec::new();
    for (a, &i) in cands.iter().enumerate() {
        for &j in &cands[a + 1..] {
            let vs = [i, (i + 1) % len, j, (j + 1) % len];
            if vs[0] != vs[2] && vs[0] != vs[3] && vs[1] != vs[2] && vs[1] != vs[3] {
                let mut pair = vec![c.edges[i], c.edges[j]];
                pair.sort_unstable();
                options.push(pair);
            }
        }
    }
    options.sort();
    if options.is_empty() {
        return Err((
            Condition::Pairing,
            "the four ends admit no pairing by cycle edges".into(),
        ));
    }
    Ok(options)
}

/// Check conditions i-iii, balance of every member, and that `N` is a
/// valid pairing on every cycle.
pub fn verify_ffamily(g: &CubicGraph, fam: &FFamily) -> Result<FamilyReport> {
    let fam = FFamily::new(g, fam.m.clone(), fam.members.clone(), fam.n.clone())?;
    let cycles = two_factor_cycles(g, &fam.m)?;
    let mut violations = Vec::new();
    for (i, x) in fam.members.iter().enumerate() {
        if !is_m_balanced(g, &fam.m, x)? {
            violations.push(Violation {
                cycle: None,
                condition: Condition::Balanced,
                detail: format!("member {} is not M-balanced", MEMBER_NAMES[i]),
            });
        }
    }
    let label = vertex_labels(g, &fam.members);
    for (ci, c) in cycles.iter().enumerate() {
        let mut here: Vec<EdgeId> = c.edges.iter().copied().filter(|&e| fam.n.contains(e)).collect();
        here.sort_unstable();
        match check_cycle(c, |v| label[v]) {
            Err((condition, detail)) => violations.push(Violation {
                cycle: Some(ci),
                condition,
                detail,
            }),
            Ok(options) => {
                if !options.contains(&here) {
                    violations.push(Violation {
                        cycle: Some(ci),
                        condition: Condition::Pairing,
                        detail: format!("N restricted to this cycle is {here:?}, expected one of {options:?}"),
                    });
                }
            }
        }
    }
    Ok(FamilyReport { cycles, violations })
}

/// The set `N` for four candidate members: on each family-incident cycle the
/// lexicographically first pairing. `None` if some cycle fails a condition.
pub fn derive_n(g: &CubicGraph, m: &PerfectMatching, members: &[Matching; 4]) -> Result<Option<Matching>> {
    let cycles = two_factor_cycles(g, m)?;
    let label = vertex_labels(g, members);
    let mut n = EdgeSet::empty(g.edge_count());
    for c in cycles.iter() {
        match check_cycle(c, |v| label[v]) {
            Err(_) => return Ok(None),
            Ok(options) => {
                for e in &options[0] {
                    n.insert(*e);
                }
            }
        }
    }
    Ok(Some(Matching::new(g, n)?))
}

/// Build `M`, `N` and members into a family, deriving `N`.
pub fn family_with_derived_n(g: &CubicGraph, m: PerfectMatching, members: [Matching; 4]) -> Result<Option<FFamily>> {
    match derive_n(g, &m, &members)? {
        Some(n) => FFamily::new(g, m, members, n).map(Some),
        None => Ok(None),
    }
}

/// Restrictions of `M_X` to a cycle: forced by the ends of `X` on it, or
/// one of the two alternating perfect matchings of an even cycle without
/// ends.
fn restrictions(c: &Cycle, ends: &[usize]) -> Vec<Vec<EdgeId>> {
    let len = c.len();
    if ends.is_empty() {
        let even: Vec<EdgeId> = (0..len).step_by(2).map(|i| c.edges[i]).collect();
        let odd: Vec<EdgeId> = (1..len).step_by(2).map(|i| c.edges[i]).collect();
        return vec![even, odd];
    }
    let mut out = Vec::new();
    for (i, &p) in ends.iter().enumerate() {
        let q = if ends.len() == 1 {
            p + len
        } else {
            ends[(i + 1) % ends.len()]
        };
        let q = if q <= p { q + len } else { q };
        // inner vertices p+1..q-1 paired by edges p+1, p+3, ...
        let mut k = p + 1;
        while k + 1 < q {
            out.push(c.edges[k % len]);
            k += 2;
        }
    }
    vec![out]
}

/// The six matchings `M, M_A, M_B, M_C, M_D, M'` with
/// `M' = (M \ (A ∪ B ∪ C ∪ D)) ∪ N`.
///
/// On every cycle of `G \ M`, the restrictions of `M_A .. M_D` that are not
/// forced by member ends, and the pairing `N` when it is not unique, are
/// chosen so that the cycle's edges are covered twice. The family's own `N`
/// is tried first.
pub fn covering_from_ffamily(g: &CubicGraph, fam: &FFamily) -> Result<FulkersonCovering> {
    let report = verify_ffamily(g, fam)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::FamilyInvalid(v.to_string()));
    }
    let ecount = g.edge_count();
    let label = vertex_labels(g, &fam.members);
    let mut mx: Vec<EdgeSet> = fam.members.iter().map(|x| x.edges().clone()).collect();
    let mut m_prime = fam.free_edges();
    for (ci, c) in report.cycles.iter().enumerate() {
        let mut pairings = check_cycle(c, |v| label[v]).map_err(|(_, d)| Error::FamilyInvalid(d))?;
        let mut own: Vec<EdgeId> = c.edges.iter().copied().filter(|&e| fam.n.contains(e)).collect();
        own.sort_unstable();
        pairings.sort_by_key(|p| *p != own);
        let per_member: Vec<Vec<Vec<EdgeId>>> = (0..4)
            .map(|x| {
                let ends: Vec<usize> = (0..c.len()).filter(|&p| label[c.vertices[p]] == Some(x)).collect();
                restrictions(c, &ends)
            })
            .collect();
        let mut chosen = None;
        'search: for pairing in &pairings {
            let combos: usize = per_member.iter().map(|o| o.len()).product();
            for code in 0..combos {
                let mut rest = code;
                let pick: Vec<usize> = per_member
                    .iter()
                    .map(|o| {
                        let k = rest % o.len();
                        rest /= o.len();
                        k
                    })
                    .collect();
                let covered_twice = c.edges.iter().all(|&e| {
                    let mut k = usize::from(pairing.contains(&e));
                    for x in 0..4 {
                        k += usize::from(per_member[x][pick[x]].contains(&e));
                    }
                    k == 2
                });
                if covered_twice {
                    chosen = Some((pairing.clone(), pick));
                    break 'search;
                }
            }
        }
        let Some((pairing, pick)) = chosen else {
            return Err(Error::NoCycleAssignment { cycle: ci });
        };
        for e in pairing {
            m_prime.insert(e);
        }
        for x in 0..4 {
            for &e in &per_member[x][pick[x]] {
                mx[x].insert(e);
            }
        }
    }
    let pm =
        |s: EdgeSet| PerfectMatching::new(g, s).map_err(|e| Error::Invariant(format!("constructed matching: {e}")));
    let mut matchings = vec![fam.m.clone()];
    for s in mx {
        matchings.push(pm(s)?);
    }
    matchings.push(pm(m_prime)?);
    debug_assert_eq!(matchings.iter().map(|m| m.universe()).max(), Some(ecount));
    let f = FulkersonCovering::new(matchings)?;
    if !verify_covering(g, &f)?.is_valid() {
        return Err(Error::Invariant(
            "F-family construction does not cover every edge twice".into(),
        ));
    }
    if !is_proper(&f) {
        return Err(Error::Invariant("F-family construction repeated a matching".into()));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::matchcolor::enumerate_perfect_matchings;

    fn ten_vertex_family() -> (CubicGraph, FFamily) {
        let (g, names) = generators::ten_vertex_c5_example_named();
        let edge = |a: &str, b: &str| {
            let (u, v) = (names.id(a, None).unwrap(), names.id(b, None).unwrap());
            g.edges()
                .find(|&(_, x, y)| (x, y) == (u, v) || (x, y) == (v, u))
                .map(|(e, _, _)| e)
                .unwrap()
        };
        let m = PerfectMatching::from_ids(
            &g,
            [
                edge("a", "2"),
                edge("b", "4"),
                edge("c", "3"),
                edge("d", "5"),
                edge("e", "1"),
            ],
        )
        .unwrap();
        let members = [("a", "2"), ("b", "4"), ("c", "3"), ("d", "5")]
            .map(|(x, y)| Matching::from_ids(&g, [edge(x, y)]).unwrap());
        let fam = family_with_derived_n(&g, m, members).unwrap().unwrap();
        (g, fam)
    }

    #[test]
    fn ten_vertex_family_verifies() {
        let (g, fam) = ten_vertex_family();
        let r = verify_ffamily(&g, &fam).unwrap();
        assert!(r.is_valid(), "{:?}", r.violations);
        // N pairs a-b, c-d on the letter cycle and 2-3, 4-5 on the digit cycle
        let (_, names) = generators::ten_vertex_c5_example_named();
        let mut pairs: Vec<(String, String)> = fam
            .n()
            .iter()
            .map(|e| {
                let (u, v) = g.endpoints(e);
                let (mut a, mut b) = (names.label(u).role.clone(), names.label(v).role.clone());
                if a > b {
                    std::mem::swap(&mut a, &mut b);
                }
                (a, b)
            })
            .collect();
        pairs.sort();
        let want: Vec<(String, String)> = [("2", "3"), ("4", "5"), ("a", "b"), ("c", "d")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        assert_eq!(pairs, want);
        let f = covering_from_ffamily(&g, &fam).unwrap();
        assert!(is_proper(&f));
    }

    #[test]
    fn empty_members_are_malformed() {
        let p = generators::petersen();
        let m = enumerate_perfect_matchings(&p, None).matchings[0].clone();
        let e = Matching::empty(&p);
        let members = [e.clone(), e.clone(), e.clone(), e.clone()];
        assert!(matches!(
            FFamily::new(&p, m, members, e),
            Err(Error::MalformedFamily(_))
        ));
    }

    #[test]
    fn petersen_spokes_missing_a_member() {
        let p = generators::petersen();
        let m = PerfectMatching::from_ids(&p, 10..15).unwrap();
        // three members leave each 5-cycle with three ends
        let members = [
            Matching::from_ids(&p, [10]).unwrap(),
            Matching::from_ids(&p, [11]).unwrap(),
            Matching::from_ids(&p, [12]).unwrap(),
            Matching::from_ids(&p, [12]).unwrap(),
        ];
        assert!(FFamily::new(&p, m.clone(), members, Matching::empty(&p)).is_err());
        let members = [10, 11, 12, 13].map(|e| Matching::from_ids(&p, [e]).unwrap());
        let fam = FFamily::new(&p, m, members, Matching::empty(&p)).unwrap();
        let r = verify_ffamily(&p, &fam).unwrap();
        // N is empty, so both 5-cycles fail the pairing condition
        assert_eq!(r.violations.len(), 2);
        assert!(r.violations.iter().all(|v| v.condition == Condition::Pairing));
        assert!(matches!(covering_from_ffamily(&p, &fam), Err(Error::FamilyInvalid(_))));
    }

    #[test]
    fn restrictions_pair_inner_vertices() {
        let c = Cycle {
            vertices: (0..6).collect(),
            edges: (10..16).collect(),
        };
        assert_eq!(restrictions(&c, &[]), vec![vec![10, 12, 14], vec![11, 13, 15]]);
        // ends at 0 and 3: inner vertices 1,2 and 4,5
        assert_eq!(restrictions(&c, &[0, 3]), vec![vec![11, 14]]);
        let c5 = Cycle {
            vertices: (0..5).collect(),
            edges: (0..5).collect(),
        };
        assert_eq!(restrictions(&c5, &[2]), vec![vec![3, 0]]);
    }
}
