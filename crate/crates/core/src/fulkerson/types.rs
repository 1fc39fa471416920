use crate::edgeset::{EdgeSet, Matching};
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::matchcolor::PerfectMatching;

/// Three perfect matchings with empty common intersection.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FRTriple {
    matchings: [PerfectMatching; 3],
}

impl FRTriple {
    pub fn new(m1: PerfectMatching, m2: PerfectMatching, m3: PerfectMatching) -> Result<Self> {
        let common = m1.intersection(&m2)?.intersection(&m3)?;
        if let Some(e) = common.iter().next() {
            return Err(Error::NonEmptyIntersection([0, 1, 2], e));
        }
        Ok(FRTriple {
            matchings: [m1, m2, m3],
        })
    }

    pub fn matchings(&self) -> &[PerfectMatching; 3] {
        &self.matchings
    }

    pub fn universe(&self) -> usize {
        self.matchings[0].universe()
    }
}

/// Edges covered 0, 1 and 2 times by an FR-triple.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TPartition {
    pub t0: EdgeSet,
    pub t1: EdgeSet,
    pub t2: EdgeSet,
}

fn check_members<'a>(g: &MultiGraph, ms: impl IntoIterator<Item = &'a PerfectMatching>) -> Result<()> {
    for m in ms {
        PerfectMatching::new(g, m.edges().clone())?;
    }
    Ok(())
}

/// Coverage counts of `ms` on every edge.
pub(crate) fn coverage<'a>(universe: usize, ms: impl IntoIterator<Item = &'a PerfectMatching>) -> Vec<usize> {
    let mut cover = vec![0; universe];
    for m in ms {
        for e in m.iter() {
            cover[e] += 1;
        }
    }
    cover
}

/// The T0/T1/T2 partition of an FR-triple. T0 and T2 are always disjoint
/// matchings; a violation is reported as an invariant failure.
pub fn t_partition(g: &MultiGraph, t: &FRTriple) -> Result<TPartition> {
    check_members(g, t.matchings.iter())?;
    let cover = coverage(g.edge_count(), t.matchings.iter());
    let class = |k: usize| {
        EdgeSet::from_ids(
            g.edge_count(),
            cover.iter().enumerate().filter(|(_, &c)| c == k).map(|(e, _)| e),
        )
        .expect("ids in range")
    };
    let p = TPartition {
        t0: class(0),
        t1: class(1),
        t2: class(2),
    };
    if cover.iter().any(|&c| c > 2) {
        return Err(Error::Invariant("an FR-triple covers an edge three times".into()));
    }
    for (name, s) in [("T0", &p.t0), ("T2", &p.t2)] {
        if Matching::new(g, s.clone()).is_err() {
            return Err(Error::Invariant(format!("{name} is not a matching")));
        }
    }
    if !p.t0.is_disjoint(&p.t2) {
        return Err(Error::Invariant("T0 and T2 intersect".into()));
    }
    Ok(p)
}

/// Six perfect matchings, in order, meant to cover every edge twice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FulkersonCovering {
    matchings: Vec<PerfectMatching>,
}

impl FulkersonCovering {
    pub fn new(matchings: Vec<PerfectMatching>) -> Result<Self> {
        if matchings.len() != 6 {
            return Err(Error::InvalidParameter(format!(
                "a covering has 6 matchings, got {}",
                matchings.len()
            )));
        }
        let u = matchings[0].universe();
        if let Some(m) = matchings.iter().find(|m| m.universe() != u) {
            return Err(Error::HostMismatch {
                expected: u,
                found: m.universe(),
            });
        }
        Ok(FulkersonCovering { matchings })
    }

    pub fn matchings(&self) -> &[PerfectMatching] {
        &self.matchings
    }

    /// The first three and the last three matchings as triples.
    pub fn split(&self) -> Result<(FRTriple, FRTriple)> {
        let m = &self.matchings;
        Ok((
            FRTriple::new(m[0].clone(), m[1].clone(), m[2].clone())?,
            FRTriple::new(m[3].clone(), m[4].clone(), m[5].clone())?,
        ))
    }

    /// The same multiset with the matchings sorted.
    pub fn sorted(&self) -> FulkersonCovering {
        let mut matchings = self.matchings.clone();
        matchings.sort();
        FulkersonCovering { matchings }
    }
}

/// Per-edge coverage of a candidate covering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageReport {
    pub coverage: Vec<usize>,
}

impl CoverageReport {
    pub fn is_valid(&self) -> bool {
        self.coverage.iter().all(|&c| c == 2)
    }

    /// `(edge, coverage)` for every edge not covered exactly twice.
    pub fn violations(&self) -> Vec<(usize, usize)> {
        self.coverage
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 2)
            .map(|(e, &c)| (e, c))
            .collect()
    }
}

/// Coverage report of `f` on `g`; every member must be a perfect matching of `g`.
pub fn verify_covering(g: &MultiGraph, f: &FulkersonCovering) -> Result<CoverageReport> {
    check_members(g, f.matchings.iter())?;
    Ok(CoverageReport {
        coverage: coverage(g.edge_count(), f.matchings.iter()),
    })
}

/// Whether `T0 = T'2` and `T2 = T'0`.
pub fn are_compatible(g: &MultiGraph, t: &FRTriple, u: &FRTriple) -> Result<bool> {
    if t.universe() != u.universe() {
        return Err(Error::HostMismatch {
            expected: t.universe(),
            found: u.universe(),
        });
    }
    let (p, q) = (t_partition(g, t)?, t_partition(g, u)?);
    Ok(p.t0 == q.t2 && p.t2 == q.t0)
}

/// The six matchings of two compatible triples.
pub fn covering_from_compatible(g: &MultiGraph, t: &FRTriple, u: &FRTriple) -> Result<FulkersonCovering> {
    if !are_compatible(g, t, u)? {
        return Err(Error::Incompatible);
    }
    let f = FulkersonCovering::new(t.matchings.iter().chain(u.matchings.iter()).cloned().collect())?;
    if !verify_covering(g, &f)?.is_valid() {
        return Err(Error::Invariant(
            "compatible triples did not cover every edge twice".into(),
        ));
    }
    Ok(f)
}

/// Whether the six matchings are pairwise distinct.
pub fn is_proper(f: &FulkersonCovering) -> bool {
    let m = &f.matchings;
    (0..m.len()).all(|i| (i + 1..m.len()).all(|j| m[i] != m[j]))
}
