use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph};

/// A set of edge ids of one host graph.
///
/// The host is identified by its edge count; two sets over different
/// universes never compare equal and refuse to combine.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    bits: FixedBitSet,
}

impl EdgeSet {
    pub fn empty(universe: usize) -> Self {
        EdgeSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        EdgeSet { bits }
    }

    pub fn from_ids(universe: usize, ids: impl IntoIterator<Item = EdgeId>) -> Result<Self> {
        let mut set = Self::empty(universe);
        for e in ids {
            if e >= universe {
                return Err(Error::UnknownEdge(e));
            }
            set.bits.insert(e);
        }
        Ok(set)
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    #[inline]
    pub fn contains(&self, e: EdgeId) -> bool {
        self.bits.contains(e)
    }

    pub fn insert(&mut self, e: EdgeId) {
        self.bits.insert(e);
    }

    pub fn remove(&mut self, e: EdgeId) {
        self.bits.set(e, false);
    }

    /// Edge ids in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<EdgeId> {
        self.iter().collect()
    }

    fn check_host(&self, other: &EdgeSet) -> Result<()> {
        if self.universe() != other.universe() {
            return Err(Error::HostMismatch {
                expected: self.universe(),
                found: other.universe(),
            });
        }
        Ok(())
    }

    pub fn union(&self, other: &EdgeSet) -> Result<EdgeSet> {
        self.check_host(other)?;
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Ok(EdgeSet { bits })
    }

    pub fn intersection(&self, other: &EdgeSet) -> Result<EdgeSet> {
        self.check_host(other)?;
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Ok(EdgeSet { bits })
    }

    pub fn difference(&self, other: &EdgeSet) -> Result<EdgeSet> {
        self.check_host(other)?;
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        Ok(EdgeSet { bits })
    }

    pub fn complement(&self) -> EdgeSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        EdgeSet { bits }
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        self.universe() == other.universe() && self.bits.is_disjoint(&other.bits)
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.universe() == other.universe() && self.bits.is_subset(&other.bits)
    }

    /// First edge present in both sets.
    pub fn first_common(&self, other: &EdgeSet) -> Option<EdgeId> {
        self.bits.intersection(&other.bits).next()
    }
}

impl Ord for EdgeSet {
    /// Lexicographic on the sorted id lists, then by universe.
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then(self.universe().cmp(&other.universe()))
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An edge set in which no two edges share a vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching(EdgeSet);

impl Matching {
    pub fn new(g: &MultiGraph, set: EdgeSet) -> Result<Self> {
        if set.universe() != g.edge_count() {
            return Err(Error::HostMismatch {
                expected: g.edge_count(),
                found: set.universe(),
            });
        }
        let mut owner: Vec<Option<EdgeId>> = vec![None; g.vertex_count()];
        for e in set.iter() {
            let (u, v) = g.endpoints(e);
            if u == v {
                return Err(Error::Loop(e));
            }
            for x in [u, v] {
                if let Some(f) = owner[x] {
                    return Err(Error::NotAMatching(f, e));
                }
                owner[x] = Some(e);
            }
        }
        Ok(Matching(set))
    }

    pub fn from_ids(g: &MultiGraph, ids: impl IntoIterator<Item = EdgeId>) -> Result<Self> {
        Self::new(g, EdgeSet::from_ids(g.edge_count(), ids)?)
    }

    pub fn empty(g: &MultiGraph) -> Self {
        Matching(EdgeSet::empty(g.edge_count()))
    }

    pub(crate) fn new_unchecked(set: EdgeSet) -> Self {
        Matching(set)
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.0
    }

    pub fn into_edges(self) -> EdgeSet {
        self.0
    }
}

impl Deref for Matching {
    type Target = EdgeSet;

    fn deref(&self) -> &EdgeSet {
        &self.0
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matching{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_out_of_range_ids() {
        assert_eq!(EdgeSet::from_ids(4, [1, 4]), Err(Error::UnknownEdge(4)));
    }

    #[test]
    fn host_mismatch_is_an_error() {
        let a = EdgeSet::empty(3);
        let b = EdgeSet::empty(4);
        assert!(a.union(&b).is_err());
        assert!(!a.is_disjoint(&b));
    }

    #[test]
    fn ordering_is_lexicographic_on_ids() {
        let a = EdgeSet::from_ids(10, [0, 9]).unwrap();
        let b = EdgeSet::from_ids(10, [1, 2]).unwrap();
        let c = EdgeSet::from_ids(10, [0]).unwrap();
        assert!(a < b);
        assert!(c < a);
    }

    proptest! {
        #[test]
        fn set_algebra_agrees_with_btreeset(
            xs in proptest::collection::btree_set(0usize..70, 0..30),
            ys in proptest::collection::btree_set(0usize..70, 0..30),
        ) {
            let a = EdgeSet::from_ids(70, xs.iter().copied()).unwrap();
            let b = EdgeSet::from_ids(70, ys.iter().copied()).unwrap();
            prop_assert_eq!(a.to_vec(), xs.iter().copied().collect::<Vec<_>>());
            prop_assert_eq!(a.union(&b).unwrap().to_vec(), xs.union(&ys).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.intersection(&b).unwrap().to_vec(), xs.intersection(&ys).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.difference(&b).unwrap().to_vec(), xs.difference(&ys).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.is_disjoint(&b), xs.is_disjoint(&ys));
            prop_assert_eq!(a.cmp(&b), xs.iter().cmp(ys.iter()));
        }
    }
}
