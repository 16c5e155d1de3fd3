use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Vertex;

/// Sorted set of vertex indices drawn from `0..universe`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    universe: usize,
    members: Vec<Vertex>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        Self {
            universe,
            members: Vec::new(),
        }
    }

    pub fn full(universe: usize) -> Self {
        Self {
            universe,
            members: (0..universe).collect(),
        }
    }

    pub fn singleton(universe: usize, v: Vertex) -> Result<Self> {
        Self::from_members(universe, [v])
    }

    /// Collects members, sorting and dropping duplicates.
    pub fn from_members<I: IntoIterator<Item = Vertex>>(universe: usize, members: I) -> Result<Self> {
        let mut members: Vec<Vertex> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&v| v >= universe) {
            return Err(Error::VertexOutOfRange {
                index: bad,
                order: universe,
            });
        }
        members.sort_unstable();
        members.dedup();
        Ok(Self { universe, members })
    }

    pub(crate) fn from_sorted_unchecked(universe: usize, members: Vec<Vertex>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.last().is_none_or(|&v| v < universe));
        Self { universe, members }
    }

    pub(crate) fn from_mask(mask: &[bool]) -> Self {
        Self {
            universe: mask.len(),
            members: mask
                .iter()
                .enumerate()
                .filter_map(|(v, &on)| on.then_some(v))
                .collect(),
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = Vertex> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.members
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&v| other.contains(v))
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.universe
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut members: Vec<Vertex> = self.iter().chain(other.iter()).collect();
        members.sort_unstable();
        members.dedup();
        Self {
            universe: self.universe.max(other.universe),
            members,
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        Self {
            universe: self.universe,
            members: self.iter().filter(|&v| !other.contains(v)).collect(),
        }
    }

    pub fn with(&self, v: Vertex) -> Result<VertexSet> {
        Self::from_members(self.universe, self.iter().chain([v]))
    }

    pub fn without(&self, v: Vertex) -> VertexSet {
        Self {
            universe: self.universe,
            members: self.iter().filter(|&w| w != v).collect(),
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = core::iter::Copied<core::slice::Iter<'a, Vertex>>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn members_are_sorted_and_unique() {
        let s = VertexSet::from_members(6, [4, 1, 4, 0]).unwrap();
        assert_eq!(s.as_slice(), &[0, 1, 4]);
        assert!(s.contains(4));
        assert!(!s.contains(2));
    }

    #[test]
    fn out_of_range_rejected() {
        assert_eq!(
            VertexSet::from_members(3, [1, 3]),
            Err(Error::VertexOutOfRange { index: 3, order: 3 })
        );
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_members(5, [0, 2]).unwrap();
        let b = VertexSet::from_members(5, [2, 3, 0]).unwrap();
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(b.difference(&a).as_slice(), &[3]);
        assert_eq!(a.union(&VertexSet::singleton(5, 4).unwrap()).as_slice(), &[0, 2, 4]);
        assert_eq!(b.without(2).as_slice(), &[0, 3]);
        assert!(VertexSet::full(5).is_full());
    }
}
