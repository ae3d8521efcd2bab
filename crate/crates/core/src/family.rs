//! Set families over a fixed universe.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::subset::SubsetWord;

/// A finite family of distinct subsets of `[n]`, kept in canonical colex
/// order so that equal families compare and render identically regardless of
/// construction order.
#[derive(Clone, PartialEq, Eq)]
pub struct SetFamily {
    universe: u32,
    members: Vec<SubsetWord>,
}

impl SetFamily {
    /// Builds a family from arbitrary member order. Rejects duplicates and
    /// members living in a different universe.
    pub fn new(universe: u32, members: Vec<SubsetWord>) -> Result<SetFamily> {
        if universe > crate::subset::MAX_UNIVERSE {
            return Err(Error::UniverseOutOfRange(universe));
        }
        let mut seen = HashSet::with_capacity(members.len());
        for w in &members {
            if w.universe() != universe {
                return Err(Error::UniverseMismatch(w.universe(), universe));
            }
            if !seen.insert(w.mask()) {
                return Err(Error::DuplicateWord(*w));
            }
        }
        let mut members = members;
        members.sort_unstable();
        Ok(SetFamily { universe, members })
    }

    pub fn empty(universe: u32) -> Result<SetFamily> {
        SetFamily::new(universe, Vec::new())
    }

    /// The full level `{S ⊆ [n] : |S| = k}` as a family.
    pub fn level(universe: u32, k: u32) -> Result<SetFamily> {
        let members = crate::subset::enumerate_level(universe, k)?;
        Ok(SetFamily { universe, members })
    }

    #[inline]
    pub fn universe(&self) -> u32 {
        self.universe
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in canonical colex order.
    #[inline]
    pub fn members(&self) -> &[SubsetWord] {
        &self.members
    }

    pub fn contains(&self, word: &SubsetWord) -> bool {
        word.universe() == self.universe
            && self
                .members
                .binary_search_by(|m| m.mask().cmp(&word.mask()))
                .is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SubsetWord> {
        self.members.iter()
    }

    /// Union of two families over the same universe; rejects overlap since a
    /// family has no multiplicity.
    pub fn disjoint_union(&self, other: &SetFamily) -> Result<SetFamily> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch(other.universe, self.universe));
        }
        let mut members = Vec::with_capacity(self.len() + other.len());
        members.extend_from_slice(&self.members);
        members.extend_from_slice(&other.members);
        SetFamily::new(self.universe, members)
    }

    /// Distinct member weights, ascending.
    pub fn weights(&self) -> Vec<u32> {
        let mut ws: Vec<u32> = self.members.iter().map(|w| w.weight()).collect();
        ws.sort_unstable();
        ws.dedup();
        ws
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetFamily(n={}, {} members)", self.universe, self.members.len())
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a SubsetWord;
    type IntoIter = std::slice::Iter<'a, SubsetWord>;
    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}
